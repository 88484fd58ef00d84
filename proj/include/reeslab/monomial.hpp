#pragma once

// Monomials, monomial ideals and their Artinian quotients.
//
// Variables are x1..xn; internally they are indexed from 0. Monomials compare
// lexicographically with x1 > x2 > ... > xn, and every enumeration in this
// library lists monomials in descending lex order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace reeslab {

using Exponent = std::uint32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(std::size_t nvars);
  /// x_{index+1}^power
  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  unsigned degree() const;
  bool is_one() const;
  /// Number of variables with a nonzero exponent.
  std::size_t support_size() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial times_variable(std::size_t index) const;
  /// this / gcd(this, m): exponents subtracted and clamped at zero.
  Monomial colon(const Monomial& m) const;
  /// Same exponents with `extra` trailing zero exponents appended.
  Monomial extended(std::size_t extra) const;

  /// `x1^3x2^2`, or `1` for the unit monomial.
  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// A monomial ideal stored by its minimal generating set.
class MonomialIdeal {
 public:
  /// The zero ideal.
  explicit MonomialIdeal(std::size_t nvars);
  /// Minimalizes `gens`; throws InputError on exponent-length mismatch.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  std::size_t nvars() const { return nvars_; }
  /// Minimal generators, sorted descending in lex order.
  const std::vector<Monomial>& generators() const { return gens_; }
  /// Number of minimal generators.
  std::size_t mu() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;
  /// Pure-power exponent of variable `index` among the generators, if any.
  std::optional<Exponent> pure_power(std::size_t index) const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t nvars);
bool membership(const MonomialIdeal& ideal, const Monomial& m);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// The p-th power of the graded maximal ideal (p = 0 gives the unit ideal).
MonomialIdeal m_power(unsigned p, std::size_t nvars);
MonomialIdeal cap_with_m_power(const MonomialIdeal& ideal, unsigned p);
/// m * I
MonomialIdeal multiply_by_m(const MonomialIdeal& ideal);
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// All monomials of degree k in n variables, descending lex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned k);
/// Standard monomials M_k(S/I), descending lex. No Artinian requirement.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, unsigned k);

bool is_artinian(const MonomialIdeal& ideal);
/// Least D with m^D contained in I.
unsigned socle_cap_degree(const MonomialIdeal& ideal);
/// (H(0), ..., H(D-1)) where D = socle_cap_degree.
std::vector<std::size_t> hilbert_function(const MonomialIdeal& ideal);

/// dim_K S_k = C(n - 1 + k, k).
std::size_t monomial_count(std::size_t nvars, unsigned k);

/// Per-degree standard monomial bases of an Artinian quotient.
class QuotientBasis {
 public:
  explicit QuotientBasis(MonomialIdeal ideal);

  const MonomialIdeal& ideal() const { return ideal_; }
  std::size_t nvars() const { return ideal_.nvars(); }
  /// Least D with M_D empty.
  unsigned top_degree() const { return static_cast<unsigned>(levels_.size()); }
  /// M_k; empty for k >= top_degree.
  std::span<const Monomial> level(unsigned k) const;
  std::size_t dim(unsigned k) const { return level(k).size(); }
  std::vector<std::size_t> hilbert() const;
  std::size_t total_dim() const;
  std::size_t max_dim() const;
  /// Position of m inside M_{deg m}, or nullopt when m lies in the ideal.
  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  MonomialIdeal ideal_;
  std::vector<std::vector<Monomial>> levels_;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
};

// Families of ideals.

/// Parameters of a monomial almost complete intersection
/// (x1^a, x2^b, x3^c, x1^alpha x2^beta x3^gamma).
struct AciParams {
  Exponent a, b, c, alpha, beta, gamma;
  bool operator==(const AciParams&) const = default;
};

MonomialIdeal aci_ideal(const AciParams& params);
/// s = (a+b+c+alpha+beta+gamma)/3 - 2, exact.
mpq_class aci_s_value(const AciParams& params);
/// Recognizes a 3-variable ideal of almost complete intersection shape.
std::optional<AciParams> detect_aci(const MonomialIdeal& ideal);
/// Throws InputError unless alpha < a, beta < b, gamma < c and at least two of
/// alpha, beta, gamma are nonzero.
void validate_aci(const AciParams& params);

/// (x1^N, x2^N, x1^{N-2} x2^{N-2}) + (x3^{N-1}, ..., xn^{N-1}); N >= 5, n >= 4 even.
MonomialIdeal thm31_ideal(unsigned big_n, std::size_t nvars);
/// d = (n/2)(N-2)
unsigned thm31_d(unsigned big_n, std::size_t nvars);

/// J*T + (x1 y, ..., xn y, y^2) in T = K[x1..xn, y].
MonomialIdeal cone_extension(const MonomialIdeal& ideal);

}  // namespace reeslab
