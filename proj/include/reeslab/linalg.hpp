#pragma once

// Exact matrices over Q, prime fields and Z[c1..cn]; ranks, kernels, and
// the generic (parametric) rank of multiplication maps on monomial quotients.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "reeslab/monomial.hpp"
#include "reeslab/polynomial.hpp"

namespace reeslab {

/// 2^31 - 1; used for modular prefilters and random specialization.
inline constexpr std::uint64_t kLargePrime = 2147483647ull;
inline constexpr std::uint64_t kDefaultSeed = 2012;

bool is_prime(std::uint64_t n);

struct FieldSpec {
  /// 0 or a prime.
  std::uint64_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws InputError unless p is prime.
  static FieldSpec prime_field(std::uint64_t p);
  bool operator==(const FieldSpec&) const = default;
};

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  DenseMatrix transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<mpq_class>;

struct ModularMatrix {
  DenseMatrix<std::uint64_t> values;
  std::uint64_t prime;
};

struct ParametricMatrix {
  DenseMatrix<Polynomial> values;
  std::size_t nparams;
  FieldSpec field;
};

using ExactMatrix = std::variant<RationalMatrix, ModularMatrix, ParametricMatrix>;

/// A linear form sum a_i x_i with exact coefficients, or the generic form
/// c1 x1 + ... + cn xn with indeterminate coefficients.
class LinearForm {
 public:
  explicit LinearForm(std::vector<mpq_class> coefficients);
  static LinearForm generic(std::size_t nvars);
  static LinearForm sum_of_variables(std::size_t nvars);
  static LinearForm variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_generic() const { return generic_; }
  bool is_zero() const;
  std::span<const mpq_class> coefficients() const { return coeffs_; }
  std::string to_string() const;

 private:
  LinearForm() = default;
  std::size_t nvars_ = 0;
  bool generic_ = false;
  std::vector<mpq_class> coeffs_;
};

/// Matrix of f -> y*f from span(source) into span(target), where every source
/// monomial has degree one less than the target ones. Products that are not in
/// `target` (i.e. lie in the ideal) contribute nothing. Rows index target,
/// columns index source.
ExactMatrix mult_map_on_levels(std::span<const Monomial> source, std::span<const Monomial> target,
                               const LinearForm& y, const FieldSpec& field);

/// Multiplication by y from M_{k-1}(S/I) to M_k(S/I); 1 <= k <= top degree.
ExactMatrix mult_map_matrix(const QuotientBasis& basis, const LinearForm& y, unsigned k, const FieldSpec& field);
ExactMatrix mult_map_matrix(const MonomialIdeal& ideal, const LinearForm& y, unsigned k, const FieldSpec& field);

std::size_t rank(const RationalMatrix& m);
std::size_t rank(const ModularMatrix& m);
/// Throws InputError for parametric input; use parametric_rank.
std::size_t rank(const ExactMatrix& m);

/// Rank of an integer matrix by fraction-free elimination; no modular prefilter.
std::size_t bareiss_rank(DenseMatrix<mpz_class> m);
std::size_t rank_mod_prime(DenseMatrix<std::uint64_t> m, std::uint64_t prime);

std::vector<std::vector<mpq_class>> kernel_basis(const RationalMatrix& m);
std::vector<std::vector<std::uint64_t>> kernel_basis(const ModularMatrix& m);

struct ParametricRankOptions {
  enum class Route { Auto, FractionFree };
  Route route = Route::Auto;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_samples = 50;
};

struct ParametricRank {
  std::size_t rank = 0;
  /// "monomial-scaling", "fraction-free", or "sampled" (char p fallback).
  std::string method;
  /// False only for the sampled fallback.
  bool exact = true;
  /// Largest rank seen over random specializations modulo a prime > 2^30.
  std::size_t specialization_max = 0;
  std::size_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  bool specialization_agrees = true;
};

/// Rank over the field of rational functions in the parameters.
///
/// When every nonzero entry is a single term a*c^u and the exponents factor as
/// u_ij = r_i - q_j, the matrix is D_r * A * D_q^{-1} with D diagonal and
/// invertible over K(c), so its rank is that of the coefficient matrix A
/// (multiplication maps of monomial quotients always have this shape).
/// Otherwise fraction-free elimination over Z[c] is used. Either way the result
/// is cross-checked against random specializations.
ParametricRank parametric_rank(const ParametricMatrix& m, const ParametricRankOptions& options = {});

/// Rank of f -> y*f from the degree-(k-1) to the degree-k piece of S/I for the
/// generic linear form (exact; see parametric_rank).
ParametricRank generic_mult_rank(std::span<const Monomial> source, std::span<const Monomial> target,
                                 std::size_t nvars, const FieldSpec& field,
                                 const ParametricRankOptions& options = {});

/// dim (L : y)_k = dim S_k - rank(S_k -> (S/L)_{k+1}, f -> y f).
std::size_t colon_dim_by_linear_form(const MonomialIdeal& ideal, const LinearForm& y, unsigned k,
                                     const FieldSpec& field);

/// Given v in the kernel of the sum-of-variables map on `source`, returns the
/// vector w(c) with w_m = c^m v_m, which lies in the kernel of the generic map.
std::vector<Polynomial> lift_kernel_vector(std::span<const Monomial> source, std::span<const mpz_class> v);
/// Checks M(c) * w(c) == 0 and w != 0 identically in Z[c], or in F_p[c] when
/// the matrix lives over a prime field.
bool verify_polynomial_kernel_vector(const ParametricMatrix& m, std::span<const Polynomial> w);

/// Integer vector spanning the same line as a rational vector (denominators cleared).
std::vector<mpz_class> primitive_integer_vector(std::span<const mpq_class> v);

}  // namespace reeslab
