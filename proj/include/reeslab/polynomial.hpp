#pragma once

// Sparse multivariate polynomials over the integers in parameters c1..cn.
// Terms are kept sorted in descending lex order of their exponent vectors,
// so the leading term is always terms().front().

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace reeslab {

class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  struct Term {
    Exponents exps;
    mpz_class coeff;
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t nparams) : nparams_(nparams) {}
  static Polynomial constant(std::size_t nparams, const mpz_class& value);
  /// c_{index+1}
  static Polynomial parameter(std::size_t nparams, std::size_t index);
  static Polynomial monomial(std::size_t nparams, Exponents exps, const mpz_class& coeff);

  std::size_t nparams() const { return nparams_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  unsigned total_degree() const;
  /// Sum of coefficient bit lengths; a cost measure for pivot selection.
  std::size_t bit_size() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }

  /// Exact quotient; throws std::domain_error if `divisor` does not divide.
  Polynomial exact_divide(const Polynomial& divisor) const;

  /// Value at `point` modulo `prime` (point entries already reduced).
  std::uint64_t evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t prime) const;
  /// Value at a rational point.
  mpq_class evaluate(std::span<const mpq_class> point) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  static bool lex_greater(const Exponents& a, const Exponents& b);

  std::size_t nparams_ = 0;
  std::vector<Term> terms_;
};

}  // namespace reeslab
