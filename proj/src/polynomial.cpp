#include "reeslab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace reeslab {

bool Polynomial::lex_greater(const Exponents& a, const Exponents& b) { return a > b; }

Polynomial Polynomial::constant(std::size_t nparams, const mpz_class& value) {
  return monomial(nparams, Exponents(nparams, 0), value);
}

Polynomial Polynomial::parameter(std::size_t nparams, std::size_t index) {
  if (index >= nparams) throw std::out_of_range("parameter index out of range");
  Exponents e(nparams, 0);
  e[index] = 1;
  return monomial(nparams, std::move(e), 1);
}

Polynomial Polynomial::monomial(std::size_t nparams, Exponents exps, const mpz_class& coeff) {
  if (exps.size() != nparams) throw std::invalid_argument("exponent vector has wrong length");
  Polynomial p(nparams);
  if (coeff != 0) p.terms_.push_back({std::move(exps), coeff});
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (auto e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::size_t Polynomial::bit_size() const {
  std::size_t bits = 0;
  for (const auto& t : terms_) bits += mpz_sizeinbase(t.coeff.get_mpz_t(), 2);
  return bits;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out(std::max(nparams_, other.nparams_));
  out.terms_.reserve(terms_.size() + other.terms_.size());
  // Merge of two descending sequences.
  auto a = terms_.begin(), b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && lex_greater(a->exps, b->exps))) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || lex_greater(b->exps, a->exps)) {
      out.terms_.push_back(*b++);
    } else {
      mpz_class c = a->coeff + b->coeff;
      if (c != 0) out.terms_.push_back({a->exps, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out(std::max(nparams_, other.nparams_));
  if (is_zero() || other.is_zero()) return out;
  std::map<Exponents, mpz_class, std::greater<>> acc;
  for (const auto& x : terms_) {
    for (const auto& y : other.terms_) {
      Exponents e(x.exps);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += y.exps[i];
      acc[std::move(e)] += x.coeff * y.coeff;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.terms_.push_back({e, std::move(c)});
  return out;
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial quotient(std::max(nparams_, divisor.nparams_));
  Polynomial rem(*this);
  const Term& lead = divisor.terms_.front();
  while (!rem.is_zero()) {
    const Term& r = rem.terms_.front();
    Exponents e(r.exps);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < lead.exps[i]) throw std::domain_error("polynomial division is not exact");
      e[i] -= lead.exps[i];
    }
    if (!mpz_divisible_p(r.coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
      throw std::domain_error("polynomial division is not exact");
    mpz_class c = r.coeff / lead.coeff;
    Polynomial t = monomial(quotient.nparams_, std::move(e), c);
    quotient += t;
    rem -= t * divisor;
  }
  return quotient;
}

std::uint64_t Polynomial::evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t prime) const {
  std::uint64_t total = 0;
  mpz_class p(static_cast<unsigned long>(prime));
  for (const auto& t : terms_) {
    mpz_class c = t.coeff % p;
    if (c < 0) c += p;
    std::uint64_t v = c.get_ui();
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      for (std::uint32_t k = 0; k < t.exps[i]; ++k) v = static_cast<std::uint64_t>((unsigned __int128)v * point[i] % prime);
    total = (total + v) % prime;
  }
  return total;
}

mpq_class Polynomial::evaluate(std::span<const mpq_class> point) const {
  mpq_class total = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i)
      for (std::uint32_t k = 0; k < t.exps[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    bool unit_monomial = std::all_of(t.exps.begin(), t.exps.end(), [](auto e) { return e == 0; });
    mpz_class c = t.coeff;
    if (i) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    c = abs(c);
    if (c != 1 || unit_monomial) out += c.get_str();
    bool first = c == 1;
    for (std::size_t j = 0; j < t.exps.size(); ++j) {
      if (t.exps[j] == 0) continue;
      if (!first) out += '*';
      first = false;
      out += "c" + std::to_string(j + 1);
      if (t.exps[j] != 1) out += "^" + std::to_string(t.exps[j]);
    }
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != other.terms_[i].exps || terms_[i].coeff != other.terms_[i].coeff) return false;
  return true;
}

}  // namespace reeslab
