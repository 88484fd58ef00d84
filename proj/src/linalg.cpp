#include "reeslab/linalg.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "reeslab/errors.hpp"

namespace reeslab {

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 pow_mod(u64 base, u64 e, u64 p) {
  u64 r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

u64 reduce_mod(const mpz_class& v, u64 p) {
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

u64 reduce_mod(const mpq_class& v, u64 p) {
  u64 num = reduce_mod(v.get_num(), p);
  u64 den = reduce_mod(v.get_den(), p);
  if (den == 0) throw InputError("coefficient denominator vanishes modulo " + std::to_string(p));
  return mul_mod(num, inv_mod(den, p), p);
}

// Each row scaled by the lcm of its denominators.
DenseMatrix<mpz_class> integer_rows(const RationalMatrix& m) {
  DenseMatrix<mpz_class> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

// Drops all-zero rows and columns; rank is unchanged.
template <class T, class IsZero>
DenseMatrix<T> prune(const DenseMatrix<T>& m, IsZero is_zero) {
  std::vector<std::size_t> rows, cols;
  std::vector<bool> col_used(m.cols(), false);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool any = false;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) any = col_used[c] = true;
    if (any) rows.push_back(r);
  }
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (col_used[c]) cols.push_back(c);
  if (rows.size() == m.rows() && cols.size() == m.cols()) return m;
  DenseMatrix<T> out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

template <class T>
void swap_rows(DenseMatrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

template <class T>
void swap_cols(DenseMatrix<T>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Fraction-free elimination with full pivoting on the cheapest nonzero entry.
// `cost` returns nullopt for zero entries.
template <class T, class Cost, class Update>
std::size_t fraction_free_rank(DenseMatrix<T>& a, const T& one, Cost cost, Update update) {
  const std::size_t rows = a.rows(), cols = a.cols();
  T prev = one;
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    std::optional<std::size_t> best;
    std::size_t pr = 0, pc = 0;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (auto c = cost(a(i, j)); c && (!best || *c < *best)) {
          best = c;
          pr = i;
          pc = j;
        }
    if (!best) break;
    swap_rows(a, r, pr);
    swap_cols(a, r, pc);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = r + 1; j < cols; ++j) a(i, j) = update(a(r, r), a(i, j), a(i, r), a(r, j), prev);
      a(i, r) = T{};
    }
    prev = a(r, r);
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (p > kLargePrime) throw InputError("characteristic must be below 2^31");
  return FieldSpec{p};
}

// ---------------------------------------------------------------------------

LinearForm::LinearForm(std::vector<mpq_class> coefficients)
    : nvars_(coefficients.size()), coeffs_(std::move(coefficients)) {
  if (nvars_ == 0) throw InputError("linear form needs at least one variable");
}

LinearForm LinearForm::generic(std::size_t nvars) {
  LinearForm y;
  y.nvars_ = nvars;
  y.generic_ = true;
  return y;
}

LinearForm LinearForm::sum_of_variables(std::size_t nvars) { return LinearForm(std::vector<mpq_class>(nvars, 1)); }

LinearForm LinearForm::variable(std::size_t nvars, std::size_t index) {
  std::vector<mpq_class> c(nvars, 0);
  c.at(index) = 1;
  return LinearForm(std::move(c));
}

bool LinearForm::is_zero() const {
  return !generic_ && std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

std::string LinearForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    std::string coeff;
    if (generic_) {
      coeff = "c" + std::to_string(i + 1) + "*";
    } else {
      if (coeffs_[i] == 0) continue;
      mpq_class a = abs(coeffs_[i]);
      if (!out.empty()) out += coeffs_[i] < 0 ? " - " : " + ";
      else if (coeffs_[i] < 0) out += "-";
      if (a != 1) coeff = a.get_str() + "*";
    }
    if (generic_ && i) out += " + ";
    out += coeff + "x" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

ExactMatrix mult_map_on_levels(std::span<const Monomial> source, std::span<const Monomial> target,
                               const LinearForm& y, const FieldSpec& field) {
  if (y.is_zero()) throw InputError("multiplication by the zero linear form");
  const std::size_t n = y.nvars();
  std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
  row_of.reserve(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (target[i].nvars() != n) throw InputError("linear form and monomials disagree on variable count");
    row_of.emplace(target[i], i);
  }
  auto for_each_product = [&](auto&& emit) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      if (source[j].nvars() != n) throw InputError("linear form and monomials disagree on variable count");
      for (std::size_t v = 0; v < n; ++v) {
        auto it = row_of.find(source[j].times_variable(v));
        if (it != row_of.end()) emit(it->second, j, v);
      }
    }
  };

  if (y.is_generic()) {
    ParametricMatrix m{DenseMatrix<Polynomial>(target.size(), source.size(), Polynomial(n)), n, field};
    for_each_product([&](std::size_t r, std::size_t c, std::size_t v) {
      m.values(r, c) += Polynomial::parameter(n, v);
    });
    return m;
  }
  if (field.characteristic == 0) {
    RationalMatrix m(target.size(), source.size(), mpq_class(0));
    for_each_product([&](std::size_t r, std::size_t c, std::size_t v) { m(r, c) += y.coefficients()[v]; });
    return m;
  }
  const u64 p = field.characteristic;
  ModularMatrix m{DenseMatrix<u64>(target.size(), source.size(), 0), p};
  std::vector<u64> coeff(n);
  for (std::size_t v = 0; v < n; ++v) coeff[v] = reduce_mod(y.coefficients()[v], p);
  for_each_product([&](std::size_t r, std::size_t c, std::size_t v) {
    m.values(r, c) = (m.values(r, c) + coeff[v]) % p;
  });
  return m;
}

ExactMatrix mult_map_matrix(const QuotientBasis& basis, const LinearForm& y, unsigned k, const FieldSpec& field) {
  if (y.nvars() != basis.nvars()) throw InputError("linear form has wrong number of variables");
  if (k < 1 || k > basis.top_degree())
    throw InputError("degree " + std::to_string(k) + " outside 1.." + std::to_string(basis.top_degree()));
  return mult_map_on_levels(basis.level(k - 1), basis.level(k), y, field);
}

ExactMatrix mult_map_matrix(const MonomialIdeal& ideal, const LinearForm& y, unsigned k, const FieldSpec& field) {
  return mult_map_matrix(QuotientBasis(ideal), y, k, field);
}

// ---------------------------------------------------------------------------

std::size_t rank_mod_prime(DenseMatrix<u64> a, u64 p) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) % p == 0) ++piv;
    if (piv == rows) continue;
    swap_rows(a, r, piv);
    u64 inv = inv_mod(a(r, c) % p, p);
    for (std::size_t j = c; j < cols; ++j) a(r, j) = mul_mod(a(r, j) % p, inv, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      u64 f = a(i, c) % p;
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j) a(i, j) = (a(i, j) + p - mul_mod(f, a(r, j), p)) % p;
    }
    ++r;
  }
  return r;
}

std::size_t bareiss_rank(DenseMatrix<mpz_class> m) {
  m = prune(m, [](const mpz_class& v) { return v == 0; });
  return fraction_free_rank(
      m, mpz_class(1),
      [](const mpz_class& v) -> std::optional<std::size_t> {
        if (v == 0) return std::nullopt;
        return mpz_sizeinbase(v.get_mpz_t(), 2);
      },
      [](const mpz_class& piv, const mpz_class& x, const mpz_class& left, const mpz_class& up,
         const mpz_class& prev) {
        mpz_class t = piv * x - left * up;
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        return t;
      });
}

std::size_t rank(const RationalMatrix& m) {
  auto ints = prune(integer_rows(m), [](const mpz_class& v) { return v == 0; });
  const std::size_t full = std::min(ints.rows(), ints.cols());
  // rank mod p never exceeds the rank over Q, so a full modular rank is exact.
  DenseMatrix<u64> red(ints.rows(), ints.cols());
  for (std::size_t r = 0; r < ints.rows(); ++r)
    for (std::size_t c = 0; c < ints.cols(); ++c) red(r, c) = reduce_mod(ints(r, c), kLargePrime);
  if (rank_mod_prime(std::move(red), kLargePrime) == full) return full;
  return bareiss_rank(std::move(ints));
}

std::size_t rank(const ModularMatrix& m) { return rank_mod_prime(m.values, m.prime); }

std::size_t rank(const ExactMatrix& m) {
  if (const auto* q = std::get_if<RationalMatrix>(&m)) return rank(*q);
  if (const auto* f = std::get_if<ModularMatrix>(&m)) return rank(*f);
  throw InputError("rank: parametric matrix; use parametric_rank");
}

std::vector<std::vector<mpq_class>> kernel_basis(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    swap_rows(a, r, piv);
    mpq_class inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      mpq_class f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<u64>> kernel_basis(const ModularMatrix& m) {
  DenseMatrix<u64> a = m.values;
  const u64 p = m.prime;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) % p == 0) ++piv;
    if (piv == rows) continue;
    swap_rows(a, r, piv);
    u64 inv = inv_mod(a(r, c) % p, p);
    for (std::size_t j = c; j < cols; ++j) a(r, j) = mul_mod(a(r, j) % p, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      u64 f = a(i, c) % p;
      if (i == r || !f) continue;
      for (std::size_t j = c; j < cols; ++j) a(i, j) = (a(i, j) % p + p - mul_mod(f, a(r, j), p)) % p;
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = (p - a(i, f) % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------

namespace {

// Coefficient matrix A with M = D_r A D_q^{-1}, when the exponents of the
// single-term entries factor as row potential minus column potential.
std::optional<DenseMatrix<mpz_class>> monomial_scaling(const ParametricMatrix& m) {
  const auto& v = m.values;
  const std::size_t rows = v.rows(), cols = v.cols(), n = m.nparams;
  using Potential = std::vector<long long>;
  std::vector<std::optional<Potential>> row_pot(rows), col_pot(cols);
  DenseMatrix<mpz_class> coeffs(rows, cols, mpz_class(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& e = v(r, c);
      if (e.is_zero()) continue;
      if (e.term_count() != 1) return std::nullopt;
      coeffs(r, c) = e.terms().front().coeff;
    }
  auto exps = [&](std::size_t r, std::size_t c) {
    Potential u(n);
    const auto& t = v(r, c).terms().front().exps;
    for (std::size_t i = 0; i < n; ++i) u[i] = t[i];
    return u;
  };
  // Breadth-first propagation of potentials over the bipartite support graph.
  std::vector<std::pair<bool, std::size_t>> queue;
  for (std::size_t start = 0; start < rows; ++start) {
    if (row_pot[start]) continue;
    row_pot[start] = Potential(n, 0);
    queue.assign(1, {true, start});
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [is_row, idx] = queue[head];
      if (is_row) {
        for (std::size_t c = 0; c < cols; ++c) {
          if (v(idx, c).is_zero()) continue;
          Potential q = *row_pot[idx], u = exps(idx, c);
          for (std::size_t i = 0; i < n; ++i) q[i] -= u[i];
          if (!col_pot[c]) {
            col_pot[c] = q;
            queue.push_back({false, c});
          } else if (*col_pot[c] != q) {
            return std::nullopt;
          }
        }
      } else {
        for (std::size_t r = 0; r < rows; ++r) {
          if (v(r, idx).is_zero()) continue;
          Potential p = *col_pot[idx], u = exps(r, idx);
          for (std::size_t i = 0; i < n; ++i) p[i] += u[i];
          if (!row_pot[r]) {
            row_pot[r] = p;
            queue.push_back({true, r});
          } else if (*row_pot[r] != p) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return coeffs;
}

std::size_t polynomial_fraction_free_rank(const ParametricMatrix& m) {
  auto a = prune(m.values, [](const Polynomial& p) { return p.is_zero(); });
  return fraction_free_rank(
      a, Polynomial::constant(m.nparams, 1),
      [](const Polynomial& p) -> std::optional<std::size_t> {
        if (p.is_zero()) return std::nullopt;
        return p.term_count() * 64 + p.bit_size();
      },
      [](const Polynomial& piv, const Polynomial& x, const Polynomial& left, const Polynomial& up,
         const Polynomial& prev) { return (piv * x - left * up).exact_divide(prev); });
}

}  // namespace

ParametricRank parametric_rank(const ParametricMatrix& m, const ParametricRankOptions& options) {
  ParametricRank out;
  out.seed = options.seed;
  const u64 p = m.field.characteristic == 0 ? kLargePrime : m.field.characteristic;

  std::optional<DenseMatrix<mpz_class>> scaled;
  if (options.route == ParametricRankOptions::Route::Auto) scaled = monomial_scaling(m);
  if (scaled) {
    out.method = "monomial-scaling";
    if (m.field.characteristic == 0) {
      RationalMatrix q(scaled->rows(), scaled->cols());
      for (std::size_t r = 0; r < q.rows(); ++r)
        for (std::size_t c = 0; c < q.cols(); ++c) q(r, c) = (*scaled)(r, c);
      out.rank = rank(q);
    } else {
      DenseMatrix<u64> red(scaled->rows(), scaled->cols());
      for (std::size_t r = 0; r < red.rows(); ++r)
        for (std::size_t c = 0; c < red.cols(); ++c) red(r, c) = reduce_mod((*scaled)(r, c), p);
      out.rank = rank_mod_prime(std::move(red), p);
    }
  } else if (m.field.characteristic == 0) {
    out.method = "fraction-free";
    out.rank = polynomial_fraction_free_rank(m);
  } else {
    out.method = "sampled";
    out.exact = false;
  }

  // Random specializations: each is a lower bound for the generic rank.
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<u64> dist(0, p - 1);
  const std::size_t full = std::min(m.values.rows(), m.values.cols());
  std::vector<u64> point(m.nparams);
  for (std::size_t s = 0; s < options.max_samples; ++s) {
    for (auto& x : point) x = dist(rng);
    DenseMatrix<u64> spec(m.values.rows(), m.values.cols());
    for (std::size_t r = 0; r < spec.rows(); ++r)
      for (std::size_t c = 0; c < spec.cols(); ++c) spec(r, c) = m.values(r, c).evaluate_mod(point, p);
    out.specialization_max = std::max(out.specialization_max, rank_mod_prime(std::move(spec), p));
    out.samples = s + 1;
    if (out.specialization_max == full) break;
    if (out.exact && out.specialization_max >= out.rank) break;
  }
  if (!out.exact) out.rank = out.specialization_max;
  if (out.specialization_max > out.rank)
    throw std::logic_error("parametric rank below a specialized rank: elimination is unsound");
  out.specialization_agrees = out.specialization_max == out.rank;
  return out;
}

ParametricRank generic_mult_rank(std::span<const Monomial> source, std::span<const Monomial> target,
                                 std::size_t nvars, const FieldSpec& field, const ParametricRankOptions& options) {
  auto m = mult_map_on_levels(source, target, LinearForm::generic(nvars), field);
  return parametric_rank(std::get<ParametricMatrix>(m), options);
}

std::size_t colon_dim_by_linear_form(const MonomialIdeal& ideal, const LinearForm& y, unsigned k,
                                     const FieldSpec& field) {
  if (y.is_generic()) throw InputError("colon_dim_by_linear_form needs a numeric linear form");
  if (y.is_zero()) throw InputError("colon by the zero linear form");
  if (y.nvars() != ideal.nvars()) throw InputError("linear form has wrong number of variables");
  if (!is_artinian(ideal)) throw NotArtinianError("ideal " + ideal.to_string() + " is not Artinian");
  auto source = monomials_of_degree(ideal.nvars(), k);
  auto target = standard_monomials(ideal, k + 1);
  auto m = mult_map_on_levels(source, target, y, field);
  return source.size() - rank(m);
}

std::vector<Polynomial> lift_kernel_vector(std::span<const Monomial> source, std::span<const mpz_class> v) {
  if (source.size() != v.size()) throw InputError("kernel vector length mismatch");
  std::vector<Polynomial> w;
  w.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto e = source[i].exponents();
    w.push_back(Polynomial::monomial(source[i].nvars(), std::vector<std::uint32_t>(e.begin(), e.end()), v[i]));
  }
  return w;
}

bool verify_polynomial_kernel_vector(const ParametricMatrix& m, std::span<const Polynomial> w) {
  if (w.size() != m.values.cols()) return false;
  auto vanishes = [&](const Polynomial& f) {
    if (m.field.characteristic == 0) return f.is_zero();
    const mpz_class q = static_cast<unsigned long>(m.field.characteristic);
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const Polynomial::Term& t) { return t.coeff % q == 0; });
  };
  if (std::all_of(w.begin(), w.end(), vanishes)) return false;
  for (std::size_t r = 0; r < m.values.rows(); ++r) {
    Polynomial acc(m.nparams);
    for (std::size_t c = 0; c < m.values.cols(); ++c)
      if (!m.values(r, c).is_zero() && !w[c].is_zero()) acc += m.values(r, c) * w[c];
    if (!vanishes(acc)) return false;
  }
  return true;
}

std::vector<mpz_class> primitive_integer_vector(std::span<const mpq_class> v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    out.push_back(x.get_num() * (l / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace reeslab
