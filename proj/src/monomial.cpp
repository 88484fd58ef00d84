#include "reeslab/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "reeslab/errors.hpp"

namespace reeslab {

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

Monomial Monomial::one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw InputError("variable index out of range");
  std::vector<Exponent> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

unsigned Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e != 0; }));
}

bool Monomial::divides(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw InputError("monomials over different variable counts");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw InputError("monomials over different variable counts");
  std::vector<Exponent> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::times_variable(std::size_t index) const {
  std::vector<Exponent> e(exps_);
  ++e.at(index);
  return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& m) const {
  if (m.exps_.size() != exps_.size()) throw InputError("monomials over different variable counts");
  std::vector<Exponent> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = e[i] > m.exps_[i] ? e[i] - m.exps_[i] : 0;
  return Monomial(std::move(e));
}

Monomial Monomial::extended(std::size_t extra) const {
  std::vector<Exponent> e(exps_);
  e.resize(e.size() + extra, 0);
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    out += 'x';
    out += std::to_string(i + 1);
    if (exps_[i] != 1) {
      out += '^';
      out += std::to_string(exps_[i]);
    }
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Exponent e : m.exponents()) h = (h ^ e) * 0x100000001b3ull + (h >> 29);
  return h;
}

// ---------------------------------------------------------------------------

MonomialIdeal::MonomialIdeal(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw InputError("ideal needs at least one variable");
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  if (nvars == 0) throw InputError("ideal needs at least one variable");
  for (const auto& g : gens)
    if (g.nvars() != nvars)
      throw InputError("generator " + g.to_string() + " has " + std::to_string(g.nvars()) +
                       " exponents, expected " + std::to_string(nvars));
  std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) {
    auto dx = x.degree(), dy = y.degree();
    return dx != dy ? dx < dy : x > y;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(), std::greater<>());
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.nvars() != nvars_) throw InputError("monomial has wrong number of variables");
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::optional<Exponent> MonomialIdeal::pure_power(std::size_t index) const {
  for (const auto& g : gens_)
    if (g.support_size() == 1 && g[index] > 0) return g[index];
  if (is_unit()) return Exponent{0};
  return std::nullopt;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "n=" + std::to_string(nvars_) + "; gens=";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ',';
    out += gens_[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------

MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t nvars) {
  return MonomialIdeal(nvars, std::move(gens));
}

bool membership(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw InputError("ideal_sum: variable counts differ");
  std::vector<Monomial> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

MonomialIdeal m_power(unsigned p, std::size_t nvars) {
  return MonomialIdeal(nvars, monomials_of_degree(nvars, p));
}

MonomialIdeal cap_with_m_power(const MonomialIdeal& ideal, unsigned p) {
  return ideal_sum(ideal, m_power(p, ideal.nvars()));
}

MonomialIdeal multiply_by_m(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.mu() * ideal.nvars());
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < ideal.nvars(); ++i) gens.push_back(g.times_variable(i));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.nvars() != ideal.nvars()) throw InputError("colon: monomial has wrong number of variables");
  std::vector<Monomial> gens;
  gens.reserve(ideal.mu());
  for (const auto& g : ideal.generators()) gens.push_back(g.colon(m));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

namespace {

// Degree-k exponent vectors with e_i <= bound[i], descending lex.
void enumerate_bounded(std::vector<Exponent>& cur, std::size_t pos, unsigned remaining,
                       const std::vector<unsigned>& bound, const std::vector<unsigned>& tail_capacity,
                       const std::function<void(const std::vector<Exponent>&)>& emit) {
  const std::size_t n = cur.size();
  if (pos + 1 == n) {
    if (remaining <= bound[pos]) {
      cur[pos] = remaining;
      emit(cur);
    }
    return;
  }
  unsigned hi = std::min(remaining, bound[pos]);
  unsigned rest_cap = tail_capacity[pos + 1];
  for (unsigned e = hi + 1; e-- > 0;) {
    if (remaining - e > rest_cap) break;
    cur[pos] = e;
    enumerate_bounded(cur, pos + 1, remaining - e, bound, tail_capacity, emit);
  }
}

std::vector<Monomial> bounded_monomials(std::size_t nvars, unsigned k, const std::vector<unsigned>& bound,
                                        const MonomialIdeal* exclude) {
  std::vector<unsigned> tail(nvars + 1, 0);
  for (std::size_t i = nvars; i-- > 0;) {
    unsigned long long s = static_cast<unsigned long long>(tail[i + 1]) + bound[i];
    tail[i] = static_cast<unsigned>(std::min<unsigned long long>(s, 0xffffffffu));
  }
  std::vector<Monomial> out;
  if (tail[0] < k) return out;
  std::vector<Exponent> cur(nvars, 0);
  enumerate_bounded(cur, 0, k, bound, tail, [&](const std::vector<Exponent>& e) {
    Monomial m(e);
    if (!exclude || !exclude->contains(m)) out.push_back(std::move(m));
  });
  return out;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned k) {
  if (nvars == 0) throw InputError("need at least one variable");
  return bounded_monomials(nvars, k, std::vector<unsigned>(nvars, k), nullptr);
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, unsigned k) {
  std::vector<unsigned> bound(ideal.nvars(), k);
  for (std::size_t i = 0; i < ideal.nvars(); ++i)
    if (auto p = ideal.pure_power(i)) bound[i] = *p == 0 ? 0 : std::min<unsigned>(k, *p - 1);
  if (ideal.is_unit()) return {};
  return bounded_monomials(ideal.nvars(), k, bound, &ideal);
}

bool is_artinian(const MonomialIdeal& ideal) {
  for (std::size_t i = 0; i < ideal.nvars(); ++i)
    if (!ideal.pure_power(i)) return false;
  return true;
}

unsigned socle_cap_degree(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal)) throw NotArtinianError("ideal " + ideal.to_string() + " is not Artinian");
  unsigned k = 0;
  while (!standard_monomials(ideal, k).empty()) ++k;
  return k;
}

std::vector<std::size_t> hilbert_function(const MonomialIdeal& ideal) {
  return QuotientBasis(ideal).hilbert();
}

std::size_t monomial_count(std::size_t nvars, unsigned k) {
  // C(n-1+k, k), computed incrementally so intermediate values stay exact.
  mpz_class c = 1;
  for (std::size_t i = 1; i < nvars; ++i) c = c * (k + i) / i;
  return c.get_ui();
}

// ---------------------------------------------------------------------------

QuotientBasis::QuotientBasis(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
  if (!is_artinian(ideal_)) throw NotArtinianError("ideal " + ideal_.to_string() + " is not Artinian");
  for (unsigned k = 0;; ++k) {
    auto level = standard_monomials(ideal_, k);
    if (level.empty()) break;
    std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
    idx.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) idx.emplace(level[i], i);
    levels_.push_back(std::move(level));
    index_.push_back(std::move(idx));
  }
}

std::span<const Monomial> QuotientBasis::level(unsigned k) const {
  if (k >= levels_.size()) return {};
  return levels_[k];
}

std::vector<std::size_t> QuotientBasis::hilbert() const {
  std::vector<std::size_t> h;
  h.reserve(levels_.size());
  for (const auto& l : levels_) h.push_back(l.size());
  return h;
}

std::size_t QuotientBasis::total_dim() const {
  std::size_t t = 0;
  for (const auto& l : levels_) t += l.size();
  return t;
}

std::size_t QuotientBasis::max_dim() const {
  std::size_t m = 0;
  for (const auto& l : levels_) m = std::max(m, l.size());
  return m;
}

std::optional<std::size_t> QuotientBasis::index_of(const Monomial& m) const {
  unsigned d = m.degree();
  if (d >= index_.size()) return std::nullopt;
  auto it = index_[d].find(m);
  if (it == index_[d].end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

void validate_aci(const AciParams& p) {
  if (!(p.alpha < p.a && p.beta < p.b && p.gamma < p.c))
    throw InputError("aci: need alpha < a, beta < b, gamma < c");
  int nonzero = (p.alpha != 0) + (p.beta != 0) + (p.gamma != 0);
  if (nonzero < 2) throw InputError("aci: at least two of alpha, beta, gamma must be nonzero");
}

MonomialIdeal aci_ideal(const AciParams& p) {
  validate_aci(p);
  return MonomialIdeal(3, {Monomial({p.a, 0, 0}), Monomial({0, p.b, 0}), Monomial({0, 0, p.c}),
                           Monomial({p.alpha, p.beta, p.gamma})});
}

mpq_class aci_s_value(const AciParams& p) {
  validate_aci(p);
  mpq_class s(static_cast<unsigned long>(p.a) + p.b + p.c + p.alpha + p.beta + p.gamma, 3u);
  s.canonicalize();
  return s - 2;
}

std::optional<AciParams> detect_aci(const MonomialIdeal& ideal) {
  if (ideal.nvars() != 3 || ideal.mu() != 4) return std::nullopt;
  auto a = ideal.pure_power(0), b = ideal.pure_power(1), c = ideal.pure_power(2);
  if (!a || !b || !c || *a == 0) return std::nullopt;
  for (const auto& g : ideal.generators()) {
    if (g.support_size() < 2) continue;
    AciParams p{*a, *b, *c, g[0], g[1], g[2]};
    try {
      validate_aci(p);
    } catch (const InputError&) {
      return std::nullopt;
    }
    return p;
  }
  return std::nullopt;
}

MonomialIdeal thm31_ideal(unsigned big_n, std::size_t nvars) {
  if (big_n < 5) throw InputError("thm31: need N >= 5");
  if (nvars < 4 || nvars % 2 != 0) throw InputError("thm31: need n >= 4 even");
  std::vector<Monomial> gens;
  gens.push_back(Monomial::variable(nvars, 0, big_n));
  gens.push_back(Monomial::variable(nvars, 1, big_n));
  gens.push_back(Monomial::variable(nvars, 0, big_n - 2) * Monomial::variable(nvars, 1, big_n - 2));
  for (std::size_t i = 2; i < nvars; ++i) gens.push_back(Monomial::variable(nvars, i, big_n - 1));
  return MonomialIdeal(nvars, std::move(gens));
}

unsigned thm31_d(unsigned big_n, std::size_t nvars) {
  if (big_n < 5) throw InputError("thm31: need N >= 5");
  if (nvars < 4 || nvars % 2 != 0) throw InputError("thm31: need n >= 4 even");
  return static_cast<unsigned>(nvars / 2) * (big_n - 2);
}

MonomialIdeal cone_extension(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.extended(1));
  const Monomial y = Monomial::variable(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::variable(n + 1, i) * y);
  gens.push_back(y * y);
  return MonomialIdeal(n + 1, std::move(gens));
}

}  // namespace reeslab
