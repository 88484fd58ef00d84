#include "reeslab/certify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "reeslab/errors.hpp"

namespace reeslab {

std::string to_string(WlpVerdict v) { return v == WlpVerdict::Wlp ? "WLP" : "FAILS"; }

std::string to_string(MFullVerdict v) {
  switch (v) {
    case MFullVerdict::MFull: return "M_FULL";
    case MFullVerdict::NotMFull: return "NOT_M_FULL";
    case MFullVerdict::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

std::string to_string(ReesVerdict v) {
  switch (v) {
    case ReesVerdict::Rees: return "REES";
    case ReesVerdict::StrongRees: return "STRONG_REES";
    case ReesVerdict::NoCertificate: return "NO_CERTIFICATE";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

namespace {

// poset_from_algebra numbers elements level by level in basis order.
std::vector<Monomial> element_monomials(const QuotientBasis& basis) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k < basis.top_degree(); ++k)
    for (const auto& m : basis.level(k)) out.push_back(m);
  return out;
}

std::size_t at_or_zero(const std::vector<std::size_t>& h, std::size_t k) { return k < h.size() ? h[k] : 0; }

std::size_t max_of(const std::vector<std::size_t>& h) {
  return h.empty() ? 0 : *std::max_element(h.begin(), h.end());
}

std::optional<unsigned> integral_s(const mpq_class& s) {
  if (s.get_den() != 1 || s < 0) return std::nullopt;
  return static_cast<unsigned>(s.get_num().get_ui());
}

std::size_t rank_of_sum_map(std::span<const Monomial> src, std::span<const Monomial> dst, std::size_t n) {
  return rank(mult_map_on_levels(src, dst, LinearForm::sum_of_variables(n), FieldSpec::rationals()));
}

}  // namespace

// ---------------------------------------------------------------------------

WlpReport wlp_check(const MonomialIdeal& ideal, const FieldSpec& field, const ParametricRankOptions& options) {
  QuotientBasis basis(ideal);
  const std::size_t n = ideal.nvars();
  WlpReport r;
  r.ideal = ideal;
  r.field = field;
  r.hilbert = basis.hilbert();
  for (unsigned k = 1; k < basis.top_degree(); ++k) {
    auto pr = generic_mult_rank(basis.level(k - 1), basis.level(k), n, field, options);
    WlpDegree d;
    d.k = k;
    d.dim_source = basis.dim(k - 1);
    d.dim_target = basis.dim(k);
    d.generic_rank = pr.rank;
    d.injective = pr.rank == d.dim_source;
    d.surjective = pr.rank == d.dim_target;
    d.method = pr.method;
    d.exact = pr.exact;
    r.exact = r.exact && pr.exact;
    if (!d.injective && !d.surjective) r.failure_degrees.push_back(k);
    r.degrees.push_back(std::move(d));
  }
  r.verdict = r.failure_degrees.empty() ? WlpVerdict::Wlp : WlpVerdict::Fails;

  if (auto params = detect_aci(ideal)) {
    AciDiagnostics a;
    a.params = *params;
    a.s = aci_s_value(*params);
    auto s = integral_s(a.s);
    a.s_integral = a.s.get_den() == 1;
    if (s) {
      const std::size_t hs = at_or_zero(r.hilbert, *s), hs1 = at_or_zero(r.hilbert, *s + 1);
      a.plateau_at_max = hs == hs1 && hs == max_of(r.hilbert);
      auto poset = poset_from_algebra(ideal);
      if (*s + 1 <= poset.top_rank()) a.full_matching_at_s1 = full_matching_at(poset, *s + 1).full;
    }
    r.aci = a;
  }
  return r;
}

ClaimProfile claim_profile(const MonomialIdeal& ideal) {
  return claim_profile(ideal, wlp_check(ideal, FieldSpec::rationals()));
}

ClaimProfile claim_profile(const MonomialIdeal& ideal, const WlpReport& wlp) {
  auto params = detect_aci(ideal);
  if (!params) throw InputError("claim_profile needs a 3-variable almost complete intersection, got " + ideal.to_string());
  if (wlp.field.characteristic != 0) throw InputError("claim_profile runs in characteristic 0");
  if (!(wlp.ideal == ideal)) throw InputError("claim_profile: WLP report belongs to a different ideal");
  if (wlp.verdict == WlpVerdict::Wlp) throw HypothesisError("claim_profile: " + ideal.to_string() + " has the WLP");
  auto s = integral_s(aci_s_value(*params));
  if (!s) throw HypothesisError("claim_profile: s is not a nonnegative integer");

  QuotientBasis basis(ideal);
  ClaimProfile c;
  c.params = *params;
  c.s = *s;
  c.holds = true;
  for (unsigned k = 1; k < basis.top_degree(); ++k) {
    ClaimDegree d;
    d.k = k;
    d.dim_source = basis.dim(k - 1);
    d.dim_target = basis.dim(k);
    d.rank = rank_of_sum_map(basis.level(k - 1), basis.level(k), 3);
    if (k < *s + 1) {
      d.expected = "injective";
      d.ok = d.rank == d.dim_source;
    } else if (k > *s + 1) {
      d.expected = "surjective";
      d.ok = d.rank == d.dim_target;
    } else {
      d.expected = "none";
    }
    c.holds = c.holds && d.ok;
    c.degrees.push_back(d);
  }
  return c;
}

// ---------------------------------------------------------------------------

SpernerCertificate sperner_check(const MonomialIdeal& ideal) {
  QuotientBasis basis(ideal);
  auto poset = poset_from_algebra(ideal);
  auto elems = element_monomials(basis);
  SpernerCertificate c;
  c.hilbert = basis.hilbert();
  c.max_hilbert = max_of(c.hilbert);
  c.unimodal = is_unimodal(c.hilbert);
  c.all_matchings_full = true;
  for (std::size_t k = 1; k <= poset.top_rank(); ++k) {
    auto m = full_matching_at(poset, k);
    c.all_matchings_full = c.all_matchings_full && m.full;
    std::vector<std::pair<Monomial, Monomial>> pairs;
    for (auto [a, b] : m.pairs) pairs.emplace_back(elems[a], elems[b]);
    c.matchings.push_back(std::move(pairs));
  }
  auto ac = max_antichain(poset);
  c.max_antichain = ac.size;
  for (ElementId e : ac.witness) c.witness.push_back(elems[e]);
  std::sort(c.witness.begin(), c.witness.end(), std::greater<>());
  c.sperner = c.max_antichain == c.max_hilbert;
  const bool lem_route = c.unimodal && c.all_matchings_full;
  if (lem_route && !c.sperner)
    throw std::logic_error("unimodal with full matchings but the antichain bound exceeds max H");
  c.route = lem_route ? "MATCHING+UNIMODAL" : "DILWORTH";
  return c;
}

MuMaxResult mu_max_oracle(const MonomialIdeal& ideal) {
  QuotientBasis basis(ideal);
  auto poset = poset_from_algebra(ideal);
  if (poset.size() > kMaxBruteForceSize)
    throw SizeError("mu_max_oracle: |M(S/I)| = " + std::to_string(poset.size()) + " exceeds " +
                    std::to_string(kMaxBruteForceSize));
  auto elems = element_monomials(basis);
  unsigned long best = 0;
  int best_size = -1;
  for_each_antichain(poset, [&](unsigned long set) {
    int sz = __builtin_popcountl(set);
    if (sz > best_size) {
      best_size = sz;
      best = set;
    }
  });
  MuMaxResult r;
  r.max_mu = static_cast<std::size_t>(best_size);
  auto gens = ideal.generators();
  for (std::size_t e = 0; e < elems.size(); ++e)
    if (best >> e & 1ul) gens.push_back(elems[e]);
  r.witness = MonomialIdeal(ideal.nvars(), std::move(gens));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<unsigned> first_colon_mismatch_monomial(const MonomialIdeal& colon, const std::vector<std::size_t>& h) {
  for (unsigned k = 0; k < h.size(); ++k)
    if (standard_monomials(colon, k).size() != h[k]) return k;
  return std::nullopt;
}

std::optional<unsigned> first_colon_mismatch_linear(const MonomialIdeal& m_ideal, const LinearForm& y,
                                                    const std::vector<std::size_t>& h, const FieldSpec& field) {
  const std::size_t n = m_ideal.nvars();
  for (unsigned k = 0; k < h.size(); ++k)
    if (colon_dim_by_linear_form(m_ideal, y, k, field) != monomial_count(n, k) - h[k]) return k;
  return std::nullopt;
}

std::vector<LinearForm> random_forms(std::size_t n, const FieldSpec& field, std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<LinearForm> out;
  const long p = static_cast<long>(field.characteristic);
  while (out.size() < count) {
    std::vector<mpq_class> c(n);
    bool ok = true;
    for (auto& x : c) {
      int a = num(rng), b = den(rng);
      if (a == 0 || (p && (a % p == 0 || b % p == 0))) ok = false;
      x = mpq_class(a, b);
      x.canonicalize();
    }
    if (ok) out.emplace_back(std::move(c));
  }
  return out;
}

std::optional<NotMFullCertificate> negative_branch(const MonomialIdeal& ideal, const FieldSpec& field, std::string& note) {
  const unsigned p = socle_cap_degree(ideal);
  const std::size_t n = ideal.nvars();
  if (p == 0) {
    note = "unit ideal";
    return std::nullopt;
  }
  std::vector<Monomial> base;
  for (const auto& g : ideal.generators())
    if (g.degree() < p) base.push_back(g);
  MonomialIdeal base_ideal(n, base);
  auto above = standard_monomials(ideal, p - 1);
  // p is minimal with m^p inside the ideal, so m^{p-1} is not.
  if (above.empty()) throw std::logic_error("socle cap degree is not minimal");

  for (unsigned s = p; s-- > 0;) {
    bool gen_at = std::any_of(base.begin(), base.end(), [&](const Monomial& g) { return g.degree() == s + 1; });
    if (gen_at) continue;
    auto src = standard_monomials(base_ideal, s);
    auto dst = standard_monomials(base_ideal, s + 1);
    if (src.empty()) continue;
    auto pr = generic_mult_rank(src, dst, n, field);
    if (!pr.exact || pr.rank >= src.size()) continue;

    NotMFullCertificate c;
    c.p = p;
    c.s = s;
    c.base_generators = base;
    c.no_generators_in_degree_s1 = true;
    c.degree2_witness = above.front();
    c.dim_source = src.size();
    c.dim_target = dst.size();
    c.generic_rank = pr;
    auto sum = mult_map_on_levels(src, dst, LinearForm::sum_of_variables(n), field);
    if (field.characteristic == 0) {
      auto ker = kernel_basis(std::get<RationalMatrix>(sum));
      if (ker.empty()) throw std::logic_error("generic map deficient but the sum map is injective");
      c.kernel_vector = primitive_integer_vector(ker.front());
    } else {
      auto ker = kernel_basis(std::get<ModularMatrix>(sum));
      if (ker.empty()) throw std::logic_error("generic map deficient but the sum map is injective");
      for (auto x : ker.front()) c.kernel_vector.emplace_back(static_cast<unsigned long>(x));
    }
    // Keep only the support so the certificate stays small.
    std::vector<Monomial> support;
    std::vector<mpz_class> values;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (c.kernel_vector[i] == 0) continue;
      support.push_back(src[i]);
      values.push_back(c.kernel_vector[i]);
    }
    auto generic = std::get<ParametricMatrix>(mult_map_on_levels(src, dst, LinearForm::generic(n), field));
    c.kernel_verified = verify_polynomial_kernel_vector(generic, lift_kernel_vector(src, c.kernel_vector));
    if (!c.kernel_verified) throw std::logic_error("lifted kernel vector fails the symbolic check");
    c.kernel_support = std::move(support);
    c.kernel_vector = std::move(values);
    return c;
  }
  note = "no degree s < " + std::to_string(p) +
         " with a generator-free degree s+1 and a non-injective generic map on (S/I')_s";
  return std::nullopt;
}

}  // namespace

MFullReport m_full_check(const MonomialIdeal& ideal, const FieldSpec& field, std::uint64_t seed) {
  if (!is_artinian(ideal)) throw NotArtinianError("ideal " + ideal.to_string() + " is not Artinian");
  const std::size_t n = ideal.nvars();
  MFullReport r;
  r.ideal = ideal;
  r.field = field;
  auto h = QuotientBasis(ideal).hilbert();
  auto m_ideal = multiply_by_m(ideal);

  for (std::size_t i = 0; i < n && !r.witness; ++i) {
    ColonTrial t;
    t.kind = "variable";
    auto y = LinearForm::variable(n, i);
    t.y = y.to_string();
    t.first_bad_degree = first_colon_mismatch_monomial(colon_by_monomial(m_ideal, Monomial::variable(n, i)), h);
    t.equal = !t.first_bad_degree;
    if (t.equal) r.witness = y;
    r.trials.push_back(t);
  }
  if (!r.witness) {
    std::vector<std::pair<std::string, LinearForm>> forms{{"sum", LinearForm::sum_of_variables(n)}};
    for (auto& f : random_forms(n, field, seed, 5)) forms.emplace_back("random", std::move(f));
    for (auto& [kind, y] : forms) {
      ColonTrial t;
      t.kind = kind;
      t.y = y.to_string();
      t.first_bad_degree = first_colon_mismatch_linear(m_ideal, y, h, field);
      t.equal = !t.first_bad_degree;
      r.trials.push_back(t);
      if (t.equal) {
        r.witness = y;
        break;
      }
    }
  }

  r.certificate = negative_branch(ideal, field, r.note);
  if (r.witness && r.certificate)
    throw std::logic_error("m-fullness witness " + r.witness->to_string() + " contradicts the NOT_M_FULL certificate");
  if (r.witness) {
    r.verdict = MFullVerdict::MFull;
    r.note.clear();
  } else if (r.certificate) {
    r.verdict = MFullVerdict::NotMFull;
  } else {
    r.verdict = MFullVerdict::Undetermined;
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<LevelCheck> level_checks(const std::vector<NmpLevel>& levels) {
  std::vector<LevelCheck> out;
  for (const auto& l : levels) out.push_back({l.level, l.passes, l.flow, l.required});
  return out;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Splits the variables into classes joined by mixed generators; classes
// holding a single variable are merged into one divisor-lattice factor.
std::vector<FactorCheck> product_factors(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& g : ideal.generators()) {
    std::optional<std::size_t> first;
    for (std::size_t v = 0; v < n; ++v) {
      if (g[v] == 0) continue;
      if (first) parent[find(v)] = find(*first);
      else first = v;
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t v = 0; v < n; ++v) classes[find(v)].push_back(v);

  std::vector<FactorCheck> out;
  FactorCheck lattice;
  lattice.kind = "divisor-lattice";
  std::vector<Exponent> lattice_exps;
  for (const auto& [root, vars] : classes) {
    (void)root;
    if (vars.size() == 1) {
      Exponent e = *ideal.pure_power(vars[0]);
      if (e <= 1) continue;  // x^1 in the ideal: a one-point factor
      lattice.variables.push_back(vars[0]);
      lattice_exps.push_back(e - 1);
      continue;
    }
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators()) {
      auto e0 = std::find_if(g.exponents().begin(), g.exponents().end(), [](Exponent x) { return x > 0; });
      if (e0 == g.exponents().end()) continue;
      if (find(static_cast<std::size_t>(e0 - g.exponents().begin())) != find(vars[0])) continue;
      std::vector<Exponent> e;
      for (std::size_t v : vars) e.push_back(g[v]);
      gens.emplace_back(std::move(e));
    }
    MonomialIdeal sub(vars.size(), std::move(gens));
    auto poset = poset_from_algebra(sub);
    FactorCheck f;
    f.variables = vars;
    f.kind = "algebra";
    f.ideal = sub.to_string();
    f.level_sizes = poset.level_sizes();
    f.nmp = nmp_all(nmp_check(poset));
    f.log_concave = log_concave(poset);
    out.push_back(std::move(f));
  }
  if (!lattice_exps.empty()) {
    auto poset = divisor_lattice(lattice_exps);
    std::string desc;
    for (std::size_t i = 0; i < lattice_exps.size(); ++i)
      desc += (i ? "," : "") + std::to_string(lattice_exps[i]);
    lattice.ideal = "divisor_lattice(" + desc + ")";
    lattice.level_sizes = poset.level_sizes();
    lattice.nmp = nmp_all(nmp_check(poset));
    lattice.log_concave = log_concave(poset);
    out.push_back(std::move(lattice));
  }
  return out;
}

void check_artinian_and_degree(const QuotientBasis& basis, unsigned p, const char* what) {
  if (p >= basis.top_degree())
    throw HypothesisError(std::string(what) + ": p = " + std::to_string(p) + " lies beyond the top degree " +
                          std::to_string(basis.top_degree() - 1));
}

}  // namespace

ReesCertificate rees_certificate(const MonomialIdeal& ideal, unsigned p) {
  QuotientBasis basis(ideal);
  ReesCertificate c;
  c.base = ideal;
  c.p = p;
  c.hilbert = basis.hilbert();
  c.max_hilbert = max_of(c.hilbert);
  c.capped = cap_with_m_power(ideal, p);
  c.mu_capped = c.capped.mu();
  check_artinian_and_degree(basis, p, "rees_certificate");
  c.p_is_max = c.hilbert[p] == c.max_hilbert;
  if (!c.p_is_max)
    throw HypothesisError("rees_certificate: dim A_" + std::to_string(p) + " = " + std::to_string(c.hilbert[p]) +
                          " is not the maximum " + std::to_string(c.max_hilbert));
  c.sperner = sperner_check(ideal);
  c.route = "sperner:" + c.sperner->route;
  c.verdict = c.sperner->sperner ? ReesVerdict::Rees : ReesVerdict::NoCertificate;
  return c;
}

ReesCertificate strong_rees_certificate(const MonomialIdeal& ideal, unsigned p) {
  QuotientBasis basis(ideal);
  ReesCertificate c;
  c.base = ideal;
  c.p = p;
  c.hilbert = basis.hilbert();
  c.max_hilbert = max_of(c.hilbert);
  c.capped = cap_with_m_power(ideal, p);
  c.mu_capped = c.capped.mu();
  if (p == 0) throw HypothesisError("strong_rees_certificate: p must be positive");
  check_artinian_and_degree(basis, p, "strong_rees_certificate");
  c.p_is_max = c.hilbert[p] == c.max_hilbert;
  c.strictly_dominant = std::all_of(c.hilbert.begin(), c.hilbert.begin() + p,
                                    [&](std::size_t hk) { return hk < c.hilbert[p]; });
  if (!c.strictly_dominant)
    throw HypothesisError("strong_rees_certificate: dim A_" + std::to_string(p) + " = " +
                          std::to_string(c.hilbert[p]) + " is not larger than every earlier value");

  auto truncated = poset_from_algebra(cap_with_m_power(ideal, p + 1));
  c.lym_levels = level_checks(nmp_check(truncated));
  c.lym = std::all_of(c.lym_levels.begin(), c.lym_levels.end(), [](const LevelCheck& l) { return l.passes; });
  c.route = "direct-nmp";

  auto factors = product_factors(ideal);
  if (factors.size() >= 2) {
    c.factor_route_applied = true;
    std::vector<std::size_t> conv{1};
    bool ok = true;
    for (const auto& f : factors) {
      conv = convolve(conv, f.level_sizes);
      ok = ok && f.nmp && f.log_concave;
    }
    c.convolution_matches = conv == c.hilbert;
    c.factor_route_passes = ok && c.convolution_matches;
    c.factors = std::move(factors);
    if (c.factor_route_passes && !c.lym)
      throw std::logic_error("product of NMP log-concave factors failed the direct NMP check");
    c.route = c.factor_route_passes ? "factor-product+direct-nmp" : "direct-nmp";
  }
  c.verdict = c.lym ? ReesVerdict::StrongRees : ReesVerdict::NoCertificate;
  return c;
}

ReesOracleResult rees_brute_oracle(const MonomialIdeal& ideal) {
  QuotientBasis basis(ideal);
  auto poset = poset_from_algebra(ideal);
  if (poset.size() > kMaxBruteForceSize)
    throw SizeError("rees_brute_oracle: |M(S/I)| = " + std::to_string(poset.size()) + " exceeds " +
                    std::to_string(kMaxBruteForceSize));
  auto elems = element_monomials(basis);
  const auto& gens = ideal.generators();
  // divisors[g] = standard monomials dividing generator g
  std::vector<unsigned long> divisors(gens.size(), 0);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t e = 0; e < elems.size(); ++e)
      if (elems[e].divides(gens[g])) divisors[g] |= 1ul << e;

  ReesOracleResult r;
  r.mu = ideal.mu();
  r.max_mu = r.mu;
  std::optional<unsigned long> worst, strong_bad;
  for_each_antichain(poset, [&](unsigned long set) {
    if (set == 0) return;
    std::size_t mu = static_cast<std::size_t>(__builtin_popcountl(set));
    for (unsigned long d : divisors) mu += (d & set) == 0;
    if (mu > r.max_mu) {
      r.max_mu = mu;
      worst = set;
    }
    if (mu >= r.mu && !strong_bad) strong_bad = set;
  });
  auto build = [&](unsigned long set) {
    auto g = gens;
    for (std::size_t e = 0; e < elems.size(); ++e)
      if (set >> e & 1ul) g.push_back(elems[e]);
    return MonomialIdeal(ideal.nvars(), std::move(g));
  };
  r.rees = !worst;
  r.strong = !strong_bad;
  if (worst) r.violation = build(*worst);
  if (strong_bad) r.strong_violation = build(*strong_bad);
  return r;
}

// ---------------------------------------------------------------------------

Thm2Record thm2_verify(const AciParams& params, const FieldSpec& field, const ParametricRankOptions& options) {
  Thm2Record r;
  r.params = params;
  r.field = field;
  auto ideal = aci_ideal(params);
  r.wlp = wlp_check(ideal, field, options);
  if (r.wlp.verdict == WlpVerdict::Wlp) {
    r.reason = "WLP holds";
    return r;
  }
  auto s = integral_s(aci_s_value(params));
  if (!s) {
    r.reason = "s = " + aci_s_value(params).get_str() + " is not a nonnegative integer";
    return r;
  }
  r.s = *s;
  r.no_generators_in_degree_s1 = std::none_of(ideal.generators().begin(), ideal.generators().end(),
                                              [&](const Monomial& g) { return g.degree() == *s + 1; });
  if (!r.no_generators_in_degree_s1) {
    r.reason = "the ideal has a generator of degree s+1 = " + std::to_string(*s + 1);
    return r;
  }
  r.same_mu_at_s = cap_with_m_power(ideal, *s).mu() == cap_with_m_power(ideal, *s + 1).mu();
  try {
    r.rees = rees_certificate(ideal, *s + 1);
  } catch (const HypothesisError& e) {
    r.verdict = Verdict::Fail;
    r.reason = e.what();
    return r;
  }
  r.mfull = m_full_check(r.rees->capped, field, options.seed);
  const bool rees = r.rees->verdict == ReesVerdict::Rees;
  const bool not_full = r.mfull->verdict == MFullVerdict::NotMFull;
  r.verdict = rees && not_full ? Verdict::Pass : Verdict::Fail;
  if (!rees) r.reason = "no Rees certificate: S/I failed the Sperner check";
  else if (!not_full) r.reason = "m-fullness verdict " + to_string(r.mfull->verdict);
  return r;
}

Thm31Record thm31_verify(unsigned big_n, std::size_t nvars, const ParametricRankOptions& options) {
  if (big_n > kThm31MaxN || nvars > kThm31MaxVars)
    throw SizeError("thm31_verify: desk-scale bound is N <= " + std::to_string(kThm31MaxN) +
                    ", n <= " + std::to_string(kThm31MaxVars));
  auto ideal = thm31_ideal(big_n, nvars);
  Thm31Record r;
  r.big_n = big_n;
  r.nvars = nvars;
  r.d = thm31_d(big_n, nvars);
  QuotientBasis basis(ideal);
  r.hilbert = basis.hilbert();
  r.strictly_increasing = true;
  for (unsigned k = 0; k <= r.d; ++k)
    r.strictly_increasing = r.strictly_increasing && at_or_zero(r.hilbert, k) < at_or_zero(r.hilbert, k + 1);

  r.dim_d = basis.dim(r.d);
  r.dim_d1 = basis.dim(r.d + 1);
  r.rank_d = generic_mult_rank(basis.level(r.d), basis.level(r.d + 1), nvars, FieldSpec::rationals(), options);
  r.not_injective_at_d = r.rank_d.exact && r.rank_d.rank < r.dim_d;

  MonomialIdeal two(2, {Monomial({big_n, 0}), Monomial({0, big_n}), Monomial({big_n - 2, big_n - 2})});
  auto factor = poset_from_algebra(two);
  r.factor_levels = factor.level_sizes();
  const std::size_t top = 2 * (big_n - 2);
  if (factor.top_rank() == top) {
    for (ElementId e : factor.level(top - 1)) r.factor_top_lower.push_back(factor.label(e));
    for (ElementId e : factor.level(top)) r.factor_top_upper.push_back(factor.label(e));
    r.factor_top_nmp = nmp_check(factor).at(top - 1).passes;
  }

  r.strong = strong_rees_certificate(ideal, r.d + 1);
  r.mfull = m_full_check(r.strong->capped, FieldSpec::rationals(), options.seed);
  const bool strong = r.strong->verdict == ReesVerdict::StrongRees;
  const bool not_full = r.mfull->verdict == MFullVerdict::NotMFull;
  const bool ok = r.strictly_increasing && r.not_injective_at_d && strong && not_full && r.factor_top_nmp;
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (!r.strictly_increasing) r.reason = "Hilbert function not strictly increasing through degree d+1";
  else if (!r.not_injective_at_d) r.reason = "generic map A_d -> A_{d+1} is injective";
  else if (!strong) r.reason = "no strong Rees certificate";
  else if (!not_full) r.reason = "m-fullness verdict " + to_string(r.mfull->verdict);
  else if (!r.factor_top_nmp) r.reason = "two-variable factor fails NMP at its top step";
  return r;
}

}  // namespace reeslab
