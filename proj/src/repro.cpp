#include "reeslab/repro.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <random>
#include <thread>

#include "reeslab/certify.hpp"
#include "reeslab/errors.hpp"

namespace reeslab {

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<unsigned> parse_args(const std::string& id, const std::string& text, std::size_t count) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size() && out.size() < count) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(pos, end - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6)
      throw InputError("repro item '" + id + "': bad argument '" + part + "'");
    out.push_back(static_cast<unsigned>(std::stoul(part)));
    pos = end + 1;
  }
  if (out.size() != count || pos <= text.size())
    throw InputError("repro item '" + id + "' needs " + std::to_string(count) + " comma-separated integers");
  return out;
}

RankedPoset random_poset(Rng& rng, std::size_t max_size, std::size_t max_levels, int edge_pct) {
  RankedPoset p;
  std::vector<ElementId> prev;
  std::size_t levels = uniform(rng, 1, max_levels), budget = max_size;
  for (std::size_t k = 0; k < levels && budget > 0; ++k) {
    std::size_t width = uniform(rng, 1, std::min<std::size_t>(budget, std::max<std::size_t>(1, max_size / 2)));
    budget -= width;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < width; ++i) labels.push_back("p" + std::to_string(k) + "_" + std::to_string(i));
    auto ids = p.add_level(std::move(labels));
    for (ElementId a : prev)
      for (ElementId b : ids)
        if (static_cast<int>(uniform(rng, 0, 99)) < edge_pct) p.add_edge(a, b);
    prev = ids;
  }
  return p;
}

RankedPoset random_algebra_poset(Rng& rng, std::size_t max_size) {
  for (;;) {
    std::size_t n = uniform(rng, 1, 3);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::variable(n, i, static_cast<Exponent>(uniform(rng, 1, 5))));
    std::size_t extra = uniform(rng, 0, 2);
    for (std::size_t j = 0; j < extra; ++j) {
      std::vector<Exponent> e(n);
      for (auto& x : e) x = static_cast<Exponent>(uniform(rng, 0, 3));
      if (std::any_of(e.begin(), e.end(), [](Exponent x) { return x > 0; })) gens.emplace_back(std::move(e));
    }
    MonomialIdeal ideal(n, std::move(gens));
    if (QuotientBasis(ideal).total_dim() <= max_size) return poset_from_algebra(ideal);
  }
}

std::size_t enumerated_width(const RankedPoset& p) {
  std::size_t best = 0;
  for_each_antichain(p, [&](unsigned long set) {
    best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountl(set)));
  });
  return best;
}

bool enumerated_nmp_pair(const std::vector<unsigned long>& up, std::size_t upper) {
  const std::size_t lower = up.size();
  for (unsigned long v = 1; v < (1ul << lower); ++v) {
    unsigned long shadow = 0;
    for (unsigned long s = v; s; s &= s - 1) shadow |= up[static_cast<std::size_t>(__builtin_ctzl(s))];
    auto nv = static_cast<std::size_t>(__builtin_popcountl(v));
    auto ns = static_cast<std::size_t>(__builtin_popcountl(shadow));
    if (nv * upper > ns * lower) return false;
  }
  return true;
}

Json item_example(unsigned k, unsigned alpha, const ReproOptions& o, bool& pass) {
  ParametricRankOptions pro;
  pro.seed = o.seed;
  auto r = thm2_verify({k, k, k, alpha, alpha, alpha}, o.field, pro);
  const unsigned expected_s = k + alpha - 2;
  const bool wlp_ok = r.wlp.verdict == WlpVerdict::Fails &&
                      std::find(r.wlp.failure_degrees.begin(), r.wlp.failure_degrees.end(), expected_s + 1) !=
                          r.wlp.failure_degrees.end();
  pass = r.verdict == Verdict::Pass && r.s == expected_s && wlp_ok;
  Json j{{"expected_s", expected_s}, {"wlp_fails_at_s_plus_1", wlp_ok},
         {"rees", r.rees ? to_string(r.rees->verdict) : "-"},
         {"mfull", r.mfull ? to_string(r.mfull->verdict) : "-"}, {"record", to_json(r)}};
  return j;
}

Json item_same_mu(unsigned k, unsigned alpha, bool& pass) {
  AciParams params{k, k, k, alpha, alpha, alpha};
  auto ideal = aci_ideal(params);
  auto s_val = aci_s_value(params);
  if (s_val.get_den() != 1 || s_val < 1) {
    pass = false;
    return Json{{"error", "s = " + s_val.get_str() + " is not a positive integer"}};
  }
  const unsigned s = static_cast<unsigned>(s_val.get_num().get_ui());
  auto at_s = cap_with_m_power(ideal, s), at_s1 = cap_with_m_power(ideal, s + 1);
  auto h = hilbert_function(ideal);
  pass = at_s.mu() == at_s1.mu() && h.at(s) == h.at(s + 1);
  return Json{{"s", s},
              {"mu_at_s", at_s.mu()},
              {"mu_at_s_plus_1", at_s1.mu()},
              {"hilbert_s", h.at(s)},
              {"hilbert_s_plus_1", h.at(s + 1)},
              {"ideal_at_s", at_s.to_string()},
              {"ideal_at_s_plus_1", at_s1.to_string()}};
}

Json item_thm31(unsigned big_n, unsigned n, const ReproOptions& o, bool& pass) {
  ParametricRankOptions pro;
  pro.seed = o.seed;
  auto r = thm31_verify(big_n, n, pro);
  pass = r.verdict == Verdict::Pass;
  return Json{{"strong", r.strong ? to_string(r.strong->verdict) : "-"},
              {"mfull", r.mfull ? to_string(r.mfull->verdict) : "-"},
              {"record", to_json(r)}};
}

Json item_five_var(bool& pass) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < 5; ++i) gens.push_back(Monomial::variable(5, i, 5));
  gens.push_back(Monomial({1, 1, 1, 1, 1}));
  MonomialIdeal ideal(5, gens);
  QuotientBasis basis(ideal);
  Json maps = Json::array();
  pass = true;
  for (unsigned source : {8u, 9u}) {
    auto m = mult_map_matrix(basis, LinearForm::sum_of_variables(5), source + 1, FieldSpec::rationals());
    std::size_t r = rank(m);
    bool inj = r == basis.dim(source), surj = r == basis.dim(source + 1);
    pass = pass && !inj && !surj;
    maps.push_back(Json{{"source_degree", source},
                        {"dim_source", basis.dim(source)},
                        {"dim_target", basis.dim(source + 1)},
                        {"rank", r},
                        {"injective", inj},
                        {"surjective", surj}});
  }
  return Json{{"ideal", ideal.to_string()}, {"linear_form", "x1+x2+x3+x4+x5"}, {"maps", maps}};
}

Json item_claim_sweep(bool& pass) {
  std::size_t total = 0, failing = 0;
  Json failures = Json::array(), bad = Json::array();
  for (Exponent a = 1; a <= 9; ++a)
    for (Exponent b = 1; b <= 9; ++b)
      for (Exponent c = 1; c <= 9; ++c)
        for (Exponent al = 0; al <= 3; ++al)
          for (Exponent be = 0; be <= 3; ++be)
            for (Exponent ga = 0; ga <= 3; ++ga) {
              AciParams p{a, b, c, al, be, ga};
              try {
                validate_aci(p);
              } catch (const InputError&) {
                continue;
              }
              ++total;
              auto ideal = aci_ideal(p);
              auto w = wlp_check(ideal);
              if (w.verdict == WlpVerdict::Wlp) continue;
              ++failing;
              std::string name = "aci(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                                 "," + std::to_string(al) + "," + std::to_string(be) + "," + std::to_string(ga) + ")";
              failures.push_back(name);
              const auto& d = *w.aci;
              bool ok = d.s_integral && d.plateau_at_max && d.full_matching_at_s1;
              if (ok) ok = claim_profile(ideal, w).holds;
              if (!ok) bad.push_back(name);
            }
  pass = bad.empty() && failing > 0;
  return Json{{"box", "a,b,c <= 9; alpha,beta,gamma <= 3"},
              {"field", Json{{"characteristic", 0}}},
              {"aci_count", total},
              {"wlp_failing", failing},
              {"violations", bad},
              {"failing_ideals", failures}};
}

struct Fixture {
  std::string name;
  MonomialIdeal ideal;
};

std::vector<Fixture> oracle_fixtures() {
  auto ideal = [](std::size_t n, std::vector<std::vector<Exponent>> gens) {
    std::vector<Monomial> g;
    for (auto& e : gens) g.emplace_back(std::move(e));
    return MonomialIdeal(n, std::move(g));
  };
  return {
      {"m^2 (2 vars)", m_power(2, 2)},
      {"m^3 (2 vars)", m_power(3, 2)},
      {"m^5 (2 vars)", m_power(5, 2)},
      {"m^2 (3 vars)", m_power(2, 3)},
      {"m^3 (3 vars)", m_power(3, 3)},
      {"(x1^3,x2^3)", ideal(2, {{3, 0}, {0, 3}})},
      {"(x1^4,x2^4,x1^2x2^2)", ideal(2, {{4, 0}, {0, 4}, {2, 2}})},
      {"(x1^2,x2^5)", ideal(2, {{2, 0}, {0, 5}})},
      {"aci(2,2,2,1,1,0)", aci_ideal({2, 2, 2, 1, 1, 0})},
      {"aci(3,3,3,1,1,1)", aci_ideal({3, 3, 3, 1, 1, 1})},
      {"(x1^2,x2^2,x3^2)", ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})},
      {"(x1^2,x2^2,x3^4)", ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 4}})},
      {"(x1^2,x2^3,x3^2,x1x2x3)", ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 2}, {1, 1, 1}})},
  };
}

Json item_oracles(const ReproOptions& o, bool& pass) {
  Rng rng(o.seed);
  Json out;
  pass = true;

  // (a) Dilworth width against enumeration.
  std::size_t a_bad = 0;
  for (int t = 0; t < 200; ++t) {
    auto p = t % 2 ? random_poset(rng, 20, 6, static_cast<int>(uniform(rng, 10, 80))) : random_algebra_poset(rng, 20);
    if (max_antichain(p).size != enumerated_width(p)) ++a_bad;
  }
  out["max_antichain"] = Json{{"cases", 200}, {"disagreements", a_bad}};

  // (b) flow-based NMP against subset enumeration on single level pairs.
  std::size_t b_bad = 0, b_pass = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t lo = uniform(rng, 1, 18), hi = uniform(rng, 1, 18);
    int pct = static_cast<int>(uniform(rng, 5, 70));
    RankedPoset p;
    auto l = p.add_level(std::vector<std::string>(lo, ""));
    auto u = p.add_level(std::vector<std::string>(hi, ""));
    std::vector<unsigned long> up(lo, 0);
    for (std::size_t i = 0; i < lo; ++i)
      for (std::size_t j = 0; j < hi; ++j)
        if (static_cast<int>(uniform(rng, 0, 99)) < pct) {
          p.add_edge(l[i], u[j]);
          up[i] |= 1ul << j;
        }
    bool flow = nmp_check(p).at(0).passes;
    b_pass += flow;
    if (flow != enumerated_nmp_pair(up, hi)) ++b_bad;
  }
  out["nmp"] = Json{{"cases", 200}, {"passing", b_pass}, {"disagreements", b_bad}};

  // (c) LYM by enumeration iff NMP at every level.
  std::size_t c_bad = 0, c_lym = 0;
  for (int t = 0; t < 100; ++t) {
    auto p = t % 2 ? random_poset(rng, 20, 5, static_cast<int>(uniform(rng, 40, 100))) : random_algebra_poset(rng, 22);
    bool lym = lym_brute(p);
    c_lym += lym;
    if (lym != nmp_all(nmp_check(p))) ++c_bad;
  }
  out["lym_iff_nmp"] = Json{{"cases", 100}, {"lym", c_lym}, {"disagreements", c_bad}};

  // (d) products of NMP log-concave posets.
  std::vector<RankedPoset> pool;
  while (pool.size() < 60) {
    auto p = pool.size() % 3 ? random_algebra_poset(rng, 12) : random_poset(rng, 8, 4, 85);
    if (nmp_all(nmp_check(p)) && log_concave(p)) pool.push_back(std::move(p));
  }
  std::size_t d_bad = 0;
  for (int t = 0; t < 30; ++t) {
    const auto& a = pool[uniform(rng, 0, pool.size() - 1)];
    const auto& b = pool[uniform(rng, 0, pool.size() - 1)];
    auto pq = product(a, b);
    if (!(nmp_all(nmp_check(pq)) && log_concave(pq))) ++d_bad;
  }
  out["product"] = Json{{"cases", 30}, {"failures", d_bad}};

  // (e) certificate pipeline against the up-set oracle on the fixture set.
  Json rows = Json::array();
  std::size_t e_bad = 0, strong_seen = 0;
  bool non_strong_instance = false;
  for (const auto& f : oracle_fixtures()) {
    auto h = hilbert_function(f.ideal);
    const std::size_t mx = *std::max_element(h.begin(), h.end());
    for (unsigned p = 1; p < h.size(); ++p) {
      auto capped = cap_with_m_power(f.ideal, p);
      if (QuotientBasis(capped).total_dim() > kMaxBruteForceSize) continue;
      auto oracle = rees_brute_oracle(capped);
      std::string cert = "-";
      bool agree = true;
      if (p > 0 && std::all_of(h.begin(), h.begin() + p, [&](std::size_t x) { return x < h[p]; })) {
        auto c = strong_rees_certificate(f.ideal, p);
        cert = to_string(c.verdict);
        if (c.verdict == ReesVerdict::StrongRees) {
          agree = oracle.strong && oracle.rees;
          ++strong_seen;
        }
      } else if (h[p] == mx) {
        auto c = rees_certificate(f.ideal, p);
        cert = to_string(c.verdict);
        if (c.verdict == ReesVerdict::Rees) agree = oracle.rees;
        if (f.name == "(x1^2,x2^2,x3^4)" && p == 3) {
          non_strong_instance = c.verdict == ReesVerdict::Rees && oracle.rees && !oracle.strong &&
                            cap_with_m_power(f.ideal, p - 1).mu() == capped.mu();
        }
      } else {
        continue;
      }
      if (!agree) ++e_bad;
      rows.push_back(Json{{"ideal", f.name}, {"p", p}, {"certificate", cert}, {"oracle_rees", oracle.rees},
                          {"oracle_strong", oracle.strong}, {"agree", agree}});
    }
  }
  out["rees"] = Json{{"rows", rows}, {"disagreements", e_bad}, {"strong_instances", strong_seen},
                     {"non_strong_rees_instance", non_strong_instance}};
  pass = a_bad == 0 && b_bad == 0 && c_bad == 0 && d_bad == 0 && e_bad == 0 && strong_seen > 0 && non_strong_instance;
  return out;
}

Json item_mfull_sanity(bool& pass) {
  pass = true;
  Json rows = Json::array();
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned p = 1; p <= 5; ++p) {
      auto r = m_full_check(m_power(p, n));
      bool ok = r.verdict == MFullVerdict::MFull && r.witness &&
                r.witness->to_string() == LinearForm::variable(n, 0).to_string();
      pass = pass && ok;
      rows.push_back(Json{{"n", n}, {"p", p}, {"verdict", to_string(r.verdict)},
                          {"witness", r.witness ? r.witness->to_string() : "-"}, {"ok", ok}});
    }
  std::size_t containment_failures = 0, checked = 0;
  for (const auto& f : oracle_fixtures()) {
    auto ml = multiply_by_m(f.ideal);
    for (std::size_t v = 0; v < f.ideal.nvars(); ++v) {
      auto colon = colon_by_monomial(ml, Monomial::variable(f.ideal.nvars(), v));
      for (const auto& g : f.ideal.generators()) {
        ++checked;
        if (!colon.contains(g)) ++containment_failures;
      }
    }
  }
  pass = pass && containment_failures == 0;
  return Json{{"powers", rows}, {"containment_checks", checked}, {"containment_failures", containment_failures}};
}

Json item_cone(bool& pass) {
  auto j = cap_with_m_power(aci_ideal({9, 9, 9, 3, 3, 3}), 11);
  auto cone = cone_extension(j);
  // Independent recount: candidate list, then a plain pairwise divisibility filter.
  std::vector<Monomial> cand;
  for (const auto& g : j.generators()) cand.push_back(g.extended(1));
  for (std::size_t i = 0; i < 3; ++i) cand.push_back(Monomial::variable(4, i) * Monomial::variable(4, 3));
  cand.push_back(Monomial::variable(4, 3, 2));
  std::size_t recount = 0;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool minimal = true;
    for (std::size_t k = 0; k < cand.size() && minimal; ++k)
      if (k != i && cand[k].divides(cand[i]) && !(cand[k] == cand[i] && k > i)) minimal = false;
    recount += minimal;
  }
  const bool artinian = is_artinian(cone);
  auto mf = m_full_check(cone);
  pass = artinian && cone.nvars() == 4 && recount == cone.mu();
  return Json{{"base", j.to_string()},
              {"cone", cone.to_string()},
              {"artinian", artinian},
              {"mu", cone.mu()},
              {"recount", recount},
              {"mfull", to_string(mf.verdict)},
              {"mfull_report", to_json(mf)}};
}

}  // namespace

std::vector<std::string> default_repro_items() {
  return {"example:9,3", "example:11,3", "same-mu:9,3", "thm31:5,4", "thm31:6,4",
          "five-var",     "claim-sweep",  "oracles",        "mfull-sanity", "cone"};
}

unsigned default_thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RESLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min<long>(v, hw));
  }
  return hw;
}

ReproItemResult run_repro_item(const std::string& id, const ReproOptions& o) {
  auto colon = id.find(':');
  std::string name = id.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : id.substr(colon + 1);
  auto no_args = [&] {
    if (colon != std::string::npos) throw InputError("repro item '" + name + "' takes no arguments");
  };
  ReproItemResult r;
  r.id = id;
  auto t0 = std::chrono::steady_clock::now();
  if (name == "example") {
    auto a = parse_args(id, args, 2);
    r.detail = item_example(a[0], a[1], o, r.pass);
  } else if (name == "same-mu") {
    auto a = parse_args(id, args, 2);
    r.detail = item_same_mu(a[0], a[1], r.pass);
  } else if (name == "thm31") {
    auto a = parse_args(id, args, 2);
    r.detail = item_thm31(a[0], a[1], o, r.pass);
  } else if (name == "five-var") {
    no_args();
    r.detail = item_five_var(r.pass);
  } else if (name == "claim-sweep") {
    no_args();
    r.detail = item_claim_sweep(r.pass);
  } else if (name == "oracles") {
    no_args();
    r.detail = item_oracles(o, r.pass);
  } else if (name == "mfull-sanity") {
    no_args();
    r.detail = item_mfull_sanity(r.pass);
  } else if (name == "cone") {
    no_args();
    r.detail = item_cone(r.pass);
  } else {
    throw InputError("unknown repro item '" + id + "'");
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json run_repro(const std::vector<std::string>& ids, const ReproOptions& o) {
  // Validate names up front so input errors surface before any work starts.
  for (const auto& id : ids) {
    auto name = id.substr(0, id.find(':'));
    auto known = default_repro_items();
    bool ok = std::any_of(known.begin(), known.end(), [&](const std::string& k) { return k.substr(0, k.find(':')) == name; });
    if (!ok) throw InputError("unknown repro item '" + id + "'");
  }
  std::vector<ReproItemResult> results(ids.size());
  std::vector<std::exception_ptr> errors(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ids.size();) {
      try {
        results[i] = run_repro_item(ids[i], o);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = o.threads ? o.threads : default_thread_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ids.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Json items = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json j{{"id", r.id}, {"verdict", r.pass ? "PASS" : "FAIL"}};
    if (o.timings) j["millis"] = r.millis;
    j["detail"] = r.detail;
    items.push_back(std::move(j));
    all = all && r.pass;
  }
  return Json{{"verdict", all ? "PASS" : "FAIL"}, {"items", items}};
}

}  // namespace reeslab
