#include "reeslab/report.hpp"

#include <algorithm>
#include <sstream>

namespace reeslab {

namespace {

Json strings(const std::vector<Monomial>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(m.to_string());
  return a;
}

Json aci_json(const AciParams& p) {
  return Json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}};
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const MonomialIdeal& ideal) {
  return Json{{"spec", ideal.to_string()}, {"nvars", ideal.nvars()}, {"mu", ideal.mu()},
              {"generators", strings(ideal.generators())}};
}

Json to_json(const FieldSpec& field) {
  return Json{{"characteristic", field.characteristic}};
}

Json to_json(const LinearForm& y) { return y.to_string(); }

Json to_json(const ParametricRank& r) {
  return Json{{"rank", r.rank},
              {"method", r.method},
              {"exact", r.exact},
              {"specialization_max", r.specialization_max},
              {"samples", r.samples},
              {"seed", r.seed},
              {"specialization_agrees", r.specialization_agrees}};
}

Json to_json(const WlpReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees)
    degrees.push_back(Json{{"k", d.k},
                           {"dim_source", d.dim_source},
                           {"dim_target", d.dim_target},
                           {"generic_rank", d.generic_rank},
                           {"injective", d.injective},
                           {"surjective", d.surjective},
                           {"method", d.method},
                           {"exact", d.exact}});
  Json j{{"verdict", to_string(r.verdict)},
         {"ideal", to_json(r.ideal)},
         {"field", to_json(r.field)},
         {"exact", r.exact},
         {"probabilistic", !r.exact},
         {"hilbert", r.hilbert},
         {"failure_degrees", r.failure_degrees},
         {"degrees", degrees}};
  if (r.aci) {
    j["aci"] = Json{{"params", aci_json(r.aci->params)},
                    {"s", r.aci->s.get_str()},
                    {"s_integral", r.aci->s_integral},
                    {"plateau_at_max", r.aci->plateau_at_max},
                    {"full_matching_at_s1", r.aci->full_matching_at_s1}};
  }
  return j;
}

Json to_json(const ClaimProfile& c) {
  Json degrees = Json::array();
  for (const auto& d : c.degrees)
    degrees.push_back(Json{{"k", d.k},
                           {"dim_source", d.dim_source},
                           {"dim_target", d.dim_target},
                           {"rank", d.rank},
                           {"expected", d.expected},
                           {"ok", d.ok}});
  return Json{{"holds", c.holds}, {"params", aci_json(c.params)}, {"s", c.s}, {"degrees", degrees}};
}

Json to_json(const SpernerCertificate& c) {
  Json matchings = Json::array();
  for (std::size_t i = 0; i < c.matchings.size(); ++i) {
    Json pairs = Json::array();
    for (const auto& [a, b] : c.matchings[i]) pairs.push_back(Json::array({a.to_string(), b.to_string()}));
    matchings.push_back(Json{{"k", i + 1}, {"pairs", pairs}});
  }
  return Json{{"sperner", c.sperner},
              {"route", c.route},
              {"max_antichain", c.max_antichain},
              {"max_hilbert", c.max_hilbert},
              {"hilbert", c.hilbert},
              {"unimodal", c.unimodal},
              {"all_matchings_full", c.all_matchings_full},
              {"witness", strings(c.witness)},
              {"matchings", matchings}};
}

Json to_json(const MuMaxResult& r) {
  return Json{{"max_mu", r.max_mu}, {"witness", to_json(r.witness)}};
}

Json to_json(const MFullReport& r) {
  Json trials = Json::array();
  for (const auto& t : r.trials)
    trials.push_back(
        Json{{"y", t.y}, {"kind", t.kind}, {"equal", t.equal}, {"first_bad_degree", opt(t.first_bad_degree)}});
  Json j{{"verdict", to_string(r.verdict)},
         {"ideal", to_json(r.ideal)},
         {"field", to_json(r.field)},
         {"witness", r.witness ? Json(r.witness->to_string()) : Json(nullptr)},
         {"trials", trials}};
  if (r.certificate) {
    const auto& c = *r.certificate;
    Json kv = Json::array();
    for (const auto& x : c.kernel_vector) kv.push_back(x.get_str());
    j["certificate"] = Json{{"p", c.p},
                            {"s", c.s},
                            {"base_generators", strings(c.base_generators)},
                            {"no_generators_in_degree_s1", c.no_generators_in_degree_s1},
                            {"degree2_witness", c.degree2_witness.to_string()},
                            {"dim_source", c.dim_source},
                            {"dim_target", c.dim_target},
                            {"generic_rank", to_json(c.generic_rank)},
                            {"kernel_support", strings(c.kernel_support)},
                            {"kernel_vector", kv},
                            {"kernel_verified", c.kernel_verified}};
  } else {
    j["certificate"] = nullptr;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const ReesCertificate& c) {
  Json levels = Json::array();
  for (const auto& l : c.lym_levels)
    levels.push_back(Json{{"level", l.level}, {"passes", l.passes}, {"flow", l.flow}, {"required", l.required}});
  Json factors = Json::array();
  for (const auto& f : c.factors)
    factors.push_back(Json{{"variables", f.variables},
                           {"kind", f.kind},
                           {"ideal", f.ideal},
                           {"level_sizes", f.level_sizes},
                           {"nmp", f.nmp},
                           {"log_concave", f.log_concave}});
  Json j{{"verdict", to_string(c.verdict)},
         {"base", to_json(c.base)},
         {"p", c.p},
         {"capped", to_json(c.capped)},
         {"hilbert", c.hilbert},
         {"max_hilbert", c.max_hilbert},
         {"p_is_max", c.p_is_max},
         {"strictly_dominant", c.strictly_dominant},
         {"route", c.route}};
  j["sperner"] = c.sperner ? to_json(*c.sperner) : Json(nullptr);
  if (!c.lym_levels.empty()) {
    j["lym"] = c.lym;
    j["lym_levels"] = levels;
  }
  if (c.factor_route_applied) {
    j["factor_route"] = Json{{"passes", c.factor_route_passes},
                             {"convolution_matches", c.convolution_matches},
                             {"factors", factors}};
  }
  return j;
}

Json to_json(const ReesOracleResult& r) {
  return Json{{"rees", r.rees},
              {"strong", r.strong},
              {"mu", r.mu},
              {"max_mu", r.max_mu},
              {"violation", r.violation ? to_json(*r.violation) : Json(nullptr)},
              {"strong_violation", r.strong_violation ? to_json(*r.strong_violation) : Json(nullptr)}};
}

Json to_json(const Thm2Record& r) {
  Json j{{"verdict", to_string(r.verdict)},
         {"params", aci_json(r.params)},
         {"field", to_json(r.field)},
         {"s", opt(r.s)},
         {"no_generators_in_degree_s1", r.no_generators_in_degree_s1},
         {"same_mu_at_s", opt(r.same_mu_at_s)},
         {"wlp", to_json(r.wlp)}};
  j["rees"] = r.rees ? to_json(*r.rees) : Json(nullptr);
  j["mfull"] = r.mfull ? to_json(*r.mfull) : Json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json to_json(const Thm31Record& r) {
  Json j{{"verdict", to_string(r.verdict)},
         {"N", r.big_n},
         {"n", r.nvars},
         {"d", r.d},
         {"hilbert", r.hilbert},
         {"strictly_increasing", r.strictly_increasing},
         {"dim_d", r.dim_d},
         {"dim_d1", r.dim_d1},
         {"rank_d", to_json(r.rank_d)},
         {"not_injective_at_d", r.not_injective_at_d},
         {"factor", Json{{"level_sizes", r.factor_levels},
                         {"top_lower", r.factor_top_lower},
                         {"top_upper", r.factor_top_upper},
                         {"top_nmp", r.factor_top_nmp}}}};
  j["strong"] = r.strong ? to_json(*r.strong) : Json(nullptr);
  j["mfull"] = r.mfull ? to_json(*r.mfull) : Json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json poset_json(const RankedPoset& p) {
  Json levels = Json::array();
  for (std::size_t k = 0; k < p.levels(); ++k) {
    Json l = Json::array();
    for (ElementId e : p.level(k)) l.push_back(p.label(e));
    levels.push_back(l);
  }
  Json edges = Json::array();
  for (ElementId a = 0; a < p.size(); ++a)
    for (ElementId b : p.up(a)) edges.push_back(Json::array({p.label(a), p.label(b)}));
  return Json{{"size", p.size()}, {"level_sizes", p.level_sizes()}, {"levels", levels}, {"edges", edges}};
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void flatten(const Json& j, const std::string& key, bool verbose, std::size_t limit, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), verbose, limit, out);
    return;
  }
  if (j.is_array()) {
    if (!verbose && j.size() > limit) {
      out << key << ": <" << j.size() << " items>\n";
      return;
    }
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars) {
      out << key << ": ";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? "," : "") << scalar_text(j[i]);
      out << '\n';
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "[" + std::to_string(i) + "]", verbose, limit, out);
    return;
  }
  out << key << ": " << scalar_text(j) << '\n';
}

}  // namespace

std::string flatten_text(const Json& j, bool verbose, std::size_t limit) {
  std::ostringstream out;
  flatten(j, "", verbose, limit, out);
  return out.str();
}

}  // namespace reeslab
