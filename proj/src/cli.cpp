#include "reeslab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "reeslab/certify.hpp"
#include "reeslab/errors.hpp"
#include "reeslab/ideal_spec.hpp"
#include "reeslab/poset.hpp"
#include "reeslab/report.hpp"
#include "reeslab/repro.hpp"

namespace reeslab {

namespace {

struct Options {
  std::string spec;
  std::string poset_file;
  std::string dump_file;
  std::uint64_t characteristic = 0;
  std::uint64_t seed = kDefaultSeed;
  std::optional<unsigned> cap;
  std::string json_path;
  std::string format = "text";
  std::string expect;
  bool verbose = false;
  bool timings = false;
  std::vector<std::string> only;
};

struct Outcome {
  Json input;
  Json result;
  std::string verdict;
  bool failed = false;
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Json spec_input(const Options& o, const ParsedSpec& p) {
  return Json{{"spec", o.spec}, {"canonical", format_ideal_spec(p.ideal)}, {"nvars", p.ideal.nvars()},
              {"mu", p.ideal.mu()}};
}

ParsedSpec require_spec(const Options& o) {
  if (o.spec.empty()) throw InputError("an ideal spec is required");
  return parse_ideal_spec(o.spec);
}

void require_artinian(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal)) throw NotArtinianError("ideal " + ideal.to_string() + " is not Artinian");
}

std::size_t enumerated_width(const RankedPoset& p) {
  std::size_t best = 0;
  for_each_antichain(p, [&](unsigned long set) {
    best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountl(set)));
  });
  return best;
}

Outcome cmd_hilbert(const Options& o) {
  auto p = require_spec(o);
  require_artinian(p.ideal);
  QuotientBasis basis(p.ideal);
  auto h = basis.hilbert();
  Outcome out{spec_input(o, p), Json{{"hilbert", h},
                                     {"total_dim", basis.total_dim()},
                                     {"max", basis.max_dim()},
                                     {"top_degree", basis.top_degree()},
                                     {"unimodal", is_unimodal(h)}},
              join(h)};
  return out;
}

Outcome cmd_wlp(const Options& o, const FieldSpec& field) {
  auto p = require_spec(o);
  require_artinian(p.ideal);
  ParametricRankOptions pro;
  pro.seed = o.seed;
  auto r = wlp_check(p.ideal, field, pro);
  return {spec_input(o, p), to_json(r), to_string(r.verdict)};
}

Outcome cmd_sperner(const Options& o) {
  auto p = require_spec(o);
  require_artinian(p.ideal);
  auto c = sperner_check(p.ideal);
  Json result = to_json(c);
  if (QuotientBasis(p.ideal).total_dim() <= kMaxBruteForceSize) {
    auto m = mu_max_oracle(p.ideal);
    result["oracle"] = Json{{"max_mu", m.max_mu}, {"sperner", m.max_mu == c.max_hilbert},
                            {"agrees", (m.max_mu == c.max_hilbert) == c.sperner}};
  } else {
    result["oracle"] = nullptr;
  }
  return {spec_input(o, p), result, c.sperner ? "SPERNER" : "NOT_SPERNER"};
}

Outcome cmd_mfull(const Options& o, const FieldSpec& field) {
  auto p = require_spec(o);
  require_artinian(p.ideal);
  auto r = m_full_check(p.ideal, field, o.seed);
  return {spec_input(o, p), to_json(r), to_string(r.verdict)};
}

Outcome cmd_rees(const Options& o, bool strong) {
  auto p = require_spec(o);
  require_artinian(p.base);
  auto h = hilbert_function(p.base);
  unsigned cap = 0;
  if (o.cap) cap = *o.cap;
  else if (p.cap) cap = *p.cap;
  else cap = static_cast<unsigned>(std::max_element(h.begin(), h.end()) - h.begin());
  Json input = spec_input(o, p);
  input["base"] = format_ideal_spec(p.base);
  input["cap"] = cap;
  Json result;
  std::string verdict;
  try {
    auto c = strong ? strong_rees_certificate(p.base, cap) : rees_certificate(p.base, cap);
    result = to_json(c);
    verdict = to_string(c.verdict);
  } catch (const HypothesisError& e) {
    result = Json{{"reason", e.what()}, {"hilbert", h}};
    verdict = "HYPOTHESIS_FAILED";
  }
  auto capped = cap_with_m_power(p.base, cap);
  if (QuotientBasis(capped).total_dim() <= kMaxBruteForceSize) result["oracle"] = to_json(rees_brute_oracle(capped));
  else result["oracle"] = nullptr;
  return {input, result, verdict};
}

RankedPoset load_poset(const Options& o, Json& input) {
  if (!o.poset_file.empty()) {
    if (!o.spec.empty()) throw InputError("give either an ideal spec or --poset, not both");
    std::ifstream in(o.poset_file);
    if (!in) throw InputError("cannot open poset file '" + o.poset_file + "'");
    input = Json{{"poset_file", o.poset_file}};
    return read_poset_dump(in);
  }
  auto p = require_spec(o);
  require_artinian(p.ideal);
  input = spec_input(o, p);
  return poset_from_algebra(p.ideal);
}

Outcome cmd_lym(const Options& o) {
  Outcome out;
  auto poset = load_poset(o, out.input);
  auto levels = nmp_check(poset);
  Json lj = Json::array();
  for (const auto& l : levels) {
    Json v = Json::array();
    for (ElementId e : l.violating_subset) v.push_back(poset.label(e));
    lj.push_back(Json{{"level", l.level}, {"passes", l.passes}, {"flow", l.flow}, {"required", l.required},
                      {"violating_subset", v}});
  }
  bool nmp = nmp_all(levels);
  out.result = Json{{"level_sizes", poset.level_sizes()}, {"log_concave", log_concave(poset)}, {"nmp", nmp},
                    {"levels", lj}};
  if (poset.size() <= kMaxBruteForceSize) {
    bool brute = lym_brute(poset);
    out.result["brute_lym"] = brute;
    out.result["agrees"] = brute == nmp;
  } else {
    out.result["brute_lym"] = nullptr;
  }
  out.verdict = nmp ? "LYM" : "NOT_LYM";
  return out;
}

Outcome cmd_poset(const Options& o) {
  Outcome out;
  auto poset = load_poset(o, out.input);
  if (!o.dump_file.empty()) {
    std::ofstream f(o.dump_file);
    if (!f) throw InputError("cannot write poset dump '" + o.dump_file + "'");
    write_poset_dump(f, poset);
  }
  out.result = poset_json(poset);
  out.verdict = join(poset.level_sizes());
  return out;
}

Outcome cmd_oracle(const Options& o) {
  auto p = require_spec(o);
  require_artinian(p.ideal);
  auto poset = poset_from_algebra(p.ideal);
  if (poset.size() > kMaxBruteForceSize)
    throw SizeError("oracle comparison needs |M(S/I)| <= " + std::to_string(kMaxBruteForceSize) + ", got " +
                    std::to_string(poset.size()));
  Json checks = Json::array();
  bool agree = true;
  auto add = [&](const std::string& name, Json engine, Json brute) {
    bool same = engine == brute;
    agree = agree && same;
    checks.push_back(Json{{"check", name}, {"engine", engine}, {"brute", brute}, {"agree", same}});
  };
  auto width = max_antichain(poset);
  add("max_antichain", width.size, enumerated_width(poset));
  auto sp = sperner_check(p.ideal);
  auto mm = mu_max_oracle(p.ideal);
  add("sperner", sp.sperner, mm.max_mu == sp.max_hilbert);
  add("lym", nmp_all(nmp_check(poset)), lym_brute(poset));
  Json witness = Json::array();
  for (ElementId e : width.witness) witness.push_back(poset.label(e));
  Json result{{"dilworth", width.size}, {"brute_antichain_max", enumerated_width(poset)}, {"witness", witness},
              {"max_hilbert", sp.max_hilbert}, {"max_mu", mm.max_mu}, {"checks", checks}};
  return {spec_input(o, p), result, agree ? "AGREE" : "DISAGREE"};
}

Outcome cmd_repro(const Options& o, const FieldSpec& field) {
  if (!o.spec.empty()) throw InputError("repro takes no ideal spec");
  ReproOptions ro;
  ro.field = field;
  ro.seed = o.seed;
  ro.timings = o.timings;
  auto ids = o.only.empty() ? default_repro_items() : o.only;
  Json report = run_repro(ids, ro);
  Outcome out{Json{{"items", ids}}, report["items"], report["verdict"].get<std::string>()};
  out.failed = out.verdict != "PASS";
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks for Rees, Sperner and weak Lefschetz properties of monomial algebras", "rees-lab"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"hilbert", "Hilbert function of S/I"},
      {"wlp", "weak Lefschetz check for the generic linear form"},
      {"sperner", "Sperner certificate via full matchings"},
      {"mfull", "m-fullness check with witness or obstruction"},
      {"rees", "Rees certificate for I + m^p"},
      {"strong-rees", "strong Rees certificate for I + m^p"},
      {"lym", "normalized matching / LYM check of a ranked poset"},
      {"poset", "standard monomial poset, optionally dumped to a file"},
      {"oracle", "compare the certificate engines with exhaustive enumeration"},
      {"repro", "run the reproduction manifest"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (name != "repro") sub->add_option("spec", o.spec, "ideal spec");
    if (name == "lym" || name == "poset") sub->add_option("--poset", o.poset_file, "poset dump file");
    if (name == "poset") sub->add_option("--dump", o.dump_file, "write the poset dump to this file");
    if (name == "rees" || name == "strong-rees") sub->add_option("--cap", o.cap, "cap exponent p");
    if (name == "repro") sub->add_option("--only", o.only, "run only this item (repeatable)");
  }
  app.add_option("--char", o.characteristic, "field characteristic (0 or a prime)");
  app.add_option("--seed", o.seed, "seed for sampled specializations and random forms");
  app.add_option("--json", o.json_path, "also write the JSON report to this path");
  app.add_option("--format", o.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--expect", o.expect, "expected verdict; a mismatch exits with status 1");
  app.add_flag("-v,--verbose", o.verbose, "print long arrays in full");
  app.add_flag("--timings", o.timings, "include wall-clock timings");

  std::vector<std::string> argv_store{"rees-lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  Outcome res;
  FieldSpec field;
  auto t0 = std::chrono::steady_clock::now();
  try {
    field = o.characteristic ? FieldSpec::prime_field(o.characteristic) : FieldSpec::rationals();
    if (command == "hilbert") res = cmd_hilbert(o);
    else if (command == "wlp") res = cmd_wlp(o, field);
    else if (command == "sperner") res = cmd_sperner(o);
    else if (command == "mfull") res = cmd_mfull(o, field);
    else if (command == "rees") res = cmd_rees(o, false);
    else if (command == "strong-rees") res = cmd_rees(o, true);
    else if (command == "lym") res = cmd_lym(o);
    else if (command == "poset") res = cmd_poset(o);
    else if (command == "oracle") res = cmd_oracle(o);
    else res = cmd_repro(o, field);
  } catch (const InputError& e) {
    err << "rees-lab " << command << ": input error: " << e.what() << '\n';
    return 2;
  } catch (const NotArtinianError& e) {
    err << "rees-lab " << command << ": input error: " << e.what() << '\n';
    return 2;
  } catch (const SizeError& e) {
    err << "rees-lab " << command << ": input error: " << e.what() << '\n';
    return 2;
  } catch (const HypothesisError& e) {
    err << "rees-lab " << command << ": input error: " << e.what() << '\n';
    return 2;
  }
  double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  Json report{{"schema_version", kSchemaVersion},
              {"tool", "rees-lab"},
              {"version", kToolVersion},
              {"command", command},
              {"input", res.input},
              {"field", to_json(field)},
              {"seed", o.seed},
              {"result", res.result},
              {"verdict", res.verdict}};
  bool mismatch = false;
  if (!o.expect.empty()) {
    mismatch = o.expect != res.verdict;
    report["expect"] = Json{{"verdict", o.expect}, {"matched", !mismatch}};
  }
  if (o.timings) report["timings_ms"] = Json{{"total", millis}};

  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path);
    if (!f) {
      err << "rees-lab: cannot write '" << o.json_path << "'\n";
      return 2;
    }
    f << report.dump(2) << '\n';
  }
  if (o.format == "json") out << report.dump(2) << '\n';
  else out << flatten_text(report, o.verbose);
  return mismatch || res.failed ? 1 : 0;
}

}  // namespace reeslab
