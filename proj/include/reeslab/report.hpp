#pragma once

// JSON forms of every verdict record, and the flat text projection used by
// the command-line tool.

#include <string>

#include <json.hpp>

#include "reeslab/certify.hpp"
#include "reeslab/linalg.hpp"
#include "reeslab/monomial.hpp"
#include "reeslab/poset.hpp"

namespace reeslab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kSchemaVersion = "1";

Json to_json(const MonomialIdeal& ideal);
Json to_json(const FieldSpec& field);
Json to_json(const LinearForm& y);
Json to_json(const ParametricRank& r);
Json to_json(const WlpReport& r);
Json to_json(const ClaimProfile& c);
Json to_json(const SpernerCertificate& c);
Json to_json(const MuMaxResult& r);
Json to_json(const MFullReport& r);
Json to_json(const ReesCertificate& c);
Json to_json(const ReesOracleResult& r);
Json to_json(const Thm2Record& r);
Json to_json(const Thm31Record& r);
Json poset_json(const RankedPoset& p);

/// "key.sub[i]: value" lines. Arrays of scalars print comma-separated; with
/// `verbose` false, arrays longer than `limit` collapse to "<N items>".
std::string flatten_text(const Json& j, bool verbose, std::size_t limit = 16);

}  // namespace reeslab
