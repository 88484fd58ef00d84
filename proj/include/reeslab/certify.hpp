#pragma once

// Property checkers (WLP, Sperner, m-fullness, Rees, strong Rees), the
// certificates they emit, and the brute-force oracles used to validate them
// at small sizes.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "reeslab/linalg.hpp"
#include "reeslab/monomial.hpp"
#include "reeslab/poset.hpp"

namespace reeslab {

enum class WlpVerdict { Wlp, Fails };
enum class MFullVerdict { MFull, NotMFull, Undetermined };
enum class ReesVerdict { Rees, StrongRees, NoCertificate };
enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(WlpVerdict v);
std::string to_string(MFullVerdict v);
std::string to_string(ReesVerdict v);
std::string to_string(Verdict v);

// ---------------------------------------------------------------------------
// WLP

/// Map A_{k-1} -> A_k, indexed by the target degree k.
struct WlpDegree {
  unsigned k = 0;
  std::size_t dim_source = 0, dim_target = 0;
  std::size_t generic_rank = 0;
  bool injective = false, surjective = false;
  std::string method;
  bool exact = true;
};

struct AciDiagnostics {
  AciParams params{};
  mpq_class s;
  bool s_integral = false;
  /// H(s) = H(s+1) = max H; only meaningful when s is a nonnegative integer.
  bool plateau_at_max = false;
  bool full_matching_at_s1 = false;
};

struct WlpReport {
  MonomialIdeal ideal{1};
  FieldSpec field;
  std::vector<std::size_t> hilbert;
  std::vector<WlpDegree> degrees;
  WlpVerdict verdict = WlpVerdict::Wlp;
  std::vector<unsigned> failure_degrees;
  /// False only if some rank came from sampling alone.
  bool exact = true;
  std::optional<AciDiagnostics> aci;
};

WlpReport wlp_check(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                    const ParametricRankOptions& options = {});

struct ClaimDegree {
  unsigned k = 0;
  std::size_t dim_source = 0, dim_target = 0, rank = 0;
  /// "injective" below s+1, "surjective" above, "none" at s+1.
  std::string expected;
  bool ok = true;
};

struct ClaimProfile {
  AciParams params{};
  unsigned s = 0;
  std::vector<ClaimDegree> degrees;
  bool holds = false;
};

/// Exact ranks of multiplication by x1+x2+x3 against the injective-then-
/// surjective profile around s+1. Rejects non-ACI input (InputError) and ACIs
/// with the WLP or non-integral s (HypothesisError). Characteristic 0.
ClaimProfile claim_profile(const MonomialIdeal& ideal);
ClaimProfile claim_profile(const MonomialIdeal& ideal, const WlpReport& char0_wlp);

// ---------------------------------------------------------------------------
// Sperner

struct SpernerCertificate {
  std::size_t max_antichain = 0;
  std::size_t max_hilbert = 0;
  std::vector<Monomial> witness;
  std::vector<std::size_t> hilbert;
  bool unimodal = false;
  bool all_matchings_full = false;
  /// Per target degree k = 1..top, pairs (lower, upper).
  std::vector<std::vector<std::pair<Monomial, Monomial>>> matchings;
  /// "MATCHING+UNIMODAL" when that route succeeds, else "DILWORTH".
  std::string route;
  bool sperner = false;
};

SpernerCertificate sperner_check(const MonomialIdeal& ideal);

struct MuMaxResult {
  /// max mu(J/I) over monomial ideals J of S containing I.
  std::size_t max_mu = 0;
  MonomialIdeal witness{1};
};

/// Exhaustive over up-sets of M(S/I); SizeError above kMaxBruteForceSize.
MuMaxResult mu_max_oracle(const MonomialIdeal& ideal);

// ---------------------------------------------------------------------------
// m-fullness

struct ColonTrial {
  std::string y;
  std::string kind;  // "variable", "sum", "random"
  bool equal = false;
  /// First degree k with (mI : y)_k != I_k.
  std::optional<unsigned> first_bad_degree;
};

struct NotMFullCertificate {
  unsigned p = 0;
  unsigned s = 0;
  /// I' = generators of degree < p, so that the ideal equals I' + m^p.
  std::vector<Monomial> base_generators;
  bool no_generators_in_degree_s1 = false;
  /// Monomial of degree p-1 outside the ideal: excludes witnesses of degree >= 2.
  Monomial degree2_witness;
  std::size_t dim_source = 0, dim_target = 0;
  ParametricRank generic_rank;
  /// v in the kernel of multiplication by the sum of variables on (S/I')_s;
  /// c^m v_m is a kernel vector of the generic map, checked symbolically.
  std::vector<Monomial> kernel_support;
  std::vector<mpz_class> kernel_vector;
  bool kernel_verified = false;
};

struct MFullReport {
  MonomialIdeal ideal{1};
  FieldSpec field;
  MFullVerdict verdict = MFullVerdict::Undetermined;
  std::optional<LinearForm> witness;
  std::vector<ColonTrial> trials;
  std::optional<NotMFullCertificate> certificate;
  std::string note;
};

MFullReport m_full_check(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                         std::uint64_t seed = kDefaultSeed);

// ---------------------------------------------------------------------------
// Rees

struct LevelCheck {
  std::size_t level = 0;
  bool passes = true;
  long long flow = 0, required = 0;
};

struct FactorCheck {
  std::vector<std::size_t> variables;
  std::string kind;  // "algebra" or "divisor-lattice"
  std::string ideal;
  std::vector<std::size_t> level_sizes;
  bool nmp = false;
  bool log_concave = false;
};

struct ReesCertificate {
  MonomialIdeal base{1};
  MonomialIdeal capped{1};
  unsigned p = 0;
  std::vector<std::size_t> hilbert;
  std::size_t max_hilbert = 0;
  std::size_t mu_capped = 0;
  /// dim A_p = max H
  bool p_is_max = false;
  /// dim A_p > dim A_k for k < p (strong route only)
  bool strictly_dominant = false;
  std::optional<SpernerCertificate> sperner;
  /// strong route: NMP of M(S/(I + m^{p+1})) level by level
  std::vector<LevelCheck> lym_levels;
  bool lym = false;
  std::vector<FactorCheck> factors;
  bool factor_route_applied = false;
  bool factor_route_passes = false;
  bool convolution_matches = false;
  std::string route;
  ReesVerdict verdict = ReesVerdict::NoCertificate;
};

ReesCertificate rees_certificate(const MonomialIdeal& ideal, unsigned p);
ReesCertificate strong_rees_certificate(const MonomialIdeal& ideal, unsigned p);

struct ReesOracleResult {
  std::size_t mu = 0;
  /// max mu(J) over monomial J containing the ideal
  std::size_t max_mu = 0;
  bool rees = false;
  bool strong = false;
  /// J with mu(J) > mu(I), resp. J strictly larger with mu(J) >= mu(I)
  std::optional<MonomialIdeal> violation;
  std::optional<MonomialIdeal> strong_violation;
};

ReesOracleResult rees_brute_oracle(const MonomialIdeal& ideal);

// ---------------------------------------------------------------------------
// Composite verdicts

struct Thm2Record {
  AciParams params{};
  FieldSpec field;
  WlpReport wlp;
  std::optional<unsigned> s;
  bool no_generators_in_degree_s1 = false;
  std::optional<ReesCertificate> rees;
  std::optional<MFullReport> mfull;
  /// mu(I + m^s) == mu(I + m^{s+1})
  std::optional<bool> same_mu_at_s;
  Verdict verdict = Verdict::NotApplicable;
  std::string reason;
};

Thm2Record thm2_verify(const AciParams& params, const FieldSpec& field = FieldSpec::rationals(),
                       const ParametricRankOptions& options = {});

inline constexpr unsigned kThm31MaxN = 8;
inline constexpr std::size_t kThm31MaxVars = 6;

struct Thm31Record {
  unsigned big_n = 0;
  std::size_t nvars = 0;
  unsigned d = 0;
  std::vector<std::size_t> hilbert;
  /// H(k) < H(k+1) for k = 0..d
  bool strictly_increasing = false;
  std::size_t dim_d = 0, dim_d1 = 0;
  ParametricRank rank_d;
  bool not_injective_at_d = false;
  std::vector<std::size_t> factor_levels;
  std::vector<std::string> factor_top_lower, factor_top_upper;
  bool factor_top_nmp = false;
  std::optional<ReesCertificate> strong;
  std::optional<MFullReport> mfull;
  Verdict verdict = Verdict::Fail;
  std::string reason;
};

/// N in [5, kThm31MaxN], n even in [4, kThm31MaxVars].
Thm31Record thm31_verify(unsigned big_n, std::size_t nvars, const ParametricRankOptions& options = {});

}  // namespace reeslab
