#pragma once

// Ranked posets whose order is generated by edges between consecutive ranks,
// and the Sperner-theory toolkit over them.

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "reeslab/monomial.hpp"

namespace reeslab {

using ElementId = std::size_t;

class RankedPoset {
 public:
  RankedPoset() = default;

  /// Appends level `levels()` and returns the ids of the new elements.
  std::vector<ElementId> add_level(std::vector<std::string> labels);
  /// a must lie one rank below b.
  void add_edge(ElementId a, ElementId b);

  std::size_t size() const { return labels_.size(); }
  std::size_t levels() const { return levels_.size(); }
  /// Highest rank; levels() - 1.
  std::size_t top_rank() const { return levels_.empty() ? 0 : levels_.size() - 1; }
  const std::vector<ElementId>& level(std::size_t k) const { return levels_.at(k); }
  std::vector<std::size_t> level_sizes() const;
  std::size_t max_level_size() const;
  std::size_t rank_of(ElementId e) const { return rank_.at(e); }
  const std::string& label(ElementId e) const { return labels_.at(e); }
  std::optional<ElementId> find(const std::string& label) const;
  const std::vector<ElementId>& up(ElementId e) const { return up_.at(e); }
  const std::vector<ElementId>& down(ElementId e) const { return down_.at(e); }
  std::size_t edge_count() const;

  /// above[e] = elements strictly greater than e, as a bitset over ids.
  std::vector<std::vector<bool>> strict_up_closure() const;

 private:
  std::vector<std::vector<ElementId>> levels_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<ElementId>> up_, down_;
};

/// Standard monomials of S/I ordered by divisibility, ranked by degree.
RankedPoset poset_from_algebra(const MonomialIdeal& ideal);
/// Monomials x1^a1...xm^am with 0 <= ai <= ei.
RankedPoset divisor_lattice(const std::vector<Exponent>& exponents);
/// A chain of `length` elements labelled "0".."length-1".
RankedPoset chain(std::size_t length);
/// `count` pairwise incomparable elements in rank 0.
RankedPoset antichain_poset(std::size_t count);
/// Cartesian product ordered componentwise; labels "(a,b)".
RankedPoset product(const RankedPoset& p, const RankedPoset& q);

struct Matching {
  /// Pairs (lower, upper) between levels k-1 and k.
  std::size_t level = 0;
  std::vector<std::pair<ElementId, ElementId>> pairs;
  /// |pairs| == min(|P_{k-1}|, |P_k|)
  bool full = false;
};

/// Maximum matching between P_{k-1} and P_k along up-edges (Hopcroft-Karp).
/// `full` is set iff the matching has the size of the smaller level;
/// a non-full result is the maximum possible.
Matching full_matching_at(const RankedPoset& p, std::size_t k);

struct AntichainResult {
  std::size_t size = 0;
  std::vector<ElementId> witness;
};

/// Width of the poset by Dilworth/Koenig on the comparability bipartite
/// graph; the witness is re-checked for pairwise incomparability.
AntichainResult max_antichain(const RankedPoset& p);

/// Upper shadow of a subset of one level.
std::vector<ElementId> nabla(const RankedPoset& p, const std::vector<ElementId>& v);

struct NmpLevel {
  std::size_t level = 0;
  bool passes = true;
  long long flow = 0;
  long long required = 0;
  /// When the level fails: a subset V of P_k with |V|/|P_k| > |nabla V|/|P_{k+1}|.
  std::vector<ElementId> violating_subset;
};

/// Normalized matching property checked level by level through max-flow:
/// source -> a in P_k (capacity |P_{k+1}|), a -> b on edges (unbounded),
/// b in P_{k+1} -> sink (capacity |P_k|); the level passes iff the maximum
/// flow saturates every source arc.
std::vector<NmpLevel> nmp_check(const RankedPoset& p);
bool nmp_all(const std::vector<NmpLevel>& levels);

inline constexpr std::size_t kMaxBruteForceSize = 22;

/// Calls `visit` on every antichain (as a bitmask over element ids), including
/// the empty one. Throws SizeError when the poset exceeds kMaxBruteForceSize.
template <class Visit>
void for_each_antichain(const RankedPoset& p, Visit&& visit);

/// LYM by exhaustive antichain enumeration with exact rational sums.
bool lym_brute(const RankedPoset& p);

/// (#P_i)^2 >= #P_{i-1} #P_{i+1} for all i, missing levels counting as 0.
bool log_concave(const std::vector<std::size_t>& level_sizes);
bool log_concave(const RankedPoset& p);
bool is_unimodal(const std::vector<std::size_t>& seq);

/// `rank<TAB>label` lines, a blank line, then `label<TAB>label` edges.
void write_poset_dump(std::ostream& os, const RankedPoset& p);
RankedPoset read_poset_dump(std::istream& is);

// ---------------------------------------------------------------------------

namespace detail {
std::vector<unsigned long> comparability_masks(const RankedPoset& p);
}

template <class Visit>
void for_each_antichain(const RankedPoset& p, Visit&& visit) {
  const auto comparable = detail::comparability_masks(p);
  const std::size_t n = p.size();
  // Depth-first over elements in id order; `blocked` holds elements comparable
  // to something already chosen.
  auto rec = [&](auto&& self, std::size_t next, unsigned long chosen, unsigned long blocked) -> void {
    visit(chosen);
    for (std::size_t e = next; e < n; ++e) {
      if (blocked >> e & 1ul) continue;
      self(self, e + 1, chosen | 1ul << e, blocked | comparable[e]);
    }
  };
  rec(rec, 0, 0ul, 0ul);
}

}  // namespace reeslab
