#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "reeslab/errors.hpp"
#include "reeslab/monomial.hpp"
#include "reeslab/poset.hpp"

using namespace reeslab;

namespace {

RankedPoset random_poset(std::mt19937& rng, std::size_t max_levels, std::size_t max_width, int edge_pct) {
  std::uniform_int_distribution<std::size_t> nl(1, max_levels), w(1, max_width);
  std::uniform_int_distribution<int> pct(0, 99);
  RankedPoset p;
  std::vector<ElementId> prev;
  std::size_t levels = nl(rng);
  for (std::size_t k = 0; k < levels; ++k) {
    std::vector<std::string> labels;
    std::size_t width = w(rng);
    for (std::size_t i = 0; i < width; ++i) labels.push_back("e" + std::to_string(k) + "_" + std::to_string(i));
    auto ids = p.add_level(labels);
    for (ElementId a : prev)
      for (ElementId b : ids)
        if (pct(rng) < edge_pct) p.add_edge(a, b);
    prev = ids;
  }
  return p;
}

// Oracle: reachability by repeated DFS over up-edges.
std::vector<std::vector<bool>> leq_oracle(const RankedPoset& p) {
  std::vector<std::vector<bool>> leq(p.size(), std::vector<bool>(p.size(), false));
  for (ElementId s = 0; s < p.size(); ++s) {
    std::vector<ElementId> stack{s};
    while (!stack.empty()) {
      ElementId e = stack.back();
      stack.pop_back();
      if (leq[s][e]) continue;
      leq[s][e] = true;
      for (ElementId u : p.up(e)) stack.push_back(u);
    }
  }
  return leq;
}

bool is_antichain(const std::vector<std::vector<bool>>& leq, const std::vector<ElementId>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (i != j && leq[s[i]][s[j]]) return false;
  return true;
}

std::size_t brute_width(const RankedPoset& p) {
  auto leq = leq_oracle(p);
  std::size_t best = 0;
  for (unsigned long mask = 0; mask < (1ul << p.size()); ++mask) {
    std::vector<ElementId> s;
    for (ElementId e = 0; e < p.size(); ++e)
      if (mask >> e & 1ul) s.push_back(e);
    if (s.size() > best && is_antichain(leq, s)) best = s.size();
  }
  return best;
}

// Oracle: every subset V of P_k satisfies |nabla V| |P_k| >= |V| |P_{k+1}|.
bool brute_nmp_level(const RankedPoset& p, std::size_t k) {
  const auto& lo = p.level(k);
  const auto& hi = p.level(k + 1);
  for (unsigned long mask = 1; mask < (1ul << lo.size()); ++mask) {
    std::set<ElementId> shadow;
    std::size_t v = 0;
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (mask >> i & 1ul) {
        ++v;
        for (ElementId b : p.up(lo[i])) shadow.insert(b);
      }
    if (shadow.size() * lo.size() < v * hi.size()) return false;
  }
  return true;
}

bool brute_lym(const RankedPoset& p) {
  auto leq = leq_oracle(p);
  auto sizes = p.level_sizes();
  for (unsigned long mask = 0; mask < (1ul << p.size()); ++mask) {
    std::vector<ElementId> s;
    for (ElementId e = 0; e < p.size(); ++e)
      if (mask >> e & 1ul) s.push_back(e);
    if (!is_antichain(leq, s)) continue;
    // sum over the antichain of 1/|P_rank| <= 1, over a common denominator
    std::vector<std::size_t> per(sizes.size(), 0);
    for (ElementId e : s) ++per[p.rank_of(e)];
    unsigned long long den = 1;
    for (auto z : sizes) den = std::lcm(den, static_cast<unsigned long long>(z));
    unsigned long long total = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k) total += per[k] * (den / sizes[k]);
    if (total > den) return false;
  }
  return true;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

using Sizes = std::vector<std::size_t>;

}  // namespace

TEST_CASE("posets from algebras") {
  auto sq = poset_from_algebra(m_power(2, 2));
  CHECK(sq.level_sizes() == Sizes{1, 2});
  CHECK(sq.edge_count() == 2);
  CHECK(sq.label(sq.level(0)[0]) == "1");

  MonomialIdeal two(2, {Monomial({5, 0}), Monomial({0, 5}), Monomial({3, 3})});
  auto f = poset_from_algebra(two);
  CHECK(f.level_sizes() == Sizes{1, 2, 3, 4, 5, 4, 2});
  CHECK(poset_from_algebra(aci_ideal({2, 2, 2, 1, 1, 0})).level_sizes() == Sizes{1, 3, 2});

  // Edges are exactly divisibility in consecutive degrees.
  auto p = poset_from_algebra(aci_ideal({3, 3, 2, 1, 1, 1}));
  QuotientBasis b(aci_ideal({3, 3, 2, 1, 1, 1}));
  std::size_t expected = 0;
  for (unsigned k = 1; k <= b.top_degree(); ++k)
    for (const auto& lo : b.level(k - 1))
      for (const auto& hi : b.level(k)) expected += lo.divides(hi);
  CHECK(p.edge_count() == expected);

  CHECK_THROWS_AS(poset_from_algebra(MonomialIdeal(2, {Monomial({3, 0})})), NotArtinianError);
}

TEST_CASE("divisor lattices, chains, products") {
  CHECK(divisor_lattice({1}).level_sizes() == Sizes{1, 1});
  auto d = divisor_lattice({3, 3});
  CHECK(d.level_sizes() == Sizes{1, 2, 3, 4, 3, 2, 1});
  CHECK(nmp_all(nmp_check(d)));
  CHECK(log_concave(d));
  CHECK_THROWS_AS(divisor_lattice({2, 0}), InputError);
  CHECK_THROWS_AS(divisor_lattice({}), InputError);

  auto grid = product(chain(2), chain(2));
  CHECK(grid.level_sizes() == Sizes{1, 2, 1});
  CHECK(grid.edge_count() == 4);
  CHECK(grid.find("(0,1)").has_value());

  MonomialIdeal two(2, {Monomial({5, 0}), Monomial({0, 5}), Monomial({3, 3})});
  auto prod = product(poset_from_algebra(two), d);
  CHECK(prod.level_sizes() == poset_from_algebra(thm31_ideal(5, 4)).level_sizes());
  CHECK(prod.edge_count() == poset_from_algebra(thm31_ideal(5, 4)).edge_count());
}

TEST_CASE("max antichain examples") {
  CHECK(max_antichain(chain(5)).size == 1);
  auto a = max_antichain(antichain_poset(7));
  CHECK(a.size == 7);
  CHECK(a.witness.size() == 7);

  auto aci = aci_ideal({9, 9, 9, 3, 3, 3});
  QuotientBasis b(aci);
  auto r = max_antichain(poset_from_algebra(aci));
  CHECK(r.size == b.dim(10));
  CHECK(b.dim(10) == b.dim(11));
  CHECK(r.size == b.max_dim());
}

TEST_CASE("matchings") {
  auto p = poset_from_algebra(aci_ideal({2, 2, 2, 1, 1, 0}));
  auto m = full_matching_at(p, 1);
  CHECK(m.full);
  CHECK(m.pairs.size() == 1);
  auto m2 = full_matching_at(p, 2);
  CHECK(m2.full);
  CHECK(m2.pairs.size() == 2);
  CHECK_THROWS_AS(full_matching_at(p, 0), InputError);
  CHECK_THROWS_AS(full_matching_at(p, 3), InputError);

  // Hall violation: two lower elements share a single upper cover.
  RankedPoset h;
  auto lo = h.add_level({"a", "b"});
  auto hi = h.add_level({"u", "v"});
  h.add_edge(lo[0], hi[0]);
  h.add_edge(lo[1], hi[0]);
  auto hm = full_matching_at(h, 1);
  CHECK_FALSE(hm.full);
  CHECK(hm.pairs.size() == 1);

  auto n = nmp_check(h);
  REQUIRE(n.size() == 1);
  CHECK_FALSE(n[0].passes);
  REQUIRE_FALSE(n[0].violating_subset.empty());
  auto shadow = nabla(h, n[0].violating_subset);
  CHECK(shadow.size() * 2 < n[0].violating_subset.size() * 2);
  CHECK_FALSE(lym_brute(h));

  CHECK_THROWS_AS(h.add_edge(lo[0], lo[1]), InputError);
  CHECK_THROWS_AS(nabla(h, {lo[0], hi[0]}), InputError);
}

TEST_CASE("sequences") {
  CHECK(log_concave(Sizes{1, 2, 3, 4, 5, 4, 2}));
  CHECK(log_concave(Sizes{1, 3, 2}));
  CHECK_FALSE(log_concave(Sizes{1, 1, 2}));
  CHECK_FALSE(log_concave(Sizes{2, 1, 2}));
  CHECK(is_unimodal(Sizes{1, 3, 3, 2}));
  CHECK_FALSE(is_unimodal(Sizes{2, 1, 2}));
}

TEST_CASE("dump round trip") {
  auto p = poset_from_algebra(aci_ideal({3, 3, 2, 1, 1, 1}));
  std::stringstream ss;
  write_poset_dump(ss, p);
  auto q = read_poset_dump(ss);
  CHECK(q.level_sizes() == p.level_sizes());
  CHECK(q.edge_count() == p.edge_count());
  std::stringstream again;
  write_poset_dump(again, q);
  std::stringstream first;
  write_poset_dump(first, p);
  CHECK(again.str() == first.str());

  std::stringstream bad("0\ta\n1\tb\n\na\tzz\n");
  CHECK_THROWS_AS(read_poset_dump(bad), InputError);
  std::stringstream dup("0\ta\n0\ta\n");
  CHECK_THROWS_AS(read_poset_dump(dup), InputError);
}

TEST_CASE("property: max antichain matches exhaustive search") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    auto p = random_poset(rng, 5, 4, 20 + t % 50);
    if (p.size() > 16) continue;
    auto r = max_antichain(p);
    CHECK(r.size == brute_width(p));
    CHECK(r.witness.size() == r.size);
    CHECK(is_antichain(leq_oracle(p), r.witness));
    CHECK(r.size >= p.max_level_size());
  }
}

TEST_CASE("property: nmp flow matches subset enumeration; lym iff nmp") {
  std::mt19937 rng(23);
  for (int t = 0; t < 80; ++t) {
    auto p = random_poset(rng, 4, 5, 25 + t % 60);
    auto levels = nmp_check(p);
    for (const auto& l : levels) {
      CHECK(l.passes == brute_nmp_level(p, l.level));
      if (!l.passes) {
        auto v = l.violating_subset;
        REQUIRE_FALSE(v.empty());
        auto s = nabla(p, v);
        CHECK(v.size() * p.level(l.level + 1).size() > s.size() * p.level(l.level).size());
      }
    }
    if (p.size() <= 16) {
      bool lym = lym_brute(p);
      CHECK(lym == brute_lym(p));
      CHECK(lym == nmp_all(levels));
      if (lym) CHECK(max_antichain(p).size == p.max_level_size());
    }
  }
  CHECK_THROWS_AS(lym_brute(antichain_poset(kMaxBruteForceSize + 1)), SizeError);
}

TEST_CASE("property: products of NMP log-concave posets stay NMP log-concave") {
  std::mt19937 rng(31);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 25; ++t) {
    auto a = random_poset(rng, 3, 3, 70);
    auto b = random_poset(rng, 3, 3, 70);
    if (!nmp_all(nmp_check(a)) || !log_concave(a) || !nmp_all(nmp_check(b)) || !log_concave(b)) continue;
    ++checked;
    auto pq = product(a, b);
    CHECK(pq.level_sizes() == convolve(a.level_sizes(), b.level_sizes()));
    CHECK(nmp_all(nmp_check(pq)));
    CHECK(log_concave(pq));
  }
  CHECK(checked >= 10);
}

TEST_CASE("property: algebra posets with full matchings and unimodal H are Sperner") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<Exponent> pw(1, 4), ex(0, 2);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + t % 2;
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(Monomial::variable(n, i, pw(rng)));
    std::vector<Exponent> e(n);
    for (auto& x : e) x = ex(rng);
    if (std::any_of(e.begin(), e.end(), [](Exponent x) { return x > 0; })) gens.push_back(Monomial(e));
    auto p = poset_from_algebra(MonomialIdeal(n, gens));
    bool all_full = true;
    for (std::size_t k = 1; k <= p.top_rank(); ++k) all_full = all_full && full_matching_at(p, k).full;
    auto width = max_antichain(p).size;
    if (all_full && is_unimodal(p.level_sizes())) CHECK(width == p.max_level_size());
    if (p.size() <= kMaxBruteForceSize && lym_brute(p)) CHECK(width == p.max_level_size());
    if (p.size() <= 16) CHECK(width == brute_width(p));
  }
}
