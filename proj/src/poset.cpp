#include "reeslab/poset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "reeslab/errors.hpp"

namespace reeslab {

// ---------------------------------------------------------------------------
// RankedPoset

std::vector<ElementId> RankedPoset::add_level(std::vector<std::string> labels) {
  std::vector<ElementId> ids;
  ids.reserve(labels.size());
  for (auto& l : labels) {
    ids.push_back(labels_.size());
    labels_.push_back(std::move(l));
    rank_.push_back(levels_.size());
    up_.emplace_back();
    down_.emplace_back();
  }
  levels_.push_back(ids);
  return ids;
}

void RankedPoset::add_edge(ElementId a, ElementId b) {
  if (a >= size() || b >= size()) throw InputError("poset edge endpoint out of range");
  if (rank_[b] != rank_[a] + 1) throw InputError("poset edges must join consecutive ranks");
  if (std::find(up_[a].begin(), up_[a].end(), b) != up_[a].end()) return;
  up_[a].push_back(b);
  down_[b].push_back(a);
}

std::vector<std::size_t> RankedPoset::level_sizes() const {
  std::vector<std::size_t> s;
  s.reserve(levels_.size());
  for (const auto& l : levels_) s.push_back(l.size());
  return s;
}

std::size_t RankedPoset::max_level_size() const {
  std::size_t m = 0;
  for (const auto& l : levels_) m = std::max(m, l.size());
  return m;
}

std::optional<ElementId> RankedPoset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<ElementId>(it - labels_.begin());
}

std::size_t RankedPoset::edge_count() const {
  std::size_t e = 0;
  for (const auto& u : up_) e += u.size();
  return e;
}

std::vector<std::vector<bool>> RankedPoset::strict_up_closure() const {
  std::vector<std::vector<bool>> above(size(), std::vector<bool>(size(), false));
  for (std::size_t k = levels_.size(); k-- > 0;) {
    for (ElementId a : levels_[k]) {
      for (ElementId b : up_[a]) {
        above[a][b] = true;
        for (std::size_t x = 0; x < size(); ++x)
          if (above[b][x]) above[a][x] = true;
      }
    }
  }
  return above;
}

namespace detail {

std::vector<unsigned long> comparability_masks(const RankedPoset& p) {
  if (p.size() > kMaxBruteForceSize)
    throw SizeError("exhaustive enumeration limited to " + std::to_string(kMaxBruteForceSize) + " elements, got " +
                    std::to_string(p.size()));
  auto above = p.strict_up_closure();
  std::vector<unsigned long> mask(p.size(), 0);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (above[a][b]) {
        mask[a] |= 1ul << b;
        mask[b] |= 1ul << a;
      }
  return mask;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors

RankedPoset poset_from_algebra(const MonomialIdeal& ideal) {
  QuotientBasis basis(ideal);
  RankedPoset p;
  std::vector<std::vector<ElementId>> ids;
  for (unsigned k = 0; k < basis.top_degree(); ++k) {
    std::vector<std::string> labels;
    for (const auto& m : basis.level(k)) labels.push_back(m.to_string());
    ids.push_back(p.add_level(std::move(labels)));
  }
  for (unsigned k = 0; k + 1 < basis.top_degree(); ++k) {
    auto lower = basis.level(k);
    for (std::size_t i = 0; i < lower.size(); ++i)
      for (std::size_t v = 0; v < basis.nvars(); ++v)
        if (auto j = basis.index_of(lower[i].times_variable(v))) p.add_edge(ids[k][i], ids[k + 1][*j]);
  }
  return p;
}

RankedPoset divisor_lattice(const std::vector<Exponent>& exponents) {
  if (exponents.empty()) throw InputError("divisor_lattice needs at least one exponent");
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 1) throw InputError("divisor_lattice exponents must be >= 1");
    gens.push_back(Monomial::variable(exponents.size(), i, exponents[i] + 1));
  }
  return poset_from_algebra(MonomialIdeal(exponents.size(), std::move(gens)));
}

RankedPoset chain(std::size_t length) {
  RankedPoset p;
  std::optional<ElementId> prev;
  for (std::size_t i = 0; i < length; ++i) {
    ElementId e = p.add_level({std::to_string(i)}).front();
    if (prev) p.add_edge(*prev, e);
    prev = e;
  }
  return p;
}

RankedPoset antichain_poset(std::size_t count) {
  RankedPoset p;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < count; ++i) labels.push_back("a" + std::to_string(i));
  if (count) p.add_level(std::move(labels));
  return p;
}

RankedPoset product(const RankedPoset& p, const RankedPoset& q) {
  RankedPoset out;
  if (p.size() == 0 || q.size() == 0) return out;
  const std::size_t top = p.top_rank() + q.top_rank();
  std::vector<ElementId> id_of(p.size() * q.size());
  for (std::size_t r = 0; r <= top; ++r) {
    std::vector<std::pair<ElementId, ElementId>> members;
    for (std::size_t i = 0; i <= std::min(r, p.top_rank()); ++i) {
      if (r - i > q.top_rank()) continue;
      for (ElementId a : p.level(i))
        for (ElementId b : q.level(r - i)) members.emplace_back(a, b);
    }
    std::sort(members.begin(), members.end());
    std::vector<std::string> labels;
    for (auto [a, b] : members) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
    auto ids = out.add_level(std::move(labels));
    for (std::size_t i = 0; i < members.size(); ++i) id_of[members[i].first * q.size() + members[i].second] = ids[i];
  }
  for (ElementId a = 0; a < p.size(); ++a)
    for (ElementId b = 0; b < q.size(); ++b) {
      ElementId from = id_of[a * q.size() + b];
      for (ElementId a2 : p.up(a)) out.add_edge(from, id_of[a2 * q.size() + b]);
      for (ElementId b2 : q.up(b)) out.add_edge(from, id_of[a * q.size() + b2]);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Bipartite matching

namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(std::size_t left, std::size_t right)
      : adj_(left), match_left_(left, kNone), match_right_(right, kNone), dist_(left) {}

  void add_edge(std::size_t u, std::size_t v) { adj_[u].push_back(v); }

  std::size_t solve() {
    std::size_t size = 0;
    while (bfs())
      for (std::size_t u = 0; u < adj_.size(); ++u)
        if (match_left_[u] == kNone && dfs(u)) ++size;
    return size;
  }

  std::size_t match_of_left(std::size_t u) const { return match_left_[u]; }
  std::size_t match_of_right(std::size_t v) const { return match_right_[v]; }
  const std::vector<std::size_t>& neighbours(std::size_t u) const { return adj_[u]; }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      dist_[u] = match_left_[u] == kNone ? 0 : kNone;
      if (dist_[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj_[u]) {
        std::size_t w = match_right_[v];
        if (w == kNone) {
          found = true;
        } else if (dist_[w] == kNone) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      std::size_t w = match_right_[v];
      if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kNone;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_, match_right_, dist_;
};

}  // namespace

Matching full_matching_at(const RankedPoset& p, std::size_t k) {
  if (k < 1 || k > p.top_rank())
    throw InputError("matching level " + std::to_string(k) + " outside 1.." + std::to_string(p.top_rank()));
  const auto& lower = p.level(k - 1);
  const auto& upper = p.level(k);
  std::unordered_map<ElementId, std::size_t> upper_pos;
  for (std::size_t j = 0; j < upper.size(); ++j) upper_pos[upper[j]] = j;
  HopcroftKarp hk(lower.size(), upper.size());
  for (std::size_t i = 0; i < lower.size(); ++i)
    for (ElementId b : p.up(lower[i])) hk.add_edge(i, upper_pos.at(b));
  std::size_t size = hk.solve();
  Matching m;
  m.level = k;
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (hk.match_of_left(i) != HopcroftKarp::kNone) m.pairs.emplace_back(lower[i], upper[hk.match_of_left(i)]);
  m.full = size == std::min(lower.size(), upper.size());
  return m;
}

AntichainResult max_antichain(const RankedPoset& p) {
  const std::size_t n = p.size();
  auto above = p.strict_up_closure();
  HopcroftKarp hk(n, n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (above[a][b]) hk.add_edge(a, b);
  std::size_t matched = hk.solve();

  // Koenig: Z = vertices reachable from free left vertices by alternating paths.
  std::vector<bool> z_left(n, false), z_right(n, false);
  std::queue<std::size_t> q;
  for (std::size_t u = 0; u < n; ++u)
    if (hk.match_of_left(u) == HopcroftKarp::kNone) {
      z_left[u] = true;
      q.push(u);
    }
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t v : hk.neighbours(u)) {
      if (z_right[v]) continue;
      z_right[v] = true;
      std::size_t w = hk.match_of_right(v);
      if (w != HopcroftKarp::kNone && !z_left[w]) {
        z_left[w] = true;
        q.push(w);
      }
    }
  }
  AntichainResult out;
  out.size = n - matched;
  for (ElementId e = 0; e < n; ++e)
    if (z_left[e] && !z_right[e]) out.witness.push_back(e);
  if (out.witness.size() != out.size) throw std::logic_error("max_antichain: cover extraction size mismatch");
  for (std::size_t i = 0; i < out.witness.size(); ++i)
    for (std::size_t j = 0; j < out.witness.size(); ++j)
      if (above[out.witness[i]][out.witness[j]]) throw std::logic_error("max_antichain: witness not an antichain");
  return out;
}

std::vector<ElementId> nabla(const RankedPoset& p, const std::vector<ElementId>& v) {
  if (v.empty()) return {};
  const std::size_t k = p.rank_of(v.front());
  std::vector<bool> seen(p.size(), false);
  std::vector<ElementId> out;
  for (ElementId a : v) {
    if (p.rank_of(a) != k) throw InputError("nabla: subset spans more than one level");
    for (ElementId b : p.up(a))
      if (!seen[b]) {
        seen[b] = true;
        out.push_back(b);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Max-flow (Dinic: blocking flows along shortest augmenting paths)

namespace {

class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : graph_(nodes), level_(nodes), iter_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, long long cap) {
    graph_[from].push_back({to, cap, graph_[to].size()});
    graph_[to].push_back({from, 0, graph_[from].size() - 1});
  }

  long long solve(std::size_t s, std::size_t t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) flow += f;
    }
    return flow;
  }

  /// Nodes reachable from s in the residual graph (valid after solve).
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(graph_.size(), false);
    std::queue<std::size_t> q;
    seen[s] = true;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (const auto& e : graph_[u])
        if (e.cap > 0 && !seen[e.to]) {
          seen[e.to] = true;
          q.push(e.to);
        }
    }
    return seen;
  }

 private:
  struct Edge {
    std::size_t to;
    long long cap;
    std::size_t rev;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (const auto& e : graph_[u])
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          q.push(e.to);
        }
    }
    return level_[t] >= 0;
  }

  long long dfs(std::size_t u, std::size_t t, long long f) {
    if (u == t) return f;
    for (auto& i = iter_[u]; i < graph_[u].size(); ++i) {
      Edge& e = graph_[u][i];
      if (e.cap > 0 && level_[e.to] == level_[u] + 1) {
        long long d = dfs(e.to, t, std::min(f, e.cap));
        if (d > 0) {
          e.cap -= d;
          graph_[e.to][e.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace

std::vector<NmpLevel> nmp_check(const RankedPoset& p) {
  std::vector<NmpLevel> out;
  for (std::size_t k = 0; k + 1 < p.levels(); ++k) {
    const auto& lower = p.level(k);
    const auto& upper = p.level(k + 1);
    const long long nl = static_cast<long long>(lower.size()), nu = static_cast<long long>(upper.size());
    const std::size_t source = 0, sink = 1 + lower.size() + upper.size();
    std::unordered_map<ElementId, std::size_t> node;
    for (std::size_t i = 0; i < lower.size(); ++i) node[lower[i]] = 1 + i;
    for (std::size_t j = 0; j < upper.size(); ++j) node[upper[j]] = 1 + lower.size() + j;
    MaxFlow mf(sink + 1);
    const long long unbounded = nl * nu + 1;
    for (std::size_t i = 0; i < lower.size(); ++i) {
      mf.add_edge(source, 1 + i, nu);
      for (ElementId b : p.up(lower[i])) mf.add_edge(1 + i, node.at(b), unbounded);
    }
    for (std::size_t j = 0; j < upper.size(); ++j) mf.add_edge(1 + lower.size() + j, sink, nl);
    NmpLevel level;
    level.level = k;
    level.required = nl * nu;
    level.flow = mf.solve(source, sink);
    level.passes = level.flow == level.required;
    if (!level.passes) {
      auto side = mf.source_side(source);
      for (std::size_t i = 0; i < lower.size(); ++i)
        if (side[1 + i]) level.violating_subset.push_back(lower[i]);
    }
    out.push_back(std::move(level));
  }
  return out;
}

bool nmp_all(const std::vector<NmpLevel>& levels) {
  return std::all_of(levels.begin(), levels.end(), [](const NmpLevel& l) { return l.passes; });
}

bool lym_brute(const RankedPoset& p) {
  auto sizes = p.level_sizes();
  unsigned long long l = 1;
  for (auto s : sizes) l = std::lcm(l, static_cast<unsigned long long>(s));
  std::vector<unsigned long long> weight(p.size());
  for (ElementId e = 0; e < p.size(); ++e) weight[e] = l / sizes[p.rank_of(e)];
  bool ok = true;
  for_each_antichain(p, [&](unsigned long set) {
    unsigned long long total = 0;
    for (unsigned long s = set; s; s &= s - 1) total += weight[static_cast<std::size_t>(__builtin_ctzl(s))];
    if (total > l) ok = false;
  });
  return ok;
}

bool log_concave(const std::vector<std::size_t>& s) {
  auto at = [&](std::size_t i) -> unsigned long long { return i < s.size() ? s[i] : 0; };
  for (std::size_t i = 1; i < s.size(); ++i)
    if (at(i) * at(i) < at(i - 1) * at(i + 1)) return false;
  return true;
}

bool log_concave(const RankedPoset& p) { return log_concave(p.level_sizes()); }

bool is_unimodal(const std::vector<std::size_t>& seq) {
  std::size_t i = 0;
  while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
  while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
  return i + 1 >= seq.size();
}

// ---------------------------------------------------------------------------
// Dump format

void write_poset_dump(std::ostream& os, const RankedPoset& p) {
  for (std::size_t k = 0; k < p.levels(); ++k)
    for (ElementId e : p.level(k)) os << k << '\t' << p.label(e) << '\n';
  os << '\n';
  for (ElementId a = 0; a < p.size(); ++a)
    for (ElementId b : p.up(a)) os << p.label(a) << '\t' << p.label(b) << '\n';
}

RankedPoset read_poset_dump(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::vector<std::string>> by_rank;
  auto split = [&](const std::string& s) {
    auto tab = s.find('\t');
    if (tab == std::string::npos || s.find('\t', tab + 1) != std::string::npos)
      throw InputError("poset dump line " + std::to_string(lineno) + ": expected two tab-separated fields");
    return std::make_pair(s.substr(0, tab), s.substr(tab + 1));
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) break;
    auto [rank_text, label] = split(line);
    std::size_t rank = 0;
    try {
      std::size_t used = 0;
      rank = std::stoul(rank_text, &used);
      if (used != rank_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InputError("poset dump line " + std::to_string(lineno) + ": bad rank '" + rank_text + "'");
    }
    if (rank >= by_rank.size()) by_rank.resize(rank + 1);
    by_rank[rank].push_back(label);
  }
  RankedPoset p;
  std::unordered_map<std::string, ElementId> id;
  for (std::size_t k = 0; k < by_rank.size(); ++k) {
    if (by_rank[k].empty()) throw InputError("poset dump: rank " + std::to_string(k) + " is empty");
    auto ids = p.add_level(by_rank[k]);
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (!id.emplace(by_rank[k][i], ids[i]).second)
        throw InputError("poset dump: duplicate label '" + by_rank[k][i] + "'");
  }
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto [a, b] = split(line);
    auto ia = id.find(a), ib = id.find(b);
    if (ia == id.end() || ib == id.end())
      throw InputError("poset dump line " + std::to_string(lineno) + ": unknown label");
    p.add_edge(ia->second, ib->second);
  }
  return p;
}

}  // namespace reeslab
