#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "delcode/bitstring.hpp"
#include "delcode/counting.hpp"
#include "delcode/errors.hpp"

namespace delcode {

/// Deletion count, string length and optional Hamming-weight layer.
struct GraphParams {
  int s = 0;
  int n = 0;
  std::optional<int> layer;

  friend bool operator==(const GraphParams &, const GraphParams &) = default;

  std::string str() const {
    std::string out = "s=" + std::to_string(s) + " n=" + std::to_string(n);
    if (layer)
      out += " k=" + std::to_string(*layer);
    return out;
  }
};

inline constexpr int kMaxFullGraphLength = 16;
inline constexpr int kMaxLayerGraphLength = 22;

/// L_{s,n} or its weight-k layer L_{s,n,k}. Vertices are kept in numeric
/// order; adjacency is stored as sorted neighbor lists (CSR).
class ConfusabilityGraph {
public:
  using Index = std::uint32_t;

  ConfusabilityGraph() = default;

  /// Builds a graph from explicit neighbor lists. Lists are sorted here;
  /// symmetry and irreflexivity are checked.
  static ConfusabilityGraph from_adjacency(GraphParams params, std::vector<BitString> vertices,
                                           std::vector<std::vector<Index>> adjacency) {
    detail::require(vertices.size() == adjacency.size(), "one neighbor list per vertex required");
    detail::require(std::is_sorted(vertices.begin(), vertices.end()) &&
                        std::adjacent_find(vertices.begin(), vertices.end()) == vertices.end(),
                    "vertices must be strictly increasing");
    ConfusabilityGraph g;
    g.params_ = std::move(params);
    g.vertices_ = std::move(vertices);
    g.offsets_.reserve(g.vertices_.size() + 1);
    for (Index v = 0; v < adjacency.size(); ++v) {
      auto &list = adjacency[v];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      for (Index u : list) {
        detail::require(u < g.vertices_.size() && u != v, "neighbor index out of range or self loop");
      }
      g.targets_.insert(g.targets_.end(), list.begin(), list.end());
      g.offsets_.push_back(g.targets_.size());
    }
    for (Index v = 0; v < g.size(); ++v)
      for (Index u : g.neighbors(v))
        detail::require(g.adjacent(u, v), "adjacency is not symmetric");
    return g;
  }

  const GraphParams &params() const { return params_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<BitString> &vertices() const { return vertices_; }
  const BitString &vertex(Index v) const { return vertices_[v]; }

  std::span<const Index> neighbors(Index v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Index v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  bool adjacent(Index u, Index v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::optional<Index> index_of(const BitString &x) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
    if (it == vertices_.end() || *it != x)
      return std::nullopt;
    return static_cast<Index>(it - vertices_.begin());
  }

  Index require_index(const BitString &x) const {
    auto i = index_of(x);
    if (!i)
      throw ParameterError(x.str() + " is not a vertex of L(" + params_.str() + ")");
    return *i;
  }

private:
  GraphParams params_;
  std::vector<BitString> vertices_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Index> targets_;
};

/// Builds L_{s,n} (or the layer L_{s,n,k}). The neighborhood of x is the
/// union of I_s(z) over z in D_s(x), which is the shared-substring form of
/// d_L(x, y) / 2 <= s.
inline ConfusabilityGraph build_graph(int s, int n, std::optional<int> layer = std::nullopt) {
  detail::require(n >= 0 && s >= 0 && s <= n, "build_graph needs 0 <= s <= n");
  if (layer) {
    detail::require(*layer >= 0 && *layer <= n, "layer weight must lie in [0, n]");
    detail::require<CapacityError>(n <= kMaxLayerGraphLength,
                                   "layer graphs are limited to n <= " + std::to_string(kMaxLayerGraphLength));
  } else {
    detail::require<CapacityError>(n <= kMaxFullGraphLength,
                                   "full graphs are limited to n <= " + std::to_string(kMaxFullGraphLength));
  }
  GraphParams params{s, n, layer};
  std::vector<BitString> vertices = layer ? all_strings(n, *layer) : all_strings(n);

  // Full graphs index by pattern directly.
  auto lookup = [&](const BitString &y) -> ConfusabilityGraph::Index {
    if (!layer)
      return static_cast<ConfusabilityGraph::Index>(y.pattern());
    return static_cast<ConfusabilityGraph::Index>(std::lower_bound(vertices.begin(), vertices.end(), y) -
                                                  vertices.begin());
  };

  std::vector<std::vector<ConfusabilityGraph::Index>> adjacency(vertices.size());
  for (ConfusabilityGraph::Index v = 0; v < vertices.size(); ++v) {
    auto &list = adjacency[v];
    for (const auto &z : delete_all(vertices[v], s)) {
      if (layer) {
        const int r = *layer - z.weight();
        if (r < 0 || r > s)
          continue;
        for (const auto &y : insert_all_weighted(z, s, r))
          list.push_back(lookup(y));
      } else {
        for (const auto &y : insert_all(z, s))
          list.push_back(lookup(y));
      }
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::erase(list, v);
  }
  return ConfusabilityGraph::from_adjacency(std::move(params), std::move(vertices), std::move(adjacency));
}

struct DegreeStats {
  std::uint64_t max_degree = 0;
  Rational average_degree = 0; ///< 2|E| / |V|, exact.
  std::uint64_t edge_count = 0;
};

inline DegreeStats degree_stats(const ConfusabilityGraph &g) {
  DegreeStats st;
  for (ConfusabilityGraph::Index v = 0; v < g.size(); ++v)
    st.max_degree = std::max<std::uint64_t>(st.max_degree, g.degree(v));
  st.edge_count = g.edge_count();
  if (g.size() > 0)
    st.average_degree = Rational(Natural(2 * st.edge_count), Natural(g.size()));
  return st;
}

/// (2 / C(n,k)) sum_r C(n-s, k-r) C(I_{(s,r),(n,k)}, 2): an upper bound on the
/// average degree of L_{s,n,k} obtained by counting every substring clique.
inline Rational layer_avg_degree_bound(int s, int n, int k) {
  detail::require(0 <= s && s <= n && 0 <= k && k <= n, "layer_avg_degree_bound needs 0 <= s <= n, 0 <= k <= n");
  Natural pairs = 0;
  for (int r = 0; r <= s; ++r) {
    if (k - r < 0 || k - r > n - s)
      continue;
    const Natural clique = detail::weighted_insertion_count_unchecked(s, r, n, k);
    pairs += binomial(n - s, k - r) * (clique * (clique - 1) / 2);
  }
  return Rational(2 * pairs, binomial(n, k));
}

/// Minimum-degree greedy independent set. Ties go to the smallest vertex.
inline std::vector<BitString> greedy_mis(const ConfusabilityGraph &g) {
  using Index = ConfusabilityGraph::Index;
  std::vector<std::size_t> deg(g.size());
  std::vector<bool> alive(g.size(), true);
  std::set<std::pair<std::size_t, Index>> queue;
  for (Index v = 0; v < g.size(); ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  auto remove = [&](Index v) {
    alive[v] = false;
    queue.erase({deg[v], v});
  };
  std::vector<BitString> chosen;
  while (!queue.empty()) {
    const Index v = queue.begin()->second;
    chosen.push_back(g.vertex(v));
    remove(v);
    std::vector<Index> dropped;
    for (Index u : g.neighbors(v))
      if (alive[u]) {
        remove(u);
        dropped.push_back(u);
      }
    for (Index u : dropped)
      for (Index w : g.neighbors(u))
        if (alive[w]) {
          queue.erase({deg[w], w});
          queue.emplace(--deg[w], w);
        }
  }
  canonicalize(chosen);
  return chosen;
}

inline bool verify_independent(const ConfusabilityGraph &g, const std::vector<BitString> &vs) {
  std::vector<ConfusabilityGraph::Index> idx;
  idx.reserve(vs.size());
  for (const auto &x : vs)
    idx.push_back(g.require_index(x));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (g.adjacent(idx[i], idx[j]))
        return false;
  return true;
}

/// A total map from a graph's vertices to color indices in [0, num_colors).
struct Coloring {
  GraphParams params;
  std::uint32_t num_colors = 0;
  std::unordered_map<BitString, std::uint32_t> assignment;

  std::uint32_t color_of(const BitString &x) const {
    auto it = assignment.find(x);
    if (it == assignment.end())
      throw ParameterError("coloring has no color for " + x.str());
    return it->second;
  }
};

/// True iff every vertex is colored and no edge is monochromatic.
inline bool verify_coloring(const ConfusabilityGraph &g, const Coloring &coloring) {
  std::vector<std::uint32_t> color(g.size());
  for (ConfusabilityGraph::Index v = 0; v < g.size(); ++v)
    color[v] = coloring.color_of(g.vertex(v));
  for (ConfusabilityGraph::Index v = 0; v < g.size(); ++v)
    for (auto u : g.neighbors(v))
      if (color[u] == color[v])
        return false;
  return true;
}

/// True iff every pair of `vs` has d_L / 2 <= s, i.e. `vs` is a clique of L_{s,n}.
inline bool is_clique(const std::vector<BitString> &vs, int s) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || deletion_distance(vs[i], vs[j]) > 2 * s)
        return false;
  return true;
}

/// True iff `cycle` (length >= 3) is a chordless cycle of L_{s,n} in the
/// order given: consecutive entries adjacent, all other pairs not.
inline bool is_induced_cycle(const std::vector<BitString> &cycle, int s) {
  const std::size_t len = cycle.size();
  if (len < 3)
    return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      const bool adjacent = cycle[i] != cycle[j] && deletion_distance(cycle[i], cycle[j]) <= 2 * s;
      if (consecutive != adjacent || cycle[i] == cycle[j])
        return false;
    }
  return true;
}

// Witnesses --------------------------------------------------------------

enum class CliqueKind { substring, layer_substring, segment };

inline const char *to_string(CliqueKind k) {
  switch (k) {
  case CliqueKind::substring:
    return "substring";
  case CliqueKind::layer_substring:
    return "layer-substring";
  case CliqueKind::segment:
    return "segment";
  }
  return "?";
}

/// Run-pattern parameters of a segment clique: `segments` blocks of
/// `segment_length` alternating symbols, of which `lengthened` gain one
/// doubled run (type B) and `shortened` lose two symbols and double one run
/// (type C).
struct SegmentParams {
  int segment_length = 0;
  int segments = 0;
  int lengthened = 0;
  int shortened = 0;

  friend bool operator==(const SegmentParams &, const SegmentParams &) = default;

  int center_length() const { return segments * (segment_length + 3) - 3; }
  int string_length() const { return center_length() + lengthened - shortened; }
  int deletions() const { return lengthened + shortened; }

  /// multinomial(k; b, c, k-b-c) l^b (l-2)^c
  Natural clique_size() const {
    Natural size = multinomial({lengthened, shortened, segments - lengthened - shortened});
    for (int i = 0; i < lengthened; ++i)
      size *= segment_length;
    for (int i = 0; i < shortened; ++i)
      size *= segment_length - 2;
    return size;
  }
};

struct CliqueWitness {
  CliqueKind kind = CliqueKind::substring;
  GraphParams target;                   ///< graph the vertices form a clique in
  BitString seed;                       ///< common substring z, or the segment center x
  std::optional<SegmentParams> segment; ///< set for kind == segment
  std::vector<BitString> vertices;      ///< sorted
};

/// I_s(z), or its weight-k part: a clique in L_{s,|z|+s} (resp. L_{s,|z|+s,k}).
inline CliqueWitness substring_clique(const BitString &z, int s, std::optional<int> layer = std::nullopt) {
  detail::require(s >= 0 && z.length() + s <= BitString::kMaxLength, "substring_clique needs |z| + s <= 63");
  CliqueWitness w;
  w.seed = z;
  w.target = GraphParams{s, z.length() + s, layer};
  if (layer) {
    const int r = *layer - z.weight();
    detail::require(r >= 0 && r <= s, "layer " + std::to_string(*layer) + " is not reachable from weight " +
                                          std::to_string(z.weight()) + " with " + std::to_string(s) +
                                          " insertions");
    w.kind = CliqueKind::layer_substring;
    w.vertices = insert_all_weighted(z, s, r);
  } else {
    w.kind = CliqueKind::substring;
    w.vertices = insert_all(z, s);
  }
  return w;
}

namespace detail {

// Alternating run pattern: each entry is a run length.
inline BitString runs_to_string(const std::vector<int> &runs, bool first) {
  BitString out;
  bool bit = first;
  for (int len : runs) {
    for (int i = 0; i < len; ++i)
      out = out.push_back(bit);
    bit = !bit;
  }
  return out;
}

// Run-length variants of one segment. Type A: l unit runs. Type B: l runs,
// one doubled. Type C: l - 2 runs, one doubled.
inline std::vector<std::vector<int>> segment_variants(char type, int l) {
  std::vector<std::vector<int>> out;
  if (type == 'A') {
    out.emplace_back(l, 1);
  } else {
    const int runs = type == 'B' ? l : l - 2;
    for (int d = 0; d < runs; ++d) {
      std::vector<int> r(static_cast<std::size_t>(runs), 1);
      r[static_cast<std::size_t>(d)] = 2;
      out.push_back(std::move(r));
    }
  }
  return out;
}

} // namespace detail

/// Segment clique: the center x made of `segments` alternating blocks of
/// length l separated by runs of three, plus every string obtained by turning
/// `lengthened` blocks into type B and `shortened` blocks into type C. All
/// strings start with 0. Every member is within deletion distance b + c of x,
/// so the members form a clique in L_{b+c, m+b-c}.
inline CliqueWitness segment_clique(const SegmentParams &p) {
  const int l = p.segment_length, k = p.segments, b = p.lengthened, c = p.shortened;
  detail::require(l >= 4, "segment_clique needs segment length l >= 4");
  detail::require(b >= 0 && c >= 0 && k >= 1 && b + c <= k, "segment_clique needs b, c >= 0 and b + c <= k");
  detail::require<CapacityError>(p.center_length() + b <= BitString::kMaxLength,
                                 "segment clique strings would exceed 63 symbols");
  const Natural expected = p.clique_size();
  detail::require<CapacityError>(expected <= 2'000'000, "segment clique larger than 2e6 vertices");

  // Every type sequence with b B's and c C's, in lexicographic order.
  std::vector<char> types(static_cast<std::size_t>(k), 'A');
  std::fill(types.end() - b - c, types.end() - c, 'B');
  std::fill(types.end() - c, types.end(), 'C');

  std::vector<BitString> members;
  auto build = [&](const std::vector<char> &seq, auto &&emit) {
    std::vector<std::vector<std::vector<int>>> choices;
    for (char t : seq)
      choices.push_back(detail::segment_variants(t, l));
    std::vector<std::size_t> pick(seq.size(), 0);
    while (true) {
      std::vector<int> runs;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        const auto &seg = choices[i][pick[i]];
        if (i > 0)
          runs.push_back(3); // separator
        runs.insert(runs.end(), seg.begin(), seg.end());
      }
      emit(detail::runs_to_string(runs, false));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size())
        pick[i++] = 0;
      if (i == pick.size())
        break;
    }
  };

  CliqueWitness w;
  w.kind = CliqueKind::segment;
  w.segment = p;
  w.target = GraphParams{p.deletions(), p.string_length(), std::nullopt};
  build(std::vector<char>(static_cast<std::size_t>(k), 'A'), [&](BitString x) { w.seed = x; });
  do {
    build(types, [&](BitString y) { members.push_back(y); });
  } while (std::next_permutation(types.begin(), types.end()));
  canonicalize(members);
  w.vertices = std::move(members);
  return w;
}

/// Chordless cycle of `cycle_len` vertices in L_{s,(cycle_len-2)s+1}:
/// x_i = 0^{si} 1^{s+1} 0^{s(len-3-i)} for each i, then 0^{(len-2)s} 1, then
/// 1 0^{(len-2)s}, in cycle order.
inline std::vector<BitString> induced_cycle(int s, int cycle_len) {
  detail::require(s >= 1 && cycle_len >= 3, "induced_cycle needs s >= 1 and cycle_len >= 3");
  const int n = (cycle_len - 2) * s + 1;
  detail::require<CapacityError>(n <= BitString::kMaxLength, "cycle strings would exceed 63 symbols");
  std::vector<BitString> out;
  for (int i = 0; i <= cycle_len - 3; ++i)
    out.push_back(BitString::zeros(s * i) + BitString::ones(s + 1) + BitString::zeros(s * (cycle_len - 3 - i)));
  out.push_back(BitString::zeros(n - 1) + BitString::ones(1));
  out.push_back(BitString::ones(1) + BitString::zeros(n - 1));
  return out;
}

/// Five strings of length n inducing a chordless 5-cycle in L_{s,n}: the
/// 5-cycle of L_{s,3s+1} with every string left-padded by zeros.
inline std::vector<BitString> imperfectness_witness(int s, int n) {
  detail::require(s >= 1, "imperfectness_witness needs s >= 1");
  detail::require(n >= 3 * s + 1, "imperfectness_witness needs n >= 3s + 1");
  detail::require<CapacityError>(n <= BitString::kMaxLength, "witness strings would exceed 63 symbols");
  auto cycle = induced_cycle(s, 5);
  const BitString pad = BitString::zeros(n - (3 * s + 1));
  for (auto &x : cycle)
    x = pad + x;
  return cycle;
}

} // namespace delcode
