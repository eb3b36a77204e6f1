#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "delcode/bitstring.hpp"
#include "delcode/counting.hpp"
#include "delcode/errors.hpp"
#include "delcode/graph.hpp"
#include "delcode/mis.hpp"

namespace delcode {

enum class Provenance { vt, layer, weight_partition, search, file };

inline const char *to_string(Provenance p) {
  switch (p) {
  case Provenance::vt:
    return "vt";
  case Provenance::layer:
    return "layer";
  case Provenance::weight_partition:
    return "weight-partition";
  case Provenance::search:
    return "search";
  case Provenance::file:
    return "file";
  }
  return "?";
}

inline Provenance parse_provenance(std::string_view text) {
  for (auto p : {Provenance::vt, Provenance::layer, Provenance::weight_partition, Provenance::search,
                 Provenance::file})
    if (text == to_string(p))
      return p;
  throw ParseError("unknown code kind '" + std::string(text) + "'");
}

/// Equal-length codewords claimed to correct `s` deletions.
struct Code {
  int n = 0;
  int s = 0;
  std::vector<BitString> words; ///< sorted, duplicate free
  Provenance provenance = Provenance::file;

  static Code make(int n, int s, std::vector<BitString> words, Provenance provenance) {
    detail::require(n >= 0 && n <= BitString::kMaxLength && s >= 0, "code needs 0 <= n <= 63 and s >= 0");
    for (const auto &w : words)
      detail::require(w.length() == n, "codeword " + w.str() + " does not have length " + std::to_string(n));
    canonicalize(words);
    return Code{n, s, std::move(words), provenance};
  }

  std::size_t size() const { return words.size(); }
  friend bool operator==(const Code &, const Code &) = default;
};

/// True iff every pair of codewords is at deletion distance greater than 2s.
inline bool verify_code(const Code &code) {
  const auto &w = code.words;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (deletion_distance(w[i], w[j]) <= 2 * code.s)
        return false;
  return true;
}

// VT colorings ------------------------------------------------------------

/// w(x) = sum_i (i + 1) x_i.
inline std::uint64_t vt_sum(const BitString &x) {
  std::uint64_t w = 0;
  for (int i = 0; i < x.length(); ++i)
    if (x[i])
      w += static_cast<std::uint64_t>(i + 1);
  return w;
}

/// VT weight: w(x) mod (n + 1).
inline int vt_weight(const BitString &x) {
  return static_cast<int>(vt_sum(x) % static_cast<std::uint64_t>(x.length() + 1));
}

/// Modified VT weight: w(x) mod (max(k, n - k) + 1) with k the weight of x.
inline int modified_vt_weight(const BitString &x) {
  const int k = x.weight();
  return static_cast<int>(vt_sum(x) % static_cast<std::uint64_t>(std::max(k, x.length() - k) + 1));
}

inline int layer_color_count(int n, int k) { return std::max(k, n - k) + 1; }

inline Code vt_code(int n, int residue) {
  detail::require(n >= 0, "vt_code needs n >= 0");
  detail::require(residue >= 0 && residue <= n, "VT residue must lie in [0, n]");
  std::vector<BitString> words;
  for (const auto &x : all_strings(n))
    if (vt_weight(x) == residue)
      words.push_back(x);
  return Code{n, 1, std::move(words), Provenance::vt};
}

/// Sizes of VT_a(n) for a = 0..n, counted position by position over the
/// residue of w(x) mod (n + 1).
inline std::vector<std::uint64_t> vt_class_sizes(int n) {
  detail::require(n >= 0 && n <= BitString::kMaxLength, "vt_class_sizes needs 0 <= n <= 63");
  const auto mod = static_cast<std::size_t>(n + 1);
  std::vector<std::uint64_t> sizes(mod, 0), next(mod);
  sizes[0] = 1;
  for (int i = 1; i <= n; ++i) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t r = 0; r < mod; ++r) {
      next[r] += sizes[r];
      next[(r + static_cast<std::size_t>(i)) % mod] += sizes[r];
    }
    sizes.swap(next);
  }
  return sizes;
}

inline Coloring vt_coloring(int n) {
  Coloring c{GraphParams{1, n, std::nullopt}, static_cast<std::uint32_t>(n + 1), {}};
  for (const auto &x : all_strings(n))
    c.assignment.emplace(x, static_cast<std::uint32_t>(vt_weight(x)));
  return c;
}

/// Modified VT coloring of the weight-k layer.
inline Coloring layer_coloring(int n, int k) {
  detail::require(k >= 0 && k <= n, "layer weight must lie in [0, n]");
  Coloring c{GraphParams{1, n, k}, static_cast<std::uint32_t>(layer_color_count(n, k)), {}};
  for (const auto &x : all_strings(n, k))
    c.assignment.emplace(x, static_cast<std::uint32_t>(modified_vt_weight(x)));
  return c;
}

/// Largest modified-VT color class of the weight-k layer; ties go to the
/// smallest color.
inline Code layer_code(int n, int k) {
  detail::require(n >= 0 && k >= 0 && k <= n, "layer_code needs 0 <= k <= n");
  const auto members = all_strings(n, k);
  std::vector<std::size_t> count(static_cast<std::size_t>(layer_color_count(n, k)), 0);
  for (const auto &x : members)
    ++count[static_cast<std::size_t>(modified_vt_weight(x))];
  const auto best = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<BitString> words;
  for (const auto &x : members)
    if (modified_vt_weight(x) == best)
      words.push_back(x);
  return Code{n, 1, std::move(words), Provenance::layer};
}

// Weight partitioning -----------------------------------------------------

/// Supplies an independent set of L_{s,n,k}; called once per selected layer.
using LayerSolver = std::function<std::vector<BitString>(int s, int n, int k)>;

/// Largest modified-VT color class; single deletions only.
inline LayerSolver coloring_layer_solver() {
  return [](int s, int n, int k) {
    detail::require(s == 1, "the coloring layer solver only handles s = 1");
    return layer_code(n, k).words;
  };
}

inline LayerSolver greedy_layer_solver() {
  return [](int s, int n, int k) { return greedy_mis(build_graph(s, n, k)); };
}

inline LayerSolver exact_layer_solver(std::uint64_t node_budget = kDefaultNodeBudget) {
  return [node_budget](int s, int n, int k) { return exact_mis(build_graph(s, n, k), node_budget); };
}

/// Union of per-layer independent sets over the weights k = a (mod s + 1).
/// Distinct selected layers differ in weight by at least s + 1, so no edge
/// joins them.
inline Code weight_partition_code(int n, int s, int residue, const LayerSolver &solver) {
  detail::require(n >= 0 && s >= 0 && s <= n, "weight_partition_code needs 0 <= s <= n");
  detail::require(residue >= 0 && residue <= s, "residue must lie in [0, s]");
  std::vector<BitString> words;
  for (int k = residue; k <= n; k += s + 1) {
    for (const auto &x : solver(s, n, k)) {
      detail::require(x.length() == n && x.weight() == k, "layer solver returned " + x.str() +
                                                              " outside layer k=" + std::to_string(k));
      words.push_back(x);
    }
  }
  return Code::make(n, s, std::move(words), Provenance::weight_partition);
}

/// k*: the integer closest to n/2 whose parity differs from a. When n is even
/// and both n/2 - 1 and n/2 + 1 qualify, n/2 - 1 is used (same binomial).
inline int opposite_parity_center(int n, int a) {
  detail::require(n >= 0 && (a == 0 || a == 1), "opposite_parity_center needs n >= 0 and a in {0, 1}");
  if (n % 2 == 1)
    return ((n - 1) / 2) % 2 != a ? (n - 1) / 2 : (n + 1) / 2;
  return (n / 2) % 2 != a ? n / 2 : n / 2 - 1;
}

/// (2^n - C(n, k*)) / (n + 1): guaranteed size of the single-deletion
/// weight-partition code built from largest modified-VT classes.
inline Rational single_deletion_size_floor(int n, int a) {
  const int kstar = opposite_parity_center(n, a);
  return Rational(pow2(static_cast<unsigned>(n)) - binomial(n, kstar), Natural(n + 1));
}

/// Proper coloring of every layer, used by two_stage_coloring for s > 1.
struct LayerColoringProvider {
  std::function<std::uint32_t(const BitString &)> color;
  std::uint32_t max_colors = 0; ///< every returned color is below this
};

/// x -> (weight(x) mod (s + 1), f_weight(x)(x)), flattened to one index.
inline Coloring two_stage_coloring(int n, int s, std::optional<LayerColoringProvider> provider = std::nullopt) {
  detail::require(n >= 0 && s >= 0 && s <= n, "two_stage_coloring needs 0 <= s <= n");
  if (!provider) {
    detail::require(s == 1, "no layer coloring available for s = " + std::to_string(s) +
                                "; supply a LayerColoringProvider");
    provider = LayerColoringProvider{[](const BitString &x) { return static_cast<std::uint32_t>(modified_vt_weight(x)); },
                                     static_cast<std::uint32_t>(n + 1)};
  }
  const std::uint32_t width = provider->max_colors;
  Coloring c{GraphParams{s, n, std::nullopt}, static_cast<std::uint32_t>(s + 1) * width, {}};
  for (const auto &x : all_strings(n)) {
    const std::uint32_t inner = provider->color(x);
    detail::require(inner < width, "layer coloring returned a color outside [0, max_colors)");
    c.assignment.emplace(x, static_cast<std::uint32_t>(x.weight() % (s + 1)) * width + inner);
  }
  return c;
}

// Bounds ------------------------------------------------------------------

/// 2^(n+s) / (I_{s,n}(I_{s,n} - 1) + 2^s): Turán applied to L_{s,n}.
inline Rational levenshtein_lower_bound(int n, int s) {
  const Natural i = insertion_count(s, n);
  return Rational(pow2(static_cast<unsigned>(n + s)), i * (i - 1) + pow2(static_cast<unsigned>(s)));
}

/// (1 / (s+1)) sum_k C(n, k) / (layer_avg_degree_bound(s, n, k) + 1): a size
/// the best residue of the weight-partition construction always reaches.
inline Rational constant_weight_guarantee(int n, int s) {
  detail::require(0 <= s && s <= n, "constant_weight_guarantee needs 0 <= s <= n");
  Rational total = 0;
  for (int k = 0; k <= n; ++k)
    total += Rational(binomial(n, k)) / (layer_avg_degree_bound(s, n, k) + 1);
  return total / (s + 1);
}

/// 2^(n+3s) / ((s+1) C(2s, s) C(n, s)^2), the large-n form of the guarantee.
/// Reported only; it is not a bound at finite n.
inline Rational constant_weight_asymptotic(int n, int s) {
  detail::require(0 <= s && s <= n, "constant_weight_asymptotic needs 0 <= s <= n");
  const Natural c = binomial(n, s);
  return Rational(pow2(static_cast<unsigned>(n + 3 * s)), Natural(s + 1) * binomial(2 * s, s) * c * c);
}

/// (s+1) C(2s, s) / 2^(2s): the factor the weight restriction costs.
inline Rational penalty_ratio(int s) {
  detail::require(s >= 0, "penalty_ratio needs s >= 0");
  return Rational(Natural(s + 1) * binomial(2 * s, s), pow2(static_cast<unsigned>(2 * s)));
}

// Chromatic certificates ----------------------------------------------------

class DegenerateLayerError : public ParameterError {
public:
  using ParameterError::ParameterError;
};

/// A proper coloring with `chi` colors together with a clique of `chi`
/// vertices; the pair pins the chromatic number.
struct ChromaticCertificate {
  Coloring coloring;
  CliqueWitness clique;
  int chi = 0;
};

/// Certificate for L_{1,n} (VT coloring, n + 1) or L_{1,n,k} (modified VT
/// coloring, max(k, n-k) + 1).
inline ChromaticCertificate chromatic_certificate(int n, std::optional<int> k = std::nullopt) {
  detail::require(n >= 1, "chromatic_certificate needs n >= 1");
  if (!k)
    return {vt_coloring(n), substring_clique(BitString::zeros(n - 1), 1), n + 1};
  detail::require(*k >= 0 && *k <= n, "layer weight must lie in [0, n]");
  if (*k == 0 || *k == n)
    throw DegenerateLayerError("layer k=" + std::to_string(*k) + " of L_{1," + std::to_string(n) +
                               "} is a single vertex; chi = 1");
  // Inserting a 0 into a weight-k string gives k + 1 superstrings, inserting
  // a 1 into a weight-(k-1) string gives n - k + 1.
  const int chi = layer_color_count(n, *k);
  const int base_weight = *k >= n - *k ? *k : *k - 1;
  const BitString z = BitString::ones(base_weight) + BitString::zeros(n - 1 - base_weight);
  return {layer_coloring(n, *k), substring_clique(z, 1, *k), chi};
}

/// Builds the target graph and checks both halves of the certificate.
inline bool verify_certificate(const ChromaticCertificate &cert) {
  const auto &p = cert.clique.target;
  if (!(cert.coloring.params == p))
    return false;
  const auto g = build_graph(p.s, p.n, p.layer);
  if (cert.coloring.num_colors != static_cast<std::uint32_t>(cert.chi) || !verify_coloring(g, cert.coloring))
    return false;
  for (const auto &[x, color] : cert.coloring.assignment)
    if (color >= cert.coloring.num_colors)
      return false;
  const auto &vs = cert.clique.vertices;
  if (vs.size() != static_cast<std::size_t>(cert.chi))
    return false;
  std::vector<ConfusabilityGraph::Index> idx;
  for (const auto &x : vs) {
    auto i = g.index_of(x);
    if (!i)
      return false;
    idx.push_back(*i);
  }
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (!g.adjacent(idx[a], idx[b]))
        return false;
  return true;
}

/// Largest segment clique living in L_{s,n}: lengthened + shortened = s and
/// string length n. Empty when no (l >= 4, k >= s) fits.
inline std::optional<SegmentParams> best_segment_clique(int s, int n) {
  std::optional<SegmentParams> best;
  Natural best_size = 0;
  for (int b = 0; b <= s; ++b) {
    const int c = s - b;
    const int m = n - b + c;
    for (int k = std::max(1, s); k <= m + 3; ++k) {
      if ((m + 3) % k != 0)
        continue;
      const int l = (m + 3) / k - 3;
      if (l < 4)
        continue;
      SegmentParams p{l, k, b, c};
      const Natural size = p.clique_size();
      if (size > best_size) {
        best_size = size;
        best = p;
      }
    }
  }
  return best;
}

/// max(I_{s,n}, best segment clique size): a certified lower bound on chi(L_{s,n}).
inline Natural chromatic_lower_bound(int s, int n) {
  detail::require(s >= 1 && s <= n, "chromatic_lower_bound needs 1 <= s <= n");
  Natural bound = insertion_count(s, n);
  if (auto seg = best_segment_clique(s, n))
    bound = std::max(bound, seg->clique_size());
  return bound;
}

} // namespace delcode
