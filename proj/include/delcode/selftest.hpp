#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "delcode/bitstring.hpp"
#include "delcode/codes.hpp"
#include "delcode/counting.hpp"
#include "delcode/graph.hpp"
#include "delcode/mis.hpp"

// Invariant checks across all modules, sized by a maximum string length.
// Each check returns an empty optional on success or a description of the
// first counterexample.
namespace delcode::selftest {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr int kMaxSelftestLength = 12;

namespace detail {

using Failure = std::optional<std::string>;

inline Failure metric(int max_n) {
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    const auto xs = all_strings(n);
    std::vector<int> d(xs.size() * xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j)
        d[i * xs.size() + j] = deletion_distance(xs[i], xs[j]);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (d[i * xs.size() + j] != d[j * xs.size() + i] || (d[i * xs.size() + j] == 0) != (i == j))
          return "symmetry/identity fails at " + xs[i].str() + "," + xs[j].str();
        for (std::size_t k = 0; k < xs.size(); ++k)
          if (d[i * xs.size() + k] > d[i * xs.size() + j] + d[j * xs.size() + k])
            return "triangle inequality fails at " + xs[i].str() + "," + xs[j].str() + "," + xs[k].str();
      }
  }
  return std::nullopt;
}

inline Failure weight_gap(int max_n) {
  for (int n = 1; n <= std::min(max_n, 8); ++n)
    for (const auto &x : all_strings(n))
      for (const auto &y : all_strings(n))
        if (deletion_distance(x, y) / 2 < std::abs(x.weight() - y.weight()))
          return "weight gap fails at " + x.str() + "," + y.str();
  return std::nullopt;
}

inline Failure deletion_ball(int max_n) {
  for (int s = 0; s <= 2; ++s)
    for (int n = s; n <= max_n; ++n) {
      const Natural bound = ::delcode::detail::binomial_prefix_sum(n - s, s);
      for (const auto &x : all_strings(n))
        if (Natural(delete_all(x, s).size()) > bound)
          return "|D_" + std::to_string(s) + "(" + x.str() + ")| exceeds I_{s,n-s}";
    }
  return std::nullopt;
}

inline Failure superstring_counts(int max_n) {
  for (int m = 0; m <= std::min(max_n, 7); ++m)
    for (const auto &x : all_strings(m))
      for (int s = 0; s <= 3; ++s) {
        if (Natural(insert_all(x, s).size()) != insertion_count(s, m + s))
          return "|I_s(" + x.str() + ")| differs from I_{s,n}";
        for (int r = 0; r <= s; ++r)
          if (Natural(insert_all_weighted(x, s, r).size()) != weighted_insertion_count(s, r, m + s, x.weight() + r))
            return "|I_(s,r)(" + x.str() + ")| differs from the weighted count";
      }
  return std::nullopt;
}

inline Failure bijection(int max_n) {
  for (int m = 0; m <= std::min(max_n, 6); ++m)
    for (const auto &x : all_strings(m))
      for (int s = 0; s <= 3; ++s) {
        std::vector<InsertionEncoding> seen;
        for (const auto &y : insert_all(x, s)) {
          const auto z = encode(x, y);
          if (decode(x, z) != y)
            return "decode(encode) differs for x=" + x.str() + " y=" + y.str();
          seen.push_back(z);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
          return "encode is not injective for x=" + x.str();
      }
  return std::nullopt;
}

inline Failure polynomial_bound(int) {
  for (int s = 0; s <= 6; ++s)
    for (int step = 0; step <= 100; ++step) {
      const double p = step / 100.0;
      const double a = f_s_value(s, p), b = f_s_value_symmetric(s, p);
      if (std::abs(a - b) > 1e-12 || a > f_s_bound(s) + 1e-12)
        return "f_s check fails at s=" + std::to_string(s) + " p=" + std::to_string(p);
    }
  return std::nullopt;
}

inline Failure degree_bounds(int max_n) {
  for (int s = 0; s <= 2; ++s)
    for (int n = s; n <= std::min(max_n, 10); ++n) {
      const auto g = build_graph(s, n);
      const auto st = degree_stats(g);
      const Natural i = insertion_count(s, n);
      if (Natural(st.max_degree) > ::delcode::detail::binomial_prefix_sum(n - s, s) * (i - 1) ||
          st.average_degree > Rational(i * (i - 1), pow2(static_cast<unsigned>(s))))
        return "degree bound fails for L(" + g.params().str() + ")";
      for (int k = 0; k <= n; ++k) {
        const auto layer = build_graph(s, n, k);
        const auto ls = degree_stats(layer);
        if (ls.average_degree > layer_avg_degree_bound(s, n, k))
          return "layer degree bound fails for L(" + layer.params().str() + ")";
        const auto greedy = greedy_mis(layer);
        if (!verify_independent(layer, greedy) ||
            Rational(Natural(greedy.size())) * (ls.average_degree + 1) < Rational(Natural(layer.size())))
          return "greedy Turán guarantee fails for L(" + layer.params().str() + ")";
      }
    }
  return std::nullopt;
}

inline Failure witnesses(int max_n) {
  for (int s = 1; 3 * s + 1 <= max_n; ++s)
    for (int n = 3 * s + 1; n <= max_n; ++n)
      if (!is_induced_cycle(imperfectness_witness(s, n), s))
        return "imperfectness witness fails for s=" + std::to_string(s) + " n=" + std::to_string(n);
  for (int len = 3; len <= 7; ++len)
    for (int s = 1; (len - 2) * s + 1 <= std::max(max_n, 3); ++s)
      if (!is_induced_cycle(induced_cycle(s, len), s))
        return "induced cycle fails for s=" + std::to_string(s) + " length=" + std::to_string(len);
  return std::nullopt;
}

inline Failure vt_codes(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::size_t total = 0;
    for (int a = 0; a <= n; ++a) {
      const auto c = vt_code(n, a);
      total += c.size();
      if (!verify_code(c))
        return "VT_" + std::to_string(a) + "(" + std::to_string(n) + ") is not a code";
    }
    if (total != (std::size_t{1} << n))
      return "VT classes do not partition [2]^" + std::to_string(n);
  }
  return std::nullopt;
}

inline Failure layer_colorings(int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto g = build_graph(1, n, k);
      if (!verify_coloring(g, layer_coloring(n, k)))
        return "modified VT weight is not proper on L_{1," + std::to_string(n) + "," + std::to_string(k) + "}";
      if (!verify_code(layer_code(n, k)))
        return "layer code fails for n=" + std::to_string(n) + " k=" + std::to_string(k);
    }
  return std::nullopt;
}

inline Failure weight_partition(int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (int a = 0; a <= 1; ++a) {
      const auto c = weight_partition_code(n, 1, a, coloring_layer_solver());
      if (!verify_code(c) || Rational(Natural(c.size())) < single_deletion_size_floor(n, a))
        return "weight-partition size floor fails for n=" + std::to_string(n) + " a=" + std::to_string(a);
    }
  return std::nullopt;
}

inline Failure certificates(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    if (!verify_certificate(chromatic_certificate(n)))
      return "chromatic certificate fails for L_{1," + std::to_string(n) + "}";
    for (int k = 1; k < n; ++k)
      if (!verify_certificate(chromatic_certificate(n, k)))
        return "chromatic certificate fails for n=" + std::to_string(n) + " k=" + std::to_string(k);
  }
  return std::nullopt;
}

inline Failure vt_optimality(int max_n) {
  for (int n = 2; n <= std::min(max_n, 7); ++n) {
    const auto sizes = vt_class_sizes(n);
    if (exact_mis(build_graph(1, n)).size() != *std::max_element(sizes.begin(), sizes.end()))
      return "alpha(L_{1," + std::to_string(n) + "}) differs from the largest VT code";
  }
  return std::nullopt;
}

} // namespace detail

/// Runs every check with strings up to `max_n` symbols (1..12).
inline std::vector<CheckResult> run_all(int max_n) {
  ::delcode::detail::require(max_n >= 1 && max_n <= kMaxSelftestLength, "selftest max-n must lie in [1, 12]");
  const std::vector<std::pair<const char *, std::function<detail::Failure(int)>>> checks = {
      {"bitstring.metric", detail::metric},
      {"bitstring.weight_gap", detail::weight_gap},
      {"bitstring.deletion_ball_bound", detail::deletion_ball},
      {"counting.superstring_counts", detail::superstring_counts},
      {"counting.bijection", detail::bijection},
      {"counting.polynomial_bound", detail::polynomial_bound},
      {"graph.degree_bounds", detail::degree_bounds},
      {"graph.witnesses", detail::witnesses},
      {"codes.vt_validity", detail::vt_codes},
      {"codes.layer_coloring", detail::layer_colorings},
      {"codes.weight_partition", detail::weight_partition},
      {"codes.chromatic_certificates", detail::certificates},
      {"codes.vt_optimality", detail::vt_optimality},
  };
  std::vector<CheckResult> out;
  for (const auto &[name, check] : checks) {
    const auto failure = check(max_n);
    out.push_back({name, !failure, failure.value_or("")});
  }
  return out;
}

} // namespace delcode::selftest
