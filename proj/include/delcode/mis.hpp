#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "delcode/bitstring.hpp"
#include "delcode/errors.hpp"
#include "delcode/graph.hpp"

namespace delcode {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr std::size_t kMaxExactMisVertices = 16384;

/// The branch-and-bound search visited more nodes than allowed. The best
/// independent set found so far is attached; it is not known to be maximum.
class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::vector<BitString> best, std::uint64_t nodes)
      : Error("exact_mis node budget exhausted after " + std::to_string(nodes) +
              " nodes; incumbent of size " + std::to_string(best.size()) + " is not proven maximum"),
        best_(std::move(best)), nodes_(nodes) {}

  const std::vector<BitString> &best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  std::vector<BitString> best_;
  std::uint64_t nodes_;
};

struct MisResult {
  std::vector<BitString> set; ///< sorted, of size alpha(g)
  std::uint64_t nodes = 0;    ///< branch nodes expanded
};

namespace detail {

class Bitset {
public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  /// Index of the lowest set bit; size() * 64 when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w])
        return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return words_.size() * 64;
  }

  Bitset &operator&=(const Bitset &o) {
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] &= o.words_[w];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }

private:
  std::vector<std::uint64_t> words_;
};

// Maximum clique search in the complement of g (bitset branch and bound with
// greedy coloring bounds). A color class of the complement is a clique of g,
// so each bound is a greedy clique cover of the candidate set.
class MisSearch {
public:
  MisSearch(const ConfusabilityGraph &g, std::uint64_t budget) : g_(g), budget_(budget) {
    const std::size_t n = g.size();
    // Low-degree vertices first; ties by numeric order.
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](auto a, auto b) { return g.degree(a) < g.degree(b); });
    std::vector<std::uint32_t> position(n);
    for (std::uint32_t i = 0; i < n; ++i)
      position[order_[i]] = i;

    adjacent_.assign(n, Bitset(n));
    independent_.assign(n, Bitset(n));
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j)
        if (j != i)
          independent_[i].set(j);
      for (auto u : g.neighbors(order_[i])) {
        adjacent_[i].set(position[u]);
        independent_[i].reset(position[u]);
      }
    }

    for (const auto &x : greedy_mis(g))
      best_.push_back(position[g.require_index(x)]);
  }

  MisResult run() {
    Bitset all(g_.size());
    for (std::size_t i = 0; i < g_.size(); ++i)
      all.set(i);
    if (!all.none())
      expand(all);
    return {to_strings(best_), nodes_};
  }

private:
  void expand(Bitset candidates) {
    if (++nodes_ > budget_)
      throw BudgetExceeded(to_strings(best_), nodes_ - 1);

    const std::size_t floor = best_.size() >= current_.size() ? best_.size() - current_.size() + 1 : 0;
    std::vector<std::pair<std::uint32_t, std::size_t>> branch; // (vertex, cover bound)
    Bitset uncovered = candidates;
    std::size_t cover = 0;
    while (!uncovered.none()) {
      ++cover;
      Bitset pool = uncovered;
      while (!pool.none()) {
        const auto v = static_cast<std::uint32_t>(pool.first());
        pool.reset(v);
        uncovered.reset(v);
        pool &= adjacent_[v];
        if (cover >= floor)
          branch.emplace_back(v, cover);
      }
    }

    for (auto it = branch.rbegin(); it != branch.rend(); ++it) {
      const auto [v, bound] = *it;
      if (current_.size() + bound <= best_.size())
        return;
      current_.push_back(v);
      Bitset next = candidates & independent_[v];
      if (next.none()) {
        if (current_.size() > best_.size())
          best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<BitString> to_strings(const std::vector<std::uint32_t> &positions) const {
    std::vector<BitString> out;
    for (auto p : positions)
      out.push_back(g_.vertex(order_[p]));
    canonicalize(out);
    return out;
  }

  const ConfusabilityGraph &g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> order_;
  std::vector<Bitset> adjacent_;
  std::vector<Bitset> independent_;
  std::vector<std::uint32_t> best_;
  std::vector<std::uint32_t> current_;
};

} // namespace detail

/// Maximum independent set by branch and bound; throws BudgetExceeded when
/// more than `node_budget` search nodes are needed.
inline MisResult exact_mis_search(const ConfusabilityGraph &g, std::uint64_t node_budget = kDefaultNodeBudget) {
  detail::require<CapacityError>(g.size() <= kMaxExactMisVertices,
                                 "exact_mis is limited to " + std::to_string(kMaxExactMisVertices) + " vertices");
  return detail::MisSearch(g, node_budget).run();
}

inline std::vector<BitString> exact_mis(const ConfusabilityGraph &g, std::uint64_t node_budget = kDefaultNodeBudget) {
  return exact_mis_search(g, node_budget).set;
}

} // namespace delcode
