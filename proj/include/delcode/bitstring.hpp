#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "delcode/errors.hpp"

namespace delcode {

/// Fixed-length binary word of at most 63 symbols packed into one machine
/// word. Index 0 is the leftmost symbol as written, so the packed pattern is
/// the binary numeral of the text and numeric order equals lexicographic
/// order for equal lengths.
class BitString {
public:
  static constexpr int kMaxLength = 63;

  constexpr BitString() = default;

  /// `pattern` is read as a binary numeral of `length` digits.
  BitString(int length, std::uint64_t pattern) : length_(checked_length(length)) {
    detail::require((pattern >> length_) == 0,
                    "bit pattern wider than length " + std::to_string(length));
    pattern_ = pattern;
  }

  static BitString parse(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxLength))
      throw ParseError("bit string longer than 63 symbols");
    std::uint64_t p = 0;
    for (char c : text) {
      if (c != '0' && c != '1')
        throw ParseError("invalid symbol '" + std::string(1, c) + "' in bit string");
      p = (p << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitString(static_cast<int>(text.size()), p);
  }

  static BitString zeros(int length) { return BitString(length, 0); }
  static BitString ones(int length) { return BitString(length, mask(checked_length(length))); }

  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  std::uint64_t pattern() const { return pattern_; }

  bool operator[](int i) const { return (pattern_ >> (length_ - 1 - i)) & 1u; }

  int weight() const { return std::popcount(pattern_); }
  int zero_count() const { return length_ - weight(); }

  /// Copy with the symbol at index i removed.
  BitString erase(int i) const {
    const int tail = length_ - 1 - i;
    const std::uint64_t low = pattern_ & mask(tail);
    const std::uint64_t high = pattern_ >> (tail + 1);
    return raw(length_ - 1, (high << tail) | low);
  }

  /// Copy with `bit` inserted so that it lands at index i (0 <= i <= length).
  BitString insert(int i, bool bit) const {
    detail::require(length_ < kMaxLength, "bit string would exceed 63 symbols");
    const int tail = length_ - i;
    const std::uint64_t low = pattern_ & mask(tail);
    const std::uint64_t high = pattern_ >> tail;
    return raw(length_ + 1, (((high << 1) | static_cast<std::uint64_t>(bit)) << tail) | low);
  }

  BitString push_back(bool bit) const { return insert(length_, bit); }

  BitString complement() const { return raw(length_, ~pattern_ & mask(length_)); }

  /// Substring of `count` symbols starting at index `first`.
  BitString slice(int first, int count) const {
    return raw(count, (pattern_ >> (length_ - first - count)) & mask(count));
  }

  std::string str() const {
    std::string out(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i)
      if ((*this)[i])
        out[static_cast<std::size_t>(i)] = '1';
    return out;
  }

  friend bool operator==(const BitString &, const BitString &) = default;
  friend std::strong_ordering operator<=>(const BitString &a, const BitString &b) {
    if (auto c = a.length_ <=> b.length_; c != 0)
      return c;
    return a.pattern_ <=> b.pattern_;
  }

  friend BitString operator+(const BitString &a, const BitString &b) {
    detail::require(a.length_ + b.length_ <= kMaxLength, "concatenation exceeds 63 symbols");
    return raw(a.length_ + b.length_, (a.pattern_ << b.length_) | b.pattern_);
  }

  friend std::ostream &operator<<(std::ostream &os, const BitString &x) { return os << x.str(); }

  static constexpr std::uint64_t mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  }

private:
  static int checked_length(int length) {
    detail::require(length >= 0 && length <= kMaxLength,
                    "bit string length must be in [0, 63], got " + std::to_string(length));
    return length;
  }
  static BitString raw(int length, std::uint64_t pattern) {
    BitString x;
    x.length_ = length;
    x.pattern_ = pattern;
    return x;
  }

  int length_ = 0;
  std::uint64_t pattern_ = 0;
};

inline int weight(const BitString &x) { return x.weight(); }

/// Sorts and removes duplicates in place.
inline void canonicalize(std::vector<BitString> &xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

/// Every string of the given length in numeric order (length <= 26).
inline std::vector<BitString> all_strings(int length) {
  detail::require<CapacityError>(length >= 0 && length <= 26, "refusing to enumerate 2^" + std::to_string(length) + " strings");
  std::vector<BitString> out;
  out.reserve(std::size_t{1} << length);
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << length); ++p)
    out.emplace_back(length, p);
  return out;
}

/// Every string of the given length and weight in numeric order.
inline std::vector<BitString> all_strings(int length, int weight) {
  detail::require<CapacityError>(length >= 0 && length <= 26, "refusing to enumerate 2^" + std::to_string(length) + " strings");
  std::vector<BitString> out;
  if (weight < 0 || weight > length)
    return out;
  if (weight == 0)
    return {BitString::zeros(length)};
  // Gosper's hack walks same-popcount patterns in increasing order.
  std::uint64_t p = BitString::mask(weight);
  const std::uint64_t limit = std::uint64_t{1} << length;
  while (p < limit) {
    out.emplace_back(length, p);
    const std::uint64_t c = p & (~p + 1);
    const std::uint64_t r = p + c;
    p = (((r ^ p) >> 2) / c) | r;
  }
  return out;
}

/// True when x can be obtained from y by deletions.
inline bool is_subsequence(const BitString &x, const BitString &y) {
  int j = 0;
  for (int i = 0; i < x.length(); ++i) {
    while (j < y.length() && y[j] != x[i])
      ++j;
    if (j == y.length())
      return false;
    ++j;
  }
  return true;
}

namespace detail {

inline std::vector<BitString> single_deletions(const std::vector<BitString> &level) {
  std::vector<BitString> next;
  for (const auto &x : level) {
    // Deleting any symbol of a run gives the same string: one per run.
    for (int i = 0; i < x.length(); ++i)
      if (i == 0 || x[i] != x[i - 1])
        next.push_back(x.erase(i));
  }
  canonicalize(next);
  return next;
}

inline std::vector<BitString> single_insertions(const std::vector<BitString> &level) {
  std::vector<BitString> next;
  for (const auto &x : level)
    for (int i = 0; i <= x.length(); ++i) {
      next.push_back(x.insert(i, false));
      next.push_back(x.insert(i, true));
    }
  canonicalize(next);
  return next;
}

} // namespace detail

/// D_s(x): the distinct subsequences of x of length x.length() - s, sorted.
inline std::vector<BitString> delete_all(const BitString &x, int s) {
  detail::require(s >= 0 && s <= x.length(),
                  "deletion count " + std::to_string(s) + " outside [0, " + std::to_string(x.length()) + "]");
  std::vector<BitString> level{x};
  for (int i = 0; i < s; ++i)
    level = detail::single_deletions(level);
  return level;
}

/// I_s(x): the distinct supersequences of x of length x.length() + s, sorted.
inline std::vector<BitString> insert_all(const BitString &x, int s) {
  detail::require(s >= 0, "insertion count must be non-negative");
  detail::require(x.length() + s <= BitString::kMaxLength, "superstrings would exceed 63 symbols");
  std::vector<BitString> level{x};
  for (int i = 0; i < s; ++i)
    level = detail::single_insertions(level);
  return level;
}

/// I_(s,r)(x): supersequences produced by inserting r ones and s - r zeros.
inline std::vector<BitString> insert_all_weighted(const BitString &x, int s, int r) {
  detail::require(r >= 0 && r <= s, "inserted-ones count r must lie in [0, s]");
  auto all = insert_all(x, s);
  const int target = x.weight() + r;
  std::erase_if(all, [&](const BitString &y) { return y.weight() != target; });
  return all;
}

/// Length of a longest common subsequence (row-rolling dynamic program).
inline int lcs_length(const BitString &x, const BitString &y) {
  std::array<std::uint8_t, BitString::kMaxLength + 1> prev{}, cur{};
  for (int i = 1; i <= x.length(); ++i) {
    cur[0] = 0;
    const bool xi = x[i - 1];
    for (int j = 1; j <= y.length(); ++j)
      cur[j] = xi == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  return prev[y.length()];
}

/// d_L(x, y) = |x| + |y| - 2 lcs(x, y).
inline int deletion_distance(const BitString &x, const BitString &y) {
  return x.length() + y.length() - 2 * lcs_length(x, y);
}

/// D_s(x, y) = D_s(x) ∩ D_s(y) for equal-length x and y.
inline std::vector<BitString> common_substrings(const BitString &x, const BitString &y, int s) {
  detail::require(x.length() == y.length(), "common_substrings needs equal lengths");
  const auto dx = delete_all(x, s);
  const auto dy = delete_all(y, s);
  std::vector<BitString> out;
  std::set_intersection(dx.begin(), dx.end(), dy.begin(), dy.end(), std::back_inserter(out));
  return out;
}

/// N_s(x): strings of the same length, other than x, sharing a length n - s subsequence with x.
inline std::vector<BitString> confusable_set(const BitString &x, int s) {
  std::vector<BitString> out;
  for (const auto &z : delete_all(x, s)) {
    auto sup = insert_all(z, s);
    out.insert(out.end(), sup.begin(), sup.end());
  }
  canonicalize(out);
  std::erase(out, x);
  return out;
}

} // namespace delcode

template <> struct std::hash<delcode::BitString> {
  std::size_t operator()(const delcode::BitString &x) const noexcept {
    return std::hash<std::uint64_t>{}(x.pattern() * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(x.length()));
  }
};
