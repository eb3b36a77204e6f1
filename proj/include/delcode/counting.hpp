#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "delcode/bitstring.hpp"
#include "delcode/errors.hpp"

namespace delcode {

using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k), exact. Zero when k < 0, k > n or n < 0.
inline Natural binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  Natural c = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    c *= n - i;
    c /= i + 1;
  }
  return c;
}

/// (sum parts)! / prod(parts!); zero if any part is negative.
inline Natural multinomial(std::initializer_list<std::int64_t> parts) {
  Natural out = 1;
  std::int64_t total = 0;
  for (auto p : parts) {
    if (p < 0)
      return 0;
    total += p;
    out *= binomial(total, p);
  }
  return out;
}

inline Natural pow2(unsigned e) { return Natural(1) << e; }

namespace detail {

/// sum_{i=0}^{s} C(n, i) for any n, s >= 0. Equals 2^n once s >= n; bounds
/// that evaluate I_{s,m} at m < s use this form.
inline Natural binomial_prefix_sum(int n, int s) {
  Natural total = 0;
  for (int i = 0; i <= std::min(s, n); ++i)
    total += binomial(n, i);
  return total;
}

// Formula body without domain checks; callers handle the range.
inline Natural weighted_insertion_count_unchecked(int s, int r, int n, int k) {
  Natural total = 0;
  for (int i = 0; i <= std::min(r, s - r); ++i)
    total += binomial(k + s - 2 * r, s - r - i) * binomial(n - k - s + 2 * r, r - i);
  return total;
}

} // namespace detail

/// I_{s,n} = sum_{i=0}^{s} C(n, i): the number of distinct superstrings of
/// length n of any string of length n - s.
inline Natural insertion_count(int s, int n) {
  detail::require(s >= 0 && n >= 0 && s <= n,
                  "insertion_count needs 0 <= s <= n, got s=" + std::to_string(s) + " n=" + std::to_string(n));
  return detail::binomial_prefix_sum(n, s);
}

/// I_{(s,r),(n,k)}: superstrings of length n and weight k of a string of
/// length n - s and weight k - r.
inline Natural weighted_insertion_count(int s, int r, int n, int k) {
  detail::require(0 <= r && r <= s && s <= n, "weighted_insertion_count needs 0 <= r <= s <= n");
  detail::require(r <= k && k <= n - s + r, "weighted_insertion_count needs r <= k <= n - s + r");
  return detail::weighted_insertion_count_unchecked(s, r, n, k);
}

/// Insertion pattern of a superstring y of x, split into three parts.
///
/// `z0` walks the zeros of x: a 1 for every one inserted before the current
/// zero, then a 0 when that zero is matched. `z1` does the same for the ones of
/// x with inserted zeros. `z2` holds whatever follows the last symbol of x.
struct InsertionEncoding {
  BitString z0;
  BitString z1;
  BitString z2;

  friend bool operator==(const InsertionEncoding &, const InsertionEncoding &) = default;
  friend auto operator<=>(const InsertionEncoding &, const InsertionEncoding &) = default;

  /// `z0|z1|z2`, with `-` standing for an empty part.
  std::string str() const {
    auto part = [](const BitString &z) { return z.empty() ? std::string("-") : z.str(); };
    return part(z0) + "|" + part(z1) + "|" + part(z2);
  }

  static InsertionEncoding parse(std::string_view text) {
    const auto a = text.find('|');
    const auto b = a == std::string_view::npos ? a : text.find('|', a + 1);
    if (b == std::string_view::npos || text.find('|', b + 1) != std::string_view::npos)
      throw ParseError("insertion encoding must have the form z0|z1|z2");
    auto part = [](std::string_view t) { return t == "-" ? BitString() : BitString::parse(t); };
    return {part(text.substr(0, a)), part(text.substr(a + 1, b - a - 1)), part(text.substr(b + 1))};
  }
};

/// Encodes y, a superstring of x, by the head-matching scan.
inline InsertionEncoding encode(const BitString &x, const BitString &y) {
  InsertionEncoding z;
  BitString *parts[2] = {&z.z0, &z.z1};
  int j = 0;
  auto next = [&]() {
    if (j == y.length())
      throw PreconditionError(x.str() + " is not a subsequence of " + y.str());
    return y[j++];
  };
  for (int i = 0; i < x.length(); ++i) {
    const bool u = x[i];
    BitString &out = *parts[u];
    while (next() != u)
      out = out.push_back(true);
    out = out.push_back(false);
  }
  z.z2 = y.slice(j, y.length() - j);
  return z;
}

/// Inverse of encode().
inline BitString decode(const BitString &x, const InsertionEncoding &z) {
  if (z.z0.zero_count() != x.zero_count() || z.z1.zero_count() != x.weight())
    throw MalformedEncodingError("encoding " + z.str() + " does not match the symbol counts of " + x.str());
  if ((!z.z0.empty() && z.z0[z.z0.length() - 1]) || (!z.z1.empty() && z.z1[z.z1.length() - 1]))
    throw MalformedEncodingError("z0 and z1 must end in 0: " + z.str());
  const int length = x.length() + z.z0.weight() + z.z1.weight() + z.z2.length();
  if (length > BitString::kMaxLength)
    throw MalformedEncodingError("decoded string would exceed 63 symbols");

  std::uint64_t y = 0;
  int cursor[2] = {0, 0};
  const BitString *parts[2] = {&z.z0, &z.z1};
  auto emit = [&](bool b) { y = (y << 1) | static_cast<std::uint64_t>(b); };
  for (int i = 0; i < x.length(); ++i) {
    const bool u = x[i];
    const BitString &zu = *parts[u];
    while (zu[cursor[u]++])
      emit(!u);
    emit(u);
  }
  for (int i = 0; i < z.z2.length(); ++i)
    emit(z.z2[i]);
  return BitString(length, y);
}

namespace detail {

/// Neumaier's compensated summation.
class CompensatedSum {
public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      carry_ += (sum_ - t) + v;
    else
      carry_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

inline void check_fs_args(int s, double p) {
  require(s >= 0, "f_s needs s >= 0");
  require(p >= 0.0 && p <= 1.0, "f_s needs p in [0, 1]");
}

} // namespace detail

/// f_s(p) = sum_r C(s, r)^2 p^(s-r) (1-p)^r.
inline double f_s_value(int s, double p) {
  detail::check_fs_args(s, p);
  detail::CompensatedSum acc;
  for (int r = 0; r <= s; ++r) {
    const double c = binomial(s, r).convert_to<double>();
    acc.add(c * c * std::pow(p, s - r) * std::pow(1.0 - p, r));
  }
  return acc.value();
}

/// f_s(p) evaluated as sum_i multinomial(s; i, i, s-2i) (p(1-p))^i.
inline double f_s_value_symmetric(int s, double p) {
  detail::check_fs_args(s, p);
  detail::CompensatedSum acc;
  const double q = p * (1.0 - p);
  for (int i = 0; 2 * i <= s; ++i)
    acc.add(multinomial({i, i, s - 2 * i}).convert_to<double>() * std::pow(q, i));
  return acc.value();
}

/// 2^-s C(2s, s), the maximum of f_s on [0, 1], exactly.
inline Rational f_s_bound_exact(int s) {
  detail::require(s >= 0, "f_s_bound needs s >= 0");
  return Rational(binomial(2 * s, s), pow2(static_cast<unsigned>(s)));
}

inline double f_s_bound(int s) { return f_s_bound_exact(s).convert_to<double>(); }

} // namespace delcode
