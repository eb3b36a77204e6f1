#include <gtest/gtest.h>

#include <cmath>

#include "delcode/bitstring.hpp"
#include "delcode/counting.hpp"
#include "oracles.hpp"

using namespace delcode;

namespace {

BitString bs(const std::string &s) { return BitString::parse(s); }

// Multisets of size k over n types; 1 for the empty multiset even when n = 0.
Natural multichoose(int n, int k) {
  if (k == 0)
    return 1;
  if (n == 0)
    return 0;
  return binomial(n + k - 1, k);
}

} // namespace

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(64, 32), Natural("1832624140942590534"));
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k)
      ASSERT_EQ(binomial(n, k), Natural(oracle::binomial(n, k)));
  EXPECT_EQ(multinomial({1, 1, 1}), 6);
  EXPECT_EQ(multinomial({2, 1, 0}), 3);
}

TEST(InsertionCount, Examples) {
  for (int n = 0; n <= 10; ++n)
    EXPECT_EQ(insertion_count(0, n), 1);
  EXPECT_EQ(insertion_count(1, 4), 5);
  EXPECT_EQ(insertion_count(2, 16), 137);
  EXPECT_EQ(insertion_count(4, 4), 16);
  EXPECT_THROW(insertion_count(3, 2), ParameterError);
  EXPECT_THROW(insertion_count(-1, 2), ParameterError);
  EXPECT_EQ(Natural(insert_all(bs("000"), 1).size()), insertion_count(1, 4));
}

TEST(WeightedInsertionCount, Examples) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      if (k <= n - 1) {
        EXPECT_EQ(weighted_insertion_count(1, 0, n, k), k + 1);
      }
      if (k >= 1) {
        EXPECT_EQ(weighted_insertion_count(1, 1, n, k), n - k + 1);
      }
    }
  EXPECT_EQ(weighted_insertion_count(2, 1, 6, 3), 10);
  EXPECT_EQ(Natural(insert_all_weighted(bs("0101"), 2, 1).size()), 10);
  EXPECT_THROW(weighted_insertion_count(2, 3, 6, 3), ParameterError);
  EXPECT_THROW(weighted_insertion_count(2, 1, 6, 0), ParameterError);
  EXPECT_THROW(weighted_insertion_count(2, 1, 6, 6), ParameterError);
}

TEST(WeightedInsertionCount, MatchesEnumeration) {
  for (int m = 0; m <= 8; ++m)
    for (const auto &x : all_strings(m))
      for (int s = 0; s <= 3; ++s) {
        ASSERT_EQ(Natural(insert_all(x, s).size()), insertion_count(s, m + s)) << x;
        for (int r = 0; r <= s; ++r)
          ASSERT_EQ(Natural(insert_all_weighted(x, s, r).size()), weighted_insertion_count(s, r, m + s, x.weight() + r))
              << x << " s=" << s << " r=" << r;
      }
}

// The double sum over inserted zeros a and inserted ones b that the closed
// form collapses, evaluated directly.
TEST(WeightedInsertionCount, MatchesUncollapsedDoubleSum) {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k)
      for (int s = 0; s <= 4; ++s)
        for (int r = 0; r <= s; ++r) {
          Natural direct = 0;
          for (int a = 0; a <= s - r; ++a)
            for (int b = 0; b <= r; ++b)
              direct += multichoose(n - k, b) * multichoose(k, a) * binomial(s - a - b, r - b);
          ASSERT_EQ(weighted_insertion_count(s, r, n + s, k + r), direct) << n << " " << k << " " << s << " " << r;
        }
}

TEST(WeightedInsertionCount, RowSumIsInsertionCount) {
  for (int m = 0; m <= 10; ++m)
    for (int j = 0; j <= m; ++j)
      for (int s = 0; s <= 3; ++s) {
        Natural total = 0;
        for (int r = 0; r <= s; ++r)
          total += weighted_insertion_count(s, r, m + s, j + r);
        ASSERT_EQ(total, insertion_count(s, m + s));
      }
}

TEST(Vandermonde, BothFormsHold) {
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= 12; ++b)
      for (int c = 0; c <= 12; ++c) {
        Natural sum = 0;
        for (int i = 0; i <= c; ++i)
          sum += binomial(a, i) * binomial(b, c - i);
        ASSERT_EQ(binomial(a + b, c), sum);
      }
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= 12; ++b)
      for (int c = 0; c <= 12; ++c) {
        Natural sum = 0;
        for (int i = 0; i <= c; ++i)
          sum += binomial(a + i - 1, i) * binomial(b + c - i - 1, c - i);
        ASSERT_EQ(binomial(a + b + c - 1, c), sum);
      }
}

TEST(Encode, WorkedInstance) {
  const auto x = bs("0110001"), y = bs("001001010101101");
  const auto z = encode(x, y);
  EXPECT_EQ(z.z0.str(), "001010");
  EXPECT_EQ(z.z1.str(), "101100");
  EXPECT_EQ(z.z2.str(), "101");
  EXPECT_EQ(z.str(), "001010|101100|101");
  EXPECT_EQ(decode(x, z), y);
}

TEST(Encode, SmallCases) {
  const auto x = bs("0110001");
  const auto z = encode(x, x);
  EXPECT_EQ(z.z0, BitString::zeros(4));
  EXPECT_EQ(z.z1, BitString::zeros(3));
  EXPECT_TRUE(z.z2.empty());
  EXPECT_EQ(decode(x, z), x);

  const auto e = encode(bs("0"), bs("10"));
  EXPECT_EQ(e.z0.str(), "10");
  EXPECT_TRUE(e.z1.empty());
  EXPECT_TRUE(e.z2.empty());
  EXPECT_EQ(e.str(), "10|-|-");
  EXPECT_EQ(decode(bs("0"), e), bs("10"));
  EXPECT_EQ(InsertionEncoding::parse("10|-|-"), e);

  const auto empty_base = encode(bs(""), bs("0110"));
  EXPECT_TRUE(empty_base.z0.empty());
  EXPECT_TRUE(empty_base.z1.empty());
  EXPECT_EQ(empty_base.z2.str(), "0110");
}

TEST(Encode, Errors) {
  EXPECT_THROW(encode(bs("11"), bs("100")), PreconditionError);
  EXPECT_THROW(encode(bs("0"), bs("1")), PreconditionError);
  EXPECT_THROW(decode(bs("01"), InsertionEncoding{bs("0"), bs("00"), bs("")}), MalformedEncodingError);
  EXPECT_THROW(decode(bs("01"), InsertionEncoding{bs("01"), bs("0"), bs("")}), MalformedEncodingError);
  EXPECT_THROW(decode(bs("0"), InsertionEncoding{bs(""), bs(""), bs("")}), MalformedEncodingError);
  EXPECT_THROW(InsertionEncoding::parse("01|0"), ParseError);
}

TEST(Encode, IsABijectionOntoValidEncodings) {
  for (int m = 0; m <= 7; ++m)
    for (const auto &x : all_strings(m))
      for (int s = 0; s <= 3; ++s)
        for (int r = 0; r <= s; ++r) {
          std::vector<InsertionEncoding> codes;
          for (const auto &y : insert_all_weighted(x, s, r)) {
            const auto z = encode(x, y);
            ASSERT_EQ(decode(x, z), y) << x << " " << y;
            ASSERT_EQ(encode(x, decode(x, z)), z);
            ASSERT_EQ(z.z0.zero_count(), x.zero_count());
            ASSERT_EQ(z.z1.zero_count(), x.weight());
            ASSERT_EQ(z.z0.weight() + z.z2.weight(), r);
            ASSERT_EQ(z.z1.weight() + z.z2.zero_count(), s - r);
            ASSERT_TRUE(z.z0.empty() || !z.z0[z.z0.length() - 1]);
            ASSERT_TRUE(z.z1.empty() || !z.z1[z.z1.length() - 1]);
            codes.push_back(z);
          }
          std::sort(codes.begin(), codes.end());
          ASSERT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end()) << "encode not injective on " << x;
        }
}

TEST(PolynomialBound, Examples) {
  for (int i = 0; i <= 10; ++i)
    EXPECT_NEAR(f_s_value(1, i / 10.0), 1.0, 1e-15);
  EXPECT_NEAR(f_s_value(2, 0.5), 1.5, 1e-15);
  EXPECT_NEAR(f_s_value(2, 0.0), 1.0, 1e-15);
  EXPECT_EQ(f_s_bound(0), 1.0);
  EXPECT_EQ(f_s_bound(1), 1.0);
  EXPECT_EQ(f_s_bound(2), 1.5);
  EXPECT_EQ(f_s_bound_exact(3), Rational(20, 8));
  EXPECT_THROW(f_s_value(2, 1.5), ParameterError);
  EXPECT_THROW(f_s_value(2, -0.1), ParameterError);
}

TEST(PolynomialBound, BasesAgreeAndStayBelowTheBound) {
  for (int s = 0; s <= 6; ++s) {
    for (int step = 0; step <= 100; ++step) {
      const double p = step / 100.0;
      const double v = f_s_value(s, p);
      ASSERT_NEAR(v, f_s_value_symmetric(s, p), 1e-12);
      ASSERT_LE(v, f_s_bound(s) + 1e-12);
    }
    EXPECT_NEAR(f_s_value(s, 0.5), f_s_bound(s), 1e-12);
  }
}

// Direct evaluation from the definition with exact rationals at p = j/20.
TEST(PolynomialBound, MatchesExactEvaluation) {
  for (int s = 0; s <= 6; ++s)
    for (int j = 0; j <= 20; ++j) {
      const Rational p(j, 20);
      Rational exact = 0;
      for (int r = 0; r <= s; ++r) {
        Rational term = Rational(binomial(s, r) * binomial(s, r));
        for (int i = 0; i < s - r; ++i)
          term *= p;
        for (int i = 0; i < r; ++i)
          term *= 1 - p;
        exact += term;
      }
      ASSERT_NEAR(f_s_value(s, j / 20.0), exact.convert_to<double>(), 1e-12);
    }
}
