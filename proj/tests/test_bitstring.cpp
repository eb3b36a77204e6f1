#include <gtest/gtest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "delcode/bitstring.hpp"
#include "delcode/counting.hpp"
#include "oracles.hpp"

using namespace delcode;

namespace {

std::set<std::string> as_strings(const std::vector<BitString> &xs) {
  std::set<std::string> out;
  for (const auto &x : xs)
    out.insert(x.str());
  return out;
}

BitString bs(const std::string &s) { return BitString::parse(s); }

} // namespace

TEST(BitString, ParseAndRender) {
  EXPECT_EQ(bs("0110").str(), "0110");
  EXPECT_EQ(bs("").length(), 0);
  EXPECT_EQ(bs("0110").pattern(), 0b0110u);
  EXPECT_EQ(bs("1").weight(), 1);
  EXPECT_THROW(bs("01a"), ParseError);
  EXPECT_THROW(bs(std::string(64, '0')), ParseError);
  EXPECT_NO_THROW(bs(std::string(63, '1')));
  EXPECT_THROW(BitString(3, 0b1000), ParameterError);
}

TEST(BitString, IndexZeroIsLeftmost) {
  const auto x = bs("100");
  EXPECT_TRUE(x[0]);
  EXPECT_FALSE(x[2]);
  EXPECT_EQ(x.erase(0).str(), "00");
  EXPECT_EQ(x.insert(3, true).str(), "1001");
  EXPECT_EQ(x.insert(0, false).str(), "0100");
  EXPECT_EQ(bs("0110").slice(1, 2).str(), "11");
  EXPECT_EQ(bs("0110").complement().str(), "1001");
  EXPECT_EQ((bs("01") + bs("110")).str(), "01110");
}

TEST(BitString, OrderIsLengthThenNumeric) {
  EXPECT_LT(bs("1"), bs("00"));
  EXPECT_LT(bs("011"), bs("100"));
  EXPECT_NE(bs("0"), bs("00"));
  auto xs = all_strings(3);
  ASSERT_EQ(xs.size(), 8u);
  for (std::size_t i = 0; i < xs.size(); ++i)
    EXPECT_EQ(xs[i].pattern(), i);
}

TEST(BitString, ConstantWeightEnumeration) {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto xs = all_strings(n, k);
      EXPECT_EQ(xs.size(), oracle::binomial(n, k));
      EXPECT_TRUE(std::is_sorted(xs.begin(), xs.end()));
      for (const auto &x : xs)
        EXPECT_EQ(x.weight(), k);
    }
  EXPECT_THROW(all_strings(27), CapacityError);
}

TEST(BitString, HashDistinguishesLength) {
  std::unordered_set<BitString> set{bs("0"), bs("00"), bs("000")};
  EXPECT_EQ(set.size(), 3u);
}

TEST(DeleteAll, Examples) {
  EXPECT_EQ(as_strings(delete_all(bs("000"), 1)), (std::set<std::string>{"00"}));
  EXPECT_EQ(as_strings(delete_all(bs("0101"), 1)), (std::set<std::string>{"101", "001", "011", "010"}));
  EXPECT_EQ(as_strings(delete_all(bs("0101"), 2)), (std::set<std::string>{"01", "00", "10", "11"}));
  EXPECT_EQ(as_strings(delete_all(bs("0101"), 0)), (std::set<std::string>{"0101"}));
  EXPECT_EQ(as_strings(delete_all(bs("0101"), 4)), (std::set<std::string>{""}));
  EXPECT_THROW(delete_all(bs("01"), 3), ParameterError);
  EXPECT_THROW(delete_all(bs("01"), -1), ParameterError);
}

TEST(DeleteAll, MatchesPositionEnumeration) {
  for (int n = 0; n <= 8; ++n)
    for (const auto &x : oracle::all_binary(n))
      for (int s = 0; s <= n; ++s) {
        const auto got = delete_all(bs(x), s);
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
        ASSERT_EQ(as_strings(got), oracle::deletions(x, s)) << x << " s=" << s;
      }
}

TEST(InsertAll, MatchesSupersequenceFilter) {
  for (int m = 0; m <= 5; ++m)
    for (const auto &x : oracle::all_binary(m))
      for (int s = 0; s <= 3; ++s) {
        const auto want = oracle::insertions(x, s);
        ASSERT_EQ(as_strings(insert_all(bs(x), s)), want) << x << " s=" << s;
        for (int r = 0; r <= s; ++r) {
          std::set<std::string> weighted;
          for (const auto &y : want)
            if (oracle::weight(y) == oracle::weight(x) + r)
              weighted.insert(y);
          ASSERT_EQ(as_strings(insert_all_weighted(bs(x), s, r)), weighted);
        }
      }
  EXPECT_THROW(insert_all(bs(std::string(62, '0')), 2), ParameterError);
  EXPECT_THROW(insert_all_weighted(bs("0"), 1, 2), ParameterError);
}

TEST(InsertAll, WeightedPartsPartitionTheSuperstrings) {
  for (int m = 0; m <= 8; ++m)
    for (const auto &x : all_strings(m))
      for (int s = 0; s <= 3; ++s) {
        std::vector<BitString> joined;
        for (int r = 0; r <= s; ++r) {
          const auto part = insert_all_weighted(x, s, r);
          joined.insert(joined.end(), part.begin(), part.end());
        }
        const std::size_t total = joined.size();
        canonicalize(joined);
        ASSERT_EQ(joined.size(), total) << "weighted parts overlap for " << x;
        ASSERT_EQ(joined, insert_all(x, s));
      }
}

TEST(InsertAll, DualToDeleteAll) {
  for (int n = 0; n <= 8; ++n)
    for (const auto &x : all_strings(n))
      for (int s = 0; s <= std::min(3, n); ++s) {
        const auto down = delete_all(x, s);
        for (const auto &y : all_strings(n - s)) {
          const bool in_down = std::binary_search(down.begin(), down.end(), y);
          const auto up = insert_all(y, s);
          ASSERT_EQ(in_down, std::binary_search(up.begin(), up.end(), x)) << x << " " << y;
        }
      }
}

TEST(Subsequence, MatchesOracle) {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 6; ++n)
      for (const auto &x : oracle::all_binary(m))
        for (const auto &y : oracle::all_binary(n))
          ASSERT_EQ(is_subsequence(bs(x), bs(y)), oracle::subsequence(x, y)) << x << " " << y;
}

TEST(Lcs, MatchesFullTableOnAllShortPairs) {
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      for (const auto &x : oracle::all_binary(m))
        for (const auto &y : oracle::all_binary(n))
          ASSERT_EQ(lcs_length(bs(x), bs(y)), oracle::lcs(x, y)) << x << " " << y;
}

TEST(Lcs, MatchesFullTableOnRandomLongPairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = static_cast<int>(rng() % 64), n = static_cast<int>(rng() % 64);
    const BitString x(m, rng() & BitString::mask(m)), y(n, rng() & BitString::mask(n));
    ASSERT_EQ(lcs_length(x, y), oracle::lcs(x.str(), y.str()));
  }
}

TEST(DeletionDistance, Examples) {
  EXPECT_EQ(deletion_distance(bs("0101"), bs("0110")), 2);
  EXPECT_EQ(deletion_distance(bs("0000"), bs("1111")), 8);
  EXPECT_EQ(deletion_distance(bs("010"), bs("010")), 0);
  EXPECT_EQ(deletion_distance(bs("01"), bs("0")), 1);
}

TEST(DeletionDistance, MatchesSharedSubstringDefinition) {
  for (int n = 0; n <= 6; ++n)
    for (const auto &x : oracle::all_binary(n))
      for (const auto &y : oracle::all_binary(n))
        ASSERT_EQ(deletion_distance(bs(x), bs(y)), oracle::distance(x, y)) << x << " " << y;
}

TEST(DeletionDistance, IsAMetricUpToLengthTen) {
  for (int n = 1; n <= 10; ++n) {
    const auto xs = all_strings(n);
    const std::size_t size = xs.size();
    std::vector<std::uint8_t> d(size * size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j)
        d[i * size + j] = static_cast<std::uint8_t>(deletion_distance(xs[i], xs[j]));
    for (std::size_t i = 0; i < size; ++i) {
      ASSERT_EQ(d[i * size + i], 0);
      for (std::size_t j = 0; j < size; ++j) {
        const int dij = d[i * size + j];
        ASSERT_EQ(dij, d[j * size + i]);
        ASSERT_TRUE(i == j || dij > 0);
        const std::uint8_t *row_j = &d[j * size];
        const std::uint8_t *row_i = &d[i * size];
        for (std::size_t k = 0; k < size; ++k)
          if (row_i[k] > dij + row_j[k])
            FAIL() << "triangle inequality fails for " << xs[i] << " " << xs[j] << " " << xs[k];
      }
    }
  }
}

TEST(DeletionDistance, WeightGap) {
  for (int n = 1; n <= 10; ++n) {
    const auto xs = all_strings(n);
    for (const auto &x : xs)
      for (const auto &y : xs)
        ASSERT_GE(deletion_distance(x, y) / 2, std::abs(x.weight() - y.weight())) << x << " " << y;
  }
}

TEST(DeletionDistance, ConcatenationIsSubadditive) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20000; ++trial) {
    auto draw = [&] {
      const int len = static_cast<int>(rng() % 13);
      return BitString(len, rng() & BitString::mask(len));
    };
    const auto x = draw(), y = draw(), x2 = draw(), y2 = draw();
    ASSERT_LE(deletion_distance(x + x2, y + y2), deletion_distance(x, y) + deletion_distance(x2, y2))
        << x << " " << y << " " << x2 << " " << y2;
  }
}

TEST(DeleteAll, BallSizeBound) {
  for (int s = 0; s <= 2; ++s)
    for (int n = s; n <= 12; ++n) {
      const Natural bound = detail::binomial_prefix_sum(n - s, s);
      for (const auto &x : all_strings(n))
        ASSERT_LE(Natural(delete_all(x, s).size()), bound) << x << " s=" << s;
    }
}

// Strings meeting the bound with equality. The alternating strings are the
// only ones for s = 1, and for s = 2 once n >= 5; the small cases below are
// exceptions where more strings reach it.
TEST(DeleteAll, BallBoundEqualityCases) {
  auto extremal = [](int n, int s) {
    const Natural bound = detail::binomial_prefix_sum(n - s, s);
    std::set<std::string> out;
    for (const auto &x : all_strings(n))
      if (Natural(delete_all(x, s).size()) == bound)
        out.insert(x.str());
    return out;
  };
  auto alternating = [](int n) {
    const auto a = oracle::alternating(n);
    return std::set<std::string>(a.begin(), a.end());
  };
  for (int n = 1; n <= 12; ++n)
    EXPECT_EQ(extremal(n, 1), alternating(n)) << "n=" << n;
  for (int n = 5; n <= 12; ++n)
    EXPECT_EQ(extremal(n, 2), alternating(n)) << "n=" << n;

  EXPECT_EQ(extremal(3, 0).size(), 8u);
  EXPECT_EQ(extremal(2, 2).size(), 4u);
  EXPECT_EQ(extremal(3, 2).size(), 6u);
  EXPECT_EQ(extremal(4, 2), (std::set<std::string>{"0101", "0110", "1001", "1010"}));
}

TEST(CommonSubstrings, MatchesOracleIntersection) {
  for (int n = 0; n <= 5; ++n)
    for (const auto &x : oracle::all_binary(n))
      for (const auto &y : oracle::all_binary(n))
        for (int s = 0; s <= n; ++s) {
          std::set<std::string> want;
          const auto dy = oracle::deletions(y, s);
          for (const auto &z : oracle::deletions(x, s))
            if (dy.count(z))
              want.insert(z);
          ASSERT_EQ(as_strings(common_substrings(bs(x), bs(y), s)), want);
        }
  EXPECT_THROW(common_substrings(bs("01"), bs("011"), 1), ParameterError);
}

TEST(ConfusableSet, MatchesDistanceFilter) {
  for (int n = 1; n <= 7; ++n)
    for (const auto &x : oracle::all_binary(n))
      for (int s = 0; s <= std::min(n, 2); ++s) {
        std::set<std::string> want;
        for (const auto &y : oracle::all_binary(n))
          if (y != x && oracle::lcs(x, y) >= n - s)
            want.insert(y);
        ASSERT_EQ(as_strings(confusable_set(bs(x), s)), want) << x << " s=" << s;
      }
}
