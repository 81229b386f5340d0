#include <gtest/gtest.h>

#include <set>

#include "frames/errors.hpp"
#include "frames/strata.hpp"
#include "frames/thresholds.hpp"

using namespace frames;

namespace {

// Smallest d clearing its parity bound, found by scanning.
Int least_d(Int n, bool strict) {
  for (Int d = 1;; ++d) {
    const int sign = compare_to_parity_bound(d, n);
    if (strict ? sign > 0 : sign >= 0) return d;
  }
}

}  // namespace

TEST(Thresholds, FrozenTable) {
  // Values computed with a 50-digit mpmath evaluation of the closed forms.
  const Int table[][4] = {{2, 1, 2, 3},    {3, 2, 3, 4},    {4, 3, 4, 6},     {5, 5, 5, 7},
                          {6, 6, 7, 8},    {7, 7, 8, 9},    {8, 9, 9, 11},    {9, 11, 11, 12},
                          {10, 12, 13, 13}, {11, 13, 14, 15}, {12, 15, 15, 17}, {100, 173, 173, 173},
                          {200, 361, 361, 361}, {500, 937, 937, 937}, {1000, 1911, 1911, 1911},
                          {10000, 19719, 19719, 19719}};
  for (const auto& row : table) {
    EXPECT_EQ(d_ci(row[0]), row[1]) << "n=" << row[0];
    EXPECT_EQ(d_prime(row[0]), row[2]) << "n=" << row[0];
    EXPECT_EQ(d_ufd(row[0]), row[3]) << "n=" << row[0];
  }
}

TEST(Thresholds, RejectSmallN) {
  EXPECT_THROW((void)d_ci(1), InvalidArgument);
  EXPECT_THROW((void)d_prime(0), InvalidArgument);
  EXPECT_THROW((void)d_ufd(-3), InvalidArgument);
}

TEST(Thresholds, MatchScanningOracle) {
  for (Int n = 3; n <= 400; ++n) {
    ASSERT_EQ(d_ci(n), least_d(n, false)) << n;
    ASSERT_EQ(d_prime(n), least_d(n, true)) << n;
  }
  // At n = 2 the odd non-strict bound 4 - 3 = 1 admits d = 1.
  EXPECT_EQ(d_ci(2), 1);
  EXPECT_EQ(d_prime(2), 2);
}

TEST(Thresholds, OrderingAndRange) {
  Int differ = 0;
  std::set<Int> ufd_equals_n_plus_2;
  for (Int n = 2; n <= 10000; ++n) {
    const auto t = thresholds(n);
    ASSERT_GE(t.d_ufd, t.d_prime) << n;
    ASSERT_GE(t.d_prime, t.d_ci) << n;
    ASSERT_GE(t.d_prime, n) << n;
    ASSERT_LE(t.d_prime, 2 * n - 2) << n;
    if (n >= 3) { ASSERT_GE(t.d_ufd, n + 1) << n; }
    if (n >= 4) { ASSERT_GE(t.d_ufd, n + 2) << n; }
    if (t.d_ufd == n + 2) ufd_equals_n_plus_2.insert(n);
    if (t.d_prime != t.d_ufd) ++differ;
  }
  EXPECT_EQ(d_ufd(3), 4);
  EXPECT_EQ(ufd_equals_n_plus_2, (std::set<Int>{4, 5, 6, 7}));
  EXPECT_EQ(differ, 419);
}

TEST(ParityThresholds, EquivalenceCheck) {
  EXPECT_TRUE(parity_threshold_equivalence_check(3, 50));
  EXPECT_TRUE(parity_threshold_equivalence_check(2, 50));
  EXPECT_TRUE(parity_threshold_equivalence_check(200, 500));
  EXPECT_THROW((void)parity_threshold_equivalence_check(3, 1), InvalidArgument);
}

TEST(ClassifyRing, Examples) {
  const auto a = classify_ring({6, 6});
  EXPECT_TRUE(a.complete_intersection);
  EXPECT_FALSE(a.domain);
  EXPECT_EQ(a.ufd, UfdStatus::NotImplied);
  EXPECT_EQ(a.reduced, Reducedness::Yes);

  const auto b = classify_ring({4, 3});
  EXPECT_TRUE(b.complete_intersection);
  EXPECT_TRUE(b.domain);
  EXPECT_EQ(b.ufd, UfdStatus::Yes);

  const auto c = classify_ring({1, 3});
  EXPECT_TRUE(c.cohen_macaulay);
  EXPECT_FALSE(c.gorenstein);
  EXPECT_FALSE(c.domain);
  EXPECT_EQ(c.reduced, Reducedness::Yes);

  const auto e = classify_ring({1, 2});
  EXPECT_TRUE(e.gorenstein);
  EXPECT_TRUE(e.complete_intersection);

  const auto g = classify_ring({5, 6});
  EXPECT_FALSE(g.complete_intersection);
  EXPECT_EQ(g.reduced, Reducedness::GenericallyReducedOnly);
  EXPECT_FALSE(g.justifications.empty());
}

TEST(ClassifyRing, InternalInvariants) {
  for (Int n = 2; n <= 40; ++n) {
    for (Int d = 1; d <= 80; ++d) {
      const auto r = classify_ring({d, n});
      if (d >= 2) {
        ASSERT_EQ(r.complete_intersection, r.gorenstein);
        ASSERT_EQ(r.complete_intersection, r.cohen_macaulay);
        ASSERT_EQ(r.complete_intersection, r.equidimensional);
      } else {
        ASSERT_TRUE(r.cohen_macaulay);
        ASSERT_EQ(r.gorenstein, n <= 2);
      }
      ASSERT_EQ(r.domain, r.normal_domain);
      if (r.complete_intersection) { ASSERT_EQ(r.reduced, Reducedness::Yes); }
      if (r.ufd == UfdStatus::Yes) { ASSERT_TRUE(r.domain); }
    }
  }
}

TEST(ClassifyRing, ConsistentWithStrata) {
  for (Int n = 2; n <= 40; ++n) {
    for (Int d = 1; d <= 80; ++d) {
      const FrameSpaceParams params(d, n);
      const auto r = classify_ring(params);
      ASSERT_EQ(r.domain, component_report(params).is_irreducible && d >= n) << d << "," << n;
      if (d >= 2) {
        ASSERT_EQ(r.complete_intersection, maximize_sigma(params).max_value == principal_value(params))
            << d << "," << n;
      }
    }
  }
}

TEST(CertifyLss, Examples) {
  const std::vector<std::pair<Int, Int>> path6{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
  EXPECT_TRUE(certify_lss(6, path6, 8).ufd);
  EXPECT_FALSE(certify_lss(6, path6, 7).ufd);
  EXPECT_EQ(certify_lss(6, path6, 8).minimal_d.ufd, 8);

  const auto tri = certify_lss(3, {{1, 2}, {2, 3}, {1, 3}}, 4);
  EXPECT_TRUE(tri.radical_ci);
  EXPECT_TRUE(tri.normal_domain);
  EXPECT_TRUE(tri.ufd);
  EXPECT_EQ(tri.edge_count, 3);

  const auto edge = certify_lss(2, {{1, 2}}, 1);
  EXPECT_TRUE(edge.radical_ci);
  EXPECT_FALSE(edge.normal_domain);
  EXPECT_FALSE(edge.ufd);
}

TEST(CertifyLss, Validation) {
  EXPECT_THROW((void)certify_lss(3, {{1, 1}}, 4), InvalidArgument);
  EXPECT_THROW((void)certify_lss(3, {{1, 4}}, 4), InvalidArgument);
  EXPECT_THROW((void)certify_lss(1, {}, 4), InvalidArgument);
  EXPECT_EQ(certify_lss(4, {{1, 2}, {2, 1}, {1, 2}}, 4).edge_count, 1);
}
