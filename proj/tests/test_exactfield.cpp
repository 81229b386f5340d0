#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "frames/errors.hpp"
#include "frames/field.hpp"
#include "frames/witness.hpp"

using namespace frames;

namespace {

// Determinant by permutation expansion, for the minor-based rank oracle.
Int det_mod(const std::vector<std::vector<Int>>& m, Int p) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Int total = 0;
  do {
    Int term = 1;
    for (std::size_t i = 0; i < k; ++i) term = term * m[i][perm[i]] % p;
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    total = (total + (inversions % 2 ? p - term : term)) % p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::size_t minor_rank(const Matrix& a, Int p) {
  for (std::size_t k = std::min(a.rows(), a.cols()); k > 0; --k) {
    for (const auto& rows : subsets(a.rows(), k)) {
      for (const auto& cols : subsets(a.cols(), k)) {
        std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = static_cast<Int>(a.at(rows[i], cols[j]));
        if (det_mod(m, p) != 0) return k;
      }
    }
  }
  return 0;
}

Matrix prop64(const PrimeField& f, std::size_t d, std::size_t n) { return isotropic_block_witness(f, d, n); }

}  // namespace

TEST(PrimeField, Nu) {
  EXPECT_EQ(PrimeField(5).nu(), 2u);
  EXPECT_EQ(PrimeField(13).nu(), 5u);
  const PrimeField f;
  EXPECT_EQ(f.modulus(), 998244353u);
  EXPECT_EQ(f.add(f.mul(f.nu(), f.nu()), 1), 0u);
  EXPECT_LT(f.nu(), f.modulus() - f.nu());
}

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_THROW(PrimeField(7), InvalidArgument);
  EXPECT_THROW(PrimeField(21), InvalidArgument);
  EXPECT_THROW(PrimeField(1), InvalidArgument);
  EXPECT_THROW(PrimeField(2), InvalidArgument);
  EXPECT_NO_THROW(PrimeField(9223372036854775549ULL));
}

TEST(PrimeField, MillerRabin) {
  std::vector<bool> sieve(5000, true);
  sieve[0] = sieve[1] = false;
  for (std::size_t i = 2; i < sieve.size(); ++i)
    if (sieve[i])
      for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
  for (std::size_t i = 0; i < sieve.size(); ++i) ASSERT_EQ(is_prime(i), sieve[i]) << i;
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
}

TEST(PrimeField, ArithmeticAndSqrt) {
  for (std::uint64_t p : {5ULL, 13ULL, 17ULL, 998244353ULL}) {
    const PrimeField f(p);
    Rng rng(p);
    for (int t = 0; t < 200; ++t) {
      const Scalar a = rng.uniform(f);
      const Scalar b = rng.nonzero(f);
      ASSERT_EQ(f.mul(b, f.inv(b)), 1u);
      ASSERT_EQ(f.add(f.sub(a, b), b), a);
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
      const auto r = f.sqrt(f.mul(a, a));
      ASSERT_TRUE(r.has_value());
      ASSERT_EQ(f.mul(*r, *r), f.mul(a, a));
    }
    EXPECT_THROW((void)f.inv(0), DomainError);
    EXPECT_EQ(f.from_int(-1), p - 1);
    EXPECT_EQ(f.to_signed(p - 1), -1);
  }
  const PrimeField f13(13);
  for (Scalar a = 1; a < 13; ++a) EXPECT_EQ(f13.sqrt(a).has_value(), f13.is_square(a));
  EXPECT_FALSE(f13.sqrt(2).has_value());
}

TEST(Rng, Deterministic) {
  Rng a(42), b(42), c(43);
  const PrimeField f;
  const auto va = random_vector(f, a, 16);
  EXPECT_EQ(va, random_vector(f, b, 16));
  EXPECT_NE(va, random_vector(f, c, 16));
}

TEST(Bilinear, Examples) {
  const PrimeField f;
  EXPECT_EQ(bilinear(f, {1, f.nu()}, {1, f.nu()}), 0u);
  EXPECT_EQ(bilinear(f, {1, 0, 0}, {0, 1, 0}), 0u);
  EXPECT_EQ(bilinear(f, {1, 0, 0}, {1, 0, 0}), 1u);
  EXPECT_THROW((void)bilinear(f, {1, 0}, {1}), InvalidArgument);
}

TEST(Gram, Examples) {
  const PrimeField f;
  EXPECT_TRUE(gram(f, prop64(f, 8, 4)).is_zero());
  EXPECT_TRUE(gram(f, Matrix(5, 3)).is_zero());
  Matrix ortho(4, 3);
  for (std::size_t j = 0; j < 3; ++j) ortho.at(j, j) = 1;
  EXPECT_EQ(gram(f, ortho), Matrix::identity(3));
  Rng rng(1);
  const Matrix q = random_isometry(f, rng, 6);
  EXPECT_EQ(gram(f, q), Matrix::identity(6));
}

TEST(Rank, Examples) {
  const PrimeField f;
  EXPECT_EQ(rank(f, Matrix::identity(5)), 5u);
  EXPECT_EQ(rank(f, Matrix(4, 6)), 0u);
  Rng rng(9);
  Matrix m = random_matrix(f, rng, 5, 7);
  for (std::size_t i = 2; i < 5; ++i)
    for (std::size_t j = 0; j < 7; ++j) m.at(i, j) = m.at(0, j);
  EXPECT_EQ(rank(f, m), 2u);
  EXPECT_EQ(rank(f, m.transpose()), 2u);
}

TEST(Rank, AgreesWithMinors) {
  const PrimeField f(13);
  Rng rng(2024);
  for (int t = 0; t < 400; ++t) {
    const std::size_t r = 1 + rng.below(4);
    const std::size_t c = 1 + rng.below(4);
    Matrix m = random_matrix(f, rng, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng.below(3) == 0) m.at(i, j) = 0;
    ASSERT_EQ(rank(f, m), minor_rank(m, 13));
  }
}

TEST(Nullspace, AndInverse) {
  const PrimeField f;
  Rng rng(5);
  const Matrix m = random_matrix(f, rng, 3, 7);
  const Matrix ns = nullspace(f, m);
  EXPECT_EQ(ns.cols(), 4u);
  EXPECT_TRUE(multiply(f, m, ns).is_zero());
  EXPECT_EQ(rank(f, ns), 4u);
  const Matrix sq = random_matrix(f, rng, 5, 5);
  const auto inv = inverse(f, sq);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(multiply(f, sq, *inv), Matrix::identity(5));
  EXPECT_FALSE(inverse(f, Matrix(3, 3)).has_value());
}

TEST(FrameInvariants, Examples) {
  const PrimeField f;
  const auto a = frame_invariants(f, prop64(f, 6, 3));
  EXPECT_TRUE(a.in_variety);
  EXPECT_EQ(a.stratum(), (StratumIndex{0, 3}));

  Matrix b(5, 4);
  b.at(0, 0) = 1;
  b.at(1, 1) = 1;
  const auto bi = frame_invariants(f, b);
  EXPECT_EQ(bi.stratum(), (StratumIndex{2, 0}));
  EXPECT_EQ(bi.anisotropic_columns, (std::vector<std::size_t>{0, 1}));

  for (Int delta = 0; delta < 3; ++delta) {
    Matrix a11(4, 3);
    a11.at(0, 0) = 1;
    a11.at(1, 1) = 1;
    a11.at(2, 1) = f.nu();
    a11.at(1, 2) = f.from_int(delta);
    a11.at(2, 2) = f.mul(f.from_int(delta), f.nu());
    EXPECT_EQ(frame_invariants(f, a11).stratum(), (StratumIndex{1, 1}));
  }

  Matrix bad(2, 2);
  bad.at(0, 0) = 1;
  bad.at(0, 1) = 1;
  const auto bad_inv = frame_invariants(f, bad);
  EXPECT_FALSE(bad_inv.in_variety);
  EXPECT_EQ(bad_inv.rank, 1);
}

TEST(FrameInvariants, GroupActions) {
  const PrimeField f;
  Rng rng(77);
  for (Int n = 2; n <= 6; ++n) {
    for (Int d = 1; d <= 9; ++d) {
      const FrameSpaceParams params(d, n);
      for (auto s : enumerate_domain(params)) {
        const Matrix a = sample_stratum_point(f, params, s, rng.next_u64());
        const auto base = frame_invariants(f, a);
        ASSERT_TRUE(base.in_variety);
        ASSERT_EQ(base.stratum(), s);
        ASSERT_LE(base.rk_ani + 2 * base.rk_iso, d);

        std::vector<std::size_t> order(static_cast<std::size_t>(d));
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
        Matrix signed_perm(order.size(), order.size());
        for (std::size_t i = 0; i < order.size(); ++i) signed_perm.at(i, order[i]) = rng.below(2) ? 1 : f.neg(1);
        const auto moved = frame_invariants(f, multiply(f, signed_perm, a));
        ASSERT_EQ(moved.stratum(), s);
        ASSERT_EQ(moved.anisotropic_columns, base.anisotropic_columns);

        const auto rotated = frame_invariants(f, multiply(f, random_isometry(f, rng, order.size()), a));
        ASSERT_EQ(rotated.stratum(), s);

        Matrix scaled = a;
        for (std::size_t j = 0; j < a.cols(); ++j) {
          const Scalar c = rng.nonzero(f);
          for (std::size_t i = 0; i < a.rows(); ++i) scaled.at(i, j) = f.mul(c, a.at(i, j));
        }
        const auto si = frame_invariants(f, scaled);
        ASSERT_EQ(si.stratum(), s);
        ASSERT_EQ(si.anisotropic_columns, base.anisotropic_columns);

        std::vector<std::size_t> cols(a.cols());
        std::iota(cols.begin(), cols.end(), 0);
        std::reverse(cols.begin(), cols.end());
        const auto pi = frame_invariants(f, select_columns(a, cols));
        ASSERT_EQ(pi.stratum(), s);
        std::vector<std::size_t> expected;
        for (auto c : base.anisotropic_columns) expected.push_back(a.cols() - 1 - c);
        std::sort(expected.begin(), expected.end());
        ASSERT_EQ(pi.anisotropic_columns, expected);
      }
    }
  }
}
