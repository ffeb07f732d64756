#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latq/linalg.hpp"
#include "testmats.hpp"

using namespace latq;

namespace {

IntMat random_int_mat(std::mt19937& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

IntMat block_diag(const IntMat& a, const IntMat& b) {
  IntMat m = IntMat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

}  // namespace

TEST_CASE("snf of identity") {
  IntMat id = IntMat::Identity(2, 2);
  SmithResult s = snf(id);
  CHECK(s.d == id);
  CHECK(s.u == id);
  CHECK(s.v == id);
}

TEST_CASE("snf of hyperbolic plane gram") {
  IntMat m(2, 2);
  m << 0, 1, 1, 0;
  SmithResult s = snf(m);
  CHECK(s.d(0, 0) == 1);
  CHECK(s.d(1, 1) == 1);
  CHECK(s.u * m * s.v == s.d);
}

TEST_CASE("snf of scaled hyperbolic plane") {
  IntMat m(2, 2);
  m << 0, 2, 2, 0;
  SmithResult s = snf(m);
  CHECK(s.d(0, 0) == 2);
  CHECK(s.d(1, 1) == 2);
  CHECK(s.d(0, 0) * s.d(1, 1) == abs(bareiss_det(m)));
}

TEST_CASE("snf properties on random matrices") {
  std::mt19937 rng(20240517);
  for (int trial = 0; trial < 120; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 5);
    IntMat m = random_int_mat(rng, rows, cols, 9);
    SmithResult s = snf(m);

    CHECK(s.u * m * s.v == s.d);
    CHECK(abs(bareiss_det(s.u)) == 1);
    CHECK(abs(bareiss_det(s.v)) == 1);

    auto div = s.divisors();
    for (size_t i = 0; i + 1 < div.size(); ++i) {
      CHECK(div[i] > 0);
      CHECK((div[i + 1] % div[i]).is_zero());
    }
    // Off-diagonal zero, trailing diagonal zero after the rank.
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (i != j) CHECK(s.d(i, j).is_zero());
    int rank = s.rank();
    for (int i = rank; i < std::min(rows, cols); ++i)
      CHECK(s.d(i, i).is_zero());

    if (rows == cols) {
      Int prod = 1;
      for (const Int& d : div) prod *= d;
      if (rank == rows) CHECK(prod == abs(bareiss_det(m)));
      if (rank < rows) CHECK(bareiss_det(m).is_zero());
    }
  }
}

TEST_CASE("snf survives entries that outgrow 64 bits") {
  // Diagonal blow-up test: product of divisors equals |det|, which here is
  // far beyond machine-word range.
  std::mt19937 rng(7);
  IntMat m = random_int_mat(rng, 6, 6, 9);
  for (int i = 0; i < 6; ++i) m(i, i) = Int("1000000000000") + Int(i);
  SmithResult s = snf(m);
  CHECK(s.u * m * s.v == s.d);
  Int prod = 1;
  for (const Int& d : s.divisors()) prod *= d;
  CHECK(prod == abs(bareiss_det(m)));
}

TEST_CASE("signature of standard grams") {
  Signature se8 = signature(testmats::e8_gram());
  CHECK(se8 == Signature{0, 8, 0});
  Signature su = signature(testmats::u_gram());
  CHECK(su == Signature{1, 1, 0});
  Signature big = signature(block_diag(
      block_diag(testmats::u_gram(), testmats::e8_gram()),
      block_diag(testmats::d4_gram(), testmats::d4_gram())));
  CHECK(big == Signature{1, 17, 0});
}

TEST_CASE("signature is additive over direct sums") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n1 = 1 + static_cast<int>(rng() % 4);
    int n2 = 1 + static_cast<int>(rng() % 4);
    IntMat a = random_int_mat(rng, n1, n1, 6);
    IntMat b = random_int_mat(rng, n2, n2, 6);
    IntMat as = a + IntMat(a.transpose());
    IntMat bs = b + IntMat(b.transpose());
    Signature s1 = signature(as);
    Signature s2 = signature(bs);
    Signature s12 = signature(block_diag(as, bs));
    CHECK(s12.n_plus == s1.n_plus + s2.n_plus);
    CHECK(s12.n_minus == s1.n_minus + s2.n_minus);
    CHECK(s12.n_zero == s1.n_zero + s2.n_zero);
  }
}

TEST_CASE("snf rank agrees with signature rank") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    IntMat a = random_int_mat(rng, n, n, 6);
    IntMat sym = a + IntMat(a.transpose());
    CHECK(snf(sym).rank() == signature(sym).rank());
  }
}

TEST_CASE("kernel of nondegenerate gram is empty") {
  CHECK(kernel_basis(testmats::e8_gram()).cols() == 0);
}

TEST_CASE("kernel of 1x1 zero") {
  IntMat z = IntMat::Zero(1, 1);
  IntMat k = kernel_basis(z);
  REQUIRE(k.cols() == 1);
  CHECK(abs(k(0, 0)) == 1);
}

TEST_CASE("kernel basis is saturated and annihilates") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 2 + static_cast<int>(rng() % 4);
    IntMat m = random_int_mat(rng, rows, cols, 4);
    IntMat k = kernel_basis(m);
    if (k.cols() == 0) continue;
    CHECK(is_zero_matrix(m * k));
    CHECK(columns_primitive(k));
  }
}

TEST_CASE("saturation basis spans the same rational space") {
  IntMat b(3, 2);
  b << 2, 0, 0, 4, 0, 0;
  IntMat s = saturation_basis(b);
  REQUIRE(s.cols() == 2);
  CHECK(columns_primitive(s));
  // Each original column is an integer combination of the saturated basis.
  RatMat sq = to_rat(s);
  RatMat full(3, 3);
  full << sq, RatMat::Zero(3, 1);
  // Rank stays 2.
  CHECK(signature(IntMat(s.transpose() * s)).rank() == 2);
}

TEST_CASE("unimodular inverse round-trips") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    IntMat m = random_int_mat(rng, n, n, 5);
    SmithResult s = snf(m);
    IntMat ui = unimodular_inverse(s.u);
    CHECK(ui * s.u == IntMat::Identity(n, n));
  }
}
