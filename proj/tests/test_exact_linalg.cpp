#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <span>
#include <vector>

#include "symgame/exact_linalg.hpp"
#include "symgame/matrix.hpp"
#include "symgame/rational.hpp"
#include "symgame/sparse.hpp"

using namespace symgame;

namespace {

Matrix<Rational> random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix<Rational> m(rows, cols);
  std::uniform_int_distribution<int> dist(-2, 2);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(dist(rng));
  return m;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
  }

  TEST_CASE("parsing") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("+4/8") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ValueError);
    CHECK(Rational::parse("3/4").to_string() == "3/4");
    CHECK(Rational::parse("-6/3").to_string() == "-2");
  }

  TEST_CASE("overflow is detected, not wrapped") {
    const Rational big(INT64_MAX);
    CHECK_THROWS_AS(big * Rational(2), OverflowError);
    CHECK_THROWS_AS(big + big, OverflowError);
    CHECK_THROWS_AS(Rational(0, 0), ValueError);
  }
}

TEST_SUITE("exact rank") {
  TEST_CASE("hand-checked small matrices") {
    CHECK(rank(Matrix<Rational>::identity(5)) == 5);
    CHECK(rank(Matrix<Rational>(4, 3)) == 0);

    Matrix<Rational> collinear(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)});
    CHECK(rank(collinear) == 1);

    Matrix<Rational> m(3, 3,
                       {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5),
                        Rational(6), Rational(7), Rational(8), Rational(9)});
    CHECK(rank(m) == 2);
    CHECK(nullity(SparseMatrix::from_dense(m)) == 1);

    Matrix<Rational> fractions(2, 3,
                               {Rational(1, 2), Rational(1, 3), Rational(1, 6), Rational(1, 4),
                                Rational(1, 6), Rational(1, 12)});
    CHECK(rank(fractions) == 1);
  }

  TEST_CASE("rank is invariant under transpose and duplication") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
      const Matrix<Rational> m = random_int_matrix(rng, rows, cols);
      const std::size_t r = rank(m);
      CHECK(r <= std::min(rows, cols));
      CHECK(rank(transpose(m)) == r);
      const SparseMatrix s = SparseMatrix::from_dense(m);
      CHECK(rank(SparseMatrix::hconcat(s, s)) == r);
      CHECK(rank(SparseMatrix::vconcat(s, s)) == r);
    }
  }

  TEST_CASE("row operations preserve rank") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t rows = 2 + rng() % 5, cols = 1 + rng() % 6;
      Matrix<Rational> m = random_int_matrix(rng, rows, cols);
      const std::size_t r = rank(m);
      // add a multiple of row 0 to row 1
      for (std::size_t c = 0; c < cols; ++c) m(1, c) += Rational(3) * m(0, c);
      CHECK(rank(m) == r);
    }
  }

  TEST_CASE("span comparisons") {
    Matrix<Rational> a(3, 2,
                       {Rational(1), Rational(0), Rational(0), Rational(1), Rational(0),
                        Rational(0)});
    Matrix<Rational> b(3, 2,
                       {Rational(1), Rational(1), Rational(1), Rational(-1), Rational(0),
                        Rational(0)});
    Matrix<Rational> c(3, 2,
                       {Rational(1), Rational(0), Rational(0), Rational(0), Rational(0),
                        Rational(1)});
    CHECK(same_column_span(SparseMatrix::from_dense(a), SparseMatrix::from_dense(b)));
    CHECK_FALSE(same_column_span(SparseMatrix::from_dense(a), SparseMatrix::from_dense(c)));
    CHECK(same_row_space(SparseMatrix::from_dense(transpose(a)),
                         SparseMatrix::from_dense(transpose(b))));
    CHECK_FALSE(same_row_space(SparseMatrix::from_dense(transpose(a)),
                               SparseMatrix::from_dense(transpose(c))));
  }

  TEST_CASE("difference chains have one free variable per component") {
    // x1=x2, x2=x3 and x4=x5 on six unknowns: components {1,2,3}, {4,5},
    // {6}, so rank 3 and nullity 3
    SparseMatrix m(3, 6);
    m.add(0, 0, Rational(1));
    m.add(0, 1, Rational(-1));
    m.add(1, 1, Rational(1));
    m.add(1, 2, Rational(-1));
    m.add(2, 3, Rational(1));
    m.add(2, 4, Rational(-1));
    CHECK(rank(m) == 3);
    CHECK(nullity(m) == 3);
    // a redundant equality changes nothing
    SparseMatrix redundant = m;
    redundant.add(0, 0, Rational(0));
    SparseMatrix extra(1, 6);
    extra.add(0, 0, Rational(1));
    extra.add(0, 2, Rational(-1));  // implied by the chain
    CHECK(rank(SparseMatrix::vconcat(m, extra)) == 3);
  }

  TEST_CASE("zero rows and empty shapes") {
    SparseMatrix m(4, 3);
    m.add(2, 1, Rational(5));
    CHECK(rank(m) == 1);
    CHECK(nullity(m) == 2);
    SparseMatrix empty(0, 4);
    CHECK(rank(empty) == 0);
    CHECK(nullity(empty) == 4);
  }
}

TEST_SUITE("sparse matrix") {
  TEST_CASE("triplet export is 1-based and row-major") {
    SparseMatrix m(3, 3);
    m.add(2, 0, Rational(-1));
    m.add(0, 1, Rational(1, 2));
    m.add(0, 0, Rational(1));
    CHECK(m.to_triplet_text() == "1 1 1\n1 2 1/2\n3 1 -1\n");
  }

  TEST_CASE("duplicate entries merge and zeros vanish") {
    SparseMatrix m(2, 2);
    m.add(0, 0, Rational(1));
    m.add(0, 0, Rational(-1));
    m.add(1, 1, Rational(2));
    m.add(1, 1, Rational(3));
    m.canonicalize();
    REQUIRE(m.entries().size() == 1);
    CHECK(m.entries()[0].value == Rational(5));
    CHECK(m.to_triplet_text() == "2 2 5\n");
  }

  TEST_CASE("apply multiplies against a vector") {
    SparseMatrix m(2, 3);
    m.add(0, 0, Rational(1));
    m.add(0, 2, Rational(-1));
    m.add(1, 1, Rational(2));
    const std::vector<Rational> x{Rational(3), Rational(4), Rational(5)};
    const auto y = m.apply(std::span<const Rational>(x));
    CHECK(y[0] == Rational(-2));
    CHECK(y[1] == Rational(8));
    const std::vector<double> xd{3, 4, 5};
    const auto yd = m.apply(std::span<const double>(xd));
    CHECK(yd[0] == -2.0);
    CHECK(yd[1] == 8.0);
  }
}
