#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "symgame/config.hpp"
#include "symgame/error.hpp"
#include "symgame/matrix.hpp"
#include "symgame/permutation.hpp"
#include "symgame/rational.hpp"

using namespace symgame;

namespace {

PermutationMatrix delta(std::vector<std::uint32_t> image) {
  return PermutationMatrix(std::move(image));
}

// Independent expansion oracle for the semi-tensor product, written directly
// from the definition on plain nested vectors. Shares no code with the
// library path it checks.
using Grid = std::vector<std::vector<double>>;

Grid grid_eye(std::size_t n) {
  Grid g(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1.0;
  return g;
}

Grid grid_kron(const Grid& a, const Grid& b) {
  const std::size_t ar = a.size(), ac = a[0].size();
  const std::size_t br = b.size(), bc = b[0].size();
  Grid out(ar * br, std::vector<double>(ac * bc, 0.0));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t r = 0; r < br; ++r)
        for (std::size_t c = 0; c < bc; ++c) out[i * br + r][j * bc + c] = a[i][j] * b[r][c];
  return out;
}

Grid grid_mul(const Grid& a, const Grid& b) {
  const std::size_t ar = a.size(), ac = a[0].size(), bc = b[0].size();
  Grid out(ar, std::vector<double>(bc, 0.0));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t k = 0; k < ac; ++k)
      for (std::size_t j = 0; j < bc; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Grid grid_stp(const Grid& a, const Grid& b) {
  const std::size_t n = a[0].size();
  const std::size_t p = b.size();
  const std::size_t t = std::lcm(n, p);
  return grid_mul(grid_kron(a, grid_eye(t / n)), grid_kron(b, grid_eye(t / p)));
}

Grid to_grid(const MatrixD& m) {
  Grid g(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g[r][c] = m(r, c);
  return g;
}

MatrixD random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  MatrixD m(rows, cols);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

MatrixD column(std::initializer_list<double> values) {
  MatrixD m(values.size(), 1);
  std::size_t r = 0;
  for (double v : values) m(r++, 0) = v;
  return m;
}

struct CapGuard {
  std::size_t old = size_cap();
  ~CapGuard() { set_size_cap(old); }
};

}  // namespace

TEST_SUITE("kron") {
  TEST_CASE("one by one identity factor drops out") {
    std::mt19937_64 rng(3);
    MatrixD b = random_matrix(rng, 3, 4);
    CHECK(kron(MatrixD::identity(1), b) == b);
    CHECK(kron(b, MatrixD::identity(1)) == b);
  }

  TEST_CASE("permutation kron identity follows the block layout") {
    CHECK(kron(delta({2, 1}), PermutationMatrix::identity(2)) == delta({3, 4, 1, 2}));
  }

  TEST_CASE("two-factor swap kron identity") {
    CHECK(kron(swap_matrix(2, 2), PermutationMatrix::identity(2)) ==
          delta({1, 2, 5, 6, 3, 4, 7, 8}));
  }

  TEST_CASE("compact and dense kron agree on permutations") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::uint32_t> pa(4), pb(3);
      std::iota(pa.begin(), pa.end(), 1u);
      std::iota(pb.begin(), pb.end(), 1u);
      std::shuffle(pa.begin(), pa.end(), rng);
      std::shuffle(pb.begin(), pb.end(), rng);
      PermutationMatrix a = delta(pa), b = delta(pb);
      CHECK(dense<double>(kron(a, b)) == kron(dense<double>(a), dense<double>(b)));
    }
  }
}

TEST_SUITE("stp") {
  TEST_CASE("matching inner dimensions reduce to the ordinary product") {
    std::mt19937_64 rng(11);
    MatrixD a = random_matrix(rng, 2, 2);
    MatrixD b = random_matrix(rng, 2, 2);
    CHECK(stp(a, b) == a * b);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4, q = 1 + rng() % 4;
      MatrixD x = random_matrix(rng, m, n);
      MatrixD y = random_matrix(rng, n, q);
      CHECK(stp(x, y) == x * y);
    }
  }

  TEST_CASE("basis vectors concatenate indices") {
    MatrixD x = column({1, 0});
    MatrixD y = column({0, 1});
    CHECK(stp(x, y) == column({0, 1, 0, 0}));
  }

  TEST_CASE("row against a shorter basis vector keeps the leading block") {
    MatrixD v(1, 8);
    for (std::size_t c = 0; c < 8; ++c) v(0, c) = static_cast<double>(c + 1) * 10;
    MatrixD x = column({1, 0});
    const MatrixD got = stp(v, x);
    REQUIRE(got.rows() == 1);
    REQUIRE(got.cols() == 4);
    // frozen from the expansion oracle below
    CHECK(got == MatrixD(1, 4, {10, 20, 30, 40}));
    const Grid expected = grid_stp(to_grid(v), to_grid(x));
    for (std::size_t c = 0; c < 4; ++c) CHECK(got(0, c) == expected[0][c]);
  }

  TEST_CASE("expansion oracle agrees on random shapes") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t m = 1 + rng() % 3, n = 1 + rng() % 4;
      const std::size_t p = 1 + rng() % 4, q = 1 + rng() % 3;
      MatrixD a = random_matrix(rng, m, n);
      MatrixD b = random_matrix(rng, p, q);
      const MatrixD got = stp(a, b);
      const Grid expected = grid_stp(to_grid(a), to_grid(b));
      REQUIRE(got.rows() == expected.size());
      REQUIRE(got.cols() == expected[0].size());
      for (std::size_t r = 0; r < got.rows(); ++r)
        for (std::size_t c = 0; c < got.cols(); ++c) CHECK(got(r, c) == expected[r][c]);
    }
  }

  TEST_CASE("associative on chains of basis vectors") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t dims[3] = {2 + rng() % 3, 2 + rng() % 3, 2 + rng() % 3};
      MatrixD vecs[3];
      for (int i = 0; i < 3; ++i) {
        vecs[i] = MatrixD(dims[i], 1);
        vecs[i](rng() % dims[i], 0) = 1.0;
      }
      CHECK(stp(stp(vecs[0], vecs[1]), vecs[2]) == stp(vecs[0], stp(vecs[1], vecs[2])));
    }
  }

  TEST_CASE("vector factor exchange through the swap matrix") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
      MatrixD x = random_matrix(rng, m, 1);
      MatrixD y = random_matrix(rng, n, 1);
      CHECK(stp(y, x) == dense<double>(swap_matrix(m, n)) * stp(x, y));
    }
  }
}

TEST_SUITE("swap matrices") {
  TEST_CASE("degenerate factor gives the identity") {
    for (std::size_t n = 1; n <= 5; ++n) {
      CHECK(swap_matrix(1, n) == PermutationMatrix::identity(n));
      CHECK(swap_matrix(n, 1) == PermutationMatrix::identity(n));
    }
  }

  TEST_CASE("golden small forms") {
    CHECK(swap_matrix(2, 3) == delta({1, 3, 5, 2, 4, 6}));
    // enumerated by hand over the four double-index positions
    CHECK(swap_matrix(2, 2) == delta({1, 3, 2, 4}));
  }

  TEST_CASE("transpose equals inverse equals reversed factors") {
    for (std::size_t m = 1; m <= 6; ++m) {
      for (std::size_t n = 1; n <= 6; ++n) {
        const PermutationMatrix w = swap_matrix(m, n);
        const PermutationMatrix back = swap_matrix(n, m);
        CHECK(transpose(dense<Rational>(w)) == dense<Rational>(back));
        CHECK(perm_compose(w, back) == PermutationMatrix::identity(m * n));
        CHECK(perm_inverse(w) == back);
      }
    }
  }

  TEST_CASE("three-factor decomposition") {
    for (std::size_t p = 1; p <= 4; ++p)
      for (std::size_t q = 1; q <= 4; ++q)
        for (std::size_t r = 1; r <= 4; ++r) {
          const PermutationMatrix lhs = swap_matrix(p * q, r);
          const PermutationMatrix rhs =
              perm_compose(kron(swap_matrix(p, r), PermutationMatrix::identity(q)),
                           kron(PermutationMatrix::identity(p), swap_matrix(q, r)));
          CHECK(lhs == rhs);
        }
  }

  TEST_CASE("conjugation swaps kron factors") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
      const std::size_t p = 1 + rng() % 4, q = 1 + rng() % 4;
      MatrixD a = random_matrix(rng, m, n);
      MatrixD b = random_matrix(rng, p, q);
      const MatrixD lhs =
          dense<double>(swap_matrix(m, p)) * kron(a, b) * dense<double>(swap_matrix(q, n));
      CHECK(lhs == kron(b, a));
    }
  }

  TEST_CASE("braid relation between neighboring block swaps") {
    for (std::size_t k = 2; k <= 4; ++k) {
      const PermutationMatrix w = swap_matrix(k, k);
      const PermutationMatrix eye = PermutationMatrix::identity(k);
      const PermutationMatrix a = kron(eye, w);
      const PermutationMatrix b = kron(w, eye);
      CHECK(perm_compose(perm_compose(a, b), a) == perm_compose(perm_compose(b, a), b));
    }
  }
}

TEST_SUITE("permutation algebra") {
  TEST_CASE("compose with identity and involutions") {
    const PermutationMatrix p = delta({2, 1});
    CHECK(perm_compose(p, PermutationMatrix::identity(2)) == p);
    CHECK(perm_compose(PermutationMatrix::identity(2), p) == p);
    CHECK(perm_compose(p, p) == PermutationMatrix::identity(2));
  }

  TEST_CASE("composition matches the dense product") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::uint32_t> pa(8), pb(8);
      std::iota(pa.begin(), pa.end(), 1u);
      std::iota(pb.begin(), pb.end(), 1u);
      std::shuffle(pa.begin(), pa.end(), rng);
      std::shuffle(pb.begin(), pb.end(), rng);
      const PermutationMatrix a = delta(pa), b = delta(pb);
      CHECK(dense<Rational>(perm_compose(a, b)) == dense<Rational>(a) * dense<Rational>(b));
    }
  }

  TEST_CASE("row action golden value") {
    const std::vector<double> v{1, 2, 3, 4, 5, 6, 7, 8};
    const auto out = perm_apply_row(v, delta({1, 3, 2, 4, 5, 7, 6, 8}));
    CHECK(out == std::vector<double>{1, 3, 2, 4, 5, 7, 6, 8});
    CHECK(perm_apply_row(v, PermutationMatrix::identity(8)) == v);
  }

  TEST_CASE("row action matches the dense product") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::uint32_t> image(6);
      std::iota(image.begin(), image.end(), 1u);
      std::shuffle(image.begin(), image.end(), rng);
      const PermutationMatrix p = delta(image);
      MatrixD v = random_matrix(rng, 1, 6);
      const MatrixD prod = v * dense<double>(p);
      const auto fast = perm_apply_row(std::span<const double>(v.data()), p);
      for (std::size_t c = 0; c < 6; ++c) CHECK(fast[c] == prod(0, c));
    }
  }

  TEST_CASE("rejects malformed images and size mismatches") {
    CHECK_THROWS_AS(delta({1, 1}), ValueError);
    CHECK_THROWS_AS(delta({0, 1}), ValueError);
    CHECK_THROWS_AS(delta({3, 1}), ValueError);
    CHECK_THROWS_AS(perm_compose(delta({1, 2}), PermutationMatrix::identity(3)), DimensionError);
    const std::vector<double> v{1, 2, 3};
    CHECK_THROWS_AS(perm_apply_row(v, PermutationMatrix::identity(4)), DimensionError);
  }

  TEST_CASE("dense expansions respect the size cap") {
    CapGuard guard;
    set_size_cap(100);
    CHECK_THROWS_AS(swap_matrix(20, 20), SizeLimitError);
    CHECK_THROWS_AS(MatrixD(11, 11), SizeLimitError);
    CHECK_THROWS_AS(kron(MatrixD(10, 10), MatrixD(2, 2)), SizeLimitError);
    set_size_cap(1u << 24);
    CHECK(swap_matrix(20, 20).size() == 400);
  }
}
