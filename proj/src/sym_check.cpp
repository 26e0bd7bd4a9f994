#include "symgame/sym_check.hpp"

#include <cmath>

#include "symgame/sym_basis.hpp"

namespace symgame {

TransposeOperator t_mu(int r, int players, int strategies) {
  const int n = players;
  const int k = strategies;
  if (n < 2) throw ValueError("slot transpositions need at least two players");
  if (k < 1) throw ValueError("strategy count must be positive");
  if (r < 1 || r > n - 1) {
    throw ValueError("transposition slot " + std::to_string(r) + " outside 1.." +
                     std::to_string(n - 1));
  }
  const auto pow_k = [k](int e) {
    return checked_pow(static_cast<std::size_t>(k), static_cast<unsigned>(e));
  };
  PermutationMatrix perm = kron(
      kron(PermutationMatrix::identity(pow_k(r - 1)),
           swap_matrix(static_cast<std::size_t>(k), static_cast<std::size_t>(k))),
      PermutationMatrix::identity(pow_k(n - r - 1)));
  return TransposeOperator{r, n, k, std::move(perm)};
}

std::string to_string(CheckMethod method) {
  switch (method) {
    case CheckMethod::transpositions:
      return "transpositions";
    case CheckMethod::minimal:
      return "minimal";
    case CheckMethod::full_system:
      return "full-system";
  }
  return "unknown";
}

namespace {

struct ReportBuilder {
  double max_residual = 0.0;
  std::vector<Violation> violations;
  double tol;

  explicit ReportBuilder(double tolerance) : tol(tolerance) {}

  void record(std::string equation, std::uint64_t lhs_index, std::uint64_t rhs_index,
              double difference) {
    const double magnitude = std::abs(difference);
    if (magnitude > max_residual) max_residual = magnitude;
    if (magnitude > tol) {
      violations.push_back(Violation{std::move(equation), lhs_index, rhs_index, difference});
    }
  }

  CheckReport finish(CheckMethod method) {
    return CheckReport{violations.empty(), method, max_residual, std::move(violations)};
  }
};

std::string pair_equation(int lhs_player, int rhs_player, int slot) {
  return "V" + std::to_string(lhs_player) + "=V" + std::to_string(rhs_player) + "*T" +
         std::to_string(slot);
}

}  // namespace

CheckReport check_transpositions(const FiniteGame& game, double tol) {
  const int n = game.players();
  const std::size_t kn = game.profile_count();
  ReportBuilder report(tol);
  for (int r = 1; r <= n - 1; ++r) {
    const TransposeOperator op = t_mu(r, n, game.strategies());
    for (int i = 1; i <= n; ++i) {
      const int mapped = i == r ? r + 1 : i == r + 1 ? r : i;
      const auto lhs = game.row(i);
      const auto rhs = perm_apply_row(game.row(mapped), op.perm);
      for (std::size_t j = 0; j < kn; ++j) {
        report.record(pair_equation(i, mapped, r),
                      static_cast<std::uint64_t>(i - 1) * kn + j + 1,
                      static_cast<std::uint64_t>(mapped - 1) * kn + op.perm.image(j + 1),
                      lhs[j] - rhs[j]);
      }
    }
  }
  return report.finish(CheckMethod::transpositions);
}

CheckReport check_minimal(const FiniteGame& game, double tol) {
  const int n = game.players();
  const int k = game.strategies();
  const std::size_t kn = game.profile_count();
  ReportBuilder report(tol);

  // chain part: V_i against V_{i+1} * T_i
  for (int i = 1; i <= n - 1; ++i) {
    const TransposeOperator op = t_mu(i, n, k);
    const auto lhs = game.row(i);
    const auto rhs = perm_apply_row(game.row(i + 1), op.perm);
    for (std::size_t j = 0; j < kn; ++j) {
      report.record(pair_equation(i, i + 1, i), static_cast<std::uint64_t>(i - 1) * kn + j + 1,
                    static_cast<std::uint64_t>(i) * kn + op.perm.image(j + 1), lhs[j] - rhs[j]);
    }
  }

  // class part: entries of the last structure vector must agree across the
  // rearrangements of the first n-1 strategy slots
  if (n >= 3) {
    const auto last = game.row(n);
    const std::uint64_t last_offset = static_cast<std::uint64_t>(n - 1) * kn;
    for (const MultisetClass& cls : multiset_classes(n - 1, k)) {
      std::size_t rep_base = 0;
      for (int c : cls.representative) {
        rep_base = rep_base * static_cast<std::size_t>(k) + static_cast<std::size_t>(c - 1);
      }
      for (const auto& member : cls.members) {
        if (member == cls.representative) continue;
        std::size_t mem_base = 0;
        for (int c : member) {
          mem_base = mem_base * static_cast<std::size_t>(k) + static_cast<std::size_t>(c - 1);
        }
        for (int s = 1; s <= k; ++s) {
          const std::size_t a = rep_base * static_cast<std::size_t>(k) + static_cast<std::size_t>(s);
          const std::size_t b = mem_base * static_cast<std::size_t>(k) + static_cast<std::size_t>(s);
          report.record("x" + std::to_string(a) + "=x" + std::to_string(b), last_offset + a,
                        last_offset + b, last[a - 1] - last[b - 1]);
        }
      }
    }
  }
  return report.finish(CheckMethod::minimal);
}

CheckReport check_full_system(const FiniteGame& game, double tol) {
  const SparseMatrix system = build_full_system(game.players(), game.strategies());
  const std::vector<double> residual = system.apply(std::span<const double>(game.flat()));
  ReportBuilder report(tol);
  // Every row is a difference of two positions; name them for the report.
  std::vector<std::uint64_t> plus(system.rows(), 0);
  std::vector<std::uint64_t> minus(system.rows(), 0);
  for (const Triplet& t : system.entries()) {
    (t.value.sign() > 0 ? plus : minus)[t.row] = t.col + 1;
  }
  for (std::size_t r = 0; r < system.rows(); ++r) {
    report.record("row" + std::to_string(r + 1), plus[r], minus[r], residual[r]);
  }
  return report.finish(CheckMethod::full_system);
}

SparseMatrix build_full_system(int players, int strategies) {
  const int n = players;
  if (n < 2) throw ValueError("the system needs at least two players");
  const std::size_t kn =
      checked_pow(static_cast<std::size_t>(strategies), static_cast<unsigned>(n));
  const std::size_t cols = static_cast<std::size_t>(n) * kn;
  SparseMatrix out(static_cast<std::size_t>(2 * n - 3) * kn, cols);

  for (int i = 1; i <= n - 1; ++i) {
    // row j of -T (V_{i+1})^T picks the column whose 1 sits in row j
    const PermutationMatrix inv = perm_inverse(t_mu(i, n, strategies).perm);
    const std::size_t row_offset = static_cast<std::size_t>(i - 1) * kn;
    const std::size_t lhs_offset = static_cast<std::size_t>(i - 1) * kn;
    const std::size_t rhs_offset = static_cast<std::size_t>(i) * kn;
    for (std::size_t j = 1; j <= kn; ++j) {
      out.add(row_offset + j - 1, lhs_offset + j - 1, Rational(1));
      out.add(row_offset + j - 1, rhs_offset + inv.image(j) - 1, Rational(-1));
    }
  }
  const std::size_t lower_offset = static_cast<std::size_t>(n - 1) * kn;
  const std::size_t last_block = static_cast<std::size_t>(n - 1) * kn;
  for (int j = 1; j <= n - 2; ++j) {
    const PermutationMatrix inv = perm_inverse(t_mu(j, n, strategies).perm);
    const std::size_t row_offset = lower_offset + static_cast<std::size_t>(j - 1) * kn;
    for (std::size_t c = 1; c <= kn; ++c) {
      const std::size_t image = inv.image(c);
      if (image == c) continue;  // fixed point, zero row
      out.add(row_offset + c - 1, last_block + c - 1, Rational(1));
      out.add(row_offset + c - 1, last_block + image - 1, Rational(-1));
    }
  }
  out.canonicalize();
  return out;
}

SparseMatrix build_minimal_system(int players, int strategies) {
  const int n = players;
  const int k = strategies;
  if (n < 2) throw ValueError("the system needs at least two players");
  const std::size_t kn = checked_pow(static_cast<std::size_t>(k), static_cast<unsigned>(n));
  const auto classes = multiset_classes(n - 1, k);
  std::size_t zeta_count = 0;
  for (const auto& cls : classes) zeta_count += cls.members.size() - 1;

  const std::size_t rows =
      static_cast<std::size_t>(n - 1) * kn + zeta_count * static_cast<std::size_t>(k);
  SparseMatrix out(rows, static_cast<std::size_t>(n) * kn);

  for (int i = 1; i <= n - 1; ++i) {
    const PermutationMatrix inv = perm_inverse(t_mu(i, n, k).perm);
    const std::size_t row_offset = static_cast<std::size_t>(i - 1) * kn;
    for (std::size_t j = 1; j <= kn; ++j) {
      out.add(row_offset + j - 1, static_cast<std::size_t>(i - 1) * kn + j - 1, Rational(1));
      out.add(row_offset + j - 1, static_cast<std::size_t>(i) * kn + inv.image(j) - 1,
              Rational(-1));
    }
  }

  const std::size_t lower_offset = static_cast<std::size_t>(n - 1) * kn;
  const std::size_t last_block = static_cast<std::size_t>(n - 1) * kn;
  std::size_t zeta_index = 0;
  for (const auto& cls : classes) {
    std::size_t rep_base = 0;
    for (int c : cls.representative) {
      rep_base = rep_base * static_cast<std::size_t>(k) + static_cast<std::size_t>(c - 1);
    }
    for (const auto& member : cls.members) {
      if (member == cls.representative) continue;
      std::size_t mem_base = 0;
      for (int c : member) {
        mem_base = mem_base * static_cast<std::size_t>(k) + static_cast<std::size_t>(c - 1);
      }
      for (int s = 0; s < k; ++s) {
        const std::size_t row =
            lower_offset + zeta_index * static_cast<std::size_t>(k) + static_cast<std::size_t>(s);
        out.add(row, last_block + rep_base * static_cast<std::size_t>(k) + static_cast<std::size_t>(s),
                Rational(1));
        out.add(row, last_block + mem_base * static_cast<std::size_t>(k) + static_cast<std::size_t>(s),
                Rational(-1));
      }
      ++zeta_index;
    }
  }
  out.canonicalize();
  return out;
}

}  // namespace symgame
