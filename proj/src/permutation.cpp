#include "symgame/permutation.hpp"

#include <numeric>

namespace symgame {

PermutationMatrix::PermutationMatrix(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::uint32_t target : image_) {
    if (target < 1 || target > image_.size() || seen[target - 1]) {
      throw ValueError("image is not a permutation of 1.." + std::to_string(image_.size()));
    }
    seen[target - 1] = true;
  }
}

PermutationMatrix PermutationMatrix::identity(std::size_t m) {
  std::vector<std::uint32_t> image(m);
  std::iota(image.begin(), image.end(), 1u);
  return PermutationMatrix(std::move(image), Unchecked{});
}

bool PermutationMatrix::is_identity() const {
  for (std::size_t c = 0; c < image_.size(); ++c) {
    if (image_[c] != c + 1) return false;
  }
  return true;
}

PermutationMatrix perm_compose(const PermutationMatrix& p, const PermutationMatrix& q) {
  if (p.size() != q.size()) {
    throw DimensionError("cannot compose permutations of sizes " + std::to_string(p.size()) +
                         " and " + std::to_string(q.size()));
  }
  // (P*Q) column j = P * delta^{q_j} = delta^{p_{q_j}}.
  std::vector<std::uint32_t> image(p.size());
  for (std::size_t c = 0; c < q.size(); ++c) image[c] = p.image_[q.image_[c] - 1];
  return PermutationMatrix(std::move(image), PermutationMatrix::Unchecked{});
}

PermutationMatrix perm_inverse(const PermutationMatrix& p) {
  std::vector<std::uint32_t> image(p.size());
  for (std::size_t c = 0; c < p.size(); ++c) {
    image[p.image_[c] - 1] = static_cast<std::uint32_t>(c + 1);
  }
  return PermutationMatrix(std::move(image), PermutationMatrix::Unchecked{});
}

PermutationMatrix kron(const PermutationMatrix& p, const PermutationMatrix& q) {
  const std::size_t mp = p.size();
  const std::size_t mq = q.size();
  detail::check_dense_size(mp, mq);
  std::vector<std::uint32_t> image(mp * mq);
  for (std::size_t cp = 0; cp < mp; ++cp) {
    const std::size_t row_block = static_cast<std::size_t>(p.image_[cp] - 1) * mq;
    for (std::size_t cq = 0; cq < mq; ++cq) {
      image[cp * mq + cq] = static_cast<std::uint32_t>(row_block + q.image_[cq]);
    }
  }
  return PermutationMatrix(std::move(image), PermutationMatrix::Unchecked{});
}

PermutationMatrix swap_matrix(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw ValueError("swap matrix factors must be positive");
  detail::check_dense_size(m, n);
  // Column (i, j), i in 1..m slowest, carries its 1 at row (j, i), j slowest.
  std::vector<std::uint32_t> image(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      image[i * n + j] = static_cast<std::uint32_t>(j * m + i + 1);
    }
  }
  return PermutationMatrix(std::move(image), PermutationMatrix::Unchecked{});
}

}  // namespace symgame
