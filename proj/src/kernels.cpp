#include "invsemi/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

namespace invsemi::kernels {

namespace {

std::optional<Triple> check_row(std::span<const std::uint32_t> mul, std::size_t n, std::size_t a) {
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t ab = mul[a * n + b];
    for (std::size_t c = 0; c < n; ++c) {
      if (mul[ab * n + c] != mul[a * n + mul[b * n + c]]) {
        return Triple{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                      static_cast<std::uint32_t>(c)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Triple> find_nonassociative_serial(std::span<const std::uint32_t> mul, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    if (auto t = check_row(mul, n, a)) return t;
  }
  return std::nullopt;
}

std::optional<Triple> find_nonassociative_parallel(std::span<const std::uint32_t> mul,
                                                   std::size_t n) {
  // Rows past the best failing row found so far are skipped, so the result
  // is the same lexicographically first triple the serial scan returns.
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::vector<std::optional<Triple>> found(n);
  const long long rows = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long ia = 0; ia < rows; ++ia) {
    const std::size_t a = static_cast<std::size_t>(ia);
    if (a > best.load(std::memory_order_relaxed)) continue;
    found[a] = check_row(mul, n, a);
    if (found[a]) {
      std::size_t cur = best.load();
      while (a < cur && !best.compare_exchange_weak(cur, a)) {
      }
    }
  }
  const std::size_t b = best.load();
  if (b == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return found[b];
}

namespace {

template <bool Parallel>
std::vector<std::size_t> rref_impl(std::vector<Row>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t m = rows.size();
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c].is_zero()) ++p;
    if (p == m) continue;
    std::swap(rows[r], rows[p]);
    const Scalar inv = rows[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    const Row& piv = rows[r];
    const long long total = static_cast<long long>(m);
#pragma omp parallel for schedule(static) if (Parallel)
    for (long long ii = 0; ii < total; ++ii) {
      const std::size_t i = static_cast<std::size_t>(ii);
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!piv[j].is_zero()) rows[i][j] -= f * piv[j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_serial(std::vector<Row>& rows, std::size_t cols) {
  return rref_impl<false>(rows, cols);
}

std::vector<std::size_t> rref_parallel(std::vector<Row>& rows, std::size_t cols) {
  return rref_impl<true>(rows, cols);
}

}  // namespace invsemi::kernels
