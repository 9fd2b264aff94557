#pragma once

// Hot loops with a serial reference and an OpenMP version. The two variants
// must return identical results; tests/test_kernels.cpp checks this and
// bench/bench_kernels.cpp times them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invsemi/field.hpp"

namespace invsemi::kernels {

using Triple = std::array<std::uint32_t, 3>;

/// First (a, b, c) in lexicographic order with (ab)c != a(bc), for a
/// row-major n x n table.
std::optional<Triple> find_nonassociative_serial(std::span<const std::uint32_t> mul, std::size_t n);
std::optional<Triple> find_nonassociative_parallel(std::span<const std::uint32_t> mul,
                                                   std::size_t n);

using Row = std::vector<Scalar>;

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row. Zero rows are dropped. Pivots are the leftmost nonzero column
/// and are scaled to 1.
std::vector<std::size_t> rref_serial(std::vector<Row>& rows, std::size_t cols);
std::vector<std::size_t> rref_parallel(std::vector<Row>& rows, std::size_t cols);

}  // namespace invsemi::kernels
