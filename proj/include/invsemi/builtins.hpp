#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invsemi/semigroup.hpp"

namespace invsemi {

/// Names accepted by builtin_semigroup, in a fixed order.
const std::vector<std::string>& builtin_names();

/// Small example semigroups:
///   two       {0, 1}
///   boolean   {0, x, y, 1} with xy = 0
///   chain     {0 < e < f < 1}
///   b2        Brandt semigroup {0, e11, e12, e21, e22}
///   b3        Brandt semigroup on 3 indices (10 elements)
///   q         C2 with a zero z and a new zero: {0, 1, a, z}
///   rook2     all partial bijections of a 2-point set (7 elements)
///   brandt_c2 Brandt semigroup over C2 on 2 indices (9 elements)
/// Throws InvalidArgument for unknown names.
InverseSemigroupTable builtin_semigroup(const std::string& name);

/// Inverse semigroup generated by `gens` random partial bijections of a
/// `ground`-point set. Deterministic in the seed.
InverseSemigroupTable random_partial_bijection_semigroup(std::uint64_t seed, std::size_t ground = 3,
                                                         std::size_t gens = 2);

}  // namespace invsemi
