#include "invsemi/builtins.hpp"

#include <algorithm>
#include <random>

#include "invsemi/errors.hpp"

namespace invsemi {

namespace {

// Brandt semigroup B(G, n) for G = Z/k, elements (i, g, j) with
// (i,g,j)(j,h,l) = (i,g+h,l). k = 1 gives the combinatorial one.
InverseSemigroupTable brandt(std::size_t n, std::size_t k) {
  auto id = [&](std::size_t i, std::size_t g, std::size_t j) {
    return static_cast<ElemId>(1 + (i * k + g) * n + j);
  };
  const std::size_t size = 1 + n * n * k;
  RawTable raw;
  raw.mul.assign(size, std::vector<ElemId>(size, 0));
  raw.star.assign(size, 0);
  raw.labels.assign(size, "0");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t g = 0; g < k; ++g) {
      for (std::size_t j = 0; j < n; ++j) {
        const ElemId a = id(i, g, j);
        raw.star[a] = id(j, (k - g) % k, i);
        std::string lab = "e" + std::to_string(i + 1) + std::to_string(j + 1);
        if (k > 1) lab = "(" + std::to_string(i + 1) + ",g" + std::to_string(g) + "," +
                         std::to_string(j + 1) + ")";
        raw.labels[a] = lab;
        for (std::size_t h = 0; h < k; ++h) {
          for (std::size_t l = 0; l < n; ++l) raw.mul[a][id(j, h, l)] = id(i, (g + h) % k, l);
        }
      }
    }
  }
  return make_trusted(std::move(raw));
}

InverseSemigroupTable from_rows(std::vector<std::string> labels,
                                std::vector<std::vector<ElemId>> mul, std::vector<ElemId> star) {
  return make_trusted(RawTable{std::move(mul), std::move(star), std::move(labels)});
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"two", "boolean", "chain", "b2",
                                              "b3",  "q",       "rook2", "brandt_c2"};
  return names;
}

InverseSemigroupTable builtin_semigroup(const std::string& name) {
  if (name == "two") return from_rows({"0", "1"}, {{0, 0}, {0, 1}}, {0, 1});
  if (name == "boolean") {
    // 0, x, y, 1
    return from_rows({"0", "x", "y", "1"},
                     {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}, {0, 1, 2, 3});
  }
  if (name == "chain") {
    // 0 < e < f < 1, product = meet
    return from_rows({"0", "e", "f", "1"},
                     {{0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}}, {0, 1, 2, 3});
  }
  if (name == "b2") return brandt(2, 1);
  if (name == "b3") return brandt(3, 1);
  if (name == "brandt_c2") return brandt(2, 2);
  if (name == "q") {
    // 0, 1, a, z with a^2 = 1 and z below everything nonzero
    return from_rows({"0", "1", "a", "z"},
                     {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 3, 3}}, {0, 1, 2, 3});
  }
  if (name == "rook2") {
    PartialBijection swap(2, {1, 0});
    PartialBijection e1 = PartialBijection::partial_identity(2, {0});
    return generate_from_partial_bijections({swap, e1}, Caps{}, {"t", "p"});
  }
  throw InvalidArgument("unknown built-in semigroup '" + name + "'");
}

InverseSemigroupTable random_partial_bijection_semigroup(std::uint64_t seed, std::size_t ground,
                                                         std::size_t gens) {
  std::mt19937_64 rng(seed);
  std::vector<PartialBijection> maps;
  for (std::size_t g = 0; g < gens; ++g) {
    std::vector<int> perm(ground);
    for (std::size_t i = 0; i < ground; ++i) perm[i] = static_cast<int>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution keep(0.75);
    for (auto& y : perm) {
      if (!keep(rng)) y = PartialBijection::kNone;
    }
    maps.emplace_back(ground, std::move(perm));
  }
  return generate_from_partial_bijections(maps);
}

}  // namespace invsemi
