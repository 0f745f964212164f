#pragma once

// Seeded generators for the property tests. Every property runs over a
// fixed range of seeds so failures are reproducible from the printed seed.

#include <cstdint>
#include <random>
#include <vector>

#include "evolalg/algebra.hpp"
#include "evolalg/io.hpp"

namespace testing_support {

using evolalg::Mat;
using evolalg::Rat;
using evolalg::Vec;

/// Small rational in [-3, 3] with denominator 1..3, zero with probability
/// 1 - density.
inline Rat small_rat(std::mt19937_64& rng, double density = 0.7) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  if (coin(rng) >= density) return 0;
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Rat q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.7) {
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_rat(rng, density);
  return m;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, double density = 0.8) {
  Vec v(n);
  for (auto& x : v) x = small_rat(rng, density);
  return v;
}

/// The seeded generator used by the command-line tool, with dimension and
/// density cycling through the property-suite grid.
inline evolalg::EvolutionAlgebra grid_algebra(std::uint64_t seed, std::size_t max_dim = 6) {
  static constexpr double kDensities[] = {0.3, 0.6, 0.9};
  const std::size_t span = max_dim - 1;
  return evolalg::random_algebra(2 + seed % span, kDensities[seed % 3], seed).algebra;
}

}  // namespace testing_support
