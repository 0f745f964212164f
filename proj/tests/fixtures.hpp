#pragma once

// Worked example algebras shared by the unit tests and the acceptance
// suite. Matrices use the library's column convention: column i holds the
// coordinates of e_i^2. The same algebras ship as JSON under data/.

#include <utility>
#include <vector>

#include "evolalg/algebra.hpp"

namespace fixtures {

using evolalg::EvolutionAlgebra;
using evolalg::Mat;

/// e1^2 = e1 + e2, e2^2 = -(e1 + e2).
inline EvolutionAlgebra complete_pair() { return EvolutionAlgebra(Mat{{1, -1}, {1, -1}}); }

/// Degenerate 4-dimensional algebra; e4 is an absolute zero divisor.
inline EvolutionAlgebra degenerate_4d() {
  return EvolutionAlgebra(Mat{{1, 0, 1, -1}, {0, 1, 1, 1}, {1, 1, 2, 0}, {1, 1, 2, 0}});
}

/// Q(e1 - e2) is its only zero-square ideal.
inline EvolutionAlgebra unique_zero_square_4d() {
  return EvolutionAlgebra(Mat{{1, -1, 0, 1}, {-1, 1, 1, 2}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

/// Degenerate 5-dimensional algebra; its absolute zero divisors form
/// span{e1 + e2, e4}.
inline EvolutionAlgebra degenerate_5d() {
  return EvolutionAlgebra(
      Mat{{1, -1, 0, 0, 1}, {1, -1, 0, 0, 1}, {0, 0, 1, -1, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}});
}

/// Not prime; its prime ideals are spanned by {e1,e4,e5}, {e2,e4,e5} and
/// {e1,e2,e4,e5}.
inline EvolutionAlgebra non_prime_5d() {
  return EvolutionAlgebra(
      Mat{{1, 0, 1, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 1, 1, -1}, {0, 0, 0, 1, -1}});
}

/// e1^2 = e3 + e4, e2^2 = -2e3 - 2e4, e3^2 = e1 + e2, e4^2 = -e1 - e2:
/// semiprime, degenerate, zero annihilator.
inline EvolutionAlgebra bipartite_4d() {
  return EvolutionAlgebra(Mat{{0, 0, 1, -1}, {0, 0, 1, -1}, {1, -2, 0, 0}, {1, -2, 0, 0}});
}

/// e1^2 = e1, e2^2 = e1: prime without being perfect.
inline EvolutionAlgebra prime_not_perfect() { return EvolutionAlgebra(Mat{{1, 1}, {0, 0}}); }

/// e1^2 = e1, e2^2 = 0.
inline EvolutionAlgebra loop_and_sink() { return EvolutionAlgebra(Mat{{1, 0}, {0, 0}}); }

/// e1^2 = e2, e2^2 = e2 (isomorphic to loop_and_sink, one graph component).
inline EvolutionAlgebra twin() { return EvolutionAlgebra(Mat{{0, 1}, {0, 1}}); }

inline EvolutionAlgebra two_loops() { return EvolutionAlgebra(Mat{{1, 0}, {0, 1}}); }

/// Edges of the 8-vertex layered example (0-based).
inline std::vector<std::pair<std::size_t, std::size_t>> sink_layers_edges() {
  return {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 6}, {3, 7}, {4, 5}, {5, 3}};
}

/// Unit weight on every edge of sink_layers_edges().
inline EvolutionAlgebra sink_layers_8d() {
  Mat m(8, 8);
  for (auto [from, to] : sink_layers_edges()) m(to, from) = 1;
  return EvolutionAlgebra(m);
}

}  // namespace fixtures
