#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "evolalg/algebra.hpp"

namespace evolalg {

/// Malformed input; the message starts with the position of the problem
/// (for example "matrix[1][0]: bad rational '1/0'").
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlgebraFile {
  EvolutionAlgebra algebra;
  std::string description;
};

/// Reads the JSON algebra format:
///   {"basis": ["e1", ...], "matrix": [[...], ...], "description": "..."}
/// Row j, column i of "matrix" is the coefficient of e_j in e_i^2. Entries
/// are JSON integers or strings "p/q"; JSON floats are rejected. "basis"
/// and "description" are optional.
AlgebraFile parse_algebra(std::string_view json_text);
AlgebraFile read_algebra_file(const std::string& path);

/// Canonical JSON for the format above with every entry written as a
/// string, so parse_algebra(render_algebra(f)) reproduces f exactly.
std::string render_algebra(const AlgebraFile& file);

inline constexpr std::size_t kMaxRandomDim = 16;

/// Deterministic random algebra: each entry is nonzero with probability
/// `density`, with numerator in {-3..3}\{0} and denominator in {1, 2}.
/// Throws std::invalid_argument when dim is outside 1..16 or density
/// outside [0, 1].
AlgebraFile random_algebra(std::size_t dim, double density, std::uint64_t seed);

}  // namespace evolalg
