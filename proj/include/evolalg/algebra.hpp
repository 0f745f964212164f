#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "evolalg/exactla.hpp"
#include "evolalg/graph.hpp"

namespace evolalg {

/// Finite-dimensional evolution algebra over Q given by its structure
/// matrix relative to a natural basis e_1..e_n.
///
/// Column convention: structure(j, i) is the coefficient of e_j in e_i^2,
/// so column i holds the coordinates of e_i^2. Distinct basis elements
/// multiply to zero.
class EvolutionAlgebra {
 public:
  EvolutionAlgebra() = default;
  /// Labels default to e1..en.
  explicit EvolutionAlgebra(Mat structure);
  EvolutionAlgebra(Mat structure, std::vector<std::string> labels);

  std::size_t dim() const { return structure_.rows(); }
  const Mat& structure() const { return structure_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Coefficient of e_j in e_i^2.
  const Rat& omega(std::size_t j, std::size_t i) const { return structure_(j, i); }
  /// Coordinates of e_i^2.
  Vec square(std::size_t i) const { return structure_.column(i); }

  friend bool operator==(const EvolutionAlgebra&, const EvolutionAlgebra&) = default;

 private:
  Mat structure_;
  std::vector<std::string> labels_;
};

std::vector<std::string> default_labels(std::size_t n);

/// Coordinates over the natural basis.
class Element {
 public:
  Element() = default;
  explicit Element(Vec coords) : coords_(std::move(coords)) {}

  static Element zero(std::size_t n) { return Element(Vec(n)); }
  static Element basis(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  const Vec& coords() const { return coords_; }
  bool is_zero() const { return evolalg::is_zero(coords_); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Vec coords_;
};

Element operator+(const Element& a, const Element& b);

/// sum_i x_i y_i e_i^2
Element multiply(const EvolutionAlgebra& a, const Element& x, const Element& y);
Vec multiply(const EvolutionAlgebra& a, const Vec& x, const Vec& y);

/// Matrix of y -> x*y, namely structure * diag(x).
Mat left_mult_matrix(const EvolutionAlgebra& a, const Element& x);

VertexSet support(const Element& x);

/// span{e_i : e_i^2 = 0}
Subspace annihilator(const EvolutionAlgebra& a);

bool is_perfect(const EvolutionAlgebra& a);

/// u*e_i stays in `space` for every basis vector u and every i.
bool is_ideal(const EvolutionAlgebra& a, const Subspace& space);
/// span of all products u*v with u in `left`, v in `right`.
Subspace product_space(const EvolutionAlgebra& a, const Subspace& left, const Subspace& right);
bool squares_to_zero(const EvolutionAlgebra& a, const Subspace& space);

/// (x) = Kx + span{e_j^2 : j reachable from supp(x)}. Throws
/// std::logic_error if the result fails the ideal check.
Subspace ideal_generated_by(const EvolutionAlgebra& a, const Element& x);

struct BasicIdeal {
  VertexSet vertices;
  Subspace space;

  friend bool operator==(const BasicIdeal&, const BasicIdeal&) = default;
};

/// I_H = span{e_i : i in H}. Throws std::invalid_argument unless H is
/// hereditary in the associated graph.
BasicIdeal basic_ideal(const EvolutionAlgebra& a, std::span<const std::size_t> hereditary);

/// A / I_H: the structure matrix with the rows and columns of H deleted.
EvolutionAlgebra quotient_by_basic(const EvolutionAlgebra& a, std::span<const std::size_t> hereditary);

/// Upper annihilating series Ann^(1) <= Ann^(2) <= ... listed up to the
/// stabilizing index `asi` (terms.size() == asi).
struct AnnSeries {
  std::vector<Subspace> terms;
  std::size_t asi = 0;
};

AnnSeries ann_series(const EvolutionAlgebra& a);

}  // namespace evolalg
