#include "evolalg/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace evolalg {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return labels;
}

EvolutionAlgebra::EvolutionAlgebra(Mat structure) : EvolutionAlgebra(structure, default_labels(structure.rows())) {}

EvolutionAlgebra::EvolutionAlgebra(Mat structure, std::vector<std::string> labels)
    : structure_(std::move(structure)), labels_(std::move(labels)) {
  if (!structure_.is_square()) throw DimensionError("structure matrix must be square");
  if (labels_.size() != structure_.rows()) throw DimensionError("one label per basis element required");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate basis label '" + l + "'");
}

Element Element::basis(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return Element(std::move(v));
}

Element operator+(const Element& a, const Element& b) {
  if (a.size() != b.size()) throw DimensionError("element size mismatch");
  Vec v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return Element(std::move(v));
}

Vec multiply(const EvolutionAlgebra& a, const Vec& x, const Vec& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw DimensionError("element dimension does not match the algebra");
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0 || y[i] == 0) continue;
    const Rat w = x[i] * y[i];
    for (std::size_t j = 0; j < n; ++j)
      if (a.omega(j, i) != 0) out[j] += w * a.omega(j, i);
  }
  return out;
}

Element multiply(const EvolutionAlgebra& a, const Element& x, const Element& y) {
  return Element(multiply(a, x.coords(), y.coords()));
}

Mat left_mult_matrix(const EvolutionAlgebra& a, const Element& x) {
  const std::size_t n = a.dim();
  if (x.size() != n) throw DimensionError("element dimension does not match the algebra");
  Mat m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != 0 && a.omega(k, i) != 0) m(k, i) = x[i] * a.omega(k, i);
  return m;
}

VertexSet support(const Element& x) {
  VertexSet s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) s.push_back(i);
  return s;
}

Subspace annihilator(const EvolutionAlgebra& a) {
  VertexSet zero_squares;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.structure().column_is_zero(i)) zero_squares.push_back(i);
  return Subspace::axes(a.dim(), zero_squares);
}

bool is_perfect(const EvolutionAlgebra& a) { return det(a.structure()) != 0; }

bool is_ideal(const EvolutionAlgebra& a, const Subspace& space) {
  if (space.ambient_dim() != a.dim()) throw DimensionError("subspace does not live in the algebra");
  for (const auto& u : space.basis_vectors())
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (u[i] == 0) continue;
      // u * e_i = u_i e_i^2
      if (!space.contains(a.square(i))) return false;
    }
  return true;
}

Subspace product_space(const EvolutionAlgebra& a, const Subspace& left, const Subspace& right) {
  std::vector<Vec> products;
  const auto lv = left.basis_vectors();
  const auto rv = right.basis_vectors();
  for (const auto& u : lv)
    for (const auto& v : rv) products.push_back(multiply(a, u, v));
  return Subspace::span(a.dim(), products);
}

bool squares_to_zero(const EvolutionAlgebra& a, const Subspace& space) {
  const auto vs = space.basis_vectors();
  for (std::size_t p = 0; p < vs.size(); ++p)
    for (std::size_t q = p; q < vs.size(); ++q)
      if (!is_zero(multiply(a, vs[p], vs[q]))) return false;
  return true;
}

Subspace ideal_generated_by(const EvolutionAlgebra& a, const Element& x) {
  if (x.size() != a.dim()) throw DimensionError("element dimension does not match the algebra");
  if (x.is_zero()) return Subspace::zero(a.dim());
  const auto g = from_algebra(a);
  std::vector<Vec> generators{x.coords()};
  for (auto j : reach(g, support(x))) generators.push_back(a.square(j));
  Subspace ideal = Subspace::span(a.dim(), generators);
  if (!is_ideal(a, ideal)) throw std::logic_error("generated subspace is not closed under multiplication");
  return ideal;
}

BasicIdeal basic_ideal(const EvolutionAlgebra& a, std::span<const std::size_t> hereditary) {
  VertexSet h(hereditary.begin(), hereditary.end());
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (!is_hereditary(from_algebra(a), h)) throw std::invalid_argument("vertex set is not hereditary");
  Subspace space = Subspace::axes(a.dim(), h);
  return {std::move(h), std::move(space)};
}

EvolutionAlgebra quotient_by_basic(const EvolutionAlgebra& a, std::span<const std::size_t> hereditary) {
  if (!is_hereditary(from_algebra(a), hereditary)) throw std::invalid_argument("vertex set is not hereditary");
  const auto kept = complement(a.dim(), hereditary);
  std::vector<std::string> labels;
  for (auto k : kept) labels.push_back(a.labels()[k]);
  return EvolutionAlgebra(a.structure().principal_submatrix(kept), std::move(labels));
}

namespace {

// {x : x*e_k in s for every k}, the preimage of Ann(A/s) in A.
Subspace annihilator_modulo(const EvolutionAlgebra& a, const Subspace& s) {
  const std::size_t n = a.dim();
  const Mat eq = s.equations();
  // x*e_k = x_k e_k^2, so each equation p gives (p . e_k^2) x_k = 0.
  Mat system(eq.rows() * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec sq = a.square(k);
    for (std::size_t r = 0; r < eq.rows(); ++r) {
      Rat dot = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (eq(r, c) != 0 && sq[c] != 0) dot += eq(r, c) * sq[c];
      system(k * eq.rows() + r, k) = dot;
    }
  }
  return kernel_basis(system);
}

}  // namespace

AnnSeries ann_series(const EvolutionAlgebra& a) {
  AnnSeries series;
  Subspace current = annihilator_modulo(a, Subspace::zero(a.dim()));
  series.terms.push_back(current);
  while (true) {
    Subspace next = annihilator_modulo(a, current);
    if (next == current) break;
    series.terms.push_back(next);
    current = std::move(next);
  }
  series.asi = series.terms.size();
  return series;
}

}  // namespace evolalg
