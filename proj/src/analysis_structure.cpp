// Primeness, prime ideals, absorption, von Neumann regularity, centroid and
// the component decomposition.

#include <algorithm>
#include <stdexcept>

#include "evolalg/analysis.hpp"

namespace evolalg {

PlainVerdict prime(const EvolutionAlgebra& a, const AnalysisOptions& options) {
  PlainVerdict v;
  if (!is_downward_directed(from_algebra(a))) {
    v.state = Tri::No;
    v.certificate = "graph is not downward directed";
    return v;
  }
  if (is_perfect(a)) {
    v.state = Tri::Yes;
    v.certificate = "perfect with a downward directed graph";
    return v;
  }
  const auto sp = semiprime(a, options);
  v.state = sp.verdict.state;
  switch (sp.verdict.state) {
    case Tri::Yes:
      v.certificate = "semiprime with a downward directed graph";
      break;
    case Tri::No:
      v.certificate = "not semiprime";
      break;
    case Tri::Undetermined:
      v.reason = "semiprimeness undetermined: " + sp.verdict.reason;
      break;
  }
  return v;
}

PrimeIdealsReport prime_ideals(const EvolutionAlgebra& a, const AnalysisOptions& options) {
  PrimeIdealsReport report;
  const auto g = from_algebra(a);
  for (const auto& h : hereditary_subsets(g, options.hereditary_bound)) {
    if (h.size() == a.dim()) continue;
    if (!is_downward_directed(quotient(g, h))) {
      report.rejected_not_directed.push_back(h);
      continue;
    }
    switch (semiprime(quotient_by_basic(a, h), options).verdict.state) {
      case Tri::Yes:
        report.primes.push_back(basic_ideal(a, h));
        break;
      case Tri::No:
        report.rejected_not_semiprime.push_back(h);
        break;
      case Tri::Undetermined:
        report.undetermined.push_back(h);
        break;
    }
  }
  return report;
}

AbsorptionReport absorption(const EvolutionAlgebra& a) {
  AbsorptionReport report;
  report.strata = sink_strata(from_algebra(a));
  report.radical_vertices = report.strata.stratified();
  report.radical = Subspace::axes(a.dim(), report.radical_vertices);
  report.series = ann_series(a);
  report.asi = report.series.asi;
  if (report.asi != std::max<std::size_t>(1, report.strata.strata.size()))
    throw std::logic_error("annihilator series length disagrees with the sink strata");
  VertexSet layers;
  for (std::size_t k = 0; k < report.asi; ++k) {
    if (k < report.strata.strata.size())
      layers.insert(layers.end(), report.strata.strata[k].begin(), report.strata.strata[k].end());
    if (report.series.terms[k] != Subspace::axes(a.dim(), layers))
      throw std::logic_error("annihilator series term " + std::to_string(k + 1) + " differs from the sink strata");
  }
  return report;
}

bool has_absorption(const EvolutionAlgebra& a, std::span<const std::size_t> hereditary) {
  const auto g = from_algebra(a);
  if (!is_hereditary(g, hereditary)) throw std::invalid_argument("vertex set is not hereditary");
  return is_sinkless(quotient(g, hereditary));
}

std::optional<Element> vn_element(const EvolutionAlgebra& a, const Element& x) {
  const Mat n = left_mult_matrix(a, x);
  const auto y = solve(n * n, x.coords());
  if (!y) return std::nullopt;
  Element candidate(*y);
  if (multiply(a, multiply(a, x, candidate), x) != x)
    throw std::logic_error("von Neumann inverse failed re-verification");
  return candidate;
}

bool vn_algebra(const EvolutionAlgebra& a) { return is_isolated_loops(from_algebra(a)); }

bool is_centralizer(const EvolutionAlgebra& a, const Mat& t) {
  const std::size_t n = a.dim();
  if (t.rows() != n || t.cols() != n) throw DimensionError("centralizer candidate has the wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = t * multiply(a, Element::basis(n, i).coords(), Element::basis(n, j).coords());
      const Vec rhs = multiply(a, Element::basis(n, i).coords(), t.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

CentroidBasis centroid(const EvolutionAlgebra& a, const AnalysisOptions& options) {
  const std::size_t n = a.dim();
  if (n > options.centroid_bound)
    throw BoundExceeded("centroid limited to dimension " + std::to_string(options.centroid_bound));
  // Unknown t_ij = T(i, j), the coefficient of e_i in T(e_j), at index i*n + j.
  auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.structure().column_is_zero(i)) continue;
    // e_i T(e_j) = t_ij e_i^2 must vanish for j != i.
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Vec r(n * n);
      r[var(i, j)] = 1;
      rows.push_back(std::move(r));
    }
  }
  // T(e_i^2) = e_i T(e_i): w_ki t_ii - sum_j t_kj w_ji = 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Vec r(n * n);
      r[var(i, i)] += a.omega(k, i);
      for (std::size_t j = 0; j < n; ++j) r[var(k, j)] -= a.omega(j, i);
      if (!is_zero(r)) rows.push_back(std::move(r));
    }
  const Subspace kernel = kernel_basis(Mat::from_rows(rows, n * n));
  CentroidBasis out;
  out.dim = kernel.dim();
  for (const auto& v : kernel.basis_vectors()) {
    Mat t(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = v[var(i, j)];
    if (!is_centralizer(a, t)) throw std::logic_error("centroid basis element failed re-verification");
    out.basis.push_back(std::move(t));
  }
  return out;
}

std::vector<Summand> decompose(const EvolutionAlgebra& a, const AnalysisOptions& options) {
  if (!is_zero_annihilator(a)) throw std::invalid_argument("decomposition requires a zero annihilator");
  std::vector<Summand> out;
  for (auto& block : components(from_algebra(a))) {
    std::vector<std::string> labels;
    for (auto v : block) labels.push_back(a.labels()[v]);
    EvolutionAlgebra piece(a.structure().principal_submatrix(block), std::move(labels));
    if (centroid(piece, options).dim != 1) throw std::logic_error("summand centroid is not one-dimensional");
    out.push_back({std::move(block), std::move(piece)});
  }
  return out;
}

}  // namespace evolalg
