#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "evolalg/algebra.hpp"
#include "evolalg/exactla.hpp"
#include "evolalg/graph.hpp"
#include "evolalg/poly.hpp"

namespace evolalg {

enum class Tri { Yes, No, Undetermined };

std::string_view to_string(Tri t);

/// Outcome of a decision procedure. `certificate` names the rule that
/// settled a definite answer; `reason` explains an Undetermined one.
template <class W>
struct Verdict {
  Tri state = Tri::Undetermined;
  std::optional<W> witness;
  std::string certificate;
  std::string reason;
};

struct AnalysisOptions {
  /// Largest dimension for which supports are enumerated (2^n - 1 of them).
  std::size_t support_bound = 16;
  /// Largest height of the primitive integer vectors tried by the rational
  /// witness search of the semiprimeness engine.
  std::size_t height_cap = 50;
  /// Maximum number of candidate vectors evaluated per support by that
  /// search.
  std::size_t search_budget = 250000;
  std::size_t hereditary_bound = kDefaultHereditaryBound;
  /// Largest dimension for the centroid system (n^2 unknowns).
  std::size_t centroid_bound = 16;
  GroebnerOptions groebner;
  /// Worker threads for the per-support scans; 0 means "EVOLALG_THREADS
  /// if set, else 1". Results do not depend on this value.
  unsigned threads = 0;
  /// Keep scanning after the first non-semiprimeness witness and report
  /// one witness per support that has one.
  bool collect_all = false;
};

unsigned resolve_threads(const AnalysisOptions& options);

/// Sinkless graph, cross-checked against annihilator(a) == 0; throws
/// std::logic_error if the two routes disagree.
bool is_zero_annihilator(const EvolutionAlgebra& a);

/// (x e_i) x = 0 for every basis element e_i.
bool is_absolute_zero_divisor(const EvolutionAlgebra& a, const Element& x);

/// Every vector of the subspace is an absolute zero divisor, i.e. N(v)^2 = 0
/// on the whole subspace (checked on a basis and by polarization on pairs).
bool subspace_in_zero_divisor_locus(const EvolutionAlgebra& a, const Subspace& space);

/// Degenerate = Yes with a witness of smallest support (supports ordered
/// by size, then lexicographically). Linear per support, so never
/// Undetermined. Throws BoundExceeded above options.support_bound.
Verdict<Element> degeneracy(const EvolutionAlgebra& a, const AnalysisOptions& options = {});

/// Same question decided over the algebraic closure by the Groebner engine
/// on the entries of N(x)^2. No witness is produced; engine limits give
/// Undetermined.
Verdict<Element> degeneracy_groebner(const EvolutionAlgebra& a, const AnalysisOptions& options = {});

/// Absolute zero divisors supported inside one vertex set: a linear
/// subspace of the zero-divisor locus.
struct LocusPiece {
  VertexSet support;
  Subspace space;
};

/// One piece per support with a nonzero solution space, in support order,
/// skipping spaces already listed.
std::vector<LocusPiece> zero_divisor_locus_pieces(const EvolutionAlgebra& a, const AnalysisOptions& options = {});

/// For perfect algebras: no nonempty principal pattern of the structure
/// matrix is zero, decided as "every vertex carries a loop". Throws
/// std::invalid_argument on a non-perfect algebra.
bool nondegenerate_perfect_check(const EvolutionAlgebra& a);

struct SemiprimeWitness {
  VertexSet support;
  Element generator;
  /// ideal_generated_by(generator); closed and squaring to zero.
  Subspace ideal;
  /// The solutions for this support form a single line, so the ideal is
  /// the only one this support can produce.
  bool unique_in_support = false;
};

struct SemiprimeReport {
  Verdict<SemiprimeWitness> verdict;
  std::size_t supports_checked = 0;
  /// Supports ruled out because some product of reachable squares is
  /// nonzero.
  std::size_t ruled_out_by_products = 0;
  /// Supports whose linear conditions only admit x = 0.
  std::size_t ruled_out_linear = 0;
  /// Supports whose quadratic condition has only the origin as common zero
  /// over the algebraic closure.
  std::size_t ruled_out_closure = 0;
  /// Supports whose quadratic condition contains a definite real form.
  std::size_t ruled_out_definite = 0;
  std::vector<VertexSet> undetermined_supports;
  /// With options.collect_all: every support that produced a witness.
  std::vector<SemiprimeWitness> witnesses;
};

/// Searches nonzero x with (x)^2 = 0. No carries the ideal (x); Yes means
/// every support was ruled out; Undetermined means a support survived the
/// closure test without a rational witness up to the height cap.
SemiprimeReport semiprime(const EvolutionAlgebra& a, const AnalysisOptions& options = {});

using PlainVerdict = Verdict<std::monostate>;

/// Not downward directed gives No; perfect and downward directed gives Yes;
/// otherwise the semiprimeness verdict decides.
PlainVerdict prime(const EvolutionAlgebra& a, const AnalysisOptions& options = {});

struct PrimeIdealsReport {
  std::vector<BasicIdeal> primes;
  /// Quotient graph downward directed, quotient semiprimeness undecided.
  std::vector<VertexSet> undetermined;
  /// Quotient graph downward directed but the quotient is not semiprime.
  std::vector<VertexSet> rejected_not_semiprime;
  /// Quotient graph not downward directed.
  std::vector<VertexSet> rejected_not_directed;
};

/// Basic ideals I_H (H proper hereditary) with E/H downward directed and
/// A/I_H semiprime.
PrimeIdealsReport prime_ideals(const EvolutionAlgebra& a, const AnalysisOptions& options = {});

struct AbsorptionReport {
  VertexSet radical_vertices;
  Subspace radical;
  std::size_t asi = 0;
  SinkStrata strata;
  AnnSeries series;
};

/// Radical spanned by the sink strata, asi from the annihilator series;
/// throws std::logic_error unless Ann^(k) = span(S_1 .. S_k) for every k.
AbsorptionReport absorption(const EvolutionAlgebra& a);

/// I_H has the absorption property iff E/H is sinkless. Throws
/// std::invalid_argument for a non-hereditary H.
bool has_absorption(const EvolutionAlgebra& a, std::span<const std::size_t> hereditary);

/// Some y with (x y) x = x, taken from (M diag(x))^2 y = x with free
/// variables zero, or nothing when the system is inconsistent.
std::optional<Element> vn_element(const EvolutionAlgebra& a, const Element& x);
bool vn_algebra(const EvolutionAlgebra& a);

struct CentroidBasis {
  std::size_t dim = 0;
  /// T with column j = T(e_j).
  std::vector<Mat> basis;
};

/// T(xy) = x T(y) for all x, y, checked on basis elements.
bool is_centralizer(const EvolutionAlgebra& a, const Mat& t);
CentroidBasis centroid(const EvolutionAlgebra& a, const AnalysisOptions& options = {});

struct Summand {
  VertexSet vertices;
  EvolutionAlgebra algebra;
};

/// One summand per graph component; requires zero annihilator (throws
/// std::invalid_argument otherwise) and re-verifies centroid dimension 1.
std::vector<Summand> decompose(const EvolutionAlgebra& a, const AnalysisOptions& options = {});

/// Every nonempty subset of {0..n-1} as a bitmask, by size and then
/// lexicographically. Throws BoundExceeded above `bound`.
std::vector<std::uint32_t> ordered_supports(std::size_t n, std::size_t bound);

}  // namespace evolalg
