// Degeneracy and semiprimeness engines: both scan vertex supports in a
// fixed order and solve a small exact system per support.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "evolalg/analysis.hpp"
#include "scan.hpp"

namespace evolalg {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "yes";
    case Tri::No:
      return "no";
    case Tri::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

unsigned resolve_threads(const AnalysisOptions& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("EVOLALG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return 1;
}

std::vector<std::uint32_t> ordered_supports(std::size_t n, std::size_t bound) {
  if (n > bound || n > 31)
    throw BoundExceeded("support enumeration limited to " + std::to_string(std::min<std::size_t>(bound, 31)) +
                        " basis elements, algebra has " + std::to_string(n));
  std::vector<std::uint32_t> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t size = 1; size <= n; ++size) {
    // Combinations of `size` indices in lexicographic order.
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
      std::uint32_t mask = 0;
      for (auto i : idx) mask |= std::uint32_t{1} << i;
      out.push_back(mask);
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t r = k; r < size; ++r) idx[r] = idx[r - 1] + 1;
    }
  }
  return out;
}

bool is_zero_annihilator(const EvolutionAlgebra& a) {
  const bool sinkless = is_sinkless(from_algebra(a));
  const bool trivial = annihilator(a).is_zero();
  if (sinkless != trivial) throw std::logic_error("graph and annihilator disagree on the zero-annihilator test");
  return sinkless;
}

bool is_absolute_zero_divisor(const EvolutionAlgebra& a, const Element& x) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!multiply(a, multiply(a, x, Element::basis(a.dim(), i)), x).is_zero()) return false;
  return true;
}

bool subspace_in_zero_divisor_locus(const EvolutionAlgebra& a, const Subspace& space) {
  std::vector<Mat> n;
  for (const auto& v : space.basis_vectors()) n.push_back(left_mult_matrix(a, Element(v)));
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(n[i] * n[i]).is_zero()) return false;
    for (std::size_t j = i + 1; j < n.size(); ++j) {
      const Mat p = n[i] * n[j];
      const Mat q = n[j] * n[i];
      for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
          if (p(r, c) + q(r, c) != 0) return false;
    }
  }
  return true;
}

namespace {

Vec embed(const Vec& local, const VertexSet& support, std::size_t n) {
  Vec x(n);
  for (std::size_t k = 0; k < support.size(); ++k) x[support[k]] = local[k];
  return x;
}

// Absolute zero divisors with support inside `gamma`: for i in gamma,
// sum_{q in gamma} w_qi x_q e_q^2 = 0.
Subspace azd_kernel(const EvolutionAlgebra& a, const VertexSet& gamma) {
  const std::size_t n = a.dim();
  Mat system(gamma.size() * n, gamma.size());
  for (std::size_t r = 0; r < gamma.size(); ++r)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < gamma.size(); ++c) {
        const std::size_t q = gamma[c];
        const Rat& w = a.omega(q, gamma[r]);
        if (w != 0 && a.omega(k, q) != 0) system(r * n + k, c) = w * a.omega(k, q);
      }
  return kernel_basis(system);
}

Subspace embed_space(const Subspace& local, const VertexSet& support, std::size_t n) {
  std::vector<Vec> vs;
  for (const auto& v : local.basis_vectors()) vs.push_back(embed(v, support, n));
  return Subspace::span(n, vs);
}

}  // namespace

Verdict<Element> degeneracy(const EvolutionAlgebra& a, const AnalysisOptions& options) {
  const std::size_t n = a.dim();
  Verdict<Element> v;
  if (n == 0) {
    v.state = Tri::No;
    v.certificate = "zero-dimensional algebra";
    return v;
  }
  const auto supports = ordered_supports(n, options.support_bound);
  auto scan = detail::ordered_scan<std::optional<Vec>>(
      supports.size(), resolve_threads(options), true,
      [&](std::size_t i) -> std::optional<Vec> {
        const auto gamma = from_mask(supports[i]);
        const Subspace k = azd_kernel(a, gamma);
        if (k.is_zero()) return std::nullopt;
        return embed(k.basis_vectors().front(), gamma, n);
      },
      [](const std::optional<Vec>& r) { return r.has_value(); });
  for (std::size_t i = 0; i < scan.limit; ++i) {
    if (scan.results[i] && *scan.results[i]) {
      Element x(**scan.results[i]);
      if (!is_absolute_zero_divisor(a, x)) throw std::logic_error("degeneracy witness failed re-verification");
      v.state = Tri::Yes;
      v.witness = std::move(x);
      v.certificate = "linear system on support " + std::to_string(i + 1) + " of " + std::to_string(supports.size());
      return v;
    }
  }
  v.state = Tri::No;
  v.certificate = "all " + std::to_string(supports.size()) + " supports have trivial solution space";
  return v;
}

Verdict<Element> degeneracy_groebner(const EvolutionAlgebra& a, const AnalysisOptions& options) {
  Verdict<Element> v;
  try {
    if (variety_is_only_origin(n2_ideal(a), options.groebner)) {
      v.state = Tri::No;
      v.certificate = "every variable lies in the radical of the N^2 ideal";
    } else {
      v.state = Tri::Yes;
      v.certificate = "some variable lies outside the radical of the N^2 ideal";
    }
  } catch (const EngineLimit& e) {
    v.state = Tri::Undetermined;
    v.reason = e.what();
  }
  return v;
}

std::vector<LocusPiece> zero_divisor_locus_pieces(const EvolutionAlgebra& a, const AnalysisOptions& options) {
  std::vector<LocusPiece> pieces;
  for (auto mask : ordered_supports(a.dim(), options.support_bound)) {
    const auto gamma = from_mask(mask);
    const Subspace k = azd_kernel(a, gamma);
    if (k.is_zero()) continue;
    Subspace space = embed_space(k, gamma, a.dim());
    if (std::any_of(pieces.begin(), pieces.end(), [&](const LocusPiece& p) { return p.space == space; })) continue;
    pieces.push_back({gamma, std::move(space)});
  }
  return pieces;
}

bool nondegenerate_perfect_check(const EvolutionAlgebra& a) {
  if (!is_perfect(a)) throw std::invalid_argument("nondegeneracy pattern test requires a perfect algebra");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.omega(i, i) == 0) return false;
  return true;
}

namespace {

enum class Outcome { Products, Linear, Closure, Definite, Witness, Undetermined };

struct SupportResult {
  Outcome outcome = Outcome::Undetermined;
  std::optional<SemiprimeWitness> witness;
  std::string note;
};

// Quadratic form u^T g u.
Rat quad_value(const Mat& g, const std::vector<Rat>& u) {
  Rat total = 0;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (u[r] == 0) continue;
    Rat row = 0;
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (g(r, c) != 0 && u[c] != 0) row += g(r, c) * u[c];
    total += u[r] * row;
  }
  return total;
}

// Sylvester's criterion on leading principal minors.
bool positive_definite(const Mat& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    std::vector<std::size_t> lead(k);
    std::iota(lead.begin(), lead.end(), std::size_t{0});
    if (det(g.principal_submatrix(lead)) <= 0) return false;
  }
  return true;
}

bool definite(const Mat& g) {
  if (positive_definite(g)) return true;
  Mat neg = g;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) neg(r, c) = -g(r, c);
  return positive_definite(neg);
}

// Mat^T g Mat for the parametrization p (columns = new coordinates).
Mat congruence(const Mat& g, const Mat& p) { return p.transpose() * g * p; }

MPoly form_poly(const Mat& g) {
  std::vector<Term> terms;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (g(r, c) != 0) terms.push_back({Monomial::variable(r) * Monomial::variable(c), g(r, c)});
  return MPoly::from_terms(g.rows(), std::move(terms));
}

std::int64_t gcd_all(const std::vector<std::int64_t>& u) {
  std::int64_t g = 0;
  for (auto x : u) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// Primitive integer vectors u (first nonzero entry positive) of increasing
// height with every form vanishing; evaluation-budget bounded.
std::optional<std::vector<Rat>> rational_search(const std::vector<Mat>& forms, std::size_t dim,
                                                const AnalysisOptions& options, std::string& note) {
  std::size_t evaluations = 0;
  for (std::int64_t h = 1; h <= static_cast<std::int64_t>(options.height_cap); ++h) {
    std::vector<std::int64_t> u(dim, -h);
    while (true) {
      bool at_height = false;
      std::int64_t first = 0;
      for (auto x : u) {
        if (first == 0) first = x;
        if (x == h || x == -h) at_height = true;
      }
      if (at_height && first > 0 && gcd_all(u) == 1) {
        if (++evaluations > options.search_budget) {
          note = "rational search budget of " + std::to_string(options.search_budget) + " exhausted at height " +
                 std::to_string(h);
          return std::nullopt;
        }
        std::vector<Rat> q(u.begin(), u.end());
        bool all_zero = true;
        for (const auto& g : forms)
          if (quad_value(g, q) != 0) {
            all_zero = false;
            break;
          }
        if (all_zero) return q;
      }
      std::size_t k = dim;
      while (k > 0 && u[k - 1] == h) u[--k] = -h;
      if (k == 0) break;
      ++u[k - 1];
    }
  }
  note = "no rational witness up to height " + std::to_string(options.height_cap);
  return std::nullopt;
}

class SemiprimeEngine {
 public:
  SemiprimeEngine(const EvolutionAlgebra& a, const AnalysisOptions& options)
      : a_(a), options_(options), n_(a.dim()), closures_(closure_masks(from_algebra(a))), product_zero_(n_) {
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (is_zero(multiply(a_, a_.square(j), a_.square(k)))) product_zero_[j] |= std::uint32_t{1} << k;
  }

  SupportResult examine(std::uint32_t mask) const {
    SupportResult res;
    std::uint32_t reach = 0;
    for (auto v : from_mask(mask)) reach |= closures_[v];
    // (a) the reachable squares multiply to zero pairwise.
    for (auto j : from_mask(reach))
      if ((product_zero_[j] & reach) != reach) {
        res.outcome = Outcome::Products;
        return res;
      }
    // (b) x e_j^2 = sum_q x_q w_qj e_q^2 = 0 for j reachable.
    const auto gamma = from_mask(mask);
    const auto reached = from_mask(reach);
    Mat system(reached.size() * n_, gamma.size());
    for (std::size_t r = 0; r < reached.size(); ++r)
      for (std::size_t m = 0; m < n_; ++m)
        for (std::size_t c = 0; c < gamma.size(); ++c) {
          const std::size_t q = gamma[c];
          const Rat& w = a_.omega(q, reached[r]);
          if (w != 0 && a_.omega(m, q) != 0) system(r * n_ + m, c) = w * a_.omega(m, q);
        }
    const Subspace kernel = kernel_basis(system);
    if (kernel.is_zero()) {
      res.outcome = Outcome::Linear;
      return res;
    }
    std::vector<Vec> b;
    for (const auto& v : kernel.basis_vectors()) b.push_back(embed(v, gamma, n_));
    const std::size_t d = b.size();
    // (c) x^2 = 0 with x = sum s_k b_k: one quadratic form per coordinate m.
    std::vector<Mat> forms;
    for (std::size_t m = 0; m < n_; ++m) {
      Mat g(d, d);
      for (std::size_t q = 0; q < n_; ++q) {
        const Rat& w = a_.omega(m, q);
        if (w == 0) continue;
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l)
            if (b[k][q] != 0 && b[l][q] != 0) g(k, l) += w * b[k][q] * b[l][q];
      }
      if (!g.is_zero()) forms.push_back(std::move(g));
    }
    if (forms.empty()) return accept(res, gamma, b.front(), d == 1);
    if (d == 1) {
      res.outcome = Outcome::Closure;
      return res;
    }

    // Decide over the algebraic closure; collect the linear consequences.
    PolyIdeal ideal{d, {}};
    for (const auto& g : forms) ideal.generators.push_back(form_poly(g));
    std::vector<Vec> constraints;
    try {
      const PolyIdeal gb = groebner(ideal, options_.groebner);
      std::vector<std::size_t> radical;
      for (std::size_t k = 0; k < d; ++k)
        if (in_radical(gb, MPoly::variable(d, k), options_.groebner)) radical.push_back(k);
      if (radical.size() == d) {
        res.outcome = Outcome::Closure;
        return res;
      }
      for (auto k : radical) {
        Vec e(d);
        e[k] = 1;
        constraints.push_back(std::move(e));
      }
      for (const auto& g : gb.generators) {
        if (g.total_degree() != 1) continue;
        Vec e(d);
        bool affine = false;
        for (const auto& t : g.terms()) {
          if (t.mono.degree == 0) {
            affine = true;
            continue;
          }
          for (std::size_t k = 0; k < d; ++k)
            if (t.mono.exp[k] == 1) e[k] = t.coeff;
        }
        if (!affine) constraints.push_back(std::move(e));
      }
    } catch (const EngineLimit& e) {
      res.note = e.what();
    }

    // Parametrize the subspace cut out by the linear consequences.
    Mat p = Mat::identity(d);
    if (!constraints.empty()) {
      const Subspace free = kernel_basis(Mat::from_rows(constraints, d));
      p = free.basis().transpose();
    }
    const std::size_t dp = p.cols();
    if (dp == 0) {
      res.outcome = Outcome::Closure;
      return res;
    }
    std::vector<Mat> restricted;
    for (const auto& g : forms) {
      Mat h = congruence(g, p);
      if (!h.is_zero()) restricted.push_back(std::move(h));
    }
    auto combine = [&](const std::vector<Rat>& u) {
      Vec x(n_);
      for (std::size_t j = 0; j < dp; ++j) {
        if (u[j] == 0) continue;
        for (std::size_t k = 0; k < d; ++k) {
          const Rat coeff = u[j] * p(k, j);
          if (coeff == 0) continue;
          for (std::size_t q = 0; q < n_; ++q)
            if (b[k][q] != 0) x[q] += coeff * b[k][q];
        }
      }
      return x;
    };
    if (restricted.empty()) return accept(res, gamma, combine(std::vector<Rat>(dp, Rat(1))), dp == 1);
    if (dp == 1) {
      res.outcome = Outcome::Closure;
      return res;
    }
    for (const auto& h : restricted)
      if (definite(h)) {
        res.outcome = Outcome::Definite;
        return res;
      }
    std::string note;
    if (auto u = rational_search(restricted, dp, options_, note)) return accept(res, gamma, combine(*u), false);
    res.outcome = Outcome::Undetermined;
    res.note = res.note.empty() ? note : res.note + "; " + note;
    return res;
  }

 private:
  SupportResult& accept(SupportResult& res, const VertexSet& gamma, const Vec& x, bool unique) const {
    Element gen(x);
    Subspace ideal = ideal_generated_by(a_, gen);
    if (!squares_to_zero(a_, ideal)) throw std::logic_error("zero-square witness failed re-verification");
    res.outcome = Outcome::Witness;
    res.witness = SemiprimeWitness{gamma, std::move(gen), std::move(ideal), unique};
    return res;
  }

  const EvolutionAlgebra& a_;
  const AnalysisOptions& options_;
  std::size_t n_;
  std::vector<std::uint32_t> closures_;
  std::vector<std::uint32_t> product_zero_;
};

}  // namespace

SemiprimeReport semiprime(const EvolutionAlgebra& a, const AnalysisOptions& options) {
  SemiprimeReport report;
  auto& v = report.verdict;
  if (a.dim() == 0) {
    v.state = Tri::Yes;
    v.certificate = "zero-dimensional algebra";
    return report;
  }
  const auto supports = ordered_supports(a.dim(), options.support_bound);
  const SemiprimeEngine engine(a, options);
  auto scan = detail::ordered_scan<SupportResult>(
      supports.size(), resolve_threads(options), !options.collect_all,
      [&](std::size_t i) { return engine.examine(supports[i]); },
      [](const SupportResult& r) { return r.outcome == Outcome::Witness; });

  std::vector<std::string> notes;
  for (std::size_t i = 0; i < scan.limit; ++i) {
    auto& r = *scan.results[i];
    ++report.supports_checked;
    switch (r.outcome) {
      case Outcome::Products:
        ++report.ruled_out_by_products;
        break;
      case Outcome::Linear:
        ++report.ruled_out_linear;
        break;
      case Outcome::Closure:
        ++report.ruled_out_closure;
        break;
      case Outcome::Definite:
        ++report.ruled_out_definite;
        break;
      case Outcome::Undetermined:
        report.undetermined_supports.push_back(from_mask(supports[i]));
        if (notes.empty()) notes.push_back(r.note);
        break;
      case Outcome::Witness:
        if (!v.witness) v.witness = *r.witness;
        if (options.collect_all) report.witnesses.push_back(std::move(*r.witness));
        break;
    }
  }
  if (v.witness) {
    v.state = Tri::No;
    v.certificate = "ideal generated by a nonzero element squares to zero";
  } else if (!report.undetermined_supports.empty()) {
    v.state = Tri::Undetermined;
    v.reason = std::to_string(report.undetermined_supports.size()) + " support(s) unresolved: " + notes.front();
  } else {
    v.state = Tri::Yes;
    v.certificate = "every support ruled out (" + std::to_string(report.ruled_out_by_products) + " by products, " +
                    std::to_string(report.ruled_out_linear) + " linear, " + std::to_string(report.ruled_out_closure) +
                    " over the closure, " + std::to_string(report.ruled_out_definite) + " by a definite form)";
  }
  return report;
}

}  // namespace evolalg
