// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance            run every criterion
//   acceptance --only N   run criterion N (1..9)
//
// Exit status is 0 when every criterion that ran passed.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "evolalg/analysis.hpp"
#include "evolalg/io.hpp"
#include "evolalg/report.hpp"
#include "fixtures.hpp"
#include "test_support.hpp"

using namespace evolalg;

namespace {

/// Collects failed checks of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t count() const { return count_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

bool kills_every_basis_element(const EvolutionAlgebra& a, const Element& x) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!multiply(a, multiply(a, x, Element::basis(a.dim(), i)), x).is_zero()) return false;
  return true;
}

bool zero_square_ideal(const EvolutionAlgebra& a, const Subspace& s) {
  if (s.is_zero() || !is_ideal(a, s)) return false;
  for (const auto& u : s.basis_vectors())
    for (const auto& v : s.basis_vectors())
      if (!multiply(a, Element(u), Element(v)).is_zero()) return false;
  return true;
}

std::string seed_note(std::uint64_t seed, const std::string& what) { return "seed " + std::to_string(seed) + ": " + what; }

constexpr std::size_t kSuiteSize = 1000;

// --- criteria ------------------------------------------------------------

void complete_pair(Check& c) {
  const auto a = fixtures::complete_pair();
  const Subspace diagonal = Subspace::span(2, {{1, 1}});
  const auto d = degeneracy(a);
  c.expect(d.state == Tri::Yes, "degenerate");
  c.expect(d.witness && Subspace::span(2, {d.witness->coords()}) == diagonal, "degeneracy witness spans (1,1)");
  const auto s = semiprime(a);
  c.expect(s.verdict.state == Tri::No, "not semiprime");
  c.expect(s.verdict.witness && s.verdict.witness->ideal == diagonal, "zero-square ideal is span{(1,1)}");
  c.expect(!is_perfect(a), "not perfect");
  c.expect(is_zero_annihilator(a), "zero annihilator");
  c.expect(components(from_algebra(a)).size() == 1, "one component");
  c.expect(centroid(a).dim == 1, "centroid dimension 1");
}

void degenerate_4d(Check& c) {
  const auto a = fixtures::degenerate_4d();
  const auto d = degeneracy(a);
  c.expect(d.state == Tri::Yes, "degenerate");
  c.expect(d.witness && *d.witness == Element::basis(4, 3), "witness (0,0,0,1)");
  bool listed = false;
  for (const auto& p : zero_divisor_locus_pieces(a)) listed = listed || p.space.contains(Element::basis(4, 3).coords());
  c.expect(listed, "(0,0,0,1) lies in the listed zero-divisor locus");
  const auto g = degeneracy_groebner(a);
  c.expect(g.state == Tri::Yes, "Groebner engine confirms degeneracy");
  c.expect(radical_variables(n2_ideal(a)) == std::vector<std::size_t>{0, 1, 2}, "x, y, z vanish on the locus");
  // t stays free: the point (0,0,0,1) lies on the variety.
  bool t_free = true;
  for (const auto& p : n2_entries(a)) t_free = t_free && p.evaluate(Vec{0, 0, 0, 1}) == 0;
  c.expect(t_free, "t is free on the locus");
}

void unique_zero_square(Check& c) {
  const auto a = fixtures::unique_zero_square_4d();
  AnalysisOptions all;
  all.collect_all = true;
  const auto s = semiprime(a, all);
  const Subspace expected = Subspace::span(4, {{1, -1, 0, 0}});
  c.expect(s.verdict.state == Tri::No, "not semiprime");
  c.expect(s.verdict.witness && s.verdict.witness->ideal == expected, "witness ideal Q(e1 - e2)");
  c.expect(!s.witnesses.empty(), "witnesses collected");
  for (const auto& w : s.witnesses) {
    c.expect(w.ideal == expected, "every witness generates Q(e1 - e2)");
    c.expect(w.unique_in_support, "solution set is a single line");
  }
  c.expect(s.undetermined_supports.empty(), "every other support ruled out");
  c.expect(zero_square_ideal(a, expected), "Q(e1 - e2) is a zero-square ideal");
}

void semiprime_though_degenerate(Check& c) {
  const auto a = fixtures::degenerate_5d();
  c.expect(degeneracy(a).state == Tri::Yes, "degenerate");
  const Subspace e4 = Subspace::span(5, {{0, 0, 0, 1, 0}});
  const Subspace plane = Subspace::span(5, {{1, 1, 0, 0, 0}, {0, 0, 0, 1, 0}});
  bool saw_e4 = false, saw_plane = false;
  for (const auto& p : zero_divisor_locus_pieces(a)) {
    saw_e4 = saw_e4 || p.space == e4;
    saw_plane = saw_plane || p.space == plane;
  }
  c.expect(saw_e4 && subspace_in_zero_divisor_locus(a, e4), "Qe4 found in the zero-divisor locus");
  c.expect(saw_plane && subspace_in_zero_divisor_locus(a, plane), "Q(e1+e2) + Qe4 found in the zero-divisor locus");
  c.expect(!is_ideal(a, e4), "Qe4 rejected as an ideal");
  c.expect(!is_ideal(a, plane), "Q(e1+e2) + Qe4 rejected as an ideal");
  const auto s = semiprime(a);
  std::string note = "semiprime = yes (engine says " + std::string(to_string(s.verdict.state));
  if (s.verdict.witness) {
    note += ", zero-square ideal generated by (";
    const Vec& g = s.verdict.witness->generator.coords();
    for (std::size_t i = 0; i < g.size(); ++i) note += (i ? "," : "") + to_string(g[i]);
    note += ")";
  }
  c.expect(s.verdict.state == Tri::Yes, note + ")");
}

void prime_ideals_example(Check& c) {
  const auto a = fixtures::non_prime_5d();
  const auto r = prime_ideals(a);
  std::vector<VertexSet> got;
  for (const auto& p : r.primes) got.push_back(p.vertices);
  c.expect(got == std::vector<VertexSet>{{0, 3, 4}, {1, 3, 4}, {0, 1, 3, 4}},
           "exactly Ke1+Ke4+Ke5, Ke2+Ke4+Ke5, Ke1+Ke2+Ke4+Ke5");
  c.expect(r.undetermined.empty(), "no undetermined quotient");
  bool h1_rejected = false;
  for (const auto& h : r.rejected_not_semiprime) h1_rejected = h1_rejected || h == VertexSet{0, 1};
  c.expect(h1_rejected, "H1 = {e1, e2} rejected: quotient not semiprime");
  c.expect(semiprime(quotient_by_basic(a, std::vector<std::size_t>{0, 1})).verdict.state == Tri::No,
           "A / I_H1 has a zero-square ideal");
  c.expect(prime(a).state == Tri::No, "the algebra itself is not prime");
}

void sink_layers(Check& c) {
  const auto a = fixtures::sink_layers_8d();
  const auto s = sink_strata(from_algebra(a));
  c.expect(s.strata == std::vector<VertexSet>{{6, 7}, {3}, {5}, {4}}, "strata {e7,e8}, {e4}, {e6}, {e5}");
  const auto r = absorption(a);
  c.expect(r.radical == Subspace::axes(8, std::vector<std::size_t>{3, 4, 5, 6, 7}), "radical span{e4..e8}");
  c.expect(r.asi == 4, "asi = 4");
  const auto series = ann_series(a);
  VertexSet layers;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k < s.strata.size()) layers.insert(layers.end(), s.strata[k].begin(), s.strata[k].end());
    c.expect(k < series.terms.size() && series.terms[k] == Subspace::axes(8, layers),
             "Ann^(" + std::to_string(k + 1) + ") = span of the first strata");
  }
}

void property_suite(Check& c) {
  std::size_t perfect = 0, zero_ann = 0, groebner_checked = 0;
  for (std::uint64_t seed = 0; seed < kSuiteSize; ++seed) {
    const auto a = testing_support::grid_algebra(seed);
    const auto g = from_algebra(a);
    // (a)
    c.expect(is_zero_annihilator(a) == annihilator(a).is_zero() && annihilator(a).is_zero() == is_sinkless(g),
             seed_note(seed, "(a) zero annihilator iff sinkless"));
    const auto d = degeneracy(a);
    // (b), (c)
    if (is_perfect(a)) {
      ++perfect;
      c.expect(semiprime(a).verdict.state == Tri::Yes, seed_note(seed, "(b) perfect implies semiprime"));
      bool all_loops = true;
      for (std::size_t i = 0; i < a.dim(); ++i) all_loops = all_loops && g.has_edge(i, i);
      c.expect(nondegenerate_perfect_check(a) == all_loops && all_loops == (d.state == Tri::No),
               seed_note(seed, "(c) nondegenerate iff all loops iff engine says no"));
    }
    // (d)
    if (!is_downward_directed(g))
      c.expect(prime(a).state == Tri::No, seed_note(seed, "(d) not downward directed implies not prime"));
    // (e)
    if (is_zero_annihilator(a)) {
      ++zero_ann;
      const auto comps = components(g);
      const auto cb = centroid(a);
      c.expect(cb.dim == comps.size(), seed_note(seed, "(e) centroid dimension = components"));
      std::vector<std::size_t> comp_of(a.dim());
      for (std::size_t k = 0; k < comps.size(); ++k)
        for (auto v : comps[k]) comp_of[v] = k;
      for (const auto& t : cb.basis) {
        bool ok = is_centralizer(a, t);
        for (std::size_t i = 0; i < a.dim(); ++i)
          for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j && t(i, j) != 0) ok = false;
            if (comp_of[i] == comp_of[j] && t(i, i) != t(j, j)) ok = false;
          }
        c.expect(ok, seed_note(seed, "(e) centralizers diagonal and constant on components"));
      }
    }
    // (f)
    if (a.dim() <= 5) {
      ++groebner_checked;
      const auto gr = degeneracy_groebner(a);
      c.expect(gr.state == d.state, seed_note(seed, "(f) linear and Groebner engines agree (Groebner: " +
                                                        std::string(to_string(gr.state)) + ")"));
    }
  }
  std::cout << "    " << kSuiteSize << " algebras, " << perfect << " perfect, " << zero_ann << " zero annihilator, "
            << groebner_checked << " cross-checked by Groebner\n";
}

void witness_reverification(Check& c) {
  std::size_t azd = 0, ideals = 0, inverses = 0;
  auto verify = [&](const EvolutionAlgebra& a, const std::string& tag) {
    const auto d = degeneracy(a);
    if (d.witness) {
      ++azd;
      c.expect(!d.witness->is_zero() && kills_every_basis_element(a, *d.witness), tag + ": absolute zero divisor");
    }
    const auto s = semiprime(a);
    if (s.verdict.witness) {
      ++ideals;
      c.expect(zero_square_ideal(a, s.verdict.witness->ideal), tag + ": zero-square ideal");
      c.expect(s.verdict.witness->ideal.contains(s.verdict.witness->generator.coords()), tag + ": generator inside");
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec coords(a.dim());
      for (std::size_t k = 0; k < a.dim(); ++k) coords[k] = (k == i) ? Rat(1) : Rat(0);
      for (const Element& x : {Element(coords), Element(Vec(a.dim(), Rat(1)))}) {
        if (auto y = vn_element(a, x)) {
          ++inverses;
          c.expect(multiply(a, multiply(a, x, *y), x) == x, tag + ": von Neumann inverse");
        }
      }
    }
  };
  for (const auto& a : {fixtures::complete_pair(), fixtures::degenerate_4d(), fixtures::unique_zero_square_4d(),
                        fixtures::degenerate_5d(), fixtures::non_prime_5d(), fixtures::bipartite_4d(),
                        fixtures::prime_not_perfect(), fixtures::loop_and_sink(), fixtures::twin(),
                        fixtures::two_loops(), fixtures::sink_layers_8d()})
    verify(a, "example");
  for (std::uint64_t seed = 0; seed < kSuiteSize; ++seed) verify(testing_support::grid_algebra(seed), seed_note(seed, ""));
  std::cout << "    re-verified " << azd << " absolute zero divisors, " << ideals << " zero-square ideals, " << inverses
            << " von Neumann inverses\n";
}

std::string suite_reports(unsigned threads) {
  ReportOptions options;
  options.analysis.threads = threads;
  std::string all;
  for (std::uint64_t seed = 0; seed < kSuiteSize; ++seed) {
    const auto dims = 2 + seed % 5;
    static constexpr double kDensities[] = {0.3, 0.6, 0.9};
    all += render_json(analyze_report(random_algebra(dims, kDensities[seed % 3], seed), options));
  }
  return all;
}

void determinism(Check& c) {
  const std::string first = suite_reports(1);
  const std::string second = suite_reports(1);
  c.expect(first == second, "two runs give byte-identical reports");
  c.expect(suite_reports(4) == first, "four worker threads give byte-identical reports");
  std::cout << "    " << first.size() << " bytes of JSON per run\n";
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 1;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "complete pair: degenerate, not semiprime, zero annihilator, centroid 1", 1, complete_pair},
      {2, "4-dim degenerate example: witness e4, Groebner locus x=y=z=0", 5, degenerate_4d},
      {3, "unique zero-square ideal Q(e1 - e2)", 5, unique_zero_square},
      {4, "5-dim example: semiprime though degenerate", 10, semiprime_though_degenerate},
      {5, "prime ideals of the 5-dim non-prime example", 10, prime_ideals_example},
      {6, "8-vertex sink strata, absorption radical, asi 4", 1, sink_layers},
      {7, "property suite over 1000 seeded algebras", 300, property_suite},
      {8, "witness re-verification", 300, witness_reverification},
      {9, "determinism of JSON reports", 300, determinism},
  };

  bool all_ok = true;
  for (const auto& crit : criteria) {
    if (only != 0 && crit.id != only) continue;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < crit.budget_seconds, "runtime under " + std::to_string(static_cast<int>(crit.budget_seconds)) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (c.ok() ? "PASS" : "FAIL") << "  criterion " << crit.id << ": " << crit.title << "  (" << c.count()
         << " checks, " << c.failed() << " failed, " << seconds << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : c.failures()) std::cout << "    failed: " << f << "\n";
    all_ok = all_ok && c.ok();
  }
  return all_ok ? 0 : 1;
}
