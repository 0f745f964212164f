// Command-line front end: reads an algebra file and prints reports.
//
// Exit codes: 0 every verdict determined, 1 input error, 2 some verdict
// undetermined (the report is still printed).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "evolalg/analysis.hpp"
#include "evolalg/io.hpp"
#include "evolalg/report.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kUndetermined = 2;

int emit(const evolalg::Report& report, bool json) {
  std::cout << (json ? evolalg::render_json(report) : evolalg::render_text(report));
  return evolalg::has_undetermined(report) ? kUndetermined : 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace evolalg;

  CLI::App app{"Decide structural properties of evolution algebras over the rationals."};
  app.require_subcommand(1);

  bool json = false;
  std::string engine = "linear";
  ReportOptions options;
  app.add_flag("--json", json, "Print the machine-readable JSON report");
  app.add_option("--engine", engine, "Degeneracy engine")->check(CLI::IsMember({"linear", "groebner"}));
  app.add_option("--height-cap", options.analysis.height_cap, "Height cap of the rational witness search")
      ->check(CLI::PositiveNumber);
  app.add_option("--support-bound", options.analysis.support_bound, "Largest dimension for support enumeration")
      ->check(CLI::Range(1, 31));

  std::string path;
  auto with_file = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "Algebra file (JSON)")->required();
    sub->fallthrough();
    return sub;
  };
  auto* analyze = with_file("analyze", "Run every engine and print the full report");
  auto* graph = with_file("graph", "Print the associated graph in DOT format");
  auto* primes = with_file("prime-ideals", "List the prime ideals");
  auto* centroid_cmd = with_file("centroid", "Compute a basis of the centroid");
  auto* decompose_cmd = with_file("decompose", "Split a zero-annihilator algebra into indecomposable summands");
  auto* series = with_file("series", "Upper annihilating series and sink strata");
  auto* degenerate = with_file("degenerate", "Decide degeneracy");
  auto* element = with_file("element", "Check one element");
  std::string coords;
  std::string check = "azd";
  element->add_option("--coords", coords, "Comma-separated coordinates, e.g. 1,-1/2,0")->required();
  element->add_option("--check", check, "vn (von Neumann regular) or azd (absolute zero divisor)")
      ->check(CLI::IsMember({"vn", "azd"}));

  auto* random = app.add_subcommand("random", "Print a seeded random algebra file");
  random->fallthrough();
  std::size_t dim = 4;
  double density = 0.5;
  std::uint64_t seed = 0;
  random->add_option("--dim", dim, "Dimension (1..16)")->required();
  random->add_option("--density", density, "Probability of a nonzero entry")->required();
  random->add_option("--seed", seed, "Seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  options.engine = engine == "groebner" ? DegeneracyEngine::Groebner : DegeneracyEngine::Linear;

  try {
    if (*random) {
      std::cout << render_algebra(random_algebra(dim, density, seed));
      return 0;
    }
    const AlgebraFile file = read_algebra_file(path);
    if (*graph) {
      std::cout << to_dot(from_algebra(file.algebra), file.algebra.labels());
      return 0;
    }
    if (*analyze) return emit(analyze_report(file, options), json);
    if (*primes) return emit(prime_ideals_report(file, options), json);
    if (*centroid_cmd) return emit(centroid_report(file, options), json);
    if (*decompose_cmd) return emit(decompose_report(file, options), json);
    if (*series) return emit(series_report(file), json);
    if (*degenerate) return emit(degeneracy_report(file, options), json);
    if (*element) {
      const Element x = parse_coords(coords, file.algebra.dim());
      return emit(element_report(file, x, check == "vn" ? ElementCheck::VonNeumann : ElementCheck::AbsoluteZeroDivisor),
                  json);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
