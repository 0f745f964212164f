#include "evolalg/io.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace evolalg {

namespace {

using nlohmann::ordered_json;

std::string at(std::size_t r, std::size_t c) {
  return "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]";
}

Rat parse_entry(const ordered_json& v, std::size_t r, std::size_t c) {
  if (v.is_number_integer()) {
    // Covers both signed and unsigned JSON integers.
    return Rat(mpz_class(v.dump()));
  }
  if (v.is_number_float())
    throw InputError(at(r, c) + ": floating-point values are not allowed, write \"p/q\" instead");
  if (!v.is_string()) throw InputError(at(r, c) + ": expected an integer or a \"p/q\" string");
  try {
    return parse_rat(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(at(r, c) + ": " + e.what());
  }
}

}  // namespace

AlgebraFile parse_algebra(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top level: expected a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "basis" && key != "matrix" && key != "description")
      throw InputError(key + ": unknown field");
  if (!doc.contains("matrix")) throw InputError("matrix: missing");
  const auto& m = doc["matrix"];
  if (!m.is_array() || m.empty()) throw InputError("matrix: expected a nonempty array of rows");
  const std::size_t n = m.size();
  Mat structure(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!m[r].is_array()) throw InputError("matrix[" + std::to_string(r) + "]: expected an array");
    if (m[r].size() != n)
      throw InputError("matrix[" + std::to_string(r) + "]: non-square matrix, row has " + std::to_string(m[r].size()) +
                       " entries but there are " + std::to_string(n) + " rows");
    for (std::size_t c = 0; c < n; ++c) structure(r, c) = parse_entry(m[r][c], r, c);
  }
  std::vector<std::string> labels = default_labels(n);
  if (doc.contains("basis")) {
    const auto& b = doc["basis"];
    if (!b.is_array()) throw InputError("basis: expected an array of strings");
    if (b.size() != n)
      throw InputError("basis: " + std::to_string(b.size()) + " labels for a " + std::to_string(n) + "x" +
                       std::to_string(n) + " matrix");
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string() || b[i].get<std::string>().empty())
        throw InputError("basis[" + std::to_string(i) + "]: expected a nonempty string");
      labels[i] = b[i].get<std::string>();
      if (!seen.insert(labels[i]).second)
        throw InputError("basis[" + std::to_string(i) + "]: duplicate label '" + labels[i] + "'");
    }
  }
  AlgebraFile file{EvolutionAlgebra(std::move(structure), std::move(labels)), {}};
  if (doc.contains("description")) {
    if (!doc["description"].is_string()) throw InputError("description: expected a string");
    file.description = doc["description"].get<std::string>();
  }
  return file;
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_algebra(buffer.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string render_algebra(const AlgebraFile& file) {
  const auto& a = file.algebra;
  ordered_json doc;
  if (!file.description.empty()) doc["description"] = file.description;
  doc["basis"] = a.labels();
  auto rows = ordered_json::array();
  for (std::size_t r = 0; r < a.dim(); ++r) {
    auto row = ordered_json::array();
    for (std::size_t c = 0; c < a.dim(); ++c) row.push_back(to_string(a.structure()(r, c)));
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump(2) + "\n";
}

AlgebraFile random_algebra(std::size_t dim, double density, std::uint64_t seed) {
  if (dim < 1 || dim > kMaxRandomDim)
    throw std::invalid_argument("dimension must be between 1 and " + std::to_string(kMaxRandomDim));
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");
  // Raw engine output only (no std distributions), so files are identical
  // across standard libraries.
  std::mt19937_64 rng(seed);
  const std::uint64_t threshold = static_cast<std::uint64_t>(density * 4294967296.0);
  static constexpr long kNumerators[] = {-3, -2, -1, 1, 2, 3};
  Mat m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const bool nonzero = (rng() >> 32) < threshold;
      if (!nonzero) continue;
      const long num = kNumerators[rng() % 6];
      const long den = 1 + static_cast<long>(rng() % 2);
      m(r, c) = Rat(num, den);
      m(r, c).canonicalize();
    }
  std::ostringstream desc;
  desc << "random dim=" << dim << " density=" << density << " seed=" << seed;
  return {EvolutionAlgebra(std::move(m)), desc.str()};
}

}  // namespace evolalg
