#include "evolalg/report.hpp"

#include <functional>
#include <sstream>

namespace evolalg {

namespace {

using nlohmann::ordered_json;

ordered_json vec_json(const Vec& v) {
  auto out = ordered_json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

ordered_json mat_json(const Mat& m) {
  auto out = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_json(Vec(m.row(r).begin(), m.row(r).end())));
  return out;
}

ordered_json subspace_json(const Subspace& s) {
  auto out = ordered_json::array();
  for (const auto& v : s.basis_vectors()) out.push_back(vec_json(v));
  return out;
}

ordered_json labels_json(const EvolutionAlgebra& a, const VertexSet& set) {
  auto out = ordered_json::array();
  for (auto v : set) out.push_back(a.labels()[v]);
  return out;
}

ordered_json sets_json(const EvolutionAlgebra& a, const std::vector<VertexSet>& sets) {
  auto out = ordered_json::array();
  for (const auto& s : sets) out.push_back(labels_json(a, s));
  return out;
}

ordered_json input_json(const AlgebraFile& file) {
  ordered_json in;
  if (!file.description.empty()) in["description"] = file.description;
  in["basis"] = file.algebra.labels();
  in["matrix"] = mat_json(file.algebra.structure());
  return in;
}

template <class W, class F>
ordered_json verdict_json(const Verdict<W>& v, F&& witness) {
  ordered_json out;
  out["state"] = std::string(to_string(v.state));
  if (v.witness) out["witness"] = witness(*v.witness);
  if (!v.certificate.empty()) out["certificate"] = v.certificate;
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

ordered_json plain_json(const PlainVerdict& v) {
  return verdict_json(v, [](const std::monostate&) { return ordered_json(); });
}

// Runs a section; bound and engine limits become an in-band Undetermined.
ordered_json guarded(ordered_json& limits, const std::string& name, const std::function<ordered_json()>& body) {
  try {
    return body();
  } catch (const BoundExceeded& e) {
    limits.push_back(name + ": " + e.what());
    return {{"state", "undetermined"}, {"reason", e.what()}};
  } catch (const EngineLimit& e) {
    limits.push_back(name + ": " + e.what());
    return {{"state", "undetermined"}, {"reason", e.what()}};
  }
}

ordered_json engine_json(const ReportOptions& o, ordered_json limits) {
  ordered_json e;
  e["degeneracy_engine"] = o.engine == DegeneracyEngine::Linear ? "linear" : "groebner";
  e["support_bound"] = o.analysis.support_bound;
  e["height_cap"] = o.analysis.height_cap;
  e["search_budget"] = o.analysis.search_budget;
  e["hereditary_bound"] = o.analysis.hereditary_bound;
  e["groebner_var_bound"] = o.analysis.groebner.var_bound;
  e["bounds_hit"] = std::move(limits);
  return e;
}

ordered_json degeneracy_json(const EvolutionAlgebra& a, const ReportOptions& o) {
  const auto v = o.engine == DegeneracyEngine::Linear ? degeneracy(a, o.analysis) : degeneracy_groebner(a, o.analysis);
  auto out = verdict_json(v, [](const Element& x) { return vec_json(x.coords()); });
  out["engine"] = o.engine == DegeneracyEngine::Linear ? "linear" : "groebner";
  return out;
}

ordered_json semiprime_json(const EvolutionAlgebra& a, const AnalysisOptions& o) {
  const auto r = semiprime(a, o);
  auto out = verdict_json(r.verdict, [&](const SemiprimeWitness& w) {
    ordered_json j;
    j["generator"] = vec_json(w.generator.coords());
    j["support"] = labels_json(a, w.support);
    j["ideal"] = subspace_json(w.ideal);
    return j;
  });
  out["supports_checked"] = r.supports_checked;
  out["ruled_out"] = {{"products", r.ruled_out_by_products},
                      {"linear", r.ruled_out_linear},
                      {"closure", r.ruled_out_closure},
                      {"definite", r.ruled_out_definite}};
  out["undetermined_supports"] = sets_json(a, r.undetermined_supports);
  return out;
}

ordered_json prime_ideals_json(const EvolutionAlgebra& a, const AnalysisOptions& o) {
  const auto r = prime_ideals(a, o);
  ordered_json out;
  auto primes = ordered_json::array();
  for (const auto& p : r.primes) primes.push_back(labels_json(a, p.vertices));
  out["count"] = r.primes.size();
  out["primes"] = std::move(primes);
  out["rejected_not_semiprime"] = sets_json(a, r.rejected_not_semiprime);
  out["rejected_not_downward_directed"] = sets_json(a, r.rejected_not_directed);
  out["undetermined"] = sets_json(a, r.undetermined);
  if (!r.undetermined.empty()) {
    out["state"] = "undetermined";
    out["reason"] = "semiprimeness of some quotients is undetermined";
  }
  return out;
}

ordered_json absorption_json(const EvolutionAlgebra& a) {
  const auto r = absorption(a);
  ordered_json out;
  out["radical"] = labels_json(a, r.radical_vertices);
  out["asi"] = r.asi;
  out["strata"] = sets_json(a, r.strata.strata);
  out["residue"] = labels_json(a, r.strata.residue);
  return out;
}

ordered_json centroid_json(const EvolutionAlgebra& a, const AnalysisOptions& o) {
  const auto c = centroid(a, o);
  ordered_json out;
  out["dim"] = c.dim;
  auto basis = ordered_json::array();
  for (const auto& t : c.basis) basis.push_back(mat_json(t));
  out["basis"] = std::move(basis);
  return out;
}

ordered_json decomposition_json(const EvolutionAlgebra& a, const AnalysisOptions& o) {
  ordered_json out;
  if (!is_zero_annihilator(a)) {
    out["applicable"] = false;
    out["reason"] = "nonzero annihilator";
    return out;
  }
  out["applicable"] = true;
  auto summands = ordered_json::array();
  for (const auto& s : decompose(a, o)) {
    ordered_json j;
    j["basis"] = s.algebra.labels();
    j["matrix"] = mat_json(s.algebra.structure());
    summands.push_back(std::move(j));
  }
  out["count"] = summands.size();
  out["summands"] = std::move(summands);
  return out;
}

ordered_json graph_json(const EvolutionAlgebra& a) {
  const auto g = from_algebra(a);
  ordered_json out;
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();
  out["sinks"] = labels_json(a, sinks(g));
  out["downward_directed"] = is_downward_directed(g);
  out["isolated_loops"] = is_isolated_loops(g);
  out["components"] = sets_json(a, components(g));
  return out;
}

}  // namespace

Report analyze_report(const AlgebraFile& file, const ReportOptions& options) {
  const auto& a = file.algebra;
  const auto& o = options.analysis;
  auto limits = ordered_json::array();
  Report r;
  r["command"] = "analyze";
  r["input"] = input_json(file);
  r["dimension"] = a.dim();
  r["zero_annihilator"] = is_zero_annihilator(a);
  r["annihilator"] = subspace_json(annihilator(a));
  r["perfect"] = is_perfect(a);
  r["graph"] = graph_json(a);
  r["degeneracy"] = guarded(limits, "degeneracy", [&] { return degeneracy_json(a, options); });
  r["semiprime"] = guarded(limits, "semiprime", [&] { return semiprime_json(a, o); });
  r["prime"] = guarded(limits, "prime", [&] { return plain_json(prime(a, o)); });
  r["prime_ideals"] = guarded(limits, "prime_ideals", [&] { return prime_ideals_json(a, o); });
  r["absorption"] = absorption_json(a);
  r["von_neumann"] = vn_algebra(a);
  r["centroid"] = guarded(limits, "centroid", [&] { return centroid_json(a, o); });
  r["decomposition"] = guarded(limits, "decomposition", [&] { return decomposition_json(a, o); });
  r["engine"] = engine_json(options, std::move(limits));
  return r;
}

Report degeneracy_report(const AlgebraFile& file, const ReportOptions& options) {
  auto limits = ordered_json::array();
  Report r;
  r["command"] = "degenerate";
  r["input"] = input_json(file);
  r["degeneracy"] = guarded(limits, "degeneracy", [&] { return degeneracy_json(file.algebra, options); });
  r["engine"] = engine_json(options, std::move(limits));
  return r;
}

Report prime_ideals_report(const AlgebraFile& file, const ReportOptions& options) {
  auto limits = ordered_json::array();
  Report r;
  r["command"] = "prime-ideals";
  r["input"] = input_json(file);
  r["prime_ideals"] =
      guarded(limits, "prime_ideals", [&] { return prime_ideals_json(file.algebra, options.analysis); });
  r["engine"] = engine_json(options, std::move(limits));
  return r;
}

Report centroid_report(const AlgebraFile& file, const ReportOptions& options) {
  auto limits = ordered_json::array();
  Report r;
  r["command"] = "centroid";
  r["input"] = input_json(file);
  r["centroid"] = guarded(limits, "centroid", [&] { return centroid_json(file.algebra, options.analysis); });
  r["components"] = sets_json(file.algebra, components(from_algebra(file.algebra)));
  r["engine"] = engine_json(options, std::move(limits));
  return r;
}

Report decompose_report(const AlgebraFile& file, const ReportOptions& options) {
  auto limits = ordered_json::array();
  Report r;
  r["command"] = "decompose";
  r["input"] = input_json(file);
  r["decomposition"] =
      guarded(limits, "decomposition", [&] { return decomposition_json(file.algebra, options.analysis); });
  r["engine"] = engine_json(options, std::move(limits));
  return r;
}

Report series_report(const AlgebraFile& file) {
  const auto& a = file.algebra;
  const auto abs = absorption(a);
  Report r;
  r["command"] = "series";
  r["input"] = input_json(file);
  auto terms = ordered_json::array();
  for (const auto& t : abs.series.terms) terms.push_back(subspace_json(t));
  r["annihilator_series"] = std::move(terms);
  r["asi"] = abs.asi;
  r["strata"] = sets_json(a, abs.strata.strata);
  r["residue"] = labels_json(a, abs.strata.residue);
  r["absorption_radical"] = labels_json(a, abs.radical_vertices);
  return r;
}

Report element_report(const AlgebraFile& file, const Element& x, ElementCheck check) {
  const auto& a = file.algebra;
  Report r;
  r["command"] = "element";
  r["input"] = input_json(file);
  r["element"] = vec_json(x.coords());
  if (check == ElementCheck::AbsoluteZeroDivisor) {
    r["absolute_zero_divisor"] = is_absolute_zero_divisor(a, x);
  } else {
    ordered_json vn;
    if (auto y = vn_element(a, x)) {
      vn["regular"] = true;
      vn["inverse"] = vec_json(y->coords());
    } else {
      vn["regular"] = false;
    }
    r["von_neumann"] = std::move(vn);
  }
  return r;
}

Element parse_coords(std::string_view text, std::size_t dim) {
  Vec coords;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string part(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    // Allow spaces around entries.
    part.erase(0, part.find_first_not_of(' '));
    part.erase(part.find_last_not_of(' ') + 1);
    try {
      coords.push_back(parse_rat(part));
    } catch (const std::invalid_argument& e) {
      throw InputError("coords[" + std::to_string(coords.size()) + "]: " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coords.size() != dim)
    throw InputError("coords: " + std::to_string(coords.size()) + " entries for dimension " + std::to_string(dim));
  return Element(std::move(coords));
}

bool has_undetermined(const Report& report) {
  if (report.is_object()) {
    for (const auto& [key, value] : report.items()) {
      if (key == "state" && value.is_string() && value.get<std::string>() == "undetermined") return true;
      if (has_undetermined(value)) return true;
    }
  } else if (report.is_array()) {
    for (const auto& v : report)
      if (has_undetermined(v)) return true;
  }
  return false;
}

std::string render_json(const Report& report) { return report.dump(2) + "\n"; }

namespace {

bool is_flat(const ordered_json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  if (v.is_null()) return "-";
  return v.dump();
}

void text_value(std::ostringstream& out, const ordered_json& v, int indent);

void text_entry(std::ostringstream& out, const std::string& key, const ordered_json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_flat(v)) {
    out << pad << key << ": " << scalar_text(v) << "\n";
  } else if (v.is_array() && v.empty()) {
    out << pad << key << ": []\n";
  } else {
    out << pad << key << ":\n";
    text_value(out, v, indent + 2);
  }
}

void text_value(std::ostringstream& out, const ordered_json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) text_entry(out, key, value, indent);
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (is_flat(item)) {
        out << pad << "- " << scalar_text(item) << "\n";
      } else {
        out << pad << "-\n";
        text_value(out, item, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  text_value(out, report, 0);
  return out.str();
}

}  // namespace evolalg
