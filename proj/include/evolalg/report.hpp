#pragma once

#include <string>

#include <json.hpp>

#include "evolalg/analysis.hpp"
#include "evolalg/io.hpp"

namespace evolalg {

/// Reports are built once as ordered JSON; the human-readable text is
/// rendered from the same object, so both forms always carry the same
/// verdicts. No timings or other run-dependent data are included.
using Report = nlohmann::ordered_json;

enum class DegeneracyEngine { Linear, Groebner };

struct ReportOptions {
  AnalysisOptions analysis;
  DegeneracyEngine engine = DegeneracyEngine::Linear;
};

Report analyze_report(const AlgebraFile& file, const ReportOptions& options = {});
Report degeneracy_report(const AlgebraFile& file, const ReportOptions& options = {});
Report prime_ideals_report(const AlgebraFile& file, const ReportOptions& options = {});
Report centroid_report(const AlgebraFile& file, const ReportOptions& options = {});
Report decompose_report(const AlgebraFile& file, const ReportOptions& options = {});
Report series_report(const AlgebraFile& file);

enum class ElementCheck { VonNeumann, AbsoluteZeroDivisor };
Report element_report(const AlgebraFile& file, const Element& x, ElementCheck check);

/// Parses "1,-1/2,0" into coordinates; throws InputError with the position
/// of a bad entry or a length mismatch.
Element parse_coords(std::string_view text, std::size_t dim);

/// True when any "state" field anywhere in the report is "undetermined".
bool has_undetermined(const Report& report);

std::string render_json(const Report& report);
std::string render_text(const Report& report);

}  // namespace evolalg
