#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "depthlab/chains.hpp"
#include "depthlab/chartab.hpp"
#include "depthlab/inclusion.hpp"
#include "depthlab/matdepth.hpp"
#include "depthlab/matrix.hpp"

namespace depthlab {

// Matrix formats at the CLI boundary.
// CSV: one row per line, comma-separated base-10 nonnegative integers.
// JSON: {"rows": r, "cols": s, "entries": [[...]]}; entries may be numbers
// or digit strings (for values past the JSON number range).
NonnegMatrix matrix_from_csv(std::istream& in);
NonnegMatrix matrix_from_csv_string(const std::string& text);
NonnegMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const NonnegMatrix& m);

nlohmann::json depth_report_to_json(const DepthReport& report);

nlohmann::json pair_report_to_json(const PairDepthReport& report, const std::string& group_spec,
                                   const std::string& subgroup_spec);
nlohmann::json core_reduction_to_json(const CoreReductionReport& report,
                                      const std::string& group_spec,
                                      const std::string& subgroup_spec);

nlohmann::json char_table_to_json(const CharTableModP& table);
nlohmann::json chain_to_json(const std::string& family, int n, int closed_form,
                             std::optional<int> matrix_depth);

// Plain-text rendering of a report object, one "key: value" line per scalar,
// matrices as row blocks.
std::string render_table(const nlohmann::json& j);

}  // namespace depthlab
