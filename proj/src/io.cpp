#include "depthlab/io.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "depthlab/errors.hpp"

namespace depthlab {

using nlohmann::json;

namespace {

mpz_class parse_nonneg_integer(const std::string& token, std::size_t line_no) {
  std::string trimmed;
  for (char c : token) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  }
  if (trimmed.empty()) {
    fail(ErrorKind::ParseError, "empty matrix entry on line " + std::to_string(line_no));
  }
  for (char c : trimmed) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(ErrorKind::ParseError, "matrix entry \"" + trimmed + "\" on line " +
                                      std::to_string(line_no) + " is not a nonnegative integer");
    }
  }
  return mpz_class(trimmed);
}

}  // namespace

NonnegMatrix matrix_from_csv(std::istream& in) {
  std::vector<std::vector<mpz_class>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    }
    if (blank) continue;
    std::vector<mpz_class> row;
    std::stringstream ss(line);
    std::string token;
    while (std::getline(ss, token, ',')) row.push_back(parse_nonneg_integer(token, line_no));
    if (!rows.empty() && row.size() != rows[0].size()) {
      fail(ErrorKind::ParseError, "ragged row on line " + std::to_string(line_no));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(ErrorKind::ParseError, "empty matrix");
  std::vector<mpz_class> entries;
  entries.reserve(rows.size() * rows[0].size());
  for (auto& row : rows) {
    for (auto& v : row) entries.push_back(std::move(v));
  }
  return NonnegMatrix(rows.size(), rows[0].size(), std::move(entries));
}

NonnegMatrix matrix_from_csv_string(const std::string& text) {
  std::istringstream in(text);
  return matrix_from_csv(in);
}

NonnegMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
    fail(ErrorKind::ParseError, "matrix JSON needs keys rows, cols, entries");
  }
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows) {
    fail(ErrorKind::ParseError, "matrix JSON entries do not match the declared row count");
  }
  std::vector<mpz_class> flat;
  flat.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols) {
      fail(ErrorKind::ParseError, "matrix JSON entries do not match the declared column count");
    }
    for (const auto& cell : row) {
      if (cell.is_number_unsigned()) {
        flat.emplace_back(static_cast<unsigned long>(cell.get<std::uint64_t>()));
      } else if (cell.is_string()) {
        flat.push_back(parse_nonneg_integer(cell.get<std::string>(), 0));
      } else {
        fail(ErrorKind::ParseError, "matrix entries must be nonnegative integers");
      }
    }
  }
  return NonnegMatrix(rows, cols, std::move(flat));
}

json matrix_to_json(const NonnegMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpz_class& v = m.at(i, j);
      if (v.fits_ulong_p()) {
        row.push_back(static_cast<std::uint64_t>(v.get_ui()));
      } else {
        row.push_back(v.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json depth_report_to_json(const DepthReport& report) {
  return json{{"min_depth", report.min_depth},
              {"min_odd_depth", report.min_odd_depth},
              {"min_h_depth", report.min_h_depth},
              {"module_depth_q", report.module_depth_q},
              {"s_exponent", report.s_exponent},
              {"t_exponent", report.t_exponent}};
}

namespace {

json pair_report_body(const PairDepthReport& report) {
  json j;
  j["index"] = report.index;
  j["core_order"] = report.core_order;
  j["normalizer_index"] = report.normalizer_index;
  j["matrix"] = matrix_to_json(report.inclusion.matrix);
  j["min_depth"] = report.depths.min_depth;
  j["min_odd_depth"] = report.depths.min_odd_depth;
  j["min_h_depth"] = report.depths.min_h_depth;
  j["module_depth_q"] = report.depths.module_depth_q;
  return j;
}

}  // namespace

json pair_report_to_json(const PairDepthReport& report, const std::string& group_spec,
                         const std::string& subgroup_spec) {
  json j = pair_report_body(report);
  j["pair"] = json{{"group", group_spec}, {"subgroup", subgroup_spec}};
  return j;
}

json core_reduction_to_json(const CoreReductionReport& report, const std::string& group_spec,
                            const std::string& subgroup_spec) {
  json j = pair_report_to_json(report.original, group_spec, subgroup_spec);
  json q = pair_report_body(report.quotient_pair);
  q["group_order"] = report.quotient_pair.group_order;
  q["subgroup_order"] = report.quotient_pair.subgroup_order;
  q["checks"] = json{{"sandwich_holds", report.sandwich_holds},
                     {"even_equality_holds", report.even_equality_holds},
                     {"h_depth_equal", report.h_depth_equal}};
  j["quotient_report"] = std::move(q);
  return j;
}

json char_table_to_json(const CharTableModP& table) {
  return json{{"order", table.group_order},
              {"exponent", table.context.exponent},
              {"p", table.context.p},
              {"omega", table.context.omega},
              {"class_sizes", table.classes.class_sizes},
              {"degrees", table.degrees},
              {"values", table.values}};
}

json chain_to_json(const std::string& family, int n, int closed_form,
                   std::optional<int> matrix_depth) {
  json j{{"family", family}, {"n", n}, {"closed_form", closed_form}};
  if (matrix_depth) j["matrix_depth"] = *matrix_depth;
  return j;
}

namespace {

void render_value(const json& value, const std::string& key, int indent, std::ostream& os);

void render_object(const json& j, int indent, std::ostream& os) {
  for (const auto& [key, value] : j.items()) render_value(value, key, indent, os);
}

void render_value(const json& value, const std::string& key, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    os << pad << key << ":\n";
    render_object(value, indent + 2, os);
  } else if (value.is_array() && !value.empty() && value.front().is_array()) {
    os << pad << key << ":\n";
    for (const auto& row : value) {
      os << pad << "  ";
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << row[i].dump() << (i + 1 < row.size() ? " " : "");
      }
      os << "\n";
    }
  } else {
    os << pad << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

std::string render_table(const json& j) {
  std::ostringstream os;
  render_object(j, 0, os);
  return os.str();
}

}  // namespace depthlab
