#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace vacuum {

/// Empty cell (CSV: blank, JSON: null), number or text.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
    nlohmann::ordered_json summary;  ///< optional record emitted after the rows
};

/// 17 significant digits, '.' decimal point regardless of locale; non-finite -> "nan"/"inf".
std::string format_number(double x);

/// JSON serialisation with every float printed by format_number. Non-finite floats become null.
void dump_json(const nlohmann::ordered_json& j, std::ostream& os, int indent = 2);

/// Metadata and summary as "# key: value" lines, then the header row and data rows.
void write_csv(const Table& table, std::ostream& os);
/// {"metadata": ..., "columns": [...], "rows": [{column: value}...], "summary": ...}
void write_json(const Table& table, std::ostream& os);

}  // namespace vacuum
