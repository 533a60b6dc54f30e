#include "vacuum/table.hpp"

#include <charconv>
#include <cmath>

namespace vacuum {

namespace {

void write_indent(std::ostream& os, int indent, int depth) {
    if (indent < 0) return;
    os << '\n';
    for (int i = 0; i < indent * depth; ++i) os << ' ';
}

void dump_value(const nlohmann::ordered_json& j, std::ostream& os, int indent, int depth) {
    using value_t = nlohmann::ordered_json::value_t;
    switch (j.type()) {
        case value_t::number_float: {
            const double x = j.get<double>();
            os << (std::isfinite(x) ? format_number(x) : "null");
            return;
        }
        case value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) os << ',';
                first = false;
                write_indent(os, indent, depth + 1);
                os << nlohmann::ordered_json(key).dump() << (indent < 0 ? ":" : ": ");
                dump_value(value, os, indent, depth + 1);
            }
            write_indent(os, indent, depth);
            os << '}';
            return;
        }
        case value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            os << '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) os << ',';
                first = false;
                write_indent(os, indent, depth + 1);
                dump_value(value, os, indent, depth + 1);
            }
            write_indent(os, indent, depth);
            os << ']';
            return;
        }
        default:
            os << j.dump();
    }
}

nlohmann::ordered_json cell_to_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return *d;
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    return nullptr;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

void write_comment_record(const nlohmann::ordered_json& record, std::ostream& os) {
    if (!record.is_object()) return;
    for (const auto& [key, value] : record.items()) {
        os << "# " << key << ": ";
        if (value.is_string()) os << value.get<std::string>();
        else dump_value(value, os, -1, 0);
        os << '\n';
    }
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void dump_json(const nlohmann::ordered_json& j, std::ostream& os, int indent) { dump_value(j, os, indent, 0); }

void write_csv(const Table& table, std::ostream& os) {
    write_comment_record(table.metadata, os);
    write_comment_record(table.summary, os);
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_escape(table.columns[i]);
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            if (const auto* d = std::get_if<double>(&row[i])) os << format_number(*d);
            else if (const auto* s = std::get_if<std::string>(&row[i])) os << csv_escape(*s);
        }
        os << '\n';
    }
}

void write_json(const Table& table, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["metadata"] = table.metadata;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i)
            obj[table.columns[i]] = cell_to_json(row[i]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    if (!table.summary.is_null()) doc["summary"] = table.summary;
    dump_json(doc, os, 2);
    os << '\n';
}

}  // namespace vacuum
