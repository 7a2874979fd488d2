#include "covert/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace covert {

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header_.size(); ++i)
        if (header_[i] == name) return i;
    throw std::out_of_range("no column '" + name + "'");
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != header_.size()) throw std::invalid_argument("row width does not match header");
    rows_.push_back(std::move(row));
}

void Table::append(const Table& other) {
    if (header_.empty() && rows_.empty()) header_ = other.header_;
    if (other.header_ != header_) throw std::invalid_argument("append: header mismatch");
    rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

const Cell& Table::at(std::size_t row, const std::string& col) const {
    return rows_.at(row).at(column(col));
}

double Table::number(std::size_t row, const std::string& col) const {
    const Cell& c = at(row, col);
    if (const auto* d = std::get_if<double>(&c)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
    throw std::invalid_argument("column '" + col + "' is not numeric");
}

std::string Table::text(std::size_t row, const std::string& col) const {
    const Cell& c = at(row, col);
    if (const auto* s = std::get_if<std::string>(&c)) return *s;
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    return format_number(std::get<double>(c));
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void Table::write_csv(std::ostream& out) const {
    auto line = [&](const auto& cells, auto&& to_string) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(to_string(cells[i]));
        }
        out << "\r\n";
    };
    line(header_, [](const std::string& s) { return s; });
    for (const auto& row : rows_) {
        line(row, [](const Cell& c) {
            return std::visit(
                [](const auto& v) -> std::string {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>)
                        return format_number(v);
                    else if constexpr (std::is_same_v<T, std::int64_t>)
                        return std::to_string(v);
                    else
                        return v;
                },
                c);
        });
    }
}

std::string Table::to_csv() const {
    std::ostringstream os;
    write_csv(os);
    return os.str();
}

}  // namespace covert
