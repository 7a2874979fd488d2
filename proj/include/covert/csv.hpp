#pragma once

// In-memory table with RFC-4180 serialization. Numbers are written with 12
// significant digits.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace covert {

using Cell = std::variant<double, std::int64_t, std::string>;

class Table {
public:
    explicit Table(std::vector<std::string> header = {});

    const std::vector<std::string>& header() const { return header_; }
    std::size_t rows() const { return rows_.size(); }
    std::size_t column(const std::string& name) const;  // throws std::out_of_range

    /// Appends a row; its size must match the header.
    void add_row(std::vector<Cell> row);
    void append(const Table& other);  // same header required

    const Cell& at(std::size_t row, const std::string& col) const;
    double number(std::size_t row, const std::string& col) const;
    std::string text(std::size_t row, const std::string& col) const;

    void write_csv(std::ostream& out) const;
    std::string to_csv() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<Cell>> rows_;
};

std::string format_number(double v);
std::string csv_escape(const std::string& field);

}  // namespace covert
