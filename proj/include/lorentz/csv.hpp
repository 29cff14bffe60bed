#pragma once

// Plain CSV with a commented "# key=value" header block. Numbers are written
// with std::to_chars (shortest round-trip, '.' decimal point, no locale).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace lorentz {

using Metadata = std::vector<std::pair<std::string, std::string>>;

std::string format_number(double x);
std::string format_number(std::uint64_t x);
std::string format_number(int x);

/// Locale-independent strict parse; ValidationError on trailing garbage.
double parse_double(std::string_view text);
std::uint64_t parse_u64(std::string_view text);
int parse_int(std::string_view text);

struct CsvDocument {
    Metadata meta;
    std::vector<std::string> columns;
    Eigen::MatrixXd rows;  ///< one row per record, columns.size() columns

    /// Value of a metadata key; ValidationError if absent.
    const std::string& at(std::string_view key) const;
};

void write_csv(std::ostream& out, const CsvDocument& doc);
void write_csv_file(const std::string& path, const CsvDocument& doc);
CsvDocument read_csv(std::istream& in);
CsvDocument read_csv_file(const std::string& path);

} // namespace lorentz
