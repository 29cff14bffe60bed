#include "lorentz/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {

template <typename T>
std::string to_chars_string(T value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

template <typename T>
T parse_number(std::string_view text, const char* what) {
    T value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last || first == last) {
        throw ValidationError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

} // namespace

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return to_chars_string(x);
}

std::string format_number(std::uint64_t x) { return to_chars_string(x); }
std::string format_number(int x) { return to_chars_string(x); }

double parse_double(std::string_view text) {
    text = trim(text);
    if (text == "nan") {
        return std::nan("");
    }
    if (text == "inf") {
        return HUGE_VAL;
    }
    if (text == "-inf") {
        return -HUGE_VAL;
    }
    return parse_number<double>(text, "number");
}

std::uint64_t parse_u64(std::string_view text) {
    return parse_number<std::uint64_t>(trim(text), "unsigned integer");
}

int parse_int(std::string_view text) { return parse_number<int>(trim(text), "integer"); }

const std::string& CsvDocument::at(std::string_view key) const {
    for (const auto& [k, v] : meta) {
        if (k == key) {
            return v;
        }
    }
    throw ValidationError("csv metadata key '" + std::string(key) + "' missing");
}

void write_csv(std::ostream& out, const CsvDocument& doc) {
    for (const auto& [k, v] : doc.meta) {
        out << "# " << k << '=' << v << '\n';
    }
    for (std::size_t j = 0; j < doc.columns.size(); ++j) {
        out << (j ? "," : "") << doc.columns[j];
    }
    out << '\n';
    for (Eigen::Index i = 0; i < doc.rows.rows(); ++i) {
        for (Eigen::Index j = 0; j < doc.rows.cols(); ++j) {
            out << (j ? "," : "") << format_number(doc.rows(i, j));
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const CsvDocument& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    write_csv(out, doc);
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

CsvDocument read_csv(std::istream& in) {
    CsvDocument doc;
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim(line);
        if (view.empty()) {
            continue;
        }
        if (view.front() == '#') {
            view = trim(view.substr(1));
            const auto eq = view.find('=');
            if (eq == std::string_view::npos) {
                throw ValidationError("csv line " + std::to_string(line_no) + ": header without '='");
            }
            doc.meta.emplace_back(std::string(trim(view.substr(0, eq))), std::string(trim(view.substr(eq + 1))));
            continue;
        }
        const auto fields = split_commas(view);
        if (doc.columns.empty()) {
            for (auto f : fields) {
                doc.columns.emplace_back(f);
            }
            continue;
        }
        if (fields.size() != doc.columns.size()) {
            throw ValidationError("csv line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(doc.columns.size()) + " fields");
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (auto f : fields) {
            row.push_back(parse_double(f));
        }
        rows.push_back(std::move(row));
    }
    doc.rows.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(doc.columns.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            doc.rows(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return doc;
}

CsvDocument read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return read_csv(in);
}

} // namespace lorentz
