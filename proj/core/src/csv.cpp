#include "coex/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>

namespace coex {

CsvError::CsvError(int row, const std::string& message)
    : std::runtime_error("csv row " + std::to_string(row) + ": " + message), row_(row) {}

std::string format_sig6(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    std::string line;
    for (std::size_t i = 0; i < kSweepFields.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += kSweepFields[i].name;
    }
    line += '\n';
    out << line;
    for (const SweepRow& r : rows) {
        line.clear();
        for (std::size_t i = 0; i < kSweepFields.size(); ++i) {
            if (i > 0) {
                line += ',';
            }
            line += format_sig6(r.*kSweepFields[i].member);
        }
        line += '\n';
        out << line;
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    int row_no = 1;
    if (!std::getline(in, line)) {
        throw CsvError(row_no, "missing header");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    std::string expected;
    for (std::size_t i = 0; i < kSweepFields.size(); ++i) {
        expected += (i > 0 ? "," : "") + std::string(kSweepFields[i].name);
    }
    if (line != expected) {
        throw CsvError(row_no, "unexpected header");
    }

    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        ++row_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        SweepRow r;
        std::string_view rest = line;
        for (std::size_t i = 0; i < kSweepFields.size(); ++i) {
            const auto comma = rest.find(',');
            const std::string_view cell = rest.substr(0, comma);
            const bool last = i + 1 == kSweepFields.size();
            if ((comma == std::string_view::npos) != last) {
                throw CsvError(row_no, "expected " + std::to_string(kSweepFields.size()) + " columns");
            }
            double v = 0.0;
            const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (cell.empty() || res.ec != std::errc{} || res.ptr != cell.data() + cell.size() || !std::isfinite(v)) {
                throw CsvError(row_no, "bad number '" + std::string(cell) + "' in column " +
                                           std::string(kSweepFields[i].name));
            }
            r.*kSweepFields[i].member = v;
            if (!last) {
                rest.remove_prefix(comma + 1);
            }
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace coex
