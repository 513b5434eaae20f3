#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coex/sweep.hpp"

namespace coex {

// Malformed sweep CSV. row() counts lines from 1 (the header is row 1).
class CsvError : public std::runtime_error {
public:
    CsvError(int row, const std::string& message);
    int row() const { return row_; }

private:
    int row_;
};

// %.6g-style formatting, locale independent; -0 prints as 0.
std::string format_sig6(double v);

// Header line with every SweepRow column in kSweepFields order, then one
// line per row with 6 significant digits.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

// Inverse of write_sweep_csv. The header must match exactly.
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace coex
