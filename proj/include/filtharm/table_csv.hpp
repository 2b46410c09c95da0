#pragma once
/**
 * @file table_csv.hpp
 * @brief Plain-text exchange format for finite tables.
 *
 *     q=4,dim=2,enumeration=lex
 *     window,-1,1                     (optional; `biwindow,l,i,lo,hi` in 2D)
 *     0,1/2
 *     1,0
 *     ...
 *
 * Each row holds a point index Σ x_j q^j followed by the p-1 rational
 * coordinates of the value in the basis 1, ζ, ..., ζ^{p-2}. Rows may come in
 * any order; missing points are zero.
 */

#include "filtharm/dim0.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace fh {

class CsvError : public std::runtime_error {
public:
    CsvError(int line, const std::string& msg) : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct CsvTable {
    Fn0 table;
    std::vector<long> window;  ///< empty, {lo, hi} or {l, i, lo, hi}
};

CsvTable read_csv_table(std::istream& is, const FieldPtr& field);
void write_csv_table(std::ostream& os, const Fn0& table, const std::vector<long>& window = {});

}  // namespace fh
