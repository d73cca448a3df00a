#ifndef MACHIN_REFINE_OUTPUT_HPP
#define MACHIN_REFINE_OUTPUT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "machin/approx.hpp"
#include "machin/cf_engine.hpp"

namespace machin_cli {

enum class Format { Table, Json, Csv };

/// Flattened refinement + approximation row. Exact fields serialize as
/// decimal-integer or "num/den" strings (never floats); *_decimal
/// fields are 12-place truncations of certified enclosure endpoints.
struct OutputRecord {
    long n;
    std::string q;
    std::string u_n;
    std::string u_next;
    std::string a_n;
    std::string a_prev;
    std::string a_next;
    std::string conv_n;  // N
    std::string conv_d;  // D
    std::string fib;
    std::string r;
    std::string r_decimal;
    std::string err_lo;
    std::string err_hi;
};

OutputRecord make_output_record(const machin::RefinementRecord& rec,
                                const machin::ApproxRecord& approx);

/// Abbreviates long integer/rational strings for human-facing output,
/// e.g. a 40-digit-over-41-digit fraction becomes "(40d)/(41d)".
std::string shorten_rational(const std::string& s);

std::string to_json_line(const OutputRecord& rec);
std::string csv_header();
std::string to_csv_line(const OutputRecord& rec);

void print_table(std::ostream& os, const std::vector<OutputRecord>& records);

/// Ledger header line: seed, strategy, and eps, so a run can be resumed
/// from the file alone.
struct LedgerHeader {
    std::string a0, a1, u0, u1;
    std::string strategy;
    std::string eps;
};

std::string header_json_line(const LedgerHeader& header);

/// Parses a JSON-lines ledger written by this tool. Throws
/// machin::ParseError on malformed content.
struct Ledger {
    LedgerHeader header;
    std::vector<OutputRecord> records;
};
Ledger read_ledger(const std::string& path);

/// Rebuilds the refinement record encoded in an output row.
machin::RefinementRecord to_refinement_record(const OutputRecord& rec);

}  // namespace machin_cli

#endif
