#include "output.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace machin_cli {

using machin::BigInt;
using machin::Rational;

namespace {

constexpr long kDecimalPlaces = 12;

}  // namespace

std::string shorten_rational(const std::string& s) {
    if (s.size() <= 24) return s;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return "(" + std::to_string(s.size()) + "-digit)";
    }
    return "(" + std::to_string(slash) + "d)/(" +
           std::to_string(s.size() - slash - 1) + "d)";
}

OutputRecord make_output_record(const machin::RefinementRecord& rec,
                                const machin::ApproxRecord& approx) {
    BigInt a_next = rec.q * rec.a_n + rec.a_prev;
    return {
        rec.n,
        rec.q.get_str(),
        rec.u_n.to_string(),
        rec.u_next.to_string(),
        rec.a_n.get_str(),
        rec.a_prev.get_str(),
        a_next.get_str(),
        rec.N.get_str(),
        rec.D.get_str(),
        rec.fib.get_str(),
        approx.r.to_string(),
        approx.r.to_decimal(kDecimalPlaces),
        approx.err.lo().to_decimal(kDecimalPlaces),
        approx.err.hi().to_decimal(kDecimalPlaces),
    };
}

std::string to_json_line(const OutputRecord& rec) {
    nlohmann::ordered_json j;
    j["n"] = rec.n;
    j["q"] = rec.q;
    j["u_n"] = rec.u_n;
    j["u_next"] = rec.u_next;
    j["a_n"] = rec.a_n;
    j["a_prev"] = rec.a_prev;
    j["a_next"] = rec.a_next;
    j["N"] = rec.conv_n;
    j["D"] = rec.conv_d;
    j["fib"] = rec.fib;
    j["r"] = rec.r;
    j["r_decimal"] = rec.r_decimal;
    j["err_lo"] = rec.err_lo;
    j["err_hi"] = rec.err_hi;
    return j.dump();
}

std::string csv_header() {
    return "n,q,u_n,u_next,a_n,a_prev,a_next,N,D,fib,r,r_decimal,err_lo,err_hi";
}

std::string to_csv_line(const OutputRecord& rec) {
    return std::to_string(rec.n) + "," + rec.q + "," + rec.u_n + "," +
           rec.u_next + "," + rec.a_n + "," + rec.a_prev + "," + rec.a_next +
           "," + rec.conv_n + "," + rec.conv_d + "," + rec.fib + "," + rec.r +
           "," + rec.r_decimal + "," + rec.err_lo + "," + rec.err_hi;
}

void print_table(std::ostream& os, const std::vector<OutputRecord>& records) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "q", "a_n", "a_next", "N", "D", "fib", "u_n", "r",
                    "r_decimal", "err in [lo, hi]"});
    for (const OutputRecord& rec : records) {
        rows.push_back({std::to_string(rec.n), shorten_rational(rec.q),
                        shorten_rational(rec.a_n), shorten_rational(rec.a_next),
                        shorten_rational(rec.conv_n), shorten_rational(rec.conv_d),
                        shorten_rational(rec.fib), shorten_rational(rec.u_n),
                        shorten_rational(rec.r), rec.r_decimal,
                        "[" + rec.err_lo + ", " + rec.err_hi + "]"});
    }
    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << std::left << std::setw(static_cast<int>(widths[c] + 2))
               << row[c];
        }
        os << "\n";
    }
}

std::string header_json_line(const LedgerHeader& header) {
    nlohmann::ordered_json j;
    j["format"] = "machin-refine-ledger";
    j["version"] = 1;
    j["a0"] = header.a0;
    j["a1"] = header.a1;
    j["u0"] = header.u0;
    j["u1"] = header.u1;
    j["strategy"] = header.strategy;
    j["eps"] = header.eps;
    return j.dump();
}

Ledger read_ledger(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw machin::ParseError("cannot open ledger: " + path, 0);

    std::string line;
    if (!std::getline(in, line)) {
        throw machin::ParseError("empty ledger: " + path, 0);
    }
    nlohmann::json h = nlohmann::json::parse(line, nullptr, false);
    if (h.is_discarded() || h.value("format", "") != "machin-refine-ledger") {
        throw machin::ParseError("not a machin-refine ledger: " + path, 0);
    }

    Ledger ledger;
    ledger.header = {h.at("a0"), h.at("a1"), h.at("u0"),
                     h.at("u1"), h.at("strategy"), h.at("eps")};
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw machin::ParseError(
                "malformed ledger record at line " + std::to_string(lineno),
                lineno);
        }
        OutputRecord rec;
        rec.n = j.at("n");
        rec.q = j.at("q");
        rec.u_n = j.at("u_n");
        rec.u_next = j.at("u_next");
        rec.a_n = j.at("a_n");
        rec.a_prev = j.at("a_prev");
        rec.a_next = j.at("a_next");
        rec.conv_n = j.at("N");
        rec.conv_d = j.at("D");
        rec.fib = j.at("fib");
        rec.r = j.at("r");
        rec.r_decimal = j.at("r_decimal");
        rec.err_lo = j.at("err_lo");
        rec.err_hi = j.at("err_hi");
        ledger.records.push_back(std::move(rec));
    }
    return ledger;
}

machin::RefinementRecord to_refinement_record(const OutputRecord& rec) {
    return {rec.n,
            BigInt(rec.q, 10),
            Rational::from_string(rec.u_n),
            Rational::from_string(rec.u_next),
            BigInt(rec.a_n, 10),
            BigInt(rec.a_prev, 10),
            BigInt(rec.conv_n, 10),
            BigInt(rec.conv_d, 10),
            BigInt(rec.fib, 10)};
}

}  // namespace machin_cli
