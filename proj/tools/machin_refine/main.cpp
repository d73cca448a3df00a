// machin-refine: refine two-term Machin-like formulas along the
// continued fraction of arctan(u0)/arctan(u1), verify identities, and
// compute certified pi digits from refined identities.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "machin/approx.hpp"
#include "machin/cf_engine.hpp"
#include "machin/identity.hpp"
#include "output.hpp"

using machin::BigInt;
using machin::Rational;
using machin::Seed;
using machin::StepStrategy;
using machin_cli::Format;
using machin_cli::OutputRecord;

namespace {

constexpr int kExitVerifyFalse = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitParse = 5;
constexpr int kExitInternal = 70;

struct SeedOptions {
    std::string a0 = "1";
    std::string a1 = "1";
    std::string u0 = "1/2";
    std::string u1 = "1/3";
    std::string strategy = "doubling";
};

struct RefineOptions {
    SeedOptions seed;
    long depth = 8;
    std::string eps = "1e-30";
    std::string format = "table";
    std::string out_path;
    std::string resume_path;
    std::string config_path;
    bool skip_seed_verification = false;
};

struct DigitsOptions {
    SeedOptions seed;
    long n = 1;
    long digits = 10;
    bool stats = false;
    std::string config_path;
};

BigInt parse_bigint(const std::string& text) {
    Rational r = Rational::from_string(text);
    if (!r.is_integer()) {
        throw machin::DomainError("expected an integer, got " + text);
    }
    return r.num();
}

Seed parse_seed(const SeedOptions& opt) {
    return {parse_bigint(opt.a0), parse_bigint(opt.a1),
            Rational::from_string(opt.u0), Rational::from_string(opt.u1)};
}

StepStrategy parse_strategy(const std::string& name) {
    return name == "linear" ? StepStrategy::Linear : StepStrategy::Doubling;
}

Rational parse_eps(const std::string& text) {
    Rational eps = Rational::from_string(text);
    if (eps.sign() <= 0) throw machin::DomainError("eps must be positive");
    return eps;
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    return Format::Table;
}

// key=value config file reader (whitespace-insensitive, # comments).
std::vector<std::pair<std::string, std::string>> read_config(
    const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw machin::DomainError("cannot read config file " + path);
    }
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        std::string trimmed;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        }
        if (trimmed.empty() || trimmed[0] == '#') continue;
        auto eq = trimmed.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw machin::DomainError("config line " + std::to_string(lineno) +
                                      " is not key=value");
        }
        entries.emplace_back(trimmed.substr(0, eq), trimmed.substr(eq + 1));
    }
    return entries;
}

// Seed keys shared by refine and digits. Returns false if the key is
// not a seed key. A flag the user set on the command line always wins.
bool apply_seed_key(CLI::App* cmd, SeedOptions& seed, const std::string& key,
                    const std::string& value) {
    if (key != "a0" && key != "a1" && key != "u0" && key != "u1" &&
        key != "strategy") {
        return false;
    }
    if (cmd->count("--" + key) > 0) return true;
    if (key == "a0") {
        seed.a0 = value;
    } else if (key == "a1") {
        seed.a1 = value;
    } else if (key == "u0") {
        seed.u0 = value;
    } else if (key == "u1") {
        seed.u1 = value;
    } else {
        seed.strategy = value;
    }
    return true;
}

void check_seed_config(const SeedOptions& seed) {
    if (seed.strategy != "linear" && seed.strategy != "doubling") {
        throw machin::DomainError("config strategy must be linear or doubling");
    }
}

void apply_config(CLI::App* cmd, RefineOptions& opt) {
    for (const auto& [key, value] : read_config(opt.config_path)) {
        if (apply_seed_key(cmd, opt.seed, key, value)) continue;
        if (key != "depth" && key != "eps" && key != "format" && key != "out") {
            throw machin::DomainError("unknown config key '" + key + "'");
        }
        if (cmd->count("--" + key) > 0) continue;
        if (key == "depth") {
            try {
                std::size_t used = 0;
                opt.depth = std::stol(value, &used);
                if (used != value.size()) throw std::invalid_argument(value);
            } catch (const std::exception&) {
                throw machin::DomainError("config depth must be an integer");
            }
        } else if (key == "eps") {
            opt.eps = value;
        } else if (key == "format") {
            opt.format = value;
        } else {
            opt.out_path = value;
        }
    }
    if (opt.format != "table" && opt.format != "json" && opt.format != "csv") {
        throw machin::DomainError("config format must be table, json, or csv");
    }
    check_seed_config(opt.seed);
}

void apply_digits_config(CLI::App* cmd, DigitsOptions& opt) {
    for (const auto& [key, value] : read_config(opt.config_path)) {
        if (apply_seed_key(cmd, opt.seed, key, value)) continue;
        // refine-only keys are legal in a shared config file
        if (key == "depth" || key == "eps" || key == "format" || key == "out") {
            continue;
        }
        throw machin::DomainError("unknown config key '" + key + "'");
    }
    check_seed_config(opt.seed);
}

void add_seed_options(CLI::App* cmd, SeedOptions& seed) {
    cmd->add_option("--a0", seed.a0, "seed coefficient a0")->capture_default_str();
    cmd->add_option("--a1", seed.a1, "seed coefficient a1")->capture_default_str();
    cmd->add_option("--u0", seed.u0, "seed argument u0 (rational p/q)")
        ->capture_default_str();
    cmd->add_option("--u1", seed.u1, "seed argument u1 (rational p/q)")
        ->capture_default_str();
    cmd->add_option("--strategy", seed.strategy, "partial-quotient search strategy")
        ->check(CLI::IsMember({"linear", "doubling"}))
        ->capture_default_str();
}

// Refinement records plus exact r_n and its error enclosure, flattened
// for serialization.
std::vector<OutputRecord> collect_records(const Seed& seed, long depth,
                                          const Rational& eps,
                                          StepStrategy strategy,
                                          bool skip_verification) {
    if (depth < 1) throw machin::DomainError("depth must be >= 1");
    machin::RefinementStream stream =
        skip_verification
            ? machin::RefinementStream::unverified_for_tests(seed, strategy)
            : machin::RefinementStream(seed, strategy);
    machin::Interval pi = machin::pi_interval(eps);
    std::vector<OutputRecord> out;
    out.reserve(static_cast<std::size_t>(depth));
    for (long i = 0; i < depth; ++i) {
        machin::RefinementRecord rec = stream.next();
        Rational r = Rational(4) * (Rational(rec.a_n) * rec.u_n +
                                    Rational(rec.a_prev) * rec.u_next);
        machin::Interval err = machin::Interval::point(r) - pi;
        machin::ApproxRecord approx{rec.n, std::move(r), std::move(err),
                                    machin::Interval(), machin::Interval()};
        out.push_back(machin_cli::make_output_record(rec, approx));
    }
    return out;
}

void emit(std::ostream& os, const std::vector<OutputRecord>& records,
          Format format) {
    switch (format) {
        case Format::Json:
            for (const OutputRecord& rec : records) {
                os << machin_cli::to_json_line(rec) << "\n";
            }
            break;
        case Format::Csv:
            os << machin_cli::csv_header() << "\n";
            for (const OutputRecord& rec : records) {
                os << machin_cli::to_csv_line(rec) << "\n";
            }
            break;
        case Format::Table:
            machin_cli::print_table(os, records);
            break;
    }
}

bool records_equal(const OutputRecord& a, const OutputRecord& b) {
    return a.n == b.n && a.q == b.q && a.u_n == b.u_n && a.u_next == b.u_next &&
           a.a_n == b.a_n && a.a_prev == b.a_prev && a.a_next == b.a_next &&
           a.conv_n == b.conv_n && a.conv_d == b.conv_d && a.fib == b.fib &&
           a.r == b.r && a.r_decimal == b.r_decimal && a.err_lo == b.err_lo &&
           a.err_hi == b.err_hi;
}

int cmd_refine(const RefineOptions& opt) {
    Format format = parse_format(opt.format);

    if (!opt.resume_path.empty()) {
        machin_cli::Ledger ledger = machin_cli::read_ledger(opt.resume_path);
        if (ledger.records.empty()) {
            throw machin::DomainError("ledger has no records to resume from");
        }
        Seed seed{parse_bigint(ledger.header.a0), parse_bigint(ledger.header.a1),
                  Rational::from_string(ledger.header.u0),
                  Rational::from_string(ledger.header.u1)};
        Rational eps = parse_eps(ledger.header.eps);
        StepStrategy strategy = parse_strategy(ledger.header.strategy);

        // Trust-but-verify: the last persisted record must still verify
        // as an exact identity before the run extends it.
        machin::RefinementRecord last =
            machin_cli::to_refinement_record(ledger.records.back());
        machin::MachinIdentity last_id({{last.a_n, last.u_n},
                                        {last.a_prev, last.u_next}});
        if (!machin::verify(last_id, machin::PrecisionBudget::from_env())
                 .verified()) {
            throw machin::SeedInvalid(
                "ledger's last record failed identity re-verification");
        }

        long have = static_cast<long>(ledger.records.size());
        long depth = std::max(opt.depth, have);
        std::vector<OutputRecord> regenerated =
            collect_records(seed, depth, eps, strategy, false);
        for (long i = 0; i < have; ++i) {
            if (!records_equal(regenerated[static_cast<std::size_t>(i)],
                               ledger.records[static_cast<std::size_t>(i)])) {
                throw machin::SeedInvalid(
                    "ledger record " + std::to_string(i) +
                    " disagrees with regeneration; refusing to extend");
            }
        }

        std::vector<OutputRecord> fresh(regenerated.begin() + have,
                                        regenerated.end());
        std::ofstream file(opt.resume_path, std::ios::app);
        if (!file) {
            throw machin::DomainError("cannot append to " + opt.resume_path);
        }
        for (const OutputRecord& rec : fresh) {
            file << machin_cli::to_json_line(rec) << "\n";
        }
        emit(std::cout, fresh, format);
        return 0;
    }

    Seed seed = parse_seed(opt.seed);
    Rational eps = parse_eps(opt.eps);
    StepStrategy strategy = parse_strategy(opt.seed.strategy);
    std::vector<OutputRecord> records = collect_records(
        seed, opt.depth, eps, strategy, opt.skip_seed_verification);

    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path);
        if (!file) throw machin::DomainError("cannot write " + opt.out_path);
        file << machin_cli::header_json_line({opt.seed.a0, opt.seed.a1,
                                              opt.seed.u0, opt.seed.u1,
                                              opt.seed.strategy,
                                              eps.to_string()})
             << "\n";
        for (const OutputRecord& rec : records) {
            file << machin_cli::to_json_line(rec) << "\n";
        }
    }
    emit(std::cout, records, format);
    return 0;
}

int cmd_verify(const std::string& text) {
    machin::MachinIdentity id = machin::MachinIdentity::parse(text);
    machin::VerifyResult result =
        machin::verify(id, machin::PrecisionBudget::from_env());

    const char* word = result.verdict == machin::Verdict::Holds ? "verified"
                       : result.verdict == machin::Verdict::Fails
                           ? "refuted"
                           : "inconclusive";
    std::cout << word << ": " << id.to_text() << "\n";
    if (result.certificate) {
        const machin::VerifyCertificate& cert = *result.certificate;
        std::cout << "tangent stage: "
                  << (cert.re == cert.im ? "exact tangent equals 1 (re = im)"
                                         : "exact tangent differs from 1")
                  << "\n";
        std::cout << "angle enclosure: [" << cert.angle.lo().to_decimal(12)
                  << ", " << cert.angle.hi().to_decimal(12) << "]\n";
    }
    if (!result.diagnostic.empty()) {
        std::cout << "diagnostic: " << result.diagnostic << "\n";
    }
    switch (result.verdict) {
        case machin::Verdict::Holds:
            return 0;
        case machin::Verdict::Fails:
            return kExitVerifyFalse;
        case machin::Verdict::Inconclusive:
            return kExitInconclusive;
    }
    return kExitInternal;
}

int cmd_digits(const DigitsOptions& opt) {
    Seed seed = parse_seed(opt.seed);
    auto start = std::chrono::steady_clock::now();
    machin::PiDigitsResult result =
        machin::pi_digits(seed, opt.n, opt.digits,
                          machin::PrecisionBudget::from_env(),
                          parse_strategy(opt.seed.strategy));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << result.digits << "\n";
    if (opt.stats) {
        for (std::size_t i = 0; i < result.term_stats.size(); ++i) {
            const machin::PiDigitsTermStat& t = result.term_stats[i];
            long order = machin::decimal_digits(t.eps.num()) -
                         machin::decimal_digits(t.eps.den());
            std::cout << "# term " << i + 1
                      << ": coef=" << machin_cli::shorten_rational(t.coef.get_str())
                      << " arg=" << machin_cli::shorten_rational(t.arg.to_string())
                      << " series_terms=" << t.terms << " eps~1e" << order
                      << "\n";
        }
        std::cout << "# elapsed_ms=" << ms << "\n";
    }
    return 0;
}

int run_command(bool parsing_identity_text, const std::function<int()>& body) {
    try {
        return body();
    } catch (const machin::SeedInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const machin::DegenerateRatio& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const machin::PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const machin::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parsing_identity_text ? kExitParse : kExitInvalidInput;
    } catch (const machin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Refine two-term Machin-like formulas via the continued "
                 "fraction of arctan(u0)/arctan(u1)"};
    app.require_subcommand(1);

    RefineOptions refine_opt;
    CLI::App* refine = app.add_subcommand(
        "refine", "stream refined identities and pi approximations");
    add_seed_options(refine, refine_opt.seed);
    refine->add_option("--depth", refine_opt.depth, "number of records")
        ->capture_default_str();
    refine->add_option("--eps", refine_opt.eps,
                       "error-enclosure width (exact rational or 1e-K)")
        ->capture_default_str();
    refine->add_option("--format", refine_opt.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    refine->add_option("--out", refine_opt.out_path,
                       "write a resumable JSON-lines ledger");
    refine->add_option("--resume", refine_opt.resume_path,
                       "extend an existing ledger (seed and eps come from it)")
        ->excludes("--out");
    refine->add_option("--config", refine_opt.config_path,
                       "key=value config file (flags take precedence)");
    refine
        ->add_flag("--unsafe-skip-seed-verification",
                   refine_opt.skip_seed_verification,
                   "debug only: bypass seed verification")
        ->group("");  // hidden

    std::string identity_text;
    CLI::App* verify = app.add_subcommand(
        "verify", "exactly verify a Machin-like identity against pi/4");
    verify
        ->add_option("identity", identity_text,
                     "e.g. \"4*atan(1/5) - 1*atan(1/239) = pi/4\"")
        ->required();

    DigitsOptions digits_opt;
    CLI::App* digits = app.add_subcommand(
        "digits", "certified decimal digits of pi from a refined identity");
    add_seed_options(digits, digits_opt.seed);
    digits->add_option("--n", digits_opt.n, "refinement depth to evaluate at")
        ->capture_default_str();
    digits->add_option("--digits", digits_opt.digits, "decimal places to certify")
        ->capture_default_str();
    digits->add_flag("--stats", digits_opt.stats,
                     "print per-term series counts and timing");
    digits->add_option("--config", digits_opt.config_path,
                       "key=value config file (seed keys; flags take precedence)");

    CLI11_PARSE(app, argc, argv);

    if (refine->parsed()) {
        return run_command(false, [&] {
            if (!refine_opt.config_path.empty()) {
                apply_config(refine, refine_opt);
            }
            return cmd_refine(refine_opt);
        });
    }
    if (verify->parsed()) {
        return run_command(true, [&] { return cmd_verify(identity_text); });
    }
    if (digits->parsed()) {
        return run_command(false, [&] {
            if (!digits_opt.config_path.empty()) {
                apply_digits_config(digits, digits_opt);
            }
            return cmd_digits(digits_opt);
        });
    }
    return kExitInternal;
}
