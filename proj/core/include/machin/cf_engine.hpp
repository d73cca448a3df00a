#ifndef MACHIN_CF_ENGINE_HPP
#define MACHIN_CF_ENGINE_HPP

#include <span>
#include <string>
#include <vector>

#include "machin/arctan_algebra.hpp"
#include "machin/enclosure.hpp"
#include "machin/rational.hpp"

namespace machin {

/// Seed two-term identity a0 * arctan(u0) + a1 * arctan(u1) = pi/4
/// with u0 > u1 > 0. RefinementStream verifies it exactly before any
/// refinement runs.
struct Seed {
    BigInt a0;
    BigInt a1;
    Rational u0;
    Rational u1;
};

/// One generation of the refinement. Record n is a self-contained
/// Machin identity: a_n * arctan(u_n) + a_prev * arctan(u_next) = pi/4
/// (a_n is the coefficient a_{-n} in negative-index notation, a_prev
/// is a_{-n+1}), along with the partial quotient q = q_n, the
/// convergent N/D of arctan(u0)/arctan(u1) through q_n, and the
/// Fibonacci witness fib = F_{n+1} <= D.
struct RefinementRecord {
    long n;
    BigInt q;
    Rational u_n;
    Rational u_next;
    BigInt a_n;
    BigInt a_prev;
    BigInt N;
    BigInt D;
    BigInt fib;
};

/// Lazily drives the refinement recurrences from a verified seed.
/// Successive records satisfy a_{-n-1} = q_n a_{-n} + a_{-n+1},
/// N_n = q_n N_{n-1} + N_{n-2}, D_n = q_n D_{n-1} + D_{n-2}
/// (seeds N_{-2}=0, N_{-1}=1, D_{-2}=1, D_{-1}=0). O(1) state retained.
class RefinementStream {
public:
    /// Verifies the seed exactly (throws SeedInvalid on failure,
    /// PrecisionExhausted if verification is inconclusive at budget).
    explicit RefinementStream(Seed seed,
                              StepStrategy strategy = StepStrategy::Doubling);

    /// Skips seed verification. Only for exercising error paths in
    /// tests; every library entry point verifies.
    static RefinementStream unverified_for_tests(Seed seed, StepStrategy strategy);

    /// Produces record n and advances. Throws DegenerateRatio if the
    /// continued fraction terminates (invalid seed).
    RefinementRecord next();

    const Seed& seed() const { return seed_; }
    long index() const { return n_; }

private:
    struct unverified_tag {};
    RefinementStream(Seed seed, StepStrategy strategy, unverified_tag);
    void init_state();

    Seed seed_;
    StepStrategy strategy_;
    long n_ = 0;
    Rational u_, v_;
    BigInt a_, a_prev_;
    BigInt n_m1_, n_m2_, d_m1_, d_m2_;
    BigInt fib_prev_, fib_;
};

/// First `depth` records of the stream.
std::vector<RefinementRecord> refine_stream(const Seed& seed, long depth,
                                            StepStrategy strategy = StepStrategy::Doubling);

/// F_n by the recurrence F_0 = 0, F_1 = 1, F_{n+2} = F_n + F_{n+1}.
BigInt fibonacci(long n);

/// Closed form a_{-n-1} = a0 * N_n + a1 * D_n; equals the
/// recurrence-produced coefficient for every record.
BigInt coefficient_closed_form(const Seed& seed, const BigInt& n_conv,
                               const BigInt& d_conv);
BigInt coefficient_closed_form(const Seed& seed, const RefinementRecord& record);

/// Exact check of the argument closed form
/// arctan(u_n) = (-1)^n (D_{n-2} arctan(u0) - N_{n-2} arctan(u1)):
/// the tangent combination must equal (-1)^n u_n exactly, and a coarse
/// interval enclosure pins the branch. Requires record.n >= 2
/// (the convergents two steps back are re-derived from the seed).
/// On a tangent pole the check fails and *diagnostic explains why.
bool argument_closed_form_check(const Seed& seed, const RefinementRecord& record,
                                std::string* diagnostic = nullptr);

/// Interval check of |alpha - N_n/D_n| <= 1/(D_n D_{n+1}) for
/// alpha = arctan(u0)/arctan(u1), at records[idx]. Precision starts at
/// 10^-(digits(D^2) + 10) and the digit budget doubles until the
/// comparison is conclusive; the budget cap yields Inconclusive.
Verdict convergent_error_bound_check(const Seed& seed,
                                     std::span<const RefinementRecord> records,
                                     std::size_t idx,
                                     const PrecisionBudget& budget = {});

/// Interval check of arctan(u_n) <= arctan(u1)/D_{n-1} at records[idx]
/// (idx >= 1), with the same escalation scheme.
Verdict argument_decay_bound_check(const Seed& seed,
                                   std::span<const RefinementRecord> records,
                                   std::size_t idx,
                                   const PrecisionBudget& budget = {});

}  // namespace machin

#endif
