#pragma once

#include "altsum/exact_int.hpp"
#include "altsum/half_int.hpp"
#include "altsum/power_sum.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace altsum {

/// Shape of the right side of S_d(x) = RHS.
enum class RhsKind { TwoPowers, OnePower, PowerPlusConst };

struct RhsForm {
    RhsKind kind = RhsKind::TwoPowers;
    ExactInt constant; // PowerPlusConst only

    static RhsForm two_powers() { return {RhsKind::TwoPowers, ExactInt(0)}; }
    static RhsForm one_power() { return {RhsKind::OnePower, ExactInt(0)}; }
    static RhsForm power_plus_const(ExactInt c) { return {RhsKind::PowerPlusConst, std::move(c)}; }

    /// "two-powers", "one-power", "power-plus-const:<C>".
    std::string to_string() const;
    static std::optional<RhsForm> parse(std::string_view text);

    friend bool operator==(const RhsForm&, const RhsForm&) = default;
};

/// Whether u ranges over odd integers only (integer x) or all positive
/// integers (half-integer x admitted).
enum class Parity { OddOnly, Any };

std::string to_string(Parity p);

struct SearchLimits {
    long n_max = 0;              // largest admissible exponent
    ExactInt u_max = ExactInt(1);
    Parity parity = Parity::OddOnly;
};

/// One solution of S_d((u-3)/2) = RHS. exponents is (m) or (m, n) with
/// m <= n; verified records the independent alt_sum_naive re-check.
struct SolutionRecord {
    unsigned d = 0;
    ExactInt b;
    ExactInt u;
    HalfInt x;
    std::vector<long> exponents;
    bool verified = false;
};

/// Bounded-completeness certificate: within the echoed limits, solutions
/// lists every solution, sorted by (n, m, u), no duplicates.
struct SearchReport {
    unsigned d = 0;
    ExactInt b;
    RhsForm rhs;
    SearchLimits limits;
    std::string method;       // "structured" or "brute-force"
    std::string completeness; // human-readable claim over the bounds
    std::vector<SolutionRecord> solutions;
};

struct SearchOptions {
    bool prune = true;    // valuation pruning; never affects results
    unsigned threads = 1; // worker count for the exponent grid
};

/// Largest e with p^e | n. Requires n != 0 and p >= 2 (primality of p is
/// the caller's responsibility); throws std::domain_error otherwise.
unsigned long padic_valuation(const ExactInt& n, const ExactInt& p);

/// The unique integer u >= 1 of admissible parity with g(u) = N, if any.
/// Doubling bracket plus integer bisection, exact throughout. Requires g's
/// non-constant coefficients to be >= 0 with at least one > 0 (strictly
/// increasing on u >= 1); throws std::domain_error otherwise.
std::optional<ExactInt> invert_on_odd(const UForm& g, const ExactInt& N, Parity parity);

/// Enumerates admissible exponent tuples (all 0 <= m <= n <= n_max for
/// TwoPowers), inverts each right-side value, and keeps hits with
/// u <= u_max. Complete within the stated bounds. Requires b >= 2,
/// n_max >= 0, u_max >= 1; degenerate degrees (d < 3) surface as the
/// inverter's monotonicity error.
SearchReport search_structured(unsigned d, const ExactInt& b, const RhsForm& rhs,
                               const SearchLimits& limits, const SearchOptions& opts = {});

/// Independent oracle: walks every admissible u in [1, u_max], computes
/// S_d via the u-form, and tests right-side membership by peeling powers
/// of b. Identical result set to search_structured whenever n_max covers
/// all representable exponents.
SearchReport brute_force_search(unsigned d, const ExactInt& b, const RhsForm& rhs,
                                const SearchLimits& limits);

} // namespace altsum
