#pragma once

#include "altsum/exact_int.hpp"
#include "altsum/half_int.hpp"
#include "altsum/ratio.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace altsum {

/// One right-side term b^(alpha*k + beta).
struct RhsTerm {
    long alpha = 0;
    long beta = 0;

    friend bool operator==(const RhsTerm&, const RhsTerm&) = default;
};

/// A parametric identity family
///
///   S_d(x_k) = sum_t b^(alpha_t*k + beta_t) + rhs_const,  x_k = (b^k - 3)/2,
///
/// for k >= k_min. Terms are kept sorted by alpha with distinct alphas.
class FamilySpec {
public:
    /// Validates and normalizes. Throws std::invalid_argument when b < 2,
    /// d < 1, k_min < 0, alphas are negative or collide, or some exponent
    /// alpha*k_min + beta is negative.
    FamilySpec(std::string name, unsigned d, ExactInt b,
               std::vector<RhsTerm> terms, ExactInt rhs_const, long k_min = 1);

    /// Parses the text form, e.g. "d=5 b=5 terms=(3k+1),(k+2) const=0"
    /// with an optional trailing "kmin=<n>". Terms may appear in any order.
    /// Returns nullopt on bad text (the constructor's validation errors
    /// surface as nullopt too).
    static std::optional<FamilySpec> parse(std::string_view text);

    /// Canonical text form (terms in ascending alpha; kmin only when != 1).
    std::string to_text() const;

    const std::string& name() const { return name_; }
    unsigned d() const { return d_; }
    const ExactInt& b() const { return b_; }
    const std::vector<RhsTerm>& terms() const { return terms_; }
    const ExactInt& rhs_const() const { return rhs_const_; }
    long k_min() const { return k_min_; }

    /// Name when present, text form otherwise; for report headers.
    std::string display_name() const { return name_.empty() ? to_text() : name_; }

    friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
        return a.d_ == b.d_ && a.b_ == b.b_ && a.terms_ == b.terms_ &&
               a.rhs_const_ == b.rhs_const_ && a.k_min_ == b.k_min_;
    }

private:
    std::string name_;
    unsigned d_;
    ExactInt b_;
    std::vector<RhsTerm> terms_;
    ExactInt rhs_const_;
    long k_min_;
};

/// A single instantiation of a family at concrete k. lhs is recomputed by
/// alt_sum_naive every time; holds is the exact comparison lhs == rhs.
struct IdentityInstance {
    long k = 0;
    HalfInt x;
    Ratio lhs;                   // integral whenever the identity holds
    ExactInt rhs;
    bool holds = false;
    std::vector<long> exponents; // alpha*k + beta per term, ascending alpha
};

struct FamilyReport {
    std::string family;
    long k_min = 0;
    long k_max = 0;
    long held = 0;
    long failed = 0;
    std::optional<IdentityInstance> first_failure;
};

/// One certificate entry: the u-form coefficient of u^u_power equals
/// b^beta, inducing the right-side term b^(u_power*k + beta).
struct CoefficientCert {
    long u_power = 0;
    Ratio coeff;
    long beta = 0;
};

/// Outcome of the symbolic proof. When proven, every nonzero non-constant
/// u-form coefficient is an exact power of b, the induced term set equals
/// the declared rhs terms, and the u-form constant equals rhs_const; the
/// family then holds for ALL k in its domain (substitute u = b^k).
struct ProofResult {
    bool proven = false;
    std::vector<CoefficientCert> certificate; // ascending u_power
    ExactInt constant;                        // u-form constant term, when integral
    std::string failure_reason;               // empty when proven
};

/// Evaluates one member of the family. Accepts any k >= 0 (k below k_min is
/// deliberately allowed). Throws std::domain_error when k < 0 or some
/// exponent alpha*k + beta turns negative.
IdentityInstance instantiate(const FamilySpec& f, long k);

/// Instantiates every k in [k_min, k_max]. Throws std::domain_error when
/// k_max < k_min.
FamilyReport verify_range(const FamilySpec& f, long k_max);

/// Coefficient certificate for the whole family; failure is a value.
ProofResult prove_symbolic(const FamilySpec& f);

/// e with value = base^e, if one exists (e = 0 admitted: value 1).
/// Requires value >= 1 and base >= 2; returns nullopt otherwise.
std::optional<unsigned long> exact_power_exponent(const ExactInt& value, const ExactInt& base);

/// The built-in named families: thm1-printed, thm1-corrected, thm2, thm3.
/// thm1-printed is the misstated variant whose first member already fails;
/// it ships alongside the corrected one on purpose.
const std::vector<FamilySpec>& builtin_families();
const FamilySpec* find_builtin(std::string_view name);

} // namespace altsum
