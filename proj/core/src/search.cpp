#include "altsum/search.hpp"

#include "altsum/family.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace altsum {

namespace {

// u-form with denominators cleared: value(u) = poly(u) / scale, scale = 2^d.
struct ScaledUForm {
    IntPoly poly;
    ExactInt scale;
};

ScaledUForm clear_denominators(const UForm& g) {
    ExactInt scale = ExactInt::pow(ExactInt(2), g.d);
    std::vector<ExactInt> cs;
    cs.reserve(g.poly.coeffs().size());
    for (const Ratio& c : g.poly.coeffs()) {
        cs.push_back((c * Ratio(scale)).as_integer());
    }
    return {IntPoly(std::move(cs)), std::move(scale)};
}

void require_monotone(const UForm& g) {
    bool has_positive = false;
    for (long i = 1; i <= g.poly.degree(); ++i) {
        const Ratio c = g.poly.coeff(static_cast<std::size_t>(i));
        if (c.sign() < 0)
            throw std::domain_error("invert_on_odd: u-form has a negative non-constant coefficient");
        if (c.sign() > 0) has_positive = true;
    }
    if (!has_positive)
        throw std::domain_error("invert_on_odd: u-form is constant, not strictly increasing");
}

ExactInt halve(const ExactInt& n) {
    ExactInt q, r;
    ExactInt::div_mod(n, ExactInt(2), q, r);
    return q;
}

bool parity_ok(const ExactInt& u, Parity parity) {
    return parity == Parity::Any || u.is_odd();
}

// Core of invert_on_odd once denominators are cleared: the integer u >= 1
// with poly(u) = target, if one exists.
std::optional<ExactInt> invert_scaled(const IntPoly& poly, const ExactInt& target) {
    ExactInt lo(1);
    ExactInt at_lo = poly_eval(poly, lo);
    if (at_lo == target) return lo;
    if (at_lo > target) return std::nullopt;
    ExactInt hi(2);
    while (true) {
        ExactInt at_hi = poly_eval(poly, hi);
        if (at_hi == target) return hi;
        if (at_hi > target) break;
        lo = hi;
        hi += hi;
    }
    // poly(lo) < target < poly(hi); shrink to adjacent points.
    while (hi - lo > ExactInt(1)) {
        ExactInt mid = halve(lo + hi);
        ExactInt at_mid = poly_eval(poly, mid);
        if (at_mid == target) return mid;
        if (at_mid < target) lo = std::move(mid);
        else hi = std::move(mid);
    }
    return std::nullopt;
}

struct ExponentTuple {
    long m = 0;
    long n = -1; // unused for one-exponent forms
};

std::vector<ExponentTuple> enumerate_tuples(const RhsForm& rhs, long n_max) {
    std::vector<ExponentTuple> tuples;
    if (rhs.kind == RhsKind::TwoPowers) {
        for (long n = 0; n <= n_max; ++n)
            for (long m = 0; m <= n; ++m) tuples.push_back({m, n});
    } else {
        for (long m = 0; m <= n_max; ++m) tuples.push_back({m});
    }
    return tuples;
}

ExactInt tuple_value(const ExactInt& b, const RhsForm& rhs, const ExponentTuple& t) {
    ExactInt v = ExactInt::pow(b, static_cast<unsigned long>(t.m));
    if (rhs.kind == RhsKind::TwoPowers) v += ExactInt::pow(b, static_cast<unsigned long>(t.n));
    else if (rhs.kind == RhsKind::PowerPlusConst) v += rhs.constant;
    return v;
}

// The 5-adic structure of S_5 = 5u(u^2 + 5) forces v_5 of the right side
// to be 1 (when 5 does not divide u) or at least 3 (v_5(u) + 2 otherwise).
// For base-5 pure-power right sides v_5 equals m, so m = 0 and m = 2 can
// never hit. Pruning is an optimization only; a differential test pins the
// result set with and without it.
bool prunable(unsigned d, const ExactInt& b, const RhsForm& rhs, const ExponentTuple& t) {
    if (d != 5 || b != ExactInt(5)) return false;
    if (rhs.kind == RhsKind::PowerPlusConst) return false;
    return t.m == 0 || t.m == 2;
}

std::vector<long> tuple_exponents(const RhsForm& rhs, const ExponentTuple& t) {
    if (rhs.kind == RhsKind::TwoPowers) return {t.m, t.n};
    return {t.m};
}

bool record_less(const SolutionRecord& a, const SolutionRecord& b) {
    long an = a.exponents.back(), bn = b.exponents.back();
    if (an != bn) return an < bn;
    long am = a.exponents.front(), bm = b.exponents.front();
    if (am != bm) return am < bm;
    return a.u < b.u;
}

bool record_same_key(const SolutionRecord& a, const SolutionRecord& b) {
    return a.u == b.u && a.exponents == b.exponents;
}

void sort_and_dedupe(std::vector<SolutionRecord>& records) {
    std::sort(records.begin(), records.end(), record_less);
    records.erase(std::unique(records.begin(), records.end(), record_same_key), records.end());
}

std::string completeness_claim(const RhsForm& rhs, const SearchLimits& limits) {
    std::ostringstream out;
    out << "all solutions with ";
    if (rhs.kind == RhsKind::TwoPowers) out << "0 <= m <= n <= " << limits.n_max;
    else out << "0 <= m <= " << limits.n_max;
    out << " and 1 <= u <= " << limits.u_max.to_decimal()
        << " (u " << (limits.parity == Parity::OddOnly ? "odd" : "of any parity") << ")";
    return out.str();
}

void validate_common(const ExactInt& b, const SearchLimits& limits) {
    if (b < ExactInt(2)) throw std::domain_error("search: base must be >= 2");
    if (limits.n_max < 0) throw std::domain_error("search: n_max must be >= 0");
    if (limits.u_max < ExactInt(1)) throw std::domain_error("search: u_max must be >= 1");
}

// Right side reconstructed from decoded exponents, for the independent
// re-verification of every record.
ExactInt rebuild_rhs(const ExactInt& b, const RhsForm& rhs, const std::vector<long>& exponents) {
    ExactInt v(0);
    for (long e : exponents) v += ExactInt::pow(b, static_cast<unsigned long>(e));
    if (rhs.kind == RhsKind::PowerPlusConst) v += rhs.constant;
    return v;
}

std::optional<SolutionRecord> make_record(unsigned d, const ExactInt& b, const RhsForm& rhs,
                                          const ExactInt& u, std::vector<long> exponents) {
    SolutionRecord rec;
    rec.d = d;
    rec.b = b;
    rec.u = u;
    rec.x = HalfInt::from_twice(u - ExactInt(3));
    rec.exponents = std::move(exponents);
    ExactInt rhs_value = rebuild_rhs(b, rhs, rec.exponents);
    rec.verified = alt_sum_naive(rec.x, d) == Ratio(rhs_value);
    if (!rec.verified) return std::nullopt; // cannot happen for exact hits
    return rec;
}

} // namespace

std::string RhsForm::to_string() const {
    switch (kind) {
        case RhsKind::TwoPowers: return "two-powers";
        case RhsKind::OnePower: return "one-power";
        case RhsKind::PowerPlusConst: return "power-plus-const:" + constant.to_decimal();
    }
    return "";
}

std::optional<RhsForm> RhsForm::parse(std::string_view text) {
    if (text == "two-powers") return two_powers();
    if (text == "one-power") return one_power();
    constexpr std::string_view prefix = "power-plus-const:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto c = ExactInt::parse(text.substr(prefix.size()));
        if (!c) return std::nullopt;
        return power_plus_const(*c);
    }
    return std::nullopt;
}

std::string to_string(Parity p) { return p == Parity::OddOnly ? "odd" : "any"; }

unsigned long padic_valuation(const ExactInt& n, const ExactInt& p) {
    if (n.is_zero()) throw std::domain_error("padic_valuation: n must be nonzero");
    if (p < ExactInt(2)) throw std::domain_error("padic_valuation: p must be >= 2");
    return ExactInt::remove_factor(n, p).second;
}

std::optional<ExactInt> invert_on_odd(const UForm& g, const ExactInt& N, Parity parity) {
    require_monotone(g);
    ScaledUForm scaled = clear_denominators(g);
    auto u = invert_scaled(scaled.poly, N * scaled.scale);
    if (!u || !parity_ok(*u, parity)) return std::nullopt;
    return u;
}

SearchReport search_structured(unsigned d, const ExactInt& b, const RhsForm& rhs,
                               const SearchLimits& limits, const SearchOptions& opts) {
    validate_common(b, limits);
    UForm g = to_u_form(d);
    require_monotone(g);
    ScaledUForm scaled = clear_denominators(g);

    const std::vector<ExponentTuple> tuples = enumerate_tuples(rhs, limits.n_max);

    auto scan = [&](std::size_t begin, std::size_t end, std::vector<SolutionRecord>& out) {
        for (std::size_t i = begin; i < end; ++i) {
            const ExponentTuple& t = tuples[i];
            if (opts.prune && prunable(d, b, rhs, t)) continue;
            ExactInt N = tuple_value(b, rhs, t);
            if (N.sign() <= 0) continue;
            auto u = invert_scaled(scaled.poly, N * scaled.scale);
            if (!u || !parity_ok(*u, limits.parity) || *u > limits.u_max) continue;
            if (auto rec = make_record(d, b, rhs, *u, tuple_exponents(rhs, t))) {
                out.push_back(std::move(*rec));
            }
        }
    };

    std::vector<SolutionRecord> records;
    const unsigned workers =
        std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(tuples.size())));
    if (workers <= 1) {
        scan(0, tuples.size(), records);
    } else {
        std::vector<std::vector<SolutionRecord>> parts(workers);
        std::vector<std::thread> pool;
        const std::size_t chunk = (tuples.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t begin = w * chunk;
            std::size_t end = std::min(tuples.size(), begin + chunk);
            pool.emplace_back([&, begin, end, w] { scan(begin, end, parts[w]); });
        }
        for (auto& th : pool) th.join();
        for (auto& part : parts)
            for (auto& rec : part) records.push_back(std::move(rec));
    }
    sort_and_dedupe(records);

    SearchReport report;
    report.d = d;
    report.b = b;
    report.rhs = rhs;
    report.limits = limits;
    report.method = "structured";
    report.completeness = completeness_claim(rhs, limits);
    report.solutions = std::move(records);
    return report;
}

SearchReport brute_force_search(unsigned d, const ExactInt& b, const RhsForm& rhs,
                                const SearchLimits& limits) {
    validate_common(b, limits);
    UForm g = to_u_form(d);
    require_monotone(g);
    ScaledUForm scaled = clear_denominators(g);

    std::vector<SolutionRecord> records;
    const long step = limits.parity == Parity::OddOnly ? 2 : 1;
    for (ExactInt u(1); u <= limits.u_max; u += ExactInt(step)) {
        ExactInt value = poly_eval(scaled.poly, u);
        ExactInt s, r;
        ExactInt::div_mod(value, scaled.scale, s, r);
        if (!r.is_zero()) continue; // non-integer S_d (even u, d >= 6): no integer RHS
        if (s.sign() <= 0) continue;

        std::optional<std::vector<long>> exponents;
        if (rhs.kind == RhsKind::TwoPowers) {
            // s = b^m + b^n decodes uniquely: peel b^v, then the cofactor is
            // 2 (m = n), a power of 2 collapsed into b^v (b = 2), or 1 + b^(n-m).
            auto [t, v] = ExactInt::remove_factor(s, b);
            long vl = static_cast<long>(v);
            if (t == ExactInt(2) && b != ExactInt(2)) {
                exponents = {vl, vl};
            } else if (t == ExactInt(1) && b == ExactInt(2) && vl >= 1) {
                exponents = {vl - 1, vl - 1};
            } else if (t > ExactInt(2)) {
                ExactInt cofactor = t - ExactInt(1);
                auto [reduced, e] = ExactInt::remove_factor(cofactor, b);
                if (e >= 1 && reduced == ExactInt(1)) exponents = {vl, vl + static_cast<long>(e)};
            }
        } else {
            ExactInt target = s;
            if (rhs.kind == RhsKind::PowerPlusConst) target -= rhs.constant;
            if (target >= ExactInt(1)) {
                if (auto e = exact_power_exponent(target, b)) exponents = {static_cast<long>(*e)};
            }
        }

        if (!exponents) continue;
        if (exponents->back() > limits.n_max || exponents->front() < 0) continue;
        if (auto rec = make_record(d, b, rhs, u, std::move(*exponents))) {
            records.push_back(std::move(*rec));
        }
    }
    sort_and_dedupe(records);

    SearchReport report;
    report.d = d;
    report.b = b;
    report.rhs = rhs;
    report.limits = limits;
    report.method = "brute-force";
    report.completeness = completeness_claim(rhs, limits);
    report.solutions = std::move(records);
    return report;
}

} // namespace altsum
