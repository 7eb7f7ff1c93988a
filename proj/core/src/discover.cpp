#include "altsum/discover.hpp"

#include "altsum/power_sum.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace altsum {

namespace {

// Coefficient scan for one (d, b). The u-form is hoisted by the caller.
std::optional<FamilySpec> try_family(const UForm& uf, long b, bool allow_const) {
    const ExactInt base(b);

    Ratio c0 = uf.poly.coeff(0);
    if (!c0.is_integer()) return std::nullopt;
    if (!allow_const && !c0.is_zero()) return std::nullopt;

    std::vector<RhsTerm> terms;
    for (long i = 1; i <= uf.poly.degree(); ++i) {
        Ratio c = uf.poly.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!c.is_integer() || c.sign() <= 0) return std::nullopt;
        auto e = exact_power_exponent(c.num(), base);
        if (!e) return std::nullopt;
        terms.push_back({i, static_cast<long>(*e)});
    }
    if (terms.empty()) return std::nullopt; // constant u-forms assert nothing k-dependent

    std::string name = "d" + std::to_string(uf.d) + "b" + std::to_string(b);
    return FamilySpec(std::move(name), uf.d, base, std::move(terms), c0.num());
}

} // namespace

std::vector<DiscoveredFamily> discover_families(unsigned d_min, unsigned d_max,
                                                long b_min, long b_max,
                                                bool allow_const) {
    if (d_min < 3) throw std::domain_error("discover_families: degrees must be >= 3");
    if (b_min < 2) throw std::domain_error("discover_families: bases must be >= 2");
    if (d_max < d_min || b_max < b_min)
        throw std::domain_error("discover_families: empty range");

    std::vector<DiscoveredFamily> found;
    for (unsigned d = d_min; d <= d_max; ++d) {
        const UForm uf = to_u_form(d);
        for (long b = b_min; b <= b_max; ++b) {
            auto fam = try_family(uf, b, allow_const);
            if (!fam) continue;
            ProofResult proof = prove_symbolic(*fam);
            assert(proof.proven && "discovered families are proven by construction");
            found.push_back({std::move(*fam), std::move(proof)});
        }
    }
    return found;
}

} // namespace altsum
