#include "altsum/family.hpp"

#include "altsum/power_sum.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace altsum {

namespace {

bool parse_long(std::string_view text, long& out) {
    auto n = ExactInt::parse(text);
    if (!n || !n->fits_long()) return false;
    out = n->to_long();
    return true;
}

// "3k+1" / "k+2" / "k" / "2k-1" / "7"  ->  (alpha, beta)
bool parse_term_body(std::string_view body, RhsTerm& out) {
    auto kpos = body.find('k');
    if (kpos == std::string_view::npos) {
        out.alpha = 0;
        return parse_long(body, out.beta);
    }
    std::string_view alpha_part = body.substr(0, kpos);
    std::string_view beta_part = body.substr(kpos + 1);
    if (alpha_part.empty()) {
        out.alpha = 1;
    } else {
        if (!parse_long(alpha_part, out.alpha) || out.alpha < 0) return false;
    }
    if (beta_part.empty()) {
        out.beta = 0;
        return true;
    }
    if (beta_part.front() == '+') beta_part.remove_prefix(1);
    else if (beta_part.front() != '-') return false;
    return parse_long(beta_part, out.beta);
}

// alpha*k + beta without silent wraparound; nullopt on overflow.
std::optional<long> checked_exponent(long alpha, long k, long beta) {
    long prod = 0, sum = 0;
    if (__builtin_mul_overflow(alpha, k, &prod)) return std::nullopt;
    if (__builtin_add_overflow(prod, beta, &sum)) return std::nullopt;
    return sum;
}

std::string term_text(const RhsTerm& t) {
    std::ostringstream out;
    out << "(";
    if (t.alpha == 0) {
        out << t.beta;
    } else {
        if (t.alpha != 1) out << t.alpha;
        out << "k";
        if (t.beta > 0) out << "+" << t.beta;
        else if (t.beta < 0) out << t.beta;
    }
    out << ")";
    return out.str();
}

std::vector<FamilySpec> make_builtins() {
    std::vector<FamilySpec> fams;
    // Right side 5^(k+1) + 5^(3k+1): the misstated family; its instances
    // actually follow 5^(k+2) + 5^(3k+1), so this one fails from k = 1 on.
    fams.emplace_back("thm1-printed", 5, ExactInt(5),
                      std::vector<RhsTerm>{{1, 1}, {3, 1}}, ExactInt(0));
    fams.emplace_back("thm1-corrected", 5, ExactInt(5),
                      std::vector<RhsTerm>{{1, 2}, {3, 1}}, ExactInt(0));
    fams.emplace_back("thm2", 3, ExactInt(6),
                      std::vector<RhsTerm>{{1, 1}}, ExactInt(0));
    fams.emplace_back("thm3", 4, ExactInt(6),
                      std::vector<RhsTerm>{{2, 1}}, ExactInt(10));
    return fams;
}

} // namespace

FamilySpec::FamilySpec(std::string name, unsigned d, ExactInt b,
                       std::vector<RhsTerm> terms, ExactInt rhs_const, long k_min)
    : name_(std::move(name)), d_(d), b_(std::move(b)),
      terms_(std::move(terms)), rhs_const_(std::move(rhs_const)), k_min_(k_min) {
    if (d_ < 1) throw std::invalid_argument("FamilySpec: degree must be >= 1");
    if (b_ < ExactInt(2)) throw std::invalid_argument("FamilySpec: base must be >= 2");
    if (k_min_ < 0) throw std::invalid_argument("FamilySpec: k_min must be >= 0");
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const RhsTerm& a, const RhsTerm& b) { return a.alpha < b.alpha; });
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].alpha < 0) throw std::invalid_argument("FamilySpec: alpha must be >= 0");
        if (i > 0 && terms_[i].alpha == terms_[i - 1].alpha)
            throw std::invalid_argument("FamilySpec: alphas must be distinct");
        // Exponents are nondecreasing in k (alpha >= 0), so checking the
        // domain edge k_min suffices.
        auto e = checked_exponent(terms_[i].alpha, k_min_, terms_[i].beta);
        if (!e || *e < 0)
            throw std::invalid_argument("FamilySpec: exponent " + term_text(terms_[i]) +
                                        " is negative at k=" + std::to_string(k_min_));
    }
}

std::optional<FamilySpec> FamilySpec::parse(std::string_view text) {
    std::optional<unsigned> d;
    std::optional<ExactInt> b;
    std::optional<ExactInt> rhs_const;
    std::vector<RhsTerm> terms;
    bool have_terms = false;
    long k_min = 1;

    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) return std::nullopt;
        std::string_view key(tok.data(), eq);
        std::string_view val(tok.data() + eq + 1, tok.size() - eq - 1);
        if (key == "d") {
            long v;
            if (!parse_long(val, v) || v < 1) return std::nullopt;
            d = static_cast<unsigned>(v);
        } else if (key == "b") {
            auto v = ExactInt::parse(val);
            if (!v) return std::nullopt;
            b = *v;
        } else if (key == "terms") {
            have_terms = true;
            std::string_view rest = val;
            while (!rest.empty()) {
                if (rest.front() != '(') return std::nullopt;
                auto close = rest.find(')');
                if (close == std::string_view::npos) return std::nullopt;
                RhsTerm t;
                if (!parse_term_body(rest.substr(1, close - 1), t)) return std::nullopt;
                terms.push_back(t);
                rest.remove_prefix(close + 1);
                if (!rest.empty()) {
                    if (rest.front() != ',') return std::nullopt;
                    rest.remove_prefix(1);
                    if (rest.empty()) return std::nullopt;
                }
            }
        } else if (key == "const") {
            auto v = ExactInt::parse(val);
            if (!v) return std::nullopt;
            rhs_const = *v;
        } else if (key == "kmin") {
            if (!parse_long(val, k_min)) return std::nullopt;
        } else {
            return std::nullopt;
        }
    }
    if (!d || !b || !have_terms) return std::nullopt;
    try {
        return FamilySpec("", *d, *b, std::move(terms),
                          rhs_const.value_or(ExactInt(0)), k_min);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string FamilySpec::to_text() const {
    std::ostringstream out;
    out << "d=" << d_ << " b=" << b_.to_decimal() << " terms=";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out << ",";
        out << term_text(terms_[i]);
    }
    out << " const=" << rhs_const_.to_decimal();
    if (k_min_ != 1) out << " kmin=" << k_min_;
    return out.str();
}

IdentityInstance instantiate(const FamilySpec& f, long k) {
    if (k < 0) throw std::domain_error("instantiate: k must be >= 0");
    IdentityInstance inst;
    inst.k = k;
    ExactInt u = ExactInt::pow(f.b(), static_cast<unsigned long>(k));
    inst.x = HalfInt::from_twice(u - ExactInt(3));
    inst.lhs = alt_sum_naive(inst.x, f.d());
    ExactInt rhs = f.rhs_const();
    for (const RhsTerm& t : f.terms()) {
        auto e = checked_exponent(t.alpha, k, t.beta);
        if (!e || *e < 0)
            throw std::domain_error("instantiate: exponent " + term_text(t) +
                                    " is negative or overflows at k=" + std::to_string(k));
        inst.exponents.push_back(*e);
        rhs += ExactInt::pow(f.b(), static_cast<unsigned long>(*e));
    }
    inst.rhs = std::move(rhs);
    inst.holds = inst.lhs == Ratio(inst.rhs);
    return inst;
}

FamilyReport verify_range(const FamilySpec& f, long k_max) {
    if (k_max < f.k_min())
        throw std::domain_error("verify_range: k_max is below the family's k_min");
    FamilyReport report;
    report.family = f.display_name();
    report.k_min = f.k_min();
    report.k_max = k_max;
    for (long k = f.k_min(); k <= k_max; ++k) {
        IdentityInstance inst = instantiate(f, k);
        if (inst.holds) {
            ++report.held;
        } else {
            ++report.failed;
            if (!report.first_failure) report.first_failure = std::move(inst);
        }
    }
    return report;
}

std::optional<unsigned long> exact_power_exponent(const ExactInt& value, const ExactInt& base) {
    if (value < ExactInt(1) || base < ExactInt(2)) return std::nullopt;
    if (value == ExactInt(1)) return 0;
    auto [reduced, e] = ExactInt::remove_factor(value, base);
    if (e == 0 || reduced != ExactInt(1)) return std::nullopt;
    return e;
}

ProofResult prove_symbolic(const FamilySpec& f) {
    ProofResult res;
    UForm uf = to_u_form(f.d());

    auto fail = [&](std::string reason) {
        res.proven = false;
        res.failure_reason = std::move(reason);
        return res;
    };

    std::vector<RhsTerm> derived;
    for (long i = 1; i <= uf.poly.degree(); ++i) {
        Ratio c = uf.poly.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!c.is_integer() || c.sign() <= 0)
            return fail("coefficient " + c.to_string() + " of u^" + std::to_string(i) +
                        " is not a positive integer");
        auto e = exact_power_exponent(c.num(), f.b());
        if (!e)
            return fail("coefficient " + c.to_string() + " of u^" + std::to_string(i) +
                        " is not a power of " + f.b().to_decimal());
        res.certificate.push_back({i, c, static_cast<long>(*e)});
        derived.push_back({i, static_cast<long>(*e)});
    }

    Ratio c0 = uf.poly.coeff(0);
    if (!c0.is_integer())
        return fail("u-form constant term " + c0.to_string() + " is not an integer");
    res.constant = c0.num();

    if (derived != f.terms()) {
        std::ostringstream why;
        why << "u-form induces terms ";
        for (std::size_t i = 0; i < derived.size(); ++i) {
            if (i) why << ",";
            why << term_text(derived[i]);
        }
        why << " but the family declares ";
        const auto& declared = f.terms();
        for (std::size_t i = 0; i < declared.size(); ++i) {
            if (i) why << ",";
            why << term_text(declared[i]);
        }
        return fail(why.str());
    }
    if (res.constant != f.rhs_const())
        return fail("u-form constant " + res.constant.to_decimal() +
                    " does not match the declared constant " + f.rhs_const().to_decimal());

    res.proven = true;
    return res;
}

const std::vector<FamilySpec>& builtin_families() {
    static const std::vector<FamilySpec> fams = make_builtins();
    return fams;
}

const FamilySpec* find_builtin(std::string_view name) {
    for (const FamilySpec& f : builtin_families()) {
        if (f.name() == name) return &f;
    }
    return nullptr;
}

} // namespace altsum
