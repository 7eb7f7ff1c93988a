// altsum: prove, verify, search and discover identities of the shape
//
//   x^d - (x+1)^d - (x+2)^d + (x+3)^d = b^m + b^n (+ constant)
//
// Exit codes: 0 success and every check holds; 1 a verification or proof
// failed; 2 usage or precondition error. All numbers cross this boundary
// as exact decimal strings.

#include "altsum/discover.hpp"
#include "altsum/family.hpp"
#include "altsum/power_sum.hpp"
#include "altsum/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace altsum;

constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    bool json = false;
    bool quiet = false;
    unsigned threads = 1;
};

void emit(const json& record) { std::cout << record.dump() << "\n"; }

json base_record(const std::string& command) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

// ---- shared parsing -------------------------------------------------------

struct KRange {
    long lo = 0;
    long hi = 0;
};

std::optional<KRange> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) return std::nullopt;
    auto lo = ExactInt::parse(text.substr(0, dots));
    auto hi = ExactInt::parse(text.substr(dots + 2));
    if (!lo || !hi || !lo->fits_long() || !hi->fits_long()) return std::nullopt;
    KRange r{lo->to_long(), hi->to_long()};
    if (r.hi < r.lo) return std::nullopt;
    return r;
}

std::optional<FamilySpec> resolve_family(const std::string& text) {
    if (const FamilySpec* f = find_builtin(text)) return *f;
    return FamilySpec::parse(text);
}

// ---- display helpers ------------------------------------------------------

std::string exponent_text(const RhsTerm& t) {
    if (t.alpha == 0) return std::to_string(t.beta);
    std::string s;
    if (t.alpha != 1) s += std::to_string(t.alpha);
    s += "k";
    if (t.beta > 0) s += "+" + std::to_string(t.beta);
    else if (t.beta < 0) s += std::to_string(t.beta);
    return "(" + s + ")";
}

// "5^(k+2) + 5^(3k+1) + 10"
std::string family_rhs_text(const FamilySpec& f) {
    std::string s;
    for (const RhsTerm& t : f.terms()) {
        if (!s.empty()) s += " + ";
        s += f.b().to_decimal() + "^" + exponent_text(t);
    }
    if (!f.rhs_const().is_zero() || f.terms().empty()) {
        if (!s.empty()) s += " + ";
        s += f.rhs_const().to_decimal();
    }
    return s;
}

// "5^3 + 5^4" or "6^3 + 10"
std::string concrete_rhs_text(const ExactInt& b, const std::vector<long>& exponents,
                              const ExactInt& constant) {
    std::string s;
    for (long e : exponents) {
        if (!s.empty()) s += " + ";
        s += b.to_decimal() + "^" + std::to_string(e);
    }
    if (!constant.is_zero() || exponents.empty()) {
        if (!s.empty()) s += " + ";
        s += constant.to_decimal();
    }
    return s;
}

json family_json(const FamilySpec& f) {
    json j;
    j["name"] = f.name();
    j["d"] = std::to_string(f.d());
    j["b"] = f.b().to_decimal();
    json terms = json::array();
    for (const RhsTerm& t : f.terms()) {
        terms.push_back({{"alpha", std::to_string(t.alpha)}, {"beta", std::to_string(t.beta)}});
    }
    j["terms"] = std::move(terms);
    j["const"] = f.rhs_const().to_decimal();
    j["k_min"] = std::to_string(f.k_min());
    j["text"] = f.to_text();
    return j;
}

json instance_json(const IdentityInstance& inst) {
    json j;
    j["k"] = std::to_string(inst.k);
    j["x"] = inst.x.to_string();
    j["lhs"] = inst.lhs.to_string();
    j["rhs"] = inst.rhs.to_decimal();
    j["holds"] = inst.holds;
    json exps = json::array();
    for (long e : inst.exponents) exps.push_back(std::to_string(e));
    j["exponents"] = std::move(exps);
    return j;
}

json proof_json(const ProofResult& proof) {
    json j;
    j["proven"] = proof.proven;
    json cert = json::array();
    for (const CoefficientCert& c : proof.certificate) {
        cert.push_back({{"u_power", std::to_string(c.u_power)},
                        {"coeff", c.coeff.to_string()},
                        {"beta", std::to_string(c.beta)}});
    }
    j["certificate"] = std::move(cert);
    if (proof.proven) j["constant"] = proof.constant.to_decimal();
    if (!proof.failure_reason.empty()) j["failure_reason"] = proof.failure_reason;
    return j;
}

json solution_json(const SolutionRecord& rec) {
    json j;
    j["u"] = rec.u.to_decimal();
    j["x"] = rec.x.to_string();
    json exps = json::array();
    for (long e : rec.exponents) exps.push_back(std::to_string(e));
    j["exponents"] = std::move(exps);
    j["verified"] = rec.verified;
    return j;
}

// ---- subcommands ----------------------------------------------------------

int run_eval(const GlobalOpts& g, const std::string& x_text, unsigned degree) {
    auto x = HalfInt::parse(x_text);
    if (!x) {
        std::cerr << "error: --x expects an integer or half-integer like 3/2, got '" << x_text << "'\n";
        return kExitUsage;
    }
    Ratio naive = alt_sum_naive(*x, degree);
    Ratio via_x_poly = poly_eval(alt_sum_poly(degree), x->to_ratio());
    // u = 2x + 3 is exactly twice_value + 3.
    Ratio via_u_form = poly_eval(to_u_form(degree).poly, Ratio(x->twice_value() + ExactInt(3)));
    const bool agree = naive == via_x_poly && naive == via_u_form;

    if (g.json) {
        json j = base_record("eval");
        j["inputs"] = {{"x", x->to_string()}, {"degree", std::to_string(degree)}};
        j["value"] = naive.to_string();
        j["routes_agree"] = agree;
        emit(j);
    } else {
        std::cout << "S_" << degree << "(" << x->to_string() << ") = " << naive.to_string() << "\n";
        if (!g.quiet) {
            std::cout << "routes: naive=" << naive.to_string()
                      << " x-poly=" << via_x_poly.to_string()
                      << " u-form=" << via_u_form.to_string()
                      << (agree ? " (agree)" : " (MISMATCH)") << "\n";
        }
    }
    return agree ? kExitOk : kExitCheckFailed;
}

int run_verify(const GlobalOpts& g, const FamilySpec& f, long k_max) {
    FamilyReport report = verify_range(f, k_max);

    if (g.json) {
        json j = base_record("verify");
        j["inputs"] = {{"family", f.display_name()},
                       {"family_spec", f.to_text()},
                       {"k_max", std::to_string(k_max)}};
        j["k_min"] = std::to_string(report.k_min);
        j["held"] = std::to_string(report.held);
        j["failed"] = std::to_string(report.failed);
        if (report.first_failure) j["first_failure"] = instance_json(*report.first_failure);
        emit(j);
    } else {
        std::cout << "family " << f.display_name() << ": k=" << report.k_min << ".." << report.k_max
                  << ": " << report.held << " hold, " << report.failed << " fail\n";
        if (report.first_failure) {
            const IdentityInstance& ff = *report.first_failure;
            std::cout << "first failure: k=" << ff.k << "  x=" << ff.x.to_string()
                      << "  lhs=" << ff.lhs.to_string() << "  rhs=" << ff.rhs.to_decimal() << "\n";
        }
    }
    return report.failed == 0 ? kExitOk : kExitCheckFailed;
}

int run_prove(const GlobalOpts& g, const FamilySpec& f) {
    ProofResult proof = prove_symbolic(f);
    UForm uf = to_u_form(f.d());

    if (g.json) {
        json j = base_record("prove");
        j["inputs"] = {{"family", f.display_name()}, {"family_spec", f.to_text()}};
        j["u_form"] = uf.poly.to_string('u');
        j["proof"] = proof_json(proof);
        emit(j);
    } else {
        std::cout << "family " << f.display_name() << ": "
                  << (proof.proven ? "proven for all k >= " + std::to_string(f.k_min()) : "NOT proven")
                  << "\n";
        if (!g.quiet || !proof.proven) {
            std::cout << "u-form: " << uf.poly.to_string('u') << "\n";
            for (auto it = proof.certificate.rbegin(); it != proof.certificate.rend(); ++it) {
                RhsTerm induced{it->u_power, it->beta};
                std::cout << "  c_" << it->u_power << " = " << it->coeff.to_string() << " = "
                          << f.b().to_decimal() << "^" << it->beta << "  ->  term "
                          << f.b().to_decimal() << "^" << exponent_text(induced) << "\n";
            }
            if (proof.proven) std::cout << "  constant: " << proof.constant.to_decimal() << "\n";
        }
        if (!proof.proven) std::cout << "reason: " << proof.failure_reason << "\n";
    }
    return proof.proven ? kExitOk : kExitCheckFailed;
}

int run_table(const GlobalOpts& g, const FamilySpec& f, const KRange& range) {
    bool all_hold = true;
    for (long k = range.lo; k <= range.hi; ++k) {
        IdentityInstance inst = instantiate(f, k);
        all_hold = all_hold && inst.holds;
        if (g.json) {
            json j = base_record("table");
            j["inputs"] = {{"family", f.display_name()},
                           {"family_spec", f.to_text()},
                           {"k_range", std::to_string(range.lo) + ".." + std::to_string(range.hi)}};
            j["instance"] = instance_json(inst);
            emit(j);
            continue;
        }
        if (g.quiet && inst.holds) continue;
        std::cout << "k=" << inst.k << "  x=" << inst.x.to_string() << "  S_" << f.d()
                  << "(x) = " << concrete_rhs_text(f.b(), inst.exponents, f.rhs_const());
        if (!inst.holds) {
            std::cout << "  [FAIL lhs=" << inst.lhs.to_string() << " rhs=" << inst.rhs.to_decimal()
                      << "]";
        }
        std::cout << "\n";
    }
    return all_hold ? kExitOk : kExitCheckFailed;
}

int run_search(const GlobalOpts& g, unsigned degree, const ExactInt& base, const RhsForm& rhs,
               const SearchLimits& limits, bool brute, bool no_prune) {
    SearchOptions opts;
    opts.prune = !no_prune;
    opts.threads = g.threads;
    SearchReport report = brute ? brute_force_search(degree, base, rhs, limits)
                                : search_structured(degree, base, rhs, limits, opts);

    if (g.json) {
        json j = base_record("search");
        j["inputs"] = {{"degree", std::to_string(degree)},
                       {"base", base.to_decimal()},
                       {"rhs", rhs.to_string()},
                       {"n_max", std::to_string(limits.n_max)},
                       {"u_max", limits.u_max.to_decimal()},
                       {"parity", to_string(limits.parity)},
                       {"prune", opts.prune},
                       {"method", report.method}};
        json sols = json::array();
        for (const SolutionRecord& rec : report.solutions) sols.push_back(solution_json(rec));
        j["solutions"] = std::move(sols);
        j["count"] = std::to_string(report.solutions.size());
        j["completeness"] = report.completeness;
        emit(j);
    } else {
        std::cout << "search d=" << degree << " b=" << base.to_decimal() << " rhs=" << rhs.to_string()
                  << " n_max=" << limits.n_max << " u_max=" << limits.u_max.to_decimal()
                  << " parity=" << to_string(limits.parity) << " method=" << report.method << "\n";
        if (!g.quiet) {
            const ExactInt zero_const =
                rhs.kind == RhsKind::PowerPlusConst ? rhs.constant : ExactInt(0);
            for (const SolutionRecord& rec : report.solutions) {
                std::cout << "u=" << rec.u.to_decimal() << "  x=" << rec.x.to_string() << "  S_"
                          << degree << "(x) = " << concrete_rhs_text(base, rec.exponents, zero_const)
                          << "\n";
            }
        }
        std::cout << report.solutions.size() << " solutions; complete: " << report.completeness
                  << "\n";
    }
    return kExitOk;
}

int run_discover(const GlobalOpts& g, const KRange& degrees, const KRange& bases, bool allow_const) {
    auto found = discover_families(static_cast<unsigned>(degrees.lo), static_cast<unsigned>(degrees.hi),
                                   bases.lo, bases.hi, allow_const);

    for (const DiscoveredFamily& df : found) {
        if (g.json) {
            json j = base_record("discover");
            j["inputs"] = {{"degrees", std::to_string(degrees.lo) + ".." + std::to_string(degrees.hi)},
                           {"bases", std::to_string(bases.lo) + ".." + std::to_string(bases.hi)},
                           {"allow_const", allow_const}};
            j["family"] = family_json(df.family);
            j["proof"] = proof_json(df.proof);
            emit(j);
        } else if (!g.quiet) {
            std::cout << "d=" << df.family.d() << " b=" << df.family.b().to_decimal()
                      << ": S_" << df.family.d() << "(x_k) = " << family_rhs_text(df.family)
                      << (df.proof.proven ? "  [proven]" : "  [unproven]") << "\n";
        }
    }
    if (!g.json) {
        std::cout << found.size() << " families (degrees " << degrees.lo << ".." << degrees.hi
                  << ", bases " << bases.lo << ".." << bases.hi << ")\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for alternating power-sum identities "
                 "x^d - (x+1)^d - (x+2)^d + (x+3)^d = powers of b"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable output, one JSON record per line");
    app.add_flag("--quiet", g.quiet, "suppress per-item detail in human mode");
    app.add_option("--threads", g.threads, "worker threads for the structured search")
        ->check(CLI::PositiveNumber);

    // eval
    std::string eval_x;
    unsigned eval_degree = 0;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate S_d(x) by all three routes");
    eval_cmd->add_option("--x", eval_x, "argument, integer or half-integer (e.g. 3/2)")->required();
    eval_cmd->add_option("--degree", eval_degree, "degree d >= 1")->required();

    // verify
    std::string verify_family;
    long verify_k_max = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a family exactly over k = k_min..k_max");
    verify_cmd->add_option("--family", verify_family, "built-in name or spec text")->required();
    verify_cmd->add_option("--k-max", verify_k_max, "upper end of the k range")->required();

    // prove
    std::string prove_family;
    CLI::App* prove_cmd = app.add_subcommand("prove", "derive the u-form coefficient certificate");
    prove_cmd->add_option("--family", prove_family, "built-in name or spec text")->required();

    // table
    std::string table_family;
    std::string table_range;
    CLI::App* table_cmd = app.add_subcommand("table", "print instances k = A..B");
    table_cmd->add_option("--family", table_family, "built-in name or spec text")->required();
    table_cmd->add_option("--k-range", table_range, "inclusive range A..B")->required();

    // search
    unsigned search_degree = 0;
    std::string search_base, search_rhs, search_u_max, search_parity = "odd";
    long search_n_max = 0;
    bool search_no_prune = false, search_brute = false;
    CLI::App* search_cmd =
        app.add_subcommand("search", "find all solutions within explicit exponent and u bounds");
    search_cmd->add_option("--degree", search_degree, "degree d >= 3")->required();
    search_cmd->add_option("--base", search_base, "base b >= 2")->required();
    search_cmd->add_option("--rhs", search_rhs, "two-powers | one-power | power-plus-const:C")->required();
    search_cmd->add_option("--n-max", search_n_max, "largest exponent")->required();
    search_cmd->add_option("--u-max", search_u_max, "largest u (decimal)")->required();
    search_cmd->add_option("--parity", search_parity, "odd (integer x) or any (half-integer x)")
        ->check(CLI::IsMember({"odd", "any"}));
    search_cmd->add_flag("--no-prune", search_no_prune, "disable valuation pruning");
    search_cmd->add_flag("--brute-force", search_brute, "use the direct enumeration oracle");

    // discover
    std::string discover_degrees, discover_bases;
    bool discover_allow_const = false;
    CLI::App* discover_cmd =
        app.add_subcommand("discover", "derive all families over (degree, base) grids");
    discover_cmd->add_option("--degrees", discover_degrees, "inclusive degree range A..B")->required();
    discover_cmd->add_option("--bases", discover_bases, "inclusive base range A..B")->required();
    discover_cmd->add_flag("--allow-const", discover_allow_const, "admit a nonzero additive constant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval_cmd) return run_eval(g, eval_x, eval_degree);

        if (*verify_cmd || *prove_cmd || *table_cmd) {
            const std::string& family_text =
                *verify_cmd ? verify_family : (*prove_cmd ? prove_family : table_family);
            auto family = resolve_family(family_text);
            if (!family) {
                std::cerr << "error: unknown family '" << family_text
                          << "' (built-ins: thm1-printed, thm1-corrected, thm2, thm3; "
                             "or a spec like \"d=5 b=5 terms=(k+2),(3k+1) const=0\")\n";
                return kExitUsage;
            }
            if (*verify_cmd) return run_verify(g, *family, verify_k_max);
            if (*prove_cmd) return run_prove(g, *family);
            auto range = parse_range(table_range);
            if (!range) {
                std::cerr << "error: --k-range expects A..B with A <= B, got '" << table_range << "'\n";
                return kExitUsage;
            }
            return run_table(g, *family, *range);
        }

        if (*search_cmd) {
            auto base = ExactInt::parse(search_base);
            auto rhs = RhsForm::parse(search_rhs);
            auto u_max = ExactInt::parse(search_u_max);
            if (!base || !rhs || !u_max) {
                std::cerr << "error: bad --base, --rhs or --u-max value\n";
                return kExitUsage;
            }
            SearchLimits limits;
            limits.n_max = search_n_max;
            limits.u_max = *u_max;
            limits.parity = search_parity == "odd" ? Parity::OddOnly : Parity::Any;
            return run_search(g, search_degree, *base, *rhs, limits, search_brute, search_no_prune);
        }

        if (*discover_cmd) {
            auto degrees = parse_range(discover_degrees);
            auto bases = parse_range(discover_bases);
            if (!degrees || !bases) {
                std::cerr << "error: --degrees and --bases expect inclusive ranges A..B\n";
                return kExitUsage;
            }
            return run_discover(g, *degrees, *bases, discover_allow_const);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
