// qlc: batch front end for certification runs, bound tables and identity checks.
//
// Exit codes: 0 success, 1 configuration error, 2 a violation or failed check,
// 3 only unmet hypotheses or indeterminate coefficients.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qlc/qlc.hpp"

namespace {

using namespace qlc;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitViolation = 2;
constexpr int kExitUnresolved = 3;

// "0..3" (integers, step 1), "start:stop:step", "v1,v2,..." or a single value.
std::vector<Rational> parse_values(const std::string& text) {
    if (text.empty()) throw ParseError("empty value list");
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const Rational lo = Rational::parse(text.substr(0, dots));
        const Rational hi = Rational::parse(text.substr(dots + 2));
        if (!lo.is_integer() || !hi.is_integer()) throw ParseError("'..' ranges take integers: " + text);
        if (hi < lo) throw ParseError("empty range " + text);
        std::vector<Rational> out;
        for (Rational v = lo; v <= hi; v += Rational(1)) out.push_back(v);
        return out;
    }
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
        if (parts.size() != 3) throw ParseError("grid must be start:stop:step, got " + text);
        const Rational lo = Rational::parse(parts[0]);
        const Rational hi = Rational::parse(parts[1]);
        const Rational step = Rational::parse(parts[2]);
        if (!step.is_positive()) throw ParseError("grid step must be positive");
        if (hi < lo) throw ParseError("empty grid " + text);
        std::vector<Rational> out;
        for (long i = 0;; ++i) {
            const Rational v = lo + step * Rational(i);
            if (v > hi) break;
            out.push_back(v);
        }
        return out;
    }
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(Rational::parse(item));
    if (out.empty()) throw ParseError("empty value list");
    return out;
}

Rational parse_single(const std::string& name, const std::string& text) {
    if (text.empty()) throw ParseError("--" + name + " is required");
    return Rational::parse(text);
}

void emit(const std::string& content, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

struct VerifyArgs {
    std::string theorem;
    std::string conjecture;
    std::string family;
    std::string a, c;
    std::string mu, nu, alpha, beta;
    std::string sequence = "ones";
    std::size_t order = 50;
    long precision = 0;
    std::string format = "json";
    std::string output;
    bool no_timestamp = false;
    unsigned threads = 1;
};

int run_verify(const VerifyArgs& v, mpfr_prec_t default_precision) {
    if (v.theorem.empty() == v.conjecture.empty()) throw ParseError("give exactly one of --theorem, --conjecture");
    const TheoremId id = parse_theorem(v.theorem.empty() ? v.conjecture : v.theorem);
    if (!v.theorem.empty() && is_conjecture(id)) throw ParseError("conjectures go through --conjecture");
    if (!v.conjecture.empty() && !is_conjecture(id)) throw ParseError("--conjecture takes C1 or C2");
    if (v.order < 1) throw ParseError("--order must be at least 1");
    const mpfr_prec_t precision = v.precision > 0 ? v.precision : default_precision;
    if (precision < 64) throw ParseError("--precision must be at least 64");
    if (v.format != "json" && v.format != "csv") throw ParseError("--format is json or csv");

    FamilySpec spec;
    spec.family = v.family.empty() ? theorem_family(id) : parse_family(v.family);
    if (spec.family != theorem_family(id)) throw ParseError("family does not match the theorem");
    spec.a = parse_single("a", v.a);
    spec.c = parse_single("c", v.c);
    spec.sequence = CoefficientSequence::parse(v.sequence);
    spec.validate();

    const std::string& first = is_conjecture(id) && !v.alpha.empty() ? v.alpha : v.mu;
    const std::string& second = is_conjecture(id) && !v.beta.empty() ? v.beta : v.nu;
    // The discrete theorems only speak about mu >= nu-1; such pairs of a
    // rectangular grid are dropped rather than reported as unmet.
    const bool discrete = id == TheoremId::T1_F_CONCAVE || id == TheoremId::T4_G_CONCAVE ||
                          id == TheoremId::T5_H_CONCAVE;
    std::vector<GridPoint> grid;
    std::size_t dropped = 0;
    for (const auto& m : parse_values(first)) {
        for (const auto& n : parse_values(second)) {
            if (discrete && n.is_integer() && m < n - Rational(1)) {
                ++dropped;
                continue;
            }
            grid.push_back({m, n});
        }
    }
    if (grid.empty()) throw ParseError("no grid point satisfies mu >= nu-1");
    if (dropped > 0) std::cerr << "skipped " << dropped << " grid pairs with mu < nu-1\n";

    const CertificationReport rep = is_conjecture(id)
                                        ? explore_conjecture(id, spec, grid, v.order, precision, v.threads)
                                        : verify_theorem(id, spec, grid, v.order, {precision, v.threads});
    emit(v.format == "json" ? to_json(rep, !v.no_timestamp).dump(2) + "\n" : to_csv(rep), v.output);

    if (rep.all_certified()) return kExitOk;
    if (rep.any(Verdict::Violation)) return kExitViolation;
    return kExitUnresolved;
}

struct BoundsArgs {
    std::string kind;
    std::string a, b, c, x = "1";
    std::string mu = "1", nu = "1";
    std::string family = "F";
    std::string sequence = "ones";
    long precision = 0;
    std::string output;
};

struct Row {
    std::optional<Ball> lower;
    Ball reference;
    std::optional<Ball> upper;
    std::string flag = "ok";
};

std::string cell(const std::optional<Real>& v) { return v ? v->str(25) : std::string(); }

int run_bounds(const BoundsArgs& args, mpfr_prec_t default_precision) {
    const mpfr_prec_t prec = args.precision > 0 ? args.precision : default_precision;
    if (prec < 64) throw ParseError("--precision must be at least 64");
    const auto xs = parse_values(args.x);
    auto real = [&](const std::string& name, const std::string& s) { return Real(parse_single(name, s), prec); };

    std::function<Row(const Real&)> row_at;
    if (args.kind == "turan1f1") {
        const Real a = real("a", args.a), c = real("c", args.c);
        row_at = [=](const Real& x) {
            const BoundTriple t = turan_1f1(a, c, x, prec);
            return Row{t.lower, t.reference, t.upper};
        };
    } else if (args.kind == "logderiv") {
        const Real a = real("a", args.a), c = real("c", args.c);
        row_at = [=](const Real& x) {
            const Envelope e = logderiv_envelope(a, c, x);
            return Row{e.lower, kummer_log_derivative(a, c, x, prec), e.upper};
        };
    } else if (args.kind == "kummerenv") {
        const Real a = real("a", args.a), c = real("c", args.c);
        row_at = [=](const Real& x) {
            const KummerEnvelope e = kummer_envelope(a, c, x);
            return Row{e.lower(), hyp1f1(a, c, x, prec).ball(), e.upper()};
        };
    } else if (args.kind == "gaussratio") {
        const Real a = real("a", args.a), b = real("b", args.b), c = real("c", args.c);
        row_at = [=](const Real& x) {
            const GaussRatioBound g = gauss_ratio_bound(a, b, c, x);
            Row r{std::nullopt, gauss_ratio(a, b, c, x, prec), std::nullopt};
            if (g.direction != BoundDirection::Upper) r.lower = g.bound;
            if (g.direction != BoundDirection::Lower) r.upper = g.bound;
            return r;
        };
    } else if (args.kind == "turanian" || args.kind == "ratio") {
        const Rational a = parse_single("a", args.a), c = parse_single("c", args.c);
        const Rational nu = parse_single("nu", args.nu);
        const Rational mu = parse_single("mu", args.mu);
        if (!nu.is_integer() || !nu.is_positive()) throw ParseError("--nu must be a positive integer");
        const auto n = static_cast<std::uint64_t>(nu.numerator().get_ui());
        const Family fam = parse_family(args.family);
        if (fam == Family::Q) throw ParseError("two-sided bounds exist for F, G and H");
        const TuranKind kind = fam == Family::F ? TuranKind::F : (fam == Family::G ? TuranKind::G : TuranKind::H);
        const CoefficientSequence seq = CoefficientSequence::parse(args.sequence);
        if (args.kind == "turanian") {
            row_at = [=](const Real& x) {
                const BoundTriple t = turanian_two_sided(kind, a, c, n, x, seq, prec);
                return Row{t.lower, t.reference, t.upper};
            };
        } else {
            row_at = [=](const Real& x) {
                const RatioBounds r = ratio_two_sided(kind, a, c, mu, n, x, seq, prec);
                return Row{r.lower, r.ratio, Ball::exact(r.upper)};
            };
        }
    } else {
        throw ParseError("unknown bound '" + args.kind +
                         "' (turan1f1, logderiv, kummerenv, gaussratio, turanian, ratio)");
    }

    std::ostringstream os;
    os << "x,lower,reference,upper,margin_low,margin_high,flag\n";
    bool all_ok = true;
    for (const auto& xq : xs) {
        const Real x(xq, prec);
        os << xq.to_double() << ',';
        try {
            Row r = row_at(x);
            std::optional<Real> ml, mh;
            if (r.lower) {
                ml = r.reference.mid - r.lower->mid;
                if (*ml < -(r.reference.rad + r.lower->rad)) r.flag = "bracket_fail";
            }
            if (r.upper) {
                mh = r.upper->mid - r.reference.mid;
                if (*mh < -(r.reference.rad + r.upper->rad)) r.flag = "bracket_fail";
            }
            all_ok = all_ok && r.flag == "ok";
            os << cell(r.lower ? std::optional<Real>(r.lower->mid) : std::nullopt) << ',' << r.reference.mid.str(25)
               << ',' << cell(r.upper ? std::optional<Real>(r.upper->mid) : std::nullopt) << ',' << cell(ml) << ','
               << cell(mh) << ',' << r.flag << '\n';
        } catch (const HypothesisUnmet&) {
            throw;
        } catch (const Error& e) {
            all_ok = false;
            os << "nan,nan,nan,nan,nan," << csv_escape(std::string("error: ") + e.what()) << '\n';
        }
    }
    emit(os.str(), args.output);
    return all_ok ? kExitOk : kExitViolation;
}

struct IdentityArgs {
    std::string kind;
    std::string a, b, c, mu = "0", x = "1";
    std::size_t order = 30;
    std::uint64_t m = 1;
    long precision = 0;
};

int run_identity(const IdentityArgs& args, mpfr_prec_t default_precision) {
    const mpfr_prec_t prec = args.precision > 0 ? args.precision : default_precision;
    if (args.kind == "kummer") {
        const auto r = check_kummer_identity(parse_single("a", args.a), parse_single("c", args.c),
                                             parse_single("mu", args.mu), args.order);
        const bool zero = is_zero_series(r);
        std::cout << "kummer residual through order " << args.order << ": " << (zero ? "zero" : "NONZERO") << "\n";
        return zero ? kExitOk : kExitViolation;
    }
    if (args.kind == "gosper") {
        const bool ok = check_gosper_antidifference(parse_single("a", args.a), parse_single("b", args.b),
                                                    parse_single("mu", args.mu), args.m);
        std::cout << "gosper antidifference: " << (ok ? "verified" : "FAILED") << "\n";
        return ok ? kExitOk : kExitViolation;
    }
    if (args.kind == "absum") {
        const Rational v = absum_value(parse_single("a", args.a), parse_single("b", args.b),
                                       parse_single("mu", args.mu), args.m);
        std::cout << "sum = " << v << "\n";
        return v.is_negative() ? kExitViolation : kExitOk;
    }
    auto real = [&](const std::string& name, const std::string& s) { return Real(parse_single(name, s), prec); };
    auto report = [](const std::string& label, const Residual& r) {
        std::cout << label << ": residual " << r.residual.str(6) << " bound " << r.bound.str(6) << "\n";
        return r.within_bound();
    };
    if (args.kind == "contig1f1") {
        return report("1F1 contiguous", contiguous_residual_1f1(real("a", args.a), real("c", args.c),
                                                                real("x", args.x), prec))
                   ? kExitOk
                   : kExitViolation;
    }
    if (args.kind == "contig2f1") {
        return report("2F1 contiguous", contiguous_residual_2f1(real("a", args.a), real("b", args.b),
                                                                real("c", args.c), real("x", args.x), prec))
                   ? kExitOk
                   : kExitViolation;
    }
    if (args.kind == "kummer-contig") {
        const auto rs = kummer_identity_contiguous_residuals(real("a", args.a), real("c", args.c),
                                                             real("mu", args.mu), real("x", args.x), prec);
        bool ok = true;
        for (std::size_t i = 0; i < rs.size(); ++i) ok = report("relation " + std::to_string(i + 1), rs[i]) && ok;
        return ok ? kExitOk : kExitViolation;
    }
    throw ParseError("unknown identity '" + args.kind + "' (kummer, gosper, absum, contig1f1, contig2f1, kummer-contig)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certification of q-log-concavity for gamma-ratio power series"};
    app.require_subcommand(1);
    const mpfr_prec_t default_precision = default_precision_from_env(kDefaultIntervalPrecision);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "certify coefficient signs over a grid of shifts");
    verify->add_option("--theorem", va.theorem, "T1..T6");
    verify->add_option("--conjecture", va.conjecture, "C1 or C2");
    verify->add_option("--family", va.family, "F, G, H or Q (defaults to the theorem's family)");
    verify->add_option("--a", va.a, "parameter a (p/q or decimal)");
    verify->add_option("--c", va.c, "parameter c (p/q or decimal)");
    verify->add_option("--mu", va.mu, "shift grid: 0..3, start:stop:step or a list");
    verify->add_option("--nu", va.nu, "shift grid");
    verify->add_option("--alpha", va.alpha, "conjecture shift grid (alias of --mu)");
    verify->add_option("--beta", va.beta, "conjecture shift grid (alias of --nu)");
    verify->add_option("--sequence", va.sequence, "ones | poch:B | hyper:A1,A2/B1,B2 | explicit:V0,V1,...");
    verify->add_option("--order", va.order, "truncation order")->capture_default_str();
    verify->add_option("--precision", va.precision, "interval precision in bits (env QLC_PRECISION)");
    verify->add_option("--format", va.format, "json or csv")->capture_default_str();
    verify->add_option("--output", va.output, "output file (stdout if omitted)");
    verify->add_flag("--no-timestamp", va.no_timestamp, "omit the timestamp field");
    verify->add_option("--threads", va.threads, "worker threads (0 = hardware)")->capture_default_str();

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "tabulate a bound and its reference over an x grid");
    bounds->add_option("kind", ba.kind, "turan1f1 | logderiv | kummerenv | gaussratio | turanian | ratio")->required();
    bounds->add_option("--a", ba.a);
    bounds->add_option("--b", ba.b);
    bounds->add_option("--c", ba.c);
    bounds->add_option("--x", ba.x, "x grid: start:stop:step, list or value")->capture_default_str();
    bounds->add_option("--mu", ba.mu)->capture_default_str();
    bounds->add_option("--nu", ba.nu)->capture_default_str();
    bounds->add_option("--family", ba.family, "F, G or H for turanian and ratio")->capture_default_str();
    bounds->add_option("--sequence", ba.sequence)->capture_default_str();
    bounds->add_option("--precision", ba.precision, "evaluation precision in bits");
    bounds->add_option("--output", ba.output);

    IdentityArgs ia;
    auto* identity = app.add_subcommand("identity", "check an identity exactly or within error bounds");
    identity->add_option("kind", ia.kind, "kummer | gosper | absum | contig1f1 | contig2f1 | kummer-contig")
        ->required();
    identity->add_option("--a", ia.a);
    identity->add_option("--b", ia.b);
    identity->add_option("--c", ia.c);
    identity->add_option("--mu", ia.mu)->capture_default_str();
    identity->add_option("--x", ia.x)->capture_default_str();
    identity->add_option("--m", ia.m)->capture_default_str();
    identity->add_option("--order", ia.order)->capture_default_str();
    identity->add_option("--precision", ia.precision);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*verify) return run_verify(va, default_precision);
        if (*bounds) return run_bounds(ba, default_precision);
        if (*identity) return run_identity(ia, default_precision);
    } catch (const HypothesisUnmet& e) {
        std::cerr << e.what() << "\n";
        return kExitUnresolved;
    } catch (const qlc::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
