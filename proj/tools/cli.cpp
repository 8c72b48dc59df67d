#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>

#include "mordell/families.hpp"
#include "mordell/scan.hpp"

namespace mordell::cli {

namespace {

using json = nlohmann::ordered_json;

struct GlobalOptions {
    long precision = 256;
    int depth = 40;
    int exact_depth = 10;
    unsigned long exact_bits = 1ul << 20;
    int jobs = 1;
    std::string format;  // "", "text" or "json"
    std::string out_path;

    ArchHeightConfig config() const {
        ArchHeightConfig cfg;
        cfg.precision_bits = precision;
        cfg.depth = depth;
        cfg.exact_depth = exact_depth;
        cfg.exact_bit_budget = exact_bits;
        return cfg;
    }
    bool json_output(bool default_json) const {
        if (format == "json") return true;
        if (format == "text") return false;
        return default_json;
    }
};

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw domain_error("not an integer: " + s);
    }
}

Rat parse_rat(const std::string& s) {
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw domain_error("not a rational: " + s);
    }
}

TheoremId parse_theorem(const std::string& s) {
    auto t = theorem_from_string(s);
    if (!t) throw domain_error("unknown theorem: " + s + " (expected lang1..lang4 or heightdiff)");
    return *t;
}

std::string rat_str(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

json point_json(const RationalPoint& P) {
    if (P.is_infinity()) return json{{"infinity", true}};
    return json{{"x", rat_str(P.x())}, {"y", rat_str(P.y())}};
}

json nonarch_json(const LogCombination& c, mpfr_prec_t prec) {
    json terms = json::array();
    for (const auto& [p, coeff] : c.terms()) {
        const Real value = Real::of(coeff, prec) * log_int(p, prec);
        terms.push_back(
            {{"prime", p.get_str()}, {"coefficient", rat_str(coeff)}, {"value", value.str()}});
    }
    return json{{"value", c.to_real(prec).str()}, {"terms", terms}};
}

json breakdown_json(const Int& b, const RationalPoint& P, const HeightBreakdown& h) {
    const mpfr_prec_t prec = h.canonical.precision();
    return json{
        {"b", b.get_str()},
        {"point", point_json(P)},
        {"reduced_b", h.reduced_b.get_str()},
        {"u", h.u.get_str()},
        {"torsion", h.torsion},
        {"canonical", h.canonical.str()},
        {"naive", h.naive.str()},
        {"archimedean",
         {{"value", h.arch.value.str()},
          {"tail_bound", h.arch.tail_bound.str()},
          {"branch",
           h.arch.branch == ArchBranch::NegativeB ? "negative_b" : "positive_b_translated"}}},
        {"non_archimedean", nonarch_json(h.nonarch, prec)},
        {"error_bound", h.error_bound.str()},
    };
}

json report_json(const BoundReport& r) {
    json j{
        {"theorem", std::string(to_string(r.theorem))},
        {"b", r.b.get_str()},
        {"point", point_json(r.point)},
        {"applicable", r.applicable},
        {"reason", r.reason},
    };
    if (r.applicable) {
        j["computed"] = r.computed.str();
        j["bound"] = json{{"lower", r.lower ? json(r.lower->str()) : json(nullptr)},
                          {"upper", r.upper ? json(r.upper->str()) : json(nullptr)}};
        j["gap"] = r.gap.str();
        j["holds"] = r.holds;
        j["suspected_bug"] = r.suspected_bug;
        j["error_budget"] = r.error_budget.str();
    }
    return j;
}

void print_report_text(std::ostream& os, const BoundReport& r) {
    os << to_string(r.theorem) << " b=" << r.b;
    if (!r.point.is_infinity()) {
        os << " P=(" << rat_str(r.point.x()) << ", " << rat_str(r.point.y()) << ")";
    }
    if (!r.applicable) {
        os << ": not applicable (" << r.reason << ")\n";
        return;
    }
    os << ": " << (r.holds ? "holds" : "FAILS") << "  computed=" << r.computed.str(15)
       << " gap=" << r.gap.str(15);
    if (r.suspected_bug) os << "  [suspected implementation bug]";
    os << "\n";
}

class OutputStream {
public:
    explicit OutputStream(const GlobalOptions& opts, std::ostream& fallback) : os_(&fallback) {
        if (!opts.out_path.empty()) {
            file_ = std::make_unique<std::ofstream>(opts.out_path);
            if (!*file_) throw domain_error("cannot open output file: " + opts.out_path);
            os_ = file_.get();
        }
    }
    std::ostream& get() { return *os_; }

private:
    std::ostream* os_;
    std::unique_ptr<std::ofstream> file_;
};

int cmd_reduce(const GlobalOptions& g, const std::string& b_arg, std::ostream& out) {
    const Int b = parse_int(b_arg);
    if (b == 0) throw domain_error("b must be nonzero");
    const auto dec = sixth_power_free(b);
    const auto model = minimal_model(b);
    const Int disc = -432 * dec.b1 * dec.b1;
    OutputStream os(g, out);
    const bool translated = model.kind == MinimalModelKind::Translated16Mod64;
    const std::string equation =
        translated ? "y^2 + y = x^3 + " + model.a6().get_str()
                   : "y^2 = x^3 + " + model.a6().get_str();
    if (g.json_output(false)) {
        os.get() << json{{"b", b.get_str()},
                         {"b1", dec.b1.get_str()},
                         {"u", dec.u.get_str()},
                         {"model", translated ? "translated_16_mod_64" : "short_weierstrass"},
                         {"a6", model.a6().get_str()},
                         {"equation", equation},
                         {"discriminant", disc.get_str()}}
                        .dump()
                 << "\n";
    } else {
        os.get() << "b            = " << b << "\n"
                 << "b1 (6th-power-free) = " << dec.b1 << "  (u = " << dec.u << ")\n"
                 << "minimal model: " << equation << "\n"
                 << "discriminant = " << disc << "\n";
    }
    return kExitOk;
}

int cmd_reduction(const GlobalOptions& g, const std::string& b_arg,
                  const std::string& p_arg, std::ostream& out) {
    const Int b = parse_int(b_arg);
    if (b == 0) throw domain_error("b must be nonzero");
    const Int b1 = sixth_power_free(b).b1;

    std::vector<Int> primes;
    if (!p_arg.empty()) {
        const Int p = parse_int(p_arg);
        if (!is_prime(p)) throw domain_error("p must be prime");
        primes.push_back(p);
    } else {
        primes.push_back(2);
        primes.push_back(3);
        for (const auto& f : factorize(b1)) {
            if (f.prime > 3) primes.push_back(f.prime);
        }
    }

    OutputStream os(g, out);
    json places = json::array();
    for (const auto& p : primes) {
        const auto rd = reduction(b1, p);
        if (g.json_output(false)) {
            places.push_back({{"p", p.get_str()},
                              {"kodaira", std::string(to_string(rd.kodaira))},
                              {"tamagawa", rd.tamagawa}});
        } else {
            os.get() << "p = " << p << ": " << to_string(rd.kodaira) << ", c = " << rd.tamagawa
                     << "\n";
        }
    }
    if (g.json_output(false)) {
        os.get() << json{{"b", b.get_str()}, {"reduced_b", b1.get_str()}, {"places", places}}.dump()
                 << "\n";
    }
    return kExitOk;
}

int cmd_height(const GlobalOptions& g, const std::string& b_arg, const std::string& x_arg,
               const std::string& y_arg, std::ostream& out) {
    const Int b = parse_int(b_arg);
    const RationalPoint P(parse_rat(x_arg), parse_rat(y_arg));
    const auto breakdown = canonical_height(b, P, g.config());
    OutputStream os(g, out);
    if (g.json_output(true)) {
        os.get() << breakdown_json(b, P, breakdown).dump() << "\n";
    } else {
        os.get() << "canonical = " << breakdown.canonical.str(30) << "\n"
                 << "naive     = " << breakdown.naive.str(30) << "\n"
                 << "archimedean = " << breakdown.arch.value.str(30)
                 << " (tail <= " << breakdown.arch.tail_bound.str(3) << ")\n";
        for (const auto& [p, c] : breakdown.nonarch.terms()) {
            os.get() << "lambda_" << p << " coefficient of log p: " << rat_str(c) << "\n";
        }
        os.get() << "torsion   = " << (breakdown.torsion ? "true" : "false") << "\n"
                 << "error bound = " << breakdown.error_bound.str(3) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const GlobalOptions& g, const std::string& b_arg, const std::string& x_arg,
               const std::string& y_arg, const std::string& theorem_arg, std::ostream& out) {
    const Int b = parse_int(b_arg);
    const RationalPoint P(parse_rat(x_arg), parse_rat(y_arg));
    const auto report = verify(parse_theorem(theorem_arg), b, P, g.config());
    OutputStream os(g, out);
    if (g.json_output(true)) {
        os.get() << report_json(report).dump() << "\n";
    } else {
        print_report_text(os.get(), report);
    }
    return report.applicable && !report.holds ? kExitBoundFailure : kExitOk;
}

int cmd_scan(const GlobalOptions& g, const std::string& bmin, const std::string& bmax,
             const std::string& xmax, const std::vector<std::string>& theorem_args,
             std::ostream& out) {
    ScanOptions opts;
    opts.b_min = parse_int(bmin);
    opts.b_max = parse_int(bmax);
    opts.x_max = parse_int(xmax);
    opts.jobs = g.jobs;
    opts.config = g.config();
    for (const auto& name : theorem_args) {
        if (name == "all") {
            opts.theorems.clear();
            break;
        }
        opts.theorems.push_back(parse_theorem(name));
    }
    const auto result = scan(opts);

    OutputStream os(g, out);
    if (g.json_output(true)) {
        for (const auto& r : result.reports) {
            json j = report_json(r);
            j["type"] = "report";
            os.get() << j.dump() << "\n";
        }
        json entries = json::array();
        for (const auto& e : result.summary) {
            entries.push_back({{"theorem", std::string(to_string(e.theorem))},
                               {"sign", std::string(to_string(e.sign))},
                               {"count", e.count},
                               {"min_gap", e.min_gap ? json(e.min_gap->str()) : json(nullptr)}});
        }
        os.get() << json{{"type", "summary"},
                         {"curves", result.curves},
                         {"points", result.points},
                         {"all_hold", result.all_hold},
                         {"theorems", entries}}
                        .dump()
                 << "\n";
    } else {
        for (const auto& r : result.reports) print_report_text(os.get(), r);
        os.get() << "curves = " << result.curves << ", points = " << result.points << "\n";
        for (const auto& e : result.summary) {
            os.get() << to_string(e.theorem) << " " << to_string(e.sign) << ": " << e.count
                     << " checks";
            if (e.min_gap) os.get() << ", min gap = " << e.min_gap->str(15);
            os.get() << "\n";
        }
        os.get() << (result.all_hold ? "all bounds hold" : "BOUND FAILURES FOUND") << "\n";
    }
    return result.all_hold ? kExitOk : kExitBoundFailure;
}

int cmd_family(const GlobalOptions& g, const std::string& theorem_arg, const std::string& sign_arg,
               const std::string& param_arg, const std::string& side_arg, std::ostream& out) {
    const TheoremId theorem = parse_theorem(theorem_arg);
    FamilySign sign;
    if (sign_arg == "neg") {
        sign = FamilySign::Neg;
    } else if (sign_arg == "pos") {
        sign = FamilySign::Pos;
    } else {
        throw domain_error("sign must be neg or pos");
    }
    const Int parameter = parse_int(param_arg);

    FamilyInstance inst;
    if (theorem == TheoremId::HeightDiff && side_arg == "lower") {
        inst = height_diff_family(sign, DiffBoundSide::Lower, parameter);
    } else if (!side_arg.empty() && side_arg != "upper" && side_arg != "lower") {
        throw domain_error("--side must be upper or lower");
    } else {
        inst = family(theorem, sign, parameter);
    }

    std::optional<BoundReport> report;
    if (inst.usable) {
        report = verify(theorem, inst.b, inst.point, g.config());
    }

    OutputStream os(g, out);
    if (g.json_output(true)) {
        json j{{"theorem", std::string(to_string(theorem))},
               {"sign", std::string(to_string(sign))},
               {"parameter", parameter.get_str()},
               {"b", inst.b.get_str()},
               {"point", point_json(inst.point)},
               {"usable", inst.usable},
               {"note", inst.note}};
        if (theorem == TheoremId::HeightDiff) j["side"] = side_arg.empty() ? "upper" : side_arg;
        j["verify"] = report ? report_json(*report) : json(nullptr);
        os.get() << j.dump() << "\n";
    } else {
        os.get() << "b = " << inst.b << ", P = (" << rat_str(inst.point.x()) << ", "
                 << rat_str(inst.point.y()) << ")\n";
        if (!inst.usable) os.get() << "unusable instance: " << inst.note << "\n";
        if (report) print_report_text(os.get(), *report);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"canonical heights, reduction data and height bounds for y^2 = x^3 + b"};
    app.name("mordell");
    GlobalOptions g;
    app.add_option("--precision", g.precision, "working precision in bits (>= 64)")
        ->capture_default_str();
    app.add_option("--depth", g.depth, "truncation depth K of the archimedean series")
        ->capture_default_str();
    app.add_option("--exact-depth", g.exact_depth, "max exact duplications in the series")
        ->capture_default_str();
    app.add_option("--exact-bits", g.exact_bits, "bit budget for exact duplication")
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads for scan")->capture_default_str();
    app.add_option("--format", g.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", g.out_path, "write output to a file instead of stdout");
    app.require_subcommand(1);

    std::string b_arg, x_arg, y_arg, theorem_arg, sign_arg, param_arg;
    std::string p_arg, side_arg;
    std::string bmin_arg, bmax_arg, xmax_arg;
    std::vector<std::string> theorem_list;

    auto* reduce = app.add_subcommand("reduce", "sixth-power-free part and minimal model");
    reduce->add_option("b", b_arg, "curve coefficient")->required();

    auto* reduction = app.add_subcommand("reduction", "Kodaira types and Tamagawa numbers");
    reduction->add_option("b", b_arg, "curve coefficient")->required();
    reduction->add_option("p", p_arg, "restrict to one prime");

    auto* height = app.add_subcommand("height", "canonical height breakdown of (x, y) on E_b");
    height->add_option("b", b_arg)->required();
    height->add_option("x", x_arg)->required();
    height->add_option("y", y_arg)->required();

    auto* verify_cmd = app.add_subcommand("verify", "check one theorem bound at one point");
    verify_cmd->add_option("b", b_arg)->required();
    verify_cmd->add_option("x", x_arg)->required();
    verify_cmd->add_option("y", y_arg)->required();
    verify_cmd->add_option("theorem", theorem_arg, "lang1..lang4 or heightdiff")->required();

    auto* scan_cmd = app.add_subcommand("scan", "verify bounds over a curve/point range");
    scan_cmd->add_option("--bmin", bmin_arg)->required();
    scan_cmd->add_option("--bmax", bmax_arg)->required();
    scan_cmd->add_option("--xmax", xmax_arg)->required();
    scan_cmd->add_option("--theorem", theorem_list, "theorem name or 'all' (repeatable)");

    auto* family_cmd = app.add_subcommand("family", "emit a sharpness-family instance");
    family_cmd->add_option("theorem", theorem_arg)->required();
    family_cmd->add_option("sign", sign_arg, "neg or pos")->required();
    family_cmd->add_option("parameter", param_arg)->required();
    family_cmd->add_option("--side", side_arg, "heightdiff bound side: upper or lower");

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(g, b_arg, out);
        if (reduction->parsed()) return cmd_reduction(g, b_arg, p_arg, out);
        if (height->parsed()) return cmd_height(g, b_arg, x_arg, y_arg, out);
        if (verify_cmd->parsed()) return cmd_verify(g, b_arg, x_arg, y_arg, theorem_arg, out);
        if (scan_cmd->parsed()) {
            return cmd_scan(g, bmin_arg, bmax_arg, xmax_arg, theorem_list, out);
        }
        if (family_cmd->parsed()) {
            return cmd_family(g, theorem_arg, sign_arg, param_arg, side_arg, out);
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitUsage;
}

}  // namespace mordell::cli
