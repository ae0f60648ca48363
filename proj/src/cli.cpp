#include "frobalg/cli.hpp"

#include <iomanip>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobalg/census.hpp"
#include "frobalg/diffops.hpp"
#include "frobalg/parse.hpp"

namespace frobalg {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime_flag(int p) {
    if (!is_prime(p))
        throw PreconditionError("-p must be a prime, got " + std::to_string(p));
}

struct CommonOpts {
    std::string ideal_text;
    int n = 0;
    int p = 2;
    int e = 1;
    int emax = 3;
    int q = 0;
    int jobs = 1;
    std::string format = "json";
};

void check_format(const CommonOpts& opt, bool allow_csv) {
    if (opt.format == "json" || opt.format == "text") return;
    if (opt.format == "csv" && allow_csv) return;
    throw ParseError("unsupported --format " + opt.format + " for this command");
}

MonomialIdeal parse_input_ideal(const CommonOpts& opt) {
    if (opt.ideal_text.empty()) throw ParseError("--ideal is required");
    return parse_ideal(opt.ideal_text, opt.n);
}

json decomposition_json(const Decomposition& D) {
    json comps = json::array();
    for (std::uint32_t comp : D.components) {
        json vars = json::array();
        for (int i = 0; i < D.n; ++i)
            if (comp & (1u << i)) vars.push_back(variable_name(i));
        comps.push_back(vars);
    }
    return comps;
}

json generators_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const Monomial& g : I.gens) gens.push_back(to_string(g));
    return gens;
}

int cmd_classify(const CommonOpts& opt, std::ostream& out) {
    require_prime_flag(opt.p);
    MonomialIdeal I = parse_input_ideal(opt);
    ClassificationReport report = classify(I, opt.p);

    json colon = json::array();
    for (const SymbolicMonomial& g : report.colon.symbolic.gens)
        colon.push_back(to_string(g));

    json doc = {
        {"schema", kSchemaVersion},
        {"n", I.n},
        {"p", opt.p},
        {"generators", generators_json(I)},
        {"decomposition", decomposition_json(report.decomposition)},
        {"height", report.heights.height},
        {"pure", report.heights.pure},
        {"case", to_string(report.case_tag)},
        {"finitely_generated", report.finitely_generated},
        {"mu", report.mu},
        {"colon_symbolic", colon},
        {"gorenstein", report.gorenstein},
        {"cohen_macaulay", report.cohen_macaulay},
    };
    if (opt.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        out << "I = (" << to_string(I) << ")  in " << I.n << " variables, p=" << opt.p
            << '\n';
        out << "decomposition: " << doc["decomposition"].dump() << '\n';
        out << "height " << report.heights.height
            << (report.heights.pure ? " (pure)" : " (mixed)") << ", case "
            << to_string(report.case_tag) << ", "
            << (report.finitely_generated ? "principally generated"
                                          : "infinitely generated")
            << ", mu=" << report.mu << '\n';
        out << "(I^[q] : I) = (" << to_string(report.colon.symbolic) << ")\n";
        out << "gorenstein=" << (report.gorenstein ? "yes" : "no")
            << " cohen_macaulay=" << (report.cohen_macaulay ? "yes" : "no") << '\n';
        out << "F(E_R): " << presentation_string(report, opt.p) << '\n';
    }
    return 0;
}

int cmd_colon(const CommonOpts& opt, std::ostream& out) {
    MonomialIdeal I = parse_input_ideal(opt);
    ColonPresentation cp = colon_formula(I);

    json gens = json::array();
    for (std::size_t i = 0; i < cp.symbolic.gens.size(); ++i)
        gens.push_back({{"monomial", to_string(cp.symbolic.gens[i])},
                        {"tag", to_string(cp.tags[i])}});
    json doc = {{"schema", kSchemaVersion}, {"n", I.n}, {"generators", gens}};
    if (opt.q != 0) {
        if (opt.q < 2) throw PreconditionError("--q must be >= 2");
        doc["q"] = opt.q;
        doc["instantiated"] = generators_json(instantiate(cp.symbolic, opt.q));
    }
    if (opt.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        out << "(I^[q] : I) = (" << to_string(cp.symbolic) << ")\n";
        for (std::size_t i = 0; i < cp.symbolic.gens.size(); ++i)
            out << "  " << to_string(cp.symbolic.gens[i]) << "  ["
                << to_string(cp.tags[i]) << "]\n";
        if (opt.q != 0)
            out << "at q=" << opt.q << ": ("
                << to_string(instantiate(cp.symbolic, opt.q)) << ")\n";
    }
    return 0;
}

int cmd_decompose(const CommonOpts& opt, std::ostream& out) {
    MonomialIdeal I = parse_input_ideal(opt);
    Decomposition D = primary_decomposition(I);
    HeightProfile hp = height_profile(D);
    json doc = {{"schema", kSchemaVersion},
                {"n", I.n},
                {"components", decomposition_json(D)},
                {"height", hp.height},
                {"pure", hp.pure},
                {"covering", hp.covering}};
    if (opt.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        out << "I = " << doc["components"].dump() << "  height " << hp.height
            << (hp.pure ? " pure" : " mixed") << (hp.covering ? " covering" : "")
            << '\n';
    }
    return 0;
}

int cmd_census(const CommonOpts& opt, std::ostream& out) {
    require_prime_flag(opt.p);
    if (opt.n < 1) throw ParseError("census needs -n");
    std::vector<CensusRow> rows = census(opt.n, opt.p, opt.jobs);
    if (opt.format == "csv") {
        out << "n,height,pg,gor,ig\n";
        for (const CensusRow& r : rows)
            out << r.n << ',' << r.height << ',' << r.pg << ',' << r.gor << ','
                << r.ig << '\n';
    } else if (opt.format == "json") {
        json jrows = json::array();
        for (const CensusRow& r : rows)
            jrows.push_back({{"height", r.height},
                             {"pg", r.pg},
                             {"gor", r.gor},
                             {"ig", r.ig}});
        json doc = {{"schema", kSchemaVersion},
                    {"n", opt.n},
                    {"p", opt.p},
                    {"rows", jrows}};
        out << doc.dump(2) << '\n';
    } else {
        out << "n=" << opt.n << "  p=" << opt.p << '\n';
        out << std::setw(6) << "ht" << std::setw(8) << "p.g." << std::setw(8)
            << "Gor" << std::setw(8) << "i.g." << '\n';
        for (const CensusRow& r : rows)
            out << std::setw(6) << r.height << std::setw(8) << r.pg << std::setw(8)
                << r.gor << std::setw(8) << r.ig << '\n';
    }
    return 0;
}

int cmd_gauge_check(const CommonOpts& opt, std::ostream& out) {
    require_prime_flag(opt.p);
    if (opt.e < 1) throw PreconditionError("-e must be >= 1");
    MonomialIdeal I = parse_input_ideal(opt);
    Ring R{I, opt.p};
    long long q = 1;
    for (int i = 0; i < opt.e; ++i) q *= opt.p;
    auto samples = monomial_samples_below(R, static_cast<int>(2 * q));
    GaugeReport report = check_gauge_bound(R, opt.e, samples);

    json doc = {{"schema", kSchemaVersion},
                {"n", I.n},
                {"p", opt.p},
                {"e", opt.e},
                {"samples", samples.size()},
                {"evaluations", report.evaluations},
                {"zero_results", report.zero_results},
                {"violations", report.violations},
                {"slack_denominator", report.slack_den},
                {"ok", report.ok()}};
    if (report.min_slack_num) doc["min_slack_numerator"] = *report.min_slack_num;
    if (report.max_slack_num) doc["max_slack_numerator"] = *report.max_slack_num;
    if (opt.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        out << "gauge bound delta(psi(r)) <= delta(r)/p^e + 1/p^e: "
            << (report.ok() ? "holds" : "VIOLATED") << " on " << samples.size()
            << " monomials (" << report.evaluations << " evaluations)\n";
        if (report.min_slack_num)
            out << "tightest slack " << *report.min_slack_num << '/'
                << report.slack_den << ", loosest " << *report.max_slack_num << '/'
                << report.slack_den << '\n';
    }
    if (!report.ok())
        throw InternalError("gauge bound violated; this contradicts the bound proof");
    return 0;
}

int cmd_diffops(const CommonOpts& opt, std::ostream& out) {
    require_prime_flag(opt.p);
    if (opt.e < 1) throw PreconditionError("-e must be >= 1");
    MonomialIdeal I = parse_input_ideal(opt);
    Decomposition D = primary_decomposition(I);
    auto gens = cartier_generators(I, opt.p, opt.e);

    json images = json::array();
    for (const CartierGenerator& g : gens) {
        DiffOp op = phi_image(g, opt.p);
        bool all_in = true;
        for (const DiffTerm& t : op.terms)
            if (!in_DR(t.beta, t.alpha, D)) all_in = false;
        images.push_back({{"gamma", to_string(cartier_gamma(g, opt.p))},
                          {"kind", g.kind == CartierKind::principal ? "principal"
                                                                    : "extra"},
                          {"operator", to_string(op)},
                          {"in_DR", all_in}});
    }

    auto witness = non_image_witness(I, opt.p, opt.e);
    json doc = {{"schema", kSchemaVersion},
                {"n", I.n},
                {"p", opt.p},
                {"e", opt.e},
                {"phi_images", images}};
    if (witness) {
        DiffOp op{opt.e, {{1, witness->beta, witness->alpha}}};
        json w = {{"operator", to_string(op)},
                  {"bounded_check_passed", witness->bounded_check_passed}};
        doc["non_image_witness"] = w;
    } else {
        doc["non_image_witness"] = nullptr;
    }
    if (opt.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        out << "Phi_e images at p=" << opt.p << ", e=" << opt.e << ":\n";
        for (const auto& img : images)
            out << "  psi o " << img["gamma"].get<std::string>() << "  ->  "
                << img["operator"].get<std::string>()
                << (img["in_DR"].get<bool>() ? "  [in D_R]" : "  [NOT in D_R]")
                << '\n';
        if (witness)
            out << "bounded non-image witness: "
                << to_string(DiffOp{opt.e, {{1, witness->beta, witness->alpha}}})
                << "  check "
                << (witness->bounded_check_passed ? "passed" : "FAILED") << '\n';
        else
            out << "no non-image witness: every variable lies in every component\n";
    }
    return 0;
}

int cmd_katzman(const CommonOpts& opt, std::ostream& out) {
    require_prime_flag(opt.p);
    if (opt.emax < 1) throw PreconditionError("--emax must be >= 1");
    MonomialIdeal I = parse_input_ideal(opt);
    auto witnesses = verify_infinitely_generated(I, opt.p, opt.emax);

    json levels = json::array();
    for (const KatzmanWitness& w : witnesses) {
        MonomialIdeal L = katzman_L(I, opt.p, w.e);
        levels.push_back({{"e", w.e},
                          {"witness", to_string(w.witness)},
                          {"L", generators_json(L)},
                          {"L_is_zero", L.is_zero()}});
    }
    json doc = {{"schema", kSchemaVersion},
                {"n", I.n},
                {"p", opt.p},
                {"emax", opt.emax},
                {"levels", levels}};
    if (opt.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& lvl : levels) {
            out << "e=" << lvl["e"] << ": witness " << lvl["witness"].get<std::string>();
            if (lvl["L_is_zero"].get<bool>())
                out << " lies outside L_e = (0)\n";
            else
                out << " lies outside L_e (" << lvl["L"].size() << " generators)\n";
        }
        out << "every level 1.." << opt.emax << " contributes a new generator\n";
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Frobenius and Cartier algebra toolkit for Stanley-Reisner rings"};
    app.require_subcommand(1);

    CommonOpts opt;
    auto add_common = [&](CLI::App* cmd, bool needs_ideal) {
        if (needs_ideal)
            cmd->add_option("--ideal", opt.ideal_text,
                            "ideal text, e.g. \"x1*x2, x1*x3\"");
        cmd->add_option("-n", opt.n, "ambient variable count (inferred when omitted)");
        cmd->add_option("--format", opt.format, "json|csv|text");
        return cmd;
    };

    CLI::App* classify_cmd = add_common(
        app.add_subcommand("classify", "generation type of the Frobenius algebra"),
        true);
    classify_cmd->add_option("-p", opt.p, "prime characteristic");
    CLI::App* colon_cmd = add_common(
        app.add_subcommand("colon", "(I^[q] : I) for every q = p^e at once"), true);
    colon_cmd->add_option("--q", opt.q, "instantiate the symbolic colon at q");
    add_common(app.add_subcommand("decompose", "minimal primary decomposition"), true);
    CLI::App* census_cmd = add_common(
        app.add_subcommand("census", "pure-height census up to relabeling"), false);
    census_cmd->add_option("-p", opt.p, "prime characteristic");
    census_cmd->add_option("--jobs", opt.jobs, "parallel classification workers");
    CLI::App* gauge_cmd = add_common(
        app.add_subcommand("gauge-check", "verify the Cartier gauge bound"), true);
    gauge_cmd->add_option("-p", opt.p, "prime characteristic");
    gauge_cmd->add_option("-e", opt.e, "Frobenius level");
    CLI::App* diff_cmd = add_common(
        app.add_subcommand("diffops", "pairing images and non-image witnesses"), true);
    diff_cmd->add_option("-p", opt.p, "prime characteristic");
    diff_cmd->add_option("-e", opt.e, "Frobenius level");
    CLI::App* katz_cmd = add_common(
        app.add_subcommand("katzman", "certify infinite generation level by level"),
        true);
    katz_cmd->add_option("-p", opt.p, "prime characteristic");
    katz_cmd->add_option("--emax", opt.emax, "verify levels 1..emax");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        check_format(opt, app.got_subcommand("census"));
        if (app.got_subcommand("classify")) return cmd_classify(opt, out);
        if (app.got_subcommand("colon")) return cmd_colon(opt, out);
        if (app.got_subcommand("decompose")) return cmd_decompose(opt, out);
        if (app.got_subcommand("census")) return cmd_census(opt, out);
        if (app.got_subcommand("gauge-check")) return cmd_gauge_check(opt, out);
        if (app.got_subcommand("diffops")) return cmd_diffops(opt, out);
        if (app.got_subcommand("katzman")) return cmd_katzman(opt, out);
        err << "error: unknown subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return 3;
    } catch (const InternalError& e) {
        err << "internal invariant failure: " << e.what() << '\n';
        return 4;
    }
}

}  // namespace frobalg
