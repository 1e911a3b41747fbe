#pragma once

// Subcommand front end. Exit status: 0 success, 1 a verification failed,
// 2 bad usage or invalid input.

#include "CLI11.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dmod/clifford_module.hpp"
#include "dmod/families.hpp"
#include "dmod/formal_sum.hpp"
#include "dmod/harness.hpp"
#include "dmod/hecke_module.hpp"
#include "dmod/io.hpp"

namespace dmod::cli {

enum class Format { Text, Structured, Latex };

struct Options {
    std::string family;
    std::string shape;
    std::string sigma;
    std::string sum;
    std::string format = "text";
    std::string convention;
    int k = 3;
    int n = 8;
    bool relations = false;
    bool quotients = false;
    bool cyclic = false;
    bool clifford = false;
    bool no_relations = false;
    bool check_symmetric = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Format parse_format(const std::string& f) {
    if (f == "text") return Format::Text;
    if (f == "structured") return Format::Structured;
    if (f == "latex") return Format::Latex;
    throw UsageError("unknown format '" + f + "'");
}

inline TableauFamily family_from(const Options& o) {
    if (o.family.empty()) throw UsageError("--family is required");
    if (o.shape.empty()) throw UsageError("--shape is required");
    const FamilyKind kind = parse_family_kind(o.family, !o.sigma.empty());
    const std::vector<int> sigma = o.sigma.empty() ? std::vector<int>{} : parse_int_list(o.sigma);
    return build_family(kind, parse_composition(o.shape), sigma);
}

inline FamilyKind kind_from(const Options& o) { return parse_family_kind(o.family, !o.sigma.empty()); }

inline void print_sum(std::ostream& out, const FormalSum& s, Format f) {
    switch (f) {
        case Format::Text: out << to_text(s) << '\n'; break;
        case Format::Structured: out << io::to_json(s).dump() << '\n'; break;
        case Format::Latex: out << to_latex(s) << '\n'; break;
    }
}

inline std::string latex_tableau(const StandardTableau& t) {
    const auto& d = *t.diagram();
    std::ostringstream os;
    os << "\\begin{array}{" << std::string(static_cast<std::size_t>(d.max_column()), 'c') << "}\n";
    for (int r = d.max_row(); r >= 1; --r) {
        for (int c = 1; c <= d.max_column(); ++c) {
            if (c > 1) os << " & ";
            if (int e = t.entry_at({c, r})) os << e;
        }
        os << (r > 1 ? " \\\\\n" : "\n");
    }
    os << "\\end{array}";
    return os.str();
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto fam = family_from(o);
    const Format f = parse_format(o.format);
    for (std::size_t k = 0; k < fam.size(); ++k) {
        const auto& t = fam[k];
        switch (f) {
            case Format::Structured: out << io::to_json(t, fam.tag()).dump() << '\n'; break;
            case Format::Latex: out << "% Des = " << to_string(descent_set(t)) << '\n' << latex_tableau(t) << '\n'; break;
            case Format::Text:
                out << "#" << k + 1 << "  word " << word_string(t.word()) << "  Des " << to_string(descent_set(t)) << "  Peak "
                    << to_string(peak_set(t)) << '\n'
                    << render_ascii(t) << '\n';
                break;
        }
    }
    if (f == Format::Text) out << fam.size() << " tableaux in " << fam.tag() << '\n';
    return 0;
}

inline FormalSum sum_from(const Options& o, Basis fallback) {
    if (!o.sum.empty()) return parse_formal_sum(o.sum, fallback, 0);
    if (!o.shape.empty()) return FormalSum::single(fallback, parse_composition(o.shape));
    throw UsageError("--sum or --shape is required");
}

inline int cmd_expand_k(const Options& o, std::ostream& out) {
    auto s = sum_from(o, Basis::Peak);
    if (s.basis() != Basis::Peak) throw domain_error("expand-K expects a K-basis sum");
    print_sum(out, peak_to_fundamental(s), parse_format(o.format));
    return 0;
}

inline int cmd_theta(const Options& o, std::ostream& out) {
    auto s = o.family.empty() ? sum_from(o, Basis::Fundamental) : qsym_characteristic(family_from(o));
    print_sum(out, theta(s), parse_format(o.format));
    return 0;
}

inline int cmd_truncate(const Options& o, std::ostream& out) {
    const FormalSum s = o.family.empty() ? sum_from(o, Basis::Peak) : peak_characteristic(family_from(o));
    auto p = evaluate_truncated(s, o.k);
    const Format f = parse_format(o.format);
    if (f == Format::Structured) {
        io::json terms = io::json::array();
        for (const auto& [exps, c] : p.terms) terms.push_back({{"exponents", exps}, {"coefficient", to_string(c)}});
        io::json j{{"type", "polynomial"}, {"variables", p.variables}, {"terms", terms}};
        if (o.check_symmetric) j["symmetric"] = is_symmetric(p);
        out << j.dump() << '\n';
    } else {
        out << to_text(p) << '\n';
        if (o.check_symmetric) out << (is_symmetric(p) ? "symmetric" : "not symmetric") << '\n';
    }
    return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    auto family = std::make_shared<const TableauFamily>(family_from(o));
    const bool all = !o.relations && !o.quotients && !o.cyclic;
    const Convention conv = convention_of(kind_from(o));
    bool ok = true;
    out << family->tag() << ": " << family->size() << " tableaux\n";

    auto gate = conv == Convention::Pi ? is_ascent_compatible(*family) : is_descent_compatible(*family);
    if (!gate) {
        const auto& w = *gate.witness;
        out << (conv == Convention::Pi ? "not ascent-compatible" : "not descent-compatible") << ": positions (" << w.positions.r
            << "," << w.positions.s << ") attacking in " << word_string((*family)[w.attacking].word()) << ", nonattacking in "
            << word_string((*family)[w.nonattacking].word()) << '\n';
        return 1;
    }
    const bool super = bool(is_ascent_compatible(*family));
    if (o.relations || all) {
        auto rep = build_hecke_module(family, conv);
        auto report = verify_hecke_relations(rep);
        out << "hecke (" << io::convention_name(conv) << ", dim " << rep.dim() << "): " << report.summary() << '\n';
        ok = ok && report.ok();
        if (super) {
            auto crep = build_clifford_module(family);
            auto creport = verify_clifford_relations(crep);
            out << "clifford (dim " << crep.dim() << "): " << creport.summary() << '\n';
            ok = ok && creport.ok();
        } else {
            out << "clifford: not built, family is not ascent-compatible\n";
        }
    }
    if ((o.quotients || all) && super) {
        auto crep = build_clifford_module(family);
        std::size_t good = 0;
        for (std::size_t k = 1; k <= crep.blocks(); ++k) good += filtration_quotient_check(crep, k);
        out << "filtration quotients: " << good << "/" << crep.blocks() << " match M_alpha\n";
        ok = ok && good == crep.blocks();
    }
    if (o.cyclic || all) {
        if (!super) {
            out << "cyclicity: not applicable, family is not ascent-compatible\n";
        } else {
            auto crep = build_clifford_module(family);
            const FamilyKind kind = kind_from(o);
            const StandardTableau seed = kind == FamilyKind::SPCT ? source_tableau(parse_composition(o.shape)) : crep.basis_tableau(0);
            const bool cyc = is_tableau_cyclic(crep, seed);
            out << "tableau-cyclic from " << word_string(seed.word()) << ": " << (cyc ? "yes" : "no") << '\n';
            if (o.cyclic && kind == FamilyKind::SPCT) ok = ok && cyc;
        }
    }
    out << (ok ? "OK" : "FAILED") << '\n';
    return ok ? 0 : 1;
}

inline int cmd_harness(const Options& o, std::ostream& out) {
    const Format f = parse_format(o.format);
    auto records = run_harness(harness_jobs({o.n, !o.no_relations}));
    bool ok = true;
    for (const auto& r : records) ok = ok && r.verdict;
    if (f == Format::Structured) {
        for (const auto& r : records) out << to_json(r).dump() << '\n';
    } else {
        print_harness_table(out, records);
        out << records.size() << " checks, " << (ok ? "all passed" : "FAILURES") << '\n';
    }
    return ok ? 0 : 1;
}

inline int cmd_dump(const Options& o, std::ostream& out) {
    auto family = std::make_shared<const TableauFamily>(family_from(o));
    if (o.clifford) {
        io::dump_matrices(out, build_clifford_module(family));
        return 0;
    }
    Convention conv = convention_of(kind_from(o));
    if (o.convention == "pi") conv = Convention::Pi;
    else if (o.convention == "pi_hat") conv = Convention::PiHat;
    else if (!o.convention.empty()) throw UsageError("unknown convention '" + o.convention + "'");
    io::dump_matrices(out, build_hecke_module(family, conv));
    return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Diagram modules for 0-Hecke and 0-Hecke-Clifford algebras", "dmod"};
    app.require_subcommand(1);
    Options o;

    auto family_opts = [&o](CLI::App* sub) {
        sub->add_option("--family", o.family, "family name: spct syct spyct ssht syt sit srit set sret srct syrt rib");
        sub->add_option("--shape", o.shape, "composition, e.g. 3,3,1");
        sub->add_option("--sigma", o.sigma, "permutation of the rows (srct, syrt, syct)");
    };
    auto format_opt = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "text, structured or latex")->check(CLI::IsMember({"text", "structured", "latex"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "list the tableaux of a family");
    family_opts(enumerate);
    format_opt(enumerate);
    auto* characteristic = app.add_subcommand("characteristic", "F-expansion of the 0-Hecke characteristic");
    family_opts(characteristic);
    format_opt(characteristic);
    auto* peak = app.add_subcommand("peak-characteristic", "K-expansion of the supermodule characteristic");
    family_opts(peak);
    format_opt(peak);
    auto* expand = app.add_subcommand("expand-K", "expand K-basis sums in the F basis");
    expand->add_option("--sum", o.sum, "sum such as \"K[2,1] + 2*K[3]\"");
    expand->add_option("--shape", o.shape, "single K_alpha");
    format_opt(expand);
    auto* th = app.add_subcommand("theta", "apply F_alpha -> K_{Peak(alpha)}");
    th->add_option("--sum", o.sum, "F-basis sum");
    th->add_option("--shape", o.shape, "single F_alpha, or the family shape with --family");
    th->add_option("--family", o.family, "use the characteristic of this family");
    th->add_option("--sigma", o.sigma, "row permutation for the family");
    format_opt(th);
    auto* trunc = app.add_subcommand("truncate", "evaluate in finitely many variables");
    trunc->add_option("--sum", o.sum, "F or K sum");
    trunc->add_option("--shape", o.shape, "single K_alpha, or the family shape with --family");
    trunc->add_option("--family", o.family, "use the peak characteristic of this family");
    trunc->add_option("--sigma", o.sigma, "row permutation for the family");
    trunc->add_option("--k", o.k, "number of variables")->check(CLI::Range(1, 12));
    trunc->add_flag("--check-symmetric", o.check_symmetric, "report whether the result is symmetric");
    format_opt(trunc);
    auto* verify = app.add_subcommand("verify", "check module relations for a family");
    family_opts(verify);
    verify->add_flag("--relations", o.relations, "0-Hecke and Clifford relations");
    verify->add_flag("--quotients", o.quotients, "filtration quotients against M_alpha");
    verify->add_flag("--cyclic", o.cyclic, "tableau-cyclicity");
    auto* harness = app.add_subcommand("harness", "run the batch of structural checks");
    harness->add_option("--n", o.n, "size cap for every check")->check(CLI::Range(1, 8));
    harness->add_flag("--no-relations", o.no_relations, "skip the per-family relation sweep");
    format_opt(harness);
    auto* dump = app.add_subcommand("dump-matrices", "print generator matrices as records");
    family_opts(dump);
    dump->add_flag("--clifford", o.clifford, "dump the supermodule instead");
    dump->add_option("--convention", o.convention, "pi or pi_hat");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (characteristic->parsed()) {
            print_sum(out, qsym_characteristic(family_from(o)), parse_format(o.format));
            return 0;
        }
        if (peak->parsed()) {
            print_sum(out, peak_characteristic(family_from(o)), parse_format(o.format));
            return 0;
        }
        if (expand->parsed()) return cmd_expand_k(o, out);
        if (th->parsed()) return cmd_theta(o, out);
        if (trunc->parsed()) return cmd_truncate(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (harness->parsed()) return cmd_harness(o, out);
        if (dump->parsed()) return cmd_dump(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace dmod::cli
