#pragma once

// Batch runner for the structural checks. Every check is an independent job;
// jobs run on the worker pool and records come back in job order.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dmod/clifford_module.hpp"
#include "dmod/families.hpp"
#include "dmod/hecke_module.hpp"
#include "dmod/io.hpp"
#include "dmod/parallel.hpp"
#include "dmod/theorems.hpp"

namespace dmod {

/// Every valid (shape, sigma) for a kind with |shape| = n.
inline std::vector<std::pair<Composition, std::vector<int>>> shapes_for(FamilyKind kind, int n) {
    std::vector<std::pair<Composition, std::vector<int>>> out;
    for (const auto& alpha : enumerate_compositions(n)) {
        try {
            validate_shape(kind, alpha, uses_sigma(kind) ? detail::identity_sigma(alpha.length()) : std::vector<int>{});
        } catch (const domain_error&) {
            continue;
        }
        if (!uses_sigma(kind)) {
            out.push_back({alpha, {}});
            continue;
        }
        auto sigma = detail::identity_sigma(alpha.length());
        do out.push_back({alpha, sigma});
        while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return out;
}

/// Relation and quotient checks for one family.
struct FamilyCheck {
    std::string tag;
    std::size_t members = 0;
    bool empty = false;
    bool native_compatible = false;     // ascent- (pi) or descent- (hat) compatible
    bool hecke_ok = false;              // relations of the native-convention module
    bool triangular = false;
    bool ascent_compatible = false;     // whether the supermodule can be built
    bool clifford_ok = false;           // relations of the supermodule (when built)
    bool quotients_ok = false;          // filtration quotients (when built)
    bool theta_ok = false;
    std::size_t clifford_dim = 0;

    /// The native module and, when it exists, the supermodule pass every check.
    bool ok() const {
        if (empty) return true;
        if (!native_compatible || !hecke_ok || !triangular || !theta_ok) return false;
        return !ascent_compatible || (clifford_ok && quotients_ok);
    }
};

inline FamilyCheck check_family(FamilyKind kind, const Composition& shape, const std::vector<int>& sigma = {},
                                bool with_quotients = true) {
    FamilyCheck out;
    out.tag = family_tag(kind, shape, sigma);
    auto built = try_build_family(kind, shape, sigma);
    if (!built) {
        out.empty = true;
        return out;
    }
    auto family = std::make_shared<const TableauFamily>(std::move(*built));
    out.members = family->size();
    const Convention conv = convention_of(kind);
    out.native_compatible = conv == Convention::Pi ? bool(is_ascent_compatible(*family)) : bool(is_descent_compatible(*family));
    if (out.native_compatible) {
        auto rep = build_hecke_module(family, conv);
        out.hecke_ok = verify_hecke_relations(rep).ok();
        out.triangular = is_filtration_triangular(rep);
    }
    out.theta_ok = theta(qsym_characteristic(*family)) == peak_characteristic(*family);
    out.ascent_compatible = conv == Convention::Pi ? out.native_compatible : bool(is_ascent_compatible(*family));
    if (out.ascent_compatible) {
        auto rep = build_clifford_module(family);
        out.clifford_dim = rep.dim();
        out.clifford_ok = verify_clifford_relations(rep).ok();
        out.quotients_ok = true;
        if (with_quotients)
            for (std::size_t k = 1; k <= rep.blocks() && out.quotients_ok; ++k)
                out.quotients_ok = filtration_quotient_check(rep, k);
    }
    return out;
}

struct HarnessRecord {
    std::string theorem;
    std::string shape;
    bool verdict = false;
    std::string dims;
    double elapsed_ms = 0;
};

struct HarnessJob {
    std::string theorem;
    std::string shape;
    std::function<std::pair<bool, std::string>()> run;
};

struct HarnessOptions {
    int max_n = 8;   // caps the size bound of every check
    bool relations = true;
};

inline std::vector<HarnessJob> harness_jobs(const HarnessOptions& opt) {
    std::vector<HarnessJob> jobs;
    auto bound = [&](int preferred) { return std::min(preferred, opt.max_n); };

    if (opt.relations)
        for (FamilyKind kind : all_family_kinds)
            for (int n = 1; n <= bound(6); ++n)
                jobs.push_back({"relations", std::string(family_name(kind)) + " n=" + std::to_string(n), [kind, n] {
                                    std::size_t families = 0, failures = 0;
                                    for (const auto& [shape, sigma] : shapes_for(kind, n)) {
                                        auto c = check_family(kind, shape, sigma);
                                        ++families;
                                        if (!c.ok()) ++failures;
                                    }
                                    return std::pair{failures == 0, std::to_string(families) + " families"};
                                }});

    for (int n = 1; n <= bound(7); ++n)
        for (const auto& lambda : enumerate_strict_partitions(n))
            jobs.push_back({"rect-isomorphism", to_string(lambda), [lambda] {
                                auto r = check_rect_isomorphism(lambda);
                                return std::pair{r.ok(), "dim " + std::to_string(r.dim)};
                            }});

    for (int n = 1; n <= bound(8); ++n)
        for (const auto& lambda : enumerate_strict_partitions(n))
            jobs.push_back({"schurQ-inclusion", to_string(lambda), [lambda] {
                                return std::pair{check_schurQ_inclusion(lambda), std::string("-")};
                            }});

    for (int n = 1; n <= bound(8); ++n)
        jobs.push_back({"unitriangularity", "n=" + std::to_string(n), [n] {
                            auto m = transition_to_peak_basis(n);
                            return std::pair{m.unitriangular(), std::to_string(m.index.size()) + "x" + std::to_string(m.index.size())};
                        }});

    for (int n = 1; n <= bound(7); ++n)
        for (const auto& alpha : enumerate_peak_compositions(n))
            jobs.push_back({"positivity", to_string(alpha), [alpha] {
                                return std::pair{check_Q_minus_S_positivity(alpha), std::string("-")};
                            }});

    for (int n = 1; n <= bound(6); ++n)
        for (const auto& alpha : enumerate_peak_compositions(n))
            jobs.push_back({"tableau-cyclicity", to_string(alpha), [alpha] {
                                auto rep = build_clifford_module(build_family(FamilyKind::SPCT, alpha));
                                return std::pair{is_tableau_cyclic(rep, source_tableau(alpha)), "dim " + std::to_string(rep.dim())};
                            }});

    for (int n = 1; n <= bound(6); ++n)
        for (const auto& lambda : enumerate_strict_partitions(n))
            jobs.push_back({"symmetry", to_string(lambda), [lambda] {
                                return std::pair{is_symmetric(evaluate_truncated(schur_Q(lambda), 3)), std::string("k=3")};
                            }});

    jobs.push_back({"weak-order-criterion", "S_" + std::to_string(bound(5)), [n = bound(5)] {
                        auto perms = all_permutations(n);
                        bool agree = true;
                        for (const auto& g : perms)
                            for (const auto& r : perms)
                                if (weak_leq_by_closure(g, r) != weak_leq_by_ascent_pairs(g, r)) agree = false;
                        return std::pair{agree, std::to_string(perms.size() * perms.size()) + " pairs"};
                    }});

    jobs.push_back({"interval-modules", "S_" + std::to_string(bound(4)), [n = bound(4)] {
                        auto perms = all_permutations(n);
                        std::size_t count = 0;
                        bool ok = true;
                        for (const auto& s : perms)
                            for (const auto& r : perms) {
                                if (!weak_leq_by_closure(s, r)) continue;
                                ++count;
                                auto m = build_interval_modules(weak_bruhat_interval(s, r));
                                ok = ok && m.bar_b_matches && m.b_matches;
                            }
                        return std::pair{ok, std::to_string(count) + " intervals"};
                    }});

    jobs.push_back({"generalization-witness", "S_3", [] {
                        auto w = generalization_witness();
                        return std::pair{w.verdict == "not isomorphic to any weak Bruhat interval module", w.verdict};
                    }});
    return jobs;
}

inline std::vector<HarnessRecord> run_harness(const std::vector<HarnessJob>& jobs) {
    return parallel_map<HarnessRecord>(jobs.size(), [&](std::size_t k) {
        const auto start = std::chrono::steady_clock::now();
        HarnessRecord rec{jobs[k].theorem, jobs[k].shape, false, "", 0};
        try {
            auto [ok, dims] = jobs[k].run();
            rec.verdict = ok;
            rec.dims = dims;
        } catch (const std::exception& e) {
            rec.dims = std::string("error: ") + e.what();
        }
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return rec;
    });
}

inline io::json to_json(const HarnessRecord& r) {
    return {{"type", "check"},
            {"theorem", r.theorem},
            {"shape", r.shape},
            {"verdict", r.verdict ? "pass" : "fail"},
            {"dims", r.dims},
            {"elapsed_ms", std::round(r.elapsed_ms * 1000) / 1000}};
}

inline void print_harness_table(std::ostream& out, const std::vector<HarnessRecord>& records) {
    std::size_t w1 = 7, w2 = 5, w3 = 4;
    for (const auto& r : records) {
        w1 = std::max(w1, r.theorem.size());
        w2 = std::max(w2, r.shape.size());
        w3 = std::max(w3, r.dims.size());
    }
    auto row = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d, const std::string& e) {
        out << std::left << std::setw(static_cast<int>(w1)) << a << "  " << std::setw(static_cast<int>(w2)) << b << "  "
            << std::setw(7) << c << "  " << std::setw(static_cast<int>(w3)) << d << "  " << e << '\n';
    };
    row("theorem", "shape", "verdict", "dims", "elapsed");
    for (const auto& r : records) {
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms";
        row(r.theorem, r.shape, r.verdict ? "pass" : "FAIL", r.dims, ms.str());
    }
}

}  // namespace dmod
