#pragma once

// 0-Hecke modules on the span of a tableau family, as explicit matrices of
// the generators pi_1..pi_{n-1} (or pi_i + 1 in the hat convention).

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "dmod/families.hpp"
#include "dmod/formal_sum.hpp"
#include "dmod/operator_matrix.hpp"
#include "dmod/parallel.hpp"
#include "dmod/tableau.hpp"

namespace dmod {

/// Thrown when a family fails the compatibility condition its convention needs.
class CompatibilityError : public domain_error {
public:
    CompatibilityError(const std::string& what, CompatibilityWitness witness)
        : domain_error(what), witness_(witness) {}
    const CompatibilityWitness& witness() const noexcept { return witness_; }

private:
    CompatibilityWitness witness_;
};

using FamilyPtr = std::shared_ptr<const TableauFamily>;

/// Family indices sorted by inversion count of the reading word, largest
/// first, ties broken by the reading word.
inline std::vector<std::size_t> filtration_order(const TableauFamily& family) {
    std::vector<std::size_t> order(family.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<int> inv(family.size());
    for (std::size_t k = 0; k < family.size(); ++k) inv[k] = inversions(family[k].word());
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (inv[a] != inv[b]) return inv[a] > inv[b];
        return family[a].word() < family[b].word();
    });
    return order;
}

struct HeckeModuleRep {
    FamilyPtr family;
    Convention convention = Convention::Pi;
    std::vector<std::size_t> basis;     // basis position -> family index
    std::vector<std::size_t> position;  // family index -> basis position
    std::vector<OperatorMatrix> pi;     // pi[i-1] acts as generator i

    int n() const { return family->n(); }
    std::size_t dim() const { return basis.size(); }
    const StandardTableau& basis_tableau(std::size_t k) const { return (*family)[basis.at(k)]; }
    const OperatorMatrix& generator(int i) const { return pi.at(static_cast<std::size_t>(i - 1)); }
};

inline void require_compatible(const TableauFamily& family, Convention convention) {
    auto result = convention == Convention::Pi ? is_ascent_compatible(family) : is_descent_compatible(family);
    if (result) return;
    const auto& w = *result.witness;
    std::ostringstream os;
    os << family.tag() << " is not " << (convention == Convention::Pi ? "ascent" : "descent")
       << "-compatible: positions (" << w.positions.r << "," << w.positions.s << ") attack in "
       << word_string(family[w.attacking].word()) << " but not in " << word_string(family[w.nonattacking].word());
    throw CompatibilityError(os.str(), w);
}

/// `force` skips the compatibility gate; it exists only to exhibit relation
/// failures on families that are not compatible.
inline HeckeModuleRep build_hecke_module(FamilyPtr family, Convention convention, bool force = false) {
    if (!force) require_compatible(*family, convention);
    HeckeModuleRep rep;
    rep.family = family;
    rep.convention = convention;
    rep.basis = filtration_order(*family);
    rep.position.assign(family->size(), 0);
    for (std::size_t k = 0; k < rep.basis.size(); ++k) rep.position[rep.basis[k]] = k;
    const int n = family->n();
    for (int i = 1; i < n; ++i) {
        OperatorMatrix m(rep.dim());
        for (std::size_t col = 0; col < rep.dim(); ++col) {
            const auto& t = rep.basis_tableau(col);
            const bool descent = is_descent(t, i);
            // the case that acts diagonally: descent for pi, ascent for the hat generators
            const bool scalar_case = convention == Convention::Pi ? descent : !descent;
            if (scalar_case) {
                m.add(col, col, convention == Convention::Pi ? -1 : 1);
                continue;
            }
            auto swapped = t.swapped(i);
            if (auto idx = family->index_of(swapped.word())) m.add(rep.position[*idx], col, 1);
        }
        rep.pi.push_back(std::move(m));
    }
    return rep;
}

inline HeckeModuleRep build_hecke_module(const TableauFamily& family, Convention convention, bool force = false) {
    return build_hecke_module(std::make_shared<const TableauFamily>(family), convention, force);
}

struct RelationViolation {
    std::string relation;
    std::vector<int> indices;

    std::string describe() const {
        std::string out = relation + " [";
        for (std::size_t k = 0; k < indices.size(); ++k) out += (k ? "," : "") + std::to_string(indices[k]);
        return out + "]";
    }
};

struct RelationReport {
    std::size_t checked = 0;
    std::vector<RelationViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
    void merge(const RelationReport& other) {
        checked += other.checked;
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    std::string summary() const {
        std::ostringstream os;
        os << checked << " relations checked, " << violations.size() << " violated";
        for (const auto& v : violations) os << "\n  " << v.describe();
        return os.str();
    }
};

namespace detail {

struct RelationJob {
    std::string name;
    std::vector<int> indices;
    std::function<bool()> holds;
};

inline RelationReport run_relation_jobs(const std::vector<RelationJob>& jobs) {
    auto results = parallel_map<char>(jobs.size(), [&](std::size_t k) -> char { return jobs[k].holds() ? 1 : 0; });
    RelationReport report;
    report.checked = jobs.size();
    for (std::size_t k = 0; k < jobs.size(); ++k)
        if (!results[k]) report.violations.push_back({jobs[k].name, jobs[k].indices});
    return report;
}

inline void append_hecke_jobs(const std::vector<OperatorMatrix>& pi, Convention convention, std::vector<RelationJob>& jobs) {
    const int gens = static_cast<int>(pi.size());
    auto P = [&pi](int i) -> const OperatorMatrix& { return pi[static_cast<std::size_t>(i - 1)]; };
    for (int i = 1; i <= gens; ++i) {
        if (convention == Convention::Pi)
            jobs.push_back({"pi_i^2 = -pi_i", {i}, [=] { return P(i) * P(i) == -P(i); }});
        else
            jobs.push_back({"pihat_i^2 = pihat_i", {i}, [=] { return P(i) * P(i) == P(i); }});
    }
    for (int i = 1; i <= gens; ++i)
        for (int j = i + 2; j <= gens; ++j)
            jobs.push_back({"pi_i pi_j = pi_j pi_i", {i, j}, [=] { return P(i) * P(j) == P(j) * P(i); }});
    for (int i = 1; i + 1 <= gens; ++i)
        jobs.push_back({"pi_i pi_i+1 pi_i = pi_i+1 pi_i pi_i+1", {i, i + 1},
                        [=] { return P(i) * P(i + 1) * P(i) == P(i + 1) * P(i) * P(i + 1); }});
}

}  // namespace detail

/// Quadratic, commutation and braid relations for a list of generator matrices.
inline RelationReport verify_hecke_relations(const std::vector<OperatorMatrix>& pi, Convention convention) {
    std::vector<detail::RelationJob> jobs;
    detail::append_hecke_jobs(pi, convention, jobs);
    return detail::run_relation_jobs(jobs);
}

inline RelationReport verify_hecke_relations(const HeckeModuleRep& rep) {
    return verify_hecke_relations(rep.pi, rep.convention);
}

/// Sum of F_{comp(Des T)} over the family.
inline FormalSum qsym_characteristic(const TableauFamily& family) {
    FormalSum out(Basis::Fundamental, family.n());
    for (const auto& t : family.members()) out.add_term(comp_n(descent_set(t), family.n()), 1);
    return out;
}

inline FormalSum qsym_characteristic(const HeckeModuleRep& rep) { return qsym_characteristic(*rep.family); }

/// Sum of K_{comp(Peak(Des T))} over the family.
inline FormalSum peak_characteristic(const TableauFamily& family) {
    FormalSum out(Basis::Peak, family.n());
    for (const auto& t : family.members()) out.add_term(comp_n(peak_set(t), family.n()), 1);
    return out;
}

/// Family indices reachable from `seed` through single generator images.
inline std::vector<std::size_t> reachability_closure(const HeckeModuleRep& rep, const StandardTableau& seed) {
    const std::size_t start = rep.position[rep.family->require_member(seed)];
    std::vector<bool> seen(rep.dim(), false);
    std::queue<std::size_t> todo;
    seen[start] = true;
    todo.push(start);
    while (!todo.empty()) {
        std::size_t col = todo.front();
        todo.pop();
        for (const auto& m : rep.pi)
            for (const auto& [row, v] : m.column(col))
                if (!seen[row]) {
                    seen[row] = true;
                    todo.push(row);
                }
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < rep.dim(); ++k)
        if (seen[k]) out.push_back(rep.basis[k]);
    std::sort(out.begin(), out.end());
    return out;
}

/// Diagonal entries are -1 (pi) or 1 (hat), and every off-diagonal
/// entry is a +1 sending a basis element to one of strictly more inversions
/// (pi, an earlier basis position) or strictly fewer (hat, a later one).
inline bool is_filtration_triangular(const HeckeModuleRep& rep) {
    for (const auto& m : rep.pi)
        for (std::size_t col = 0; col < rep.dim(); ++col)
            for (const auto& [row, v] : m.column(col)) {
                if (row == col) {
                    if (rep.convention == Convention::Pi ? v != -1 : v != 1) return false;
                    continue;
                }
                if (v != 1) return false;
                const int from = inversions(rep.basis_tableau(col).word());
                const int to = inversions(rep.basis_tableau(row).word());
                if (rep.convention == Convention::Pi ? !(row < col && to > from) : !(row > col && to < from))
                    return false;
            }
    return true;
}

}  // namespace dmod
