#pragma once

// 0-Hecke-Clifford supermodules on marked tableaux c_X T, the 2^n-dimensional
// supermodules M_alpha, and checks relating the two.
//
// Basis index of c_X T is (position of T) * 2^n + mask(X), where bit j-1 of
// the mask records j in X and c_X = c_{i_1} ... c_{i_k} with i_1 < ... < i_k.

#include <bit>
#include <cstdint>
#include <memory>
#include <queue>
#include <vector>

#include "dmod/hecke_module.hpp"

namespace dmod {

using Mask = std::uint32_t;

inline Mask mask_of(const IntSet& x, int n) {
    Mask m = 0;
    for (int j : x) {
        if (j > n) throw domain_error("marked entry exceeds n");
        m |= Mask{1} << (j - 1);
    }
    return m;
}

inline IntSet set_of(Mask m) {
    std::vector<int> out;
    for (int j = 1; m; ++j, m >>= 1)
        if (m & 1u) out.push_back(j);
    return IntSet(std::move(out));
}

inline bool has_mark(Mask m, int j) { return (m >> (j - 1)) & 1u; }

/// Number of marks strictly smaller than j.
inline int marks_below(Mask m, int j) { return std::popcount(m & ((Mask{1} << (j - 1)) - 1)); }

struct MarkedTableau {
    StandardTableau tableau;
    IntSet marks;
};

/// One term of an image: coefficient times c_{mask} applied to either the
/// tableau itself or its s_i-swap.
struct MarkedTerm {
    Mask mask;
    bool swapped;
    std::int64_t coefficient;
};

/// How generator i sees a basis tableau (or v_alpha).
enum class ActionCase { Descent, AttackingAscent, NonattackingAscent };

/// pi_i(c_X T) as a list of marked terms.
inline std::vector<MarkedTerm> pi_on_marked(int i, Mask x, ActionCase kind) {
    const Mask bi = Mask{1} << (i - 1), bj = Mask{1} << i;
    const bool a = x & bi, b = x & bj;
    const Mask move_up = (x & ~bi) | bj;    // X - i + (i+1)
    const Mask move_down = (x & ~bj) | bi;  // X - (i+1) + i
    const Mask drop_both = x & ~(bi | bj);
    switch (kind) {
        case ActionCase::Descent:
            if (!a && !b) return {{x, false, -1}};
            if (a && !b) return {{move_up, false, -1}};
            if (!a && b) return {{x, false, -1}};
            return {{drop_both, false, 1}};
        case ActionCase::AttackingAscent:
            if (!b) return {};
            if (!a) return {{x, false, -1}, {move_down, false, 1}};
            return {{x, false, -1}, {drop_both, false, 1}};
        case ActionCase::NonattackingAscent:
            if (!a && !b) return {{x, true, 1}};
            if (a && !b) return {{move_up, true, 1}};
            if (!a && b) return {{x, false, -1}, {move_down, false, 1}, {move_down, true, 1}};
            return {{x, false, -1}, {drop_both, false, 1}, {x, true, -1}};
    }
    return {};
}

/// c_j(c_X T) as (mask, sign): c_j moves past the marks below j, and c_j^2 = -1.
inline std::pair<Mask, std::int64_t> c_on_marked(int j, Mask x) {
    std::int64_t sign = marks_below(x, j) % 2 ? -1 : 1;
    if (has_mark(x, j)) sign = -sign;
    return {x ^ (Mask{1} << (j - 1)), sign};
}

struct CliffordModuleRep {
    FamilyPtr family;
    std::vector<std::size_t> basis;     // tableau position -> family index
    std::vector<std::size_t> position;  // family index -> tableau position
    int n = 0;
    std::vector<OperatorMatrix> pi;  // pi[i-1]
    std::vector<OperatorMatrix> c;   // c[j-1]

    std::size_t blocks() const { return basis.size(); }
    std::size_t block_size() const { return std::size_t{1} << n; }
    std::size_t dim() const { return blocks() * block_size(); }
    std::size_t index(std::size_t tableau_position, Mask x) const { return tableau_position * block_size() + x; }
    int parity(std::size_t k) const { return std::popcount(static_cast<Mask>(k % block_size())) % 2; }
    const StandardTableau& basis_tableau(std::size_t tableau_position) const { return (*family)[basis.at(tableau_position)]; }
    MarkedTableau basis_element(std::size_t k) const {
        return {basis_tableau(k / block_size()), set_of(static_cast<Mask>(k % block_size()))};
    }
    std::size_t index_of(const MarkedTableau& m) const {
        return index(position.at(family->require_member(m.tableau)), mask_of(m.marks, n));
    }
};

inline constexpr int max_clifford_n = 20;

inline std::vector<OperatorMatrix> clifford_generators(std::size_t blocks, int n) {
    const std::size_t bs = std::size_t{1} << n;
    std::vector<OperatorMatrix> c;
    for (int j = 1; j <= n; ++j) {
        OperatorMatrix m(blocks * bs);
        for (std::size_t t = 0; t < blocks; ++t)
            for (Mask x = 0; x < bs; ++x) {
                auto [y, sign] = c_on_marked(j, x);
                m.set_column(t * bs + x, {{t * bs + y, sign}});
            }
        c.push_back(std::move(m));
    }
    return c;
}

/// `force` skips the ascent-compatibility gate (relations may then fail).
inline CliffordModuleRep build_clifford_module(FamilyPtr family, bool force = false) {
    if (!force) require_compatible(*family, Convention::Pi);
    const int n = family->n();
    if (n > max_clifford_n) throw domain_error("supermodule too large");
    CliffordModuleRep rep;
    rep.family = family;
    rep.n = n;
    rep.basis = filtration_order(*family);
    rep.position.assign(family->size(), 0);
    for (std::size_t k = 0; k < rep.basis.size(); ++k) rep.position[rep.basis[k]] = k;
    const std::size_t bs = rep.block_size();

    // per tableau, per generator: the case and the position of s_i T
    struct Step {
        ActionCase kind;
        std::size_t swapped_position;
    };
    auto steps = parallel_map<std::vector<Step>>(rep.blocks(), [&](std::size_t t) {
        std::vector<Step> out;
        const auto& tab = rep.basis_tableau(t);
        for (int i = 1; i < n; ++i) {
            if (is_descent(tab, i)) {
                out.push_back({ActionCase::Descent, 0});
                continue;
            }
            auto idx = family->index_of(tab.swapped(i).word());
            if (idx)
                out.push_back({ActionCase::NonattackingAscent, rep.position[*idx]});
            else
                out.push_back({ActionCase::AttackingAscent, 0});
        }
        return out;
    });

    for (int i = 1; i < n; ++i) {
        OperatorMatrix m(rep.dim());
        for (std::size_t t = 0; t < rep.blocks(); ++t) {
            const Step& st = steps[t][static_cast<std::size_t>(i - 1)];
            for (Mask x = 0; x < bs; ++x) {
                OperatorMatrix::Column col;
                for (const auto& term : pi_on_marked(i, x, st.kind))
                    col.push_back({(term.swapped ? st.swapped_position : t) * bs + term.mask, term.coefficient});
                m.set_column(t * bs + x, std::move(col));
            }
        }
        rep.pi.push_back(std::move(m));
    }
    rep.c = clifford_generators(rep.blocks(), n);
    return rep;
}

inline CliffordModuleRep build_clifford_module(const TableauFamily& family, bool force = false) {
    return build_clifford_module(std::make_shared<const TableauFamily>(family), force);
}

/// M_alpha on {c_X v_alpha}: the descent case for i in Des(alpha), the
/// attacking-ascent case otherwise.
struct MAlphaRep {
    Composition alpha;
    int n = 0;
    std::vector<OperatorMatrix> pi;
    std::vector<OperatorMatrix> c;
    std::size_t dim() const { return std::size_t{1} << n; }
};

inline MAlphaRep build_M_alpha(const Composition& alpha) {
    if (alpha.empty()) throw domain_error("M_alpha needs a composition of n >= 1");
    if (alpha.size() > max_clifford_n) throw domain_error("supermodule too large");
    MAlphaRep rep;
    rep.alpha = alpha;
    rep.n = alpha.size();
    const IntSet des = descent_set(alpha);
    for (int i = 1; i < rep.n; ++i) {
        OperatorMatrix m(rep.dim());
        const ActionCase kind = des.contains(i) ? ActionCase::Descent : ActionCase::AttackingAscent;
        for (Mask x = 0; x < rep.dim(); ++x) {
            OperatorMatrix::Column col;
            for (const auto& term : pi_on_marked(i, x, kind)) col.push_back({term.mask, term.coefficient});
            m.set_column(x, std::move(col));
        }
        rep.pi.push_back(std::move(m));
    }
    rep.c = clifford_generators(1, rep.n);
    return rep;
}

/// All 0-Hecke relations, the Clifford relations, the cross relations and the
/// parity grading. `parity(k)` is the degree of basis element k.
template <class Parity>
RelationReport verify_clifford_relations(const std::vector<OperatorMatrix>& pi, const std::vector<OperatorMatrix>& c,
                                         Parity parity) {
    std::vector<detail::RelationJob> jobs;
    detail::append_hecke_jobs(pi, Convention::Pi, jobs);
    const int n = static_cast<int>(c.size());
    if (c.empty()) return detail::run_relation_jobs(jobs);
    const std::size_t dim = c.front().dim();
    auto P = [&pi](int i) -> const OperatorMatrix& { return pi[static_cast<std::size_t>(i - 1)]; };
    auto C = [&c](int j) -> const OperatorMatrix& { return c[static_cast<std::size_t>(j - 1)]; };
    const auto minus_identity = OperatorMatrix::identity(dim, -1);
    const auto identity = OperatorMatrix::identity(dim);

    for (int j = 1; j <= n; ++j) jobs.push_back({"c_j^2 = -1", {j}, [=, &minus_identity] { return C(j) * C(j) == minus_identity; }});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            jobs.push_back({"c_i c_j = -c_j c_i", {i, j}, [=] { return C(i) * C(j) == -(C(j) * C(i)); }});
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1)
                jobs.push_back({"pi_i c_j = c_j pi_i", {i, j}, [=] { return P(i) * C(j) == C(j) * P(i); }});
        jobs.push_back({"pi_i c_i = c_i+1 pi_i", {i}, [=] { return P(i) * C(i) == C(i + 1) * P(i); }});
        jobs.push_back({"(pi_i + 1) c_i+1 = c_i (pi_i + 1)", {i},
                        [=, &identity] { return (P(i) + identity) * C(i + 1) == C(i) * (P(i) + identity); }});
    }
    auto graded = [parity](const OperatorMatrix& m, bool flips) {
        for (std::size_t col = 0; col < m.dim(); ++col)
            for (const auto& [row, v] : m.column(col))
                if ((parity(row) != parity(col)) != flips) return false;
        return true;
    };
    for (int i = 1; i < n; ++i) jobs.push_back({"pi_i preserves parity", {i}, [=] { return graded(P(i), false); }});
    for (int j = 1; j <= n; ++j) jobs.push_back({"c_j flips parity", {j}, [=] { return graded(C(j), true); }});
    return detail::run_relation_jobs(jobs);
}

inline RelationReport verify_clifford_relations(const CliffordModuleRep& rep) {
    return verify_clifford_relations(rep.pi, rep.c, [&rep](std::size_t k) { return rep.parity(k); });
}

inline RelationReport verify_clifford_relations(const MAlphaRep& rep) {
    return verify_clifford_relations(rep.pi, rep.c, [](std::size_t k) { return std::popcount(static_cast<Mask>(k)) % 2; });
}

inline FormalSum peak_characteristic(const CliffordModuleRep& rep) { return peak_characteristic(*rep.family); }

/// Checks that the k-th filtration quotient (k is 1-based in basis order) is
/// M_alpha for alpha = comp(Des T_k) under c_X T_k -> c_X v_alpha. An image
/// leaving the span of T_1..T_k also counts as a failure.
inline bool filtration_quotient_check(const CliffordModuleRep& rep, std::size_t k) {
    if (k < 1 || k > rep.blocks()) throw domain_error("filtration index out of range");
    const std::size_t t = k - 1, bs = rep.block_size();
    const auto m = build_M_alpha(comp_n(descent_set(rep.basis_tableau(t)), rep.n));
    auto matches = [&](const OperatorMatrix& big, const OperatorMatrix& small) {
        for (Mask x = 0; x < bs; ++x) {
            OperatorMatrix::Column kept;
            for (const auto& [row, v] : big.column(t * bs + x)) {
                const std::size_t block = row / bs;
                if (block == t)
                    kept.push_back({row % bs, v});
                else if (block > t)
                    return false;
            }
            if (kept != small.column(x)) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < rep.pi.size(); ++i)
        if (!matches(rep.pi[i], m.pi[i])) return false;
    for (std::size_t j = 0; j < rep.c.size(); ++j)
        if (!matches(rep.c[j], m.c[j])) return false;
    return true;
}

/// Basis indices in the support closure of `seed` under every generator.
inline std::vector<bool> clifford_reachability(const CliffordModuleRep& rep, std::size_t seed) {
    if (seed >= rep.dim()) throw domain_error("seed outside the basis");
    std::vector<bool> seen(rep.dim(), false);
    std::queue<std::size_t> todo;
    seen[seed] = true;
    todo.push(seed);
    auto visit = [&](const OperatorMatrix& g, std::size_t col) {
        for (const auto& [row, v] : g.column(col))
            if (!seen[row]) {
                seen[row] = true;
                todo.push(row);
            }
    };
    while (!todo.empty()) {
        std::size_t col = todo.front();
        todo.pop();
        for (const auto& g : rep.pi) visit(g, col);
        for (const auto& g : rep.c) visit(g, col);
    }
    return seen;
}

namespace detail {

inline constexpr std::int64_t cyclic_prime = 2147483647;

inline std::int64_t mod_p(std::int64_t v) {
    v %= cyclic_prime;
    return v < 0 ? v + cyclic_prime : v;
}

inline std::int64_t inverse_mod_p(std::int64_t a) {
    std::int64_t result = 1, base = mod_p(a), e = cyclic_prime - 2;
    while (e) {
        if (e & 1) result = static_cast<std::int64_t>((__int128)result * base % cyclic_prime);
        base = static_cast<std::int64_t>((__int128)base * base % cyclic_prime);
        e >>= 1;
    }
    return result;
}

/// Dimension over F_p of the submodule generated by basis vector `seed`.
inline std::size_t generated_rank_mod_p(const CliffordModuleRep& rep, std::size_t seed) {
    using Vec = std::vector<std::pair<std::size_t, std::int64_t>>;  // sorted sparse
    std::vector<Vec> echelon_rows;             // reduced rows
    std::vector<std::size_t> pivots;           // pivot column per row
    std::vector<long> pivot_row(rep.dim(), -1);
    auto reduce = [&](Vec v) -> Vec {
        std::map<std::size_t, std::int64_t> acc(v.begin(), v.end());
        while (true) {
            auto it = std::find_if(acc.begin(), acc.end(), [&](const auto& e) { return pivot_row[e.first] >= 0; });
            if (it == acc.end()) break;
            const Vec& row = echelon_rows[static_cast<std::size_t>(pivot_row[it->first])];
            const std::int64_t factor = it->second;
            for (const auto& [col, val] : row) {
                auto& slot = acc[col];
                slot = mod_p(slot - static_cast<std::int64_t>((__int128)factor * val % cyclic_prime));
                if (slot == 0) acc.erase(col);
            }
        }
        return Vec(acc.begin(), acc.end());
    };
    std::queue<Vec> todo;
    todo.push({{seed, 1}});
    while (!todo.empty() && echelon_rows.size() < rep.dim()) {
        Vec v = reduce(todo.front());
        todo.pop();
        if (v.empty()) continue;
        const std::int64_t inv = inverse_mod_p(v.front().second);
        for (auto& e : v) e.second = static_cast<std::int64_t>((__int128)e.second * inv % cyclic_prime);
        pivots.push_back(v.front().first);
        pivot_row[v.front().first] = static_cast<long>(echelon_rows.size());
        echelon_rows.push_back(v);
        auto push_image = [&](const OperatorMatrix& g) {
            std::map<std::size_t, std::int64_t> img;
            for (const auto& [col, val] : v)
                for (const auto& [row, gv] : g.column(col)) {
                    auto& slot = img[row];
                    slot = mod_p(slot + static_cast<std::int64_t>((__int128)val * mod_p(gv) % cyclic_prime));
                }
            Vec out;
            for (const auto& [row, val] : img)
                if (val) out.push_back({row, val});
            if (!out.empty()) todo.push(std::move(out));
        };
        for (const auto& g : rep.pi) push_image(g);
        for (const auto& g : rep.c) push_image(g);
    }
    return echelon_rows.size();
}

}  // namespace detail

/// Whether basis vector `seed` generates the whole supermodule. A gap in the
/// support closure rules it out; otherwise images that are a single signed
/// basis vector are followed, and if they do not reach everything the rank of
/// the generated submodule is computed modulo a large prime.
inline bool is_tableau_cyclic(const CliffordModuleRep& rep, std::size_t seed) {
    auto support = clifford_reachability(rep, seed);
    if (std::find(support.begin(), support.end(), false) != support.end()) return false;

    std::vector<bool> seen(rep.dim(), false);
    std::queue<std::size_t> todo;
    seen[seed] = true;
    todo.push(seed);
    std::size_t count = 1;
    auto visit = [&](const OperatorMatrix& g, std::size_t col) {
        const auto& image = g.column(col);
        if (image.size() != 1 || seen[image.front().first]) return;
        seen[image.front().first] = true;
        ++count;
        todo.push(image.front().first);
    };
    while (!todo.empty()) {
        std::size_t col = todo.front();
        todo.pop();
        for (const auto& g : rep.pi) visit(g, col);
        for (const auto& g : rep.c) visit(g, col);
    }
    if (count == rep.dim()) return true;
    return detail::generated_rank_mod_p(rep, seed) == rep.dim();
}

inline bool is_tableau_cyclic(const CliffordModuleRep& rep, const StandardTableau& seed) {
    return is_tableau_cyclic(rep, rep.index(rep.position[rep.family->require_member(seed)], 0));
}

}  // namespace dmod
