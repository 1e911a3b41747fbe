#pragma once

// Structural checks: the rect supermodule isomorphism, the peak Young
// transition matrix, positivity and inclusion statements, and modules on
// intervals of the left weak order of the symmetric group.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "dmod/clifford_module.hpp"
#include "dmod/families.hpp"
#include "dmod/formal_sum.hpp"
#include "dmod/hecke_module.hpp"

namespace dmod {

// ---- intertwiners -----------------------------------------------------------

/// True when phi (basis index of A -> basis index of B, a bijection) satisfies
/// phi * a[g] = b[g] * phi for every generator g.
inline bool is_intertwiner(const std::vector<OperatorMatrix>& a, const std::vector<OperatorMatrix>& b,
                           const std::vector<std::size_t>& phi) {
    if (a.size() != b.size()) return false;
    for (std::size_t g = 0; g < a.size(); ++g) {
        if (a[g].dim() != phi.size() || b[g].dim() != phi.size()) return false;
        for (std::size_t col = 0; col < phi.size(); ++col) {
            OperatorMatrix::Column mapped;
            for (const auto& [row, v] : a[g].column(col)) mapped.push_back({phi[row], v});
            std::sort(mapped.begin(), mapped.end());
            if (mapped != b[g].column(phi[col])) return false;
        }
    }
    return true;
}

inline bool is_bijection(const std::vector<std::size_t>& phi) {
    std::vector<bool> hit(phi.size(), false);
    for (std::size_t v : phi) {
        if (v >= phi.size() || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

// ---- rect -------------------------------------------------------------------

struct RectCheck {
    bool bijective = false;
    bool preserves_descents = false;
    bool intertwines = false;
    std::size_t dim = 0;
    bool ok() const { return bijective && preserves_descents && intertwines; }
};

/// Builds the supermodules on SShT(lambda) and SPYCT(lambda) and tests the
/// marked-basis map c_X S -> c_X rect(S) against every generator.
inline RectCheck check_rect_isomorphism(const StrictPartition& lambda) {
    const Composition shape = lambda.as_composition();
    auto shifted = std::make_shared<const TableauFamily>(build_family(FamilyKind::SShT, shape));
    auto young = std::make_shared<const TableauFamily>(build_family(FamilyKind::SPYCT, shape));
    RectCheck out;
    const auto ms = build_clifford_module(shifted);
    const auto my = build_clifford_module(young);
    out.dim = ms.dim();
    if (ms.dim() != my.dim()) return out;

    std::vector<std::size_t> tableau_map(ms.blocks());
    out.preserves_descents = true;
    for (std::size_t t = 0; t < ms.blocks(); ++t) {
        const auto& s = ms.basis_tableau(t);
        auto r = rect(s, young->diagram());
        auto idx = young->index_of(r.word());
        if (!idx) return out;
        tableau_map[t] = my.position[*idx];
        if (descent_set(r) != descent_set(s)) out.preserves_descents = false;
    }
    out.bijective = is_bijection(tableau_map);
    if (!out.bijective) return out;
    std::vector<std::size_t> phi(ms.dim());
    for (std::size_t k = 0; k < ms.dim(); ++k) phi[k] = tableau_map[k / ms.block_size()] * ms.block_size() + k % ms.block_size();
    out.intertwines = is_intertwiner(ms.pi, my.pi, phi) && is_intertwiner(ms.c, my.c, phi);
    return out;
}

// ---- peak Young basis -------------------------------------------------------

struct TransitionMatrix {
    std::vector<Composition> index;        // peak compositions, largest in the succ order first
    std::vector<std::vector<Rational>> rows;  // rows[a][b]: coefficient of K_{index[b]} in row a

    /// Diagonal 1 and zero wherever the column index is larger than the row index.
    bool unitriangular() const {
        for (std::size_t a = 0; a < index.size(); ++a) {
            if (rows[a][a] != Rational(1)) return false;
            for (std::size_t b = 0; b < a; ++b)
                if (rows[a][b].numerator() != 0) return false;
        }
        return true;
    }
};

inline FormalSum peak_schur_Q_tilde(const Composition& alpha) {
    return peak_characteristic(build_family(FamilyKind::SPCT, alpha));
}

inline FormalSum peak_young_S_tilde(const Composition& alpha) {
    auto fam = try_build_family(FamilyKind::SPYCT, alpha);
    return fam ? peak_characteristic(*fam) : FormalSum(Basis::Peak, alpha.size());
}

/// Peak characteristic of SPYCT(alpha) in the K basis for every peak alpha of n.
inline TransitionMatrix transition_to_peak_basis(int n) {
    if (n < 1) throw domain_error("transition matrix needs n >= 1");
    TransitionMatrix m;
    m.index = enumerate_peak_compositions(n);
    std::map<Composition, std::size_t> column;
    for (std::size_t b = 0; b < m.index.size(); ++b) column[m.index[b]] = b;
    for (const auto& alpha : m.index) {
        std::vector<Rational> row(m.index.size(), Rational(0));
        const FormalSum s = peak_young_S_tilde(alpha);
        for (const auto& [beta, c] : s.terms()) row[column.at(beta)] = c;
        m.rows.push_back(std::move(row));
    }
    return m;
}

/// Q~_alpha - S~_alpha has no negative K coefficient.
inline bool check_Q_minus_S_positivity(const Composition& alpha) {
    if (!is_peak_composition(alpha)) throw domain_error("positivity check needs a peak composition");
    return (peak_schur_Q_tilde(alpha) - peak_young_S_tilde(alpha)).is_nonnegative();
}

inline FormalSum schur_Q(const StrictPartition& lambda) {
    return peak_characteristic(build_family(FamilyKind::SShT, lambda.as_composition()));
}

/// Peak characteristics of SPYCT(lambda) and SShT(lambda) coincide.
inline bool check_schurQ_inclusion(const StrictPartition& lambda) {
    return peak_young_S_tilde(lambda.as_composition()) == schur_Q(lambda);
}

// ---- left weak order --------------------------------------------------------

class Permutation {
public:
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        if (!is_permutation_of_range(word_, word_.size())) throw domain_error("not a permutation of 1..n");
    }
    static Permutation identity(int n) { return Permutation(detail::identity_sigma(static_cast<std::size_t>(n))); }
    static Permutation longest(int n) {
        auto w = detail::identity_sigma(static_cast<std::size_t>(n));
        std::reverse(w.begin(), w.end());
        return Permutation(std::move(w));
    }

    const std::vector<int>& word() const noexcept { return word_; }
    int n() const noexcept { return static_cast<int>(word_.size()); }
    int length() const { return inversions(word_); }

    /// i is a descent when i+1 appears to the left of i.
    bool is_descent(int i) const { return position(i + 1) < position(i); }
    IntSet descents() const {
        std::vector<int> out;
        for (int i = 1; i < n(); ++i)
            if (is_descent(i)) out.push_back(i);
        return IntSet(std::move(out));
    }

    /// s_i gamma: values i and i+1 exchanged.
    Permutation left_swap(int i) const {
        auto w = word_;
        for (int& v : w) v = v == i ? i + 1 : v == i + 1 ? i : v;
        return Permutation(std::move(w));
    }

    /// gamma w0: the word read backwards.
    Permutation reversed() const { return Permutation(std::vector<int>(word_.rbegin(), word_.rend())); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    int position(int v) const {
        return static_cast<int>(std::find(word_.begin(), word_.end(), v) - word_.begin());
    }
    std::vector<int> word_;
};

inline std::vector<Permutation> all_permutations(int n) {
    auto w = detail::identity_sigma(static_cast<std::size_t>(n));
    std::vector<Permutation> out;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace detail {
/// Closure under covers: upward when `up`, else downward.
inline std::set<Permutation> weak_closure(const Permutation& start, bool up) {
    std::set<Permutation> seen{start};
    std::vector<Permutation> stack{start};
    while (!stack.empty()) {
        Permutation g = stack.back();
        stack.pop_back();
        for (int i = 1; i < g.n(); ++i) {
            if (g.is_descent(i) == up) continue;
            Permutation h = g.left_swap(i);
            if (seen.insert(h).second) stack.push_back(h);
        }
    }
    return seen;
}
}  // namespace detail

/// gamma <= rho in the left weak order, by searching upward from gamma.
inline bool weak_leq_by_closure(const Permutation& gamma, const Permutation& rho) {
    return detail::weak_closure(gamma, true).count(rho) != 0;
}

/// Every ascent pair (r < s with rho(r) < rho(s)) of rho is an ascent pair of gamma.
inline bool weak_leq_by_ascent_pairs(const Permutation& gamma, const Permutation& rho) {
    const auto& g = gamma.word();
    const auto& r = rho.word();
    if (g.size() != r.size()) return false;
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = a + 1; b < r.size(); ++b)
            if (r[a] < r[b] && !(g[a] < g[b])) return false;
    return true;
}

struct BruhatInterval {
    Permutation sigma;
    Permutation rho;
    std::vector<Permutation> members;  // sorted

    bool contains(const Permutation& p) const { return std::binary_search(members.begin(), members.end(), p); }
};

inline BruhatInterval weak_bruhat_interval(const Permutation& sigma, const Permutation& rho) {
    if (sigma.n() != rho.n()) throw domain_error("interval endpoints have different sizes");
    auto up = detail::weak_closure(sigma, true);
    if (!up.count(rho)) throw domain_error("sigma is not below rho in the left weak order");
    auto down = detail::weak_closure(rho, false);
    BruhatInterval out{sigma, rho, {}};
    std::set_intersection(up.begin(), up.end(), down.begin(), down.end(), std::back_inserter(out.members));
    return out;
}

/// One-row diagram whose fillings read to the given permutations.
inline TableauFamily single_row_family(const std::vector<Permutation>& perms, std::string tag) {
    if (perms.empty()) throw domain_error("empty permutation set");
    std::vector<Word> words;
    for (const auto& p : perms) words.push_back(p.word());
    return TableauFamily(single_row_diagram(perms.front().n()), std::move(words), std::move(tag));
}

inline std::string interval_tag(const BruhatInterval& iv) {
    return "[" + word_string(iv.sigma.word()) + "," + word_string(iv.rho.word()) + "]";
}

struct IntervalModules {
    HeckeModuleRep diagram;      // pi convention on the interval's words
    HeckeModuleRep hat_diagram;  // hat convention on the reversed words
    std::vector<OperatorMatrix> bar_b;  // interval action with -gamma on descents, in diagram's basis order
    std::vector<OperatorMatrix> b;      // interval action with gamma on descents, in diagram's basis order
    bool bar_b_matches = false;
    bool b_matches = false;
};

/// Both interval modules computed straight from the interval, compared with
/// the diagram modules on the words and on the reversed words.
inline IntervalModules build_interval_modules(const BruhatInterval& iv) {
    IntervalModules out{
        build_hecke_module(single_row_family(iv.members, interval_tag(iv)), Convention::Pi),
        {},
        {},
        {},
        false,
        false,
    };
    std::vector<Permutation> reversed;
    for (const auto& p : iv.members) reversed.push_back(p.reversed());
    out.hat_diagram = build_hecke_module(single_row_family(reversed, interval_tag(iv) + "w0"), Convention::PiHat);

    const auto& rep = out.diagram;
    std::map<Permutation, std::size_t> pos;
    std::vector<Permutation> basis;
    for (std::size_t k = 0; k < rep.dim(); ++k) {
        basis.emplace_back(rep.basis_tableau(k).word());
        pos.emplace(basis.back(), k);
    }
    const int n = iv.sigma.n();
    for (int i = 1; i < n; ++i) {
        OperatorMatrix bar(rep.dim()), plain(rep.dim());
        for (std::size_t k = 0; k < rep.dim(); ++k) {
            const auto& g = basis[k];
            if (g.is_descent(i)) {
                bar.add(k, k, -1);
                plain.add(k, k, 1);
                continue;
            }
            Permutation h = g.left_swap(i);
            if (iv.contains(h)) {
                bar.add(pos.at(h), k, 1);
                plain.add(pos.at(h), k, 1);
            }
        }
        out.bar_b.push_back(std::move(bar));
        out.b.push_back(std::move(plain));
    }
    out.bar_b_matches = out.bar_b == rep.pi;

    std::vector<std::size_t> phi(rep.dim());
    for (std::size_t k = 0; k < rep.dim(); ++k) {
        auto idx = out.hat_diagram.family->index_of(basis[k].reversed().word());
        if (!idx) return out;
        phi[k] = out.hat_diagram.position[*idx];
    }
    out.b_matches = is_bijection(phi) && is_intertwiner(out.b, out.hat_diagram.pi, phi);
    return out;
}

/// Three boxes (1,1), (2,1), (3,2); the top box is read first. The fillings
/// 312, 123, 132 are not ascent-compatible.
inline TableauFamily incompatible_three_box_family() {
    auto d = std::make_shared<const Diagram>(std::vector<Box>{{3, 2}, {1, 1}, {2, 1}});
    return TableauFamily(d, {{3, 1, 2}, {1, 2, 3}, {1, 3, 2}}, "incompatible-three-box");
}

/// Three boxes (1,2), (2,2), (2,1); the bottom box is read first. The fillings
/// 213, 123, 132 are ascent-compatible and 123 has two nonattacking ascents.
inline TableauFamily compatible_three_box_family() {
    auto d = std::make_shared<const Diagram>(std::vector<Box>{{2, 1}, {1, 2}, {2, 2}});
    return TableauFamily(d, {{2, 1, 3}, {1, 2, 3}, {1, 3, 2}}, "compatible-three-box");
}

struct GeneralizationWitness {
    bool words_form_interval = true;
    std::size_t three_element_intervals = 0;
    bool all_three_element_intervals_are_chains = false;
    std::vector<PositionPair> nonattacking_ascents;  // of the tableau 123
    std::string verdict;
};

/// Shows the compatible three-box module is not an interval module: its words
/// are no interval, every 3-element interval of S_3 is a chain (at most one
/// nonattacking ascent per element), and the tableau 123 has two.
inline GeneralizationWitness generalization_witness() {
    GeneralizationWitness out;
    const auto family = compatible_three_box_family();
    std::vector<Permutation> words;
    for (const auto& t : family.members()) words.emplace_back(t.word());
    std::sort(words.begin(), words.end());

    out.words_form_interval = false;
    bool chains = true;
    const auto perms = all_permutations(3);
    for (const auto& s : perms)
        for (const auto& r : perms) {
            if (!weak_leq_by_closure(s, r)) continue;
            auto iv = weak_bruhat_interval(s, r);
            if (iv.members == words) out.words_form_interval = true;
            if (iv.members.size() != 3) continue;
            ++out.three_element_intervals;
            for (const auto& g : iv.members) {
                int free = 0;
                for (int i = 1; i < 3; ++i)
                    if (!g.is_descent(i) && iv.contains(g.left_swap(i))) ++free;
                if (free > 1) chains = false;
            }
            for (const auto& a : iv.members)
                for (const auto& b : iv.members)
                    if (!weak_leq_by_closure(a, b) && !weak_leq_by_closure(b, a)) chains = false;
        }
    out.all_three_element_intervals_are_chains = chains && out.three_element_intervals > 0;

    const auto& s = family[*family.index_of(Word{1, 2, 3})];
    for (int i = 1; i < s.size(); ++i)
        if (classify_ascent(s, i, family) == StepKind::NonattackingAscent) out.nonattacking_ascents.push_back(ascent_positions(s, i));

    const bool witnessed = !out.words_form_interval && out.all_three_element_intervals_are_chains &&
                           out.nonattacking_ascents.size() >= 2;
    out.verdict = witnessed ? "not isomorphic to any weak Bruhat interval module" : "witness not reproduced";
    return out;
}

}  // namespace dmod
