#pragma once

// Named tableau families: each kind fixes a diagram geometry, a reading order
// and a membership rule. Members are enumerated by inserting 1..n in order
// with incremental pruning and then filtered by the full membership rule.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmod/composition.hpp"
#include "dmod/tableau.hpp"

namespace dmod {

enum class FamilyKind {
    SPCT,   // standard peak composition tableaux
    SYCT,   // standard Young composition tableaux
    SPYCT,  // standard peak Young composition tableaux
    SShT,   // standard shifted tableaux
    SYT,    // standard Young tableaux
    SIT,    // standard immaculate
    SRIT,   // standard row-strict immaculate
    SET,    // standard extended
    SRET,   // standard row-strict extended
    SRCT,   // standard reverse composition
    SYRT,   // standard Young row-strict composition
    Rib,    // standard ribbon tableaux
    SRCTSigma,
    SYRTSigma,
    SYCTSigma,
};

/// Which generators the family's 0-Hecke module uses: pi_i, or pi_i + 1.
enum class Convention { Pi, PiHat };

inline constexpr FamilyKind all_family_kinds[] = {
    FamilyKind::SPCT, FamilyKind::SYCT, FamilyKind::SPYCT, FamilyKind::SShT, FamilyKind::SYT,
    FamilyKind::SIT,  FamilyKind::SRIT, FamilyKind::SET,   FamilyKind::SRET, FamilyKind::SRCT,
    FamilyKind::SYRT, FamilyKind::Rib,  FamilyKind::SRCTSigma, FamilyKind::SYRTSigma, FamilyKind::SYCTSigma,
};

inline bool uses_sigma(FamilyKind k) {
    return k == FamilyKind::SRCTSigma || k == FamilyKind::SYRTSigma || k == FamilyKind::SYCTSigma;
}

inline Convention convention_of(FamilyKind k) {
    switch (k) {
        case FamilyKind::SPCT:
        case FamilyKind::SYCT:
        case FamilyKind::SPYCT:
        case FamilyKind::SShT:
        case FamilyKind::SYT:
        case FamilyKind::Rib: return Convention::Pi;
        default: return Convention::PiHat;
    }
}

inline std::string_view family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::SPCT: return "spct";
        case FamilyKind::SYCT: return "syct";
        case FamilyKind::SPYCT: return "spyct";
        case FamilyKind::SShT: return "ssht";
        case FamilyKind::SYT: return "syt";
        case FamilyKind::SIT: return "sit";
        case FamilyKind::SRIT: return "srit";
        case FamilyKind::SET: return "set";
        case FamilyKind::SRET: return "sret";
        case FamilyKind::SRCT: return "srct";
        case FamilyKind::SYRT: return "syrt";
        case FamilyKind::Rib: return "rib";
        case FamilyKind::SRCTSigma: return "srct-sigma";
        case FamilyKind::SYRTSigma: return "syrt-sigma";
        case FamilyKind::SYCTSigma: return "syct-sigma";
    }
    return "?";
}

/// CLI name to kind. `with_sigma` selects the permuted variant of srct/syrt/syct.
inline FamilyKind parse_family_kind(std::string_view name, bool with_sigma = false) {
    for (FamilyKind k : all_family_kinds) {
        if (family_name(k) != name) continue;
        if (with_sigma) {
            if (k == FamilyKind::SRCT) return FamilyKind::SRCTSigma;
            if (k == FamilyKind::SYRT) return FamilyKind::SYRTSigma;
            if (k == FamilyKind::SYCT) return FamilyKind::SYCTSigma;
            if (!uses_sigma(k)) throw domain_error("family '" + std::string(name) + "' has no permuted variant");
        }
        return k;
    }
    throw domain_error("unknown family '" + std::string(name) + "'");
}

inline bool is_permutation_of_range(const std::vector<int>& sigma, std::size_t len) {
    if (sigma.size() != len) return false;
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < len; ++i)
        if (sorted[i] != static_cast<int>(i) + 1) return false;
    return true;
}

/// Throws when `shape` (and `sigma`) are not valid for `kind`.
inline void validate_shape(FamilyKind kind, const Composition& shape, const std::vector<int>& sigma) {
    if (shape.empty()) throw domain_error("shape must be a composition of n >= 1");
    switch (kind) {
        case FamilyKind::SPCT:
        case FamilyKind::SPYCT:
            if (!is_peak_composition(shape))
                throw domain_error(std::string(family_name(kind)) + " requires a peak composition, got " + to_string(shape));
            break;
        case FamilyKind::SShT:
            if (!is_strict_partition(shape))
                throw domain_error("ssht requires a strict partition, got " + to_string(shape));
            break;
        case FamilyKind::SYT:
            if (!is_partition(shape)) throw domain_error("syt requires a partition, got " + to_string(shape));
            break;
        default: break;
    }
    if (uses_sigma(kind)) {
        if (!is_permutation_of_range(sigma, shape.length()))
            throw domain_error("sigma must be a permutation of 1.." + std::to_string(shape.length()));
    } else if (!sigma.empty()) {
        throw domain_error(std::string(family_name(kind)) + " does not take a sigma permutation");
    }
}

namespace detail {

/// Dense grid view of a (partial) filling; 0 marks an empty cell or a non-box.
class Grid {
public:
    Grid(int columns, int rows)
        : columns_(columns), rows_(rows), cells_(static_cast<std::size_t>((columns + 2) * (rows + 2)), -1) {}

    void add_box(const Box& b) { at(b) = 0; }
    bool has(const Box& b) const {
        if (b.column < 1 || b.row < 1 || b.column > columns_ || b.row > rows_) return false;
        return cells_[index(b)] >= 0;
    }
    /// Entry at b, 0 when empty, -1 when not a box.
    int get(const Box& b) const {
        if (b.column < 1 || b.row < 1 || b.column > columns_ || b.row > rows_) return -1;
        return cells_[index(b)];
    }
    int& at(const Box& b) { return cells_[index(b)]; }
    int columns() const { return columns_; }
    int rows() const { return rows_; }

private:
    std::size_t index(const Box& b) const { return static_cast<std::size_t>(b.row * (columns_ + 2) + b.column); }
    int columns_, rows_;
    std::vector<int> cells_;
};

inline std::vector<Box> row_boxes(const Composition& shape) {
    std::vector<Box> out;
    for (std::size_t r = 0; r < shape.length(); ++r)
        for (int c = 1; c <= shape[r]; ++c) out.push_back({c, static_cast<int>(r) + 1});
    return out;
}

inline std::vector<Box> shifted_boxes(const Composition& shape) {
    std::vector<Box> out;
    for (std::size_t r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape[r]; ++c) out.push_back({static_cast<int>(r) + 1 + c, static_cast<int>(r) + 1});
    return out;
}

inline std::vector<Box> ribbon_boxes(const Composition& shape) {
    std::vector<Box> out;
    int start = 1;
    for (std::size_t r = 0; r < shape.length(); ++r) {
        for (int c = 0; c < shape[r]; ++c) out.push_back({start + c, static_cast<int>(r) + 1});
        start += shape[r] - 1;
    }
    return out;
}

// Reading-order comparators over boxes.
inline bool rows_top_down_left_right(const Box& a, const Box& b) {
    return a.row != b.row ? a.row > b.row : a.column < b.column;
}
inline bool rows_bottom_up_left_right(const Box& a, const Box& b) {
    return a.row != b.row ? a.row < b.row : a.column < b.column;
}
inline bool rows_bottom_up_right_left(const Box& a, const Box& b) {
    return a.row != b.row ? a.row < b.row : a.column > b.column;
}
inline bool columns_left_right_bottom_up(const Box& a, const Box& b) {
    return a.column != b.column ? a.column < b.column : a.row < b.row;
}

/// First-column boxes ordered by ascending (or descending) sigma value of their row.
inline std::vector<Box> first_column_by_sigma(const Composition& shape, const std::vector<int>& sigma, bool ascending) {
    std::vector<Box> col;
    for (std::size_t r = 0; r < shape.length(); ++r) col.push_back({1, static_cast<int>(r) + 1});
    std::sort(col.begin(), col.end(), [&](const Box& a, const Box& b) {
        int sa = sigma[static_cast<std::size_t>(a.row - 1)], sb = sigma[static_cast<std::size_t>(b.row - 1)];
        return ascending ? sa < sb : sa > sb;
    });
    return col;
}

inline std::vector<Box> other_columns(const std::vector<Box>& boxes, bool left_to_right, bool bottom_up) {
    std::vector<Box> rest;
    for (const auto& b : boxes)
        if (b.column > 1) rest.push_back(b);
    std::sort(rest.begin(), rest.end(), [&](const Box& a, const Box& b) {
        if (a.column != b.column) return left_to_right ? a.column < b.column : a.column > b.column;
        return bottom_up ? a.row < b.row : a.row > b.row;
    });
    return rest;
}

inline std::vector<int> identity_sigma(std::size_t len) {
    std::vector<int> s(len);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

}  // namespace detail

/// Diagram of the kind's geometry with the kind's reading order attached.
inline DiagramPtr make_diagram(FamilyKind kind, const Composition& shape, const std::vector<int>& sigma = {}) {
    using namespace detail;
    validate_shape(kind, shape, sigma);
    const auto id = identity_sigma(shape.length());
    std::vector<Box> order;
    switch (kind) {
        case FamilyKind::SPCT:
            order = row_boxes(shape);
            std::sort(order.begin(), order.end(), columns_left_right_bottom_up);
            break;
        case FamilyKind::SYCT:
        case FamilyKind::SPYCT:
        case FamilyKind::SYCTSigma: {
            // first column read in reverse sigma order (top to bottom for sigma = id)
            order = first_column_by_sigma(shape, kind == FamilyKind::SYCTSigma ? sigma : id, false);
            auto rest = other_columns(row_boxes(shape), true, true);
            order.insert(order.end(), rest.begin(), rest.end());
            break;
        }
        case FamilyKind::SShT:
            order = shifted_boxes(shape);
            std::sort(order.begin(), order.end(), rows_top_down_left_right);
            break;
        case FamilyKind::SYT:
        case FamilyKind::SIT:
        case FamilyKind::SET:
            order = row_boxes(shape);
            std::sort(order.begin(), order.end(), rows_top_down_left_right);
            break;
        case FamilyKind::SRIT:
        case FamilyKind::SRET:
            order = row_boxes(shape);
            std::sort(order.begin(), order.end(), rows_bottom_up_right_left);
            break;
        case FamilyKind::SRCT:
        case FamilyKind::SRCTSigma: {
            order = other_columns(row_boxes(shape), false, true);
            auto first = first_column_by_sigma(shape, kind == FamilyKind::SRCTSigma ? sigma : id, false);
            order.insert(order.end(), first.begin(), first.end());
            break;
        }
        case FamilyKind::SYRT:
        case FamilyKind::SYRTSigma: {
            order = other_columns(row_boxes(shape), false, false);
            auto first = first_column_by_sigma(shape, kind == FamilyKind::SYRTSigma ? sigma : id, true);
            order.insert(order.end(), first.begin(), first.end());
            break;
        }
        case FamilyKind::Rib:
            order = ribbon_boxes(shape);
            std::sort(order.begin(), order.end(), rows_bottom_up_left_right);
            break;
    }
    return std::make_shared<const Diagram>(std::move(order));
}

/// A single row of n boxes read left to right.
inline DiagramPtr single_row_diagram(int n) {
    if (n < 1) throw domain_error("single row needs n >= 1");
    std::vector<Box> order;
    for (int c = 1; c <= n; ++c) order.push_back({c, 1});
    return std::make_shared<const Diagram>(std::move(order));
}

namespace detail {

inline bool rows_increase(const Grid& g) {
    for (int r = 1; r <= g.rows(); ++r)
        for (int c = 2; c <= g.columns(); ++c) {
            int a = g.get({c - 1, r}), b = g.get({c, r});
            if (a > 0 && b > 0 && a > b) return false;
        }
    return true;
}

inline bool rows_decrease(const Grid& g) {
    for (int r = 1; r <= g.rows(); ++r)
        for (int c = 2; c <= g.columns(); ++c) {
            int a = g.get({c - 1, r}), b = g.get({c, r});
            if (a > 0 && b > 0 && a < b) return false;
        }
    return true;
}

/// upward = true: entries increase from bottom to top in every column.
inline bool columns_monotone(const Grid& g, bool upward, int only_column = 0) {
    for (int c = 1; c <= g.columns(); ++c) {
        if (only_column && c != only_column) continue;
        for (int r = 2; r <= g.rows(); ++r) {
            int lo = g.get({c, r - 1}), hi = g.get({c, r});
            if (lo > 0 && hi > 0 && (upward ? lo > hi : lo < hi)) return false;
        }
    }
    return true;
}

/// First-column entries follow the relative order of sigma from bottom to top.
inline bool first_column_matches_sigma(const Grid& g, const std::vector<int>& sigma) {
    for (int a = 1; a <= g.rows(); ++a)
        for (int b = a + 1; b <= g.rows(); ++b) {
            int ea = g.get({1, a}), eb = g.get({1, b});
            if (ea <= 0 || eb <= 0) continue;
            bool sig_less = sigma[static_cast<std::size_t>(a - 1)] < sigma[static_cast<std::size_t>(b - 1)];
            if ((ea < eb) != sig_less) return false;
        }
    return true;
}

/// Boxes holding entries <= k form the diagram of a peak composition.
inline bool peak_prefix_at(const Grid& g, int k) {
    int top = 0;
    std::vector<int> count(static_cast<std::size_t>(g.rows()) + 1, 0);
    for (int r = 1; r <= g.rows(); ++r)
        for (int c = 1; c <= g.columns(); ++c) {
            int e = g.get({c, r});
            if (e > 0 && e <= k) {
                ++count[static_cast<std::size_t>(r)];
                top = std::max(top, r);
            }
        }
    for (int r = 1; r <= top; ++r) {
        int cnt = count[static_cast<std::size_t>(r)];
        if (cnt == 0) return false;
        // left-justified
        for (int c = 1; c <= cnt; ++c) {
            int e = g.get({c, r});
            if (e <= 0 || e > k) return false;
        }
        if (r < top && cnt < 2) return false;
    }
    return true;
}

inline bool peak_prefix_all(const Grid& g, int n) {
    for (int k = 1; k <= n; ++k)
        if (!peak_prefix_at(g, k)) return false;
    return true;
}

/// Young composition triple rule: for (c,r) and (c+1,r') with r' < r,
/// T(c,r) < T(c+1,r') forces (c+1,r) to exist with T(c+1,r) < T(c+1,r').
inline bool young_triples(const Grid& g) {
    for (int c = 1; c < g.columns(); ++c)
        for (int r = 1; r <= g.rows(); ++r) {
            int a = g.get({c, r});
            if (a <= 0) continue;
            for (int rp = 1; rp < r; ++rp) {
                int b = g.get({c + 1, rp});
                if (b <= 0 || !(a < b)) continue;
                int cc = g.get({c + 1, r});
                if (cc <= 0 || !(cc < b)) return false;
            }
        }
    return true;
}

/// Reverse composition triple rule: for (c,r) and (c+1,r') with r < r',
/// T(c,r) > T(c+1,r') forces (c+1,r) to exist with T(c+1,r) > T(c+1,r').
inline bool reverse_triples(const Grid& g) {
    for (int c = 1; c < g.columns(); ++c)
        for (int r = 1; r <= g.rows(); ++r) {
            int a = g.get({c, r});
            if (a <= 0) continue;
            for (int rp = r + 1; rp <= g.rows(); ++rp) {
                int b = g.get({c + 1, rp});
                if (b <= 0 || !(a > b)) continue;
                int cc = g.get({c + 1, r});
                if (cc <= 0 || !(cc > b)) return false;
            }
        }
    return true;
}

inline Grid grid_for(const Diagram& d) {
    Grid g(d.max_column(), d.max_row());
    for (const auto& b : d.reading_order()) g.add_box(b);
    return g;
}

inline bool satisfies(FamilyKind kind, const Grid& g, int n, const std::vector<int>& sigma) {
    switch (kind) {
        case FamilyKind::SPCT:
            return rows_increase(g) && columns_monotone(g, true, 1) && peak_prefix_all(g, n);
        case FamilyKind::SYCT:
        case FamilyKind::SYRT:
            return rows_increase(g) && columns_monotone(g, true, 1) && young_triples(g);
        case FamilyKind::SPYCT:
            return rows_increase(g) && columns_monotone(g, true, 1) && young_triples(g) && peak_prefix_all(g, n);
        case FamilyKind::SShT:
        case FamilyKind::SYT:
        case FamilyKind::SET:
        case FamilyKind::SRET:
            return rows_increase(g) && columns_monotone(g, true);
        case FamilyKind::SIT:
        case FamilyKind::SRIT:
            return rows_increase(g) && columns_monotone(g, true, 1);
        case FamilyKind::SRCT:
            return rows_decrease(g) && columns_monotone(g, true, 1) && reverse_triples(g);
        case FamilyKind::SRCTSigma:
            return rows_decrease(g) && first_column_matches_sigma(g, sigma) && reverse_triples(g);
        case FamilyKind::SYRTSigma:
        case FamilyKind::SYCTSigma:
            return rows_increase(g) && first_column_matches_sigma(g, sigma) && young_triples(g);
        case FamilyKind::Rib:
            return rows_increase(g) && columns_monotone(g, false);
    }
    return false;
}

/// Necessary conditions on a partial filling of 1..v (checked after placing v).
inline bool partial_ok(FamilyKind kind, const Grid& g, const Box& placed, int v, const std::vector<int>& sigma) {
    const Box left{placed.column - 1, placed.row}, right{placed.column + 1, placed.row};
    const Box below{placed.column, placed.row - 1}, above{placed.column, placed.row + 1};
    auto filled = [&](const Box& b) { return g.get(b) > 0; };
    auto needs = [&](const Box& b) { return !g.has(b) || filled(b); };
    switch (kind) {
        case FamilyKind::SRCT:
        case FamilyKind::SRCTSigma:
            if (!needs(right)) return false;
            break;
        default:
            if (!needs(left)) return false;
    }
    switch (kind) {
        case FamilyKind::SShT:
        case FamilyKind::SYT:
        case FamilyKind::SET:
        case FamilyKind::SRET:
            if (!needs(below)) return false;
            break;
        case FamilyKind::Rib:
            if (!needs(above)) return false;
            break;
        case FamilyKind::SRCTSigma:
        case FamilyKind::SYRTSigma:
        case FamilyKind::SYCTSigma:
            if (placed.column == 1 && !first_column_matches_sigma(g, sigma)) return false;
            break;
        default:
            if (placed.column == 1 && !needs(below)) return false;
    }
    if ((kind == FamilyKind::SPCT || kind == FamilyKind::SPYCT) && !peak_prefix_at(g, v)) return false;
    return true;
}

inline void backtrack(FamilyKind kind, const Diagram& d, Grid& g, int v, const std::vector<int>& sigma,
                      std::vector<Word>& out) {
    const int n = d.size();
    if (v > n) {
        if (!satisfies(kind, g, n, sigma)) return;
        Word w(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) w[static_cast<std::size_t>(p)] = g.get(d.box_at(p));
        out.push_back(std::move(w));
        return;
    }
    for (const auto& b : d.reading_order()) {
        if (g.get(b) != 0) continue;
        g.at(b) = v;
        if (partial_ok(kind, g, b, v, sigma)) backtrack(kind, d, g, v + 1, sigma, out);
        g.at(b) = 0;
    }
}

}  // namespace detail

/// Full membership test of a filling of the kind's diagram.
inline bool is_family_member(FamilyKind kind, const StandardTableau& t, const std::vector<int>& sigma = {}) {
    auto g = detail::grid_for(*t.diagram());
    for (int p = 0; p < t.size(); ++p) g.at(t.diagram()->box_at(p)) = t.word()[static_cast<std::size_t>(p)];
    return detail::satisfies(kind, g, t.size(), sigma);
}

inline std::string family_tag(FamilyKind kind, const Composition& shape, const std::vector<int>& sigma) {
    std::string tag = std::string(family_name(kind)) + to_string(shape);
    if (!sigma.empty()) tag += "[sigma=" + join(sigma) + "]";
    return tag;
}

/// Enumerates the family. Returns an empty optional when no filling qualifies.
inline std::optional<TableauFamily> try_build_family(FamilyKind kind, const Composition& shape,
                                                     const std::vector<int>& sigma = {}) {
    auto diagram = make_diagram(kind, shape, sigma);
    auto grid = detail::grid_for(*diagram);
    std::vector<Word> words;
    detail::backtrack(kind, *diagram, grid, 1, sigma, words);
    if (words.empty()) return std::nullopt;
    return TableauFamily(diagram, std::move(words), family_tag(kind, shape, sigma));
}

inline TableauFamily build_family(FamilyKind kind, const Composition& shape, const std::vector<int>& sigma = {}) {
    auto fam = try_build_family(kind, shape, sigma);
    if (!fam) throw domain_error("family " + family_tag(kind, shape, sigma) + " is empty");
    return std::move(*fam);
}

inline TableauFamily build_family(FamilyKind kind, const StrictPartition& lambda) {
    return build_family(kind, lambda.as_composition());
}

/// The generating tableau of SPCT(alpha): odd numbers up column 1, even numbers
/// up column 2, then the remaining numbers consecutively up each later column.
inline StandardTableau source_tableau(const Composition& alpha) {
    if (alpha.empty() || !is_peak_composition(alpha))
        throw domain_error("source tableau requires a peak composition, got " + to_string(alpha));
    auto diagram = make_diagram(FamilyKind::SPCT, alpha);
    std::map<Box, int> entries;
    const int len = static_cast<int>(alpha.length());
    int next = 1;
    for (int r = 1; r <= len; ++r) entries[{1, r}] = 2 * r - 1;
    for (int r = 1; r <= len; ++r)
        if (alpha[static_cast<std::size_t>(r - 1)] >= 2) entries[{2, r}] = 2 * r;
    next = static_cast<int>(entries.size()) + 1;
    int max_col = *std::max_element(alpha.parts().begin(), alpha.parts().end());
    for (int c = 3; c <= max_col; ++c)
        for (int r = 1; r <= len; ++r)
            if (alpha[static_cast<std::size_t>(r - 1)] >= c) entries[{c, r}] = next++;
    return StandardTableau::from_entries(diagram, entries);
}

/// Row lengths of a shifted diagram; throws when `d` is not one.
inline Composition shifted_shape_of(const Diagram& d) {
    std::vector<int> lengths(static_cast<std::size_t>(d.max_row()), 0);
    for (const auto& b : d.reading_order()) ++lengths[static_cast<std::size_t>(b.row - 1)];
    for (std::size_t r = 0; r < lengths.size(); ++r)
        for (int c = 0; c < lengths[r]; ++c)
            if (!d.contains({static_cast<int>(r) + 1 + c, static_cast<int>(r) + 1}))
                throw domain_error("diagram is not a shifted diagram");
    Composition shape(lengths);
    if (!is_strict_partition(shape)) throw domain_error("diagram is not a shifted diagram of a strict partition");
    return shape;
}

/// Unshifts row i of a standard shifted tableau by i-1 columns. The result
/// lives on `target`, which must be the SPYCT diagram of the same shape.
inline StandardTableau rect(const StandardTableau& s, const DiagramPtr& target) {
    const Composition shape = shifted_shape_of(*s.diagram());
    if (!is_family_member(FamilyKind::SShT, s)) throw domain_error("rect requires a standard shifted tableau");
    std::map<Box, int> entries;
    for (int p = 0; p < s.size(); ++p) {
        const Box& b = s.diagram()->box_at(p);
        entries[{b.column - (b.row - 1), b.row}] = s.word()[static_cast<std::size_t>(p)];
    }
    if (target->size() != s.size()) throw domain_error("rect target diagram has the wrong size");
    return StandardTableau::from_entries(target, entries);
}

inline StandardTableau rect(const StandardTableau& s) {
    return rect(s, make_diagram(FamilyKind::SPYCT, shifted_shape_of(*s.diagram())));
}

}  // namespace dmod
