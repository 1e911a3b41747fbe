#include <gtest/gtest.h>

#include "support.hpp"

using namespace dmod;

namespace {

std::vector<int> marks_of(Mask m) { return set_of(m).elements(); }

Mask mask_from(const std::vector<int>& x) {
    Mask m = 0;
    for (int j : x) m |= Mask{1} << (j - 1);
    return m;
}

// Rebuilds every generator of the supermodule by pushing pi_i through the
// Clifford word and normalizing, with the Hecke action read off box positions.
void compare_with_commutation(FamilyKind kind, const Composition& shape) {
    auto fam = build_family(kind, shape);
    auto rep = build_clifford_module(fam);
    const auto ok = support::to_oracle(kind);
    std::vector<oracle::Filling> fill;
    std::map<oracle::Filling, std::size_t> where;
    for (std::size_t t = 0; t < rep.blocks(); ++t) {
        fill.push_back(support::filling_of(rep.basis_tableau(t)));
        where[fill.back()] = t;
    }
    auto hecke = [&](int i, std::size_t t) {
        std::vector<std::pair<std::int64_t, std::size_t>> out;
        if (oracle::is_descent(ok, fill[t], i)) return decltype(out){{-1, t}};
        auto it = where.find(oracle::swap_entries(fill[t], i));
        if (it != where.end()) out.push_back({1, it->second});
        return out;
    };
    const std::size_t bs = rep.block_size();
    for (int i = 1; i < rep.n; ++i) {
        oracle::Dense expected = oracle::zero(rep.dim());
        for (std::size_t t = 0; t < rep.blocks(); ++t)
            for (Mask x = 0; x < bs; ++x) {
                oracle::Induced img;
                oracle::push_pi(i, 1, {}, marks_of(x), t, hecke, img);
                for (const auto& [key, v] : img) expected[key.second * bs + mask_from(key.first)][t * bs + x] += v;
            }
        EXPECT_EQ(support::dense(rep.pi[static_cast<std::size_t>(i - 1)]), expected) << fam.tag() << " pi_" << i;
    }
    for (int j = 1; j <= rep.n; ++j) {
        oracle::Dense expected = oracle::zero(rep.dim());
        for (std::size_t t = 0; t < rep.blocks(); ++t)
            for (Mask x = 0; x < bs; ++x) {
                auto word = marks_of(x);
                word.insert(word.begin(), j);
                auto [sign, y] = oracle::normalize(word);
                expected[t * bs + mask_from(y)][t * bs + x] += sign;
            }
        EXPECT_EQ(support::dense(rep.c[static_cast<std::size_t>(j - 1)]), expected) << fam.tag() << " c_" << j;
    }
}

bool dense_relations_hold(const std::vector<OperatorMatrix>& pi_m, const std::vector<OperatorMatrix>& c_m) {
    std::vector<oracle::Dense> p, c;
    for (const auto& m : pi_m) p.push_back(support::dense(m));
    for (const auto& m : c_m) c.push_back(support::dense(m));
    const std::size_t d = c.front().size();
    const auto id = oracle::ident(d), neg = oracle::ident(d, -1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (oracle::mul(p[i], p[i]) != oracle::lin(p[i], -1, p[i], 0)) return false;
        if (i + 1 < p.size() && oracle::mul(oracle::mul(p[i], p[i + 1]), p[i]) != oracle::mul(oracle::mul(p[i + 1], p[i]), p[i + 1]))
            return false;
        for (std::size_t j = i + 2; j < p.size(); ++j)
            if (oracle::mul(p[i], p[j]) != oracle::mul(p[j], p[i])) return false;
    }
    for (std::size_t a = 0; a < c.size(); ++a) {
        if (oracle::mul(c[a], c[a]) != neg) return false;
        for (std::size_t b = a + 1; b < c.size(); ++b)
            if (oracle::mul(c[a], c[b]) != oracle::lin(oracle::mul(c[b], c[a]), -1, id, 0)) return false;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != i && j != i + 1 && oracle::mul(p[i], c[j]) != oracle::mul(c[j], p[i])) return false;
        if (oracle::mul(p[i], c[i]) != oracle::mul(c[i + 1], p[i])) return false;
        auto shifted = oracle::lin(p[i], 1, id, 1);
        if (oracle::mul(shifted, c[i + 1]) != oracle::mul(c[i], shifted)) return false;
    }
    return true;
}

std::map<std::pair<Word, IntSet>, std::int64_t> image(const CliffordModuleRep& rep, int i, const Word& w, IntSet marks) {
    const auto& fam = *rep.family;
    StandardTableau t(fam.diagram(), w);
    std::size_t k = rep.index_of({t, marks});
    std::map<std::pair<Word, IntSet>, std::int64_t> out;
    for (const auto& [row, v] : rep.pi[static_cast<std::size_t>(i - 1)].column(k)) {
        auto m = rep.basis_element(row);
        out[{m.tableau.word(), m.marks}] = v;
    }
    return out;
}

}  // namespace

TEST(CliffordModule, GeneratorsMatchCommutationRules) {
    for (const auto& [kind, shape] : std::vector<std::pair<FamilyKind, Composition>>{
             {FamilyKind::SPCT, {3, 1}},
             {FamilyKind::SPCT, {2, 2}},
             {FamilyKind::SPCT, {2, 2, 1}},
             {FamilyKind::SYCT, {1, 2, 1}},
             {FamilyKind::SShT, {3, 1}},
             {FamilyKind::Rib, {1, 2, 1}},
             {FamilyKind::SIT, {2, 1, 1}},
             {FamilyKind::SYT, {2, 2}},
         })
        compare_with_commutation(kind, shape);
}

TEST(CliffordModule, CompatibleThreeBoxExampleImages) {
    auto rep = build_clifford_module(compatible_three_box_family());
    using Img = std::map<std::pair<Word, IntSet>, std::int64_t>;
    const Word R{2, 1, 3}, S{1, 2, 3}, T{1, 3, 2};
    EXPECT_EQ(image(rep, 1, R, {1}), (Img{{{R, IntSet{2}}, -1}}));
    EXPECT_EQ(image(rep, 1, T, {1, 2}), (Img{{{T, IntSet{1, 2}}, -1}, {{T, IntSet{}}, 1}}));
    EXPECT_EQ(image(rep, 1, S, {2, 3}), (Img{{{S, IntSet{2, 3}}, -1}, {{S, IntSet{1, 3}}, 1}, {{R, IntSet{1, 3}}, 1}}));
}

TEST(CliffordModule, RelationsHoldByDenseProducts) {
    for (FamilyKind kind : all_family_kinds)
        for (int n = 1; n <= 3; ++n)
            for (const auto& [shape, sigma] : shapes_for(kind, n)) {
                auto fam = try_build_family(kind, shape, sigma);
                if (!fam) continue;
                auto rep = build_clifford_module(*fam);
                EXPECT_TRUE(dense_relations_hold(rep.pi, rep.c)) << fam->tag();
                EXPECT_TRUE(verify_clifford_relations(rep).ok()) << fam->tag();
            }
}

TEST(CliffordModule, SparseRelationsUpToFive) {
    for (FamilyKind kind : {FamilyKind::SPCT, FamilyKind::SYCT, FamilyKind::SShT, FamilyKind::Rib, FamilyKind::SRCT})
        for (int n = 4; n <= 5; ++n)
            for (const auto& [shape, sigma] : shapes_for(kind, n)) {
                auto fam = try_build_family(kind, shape, sigma);
                if (!fam) continue;
                EXPECT_TRUE(verify_clifford_relations(build_clifford_module(*fam)).ok()) << fam->tag();
            }
}

TEST(CliffordModule, MAlphaSatisfiesRelations) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& alpha : enumerate_compositions(n)) {
            auto m = build_M_alpha(alpha);
            EXPECT_TRUE(verify_clifford_relations(m).ok()) << alpha;
            if (n <= 3) {
                EXPECT_TRUE(dense_relations_hold(m.pi, m.c)) << alpha;
            }
        }
}

TEST(CliffordModule, FiltrationQuotientsAreMAlpha) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& alpha : enumerate_peak_compositions(n)) {
            auto rep = build_clifford_module(build_family(FamilyKind::SPCT, alpha));
            for (std::size_t k = 1; k <= rep.blocks(); ++k) EXPECT_TRUE(filtration_quotient_check(rep, k)) << alpha << " " << k;
        }
    auto rep = build_clifford_module(build_family(FamilyKind::SYCT, Composition{2, 1, 2}));
    for (std::size_t k = 1; k <= rep.blocks(); ++k) EXPECT_TRUE(filtration_quotient_check(rep, k));
    EXPECT_THROW(filtration_quotient_check(rep, 0), domain_error);
}

TEST(CliffordModule, PeakCharacteristicDimension) {
    auto rep = build_clifford_module(build_family(FamilyKind::SPCT, Composition{3, 3, 1}));
    EXPECT_EQ(rep.dim(), 10u * 128u);
    EXPECT_EQ(to_text(peak_characteristic(rep)), "K[3,3,1] + K[3,2,2] + K[2,4,1] + 3*K[2,3,2] + 2*K[2,2,3] + 2*K[2,2,2,1]");
}

TEST(CliffordModule, SpctSupermodulesAreTableauCyclic) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& alpha : enumerate_peak_compositions(n)) {
            auto rep = build_clifford_module(build_family(FamilyKind::SPCT, alpha));
            EXPECT_TRUE(is_tableau_cyclic(rep, source_tableau(alpha))) << alpha;
        }
}

TEST(CliffordModule, SyctWithTwoColumnOrdersIsNotCyclic) {
    auto fam = build_family(FamilyKind::SYCT, Composition{2, 2});
    auto rep = build_clifford_module(fam);
    std::set<std::vector<bool>> column_orders;
    for (const auto& t : fam.members()) column_orders.insert({t.entry_at({2, 1}) < t.entry_at({2, 2})});
    ASSERT_GE(column_orders.size(), 2u);
    for (const auto& t : fam.members()) EXPECT_FALSE(is_tableau_cyclic(rep, t));
}

TEST(CliffordModule, RankFallbackAgreesOnSmallCases) {
    for (const auto& alpha : {Composition{2, 1}, Composition{3}, Composition{2, 2}}) {
        auto rep = build_clifford_module(build_family(FamilyKind::SPCT, alpha));
        std::size_t seed = rep.index(rep.position[rep.family->require_member(source_tableau(alpha))], 0);
        EXPECT_EQ(detail::generated_rank_mod_p(rep, seed), rep.dim());
    }
}

TEST(CliffordModule, MaskHelpers) {
    EXPECT_EQ(mask_of(IntSet{1, 3}, 3), Mask{5});
    EXPECT_EQ(set_of(Mask{6}), (IntSet{2, 3}));
    EXPECT_EQ(marks_below(Mask{0b1011}, 4), 2);
    EXPECT_EQ(c_on_marked(2, Mask{0b011}), (std::pair<Mask, std::int64_t>{0b001, 1}));
    EXPECT_EQ(c_on_marked(1, Mask{0b001}), (std::pair<Mask, std::int64_t>{0b000, -1}));
    EXPECT_EQ(c_on_marked(3, Mask{0b001}), (std::pair<Mask, std::int64_t>{0b101, -1}));
}
