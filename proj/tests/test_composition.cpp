#include <gtest/gtest.h>

#include <set>

#include "dmod/composition.hpp"

using namespace dmod;

TEST(Composition, DescentSetAndCompAreInverse) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& alpha : enumerate_compositions(n)) EXPECT_EQ(comp_n(descent_set(alpha), n), alpha);
}

TEST(Composition, KnownDescentSets) {
    EXPECT_EQ(descent_set(Composition{3, 3, 1}), (IntSet{3, 6}));
    EXPECT_EQ(descent_set(Composition{5}), IntSet{});
    EXPECT_EQ(comp_n(IntSet{2, 5, 6}, 7), (Composition{2, 3, 1, 1}));
    EXPECT_EQ(comp_n(IntSet{}, 4), Composition{4});
}

TEST(Composition, PeakSets) {
    EXPECT_EQ(peak_set(IntSet{1, 2, 4, 6}), (IntSet{4, 6}));
    EXPECT_EQ(peak_set(IntSet{1}), IntSet{});
    EXPECT_EQ(peak_set(IntSet{2, 3}), IntSet{2});
    EXPECT_EQ(peak_set(Composition{2, 2, 2, 1}), (IntSet{2, 4, 6}));
}

TEST(Composition, PeakSetsAreAlwaysIsolated) {
    for (int n = 1; n <= 9; ++n)
        for (const auto& alpha : enumerate_compositions(n)) {
            const auto p = peak_set(alpha);
            for (int i : p) {
                EXPECT_GT(i, 1);
                EXPECT_FALSE(p.contains(i - 1));
            }
        }
}

TEST(Composition, PeakCompositions) {
    EXPECT_TRUE(is_peak_composition(Composition{3, 3, 1}));
    EXPECT_TRUE(is_peak_composition(Composition{2, 2, 2, 1}));
    EXPECT_FALSE(is_peak_composition(Composition{1, 2}));
    EXPECT_TRUE(is_peak_composition(Composition{1}));
    EXPECT_EQ(peak_composition_of(Composition{1, 1, 2, 2, 1}), (Composition{4, 2, 1}));
    for (int n = 1; n <= 8; ++n)
        for (const auto& alpha : enumerate_compositions(n)) {
            const auto p = peak_composition_of(alpha);
            EXPECT_TRUE(is_peak_composition(p));
            EXPECT_EQ(peak_set(p), peak_set(alpha));
        }
}

// peak compositions of n are counted by the Fibonacci numbers
TEST(Composition, EnumerationCounts) {
    int fib[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
    for (int n = 1; n <= 9; ++n) {
        EXPECT_EQ(enumerate_compositions(n).size(), std::size_t{1} << (n - 1));
        EXPECT_EQ(enumerate_peak_compositions(n).size(), static_cast<std::size_t>(fib[n]));
    }
    int strict[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8};
    int parts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 1; n <= 9; ++n) {
        EXPECT_EQ(enumerate_strict_partitions(n).size(), static_cast<std::size_t>(strict[n]));
        EXPECT_EQ(enumerate_partitions(n).size(), static_cast<std::size_t>(parts[n]));
    }
}

TEST(Composition, EnumerationIsDescendingLexAndDistinct) {
    for (int n = 1; n <= 8; ++n) {
        auto all = enumerate_compositions(n);
        EXPECT_EQ(all.front(), Composition{n});
        for (std::size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(succ(all[i - 1], all[i]));
        std::set<Composition> distinct(all.begin(), all.end());
        EXPECT_EQ(distinct.size(), all.size());
    }
}

TEST(Composition, SuccOrder) {
    EXPECT_TRUE(succ(Composition{3, 3, 1}, Composition{3, 2, 2}));
    EXPECT_TRUE(succ(Composition{2, 4, 1}, Composition{2, 3, 2}));
    EXPECT_FALSE(succ(Composition{2, 2, 3}, Composition{2, 3, 2}));
}

TEST(Composition, Parsing) {
    EXPECT_EQ(parse_composition("3,3,1"), (Composition{3, 3, 1}));
    EXPECT_EQ(parse_composition("(2, 4)"), (Composition{2, 4}));
    EXPECT_EQ(parse_set("{2,5,6}"), (IntSet{2, 5, 6}));
    EXPECT_EQ(parse_set("{}"), IntSet{});
    EXPECT_EQ(to_string(Composition{3, 3, 1}), "(3,3,1)");
    EXPECT_EQ(to_string(IntSet{1, 4}), "{1,4}");
}

TEST(Composition, RejectsMalformedInput) {
    EXPECT_THROW(parse_composition("3,,1"), domain_error);
    EXPECT_THROW(parse_composition("3,x"), domain_error);
    EXPECT_THROW(parse_composition("3,0"), domain_error);
    EXPECT_THROW(parse_set("2,3"), domain_error);
    EXPECT_THROW(comp_n(IntSet{4}, 4), domain_error);
    EXPECT_THROW(StrictPartition({2, 2}), domain_error);
    EXPECT_THROW(descent_set(Composition{}), domain_error);
}
