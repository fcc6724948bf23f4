#include <gtest/gtest.h>

#include <map>
#include <set>

#include "kostka/oracle/charge.hpp"
#include "kostka/rpart/contingency.hpp"
#include "kostka/symgrp/characters.hpp"
#include "kostka/symgrp/double_coset.hpp"
#include "kostka/symgrp/permutation.hpp"

using namespace kostka;

namespace {

Permutation perm1(std::vector<int> one_based) { return Permutation::from_one_based(one_based); }

// Number of tabloids of shape mu fixed by a permutation of cycle type rho:
// assignments of whole cycles to rows with row sizes mu.
long permutation_character(const Partition& mu, const CycleType& rho) {
    std::vector<int> left = mu;
    std::function<long(std::size_t)> rec = [&](std::size_t k) -> long {
        if (k == rho.size()) return 1;
        long total = 0;
        for (auto& cap : left) {
            if (cap < rho[k]) continue;
            cap -= rho[k];
            total += rec(k + 1);
            cap += rho[k];
        }
        return total;
    };
    return rec(0);
}

} // namespace

TEST(Permutation, CycleType) {
    EXPECT_EQ(cycle_type(Permutation::identity(3)), (CycleType{1, 1, 1}));
    EXPECT_EQ(cycle_type(perm1({2, 3, 1})), (CycleType{3}));
    EXPECT_EQ(cycle_type(perm1({2, 1, 3})), (CycleType{2, 1}));
    EXPECT_EQ(perm1({2, 3, 1}).sign(), 1);
    EXPECT_EQ(perm1({2, 1, 3}).sign(), -1);
    EXPECT_THROW(Permutation({0, 0}), InvalidArgument);
}

TEST(Permutation, CompositionConvention) {
    const auto a = perm1({2, 1, 3}), b = perm1({1, 3, 2});
    // (a*b)(i) = a(b(i)): 1 -> b -> 1 -> a -> 2.
    EXPECT_EQ((a * b)(0), 1);
    EXPECT_EQ((a * b)(1), 2);
    EXPECT_EQ(a * a.inverse(), Permutation::identity(3));
    EXPECT_EQ(all_permutations(4).size(), 24u);
}

TEST(Characters, MurnaghanNakayamaExamples) {
    EXPECT_EQ(mn_character({2}, {2}), 1);
    EXPECT_EQ(mn_character({1, 1}, {2}), -1);
    EXPECT_EQ(mn_character({2, 1}, {3}), -1);
    EXPECT_EQ(mn_character({2, 1}, {1, 1, 1}), 2);
    EXPECT_EQ(mn_character({3, 2}, {1, 1, 1, 1, 1}), 5);
    EXPECT_EQ(mn_character({}, {}), 1);
    EXPECT_THROW(mn_character({2}, {1}), InvalidArgument);
}

TEST(Characters, AgreesWithPermutationModuleOracle) {
    // pi^mu = sum_lambda K_{lambda mu} chi^lambda, solved top-down in
    // reverse lexicographic order (K is unitriangular there).
    for (int n = 1; n <= 4; ++n) {
        const auto parts = enumerate_partitions(n);
        std::map<Partition, std::map<CycleType, long>> chi;
        for (const auto& mu : parts) {
            for (const auto& rho : parts) {
                long v = permutation_character(mu, rho);
                for (const auto& [lambda, row] : chi)
                    if (lambda != mu) v -= oracle::kostka_number(lambda, mu) * row.at(rho);
                chi[mu][rho] = v;
            }
        }
        for (const auto& lambda : parts)
            for (const auto& rho : parts) EXPECT_EQ(mn_character(lambda, rho), chi[lambda][rho]) << n;
    }
}

TEST(Characters, Orthogonality) {
    for (int n = 1; n <= 6; ++n) {
        const auto& tab = char_table(n);
        const std::size_t k = tab.labels().size();
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                BigRational row(0), col(0);
                for (std::size_t c = 0; c < k; ++c)
                    row += BigRational(tab.value(a, c) * tab.value(b, c)) / BigRational(tab.z(c));
                for (std::size_t c = 0; c < k; ++c) col += BigRational(tab.value(c, a) * tab.value(c, b));
                EXPECT_EQ(row, BigRational(a == b ? 1 : 0));
                EXPECT_EQ(col, a == b ? BigRational(tab.z(a)) : BigRational(0));
            }
    }
}

TEST(Characters, YoungCharacter) {
    const Composition m{{2, 1, 0}};
    EXPECT_EQ(young_character(RPartition::parse("(2;1;-)"), perm1({2, 1, 3}), m), 1);
    EXPECT_EQ(young_character(RPartition::parse("(11;1;-)"), perm1({2, 1, 3}), m), -1);
    EXPECT_EQ(young_character(RPartition::parse("(11;1;-)"), Permutation::identity(3), m), 1);
    EXPECT_THROW(young_character(RPartition::parse("(2;1;-)"), perm1({3, 2, 1}), m), InvalidArgument);
    const Composition single{{3}};
    for (const auto& w : all_permutations(3))
        EXPECT_EQ(young_character(RPartition::parse("(21)"), w, single), mn_character({2, 1}, cycle_type(w)));
}

TEST(Characters, CharPolyAndTorus) {
    EXPECT_EQ(char_perm_det(perm1({2, 3, 1}), 3), LaurentPoly::parse("t^9 - 1"));
    EXPECT_EQ(char_perm_det(Permutation::identity(2), 3), LaurentPoly::parse("t^6 - 2*t^3 + 1"));
    EXPECT_EQ(char_perm_det(perm1({2, 1, 3}), 3), LaurentPoly::parse("t^9 - t^6 - t^3 + 1"));
    EXPECT_EQ(torus_order({1, 1, 1}, 5), BigRational(64));
    EXPECT_EQ(torus_order({3}, 2), BigRational(7));
    EXPECT_EQ(torus_order({2, 1}, 2), BigRational(3));
    EXPECT_THROW(torus_order({1}, 1), InvalidArgument);
}

TEST(DoubleCosets, SmallCases) {
    const Composition full{{2, 0, 0}};
    const auto one = double_cosets(2, full, full);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].h(1, 1), 2);
    EXPECT_EQ(one[0].size, 2u);

    const Composition split{{1, 1, 0}};
    const auto two = double_cosets(2, split, split);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].rep, Permutation::identity(2));
    EXPECT_EQ(two[0].h(1, 1), 1);
    EXPECT_EQ(two[0].h(2, 2), 1);
    EXPECT_EQ(two[1].h(1, 2), 1);
    EXPECT_EQ(two[1].h(2, 1), 1);
    EXPECT_THROW(double_cosets(9, Composition{{9}}, Composition{{9}}), BoundExceeded);
}

TEST(DoubleCosets, PartitionAndLabels) {
    for (int n = 0; n <= 6; ++n)
        for (int r = 1; r <= (n <= 4 ? 3 : 2); ++r) {
            const auto comps = enumerate_compositions(n, r);
            for (const auto& m : comps)
                for (const auto& mp : comps) {
                    const auto dcs = double_cosets(n, m, mp);
                    BigInt total = 0;
                    std::set<ContingencyMatrix> labels;
                    for (const auto& dc : dcs) {
                        total += static_cast<unsigned long>(dc.size);
                        labels.insert(dc.h);
                        // size = |S_m||S_m'| / |S_m cap x S_m' x^-1|
                        BigInt sm = 1, smp = 1, inter = 1;
                        for (int v : m.m) sm *= factorial(v);
                        for (int v : mp.m) smp *= factorial(v);
                        for (int i = 1; i <= r; ++i)
                            for (int j = 1; j <= r; ++j) inter *= factorial(dc.h(i, j));
                        EXPECT_EQ(BigInt(static_cast<unsigned long>(dc.size)) * inter, sm * smp);
                    }
                    EXPECT_EQ(total, factorial(n));
                    EXPECT_EQ(labels.size(), dcs.size());
                    const auto expected = enumerate_contingency(m, mp);
                    EXPECT_EQ(labels, std::set<ContingencyMatrix>(expected.begin(), expected.end()));
                }
        }
}

TEST(DoubleCosets, MembersAndIntersections) {
    for (int n = 1; n <= 5; ++n) {
        const auto comps = enumerate_compositions(n, 3);
        for (const auto& m : comps)
            for (const auto& mp : comps)
                for (const auto& dc : double_cosets(n, m, mp)) {
                    const auto members = coset_members(dc);
                    EXPECT_EQ(members.size(), dc.size);
                    EXPECT_EQ(*std::min_element(members.begin(), members.end()), dc.rep);
                    for (const auto& x : members) EXPECT_EQ(coset_label(x, m, mp), dc.h);
                    long expected = 1;
                    for (int i = 1; i <= 3; ++i)
                        for (int j = 1; j <= 3; ++j) expected *= factorial(dc.h(i, j)).get_si();
                    EXPECT_EQ(static_cast<long>(intersection_elements(m, mp, dc.rep).size()), expected);
                }
    }
}
