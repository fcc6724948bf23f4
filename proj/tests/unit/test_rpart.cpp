#include <gtest/gtest.h>

#include <map>
#include <set>

#include "kostka/rpart/contingency.hpp"
#include "kostka/rpart/order.hpp"
#include "kostka/rpart/rpartition.hpp"

using namespace kostka;

namespace {
RPartition R(const char* s) { return RPartition::parse(s); }
}

TEST(RPartition, ParseAndFormat) {
    EXPECT_EQ(R("(21;-;1)").to_string(), "(21;-;1)");
    EXPECT_EQ(R("(-;1^2;-)"), R("(-;11;-)"));
    EXPECT_EQ(R("( 2 1 ; - ; 1 )"), R("(21;-;1)"));
    EXPECT_EQ(R("(21^2;-)").parts()[0], (Partition{2, 1, 1}));
    EXPECT_EQ(R("(10,2;-)").to_string(), "(10,2;-)");
    EXPECT_EQ(R("(-;-)").n(), 0);
    EXPECT_THROW(R("(12;-)"), ParseError);
    EXPECT_THROW(R("21;-"), ParseError);
    EXPECT_THROW(R("(2x;-)"), ParseError);
}

TEST(RPartition, EnumerationCounts) {
    EXPECT_EQ(enumerate_rpartitions(1, 3).size(), 3u);
    EXPECT_EQ(enumerate_rpartitions(2, 3).size(), 9u);
    EXPECT_EQ(enumerate_rpartitions(3, 3).size(), 22u);
    EXPECT_EQ(enumerate_rpartitions(0, 4).size(), 1u);
    EXPECT_EQ(enumerate_rpartitions(5, 1).size(), 7u);
    for (int n = 0; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r) {
            auto all = enumerate_rpartitions(n, r);
            std::set<RPartition> uniq(all.begin(), all.end());
            EXPECT_EQ(uniq.size(), all.size());
        }
}

TEST(RPartition, CSequence) {
    EXPECT_EQ(c_sequence(R("(1;-;1)"), 2), (std::vector<int>{1, 0, 1, 0, 0, 0}));
    EXPECT_EQ(c_sequence(R("(-;11;-)"), 2), (std::vector<int>{0, 1, 0, 0, 1, 0}));
    EXPECT_EQ(c_sequence(R("(-;-;-)"), 1), (std::vector<int>{0, 0, 0}));
    EXPECT_THROW(c_sequence(R("(111;-;-)"), 2), InvalidArgument);
}

TEST(RPartition, Dominance) {
    EXPECT_TRUE(dominance_leq(R("(-;1;1)"), R("(1;-;1)")));
    EXPECT_FALSE(dominance_leq(R("(-;11;-)"), R("(-;-;2)")));
    EXPECT_FALSE(dominance_leq(R("(-;-;2)"), R("(-;11;-)")));
    EXPECT_TRUE(dominance_leq(R("(1;1;-)"), R("(1;1;-)")));
    EXPECT_THROW(dominance_leq(R("(1;-)"), R("(2;-)")), InvalidArgument);
}

TEST(RPartition, DominanceIsPartialOrder) {
    for (int n = 0; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto all = enumerate_rpartitions(n, r);
            for (const auto& a : all)
                for (const auto& b : all) {
                    if (dominance_leq(a, b) && dominance_leq(b, a)) EXPECT_EQ(a, b);
                    for (const auto& c : all)
                        if (dominance_leq(a, b) && dominance_leq(b, c)) EXPECT_TRUE(dominance_leq(a, c));
                }
        }
}

TEST(RPartition, Statistics) {
    EXPECT_EQ(n_value(R("(-;111;-)")), 3);
    EXPECT_EQ(n_value(R("(3;-;-)")), 0);
    EXPECT_EQ(n_value(R("(-;1;11)")), 1);
    EXPECT_EQ(a_value(R("(-;-;11)")), 7);
    EXPECT_EQ(a_value(R("(-;111;-)")), 12);
    EXPECT_EQ(a_value(R("(3;-;-)")), 0);
    EXPECT_EQ(n_star(1, 3), 2);
    EXPECT_EQ(n_star(3, 3), 15);
    EXPECT_EQ(n_star(5, 1), 10);
}

TEST(RPartition, AValueExtremes) {
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r) {
            std::vector<Partition> top(static_cast<std::size_t>(r)), bottom(static_cast<std::size_t>(r));
            top.back() = Partition(static_cast<std::size_t>(n), 1);
            bottom.front() = Partition{n};
            for (const auto& l : enumerate_rpartitions(n, r)) {
                const int a = a_value(l);
                EXPECT_LE(a, n_star(n, r));
                EXPECT_GE(a, 0);
                EXPECT_EQ(a == n_star(n, r), l == RPartition(top)) << l;
                EXPECT_EQ(a == 0, l == RPartition(bottom)) << l;
            }
        }
}

TEST(RPartition, TauAndTranspose) {
    EXPECT_EQ(tau(R("(-;1;1)")), R("(1;-;1)"));
    EXPECT_EQ(tau(R("(-;11;-)")), R("(11;-;-)"));
    EXPECT_EQ(transpose(R("(2;-;-)")), R("(11;-;-)"));
    EXPECT_EQ(transpose(R("(21;-;-)")), R("(21;-;-)"));
    for (int r = 1; r <= 4; ++r)
        for (const auto& l : enumerate_rpartitions(3, r)) {
            EXPECT_EQ(tau(tau(l)), l);
            EXPECT_EQ(transpose(transpose(l)), l);
            EXPECT_EQ(weight_composition(transpose(l)), weight_composition(l));
        }
}

TEST(RPartition, WeightsAndP) {
    const auto m = weight_composition(R("(-;1;1)"));
    EXPECT_EQ(m.m, (std::vector<int>{0, 1, 1}));
    EXPECT_EQ(p_values(m), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(p_minus(m), 1);
    EXPECT_EQ(p_plus(m), 1);
    for (int r = 1; r <= 5; ++r) {
        Composition first{std::vector<int>(static_cast<std::size_t>(r), 0)}, last = first;
        first.m.front() = 4;
        last.m.back() = 4;
        EXPECT_EQ(p_minus(first), (r - 1) * 4);
        EXPECT_EQ(p_plus(first), r == 1 ? 0 : 4);
        EXPECT_EQ(p_minus(last), 0);
        EXPECT_EQ(p_plus(last), 0);
    }
}

TEST(RPartition, Dimensions) {
    EXPECT_EQ(dim_X(R("(1;1;1)")), 9);
    for (int n = 0; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r)
            for (const auto& l : enumerate_rpartitions(n, r)) {
                EXPECT_EQ(dim_Xm_unip(weight_composition(l)) - dim_X(l), 2 * n_value(l));
                EXPECT_EQ(d_lambda(l), n_value(l));
            }
    std::vector<Partition> parts(3);
    parts[0] = {4};
    EXPECT_EQ(dim_X(RPartition(parts)), 16 - 4 + 2 * 4);
}

TEST(Order, DefaultOrder) {
    const auto o = default_total_order(1, 3);
    ASSERT_EQ(o.size(), 3u);
    EXPECT_EQ(o[0], R("(-;-;1)"));
    EXPECT_EQ(o[1], R("(-;1;-)"));
    EXPECT_EQ(o[2], R("(1;-;-)"));
    EXPECT_EQ(o.position(R("(1;-;-)")), 2u);
    for (int n = 0; n <= 3; ++n)
        for (int r = 1; r <= 4; ++r) EXPECT_NO_THROW(default_total_order(n, r));
}

TEST(Order, RejectsIncompatibleOrders) {
    std::vector<std::string> bad{"(1;-;-)", "(-;1;-)", "(-;-;1)"};
    EXPECT_THROW(order_from_strings(bad, 1, 3), InvalidArgument);
    std::vector<std::string> short_list{"(-;-;1)", "(-;1;-)"};
    EXPECT_THROW(order_from_strings(short_list, 1, 3), InvalidArgument);
}

TEST(Order, LinearExtensions) {
    const auto single = sample_linear_extensions(1, 3, 4, 1);
    ASSERT_EQ(single.size(), 4u);
    for (const auto& o : single) EXPECT_EQ(o, default_total_order(1, 3));

    const auto a = sample_linear_extensions(2, 3, 5, 42);
    const auto b = sample_linear_extensions(2, 3, 5, 42);
    ASSERT_EQ(a.size(), 5u);
    std::set<std::vector<RPartition>> distinct;
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i], b[i]);
        distinct.insert(a[i].items());
    }
    EXPECT_EQ(distinct.size(), 5u);
}

TEST(Contingency, Enumeration) {
    Composition m{{1, 1, 0}}, mp{{0, 1, 1}};
    const auto hs = enumerate_contingency(m, mp);
    ASSERT_EQ(hs.size(), 2u);
    for (const auto& h : hs) {
        EXPECT_EQ(h.column_sums(), m);
        EXPECT_EQ(h.row_sums(), mp);
    }
    Composition full{{3, 0, 0}};
    const auto one = enumerate_contingency(full, full);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0](1, 1), 3);
    EXPECT_THROW(enumerate_contingency(Composition{{1, 0}}, Composition{{2, 0}}), InvalidArgument);
}

TEST(Contingency, TransposeBijection) {
    for (int r = 1; r <= 3; ++r) {
        const auto comps = enumerate_compositions(3, r);
        for (const auto& m : comps)
            for (const auto& mp : comps) {
                const auto a = enumerate_contingency(m, mp);
                const auto b = enumerate_contingency(mp, m);
                std::set<ContingencyMatrix> bt;
                for (const auto& h : b) bt.insert(h.transposed());
                ASSERT_EQ(a.size(), b.size());
                EXPECT_EQ(std::set<ContingencyMatrix>(a.begin(), a.end()), bt);
            }
    }
}
