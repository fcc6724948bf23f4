#include <gtest/gtest.h>

#include "kostka/factor/factorization.hpp"
#include "kostka/oracle/charge.hpp"

using namespace kostka;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
RationalFunction RF(const char* s) { return RationalFunction::parse(s); }

FactorizationResult solve(const OrderedIndex& order) { return solve_factorization(omega_matrix(order)); }

void expect_structure(const FactorizationResult& res) {
    const auto N = res.size();
    EXPECT_TRUE(res.p_minus.is_lower_triangular());
    EXPECT_TRUE(res.p_plus.is_lower_triangular());
    for (std::size_t k = 0; k < N; ++k) {
        EXPECT_EQ(res.p_minus(k, k), LaurentPoly::monomial(res.a[k]));
        EXPECT_EQ(res.p_plus(k, k), LaurentPoly::monomial(res.a[k]));
    }
    EXPECT_EQ(reconstruct_omega(res), to_rational_matrix(res.omega.entries));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            EXPECT_TRUE(res.p_minus(i, j).has_integer_coefficients());
            EXPECT_TRUE(res.p_plus(i, j).has_integer_coefficients());
        }
}

} // namespace

TEST(Factor, SmallestExample) {
    const auto res = solve(order_from_strings({"(-;-;1)", "(-;1;-)", "(1;-;-)"}, 1, 3));
    const char* pm[3][3] = {{"t^2", "0", "0"}, {"t", "t", "0"}, {"1", "1", "1"}};
    const char* pp[3][3] = {{"t^2", "0", "0"}, {"1", "t", "0"}, {"t", "0", "1"}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_EQ(res.p_minus(i, j), P(pm[i][j]));
            EXPECT_EQ(res.p_plus(i, j), P(pp[i][j]));
        }
    EXPECT_EQ(res.lambda[0], RF("1"));
    EXPECT_EQ(res.lambda[1], RF("t^2 - t^-1"));
    EXPECT_EQ(res.lambda[2], RF("t^4 - t"));
    expect_structure(res);
}

TEST(Factor, OneBoxClosedForms) {
    // Built from the closed forms, not from the solver.
    for (int r = 2; r <= 6; ++r) {
        const auto order = default_total_order(1, r);
        ASSERT_EQ(order.size(), static_cast<std::size_t>(r));
        const auto res = solve(order);
        expect_structure(res);
        const auto th = theta_matrix(res);
        const auto lp = lambda_prime(res);
        const auto icm = ic_minus_matrix(res);
        const auto icp = ic_plus_candidate(res);
        for (int i = 0; i < r; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            EXPECT_EQ(res.lambda[ui], i == 0 ? RF("1")
                                             : RationalFunction(LaurentPoly::monomial(2 * i) -
                                                                LaurentPoly::monomial(2 * i - r)));
            EXPECT_EQ(th[ui], LaurentPoly::monomial(i == 0 ? 0 : r - 2 * i));
            EXPECT_EQ(lp[ui], i == 0 ? RF("1") : RationalFunction(t_power_minus_one(r)));
            for (int j = 0; j < r; ++j) {
                const auto uj = static_cast<std::size_t>(j);
                const LaurentPoly zero;
                EXPECT_EQ(res.p_minus(ui, uj), j <= i ? LaurentPoly::monomial(r - 1 - i) : zero);
                LaurentPoly plus = zero;
                if (i == j) plus = LaurentPoly::monomial(r - 1 - i);
                else if (j == 0 && i > 0) plus = LaurentPoly::monomial(i - 1);
                EXPECT_EQ(res.p_plus(ui, uj), plus);
                EXPECT_TRUE(icm.ok(ui, uj));
                EXPECT_EQ(icm.in_s(ui, uj), j <= i ? LaurentPoly(1) : zero);
                EXPECT_TRUE(icp.matrix.ok(ui, uj));
                EXPECT_EQ(icp.matrix.in_s(ui, uj), (i == j || j == 0) ? LaurentPoly(1) : zero);
            }
        }
    }
}

TEST(Factor, SymmetricCasesAndInvariants) {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r) {
            const auto res = solve(default_total_order(n, r));
            expect_structure(res);
            if (r <= 2) EXPECT_EQ(res.p_minus, res.p_plus) << n << " " << r;
        }
}

TEST(Factor, ClassicalLimitMatchesCharge) {
    for (int n = 1; n <= 5; ++n) {
        const auto res = solve(default_total_order(n, 1));
        expect_structure(res);
        for (const auto& l : res.order.items())
            for (const auto& mu : res.order.items())
                EXPECT_EQ(res.k_minus(l, mu), oracle::modified_kostka_foulkes(l[0], mu[0]))
                    << l.to_string() << " " << mu.to_string();
    }
}

TEST(Factor, Unmodify) {
    EXPECT_EQ(unmodify_kostka(LaurentPoly::monomial(4), 4), RF("1"));
    // r = 1: K~_{(2),(1^2)} = 1 and a((1^2)) = 1 give the classical K = t.
    EXPECT_EQ(unmodify_kostka(LaurentPoly(1), 1), RF("t"));
    EXPECT_EQ(oracle::kostka_foulkes({2}, {1, 1}), P("t"));
    const auto k = P("t^5 + 2*t^2 - 3");
    EXPECT_EQ(unmodify_kostka(unmodify_kostka(k, 6).to_laurent(), 6), RationalFunction(k));
}

TEST(Factor, OrderIndependenceForSmallR) {
    EXPECT_TRUE(order_sensitivity(sample_linear_extensions(1, 4, 3, 1)).comparable.empty());
    for (int n = 1; n <= 4; ++n) {
        const auto rep = order_sensitivity(sample_linear_extensions(n, 1, 4, 11));
        EXPECT_TRUE(rep.comparable.empty() && rep.incomparable.empty()) << n;
    }
    for (int n = 1; n <= 3; ++n) {
        const auto rep = order_sensitivity(sample_linear_extensions(n, 2, 4, 5));
        EXPECT_TRUE(rep.comparable.empty()) << n;
    }
}

TEST(Factor, VanishingPivotIsReported) {
    auto om = omega_matrix(default_total_order(1, 2));
    om.entries(0, 0) = LaurentPoly();
    EXPECT_THROW(solve_factorization(om), InvariantViolation);
}
