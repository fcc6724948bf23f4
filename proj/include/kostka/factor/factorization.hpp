#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/laurent.hpp"
#include "kostka/exact/matrix.hpp"
#include "kostka/exact/rational_function.hpp"
#include "kostka/omega/omega.hpp"
#include "kostka/rpart/order.hpp"
#include "kostka/rpart/rpartition.hpp"

namespace kostka {

/// P^- Lambda tP^+ = Omega, with P^+- lower unitriangular up to the
/// diagonal t^{a(lambda)} in the given total order.
struct FactorizationResult {
    OrderedIndex order;
    OmegaMatrix omega;
    std::vector<int> a;      // a(lambda) by position
    std::vector<int> a_tau;  // a(tau(lambda)) by position
    LaurentMatrix p_minus;
    LaurentMatrix p_plus;
    std::vector<RationalFunction> lambda;

    std::size_t size() const { return order.size(); }
    int n() const { return order.n(); }
    int r() const { return order.r(); }
    const LaurentPoly& k_minus(const RPartition& l, const RPartition& mu) const {
        return p_minus(order.position(l), order.position(mu));
    }
    const LaurentPoly& k_plus(const RPartition& l, const RPartition& mu) const {
        return p_plus(order.position(l), order.position(mu));
    }
};

namespace detail {

inline std::string cell_name(const OrderedIndex& order, std::size_t i, std::size_t j) {
    return "(" + order[i].to_string() + ", " + order[j].to_string() + ")";
}

inline LaurentPoly laurent_or_throw(const RationalFunction& f, const char* what, const OrderedIndex& order,
                                    std::size_t i, std::size_t j) {
    auto v = f.try_to_laurent();
    if (!v) throw NotExact(std::string(what) + " entry " + cell_name(order, i, j) + " is not a Laurent polynomial: " + f.to_string());
    return *v;
}

} // namespace detail

/// Forward elimination in the order of `omega`. `a` gives the diagonal
/// exponents; it defaults to a(lambda).
inline FactorizationResult solve_factorization(const OmegaMatrix& omega,
                                               const std::optional<std::vector<int>>& a_override = std::nullopt) {
    const auto& order = omega.order;
    const std::size_t N = order.size();
    FactorizationResult res{order, omega, {}, {}, LaurentMatrix(N), LaurentMatrix(N), {}};
    for (const auto& l : order.items()) {
        res.a.push_back(a_value(l));
        res.a_tau.push_back(a_value(tau(l)));
    }
    if (a_override) {
        if (a_override->size() != N) throw InvalidArgument("a-value list has wrong length");
        res.a = *a_override;
    }

    // M = Lambda tP^+, upper triangular.
    SquareMatrix<RationalFunction> M(N), pm(N);
    for (std::size_t k = 0; k < N; ++k) {
        const RationalFunction unit_inv(LaurentPoly::monomial(-res.a[k]));
        pm(k, k) = RationalFunction(LaurentPoly::monomial(res.a[k]));
        for (std::size_t b = k; b < N; ++b) {
            RationalFunction s(omega.entries(k, b));
            for (std::size_t g = 0; g < k; ++g)
                if (!pm(k, g).is_zero() && !M(g, b).is_zero()) s = s - pm(k, g) * M(g, b);
            M(k, b) = s * unit_inv;
        }
        if (M(k, k).is_zero())
            throw InvariantViolation("vanishing pivot at position " + std::to_string(k) + " " + order[k].to_string());
        for (std::size_t al = k + 1; al < N; ++al) {
            RationalFunction s(omega.entries(al, k));
            for (std::size_t g = 0; g < k; ++g)
                if (!pm(al, g).is_zero() && !M(g, k).is_zero()) s = s - pm(al, g) * M(g, k);
            pm(al, k) = s / M(k, k);
        }
    }
    res.lambda.resize(N);
    for (std::size_t k = 0; k < N; ++k) {
        res.lambda[k] = M(k, k) * RationalFunction(LaurentPoly::monomial(-res.a[k]));
        for (std::size_t b = k; b < N; ++b)
            res.p_plus(b, k) = detail::laurent_or_throw(M(k, b) / res.lambda[k], "P+", order, b, k);
        for (std::size_t al = k; al < N; ++al)
            res.p_minus(al, k) = detail::laurent_or_throw(pm(al, k), "P-", order, al, k);
    }
    return res;
}

/// P^- diag(Lambda) tP^+ over Q(t).
inline SquareMatrix<RationalFunction> reconstruct_omega(const FactorizationResult& res) {
    const auto pm = to_rational_matrix(res.p_minus);
    const auto pp = to_rational_matrix(res.p_plus);
    return pm * SquareMatrix<RationalFunction>::diagonal(res.lambda) * pp.transpose();
}

/// Theta = Diag(t^{a(lambda) - a(tau(lambda))}).
inline std::vector<LaurentPoly> theta_matrix(const FactorizationResult& res) {
    std::vector<LaurentPoly> out;
    for (std::size_t k = 0; k < res.size(); ++k) out.push_back(LaurentPoly::monomial(res.a[k] - res.a_tau[k]));
    return out;
}

/// Lambda' = Lambda Theta.
inline std::vector<RationalFunction> lambda_prime(const FactorizationResult& res) {
    const auto th = theta_matrix(res);
    std::vector<RationalFunction> out;
    for (std::size_t k = 0; k < res.size(); ++k) out.push_back(res.lambda[k] * RationalFunction(th[k]));
    return out;
}

/// P'' = P^+ Theta^{-1}.
inline LaurentMatrix modified_pplus(const FactorizationResult& res) {
    LaurentMatrix out(res.size());
    for (std::size_t i = 0; i < res.size(); ++i)
        for (std::size_t j = 0; j < res.size(); ++j) out(i, j) = res.p_plus(i, j).shift(res.a_tau[j] - res.a[j]);
    return out;
}

/// A rescaled Kostka matrix with per-entry validity as a polynomial in s = t^r.
struct FlaggedMatrix {
    LaurentMatrix in_t;  // the rescaled entry as a function of t
    LaurentMatrix in_s;  // contracted to s = t^r where valid, otherwise zero
    std::vector<char> valid;

    bool ok(std::size_t i, std::size_t j) const { return valid[i * in_t.size() + j] != 0; }
    bool all_valid() const {
        return std::all_of(valid.begin(), valid.end(), [](char c) { return c != 0; });
    }
};

namespace detail {

inline FlaggedMatrix flag_in_tr(LaurentMatrix m, int r) {
    const std::size_t N = m.size();
    FlaggedMatrix out{std::move(m), LaurentMatrix(N), std::vector<char>(N * N, 0)};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            const auto& e = out.in_t(i, j);
            if (e.is_poly_in_tr(r) && e.has_nonnegative_integer_coefficients()) {
                out.valid[i * N + j] = 1;
                out.in_s(i, j) = e.contract_tr(r);
            }
        }
    return out;
}

} // namespace detail

/// t^{-a(lambda)} K~^-_{lambda,mu}(t), flagged where it is a polynomial in
/// t^r with nonnegative integer coefficients.
inline FlaggedMatrix ic_minus_matrix(const FactorizationResult& res) {
    LaurentMatrix m(res.size());
    for (std::size_t i = 0; i < res.size(); ++i)
        for (std::size_t j = 0; j < res.size(); ++j) m(i, j) = res.p_minus(i, j).shift(-res.a[i]);
    return detail::flag_in_tr(std::move(m), res.r());
}

/// Columns nu whose weight composition m'' has m''_i = 0 for i <= r - 2.
inline bool ic_plus_hypothesis(const RPartition& nu) {
    const auto m = weight_composition(nu);
    for (int i = 0; i + 2 < m.r(); ++i)
        if (m[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

struct IcPlusCandidate {
    FlaggedMatrix matrix;
    std::vector<char> hypothesis;  // by column
};

/// t^{-a(tau(mu)) - a(nu) + a(tau(nu))} K~^+_{mu,nu}(t). Only the columns
/// with hypothesis set are asserted to be IC^+ values.
inline IcPlusCandidate ic_plus_candidate(const FactorizationResult& res) {
    const std::size_t N = res.size();
    LaurentMatrix m(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m(i, j) = res.p_plus(i, j).shift(-res.a_tau[i] - res.a[j] + res.a_tau[j]);
    IcPlusCandidate out{detail::flag_in_tr(std::move(m), res.r()), {}};
    for (const auto& nu : res.order.items()) out.hypothesis.push_back(ic_plus_hypothesis(nu) ? 1 : 0);
    return out;
}

/// K(t) = t^{a(mu)} K~(t^{-1}).
inline RationalFunction unmodify_kostka(const LaurentPoly& k_tilde, int a_mu) {
    return RationalFunction(k_tilde.invert_variable().shift(a_mu));
}

/// Entries of K~^+- that differ between total orders.
struct OrderSensitivity {
    struct Entry {
        RPartition lambda, mu;
        char sign;  // '-' or '+'
        std::vector<LaurentPoly> values;  // one per order
    };
    std::vector<Entry> comparable;    // mu <= lambda in dominance
    std::vector<Entry> incomparable;  // the rest
    std::size_t orders = 0;
};

inline OrderSensitivity order_sensitivity(const std::vector<OrderedIndex>& orders, const OmegaOptions& opt = {}) {
    OrderSensitivity rep;
    rep.orders = orders.size();
    if (orders.empty()) return rep;
    std::vector<FactorizationResult> sols;
    for (const auto& o : orders) sols.push_back(solve_factorization(omega_matrix(o, opt)));
    const auto& items = orders.front().items();
    for (const auto& l : items)
        for (const auto& mu : items)
            for (char sign : {'-', '+'}) {
                std::vector<LaurentPoly> vals;
                for (const auto& s : sols) vals.push_back(sign == '-' ? s.k_minus(l, mu) : s.k_plus(l, mu));
                if (std::all_of(vals.begin(), vals.end(), [&](const LaurentPoly& v) { return v == vals.front(); }))
                    continue;
                OrderSensitivity::Entry e{l, mu, sign, std::move(vals)};
                (dominance_leq(mu, l) ? rep.comparable : rep.incomparable).push_back(std::move(e));
            }
    return rep;
}

} // namespace kostka
