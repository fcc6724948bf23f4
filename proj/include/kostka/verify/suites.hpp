#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kostka/factor/factorization.hpp"
#include "kostka/greencheck/green.hpp"
#include "kostka/io/fixtures.hpp"
#include "kostka/omega/omega.hpp"
#include "kostka/oracle/charge.hpp"

// Named verification suites shared by the command-line tool and the
// acceptance runner. Each returns a CheckReport; an empty violation list is a pass.

namespace kostka::verify {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> v{"fixtures", "lemma59", "thm55", "oracle", "symmetry", "classical-r1", "orders"};
    return v;
}

/// Every printed table against the solver, plus each table's self-consistency.
/// The printed IC^+ matrix is expected to differ from the candidate.
inline CheckReport fixtures_suite(const std::vector<std::string>& ids) {
    CheckReport rep{"fixtures", 0, 0, 0, {}};
    for (const auto& id : ids) {
        const auto f = io::load_fixture(id);
        for (const auto& s : io::fixture_consistency(f)) rep.violations.push_back("inconsistent table " + s);
        const auto res = io::solve_for_fixture(f);
        for (const auto& m : io::compare_fixture(f, res))
            rep.violations.push_back(id + " " + m.key + " " + m.where + ": printed " + m.expected + ", computed " + m.got);
        if (const auto it = f.matrices.find("ic_plus_printed"); it != f.matrices.end()) {
            if (it->second == ic_plus_candidate(res).matrix.in_t)
                rep.violations.push_back(id + ": IC+ candidate unexpectedly equals the printed IC+ matrix");
        }
        ++rep.checked;
    }
    return rep;
}

inline std::vector<std::string> default_fixture_ids() {
    std::vector<std::string> ids;
    for (const auto& id : io::fixture_ids())
        if (id != "n1rk") ids.push_back(id);
    for (int r = 2; r <= 6; ++r) ids.push_back("n1r" + std::to_string(r));
    return ids;
}

/// Lemma identities for every n' <= n and r' <= r.
inline CheckReport lemma59_suite(int n, int r) {
    CheckReport rep{"lemma59", n, r, 0, {}};
    for (int nn = 0; nn <= n; ++nn)
        for (int rr = 1; rr <= r; ++rr) {
            auto part = lemma59_check(nn, rr);
            rep.checked += part.checked;
            rep.violations.insert(rep.violations.end(), part.violations.begin(), part.violations.end());
        }
    return rep;
}

/// Coset route against the wreath-group fake degrees, entry by entry.
inline CheckReport oracle_suite(int n, int r, long wreath_limit = kWreathMaxWork) {
    CheckReport rep{"oracle", n, r, 0, {}};
    const auto items = enumerate_rpartitions(n, r);
    for (const auto& l : items)
        for (const auto& mu : items) {
            ++rep.checked;
            const auto fast = omega_entry_cosets(l, mu);
            const auto slow = omega_entry_bruteforce(l, mu, wreath_limit);
            if (fast != slow)
                rep.violations.push_back(l.to_string() + " " + mu.to_string() + ": cosets " + fast.to_string() +
                                         ", wreath " + slow.to_string());
        }
    return rep;
}

/// Structural invariants of a solved instance.
inline CheckReport symmetry_suite(const FactorizationResult& res) {
    CheckReport rep{"symmetry", res.n(), res.r(), 0, {}};
    const auto N = res.size();
    const auto& om = res.omega;
    auto bad = [&](const std::string& s) { rep.violations.push_back(s); };
    if (!(reconstruct_omega(res) == to_rational_matrix(om.entries))) bad("P- Lambda tP+ != Omega");
    if (!res.p_minus.is_lower_triangular()) bad("P- not lower triangular");
    if (!res.p_plus.is_lower_triangular()) bad("P+ not lower triangular");
    for (std::size_t i = 0; i < N; ++i) {
        const auto& l = res.order[i];
        if (res.p_minus(i, i) != LaurentPoly::monomial(res.a[i])) bad("P- diagonal at " + l.to_string());
        if (res.p_plus(i, i) != LaurentPoly::monomial(res.a[i])) bad("P+ diagonal at " + l.to_string());
        for (std::size_t j = 0; j < N; ++j) {
            ++rep.checked;
            const auto& mu = res.order[j];
            const auto& w = om.entries(i, j);
            const std::string cell = "(" + l.to_string() + ", " + mu.to_string() + ")";
            if (!w.has_nonnegative_integer_coefficients() || (!w.is_zero() && w.low_degree() < 0))
                bad("Omega not in Z>=0[t] at " + cell);
            if (w != om.at(transpose(l), transpose(mu))) bad("transpose symmetry fails at " + cell);
            if (res.r() <= 2) {
                if (w != om.entries(j, i)) bad("Omega not symmetric at " + cell);
                if (res.p_minus(i, j) != res.p_plus(i, j)) bad("P- != P+ at " + cell);
            }
            if (!res.p_minus(i, j).has_integer_coefficients() || !res.p_plus(i, j).has_integer_coefficients())
                bad("non-integer Kostka entry at " + cell);
        }
    }
    return rep;
}

/// r = 1: K~^- against the charge statistic, for every n' <= n.
inline CheckReport classical_suite(int n) {
    CheckReport rep{"classical-r1", n, 1, 0, {}};
    for (int nn = 1; nn <= n; ++nn) {
        const auto res = solve_factorization(omega_matrix(default_total_order(nn, 1)));
        for (const auto& l : res.order.items())
            for (const auto& mu : res.order.items()) {
                ++rep.checked;
                const auto want = oracle::modified_kostka_foulkes(l[0], mu[0]);
                if (res.k_minus(l, mu) != want)
                    rep.violations.push_back(l.to_string() + " " + mu.to_string() + ": solver " +
                                             res.k_minus(l, mu).to_string() + ", charge " + want.to_string());
            }
    }
    return rep;
}

/// Solves under sampled linear extensions of dominance. Differences on
/// dominance-comparable pairs count as violations only for r <= 2, where the
/// Kostka functions are known not to depend on the order; for r >= 3 they are
/// recorded as observations.
struct OrdersOutcome {
    CheckReport report;
    OrderSensitivity sensitivity;
};

inline OrdersOutcome orders_suite(int n, int r, int samples, std::uint64_t seed, const OmegaOptions& opt = {}) {
    OrdersOutcome out{{"orders", n, r, 0, {}}, order_sensitivity(sample_linear_extensions(n, r, samples, seed), opt)};
    out.report.checked = out.sensitivity.orders;
    if (r <= 2)
        for (const auto& e : out.sensitivity.comparable)
            out.report.violations.push_back(std::string("K") + e.sign + " " + e.lambda.to_string() + " " +
                                            e.mu.to_string() + " depends on the order");
    return out;
}

} // namespace kostka::verify
