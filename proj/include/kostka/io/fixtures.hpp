#pragma once

#include <map>
#include <string>
#include <vector>

#include "kostka/embedded_fixtures.hpp"
#include "kostka/error.hpp"
#include "kostka/factor/factorization.hpp"
#include "kostka/io/serialize.hpp"

namespace kostka::io {

/// Published tables for one (n, r), keyed by the JSON field names.
struct Fixture {
    std::string id;
    int n = 0, r = 1;
    OrderedIndex order;
    std::vector<int> a, a_tau;
    std::map<std::string, LaurentMatrix> matrices;
    std::map<std::string, std::vector<RationalFunction>> diagonals;
};

namespace detail {

inline const std::vector<std::string>& matrix_keys() {
    static const std::vector<std::string> v{"omega", "p_minus", "p_plus", "p_plus_modified",
                                            "ic_minus_modified", "ic_plus_modified", "ic_plus_printed"};
    return v;
}

inline const std::vector<std::string>& diagonal_keys() {
    static const std::vector<std::string> v{"lambda", "xi", "theta", "lambda_prime"};
    return v;
}

inline Fixture fixture_from_json(const json& j) {
    Fixture f;
    f.id = j.at("id").get<std::string>();
    f.n = j.at("n").get<int>();
    f.r = j.at("r").get<int>();
    f.order = order_from_json(j.at("order"), f.n, f.r);
    if (j.contains("a")) f.a = j["a"].get<std::vector<int>>();
    if (j.contains("a_tau")) f.a_tau = j["a_tau"].get<std::vector<int>>();
    for (const auto& k : matrix_keys())
        if (j.contains(k)) {
            f.matrices[k] = laurent_matrix_from_json(j[k]);
            if (f.matrices[k].size() != f.order.size()) throw ParseError("fixture " + f.id + ": " + k + " has wrong size");
        }
    for (const auto& k : diagonal_keys())
        if (j.contains(k)) {
            f.diagonals[k] = rational_list_from_json(j[k]);
            if (f.diagonals[k].size() != f.order.size()) throw ParseError("fixture " + f.id + ": " + k + " has wrong length");
        }
    return f;
}

} // namespace detail

/// n = 1 and any r, generated from the closed forms for the one-box case.
/// Position i (0-based) holds (1) in component r - i.
inline Fixture one_box_fixture(int r) {
    if (r < 2) throw InvalidArgument("one-box fixture needs r >= 2");
    Fixture f;
    f.id = "n1r" + std::to_string(r);
    f.n = 1;
    f.r = r;
    std::vector<RPartition> items;
    for (int i = 0; i < r; ++i) {
        std::vector<Partition> parts(static_cast<std::size_t>(r));
        parts[static_cast<std::size_t>(r - 1 - i)] = {1};
        items.emplace_back(parts);
    }
    f.order = OrderedIndex(items, 1, r);
    const auto N = static_cast<std::size_t>(r);
    LaurentMatrix pm(N), pp(N), icm(N), icp(N);
    std::vector<RationalFunction> lam, theta, lprime;
    for (int i = 0; i < r; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        f.a.push_back(r - 1 - i);
        for (int j = 0; j <= i; ++j) {
            pm(ui, static_cast<std::size_t>(j)) = LaurentPoly::monomial(r - 1 - i);
            icm(ui, static_cast<std::size_t>(j)) = LaurentPoly(1);
        }
        pp(ui, ui) = LaurentPoly::monomial(r - 1 - i);
        icp(ui, ui) = LaurentPoly(1);
        if (i > 0) {
            pp(ui, 0) = LaurentPoly::monomial(i - 1);
            icp(ui, 0) = LaurentPoly(1);
        }
        lam.emplace_back(i == 0 ? LaurentPoly(1) : LaurentPoly::monomial(2 * i) - LaurentPoly::monomial(2 * i - r));
        theta.emplace_back(LaurentPoly::monomial(i == 0 ? 0 : r - 2 * i));
        lprime.emplace_back(i == 0 ? LaurentPoly(1) : t_power_minus_one(r));
    }
    f.matrices = {{"p_minus", pm}, {"p_plus", pp}, {"ic_minus_modified", icm}, {"ic_plus_modified", icp}};
    f.diagonals = {{"lambda", lam}, {"theta", theta}, {"lambda_prime", lprime}};
    return f;
}

inline std::vector<std::string> fixture_ids() {
    std::vector<std::string> out;
    for (const auto& [id, _] : embedded::fixtures) out.emplace_back(id);
    out.emplace_back("n1rk");
    return out;
}

/// Loads an embedded fixture by id; "n1r<k>" ids not embedded are generated.
inline Fixture load_fixture(const std::string& id) {
    for (const auto& [fid, text] : embedded::fixtures)
        if (fid == id) return detail::fixture_from_json(json::parse(text));
    if (id.size() > 3 && id.rfind("n1r", 0) == 0) {
        try {
            return one_box_fixture(std::stoi(id.substr(3)));
        } catch (const std::logic_error&) {
        }
    }
    throw InvalidArgument("unknown fixture: " + id);
}

/// Checks a fixture against itself: P^- and P^+ lower triangular, and where
/// P^-, the Lambda diagonal and P^+ are all present, P^- Lambda tP^+ equals the
/// printed Omega (or, without a printed Omega, lies in Z_{>=0}[t]).
inline std::vector<std::string> fixture_consistency(const Fixture& f) {
    std::vector<std::string> out;
    const auto pm = f.matrices.find("p_minus");
    const auto pp = f.matrices.find("p_plus");
    auto lam = f.diagonals.find("lambda");
    if (lam == f.diagonals.end()) lam = f.diagonals.find("xi");
    if (pm != f.matrices.end() && !pm->second.is_lower_triangular()) out.push_back(f.id + ": P- not lower triangular");
    if (pp != f.matrices.end() && !pp->second.is_lower_triangular()) out.push_back(f.id + ": P+ not lower triangular");
    if (pm == f.matrices.end() || pp == f.matrices.end() || lam == f.diagonals.end()) return out;
    const auto rec = to_rational_matrix(pm->second) * SquareMatrix<RationalFunction>::diagonal(lam->second) *
                     to_rational_matrix(pp->second).transpose();
    const auto om = f.matrices.find("omega");
    for (std::size_t i = 0; i < rec.size(); ++i)
        for (std::size_t j = 0; j < rec.size(); ++j) {
            const auto& v = rec(i, j);
            const std::string cell = f.id + ": (" + f.order[i].to_string() + ", " + f.order[j].to_string() + ")";
            if (om != f.matrices.end()) {
                if (!(v == RationalFunction(om->second(i, j)))) out.push_back(cell + " reconstruction " + v.to_string());
            } else {
                auto lp = v.try_to_laurent();
                if (!lp || !lp->has_nonnegative_integer_coefficients() || (!lp->is_zero() && lp->low_degree() < 0))
                    out.push_back(cell + " reconstruction not in Z>=0[t]: " + v.to_string());
            }
        }
    return out;
}

/// One mismatch between a fixture table and a computed value.
struct FixtureMismatch {
    std::string key;
    std::string where;
    std::string expected, got;
};

namespace detail {

inline void compare_matrix(const Fixture& f, const std::string& key, const LaurentMatrix& got,
                           std::vector<FixtureMismatch>& out) {
    const auto it = f.matrices.find(key);
    if (it == f.matrices.end()) return;
    for (std::size_t i = 0; i < got.size(); ++i)
        for (std::size_t j = 0; j < got.size(); ++j)
            if (it->second(i, j) != got(i, j))
                out.push_back({key, "(" + f.order[i].to_string() + ", " + f.order[j].to_string() + ")",
                               it->second(i, j).to_string(), got(i, j).to_string()});
}

template <class T>
void compare_diagonal(const Fixture& f, const std::string& key, const std::vector<T>& got,
                      std::vector<FixtureMismatch>& out) {
    const auto it = f.diagonals.find(key);
    if (it == f.diagonals.end()) return;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (!(it->second[i] == RationalFunction(got[i])))
            out.push_back({key, f.order[i].to_string(), it->second[i].to_string(), got[i].to_string()});
}

inline void compare_ints(const Fixture& f, const std::string& key, const std::vector<int>& want,
                         const std::vector<int>& got, std::vector<FixtureMismatch>& out) {
    if (want.empty()) return;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (want[i] != got[i])
            out.push_back({key, f.order[i].to_string(), std::to_string(want[i]), std::to_string(got[i])});
}

} // namespace detail

/// Every table of the fixture except "ic_plus_printed", which is recorded in
/// the paper as differing from the candidate and is compared separately.
inline std::vector<FixtureMismatch> compare_fixture(const Fixture& f, const FactorizationResult& res) {
    if (!(f.order == res.order)) throw InvalidArgument("fixture " + f.id + " and result use different orders");
    std::vector<FixtureMismatch> out;
    detail::compare_ints(f, "a", f.a, res.a, out);
    detail::compare_ints(f, "a_tau", f.a_tau, res.a_tau, out);
    detail::compare_matrix(f, "omega", res.omega.entries, out);
    detail::compare_matrix(f, "p_minus", res.p_minus, out);
    detail::compare_matrix(f, "p_plus", res.p_plus, out);
    detail::compare_matrix(f, "p_plus_modified", modified_pplus(res), out);
    detail::compare_matrix(f, "ic_minus_modified", ic_minus_matrix(res).in_t, out);
    detail::compare_matrix(f, "ic_plus_modified", ic_plus_candidate(res).matrix.in_t, out);
    detail::compare_diagonal(f, "lambda", res.lambda, out);
    detail::compare_diagonal(f, "xi", res.lambda, out);
    detail::compare_diagonal(f, "theta", theta_matrix(res), out);
    detail::compare_diagonal(f, "lambda_prime", lambda_prime(res), out);
    return out;
}

/// Solves the factorization in the fixture's own order.
inline FactorizationResult solve_for_fixture(const Fixture& f, const OmegaOptions& opt = {}) {
    return solve_factorization(omega_matrix(f.order, opt));
}

} // namespace kostka::io
