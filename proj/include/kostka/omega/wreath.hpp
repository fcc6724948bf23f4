#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/cyclotomic.hpp"
#include "kostka/exact/laurent.hpp"
#include "kostka/exact/rational_function.hpp"
#include "kostka/rpart/rpartition.hpp"
#include "kostka/symgrp/characters.hpp"
#include "kostka/symgrp/permutation.hpp"

// Brute-force model of W_{n,r} = S_n x| (Z/rZ)^n. An element (sigma, a) acts
// on V = C^n by e_i -> zeta^{a_i} e_{sigma(i)}; composing the matrices gives
// (sigma, a)(tau, b) = (sigma tau, a o tau + b).

namespace kostka {

inline constexpr long kWreathMaxWork = 20000;  // bound on n * r^n

inline long wreath_work(int n, int r) {
    long v = n;
    for (int i = 0; i < n; ++i) v *= r;
    return v;
}

inline void check_wreath_bound(int n, int r, long limit = kWreathMaxWork) {
    if (wreath_work(n, r) > limit)
        throw BoundExceeded("wreath enumeration needs n * r^n <= " + std::to_string(limit));
}

class WreathElement {
public:
    WreathElement() = default;
    WreathElement(Permutation sigma, std::vector<int> colors, int r) : sigma_(std::move(sigma)), colors_(std::move(colors)), r_(r) {
        if (static_cast<int>(colors_.size()) != sigma_.size()) throw InvalidArgument("color vector has wrong length");
        for (auto& c : colors_) c = ((c % r_) + r_) % r_;
    }
    static WreathElement identity(int n, int r) {
        return WreathElement(Permutation::identity(n), std::vector<int>(static_cast<std::size_t>(n), 0), r);
    }

    const Permutation& sigma() const { return sigma_; }
    const std::vector<int>& colors() const { return colors_; }
    int r() const { return r_; }
    int n() const { return sigma_.size(); }

    friend WreathElement operator*(const WreathElement& x, const WreathElement& y) {
        std::vector<int> c(y.colors_.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = x.colors_[static_cast<std::size_t>(y.sigma_(static_cast<int>(i)))] + y.colors_[i];
        return WreathElement(x.sigma_ * y.sigma_, std::move(c), x.r_);
    }
    WreathElement inverse() const {
        const Permutation si = sigma_.inverse();
        std::vector<int> c(colors_.size());
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = -colors_[static_cast<std::size_t>(si(static_cast<int>(j)))];
        return WreathElement(si, std::move(c), r_);
    }

    /// Cycles of sigma paired with the color sum (mod r) along each cycle.
    std::vector<std::pair<int, int>> colored_cycles() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& c : sigma_.cycles()) {
            int s = 0;
            for (int p : c) s += colors_[static_cast<std::size_t>(p)];
            out.emplace_back(static_cast<int>(c.size()), s % r_);
        }
        return out;
    }

    /// Conjugacy class label: sorted multiset of (cycle length, color sum).
    std::vector<std::pair<int, int>> class_key() const {
        auto k = colored_cycles();
        std::sort(k.begin(), k.end());
        return k;
    }

    friend bool operator==(const WreathElement&, const WreathElement&) = default;

private:
    Permutation sigma_;
    std::vector<int> colors_;
    int r_ = 1;
};

using WreathClassKey = std::vector<std::pair<int, int>>;

/// Every element of W_{n,r}.
inline std::vector<WreathElement> wreath_elements(int n, int r, long limit = kWreathMaxWork) {
    check_wreath_bound(n, r, limit);
    std::vector<WreathElement> out;
    const auto perms = all_permutations(n);
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == colors.size()) {
            for (const auto& s : perms) out.emplace_back(s, colors, r);
            return;
        }
        for (int c = 0; c < r; ++c) {
            colors[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

inline Cyclotomic delta_value(const WreathElement& w) {
    return Cyclotomic::from_zeta_power(std::accumulate(w.colors().begin(), w.colors().end(), 0L), w.r());
}
inline int epsilon_value(const WreathElement& w) { return w.sigma().sign(); }
inline Cyclotomic detV_value(const WreathElement& w) { return delta_value(w).scaled(epsilon_value(w)); }

/// Polynomial in t with coefficients in Q(zeta_r), dense from degree 0.
class CycloPoly {
public:
    explicit CycloPoly(int r) : r_(r) {}
    CycloPoly(int r, const LaurentPoly& p) : r_(r) {
        for (const auto& [e, c] : p.terms()) {
            if (e < 0) throw InvalidArgument("CycloPoly needs nonnegative exponents");
            coeff(e) += Cyclotomic(r_, c);
        }
    }

    int conductor() const { return r_; }
    const std::vector<Cyclotomic>& coefficients() const { return c_; }

    Cyclotomic& coeff(int e) {
        while (static_cast<int>(c_.size()) <= e) c_.emplace_back(r_);
        return c_[static_cast<std::size_t>(e)];
    }

    friend CycloPoly operator*(const CycloPoly& a, const CycloPoly& b) {
        CycloPoly out(a.r_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                out.coeff(static_cast<int>(i + j)) += a.c_[i] * b.c_[j];
            }
        }
        return out;
    }
    CycloPoly& operator+=(const CycloPoly& o) {
        for (std::size_t i = 0; i < o.c_.size(); ++i) coeff(static_cast<int>(i)) += o.c_[i];
        return *this;
    }
    CycloPoly scaled(const Cyclotomic& s) const {
        CycloPoly out(r_);
        for (std::size_t i = 0; i < c_.size(); ++i) out.coeff(static_cast<int>(i)) = c_[i] * s;
        return out;
    }

    /// The rational polynomial with these coefficients; throws NotExact if any
    /// coefficient is irrational.
    LaurentPoly to_rational() const {
        LaurentPoly out;
        for (std::size_t i = 0; i < c_.size(); ++i) out.add_term(static_cast<int>(i), c_[i].as_rational());
        return out;
    }

private:
    int r_;
    std::vector<Cyclotomic> c_;
};

/// det_V(t - w) = prod over cycles c of (t^{|c|} - zeta^{s_c}).
inline CycloPoly wreath_charpoly(const WreathElement& w) {
    const int r = w.r();
    CycloPoly out(r, LaurentPoly(1));
    for (const auto& [len, s] : w.colored_cycles()) {
        CycloPoly f(r);
        f.coeff(len) += Cyclotomic(r, 1);
        f.coeff(0) -= Cyclotomic::from_zeta_power(s, r);
        out = out * f;
    }
    return out;
}

/// One conjugacy class of W_{n,r}.
struct WreathClass {
    WreathClassKey key;
    WreathElement rep;
    std::size_t size = 0;
};

/// W_{n,r} with its elements and conjugacy classes, built once per (n, r).
class WreathGroup {
public:
    WreathGroup(int n, int r, long limit = kWreathMaxWork) : n_(n), r_(r), elements_(wreath_elements(n, r, limit)) {
        for (const auto& w : elements_) {
            auto key = w.class_key();
            auto [it, inserted] = index_.try_emplace(key, classes_.size());
            if (inserted) classes_.push_back({key, w, 0});
            ++classes_[it->second].size;
        }
    }

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<WreathElement>& elements() const { return elements_; }
    const std::vector<WreathClass>& classes() const { return classes_; }
    std::size_t class_of(const WreathElement& w) const { return index_.at(w.class_key()); }
    BigInt order() const { return BigInt(static_cast<unsigned long>(elements_.size())); }

private:
    int n_, r_;
    std::vector<WreathElement> elements_;
    std::vector<WreathClass> classes_;
    std::map<WreathClassKey, std::size_t> index_;
};

inline const WreathGroup& wreath_group(int n, int r, long limit = kWreathMaxWork) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<WreathGroup>> groups;
    std::lock_guard lock(mu);
    auto& slot = groups[{n, r}];
    if (!slot) slot = std::make_unique<WreathGroup>(n, r, limit);
    return *slot;
}

/// The linear character of W_m given by delta^{j-1} on the j-th block.
inline Cyclotomic block_delta(const WreathElement& u, const Composition& m) {
    const auto blk = block_of(m);
    long e = 0;
    for (std::size_t i = 0; i < blk.size(); ++i) e += static_cast<long>(blk[i]) * u.colors()[i];
    return Cyclotomic::from_zeta_power(e, u.r());
}

/// chi~^lambda(u) = chi^lambda(sigma) * delta_m(u) for u in W_m.
inline Cyclotomic extended_young_character(const RPartition& l, const WreathElement& u) {
    const Composition m = weight_composition(l);
    return block_delta(u, m).scaled(young_character(l, u.sigma(), m));
}

/// rho^lambda(w) = Ind_{W_m}^{W} chi~^lambda, summed over the whole group.
inline Cyclotomic rho_character_uncached(const RPartition& l, const WreathElement& w) {
    const int n = w.n(), r = w.r();
    if (l.n() != n || l.r() != r) throw InvalidArgument("rho_character: shape mismatch for " + l.to_string());
    const Composition m = weight_composition(l);
    const auto& group = wreath_group(n, r);
    Cyclotomic acc(r);
    for (const auto& g : group.elements()) {
        const WreathElement u = g.inverse() * w * g;
        if (!in_young_subgroup(u.sigma(), m)) continue;
        acc += extended_young_character(l, u);
    }
    BigInt wm = 1;
    for (int v : m.m) {
        BigInt rp;
        mpz_ui_pow_ui(rp.get_mpz_t(), static_cast<unsigned long>(r), static_cast<unsigned long>(v));
        wm *= factorial(v) * rp;
    }
    return acc.scaled(BigRational(BigInt(1), wm));
}

/// Cached by (lambda, colored cycle type); a class function, so exact.
inline Cyclotomic rho_character(const RPartition& l, const WreathElement& w) {
    static std::mutex mu;
    static std::map<std::pair<RPartition, WreathClassKey>, Cyclotomic> cache;
    auto key = std::make_pair(l, w.class_key());
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const Cyclotomic v = rho_character_uncached(l, w);
    std::lock_guard lock(mu);
    cache.emplace(std::move(key), v);
    return v;
}

namespace detail {

/// det_V(w) chi * prod_i (t^{d_i} - 1) / det_V(t - w) as a polynomial over Q(zeta_r).
///
/// Each 1/(t^l - zeta^s) is rewritten as (sum_k t^{l(r-1-k)} zeta^{sk}) / (t^{rl} - 1);
/// the remaining prod_i (t^{d_i} - 1) / prod_c (t^{r l_c} - 1) is an integer
/// polynomial whenever w lies in the group whose degrees are d_i.
inline CycloPoly fake_degree_term(const WreathElement& w, const Cyclotomic& chi, const LaurentPoly& degree_product) {
    const int r = w.r();
    LaurentPoly bottom(1);
    CycloPoly numer(r, LaurentPoly(1));
    for (const auto& [len, s] : w.colored_cycles()) {
        bottom *= t_power_minus_one(r * len);
        CycloPoly geo(r);
        for (int k = 0; k < r; ++k) geo.coeff(len * (r - 1 - k)) += Cyclotomic::from_zeta_power(static_cast<long>(s) * k, r);
        numer = numer * geo;
    }
    auto quotient = divide_exact(degree_product, bottom);
    if (!quotient) throw InvariantViolation("torus factor does not divide the degree product");
    return (numer * CycloPoly(r, *quotient)).scaled(detV_value(w) * chi);
}

} // namespace detail

/// prod_i (t^{ir} - 1), the degree product of W_{n,r}.
inline LaurentPoly wreath_degree_product(int n, int r) {
    LaurentPoly top(1);
    for (int i = 1; i <= n; ++i) top *= t_power_minus_one(i * r);
    return top;
}

/// R(chi) for a class function given on the classes of `group`:
/// prod_i (t^{ir} - 1) / |W| * sum_w det_V(w) chi(w) / det_V(t - w).
inline LaurentPoly fake_degree(const WreathGroup& group, const std::vector<Cyclotomic>& chi) {
    const int r = group.r();
    if (chi.size() != group.classes().size()) throw InvalidArgument("class function has wrong length");
    const LaurentPoly top = wreath_degree_product(group.n(), r);
    CycloPoly acc(r);
    for (std::size_t c = 0; c < chi.size(); ++c) {
        if (chi[c].is_zero()) continue;
        const auto& cls = group.classes()[c];
        acc += detail::fake_degree_term(cls.rep, chi[c].scaled(BigRational(static_cast<long>(cls.size))), top);
    }
    return acc.to_rational().scaled(BigRational(BigInt(1), group.order()));
}

/// The same sum taken element by element over an arbitrary reflection
/// subgroup, given its elements and degree product.
inline LaurentPoly fake_degree_over(const std::vector<WreathElement>& elements, const LaurentPoly& degree_product,
                                    const std::function<Cyclotomic(const WreathElement&)>& chi) {
    if (elements.empty()) throw InvalidArgument("fake degree over an empty set");
    const int r = elements.front().r();
    CycloPoly acc(r);
    for (const auto& w : elements) {
        const Cyclotomic v = chi(w);
        if (!v.is_zero()) acc += detail::fake_degree_term(w, v, degree_product);
    }
    return acc.to_rational().scaled(BigRational(1, static_cast<long>(elements.size())));
}

/// omega_{lambda,mu} = t^{N*} R(rho^lambda (x) conj(rho^mu) (x) conj(det_V)),
/// with conj(chi)(w) = chi(w^{-1}).
inline LaurentPoly omega_entry_bruteforce(const RPartition& l, const RPartition& mu, long limit = kWreathMaxWork) {
    require_same_shape(l, mu);
    const int n = l.n(), r = l.r();
    const auto& group = wreath_group(n, r, limit);
    std::vector<Cyclotomic> chi;
    for (const auto& cls : group.classes()) {
        const WreathElement wi = cls.rep.inverse();
        chi.push_back(rho_character(l, cls.rep) * rho_character(mu, wi) * detV_value(wi));
    }
    return fake_degree(group, chi).shift(n_star(n, r));
}

} // namespace kostka
