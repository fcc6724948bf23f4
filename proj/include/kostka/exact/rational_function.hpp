#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/big_rational.hpp"
#include "kostka/exact/laurent.hpp"

namespace kostka {

namespace detail {

/// Dense polynomial with ascending coefficients; no trailing zeros.
template <class Coeff>
using Dense = std::vector<Coeff>;

template <class Coeff>
void trim(Dense<Coeff>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Splits a nonzero Laurent polynomial as t^low * P(t) with P(0) != 0.
inline std::pair<int, Dense<BigRational>> split_low(const LaurentPoly& p) {
    const int low = p.low_degree();
    Dense<BigRational> out(static_cast<std::size_t>(p.degree() - low + 1));
    for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - low)] = c;
    return {low, out};
}

inline LaurentPoly from_dense(const Dense<BigRational>& p, int low = 0) {
    LaurentPoly out;
    for (std::size_t i = 0; i < p.size(); ++i) out.add_term(low + static_cast<int>(i), p[i]);
    return out;
}

/// Scales a rational polynomial to a primitive integer polynomial.
inline Dense<BigInt> primitive_integer(const Dense<BigRational>& p) {
    BigInt lcm_den = 1;
    for (const auto& c : p) lcm_den = lcm(lcm_den, c.denominator());
    Dense<BigInt> out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c.numerator() * (lcm_den / c.denominator()));
    BigInt g = 0;
    for (const auto& c : out) g = gcd(g, c);
    if (g != 0 && g != 1)
        for (auto& c : out) c /= g;
    return out;
}

inline BigInt content(const Dense<BigInt>& p) {
    BigInt g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
inline Dense<BigInt> pseudo_remainder(Dense<BigInt> a, const Dense<BigInt>& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    const long full_steps = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
    long steps = 0;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const BigInt la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
        ++steps;
    }
    if (steps < full_steps && !a.empty()) {
        BigInt f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(full_steps - steps));
        for (auto& c : a) c *= f;
    }
    return a;
}

/// Greatest common divisor of two nonzero integer polynomials via the
/// subresultant PRS; the result is primitive with positive leading coefficient.
inline Dense<BigInt> subresultant_gcd(Dense<BigInt> a, Dense<BigInt> b) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return a;
    const BigInt ca = content(a), cb = content(b);
    for (auto& c : a) c /= ca;
    for (auto& c : b) c /= cb;
    BigInt g = 1, h = 1;
    while (true) {
        const long delta = static_cast<long>(a.size()) - static_cast<long>(b.size());
        Dense<BigInt> r = pseudo_remainder(a, b);
        if (r.empty()) break;
        if (r.size() == 1) return {BigInt(1)};
        BigInt hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        const BigInt divisor = g * hd;
        for (auto& c : r) c /= divisor;
        a = std::move(b);
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            BigInt gd, hd1;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            h = gd / hd1;
        }
    }
    const BigInt cb2 = content(b);
    for (auto& c : b) c /= cb2;
    if (b.back() < 0)
        for (auto& c : b) c = -c;
    return b;
}

/// Long division over Q; returns {quotient, remainder}.
inline std::pair<Dense<BigRational>, Dense<BigRational>> divmod(Dense<BigRational> a, const Dense<BigRational>& b) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    Dense<BigRational> q(a.size() - b.size() + 1);
    const BigRational& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const BigRational c = a.back() / lb;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Dense<BigRational> to_rational(const Dense<BigInt>& p) {
    Dense<BigRational> out;
    out.reserve(p.size());
    for (const auto& c : p) out.emplace_back(c);
    return out;
}

} // namespace detail

/// Exact quotient a / b in the Laurent ring, if b divides a there.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (a.is_zero()) return LaurentPoly{};
    auto [la, pa] = detail::split_low(a);
    auto [lb, pb] = detail::split_low(b);
    auto [q, rem] = detail::divmod(std::move(pa), pb);
    if (!rem.empty()) return std::nullopt;
    return detail::from_dense(q, la - lb);
}

/// Element of the fraction field Q(t), kept in canonical form:
/// the denominator is an ordinary polynomial with nonzero constant term and
/// leading coefficient 1, coprime to the polynomial part of the numerator.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}   // NOLINT: Laurent polys embed implicitly
    RationalFunction(const BigRational& c) : num_(c), den_(1) {}   // NOLINT
    RationalFunction(long c) : num_(c), den_(1) {}                 // NOLINT
    RationalFunction(int c) : num_(c), den_(1) {}                  // NOLINT
    RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const LaurentPoly& numerator() const { return num_; }
    const LaurentPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_constant(); }

    /// The value as a Laurent polynomial; throws NotExact if the reduced
    /// denominator is not a unit of Q[t, t^-1].
    LaurentPoly to_laurent() const {
        if (!is_laurent())
            throw NotExact("rational function is not a Laurent polynomial: " + to_string());
        return num_;
    }
    std::optional<LaurentPoly> try_to_laurent() const {
        if (!is_laurent()) return std::nullopt;
        return num_;
    }

    RationalFunction operator-() const { return from_canonical(-num_, den_); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_laurent() && b.is_laurent()) return from_canonical(a.num_ + b.num_, LaurentPoly(1));
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_laurent() && b.is_laurent()) return from_canonical(a.num_ * b.num_, LaurentPoly(1));
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        if (a.is_zero()) return {};
        if (b.num_.is_monomial() && b.is_laurent()) {
            const auto& [e, c] = *b.num_.terms().begin();
            return from_canonical(a.num_.shift(-e).scaled(BigRational(1) / c), a.den_);
        }
        if (a.is_laurent() && b.is_laurent()) {
            if (auto q = divide_exact(a.num_, b.num_)) return from_canonical(std::move(*q), LaurentPoly(1));
        }
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction substitute_tr(int r) const {
        return from_canonical(num_.substitute_tr(r), den_.substitute_tr(r));
    }
    RationalFunction shift(int k) const { return from_canonical(num_.shift(k), den_); }

    BigRational eval_at(const BigRational& q) const {
        const BigRational d = den_.eval_at(q);
        if (d.is_zero()) throw DivisionByZero("rational function has a pole at " + q.to_string());
        return num_.eval_at(q) / d;
    }

    /// "p" when the value is Laurent, otherwise "(p)/(q)".
    std::string to_string(char var = 't') const {
        if (is_laurent()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

    /// Accepts "p" or "(p)/(q)".
    static RationalFunction parse(std::string_view text) {
        std::string s(text);
        const auto split = s.find(")/(");
        if (split == std::string::npos) return RationalFunction(LaurentPoly::parse(s));
        const auto open = s.find('(');
        const auto close = s.rfind(')');
        if (open == std::string::npos || close == std::string::npos || open > split)
            throw ParseError("bad rational function: " + s);
        return RationalFunction(LaurentPoly::parse(s.substr(open + 1, split - open - 1)),
                                LaurentPoly::parse(s.substr(split + 3, close - split - 3)));
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

private:
    static RationalFunction from_canonical(LaurentPoly num, LaurentPoly den) {
        RationalFunction out;
        out.num_ = std::move(num);
        out.den_ = std::move(den);
        if (out.num_.is_zero()) out.den_ = LaurentPoly(1);
        return out;
    }

    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        auto [ln, pn] = detail::split_low(num_);
        auto [ld, pd] = detail::split_low(den_);
        const int shift = ln - ld;
        if (pd.size() > 1 && pn.size() > 1) {
            const auto g = detail::subresultant_gcd(detail::primitive_integer(pn), detail::primitive_integer(pd));
            if (g.size() > 1) {
                const auto gr = detail::to_rational(g);
                pn = detail::divmod(std::move(pn), gr).first;
                pd = detail::divmod(std::move(pd), gr).first;
            }
        }
        const BigRational lead = pd.back();
        for (auto& c : pn) c /= lead;
        for (auto& c : pd) c /= lead;
        num_ = detail::from_dense(pn, shift);
        den_ = detail::from_dense(pd, 0);
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

inline RationalFunction pow(const RationalFunction& f, int e) {
    if (e < 0) return RationalFunction(1) / pow(f, -e);
    return RationalFunction(pow(f.numerator(), e), pow(f.denominator(), e));
}

} // namespace kostka
