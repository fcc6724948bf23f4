#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/big_rational.hpp"

namespace kostka {

/// Univariate Laurent polynomial in t over the rationals.
///
/// Stored as a sparse exponent -> coefficient map with no zero coefficients,
/// so equal values always have identical representations.
class LaurentPoly {
public:
    using Terms = std::map<int, BigRational>;

    LaurentPoly() = default;
    LaurentPoly(const BigRational& c) { add_term(0, c); }   // NOLINT: constants convert implicitly
    LaurentPoly(long c) : LaurentPoly(BigRational(c)) {}     // NOLINT
    LaurentPoly(int c) : LaurentPoly(BigRational(c)) {}      // NOLINT
    LaurentPoly(std::initializer_list<std::pair<int, BigRational>> terms) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    static LaurentPoly monomial(int exponent, const BigRational& coeff = BigRational(1)) {
        LaurentPoly p;
        p.add_term(exponent, coeff);
        return p;
    }
    static LaurentPoly t() { return monomial(1); }

    /// Parses the canonical grammar ("t^4 - t", "1/2*t^-3 + 2"); also tolerates
    /// "t^{k}", implicit multiplication ("2t") and arbitrary whitespace.
    static LaurentPoly parse(std::string_view text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    /// Highest exponent present; precondition: nonzero.
    int degree() const {
        if (is_zero()) throw InvalidArgument("degree of zero Laurent polynomial");
        return terms_.rbegin()->first;
    }
    /// Lowest exponent present; precondition: nonzero.
    int low_degree() const {
        if (is_zero()) throw InvalidArgument("low degree of zero Laurent polynomial");
        return terms_.begin()->first;
    }
    const BigRational& leading_coefficient() const { return terms_.rbegin()->second; }

    BigRational coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    void add_term(int exponent, const BigRational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
        return out;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Multiplies by t^k.
    LaurentPoly shift(int k) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
        return out;
    }

    /// f(t) -> f(t^r).
    LaurentPoly substitute_tr(int r) const {
        if (r <= 0) throw InvalidArgument("substitute_tr needs r >= 1");
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e * r, c);
        return out;
    }

    /// f(t) -> f(t^-1).
    LaurentPoly invert_variable() const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
        return out;
    }

    LaurentPoly scaled(const BigRational& c) const {
        if (c.is_zero()) return {};
        LaurentPoly out;
        for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
        return out;
    }

    BigRational eval_at(const BigRational& q) const {
        if (q.is_zero() && !is_zero() && low_degree() < 0)
            throw DivisionByZero("eval_at(0) of a polynomial with negative exponents");
        BigRational acc(0);
        for (const auto& [e, c] : terms_) acc += c * pow(q, e);
        return acc;
    }

    bool has_integer_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_integer(); });
    }
    bool has_nonnegative_integer_coefficients() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& kv) { return kv.second.is_integer() && kv.second.sign() > 0; });
    }

    /// True iff every exponent is non-negative and divisible by r, i.e. the value
    /// lies in Q[t^r].
    bool is_poly_in_tr(int r) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [r](const auto& kv) { return kv.first >= 0 && kv.first % r == 0; });
    }

    /// Inverse of substitute_tr; precondition is_poly_in_tr(r) (negative
    /// exponents are allowed here as long as they are divisible by r).
    LaurentPoly contract_tr(int r) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) {
            if (e % r != 0) throw NotExact("exponent " + std::to_string(e) + " not divisible by " + std::to_string(r));
            out.terms_.emplace_hint(out.terms_.end(), e / r, c);
        }
        return out;
    }

    /// Canonical text form: descending exponents, "t^k"/"t"/literal, fractions as p/q.
    std::string to_string(char var = 't') const;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    Terms terms_;
};

inline std::string LaurentPoly::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        const BigRational& c = it->second;
        const bool neg = c.sign() < 0;
        const BigRational mag = neg ? -c : c;
        std::string body;
        if (e == 0) {
            body = mag.to_string();
        } else {
            std::string mono(1, var);
            if (e != 1) mono += "^" + std::to_string(e);
            body = mag.is_one() ? mono : mag.to_string() + "*" + mono;
        }
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

namespace detail {

inline int parse_int(std::string_view s, std::size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    const std::size_t start = pos;
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > 1'000'000'000) throw ParseError("exponent too large");
        ++pos;
    }
    if (pos == start) throw ParseError("expected integer exponent");
    return static_cast<int>(neg ? -v : v);
}

} // namespace detail

inline LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty polynomial");
    LaurentPoly out;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in polynomial: " + s);
        }
        first = false;
        // coefficient
        BigRational coeff(1);
        const std::size_t cstart = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        bool have_coeff = pos > cstart;
        if (have_coeff) coeff = BigRational::parse(std::string_view(s).substr(cstart, pos - cstart));
        int exponent = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (!have_coeff) throw ParseError("dangling '*' in polynomial: " + s);
            ++pos;
            if (pos >= s.size() || s[pos] != 't') throw ParseError("expected 't' after '*': " + s);
        }
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                const bool brace = pos < s.size() && s[pos] == '{';
                if (brace) ++pos;
                exponent = detail::parse_int(s, pos);
                if (brace) {
                    if (pos >= s.size() || s[pos] != '}') throw ParseError("unclosed '{' in exponent: " + s);
                    ++pos;
                }
            }
        } else if (!have_coeff) {
            throw ParseError("expected term in polynomial: " + s);
        }
        out.add_term(exponent, sign < 0 ? -coeff : coeff);
    }
    return out;
}

inline LaurentPoly pow(const LaurentPoly& p, int e) {
    if (e < 0) throw InvalidArgument("negative power of a Laurent polynomial");
    LaurentPoly out(1);
    LaurentPoly base = p;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

/// t^k - 1.
inline LaurentPoly t_power_minus_one(int k) { return LaurentPoly::monomial(k) - LaurentPoly(1); }

} // namespace kostka
