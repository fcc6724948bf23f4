#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "kostka/error.hpp"

namespace kostka {

using BigInt = mpz_class;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : v_(v) {}                      // NOLINT: implicit by design of a number type
    BigRational(int v) : v_(static_cast<long>(v)) {}     // NOLINT
    BigRational(const BigInt& v) : v_(v) {}              // NOLINT
    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZero("BigRational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    static BigRational from_mpq(mpq_class q) {
        q.canonicalize();
        BigRational out;
        out.v_ = std::move(q);
        return out;
    }

    /// Accepts "p" or "p/q" with optional leading sign.
    static BigRational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw ParseError("empty rational literal");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
        if (q.get_den() == 0) throw DivisionByZero("rational literal with zero denominator: " + s);
        return from_mpq(std::move(q));
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    BigRational operator-() const { return from_mpq(mpq_class(-v_)); }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw DivisionByZero("BigRational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

private:
    mpq_class v_{0};
};

/// q^e for integer e (negative exponents require q != 0).
inline BigRational pow(const BigRational& q, long e) {
    if (e < 0) {
        if (q.is_zero()) throw DivisionByZero("zero raised to a negative power");
        return BigRational(1) / pow(q, -e);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(num, den);
}

inline BigRational pow(const BigRational& q, int e) { return pow(q, static_cast<long>(e)); }

inline BigInt factorial(int n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

} // namespace kostka
