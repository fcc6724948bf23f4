#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/big_rational.hpp"

namespace kostka {

namespace detail {

using CycloCache = std::map<int, std::vector<long>>;

// Phi_r = (x^r - 1) / prod_{d | r, d < r} Phi_d. Caller holds the cache lock.
inline const std::vector<long>& cyclotomic_locked(int r, CycloCache& cache) {
    if (auto it = cache.find(r); it != cache.end()) return it->second;
    std::vector<long> num(static_cast<std::size_t>(r) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(r)] = 1;
    for (int d = 1; d < r; ++d) {
        if (r % d != 0) continue;
        const std::vector<long> div = cyclotomic_locked(d, cache);
        std::vector<long> q(num.size() - div.size() + 1, 0);
        while (num.size() >= div.size()) {
            const std::size_t shift = num.size() - div.size();
            const long c = num.back();  // divisors are monic
            q[shift] = c;
            for (std::size_t i = 0; i < div.size(); ++i) num[i + shift] -= c * div[i];
            num.pop_back();
        }
        num = std::move(q);
    }
    return cache.emplace(r, std::move(num)).first->second;
}

/// Integer coefficients of the r-th cyclotomic polynomial, ascending.
inline const std::vector<long>& phi_poly(int r) {
    static std::mutex mu;
    static CycloCache cache;
    std::lock_guard lock(mu);
    return cyclotomic_locked(r, cache);
}

} // namespace detail

inline int euler_phi(int r) {
    if (r < 1) throw InvalidArgument("euler_phi needs r >= 1");
    int result = r, m = r;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Element of Q(zeta_r), stored as coordinates in the power basis
/// 1, zeta, ..., zeta^(phi(r)-1) and reduced modulo Phi_r after every product.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(int r) : r_(r), coords_(static_cast<std::size_t>(euler_phi(r))) {}
    Cyclotomic(int r, const BigRational& value) : Cyclotomic(r) { coords_[0] = value; }

    static Cyclotomic from_zeta_power(long k, int r) {
        if (r < 1) throw InvalidArgument("conductor must be >= 1");
        const long e = ((k % r) + r) % r;
        std::vector<BigRational> raw(static_cast<std::size_t>(e) + 1);
        raw[static_cast<std::size_t>(e)] = 1;
        Cyclotomic out(r);
        out.assign_reduced(raw);
        return out;
    }

    int conductor() const { return r_; }
    const std::vector<BigRational>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (!coords_[i].is_zero()) return false;
        return true;
    }
    BigRational as_rational() const {
        if (!is_rational()) throw NotExact("cyclotomic value is not rational: " + to_string());
        return coords_[0];
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    Cyclotomic operator-() const {
        Cyclotomic out(r_);
        for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = -coords_[i];
        return out;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.check(b);
        std::vector<BigRational> raw(a.coords_.size() + b.coords_.size() - 1);
        for (std::size_t i = 0; i < a.coords_.size(); ++i) {
            if (a.coords_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coords_.size(); ++j) raw[i + j] += a.coords_[i] * b.coords_[j];
        }
        Cyclotomic out(a.r_);
        out.assign_reduced(raw);
        return out;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic scaled(const BigRational& q) const {
        Cyclotomic out = *this;
        for (auto& c : out.coords_) c *= q;
        return out;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.r_ == b.r_ && a.coords_ == b.coords_;
    }

    /// Numerical value with zeta = exp(2 pi i / r).
    std::complex<double> to_complex() const {
        std::complex<double> acc = 0;
        const double angle = 2.0 * std::numbers::pi / r_;
        for (std::size_t i = 0; i < coords_.size(); ++i)
            acc += coords_[i].to_double() * std::polar(1.0, angle * static_cast<double>(i));
        return acc;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += coords_[i].to_string();
            if (i > 0) out += "*z^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    void check(const Cyclotomic& o) const {
        if (o.r_ != r_) throw InvalidArgument("mixing cyclotomic fields of different conductor");
    }

    void assign_reduced(std::vector<BigRational> raw) {
        const auto& phi = detail::phi_poly(r_);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t top = raw.size(); top-- > deg;) {
            if (raw[top].is_zero()) continue;
            const BigRational c = raw[top];
            for (std::size_t i = 0; i <= deg; ++i) raw[top - deg + i] -= c * BigRational(phi[i]);
        }
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = i < raw.size() ? raw[i] : BigRational(0);
    }

    int r_;
    std::vector<BigRational> coords_;
};

} // namespace kostka
