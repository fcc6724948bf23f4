#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/laurent.hpp"
#include "kostka/rpart/partition.hpp"
#include "kostka/rpart/rpartition.hpp"

namespace kostka {

using CycleType = Partition;

/// Permutation of {0, ..., n-1} stored as its one-line image array.
/// Composition is right-to-left: (a * b)(i) = a(b(i)). Serialized 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
                throw InvalidArgument("not a permutation");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }
    /// Builds from a 1-based one-line array.
    static Permutation from_one_based(const std::vector<int>& images) {
        std::vector<int> v;
        for (int x : images) v.push_back(x - 1);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) throw InvalidArgument("composing permutations of different degree");
        std::vector<int> v(b.img_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.img_[static_cast<std::size_t>(b.img_[i])];
        Permutation out;
        out.img_ = std::move(v);
        return out;
    }
    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) v[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
        Permutation out;
        out.img_ = std::move(v);
        return out;
    }

    /// Cycles as lists of points, each starting at its smallest point.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t s = 0; s < img_.size(); ++s) {
            if (seen[s]) continue;
            std::vector<int> c;
            for (int k = static_cast<int>(s); !seen[static_cast<std::size_t>(k)]; k = img_[static_cast<std::size_t>(k)]) {
                seen[static_cast<std::size_t>(k)] = true;
                c.push_back(k);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    int sign() const {
        int s = 1;
        for (const auto& c : cycles())
            if (c.size() % 2 == 0) s = -s;
        return s;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < img_.size(); ++i) out += (i ? "," : "") + std::to_string(img_[i] + 1);
        return out + "]";
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

inline CycleType cycle_type(const Permutation& w) {
    CycleType out;
    for (const auto& c : w.cycles()) out.push_back(static_cast<int>(c.size()));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// All of S_n in lexicographic order of one-line words.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Block index (0-based) of every point for the blocks I_1, I_2, ... of m,
/// where I_j = {p_{j-1}, ..., p_j - 1} in 0-based points.
inline std::vector<int> block_of(const Composition& m) {
    std::vector<int> out;
    for (int j = 0; j < m.r(); ++j)
        for (int k = 0; k < m.m[static_cast<std::size_t>(j)]; ++k) out.push_back(j);
    return out;
}

/// True iff w maps each block of m to itself (w in the Young subgroup S_m).
inline bool in_young_subgroup(const Permutation& w, const Composition& m) {
    const auto blk = block_of(m);
    if (static_cast<int>(blk.size()) != w.size()) throw InvalidArgument("Young subgroup degree mismatch");
    for (int i = 0; i < w.size(); ++i)
        if (blk[static_cast<std::size_t>(w(i))] != blk[static_cast<std::size_t>(i)]) return false;
    return true;
}

/// All elements of S_m, enumerated as products of block permutations.
inline std::vector<Permutation> young_subgroup_elements(const Composition& m) {
    std::vector<Permutation> out;
    const int n = m.n();
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    const auto p = p_values(m);
    std::function<void(int)> rec = [&](int j) {
        if (j == m.r()) {
            out.emplace_back(v);
            return;
        }
        const auto lo = v.begin() + (j == 0 ? 0 : p[static_cast<std::size_t>(j - 1)]);
        const auto hi = v.begin() + p[static_cast<std::size_t>(j)];
        std::sort(lo, hi);
        do {
            rec(j + 1);
        } while (std::next_permutation(lo, hi));
    };
    rec(0);
    return out;
}

/// det_V(t^r - y) for y in S_n acting on V = C^n: product over cycles of (t^{r len} - 1).
inline LaurentPoly char_perm_det(const Permutation& y, int r) {
    LaurentPoly out(1);
    for (const auto& c : y.cycles()) out *= t_power_minus_one(r * static_cast<int>(c.size()));
    return out;
}

/// |T_y^F| = prod (q^len - 1) over the cycle lengths.
inline BigRational torus_order(const CycleType& rho, const BigRational& q) {
    BigRational out(1);
    for (int len : rho) out *= pow(q, len) - BigRational(1);
    if (out.is_zero()) throw InvalidArgument("torus order vanishes at q = " + q.to_string());
    return out;
}

/// The same product as a polynomial in q.
inline LaurentPoly torus_order_poly(const CycleType& rho) {
    LaurentPoly out(1);
    for (int len : rho) out *= t_power_minus_one(len);
    return out;
}

} // namespace kostka
