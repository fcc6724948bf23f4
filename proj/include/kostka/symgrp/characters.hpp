#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/big_rational.hpp"
#include "kostka/rpart/partition.hpp"
#include "kostka/rpart/rpartition.hpp"
#include "kostka/symgrp/permutation.hpp"

namespace kostka {

namespace detail {

inline long mn_uncached(const Partition& lambda, const CycleType& rho);

class MnCache {
public:
    long get(const Partition& lambda, const CycleType& rho) {
        {
            std::shared_lock lock(mu_);
            if (auto it = memo_.find({lambda, rho}); it != memo_.end()) return it->second;
        }
        const long v = mn_uncached(lambda, rho);
        std::unique_lock lock(mu_);
        memo_.emplace(std::make_pair(lambda, rho), v);
        return v;
    }

    static MnCache& instance() {
        static MnCache cache;
        return cache;
    }

private:
    std::shared_mutex mu_;
    std::map<std::pair<Partition, CycleType>, long> memo_;
};

// Removes border strips of length rho[0] via the beta-set (abacus) model.
inline long mn_uncached(const Partition& lambda, const CycleType& rho) {
    if (rho.empty()) return lambda.empty() ? 1 : 0;
    const int k = rho.front();
    const CycleType rest(rho.begin() + 1, rho.end());
    const int L = static_cast<int>(lambda.size());
    std::set<int> beta;
    for (int i = 0; i < L; ++i) beta.insert(lambda[static_cast<std::size_t>(i)] + L - 1 - i);

    long total = 0;
    for (int b : beta) {
        const int target = b - k;
        if (target < 0 || beta.count(target)) continue;
        int between = 0;
        for (int c : beta)
            if (c > target && c < b) ++between;
        std::set<int> moved = beta;
        moved.erase(b);
        moved.insert(target);
        Partition smaller;
        int i = 0;
        for (auto it = moved.rbegin(); it != moved.rend(); ++it, ++i) {
            const int part = *it - (L - 1 - i);
            if (part > 0) smaller.push_back(part);
        }
        const long sub = MnCache::instance().get(smaller, rest);
        total += (between % 2 == 0 ? 1 : -1) * sub;
    }
    return total;
}

} // namespace detail

/// chi^lambda(rho) by the Murnaghan-Nakayama rule, memoized.
inline long mn_character(const Partition& lambda, const CycleType& rho) {
    if (partition_size(lambda) != partition_size(rho))
        throw InvalidArgument("character and class have different sizes");
    CycleType sorted = rho;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return detail::MnCache::instance().get(lambda, sorted);
}

/// z_rho = prod_i i^{m_i} m_i!.
inline BigInt centralizer_order(const CycleType& rho) {
    std::map<int, int> mult;
    for (int len : rho) ++mult[len];
    BigInt z = 1;
    for (const auto& [len, m] : mult) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(len), static_cast<unsigned long>(m));
        z *= p * factorial(m);
    }
    return z;
}

/// Character table of S_n; rows and columns both indexed by
/// enumerate_partitions(n).
class CharTable {
public:
    explicit CharTable(int n) : n_(n), labels_(enumerate_partitions(n)) {
        values_.resize(labels_.size() * labels_.size());
        for (std::size_t i = 0; i < labels_.size(); ++i)
            for (std::size_t j = 0; j < labels_.size(); ++j)
                values_[i * labels_.size() + j] = mn_character(labels_[i], labels_[j]);
        for (const auto& rho : labels_) z_.push_back(centralizer_order(rho));
    }

    int n() const { return n_; }
    const std::vector<Partition>& labels() const { return labels_; }
    long value(std::size_t irr, std::size_t cls) const { return values_[irr * labels_.size() + cls]; }
    const BigInt& z(std::size_t cls) const { return z_[cls]; }

private:
    int n_;
    std::vector<Partition> labels_;
    std::vector<long> values_;
    std::vector<BigInt> z_;
};

/// Shared, lazily built table for each n.
inline const CharTable& char_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CharTable>> tables;
    std::lock_guard lock(mu);
    auto& slot = tables[n];
    if (!slot) slot = std::make_unique<CharTable>(n);
    return *slot;
}

/// Cycle types of w restricted to each block of m (w must lie in S_m).
inline std::vector<CycleType> block_cycle_types(const Permutation& w, const Composition& m) {
    const auto blk = block_of(m);
    if (static_cast<int>(blk.size()) != w.size()) throw InvalidArgument("permutation degree differs from n");
    std::vector<CycleType> out(static_cast<std::size_t>(m.r()));
    for (const auto& c : w.cycles()) {
        const int b = blk[static_cast<std::size_t>(c.front())];
        for (int p : c)
            if (blk[static_cast<std::size_t>(p)] != b) throw InvalidArgument("permutation is not in the Young subgroup");
        out[static_cast<std::size_t>(b)].push_back(static_cast<int>(c.size()));
    }
    for (auto& ct : out) std::sort(ct.begin(), ct.end(), std::greater<>());
    return out;
}

/// chi^{lambda^(1)} x ... x chi^{lambda^(r)} evaluated at w in S_m.
inline long young_character(const RPartition& l, const Permutation& w, const Composition& m) {
    if (!has_weight(l, m)) throw InvalidArgument(l.to_string() + " does not have the given block sizes");
    const auto types = block_cycle_types(w, m);
    long v = 1;
    for (std::size_t j = 0; j < types.size() && v != 0; ++j) v *= mn_character(l[j], types[j]);
    return v;
}

} // namespace kostka
