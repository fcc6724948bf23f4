#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/rpart/rpartition.hpp"

namespace kostka {

/// A total order on P_{n,r} refining dominance, with position lookup.
class OrderedIndex {
public:
    OrderedIndex() = default;

    /// Validates coverage of P_{n,r} and dominance compatibility.
    OrderedIndex(std::vector<RPartition> items, int n, int r) : items_(std::move(items)), n_(n), r_(r) {
        for (std::size_t i = 0; i < items_.size(); ++i) {
            const auto& l = items_[i];
            if (l.n() != n || l.r() != r)
                throw InvalidArgument("order item " + l.to_string() + " is not an r-partition of n");
            if (!pos_.emplace(l, i).second) throw InvalidArgument("order lists " + l.to_string() + " twice");
        }
        const auto expected = enumerate_rpartitions(n, r).size();
        if (items_.size() != expected)
            throw InvalidArgument("order has " + std::to_string(items_.size()) + " items, expected " +
                                  std::to_string(expected));
        for (std::size_t i = 0; i < items_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (dominance_leq(items_[i], items_[j]))
                    throw InvalidArgument("order places " + items_[j].to_string() + " before " +
                                          items_[i].to_string() + " although it dominates it");
    }

    int n() const { return n_; }
    int r() const { return r_; }
    std::size_t size() const { return items_.size(); }
    const std::vector<RPartition>& items() const { return items_; }
    const RPartition& operator[](std::size_t i) const { return items_[i]; }

    std::size_t position(const RPartition& l) const {
        auto it = pos_.find(l);
        if (it == pos_.end()) throw InvalidArgument(l.to_string() + " is not in the order");
        return it->second;
    }

    friend bool operator==(const OrderedIndex& a, const OrderedIndex& b) { return a.items_ == b.items_; }

private:
    std::vector<RPartition> items_;
    std::map<RPartition, std::size_t> pos_;
    int n_ = 0;
    int r_ = 1;
};

/// All r-partitions sorted ascending by the lexicographic order of c_sequence
/// (width n). If a < b strictly in dominance, the first differing c-entry is
/// smaller for a, so this refines dominance.
inline OrderedIndex default_total_order(int n, int r) {
    auto items = enumerate_rpartitions(n, r);
    const int w = std::max(n, 1);
    std::stable_sort(items.begin(), items.end(),
                     [w](const RPartition& a, const RPartition& b) { return c_sequence(a, w) < c_sequence(b, w); });
    return OrderedIndex(std::move(items), n, r);
}

/// Reads an order from r-partition strings (one per entry).
inline OrderedIndex order_from_strings(const std::vector<std::string>& lines, int n, int r) {
    std::vector<RPartition> items;
    for (const auto& s : lines) items.push_back(RPartition::parse(s));
    return OrderedIndex(std::move(items), n, r);
}

/// Seeded random topological sorts of the dominance poset. Orders are
/// distinct while enough extensions exist; when the poset admits fewer than
/// `count` extensions the result repeats them.
inline std::vector<OrderedIndex> sample_linear_extensions(int n, int r, int count, std::uint64_t seed) {
    if (count < 1) throw InvalidArgument("sample count must be >= 1");
    const auto all = enumerate_rpartitions(n, r);
    const std::size_t N = all.size();
    std::vector<std::vector<std::size_t>> succ(N);
    std::vector<int> indeg0(N, 0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i != j && dominance_leq(all[i], all[j])) {
                succ[i].push_back(j);
                ++indeg0[j];
            }

    std::mt19937_64 rng(seed);
    auto one = [&]() {
        std::vector<int> indeg = indeg0;
        std::vector<std::size_t> ready, out;
        for (std::size_t i = 0; i < N; ++i)
            if (indeg[i] == 0) ready.push_back(i);
        while (!ready.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
            const std::size_t k = pick(rng);
            const std::size_t v = ready[k];
            ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(k));
            out.push_back(v);
            for (std::size_t w : succ[v])
                if (--indeg[w] == 0) ready.push_back(w);
        }
        return out;
    };

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> picked;
    const int max_attempts = 50 * count + 100;
    for (int attempt = 0; attempt < max_attempts && static_cast<int>(picked.size()) < count; ++attempt) {
        auto ext = one();
        if (seen.insert(ext).second) picked.push_back(std::move(ext));
    }
    for (std::size_t i = 0; static_cast<int>(picked.size()) < count; ++i) picked.push_back(picked[i]);

    std::vector<OrderedIndex> result;
    for (const auto& ext : picked) {
        std::vector<RPartition> items;
        for (std::size_t v : ext) items.push_back(all[v]);
        result.emplace_back(std::move(items), n, r);
    }
    return result;
}

} // namespace kostka
