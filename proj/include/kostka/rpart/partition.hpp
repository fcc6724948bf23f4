#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "kostka/error.hpp"

namespace kostka {

/// Integer partition as a weakly decreasing list of positive parts.
using Partition = std::vector<int>;

inline int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

/// n(p) = sum (i-1) p_i.
inline int partition_n(const Partition& p) {
    int out = 0;
    for (std::size_t i = 0; i < p.size(); ++i) out += static_cast<int>(i) * p[i];
    return out;
}

inline Partition conjugate(const Partition& p) {
    Partition out(p.empty() ? 0 : static_cast<std::size_t>(p.front()), 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return out;
}

/// All partitions of n, in reverse lexicographic order ((n) first, (1^n) last).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw InvalidArgument("partitions of a negative integer");
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Text form of one component: parts run together ("211"); a part of 10 or
/// more switches to comma separation ("10,2").
inline std::string partition_to_string(const Partition& p) {
    if (p.empty()) return "-";
    const bool wide = !p.empty() && p.front() >= 10;
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (wide && i > 0) out += ",";
        out += std::to_string(p[i]);
    }
    return out;
}

} // namespace kostka
