#pragma once

#include <deque>
#include <string>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/rpart/contingency.hpp"
#include "kostka/rpart/rpartition.hpp"
#include "kostka/symgrp/permutation.hpp"

namespace kostka {

inline constexpr int kDoubleCosetMaxN = 8;

/// A double coset S_m x S_m' of S_n.
struct DoubleCoset {
    Composition m;      // left Young subgroup, column margins of h
    Composition m_row;  // right Young subgroup, row margins of h
    ContingencyMatrix h;
    Permutation rep;    // lexicographically least member
    std::size_t size = 0;
};

/// h_{ij} = |I_j cap x(I'_i)|: the number of points of the i-th block of m'
/// that x sends into the j-th block of m.
inline ContingencyMatrix coset_label(const Permutation& x, const Composition& m, const Composition& m_row) {
    const auto blk = block_of(m), blk_row = block_of(m_row);
    if (static_cast<int>(blk.size()) != x.size() || static_cast<int>(blk_row.size()) != x.size())
        throw InvalidArgument("coset label: margins do not sum to the permutation degree");
    ContingencyMatrix h(m.r());
    for (int k = 0; k < x.size(); ++k) ++h(blk_row[static_cast<std::size_t>(k)] + 1, blk[static_cast<std::size_t>(x(k))] + 1);
    return h;
}

namespace detail {

inline std::size_t lehmer_rank(const Permutation& p) {
    const int n = p.size();
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p(j) < p(i)) ++smaller;
        rank = rank * static_cast<std::size_t>(n - i) + smaller;
    }
    return rank;
}

/// Adjacent transpositions (k, k+1) with both points in the same block.
inline std::vector<Permutation> block_generators(const Composition& m) {
    const auto blk = block_of(m);
    std::vector<Permutation> out;
    for (std::size_t k = 0; k + 1 < blk.size(); ++k) {
        if (blk[k] != blk[k + 1]) continue;
        auto p = Permutation::identity(static_cast<int>(blk.size())).images();
        std::swap(p[k], p[k + 1]);
        out.emplace_back(p);
    }
    return out;
}

template <class Visit>
void bfs_double_coset(const Permutation& start, const std::vector<Permutation>& left,
                      const std::vector<Permutation>& right, std::vector<char>& seen, Visit&& visit) {
    std::deque<Permutation> queue{start};
    seen[lehmer_rank(start)] = 1;
    while (!queue.empty()) {
        Permutation x = std::move(queue.front());
        queue.pop_front();
        visit(x);
        auto push = [&](Permutation y) {
            const auto k = lehmer_rank(y);
            if (seen[k]) return;
            seen[k] = 1;
            queue.push_back(std::move(y));
        };
        for (const auto& u : left) push(u * x);
        for (const auto& v : right) push(x * v);
    }
}

inline void check_coset_args(int n, const Composition& m, const Composition& m_row) {
    if (n > kDoubleCosetMaxN)
        throw BoundExceeded("double coset enumeration limited to n <= " + std::to_string(kDoubleCosetMaxN));
    if (m.n() != n || m_row.n() != n) throw InvalidArgument("double coset margins must sum to n");
    if (m.r() != m_row.r()) throw InvalidArgument("double coset margins have different lengths");
}

} // namespace detail

/// Partitions S_n into double cosets S_m x S_m' by brute-force orbit search,
/// scanning S_n in lexicographic order so each representative is the least
/// member of its coset.
inline std::vector<DoubleCoset> double_cosets(int n, const Composition& m, const Composition& m_row) {
    detail::check_coset_args(n, m, m_row);
    const auto left = detail::block_generators(m), right = detail::block_generators(m_row);
    const auto perms = all_permutations(n);
    std::vector<char> seen(perms.size(), 0);
    std::vector<DoubleCoset> out;
    for (const auto& x : perms) {
        if (seen[detail::lehmer_rank(x)]) continue;
        DoubleCoset dc{m, m_row, coset_label(x, m, m_row), x, 0};
        detail::bfs_double_coset(x, left, right, seen, [&](const Permutation& y) {
            ++dc.size;
            if (coset_label(y, m, m_row) != dc.h)
                throw InvariantViolation("contingency label not constant on double coset of " + x.to_string());
        });
        out.push_back(std::move(dc));
    }
    return out;
}

/// Every element of the double coset.
inline std::vector<Permutation> coset_members(const DoubleCoset& dc) {
    const int n = dc.rep.size();
    detail::check_coset_args(n, dc.m, dc.m_row);
    std::vector<char> seen(static_cast<std::size_t>(factorial(n).get_ui()), 0);
    std::vector<Permutation> out;
    detail::bfs_double_coset(dc.rep, detail::block_generators(dc.m), detail::block_generators(dc.m_row), seen,
                             [&](const Permutation& y) { out.push_back(y); });
    return out;
}

/// S_m cap x S_m' x^{-1}, by filtering S_m.
inline std::vector<Permutation> intersection_elements(const Composition& m, const Composition& m_row,
                                                      const Permutation& x) {
    detail::check_coset_args(x.size(), m, m_row);
    const Permutation xi = x.inverse();
    std::vector<Permutation> out;
    for (auto& y : young_subgroup_elements(m))
        if (in_young_subgroup(xi * y * x, m_row)) out.push_back(std::move(y));
    return out;
}

} // namespace kostka
