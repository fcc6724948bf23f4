#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/laurent.hpp"
#include "kostka/exact/matrix.hpp"
#include "kostka/exact/rational_function.hpp"
#include "kostka/omega/wreath.hpp"
#include "kostka/rpart/contingency.hpp"
#include "kostka/rpart/order.hpp"
#include "kostka/rpart/rpartition.hpp"
#include "kostka/symgrp/characters.hpp"
#include "kostka/symgrp/double_coset.hpp"
#include "kostka/symgrp/permutation.hpp"

namespace kostka {

inline constexpr int kCosetMaxN = 6;

/// [j - i - 1]: the representative in [0, r-1] of (j-1) + (r-i) mod r.
inline int bracket(int j, int i, int r) {
    if (i < 1 || i > r || j < 1 || j > r) throw InvalidArgument("bracket indices out of range");
    return ((j - 1) + (r - i)) % r;
}

/// A_O = sum_{i,j} [j-i-1] h_{ij}.
inline int a_O(const ContingencyMatrix& h) {
    const int r = h.r();
    int out = 0;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) out += bracket(j, i, r) * h(i, j);
    return out;
}

inline void require_margins(const RPartition& l, const RPartition& mu, const ContingencyMatrix& h) {
    if (h.column_sums() != weight_composition(l) || h.row_sums() != weight_composition(mu))
        throw InvalidArgument("contingency margins do not match " + l.to_string() + ", " + mu.to_string());
}

/// B_O(lambda, mu) = C(n,2) - n(lambda) - n(mu) + sum_{i<r} h_{i,<=i}.
inline int b_O(const RPartition& l, const RPartition& mu, const ContingencyMatrix& h) {
    require_same_shape(l, mu);
    require_margins(l, mu, h);
    const int n = l.n();
    int out = n * (n - 1) / 2 - n_value(l) - n_value(mu);
    for (int i = 1; i < h.r(); ++i) out += h.row_prefix(i, i);
    return out;
}

/// S_m cap x S_m' x^{-1} built directly as the product of the symmetric
/// groups on the cells I_j cap x(I'_i).
inline std::vector<Permutation> intersection_by_cells(const Composition& m, const Composition& m_row, const Permutation& x) {
    const auto blk = block_of(m), blk_row = block_of(m_row);
    const int r = m.r();
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(r * r));
    for (int k = 0; k < x.size(); ++k) {
        const int p = x(k);
        cells[static_cast<std::size_t>(blk_row[static_cast<std::size_t>(k)] * r + blk[static_cast<std::size_t>(p)])].push_back(p);
    }
    std::vector<Permutation> out;
    std::vector<int> img(static_cast<std::size_t>(x.size()));
    std::iota(img.begin(), img.end(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            out.emplace_back(img);
            return;
        }
        auto targets = cells[c];
        std::sort(targets.begin(), targets.end());
        const auto& src = cells[c];
        std::vector<int> sorted_src = src;
        std::sort(sorted_src.begin(), sorted_src.end());
        do {
            for (std::size_t k = 0; k < sorted_src.size(); ++k) img[static_cast<std::size_t>(sorted_src[k])] = targets[k];
            rec(c + 1);
        } while (std::next_permutation(targets.begin(), targets.end()));
        for (int p : sorted_src) img[static_cast<std::size_t>(p)] = p;
    };
    rec(0);
    return out;
}

/// How the sum over x in a double coset is carried out.
enum class CosetSum {
    Literal,         // every x in O
    Representative,  // one representative, weighted by |O|
};

/// Aggregated character data for one pair of compositions (m, m').
///
/// For each double coset O (by contingency label) it records how often each
/// pair (block cycle types of y in S_m, block cycle types of x^{-1} y x in S_m')
/// occurs over x in O and y in S_m cap x S_m' x^{-1}.
struct CosetTable {
    using TypeKey = std::pair<std::vector<CycleType>, std::vector<CycleType>>;
    struct Coset {
        ContingencyMatrix h;
        std::size_t size = 0;
        std::map<TypeKey, long> counts;
    };
    Composition m, m_row;
    std::vector<Coset> cosets;
};

inline CosetTable build_coset_table(const Composition& m, const Composition& m_row, CosetSum mode) {
    const int n = m.n();
    if (n > kDoubleCosetMaxN) throw BoundExceeded("coset route limited to n <= " + std::to_string(kDoubleCosetMaxN));
    CosetTable table{m, m_row, {}};
    const auto dcs = double_cosets(n, m, m_row);
    std::map<ContingencyMatrix, std::size_t> index;
    for (const auto& dc : dcs) {
        index.emplace(dc.h, table.cosets.size());
        table.cosets.push_back({dc.h, dc.size, {}});
    }
    auto accumulate = [&](CosetTable::Coset& cs, const Permutation& x, long weight) {
        const Permutation xi = x.inverse();
        for (const auto& y : intersection_by_cells(m, m_row, x))
            cs.counts[{block_cycle_types(y, m), block_cycle_types(xi * y * x, m_row)}] += weight;
    };
    if (mode == CosetSum::Literal) {
        for (const auto& x : all_permutations(n)) accumulate(table.cosets[index.at(coset_label(x, m, m_row))], x, 1);
    } else {
        for (std::size_t k = 0; k < dcs.size(); ++k)
            accumulate(table.cosets[k], dcs[k].rep, static_cast<long>(dcs[k].size));
    }
    return table;
}

namespace detail {

inline CycleType merged_type(const std::vector<CycleType>& blocks) {
    CycleType out;
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// prod_{k=1}^n (t^{kr} - 1) / det_V(t^r - y) for y of the given cycle type.
inline LaurentPoly degree_over_torus(int n, int r, const CycleType& type) {
    LaurentPoly bottom(1);
    for (int len : type) bottom *= t_power_minus_one(r * len);
    auto q = divide_exact(wreath_degree_product(n, r), bottom);
    if (!q) throw InvariantViolation("torus factor does not divide the degree product");
    return *q;
}

inline long young_value(const RPartition& l, const std::vector<CycleType>& blocks) {
    long v = 1;
    for (std::size_t j = 0; j < blocks.size() && v != 0; ++j) v *= mn_character(l[j], blocks[j]);
    return v;
}

inline BigInt young_order(const Composition& m) {
    BigInt out = 1;
    for (int v : m.m) out *= factorial(v);
    return out;
}

/// sum over the recorded (x, y) of chi^lambda(y) chi^mu(x^-1 y x) prod(t^{kr}-1)/det_V(t^r - y).
inline LaurentPoly coset_inner_sum(const CosetTable::Coset& cs, const RPartition& l, const RPartition& mu, int r) {
    LaurentPoly acc;
    std::map<CycleType, BigRational> by_type;
    for (const auto& [key, count] : cs.counts) {
        const long v = young_value(l, key.first) * young_value(mu, key.second);
        if (v == 0) continue;
        by_type[merged_type(key.first)] += BigRational(v) * BigRational(count);
    }
    for (const auto& [type, coeff] : by_type)
        if (!coeff.is_zero()) acc += degree_over_torus(l.n(), r, type).scaled(coeff);
    return acc;
}

inline void require_nonnegative_integer(const LaurentPoly& w, const RPartition& l, const RPartition& mu) {
    if (!w.has_nonnegative_integer_coefficients() || (!w.is_zero() && w.low_degree() < 0))
        throw InvariantViolation("omega entry for (" + l.to_string() + ", " + mu.to_string() +
                                 ") is not in Z_{>=0}[t]: " + w.to_string());
}

} // namespace detail

/// t^{a(lambda)+a(tau mu)} times prod(t^{kr}-1)/(|S_m||S_m'|) sum_O t^{r B_O} sum_{x,y} ...
inline LaurentPoly omega_entry_from_table(const CosetTable& table, const RPartition& l, const RPartition& mu) {
    const int r = l.r();
    LaurentPoly acc;
    for (const auto& cs : table.cosets) {
        const LaurentPoly inner = detail::coset_inner_sum(cs, l, mu, r);
        if (!inner.is_zero()) acc += inner.shift(r * b_O(l, mu, cs.h));
    }
    const BigInt denom = detail::young_order(table.m) * detail::young_order(table.m_row);
    LaurentPoly w = acc.scaled(BigRational(BigInt(1), denom)).shift(a_value(l) + a_value(tau(mu)));
    detail::require_nonnegative_integer(w, l, mu);
    return w;
}

/// omega_{lambda,mu} by the double-coset formula, summing over every x in each coset.
inline LaurentPoly omega_entry_cosets(const RPartition& l, const RPartition& mu) {
    require_same_shape(l, mu);
    const auto table = build_coset_table(weight_composition(l), weight_composition(mu), CosetSum::Literal);
    return omega_entry_from_table(table, l, mu);
}

/// Same formula with one representative per coset weighted by |O|. Valid
/// because the inner sum is unchanged under x -> u x v for u in S_m, v in S_m'.
inline LaurentPoly omega_entry_cosets_reduced(const RPartition& l, const RPartition& mu) {
    require_same_shape(l, mu);
    const auto table = build_coset_table(weight_composition(l), weight_composition(mu), CosetSum::Representative);
    return omega_entry_from_table(table, l, mu);
}

/// The form with t^{A_O} and an explicit t^{N*}, before the exponent identity
/// relating A_O to B_O is applied.
inline LaurentPoly omega_entry_via_ao(const RPartition& l, const RPartition& mu) {
    require_same_shape(l, mu);
    const int n = l.n(), r = l.r();
    const auto table = build_coset_table(weight_composition(l), weight_composition(mu), CosetSum::Literal);
    LaurentPoly acc;
    for (const auto& cs : table.cosets) {
        const LaurentPoly inner = detail::coset_inner_sum(cs, l, mu, r);
        if (!inner.is_zero()) acc += inner.shift(a_O(cs.h));
    }
    const BigInt denom = detail::young_order(table.m) * detail::young_order(table.m_row);
    LaurentPoly w = acc.scaled(BigRational(BigInt(1), denom)).shift(n_star(n, r));
    detail::require_nonnegative_integer(w, l, mu);
    return w;
}

/// Symmetric-group fake degree of chi^lambda (x) x(chi^mu) (x) eps on
/// H = S_m cap x S_m' x^{-1}, acting on C^n by permutations.
inline LaurentPoly coset_symmetric_fake_degree(const RPartition& l, const RPartition& mu, const Permutation& x,
                                               const ContingencyMatrix& h) {
    const Composition m = weight_composition(l), m_row = weight_composition(mu);
    const auto H = intersection_by_cells(m, m_row, x);
    LaurentPoly degrees(1);
    for (int i = 1; i <= h.r(); ++i)
        for (int j = 1; j <= h.r(); ++j)
            for (int k = 1; k <= h(i, j); ++k) degrees *= t_power_minus_one(k);
    const Permutation xi = x.inverse();
    LaurentPoly acc;
    for (const auto& y : H) {
        const int eps = y.sign();
        const long chi = young_character(l, y, m) * young_character(mu, xi * y * x, m_row) * eps;
        if (chi == 0) continue;
        auto q = divide_exact(degrees, char_perm_det(y, 1));
        if (!q) throw InvariantViolation("cell torus factor does not divide the cell degree product");
        acc += q->scaled(BigRational(eps * chi));
    }
    return acc.scaled(BigRational(1, static_cast<long>(H.size())));
}

/// omega_{lambda,mu} assembled coset by coset from per-coset fake degrees:
/// t^{N*} sum_O [prod_k (t^{kr}-1) / prod_{ij} prod_{k<=h_ij} (t^{kr}-1)]
///   R_H(...)(t^r) t^{A_O}.
inline LaurentPoly omega_entry_via_coset_fake_degrees(const RPartition& l, const RPartition& mu) {
    require_same_shape(l, mu);
    const int n = l.n(), r = l.r();
    const Composition m = weight_composition(l), m_row = weight_composition(mu);
    LaurentPoly acc;
    for (const auto& dc : double_cosets(n, m, m_row)) {
        LaurentPoly cell_degrees(1);
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j)
                for (int k = 1; k <= dc.h(i, j); ++k) cell_degrees *= t_power_minus_one(k * r);
        auto ratio = divide_exact(wreath_degree_product(n, r), cell_degrees);
        if (!ratio) throw InvariantViolation("cell degree product does not divide the full one");
        const LaurentPoly rh = coset_symmetric_fake_degree(l, mu, dc.rep, dc.h).substitute_tr(r);
        acc += (*ratio * rh).shift(a_O(dc.h));
    }
    LaurentPoly w = acc.shift(n_star(n, r));
    detail::require_nonnegative_integer(w, l, mu);
    return w;
}

/// Brute-force R(delta_1 eps) over W_H = H x| (Z/rZ)^n for the coset of x,
/// where delta_1 eps restricted to the colors is zeta^{sum_k [j-i-1] a_k}
/// with (i, j) the cell of point k. Expected to equal t^{A_O}.
inline LaurentPoly coset_linear_fake_degree_bruteforce(const Composition& m, const Composition& m_row,
                                                       const Permutation& x) {
    const int n = x.size(), r = m.r();
    check_wreath_bound(n, r);
    const auto blk = block_of(m), blk_row = block_of(m_row);
    std::vector<int> weight(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int j = blk[static_cast<std::size_t>(x(k))] + 1;      // block of m containing x(k)
        const int i = blk_row[static_cast<std::size_t>(k)] + 1;     // block of m' containing k
        weight[static_cast<std::size_t>(x(k))] = bracket(j, i, r);
    }
    const ContingencyMatrix h = coset_label(x, m, m_row);
    LaurentPoly degrees(1);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            for (int k = 1; k <= h(i, j); ++k) degrees *= t_power_minus_one(k * r);
    std::vector<WreathElement> elements;
    for (const auto& y : intersection_by_cells(m, m_row, x)) {
        std::vector<int> colors(static_cast<std::size_t>(n), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == colors.size()) {
                elements.emplace_back(y, colors, r);
                return;
            }
            for (int c = 0; c < r; ++c) {
                colors[i] = c;
                rec(i + 1);
            }
        };
        rec(0);
    }
    return fake_degree_over(elements, degrees, [&](const WreathElement& w) {
        long e = 0;
        for (int k = 0; k < n; ++k) e += static_cast<long>(weight[static_cast<std::size_t>(k)]) * w.colors()[static_cast<std::size_t>(k)];
        return Cyclotomic::from_zeta_power(e, r);
    });
}

enum class OmegaMethod { Cosets, Wreath };

/// Omega over a fixed total order.
struct OmegaMatrix {
    int n = 0;
    int r = 1;
    OrderedIndex order;
    LaurentMatrix entries;

    const LaurentPoly& at(const RPartition& l, const RPartition& mu) const {
        return entries(order.position(l), order.position(mu));
    }
};

struct OmegaOptions {
    OmegaMethod method = OmegaMethod::Cosets;
    CosetSum coset_sum = CosetSum::Literal;
    long wreath_limit = kWreathMaxWork;
    int coset_max_n = kCosetMaxN;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Builds Omega entry by entry. The coset route shares one coset table per
/// pair of weight compositions; blocks are processed in parallel.
inline OmegaMatrix omega_matrix(const OrderedIndex& order, const OmegaOptions& opt = {}) {
    const int n = order.n(), r = order.r();
    OmegaMatrix out{n, r, order, LaurentMatrix(order.size())};
    const auto& items = order.items();

    if (opt.method == OmegaMethod::Wreath) {
        for (std::size_t a = 0; a < items.size(); ++a)
            for (std::size_t b = 0; b < items.size(); ++b)
                out.entries(a, b) = omega_entry_bruteforce(items[a], items[b], opt.wreath_limit);
        return out;
    }

    if (n > opt.coset_max_n) throw BoundExceeded("coset route limited to n <= " + std::to_string(opt.coset_max_n));
    std::map<Composition, std::vector<std::size_t>> by_weight;
    for (std::size_t a = 0; a < items.size(); ++a) by_weight[weight_composition(items[a])].push_back(a);
    std::vector<std::pair<const Composition*, const Composition*>> jobs;
    for (const auto& [m, _] : by_weight)
        for (const auto& [mp, __] : by_weight) jobs.emplace_back(&m, &mp);

    std::mutex mu;
    std::size_t next = 0;
    auto worker = [&]() {
        while (true) {
            std::size_t k;
            {
                std::lock_guard lock(mu);
                if (next == jobs.size()) return;
                k = next++;
            }
            const auto& m = *jobs[k].first;
            const auto& mp = *jobs[k].second;
            const auto table = build_coset_table(m, mp, opt.coset_sum);
            for (std::size_t a : by_weight.at(m))
                for (std::size_t b : by_weight.at(mp)) {
                    LaurentPoly v = omega_entry_from_table(table, items[a], items[b]);
                    std::lock_guard lock(mu);
                    out.entries(a, b) = std::move(v);
                }
        }
    };
    unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
    std::vector<std::future<void>> pool;
    for (unsigned i = 0; i < threads; ++i) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    return out;
}

} // namespace kostka
