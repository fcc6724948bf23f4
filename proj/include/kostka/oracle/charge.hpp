#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/laurent.hpp"
#include "kostka/rpart/partition.hpp"

// Classical (r = 1) Kostka-Foulkes polynomials from the charge statistic on
// semistandard tableaux. Independent of the factorization code and used as
// its oracle in the symmetric-group case.

namespace kostka::oracle {

/// Tableau in English notation: rows top to bottom, entries 1-based.
using Tableau = std::vector<std::vector<int>>;

/// All semistandard tableaux of the given shape and content.
inline std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content) {
    if (partition_size(shape) != partition_size(content)) return {};
    std::vector<Tableau> out;
    Tableau t;
    for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<int> left = content;
    // Fill cells row by row; a cell may hold v if it exceeds the cell above
    // and is at least the cell to the left.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t row, std::size_t col) {
        if (row == shape.size()) {
            out.push_back(t);
            return;
        }
        if (col == static_cast<std::size_t>(shape[row])) {
            rec(row + 1, 0);
            return;
        }
        const int lo = std::max(col > 0 ? t[row][col - 1] : 1, row > 0 ? t[row - 1][col] + 1 : 1);
        for (int v = lo; v <= static_cast<int>(content.size()); ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
            --left[static_cast<std::size_t>(v - 1)];
            t[row][col] = v;
            rec(row, col + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
        t[row][col] = 0;
    };
    rec(0, 0);
    return out;
}

inline long kostka_number(const Partition& shape, const Partition& content) {
    return static_cast<long>(semistandard_tableaux(shape, content).size());
}

/// Reading word: rows from bottom to top, each left to right.
inline std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

/// Charge of a word whose content is a partition. Standard subwords are
/// peeled off by scanning leftwards (cyclically) for 1, 2, 3, ...; the index
/// increases by one each time the scan wraps around.
inline int charge(std::vector<int> word) {
    int total = 0;
    while (!word.empty()) {
        int max_letter = 0;
        for (int v : word) max_letter = std::max(max_letter, v);
        std::vector<std::size_t> picked;
        const std::size_t n = word.size();
        std::size_t pos = n;  // one past the right end
        int index = 0;
        for (int letter = 1; letter <= max_letter; ++letter) {
            bool found = false;
            bool wrapped = false;
            std::size_t p = pos;
            for (std::size_t step = 0; step < n; ++step) {
                if (p == 0) {
                    p = n;
                    wrapped = true;
                }
                --p;
                if (word[p] == letter) {
                    found = true;
                    break;
                }
            }
            if (!found) throw InvalidArgument("charge needs a word with partition content");
            if (letter > 1 && wrapped) ++index;
            total += index;
            picked.push_back(p);
            pos = p;
        }
        std::vector<char> drop(n, 0);
        for (std::size_t p : picked) drop[p] = 1;
        std::vector<int> rest;
        for (std::size_t i = 0; i < n; ++i)
            if (!drop[i]) rest.push_back(word[i]);
        word = std::move(rest);
    }
    return total;
}

/// K_{lambda,mu}(t) = sum over SSYT of shape lambda and content mu of t^charge.
inline LaurentPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    LaurentPoly out;
    for (const auto& t : semistandard_tableaux(lambda, mu)) out.add_term(charge(reading_word(t)), 1);
    return out;
}

/// t^{n(mu)} K_{lambda,mu}(t^{-1}).
inline LaurentPoly modified_kostka_foulkes(const Partition& lambda, const Partition& mu) {
    return kostka_foulkes(lambda, mu).invert_variable().shift(partition_n(mu));
}

} // namespace kostka::oracle
