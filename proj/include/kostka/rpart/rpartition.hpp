#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/rpart/partition.hpp"

namespace kostka {

/// Composition of n into r nonnegative parts; m_i is the size of the i-th block.
struct Composition {
    std::vector<int> m;

    int r() const { return static_cast<int>(m.size()); }
    int n() const { return std::accumulate(m.begin(), m.end(), 0); }
    int operator[](std::size_t i) const { return m[i]; }
    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Partial sums p_1, ..., p_r.
inline std::vector<int> p_values(const Composition& c) {
    std::vector<int> out(c.m.size());
    std::partial_sum(c.m.begin(), c.m.end(), out.begin());
    return out;
}

/// p_-(m) = p_1 + ... + p_{r-1}.
inline int p_minus(const Composition& c) {
    const auto p = p_values(c);
    int out = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) out += p[i];
    return out;
}

/// p_+(m) = p_{r-1}.
inline int p_plus(const Composition& c) {
    if (c.m.size() < 2) return 0;
    return p_values(c)[c.m.size() - 2];
}

/// All compositions of n into r parts, lexicographically descending
/// ((n,0,...,0) first).
inline std::vector<Composition> enumerate_compositions(int n, int r) {
    if (n < 0 || r < 1) throw InvalidArgument("compositions need n >= 0, r >= 1");
    std::vector<Composition> out;
    std::vector<int> cur(static_cast<std::size_t>(r), 0);
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == r - 1) {
            cur[static_cast<std::size_t>(slot)] = remaining;
            out.push_back({cur});
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            cur[static_cast<std::size_t>(slot)] = k;
            rec(slot + 1, remaining - k);
        }
    };
    rec(0, n);
    return out;
}

/// An r-tuple of partitions of total size n.
class RPartition {
public:
    RPartition() = default;
    explicit RPartition(std::vector<Partition> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw InvalidArgument("an r-partition needs r >= 1 components");
        for (const auto& p : parts_) {
            if (!is_partition(p)) throw InvalidArgument("component is not a partition");
            n_ += partition_size(p);
        }
    }

    /// Parses "(21;-;1)". Components are separated by ';', "-" is empty,
    /// "1^2" abbreviates "11", and comma-separated parts allow values >= 10.
    static RPartition parse(std::string_view text);

    int r() const { return static_cast<int>(parts_.size()); }
    int n() const { return n_; }
    const std::vector<Partition>& parts() const { return parts_; }
    /// 0-based component access.
    const Partition& operator[](std::size_t i) const { return parts_[i]; }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) out += ";";
            out += partition_to_string(parts_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const RPartition&, const RPartition&) = default;
    friend auto operator<=>(const RPartition&, const RPartition&) = default;
    friend std::ostream& operator<<(std::ostream& os, const RPartition& l) { return os << l.to_string(); }

private:
    std::vector<Partition> parts_;
    int n_ = 0;
};

namespace detail {

inline Partition parse_component(std::string_view s) {
    Partition out;
    if (s == "-" || s.empty()) return out;
    const bool commas = s.find(',') != std::string_view::npos;
    std::size_t pos = 0;
    auto read_number = [&](bool multi_digit) {
        const std::size_t start = pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected a part in '" + std::string(s) + "'");
        if (multi_digit) {
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        } else {
            ++pos;
        }
        return std::stoi(std::string(s.substr(start, pos - start)));
    };
    while (pos < s.size()) {
        const int part = read_number(commas);
        int mult = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            mult = read_number(true);
        }
        for (int k = 0; k < mult; ++k) out.push_back(part);
        if (commas && pos < s.size()) {
            if (s[pos] != ',') throw ParseError("expected ',' in '" + std::string(s) + "'");
            ++pos;
        }
    }
    if (!is_partition(out)) throw ParseError("component '" + std::string(s) + "' is not a partition");
    return out;
}

} // namespace detail

inline RPartition RPartition::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ParseError("r-partition must be parenthesized: '" + std::string(text) + "'");
    std::vector<Partition> parts;
    std::string_view body = std::string_view(s).substr(1, s.size() - 2);
    std::size_t start = 0;
    while (true) {
        const std::size_t semi = body.find(';', start);
        parts.push_back(detail::parse_component(body.substr(start, semi == std::string_view::npos ? semi : semi - start)));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return RPartition(std::move(parts));
}

/// Every r-partition of n: compositions in enumerate_compositions order, and
/// within a composition each component runs through enumerate_partitions.
inline std::vector<RPartition> enumerate_rpartitions(int n, int r) {
    if (n < 0 || r < 1) throw InvalidArgument("r-partitions need n >= 0, r >= 1");
    std::vector<RPartition> out;
    for (const auto& comp : enumerate_compositions(n, r)) {
        std::vector<std::vector<Partition>> choices;
        for (int size : comp.m) choices.push_back(enumerate_partitions(size));
        std::vector<Partition> cur(static_cast<std::size_t>(r));
        std::function<void(std::size_t)> rec = [&](std::size_t slot) {
            if (slot == choices.size()) {
                out.emplace_back(cur);
                return;
            }
            for (const auto& p : choices[slot]) {
                cur[slot] = p;
                rec(slot + 1);
            }
        };
        rec(0);
    }
    return out;
}

/// (lambda^(1)_1, ..., lambda^(r)_1, lambda^(1)_2, ...), zero padded to r*width.
inline std::vector<int> c_sequence(const RPartition& l, int width) {
    std::vector<int> out(static_cast<std::size_t>(l.r() * width), 0);
    for (int i = 0; i < l.r(); ++i) {
        const auto& p = l[static_cast<std::size_t>(i)];
        if (static_cast<int>(p.size()) > width)
            throw InvalidArgument("c_sequence width " + std::to_string(width) + " too small for " + l.to_string());
        for (std::size_t k = 0; k < p.size(); ++k) out[k * static_cast<std::size_t>(l.r()) + static_cast<std::size_t>(i)] = p[k];
    }
    return out;
}

inline int default_width(const RPartition& l) { return std::max(l.n(), 1); }

inline void require_same_shape(const RPartition& a, const RPartition& b) {
    if (a.n() != b.n() || a.r() != b.r())
        throw InvalidArgument("r-partitions " + a.to_string() + " and " + b.to_string() + " differ in n or r");
}

/// Dominance: every prefix sum of c(a) is at most the matching one of c(b).
inline bool dominance_leq(const RPartition& a, const RPartition& b) {
    require_same_shape(a, b);
    const int w = default_width(a);
    const auto ca = c_sequence(a, w), cb = c_sequence(b, w);
    int sa = 0, sb = 0;
    for (std::size_t k = 0; k < ca.size(); ++k) {
        sa += ca[k];
        sb += cb[k];
        if (sa > sb) return false;
    }
    return true;
}

inline int n_value(const RPartition& l) {
    int out = 0;
    for (const auto& p : l.parts()) out += partition_n(p);
    return out;
}

/// a(lambda) = r n(lambda) + sum_i (i-1)|lambda^(i)|.
inline int a_value(const RPartition& l) {
    int out = l.r() * n_value(l);
    for (int i = 0; i < l.r(); ++i) out += i * partition_size(l[static_cast<std::size_t>(i)]);
    return out;
}

/// Number of reflections: C(n,2) r + (r-1) n.
inline int n_star(int n, int r) { return n * (n - 1) / 2 * r + (r - 1) * n; }

/// (lambda^(r-1), ..., lambda^(1), lambda^(r)).
inline RPartition tau(const RPartition& l) {
    std::vector<Partition> parts(l.parts());
    std::reverse(parts.begin(), parts.end() - 1);
    return RPartition(std::move(parts));
}

inline RPartition transpose(const RPartition& l) {
    std::vector<Partition> parts;
    for (const auto& p : l.parts()) parts.push_back(conjugate(p));
    return RPartition(std::move(parts));
}

inline Composition weight_composition(const RPartition& l) {
    Composition c;
    for (const auto& p : l.parts()) c.m.push_back(partition_size(p));
    return c;
}

inline bool has_weight(const RPartition& l, const Composition& m) { return weight_composition(l) == m; }

/// dim X_lambda = n^2 - n - 2 n(lambda) + sum_{i<r} (r-i)|lambda^(i)|.
inline int dim_X(const RPartition& l) {
    const int n = l.n(), r = l.r();
    int out = n * n - n - 2 * n_value(l);
    for (int i = 1; i < r; ++i) out += (r - i) * partition_size(l[static_cast<std::size_t>(i - 1)]);
    return out;
}

/// dim X_{m,unip} = n^2 - n + sum_{i<r} (r-i) m_i.
inline int dim_Xm_unip(const Composition& c) {
    const int n = c.n(), r = c.r();
    int out = n * n - n;
    for (int i = 1; i < r; ++i) out += (r - i) * c.m[static_cast<std::size_t>(i - 1)];
    return out;
}

/// d_lambda = n(lambda).
inline int d_lambda(const RPartition& l) { return n_value(l); }

} // namespace kostka
