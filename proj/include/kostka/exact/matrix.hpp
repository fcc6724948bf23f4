#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "kostka/error.hpp"
#include "kostka/exact/laurent.hpp"
#include "kostka/exact/rational_function.hpp"

namespace kostka {

/// Dense row-major square matrix over an exact ring.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static SquareMatrix diagonal(const std::vector<T>& d) {
        SquareMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    SquareMatrix transpose() const {
        SquareMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_) throw InvalidArgument("matrix size mismatch");
        SquareMatrix out(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    if (!(b(k, j) == T(0))) out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_) throw InvalidArgument("matrix size mismatch");
        SquareMatrix out(a.n_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
        return out;
    }
    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

    /// Reindexes rows and columns: out(i, j) = this(perm[i], perm[j]).
    SquareMatrix permuted(const std::vector<std::size_t>& perm) const {
        if (perm.size() != n_) throw InvalidArgument("permutation size mismatch");
        SquareMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
        return out;
    }

    template <class U, class F>
    SquareMatrix<U> map(F&& f) const {
        SquareMatrix<U> out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    bool is_lower_triangular() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!((*this)(i, j) == T(0))) return false;
        return true;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using LaurentMatrix = SquareMatrix<LaurentPoly>;
using PolyMatrix = SquareMatrix<RationalFunction>;

inline PolyMatrix to_rational_matrix(const LaurentMatrix& m) {
    return m.map<RationalFunction>([](const LaurentPoly& p) { return RationalFunction(p); });
}

/// Converts entrywise; throws NotExact naming the first offending cell.
inline LaurentMatrix to_laurent_matrix(const PolyMatrix& m) {
    LaurentMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
            auto v = m(i, j).try_to_laurent();
            if (!v)
                throw NotExact("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") is not a Laurent polynomial: " + m(i, j).to_string());
            out(i, j) = std::move(*v);
        }
    return out;
}

} // namespace kostka
