#pragma once

#include <stdexcept>
#include <vector>

#include "cherednik/rat.hpp"

namespace cherednik {

using RatVec = std::vector<Rat>;

// Dense square rational matrix, row major. Small sizes only (rank <= 8).
class RatMatrix {
public:
    RatMatrix() : n_(0) {}
    explicit RatMatrix(std::size_t n) : n_(n), a_(n * n, Rat(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t size() const { return n_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    RatMatrix operator*(const RatMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const Rat& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < n_; ++j)
                    if (o(k, j) != 0) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    RatVec apply(const RatVec& v) const {
        if (v.size() != n_) throw std::invalid_argument("RatMatrix: vector size mismatch");
        RatVec r(n_, Rat(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    RatMatrix transpose() const {
        RatMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Rat trace() const {
        Rat t(0);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    bool operator==(const RatMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator<(const RatMatrix& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return a_ < o.a_;
    }

private:
    std::size_t n_;
    std::vector<Rat> a_;
};

inline Rat dot(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// Row-reduces the given vectors in place and returns the rank. Vectors are
// coordinate rows of equal length.
inline std::size_t row_reduce(std::vector<RatVec>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rat inv = Rat(1) / rows[rank][col];
        for (std::size_t j = col; j < cols; ++j) rows[rank][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const Rat f = rows[i][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    rows.resize(rank);
    return rank;
}

}  // namespace cherednik
