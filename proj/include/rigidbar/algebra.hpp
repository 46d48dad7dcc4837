#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "rigidbar/error.hpp"

namespace rigidbar {

__extension__ typedef unsigned __int128 uint128_t;

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

/// Element of the prime field Z/PZ. P must be an odd prime below 2^63.
template <std::uint64_t P>
class ModInt {
    static_assert(P > 2 && P < (std::uint64_t{1} << 63), "modulus out of range");

public:
    static constexpr std::uint64_t modulus = P;

    constexpr ModInt() = default;
    constexpr ModInt(std::int64_t x) : value_(reduce_signed(x)) {}  // NOLINT(google-explicit-constructor)

    static constexpr ModInt from_raw(std::uint64_t x) {
        ModInt m;
        m.value_ = x % P;
        return m;
    }

    constexpr std::uint64_t value() const { return value_; }
    constexpr bool is_zero() const { return value_ == 0; }

    /// Representative in (-P/2, P/2], for printing small values readably.
    constexpr std::int64_t centered() const {
        return value_ > P / 2 ? -static_cast<std::int64_t>(P - value_)
                              : static_cast<std::int64_t>(value_);
    }

    constexpr ModInt& operator+=(ModInt o) {
        value_ += o.value_;
        if (value_ >= P) value_ -= P;
        return *this;
    }
    constexpr ModInt& operator-=(ModInt o) {
        value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + P - o.value_;
        return *this;
    }
    constexpr ModInt& operator*=(ModInt o) {
        value_ = mul(value_, o.value_);
        return *this;
    }
    constexpr ModInt& operator/=(ModInt o) { return *this *= o.inverse(); }

    friend constexpr ModInt operator+(ModInt a, ModInt b) { return a += b; }
    friend constexpr ModInt operator-(ModInt a, ModInt b) { return a -= b; }
    friend constexpr ModInt operator*(ModInt a, ModInt b) { return a *= b; }
    friend constexpr ModInt operator/(ModInt a, ModInt b) { return a /= b; }
    constexpr ModInt operator-() const { return ModInt{} - *this; }

    friend constexpr bool operator==(ModInt a, ModInt b) { return a.value_ == b.value_; }

    constexpr ModInt pow(std::uint64_t e) const {
        ModInt base = *this;
        ModInt acc = from_raw(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    constexpr ModInt inverse() const {
        if (value_ == 0) throw std::domain_error("inverse of zero in prime field");
        return pow(P - 2);
    }

private:
    static constexpr std::uint64_t reduce_signed(std::int64_t x) {
        const std::int64_t r = x % static_cast<std::int64_t>(P);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(P) : r);
    }

    static constexpr std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
        const uint128_t prod = static_cast<uint128_t>(a) * b;
        if constexpr (P == kMersenne61) {
            std::uint64_t r = static_cast<std::uint64_t>(prod & P) + static_cast<std::uint64_t>(prod >> 61);
            r = (r & P) + (r >> 61);
            return r >= P ? r - P : r;
        } else {
            return static_cast<std::uint64_t>(prod % P);
        }
    }

    std::uint64_t value_ = 0;
};

using Fp = ModInt<kMersenne61>;
using Rational = boost::multiprecision::mpq_rational;

template <class T>
bool is_zero(const T& x) {
    if constexpr (requires { x.is_zero(); }) {
        return x.is_zero();
    } else {
        return x == 0;
    }
}

template <class T>
std::string to_string(const T& x) {
    if constexpr (requires { x.centered(); }) {
        return std::to_string(x.centered());
    } else {
        return x.str();
    }
}

/// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw InputError("ragged matrix rows");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    /// Submatrix made of the listed rows, in the listed order.
    Matrix select_rows(std::span<const std::size_t> which) const {
        Matrix m(which.size(), cols_);
        for (std::size_t i = 0; i < which.size(); ++i) {
            const auto src = row(which[i]);
            std::copy(src.begin(), src.end(), m.row(i).begin());
        }
        return m;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

namespace detail {

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in row order.
template <class T>
std::vector<std::size_t> reduce_to_rref(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t r = pivot_row;
        while (r < m.rows() && is_zero(m(r, c))) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
        }
        const T inv = T(1) / m(pivot_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || is_zero(m(i, c))) continue;
            const T factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
        }
        pivots.push_back(c);
        ++pivot_row;
    }
    return pivots;
}

}  // namespace detail

/// Exact rank by Gaussian elimination.
template <class T>
std::size_t rank(Matrix<T> m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t r = rank;
        while (r < m.rows() && is_zero(m(r, c))) ++r;
        if (r == m.rows()) continue;
        if (r != rank) {
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(r, j), m(rank, j));
        }
        const T inv = T(1) / m(rank, c);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            const T factor = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

/// Basis of the right nullspace {x : m x = 0}; one vector per free column,
/// with a 1 in that column.
template <class T>
std::vector<std::vector<T>> nullspace_basis(const Matrix<T>& m) {
    Matrix<T> reduced = m;
    const auto pivots = detail::reduce_to_rref(reduced);
    std::vector<char> is_pivot(m.cols(), 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;

    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> x(m.cols(), T(0));
        x[free] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -reduced(r, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

template <class T>
std::vector<T> multiply(const Matrix<T>& m, std::span<const T> x) {
    if (x.size() != m.cols()) throw InputError("dimension mismatch in matrix-vector product");
    std::vector<T> out(m.rows(), T(0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * x[c];
    }
    return out;
}

/// Deterministic 64-bit stream. Built on mt19937_64, whose output sequence is
/// fixed by the standard, with range reduction done here rather than by
/// <random> distributions (which differ between standard libraries).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw InputError("RandomSource::below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw InputError("RandomSource::uniform_int with empty range");
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(span == 0 ? engine_() : below(span));
    }

    bool bernoulli(std::uint64_t numerator, std::uint64_t denominator) {
        return below(denominator) < numerator;
    }

    template <std::uint64_t P>
    ModInt<P> field_element() {
        return ModInt<P>::from_raw(below(P));
    }

    /// An independent stream for sub-task `stream`, derived by splitmix64 so
    /// that forks of different seeds do not overlap in practice.
    RandomSource fork(std::uint64_t stream) const { return RandomSource(mix(seed_ ^ mix(stream + 1))); }

    template <class It>
    void shuffle(It first, It last) {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) std::swap(first[i - 1], first[below(i)]);
    }

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// `count` independent uniform elements of Z/PZ.
template <std::uint64_t P = kMersenne61>
std::vector<ModInt<P>> random_assignment(RandomSource& rs, std::size_t count) {
    std::vector<ModInt<P>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(rs.template field_element<P>());
    return out;
}

/// Upper bound on the probability that the maximum rank over `trials`
/// independent uniform evaluations falls below the generic rank, when the
/// witnessing minor has total degree at most `degree`.
inline double schwartz_zippel_bound(std::size_t degree, std::size_t trials,
                                    std::uint64_t modulus = kMersenne61) {
    if (degree == 0) return 0.0;
    const double per_trial = std::min(1.0, static_cast<double>(degree) / static_cast<double>(modulus));
    return std::pow(per_trial, static_cast<double>(trials));
}

}  // namespace rigidbar
