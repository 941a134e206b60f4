#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hb {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix. The scalar type doubles as the field tag:
/// Matrix<BigInt> carries exact integers (rank taken over the rationals),
/// ModMatrix holds entries reduced into [0, p).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows * cols)
            throw std::invalid_argument("Matrix: entry count does not match shape");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;

template <typename T>
Matrix<T> stack(const Matrix<T>& top, const Matrix<T>& bottom) {
    if (top.cols() != bottom.cols())
        throw std::invalid_argument("stack: column counts differ");
    Matrix<T> out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
    return out;
}

template <typename T>
Matrix<T> augment_row(const Matrix<T>& m, std::span<const T> row) {
    if (row.size() != m.cols())
        throw std::invalid_argument("augment_row: row length does not match column count");
    Matrix<T> out(m.rows() + 1, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    for (std::size_t j = 0; j < m.cols(); ++j) out(m.rows(), j) = row[j];
    return out;
}

template <typename T>
Matrix<T> augment_row(const Matrix<T>& m, const std::vector<T>& row) {
    return augment_row(m, std::span<const T>(row));
}

/// Exact rank over the rationals via fraction-free (Bareiss) elimination.
/// After k pivot steps each entry is a (k+1)x(k+1) minor of the input, so the
/// division by the previous pivot is exact and intermediates stay bounded by
/// determinant size. Deterministic: pivot = smallest nonzero magnitude,
/// lowest row index on ties.
inline long rank_exact(IntMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, c) == 0) continue;
            if (pivot == rows || boost::multiprecision::abs(m(i, c)) <
                                     boost::multiprecision::abs(m(pivot, c)))
                pivot = i;
        }
        if (pivot == rows) continue;  // column has no pivot; skipped columns stay zero below r
        m.swap_rows(pivot, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt num = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                assert(num % prev == 0);
                m(i, j) = num / prev;
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    return static_cast<long>(r);
}

// ---- prime-field arithmetic -------------------------------------------------

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return result;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

/// Deterministic Miller-Rabin; the base set is exact for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Uniform draw from [0, bound) using only the engine's standardized output
/// sequence, so results are identical across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t v;
    do {
        v = rng() & mask;
    } while (v >= bound);
    return v;
}

/// Random prime in [2^62, 2^63): word-sized, so products fit unsigned
/// __int128 with room to spare.
inline std::uint64_t random_prime(std::mt19937_64& rng) {
    while (true) {
        std::uint64_t candidate = (1ULL << 62) | uniform_below(rng, 1ULL << 62) | 1ULL;
        for (int step = 0; step < 4096 && candidate < (1ULL << 63); ++step, candidate += 2)
            if (is_prime_u64(candidate)) return candidate;
        // extremely unlikely to fall through; resample the start point
    }
}

/// Matrix over F_p, entries in [0, p).
struct ModMatrix {
    std::uint64_t p = 0;
    Matrix<std::uint64_t> m;
};

inline std::uint64_t reduce_entry_mod(const BigInt& value, std::uint64_t p) {
    BigInt r = value % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

inline ModMatrix reduce_mod(const IntMatrix& m, std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("reduce_mod: modulus is not prime");
    ModMatrix out{p, Matrix<std::uint64_t>(m.rows(), m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.m(i, j) = reduce_entry_mod(m(i, j), p);
    return out;
}

/// Row echelon form over F_p. Keeps the reduced rows (pivots normalized to 1)
/// so membership in the row space can be tested per candidate row without
/// re-eliminating the whole matrix.
class ModEchelon {
public:
    explicit ModEchelon(const ModMatrix& input) : p_(input.p), cols_(input.m.cols()) {
        Matrix<std::uint64_t> work = input.m;
        const std::size_t rows = work.rows();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows; ++c) {
            std::size_t pivot = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (work(i, c) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot == rows) continue;
            work.swap_rows(pivot, r);
            const std::uint64_t inv = invmod(work(r, c), p_);
            for (std::size_t j = c; j < cols_; ++j) work(r, j) = mulmod(work(r, j), inv, p_);
            for (std::size_t i = r + 1; i < rows; ++i) {
                const std::uint64_t factor = work(i, c);
                if (factor == 0) continue;
                for (std::size_t j = c; j < cols_; ++j) {
                    std::uint64_t sub = mulmod(factor, work(r, j), p_);
                    work(i, j) = work(i, j) >= sub ? work(i, j) - sub : work(i, j) + p_ - sub;
                }
            }
            pivot_cols_.push_back(c);
            pivot_rows_.emplace_back(work.row(r).begin(), work.row(r).end());
            ++r;
        }
    }

    long rank() const { return static_cast<long>(pivot_rows_.size()); }
    std::uint64_t prime() const { return p_; }
    std::size_t cols() const { return cols_; }

    /// True iff the row reduces to zero against the echelon, i.e. lies in the
    /// row space of the original matrix.
    bool in_row_space(std::span<const std::uint64_t> row) const {
        if (row.size() != cols_) throw std::invalid_argument("in_row_space: row length mismatch");
        std::vector<std::uint64_t> work(row.begin(), row.end());
        for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
            const std::size_t c = pivot_cols_[k];
            const std::uint64_t factor = work[c];
            if (factor == 0) continue;
            const auto& pivot_row = pivot_rows_[k];
            for (std::size_t j = c; j < cols_; ++j) {
                std::uint64_t sub = mulmod(factor, pivot_row[j], p_);
                work[j] = work[j] >= sub ? work[j] - sub : work[j] + p_ - sub;
            }
        }
        for (std::uint64_t v : work)
            if (v != 0) return false;
        return true;
    }

private:
    std::uint64_t p_;
    std::size_t cols_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<std::vector<std::uint64_t>> pivot_rows_;
};

inline long rank_mod(const ModMatrix& m) { return ModEchelon(m).rank(); }

/// Rank of an integer matrix over F_p. Always a lower bound on the rational
/// rank; equal to it unless p divides the relevant pivot minor.
inline long rank_mod_p(const IntMatrix& m, std::uint64_t p) {
    return rank_mod(reduce_mod(m, p));
}

}  // namespace hb
