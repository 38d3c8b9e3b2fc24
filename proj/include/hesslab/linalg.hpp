#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hesslab {

using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    /// Builds a matrix whose rows are the given vectors (all of equal length).
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<mpz_class>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);
std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
/// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);
/// Some x with a x = b, free variables set to zero.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Pivots of symmetric Gaussian elimination without pivoting (LDL^T diagonal).
/// Stops after the first zero pivot, which is included.
std::vector<Rational> ldl_pivots(RationalMatrix m);
bool positive_definite(const RationalMatrix& m);

/// Inertia (positive, negative, zero) by exact congruence diagonalisation.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Inertia inertia(RationalMatrix m);

/// Fraction-free (Bareiss) rank over the integers.
std::size_t bareiss_rank(IntegerMatrix m);

/// Arithmetic in Z/p for a prime p < 2^62.
struct PrimeField {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
    /// Image of a rational; nullopt when p divides the denominator.
    std::optional<std::uint64_t> reduce(const Rational& r) const;
};

using ModMatrix = Matrix<std::uint64_t>;

std::size_t rank_mod(ModMatrix m, const PrimeField& field);
ModMatrix multiply_mod(const ModMatrix& a, const ModMatrix& b, const PrimeField& field);

bool is_prime(std::uint64_t v);
std::uint64_t next_prime(std::uint64_t v);

}  // namespace hesslab
