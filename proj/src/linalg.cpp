#include "hesslab/linalg.hpp"

#include <stdexcept>

namespace hesslab {

std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    std::vector<std::size_t> support;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t found = row;
        while (found < m.rows() && m(found, col) == 0) ++found;
        if (found == m.rows()) continue;
        m.swap_rows(row, found);

        const Rational scale = 1 / m(row, col);
        support.clear();
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (m(row, c) == 0) continue;
            m(row, c) *= scale;
            support.push_back(c);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational factor = m(r, col);
            for (std::size_t c : support) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    Rational det = 1;
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t found = col;
        while (found < n && m(found, col) == 0) ++found;
        if (found == n) return 0;
        if (found != col) {
            m.swap_rows(found, col);
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            const Rational factor = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

std::vector<std::vector<Rational>> nullspace(RationalMatrix m) {
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Rational> x(a.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

std::vector<Rational> ldl_pivots(RationalMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("ldl_pivots: matrix not square");
    std::vector<Rational> pivots;
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        pivots.push_back(m(k, k));
        if (m(k, k) == 0) break;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m(r, k) == 0) continue;
            const Rational factor = m(r, k) / m(k, k);
            for (std::size_t c = k; c < n; ++c) m(r, c) -= factor * m(k, c);
        }
    }
    return pivots;
}

bool positive_definite(const RationalMatrix& m) {
    const auto pivots = ldl_pivots(m);
    if (pivots.size() != m.rows()) return false;
    for (const Rational& p : pivots)
        if (p <= 0) return false;
    return true;
}

Inertia inertia(RationalMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inertia: matrix not square");
    const std::size_t n = m.rows();
    Inertia out;
    auto swap_sym = [&](std::size_t a, std::size_t b) {
        m.swap_rows(a, b);
        for (std::size_t r = 0; r < n; ++r) std::swap(m(r, a), m(r, b));
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) == 0) {
            std::size_t j = i + 1;
            while (j < n && m(j, j) == 0) ++j;
            if (j < n) {
                swap_sym(i, j);
            } else {
                j = i + 1;
                while (j < n && m(i, j) == 0) ++j;
                if (j == n) {
                    ++out.zero;
                    continue;
                }
                // i += j (rows then columns) makes the diagonal 2 m(i,j)
                for (std::size_t c = 0; c < n; ++c) m(i, c) += m(j, c);
                for (std::size_t r = 0; r < n; ++r) m(r, i) += m(r, j);
            }
        }
        const Rational pivot = m(i, i);
        for (std::size_t r = i + 1; r < n; ++r) {
            if (m(r, i) == 0) continue;
            const Rational factor = m(r, i) / pivot;
            for (std::size_t c = 0; c < n; ++c) m(r, c) -= factor * m(i, c);
            for (std::size_t c = 0; c < n; ++c) m(c, r) -= factor * m(c, i);
        }
        if (pivot > 0) ++out.positive;
        else ++out.negative;
    }
    return out;
}

std::size_t bareiss_rank(IntegerMatrix m) {
    std::size_t rank = 0;
    mpz_class previous = 1;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t found = rank;
        while (found < m.rows() && m(found, col) == 0) ++found;
        if (found == m.rows()) continue;
        m.swap_rows(rank, found);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            for (std::size_t c = col + 1; c < m.cols(); ++c) {
                m(r, c) = m(rank, col) * m(r, c) - m(r, col) * m(rank, c);
                mpz_divexact(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), previous.get_mpz_t());
            }
            m(r, col) = 0;
        }
        previous = m(rank, col);
        ++rank;
    }
    return rank;
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::optional<std::uint64_t> PrimeField::reduce(const Rational& r) const {
    const mpz_class modulus(std::to_string(p));
    mpz_class num = r.get_num() % modulus;
    if (num < 0) num += modulus;
    mpz_class den = r.get_den() % modulus;
    if (den == 0) return std::nullopt;
    const auto n = std::stoull(num.get_str());
    const auto d = std::stoull(den.get_str());
    return mul(n, inv(d));
}

std::size_t rank_mod(ModMatrix m, const PrimeField& field) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t found = rank;
        while (found < m.rows() && m(found, col) == 0) ++found;
        if (found == m.rows()) continue;
        m.swap_rows(rank, found);
        const std::uint64_t inv = field.inv(m(rank, col));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m(r, col) == 0) continue;
            const std::uint64_t factor = field.mul(m(r, col), inv);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) = field.sub(m(r, c), field.mul(factor, m(rank, c)));
        }
        ++rank;
    }
    return rank;
}

ModMatrix multiply_mod(const ModMatrix& a, const ModMatrix& b, const PrimeField& field) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply_mod: shape mismatch");
    ModMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
        }
    return out;
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::uint64_t next_prime(std::uint64_t v) {
    while (!is_prime(v)) ++v;
    return v;
}

}  // namespace hesslab
