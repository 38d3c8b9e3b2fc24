#pragma once

#include "hesslab/hessenberg.hpp"
#include "hesslab/partitions.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace hesslab {

/// Polynomial in q with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class QPoly {
public:
    QPoly() = default;
    QPoly(long constant);  // NOLINT: implicit constants read naturally
    static QPoly monomial(int exponent, mpz_class coefficient = 1);

    const std::map<int, mpz_class>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    mpz_class coefficient(int exponent) const;
    /// Largest exponent; -1 for zero.
    int degree() const;
    /// Dense coefficients 0..length-1 (zero padded / truncated).
    std::vector<mpz_class> dense(int length) const;
    mpz_class at_one() const;
    bool nonnegative() const;

    void add_term(int exponent, const mpz_class& coefficient);
    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const mpz_class& c);
    friend bool operator==(const QPoly&, const QPoly&) = default;

    std::string to_string() const;

private:
    std::map<int, mpz_class> terms_;
};

/// [n]_q! = prod_{i=1}^n (1 + q + ... + q^{i-1})
QPoly q_factorial(int n);
/// [m]_q = 1 + q + ... + q^{m-1}
QPoly q_integer(int m);

enum class SymBasis { monomial, powersum };

/// Homogeneous degree-n symmetric function with QPoly coefficients in the
/// monomial or power-sum basis.
class QSymPoly {
public:
    QSymPoly(SymBasis basis, int degree) : basis_(basis), degree_(degree) {}

    SymBasis basis() const noexcept { return basis_; }
    int degree() const noexcept { return degree_; }
    const std::map<Partition, QPoly, RevLex>& coefficients() const noexcept { return coeffs_; }

    /// Zero when absent.
    QPoly coefficient(const Partition& mu) const;
    /// Adds to the coefficient of mu; throws std::invalid_argument if |mu| != degree.
    void add(const Partition& mu, const QPoly& value);

    friend bool operator==(const QSymPoly&, const QSymPoly&) = default;

private:
    SymBasis basis_;
    int degree_;
    std::map<Partition, QPoly, RevLex> coeffs_;
};

/// <F, h_mu>, i.e. the m_mu coefficient of F.
QPoly h_dual_coefficient(const QSymPoly& F, const Partition& mu);

/// <F, s_mu> by Jacobi-Trudi: sum over sigma of sign(sigma) times the
/// m-coefficient at the sorted composition (mu_i - i + sigma(i)).
QPoly schur_inner_product(const QSymPoly& F, const Partition& mu);

/// Power-sum expansion of Stanley's chromatic symmetric function,
/// sum over edge subsets S of (-1)^{|S|} p_{lambda(S)}. n <= 10; vertices 1..n.
QSymPoly powersum_csf_q1(const std::vector<Edge>& edges, int n);

/// Monomial expansion of a power-sum expression (coefficients may be any QPoly).
QSymPoly monomial_from_powersum(const QSymPoly& P);

/// F with q set to 1, as a QSymPoly with constant coefficients.
QSymPoly specialize_q1(const QSymPoly& F);

}  // namespace hesslab
