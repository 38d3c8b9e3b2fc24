#pragma once

#include "hesslab/linalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hesslab {

/// Exponent vector packed into 8-bit fields, variable 0 most significant, so
/// that integer order on keys is lexicographic order on monomials.
class Monomial {
public:
    static constexpr int max_vars = 8;

    Monomial() = default;
    static Monomial variable(int index) { return Monomial(std::uint64_t{1} << shift(index)); }
    static Monomial from_exponents(const std::vector<int>& exponents);

    int exponent(int index) const { return static_cast<int>((key_ >> shift(index)) & 0xffu); }
    int degree() const;
    std::uint64_t key() const noexcept { return key_; }

    friend Monomial operator*(Monomial a, Monomial b) { return Monomial(a.key_ + b.key_); }
    /// a / x_index; requires exponent(index) > 0.
    Monomial divided_by_variable(int index) const { return Monomial(key_ - (std::uint64_t{1} << shift(index))); }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    explicit Monomial(std::uint64_t key) : key_(key) {}
    static int shift(int index) { return 8 * (max_vars - 1 - index); }
    std::uint64_t key_ = 0;
};

/// All monomials of total degree d in `vars` variables, in increasing lex order.
std::vector<Monomial> monomials_of_degree(int vars, int d);
/// C(d + vars - 1, vars - 1)
std::size_t monomial_count(int vars, int d);

/// Sparse multivariate polynomial with rational coefficients.
class Poly {
public:
    explicit Poly(int vars = 0) : vars_(vars) {}
    static Poly constant(int vars, const Rational& c);
    static Poly variable(int vars, int index);
    /// sum_i coefficients[i] x_i
    static Poly linear(const std::vector<Rational>& coefficients);

    int vars() const noexcept { return vars_; }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Total degree; -1 for zero.
    int degree() const;
    bool is_homogeneous() const;
    Rational coefficient(Monomial m) const;
    /// Constant term.
    Rational constant_term() const { return coefficient(Monomial()); }

    void add_term(Monomial m, const Rational& c);
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const { return *this * Rational(-1); }
    Poly pow(int k) const;

    /// Exact quotient by a nonzero linear form, or nullopt when not divisible.
    std::optional<Poly> divide_by_linear(const Poly& linear) const;
    /// Replaces x_i by images[i].
    Poly substitute(const std::vector<Poly>& images) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    friend bool operator==(const Poly&, const Poly&) = default;
    std::string to_string() const;

private:
    int vars_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace hesslab
