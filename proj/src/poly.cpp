#include "hesslab/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hesslab {

Monomial Monomial::from_exponents(const std::vector<int>& exponents) {
    if (exponents.size() > static_cast<std::size_t>(max_vars))
        throw std::invalid_argument("Monomial: too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] > 255)
            throw std::invalid_argument("Monomial: exponent out of range");
        m.key_ += static_cast<std::uint64_t>(exponents[i]) << shift(static_cast<int>(i));
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (int i = 0; i < max_vars; ++i) d += exponent(i);
    return d;
}

namespace {

void monomials_rec(int vars, int index, int remaining, std::vector<int>& exps,
                   std::vector<Monomial>& out) {
    if (index == vars - 1) {
        exps[index] = remaining;
        out.push_back(Monomial::from_exponents(exps));
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        exps[index] = e;
        monomials_rec(vars, index + 1, remaining - e, exps, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int vars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    if (vars == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    std::vector<int> exps(vars, 0);
    monomials_rec(vars, 0, d, exps, out);
    return out;
}

std::size_t monomial_count(int vars, int d) {
    if (d < 0) return 0;
    if (vars == 0) return d == 0 ? 1 : 0;
    // C(d + vars - 1, vars - 1)
    std::size_t c = 1;
    for (int i = 1; i < vars; ++i) c = c * static_cast<std::size_t>(d + i) / static_cast<std::size_t>(i);
    return c;
}

Poly Poly::constant(int vars, const Rational& c) {
    Poly p(vars);
    p.add_term(Monomial(), c);
    return p;
}

Poly Poly::variable(int vars, int index) {
    if (index < 0 || index >= vars) throw std::invalid_argument("Poly::variable: index out of range");
    Poly p(vars);
    p.add_term(Monomial::variable(index), 1);
    return p;
}

Poly Poly::linear(const std::vector<Rational>& coefficients) {
    Poly p(static_cast<int>(coefficients.size()));
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        p.add_term(Monomial::variable(static_cast<int>(i)), coefficients[i]);
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Rational Poly::coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out(std::max(a.vars_, b.vars_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly result = constant(vars_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

std::optional<Poly> Poly::divide_by_linear(const Poly& linear) const {
    if (linear.is_zero() || linear.degree() != 1 || !linear.is_homogeneous())
        throw std::invalid_argument("divide_by_linear: divisor must be a nonzero linear form");
    // lex leading term of the divisor is x_lead
    const auto& [lead_monomial, lead_coeff] = *linear.terms_.rbegin();
    int lead = 0;
    while (lead_monomial.exponent(lead) == 0) ++lead;

    Poly remainder = *this;
    Poly quotient(vars_);
    while (!remainder.is_zero()) {
        const auto [m, c] = *remainder.terms_.rbegin();
        if (m.exponent(lead) == 0) return std::nullopt;
        Poly step(vars_);
        step.add_term(m.divided_by_variable(lead), c / lead_coeff);
        quotient += step;
        remainder -= step * linear;
    }
    return quotient;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) < vars_)
        throw std::invalid_argument("Poly::substitute: not enough images");
    const int target_vars = images.empty() ? 0 : images.front().vars();
    std::vector<std::vector<Poly>> powers(vars_);
    Poly out(target_vars);
    for (const auto& [m, c] : terms_) {
        Poly term = constant(target_vars, c);
        for (int i = 0; i < vars_; ++i) {
            const int e = m.exponent(i);
            if (e == 0) continue;
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(constant(target_vars, 1));
            while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
            term = term * cache[e];
        }
        out += term;
    }
    return out;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < vars_; ++i)
            for (int e = m.exponent(i); e > 0; --e) v *= point.at(i);
        total += v;
    }
    return total;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        const bool unit = (mag == 1);
        if (!unit || m.degree() == 0) os << hesslab::to_string(mag);
        bool star = !unit || m.degree() == 0;
        for (int i = 0; i < vars_; ++i) {
            const int e = m.exponent(i);
            if (e == 0) continue;
            if (star) os << "*";
            os << "t" << (i + 1);
            if (e > 1) os << "^" << e;
            star = true;
        }
    }
    return os.str();
}

}  // namespace hesslab
