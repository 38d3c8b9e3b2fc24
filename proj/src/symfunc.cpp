#include "hesslab/symfunc.hpp"

#include "hesslab/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hesslab {

QPoly::QPoly(long constant) {
    if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

QPoly QPoly::monomial(int exponent, mpz_class coefficient) {
    QPoly p;
    p.add_term(exponent, coefficient);
    return p;
}

mpz_class QPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int QPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

std::vector<mpz_class> QPoly::dense(int length) const {
    std::vector<mpz_class> out(std::max(length, 0));
    for (const auto& [e, c] : terms_)
        if (e < length) out[e] = c;
    return out;
}

mpz_class QPoly::at_one() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool QPoly::nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

void QPoly::add_term(int exponent, const mpz_class& coefficient) {
    if (exponent < 0) throw std::invalid_argument("QPoly: negative exponent");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

QPoly& QPoly::operator+=(const QPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

QPoly operator*(QPoly a, const mpz_class& c) {
    if (c == 0) return QPoly();
    for (auto& [e, v] : a.terms_) v *= c;
    return a;
}

std::string QPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const mpz_class mag = abs(c);
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "q";
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

QPoly q_integer(int m) {
    QPoly p;
    for (int i = 0; i < m; ++i) p.add_term(i, 1);
    return p;
}

QPoly q_factorial(int n) {
    QPoly p(1);
    for (int i = 1; i <= n; ++i) p = p * q_integer(i);
    return p;
}

QPoly QSymPoly::coefficient(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? QPoly() : it->second;
}

void QSymPoly::add(const Partition& mu, const QPoly& value) {
    if (mu.size() != degree_) throw std::invalid_argument("QSymPoly: partition has wrong size");
    if (value.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(mu, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

QPoly h_dual_coefficient(const QSymPoly& F, const Partition& mu) {
    if (F.basis() != SymBasis::monomial)
        throw std::invalid_argument("h_dual_coefficient: expected monomial basis");
    if (mu.size() != F.degree())
        throw std::invalid_argument("h_dual_coefficient: degree mismatch");
    return F.coefficient(mu);
}

namespace {

// Row-by-row permutation expansion of det(h_{mu_i - i + j}); entries with a
// negative index vanish, so whole subtrees are pruned.
void jacobi_trudi(const QSymPoly& F, const Partition& mu, int row, std::vector<bool>& used,
                  std::vector<int>& composition, int sign, QPoly& acc) {
    const int len = mu.length();
    if (row == len) {
        acc += F.coefficient(Partition::from_composition(composition)) * mpz_class(sign);
        return;
    }
    // sign of the permutation is tracked by counting inversions as columns are placed
    for (int col = 0; col < len; ++col) {
        if (used[col]) continue;
        const int entry = mu[row] - row + col;
        if (entry < 0) continue;
        int inversions = 0;
        for (int c = col + 1; c < len; ++c)
            if (used[c]) ++inversions;
        used[col] = true;
        composition[row] = entry;
        jacobi_trudi(F, mu, row + 1, used, composition, (inversions % 2) ? -sign : sign, acc);
        used[col] = false;
    }
}

}  // namespace

QPoly schur_inner_product(const QSymPoly& F, const Partition& mu) {
    if (F.basis() != SymBasis::monomial)
        throw std::invalid_argument("schur_inner_product: expected monomial basis");
    if (mu.size() != F.degree())
        throw std::invalid_argument("schur_inner_product: degree mismatch");
    std::vector<bool> used(mu.length(), false);
    std::vector<int> composition(mu.length(), 0);
    QPoly acc;
    jacobi_trudi(F, mu, 0, used, composition, 1, acc);
    return acc;
}

QSymPoly powersum_csf_q1(const std::vector<Edge>& edges, int n) {
    if (n < 1 || n > 10) throw BoundedInputError("powersum_csf_q1: n must be in [1, 10]");
    const unsigned full = (1u << n) - 1;
    std::vector<unsigned> adjacency(n, 0);
    for (auto [a, b] : edges) {
        if (a < 1 || b < 1 || a > n || b > n || a == b)
            throw std::invalid_argument("powersum_csf_q1: bad edge");
        adjacency[a - 1] |= 1u << (b - 1);
        adjacency[b - 1] |= 1u << (a - 1);
    }
    // no_edges[X]: 1 if X spans no edge, i.e. sum_{S in E(X)} (-1)^{|S|}.
    std::vector<int> no_edges(full + 1, 1);
    for (unsigned X = 1; X <= full; ++X)
        for (int v = 0; v < n && no_edges[X]; ++v)
            if ((X >> v & 1u) && (adjacency[v] & X)) no_edges[X] = 0;

    // connected[B] = sum over edge sets S spanning B connectedly of (-1)^{|S|};
    // splitting off the component of min(B) gives
    // no_edges[B] = sum_{C contains min(B)} connected[C] * no_edges[B \ C].
    std::vector<mpz_class> connected(full + 1, 0);
    for (unsigned B = 1; B <= full; ++B) {
        const unsigned low = B & (~B + 1);
        const unsigned rest = B ^ low;
        mpz_class value = no_edges[B];
        for (unsigned sub = rest; sub; sub = (sub - 1) & rest) {
            const unsigned C = low | sub;
            if (C == B) continue;
            value -= connected[C] * no_edges[B ^ C];
        }
        // C = {min(B)} alone
        if (low != B) value -= connected[low] * no_edges[rest];
        connected[B] = value;
    }

    // expand over set partitions of V into blocks, block of the min vertex first
    std::vector<std::map<std::vector<int>, mpz_class>> table(full + 1);
    table[0][{}] = 1;
    for (unsigned B = 1; B <= full; ++B) {
        const unsigned low = B & (~B + 1);
        const unsigned rest = B ^ low;
        auto& out = table[B];
        auto visit = [&](unsigned C) {
            if (connected[C] == 0) return;
            const int size = std::popcount(C);
            for (const auto& [sizes, coeff] : table[B ^ C]) {
                std::vector<int> next = sizes;
                next.insert(std::upper_bound(next.begin(), next.end(), size, std::greater<>()), size);
                out[next] += coeff * connected[C];
            }
        };
        visit(low);
        for (unsigned sub = rest; sub; sub = (sub - 1) & rest) visit(low | sub);
    }

    QSymPoly result(SymBasis::powersum, n);
    for (const auto& [sizes, coeff] : table[full])
        if (coeff != 0) result.add(Partition(sizes), QPoly::monomial(0, coeff));
    return result;
}

namespace {

// Number of maps f from the parts of lambda to the slots of mu with
// sum_{f(i) = j} lambda_i = mu_j.
mpz_class fillings(const std::vector<int>& parts, std::size_t index, std::vector<int>& room) {
    if (index == parts.size()) return 1;
    mpz_class total = 0;
    for (int& r : room) {
        if (r < parts[index]) continue;
        r -= parts[index];
        total += fillings(parts, index + 1, room);
        r += parts[index];
    }
    return total;
}

}  // namespace

QSymPoly monomial_from_powersum(const QSymPoly& P) {
    if (P.basis() != SymBasis::powersum)
        throw std::invalid_argument("monomial_from_powersum: expected power-sum basis");
    QSymPoly out(SymBasis::monomial, P.degree());
    if (P.degree() == 0) return out;
    const auto mus = partitions_of(P.degree());
    for (const auto& [lambda, coeff] : P.coefficients()) {
        for (const Partition& mu : mus) {
            if (!dominance_leq(lambda, mu)) continue;  // p_lambda only reaches m_mu with mu >= lambda
            std::vector<int> room = mu.parts();
            const mpz_class count = fillings(lambda.parts(), 0, room);
            if (count != 0) out.add(mu, coeff * count);
        }
    }
    return out;
}

QSymPoly specialize_q1(const QSymPoly& F) {
    QSymPoly out(F.basis(), F.degree());
    for (const auto& [mu, c] : F.coefficients()) out.add(mu, QPoly::monomial(0, c.at_one()));
    return out;
}

}  // namespace hesslab
