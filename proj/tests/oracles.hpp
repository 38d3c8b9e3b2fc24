#pragma once

// Slow, independent reference implementations used to cross-check the library.

#include "hesslab/gkm.hpp"
#include "hesslab/hessenberg.hpp"
#include "hesslab/partitions.hpp"
#include "hesslab/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using namespace hesslab;

// Every map [n] -> [n]; a proper coloring whose content vector is weakly
// decreasing is a term of the monomial x^mu and adds q^asc to the m_mu coefficient.
inline QSymPoly full_coloring_csf(const HessenbergFunction& h) {
    const int n = h.n();
    const auto edges = incomparability_graph(h);
    QSymPoly out(SymBasis::monomial, n);
    std::vector<int> color(n, 0);
    while (true) {
        bool proper = true;
        int asc = 0;
        for (auto [i, j] : edges) {
            if (color[i - 1] == color[j - 1]) {
                proper = false;
                break;
            }
            if (color[i - 1] < color[j - 1]) ++asc;
        }
        if (proper) {
            std::vector<int> content(n, 0);
            for (int c : color) ++content[c];
            if (std::is_sorted(content.rbegin(), content.rend()))
                out.add(Partition::from_composition(content), QPoly::monomial(asc));
        }
        int pos = 0;
        while (pos < n && ++color[pos] == n) color[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

// Literal sum over edge subsets of (-1)^|S| p_{component sizes}.
inline QSymPoly edge_subset_powersum(const std::vector<Edge>& edges, int n) {
    QSymPoly out(SymBasis::powersum, n);
    const std::size_t m = edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        int bits = 0;
        for (std::size_t e = 0; e < m; ++e)
            if (mask >> e & 1) {
                ++bits;
                parent[find(edges[e].first - 1)] = find(edges[e].second - 1);
            }
        std::vector<int> sizes(n, 0);
        for (int v = 0; v < n; ++v) ++sizes[find(v)];
        out.add(Partition::from_composition(sizes), QPoly(bits % 2 ? -1 : 1));
    }
    return out;
}

// Number of semistandard tableaux of shape lambda and content mu.
inline long kostka(const Partition& lambda, const Partition& mu) {
    const int rows = lambda.length();
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r) tab[r].assign(lambda[r], 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
    std::vector<int> remaining(mu.parts());
    long count = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 0; v < static_cast<int>(remaining.size()); ++v) {
            if (!remaining[v]) continue;
            if (c > 0 && tab[r][c - 1] > v) continue;
            if (r > 0 && tab[r - 1][c] >= v) continue;
            tab[r][c] = v;
            --remaining[v];
            fill(idx + 1);
            ++remaining[v];
        }
    };
    fill(0);
    return count;
}

// Schur expansion from monomial coefficients: c_nu = sum_lambda a_lambda K_{lambda,nu},
// solved by substitution along reverse-lex order (K is unitriangular).
inline std::map<Partition, QPoly, RevLex> schur_by_kostka(const QSymPoly& F) {
    const auto parts = partitions_of(F.degree());
    std::map<Partition, QPoly, RevLex> a;
    for (const Partition& nu : parts) {  // decreasing in reverse-lex
        QPoly value = F.coefficient(nu);
        for (const auto& [lambda, coeff] : a)
            if (RevLex{}(lambda, nu)) value -= coeff * mpz_class(kostka(lambda, nu));
        a[nu] = value;
    }
    return a;
}

inline long catalan(int n) {
    std::vector<long> c(n + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
    return c[n];
}

inline Partition cycle_type(const std::vector<int>& w) {
    std::vector<bool> seen(w.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = w[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_composition(lengths);
}

// Average of chi^lambda over every element of the Young subgroup W_J.
inline std::int64_t invariant_dim_by_elements(const Partition& lambda, const std::vector<int>& J) {
    const int n = lambda.size();
    std::vector<int> block(n, 0);
    for (int i = 1; i < n; ++i)
        block[i] = block[i - 1] + (std::find(J.begin(), J.end(), i) == J.end() ? 1 : 0);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    std::int64_t sum = 0, order = 0;
    do {
        bool inside = true;
        for (int i = 0; i < n; ++i)
            if (block[w[i]] != block[i]) inside = false;
        if (!inside) continue;
        ++order;
        sum += character_value(lambda, cycle_type(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return sum / order;
}

// Product of q-integers [h(i) - i + 1]_q.
inline std::vector<std::int64_t> peterson_poincare(const HessenbergFunction& h) {
    QPoly p(1);
    for (int i = 1; i <= h.n(); ++i) p = p * q_integer(h(i) - i + 1);
    std::vector<std::int64_t> out;
    for (const auto& c : p.dense(p.degree() + 1)) out.push_back(c.get_si());
    return out;
}

// integrate(lift a * lift b) with random corrections sum_i x_i e_i, e_i in E_{k-1}.
inline EquivClass perturbed_lift(const GkmCohomology& coh, int k, const std::vector<Rational>& coords,
                                 std::mt19937_64& rng) {
    EquivClass c = coh.lift(k, coords);
    if (k == 0) return c;
    const auto lower = coh.equivariant_piece(k - 1);
    std::uniform_int_distribution<int> coin(-3, 3);
    for (int var = 0; var < coh.graph().vars(); ++var) {
        EquivClass e = zero_class(coh.graph(), k - 1);
        for (const auto& b : lower) e += b * Rational(coin(rng));
        c += Poly::variable(coh.graph().vars(), var) * e;
    }
    c.degree = k;
    return c;
}

}  // namespace oracle
