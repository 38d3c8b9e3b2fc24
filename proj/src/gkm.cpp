#include "hesslab/gkm.hpp"

#include "hesslab/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace hesslab {

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a.at(b[i]);
    return out;
}

Permutation inverse(const Permutation& w) {
    Permutation out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[w[i]] = static_cast<int>(i);
    return out;
}

Permutation representative(const Partition& mu) {
    Permutation w(mu.size());
    int start = 0;
    for (int part : mu.parts()) {
        for (int i = 0; i < part; ++i) w[start + i] = start + (i + 1) % part;
        start += part;
    }
    return w;
}

namespace {

// Localization data per graph; GkmGraph is immutable after construction.
struct Localization {
    std::vector<Poly> roots;      // t_a - t_b, a < b
    std::vector<Poly> cofactors;  // prod(roots) / prod(labels at w)
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

GkmGraph::GkmGraph(const HessenbergFunction& h) : h_(h), l_(hesslab::dimension(h)) {
    const int n = h.n();
    if (n > 5) throw BoundedInputError("build_gkm: n must be <= 5");
    const int m = n - 1;
    for (int i = 0; i < n; ++i) {
        if (i < m) {
            coordinates_.push_back(Poly::variable(m, i));
        } else {
            Poly last(m);
            for (int k = 0; k < m; ++k) last -= Poly::variable(m, k);
            coordinates_.push_back(last);
        }
    }

    Permutation w(n);
    std::iota(w.begin(), w.end(), 0);
    do {
        vertices_.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));

    edges_.resize(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        const Permutation& u = vertices_[v];
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < h(i + 1); ++j) {
                Permutation target = u;
                std::swap(target[i], target[j]);
                edges_[v].push_back({index_of(target), i, j, t(u[i]) - t(u[j])});
            }
        }
        if (static_cast<int>(edges_[v].size()) != l_)
            throw ConsistencyError("build_gkm: vertex degree differs from dim(H/b)");
    }

    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        for (const GkmEdge& e : edges_[v]) parent[find_root(parent, v)] = find_root(parent, e.target);
    std::map<std::size_t, std::size_t> label;
    component_.resize(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        const std::size_t root = find_root(parent, v);
        auto [it, inserted] = label.try_emplace(root, label.size());
        component_[v] = it->second;
    }
    components_ = label.size();

    for (std::size_t v = 0; v < vertices_.size(); ++v)
        for (const GkmEdge& e : edges_[v]) {
            const auto& back = edges_[e.target];
            const bool symmetric = std::any_of(back.begin(), back.end(),
                                               [&](const GkmEdge& b) { return b.target == v; });
            if (!symmetric) throw ConsistencyError("build_gkm: edge relation is not symmetric");
        }
}

std::size_t GkmGraph::index_of(const Permutation& w) const {
    // vertices are in lexicographic order: rank by Lehmer code
    std::size_t index = 0;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (w[j] < w[i]) ++smaller;
        index = index * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
    }
    return index;
}

std::size_t GkmGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& list : edges_) total += list.size();
    return total / 2;
}

Poly GkmGraph::permuted_form(const Permutation& w, const std::vector<long>& lambda) const {
    Poly out(vars());
    for (int i = 0; i < n(); ++i) out += t(w[i]) * Rational(lambda.at(i));
    return out;
}

Poly GkmGraph::act(const Permutation& w, const Poly& p) const {
    std::vector<Poly> images;
    for (int k = 0; k < vars(); ++k) images.push_back(t(w[k]));
    if (images.empty()) return p;
    return p.substitute(images);
}

EquivClass& EquivClass::operator+=(const EquivClass& other) {
    for (std::size_t v = 0; v < values.size(); ++v) values[v] += other.values[v];
    return *this;
}

EquivClass& EquivClass::operator-=(const EquivClass& other) {
    for (std::size_t v = 0; v < values.size(); ++v) values[v] -= other.values[v];
    return *this;
}

EquivClass operator*(const EquivClass& a, const EquivClass& b) {
    EquivClass out{a.degree + b.degree, {}};
    out.values.reserve(a.values.size());
    for (std::size_t v = 0; v < a.values.size(); ++v) out.values.push_back(a.values[v] * b.values[v]);
    return out;
}

EquivClass operator*(const Poly& p, const EquivClass& c) {
    EquivClass out{c.degree + std::max(p.degree(), 0), {}};
    for (const Poly& value : c.values) out.values.push_back(p * value);
    return out;
}

EquivClass operator*(EquivClass c, const Rational& r) {
    for (Poly& value : c.values) value *= r;
    return c;
}

EquivClass zero_class(const GkmGraph& g, int degree) {
    return EquivClass{degree, std::vector<Poly>(g.vertex_count(), Poly(g.vars()))};
}

EquivClass unit_class(const GkmGraph& g) {
    return EquivClass{0, std::vector<Poly>(g.vertex_count(), Poly::constant(g.vars(), 1))};
}

bool satisfies_edge_conditions(const GkmGraph& g, const EquivClass& c) {
    if (c.values.size() != g.vertex_count()) return false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (const GkmEdge& e : g.edges_at(v)) {
            if (e.target < v) continue;
            const Poly diff = c.values[v] - c.values[e.target];
            if (!diff.is_zero() && !diff.divide_by_linear(e.label)) return false;
        }
    return true;
}

namespace {

const Localization& localization(const GkmGraph& g) {
    thread_local std::map<const GkmGraph*, std::pair<HessenbergFunction, Localization>> cache;
    auto it = cache.find(&g);
    if (it != cache.end() && it->second.first == g.hessenberg()) return it->second.second;

    Localization data;
    Poly product = Poly::constant(g.vars(), 1);
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b) {
            data.roots.push_back(g.t(a) - g.t(b));
            product = product * data.roots.back();
        }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        Poly cof = product;
        for (const GkmEdge& e : g.edges_at(v)) {
            auto q = cof.divide_by_linear(e.label);
            if (!q) throw ConsistencyError("integrate: tangent weights are not distinct roots");
            cof = std::move(*q);
        }
        data.cofactors.push_back(std::move(cof));
    }
    auto& slot = cache[&g];
    slot = {g.hessenberg(), std::move(data)};
    return slot.second;
}

}  // namespace

Poly integrate(const GkmGraph& g, const EquivClass& c) {
    const Localization& loc = localization(g);
    Poly numerator(g.vars());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!c.values[v].is_zero()) numerator += c.values[v] * loc.cofactors[v];
    for (const Poly& root : loc.roots) {
        if (numerator.is_zero()) break;
        auto q = numerator.divide_by_linear(root);
        if (!q) throw ConsistencyError("integrate: localization sum is not a polynomial");
        numerator = std::move(*q);
    }
    return numerator;
}

Rational integrate_number(const GkmGraph& g, const EquivClass& c) {
    if (c.degree != g.dimension())
        throw std::invalid_argument("integrate_number: class degree must equal dim");
    return integrate(g, c).constant_term();
}

EquivClass kahler_class(const GkmGraph& g, const std::vector<long>& lambda) {
    if (static_cast<int>(lambda.size()) != g.n())
        throw std::invalid_argument("kahler_class: weight has the wrong length");
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] >= lambda[i - 1])
            throw std::invalid_argument("kahler_class: weight must be strictly decreasing");
    EquivClass out{1, {}};
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out.values.push_back(g.permuted_form(g.vertex(v), lambda));
    return out;
}

EquivClass dot_action(const GkmGraph& g, const Permutation& w, const EquivClass& c) {
    const Permutation w_inv = inverse(w);
    EquivClass out{c.degree, std::vector<Poly>(g.vertex_count(), Poly(g.vars()))};
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        out.values[u] = g.act(w, c.values[g.index_of(compose(w_inv, g.vertex(u)))]);
    if (!satisfies_edge_conditions(g, out))
        throw ConsistencyError("dot_action: image violates the edge conditions");
    return out;
}

MorseData morse_data(const GkmGraph& g, std::uint64_t seed) {
    const int n = g.n();
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed + attempt);
        std::uniform_int_distribution<long> draw(-1000, 1000);
        MorseData md;
        md.seed = seed + attempt;
        for (int i = 0; i < n; ++i) md.xi.push_back(draw(rng));
        std::vector<long> sorted = md.xi;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;

        // height(w) = <xi, w(rho)>, rho = (n-1, ..., 0)
        std::vector<long> height(g.vertex_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            long s = 0;
            for (int i = 0; i < n; ++i) s += static_cast<long>(n - 1 - i) * md.xi[g.vertex(v)[i]];
            height[v] = s;
        }
        std::set<long> distinct(height.begin(), height.end());
        if (distinct.size() != height.size()) continue;

        md.order.resize(g.vertex_count());
        std::iota(md.order.begin(), md.order.end(), 0);
        std::sort(md.order.begin(), md.order.end(),
                  [&](std::size_t a, std::size_t b) { return height[a] < height[b]; });
        md.position.resize(g.vertex_count());
        for (std::size_t p = 0; p < md.order.size(); ++p) md.position[md.order[p]] = p;

        md.down_degree.assign(g.vertex_count(), 0);
        md.betti.assign(g.dimension() + 1, 0);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const Permutation& w = g.vertex(v);
            for (const GkmEdge& e : g.edges_at(v)) {
                const bool negative_pairing = md.xi[w[e.i]] - md.xi[w[e.j]] > 0;
                const bool goes_down = height[e.target] < height[v];
                if (negative_pairing != goes_down)
                    throw ConsistencyError("morse_data: edge orientation disagrees with height");
                if (negative_pairing) ++md.down_degree[v];
            }
            ++md.betti[md.down_degree[v]];
        }
        return md;
    }
}

namespace {

// Restriction of polynomials to the hyperplane {root = 0}: the lex-leading
// variable of the root is solved for.
Poly restrict_to_hyperplane(const Poly& p, const Poly& root) {
    const auto& [lead_monomial, lead_coeff] = *root.terms().rbegin();
    int lead = 0;
    while (lead_monomial.exponent(lead) == 0) ++lead;
    std::vector<Poly> images;
    for (int k = 0; k < p.vars(); ++k) {
        if (k != lead) {
            images.push_back(Poly::variable(p.vars(), k));
            continue;
        }
        Poly image(p.vars());
        for (const auto& [m, c] : root.terms()) {
            int var = 0;
            while (m.exponent(var) == 0) ++var;
            if (var != lead) image.add_term(m, -c / lead_coeff);
        }
        images.push_back(image);
    }
    return p.substitute(images);
}

struct RestrictionTable {
    // key: (lo, hi) vertex-free root label t_lo - t_hi, degree
    std::map<std::tuple<int, int, int>, std::vector<Poly>> cache;

    const std::vector<Poly>& get(const GkmGraph& g, int a, int b, int degree) {
        if (a > b) std::swap(a, b);
        auto key = std::make_tuple(a, b, degree);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const Poly root = g.t(a) - g.t(b);
        std::vector<Poly> images;
        for (Monomial m : monomials_of_degree(g.vars(), degree)) {
            Poly p(g.vars());
            p.add_term(m, 1);
            images.push_back(restrict_to_hyperplane(p, root));
        }
        return cache.emplace(key, std::move(images)).first->second;
    }
};

}  // namespace

GkmCohomology::GkmCohomology(const GkmGraph& g, std::uint64_t seed,
                             const std::vector<std::int64_t>& expected_betti)
    : g_(&g), morse_(morse_data(g, seed)) {
    if (!expected_betti.empty() && expected_betti != morse_.betti)
        throw ConsistencyError("GKM Morse Betti numbers disagree with the character computation");

    down_edges_.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t e = 0; e < g.edges_at(v).size(); ++e)
            if (morse_.position[g.edges_at(v)[e].target] < morse_.position[v]) down_edges_[v].push_back(e);

    ordinary_basis_.resize(g.dimension() + 1);
    for (std::size_t v : morse_.order) ordinary_basis_[morse_.down_degree[v]].push_back(v);

    flow_ups_.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        flow_ups_[v] = build_flow_up(v);
        if (!satisfies_edge_conditions(g, flow_ups_[v]))
            throw ConsistencyError("flow-up class violates the edge conditions");
    }
}

EquivClass GkmCohomology::build_flow_up(std::size_t w) const {
    const GkmGraph& g = *g_;
    const int d = morse_.down_degree[w];
    const std::size_t pos_w = morse_.position[w];

    Poly top = Poly::constant(g.vars(), 1);
    for (std::size_t e : down_edges_[w]) top = top * g.edges_at(w)[e].label;

    // unknown vertices: strictly above w, same component
    std::vector<std::size_t> unknown;
    std::vector<long> slot(g.vertex_count(), -1);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (morse_.position[v] > pos_w && g.component_of(v) == g.component_of(w)) {
            slot[v] = static_cast<long>(unknown.size());
            unknown.push_back(v);
        }

    EquivClass out = zero_class(g, d);
    out.degree = d;
    out.values[w] = top;
    if (unknown.empty()) return out;

    const auto basis = monomials_of_degree(g.vars(), d);
    const std::size_t width = basis.size();
    RestrictionTable table;

    std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> row_of;
    std::vector<std::map<std::size_t, Rational>> rows;
    std::vector<Rational> rhs;
    auto row_index = [&](std::size_t edge_id, Monomial m) {
        auto [it, inserted] = row_of.try_emplace({edge_id, m.key()}, rows.size());
        if (inserted) {
            rows.emplace_back();
            rhs.emplace_back(0);
        }
        return it->second;
    };

    std::size_t edge_id = 0;
    for (std::size_t a = 0; a < g.vertex_count(); ++a) {
        for (const GkmEdge& e : g.edges_at(a)) {
            const std::size_t b = e.target;
            if (b < a) continue;
            ++edge_id;
            const bool a_live = (a == w) || slot[a] >= 0;
            const bool b_live = (b == w) || slot[b] >= 0;
            if (!a_live && !b_live) continue;
            const Permutation& wa = g.vertex(a);
            const auto& restricted = table.get(g, wa[e.i], wa[e.j], d);
            auto contribute = [&](std::size_t x, int sign) {
                if (x == w) {
                    const Poly r = restrict_to_hyperplane(top, e.label);
                    for (const auto& [m, c] : r.terms()) rhs[row_index(edge_id, m)] -= sign * c;
                } else if (slot[x] >= 0) {
                    for (std::size_t k = 0; k < width; ++k)
                        for (const auto& [m, c] : restricted[k].terms())
                            rows[row_index(edge_id, m)][slot[x] * width + k] += sign * c;
                }
            };
            contribute(a, 1);
            contribute(b, -1);
        }
    }

    RationalMatrix system(rows.size(), unknown.size() * width);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, value] : rows[r]) system(r, col) = value;
    const auto solution = solve(system, rhs);
    if (!solution)
        throw ConsistencyError("flow-up class does not exist for vertex " + std::to_string(w));
    for (std::size_t idx = 0; idx < unknown.size(); ++idx) {
        Poly value(g.vars());
        for (std::size_t k = 0; k < width; ++k) value.add_term(basis[k], (*solution)[idx * width + k]);
        out.values[unknown[idx]] = std::move(value);
    }
    return out;
}

std::vector<EquivClass> GkmCohomology::equivariant_piece(int k) const {
    std::vector<EquivClass> out;
    for (std::size_t v : morse_.order) {
        const int d = morse_.down_degree[v];
        if (d > k) continue;
        for (Monomial m : monomials_of_degree(g_->vars(), k - d)) {
            Poly p(g_->vars());
            p.add_term(m, 1);
            out.push_back(p * flow_ups_[v]);
            out.back().degree = k;
        }
    }
    return out;
}

std::size_t GkmCohomology::free_module_dimension(int k) const {
    std::size_t total = 0;
    for (int j = 0; j <= std::min(k, dimension()); ++j)
        total += static_cast<std::size_t>(morse_.betti[j]) * monomial_count(g_->vars(), k - j);
    return total;
}

std::size_t GkmCohomology::edge_system_nullity_mod_p(int k) const {
    const GkmGraph& g = *g_;
    const PrimeField field{2147483647ULL};
    const auto basis = monomials_of_degree(g.vars(), k);
    const std::size_t width = basis.size();
    RestrictionTable table;

    std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> rows;
    std::size_t edge_id = 0;
    for (std::size_t a = 0; a < g.vertex_count(); ++a)
        for (const GkmEdge& e : g.edges_at(a)) {
            const std::size_t b = e.target;
            if (b < a) continue;
            ++edge_id;
            const auto& restricted = table.get(g, g.vertex(a)[e.i], g.vertex(a)[e.j], k);
            for (std::size_t idx = 0; idx < width; ++idx)
                for (const auto& [m, c] : restricted[idx].terms()) {
                    auto [it, inserted] = row_of.try_emplace({edge_id, m.key()}, rows.size());
                    if (inserted) rows.emplace_back();
                    const auto value = field.reduce(c);
                    if (!value) throw ConsistencyError("edge system: denominator divisible by p");
                    rows[it->second].emplace_back(a * width + idx, *value);
                    rows[it->second].emplace_back(b * width + idx, field.sub(0, *value));
                }
        }
    ModMatrix m(rows.size(), g.vertex_count() * width);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, value] : rows[r]) m(r, col) = field.add(m(r, col), value);
    return m.cols() - rank_mod(std::move(m), field);
}

const std::vector<std::size_t>& GkmCohomology::ordinary_basis(int k) const {
    static const std::vector<std::size_t> empty;
    if (k < 0 || k > dimension()) return empty;
    return ordinary_basis_[k];
}

std::vector<Poly> GkmCohomology::expand(const EquivClass& c) const {
    const GkmGraph& g = *g_;
    EquivClass residual = c;
    std::vector<Poly> coefficients(g.vertex_count(), Poly(g.vars()));
    for (std::size_t w : morse_.order) {
        if (residual.values[w].is_zero()) continue;
        Poly q = residual.values[w];
        for (std::size_t e : down_edges_[w]) {
            auto next = q.divide_by_linear(g.edges_at(w)[e].label);
            if (!next)
                throw ConsistencyError("expand: class is not in the span of flow-up classes");
            q = std::move(*next);
        }
        if (morse_.down_degree[w] == 0 && !q.is_zero() && q.degree() != c.degree)
            throw ConsistencyError("expand: inhomogeneous class");
        const EquivClass& f = flow_ups_[w];
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (!f.values[v].is_zero()) residual.values[v] -= q * f.values[v];
        coefficients[w] = std::move(q);
    }
    return coefficients;
}

std::vector<Rational> GkmCohomology::project(const EquivClass& c) const {
    const auto& basis = ordinary_basis(c.degree);
    std::vector<Rational> coords(basis.size(), 0);
    if (basis.empty()) return coords;
    const auto q = expand(c);
    for (std::size_t i = 0; i < basis.size(); ++i) coords[i] = q[basis[i]].constant_term();
    return coords;
}

EquivClass GkmCohomology::lift(int k, const std::vector<Rational>& coordinates) const {
    const auto& basis = ordinary_basis(k);
    if (coordinates.size() != basis.size()) throw std::invalid_argument("lift: wrong coordinate count");
    EquivClass out = zero_class(*g_, k);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coordinates[i] != 0) out += flow_ups_[basis[i]] * coordinates[i];
    return out;
}

RationalMatrix GkmCohomology::action_matrix(const Permutation& w, int k) const {
    const auto& basis = ordinary_basis(k);
    RationalMatrix out(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto image = project(dot_action(*g_, w, flow_ups_[basis[c]]));
        for (std::size_t r = 0; r < basis.size(); ++r) out(r, c) = image[r];
    }
    return out;
}

std::size_t ordinary_dimension_by_quotient(const GkmGraph& g, int k) {
    if (k < 0) return 0;
    const int m = g.vars();
    auto kernel = [&](int degree) {
        const auto basis = monomials_of_degree(m, degree);
        const std::size_t width = basis.size();
        RestrictionTable table;
        std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> row_of;
        std::vector<std::map<std::size_t, Rational>> rows;
        std::size_t edge_id = 0;
        for (std::size_t a = 0; a < g.vertex_count(); ++a)
            for (const GkmEdge& e : g.edges_at(a)) {
                const std::size_t b = e.target;
                if (b < a) continue;
                ++edge_id;
                const auto& restricted = table.get(g, g.vertex(a)[e.i], g.vertex(a)[e.j], degree);
                for (std::size_t idx = 0; idx < width; ++idx)
                    for (const auto& [mono, c] : restricted[idx].terms()) {
                        auto [it, inserted] = row_of.try_emplace({edge_id, mono.key()}, rows.size());
                        if (inserted) rows.emplace_back();
                        rows[it->second][a * width + idx] += c;
                        rows[it->second][b * width + idx] -= c;
                    }
            }
        RationalMatrix sys(rows.size(), g.vertex_count() * width);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [col, value] : rows[r]) sys(r, col) = value;
        if (rows.empty()) {
            std::vector<std::vector<Rational>> all;
            for (std::size_t c = 0; c < sys.cols(); ++c) {
                std::vector<Rational> v(sys.cols(), 0);
                v[c] = 1;
                all.push_back(std::move(v));
            }
            return all;
        }
        return nullspace(std::move(sys));
    };

    const auto top = kernel(k);
    if (k == 0) return top.size();
    const auto lower = kernel(k - 1);

    const auto lower_basis = monomials_of_degree(m, k - 1);
    const auto upper_basis = monomials_of_degree(m, k);
    std::map<std::uint64_t, std::size_t> upper_index;
    for (std::size_t i = 0; i < upper_basis.size(); ++i) upper_index[upper_basis[i].key()] = i;
    const std::size_t lw = lower_basis.size();
    const std::size_t uw = upper_basis.size();

    std::vector<std::vector<Rational>> generated;
    for (const auto& vec : lower)
        for (int var = 0; var < m; ++var) {
            std::vector<Rational> out(g.vertex_count() * uw, 0);
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                for (std::size_t idx = 0; idx < lw; ++idx) {
                    const Rational& c = vec[v * lw + idx];
                    if (c == 0) continue;
                    const Monomial shifted = lower_basis[idx] * Monomial::variable(var);
                    out[v * uw + upper_index.at(shifted.key())] += c;
                }
            generated.push_back(std::move(out));
        }
    const std::size_t image_rank =
        generated.empty() ? 0 : rank(RationalMatrix::from_rows(generated, g.vertex_count() * uw));
    return top.size() - image_rank;
}

GradedMultiplicity gkm_dot_multiplicities(const GkmCohomology& coh) {
    const int n = coh.graph().n();
    const auto classes = partitions_of(n);
    GradedMultiplicity out;
    out.n = n;
    out.l = coh.dimension();
    for (const Partition& lambda : classes) out.table.emplace(lambda, std::vector<std::int64_t>(out.l + 1, 0));
    for (int k = 0; k <= out.l; ++k) {
        std::vector<Rational> traces;
        for (const Partition& mu : classes) {
            const RationalMatrix a = coh.action_matrix(representative(mu), k);
            Rational tr = 0;
            for (std::size_t i = 0; i < a.rows(); ++i) tr += a(i, i);
            traces.push_back(tr);
        }
        for (const Partition& lambda : classes) {
            Rational sum = 0;
            for (std::size_t c = 0; c < classes.size(); ++c)
                sum += Rational(factorial(n) / centralizer_order(classes[c])) *
                       Rational(character_value(lambda, classes[c])) * traces[c];
            sum /= Rational(factorial(n));
            if (sum.get_den() != 1 || sum < 0)
                throw ConsistencyError("GKM dot-action character does not decompose");
            out.table[lambda][k] = sum.get_num().get_si();
        }
    }
    return out;
}

namespace {

Permutation simple_transposition(int n, int j) {
    Permutation s(n);
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[j - 1], s[j]);
    return s;
}

std::vector<EquivClass> kahler_powers(const GkmCohomology& coh, const std::vector<long>& lambda, int up_to) {
    const EquivClass omega = kahler_class(coh.graph(), lambda);
    std::vector<EquivClass> powers{unit_class(coh.graph())};
    for (int i = 1; i <= up_to; ++i) powers.push_back(powers.back() * omega);
    return powers;
}

}  // namespace

std::vector<std::vector<Rational>> invariant_subring(const GkmCohomology& coh,
                                                     const std::vector<int>& J, int k) {
    const std::size_t dim = coh.betti(k);
    if (J.empty() || dim == 0) {
        std::vector<std::vector<Rational>> basis;
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<Rational> e(dim, 0);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    const int n = coh.graph().n();
    RationalMatrix stacked(J.size() * dim, dim);
    for (std::size_t s = 0; s < J.size(); ++s) {
        const RationalMatrix a = coh.action_matrix(simple_transposition(n, J[s]), k);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) stacked(s * dim + r, c) = a(r, c) - (r == c ? 1 : 0);
    }
    return nullspace(std::move(stacked));
}

RationalMatrix poincare_pairing(const GkmCohomology& coh, const std::vector<int>& J, int degree) {
    const int l = coh.dimension();
    if (degree < 0 || degree > 2 * l || degree % 2 != 0)
        throw std::invalid_argument("poincare_pairing: degree must be even in [0, 2l]");
    const int d = degree / 2;
    const auto left = invariant_subring(coh, J, d);
    const auto right = invariant_subring(coh, J, l - d);
    RationalMatrix out(left.size(), right.size());
    std::vector<EquivClass> right_lifts;
    for (const auto& v : right) right_lifts.push_back(coh.lift(l - d, v));
    for (std::size_t i = 0; i < left.size(); ++i) {
        const EquivClass a = coh.lift(d, left[i]);
        for (std::size_t j = 0; j < right.size(); ++j)
            out(i, j) = integrate_number(coh.graph(), a * right_lifts[j]);
    }
    return out;
}

PackageVerdict poincare_duality_check(const GkmCohomology& coh, const std::vector<int>& J) {
    PackageVerdict verdict;
    const int l = coh.dimension();
    for (int d = 0; d <= l; ++d) {
        const RationalMatrix pairing = poincare_pairing(coh, J, 2 * d);
        DegreeVerdict dv;
        dv.degree = 2 * d;
        dv.dimension = pairing.rows();
        dv.rank = rank(pairing);
        if (pairing.rows() == pairing.cols()) {
            const Rational det = determinant(pairing);
            dv.determinant = to_string(det);
            dv.holds = det != 0;
        } else {
            dv.determinant = "non-square";
            dv.holds = false;
        }
        if (!dv.holds && verdict.holds)
            verdict.witness = "degenerate pairing in degree " + std::to_string(2 * d);
        verdict.holds = verdict.holds && dv.holds;
        verdict.degrees.push_back(dv);
    }
    return verdict;
}

PackageVerdict hard_lefschetz_check(const GkmCohomology& coh, const std::vector<int>& J,
                                    const std::vector<long>& lambda) {
    PackageVerdict verdict;
    const int l = coh.dimension();
    const auto powers = kahler_powers(coh, lambda, l);
    for (int d = 0; 2 * d <= l; ++d) {
        const auto domain = invariant_subring(coh, J, d);
        std::vector<std::vector<Rational>> images;
        for (const auto& v : domain) images.push_back(coh.project(powers[l - 2 * d] * coh.lift(d, v)));
        DegreeVerdict dv;
        dv.degree = 2 * d;
        dv.dimension = domain.size();
        dv.rank = images.empty() ? 0 : rank(RationalMatrix::from_rows(images, coh.betti(l - d)));
        dv.holds = dv.rank == dv.dimension;
        if (!dv.holds && verdict.holds)
            verdict.witness = "omega^" + std::to_string(l - 2 * d) + " on degree " +
                              std::to_string(2 * d) + " has rank " + std::to_string(dv.rank) +
                              " < " + std::to_string(dv.dimension);
        verdict.holds = verdict.holds && dv.holds;
        verdict.degrees.push_back(dv);
    }
    return verdict;
}

PackageVerdict hodge_riemann_check(const GkmCohomology& coh, const std::vector<int>& J,
                                   const std::vector<long>& lambda) {
    PackageVerdict verdict;
    const int l = coh.dimension();
    const auto powers = kahler_powers(coh, lambda, l + 1);
    for (int d = 0; 2 * d <= l; ++d) {
        const auto domain = invariant_subring(coh, J, d);
        std::vector<EquivClass> lifts;
        for (const auto& v : domain) lifts.push_back(coh.lift(d, v));

        // primitive part: kernel of omega^{l-2d+1} into H^{2(l-d+1)}
        std::vector<std::vector<Rational>> primitive;
        const int target = l - d + 1;
        const std::size_t target_dim = target > l ? 0 : coh.betti(target);
        if (target_dim == 0 || domain.empty()) {
            for (std::size_t i = 0; i < domain.size(); ++i) {
                std::vector<Rational> e(domain.size(), 0);
                e[i] = 1;
                primitive.push_back(std::move(e));
            }
        } else {
            RationalMatrix images(target_dim, domain.size());
            for (std::size_t i = 0; i < lifts.size(); ++i) {
                const auto image = coh.project(powers[l - 2 * d + 1] * lifts[i]);
                for (std::size_t r = 0; r < target_dim; ++r) images(r, i) = image[r];
            }
            primitive = nullspace(std::move(images));
        }

        std::vector<EquivClass> primitive_lifts;
        for (const auto& coeffs : primitive) {
            EquivClass c = zero_class(coh.graph(), d);
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                if (coeffs[i] != 0) c += lifts[i] * coeffs[i];
            primitive_lifts.push_back(std::move(c));
        }
        const Rational sign = (d % 2 == 0) ? 1 : -1;
        RationalMatrix gram(primitive_lifts.size(), primitive_lifts.size());
        for (std::size_t i = 0; i < primitive_lifts.size(); ++i) {
            const EquivClass weighted = primitive_lifts[i] * powers[l - 2 * d];
            for (std::size_t j = i; j < primitive_lifts.size(); ++j) {
                const Rational value = integrate_number(coh.graph(), weighted * primitive_lifts[j]);
                gram(i, j) = value;
                gram(j, i) = value;
            }
        }
        DegreeVerdict dv;
        dv.degree = 2 * d;
        dv.dimension = domain.size();
        dv.rank = primitive_lifts.size();
        dv.signature = inertia(gram);
        RationalMatrix signed_gram = gram;
        for (std::size_t i = 0; i < gram.rows(); ++i)
            for (std::size_t j = 0; j < gram.cols(); ++j) signed_gram(i, j) *= sign;
        dv.holds = positive_definite(signed_gram);
        if (!dv.holds && verdict.holds) {
            const auto pivots = ldl_pivots(signed_gram);
            std::string list;
            for (const auto& p : pivots) list += (list.empty() ? "" : ",") + to_string(p);
            verdict.witness = "Hodge-Riemann form not positive definite in degree " +
                              std::to_string(2 * d) + ", pivots [" + list + "]";
        }
        verdict.holds = verdict.holds && dv.holds;
        verdict.degrees.push_back(dv);
    }
    return verdict;
}

std::vector<long> default_kahler_weight(int n) {
    std::vector<long> lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = n - 1 - i;
    return lambda;
}

}  // namespace hesslab
