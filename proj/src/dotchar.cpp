#include "hesslab/dotchar.hpp"

#include "hesslab/error.hpp"

#include <future>
#include <numeric>

namespace hesslab {

std::int64_t GradedMultiplicity::total(const Partition& lambda) const {
    const auto& r = row(lambda);
    return std::accumulate(r.begin(), r.end(), std::int64_t{0});
}

namespace {

struct ColoringWalk {
    int n;
    std::vector<std::vector<int>> earlier_neighbours;  // 0-based
    std::vector<int> colour;
    std::vector<int> remaining;
    std::vector<std::int64_t> ascents;  // histogram by ascent count

    void run(int vertex, int asc) {
        if (vertex == n) {
            ++ascents[asc];
            return;
        }
        for (int c = 0; c < static_cast<int>(remaining.size()); ++c) {
            if (remaining[c] == 0) continue;
            int added = 0;
            bool proper = true;
            for (int u : earlier_neighbours[vertex]) {
                if (colour[u] == c) {
                    proper = false;
                    break;
                }
                if (colour[u] < c) ++added;
            }
            if (!proper) continue;
            --remaining[c];
            colour[vertex] = c;
            run(vertex + 1, asc + added);
            ++remaining[c];
        }
    }
};

// Coefficient of m_mu: by symmetry of X_G this equals the coefficient of the
// single monomial x_1^{mu_1} x_2^{mu_2} ..., so only colorings with exactly
// that content are walked.
QPoly monomial_coefficient(const std::vector<std::vector<int>>& earlier, int n, int edges,
                           const Partition& mu, int first_colour) {
    ColoringWalk walk{n, earlier, std::vector<int>(n, -1), mu.parts(),
                      std::vector<std::int64_t>(edges + 1, 0)};
    if (first_colour >= 0) {
        if (walk.remaining[first_colour] == 0) return QPoly();
        --walk.remaining[first_colour];
        walk.colour[0] = first_colour;
        walk.run(1, 0);
    } else {
        walk.run(0, 0);
    }
    QPoly out;
    for (int k = 0; k <= edges; ++k) out.add_term(k, mpz_class(static_cast<long>(walk.ascents[k])));
    return out;
}

}  // namespace

QSymPoly chromatic_qsym(const HessenbergFunction& h, const CsfOptions& options) {
    const int n = h.n();
    if (n > 8 && !options.force)
        throw BoundedInputError("chromatic_qsym: n > 8 exceeds the cost guard (use force)");
    const auto edges = incomparability_graph(h);
    std::vector<std::vector<int>> earlier(n);
    for (auto [a, b] : edges) earlier[b - 1].push_back(a - 1);
    const int edge_count = static_cast<int>(edges.size());

    QSymPoly result(SymBasis::monomial, n);
    const auto mus = partitions_of(n);
    if (options.jobs <= 1) {
        for (const Partition& mu : mus)
            result.add(mu, monomial_coefficient(earlier, n, edge_count, mu, -1));
        return result;
    }
    // shard by (mu, colour of vertex 1); partial sums merge by addition
    struct Task {
        Partition mu;
        int first;
    };
    std::vector<Task> tasks;
    for (const Partition& mu : mus)
        for (int c = 0; c < mu.length(); ++c) tasks.push_back({mu, c});
    std::vector<QPoly> partial(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            partial[i] = monomial_coefficient(earlier, n, edge_count, tasks[i].mu, tasks[i].first);
    };
    std::vector<std::future<void>> pool;
    for (unsigned j = 0; j < options.jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
    for (std::size_t i = 0; i < tasks.size(); ++i) result.add(tasks[i].mu, partial[i]);
    return result;
}

GradedMultiplicity decode_multiplicities(const QSymPoly& csf, int l) {
    GradedMultiplicity out;
    out.n = csf.degree();
    out.l = l;
    for (const Partition& lambda : partitions_of(out.n)) {
        const QPoly pairing = schur_inner_product(csf, conjugate(lambda));
        if (pairing.degree() > l)
            throw ConsistencyError("dot-action character has degree above the dimension");
        std::vector<std::int64_t> row(l + 1, 0);
        for (const auto& [k, c] : pairing.terms()) {
            if (c < 0 || !c.fits_slong_p())
                throw ConsistencyError("negative or oversized Schur multiplicity for " +
                                       lambda.to_string());
            row[k] = c.get_si();
        }
        out.table.emplace(lambda, std::move(row));
    }
    return out;
}

GradedMultiplicity dot_action_multiplicities(const HessenbergFunction& h,
                                             const CsfOptions& options) {
    return decode_multiplicities(chromatic_qsym(h, options), dimension(h));
}

std::vector<std::int64_t> betti_rs(const GradedMultiplicity& mult) {
    std::vector<std::int64_t> b(mult.l + 1, 0);
    for (const auto& [lambda, row] : mult.table) {
        const std::int64_t f = dimension_of(lambda);
        for (int k = 0; k <= mult.l; ++k) b[k] += row[k] * f;
    }
    return b;
}

std::vector<std::int64_t> betti_rs(const HessenbergFunction& h) {
    return betti_rs(dot_action_multiplicities(h));
}

std::vector<std::int64_t> regular_betti(const GradedMultiplicity& mult, const std::vector<int>& J) {
    std::vector<std::int64_t> b(mult.l + 1, 0);
    for (const auto& [lambda, row] : mult.table) {
        if (std::all_of(row.begin(), row.end(), [](std::int64_t v) { return v == 0; })) continue;
        const std::int64_t d = invariant_dim(lambda, J);
        for (int k = 0; k <= mult.l; ++k) b[k] += row[k] * d;
    }
    return b;
}

std::vector<std::int64_t> regular_betti(const HessenbergFunction& h, const std::vector<int>& J) {
    return regular_betti(dot_action_multiplicities(h), J);
}

bool is_palindromic(const std::vector<std::int64_t>& v) {
    return std::equal(v.begin(), v.end(), v.rbegin());
}

std::vector<std::vector<int>> all_subsets_J(int n) {
    std::vector<std::vector<int>> out;
    const int m = std::max(n - 1, 0);
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> J;
        for (int j = 0; j < m; ++j)
            if (mask >> j & 1u) J.push_back(j + 1);
        out.push_back(std::move(J));
    }
    return out;
}

}  // namespace hesslab
