#include "hesslab/dotchar.hpp"
#include "hesslab/error.hpp"
#include "hesslab/gkm.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hesslab;

namespace {

using Row = std::vector<std::int64_t>;

const std::uint64_t kSeed = 20190101;

}  // namespace

TEST_CASE("permutations") {
    const Permutation w{1, 2, 0};
    CHECK(compose(w, inverse(w)) == Permutation{0, 1, 2});
    CHECK(compose(w, w) == inverse(w));
    CHECK(oracle::cycle_type(representative(Partition({3, 1}))) == Partition({3, 1}));
    CHECK(oracle::cycle_type(representative(Partition({2, 2, 1}))) == Partition({2, 2, 1}));
}

TEST_CASE("graph construction") {
    const GkmGraph points(HessenbergFunction({1, 2, 3}));
    CHECK(points.vertex_count() == 6);
    CHECK(points.edge_count() == 0);
    CHECK(points.component_count() == 6);

    const GkmGraph hex(HessenbergFunction({2, 3, 3}));
    CHECK(hex.edge_count() == 6);
    CHECK(hex.component_count() == 1);
    for (std::size_t v = 0; v < 6; ++v) CHECK(hex.edges_at(v).size() == 2);

    const GkmGraph flag(HessenbergFunction({3, 3, 3}));
    CHECK(flag.edge_count() == 9);
    for (std::size_t v = 0; v < 6; ++v) {
        for (const auto& e : flag.edges_at(v)) {
            Permutation t = flag.vertex(v);
            std::swap(t[e.i], t[e.j]);
            CHECK(flag.vertex(e.target) == t);
        }
        CHECK(flag.index_of(flag.vertex(v)) == v);
    }
    CHECK(GkmGraph(HessenbergFunction({2, 3, 3, 4})).component_count() == 4);
    CHECK_THROWS_AS(GkmGraph(HessenbergFunction(std::vector<int>(6, 6))), BoundedInputError);

    // t_1 + ... + t_n = 0
    Poly s(flag.vars());
    for (int i = 0; i < 3; ++i) s += flag.t(i);
    CHECK(s.is_zero());
}

TEST_CASE("Morse counts match the character for n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& h : enumerate_hessenberg(n, false)) {
            const GkmGraph g(h);
            const auto md = morse_data(g, kSeed);
            CHECK(md.betti == betti_rs(h));
            CHECK(morse_data(g, kSeed + 99).betti == md.betti);
        }
}

TEST_CASE("kahler class") {
    const GkmGraph g(HessenbergFunction({2, 3, 3}));
    const auto omega = kahler_class(g, {1, 0, -1});
    CHECK(omega.values[g.index_of({0, 1, 2})] == g.t(0) - g.t(2));
    CHECK(omega.values[g.index_of({1, 2, 0})] == g.t(1) - g.t(0));
    CHECK(satisfies_edge_conditions(g, omega));
    CHECK_THROWS(kahler_class(g, {1, 1, 0}));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(dot_action(g, g.vertex(v), omega) == omega);
}

TEST_CASE("equivariant pieces are free modules") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& h : enumerate_hessenberg(n, false)) {
            const GkmGraph g(h);
            const GkmCohomology coh(g, kSeed, betti_rs(h));
            const int l = coh.dimension();
            for (int k = 0; k <= 2 * l; ++k) {
                const std::size_t free = coh.free_module_dimension(k);
                CHECK(coh.edge_system_nullity_mod_p(k) == free);
                const auto piece = coh.equivariant_piece(k);
                CHECK(piece.size() == free);
                for (const auto& c : piece) CHECK(satisfies_edge_conditions(g, c));
            }
        }
    const GkmGraph hex_graph(HessenbergFunction({2, 3, 3}));
    const GkmCohomology hex(hex_graph, kSeed);
    CHECK(hex.free_module_dimension(1) == 6);
    const GkmGraph point_graph(HessenbergFunction({1, 2, 3}));
    const GkmCohomology points(point_graph, kSeed);
    CHECK(points.free_module_dimension(1) == 12);
}

TEST_CASE("ordinary pieces match the quotient computation") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& h : enumerate_hessenberg(n, false)) {
            const GkmGraph g(h);
            const GkmCohomology coh(g, kSeed);
            for (int k = 0; k <= coh.dimension() + 1; ++k)
                CHECK(ordinary_dimension_by_quotient(g, k) == coh.betti(k));
        }
    const GkmGraph g(HessenbergFunction({2, 3, 4, 4}));
    const GkmCohomology coh(g, kSeed);
    for (int k = 0; k <= 2; ++k) CHECK(ordinary_dimension_by_quotient(g, k) == coh.betti(k));
}

TEST_CASE("projection is a left inverse of lift") {
    const GkmGraph g(HessenbergFunction({3, 3, 4, 4}));
    const GkmCohomology coh(g, kSeed);
    std::mt19937_64 rng(3);
    for (int k = 0; k <= coh.dimension(); ++k) {
        std::vector<Rational> coords;
        for (std::size_t i = 0; i < coh.betti(k); ++i) coords.emplace_back(static_cast<long>(rng() % 7) - 3);
        CHECK(coh.project(coh.lift(k, coords)) == coords);
        // multiples of t vanish in ordinary cohomology
        if (k > 0 && coh.betti(k - 1) > 0) {
            std::vector<Rational> lower(coh.betti(k - 1), 1);
            const EquivClass c = Poly::variable(g.vars(), 0) * coh.lift(k - 1, lower);
            for (const auto& x : coh.project(c)) CHECK(x == 0);
        }
    }
}

TEST_CASE("integration") {
    const GkmGraph hex(HessenbergFunction({2, 3, 3}));
    CHECK(integrate(hex, unit_class(hex)).is_zero());
    const auto omega = kahler_class(hex, {2, 0, -2});
    const Rational top = integrate_number(hex, omega * omega);
    CHECK(top > 0);
    CHECK(integrate_number(hex, kahler_class(hex, {1, 0, -1}) * kahler_class(hex, {1, 0, -1})) * 4 == top);

    // P^1: the flow-up class of the top vertex integrates to +-1
    const GkmGraph line(HessenbergFunction({2, 2}));
    const GkmCohomology coh(line, kSeed);
    const auto& top_basis = coh.ordinary_basis(1);
    REQUIRE(top_basis.size() == 1);
    const Rational point = integrate_number(line, coh.flow_up(top_basis[0]));
    CHECK(abs(point) == 1);

    // a tuple that is not a class does not integrate to a polynomial
    EquivClass bogus = unit_class(hex);
    bogus.values[0] = Poly::constant(hex.vars(), 2);
    CHECK_THROWS_AS(integrate(hex, bogus), ConsistencyError);

    const GkmGraph points(HessenbergFunction({1, 2, 3}));
    const GkmCohomology pc(points, kSeed);
    const auto pairing = poincare_pairing(pc, {}, 0);
    CHECK(pairing.rows() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK((pairing(i, j) != 0) == (i == j));
}

TEST_CASE("dot action on the hexagon") {
    const GkmGraph g(HessenbergFunction({2, 3, 3}));
    const GkmCohomology coh(g, kSeed);
    const auto one = unit_class(g);
    CHECK(dot_action(g, {0, 1, 2}, coh.flow_up(3)) == coh.flow_up(3));
    CHECK(dot_action(g, {2, 0, 1}, one) == one);
    // degree 1: triv^2 + std, traces 4, 2, 1 on classes (111), (21), (3)
    CHECK(coh.betti(1) == 4);
    const auto trace = [&](const Partition& mu) {
        const auto a = coh.action_matrix(representative(mu), 1);
        Rational t = 0;
        for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
        return t;
    };
    CHECK(trace(Partition({1, 1, 1})) == 4);
    CHECK(trace(Partition({2, 1})) == 2);
    CHECK(trace(Partition({3})) == 1);
}

TEST_CASE("GKM dot-action character equals the CSF decoding for n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& h : enumerate_hessenberg(n, false)) {
            const GkmGraph g(h);
            const GkmCohomology coh(g, kSeed);
            CHECK(gkm_dot_multiplicities(coh) == dot_action_multiplicities(h));
        }
}

TEST_CASE("invariant subrings") {
    const GkmGraph hex_graph(HessenbergFunction({2, 3, 3}));
    const GkmCohomology hex(hex_graph, kSeed);
    const auto dims = [](const GkmCohomology& coh, const std::vector<int>& J) {
        Row out;
        for (int k = 0; k <= coh.dimension(); ++k) out.push_back(invariant_subring(coh, J, k).size());
        return out;
    };
    CHECK(dims(hex, {}) == Row{1, 4, 1});
    CHECK(dims(hex, {1, 2}) == Row{1, 2, 1});
    const GkmGraph flag_graph(HessenbergFunction({3, 3, 3}));
    const GkmCohomology flag(flag_graph, kSeed);
    CHECK(dims(flag, {1, 2}) == Row{1, 2, 2, 1});
    for (const auto& h : enumerate_hessenberg(4, false)) {
        const GkmGraph g(h);
        const GkmCohomology coh(g, kSeed);
        for (const auto& J : all_subsets_J(4)) CHECK(dims(coh, J) == regular_betti(h, J));
    }
}

TEST_CASE("Kahler package on small cases") {
    const GkmGraph hex_graph(HessenbergFunction({2, 3, 3}));
    const GkmCohomology hex(hex_graph, kSeed);
    const auto lambda = std::vector<long>{1, 0, -1};
    const auto pd = poincare_duality_check(hex, {});
    CHECK(pd.holds);
    const auto middle = poincare_pairing(hex, {}, 2);
    CHECK(middle.rows() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(middle(i, j) == middle(j, i));
    CHECK(inertia(middle).positive == 1);
    CHECK(inertia(middle).negative == 3);
    CHECK(hard_lefschetz_check(hex, {}, lambda).holds);
    const auto hr = hodge_riemann_check(hex, {}, lambda);
    CHECK(hr.holds);
    REQUIRE(hr.degrees.size() == 2);
    CHECK(hr.degrees[1].rank == 3);
    CHECK(hr.degrees[1].signature.negative == 3);

    CHECK(hard_lefschetz_check(hex, {1, 2}, lambda).holds);
    const GkmGraph flag_graph(HessenbergFunction({3, 3, 3}));
    const GkmCohomology flag(flag_graph, kSeed);
    CHECK(hodge_riemann_check(flag, {}, default_kahler_weight(3)).holds);
    const GkmGraph point_graph(HessenbergFunction({1, 2, 3}));
    const GkmCohomology points(point_graph, kSeed);
    CHECK(hard_lefschetz_check(points, {1}, default_kahler_weight(3)).holds);
    CHECK(default_kahler_weight(4) == std::vector<long>{3, 2, 1, 0});
}

TEST_CASE("integration does not depend on the lift") {
    std::mt19937_64 rng(11);
    for (const auto& h : {HessenbergFunction({2, 3, 3}), HessenbergFunction({2, 3, 4, 4})}) {
        const GkmGraph g(h);
        const GkmCohomology coh(g, kSeed);
        const int l = coh.dimension();
        for (int trial = 0; trial < 10; ++trial) {
            const int d = static_cast<int>(rng() % (l + 1));
            std::vector<Rational> a(coh.betti(d)), b(coh.betti(l - d));
            for (auto& x : a) x = static_cast<long>(rng() % 5) - 2;
            for (auto& x : b) x = static_cast<long>(rng() % 5) - 2;
            const Rational base = integrate_number(g, coh.lift(d, a) * coh.lift(l - d, b));
            const auto pa = oracle::perturbed_lift(coh, d, a, rng);
            const auto pb = oracle::perturbed_lift(coh, l - d, b, rng);
            CHECK(integrate_number(g, pa * pb) == base);
        }
    }
}
