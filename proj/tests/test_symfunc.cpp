#include "hesslab/dotchar.hpp"
#include "hesslab/symfunc.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hesslab;

namespace {

QSymPoly single(SymBasis basis, const Partition& p, QPoly c = 1) {
    QSymPoly f(basis, p.size());
    f.add(p, c);
    return f;
}

QSymPoly h_n(int n) {
    QSymPoly f(SymBasis::monomial, n);
    for (const auto& p : partitions_of(n)) f.add(p, 1);
    return f;
}

}  // namespace

TEST_CASE("q-integers") {
    CHECK(q_integer(3) == QPoly(1) + QPoly::monomial(1) + QPoly::monomial(2));
    const auto f3 = q_factorial(3);
    CHECK(f3.dense(4) == std::vector<mpz_class>{1, 2, 2, 1});
    CHECK(q_factorial(4).at_one() == 24);
    CHECK(q_factorial(5).dense(11)[5] == 22);
    QPoly a = QPoly::monomial(2, 3);
    a -= QPoly::monomial(2, 3);
    CHECK(a.is_zero());
    CHECK(a.degree() == -1);
}

TEST_CASE("h_dual_coefficient") {
    CHECK(h_dual_coefficient(single(SymBasis::monomial, Partition({1, 1, 1})), Partition({1, 1, 1})) == QPoly(1));
    CHECK(h_dual_coefficient(single(SymBasis::monomial, Partition({2, 1})), Partition({3})).is_zero());
    const auto path = specialize_q1(chromatic_qsym(HessenbergFunction({2, 3, 3})));
    // 3 distinct colors on a 3-path: all 3! injective colorings are proper
    CHECK(h_dual_coefficient(path, Partition({1, 1, 1})) == QPoly(6));
    CHECK_THROWS(h_dual_coefficient(single(SymBasis::powersum, Partition({2})), Partition({2})));
}

TEST_CASE("schur_inner_product") {
    for (int n = 1; n <= 6; ++n) {
        const auto p1n = monomial_from_powersum(single(SymBasis::powersum, Partition(std::vector<int>(n, 1))));
        const auto hn = h_n(n);
        for (const auto& mu : partitions_of(n)) {
            CHECK(schur_inner_product(p1n, mu) == QPoly(dimension_of(mu)));
            CHECK(schur_inner_product(hn, mu) == QPoly(mu == Partition({n}) ? 1 : 0));
        }
    }
    const auto path = specialize_q1(chromatic_qsym(HessenbergFunction({2, 3, 3})));
    CHECK(schur_inner_product(path, Partition({1, 1, 1})) == QPoly(4));
    CHECK(schur_inner_product(path, Partition({2, 1})) == QPoly(1));
    CHECK(schur_inner_product(path, Partition({3})).is_zero());
}

TEST_CASE("schur_inner_product agrees with Kostka inversion") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& h : enumerate_hessenberg(n, false)) {
            const auto csf = chromatic_qsym(h);
            const auto expected = oracle::schur_by_kostka(csf);
            for (const auto& mu : partitions_of(n)) CHECK(schur_inner_product(csf, mu) == expected.at(mu));
        }
}

TEST_CASE("powersum_csf_q1 examples") {
    CHECK(powersum_csf_q1({}, 4) == single(SymBasis::powersum, Partition({1, 1, 1, 1})));
    QSymPoly edge(SymBasis::powersum, 2);
    edge.add(Partition({1, 1}), 1);
    edge.add(Partition({2}), -1);
    CHECK(powersum_csf_q1({{1, 2}}, 2) == edge);
    QSymPoly path(SymBasis::powersum, 3);
    path.add(Partition({1, 1, 1}), 1);
    path.add(Partition({2, 1}), -2);
    path.add(Partition({3}), 1);
    CHECK(powersum_csf_q1({{1, 2}, {2, 3}}, 3) == path);
}

TEST_CASE("powersum_csf_q1 matches the literal edge-subset sum") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& h : enumerate_hessenberg(n, false)) {
            const auto edges = incomparability_graph(h);
            CHECK(powersum_csf_q1(edges, n) == oracle::edge_subset_powersum(edges, n));
        }
    // a non-interval graph: the 4-cycle
    const std::vector<Edge> square{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
    CHECK(powersum_csf_q1(square, 4) == oracle::edge_subset_powersum(square, 4));
}

TEST_CASE("monomial_from_powersum") {
    const auto m = monomial_from_powersum(single(SymBasis::powersum, Partition({2, 1})));
    // p_2 p_1 = m_3 + m_21
    CHECK(m.coefficient(Partition({3})) == QPoly(1));
    CHECK(m.coefficient(Partition({2, 1})) == QPoly(1));
    CHECK(m.coefficient(Partition({1, 1, 1})).is_zero());
    const auto p111 = monomial_from_powersum(single(SymBasis::powersum, Partition({1, 1, 1})));
    CHECK(p111.coefficient(Partition({1, 1, 1})) == QPoly(6));
    CHECK(p111.coefficient(Partition({2, 1})) == QPoly(3));
    CHECK(p111.coefficient(Partition({3})) == QPoly(1));
}

TEST_CASE("Schur multiplicities are nonnegative and weigh up to n! at q = 1") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& h : enumerate_hessenberg(n, false)) {
            const auto csf = chromatic_qsym(h);
            mpz_class total = 0;
            for (const auto& mu : partitions_of(n)) {
                const auto s = schur_inner_product(csf, conjugate(mu));
                CHECK(s.nonnegative());
                total += s.at_one() * dimension_of(mu);
            }
            // total equals the m_{1^n} coefficient at q = 1: the number of injective colorings
            CHECK(total == factorial(n));
            CHECK(csf.coefficient(Partition(std::vector<int>(n, 1))).at_one() == factorial(n));
        }
}
