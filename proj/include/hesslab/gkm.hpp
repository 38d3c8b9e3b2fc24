#pragma once

#include "hesslab/dotchar.hpp"
#include "hesslab/hessenberg.hpp"
#include "hesslab/linalg.hpp"
#include "hesslab/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hesslab {

/// One-line notation, 0-based: w[i] = w(i+1) - 1.
using Permutation = std::vector<int>;

Permutation compose(const Permutation& a, const Permutation& b);  // a o b
Permutation inverse(const Permutation& w);
/// A permutation of cycle type mu built from consecutive cycles.
Permutation representative(const Partition& mu);

struct GkmEdge {
    std::size_t target = 0;
    /// Defining positive root t_i - t_j (0-based, i < j) whose negative lies in H.
    int i = 0;
    int j = 0;
    /// w(beta) = t_{w(i)} - t_{w(j)}; also the tangent weight used for localization.
    Poly label;
};

/// Moment graph of Hess(s,H): vertices are permutations, w -- w s_beta for
/// positive roots beta = t_i - t_j with j <= h(i). Polynomials live in the
/// n-1 coordinates t_1..t_{n-1}; t_n = -(t_1 + ... + t_{n-1}).
class GkmGraph {
public:
    /// Throws ConsistencyError if some vertex degree differs from dim(h).
    explicit GkmGraph(const HessenbergFunction& h);

    const HessenbergFunction& hessenberg() const noexcept { return h_; }
    int n() const noexcept { return h_.n(); }
    int dimension() const noexcept { return l_; }
    int vars() const noexcept { return n() - 1; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const Permutation& vertex(std::size_t v) const { return vertices_.at(v); }
    std::size_t index_of(const Permutation& w) const;
    const std::vector<GkmEdge>& edges_at(std::size_t v) const { return edges_.at(v); }
    std::size_t edge_count() const;
    std::size_t component_of(std::size_t v) const { return component_.at(v); }
    std::size_t component_count() const noexcept { return components_; }

    /// Linear form t_{i+1}.
    const Poly& t(int i) const { return coordinates_.at(i); }
    /// Sum of lambda_i t_{w(i)}.
    Poly permuted_form(const Permutation& w, const std::vector<long>& lambda) const;
    /// p(t_1..t_n) -> p(t_{w(1)}..t_{w(n)}).
    Poly act(const Permutation& w, const Poly& p) const;

private:
    HessenbergFunction h_;
    int l_ = 0;
    std::vector<Permutation> vertices_;
    std::vector<std::vector<GkmEdge>> edges_;
    std::vector<Poly> coordinates_;
    std::vector<std::size_t> component_;
    std::size_t components_ = 0;
};

/// Tuple of polynomials indexed by vertices, homogeneous of `degree`.
struct EquivClass {
    int degree = 0;
    std::vector<Poly> values;

    EquivClass& operator+=(const EquivClass& other);
    EquivClass& operator-=(const EquivClass& other);
    friend EquivClass operator+(EquivClass a, const EquivClass& b) { return a += b; }
    friend EquivClass operator-(EquivClass a, const EquivClass& b) { return a -= b; }
    friend EquivClass operator*(const EquivClass& a, const EquivClass& b);
    friend EquivClass operator*(const Poly& p, const EquivClass& c);
    friend EquivClass operator*(EquivClass c, const Rational& r);
    friend bool operator==(const EquivClass&, const EquivClass&) = default;
};

EquivClass zero_class(const GkmGraph& g, int degree);
EquivClass unit_class(const GkmGraph& g);
bool satisfies_edge_conditions(const GkmGraph& g, const EquivClass& c);

/// Localization: sum_w c_w / prod(labels at w). Throws ConsistencyError when
/// the sum is not a polynomial.
Poly integrate(const GkmGraph& g, const EquivClass& c);
Rational integrate_number(const GkmGraph& g, const EquivClass& c);

/// f_w = w(lambda); lambda strictly decreasing.
EquivClass kahler_class(const GkmGraph& g, const std::vector<long>& lambda);

/// (w.f)_u = w(f_{w^{-1}u}). Throws ConsistencyError if the image leaves the ring.
EquivClass dot_action(const GkmGraph& g, const Permutation& w, const EquivClass& c);

/// Generic covector and the induced vertex order. down_degree[w] counts
/// edges whose tangent weight -w(beta) pairs negatively with xi.
struct MorseData {
    std::uint64_t seed = 0;
    std::vector<long> xi;
    std::vector<std::size_t> order;     // vertices by increasing height
    std::vector<std::size_t> position;  // inverse of order
    std::vector<int> down_degree;
    std::vector<std::int64_t> betti;    // b_{2k} = #{w : down_degree = k}
};

MorseData morse_data(const GkmGraph& g, std::uint64_t seed);

/// Equivariant and ordinary cohomology of Hess(s,H) through flow-up classes.
class GkmCohomology {
public:
    /// Builds the flow-up basis and checks the Morse Betti numbers against `expected_betti`
    /// when it is nonempty.
    GkmCohomology(const GkmGraph& g, std::uint64_t seed,
                  const std::vector<std::int64_t>& expected_betti = {});
    GkmCohomology(GkmGraph&&, std::uint64_t, const std::vector<std::int64_t>& = {}) = delete;

    const GkmGraph& graph() const noexcept { return *g_; }
    const MorseData& morse() const noexcept { return morse_; }
    int dimension() const noexcept { return g_->dimension(); }
    const EquivClass& flow_up(std::size_t v) const { return flow_ups_.at(v); }

    /// Basis of the degree-k part of the equivariant ring: monomial multiples
    /// of flow-up classes. Size equals the free-module count.
    std::vector<EquivClass> equivariant_piece(int k) const;
    /// sum_j b_{2j} * #(degree k-j monomials in n-1 variables)
    std::size_t free_module_dimension(int k) const;
    /// Kernel dimension of the degree-k edge system over F_p, an upper bound
    /// for the rational kernel.
    std::size_t edge_system_nullity_mod_p(int k) const;

    /// Vertices whose flow-up classes give the basis of H^{2k}.
    const std::vector<std::size_t>& ordinary_basis(int k) const;
    std::size_t betti(int k) const { return ordinary_basis(k).size(); }

    /// Coefficients q_w with c = sum_w q_w F_w (triangular division).
    std::vector<Poly> expand(const EquivClass& c) const;
    /// Image of c in H^{2 deg c}, coordinates over ordinary_basis(deg c).
    std::vector<Rational> project(const EquivClass& c) const;
    EquivClass lift(int k, const std::vector<Rational>& coordinates) const;

    /// Matrix of the dot action of w on H^{2k} (columns = images of basis vectors).
    RationalMatrix action_matrix(const Permutation& w, int k) const;

private:
    EquivClass build_flow_up(std::size_t w) const;

    const GkmGraph* g_;
    MorseData morse_;
    std::vector<EquivClass> flow_ups_;
    std::vector<std::vector<std::size_t>> ordinary_basis_;
    std::vector<std::vector<std::size_t>> down_edges_;
};

/// Ordinary dimension of H^{2k} computed directly as E_k / (t) E_{k-1} by
/// exact rational linear algebra on the full edge system. Slow; small n only.
std::size_t ordinary_dimension_by_quotient(const GkmGraph& g, int k);

/// Dot-action character of H^* computed on the GKM side, decoded into irreps.
GradedMultiplicity gkm_dot_multiplicities(const GkmCohomology& coh);

/// Basis (in ordinary coordinates) of the W_J-invariants of H^{2k}.
std::vector<std::vector<Rational>> invariant_subring(const GkmCohomology& coh,
                                                     const std::vector<int>& J, int k);

/// Pairing matrix on H^{degree} x H^{2l - degree} (honest degrees, `degree` even),
/// restricted to W_J-invariants.
RationalMatrix poincare_pairing(const GkmCohomology& coh, const std::vector<int>& J, int degree);

struct DegreeVerdict {
    int degree = 0;              // honest cohomological degree
    std::size_t dimension = 0;   // invariant dimension in this degree
    std::size_t rank = 0;        // pairing rank (PD) or Lefschetz rank (HL) or primitive dim (HR)
    std::string determinant;     // pairing determinant (PD), "p/q"
    Inertia signature;           // HR form on the primitive part, before the sign
    bool holds = true;
};

struct PackageVerdict {
    bool holds = true;
    std::vector<DegreeVerdict> degrees;
    std::string witness;
};

PackageVerdict poincare_duality_check(const GkmCohomology& coh, const std::vector<int>& J);
PackageVerdict hard_lefschetz_check(const GkmCohomology& coh, const std::vector<int>& J,
                                    const std::vector<long>& lambda);
/// Form (-1)^{k/2} int(a b w^{l-k}) on ker(w^{l-k+1}) in honest degree k.
PackageVerdict hodge_riemann_check(const GkmCohomology& coh, const std::vector<int>& J,
                                   const std::vector<long>& lambda);

/// (n-1, n-2, ..., 0)
std::vector<long> default_kahler_weight(int n);

}  // namespace hesslab
