#pragma once

#include "hesslab/hessenberg.hpp"
#include "hesslab/partitions.hpp"
#include "hesslab/symfunc.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace hesslab {

/// Multiplicity of each S_n irrep in H^{2k}(Hess(s,H)), k = 0..l, under the
/// dot action. Every partition of n has a row (zero rows included).
struct GradedMultiplicity {
    int n = 0;
    int l = 0;
    std::map<Partition, std::vector<std::int64_t>, RevLex> table;

    const std::vector<std::int64_t>& row(const Partition& lambda) const { return table.at(lambda); }
    std::int64_t total(const Partition& lambda) const;

    friend bool operator==(const GradedMultiplicity&, const GradedMultiplicity&) = default;
};

struct CsfOptions {
    /// Lifts the n <= 8 cost guard.
    bool force = false;
    /// Worker threads for the coloring loop; 0 or 1 runs inline.
    unsigned jobs = 1;
};

/// Shareshian-Wachs chromatic quasisymmetric function of the incomparability
/// graph, monomial basis. A proper coloring kappa contributes q^asc(kappa),
/// asc = #{edges {i<j} : kappa(i) < kappa(j)}.
QSymPoly chromatic_qsym(const HessenbergFunction& h, const CsfOptions& options = {});

/// mult[lambda][k] = [q^k] <X_G, s_{lambda'}>.
GradedMultiplicity dot_action_multiplicities(const HessenbergFunction& h,
                                             const CsfOptions& options = {});
GradedMultiplicity decode_multiplicities(const QSymPoly& csf, int l);

/// b_{2k} = sum_lambda mult[lambda][k] f^lambda.
std::vector<std::int64_t> betti_rs(const GradedMultiplicity& mult);
std::vector<std::int64_t> betti_rs(const HessenbergFunction& h);

/// Betti numbers of Hess(x,H) for a regular x whose semisimple part has
/// stabilizer W_J: b_{2k} = sum_lambda mult[lambda][k] * invariant_dim(lambda, J).
std::vector<std::int64_t> regular_betti(const GradedMultiplicity& mult, const std::vector<int>& J);
std::vector<std::int64_t> regular_betti(const HessenbergFunction& h, const std::vector<int>& J);

bool is_palindromic(const std::vector<std::int64_t>& v);

/// All subsets of {1..n-1}, as sorted vectors, in bitmask order.
std::vector<std::vector<int>> all_subsets_J(int n);

}  // namespace hesslab
