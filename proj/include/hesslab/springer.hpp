#pragma once

#include "hesslab/dotchar.hpp"
#include "hesslab/hessenberg.hpp"
#include "hesslab/linalg.hpp"
#include "hesslab/partitions.hpp"

#include <cstdint>
#include <vector>

namespace hesslab {

/// Sizes of Jordan blocks of a nilpotent matrix.
using JordanType = Partition;

/// Jordan type of a nilpotent rational matrix from the ranks of its powers
/// (fraction-free elimination). Throws std::invalid_argument if not nilpotent.
JordanType jordan_type(const RationalMatrix& m);
/// Same over Z/p.
JordanType jordan_type(const ModMatrix& m, const PrimeField& field);

struct GenericJordan {
    JordanType type;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    int samples = 0;
    int hits = 0;  // samples attaining `type`
};

struct SamplingOptions {
    std::uint64_t seed = 20190101;
    int samples = 32;
    double min_agreement = 0.9;
    int max_rounds = 4;
};

/// lambda_H: Jordan type of a generic matrix supported on the annihilator
/// pattern, by random sampling over a prime field with p > n^2. Throws
/// ConsistencyError if the dominance maximum is not stable after retries.
GenericJordan generic_jordan_type(const HessenbergFunction& h, const SamplingOptions& options = {});

/// The nilpotent orbit of type lambda meets H^perp iff lambda <= lambda_H.
bool orbit_meets_annihilator(const Partition& lambda, const JordanType& lambda_h);
bool orbit_meets_annihilator(const Partition& lambda, const HessenbergFunction& h);

/// How irrep labels map to orbit labels.
enum class SpringerConvention {
    /// trivial rep <-> zero orbit: orbit(lambda) = lambda'
    fourier,
    /// orbit(lambda) = lambda; only used as a falsification control
    direct,
};

Partition springer_orbit(const Partition& irrep, SpringerConvention convention);

/// Irreps whose Springer orbit meets H^perp, reverse-lex ordered.
std::vector<Partition> allowed_irreps(const JordanType& lambda_h,
                                      SpringerConvention convention = SpringerConvention::fourier);
std::vector<Partition> allowed_irreps(const HessenbergFunction& h,
                                      SpringerConvention convention = SpringerConvention::fourier);

/// Deterministic lambda_H: the annihilator pattern is the strict order of a
/// poset on [n], and a generic nilpotent of its incidence algebra has Jordan
/// type c_k - c_{k-1}, where c_k is the largest union of k chains (Gansner-Saks).
/// n <= 9.
JordanType chain_partition_type(const HessenbergFunction& h);

/// Exhaustive search over all matrices on the annihilator pattern over F_p.
/// n <= 4 and p in {2, 3, 5}.
bool brute_force_orbit_oracle(const Partition& lambda, const HessenbergFunction& h, std::uint64_t p);

struct SupportViolation {
    Partition irrep;
    Partition orbit;
    std::int64_t multiplicity = 0;
};

/// Irreps occurring in the dot action whose orbit does not meet H^perp.
std::vector<SupportViolation> support_violations(const GradedMultiplicity& mult,
                                                 const JordanType& lambda_h,
                                                 SpringerConvention convention);

}  // namespace hesslab
