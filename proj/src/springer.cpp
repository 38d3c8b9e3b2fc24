#include "hesslab/springer.hpp"

#include "hesslab/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

namespace hesslab {

namespace {

JordanType from_rank_sequence(const std::vector<std::size_t>& ranks) {
    // ranks[k] = rank(M^k); blocks of size >= k number ranks[k-1] - ranks[k]
    std::vector<int> at_least;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const auto diff = static_cast<int>(ranks[k - 1] - ranks[k]);
        if (diff > 0) at_least.push_back(diff);
    }
    return conjugate(Partition(std::move(at_least)));
}

IntegerMatrix clear_denominators(const RationalMatrix& m) {
    IntegerMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class common = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) common = lcm(common, m(r, c).get_den());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational scaled = m(r, c) * common;
            out(r, c) = scaled.get_num();
        }
    }
    return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

}  // namespace

JordanType jordan_type(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("jordan_type: matrix not square");
    const std::size_t n = m.rows();
    std::vector<std::size_t> ranks{n};
    RationalMatrix power = m;
    for (std::size_t k = 1; k <= n; ++k) {
        ranks.push_back(bareiss_rank(clear_denominators(power)));
        if (ranks.back() == 0) break;
        power = multiply(power, m);
    }
    if (ranks.back() != 0) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    return from_rank_sequence(ranks);
}

JordanType jordan_type(const ModMatrix& m, const PrimeField& field) {
    if (m.rows() != m.cols()) throw std::invalid_argument("jordan_type: matrix not square");
    const std::size_t n = m.rows();
    std::vector<std::size_t> ranks{n};
    ModMatrix power = m;
    for (std::size_t k = 1; k <= n; ++k) {
        ranks.push_back(rank_mod(power, field));
        if (ranks.back() == 0) break;
        power = multiply_mod(power, m, field);
    }
    if (ranks.back() != 0) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    return from_rank_sequence(ranks);
}

GenericJordan generic_jordan_type(const HessenbergFunction& h, const SamplingOptions& options) {
    const int n = h.n();
    if (n > 9) throw BoundedInputError("generic_jordan_type: n must be <= 9");
    const MatrixPattern pattern = annihilator_pattern(h);
    std::uint64_t p = next_prime(static_cast<std::uint64_t>(n) * n + 1);

    for (int round = 0; round < options.max_rounds; ++round) {
        const PrimeField field{p};
        std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(round));
        std::uniform_int_distribution<std::uint64_t> entry(1, p - 1);
        std::map<Partition, int> counts;
        for (int s = 0; s < options.samples; ++s) {
            ModMatrix m(n, n);
            for (auto [r, c] : pattern.positions) m(r - 1, c - 1) = entry(rng);
            ++counts[jordan_type(m, field)];
        }
        // lower semicontinuity: the generic type dominates every sample
        for (const auto& [candidate, hits] : counts) {
            const bool dominates = std::all_of(counts.begin(), counts.end(), [&](const auto& other) {
                return dominance_leq(other.first, candidate);
            });
            if (!dominates) continue;
            if (hits >= options.min_agreement * options.samples)
                return GenericJordan{candidate, p, options.seed, options.samples, hits};
        }
        p = next_prime(std::min<std::uint64_t>(p * p, std::uint64_t{1} << 31) + 1);
    }
    throw ConsistencyError("generic_jordan_type: sampling did not stabilise for h = " +
                           h.to_string());
}

bool orbit_meets_annihilator(const Partition& lambda, const JordanType& lambda_h) {
    return dominance_leq(lambda, lambda_h);
}

bool orbit_meets_annihilator(const Partition& lambda, const HessenbergFunction& h) {
    if (lambda.size() != h.n()) throw std::invalid_argument("orbit_meets_annihilator: size mismatch");
    return orbit_meets_annihilator(lambda, generic_jordan_type(h).type);
}

Partition springer_orbit(const Partition& irrep, SpringerConvention convention) {
    return convention == SpringerConvention::fourier ? conjugate(irrep) : irrep;
}

std::vector<Partition> allowed_irreps(const JordanType& lambda_h, SpringerConvention convention) {
    std::vector<Partition> out;
    for (const Partition& lambda : partitions_of(lambda_h.size()))
        if (dominance_leq(springer_orbit(lambda, convention), lambda_h)) out.push_back(lambda);
    return out;
}

std::vector<Partition> allowed_irreps(const HessenbergFunction& h, SpringerConvention convention) {
    return allowed_irreps(generic_jordan_type(h).type, convention);
}

bool brute_force_orbit_oracle(const Partition& lambda, const HessenbergFunction& h, std::uint64_t p) {
    const int n = h.n();
    if (n > 4) throw BoundedInputError("brute_force_orbit_oracle: n must be <= 4");
    if (p != 2 && p != 3 && p != 5) throw BoundedInputError("brute_force_orbit_oracle: p must be 2, 3 or 5");
    if (lambda.size() != n) throw std::invalid_argument("brute_force_orbit_oracle: size mismatch");
    const PrimeField field{p};
    const MatrixPattern pattern = annihilator_pattern(h);
    const std::size_t k = pattern.positions.size();
    std::vector<std::uint64_t> digits(k, 0);
    while (true) {
        ModMatrix m(n, n);
        for (std::size_t i = 0; i < k; ++i)
            m(pattern.positions[i].first - 1, pattern.positions[i].second - 1) = digits[i];
        if (jordan_type(m, field) == lambda) return true;
        std::size_t i = 0;
        while (i < k && ++digits[i] == p) digits[i++] = 0;
        if (i == k) return false;
    }
}

std::vector<SupportViolation> support_violations(const GradedMultiplicity& mult,
                                                 const JordanType& lambda_h,
                                                 SpringerConvention convention) {
    std::vector<SupportViolation> out;
    for (const auto& [lambda, row] : mult.table) {
        const std::int64_t total = mult.total(lambda);
        if (total == 0) continue;
        const Partition orbit = springer_orbit(lambda, convention);
        if (!dominance_leq(orbit, lambda_h)) out.push_back({lambda, orbit, total});
    }
    return out;
}

JordanType chain_partition_type(const HessenbergFunction& h) {
    const int n = h.n();
    if (n > 9) throw BoundedInputError("chain_partition_type: n must be <= 9");
    const auto pattern = annihilator_pattern(h);
    const std::uint32_t full = (1u << n) - 1;
    // antichain[S]: no two elements of S comparable
    std::vector<bool> antichain(full + 1, true);
    for (std::uint32_t s = 1; s <= full; ++s)
        for (auto [r, c] : pattern.positions)
            if ((s >> (r - 1) & 1) && (s >> (c - 1) & 1)) {
                antichain[s] = false;
                break;
            }
    // width of every subset: largest antichain inside it
    std::vector<int> width(full + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (antichain[s]) {
            width[s] = std::popcount(s);
            continue;
        }
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) width[s] = std::max(width[s], width[s & ~(1u << v)]);
    }
    // Dilworth: S is a union of k chains iff width(S) <= k
    std::vector<int> largest(n + 1, 0);
    for (std::uint32_t s = 0; s <= full; ++s)
        for (int k = std::max(width[s], 1); k <= n; ++k) largest[k] = std::max(largest[k], std::popcount(s));
    std::vector<int> parts;
    for (int k = 1; k <= n; ++k)
        if (largest[k] > largest[k - 1]) parts.push_back(largest[k] - largest[k - 1]);
    return Partition(parts);
}

}  // namespace hesslab
