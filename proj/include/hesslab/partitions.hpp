#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hesslab {

/// Weakly decreasing sequence of positive integers.
///
/// Indexes irreducible representations of S_n (trivial = (n)), nilpotent
/// orbits / Jordan types, and conjugacy classes (cycle types).
class Partition {
public:
    Partition() = default;
    /// Validates; throws std::invalid_argument if not weakly decreasing positive.
    explicit Partition(std::vector<int> parts);

    /// Sorts and drops zeros. Throws on negative entries.
    static Partition from_composition(std::vector<int> parts);
    /// Parses "2,1" (or the compact "21" form when every part is one digit).
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    /// "2,1"
    std::string to_string() const;
    /// "21"; only meaningful when every part is < 10.
    std::string to_compact_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Conjugacy class label of S_n; same representation as a partition.
using CycleType = Partition;

/// Comparator giving reverse-lexicographic order: (n) first, (1^n) last.
struct RevLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// All partitions of n in reverse-lexicographic order. 1 <= n <= 12.
std::vector<Partition> partitions_of(int n);

/// lambda <= mu in dominance order. Throws std::invalid_argument on size mismatch.
bool dominance_leq(const Partition& lambda, const Partition& mu);

Partition conjugate(const Partition& lambda);

std::int64_t factorial(int n);

/// z_mu = prod_i i^{m_i} m_i!; |C_mu| = n!/z_mu.
std::int64_t centralizer_order(const CycleType& mu);

/// Irreducible character chi^lambda at cycle type mu (Murnaghan-Nakayama).
std::int64_t character_value(const Partition& lambda, const CycleType& mu);

/// Number of standard Young tableaux, chi^lambda(1^n).
std::int64_t dimension_of(const Partition& lambda);

/// Dimension of the W_J-fixed subspace of the irrep lambda, where W_J is the
/// Young subgroup generated by the simple transpositions s_j, j in J
/// (1-based, subset of {1..n-1}).
std::int64_t invariant_dim(const Partition& lambda, const std::vector<int>& J);

/// Block sizes of the Young subgroup W_J in S_n.
std::vector<int> young_blocks(int n, const std::vector<int>& J);

}  // namespace hesslab
