#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hesslab {

/// Hessenberg function h: [n] -> [n], 1-indexed values with
/// i <= h(i) <= n and h(i) <= h(i+1).
///
/// Conventions: b = upper triangular, n = strictly upper,
/// H = {x : x_ij = 0 whenever i > h(j)}.
class HessenbergFunction {
public:
    HessenbergFunction() = default;
    /// Throws std::invalid_argument when the invariants fail.
    explicit HessenbergFunction(std::vector<int> values);
    /// Parses "2,3,3".
    static HessenbergFunction parse(const std::string& text);

    int n() const noexcept { return static_cast<int>(values_.size()); }
    /// h(i) for 1 <= i <= n.
    int operator()(int i) const { return values_.at(i - 1); }
    const std::vector<int>& values() const noexcept { return values_; }

    bool indecomposable() const;
    std::string to_string() const;

    friend bool operator==(const HessenbergFunction&, const HessenbergFunction&) = default;
    friend auto operator<=>(const HessenbergFunction&, const HessenbergFunction&) = default;

private:
    std::vector<int> values_;
};

/// Set of (row, col) positions, 1-indexed.
struct MatrixPattern {
    int n = 0;
    std::vector<std::pair<int, int>> positions;

    bool contains(int row, int col) const;
    friend bool operator==(const MatrixPattern&, const MatrixPattern&) = default;
};

using Edge = std::pair<int, int>;

/// All Hessenberg functions of size n (Catalan(n) many) in lexicographic order.
/// 2 <= n <= 9; n = 1 is accepted too since it is the trivial case.
std::vector<HessenbergFunction> enumerate_hessenberg(int n, bool indecomposable_only);

/// sum_i (h(i) - i)
int dimension(const HessenbergFunction& h);

/// Trace-form annihilator: {(i, j) : j > h(i)}, strictly upper triangular.
MatrixPattern annihilator_pattern(const HessenbergFunction& h);

/// Edges {i, j}, i < j, with j <= h(i); vertices 1..n.
std::vector<Edge> incomparability_graph(const HessenbergFunction& h);

/// Pointwise h <= h'.
bool pointwise_leq(const HessenbergFunction& a, const HessenbergFunction& b);

}  // namespace hesslab
