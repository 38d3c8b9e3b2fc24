#include "hesslab/hessenberg.hpp"

#include "hesslab/error.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hesslab {

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    if (n == 0) throw std::invalid_argument("Hessenberg function must be nonempty");
    for (int i = 1; i <= n; ++i) {
        const int v = values_[i - 1];
        if (v < i || v > n)
            throw std::invalid_argument("Hessenberg function needs i <= h(i) <= n");
        if (i > 1 && v < values_[i - 2])
            throw std::invalid_argument("Hessenberg function must be nondecreasing");
    }
}

HessenbergFunction HessenbergFunction::parse(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse Hessenberg function: '" + text + "'");
        }
        if (used != item.size())
            throw std::invalid_argument("cannot parse Hessenberg function: '" + text + "'");
        values.push_back(v);
    }
    return HessenbergFunction(std::move(values));
}

bool HessenbergFunction::indecomposable() const {
    for (int i = 1; i < n(); ++i)
        if ((*this)(i) < i + 1) return false;
    return true;
}

std::string HessenbergFunction::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

bool MatrixPattern::contains(int row, int col) const {
    return std::find(positions.begin(), positions.end(), std::pair{row, col}) != positions.end();
}

namespace {

void extend(int n, bool indecomposable_only, std::vector<int>& prefix,
            std::vector<HessenbergFunction>& out) {
    const int i = static_cast<int>(prefix.size()) + 1;
    if (i > n) {
        out.emplace_back(prefix);
        return;
    }
    int lo = std::max(i, prefix.empty() ? 1 : prefix.back());
    if (indecomposable_only && i < n) lo = std::max(lo, i + 1);
    for (int v = lo; v <= n; ++v) {
        prefix.push_back(v);
        extend(n, indecomposable_only, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<HessenbergFunction> enumerate_hessenberg(int n, bool indecomposable_only) {
    if (n < 1 || n > 9) throw BoundedInputError("enumerate_hessenberg: n must be in [1, 9]");
    std::vector<HessenbergFunction> out;
    std::vector<int> prefix;
    extend(n, indecomposable_only, prefix, out);
    return out;
}

int dimension(const HessenbergFunction& h) {
    int l = 0;
    for (int i = 1; i <= h.n(); ++i) l += h(i) - i;
    return l;
}

MatrixPattern annihilator_pattern(const HessenbergFunction& h) {
    MatrixPattern p{h.n(), {}};
    for (int i = 1; i <= h.n(); ++i)
        for (int j = h(i) + 1; j <= h.n(); ++j) p.positions.emplace_back(i, j);
    return p;
}

std::vector<Edge> incomparability_graph(const HessenbergFunction& h) {
    std::vector<Edge> edges;
    for (int i = 1; i <= h.n(); ++i)
        for (int j = i + 1; j <= h(i); ++j) edges.emplace_back(i, j);
    return edges;
}

bool pointwise_leq(const HessenbergFunction& a, const HessenbergFunction& b) {
    if (a.n() != b.n()) throw std::invalid_argument("pointwise_leq: size mismatch");
    for (int i = 1; i <= a.n(); ++i)
        if (a(i) > b(i)) return false;
    return true;
}

}  // namespace hesslab
