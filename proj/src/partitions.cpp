#include "hesslab/partitions.hpp"

#include "hesslab/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hesslab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_composition(std::vector<int> parts) {
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
        throw std::invalid_argument("negative part in composition");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad partition: " + text);
            parts.push_back(c - '0');
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument("bad partition: " + text);
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::to_compact_string() const {
    std::string out;
    for (int p : parts_) out += std::to_string(p);
    return out;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 1 || n > 12) throw BoundedInputError("partitions_of: n must be in [1, 12]");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate(n, n, prefix, out);
    return out;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("dominance_leq: partitions of different n");
    int a = 0, b = 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a > b) return false;
    }
    return true;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    if (lambda.length() == 0) return Partition();
    for (int c = 0; c < lambda[0]; ++c) {
        int count = 0;
        for (int p : lambda.parts())
            if (p > c) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::int64_t centralizer_order(const CycleType& mu) {
    std::int64_t z = 1;
    std::map<int, int> mult;
    for (int p : mu.parts()) {
        z *= p;
        ++mult[p];
    }
    for (auto [part, m] : mult) z *= factorial(m);
    return z;
}

namespace {

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

// Shape as a partition vector; cycles sorted decreasing, consumed from the front.
std::int64_t mn_recursive(const std::vector<int>& shape, const std::vector<int>& cycles,
                          std::map<MnKey, std::int64_t>& memo) {
    if (cycles.empty()) return shape.empty() ? 1 : 0;
    MnKey key{shape, cycles};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int r = cycles.front();
    const std::vector<int> rest(cycles.begin() + 1, cycles.end());
    const int len = static_cast<int>(shape.size());

    // beta-set: first-column hook lengths, strictly decreasing
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = shape[i] + (len - 1 - i);

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        const int target = beta[i] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end(), std::greater<>());
        std::vector<int> next_shape;
        for (int j = 0; j < len; ++j) {
            const int part = next[j] - (len - 1 - j);
            if (part > 0) next_shape.push_back(part);
        }
        const std::int64_t sub = mn_recursive(next_shape, rest, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::int64_t character_value(const Partition& lambda, const CycleType& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character_value: partitions of different n");
    thread_local std::map<MnKey, std::int64_t> memo;
    return mn_recursive(lambda.parts(), mu.parts(), memo);
}

std::int64_t dimension_of(const Partition& lambda) {
    return character_value(lambda, Partition(std::vector<int>(lambda.size(), 1)));
}

std::vector<int> young_blocks(int n, const std::vector<int>& J) {
    std::vector<bool> joined(n + 1, false);
    for (int j : J) {
        if (j < 1 || j >= n) throw std::invalid_argument("J must be a subset of {1..n-1}");
        joined[j] = true;
    }
    std::vector<int> blocks;
    int current = 1;
    for (int i = 1; i < n; ++i) {
        if (joined[i]) {
            ++current;
        } else {
            blocks.push_back(current);
            current = 1;
        }
    }
    blocks.push_back(current);
    return blocks;
}

namespace {

struct BlockClass {
    std::vector<int> cycles;
    std::int64_t size;
};

void accumulate_classes(const std::vector<std::vector<BlockClass>>& per_block, std::size_t b,
                        std::vector<int>& cycles, std::int64_t size, const Partition& lambda,
                        std::int64_t& sum) {
    if (b == per_block.size()) {
        sum += size * character_value(lambda, Partition::from_composition(cycles));
        return;
    }
    for (const BlockClass& cls : per_block[b]) {
        const std::size_t mark = cycles.size();
        cycles.insert(cycles.end(), cls.cycles.begin(), cls.cycles.end());
        accumulate_classes(per_block, b + 1, cycles, size * cls.size, lambda, sum);
        cycles.resize(mark);
    }
}

}  // namespace

std::int64_t invariant_dim(const Partition& lambda, const std::vector<int>& J) {
    const int n = lambda.size();
    const std::vector<int> blocks = young_blocks(n, J);

    std::vector<std::vector<BlockClass>> per_block;
    std::int64_t order = 1;
    for (int b : blocks) {
        order *= factorial(b);
        std::vector<BlockClass> classes;
        for (const Partition& mu : partitions_of(b))
            classes.push_back({mu.parts(), factorial(b) / centralizer_order(mu)});
        per_block.push_back(std::move(classes));
    }

    std::int64_t sum = 0;
    std::vector<int> cycles;
    accumulate_classes(per_block, 0, cycles, 1, lambda, sum);
    if (sum % order != 0)
        throw ConsistencyError("invariant_dim: character average is not an integer");
    return sum / order;
}

}  // namespace hesslab
