#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace netconv {

using Vec = std::vector<double>;

// Metric on R^k built from Euclidean blocks combined with max: a plain
// Euclidean metric is one block; pairing two nets concatenates their blocks
// and takes the max of the block distances (the product metric).  Max is
// associative, so nested pairs flatten naturally.
class BlockMetric {
public:
    static BlockMetric euclidean(int dim) {
        BlockMetric m;
        m.blocks_ = {dim};
        m.dim_ = dim;
        return m;
    }

    static BlockMetric pair_of(const BlockMetric& a, const BlockMetric& b) {
        BlockMetric m;
        m.blocks_ = a.blocks_;
        m.blocks_.insert(m.blocks_.end(), b.blocks_.begin(), b.blocks_.end());
        m.dim_ = a.dim_ + b.dim_;
        return m;
    }

    int dim() const { return dim_; }
    const std::vector<int>& blocks() const { return blocks_; }

    double distance(const Vec& x, const Vec& y) const {
        check(x);
        check(y);
        double best = 0.0;
        std::size_t at = 0;
        for (int b : blocks_) {
            double s = 0.0;
            for (int i = 0; i < b; ++i) {
                double d = x[at + i] - y[at + i];
                s += d * d;
            }
            best = std::max(best, std::sqrt(s));
            at += static_cast<std::size_t>(b);
        }
        return best;
    }

    double norm(const Vec& x) const {
        check(x);
        double best = 0.0;
        std::size_t at = 0;
        for (int b : blocks_) {
            double s = 0.0;
            for (int i = 0; i < b; ++i) s += x[at + i] * x[at + i];
            best = std::max(best, std::sqrt(s));
            at += static_cast<std::size_t>(b);
        }
        return best;
    }

private:
    void check(const Vec& v) const {
        if (static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("metric dimension mismatch");
    }
    std::vector<int> blocks_;
    int dim_ = 0;
};

} // namespace netconv
