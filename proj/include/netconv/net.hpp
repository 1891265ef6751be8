#pragma once

#include <functional>
#include <utility>

#include "netconv/directed_set.hpp"
#include "netconv/metric.hpp"

namespace netconv {

// A net: a function from a directed set into R^k, together with the metric
// used for convergence questions.
struct Net {
    DirectedSet ds = DirectedSet::naturals();
    int dim = 1;
    BlockMetric metric = BlockMetric::euclidean(1);
    std::function<Vec(const Element&)> eval;

    static Net scalar(const DirectedSet& ds, std::function<double(const Element&)> f) {
        Net n;
        n.ds = ds;
        n.dim = 1;
        n.metric = BlockMetric::euclidean(1);
        n.eval = [f = std::move(f)](const Element& e) { return Vec{f(e)}; };
        return n;
    }

    static Net vector(const DirectedSet& ds, int dim, std::function<Vec(const Element&)> f) {
        Net n;
        n.ds = ds;
        n.dim = dim;
        n.metric = BlockMetric::euclidean(dim);
        n.eval = std::move(f);
        return n;
    }

    static Net constant(const DirectedSet& ds, Vec value) {
        int d = static_cast<int>(value.size());
        Net n;
        n.ds = ds;
        n.dim = d;
        n.metric = BlockMetric::euclidean(d);
        n.eval = [value = std::move(value)](const Element&) { return value; };
        return n;
    }
};

// How two nets are combined: over the product order (independent indices) or
// over a shared index set.
enum class IndexMode { product, shared };

// A combined net that remembers its components, so verdicts can be projected
// back onto the factors.
struct PairNet {
    Net combined;
    Net first;
    Net second;
    IndexMode mode = IndexMode::product;
};

// (x_a, y_b) over prod(D1, D2) with the max-of-blocks product metric.
PairNet pair_net(const Net& x, const Net& y);

// (x_a, y_a) over the common index set; requires x.ds == y.ds.
PairNet zip_net(const Net& x, const Net& y);

// Coordinate-wise image net f(x_a) with Euclidean metric on the image.
Net map_net(const std::function<Vec(const Vec&)>& f, int out_dim, const Net& x);

// x + y, either (a,b) -> x_a + y_b over the product order or a -> x_a + y_a
// over a shared index set.  Dimensions must match.
Net add_nets(const Net& x, const Net& y, IndexMode mode);

// Scalar net times vector net: (a,b) -> s_a * y_b, or a -> s_a * y_a.
Net scale_nets(const Net& s, const Net& y, IndexMode mode);

// Constant scalar multiple.
Net scale_net(double c, const Net& y);

} // namespace netconv
