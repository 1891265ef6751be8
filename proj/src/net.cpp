#include "netconv/net.hpp"

#include <stdexcept>

namespace netconv {

namespace {

// Split a product-order element into the two component elements.
std::pair<Element, Element> split_element(const Element& e, int left_arity) {
    Element a(std::vector<i64>(e.coords.begin(), e.coords.begin() + left_arity));
    Element b(std::vector<i64>(e.coords.begin() + left_arity, e.coords.end()));
    return {std::move(a), std::move(b)};
}

Vec concat(const Vec& a, const Vec& b) {
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

PairNet pair_net(const Net& x, const Net& y) {
    PairNet p;
    p.first = x;
    p.second = y;
    p.mode = IndexMode::product;
    p.combined.ds = DirectedSet::product(x.ds, y.ds);
    p.combined.dim = x.dim + y.dim;
    p.combined.metric = BlockMetric::pair_of(x.metric, y.metric);
    int la = x.ds.arity();
    auto fx = x.eval, fy = y.eval;
    p.combined.eval = [fx, fy, la](const Element& e) {
        auto [a, b] = split_element(e, la);
        return concat(fx(a), fy(b));
    };
    return p;
}

PairNet zip_net(const Net& x, const Net& y) {
    if (x.ds != y.ds)
        throw std::invalid_argument("zip_net requires identical index families");
    PairNet p;
    p.first = x;
    p.second = y;
    p.mode = IndexMode::shared;
    p.combined.ds = x.ds;
    p.combined.dim = x.dim + y.dim;
    p.combined.metric = BlockMetric::pair_of(x.metric, y.metric);
    auto fx = x.eval, fy = y.eval;
    p.combined.eval = [fx, fy](const Element& e) { return concat(fx(e), fy(e)); };
    return p;
}

Net map_net(const std::function<Vec(const Vec&)>& f, int out_dim, const Net& x) {
    Net n;
    n.ds = x.ds;
    n.dim = out_dim;
    n.metric = BlockMetric::euclidean(out_dim);
    auto fx = x.eval;
    n.eval = [f, fx](const Element& e) { return f(fx(e)); };
    return n;
}

Net add_nets(const Net& x, const Net& y, IndexMode mode) {
    if (x.dim != y.dim) throw std::invalid_argument("add_nets: dimension mismatch");
    Net n;
    n.dim = x.dim;
    n.metric = BlockMetric::euclidean(x.dim);
    auto fx = x.eval, fy = y.eval;
    if (mode == IndexMode::product) {
        n.ds = DirectedSet::product(x.ds, y.ds);
        int la = x.ds.arity();
        n.eval = [fx, fy, la](const Element& e) {
            auto [a, b] = split_element(e, la);
            Vec va = fx(a), vb = fy(b);
            for (std::size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
            return va;
        };
    } else {
        if (x.ds != y.ds) throw std::invalid_argument("add_nets(shared): index families differ");
        n.ds = x.ds;
        n.eval = [fx, fy](const Element& e) {
            Vec va = fx(e), vb = fy(e);
            for (std::size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
            return va;
        };
    }
    return n;
}

Net scale_nets(const Net& s, const Net& y, IndexMode mode) {
    if (s.dim != 1) throw std::invalid_argument("scale_nets: scalar net must have dimension 1");
    Net n;
    n.dim = y.dim;
    n.metric = BlockMetric::euclidean(y.dim);
    auto fs = s.eval, fy = y.eval;
    if (mode == IndexMode::product) {
        n.ds = DirectedSet::product(s.ds, y.ds);
        int la = s.ds.arity();
        n.eval = [fs, fy, la](const Element& e) {
            auto [a, b] = split_element(e, la);
            double c = fs(a)[0];
            Vec v = fy(b);
            for (double& t : v) t *= c;
            return v;
        };
    } else {
        if (s.ds != y.ds) throw std::invalid_argument("scale_nets(shared): index families differ");
        n.ds = y.ds;
        n.eval = [fs, fy](const Element& e) {
            double c = fs(e)[0];
            Vec v = fy(e);
            for (double& t : v) t *= c;
            return v;
        };
    }
    return n;
}

Net scale_net(double c, const Net& y) {
    Net n = y;
    auto fy = y.eval;
    n.eval = [fy, c](const Element& e) {
        Vec v = fy(e);
        for (double& t : v) t *= c;
        return v;
    };
    return n;
}

} // namespace netconv
