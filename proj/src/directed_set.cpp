#include "netconv/directed_set.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <span>

namespace netconv {

namespace {

constexpr i64 kSaturated = std::numeric_limits<i64>::max();

i64 mul_sat(i64 a, i64 b) {
    if (a == 0 || b == 0) return 0;
    if (a == kSaturated || b == kSaturated) return kSaturated;
    __int128 p = static_cast<__int128>(a) * b;
    if (p > static_cast<__int128>(kSaturated)) return kSaturated;
    return static_cast<i64>(p);
}

} // namespace

i64 axes_count(const std::vector<Axis>& axes) {
    i64 total = 1;
    for (const Axis& a : axes) total = mul_sat(total, a.count);
    return total;
}

Element axes_unrank(const std::vector<Axis>& axes, i64 index) {
    Element out;
    axes_unrank_into(axes, index, out);
    return out;
}

void axes_unrank_into(const std::vector<Axis>& axes, i64 index, Element& out) {
    out.coords.resize(axes.size());
    // Lexicographic rank: first axis is the slowest digit.
    for (std::size_t i = axes.size(); i-- > 0;) {
        i64 c = axes[i].count;
        out.coords[i] = axes[i].at(index % c);
        index /= c;
    }
}

void axes_for_each(const std::vector<Axis>& axes,
                   const std::function<void(const Element&)>& fn) {
    const std::size_t n = axes.size();
    if (n == 0) return;
    for (const Axis& a : axes)
        if (a.count == 0) return;
    std::vector<i64> digit(n, 0);
    Element scratch;
    scratch.coords.resize(n);
    for (std::size_t i = 0; i < n; ++i) scratch.coords[i] = axes[i].at(0);
    for (;;) {
        fn(scratch);
        // Odometer with the last axis fastest, i.e. lexicographic order.
        std::size_t i = n;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (++digit[i] < axes[i].count) {
                scratch.coords[i] = axes[i].at(digit[i]);
                advanced = true;
                break;
            }
            digit[i] = 0;
            scratch.coords[i] = axes[i].at(0);
        }
        if (!advanced) return;
    }
}

std::vector<i64> divisors_of(i64 m) {
    std::vector<i64> small, large;
    for (i64 i = 1; i * i <= m; ++i) {
        if (m % i == 0) {
            small.push_back(i);
            if (i != m / i) large.push_back(m / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

i64 divisor_count(i64 m) {
    i64 n = 0;
    for (i64 i = 1; i * i <= m; ++i)
        if (m % i == 0) n += (i == m / i) ? 1 : 2;
    return n;
}

struct DirectedSet::Node {
    Family family = Family::naturals;
    int dim = 1; // grid dimension; 1 elsewhere
    std::shared_ptr<const Node> lhs, rhs;
    int arity = 1;
    bool grid_like = true;
};

namespace {

using Node = DirectedSet::Node;
using NodePtr = std::shared_ptr<const Node>;
using Span = std::span<const i64>;

bool node_equal(const Node& a, const Node& b) {
    if (a.family != b.family || a.dim != b.dim) return false;
    if (a.family == DirectedSet::Family::product)
        return node_equal(*a.lhs, *b.lhs) && node_equal(*a.rhs, *b.rhs);
    return true;
}

bool leq_node(const Node& n, Span a, Span b) {
    switch (n.family) {
    case DirectedSet::Family::naturals:
        return a[0] <= b[0];
    case DirectedSet::Family::grid:
        for (int i = 0; i < n.dim; ++i)
            if (a[i] > b[i]) return false;
        return true;
    case DirectedSet::Family::divisibility:
    case DirectedSet::Family::divisibility_excluding_one:
        return b[0] % a[0] == 0;
    case DirectedSet::Family::product: {
        int la = n.lhs->arity;
        return leq_node(*n.lhs, a.first(la), b.first(la)) &&
               leq_node(*n.rhs, a.subspan(la), b.subspan(la));
    }
    }
    return false;
}

bool valid_node(const Node& n, Span c) noexcept {
    switch (n.family) {
    case DirectedSet::Family::naturals:
        return c[0] >= 1;
    case DirectedSet::Family::grid:
        for (int i = 0; i < n.dim; ++i)
            if (c[i] < 1) return false;
        return true;
    case DirectedSet::Family::divisibility:
        return c[0] >= 1;
    case DirectedSet::Family::divisibility_excluding_one:
        return c[0] >= 2;
    case DirectedSet::Family::product: {
        int la = n.lhs->arity;
        return valid_node(*n.lhs, c.first(la)) && valid_node(*n.rhs, c.subspan(la));
    }
    }
    return false;
}

void down_axes_node(const Node& n, Span b, std::vector<Axis>& out) {
    switch (n.family) {
    case DirectedSet::Family::naturals:
        out.push_back(Axis::affine(1, 1, b[0]));
        return;
    case DirectedSet::Family::grid:
        for (int i = 0; i < n.dim; ++i) out.push_back(Axis::affine(1, 1, b[i]));
        return;
    case DirectedSet::Family::divisibility:
        out.push_back(Axis::list(divisors_of(b[0])));
        return;
    case DirectedSet::Family::divisibility_excluding_one: {
        std::vector<i64> ds = divisors_of(b[0]);
        ds.erase(ds.begin()); // drop 1; every other divisor of an element >= 2 stays in range
        out.push_back(Axis::list(std::move(ds)));
        return;
    }
    case DirectedSet::Family::product: {
        int la = n.lhs->arity;
        down_axes_node(*n.lhs, b.first(la), out);
        down_axes_node(*n.rhs, b.subspan(la), out);
        return;
    }
    }
}

i64 down_size_node(const Node& n, Span b) {
    switch (n.family) {
    case DirectedSet::Family::naturals:
        return b[0];
    case DirectedSet::Family::grid: {
        i64 total = 1;
        for (int i = 0; i < n.dim; ++i) total = mul_sat(total, b[i]);
        return total;
    }
    case DirectedSet::Family::divisibility:
        return divisor_count(b[0]);
    case DirectedSet::Family::divisibility_excluding_one:
        return divisor_count(b[0]) - 1;
    case DirectedSet::Family::product: {
        int la = n.lhs->arity;
        return mul_sat(down_size_node(*n.lhs, b.first(la)),
                       down_size_node(*n.rhs, b.subspan(la)));
    }
    }
    return 0;
}

void horizon_axes_node(const Node& n, i64 bound, std::vector<Axis>& out) {
    switch (n.family) {
    case DirectedSet::Family::naturals:
        out.push_back(Axis::affine(1, 1, bound));
        return;
    case DirectedSet::Family::grid:
        for (int i = 0; i < n.dim; ++i) out.push_back(Axis::affine(1, 1, bound));
        return;
    case DirectedSet::Family::divisibility:
        out.push_back(Axis::affine(1, 1, bound));
        return;
    case DirectedSet::Family::divisibility_excluding_one:
        out.push_back(Axis::affine(2, 1, bound >= 2 ? bound - 1 : 0));
        return;
    case DirectedSet::Family::product:
        horizon_axes_node(*n.lhs, bound, out);
        horizon_axes_node(*n.rhs, bound, out);
        return;
    }
}

void up_axes_node(const Node& n, Span g, i64 bound, std::vector<Axis>& out) {
    switch (n.family) {
    case DirectedSet::Family::naturals:
        out.push_back(Axis::affine(g[0], 1, bound >= g[0] ? bound - g[0] + 1 : 0));
        return;
    case DirectedSet::Family::grid:
        for (int i = 0; i < n.dim; ++i)
            out.push_back(Axis::affine(g[i], 1, bound >= g[i] ? bound - g[i] + 1 : 0));
        return;
    case DirectedSet::Family::divisibility:
    case DirectedSet::Family::divisibility_excluding_one:
        // Multiples of g within the bound, ascending.
        out.push_back(Axis::affine(g[0], g[0], bound / g[0]));
        return;
    case DirectedSet::Family::product: {
        int la = n.lhs->arity;
        up_axes_node(*n.lhs, g.first(la), bound, out);
        up_axes_node(*n.rhs, g.subspan(la), bound, out);
        return;
    }
    }
}

void frontier_axes_node(const Node& n, i64 f, std::vector<Axis>& out) {
    switch (n.family) {
    case DirectedSet::Family::naturals:
        out.push_back(Axis::affine(1, 1, f));
        return;
    case DirectedSet::Family::grid:
        for (int i = 0; i < n.dim; ++i) out.push_back(Axis::affine(1, 1, f));
        return;
    case DirectedSet::Family::divisibility:
        // Root only: deeper base points have truncated up-sets of one or two
        // multiples at desk scale, which turns the inner extremum into pure
        // truncation noise.
        out.push_back(Axis::affine(1, 1, 1));
        return;
    case DirectedSet::Family::divisibility_excluding_one:
        out.push_back(Axis::affine(2, 1, 1));
        return;
    case DirectedSet::Family::product:
        frontier_axes_node(*n.lhs, f, out);
        frontier_axes_node(*n.rhs, f, out);
        return;
    }
}

void join_node(const Node& n, Span a, Span b, std::vector<i64>& out) {
    switch (n.family) {
    case DirectedSet::Family::naturals:
        out.push_back(std::max(a[0], b[0]));
        return;
    case DirectedSet::Family::grid:
        for (int i = 0; i < n.dim; ++i) out.push_back(std::max(a[i], b[i]));
        return;
    case DirectedSet::Family::divisibility:
    case DirectedSet::Family::divisibility_excluding_one:
        out.push_back(std::lcm(a[0], b[0]));
        return;
    case DirectedSet::Family::product: {
        int la = n.lhs->arity;
        join_node(*n.lhs, a.first(la), b.first(la), out);
        join_node(*n.rhs, a.subspan(la), b.subspan(la), out);
        return;
    }
    }
}

void min_coords_node(const Node& n, std::vector<i64>& out) {
    switch (n.family) {
    case DirectedSet::Family::naturals:
    case DirectedSet::Family::divisibility:
        out.push_back(1);
        return;
    case DirectedSet::Family::grid:
        for (int i = 0; i < n.dim; ++i) out.push_back(1);
        return;
    case DirectedSet::Family::divisibility_excluding_one:
        out.push_back(2);
        return;
    case DirectedSet::Family::product:
        min_coords_node(*n.lhs, out);
        min_coords_node(*n.rhs, out);
        return;
    }
}

std::string spec_node(const Node& n) {
    switch (n.family) {
    case DirectedSet::Family::naturals: return "N";
    case DirectedSet::Family::grid: return "N^" + std::to_string(n.dim);
    case DirectedSet::Family::divisibility: return "div";
    case DirectedSet::Family::divisibility_excluding_one: return "div1";
    case DirectedSet::Family::product:
        return "prod(" + spec_node(*n.lhs) + "," + spec_node(*n.rhs) + ")";
    }
    return "?";
}

} // namespace

DirectedSet DirectedSet::naturals() {
    auto n = std::make_shared<Node>();
    n->family = Family::naturals;
    return DirectedSet(std::move(n));
}

DirectedSet DirectedSet::grid(int dim) {
    if (dim < 1 || dim > 16)
        throw std::invalid_argument("grid dimension must be in [1,16]");
    if (dim == 1) return naturals();
    auto n = std::make_shared<Node>();
    n->family = Family::grid;
    n->dim = dim;
    n->arity = dim;
    return DirectedSet(std::move(n));
}

DirectedSet DirectedSet::divisibility() {
    auto n = std::make_shared<Node>();
    n->family = Family::divisibility;
    n->grid_like = false;
    return DirectedSet(std::move(n));
}

DirectedSet DirectedSet::divisibility_excluding_one() {
    auto n = std::make_shared<Node>();
    n->family = Family::divisibility_excluding_one;
    n->grid_like = false;
    return DirectedSet(std::move(n));
}

DirectedSet DirectedSet::product(const DirectedSet& left, const DirectedSet& right) {
    auto n = std::make_shared<Node>();
    n->family = Family::product;
    n->lhs = left.root_;
    n->rhs = right.root_;
    n->arity = left.arity() + right.arity();
    n->grid_like = left.grid_like() && right.grid_like();
    return DirectedSet(std::move(n));
}

namespace {

DirectedSet parse_spec_at(const std::string& s, std::size_t& pos);

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

DirectedSet parse_spec_at(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    auto starts = [&](const char* word) {
        return s.compare(pos, std::string::traits_type::length(word), word) == 0;
    };
    if (starts("prod(")) {
        pos += 5;
        DirectedSet left = parse_spec_at(s, pos);
        skip_ws(s, pos);
        if (pos >= s.size() || s[pos] != ',')
            throw parse_error("expected ',' in prod(...)", 1, static_cast<int>(pos) + 1);
        ++pos;
        DirectedSet right = parse_spec_at(s, pos);
        skip_ws(s, pos);
        if (pos >= s.size() || s[pos] != ')')
            throw parse_error("expected ')' in prod(...)", 1, static_cast<int>(pos) + 1);
        ++pos;
        return DirectedSet::product(left, right);
    }
    if (starts("div1")) { pos += 4; return DirectedSet::divisibility_excluding_one(); }
    if (starts("div")) { pos += 3; return DirectedSet::divisibility(); }
    if (starts("N")) {
        ++pos;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start)
                throw parse_error("expected dimension after 'N^'", 1, static_cast<int>(pos) + 1);
            int d = std::stoi(s.substr(start, pos - start));
            return DirectedSet::grid(d);
        }
        return DirectedSet::naturals();
    }
    throw parse_error("unknown family spec", 1, static_cast<int>(pos) + 1);
}

} // namespace

DirectedSet DirectedSet::parse_spec(const std::string& spec) {
    std::size_t pos = 0;
    DirectedSet ds = parse_spec_at(spec, pos);
    skip_ws(spec, pos);
    if (pos != spec.size())
        throw parse_error("trailing characters in family spec", 1, static_cast<int>(pos) + 1);
    return ds;
}

std::string DirectedSet::spec_string() const { return spec_node(*root_); }

DirectedSet::Family DirectedSet::family() const { return root_->family; }
int DirectedSet::arity() const { return root_->arity; }

DirectedSet DirectedSet::left() const {
    if (root_->family != Family::product) throw std::logic_error("left(): not a product");
    return DirectedSet(root_->lhs);
}

DirectedSet DirectedSet::right() const {
    if (root_->family != Family::product) throw std::logic_error("right(): not a product");
    return DirectedSet(root_->rhs);
}

bool DirectedSet::operator==(const DirectedSet& other) const {
    return node_equal(*root_, *other.root_);
}

bool DirectedSet::grid_like() const { return root_->grid_like; }

bool DirectedSet::valid_element(const Element& e) const noexcept {
    if (e.arity() != root_->arity) return false;
    return valid_node(*root_, Span(e.coords));
}

void DirectedSet::require_element(const Element& e) const {
    if (e.arity() != root_->arity)
        throw invalid_element_error("element arity " + std::to_string(e.arity()) +
                                    " does not match family " + spec_string());
    if (!valid_node(*root_, Span(e.coords)))
        throw invalid_element_error("element " + e.to_string() +
                                    " out of range for family " + spec_string());
}

bool DirectedSet::leq(const Element& a, const Element& b) const {
    require_element(a);
    require_element(b);
    return leq_node(*root_, Span(a.coords), Span(b.coords));
}

std::vector<Element> DirectedSet::down_set(const Element& b) const {
    require_element(b);
    std::vector<Axis> axes;
    down_axes_node(*root_, Span(b.coords), axes);
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(axes_count(axes)));
    axes_for_each(axes, [&](const Element& e) { out.push_back(e); });
    return out;
}

i64 DirectedSet::down_set_size(const Element& b) const {
    require_element(b);
    return down_size_node(*root_, Span(b.coords));
}

std::vector<Axis> DirectedSet::down_axes(const Element& b) const {
    require_element(b);
    std::vector<Axis> axes;
    down_axes_node(*root_, Span(b.coords), axes);
    return axes;
}

i64 DirectedSet::count_within(i64 bound) const {
    std::vector<Axis> axes;
    horizon_axes_node(*root_, bound, axes);
    return axes_count(axes);
}

std::vector<Axis> DirectedSet::horizon_axes(i64 bound) const {
    std::vector<Axis> axes;
    horizon_axes_node(*root_, bound, axes);
    return axes;
}

std::vector<Axis> DirectedSet::up_axes(const Element& g, i64 bound) const {
    require_element(g);
    std::vector<Axis> axes;
    up_axes_node(*root_, Span(g.coords), bound, axes);
    return axes;
}

std::vector<Axis> DirectedSet::frontier_axes(i64 frontier_bound) const {
    std::vector<Axis> axes;
    frontier_axes_node(*root_, frontier_bound, axes);
    return axes;
}

std::vector<Element> DirectedSet::enumerate_within(i64 bound, i64 element_cap) const {
    i64 total = count_within(bound);
    if (total > element_cap)
        throw resource_limit_error("enumeration of " + std::to_string(total) +
                                   " elements exceeds cap " + std::to_string(element_cap));
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(total));
    for_each_within(bound, [&](const Element& e) { out.push_back(e); });
    return out;
}

void DirectedSet::for_each_within(i64 bound, const std::function<void(const Element&)>& fn) const {
    std::vector<Axis> axes;
    horizon_axes_node(*root_, bound, axes);
    axes_for_each(axes, fn);
}

i64 DirectedSet::up_set_count(const Element& g, i64 bound) const {
    return axes_count(up_axes(g, bound));
}

std::vector<Element> DirectedSet::up_set_within(const Element& g, i64 bound, i64 element_cap) const {
    std::vector<Axis> axes = up_axes(g, bound);
    i64 total = axes_count(axes);
    if (total > element_cap)
        throw resource_limit_error("up-set enumeration of " + std::to_string(total) +
                                   " elements exceeds cap " + std::to_string(element_cap));
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(total));
    axes_for_each(axes, [&](const Element& e) { out.push_back(e); });
    return out;
}

Element DirectedSet::join(const Element& a, const Element& b) const {
    require_element(a);
    require_element(b);
    std::vector<i64> coords;
    coords.reserve(static_cast<std::size_t>(root_->arity));
    join_node(*root_, Span(a.coords), Span(b.coords), coords);
    return Element(std::move(coords));
}

std::vector<i64> DirectedSet::min_coords() const {
    std::vector<i64> out;
    out.reserve(static_cast<std::size_t>(root_->arity));
    min_coords_node(*root_, out);
    return out;
}

} // namespace netconv
