#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "netconv/element.hpp"
#include "netconv/errors.hpp"

namespace netconv {

// One coordinate axis of a finite truncation, described without
// materialisation: either an affine progression first, first+step, ... or an
// explicit value list (used for divisor down-sets).
struct Axis {
    i64 first = 1;
    i64 step = 1;
    i64 count = 0;
    std::vector<i64> values; // used iff is_list
    bool is_list = false;

    static Axis affine(i64 first, i64 step, i64 count) {
        Axis a; a.first = first; a.step = step; a.count = count; return a;
    }
    static Axis list(std::vector<i64> vs) {
        Axis a; a.is_list = true; a.count = static_cast<i64>(vs.size());
        a.values = std::move(vs); return a;
    }
    i64 at(i64 k) const { return is_list ? values[static_cast<std::size_t>(k)] : first + step * k; }
};

i64 axes_count(const std::vector<Axis>& axes);                       // saturating product
Element axes_unrank(const std::vector<Axis>& axes, i64 index);       // lexicographic rank
void axes_unrank_into(const std::vector<Axis>& axes, i64 index,
                      Element& out);                                 // same, reusing storage
void axes_for_each(const std::vector<Axis>& axes,
                   const std::function<void(const Element&)>& fn);   // lexicographic order

// Sorted divisors of m by trial division (no sieve persistence).
std::vector<i64> divisors_of(i64 m);
i64 divisor_count(i64 m);

// A directed partial order on tuples of positive integers.  Families:
//   naturals                  -- 1..inf with the usual order
//   grid(d)                   -- d-tuples, coordinatewise order
//   divisibility              -- 1..inf ordered by "divides"
//   divisibility_excluding_one-- 2..inf ordered by "divides"
//   product                   -- pairwise order on concatenated coordinates
// All share the finite-down-set / infinite-up-set shape that makes counting
// ratios well defined at every point.
//
// Bounds are family-aware: scalar integer families truncate at value <= B,
// grids and products truncate each coordinate at B (box truncation).
class DirectedSet {
public:
    enum class Family { naturals, grid, divisibility, divisibility_excluding_one, product };

    static DirectedSet naturals();
    static DirectedSet grid(int dim);
    static DirectedSet divisibility();
    static DirectedSet divisibility_excluding_one();
    static DirectedSet product(const DirectedSet& left, const DirectedSet& right);

    // Family spec strings: "N", "N^2", "N^3", "div", "div1", "prod(a,b)".
    static DirectedSet parse_spec(const std::string& spec);
    std::string spec_string() const;

    Family family() const;
    int arity() const;
    DirectedSet left() const;   // product only
    DirectedSet right() const;  // product only
    bool operator==(const DirectedSet& other) const;
    bool operator!=(const DirectedSet& other) const { return !(*this == other); }

    // True when every leaf is naturals/grid; such orders are plain boxes and
    // admit prefix-sum counting.
    bool grid_like() const;

    bool valid_element(const Element& e) const noexcept;
    void require_element(const Element& e) const; // throws invalid_element_error

    // Order relation; both arguments must be valid elements.
    bool leq(const Element& a, const Element& b) const;

    // The finite set {a : a <= b}, in lexicographic order, and its closed form
    // size (product of per-axis sizes; divisor count on divisor leaves).
    std::vector<Element> down_set(const Element& b) const;
    i64 down_set_size(const Element& b) const;

    // Truncations.  count_within is a closed form; enumeration throws
    // resource_limit_error when the count exceeds element_cap.
    i64 count_within(i64 bound) const;
    std::vector<Element> enumerate_within(i64 bound, i64 element_cap) const;
    void for_each_within(i64 bound, const std::function<void(const Element&)>& fn) const;

    // Axis views of the truncation shapes used by estimators.
    std::vector<Axis> down_axes(const Element& b) const;
    std::vector<Axis> horizon_axes(i64 bound) const;
    std::vector<Axis> up_axes(const Element& g, i64 bound) const;   // {a within bound : g <= a}
    // Frontier semantics: archimedean leaves (naturals/grid) take coordinates
    // <= F; divisor leaves contribute only their minimal element.  See
    // density.hpp for the rationale.
    std::vector<Axis> frontier_axes(i64 frontier_bound) const;

    i64 up_set_count(const Element& g, i64 bound) const;
    std::vector<Element> up_set_within(const Element& g, i64 bound, i64 element_cap) const;

    // Constructive upper bound of {a, b}: coordinatewise max on box leaves,
    // lcm on divisor leaves.
    Element join(const Element& a, const Element& b) const;

    // Smallest valid scalar value per coordinate position (1, or 2 on
    // divisibility-excluding-one leaves).
    std::vector<i64> min_coords() const;

    struct Node; // defined in directed_set.cpp

private:
    explicit DirectedSet(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

} // namespace netconv
