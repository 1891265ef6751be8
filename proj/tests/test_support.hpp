#pragma once

// Shared helpers for the test suites: a small deterministic RNG (so every
// "random" case is reproducible from a literal seed), stateless hashing for
// pure pseudo-random functions of an index, and a handful of predicates and
// nets that several suites exercise.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "netconv/element.hpp"
#include "netconv/net.hpp"
#include "netconv/set_predicate.hpp"

namespace testsupport {

using netconv::Element;
using netconv::i64;

// splitmix64: tiny, well-mixed, and good enough for generating fixtures.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi], inclusive.
    i64 range(i64 lo, i64 hi) {
        return lo + static_cast<i64>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Stateless finalizer for pure hash functions of an index element.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_element(std::uint64_t seed, const Element& e) {
    std::uint64_t h = mix64(seed ^ 0x243f6a8885a308d3ULL);
    for (i64 c : e.coords) h = mix64(h ^ static_cast<std::uint64_t>(c));
    return h;
}

// Pure pseudo-random value in [0, 1), a deterministic function of (seed, e).
inline double hash_unit(std::uint64_t seed, const Element& e) {
    return static_cast<double>(hash_element(seed, e) >> 11) * 0x1.0p-53;
}

inline bool is_square(i64 n) {
    i64 r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(n))));
    for (i64 c = r - 2; c <= r + 2; ++c)
        if (c >= 0 && c * c == n) return true;
    return false;
}

inline netconv::SetPredicate evens() {
    return netconv::SetPredicate::from_fn(
        [](const Element& e) { return e.scalar() % 2 == 0; },
        netconv::AnalyticDensity::value(0.5));
}

inline netconv::SetPredicate odds() {
    return netconv::SetPredicate::from_fn([](const Element& e) { return e.scalar() % 2 == 1; });
}

inline netconv::SetPredicate multiples_of(i64 k) {
    return netconv::SetPredicate::from_fn(
        [k](const Element& e) { return e.scalar() % k == 0; });
}

inline netconv::SetPredicate squares() {
    return netconv::SetPredicate::from_fn([](const Element& e) { return is_square(e.scalar()); },
                                          netconv::AnalyticDensity::value(0.0));
}

// All coordinates equal, in any arity.
inline netconv::SetPredicate diagonal() {
    return netconv::SetPredicate::from_fn(
        [](const Element& e) {
            for (i64 c : e.coords)
                if (c != e.coords[0]) return false;
            return true;
        },
        netconv::AnalyticDensity::value(0.0));
}

// A hash-thresholded subset: member iff hash_unit < threshold.  Pure, works
// on every family, and has no structure the counting layers could exploit.
inline netconv::SetPredicate random_set(std::uint64_t seed, double threshold) {
    return netconv::SetPredicate::from_fn(
        [seed, threshold](const Element& e) { return hash_unit(seed, e) < threshold; });
}

// --- Nets used across suites --------------------------------------------------

inline netconv::Net harmonic(const netconv::DirectedSet& ds) {
    return netconv::Net::scalar(
        ds, [](const Element& e) { return 1.0 / static_cast<double>(e.scalar()); });
}

inline netconv::Net alternating(const netconv::DirectedSet& ds) {
    return netconv::Net::scalar(
        ds, [](const Element& e) { return e.scalar() % 2 == 0 ? 1.0 : -1.0; });
}

// 1 on perfect squares, 1/n elsewhere: ordinary divergence, statistical
// convergence to 0.
inline netconv::Net square_perturbed(const netconv::DirectedSet& ds) {
    return netconv::Net::scalar(ds, [](const Element& e) {
        i64 n = e.scalar();
        return is_square(n) ? 1.0 : 1.0 / static_cast<double>(n);
    });
}

// A bounded pure-noise net: values are hash_unit(seed, e).  Bounded by
// construction and reproducible, which is what the estimator-equivalence
// checks need.
inline netconv::Net noise_net(const netconv::DirectedSet& ds, std::uint64_t seed) {
    return netconv::Net::scalar(
        ds, [seed](const Element& e) { return hash_unit(seed, e); });
}

} // namespace testsupport
