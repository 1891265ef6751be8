#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netconv {

using i64 = std::int64_t;

// A point of a directed set: a tuple of positive integer coordinates.
// Scalar families (naturals, divisibility) use arity 1; grids and products
// use the concatenation of their component coordinates.
struct Element {
    std::vector<i64> coords;

    Element() = default;
    explicit Element(i64 v) : coords{v} {}
    explicit Element(std::vector<i64> cs) : coords(std::move(cs)) {}

    int arity() const noexcept { return static_cast<int>(coords.size()); }
    i64 scalar() const { return coords.at(0); }

    bool operator==(const Element& other) const { return coords == other.coords; }
    bool operator!=(const Element& other) const { return coords != other.coords; }
    // Lexicographic order; used only for deterministic tie-breaking.
    bool operator<(const Element& other) const { return coords < other.coords; }

    // Human-readable: "7" or "(2,3,4)".
    std::string to_string() const {
        if (coords.size() == 1) return std::to_string(coords[0]);
        std::string out = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(coords[i]);
        }
        out += ")";
        return out;
    }

    // CSV-safe: coordinates joined by ':'.
    std::string csv_coords() const {
        std::string out;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out += ":";
            out += std::to_string(coords[i]);
        }
        return out;
    }
};

} // namespace netconv
