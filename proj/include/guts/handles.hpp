#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "guts/slope.hpp"

namespace guts {

// A (g, b)-position: the knot lies in b bridge arcs with respect to a
// genus-g Heegaard surface of the filled manifold.
struct GBPosition {
    long long g = 0;  // Heegaard genus of the splitting surface, >= 0
    long long b = 1;  // number of bridge arcs, >= 1

    friend bool operator==(const GBPosition&, const GBPosition&) = default;
    friend auto operator<=>(const GBPosition&, const GBPosition&) = default;
};

// Caller-asserted knowledge about one knot-in-filling situation.  The engine
// derives bounds only from what is asserted here; it never invents facts.
struct FactBase {
    std::set<GBPosition> positions;
    std::optional<long long> tunnel_number;  // exact tunnel number, >= 0
    std::optional<long long> bridge_number;  // exact bridge number, >= 1
    std::optional<long long> filling_genus;  // Heegaard genus of the filling, >= 0
    std::optional<bool> is_product_at_n1;    // is the one-suture-pair structure a product?
};

// Even interval of possible handle numbers.  An absent hi means unbounded.
// provenance names the propagation rules that set the surviving endpoints.
struct HandleInterval {
    long long lo = 0;
    std::optional<long long> hi;
    std::vector<std::string> provenance;

    bool is_point() const { return hi.has_value() && *hi == lo; }
    friend bool operator==(const HandleInterval& a, const HandleInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;  // provenance is commentary
    }
};

struct PropagationResult {
    std::vector<HandleInterval> h;  // h[i] is the interval for n = i + 1
    HandleInterval h_plus;          // handle number of the sutureless R+ structure

    const HandleInterval& at(long long n) const;  // 1-based, bounds-checked
};

struct PositionBounds {
    long long n;   // suture-pair count the bounds apply to (= b)
    long long lo;  // 2(b-1)
    long long hi;  // 2(g+b-1)
};

// A (g, b)-position bounds the handle number at n = b by
// 2(b-1) <= h <= 2(g+b-1).
PositionBounds bounds_from_position(const GBPosition& pos);

// Inverse direction: a realized handle number h at n suture pairs yields a
// (h/2 + 1 - n, n)-position.  h must be even with h/2 + 1 - n >= 0.
GBPosition position_from_handle(long long h, long long n);

GBPosition stabilize_bridge(const GBPosition& pos);      // (g, b) -> (g, b+1)
GBPosition stabilize_meridional(const GBPosition& pos);  // (g, b) -> (g+1, b-1), b >= 2

// Fixed-point interval narrowing over the whole rule system, for
// n = 1..n_max plus the sutureless structure.  Throws InconsistentFactsError
// when the asserted facts force an empty interval.
PropagationResult propagate(const FactBase& facts, long long n_max);

// Closed forms for the two manifolds the rule system fully understands.
HandleInterval solid_torus_handle(const Slope& sigma, long long n);
HandleInterval torus_knot_handle(long long p, long long q, const Slope& sigma, long long n);

}  // namespace guts
