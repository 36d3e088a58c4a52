#pragma once

#include <compare>
#include <string>

namespace guts {

// A slope on the boundary torus: the isotopy class of the primitive curve
// p*mu + q*lambda in (meridian, preferred longitude) coordinates.
//
// Normal form: q >= 0, gcd(|p|, q) = 1, and q = 0 forces p = 1, so the
// meridian / infinity slope is exactly (1, 0).  Two slopes are equal iff
// they are field-wise equal.
struct Slope {
    long long p = 1;
    long long q = 0;

    friend bool operator==(const Slope&, const Slope&) = default;
    friend auto operator<=>(const Slope&, const Slope&) = default;
};

inline constexpr Slope meridian{1, 0};

// Canonical representative of p/q: sign pushed into p, gcd divided out,
// every (k, 0) collapsed to (1, 0).  (0, 0) names no slope.
Slope normalize(long long p, long long q);

// Geometric intersection number of two slopes: |p_a q_b - p_b q_a|.
// Symmetric; zero iff the slopes are equal (both in normal form).
long long distance(const Slope& a, const Slope& b);

// Boundary slope (p*q, 1) of the Seifert fibration of the (p, q) torus-knot
// exterior.  Requires |p|, |q| >= 2 and gcd(|p|, |q|) = 1.
Slope regular_fiber_slope(long long p, long long q);

// Text forms: "p/q", a bare integer "p" (meaning p/1), or "inf" (the
// meridian 1/0).  A negative denominator is accepted and normalized away.
// Throws SchemaError on malformed text.
Slope parse_slope(const std::string& text);

// Renders "inf" for the meridian, "p" for integer slopes, "p/q" otherwise.
std::string to_string(const Slope& s);

}  // namespace guts
