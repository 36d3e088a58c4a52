#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>

#include "guts/handles.hpp"
#include "guts/slope.hpp"

namespace guts {

struct SolidTorus {};

// Exterior of the nontrivial (p, q) torus knot; |p|, |q| >= 2, coprime.
struct TorusKnotExterior {
    long long p = 2;
    long long q = 3;
};

// Exterior of a knot the library knows nothing intrinsic about.  Every
// optional field is a caller-supplied assertion, never inferred.
struct GenericKnotExterior {
    std::string name;
    std::optional<long long> tunnel_number;          // >= 0
    std::optional<long long> bridge_number;          // bridge number in the meridional filling, >= 1
    std::optional<std::set<Slope>> annulus_slopes;   // boundary slopes of essential annuli
    std::optional<std::set<Slope>> boundary_slopes;  // boundary slopes of essential surfaces
    std::set<GBPosition> known_positions;            // positions in the meridional filling
    std::map<Slope, long long> filling_genus;        // suture slope -> Heegaard genus of that filling
};

using TorusBoundaryManifold = std::variant<SolidTorus, TorusKnotExterior, GenericKnotExterior>;

// 2n parallel annular sutures of one slope on the boundary torus.
struct AnnularSutures {
    Slope slope;
    long long n = 1;  // number of suture PAIRS; the structure has 2n sutures
};

// The sutureless structure assigning all of the boundary to R+.
struct GammaPlus {};

using SuturedStructure = std::variant<AnnularSutures, GammaPlus>;

enum class GutsType { Product, TypeI, TypeII, TypeIII, NotReduced };

struct GutsClass {
    GutsType type = GutsType::Product;
    std::string reason;  // nonempty exactly when type == NotReduced

    friend bool operator==(const GutsClass&, const GutsClass&) = default;
};

enum class Trilean { Yes, No, Unknown };
enum class Isolation { No, Possible, Unknown };
enum class SeifertUniqueness { Unique, ExtraSurface, Unknown };

// Classification of the guts plus every per-type conclusion the rules
// support: horizontal primeness, isolation, handle number, and uniqueness
// of the spanning surface.
struct GutsVerdict {
    GutsClass cls;
    Trilean ihp = Trilean::Unknown;  // incompressibly horizontally prime
    Isolation isolating = Isolation::Unknown;
    HandleInterval handle;
    SeifertUniqueness unique_seifert = SeifertUniqueness::Unknown;
};

// Case table mapping (manifold, annular sutures) to the guts class.
// Domain errors: meridional sutures on the solid torus (R(gamma) would
// compress), a sutureless structure, or a generic knot exterior whose
// essential-annulus slopes were not asserted.
GutsClass classify_guts(const TorusBoundaryManifold& m, const SuturedStructure& s);

// Full verdict for guts of Types I-III.  The caller may assert whether the
// ambient decomposition isolates the guts; an assertion that contradicts a
// non-isolation conclusion is a domain error.
GutsVerdict guts_properties(const TorusBoundaryManifold& m, const SuturedStructure& s,
                            std::optional<bool> assert_isolating = std::nullopt);

const char* to_string(GutsType t);
const char* to_string(Trilean t);
const char* to_string(Isolation i);
const char* to_string(SeifertUniqueness u);

}  // namespace guts
