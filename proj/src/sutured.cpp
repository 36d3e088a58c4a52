#include "guts/sutured.hpp"

#include <algorithm>

#include "guts/errors.hpp"

namespace guts {

namespace {

constexpr const char* kParallelAnnuli = "∂-parallel vertical annulus decomposition";
constexpr const char* kSutureAnnulus = "essential annulus of the suture slope";

// Essential-annulus boundary slopes: asserted for generic exteriors, the
// regular fiber for torus knots.
std::set<Slope> annulus_slopes_of(const TorusBoundaryManifold& m) {
    if (const auto* tk = std::get_if<TorusKnotExterior>(&m))
        return {regular_fiber_slope(tk->p, tk->q)};
    const auto& generic = std::get<GenericKnotExterior>(m);
    if (!generic.annulus_slopes) throw DomainError("annulus slopes unknown");
    return *generic.annulus_slopes;
}

// Essential-surface boundary slopes, when known.  For a torus knot these
// are the Seifert surface slope 0 and the fiber slope pq.
std::optional<std::set<Slope>> boundary_slopes_of(const TorusBoundaryManifold& m) {
    if (const auto* tk = std::get_if<TorusKnotExterior>(&m))
        return std::set<Slope>{Slope{0, 1}, regular_fiber_slope(tk->p, tk->q)};
    if (const auto* generic = std::get_if<GenericKnotExterior>(&m)) return generic->boundary_slopes;
    return std::nullopt;
}

void validate_manifold(const TorusBoundaryManifold& m) {
    if (const auto* tk = std::get_if<TorusKnotExterior>(&m))
        regular_fiber_slope(tk->p, tk->q);  // enforces |p|,|q| >= 2 and coprimality
    if (const auto* generic = std::get_if<GenericKnotExterior>(&m)) {
        if (generic->tunnel_number && *generic->tunnel_number < 0)
            throw DomainError("tunnel number must be >= 0");
        if (generic->bridge_number && *generic->bridge_number < 1)
            throw DomainError("bridge number must be >= 1");
    }
}

// Handle interval for the classified sutured manifold.
HandleInterval handle_for(const TorusBoundaryManifold& m, const Slope& sigma, long long n) {
    if (std::holds_alternative<SolidTorus>(m)) return solid_torus_handle(sigma, n);
    if (const auto* tk = std::get_if<TorusKnotExterior>(&m))
        return torus_knot_handle(tk->p, tk->q, sigma, n);

    const auto& generic = std::get<GenericKnotExterior>(m);
    FactBase facts;
    facts.tunnel_number = generic.tunnel_number;  // slope-independent
    if (sigma == meridian) {
        // Bridge data and asserted positions live in the meridional filling.
        facts.bridge_number = generic.bridge_number;
        facts.positions = generic.known_positions;
    }
    if (auto it = generic.filling_genus.find(sigma); it != generic.filling_genus.end())
        facts.filling_genus = it->second;
    facts.is_product_at_n1 = false;  // reduced guts are not a product
    return propagate(facts, n).at(n);
}

}  // namespace

GutsClass classify_guts(const TorusBoundaryManifold& m, const SuturedStructure& s) {
    validate_manifold(m);
    const auto* annular = std::get_if<AnnularSutures>(&s);
    if (!annular) throw DomainError("guts classification requires annular sutures");
    if (annular->n < 1) throw DomainError("suture count must be >= 1");
    const Slope sigma = normalize(annular->slope.p, annular->slope.q);
    const long long n = annular->n;

    if (std::holds_alternative<SolidTorus>(m)) {
        const long long winding = distance(sigma, meridian);
        if (winding == 0) throw DomainError("R(γ) compressible");
        if (winding == 1) {
            if (n == 1) return GutsClass{GutsType::Product, ""};
            if (n == 2) return GutsClass{GutsType::TypeI, ""};
            return GutsClass{GutsType::NotReduced, kParallelAnnuli};
        }
        if (n == 1) return GutsClass{GutsType::TypeII, ""};
        return GutsClass{GutsType::NotReduced, kParallelAnnuli};
    }

    if (n >= 2) return GutsClass{GutsType::NotReduced, kParallelAnnuli};
    const std::set<Slope> annuli = annulus_slopes_of(m);
    if (annuli.count(sigma)) return GutsClass{GutsType::NotReduced, kSutureAnnulus};
    return GutsClass{GutsType::TypeIII, ""};
}

GutsVerdict guts_properties(const TorusBoundaryManifold& m, const SuturedStructure& s,
                            std::optional<bool> assert_isolating) {
    GutsVerdict verdict;
    verdict.cls = classify_guts(m, s);
    if (verdict.cls.type == GutsType::Product || verdict.cls.type == GutsType::NotReduced)
        throw DomainError("guts properties require reduced guts of Types I-III");

    const auto& annular = std::get<AnnularSutures>(s);
    const Slope sigma = normalize(annular.slope.p, annular.slope.q);

    switch (verdict.cls.type) {
        case GutsType::TypeI:
            verdict.ihp = Trilean::Yes;
            verdict.isolating = Isolation::Possible;
            break;
        case GutsType::TypeII:
            verdict.ihp = Trilean::Yes;
            verdict.isolating = Isolation::No;
            break;
        case GutsType::TypeIII: {
            verdict.isolating = (sigma == meridian) ? Isolation::Possible : Isolation::No;
            const auto boundary = boundary_slopes_of(m);
            verdict.ihp =
                (boundary && !boundary->count(sigma)) ? Trilean::Yes : Trilean::Unknown;
            break;
        }
        default:
            break;
    }

    if (assert_isolating) {
        if (*assert_isolating && verdict.isolating == Isolation::No)
            throw DomainError("these guts are non-isolating; isolation cannot be asserted");
        if (!*assert_isolating) verdict.isolating = Isolation::No;
    }

    verdict.handle = handle_for(m, sigma, annular.n);

    if (verdict.ihp == Trilean::Yes && verdict.isolating == Isolation::No)
        verdict.unique_seifert = SeifertUniqueness::Unique;
    else if (verdict.cls.type == GutsType::TypeI && assert_isolating && *assert_isolating)
        verdict.unique_seifert = SeifertUniqueness::ExtraSurface;
    else
        verdict.unique_seifert = SeifertUniqueness::Unknown;

    return verdict;
}

const char* to_string(GutsType t) {
    switch (t) {
        case GutsType::Product: return "product";
        case GutsType::TypeI: return "Type I";
        case GutsType::TypeII: return "Type II";
        case GutsType::TypeIII: return "Type III";
        case GutsType::NotReduced: return "not reduced";
    }
    return "?";
}

const char* to_string(Trilean t) {
    switch (t) {
        case Trilean::Yes: return "yes";
        case Trilean::No: return "no";
        case Trilean::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(Isolation i) {
    switch (i) {
        case Isolation::No: return "no";
        case Isolation::Possible: return "possible";
        case Isolation::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(SeifertUniqueness u) {
    switch (u) {
        case SeifertUniqueness::Unique: return "unique";
        case SeifertUniqueness::ExtraSurface: return "extra_incompressible_surface";
        case SeifertUniqueness::Unknown: return "unknown";
    }
    return "?";
}

}  // namespace guts
