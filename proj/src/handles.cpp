#include "guts/handles.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "guts/errors.hpp"

namespace guts {

namespace {

// Closure-based search needs bounded coordinates; practical inputs are tiny.
constexpr long long kMaxFact = 128;

void validate_position(const GBPosition& pos) {
    if (pos.g < 0) throw DomainError("position genus must be >= 0");
    if (pos.b < 1) throw DomainError("position bridge count must be >= 1");
    if (pos.g > kMaxFact || pos.b > kMaxFact)
        throw DomainError("position coordinates exceed the supported range");
}

// One endpoint-tracked interval.  Tags name the rule application that set
// each surviving endpoint; on an equal bound the earlier writer keeps credit.
struct TrackedInterval {
    long long lo = 0;
    std::optional<long long> hi;
    std::string lo_tag;
    std::string hi_tag;
    std::string name;
};

std::string rule_tag(const char* rule, const std::string& detail) {
    return std::string(rule) + "(" + detail + ")";
}

std::string position_tag(const GBPosition& p) {
    std::ostringstream os;
    os << "R1(g=" << p.g << ",b=" << p.b << ")";
    return os.str();
}

// Workspace for one propagate() call; rules run in a fixed order so the
// fixed point and its provenance are reproducible.
struct Workspace {
    std::vector<TrackedInterval> h;  // index n-1 for n = 1..span
    TrackedInterval h_plus;
    std::set<GBPosition> positions;
    long long span;   // largest n tracked internally (>= n_max)
    long long g_cap;  // stabilization closure cap on g
    bool changed = false;

    TrackedInterval& at(long long n) { return h[static_cast<size_t>(n - 1)]; }

    void fail(const TrackedInterval& iv) const {
        std::ostringstream os;
        os << "inconsistent facts: handle bounds for " << iv.name << " are empty; lower bound "
           << iv.lo << " from " << iv.lo_tag << " exceeds upper bound " << *iv.hi << " from "
           << iv.hi_tag;
        throw InconsistentFactsError(os.str(), iv.lo_tag, iv.hi_tag);
    }

    void raise_lo(TrackedInterval& iv, long long value, const std::string& tag) {
        if (value <= iv.lo) return;
        iv.lo = value;
        iv.lo_tag = tag;
        changed = true;
        if (iv.hi && iv.lo > *iv.hi) fail(iv);
    }

    void lower_hi(TrackedInterval& iv, long long value, const std::string& tag) {
        if (iv.hi && *iv.hi <= value) return;
        iv.hi = value;
        iv.hi_tag = tag;
        changed = true;
        if (iv.lo > *iv.hi) fail(iv);
    }

    void add_position(const GBPosition& pos) {
        if (pos.g > g_cap || pos.b > span || pos.g < 0 || pos.b < 1) return;
        if (positions.insert(pos).second) changed = true;
    }

    // R3: close the position set under both stabilizations, within the caps.
    void close_positions() {
        std::vector<GBPosition> work(positions.begin(), positions.end());
        while (!work.empty()) {
            const GBPosition pos = work.back();
            work.pop_back();
            const GBPosition up{pos.g, pos.b + 1};
            if (up.b <= span && positions.insert(up).second) {
                work.push_back(up);
                changed = true;
            }
            if (pos.b >= 2) {
                const GBPosition over{pos.g + 1, pos.b - 1};
                if (over.g <= g_cap && positions.insert(over).second) {
                    work.push_back(over);
                    changed = true;
                }
            }
        }
    }

    // R1: every known position bounds the interval at n = b.
    void apply_position_bounds() {
        for (const GBPosition& pos : positions) {
            if (pos.b > span) continue;
            const PositionBounds pb = bounds_from_position(pos);
            TrackedInterval& iv = at(pb.n);
            const std::string tag = position_tag(pos);
            raise_lo(iv, pb.lo, tag);
            lower_hi(iv, pb.hi, tag);
        }
    }

    // R2: a point interval realizes its handle number, hence a position.
    void apply_point_positions() {
        for (long long n = 1; n <= span; ++n) {
            const TrackedInterval& iv = at(n);
            if (iv.hi && *iv.hi == iv.lo) add_position(position_from_handle(iv.lo, n));
        }
    }

    // R4: adjacent suture counts differ by at most one handle pair.
    void apply_adjacent() {
        for (long long n = 1; n < span; ++n) {
            TrackedInterval& lower = at(n);
            TrackedInterval& upper = at(n + 1);
            raise_lo(upper, lower.lo, rule_tag("R4", "from n=" + std::to_string(n)));
            if (lower.hi)
                lower_hi(upper, *lower.hi + 2, rule_tag("R4", "from n=" + std::to_string(n)));
            raise_lo(lower, upper.lo - 2, rule_tag("R4", "from n=" + std::to_string(n + 1)));
            if (upper.hi)
                lower_hi(lower, *upper.hi, rule_tag("R4", "from n=" + std::to_string(n + 1)));
        }
    }

    // R5: the sutureless structure against every suture count.
    void apply_sutureless(const std::optional<long long>& tunnel_number) {
        if (tunnel_number) {
            const std::string tag = rule_tag("R5", "tunnel " + std::to_string(*tunnel_number));
            raise_lo(h_plus, 2 * *tunnel_number + 2, tag);
            lower_hi(h_plus, 2 * *tunnel_number + 2, tag);
        }
        for (long long n = 1; n <= span; ++n) {
            TrackedInterval& iv = at(n);
            if (iv.hi) lower_hi(h_plus, *iv.hi + 2, rule_tag("R5", "from n=" + std::to_string(n)));
            raise_lo(iv, h_plus.lo - 2, rule_tag("R5", "from h+"));
        }
        raise_lo(h_plus, at(1).lo, rule_tag("R5", "from n=1"));
        if (h_plus.hi) lower_hi(at(1), *h_plus.hi, rule_tag("R5", "from h+"));
    }

    // R6: the product flag decides h_1 = 0 versus h_1 >= 2.
    void apply_product_flag(const std::optional<bool>& is_product) {
        if (!is_product) return;
        if (*is_product)
            lower_hi(at(1), 0, rule_tag("R6", "product"));
        else
            raise_lo(at(1), 2, rule_tag("R6", "not a product"));
    }

    // R7: the filled manifold's Heegaard genus forces handles.
    void apply_filling_genus(const std::optional<long long>& genus) {
        if (!genus) return;
        const std::string tag = rule_tag("R7", "filling genus " + std::to_string(*genus));
        for (long long n = 1; n <= span; ++n) raise_lo(at(n), 2 * (*genus + n - 1), tag);
    }

    // R8: a handle number of 2(n-1) would yield a (0, n)-position, impossible
    // below the exact bridge number; so h_n >= 2n for n < beta.
    void apply_bridge_minimality(const std::optional<long long>& bridge_number) {
        if (!bridge_number) return;
        const std::string tag = rule_tag("R8", "bridge " + std::to_string(*bridge_number));
        const long long top = std::min(*bridge_number - 1, span);
        for (long long n = 1; n <= top; ++n) raise_lo(at(n), 2 * n, tag);
    }
};

}  // namespace

const HandleInterval& PropagationResult::at(long long n) const {
    if (n < 1 || static_cast<size_t>(n) > h.size())
        throw DomainError("suture count outside the propagated range");
    return h[static_cast<size_t>(n - 1)];
}

PositionBounds bounds_from_position(const GBPosition& pos) {
    validate_position(pos);
    return PositionBounds{pos.b, 2 * (pos.b - 1), 2 * (pos.g + pos.b - 1)};
}

GBPosition position_from_handle(long long h, long long n) {
    if (n < 1) throw DomainError("suture count must be >= 1");
    if (h < 0 || h % 2 != 0) throw DomainError("handle numbers here are non-negative and even");
    const long long g = h / 2 + 1 - n;
    if (g < 0) throw DomainError("no position: h/2 + 1 - n is negative");
    return GBPosition{g, n};
}

GBPosition stabilize_bridge(const GBPosition& pos) {
    validate_position(pos);
    return GBPosition{pos.g, pos.b + 1};
}

GBPosition stabilize_meridional(const GBPosition& pos) {
    validate_position(pos);
    if (pos.b < 2) throw DomainError("meridional stabilization needs b ≥ 2");
    return GBPosition{pos.g + 1, pos.b - 1};
}

PropagationResult propagate(const FactBase& facts, long long n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    if (n_max > kMaxFact) throw DomainError("n_max exceeds the supported range");
    if (facts.tunnel_number && (*facts.tunnel_number < 0 || *facts.tunnel_number > kMaxFact))
        throw DomainError("tunnel number out of range");
    if (facts.bridge_number && (*facts.bridge_number < 1 || *facts.bridge_number > kMaxFact))
        throw DomainError("bridge number out of range");
    if (facts.filling_genus && (*facts.filling_genus < 0 || *facts.filling_genus > kMaxFact))
        throw DomainError("filling genus out of range");

    // Asserted positions plus the ones implied by the numeric facts.
    std::set<GBPosition> seed = facts.positions;
    for (const GBPosition& pos : seed) validate_position(pos);
    if (facts.bridge_number) seed.insert(GBPosition{0, *facts.bridge_number});
    if (facts.tunnel_number) seed.insert(GBPosition{*facts.tunnel_number + 1, 1});

    Workspace ws;
    long long max_g = 0;
    long long max_b = 0;
    for (const GBPosition& pos : seed) {
        max_g = std::max(max_g, pos.g);
        max_b = std::max(max_b, pos.b);
    }
    // Track past n_max so positions with b > n_max still contribute; no rule
    // can use g above max_g + span to tighten anything (only R1 consumes
    // positions, and its upper bound degrades as g grows).
    ws.span = std::max(n_max, max_b);
    ws.g_cap = max_g + ws.span;
    ws.positions = std::move(seed);
    ws.h.resize(static_cast<size_t>(ws.span));
    for (long long n = 1; n <= ws.span; ++n) {
        TrackedInterval& iv = ws.at(n);
        iv.name = "n=" + std::to_string(n);
        // The n annuli on each side of the splitting must be joined.
        iv.lo = 2 * (n - 1);
        iv.lo_tag = "R1(base)";
    }
    ws.h_plus.name = "the sutureless structure";
    // h+ = 2*TN + 2 and tunnel numbers are non-negative.
    ws.h_plus.lo = 2;
    ws.h_plus.lo_tag = "R5(base)";

    for (int pass = 0; pass < 100000; ++pass) {
        ws.changed = false;
        ws.close_positions();
        ws.apply_position_bounds();
        ws.apply_point_positions();
        ws.apply_adjacent();
        ws.apply_sutureless(facts.tunnel_number);
        ws.apply_product_flag(facts.is_product_at_n1);
        ws.apply_filling_genus(facts.filling_genus);
        ws.apply_bridge_minimality(facts.bridge_number);
        if (!ws.changed) {
            PropagationResult result;
            result.h.reserve(static_cast<size_t>(n_max));
            for (long long n = 1; n <= n_max; ++n) {
                const TrackedInterval& iv = ws.at(n);
                HandleInterval out{iv.lo, iv.hi, {iv.lo_tag}};
                if (iv.hi && iv.hi_tag != iv.lo_tag) out.provenance.push_back(iv.hi_tag);
                result.h.push_back(std::move(out));
            }
            result.h_plus = HandleInterval{ws.h_plus.lo, ws.h_plus.hi, {ws.h_plus.lo_tag}};
            if (ws.h_plus.hi && ws.h_plus.hi_tag != ws.h_plus.lo_tag)
                result.h_plus.provenance.push_back(ws.h_plus.hi_tag);
            return result;
        }
    }
    throw std::logic_error("handle propagation failed to reach a fixed point");
}

HandleInterval solid_torus_handle(const Slope& sigma, long long n) {
    if (n < 1) throw DomainError("suture count must be >= 1");
    const Slope s = normalize(sigma.p, sigma.q);
    const long long winding = distance(s, meridian);
    if (winding == 0) throw DomainError("R(γ) compressible");

    FactBase facts;
    if (winding == 1) {
        // Longitudinal sutures: the two-suture structure is a product.
        facts.is_product_at_n1 = true;
    } else {
        // The core of the lens-space filling gives a (1,1)-position; the
        // sutured manifold itself is not a product.
        facts.positions.insert(GBPosition{1, 1});
        facts.is_product_at_n1 = false;
    }
    return propagate(facts, n).at(n);
}

HandleInterval torus_knot_handle(long long p, long long q, const Slope& sigma, long long n) {
    if (n < 1) throw DomainError("suture count must be >= 1");
    const Slope rho = regular_fiber_slope(p, q);  // validates the parameters
    const Slope s = normalize(sigma.p, sigma.q);
    const long long d = distance(s, rho);

    FactBase facts;
    facts.positions.insert(GBPosition{2, 1});  // tunnel number 1 gives a (2,1)-position
    facts.is_product_at_n1 = false;            // a knot exterior is never a product
    if (d == 1) {
        facts.positions.insert(GBPosition{1, 1});  // core of the filling
        // Distance one from the fiber slope fills to a lens space, except the
        // meridian itself which fills back to the three-sphere.
        facts.filling_genus = (s == meridian) ? 0 : 1;
    } else {
        // Small Seifert fibered space or a connected sum of two lens spaces.
        facts.filling_genus = 2;
    }
    return propagate(facts, n).at(n);
}

}  // namespace guts
