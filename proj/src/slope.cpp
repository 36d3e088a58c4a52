#include "guts/slope.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "guts/errors.hpp"

namespace guts {

namespace {

constexpr long long kMin = std::numeric_limits<long long>::min();

// Slopes in practice are tiny, but silent overflow is forbidden.
long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("slope arithmetic overflow");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw DomainError("slope arithmetic overflow");
    return r;
}

long long checked_neg(long long v) {
    if (v == kMin) throw DomainError("slope arithmetic overflow");
    return -v;
}

long long parse_integer(const std::string& text, const char* what) {
    long long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw SchemaError(std::string("malformed ") + what + ": '" + text + "'");
    return value;
}

}  // namespace

Slope normalize(long long p, long long q) {
    if (p == 0 && q == 0) throw DomainError("not a slope");
    if (p == kMin || q == kMin) throw DomainError("slope arithmetic overflow");
    if (q == 0) return meridian;  // every (k, 0) is the meridian class
    if (q < 0) {
        p = checked_neg(p);
        q = -q;
    }
    const long long g = std::gcd(p, q);
    return Slope{p / g, q / g};
}

long long distance(const Slope& a, const Slope& b) {
    const long long cross = checked_sub(checked_mul(a.p, b.q), checked_mul(b.p, a.q));
    return cross < 0 ? checked_neg(cross) : cross;
}

Slope regular_fiber_slope(long long p, long long q) {
    if (p == kMin || q == kMin) throw DomainError("slope arithmetic overflow");
    const long long ap = p < 0 ? -p : p;
    const long long aq = q < 0 ? -q : q;
    if (ap < 2 || aq < 2 || std::gcd(ap, aq) != 1)
        throw DomainError("not a nontrivial torus knot");
    return normalize(checked_mul(p, q), 1);
}

Slope parse_slope(const std::string& text) {
    size_t first = text.find_first_not_of(" \t");
    size_t last = text.find_last_not_of(" \t");
    if (first == std::string::npos) throw SchemaError("malformed slope: empty");
    const std::string body = text.substr(first, last - first + 1);

    if (body == "inf") return meridian;

    const size_t slash = body.find('/');
    long long p = 0;
    long long q = 1;
    if (slash == std::string::npos) {
        p = parse_integer(body, "slope");
    } else {
        p = parse_integer(body.substr(0, slash), "slope numerator");
        q = parse_integer(body.substr(slash + 1), "slope denominator");
    }
    if (p == 0 && q == 0) throw SchemaError("malformed slope: 0/0 names no slope");
    return normalize(p, q);
}

std::string to_string(const Slope& s) {
    if (s.q == 0) return "inf";
    if (s.q == 1) return std::to_string(s.p);
    return std::to_string(s.p) + "/" + std::to_string(s.q);
}

}  // namespace guts
