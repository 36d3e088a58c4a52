#include "guts/construction.hpp"

#include "guts/errors.hpp"

namespace guts {

namespace {

bool is_odd(long long v) {
    return v % 2 != 0;
}

}  // namespace

SurfaceAccounting euler_accounting(const EulerData& d) {
    if (d.chi_f2 > -1)
        throw DomainError("the tripled piece has one boundary circle and is not a disk, "
                          "so its Euler characteristic must be <= -1");

    SurfaceAccounting out{};
    out.chi_f = d.chi_f013 + d.chi_f2;
    out.chi_s = d.chi_f013 + 3 * d.chi_f2;
    // chi = 1 - 2g for a connected surface with one boundary circle.
    if (!is_odd(out.chi_f) || !is_odd(out.chi_s))
        throw DomainError("assembled surface is not a one-boundary Seifert surface");
    out.genus_f = (1 - out.chi_f) / 2;
    out.genus_s = (1 - out.chi_s) / 2;
    if (out.genus_f < 0)
        throw DomainError("assembled surface is not a one-boundary Seifert surface");
    return out;
}

}  // namespace guts
