#pragma once

namespace guts {

// Euler characteristics of the building blocks of the two assembled Seifert
// surfaces: chi_f013 is the total characteristic of the pieces each assembly
// uses once; chi_f2 is the characteristic of the piece the smaller surface
// uses once and the larger surface uses three times (the connecting annuli
// have characteristic zero).
struct EulerData {
    long long chi_f013 = 0;
    long long chi_f2 = -1;  // one boundary component and not a disk: <= -1
};

struct SurfaceAccounting {
    long long chi_f;    // characteristic of the assembled minimal-side surface F
    long long chi_s;    // characteristic of the assembled larger surface S
    long long genus_f;  // (1 - chi_f) / 2
    long long genus_s;  // (1 - chi_s) / 2
};

// chi(F) = chi_f013 + chi_f2 and chi(S) = chi_f013 + 3*chi_f2.  Both
// assembled surfaces are connected with one boundary circle, so both
// characteristics must be odd (chi = 1 - 2g); guarantees
// chi_s <= chi_f - 2 and genus_s > genus_f.
SurfaceAccounting euler_accounting(const EulerData& d);

}  // namespace guts
