#include <doctest.h>

#include "guts/construction.hpp"
#include "guts/errors.hpp"

using guts::EulerData;
using guts::SurfaceAccounting;

TEST_CASE("the two assembled surfaces from a genus-two core piece") {
    const SurfaceAccounting s = guts::euler_accounting(EulerData{-2, -1});
    CHECK(s.chi_f == -3);
    CHECK(s.genus_f == 2);
    CHECK(s.chi_s == -5);
    CHECK(s.genus_s == 3);
}

TEST_CASE("the smallest admissible assembly") {
    const SurfaceAccounting s = guts::euler_accounting(EulerData{0, -1});
    CHECK(s.chi_f == -1);
    CHECK(s.genus_f == 1);
    CHECK(s.chi_s == -3);
    CHECK(s.genus_s == 2);
}

TEST_CASE("a disk-bounded assembly still gains genus from tripling") {
    const SurfaceAccounting s = guts::euler_accounting(EulerData{2, -1});
    CHECK(s.chi_f == 1);
    CHECK(s.genus_f == 0);
    CHECK(s.chi_s == -1);
    CHECK(s.genus_s == 1);
}

TEST_CASE("the tripled piece must have negative characteristic") {
    CHECK_THROWS_WITH_AS(guts::euler_accounting(EulerData{-2, 0}),
                         "the tripled piece has one boundary circle and is not a disk, so its "
                         "Euler characteristic must be <= -1",
                         guts::DomainError);
    CHECK_THROWS_AS(guts::euler_accounting(EulerData{-2, 1}), guts::DomainError);
}

TEST_CASE("even characteristics cannot close to a one-boundary surface") {
    CHECK_THROWS_WITH_AS(guts::euler_accounting(EulerData{-1, -1}),
                         "assembled surface is not a one-boundary Seifert surface",
                         guts::DomainError);
    CHECK_THROWS_AS(guts::euler_accounting(EulerData{3, -1}), guts::DomainError);
}

TEST_CASE("a positive assembled characteristic beyond the disk is impossible") {
    CHECK_THROWS_AS(guts::euler_accounting(EulerData{4, -1}), guts::DomainError);
}

TEST_CASE("both characteristics respond linearly to each input piece") {
    // Even chi013 with odd chi2 keeps every assembled characteristic odd,
    // and steps of 2 preserve that parity.
    for (long long chi013 = -10; chi013 <= 0; chi013 += 2)
        for (long long chi2 = -9; chi2 <= -1; chi2 += 2) {
            const SurfaceAccounting base = guts::euler_accounting(EulerData{chi013, chi2});
            const SurfaceAccounting core = guts::euler_accounting(EulerData{chi013 - 2, chi2});
            CHECK(core.chi_f == base.chi_f - 2);
            CHECK(core.chi_s == base.chi_s - 2);
            const SurfaceAccounting trip = guts::euler_accounting(EulerData{chi013, chi2 - 2});
            CHECK(trip.chi_f == base.chi_f - 2);
            CHECK(trip.chi_s == base.chi_s - 6);
        }
}

TEST_CASE("tripling always costs exactly two chi per extra copy") {
    for (long long chi013 = -10; chi013 <= 2; ++chi013)
        for (long long chi2 = -10; chi2 <= -1; ++chi2) {
            if ((chi013 + chi2) % 2 == 0) continue;  // needs odd characteristic
            if (chi013 + chi2 > 1) continue;         // beyond any one-boundary surface
            const SurfaceAccounting s = guts::euler_accounting(EulerData{chi013, chi2});
            CHECK(s.chi_s == s.chi_f + 2 * chi2);
            CHECK(s.chi_s <= s.chi_f - 2);
            CHECK(s.genus_s >= s.genus_f + 1);
            CHECK(s.chi_f == 1 - 2 * s.genus_f);
            CHECK(s.chi_s == 1 - 2 * s.genus_s);
            CHECK(s.genus_f >= 0);
        }
}
