// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit on any
// failure.  Each criterion is independent; all run even after a failure.
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "guts/construction.hpp"
#include "guts/errors.hpp"
#include "guts/handles.hpp"
#include "guts/nearly_fibered.hpp"
#include "guts/slope.hpp"
#include "guts/sutured.hpp"
#include "support/oracle.hpp"
#include "support/random_facts.hpp"
#include "support/run_cli.hpp"

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("unexpected exception: ") + e.what();
    }
    if (ok) {
        std::cout << "PASS  " << name << "\n";
    } else {
        ++failures;
        std::cout << "FAIL  " << name << (detail.empty() ? "" : "  [" + detail + "]") << "\n";
    }
}

bool is_point(const guts::HandleInterval& iv, long long v) {
    return iv.lo == v && iv.hi && *iv.hi == v;
}

bool expect_point(const guts::HandleInterval& iv, long long v, const std::string& where,
                  std::string& detail) {
    if (is_point(iv, v)) return true;
    std::ostringstream msg;
    msg << where << ": expected [" << v << ", " << v << "], got [" << iv.lo << ", ";
    if (iv.hi)
        msg << *iv.hi;
    else
        msg << "inf";
    msg << "]";
    detail = msg.str();
    return false;
}

// The four displayed handle-number tables, n = 1..10, as point intervals.
bool bridge_tables(std::string& detail) {
    struct Row {
        guts::FactBase facts;
        std::vector<long long> h;  // values for n = 1..10
        long long h_plus;
        const char* name;
    };
    std::vector<Row> rows(4);

    rows[0].facts.bridge_number = 1;
    rows[0].name = "one-bridge";
    rows[0].h_plus = 2;
    for (long long n = 1; n <= 10; ++n) rows[0].h.push_back(2 * (n - 1));

    rows[1].facts.bridge_number = 2;
    rows[1].facts.tunnel_number = 1;
    rows[1].name = "two-bridge";
    rows[1].h_plus = 4;
    rows[1].h = {2, 2, 4, 6, 8, 10, 12, 14, 16, 18};

    rows[2].facts.bridge_number = 3;
    rows[2].facts.tunnel_number = 1;
    rows[2].facts.positions.insert(guts::GBPosition{1, 1});
    rows[2].name = "three-bridge with a (1,1)-position";
    rows[2].h_plus = 4;
    rows[2].h = {2, 4, 4, 6, 8, 10, 12, 14, 16, 18};

    rows[3].facts.bridge_number = 3;
    rows[3].facts.tunnel_number = 2;
    rows[3].name = "three-bridge, tunnel number two";
    rows[3].h_plus = 6;
    rows[3].h = {4, 4, 4, 6, 8, 10, 12, 14, 16, 18};

    for (const Row& row : rows) {
        const guts::PropagationResult r = guts::propagate(row.facts, 10);
        for (long long n = 1; n <= 10; ++n)
            if (!expect_point(r.at(n), row.h[static_cast<size_t>(n - 1)],
                              std::string(row.name) + " h_" + std::to_string(n), detail))
                return false;
        if (!expect_point(r.h_plus, row.h_plus, std::string(row.name) + " h_+", detail))
            return false;
    }
    return true;
}

bool trefoil_third_model(std::string& detail) {
    const guts::HandleInterval iv = guts::torus_knot_handle(2, 3, guts::Slope{-2, 1}, 1);
    if (!expect_point(iv, 4, "trefoil exterior at slope -2", detail)) return false;
    const guts::NfVerdict v = guts::nearly_fibered_verdict(guts::GutsModel::M3, false);
    if (v.handle_number != 4 || v.seifert_surfaces != guts::SeifertCount::Unique) {
        detail = "model M3 verdict is not (4, unique)";
        return false;
    }
    return true;
}

bool torus_knot_dichotomy(std::string& detail) {
    const long long params[3][2] = {{2, 3}, {2, 5}, {3, 4}};
    for (const auto& pq : params) {
        const long long fiber = pq[0] * pq[1];
        for (long long n = -20; n <= 20; ++n) {
            const long long want = (n - fiber == 1 || fiber - n == 1) ? 2 : 4;
            const guts::HandleInterval iv =
                guts::torus_knot_handle(pq[0], pq[1], guts::Slope{n, 1}, 1);
            std::ostringstream where;
            where << "(" << pq[0] << "," << pq[1] << ") slope " << n;
            if (!expect_point(iv, want, where.str(), detail)) return false;
        }
    }
    return true;
}

bool whitehead_classifier(std::string& detail) {
    for (long long n = -10; n <= 10; ++n) {
        if (n == 6) {
            try {
                guts::whitehead_double_verdict(2, 3, n);
                detail = "twist 6 was not rejected";
                return false;
            } catch (const guts::DomainError&) {
                continue;
            }
        }
        const guts::WhiteheadVerdict v = guts::whitehead_double_verdict(2, 3, n);
        const long long want = (n == 5 || n == 7) ? 2 : 4;
        if (v.handle_number != want) {
            detail = "twist " + std::to_string(n) + ": handle number " +
                     std::to_string(v.handle_number) + ", wanted " + std::to_string(want);
            return false;
        }
        const guts::SeifertUniqueness want_seifert =
            n == 0 ? guts::SeifertUniqueness::Unknown : guts::SeifertUniqueness::Unique;
        if (v.seifert != want_seifert) {
            detail = "twist " + std::to_string(n) + ": wrong uniqueness verdict";
            return false;
        }
    }
    return true;
}

bool guts_trichotomy(std::string& detail) {
    using guts::GutsType;
    auto check = [&detail](const guts::TorusBoundaryManifold& m, const guts::Slope& s,
                           long long n, GutsType want, const char* where) {
        const guts::GutsClass got = guts::classify_guts(m, guts::AnnularSutures{s, n});
        if (got.type == want) return true;
        detail = std::string(where) + ": got " + guts::to_string(got.type) + ", wanted " +
                 guts::to_string(want);
        return false;
    };

    // Solid torus: every slope of winding number 1, 2, 3 in a small window.
    for (long long p = -3; p <= 3; ++p)
        for (long long q = 1; q <= 3; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const guts::Slope s{p, q};
            const long long winding = guts::distance(s, guts::meridian);
            if (winding < 1 || winding > 3) continue;
            for (long long n = 1; n <= 3; ++n) {
                GutsType want;
                if (winding == 1)
                    want = n == 1 ? GutsType::Product
                                  : (n == 2 ? GutsType::TypeI : GutsType::NotReduced);
                else
                    want = n == 1 ? GutsType::TypeII : GutsType::NotReduced;
                if (!check(guts::SolidTorus{}, s, n, want, "solid torus")) return false;
            }
        }

    // Torus-knot exteriors over integer slopes.
    const long long params[3][2] = {{2, 3}, {2, 5}, {3, 4}};
    for (const auto& pq : params) {
        const guts::TorusKnotExterior knot{pq[0], pq[1]};
        const long long fiber = pq[0] * pq[1];
        for (long long k = -20; k <= 20; ++k) {
            const GutsType want_n1 = k == fiber ? GutsType::NotReduced : GutsType::TypeIII;
            if (!check(knot, guts::Slope{k, 1}, 1, want_n1, "torus knot, one pair")) return false;
            if (!check(knot, guts::Slope{k, 1}, 2, GutsType::NotReduced, "torus knot, two pairs"))
                return false;
        }
    }
    return true;
}

bool oracle_equivalence(std::string& detail) {
    std::mt19937_64 rng(20240930);
    std::uniform_int_distribution<long long> nmax_dist(1, 6);
    int consistent_runs = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const guts::FactBase facts = testsupport::random_facts(rng);
        const long long n_max = nmax_dist(rng);

        bool engine_consistent = true;
        guts::PropagationResult engine;
        try {
            engine = guts::propagate(facts, n_max);
        } catch (const guts::InconsistentFactsError&) {
            engine_consistent = false;
        }
        const testsupport::OracleResult oracle = testsupport::oracle_propagate(facts, n_max);
        if (engine_consistent != oracle.consistent) {
            detail = "trial " + std::to_string(trial) + ": consistency verdicts differ";
            return false;
        }
        if (!engine_consistent) continue;
        ++consistent_runs;
        for (long long n = 1; n <= n_max; ++n) {
            const guts::HandleInterval& iv = engine.at(n);
            const testsupport::OracleInterval& ov = oracle.h[static_cast<size_t>(n - 1)];
            if (iv.lo != ov.first || iv.hi != ov.second) {
                detail = "trial " + std::to_string(trial) + ": mismatch at n = " +
                         std::to_string(n);
                return false;
            }
        }
        if (engine.h_plus.lo != oracle.h_plus.first || engine.h_plus.hi != oracle.h_plus.second) {
            detail = "trial " + std::to_string(trial) + ": sutureless mismatch";
            return false;
        }
    }
    if (consistent_runs < 100) {
        detail = "only " + std::to_string(consistent_runs) + " consistent runs";
        return false;
    }
    return true;
}

bool interval_properties(std::string& detail) {
    std::mt19937_64 rng(20241001);
    std::uniform_int_distribution<long long> g_dist(0, 5), b_dist(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const guts::FactBase facts = testsupport::random_facts(rng);
        guts::PropagationResult r;
        try {
            r = guts::propagate(facts, 6);
        } catch (const guts::InconsistentFactsError&) {
            continue;
        }
        for (long long n = 1; n <= 6; ++n) {
            const guts::HandleInterval& iv = r.at(n);
            if (iv.lo % 2 != 0 || (iv.hi && (*iv.hi % 2 != 0 || iv.lo > *iv.hi))) {
                detail = "evenness or emptiness violated at n = " + std::to_string(n);
                return false;
            }
        }
        for (long long n = 1; n < 6; ++n) {
            const guts::HandleInterval& a = r.at(n);
            const guts::HandleInterval& b = r.at(n + 1);
            if ((a.hi && b.lo > *a.hi + 2) || (b.hi && a.lo > *b.hi)) {
                detail = "adjacent-n consistency violated at n = " + std::to_string(n);
                return false;
            }
        }

        // Fact-monotonicity: one extra asserted position never widens anything.
        guts::FactBase enriched = facts;
        enriched.positions.insert(guts::GBPosition{g_dist(rng), b_dist(rng)});
        guts::PropagationResult tighter;
        try {
            tighter = guts::propagate(enriched, 6);
        } catch (const guts::InconsistentFactsError&) {
            continue;
        }
        for (long long n = 1; n <= 6; ++n) {
            const guts::HandleInterval& wide = r.at(n);
            const guts::HandleInterval& tight = tighter.at(n);
            const bool widened =
                tight.lo < wide.lo || (wide.hi && (!tight.hi || *tight.hi > *wide.hi));
            if (widened) {
                detail = "adding a fact widened n = " + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool euler_inequalities(std::string& detail) {
    for (long long chi013 = -10; chi013 <= 2; ++chi013)
        for (long long chi2 = -10; chi2 <= -1; ++chi2) {
            if ((chi013 + chi2) % 2 == 0) continue;
            const guts::SurfaceAccounting s =
                guts::euler_accounting(guts::EulerData{chi013, chi2});
            if (!(s.chi_s <= s.chi_f - 2) || !(s.genus_s >= s.genus_f + 1)) {
                detail = "inequalities fail at chi_f013 = " + std::to_string(chi013) +
                         ", chi_f2 = " + std::to_string(chi2);
                return false;
            }
        }
    return true;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

bool cli_golden(std::string& detail) {
    const std::string golden_dir = std::string(REPO_ROOT) + "/tests/golden";
    struct Case {
        std::string args;
        int exit_code;
        std::string golden;
    };
    const std::vector<Case> cases = {
        {"whitehead --p 2 --q 3 --n 5 --json", 0, "whitehead_twist5.json"},
        {"classify --manifold solid-torus --slope 0/1 --n 2", 0, "classify_solid_torus_n2.txt"},
        {"whitehead --p 2 --q 3 --n 6", 1, "whitehead_twist6.err"},
        {"propagate --facts '" + golden_dir + "/two_bridge_facts.json' --n-max 4 --json", 0,
         "propagate_two_bridge.json"},
    };
    for (const Case& c : cases) {
        std::string expected;
        if (!read_file(golden_dir + "/" + c.golden, expected)) {
            detail = "missing golden file " + c.golden;
            return false;
        }
        for (int run = 1; run <= 2; ++run) {
            const testsupport::CliResult result = testsupport::run_cli(GUTSCALC_BIN, c.args);
            const std::string& actual = c.exit_code == 0 ? result.out : result.err;
            if (result.exit_code != c.exit_code || actual != expected) {
                detail = "case '" + c.args + "' diverged on run " + std::to_string(run);
                return false;
            }
        }
    }
    return true;
}

// The stored invariants were computed with external software; this artifact
// asserts the exact file bytes and never recomputes them.
bool fixture_checksum(std::string& detail) {
    std::string bytes;
    if (!read_file(std::string(REPO_ROOT) + "/fixtures/sixteen_crossing_invariants.json",
                   bytes)) {
        detail = "fixture file missing";
        return false;
    }
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    const std::uint64_t expected = 0xed8cc82181c1e36cULL;
    if (h != expected) {
        std::ostringstream msg;
        msg << "checksum 0x" << std::hex << h << ", expected 0x" << expected;
        detail = msg.str();
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion("bridge-knot handle tables, n = 1..10", bridge_tables);
    criterion("trefoil third-model guts: handle number four", trefoil_third_model);
    criterion("torus-knot handle dichotomy, integer slopes -20..20", torus_knot_dichotomy);
    criterion("Whitehead double classifier, twists -10..10", whitehead_classifier);
    criterion("guts trichotomy grid", guts_trichotomy);
    criterion("oracle equivalence on randomized fact bases", oracle_equivalence);
    criterion("interval consistency properties", interval_properties);
    criterion("Euler accounting inequalities", euler_inequalities);
    criterion("CLI golden outputs, byte-identical across runs", cli_golden);
    criterion("stored invariants fixture matches its checksum", fixture_checksum);

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
