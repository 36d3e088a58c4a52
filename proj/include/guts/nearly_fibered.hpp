#pragma once

#include <map>
#include <utility>

#include "guts/sutured.hpp"

namespace guts {

// The three guts models of nearly fibered knots:
//   M1 = solid torus with four longitudinal sutures (Type I),
//   M2 = solid torus with two sutures of winding number 2 (Type II),
//   M3 = trefoil exterior with two sutures of slope -2 (Type III).
enum class GutsModel { M1, M2, M3 };

enum class SeifertCount { Unique, ExtraIncompressibleSurface };

struct NfVerdict {
    long long handle_number = 0;  // 2 or 4
    SeifertCount seifert_surfaces = SeifertCount::Unique;
};

// Handle number and Seifert-surface count for a nearly fibered knot with
// guts of the given model.  Isolation may be asserted only for M1; the
// other models are non-isolating.
NfVerdict nearly_fibered_verdict(GutsModel model, bool isolating);

struct WhiteheadVerdict {
    GutsVerdict guts;          // Type III torus-knot-exterior guts
    long long handle_number;   // 2 or 4
    SeifertUniqueness seifert; // Unique, or Unknown when n = 0
};

// Verdict for the n-twisted Whitehead double of the (p, q) torus knot.
// The guts are the torus-knot exterior with two sutures of integer slope n;
// n = pq is the excluded degenerate case (the sutures would match an
// essential annulus).
WhiteheadVerdict whitehead_double_verdict(long long p, long long q, long long n);

// Knot Floer homology ranks indexed by (alexander, maslov) bigrading.
struct HfkTable {
    std::map<std::pair<long long, long long>, long long> ranks;  // rank >= 1
};

enum class FiberedClass { Fibered, NearlyFibered, Other };

struct HfkClassification {
    FiberedClass cls = FiberedClass::Other;
    long long top_alexander = 0;  // highest Alexander grading with nonzero rank
    long long top_rank = 0;       // total rank in that grading
};

// Rank profile of the top Alexander grading: 1 -> Fibered,
// 2 -> NearlyFibered, anything else -> Other.
HfkClassification hfk_classify(const HfkTable& t);

const char* to_string(GutsModel m);
const char* to_string(SeifertCount c);
const char* to_string(FiberedClass c);

}  // namespace guts
