#pragma once

#include "dycklab/qtpoly.hpp"
#include "dycklab/seq.hpp"
#include "dycklab/symfun.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dycklab {

/// True iff the seven entries split into three pairs with gaps >= 2 plus a
/// singleton.
bool is_far_apart(const IntSeq& window);

enum class LocalCase { Identity, C2a, C2b, C3, C4a, C4b, C4c, C4d };

struct LocalMove {
    int level = 0;                        // 3, 5, or 7
    std::optional<LocalCase> case_tag;    // empty when not applicable
    std::optional<IntSeq> output;
    bool applicable() const { return output.has_value(); }
};

/// Staged local maps.  Three- and five-entry windows may report "not
/// applicable"; a seven-entry window must be in L-form with a multiset that
/// is not far-apart decomposable, and then always produces a move.
LocalMove east(const IntSeq& window);
LocalMove west(const IntSeq& window);

/// Bare staged helpers matching the staged construction exactly.
std::optional<IntSeq> east3(const IntSeq& w);
std::optional<IntSeq> east5(const IntSeq& w);
IntSeq east7(const IntSeq& w);
std::optional<IntSeq> west3(const IntSeq& w);
std::optional<IntSeq> west5(const IntSeq& w);
IntSeq west7(const IntSeq& w);

/// Validates each Case-4 table row against the reversal pairing.
void case4_table_selfcheck();

/// Enumerates the mixed windows L(S,k) and R(S,k) by permutation filtering
/// and returns their (equal) cardinalities; inequality throws.
std::pair<long long, long long> window_count_symmetry(const std::vector<int>& multiset, int k);

struct UpDownImage {
    IntSeq word;
    int level = 0;
    bool operator==(const UpDownImage&) const = default;
};

struct StageFailure {
    std::string stage;
    std::string detail;
};

using UpDownOutcome = std::variant<UpDownImage, StageFailure>;

/// Area +1, dinv -1 partial map; outside the guaranteed domain it reports a
/// structured stage failure instead of crashing.
UpDownOutcome up(const IntSeq& x);
/// Area -1, dinv +1 partial map; inverse of up on the guaranteed domains.
UpDownOutcome down(const IntSeq& y);

/// Throwing wrappers for in-domain call sites.
UpDownImage up_checked(const IntSeq& x);
UpDownImage down_checked(const IntSeq& y);

struct StringRecord {
    IntSeq start;
    std::vector<IntSeq> chain;   // starts with `start`, areas consecutive
    std::vector<int> levels;     // one level (3/5/7) per up step
};

/// Partition of the low-area half of the (n, deficit d) slice into up-chains
/// rooted at special skeletons.  Coverage and disjointness are verified.
std::vector<StringRecord> make_strings(int n, int d);

/// Interval formula over special skeletons of deficit <= 2n-8; equals the
/// degree-restricted part of the q,t-Catalan polynomial.
QtPoly low_deficit_catalan(int n, int cap = 12);

/// Partition-indexed formula for the deficit <= n-3 part.
QtPoly partition_formula(int n);

/// The binary-skeleton <-> partition correspondence behind partition_formula.
IntSeq partition_to_special_skeleton(const Partition& lambda, int n);
Partition special_skeleton_to_partition(const IntSeq& s);

struct FlatBand {
    int d = 0;
    long long j_lo = 0;
    long long j_hi = 0;
    bool constant = false;
    BigInt value;
    bool in_remark_range = false;        // d <= 2n-8
    bool matches_skeleton_count = false; // only meaningful in the remark range
};

struct FlatMiddleReport {
    int n = 0;
    std::vector<FlatBand> bands;
    bool remark_ok = true;       // conjecture-range failures do not clear this
    bool conjecture_ok = true;
};

/// Verifies the constant middle band per deficit: asserted (throwing) in the
/// range d <= 2n-8, reported without asserting on the wider conjectural range
/// d <= floor(M/3).
FlatMiddleReport flat_middle_scan(int n, int cap = 12);

}  // namespace dycklab
