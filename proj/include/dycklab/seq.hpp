#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dycklab {

/// Finite zero-indexed integer sequence; the universal carrier for
/// Dyck/affine/reverse/dual words.  Entries stay well inside 32-bit range
/// for every in-scope enumeration.
using IntSeq = std::vector<int>;

/// Raised when an injection cannot be performed (missing parent value, or
/// the insertion would not produce a Dyck sequence).
class InjectionError : public std::runtime_error {
public:
    explicit InjectionError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an enumeration or polynomial request exceeds its configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

long long binom2(long long n);

// Adjacent-step predicates.  All are vacuous on the empty word.
bool is_affine(const IntSeq& s);        // s[i+1] <= s[i]+1
bool is_dual(const IntSeq& s);          // s[i+1] >= s[i]+2
bool is_reverse(const IntSeq& s);       // s[i+1] >= s[i]-1
bool is_dyck(const IntSeq& s);          // nonempty, starts at 0, nonnegative, affine
bool in_interval(const IntSeq& s, int a, int b);

struct SeqClass {
    bool affine = false;
    bool ordinary_dyck = false;
    bool dual = false;
    bool reverse = false;
    std::optional<bool> interval_ok;    // set only when bounds were supplied
};

/// Total on arbitrary integer words; the interval flag is filled only when
/// both bounds are supplied.  For a > b only the empty sequence passes.
SeqClass classify(const IntSeq& s,
                  std::optional<int> a = std::nullopt,
                  std::optional<int> b = std::nullopt);

// Pair statistics.
long long di(const IntSeq& s);          // #{i<j : s[i] = s[j]+1}
long long nv(const IntSeq& s);          // #{i<j : s[i] = s[j]}
long long dinv(const IntSeq& s);        // di + nv
long long area(const IntSeq& s);        // sum; throws std::domain_error on negative entries
long long defc(const IntSeq& s);        // C(n,2) - area - dinv; nonnegative entries required

struct Stats {
    long long area = 0;
    long long di = 0;
    long long nv = 0;
    long long dinv = 0;
    long long defc = 0;
};

Stats statistics(const IntSeq& s);

struct DeficitPairReport {
    std::vector<std::pair<int, int>> type_a;   // i<j with s[i] > s[j]+1
    std::vector<std::pair<int, int>> type_b;   // i<j with s[i] < s[j], i non-initial
    long long missing_correction = 0;
    long long pair_count() const {
        return static_cast<long long>(type_a.size() + type_b.size());
    }
};

/// Pair accounting on an arbitrary nonnegative word.  On an ordinary Dyck
/// sequence the correction vanishes and |A|+|B| equals the deficit.
DeficitPairReport deficit_pairs(const IntSeq& s);

/// Visits every ordinary Dyck sequence of length n exactly once, in the
/// fixed recursive order (each next entry ranges over 0..last+1 ascending).
void for_each_dyck(int n, const std::function<void(const IntSeq&)>& visit);
std::vector<IntSeq> enumerate_dyck(int n);

/// Leftmost eligible index in an ordinary Dyck sequence, as (index, value):
/// exactly one occurrence of value-1 to its left and a non-rising successor.
std::optional<std::pair<int, int>> find_extractable(const IntSeq& s);
/// Same selection restricted to non-final indices.
std::optional<std::pair<int, int>> find_nonfinal_extractable(const IntSeq& s);
/// Eligibility scan without the Dyck precondition, for staged intermediate
/// words (the skeleton test of the down map runs before Dyck validation).
std::optional<std::pair<int, int>> leftmost_eligible_index(const IntSeq& s);

IntSeq remove_at(const IntSeq& s, int index);

/// Inserts e immediately after the first occurrence of e-1.  Fails loudly
/// when no such occurrence exists or the result is not Dyck.
IntSeq inject(const IntSeq& s, int e);
/// Injects entries from right to left (last entry first).
IntSeq inject_right_to_left(const IntSeq& base, const IntSeq& entries);

struct SkeletonTests {
    bool full = false;                  // no extractable element at all
    bool special = false;               // full and != epsilon_n (n<4: every full)
    std::optional<int> m_skeleton;      // max(s) when last entry is the max and
                                        // no non-final extractable exists
};

SkeletonTests skeleton_tests(const IntSeq& s);
bool is_full_skeleton(const IntSeq& s);
bool is_special_skeleton(const IntSeq& s);
bool is_m_skeleton(const IntSeq& s);

IntSeq omega_word(int n);               // (0,...,0,1), n >= 2
IntSeq epsilon_word(int n);             // (0,0,1,0,...,0,1), n >= 4

/// Negated reversal; involutive and dual-Dyck preserving.
IntSeq adjoint(const IntSeq& s);

/// Lower bound P(T) - A_s(T) for the deficit of T = R:s, where R is an
/// ordinary Dyck prefix, s a nonempty reverse-Dyck suffix of the given
/// length whose final value occurs in R.  Hypothesis violations throw
/// std::domain_error.
long long suffix_corrected_bound(const IntSeq& t, int suffix_len);

}  // namespace dycklab
