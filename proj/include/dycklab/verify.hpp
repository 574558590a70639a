#pragma once

#include "dycklab/seq.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dycklab {

struct CheckReport {
    std::string name;
    bool pass = false;
    /// Ordered label -> count pairs; golden labels compare bit-for-bit.
    std::vector<std::pair<std::string, long long>> counters;
    std::vector<std::string> notes;
    std::optional<std::string> first_failure;

    void add(const std::string& label, long long value);
    long long get(const std::string& label) const;
    std::string render() const;  // counter block plus final status line
};

/// Reads `label<TAB>count` lines; '#' starts a comment.
std::vector<std::pair<std::string, long long>> load_golden(const std::string& path);

/// Default location of the golden fixture files.
std::string default_data_dir();

/// Branch-prefix obligations for lengths 4..7 with the exact golden counters.
CheckReport residual_check(const std::string& data_dir = default_data_dir());

/// Full up/down image checks over 4 <= n <= 13 with at most seven nonzero
/// entries; golden totals and per-length generation counts.
CheckReport limited_nonzero_check(const std::string& data_dir = default_data_dir());

/// Excluded-prefix-form enumeration for 9 <= n <= 16 with the expected word
/// counts and the deficit/area contradiction on every word.
CheckReport prefix_form_check(const std::string& data_dir = default_data_dir());

struct East7Options {
    bool fast = false;   // sample the finite searches; counts not compared
    int threads = 1;
};

/// Seven-window search: regenerates the East/West window sets, threshold
/// tables, the corrected id bounds, and the gap-expanded finite search.
CheckReport east7_window_check(const std::string& data_dir = default_data_dir(),
                               East7Options options = {});

struct RoundtripBudget {
    int rowsert_entry_max = 6;
    int rowsert_len_max = 4;
    int factor_multiset_size_max = 6;
    int factor_value_max = 5;
    int phi_chain_n_max = 8;
    int window_entry_max = 6;
    int updown_n_max = 10;
    int strings_n_max = 10;
    int schur_size_max = 5;
    int schur_value_max = 4;
    int catalan_equal_n_max = 9;
    int skeleton_formula_n_max = 10;
    int partition_formula_n_max = 10;
    int symmetry_n_max = 10;

    static RoundtripBudget defaults() { return RoundtripBudget{}; }
    static RoundtripBudget tiny();
};

/// Cross-module property batteries (row insertion, tableau bijection,
/// phi-chain, East/West, up/down, strings, Schur expansions, Catalan
/// equalities) at the configured sizes.
CheckReport roundtrip_suites(const RoundtripBudget& budget = RoundtripBudget::defaults());

/// Shrinks a failing word by deleting entries and lowering values while the
/// predicate keeps failing; diagnostic helper for counterexample reports.
IntSeq shrink_counterexample(IntSeq seed, const std::function<bool(const IntSeq&)>& fails);

}  // namespace dycklab
