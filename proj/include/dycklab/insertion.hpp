#pragma once

#include "dycklab/seq.hpp"

#include <string>
#include <vector>

namespace dycklab {

/// Left-aligned rows, top row first.  Rows are dual Dyck, lengths weakly
/// decrease, and adjacent columns satisfy rows[j][p] <= rows[j+1][p] + 1.
struct DyckTableau {
    std::vector<IntSeq> rows;

    bool operator==(const DyckTableau&) const = default;
    std::size_t cell_count() const;
    std::vector<int> shape() const;
};

bool is_valid_tableau(const DyckTableau& t);
/// Rows read left to right, bottom row first.
IntSeq row_reading_word(const DyckTableau& t);

/// Recording tableau with labels in {0,1,2,...}: rows weakly increase,
/// columns strictly increase.
struct RecordingTableau {
    std::vector<std::vector<int>> rows;

    bool operator==(const RecordingTableau&) const = default;
    std::vector<int> shape() const;
    /// Number of cells labelled i.
    long long content(int i) const;
};

bool is_semistandard(const RecordingTableau& q);

enum class ChainDirection { Start, End };

/// Length of the maximal +2-chain through position p, extending to the right
/// (Start) or to the left (End).
int max_chain(const IntSeq& s, int p, ChainDirection direction);

struct RowsertStep {
    int case_tag = 0;             // 0..3
    int comparison_index = -1;    // -1 for Case 0
    std::vector<int> alpha_twice;  // doubled alpha indices (half-integers exact)
};

struct RowsertTrace {
    std::vector<RowsertStep> steps;
    bool case0_used() const;
    /// Doubled alpha indices of the processed elements in written order.
    std::vector<int> alphas_in_written_order(bool reverse_processing) const;
};

struct RowsertResult {
    IntSeq evicted;
    IntSeq row;
};

/// Row insertion of a dual Dyck input through a dual Dyck row.  Traces are
/// recorded only when a trace sink is supplied.
RowsertResult rowsert(const IntSeq& row, const IntSeq& input, RowsertTrace* trace = nullptr);

struct WorsertResult {
    IntSeq row;
    IntSeq output;
};

/// Reverse row insertion; adjoint-conjugate of rowsert.
WorsertResult worsert(const IntSeq& evicted, const IntSeq& row, RowsertTrace* trace = nullptr);

/// Inserts one dual Dyck factor through the tableau rows, top to bottom.
DyckTableau tabsert(const DyckTableau& t, const IntSeq& factor);

/// Ordered list of dual Dyck factors; index i is the factor F_i.  Trailing
/// empty factors are normalized away, interior empties are preserved.
struct DualFactorization {
    std::vector<IntSeq> factors;

    bool operator==(const DualFactorization&) const = default;
    void normalize();              // drop trailing empty factors
    IntSeq concatenation() const;
    long long di_value() const;    // di of the concatenation
};

/// Raised by extract_factorization when a reverse-pass hypothesis fails;
/// the message names the failing hypothesis and carries the mutable state.
class ReverseInsertionError : public std::runtime_error {
public:
    explicit ReverseInsertionError(const std::string& what) : std::runtime_error(what) {}
};

std::pair<DyckTableau, RecordingTableau> insert_factorization(const DualFactorization& f);
DualFactorization extract_factorization(const DyckTableau& p, const RecordingTableau& q);

}  // namespace dycklab
