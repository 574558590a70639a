#pragma once

#include "dycklab/insertion.hpp"
#include "dycklab/qtpoly.hpp"
#include "dycklab/seq.hpp"

#include <utility>
#include <vector>

namespace dycklab {

/// Reverse [1,m] word, Dyck m-skeleton, affine [0,m-1] word.
struct Triple1 {
    IntSeq e, f, g;
    int m = 0;
    static Triple1 make(IntSeq e, IntSeq f, IntSeq g, int m);
    bool operator==(const Triple1&) const = default;
};

/// Skeleton, affine [0,m-1] word, reverse [0,m-1] word.
struct Triple2 {
    IntSeq f, g, e;
    int m = 0;
    static Triple2 make(IntSeq f, IntSeq g, IntSeq e, int m);
    bool operator==(const Triple2&) const = default;
};

/// Skeleton, affine [0,m-1] word, affine [0,m-1] word.
struct Triple3 {
    IntSeq f, g, e;
    int m = 0;
    static Triple3 make(IntSeq f, IntSeq g, IntSeq e, int m);
    bool operator==(const Triple3&) const = default;
};

/// Binary tableau with strictly increasing rows and weakly increasing
/// columns; entries in {0,1}.
struct BinaryReverseSSYT {
    std::vector<std::vector<int>> rows;
    bool operator==(const BinaryReverseSSYT&) const = default;
    std::vector<int> shape() const;
    long long ones() const;
    /// Columns left to right, each top to bottom.
    std::vector<int> column_reading() const;
};

bool is_binary_reverse_ssyt(const BinaryReverseSSYT& q);

/// Skeleton, at-most-two-column Dyck tableau with entries in [0,m-1], and a
/// binary reverse SSYT of the same shape.
struct Triple4 {
    IntSeq f;
    DyckTableau p;
    BinaryReverseSSYT q;
    int m = 0;
    static Triple4 make(IntSeq f, DyckTableau p, BinaryReverseSSYT q, int m);
    bool operator==(const Triple4&) const = default;
};

struct TripleStats {
    long long area = 0;
    long long dinv = 0;
    bool operator==(const TripleStats&) const = default;
};

TripleStats triple_stats(const Triple1& t);
TripleStats triple_stats(const Triple2& t);
TripleStats triple_stats(const Triple3& t);
TripleStats triple_stats(const Triple4& t);

/// Splits a Dyck sequence at its last maximum and extracts non-final
/// extractable entries until a skeleton remains.
Triple1 phi1(const IntSeq& d);
IntSeq phi1_inverse(const Triple1& t);

Triple2 phi2(const Triple1& t);
Triple1 phi2_inverse(const Triple2& t);

enum class TransportDirection { Forward, Backward };

/// Multiset- and di-preserving normal-form transport between reverse [0,M]
/// and affine [0,M] words (Forward: reverse -> affine).
IntSeq rank_transport(const IntSeq& x, int m, TransportDirection direction);

Triple3 phi3(const Triple2& t);
Triple2 phi3_inverse(const Triple3& t);

/// Raised if the two phi4 fibers have different cardinalities; this would
/// falsify the conjugate-shape Schur expansion and must never happen.
class FiberMismatchError : public std::logic_error {
public:
    explicit FiberMismatchError(const std::string& what) : std::logic_error(what) {}
};

/// Canonical fiber matching: the affine two-factor fiber is enumerated in
/// lexicographic order of (G,E), the tableau fiber in lexicographic order of
/// (RR(P), column reading of Q); elements are matched by rank.
Triple4 phi4(const Triple3& t);
Triple3 phi4_inverse(const Triple4& t);

Triple4 phi_chain(const IntSeq& d);
IntSeq phi_chain_inverse(const Triple4& t);

/// All pairs of a skeleton F and an at-most-two-column Dyck tableau P with
/// entries below max(F), with |F| + |P| = n, summed with the two-variable
/// Schur factor; equals brute_force_catalan(n).
QtPoly two_column_catalan(int n, int cap = 12);

/// At-most-two-column Dyck tableaux with a given number of cells and entries
/// in [0, max_value]; exposed for fiber and formula enumeration.
std::vector<DyckTableau> enumerate_two_column_tableaux(int cells, int max_value);

/// Binary reverse SSYTs of the given two-column shape.
std::vector<BinaryReverseSSYT> enumerate_binary_reverse_ssyt(const std::vector<int>& shape);

}  // namespace dycklab
