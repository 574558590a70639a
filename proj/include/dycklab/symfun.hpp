#pragma once

#include "dycklab/insertion.hpp"
#include "dycklab/qtpoly.hpp"
#include "dycklab/seq.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dycklab {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    static Partition of(std::vector<int> parts);  // validates
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    Partition conjugate() const;
};

/// All partitions of total exactly n (n >= 0).
std::vector<Partition> partitions_of(int n);

/// Exact-integer polynomial in variables x_0..x_{N-1}, sparse exponent-vector
/// map with no stored zeros.
class TruncPoly {
public:
    using TermMap = std::map<std::vector<int>, BigInt>;

    explicit TruncPoly(int num_vars = 0) : num_vars_(num_vars) {}
    static TruncPoly constant(int num_vars, BigInt c);

    int num_vars() const { return num_vars_; }
    void add_term(const std::vector<int>& exponents, const BigInt& c);
    TruncPoly& operator+=(const TruncPoly& other);
    bool operator==(const TruncPoly& other) const;

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    BigInt coeff(const std::vector<int>& exponents) const;

    /// Exact invariance under every permutation of the variables.
    bool symmetric() const;
    std::optional<std::pair<std::vector<int>, std::pair<BigInt, BigInt>>> first_difference(
        const TruncPoly& other) const;

    /// Two-variable specialization x_0 -> q, x_1 -> t (requires num_vars <= 2).
    QtPoly to_qt() const;

    std::string str() const;

private:
    int num_vars_;
    TermMap terms_;
};

/// Schur polynomial: sum of x^{wt(Q)} over semistandard tableaux of the given
/// shape with entries in {0..N-1}.
TruncPoly schur(const Partition& lambda, int N);

enum class FactorMode { Affine, Dual };

/// Truncated Dyck symmetric function: weight sum over factorizations of the
/// multiset S into factors F_0..F_{N-1} of the stated mode with di = d.
/// Factors with index >= N are forced empty, so N = |S| already makes every
/// coefficient of total degree |S| exact (monomials never use more than |S|
/// distinct variables).
TruncPoly dyck_symmetric_function(const std::vector<int>& multiset, int d, FactorMode mode, int N);

/// All Dyck tableaux with the given entry multiset and di(RR) = d, optionally
/// restricted to at most max_cols columns.
std::vector<DyckTableau> enumerate_dyck_tableaux(const std::vector<int>& multiset, int d,
                                                 std::optional<int> max_cols = std::nullopt);

struct ExpansionReport {
    bool equal = false;
    std::size_t factorization_terms = 0;
    std::size_t schur_terms = 0;
    std::size_t tableau_count = 0;
    std::optional<std::string> first_difference;
};

/// Checks the Schur expansion of DS*/DS against the tableau sum (shape for
/// dual mode, conjugate shape for affine mode).
ExpansionReport verify_schur_expansion(const std::vector<int>& multiset, int d, int N,
                                       FactorMode mode);

struct ComplementReport {
    bool equal = false;
    std::size_t descent_sets = 0;
    std::optional<std::string> first_difference;
};

/// Expands DS and DS* over the zero-indexed fundamental basis (descent-set ->
/// multiplicity), applies the descent-complement involution, and checks that
/// the image of the dual expansion equals the affine expansion.  Also
/// cross-checks the materialized F-basis sums against both polynomials in N
/// variables.
ComplementReport fundamental_complement_check(const std::vector<int>& multiset, int d, int N);

}  // namespace dycklab
