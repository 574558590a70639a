#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>

namespace dycklab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact-integer bivariate polynomial in q,t, stored sparsely as
/// (q-exponent, t-exponent) -> coefficient with no zero coefficients.
class QtPoly {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, BigInt>;

    QtPoly() = default;
    static QtPoly constant(BigInt c);
    static QtPoly monomial(int qe, int te, BigInt c = 1);

    void add_term(int qe, int te, const BigInt& c);
    QtPoly& operator+=(const QtPoly& other);
    QtPoly& operator-=(const QtPoly& other);
    QtPoly operator+(const QtPoly& other) const;
    QtPoly operator-(const QtPoly& other) const;
    QtPoly operator*(const QtPoly& other) const;

    bool operator==(const QtPoly& other) const { return terms_ == other.terms_; }

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    BigInt coeff(int qe, int te) const;

    bool qt_symmetric() const;
    /// Terms whose total degree lies in [lo, hi].
    QtPoly restrict_total_degree(long long lo, long long hi) const;
    QtPoly swap_qt() const;

    /// First (degree-sorted) term at which *this and other differ, if any.
    std::optional<std::pair<Key, std::pair<BigInt, BigInt>>> first_difference(
        const QtPoly& other) const;

    /// Rendering order: total degree descending, then q-exponent descending.
    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace dycklab
