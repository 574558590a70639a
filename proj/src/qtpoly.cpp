#include "dycklab/qtpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace dycklab {

QtPoly QtPoly::constant(BigInt c) {
    QtPoly p;
    p.add_term(0, 0, c);
    return p;
}

QtPoly QtPoly::monomial(int qe, int te, BigInt c) {
    QtPoly p;
    p.add_term(qe, te, c);
    return p;
}

void QtPoly::add_term(int qe, int te, const BigInt& c) {
    if (c == 0) return;
    const Key key{qe, te};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QtPoly& QtPoly::operator+=(const QtPoly& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
    return *this;
}

QtPoly& QtPoly::operator-=(const QtPoly& other) {
    for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
    return *this;
}

QtPoly QtPoly::operator+(const QtPoly& other) const {
    QtPoly out(*this);
    out += other;
    return out;
}

QtPoly QtPoly::operator-(const QtPoly& other) const {
    QtPoly out(*this);
    out -= other;
    return out;
}

QtPoly QtPoly::operator*(const QtPoly& other) const {
    QtPoly out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : other.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BigInt QtPoly::coeff(int qe, int te) const {
    auto it = terms_.find(Key{qe, te});
    return it == terms_.end() ? BigInt(0) : it->second;
}

bool QtPoly::qt_symmetric() const {
    for (const auto& [key, c] : terms_)
        if (coeff(key.second, key.first) != c) return false;
    return true;
}

QtPoly QtPoly::restrict_total_degree(long long lo, long long hi) const {
    QtPoly out;
    for (const auto& [key, c] : terms_) {
        const long long deg = static_cast<long long>(key.first) + key.second;
        if (deg >= lo && deg <= hi) out.add_term(key.first, key.second, c);
    }
    return out;
}

QtPoly QtPoly::swap_qt() const {
    QtPoly out;
    for (const auto& [key, c] : terms_) out.add_term(key.second, key.first, c);
    return out;
}

std::optional<std::pair<QtPoly::Key, std::pair<BigInt, BigInt>>> QtPoly::first_difference(
    const QtPoly& other) const {
    std::vector<Key> keys;
    for (const auto& [key, c] : terms_) keys.push_back(key);
    for (const auto& [key, c] : other.terms_) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        const long long da = static_cast<long long>(a.first) + a.second;
        const long long db = static_cast<long long>(b.first) + b.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const Key& key : keys) {
        const BigInt lhs = coeff(key.first, key.second);
        const BigInt rhs = other.coeff(key.first, key.second);
        if (lhs != rhs) return std::make_pair(key, std::make_pair(lhs, rhs));
    }
    return std::nullopt;
}

std::string QtPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, BigInt>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        const long long da = static_cast<long long>(a.first.first) + a.first.second;
        const long long db = static_cast<long long>(b.first.first) + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : items) {
        BigInt mag = c;
        const bool negative = c < 0;
        if (negative) mag = -mag;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::vector<std::string> parts;
        if (mag != 1 || (key.first == 0 && key.second == 0)) parts.push_back(mag.str());
        if (key.first > 0) parts.push_back(key.first == 1 ? "q" : "q^" + std::to_string(key.first));
        if (key.second > 0) parts.push_back(key.second == 1 ? "t" : "t^" + std::to_string(key.second));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << '*';
            os << parts[i];
        }
    }
    return os.str();
}

}  // namespace dycklab
