#include "dycklab/symfun.hpp"

#include <algorithm>
#include <sstream>

namespace dycklab {

Partition Partition::of(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::domain_error("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::domain_error("partition parts must be weakly decreasing");
    }
    return Partition{std::move(parts)};
}

int Partition::size() const {
    int total = 0;
    for (int p : parts) total += p;
    return total;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts.empty()) return Partition{};
    conj.resize(static_cast<std::size_t>(parts[0]), 0);
    for (int p : parts)
        for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
    return Partition{std::move(conj)};
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{current});
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    partitions_rec(n, n, current, out);
    return out;
}

TruncPoly TruncPoly::constant(int num_vars, BigInt c) {
    TruncPoly p(num_vars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(num_vars), 0), c);
    return p;
}

void TruncPoly::add_term(const std::vector<int>& exponents, const BigInt& c) {
    if (static_cast<int>(exponents.size()) != num_vars_)
        throw std::domain_error("TruncPoly: exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& other) {
    if (other.num_vars_ != num_vars_) throw std::domain_error("TruncPoly: variable count mismatch");
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

bool TruncPoly::operator==(const TruncPoly& other) const {
    return num_vars_ == other.num_vars_ && terms_ == other.terms_;
}

BigInt TruncPoly::coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? BigInt(0) : it->second;
}

bool TruncPoly::symmetric() const {
    std::vector<int> perm(static_cast<std::size_t>(num_vars_));
    for (int i = 0; i < num_vars_; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        for (const auto& [key, c] : terms_) {
            std::vector<int> image(key.size());
            for (std::size_t i = 0; i < key.size(); ++i)
                image[static_cast<std::size_t>(perm[i])] = key[i];
            if (coeff(image) != c) return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

std::optional<std::pair<std::vector<int>, std::pair<BigInt, BigInt>>> TruncPoly::first_difference(
    const TruncPoly& other) const {
    for (const auto& [key, c] : terms_) {
        const BigInt rhs = other.coeff(key);
        if (rhs != c) return std::make_pair(key, std::make_pair(c, rhs));
    }
    for (const auto& [key, c] : other.terms_) {
        if (coeff(key) != c) return std::make_pair(key, std::make_pair(coeff(key), c));
    }
    return std::nullopt;
}

QtPoly TruncPoly::to_qt() const {
    if (num_vars_ > 2) throw std::domain_error("to_qt requires at most two variables");
    QtPoly out;
    for (const auto& [key, c] : terms_) {
        const int qe = key.empty() ? 0 : key[0];
        const int te = key.size() > 1 ? key[1] : 0;
        out.add_term(qe, te, c);
    }
    return out;
}

std::string TruncPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (c != 1) {
            os << c.str();
            printed = true;
        }
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) continue;
            if (printed) os << '*';
            os << 'x' << i;
            if (key[i] > 1) os << '^' << key[i];
            printed = true;
        }
        if (!printed) os << '1';
    }
    return os.str();
}

namespace {

void ssyt_fill(const std::vector<int>& shape, int N, std::vector<std::vector<int>>& rows,
               std::size_t r, std::size_t c, const std::function<void()>& emit) {
    if (r == shape.size()) {
        emit();
        return;
    }
    if (c == static_cast<std::size_t>(shape[r])) {
        ssyt_fill(shape, N, rows, r + 1, 0, emit);
        return;
    }
    int lo = 0;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);                    // weakly increasing rows
    if (r > 0 && c < rows[r - 1].size()) lo = std::max(lo, rows[r - 1][c] + 1);  // strict columns
    for (int v = lo; v < N; ++v) {
        rows[r][c] = v;
        ssyt_fill(shape, N, rows, r, c + 1, emit);
    }
}

}  // namespace

TruncPoly schur(const Partition& lambda, int N) {
    if (N < 1) throw std::domain_error("schur requires N >= 1");
    TruncPoly poly(N);
    const std::vector<int>& shape = lambda.parts;
    std::vector<std::vector<int>> rows;
    for (int len : shape) rows.emplace_back(static_cast<std::size_t>(len), 0);
    ssyt_fill(shape, N, rows, 0, 0, [&] {
        std::vector<int> weight(static_cast<std::size_t>(N), 0);
        for (const auto& row : rows)
            for (int v : row) ++weight[static_cast<std::size_t>(v)];
        poly.add_term(weight, 1);
    });
    return poly;
}

namespace {

std::vector<int> sorted_multiset(std::vector<int> s) {
    std::sort(s.begin(), s.end());
    return s;
}

/// Visits every distinct permutation of the multiset.
void for_each_permutation(std::vector<int> word, const std::function<void(const IntSeq&)>& visit) {
    std::sort(word.begin(), word.end());
    if (word.empty()) {
        visit(word);
        return;
    }
    do {
        visit(word);
    } while (std::next_permutation(word.begin(), word.end()));
}

/// Positions j where a factor boundary between pi_j and pi_{j+1} is forced.
std::vector<bool> forced_strict(const IntSeq& pi, FactorMode mode) {
    std::vector<bool> forced(pi.empty() ? 0 : pi.size() - 1, false);
    for (std::size_t j = 0; j + 1 < pi.size(); ++j) {
        const bool same_factor_ok =
            mode == FactorMode::Dual ? pi[j + 1] >= pi[j] + 2 : pi[j + 1] <= pi[j] + 1;
        forced[j] = !same_factor_ok;
    }
    return forced;
}

/// Adds the weights of all weakly increasing label words a_0 <= ... <= a_{n-1}
/// over {0..N-1} with strict increases on the forced set.
void add_fundamental_weights(std::size_t n, const std::vector<bool>& forced, int N,
                             TruncPoly& poly) {
    std::vector<int> weight(static_cast<std::size_t>(poly.num_vars()), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t j, int label) {
        if (j == n) {
            poly.add_term(weight, 1);
            return;
        }
        for (int a = label; a < N; ++a) {
            ++weight[static_cast<std::size_t>(a)];
            const int next_min = (j + 1 < n && forced[j]) ? a + 1 : a;
            if (j + 1 == n || next_min < N) rec(j + 1, next_min);
            --weight[static_cast<std::size_t>(a)];
        }
    };
    if (n == 0) {
        poly.add_term(weight, 1);
        return;
    }
    rec(0, 0);
}

}  // namespace

TruncPoly dyck_symmetric_function(const std::vector<int>& multiset, int d, FactorMode mode, int N) {
    if (N < 1) throw std::domain_error("dyck_symmetric_function requires N >= 1");
    TruncPoly poly(N);
    if (multiset.empty()) {
        if (d == 0) poly.add_term(std::vector<int>(static_cast<std::size_t>(N), 0), 1);
        return poly;
    }
    for_each_permutation(sorted_multiset(multiset), [&](const IntSeq& pi) {
        if (di(pi) != d) return;
        add_fundamental_weights(pi.size(), forced_strict(pi, mode), N, poly);
    });
    return poly;
}

namespace {

/// Fills tableau rows top to bottom with entries drawn from a value->count
/// pool; each row is a strictly +2-increasing word bounded below columnwise
/// by the previous row.
void fill_tableaux(const std::vector<int>& shape, std::map<int, int>& pool,
                   std::vector<IntSeq>& rows, std::size_t r,
                   const std::function<void()>& emit) {
    if (r == shape.size()) {
        emit();
        return;
    }
    const int len = shape[r];
    IntSeq& row = rows[r];
    std::function<void(int)> fill_cell = [&](int c) {
        if (c == len) {
            fill_tableaux(shape, pool, rows, r + 1, emit);
            return;
        }
        for (auto& [value, count] : pool) {
            if (count == 0) continue;
            if (c > 0 && value < row[c - 1] + 2) continue;      // dual Dyck row
            if (r > 0 && rows[r - 1][c] > value + 1) continue;  // column condition
            row[c] = value;
            --count;
            fill_cell(c + 1);
            ++count;
        }
    };
    fill_cell(0);
}

}  // namespace

std::vector<DyckTableau> enumerate_dyck_tableaux(const std::vector<int>& multiset, int d,
                                                 std::optional<int> max_cols) {
    std::vector<DyckTableau> out;
    const int n = static_cast<int>(multiset.size());
    if (n == 0) {
        if (d == 0) out.push_back(DyckTableau{});
        return out;
    }
    std::map<int, int> pool;
    for (int v : multiset) ++pool[v];
    for (const Partition& lambda : partitions_of(n)) {
        if (max_cols && !lambda.parts.empty() && lambda.parts[0] > *max_cols) continue;
        std::vector<IntSeq> rows;
        for (int len : lambda.parts) rows.emplace_back(static_cast<std::size_t>(len), 0);
        fill_tableaux(lambda.parts, pool, rows, 0, [&] {
            DyckTableau t{rows};
            if (di(row_reading_word(t)) == d) out.push_back(t);
        });
    }
    return out;
}

ExpansionReport verify_schur_expansion(const std::vector<int>& multiset, int d, int N,
                                       FactorMode mode) {
    ExpansionReport report;
    const TruncPoly lhs = dyck_symmetric_function(multiset, d, mode, N);
    TruncPoly rhs(N);
    const std::vector<DyckTableau> tableaux = enumerate_dyck_tableaux(multiset, d);
    for (const DyckTableau& t : tableaux) {
        Partition shape = Partition::of(t.shape());
        if (mode == FactorMode::Affine) shape = shape.conjugate();
        rhs += schur(shape, N);
    }
    report.factorization_terms = lhs.term_count();
    report.schur_terms = rhs.term_count();
    report.tableau_count = tableaux.size();
    report.equal = (lhs == rhs);
    if (!report.equal) {
        if (auto diff = lhs.first_difference(rhs)) {
            std::ostringstream os;
            os << "exponent (";
            for (std::size_t i = 0; i < diff->first.size(); ++i) {
                if (i) os << ',';
                os << diff->first[i];
            }
            os << "): factorization side " << diff->second.first.str() << ", Schur side "
               << diff->second.second.str();
            report.first_difference = os.str();
        }
    }
    return report;
}

ComplementReport fundamental_complement_check(const std::vector<int>& multiset, int d, int N) {
    ComplementReport report;
    const std::size_t n = multiset.size();
    if (n >= 1 && n - 1 > 31) throw std::domain_error("fundamental basis limited to short words");

    std::map<unsigned, long long> dual_expansion, affine_expansion;
    for_each_permutation(sorted_multiset(multiset), [&](const IntSeq& pi) {
        if (di(pi) != d) return;
        unsigned dual_mask = 0, affine_mask = 0;
        for (std::size_t j = 0; j + 1 < pi.size(); ++j) {
            if (pi[j + 1] <= pi[j] + 1) dual_mask |= 1u << j;    // forced strict for dual
            if (pi[j + 1] >= pi[j] + 2) affine_mask |= 1u << j;  // forced strict for affine
        }
        ++dual_expansion[dual_mask];
        ++affine_expansion[affine_mask];
    });

    const unsigned full = n <= 1 ? 0u : (1u << (n - 1)) - 1u;
    report.descent_sets = dual_expansion.size();
    std::map<unsigned, long long> complemented;
    for (const auto& [mask, count] : dual_expansion) complemented[full & ~mask] += count;
    report.equal = (complemented == affine_expansion);
    if (!report.equal) {
        for (const auto& [mask, count] : complemented) {
            auto it = affine_expansion.find(mask);
            const long long rhs = it == affine_expansion.end() ? 0 : it->second;
            if (rhs != count) {
                report.first_difference =
                    "descent set mask " + std::to_string(mask) + ": complemented dual " +
                    std::to_string(count) + ", affine " + std::to_string(rhs);
                break;
            }
        }
        if (!report.first_difference) report.first_difference = "affine expansion has extra sets";
        return report;
    }

    // Cross-check: materializing the F-basis expansions reproduces both
    // truncated polynomials.
    auto materialize = [&](const std::map<unsigned, long long>& expansion) {
        TruncPoly poly(N);
        for (const auto& [mask, count] : expansion) {
            std::vector<bool> forced(n ? n - 1 : 0, false);
            for (std::size_t j = 0; j + 1 < n; ++j) forced[j] = (mask >> j) & 1u;
            TruncPoly fnd(N);
            add_fundamental_weights(n, forced, N, fnd);
            for (const auto& [key, c] : fnd.terms()) poly.add_term(key, c * count);
        }
        return poly;
    };
    const TruncPoly dual_poly = dyck_symmetric_function(multiset, d, FactorMode::Dual, N);
    const TruncPoly affine_poly = dyck_symmetric_function(multiset, d, FactorMode::Affine, N);
    if (materialize(dual_expansion) != dual_poly) {
        report.equal = false;
        report.first_difference = "materialized dual F-expansion disagrees with DS*";
    } else if (materialize(affine_expansion) != affine_poly) {
        report.equal = false;
        report.first_difference = "materialized affine F-expansion disagrees with DS";
    }
    return report;
}

}  // namespace dycklab
