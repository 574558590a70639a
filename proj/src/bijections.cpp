#include "dycklab/bijections.hpp"

#include "dycklab/symfun.hpp"
#include "dycklab/text.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace dycklab {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::domain_error(message);
}

bool skeleton_with_max(const IntSeq& f, int m) {
    return is_m_skeleton(f) && f.back() == m;
}

}  // namespace

Triple1 Triple1::make(IntSeq e, IntSeq f, IntSeq g, int m) {
    require(skeleton_with_max(f, m), "Triple1: F must be a Dyck m-skeleton");
    require(is_reverse(e) && in_interval(e, 1, m), "Triple1: E must be reverse [1,m] Dyck");
    require(is_affine(g) && in_interval(g, 0, m - 1), "Triple1: G must be affine [0,m-1] Dyck");
    return Triple1{std::move(e), std::move(f), std::move(g), m};
}

Triple2 Triple2::make(IntSeq f, IntSeq g, IntSeq e, int m) {
    require(skeleton_with_max(f, m), "Triple2: F must be a Dyck m-skeleton");
    require(is_affine(g) && in_interval(g, 0, m - 1), "Triple2: G must be affine [0,m-1] Dyck");
    require(is_reverse(e) && in_interval(e, 0, m - 1), "Triple2: E must be reverse [0,m-1] Dyck");
    return Triple2{std::move(f), std::move(g), std::move(e), m};
}

Triple3 Triple3::make(IntSeq f, IntSeq g, IntSeq e, int m) {
    require(skeleton_with_max(f, m), "Triple3: F must be a Dyck m-skeleton");
    require(is_affine(g) && in_interval(g, 0, m - 1), "Triple3: G must be affine [0,m-1] Dyck");
    require(is_affine(e) && in_interval(e, 0, m - 1), "Triple3: E must be affine [0,m-1] Dyck");
    return Triple3{std::move(f), std::move(g), std::move(e), m};
}

std::vector<int> BinaryReverseSSYT::shape() const {
    std::vector<int> s;
    for (const auto& row : rows) s.push_back(static_cast<int>(row.size()));
    return s;
}

long long BinaryReverseSSYT::ones() const {
    long long count = 0;
    for (const auto& row : rows)
        for (int v : row) count += v;
    return count;
}

std::vector<int> BinaryReverseSSYT::column_reading() const {
    std::vector<int> out;
    for (std::size_t c = 0;; ++c) {
        bool any = false;
        for (const auto& row : rows) {
            if (c < row.size()) {
                out.push_back(row[c]);
                any = true;
            }
        }
        if (!any) break;
    }
    return out;
}

bool is_binary_reverse_ssyt(const BinaryReverseSSYT& q) {
    for (std::size_t j = 0; j < q.rows.size(); ++j) {
        const auto& row = q.rows[j];
        if (row.empty()) return false;
        for (int v : row)
            if (v != 0 && v != 1) return false;
        for (std::size_t p = 0; p + 1 < row.size(); ++p)
            if (row[p] >= row[p + 1]) return false;
        if (j + 1 < q.rows.size()) {
            const auto& below = q.rows[j + 1];
            if (row.size() < below.size()) return false;
            for (std::size_t p = 0; p < below.size(); ++p)
                if (row[p] > below[p]) return false;
        }
    }
    return true;
}

Triple4 Triple4::make(IntSeq f, DyckTableau p, BinaryReverseSSYT q, int m) {
    require(skeleton_with_max(f, m), "Triple4: F must be a Dyck m-skeleton");
    require(is_valid_tableau(p), "Triple4: P must be a valid Dyck tableau");
    for (const IntSeq& row : p.rows) {
        require(row.size() <= 2, "Triple4: P must have at most two columns");
        require(in_interval(row, 0, m - 1), "Triple4: P entries must lie in [0,m-1]");
    }
    require(is_binary_reverse_ssyt(q) || q.rows.empty(),
            "Triple4: Q must be a binary reverse SSYT");
    require(p.shape() == q.shape(), "Triple4: P and Q must have the same shape");
    return Triple4{std::move(f), std::move(p), std::move(q), m};
}

namespace {

IntSeq concat(const IntSeq& a, const IntSeq& b, const IntSeq& c = {}) {
    IntSeq out(a);
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

}  // namespace

TripleStats triple_stats(const Triple1& t) {
    const IntSeq word = concat(t.e, t.f, t.g);
    return TripleStats{area(word), dinv(word) - static_cast<long long>(t.e.size())};
}

TripleStats triple_stats(const Triple2& t) {
    const IntSeq word = concat(t.f, t.g, t.e);
    return TripleStats{area(word) + static_cast<long long>(t.e.size()),
                       dinv(word) - static_cast<long long>(t.e.size())};
}

TripleStats triple_stats(const Triple3& t) {
    const IntSeq word = concat(t.f, t.g, t.e);
    return TripleStats{area(word) + static_cast<long long>(t.e.size()),
                       dinv(word) - static_cast<long long>(t.e.size())};
}

TripleStats triple_stats(const Triple4& t) {
    const IntSeq word = concat(t.f, row_reading_word(t.p));
    const long long ones = t.q.ones();
    return TripleStats{area(word) + ones, dinv(word) - ones};
}

Triple1 phi1(const IntSeq& d) {
    require(is_dyck(d), "phi1 requires an ordinary Dyck sequence");
    const int m = *std::max_element(d.begin(), d.end());
    int split = -1;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
        if (d[i] == m) {
            split = i;
            break;
        }
    }
    IntSeq prefix(d.begin(), d.begin() + split + 1);
    IntSeq g(d.begin() + split + 1, d.end());
    IntSeq e;
    while (auto hit = find_extractable(prefix)) {
        const auto [index, value] = *hit;
        if (index == static_cast<int>(prefix.size()) - 1) break;
        e.push_back(value);
        prefix = remove_at(prefix, index);
    }
    return Triple1::make(std::move(e), std::move(prefix), std::move(g), m);
}

IntSeq phi1_inverse(const Triple1& t) {
    IntSeq word(t.f);
    for (auto it = t.e.rbegin(); it != t.e.rend(); ++it) word = inject(word, *it);
    word.insert(word.end(), t.g.begin(), t.g.end());
    return word;
}

Triple2 phi2(const Triple1& t) {
    IntSeq shifted(t.e);
    for (int& x : shifted) --x;
    return Triple2::make(t.f, t.g, std::move(shifted), t.m);
}

Triple1 phi2_inverse(const Triple2& t) {
    IntSeq raised(t.e);
    for (int& x : raised) ++x;
    return Triple1::make(std::move(raised), t.f, t.g, t.m);
}

namespace {

/// Deletes every entry equal to k+1 and records the {k,k+1} subword.
std::pair<IntSeq, IntSeq> delete_level(const IntSeq& word, int k) {
    IntSeq remaining, pattern;
    for (int v : word) {
        if (v == k || v == k + 1) pattern.push_back(v);
        if (v != k + 1) remaining.push_back(v);
    }
    return {std::move(remaining), std::move(pattern)};
}

/// Inserts the k+1 occurrences of `pattern` with the affine leftmost rule.
IntSeq insert_level_affine(IntSeq word, const IntSeq& pattern, int k) {
    int rank = 0;           // number of k's seen so far in the pattern
    int last_insert = -1;   // index of the previously inserted k+1
    for (int symbol : pattern) {
        if (symbol == k) {
            ++rank;
            continue;
        }
        int seen = 0;
        int idx = static_cast<int>(word.size());
        for (int i = 0; i <= static_cast<int>(word.size()); ++i) {
            if (seen == rank && i > last_insert) {
                idx = i;
                break;
            }
            if (i < static_cast<int>(word.size()) && word[i] == k) ++seen;
        }
        word.insert(word.begin() + idx, k + 1);
        last_insert = idx;
    }
    return word;
}

/// Inserts the k+1 occurrences of `pattern` with the reverse rightmost rule.
IntSeq insert_level_reverse(IntSeq word, const IntSeq& pattern, int k) {
    std::vector<int> ranks;
    int rank = 0;
    for (int symbol : pattern) {
        if (symbol == k) {
            ++rank;
        } else {
            ranks.push_back(rank);
        }
    }
    int bound = static_cast<int>(word.size());  // insertion must be <= bound
    for (auto it = ranks.rbegin(); it != ranks.rend(); ++it) {
        const int r = *it;
        // Rightmost index with exactly r k's before it, at most `bound`.
        int idx = 0;
        int seen = 0;
        for (int i = 0; i <= static_cast<int>(word.size()); ++i) {
            if (seen == r && i <= bound) idx = i;
            if (i < static_cast<int>(word.size()) && word[i] == k) {
                ++seen;
                if (seen > r) break;
            }
        }
        word.insert(word.begin() + idx, k + 1);
        bound = idx;
    }
    return word;
}

}  // namespace

IntSeq rank_transport(const IntSeq& x, int m, TransportDirection direction) {
    require(in_interval(x, 0, m), "rank_transport requires entries in [0,M]");
    if (direction == TransportDirection::Forward)
        require(is_reverse(x), "rank_transport forward requires a reverse Dyck word");
    else
        require(is_affine(x), "rank_transport backward requires an affine Dyck word");
    if (m <= 1) return x;
    IntSeq word(x);
    std::vector<IntSeq> patterns(static_cast<std::size_t>(m));  // patterns[k] for level k
    for (int k = m - 1; k >= 1; --k) {
        auto [remaining, pattern] = delete_level(word, k);
        word = std::move(remaining);
        patterns[static_cast<std::size_t>(k)] = std::move(pattern);
    }
    for (int k = 1; k <= m - 1; ++k) {
        const IntSeq& pattern = patterns[static_cast<std::size_t>(k)];
        word = direction == TransportDirection::Forward ? insert_level_affine(word, pattern, k)
                                                        : insert_level_reverse(word, pattern, k);
    }
    return word;
}

Triple3 phi3(const Triple2& t) {
    IntSeq transported =
        t.m == 0 ? IntSeq{} : rank_transport(t.e, t.m - 1, TransportDirection::Forward);
    return Triple3::make(t.f, t.g, std::move(transported), t.m);
}

Triple2 phi3_inverse(const Triple3& t) {
    IntSeq transported =
        t.m == 0 ? IntSeq{} : rank_transport(t.e, t.m - 1, TransportDirection::Backward);
    return Triple2::make(t.f, t.g, std::move(transported), t.m);
}

namespace {

struct FiberKey {
    std::vector<int> multiset;  // sorted
    long long d = 0;
    int len_g = 0;
    int len_e = 0;
    auto operator<=>(const FiberKey&) const = default;
};

/// All splits of a sorted multiset into a part of the given size plus rest.
void multiset_splits(const std::vector<int>& values, const std::vector<int>& counts,
                     std::size_t index, int remaining, std::vector<int>& take,
                     const std::function<void(const std::vector<int>&)>& emit) {
    if (index == values.size()) {
        if (remaining == 0) emit(take);
        return;
    }
    const int limit = std::min(counts[index], remaining);
    for (int c = 0; c <= limit; ++c) {
        take.push_back(c);
        multiset_splits(values, counts, index + 1, remaining - c, take, emit);
        take.pop_back();
    }
}

void for_each_affine_arrangement(std::vector<int> part,
                                 const std::function<void(const IntSeq&)>& visit) {
    std::sort(part.begin(), part.end());
    if (part.empty()) {
        visit(part);
        return;
    }
    do {
        if (is_affine(part)) visit(part);
    } while (std::next_permutation(part.begin(), part.end()));
}

std::vector<std::pair<IntSeq, IntSeq>> build_affine_fiber(const FiberKey& key) {
    std::vector<int> values, counts;
    for (int v : key.multiset) {
        if (values.empty() || values.back() != v) {
            values.push_back(v);
            counts.push_back(1);
        } else {
            ++counts.back();
        }
    }
    std::vector<std::pair<IntSeq, IntSeq>> fiber;
    std::vector<int> take;
    multiset_splits(values, counts, 0, key.len_g, take, [&](const std::vector<int>& chosen) {
        std::vector<int> g_part, e_part;
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (int c = 0; c < chosen[i]; ++c) g_part.push_back(values[i]);
            for (int c = chosen[i]; c < counts[i]; ++c) e_part.push_back(values[i]);
        }
        for_each_affine_arrangement(g_part, [&](const IntSeq& g) {
            for_each_affine_arrangement(e_part, [&](const IntSeq& e) {
                if (di(concat(g, e)) == key.d) fiber.emplace_back(g, e);
            });
        });
    });
    std::sort(fiber.begin(), fiber.end());
    return fiber;
}

std::vector<std::pair<DyckTableau, BinaryReverseSSYT>> build_tableau_fiber(const FiberKey& key) {
    std::vector<std::pair<DyckTableau, BinaryReverseSSYT>> fiber;
    for (const DyckTableau& p :
         enumerate_dyck_tableaux(key.multiset, static_cast<int>(key.d), 2)) {
        for (const BinaryReverseSSYT& q : enumerate_binary_reverse_ssyt(p.shape())) {
            if (q.ones() == key.len_e) fiber.emplace_back(p, q);
        }
    }
    std::sort(fiber.begin(), fiber.end(), [](const auto& a, const auto& b) {
        const IntSeq ra = row_reading_word(a.first);
        const IntSeq rb = row_reading_word(b.first);
        if (ra != rb) return ra < rb;
        return a.second.column_reading() < b.second.column_reading();
    });
    return fiber;
}

std::mutex fiber_mutex;
std::map<FiberKey, std::vector<std::pair<IntSeq, IntSeq>>> affine_fibers;
std::map<FiberKey, std::vector<std::pair<DyckTableau, BinaryReverseSSYT>>> tableau_fibers;

const std::vector<std::pair<IntSeq, IntSeq>>& affine_fiber(const FiberKey& key) {
    std::lock_guard<std::mutex> guard(fiber_mutex);
    auto it = affine_fibers.find(key);
    if (it == affine_fibers.end()) it = affine_fibers.emplace(key, build_affine_fiber(key)).first;
    return it->second;
}

const std::vector<std::pair<DyckTableau, BinaryReverseSSYT>>& tableau_fiber(const FiberKey& key) {
    std::lock_guard<std::mutex> guard(fiber_mutex);
    auto it = tableau_fibers.find(key);
    if (it == tableau_fibers.end())
        it = tableau_fibers.emplace(key, build_tableau_fiber(key)).first;
    return it->second;
}

FiberKey key_for(const IntSeq& g, const IntSeq& e) {
    FiberKey key;
    key.multiset = concat(g, e);
    std::sort(key.multiset.begin(), key.multiset.end());
    key.d = di(concat(g, e));
    key.len_g = static_cast<int>(g.size());
    key.len_e = static_cast<int>(e.size());
    return key;
}

void check_fiber_sizes(const FiberKey& key, std::size_t affine_size, std::size_t tableau_size) {
    if (affine_size != tableau_size) {
        std::ostringstream os;
        os << "phi4 fiber cardinality mismatch: affine " << affine_size << " vs tableau "
           << tableau_size << " for multiset " << seq_to_string(key.multiset) << ", di=" << key.d
           << ", lengths (" << key.len_g << "," << key.len_e << ")";
        throw FiberMismatchError(os.str());
    }
}

}  // namespace

std::vector<DyckTableau> enumerate_two_column_tableaux(int cells, int max_value) {
    std::vector<DyckTableau> out;
    if (cells == 0) {
        out.push_back(DyckTableau{});
        return out;
    }
    if (max_value < 0) return out;
    // Shapes (2^a, 1^b) with 2a + b = cells.
    for (int a = 0; 2 * a <= cells; ++a) {
        const int b = cells - 2 * a;
        std::vector<IntSeq> rows(static_cast<std::size_t>(a + b));
        for (int r = 0; r < a; ++r) rows[static_cast<std::size_t>(r)] = IntSeq(2, 0);
        for (int r = a; r < a + b; ++r) rows[static_cast<std::size_t>(r)] = IntSeq(1, 0);
        std::function<void(int)> fill_row = [&](int r) {
            if (r == a + b) {
                out.push_back(DyckTableau{rows});
                return;
            }
            IntSeq& row = rows[static_cast<std::size_t>(r)];
            const int lo0 = r > 0 ? rows[static_cast<std::size_t>(r - 1)][0] - 1 : 0;
            for (int u = std::max(0, lo0); u <= max_value; ++u) {
                row[0] = u;
                if (row.size() == 1) {
                    fill_row(r + 1);
                    continue;
                }
                const bool prev_two = r > 0 && rows[static_cast<std::size_t>(r - 1)].size() == 2;
                const int lo1 = prev_two ? rows[static_cast<std::size_t>(r - 1)][1] - 1 : 0;
                for (int v = std::max(u + 2, std::max(0, lo1)); v <= max_value; ++v) {
                    row[1] = v;
                    fill_row(r + 1);
                }
            }
        };
        fill_row(0);
    }
    return out;
}

std::vector<BinaryReverseSSYT> enumerate_binary_reverse_ssyt(const std::vector<int>& shape) {
    std::vector<BinaryReverseSSYT> out;
    std::vector<std::vector<int>> rows;
    for (int len : shape) rows.emplace_back(static_cast<std::size_t>(len), 0);
    std::function<void(std::size_t)> fill_row = [&](std::size_t r) {
        if (r == rows.size()) {
            out.push_back(BinaryReverseSSYT{rows});
            return;
        }
        auto& row = rows[r];
        if (row.size() == 2) {
            // Strictly increasing binary row must be (0,1).
            row[0] = 0;
            row[1] = 1;
            const auto& above = r > 0 ? rows[r - 1] : row;
            if (r == 0 || (above[0] <= 0 && (above.size() < 2 || above[1] <= 1))) fill_row(r + 1);
            return;
        }
        for (int v = 0; v <= 1; ++v) {
            if (r > 0 && rows[r - 1][0] > v) continue;
            row[0] = v;
            fill_row(r + 1);
        }
    };
    if (shape.empty()) {
        out.push_back(BinaryReverseSSYT{});
        return out;
    }
    fill_row(0);
    return out;
}

Triple4 phi4(const Triple3& t) {
    const FiberKey key = key_for(t.g, t.e);
    const auto& domain = affine_fiber(key);
    const auto& codomain = tableau_fiber(key);
    check_fiber_sizes(key, domain.size(), codomain.size());
    const auto it = std::lower_bound(domain.begin(), domain.end(), std::make_pair(t.g, t.e));
    if (it == domain.end() || *it != std::make_pair(t.g, t.e))
        throw std::domain_error("phi4: (G,E) pair not found in its fiber");
    const std::size_t rank = static_cast<std::size_t>(it - domain.begin());
    const auto& [p, q] = codomain[rank];
    return Triple4::make(t.f, p, q, t.m);
}

Triple3 phi4_inverse(const Triple4& t) {
    FiberKey key;
    key.multiset = row_reading_word(t.p);
    std::sort(key.multiset.begin(), key.multiset.end());
    key.d = di(row_reading_word(t.p));
    key.len_e = static_cast<int>(t.q.ones());
    key.len_g = static_cast<int>(key.multiset.size()) - key.len_e;
    const auto& domain = affine_fiber(key);
    const auto& codomain = tableau_fiber(key);
    check_fiber_sizes(key, domain.size(), codomain.size());
    const IntSeq rr = row_reading_word(t.p);
    const std::vector<int> col = t.q.column_reading();
    std::size_t rank = codomain.size();
    for (std::size_t i = 0; i < codomain.size(); ++i) {
        if (row_reading_word(codomain[i].first) == rr &&
            codomain[i].second.column_reading() == col) {
            rank = i;
            break;
        }
    }
    if (rank == codomain.size())
        throw std::domain_error("phi4_inverse: (P,Q) pair not found in its fiber");
    const auto& [g, e] = domain[rank];
    return Triple3::make(t.f, g, e, t.m);
}

Triple4 phi_chain(const IntSeq& d) { return phi4(phi3(phi2(phi1(d)))); }

IntSeq phi_chain_inverse(const Triple4& t) {
    return phi1_inverse(phi2_inverse(phi3_inverse(phi4_inverse(t))));
}

QtPoly two_column_catalan(int n, int cap) {
    if (n < 1) throw std::domain_error("two_column_catalan requires n >= 1");
    if (n > cap)
        throw ResourceLimitError("two_column_catalan: n=" + std::to_string(n) + " exceeds cap " +
                                 std::to_string(cap));
    QtPoly total;
    std::map<std::pair<int, int>, QtPoly> schur_cache;  // (rows of len 2, rows of len 1)
    auto two_var_schur = [&](int a, int b) {
        const auto key = std::make_pair(a, b);
        auto it = schur_cache.find(key);
        if (it != schur_cache.end()) return it->second;
        // Conjugate of (2^a, 1^b) is (a+b, a).
        std::vector<int> parts;
        if (a + b > 0) parts.push_back(a + b);
        if (a > 0) parts.push_back(a);
        const QtPoly poly = schur(Partition::of(parts), 2).to_qt();
        schur_cache.emplace(key, poly);
        return poly;
    };
    std::map<std::pair<int, int>, std::vector<DyckTableau>> tableau_cache;
    for (int skeleton_len = 1; skeleton_len <= n; ++skeleton_len) {
        for_each_dyck(skeleton_len, [&](const IntSeq& f) {
            if (!is_m_skeleton(f)) return;
            const int m = f.back();
            const int cells = n - skeleton_len;
            const auto cache_key = std::make_pair(m - 1, cells);
            auto it = tableau_cache.find(cache_key);
            if (it == tableau_cache.end())
                it = tableau_cache.emplace(cache_key, enumerate_two_column_tableaux(cells, m - 1))
                         .first;
            for (const DyckTableau& p : it->second) {
                const IntSeq word = concat(f, row_reading_word(p));
                int two_rows = 0, one_rows = 0;
                for (const IntSeq& row : p.rows) (row.size() == 2 ? two_rows : one_rows) += 1;
                const QtPoly factor = two_var_schur(two_rows, one_rows);
                const int qa = static_cast<int>(area(word));
                const int ta = static_cast<int>(dinv(word) - static_cast<long long>(cells));
                for (const auto& [key, c] : factor.terms())
                    total.add_term(qa + key.first, ta + key.second, c);
            }
        });
    }
    return total;
}

}  // namespace dycklab
