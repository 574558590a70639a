#include "dycklab/seq.hpp"

#include "dycklab/text.hpp"

#include <algorithm>

namespace dycklab {

long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

bool is_affine(const IntSeq& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i + 1] > s[i] + 1) return false;
    return true;
}

bool is_dual(const IntSeq& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i + 1] < s[i] + 2) return false;
    return true;
}

bool is_reverse(const IntSeq& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i + 1] < s[i] - 1) return false;
    return true;
}

bool is_dyck(const IntSeq& s) {
    if (s.empty() || s.front() != 0) return false;
    for (int x : s)
        if (x < 0) return false;
    return is_affine(s);
}

bool in_interval(const IntSeq& s, int a, int b) {
    for (int x : s)
        if (x < a || x > b) return false;
    return true;
}

SeqClass classify(const IntSeq& s, std::optional<int> a, std::optional<int> b) {
    SeqClass c;
    c.affine = is_affine(s);
    c.ordinary_dyck = is_dyck(s);
    c.dual = is_dual(s);
    c.reverse = is_reverse(s);
    if (a && b) c.interval_ok = in_interval(s, *a, *b);
    return c;
}

long long di(const IntSeq& s) {
    long long count = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] + 1) ++count;
    return count;
}

long long nv(const IntSeq& s) {
    long long count = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j]) ++count;
    return count;
}

long long dinv(const IntSeq& s) {
    long long count = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || s[i] == s[j] + 1) ++count;
    return count;
}

long long area(const IntSeq& s) {
    long long sum = 0;
    for (int x : s) {
        if (x < 0) throw std::domain_error("area requested on a sequence with negative entries");
        sum += x;
    }
    return sum;
}

long long defc(const IntSeq& s) {
    return binom2(static_cast<long long>(s.size())) - area(s) - dinv(s);
}

Stats statistics(const IntSeq& s) {
    Stats st;
    st.area = area(s);
    st.di = di(s);
    st.nv = nv(s);
    st.dinv = st.di + st.nv;
    st.defc = binom2(static_cast<long long>(s.size())) - st.area - st.dinv;
    return st;
}

DeficitPairReport deficit_pairs(const IntSeq& s) {
    const int n = static_cast<int>(s.size());
    for (int x : s)
        if (x < 0) throw std::domain_error("deficit_pairs requires nonnegative entries");
    DeficitPairReport report;
    std::vector<int> first_index_of_value;
    auto first_occurrence = [&](int value) {
        for (int i = 0; i < n; ++i)
            if (s[i] == value) return i;
        return -1;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (s[i] > s[j] + 1) {
                report.type_a.emplace_back(i, j);
            } else if (s[i] < s[j] && first_occurrence(s[i]) != i) {
                report.type_b.emplace_back(i, j);
            }
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int v = 0; v < s[j]; ++v) {
            bool seen = false;
            for (int i = 0; i < j && !seen; ++i) seen = (s[i] == v);
            if (!seen) ++report.missing_correction;
        }
    }
    return report;
}

namespace {

void dyck_rec(IntSeq& prefix, int n, const std::function<void(const IntSeq&)>& visit) {
    if (static_cast<int>(prefix.size()) == n) {
        visit(prefix);
        return;
    }
    const int top = prefix.back() + 1;
    for (int x = 0; x <= top; ++x) {
        prefix.push_back(x);
        dyck_rec(prefix, n, visit);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_dyck(int n, const std::function<void(const IntSeq&)>& visit) {
    if (n <= 0) throw std::domain_error("Dyck enumeration requires n >= 1");
    IntSeq prefix{0};
    prefix.reserve(n);
    dyck_rec(prefix, n, visit);
}

std::vector<IntSeq> enumerate_dyck(int n) {
    std::vector<IntSeq> out;
    for_each_dyck(n, [&](const IntSeq& s) { out.push_back(s); });
    return out;
}

namespace {

std::optional<std::pair<int, int>> leftmost_eligible(const IntSeq& s, int limit) {
    for (int j = 0; j < limit; ++j) {
        const int x = s[j];
        if (x <= 0) continue;
        int parents = 0;
        for (int i = 0; i < j; ++i)
            if (s[i] == x - 1) ++parents;
        if (parents != 1) continue;
        if (j + 1 < static_cast<int>(s.size()) && s[j + 1] > x) continue;
        return std::make_pair(j, x);
    }
    return std::nullopt;
}

void require_dyck(const IntSeq& s, const char* op) {
    if (!is_dyck(s)) throw std::domain_error(std::string(op) + " requires an ordinary Dyck sequence");
}

}  // namespace

std::optional<std::pair<int, int>> find_extractable(const IntSeq& s) {
    require_dyck(s, "find_extractable");
    return leftmost_eligible(s, static_cast<int>(s.size()));
}

std::optional<std::pair<int, int>> find_nonfinal_extractable(const IntSeq& s) {
    require_dyck(s, "find_nonfinal_extractable");
    return leftmost_eligible(s, static_cast<int>(s.size()) - 1);
}

std::optional<std::pair<int, int>> leftmost_eligible_index(const IntSeq& s) {
    return leftmost_eligible(s, static_cast<int>(s.size()));
}

IntSeq remove_at(const IntSeq& s, int index) {
    if (index < 0 || index >= static_cast<int>(s.size()))
        throw std::domain_error("remove_at: index out of range");
    IntSeq out(s);
    out.erase(out.begin() + index);
    return out;
}

IntSeq inject(const IntSeq& s, int e) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == e - 1) {
            IntSeq out(s);
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(i) + 1, e);
            if (!is_dyck(out))
                throw InjectionError("injection of " + std::to_string(e) + " into " + seq_to_string(s) +
                                     " produced a non-Dyck sequence " + seq_to_string(out));
            return out;
        }
    }
    throw InjectionError("cannot inject " + std::to_string(e) + " into " + seq_to_string(s) +
                         ": no occurrence of " + std::to_string(e - 1));
}

IntSeq inject_right_to_left(const IntSeq& base, const IntSeq& entries) {
    IntSeq out(base);
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) out = inject(out, *it);
    return out;
}

IntSeq omega_word(int n) {
    if (n < 2) throw std::domain_error("omega_word requires n >= 2");
    IntSeq s(n, 0);
    s.back() = 1;
    return s;
}

IntSeq epsilon_word(int n) {
    if (n < 4) throw std::domain_error("epsilon_word requires n >= 4");
    IntSeq s(n, 0);
    s[2] = 1;
    s.back() = 1;
    return s;
}

bool is_full_skeleton(const IntSeq& s) { return is_dyck(s) && !find_extractable(s); }

bool is_special_skeleton(const IntSeq& s) {
    if (!is_full_skeleton(s)) return false;
    const int n = static_cast<int>(s.size());
    return n < 4 || s != epsilon_word(n);
}

bool is_m_skeleton(const IntSeq& s) {
    require_dyck(s, "is_m_skeleton");
    if (*std::max_element(s.begin(), s.end()) != s.back()) return false;
    return !find_nonfinal_extractable(s);
}

SkeletonTests skeleton_tests(const IntSeq& s) {
    require_dyck(s, "skeleton_tests");
    SkeletonTests t;
    t.full = !leftmost_eligible(s, static_cast<int>(s.size()));
    const int n = static_cast<int>(s.size());
    t.special = t.full && (n < 4 || s != epsilon_word(n));
    const int m = *std::max_element(s.begin(), s.end());
    if (s.back() == m && !leftmost_eligible(s, n - 1)) t.m_skeleton = m;
    return t;
}

IntSeq adjoint(const IntSeq& s) {
    IntSeq out(s.rbegin(), s.rend());
    for (int& x : out) x = -x;
    return out;
}

long long suffix_corrected_bound(const IntSeq& t, int suffix_len) {
    const int n = static_cast<int>(t.size());
    if (suffix_len < 1 || suffix_len >= n)
        throw std::domain_error("suffix_corrected_bound: suffix must be nonempty and leave a prefix");
    const int split = n - suffix_len;
    const IntSeq prefix(t.begin(), t.begin() + split);
    const IntSeq suffix(t.begin() + split, t.end());
    if (!is_dyck(prefix))
        throw std::domain_error("suffix_corrected_bound: prefix is not an ordinary Dyck sequence");
    if (!is_reverse(suffix))
        throw std::domain_error("suffix_corrected_bound: suffix is not a reverse Dyck sequence");
    const int final_value = suffix.back();
    if (std::find(prefix.begin(), prefix.end(), final_value) == prefix.end())
        throw std::domain_error("suffix_corrected_bound: final suffix value does not occur in the prefix");
    const DeficitPairReport report = deficit_pairs(t);
    long long inside_suffix = 0;
    for (const auto& [i, j] : report.type_a)
        if (i >= split) ++inside_suffix;
    return report.pair_count() - inside_suffix;
}

}  // namespace dycklab
