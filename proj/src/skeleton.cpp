#include "dycklab/skeleton.hpp"

#include "dycklab/catalan.hpp"
#include "dycklab/text.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dycklab {

namespace {

// Two- and three-entry affine/reverse transports in absolute coordinates.
std::pair<int, int> bk2(int a, int b) { return a > b + 1 ? std::make_pair(b, a) : std::make_pair(a, b); }
std::pair<int, int> fw2(int a, int b) { return b > a + 1 ? std::make_pair(b, a) : std::make_pair(a, b); }

std::array<int, 3> bk3(int a, int b, int c) {
    if (a > b + 1) std::swap(a, b);
    if (b > c + 1) std::swap(b, c);
    if (a > b + 1) std::swap(a, b);
    return {a, b, c};
}

struct Case4Row {
    std::array<int, 5> input;
    std::array<int, 5> output;
    LocalCase tag;
};

// Normalized middle-five rewriting rows for max(x1,x2)=2; the 4d family is
// parameterized by the slot value o <= 0 (encoded below with a sentinel).
constexpr int kO = -1000;

const Case4Row kCase4Fixed[] = {
    {{3, 3, 4, 1, 2}, {1, 2, 4, 3, 3}, LocalCase::C4a},
    {{3, 4, 4, 1, 2}, {1, 2, 4, 3, 4}, LocalCase::C4a},
    {{4, 3, 4, 1, 2}, {1, 2, 4, 4, 3}, LocalCase::C4a},
    {{2, 3, 4, 1, 2}, {1, 2, 4, 3, 2}, LocalCase::C4a},
    {{3, 3, 4, 2, 1}, {2, 1, 4, 3, 3}, LocalCase::C4b},
    {{3, 4, 4, 2, 1}, {2, 1, 4, 3, 4}, LocalCase::C4b},
    {{4, 3, 4, 2, 1}, {2, 1, 4, 4, 3}, LocalCase::C4b},
    {{2, 3, 4, 2, 1}, {2, 1, 4, 3, 2}, LocalCase::C4b},
    {{3, 4, 4, 2, 2}, {2, 2, 4, 4, 3}, LocalCase::C4c},
    {{3, 4, 5, 2, 2}, {2, 2, 5, 4, 3}, LocalCase::C4c},
};

const Case4Row kCase4Param[] = {
    {{3, 3, 4, kO, 2}, {2, kO, 4, 3, 3}, LocalCase::C4d},
    {{3, 4, 4, kO, 2}, {2, kO, 4, 3, 4}, LocalCase::C4d},
    {{4, 3, 4, kO, 2}, {2, kO, 4, 4, 3}, LocalCase::C4d},
    {{2, 3, 4, kO, 2}, {2, kO, 2, 4, 3}, LocalCase::C4d},
    {{3, 4, 2, kO, 2}, {2, kO, 4, 3, 2}, LocalCase::C4d},
};

std::optional<std::pair<std::array<int, 5>, LocalCase>> case4_lookup(
    const std::array<int, 5>& reduced) {
    for (const Case4Row& row : kCase4Fixed) {
        if (row.input == reduced) return std::make_pair(row.output, row.tag);
    }
    if (reduced[4] == 2 && reduced[3] <= 0) {
        for (const Case4Row& row : kCase4Param) {
            if (row.input[0] == reduced[0] && row.input[1] == reduced[1] &&
                row.input[2] == reduced[2]) {
                std::array<int, 5> out = row.output;
                for (int& v : out)
                    if (v == kO) v = reduced[3];
                return std::make_pair(out, row.tag);
            }
        }
    }
    return std::nullopt;
}

void require_len(const IntSeq& w, std::size_t len, const char* what) {
    if (w.size() != len)
        throw std::domain_error(std::string(what) + ": window must have " + std::to_string(len) +
                                " entries");
}

IntSeq reversed(const IntSeq& w) { return IntSeq(w.rbegin(), w.rend()); }

}  // namespace

bool is_far_apart(const IntSeq& window) {
    require_len(window, 7, "is_far_apart");
    std::array<int, 7> w;
    std::copy(window.begin(), window.end(), w.begin());
    for (int i1 = 0; i1 < 7; ++i1)
        for (int j1 = i1 + 1; j1 < 7; ++j1) {
            if (std::abs(w[i1] - w[j1]) < 2) continue;
            for (int i2 = 0; i2 < 7; ++i2) {
                if (i2 == i1 || i2 == j1) continue;
                for (int j2 = i2 + 1; j2 < 7; ++j2) {
                    if (j2 == i1 || j2 == j1) continue;
                    if (std::abs(w[i2] - w[j2]) < 2) continue;
                    for (int i3 = 0; i3 < 7; ++i3) {
                        if (i3 == i1 || i3 == j1 || i3 == i2 || i3 == j2) continue;
                        for (int j3 = i3 + 1; j3 < 7; ++j3) {
                            if (j3 == i1 || j3 == j1 || j3 == i2 || j3 == j2) continue;
                            if (std::abs(w[i3] - w[j3]) >= 2) return true;
                        }
                    }
                }
            }
        }
    return false;
}

std::optional<IntSeq> east3(const IntSeq& w) {
    require_len(w, 3, "east3");
    return w[1] <= w[2] + 1 ? std::optional<IntSeq>(w) : std::nullopt;
}

std::optional<IntSeq> east5(const IntSeq& w) {
    require_len(w, 5, "east5");
    const int x_m2 = w[0], x_m1 = w[1], x_0 = w[2], x_1 = w[3], x_2 = w[4];
    const auto [y_m1, y_0] = bk2(x_m1, x_0);
    if (x_m1 > x_1 + 1 && y_0 <= x_2 + 1) return IntSeq{x_m2, x_1, y_m1, y_0, x_2};
    if (x_m1 <= x_1 + 1 && x_m1 <= x_2 + 1) return IntSeq{x_m2, x_1, x_0, x_m1, x_2};
    return std::nullopt;
}

namespace {

std::pair<IntSeq, LocalCase> east7_with_case(const IntSeq& w) {
    const int x_m3 = w[0], x_m2 = w[1], x_m1 = w[2], x_0 = w[3];
    const int x_1 = w[4], x_2 = w[5], x_3 = w[6];
    if (x_0 <= x_1 + 1) return {w, LocalCase::Identity};
    const auto [y_m1, y_0] = bk2(x_m1, x_0);
    if (x_m1 > x_1 + 1 && y_0 <= x_2 + 1)
        return {IntSeq{x_m3, x_m2, x_1, y_m1, y_0, x_2, x_3}, LocalCase::C2a};
    if (x_m1 <= x_1 + 1 && x_m1 <= x_2 + 1)
        return {IntSeq{x_m3, x_m2, x_1, x_0, x_m1, x_2, x_3}, LocalCase::C2b};
    if (std::min({x_m2, x_m1, x_0}) > std::max(x_1, x_2) + 1) {
        const auto [u_m2, u_m1] = fw2(x_1, x_2);
        const auto u = bk3(x_m2, x_m1, x_0);
        return {IntSeq{x_m3, u_m2, u_m1, u[0], u[1], u[2], x_3}, LocalCase::C3};
    }
    const int shift = std::max(x_1, x_2) - 2;
    const std::array<int, 5> reduced{x_m2 - shift, x_m1 - shift, x_0 - shift, x_1 - shift,
                                     x_2 - shift};
    if (auto hit = case4_lookup(reduced)) {
        IntSeq out{x_m3, 0, 0, 0, 0, 0, x_3};
        for (int i = 0; i < 5; ++i) out[static_cast<std::size_t>(i + 1)] = hit->first[static_cast<std::size_t>(i)] + shift;
        return {std::move(out), hit->second};
    }
    throw std::logic_error("east7: no case applies to window " + seq_to_string(w) +
                           " (this falsifies case exhaustiveness)");
}

}  // namespace

IntSeq east7(const IntSeq& w) {
    require_len(w, 7, "east7");
    if (is_far_apart(w))
        throw std::domain_error("east7: window multiset is far-apart decomposable: " +
                                seq_to_string(w));
    return east7_with_case(w).first;
}

std::optional<IntSeq> west3(const IntSeq& w) {
    auto ans = east3(reversed(w));
    if (!ans) return std::nullopt;
    return reversed(*ans);
}

std::optional<IntSeq> west5(const IntSeq& w) {
    auto ans = east5(reversed(w));
    if (!ans) return std::nullopt;
    return reversed(*ans);
}

IntSeq west7(const IntSeq& w) {
    require_len(w, 7, "west7");
    return reversed(east7(reversed(w)));
}

LocalMove east(const IntSeq& window) {
    LocalMove move;
    move.level = static_cast<int>(window.size());
    switch (window.size()) {
        case 3:
            if (auto out = east3(window)) {
                move.case_tag = LocalCase::Identity;
                move.output = std::move(*out);
            }
            return move;
        case 5: {
            const auto out = east5(window);
            if (out) {
                // Distinguish 2a from 2b by the 2a guard.
                const int x_m1 = window[1], x_0 = window[2], x_1 = window[3], x_2 = window[4];
                const auto [y_m1, y_0] = bk2(x_m1, x_0);
                (void)y_m1;
                move.case_tag = (x_m1 > x_1 + 1 && y_0 <= x_2 + 1) ? LocalCase::C2a : LocalCase::C2b;
                move.output = std::move(*out);
            }
            return move;
        }
        case 7: {
            if (is_far_apart(window))
                throw std::domain_error("east: window multiset is far-apart decomposable: " +
                                        seq_to_string(window));
            auto [out, tag] = east7_with_case(window);
            move.case_tag = tag;
            move.output = std::move(out);
            return move;
        }
        default:
            throw std::domain_error("east: window must have 3, 5, or 7 entries");
    }
}

LocalMove west(const IntSeq& window) {
    LocalMove move = east(reversed(window));
    if (move.output) move.output = reversed(*move.output);
    return move;
}

void case4_table_selfcheck() {
    auto reversed5 = [](std::array<int, 5> row) {
        std::reverse(row.begin(), row.end());
        return row;
    };
    auto check_pair = [&](const std::array<int, 5>& in, const std::array<int, 5>& out) {
        const auto paired_in = reversed5(out);
        const auto hit = case4_lookup(paired_in);
        if (!hit || hit->first != reversed5(in))
            throw std::logic_error("case4 table row fails the reversal pairing");
    };
    for (const Case4Row& row : kCase4Fixed) check_pair(row.input, row.output);
    for (int o = 0; o >= -4; --o) {
        for (const Case4Row& row : kCase4Param) {
            auto subst = [&](std::array<int, 5> r) {
                for (int& v : r)
                    if (v == kO) v = o;
                return r;
            };
            check_pair(subst(row.input), subst(row.output));
        }
    }
}

std::pair<long long, long long> window_count_symmetry(const std::vector<int>& multiset, int k) {
    if (multiset.size() != 7) throw std::domain_error("window_count_symmetry needs 7 entries");
    std::vector<int> sorted(multiset);
    std::sort(sorted.begin(), sorted.end());
    long long left = 0, right = 0;
    do {
        if (di(sorted) != k) continue;
        const bool affine4 = sorted[1] <= sorted[0] + 1 && sorted[2] <= sorted[1] + 1 &&
                             sorted[3] <= sorted[2] + 1;
        const bool reverse3 = sorted[5] >= sorted[4] - 1 && sorted[6] >= sorted[5] - 1;
        const bool affine3 = sorted[1] <= sorted[0] + 1 && sorted[2] <= sorted[1] + 1;
        const bool reverse4 = sorted[4] >= sorted[3] - 1 && sorted[5] >= sorted[4] - 1 &&
                              sorted[6] >= sorted[5] - 1;
        if (affine4 && reverse3) ++left;
        if (affine3 && reverse4) ++right;
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    if (left != right)
        throw std::logic_error("window count symmetry failed: |L|=" + std::to_string(left) +
                               " |R|=" + std::to_string(right));
    return {left, right};
}

namespace {

struct StagePoint {
    std::string stage;
    std::string detail;
};

/// Helper carrying either a value or a stage failure through the staged maps.
template <typename T>
using StageResult = std::variant<T, StageFailure>;

StageResult<IntSeq> checked_inject_rtl(const IntSeq& base, const IntSeq& entries,
                                       const std::string& stage) {
    try {
        return inject_right_to_left(base, entries);
    } catch (const InjectionError& err) {
        return StageFailure{stage, err.what()};
    }
}

UpDownOutcome fail(std::string stage, std::string detail) {
    return StageFailure{std::move(stage), std::move(detail)};
}

}  // namespace

UpDownOutcome up(const IntSeq& x) {
    if (!is_dyck(x) || x.size() < 4)
        throw std::domain_error("up requires an ordinary Dyck sequence of length >= 4");
    const int n = static_cast<int>(x.size());
    if (x == omega_word(n)) return UpDownImage{epsilon_word(n), 3};
    if (is_full_skeleton(x)) {
        IntSeq prefix(x.begin(), x.end() - 1);
        try {
            return UpDownImage{inject(prefix, x.back() + 1), 3};
        } catch (const InjectionError& err) {
            return fail("up skeleton injection", err.what());
        }
    }
    const auto first = find_extractable(x);
    const auto [j1, e1] = *first;  // non-skeleton, so present
    const IntSeq c1 = remove_at(x, j1);
    IntSeq sigma1(c1);
    sigma1.push_back(e1 - 1);
    if (east3(IntSeq(sigma1.end() - 3, sigma1.end()))) {
        IntSeq base(sigma1.begin(), sigma1.end() - 2);
        const IntSeq raised{sigma1[sigma1.size() - 2] + 1, sigma1.back() + 1};
        auto res = checked_inject_rtl(base, raised, "up East3 injection");
        if (auto* failure = std::get_if<StageFailure>(&res)) return *failure;
        return UpDownImage{std::get<IntSeq>(res), 3};
    }
    const auto second = find_extractable(c1);
    if (!second) return fail("up second extraction", "no extractable element in " + seq_to_string(c1));
    const auto [j2, e2] = *second;
    const IntSeq c2 = remove_at(c1, j2);
    IntSeq sigma2(c2);
    sigma2.push_back(e1 - 1);
    sigma2.push_back(e2 - 1);
    if (sigma2.size() < 5)
        return fail("up East5 window", "intermediate word shorter than five entries");
    if (auto w5 = east5(IntSeq(sigma2.end() - 5, sigma2.end()))) {
        IntSeq base(sigma2.begin(), sigma2.end() - 5);
        base.push_back((*w5)[0]);
        base.push_back((*w5)[1]);
        IntSeq raised{(*w5)[2] + 1, (*w5)[3] + 1, (*w5)[4] + 1};
        auto res = checked_inject_rtl(base, raised, "up East5 injection");
        if (auto* failure = std::get_if<StageFailure>(&res)) return *failure;
        return UpDownImage{std::get<IntSeq>(res), 5};
    }
    const auto third = find_extractable(c2);
    if (!third) return fail("up third extraction", "no extractable element in " + seq_to_string(c2));
    const auto [j3, e3] = *third;
    const IntSeq c3 = remove_at(c2, j3);
    IntSeq sigma3(c3);
    sigma3.push_back(e1 - 1);
    sigma3.push_back(e2 - 1);
    sigma3.push_back(e3 - 1);
    if (sigma3.size() < 7)
        return fail("up East7 window", "intermediate word shorter than seven entries");
    const IntSeq w7(sigma3.end() - 7, sigma3.end());
    if (is_far_apart(w7))
        return fail("up East7 window", "window is far-apart decomposable: " + seq_to_string(w7));
    const IntSeq e7 = east7(w7);
    IntSeq new_sigma(sigma3.begin(), sigma3.end() - 7);
    new_sigma.insert(new_sigma.end(), e7.begin(), e7.end());
    IntSeq base(new_sigma.begin(), new_sigma.end() - 4);
    IntSeq raised(new_sigma.end() - 4, new_sigma.end());
    for (int& v : raised) ++v;
    auto res = checked_inject_rtl(base, raised, "up East7 injection");
    if (auto* failure = std::get_if<StageFailure>(&res)) return *failure;
    return UpDownImage{std::get<IntSeq>(res), 7};
}

UpDownOutcome down(const IntSeq& y) {
    if (!is_dyck(y) || y.size() < 4)
        throw std::domain_error("down requires an ordinary Dyck sequence of length >= 4");
    const int n = static_cast<int>(y.size());
    if (n >= 4 && y == epsilon_word(n)) return UpDownImage{omega_word(n), 3};
    const auto first = find_extractable(y);
    if (!first) return fail("down first extraction", "input is a full skeleton");
    const auto [j1, f1] = *first;
    const IntSeq d1 = remove_at(y, j1);
    IntSeq candidate(d1);
    candidate.push_back(f1 - 1);
    if (!leftmost_eligible_index(candidate)) {
        if (!is_dyck(candidate))
            return fail("down skeleton branch",
                        "candidate is not a Dyck sequence: " + seq_to_string(candidate));
        return UpDownImage{candidate, 3};
    }
    const auto second = find_extractable(d1);
    if (!second)
        return fail("down second extraction", "no extractable element in " + seq_to_string(d1));
    const auto [j2, f2] = *second;
    const IntSeq d2 = remove_at(d1, j2);
    IntSeq tau1(d2);
    tau1.push_back(f1 - 1);
    tau1.push_back(f2 - 1);
    if (west3(IntSeq(tau1.end() - 3, tau1.end()))) {
        IntSeq base(tau1.begin(), tau1.end() - 1);
        try {
            return UpDownImage{inject(base, tau1.back() + 1), 3};
        } catch (const InjectionError& err) {
            return fail("down West3 injection", err.what());
        }
    }
    const auto third = find_extractable(d2);
    if (!third)
        return fail("down third extraction", "no extractable element in " + seq_to_string(d2));
    const auto [j3, f3] = *third;
    const IntSeq d3 = remove_at(d2, j3);
    IntSeq tau2(d3);
    tau2.push_back(f1 - 1);
    tau2.push_back(f2 - 1);
    tau2.push_back(f3 - 1);
    if (tau2.size() < 5)
        return fail("down West5 window", "intermediate word shorter than five entries");
    if (auto w5 = west5(IntSeq(tau2.end() - 5, tau2.end()))) {
        IntSeq base(tau2.begin(), tau2.end() - 5);
        base.insert(base.end(), w5->begin(), w5->begin() + 3);
        IntSeq raised{(*w5)[3] + 1, (*w5)[4] + 1};
        auto res = checked_inject_rtl(base, raised, "down West5 injection");
        if (auto* failure = std::get_if<StageFailure>(&res)) return *failure;
        return UpDownImage{std::get<IntSeq>(res), 5};
    }
    const auto fourth = find_extractable(d3);
    if (!fourth)
        return fail("down fourth extraction", "no extractable element in " + seq_to_string(d3));
    const auto [j4, f4] = *fourth;
    const IntSeq d4 = remove_at(d3, j4);
    IntSeq tau3(d4);
    tau3.push_back(f1 - 1);
    tau3.push_back(f2 - 1);
    tau3.push_back(f3 - 1);
    tau3.push_back(f4 - 1);
    if (tau3.size() < 7)
        return fail("down West7 window", "intermediate word shorter than seven entries");
    const IntSeq w7(tau3.end() - 7, tau3.end());
    if (is_far_apart(w7))
        return fail("down West7 window", "window is far-apart decomposable: " + seq_to_string(w7));
    const IntSeq out7 = west7(w7);
    IntSeq new_tau(tau3.begin(), tau3.end() - 7);
    new_tau.insert(new_tau.end(), out7.begin(), out7.end());
    IntSeq base(new_tau.begin(), new_tau.end() - 3);
    IntSeq raised(new_tau.end() - 3, new_tau.end());
    for (int& v : raised) ++v;
    auto res = checked_inject_rtl(base, raised, "down West7 injection");
    if (auto* failure = std::get_if<StageFailure>(&res)) return *failure;
    return UpDownImage{std::get<IntSeq>(res), 7};
}

UpDownImage up_checked(const IntSeq& x) {
    UpDownOutcome outcome = up(x);
    if (auto* failure = std::get_if<StageFailure>(&outcome))
        throw std::logic_error("up failed at stage '" + failure->stage + "': " + failure->detail);
    return std::get<UpDownImage>(outcome);
}

UpDownImage down_checked(const IntSeq& y) {
    UpDownOutcome outcome = down(y);
    if (auto* failure = std::get_if<StageFailure>(&outcome))
        throw std::logic_error("down failed at stage '" + failure->stage + "': " + failure->detail);
    return std::get<UpDownImage>(outcome);
}

std::vector<StringRecord> make_strings(int n, int d) {
    if (n < 4) throw std::domain_error("make_strings requires n >= 4");
    if (d > 2 * n - 8) throw std::domain_error("make_strings requires d <= 2n-8");
    const long long ell = (binom2(n) - d) / 2;
    std::set<IntSeq> target;
    std::vector<IntSeq> starts;
    for_each_dyck(n, [&](const IntSeq& s) {
        if (defc(s) != d) return;
        if (area(s) > ell) return;
        target.insert(s);
        if (is_special_skeleton(s)) starts.push_back(s);
    });
    std::sort(starts.begin(), starts.end(), [](const IntSeq& a, const IntSeq& b) {
        const long long aa = area(a), ab = area(b);
        if (aa != ab) return aa < ab;
        return a < b;
    });
    std::vector<StringRecord> strings;
    std::set<IntSeq> covered;
    long long covered_count = 0;
    for (const IntSeq& start : starts) {
        StringRecord record;
        record.start = start;
        record.chain.push_back(start);
        IntSeq current = start;
        while (area(current) < ell) {
            const UpDownImage image = up_checked(current);
            if (defc(image.word) != d || area(image.word) != area(current) + 1)
                throw std::logic_error("up changed the invariants along a string");
            record.levels.push_back(image.level);
            record.chain.push_back(image.word);
            current = image.word;
        }
        for (const IntSeq& word : record.chain) {
            covered.insert(word);
            ++covered_count;
        }
        strings.push_back(std::move(record));
    }
    if (covered != target || covered_count != static_cast<long long>(covered.size()))
        throw std::logic_error("string decomposition failed to cover its target exactly once");
    return strings;
}

QtPoly low_deficit_catalan(int n, int cap) {
    if (n < 4) throw std::domain_error("low_deficit_catalan requires n >= 4");
    if (n > cap)
        throw ResourceLimitError("low_deficit_catalan: n exceeds cap " + std::to_string(cap));
    const long long m_total = binom2(n);
    QtPoly total;
    for_each_dyck(n, [&](const IntSeq& s) {
        if (!is_special_skeleton(s)) return;
        const long long d = defc(s);
        if (d > 2 * n - 8) return;
        const long long a = area(s);
        const long long nu = dinv(s);
        for (long long j = a; j <= nu; ++j)
            total.add_term(static_cast<int>(j), static_cast<int>(m_total - d - j), 1);
    });
    return total;
}

IntSeq partition_to_special_skeleton(const Partition& lambda, int n) {
    if (lambda.size() > n - 3)
        throw std::domain_error("partition too large for the deficit range");
    if (lambda.parts.empty()) return IntSeq(static_cast<std::size_t>(n), 0);
    std::vector<int> ascending(lambda.parts.rbegin(), lambda.parts.rend());
    IntSeq word;
    int zeros = 0;
    for (int c : ascending) {
        while (zeros < c) {
            word.push_back(0);
            ++zeros;
        }
        word.push_back(1);
    }
    word.insert(word.begin(), 0);
    while (static_cast<int>(word.size()) < n) word.push_back(0);
    if (static_cast<int>(word.size()) != n)
        throw std::logic_error("partition skeleton construction overflowed the length");
    return word;
}

Partition special_skeleton_to_partition(const IntSeq& s) {
    if (!is_special_skeleton(s))
        throw std::domain_error("special_skeleton_to_partition requires a special skeleton");
    for (int v : s)
        if (v > 1) throw std::domain_error("skeleton is not binary");
    std::vector<int> recorded;
    int zeros_after_first = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == 0)
            ++zeros_after_first;
        else
            recorded.push_back(zeros_after_first);
    }
    std::reverse(recorded.begin(), recorded.end());
    return Partition::of(recorded);
}

QtPoly partition_formula(int n) {
    if (n < 1) throw std::domain_error("partition_formula requires n >= 1");
    QtPoly total;
    const long long m_total = binom2(n);
    for (int size = 0; size <= n - 3; ++size) {
        for (const Partition& lambda : partitions_of(size)) {
            const long long a = lambda.length();
            const long long nu = m_total - size - a;
            for (long long j = a; j <= nu; ++j)
                total.add_term(static_cast<int>(j), static_cast<int>(m_total - size - j), 1);
        }
    }
    return total;
}

FlatMiddleReport flat_middle_scan(int n, int cap) {
    FlatMiddleReport report;
    report.n = n;
    const QtPoly catalan = brute_force_catalan(n, cap);
    const long long m_total = binom2(n);
    std::map<int, long long> specials_by_deficit;
    for_each_dyck(n, [&](const IntSeq& s) {
        if (is_special_skeleton(s)) ++specials_by_deficit[static_cast<int>(defc(s))];
    });
    for (int d = 0; 3LL * d <= m_total; ++d) {
        FlatBand band;
        band.d = d;
        band.j_lo = d;
        band.j_hi = m_total - 2LL * d;
        band.in_remark_range = n >= 4 && d <= 2 * n - 8;
        if (band.j_lo > band.j_hi) {
            band.constant = true;  // vacuous
            band.matches_skeleton_count = true;
            report.bands.push_back(band);
            continue;
        }
        band.constant = true;
        band.value = catalan.coeff(static_cast<int>(band.j_lo),
                                   static_cast<int>(m_total - d - band.j_lo));
        for (long long j = band.j_lo + 1; j <= band.j_hi; ++j) {
            if (catalan.coeff(static_cast<int>(j), static_cast<int>(m_total - d - j)) !=
                band.value) {
                band.constant = false;
                break;
            }
        }
        if (band.in_remark_range) {
            const long long expected = specials_by_deficit.count(d) ? specials_by_deficit[d] : 0;
            band.matches_skeleton_count = band.constant && band.value == expected;
            if (!band.matches_skeleton_count) {
                report.remark_ok = false;
                report.bands.push_back(band);
                throw std::logic_error(
                    "flat middle band failed in the guaranteed range at n=" + std::to_string(n) +
                    ", d=" + std::to_string(d));
            }
        } else if (!band.constant) {
            report.conjecture_ok = false;
        }
        report.bands.push_back(band);
    }
    return report;
}

}  // namespace dycklab
