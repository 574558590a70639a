#include "dycklab/verify.hpp"

#include "dycklab/skeleton.hpp"
#include "dycklab/text.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace dycklab {

void CheckReport::add(const std::string& label, long long value) {
    counters.emplace_back(label, value);
}

long long CheckReport::get(const std::string& label) const {
    for (const auto& [key, value] : counters)
        if (key == label) return value;
    return -1;
}

std::string CheckReport::render() const {
    std::ostringstream os;
    for (const auto& [label, value] : counters) os << label << '\t' << value << '\n';
    for (const std::string& note : notes) os << "# " << note << '\n';
    if (first_failure) os << "first failure: " << *first_failure << '\n';
    os << "status: " << (pass ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::vector<std::pair<std::string, long long>> load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden fixture: " + path);
    std::vector<std::pair<std::string, long long>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error("malformed golden line in " + path + ": " + line);
        out.emplace_back(line.substr(0, tab), std::stoll(line.substr(tab + 1)));
    }
    return out;
}

std::string default_data_dir() { return DYCKLAB_DATA_DIR; }

namespace {

/// Compares computed counters against every fixture entry; records the first
/// mismatch into the report and clears `pass`.
void compare_with_golden(CheckReport& report, const std::string& path) {
    for (const auto& [label, expected] : load_golden(path)) {
        const long long got = report.get(label);
        if (got != expected) {
            report.pass = false;
            if (!report.first_failure)
                report.first_failure = "golden mismatch for '" + label + "': got " +
                                       std::to_string(got) + ", expected " +
                                       std::to_string(expected);
        }
    }
}

void note_failure(CheckReport& report, const std::string& message) {
    report.pass = false;
    if (!report.first_failure) report.first_failure = message;
}

// ---------------------------------------------------------------------------
// Residual branch-prefix checker (lengths 4..7).

bool east3_applies(int x0, int x1) { return x0 <= x1 + 1; }

bool east5_case2b_applies(const std::array<int, 5>& w) {
    return w[2] > w[3] + 1 && w[1] <= w[3] + 1 && w[1] <= w[4] + 1;
}

std::array<int, 5> reversed5(const std::array<int, 5>& w) {
    return {w[4], w[3], w[2], w[1], w[0]};
}

struct ResidualStop {
    std::string message;
};

std::string residual_check_up(const IntSeq& seq, int length) {
    if (seq == omega_word(length)) return "up special";
    if (is_full_skeleton(seq)) {
        IntSeq prefix(seq.begin(), seq.end() - 1);
        IntSeq result;
        try {
            result = inject(prefix, seq.back() + 1);
        } catch (const InjectionError& err) {
            throw ResidualStop{std::string("skeleton injection failed: ") + err.what()};
        }
        if (static_cast<int>(result.size()) != length)
            throw ResidualStop{"up skeleton changed length"};
        return "up skeleton";
    }
    const auto first = leftmost_eligible_index(seq);
    if (!first) throw ResidualStop{"extraction lemma: up first extraction failed"};
    const auto [index1, value1] = *first;
    const IntSeq child1 = remove_at(seq, index1);
    IntSeq word1(child1);
    word1.push_back(value1 - 1);
    const std::size_t w1 = word1.size();
    if (east3_applies(word1[w1 - 2], word1[w1 - 1])) {
        if (index1 >= length - 2) throw ResidualStop{"position lemma: up/East3 position"};
        return "up East3";
    }
    const auto second = leftmost_eligible_index(child1);
    if (!second) throw ResidualStop{"extraction lemma: up second extraction failed"};
    const auto [index2, value2] = *second;
    IntSeq word2 = remove_at(child1, index2);
    word2.push_back(value1 - 1);
    word2.push_back(value2 - 1);
    if (!(index1 < length - 3 && index2 < static_cast<int>(child1.size()) - 3))
        throw ResidualStop{"position lemma: up/East5 position"};
    const std::size_t w2 = word2.size();
    const std::array<int, 5> window{word2[w2 - 5], word2[w2 - 4], word2[w2 - 3], word2[w2 - 2],
                                    word2[w2 - 1]};
    if (!east5_case2b_applies(window))
        throw ResidualStop{"seven-window lemma: up would reach East7"};
    return "up East5 case 2b";
}

std::string residual_check_down(const IntSeq& seq, int length) {
    if (length >= 4 && seq == epsilon_word(length)) return "down special";
    const auto first = leftmost_eligible_index(seq);
    if (!first) throw ResidualStop{"extraction lemma: down first extraction failed"};
    const auto [index1, value1] = *first;
    const IntSeq child1 = remove_at(seq, index1);
    IntSeq skeleton_candidate(child1);
    skeleton_candidate.push_back(value1 - 1);
    if (is_dyck(skeleton_candidate) && !leftmost_eligible_index(skeleton_candidate)) {
        if (static_cast<int>(skeleton_candidate.size()) != length)
            throw ResidualStop{"down skeleton changed length"};
        return "down skeleton";
    }
    const auto second = leftmost_eligible_index(child1);
    if (!second) throw ResidualStop{"extraction lemma: down second extraction failed"};
    const auto [index2, value2] = *second;
    IntSeq word2 = remove_at(child1, index2);
    word2.push_back(value1 - 1);
    word2.push_back(value2 - 1);
    const std::size_t w2 = word2.size();
    if (east3_applies(word2[w2 - 2], word2[w2 - 3])) {  // West3 on reversed window
        if (!(index1 < length - 1 && index2 < static_cast<int>(child1.size()) - 1))
            throw ResidualStop{"position lemma: down/West3 position"};
        return "down West3";
    }
    const IntSeq child2 = remove_at(child1, index2);
    const auto third_hit = leftmost_eligible_index(child2);
    if (!third_hit) throw ResidualStop{"extraction lemma: down third extraction failed"};
    const auto [index3, value3] = *third_hit;
    IntSeq word3 = remove_at(child2, index3);
    word3.push_back(value1 - 1);
    word3.push_back(value2 - 1);
    word3.push_back(value3 - 1);
    if (!(index1 < length - 2 && index2 < static_cast<int>(child1.size()) - 2 &&
          index3 < static_cast<int>(child2.size()) - 2))
        throw ResidualStop{"position lemma: down/West5 position"};
    const std::size_t w3 = word3.size();
    const std::array<int, 5> window{word3[w3 - 5], word3[w3 - 4], word3[w3 - 3], word3[w3 - 2],
                                    word3[w3 - 1]};
    if (!east5_case2b_applies(reversed5(window)))
        throw ResidualStop{"seven-window lemma: down would reach West7"};
    return "down West5 case 2b";
}

}  // namespace

CheckReport residual_check(const std::string& data_dir) {
    CheckReport report;
    report.name = "residual";
    report.pass = true;
    std::map<std::string, long long> up_counts, down_counts;
    std::map<int, std::map<std::string, long long>> by_length;
    for (int length = 4; length <= 7; ++length) {
        for_each_dyck(length, [&](const IntSeq& seq) {
            const DeficitPairReport pairs = deficit_pairs(seq);
            const long long deficit = pairs.pair_count() - pairs.missing_correction;
            const long long total = area(seq);
            if (deficit > 2 * length - 8) return;
            const long long half = (binom2(length) - deficit) / 2;
            try {
                if (total <= half - 1) {
                    const std::string label = residual_check_up(seq, length);
                    ++up_counts[label];
                    ++by_length[length][label];
                }
                if (total <= half && !is_special_skeleton(seq)) {
                    const std::string label = residual_check_down(seq, length);
                    ++down_counts[label];
                    ++by_length[length][label];
                }
            } catch (const ResidualStop& stop) {
                note_failure(report, stop.message + " on " + seq_to_string(seq));
            }
        });
    }
    for (const auto& [label, count] : up_counts) report.add(label, count);
    for (const auto& [label, count] : down_counts) report.add(label, count);
    for (const auto& [length, labels] : by_length)
        for (const auto& [label, count] : labels)
            report.add("n=" + std::to_string(length) + " " + label, count);
    report.add("east7 reached", 0);
    compare_with_golden(report, data_dir + "/residual.golden");
    return report;
}

// ---------------------------------------------------------------------------
// Limited-nonzero full up/down checker (4 <= n <= 13, at most 7 nonzeros).

namespace {

struct LimitedStop {
    std::string message;
};

void check_image(const IntSeq& source, const IntSeq& image, int n, long long d, int delta) {
    if (!is_dyck(image))
        throw LimitedStop{"non-Dyck image: " + seq_to_string(source) + " -> " + seq_to_string(image)};
    if (static_cast<int>(image.size()) != n) throw LimitedStop{"length changed"};
    if (defc(image) != d) throw LimitedStop{"deficit changed: " + seq_to_string(source)};
    if (area(image) != area(source) + delta)
        throw LimitedStop{"wrong area change: " + seq_to_string(source)};
}

std::pair<std::string, int> limited_checked_up(const IntSeq& s, int n, long long d) {
    if (s == omega_word(n)) {
        check_image(s, epsilon_word(n), n, d, 1);
        return {"up special", 3};
    }
    if (is_full_skeleton(s)) {
        IntSeq prefix(s.begin(), s.end() - 1);
        const IntSeq image = inject(prefix, s.back() + 1);
        check_image(s, image, n, d, 1);
        return {"up skeleton", 3};
    }
    const auto [j1, e1] = *find_extractable(s);
    const IntSeq c1 = remove_at(s, j1);
    IntSeq sigma1(c1);
    sigma1.push_back(e1 - 1);
    if (east3(IntSeq(sigma1.end() - 3, sigma1.end()))) {
        if (!(j1 < n - 2)) throw LimitedStop{"up East3 position bound: " + seq_to_string(s)};
        IntSeq base(sigma1.begin(), sigma1.end() - 2);
        const IntSeq image =
            inject_right_to_left(base, {sigma1[sigma1.size() - 2] + 1, sigma1.back() + 1});
        check_image(s, image, n, d, 1);
        return {"up East3", 3};
    }
    const auto second = find_extractable(c1);
    if (!second) throw LimitedStop{"up second extraction failed: " + seq_to_string(s)};
    const auto [j2, e2] = *second;
    const IntSeq c2 = remove_at(c1, j2);
    IntSeq sigma2(c2);
    sigma2.push_back(e1 - 1);
    sigma2.push_back(e2 - 1);
    if (auto e5 = east5(IntSeq(sigma2.end() - 5, sigma2.end()))) {
        if (!(j1 < n - 3 && j2 < static_cast<int>(c1.size()) - 3))
            throw LimitedStop{"up East5 position bound: " + seq_to_string(s)};
        IntSeq base(sigma2.begin(), sigma2.end() - 5);
        base.push_back((*e5)[0]);
        base.push_back((*e5)[1]);
        const IntSeq image =
            inject_right_to_left(base, {(*e5)[2] + 1, (*e5)[3] + 1, (*e5)[4] + 1});
        check_image(s, image, n, d, 1);
        return {"up East5", 5};
    }
    const auto third = find_extractable(c2);
    if (!third) throw LimitedStop{"up third extraction failed: " + seq_to_string(s)};
    const auto [j3, e3] = *third;
    const IntSeq c3 = remove_at(c2, j3);
    IntSeq sigma3(c3);
    sigma3.push_back(e1 - 1);
    sigma3.push_back(e2 - 1);
    sigma3.push_back(e3 - 1);
    const IntSeq w7(sigma3.end() - 7, sigma3.end());
    if (is_far_apart(w7)) throw LimitedStop{"bad East7 window: " + seq_to_string(s)};
    if (!(j1 < n - 3 && j2 < static_cast<int>(c1.size()) - 3 &&
          j3 < static_cast<int>(c2.size()) - 3))
        throw LimitedStop{"up East7 position bound: " + seq_to_string(s)};
    const IntSeq e7 = east7(w7);
    IntSeq combined(sigma3.begin(), sigma3.end() - 7);
    combined.insert(combined.end(), e7.begin(), e7.end());
    IntSeq base(combined.begin(), combined.end() - 4);
    IntSeq raised(combined.end() - 4, combined.end());
    for (int& v : raised) ++v;
    const IntSeq image = inject_right_to_left(base, raised);
    check_image(s, image, n, d, 1);
    return {"up East7", 7};
}

std::pair<std::string, int> limited_checked_down(const IntSeq& s, int n, long long d) {
    if (n >= 4 && s == epsilon_word(n)) {
        check_image(s, omega_word(n), n, d, -1);
        return {"down special", 3};
    }
    const auto first = find_extractable(s);
    if (!first) throw LimitedStop{"down first extraction failed: " + seq_to_string(s)};
    const auto [j1, f1] = *first;
    const IntSeq d1 = remove_at(s, j1);
    IntSeq candidate(d1);
    candidate.push_back(f1 - 1);
    if (!leftmost_eligible_index(candidate)) {
        check_image(s, candidate, n, d, -1);
        return {"down skeleton", 3};
    }
    const auto second = find_extractable(d1);
    if (!second) throw LimitedStop{"down second extraction failed: " + seq_to_string(s)};
    const auto [j2, f2] = *second;
    const IntSeq d2 = remove_at(d1, j2);
    IntSeq tau1(d2);
    tau1.push_back(f1 - 1);
    tau1.push_back(f2 - 1);
    if (west3(IntSeq(tau1.end() - 3, tau1.end()))) {
        if (!(j1 < n - 1 && j2 < static_cast<int>(d1.size()) - 1))
            throw LimitedStop{"down West3 position bound: " + seq_to_string(s)};
        IntSeq base(tau1.begin(), tau1.end() - 1);
        const IntSeq image = inject(base, tau1.back() + 1);
        check_image(s, image, n, d, -1);
        return {"down West3", 3};
    }
    const auto third = find_extractable(d2);
    if (!third) throw LimitedStop{"down third extraction failed: " + seq_to_string(s)};
    const auto [j3, f3] = *third;
    const IntSeq d3 = remove_at(d2, j3);
    IntSeq tau2(d3);
    tau2.push_back(f1 - 1);
    tau2.push_back(f2 - 1);
    tau2.push_back(f3 - 1);
    if (auto w5 = west5(IntSeq(tau2.end() - 5, tau2.end()))) {
        if (!(j1 < n - 2 && j2 < static_cast<int>(d1.size()) - 2 &&
              j3 < static_cast<int>(d2.size()) - 2))
            throw LimitedStop{"down West5 position bound: " + seq_to_string(s)};
        IntSeq base(tau2.begin(), tau2.end() - 5);
        base.insert(base.end(), w5->begin(), w5->begin() + 3);
        const IntSeq image = inject_right_to_left(base, {(*w5)[3] + 1, (*w5)[4] + 1});
        check_image(s, image, n, d, -1);
        return {"down West5", 5};
    }
    const auto fourth = find_extractable(d3);
    if (!fourth) throw LimitedStop{"down fourth extraction failed: " + seq_to_string(s)};
    const auto [j4, f4] = *fourth;
    const IntSeq d4 = remove_at(d3, j4);
    IntSeq tau3(d4);
    tau3.push_back(f1 - 1);
    tau3.push_back(f2 - 1);
    tau3.push_back(f3 - 1);
    tau3.push_back(f4 - 1);
    const IntSeq w7(tau3.end() - 7, tau3.end());
    if (is_far_apart(w7)) throw LimitedStop{"bad West7 window: " + seq_to_string(s)};
    if (!(j1 < n - 2 && j2 < static_cast<int>(d1.size()) - 2 &&
          j3 < static_cast<int>(d2.size()) - 2 && j4 < static_cast<int>(d3.size()) - 2))
        throw LimitedStop{"down West7 position bound: " + seq_to_string(s)};
    const IntSeq out7 = west7(w7);
    IntSeq combined(tau3.begin(), tau3.end() - 7);
    combined.insert(combined.end(), out7.begin(), out7.end());
    IntSeq base(combined.begin(), combined.end() - 3);
    IntSeq raised(combined.end() - 3, combined.end());
    for (int& v : raised) ++v;
    const IntSeq image = inject_right_to_left(base, raised);
    check_image(s, image, n, d, -1);
    return {"down West7", 7};
}

}  // namespace

CheckReport limited_nonzero_check(const std::string& data_dir) {
    CheckReport report;
    report.name = "limited-nonzero";
    report.pass = true;
    constexpr int kNMin = 4, kNMax = 13, kMaxNonzero = 7;
    std::map<int, long long> generated;
    long long eligible_up = 0, eligible_down = 0, failures = 0;
    std::map<std::string, long long> branches;
    std::map<std::pair<std::string, int>, long long> levels;
    for (int n = kNMin; n <= kNMax; ++n) {
        generated[n] = 0;
        for_each_dyck(n, [&](const IntSeq& s) {
            int nonzero = 0;
            for (int v : s) nonzero += (v != 0);
            if (nonzero > kMaxNonzero) return;
            ++generated[n];
            const long long d = defc(s);
            if (d > 2 * n - 8) return;
            const long long ell = (binom2(n) - d) / 2;
            try {
                if (area(s) < ell) {
                    const auto [branch, level] = limited_checked_up(s, n, d);
                    ++eligible_up;
                    ++branches[branch];
                    ++levels[{"up", level}];
                }
                if (area(s) <= ell && !is_special_skeleton(s)) {
                    const auto [branch, level] = limited_checked_down(s, n, d);
                    ++eligible_down;
                    ++branches[branch];
                    ++levels[{"down", level}];
                }
            } catch (const LimitedStop& stop) {
                ++failures;
                note_failure(report, stop.message);
            } catch (const std::exception& err) {
                ++failures;
                note_failure(report, std::string("unexpected error: ") + err.what() + " on " +
                                         seq_to_string(s));
            }
        });
    }
    for (const auto& [n, count] : generated)
        report.add("generated n=" + std::to_string(n), count);
    report.add("eligible up", eligible_up);
    report.add("eligible down", eligible_down);
    for (const auto& [branch, count] : branches) report.add("branch " + branch, count);
    for (const auto& [key, count] : levels)
        report.add("level " + key.first + " " + std::to_string(key.second), count);
    report.add("failures", failures);
    compare_with_golden(report, data_dir + "/limited.golden");
    return report;
}

// ---------------------------------------------------------------------------
// Excluded-prefix-form checker (9 <= n <= 16).

namespace {

void prefix_words(int n, int claim, bool pq_eq_4,
                  const std::function<void(const IntSeq&)>& visit) {
    IntSeq prefix;
    std::vector<int> bounds;
    if (claim == 1 && !pq_eq_4) {
        for (int v = 0; v <= n - 4; ++v) prefix.push_back(v);
        bounds = {n - 3, n - 2, n - 1};
    } else if (claim == 1 && pq_eq_4) {
        for (int v = 0; v <= n - 5; ++v) prefix.push_back(v);
        bounds = {n - 4, n - 3, n - 2, n - 1};
    } else if (claim == 2 && !pq_eq_4) {
        prefix.push_back(0);
        for (int v = 0; v <= n - 5; ++v) prefix.push_back(v);
        bounds = {n - 4, n - 3, n - 2};
    } else {
        prefix.push_back(0);
        for (int v = 0; v <= n - 6; ++v) prefix.push_back(v);
        bounds = {n - 5, n - 4, n - 3, n - 2};
    }
    IntSeq word(prefix);
    word.resize(prefix.size() + bounds.size());
    std::function<void(std::size_t)> rec = [&](std::size_t slot) {
        if (slot == bounds.size()) {
            visit(word);
            return;
        }
        for (int v = 0; v <= bounds[slot]; ++v) {
            word[prefix.size() + slot] = v;
            rec(slot + 1);
        }
    };
    rec(0);
}

}  // namespace

CheckReport prefix_form_check(const std::string& data_dir) {
    CheckReport report;
    report.name = "prefix-form";
    report.pass = true;
    long long failures = 0;
    for (int n = 9; n <= 16; ++n) {
        const long long m_total = binom2(n);
        for (int claim = 1; claim <= 2; ++claim) {
            for (const bool pq_eq_4 : {false, true}) {
                // The p+q=4 boundary carries area adjustment q+1=3 on the up
                // side and q=3 on the down side.
                const int adjustment = pq_eq_4 ? 3 : 0;
                long long count = 0;
                prefix_words(n, claim, pq_eq_4, [&](const IntSeq& word) {
                    ++count;
                    const long long d = defc(word);
                    const long long a = area(word);
                    const bool deficit_contradiction = d > 2 * n - 8;
                    const bool area_contradiction = 2 * a > m_total - d - 2 * adjustment;
                    if (!deficit_contradiction && !area_contradiction) {
                        ++failures;
                        note_failure(report, "surviving word " + seq_to_string(word) + " at n=" +
                                                 std::to_string(n));
                    }
                });
                report.add("n=" + std::to_string(n) + " claim=" + std::to_string(claim) +
                               (pq_eq_4 ? " pq_eq_4" : " pq_lt_4"),
                           count);
            }
        }
    }
    report.add("failures", failures);
    compare_with_golden(report, data_dir + "/prefix.golden");
    return report;
}

// ---------------------------------------------------------------------------
// East7/West7 seven-window checker.

namespace {

using Window7 = std::array<int, 7>;

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

bool window_far_apart(const Window7& w) {
    return is_far_apart(IntSeq(w.begin(), w.end()));
}

bool east3_fails_w(const Window7& p) { return p[3] > p[4] + 1; }

bool east5_fails_w(const Window7& p) {
    const int x_m1 = p[2], x_0 = p[3], x_1 = p[4], x_2 = p[5];
    const int y_0 = x_m1 > x_0 + 1 ? x_m1 : x_0;
    const bool case2a = (x_m1 > x_1 + 1) && (y_0 <= x_2 + 1);
    const bool case2b = (x_m1 <= x_1 + 1) && (x_m1 <= x_2 + 1);
    return !case2a && !case2b;
}

bool is_valid_l_element(const Window7& p) {
    for (int i = 0; i < 3; ++i)
        if (p[i + 1] > p[i] + 1) return false;
    for (int i = 4; i < 6; ++i)
        if (p[i] > p[i + 1] + 1) return false;
    return true;
}

std::set<Window7> build_ew() {
    std::set<Window7> windows;
    std::vector<Window7> bases;
    Window7 base{};
    std::function<void(int)> gen = [&](int pos) {
        if (pos == 7) {
            bases.push_back(base);
            return;
        }
        for (int step = 0; step <= 2; ++step) {
            base[static_cast<std::size_t>(pos)] = base[static_cast<std::size_t>(pos - 1)] + step;
            gen(pos + 1);
        }
    };
    base[0] = 0;
    gen(1);
    for (Window7 b : bases) {
        std::sort(b.begin(), b.end());
        do {
            if (is_valid_l_element(b) && east3_fails_w(b) && east5_fails_w(b) &&
                window_far_apart(b))
                windows.insert(b);
        } while (std::next_permutation(b.begin(), b.end()));
    }
    return windows;
}

std::set<Window7> reverse_all(const std::set<Window7>& windows) {
    std::set<Window7> out;
    for (Window7 w : windows) {
        std::reverse(w.begin(), w.end());
        out.insert(w);
    }
    return out;
}

/// Corrected local id and residual q0 for a window and prefix maximum m.
std::pair<long long, long long> window_stats(const Window7& w, int m, int suffix_len) {
    std::array<bool, 7> win_first{};
    {
        std::map<int, int> seen;
        for (int i = 0; i < 7; ++i) {
            if (!seen.count(w[static_cast<std::size_t>(i)])) {
                seen[w[static_cast<std::size_t>(i)]] = i;
                win_first[static_cast<std::size_t>(i)] = true;
            }
        }
    }
    std::array<bool, 7> is_initial{};
    for (int i = 0; i < 7; ++i)
        is_initial[static_cast<std::size_t>(i)] =
            win_first[static_cast<std::size_t>(i)] && w[static_cast<std::size_t>(i)] > m;

    long long pair_count = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            const int vi = w[static_cast<std::size_t>(i)], vj = w[static_cast<std::size_t>(j)];
            if (vi > vj + 1)
                ++pair_count;
            else if (vi < vj && !is_initial[static_cast<std::size_t>(i)])
                ++pair_count;
        }

    long long suffix_correction = 0;
    for (int j = 7 - suffix_len; j < 7; ++j)
        for (int value = m + 1; value < w[static_cast<std::size_t>(j)]; ++value) {
            bool present = false;
            for (int i = 0; i < j && !present; ++i)
                present = (w[static_cast<std::size_t>(i)] == value);
            if (!present) ++suffix_correction;
        }

    long long q0 = 0;
    for (int i = 0; i < 7; ++i)
        if (!is_initial[static_cast<std::size_t>(i)])
            q0 += std::max(0, (m - 1) - w[static_cast<std::size_t>(i)]);
    return {pair_count - suffix_correction, q0};
}

int fourth_largest(const Window7& w) {
    Window7 sorted = w;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return sorted[3];
}

std::pair<long long, int> compute_id_mid(const Window7& w, int suffix_len) {
    const int m = std::max({w[0] - 1, w[6] - 1, fourth_largest(w)});
    return {window_stats(w, m, suffix_len).first, m};
}

long long compute_id_base(const Window7& w, int suffix_len) {
    return window_stats(w, std::max(w[0] - 1, w[6] - 1), suffix_len).first;
}

int largest_k_with_half_binom(int n) {
    const long long half = binom2(n) / 2;
    int value = 0;
    while (binom2(value + 1) <= half) ++value;
    return value;
}

using TableEntry = std::pair<std::optional<int>, std::optional<int>>;  // (N, K)

TableEntry compute_nk_case1(int id_val) {
    std::optional<int> max_n;
    for (int n = 8; n < 300; ++n) {
        const long long m0 = ceil_div(n + id_val - 16, 3);
        const long long q_star = 3 * m0 - (n + id_val - 16);
        const long long lhs_twice =
            2 * (binom2(m0 + 1) + (m0 - 1) * (n - m0 - 1) - q_star);
        const long long rhs_twice = binom2(n) - id_val - q_star - 3 * (n - m0 - 8) - 8;
        if (lhs_twice <= rhs_twice) max_n = n;
    }
    if (!max_n) return {std::nullopt, std::nullopt};
    return {max_n, largest_k_with_half_binom(*max_n)};
}

TableEntry compute_nk_case2(int id_val) {
    std::optional<int> max_n;
    for (int n = 8; n < 300; ++n) {
        const long long chi = 2LL * n + id_val - 24;
        const long long m0 = std::max<long long>(0, ceil_div(chi, 4));
        const long long q_star = std::max<long long>(0, std::min<long long>(4 * m0 - chi, 3));
        const long long lhs_twice =
            2 * (binom2(m0 + 1) + (m0 - 1) * (n - m0 - 1) - q_star);
        const long long rhs_twice = binom2(n) - id_val - q_star - 4 * (n - m0 - 8) - 8;
        if (lhs_twice <= rhs_twice) max_n = n;
    }
    if (!max_n) return {std::nullopt, std::nullopt};
    return {max_n, largest_k_with_half_binom(*max_n)};
}

/// Maximal blocks of the sorted values separated by gaps of at least 2.
std::vector<std::vector<int>> value_groups(const Window7& w) {
    std::vector<int> sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> groups;
    std::vector<int> current{sorted[0]};
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] - sorted[i - 1] <= 1) {
            current.push_back(sorted[i]);
        } else {
            groups.push_back(current);
            current = {sorted[i]};
        }
    }
    groups.push_back(current);
    return groups;
}

/// Gap-expanded children of a window with maximum value at most k_limit.
std::vector<Window7> children_absolute(const Window7& w, int k_limit) {
    const int extra = k_limit - *std::max_element(w.begin(), w.end());
    if (extra < 0) return {};
    const auto groups = value_groups(w);
    const int num_gaps = static_cast<int>(groups.size()) + 1;
    std::set<Window7> children;
    std::vector<int> composition(static_cast<std::size_t>(num_gaps), 0);
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == num_gaps - 1) {
            composition[static_cast<std::size_t>(slot)] = remaining;
            std::map<int, int> value_map;
            int cumulative = 0;
            for (std::size_t g = 0; g < groups.size(); ++g) {
                cumulative += composition[g];
                for (int value : groups[g])
                    if (!value_map.count(value)) value_map[value] = value + cumulative;
            }
            Window7 child;
            for (int i = 0; i < 7; ++i)
                child[static_cast<std::size_t>(i)] = value_map[w[static_cast<std::size_t>(i)]];
            children.insert(child);
            return;
        }
        for (int part = 0; part <= remaining; ++part) {
            composition[static_cast<std::size_t>(slot)] = part;
            rec(slot + 1, remaining - part);
        }
    };
    rec(0, extra);
    return std::vector<Window7>(children.begin(), children.end());
}

void partitions_upto(int max_total, int max_parts, int max_val,
                     std::vector<std::vector<int>>& out) {
    out.push_back({});
    if (max_total <= 0 || max_parts <= 0 || max_val <= 0) return;
    std::vector<int> current;
    std::function<void(int, int, int)> rec = [&](int remaining, int parts_left, int cap) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (parts_left == 0) return;
        for (int first = std::min(remaining, cap); first >= 1; --first) {
            current.push_back(first);
            rec(remaining - first, parts_left - 1, first);
            current.pop_back();
        }
    };
    for (int total = 1; total <= max_total; ++total) rec(total, max_parts, max_val);
}

// Per-thread memo: the search workers hit this concurrently.
thread_local std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> partition_cache;

const std::vector<std::vector<int>>& cached_partitions(int max_total, int max_parts, int max_val) {
    const auto key = std::make_tuple(max_total, max_parts, max_val);
    auto it = partition_cache.find(key);
    if (it == partition_cache.end()) {
        std::vector<std::vector<int>> built;
        partitions_upto(max_total, max_parts, max_val, built);
        it = partition_cache.emplace(key, std::move(built)).first;
    }
    return it->second;
}

std::pair<long long, long long> defc_and_area(const std::vector<int>& seq) {
    long long dinv_count = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j] || seq[i] == seq[j] + 1) ++dinv_count;
    long long total = 0;
    for (int v : seq) total += v;
    return {binom2(static_cast<long long>(seq.size())) - total - dinv_count, total};
}

int first_n_with_m_allowed(int m) {
    int n = 8;
    while (m > largest_k_with_half_binom(n)) ++n;
    return n;
}

long long deficit_n_upper(int coeff, int m, long long int_defc, long long q0, int n_limit) {
    const long long numerator = static_cast<long long>(coeff) * m + 8LL * coeff - 8 - int_defc - q0;
    if (coeff == 2) return n_limit;
    return std::min<long long>(n_limit, floor_div(numerator, coeff - 2));
}

/// Searches one (child, n, m) cell for a deficit/area counterexample.
std::optional<std::string> check_window_single(const Window7& child, int n, int m, int coeff,
                                               long long int_defc, long long q0,
                                               long long child_area) {
    const long long target_defc = 2LL * n - 8;
    const int total_free = n - m - 8;
    if (total_free < 0) return std::nullopt;
    const long long q_prime_max = target_defc - int_defc - q0 - static_cast<long long>(coeff) * total_free;
    if (q_prime_max < 0) return std::nullopt;

    const int max_part = std::max(0, m - 1);
    std::vector<int> prefix;
    for (int v = 0; v <= m; ++v) prefix.push_back(v);
    const long long prefix_area = binom2(m + 1);
    const long long m_choose = binom2(n);

    for (int repeat_count = 0; repeat_count <= total_free; ++repeat_count) {
        if (m == 0 && repeat_count < total_free) continue;
        const int middle_len = total_free - repeat_count;
        const long long base_area = prefix_area + static_cast<long long>(repeat_count) * m + child_area;
        const long long max_partition_sum =
            std::min<long long>(q_prime_max, static_cast<long long>(middle_len) * max_part);
        const long long min_possible_area =
            base_area + static_cast<long long>(middle_len) * (m - 1) - max_partition_sum;
        if (2 * min_possible_area > m_choose - 8) continue;

        for (const std::vector<int>& partition :
             cached_partitions(static_cast<int>(q_prime_max), middle_len, max_part)) {
            std::vector<int> seq(prefix);
            for (int r = 0; r < repeat_count; ++r) seq.push_back(m);
            for (int i = middle_len - 1; i >= 0; --i) {
                const int deficit = i < static_cast<int>(partition.size()) ? partition[static_cast<std::size_t>(i)] : 0;
                seq.push_back(m - 1 - deficit);
            }
            seq.insert(seq.end(), child.begin(), child.end());
            const auto [d, a] = defc_and_area(seq);
            if (d > target_defc) continue;
            if (2 * a > m_choose - d - 8) continue;
            IntSeq found(seq.begin(), seq.end());
            return "counterexample sequence " + seq_to_string(found) + " (n=" + std::to_string(n) +
                   ", m=" + std::to_string(m) + ", defc=" + std::to_string(d) +
                   ", area=" + std::to_string(a) + ")";
        }
    }
    return std::nullopt;
}

struct CaseCounts {
    long long windows = 0;
    long long children = 0;
    long long active_children = 0;
    long long triples = 0;
    std::optional<std::string> problem;
};

struct East7Tables {
    std::map<int, TableEntry> case1;
    std::map<int, TableEntry> case2;
};

CaseCounts run_case(int case_num, int suffix_len, const std::vector<Window7>& windows,
                    const std::map<int, TableEntry>& table, int threads, int stride) {
    const int worker_count = std::max(1, threads);
    std::vector<CaseCounts> partial(static_cast<std::size_t>(worker_count));
    auto work = [&](int worker) {
        CaseCounts& counts = partial[static_cast<std::size_t>(worker)];
        for (std::size_t idx = static_cast<std::size_t>(worker); idx < windows.size();
             idx += static_cast<std::size_t>(worker_count)) {
            if (stride > 1 && idx % static_cast<std::size_t>(stride) != 0) continue;
            const Window7& base_window = windows[idx];
            ++counts.windows;
            const long long id_val = case_num == 1 ? compute_id_mid(base_window, suffix_len).first
                                                   : compute_id_base(base_window, suffix_len);
            const auto entry = table.find(static_cast<int>(id_val));
            if (entry == table.end()) {
                counts.problem = "unexpected id " + std::to_string(id_val) + " in case " +
                                 std::to_string(case_num);
                return;
            }
            const auto [n_limit, k_limit] = entry->second;
            if (!n_limit || !k_limit) continue;
            const auto children = children_absolute(base_window, *k_limit);
            counts.children += static_cast<long long>(children.size());
            for (const Window7& child : children) {
                bool child_has_checked_triple = false;
                long long child_area = 0;
                for (int v : child) child_area += v;
                const int fourth = fourth_largest(child);
                int m_start, m_stop;
                if (case_num == 1) {
                    m_start = std::max({0, child[0] - 1, child[6] - 1, fourth});
                    m_stop = largest_k_with_half_binom(*n_limit);
                } else {
                    m_start = std::max({0, child[0] - 1, child[6] - 1});
                    m_stop = std::min(largest_k_with_half_binom(*n_limit), fourth - 1);
                }
                if (m_start > m_stop) continue;
                for (int m = m_start; m <= m_stop; ++m) {
                    int g = 0;
                    for (int v : child) g += (v > m);
                    int coeff;
                    if (case_num == 1) {
                        if (g > 3) continue;
                        coeff = 3;
                    } else {
                        if (g < 4) continue;
                        coeff = g;
                    }
                    const auto stats = window_stats(child, m, suffix_len);
                    const int n_start = std::max({8, m + 8, first_n_with_m_allowed(m)});
                    const long long n_stop =
                        deficit_n_upper(coeff, m, stats.first, stats.second, *n_limit);
                    for (long long n = n_start; n <= n_stop; ++n) {
                        ++counts.triples;
                        child_has_checked_triple = true;
                        if (auto problem = check_window_single(child, static_cast<int>(n), m,
                                                               coeff, stats.first, stats.second,
                                                               child_area)) {
                            counts.problem = *problem;
                            return;
                        }
                    }
                }
                if (child_has_checked_triple) ++counts.active_children;
            }
        }
    };
    if (worker_count == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < worker_count; ++t) pool.emplace_back(work, t);
        for (std::thread& t : pool) t.join();
    }
    CaseCounts total;
    for (const CaseCounts& counts : partial) {
        total.windows += counts.windows;
        total.children += counts.children;
        total.active_children += counts.active_children;
        total.triples += counts.triples;
        if (counts.problem && !total.problem) total.problem = counts.problem;
    }
    return total;
}

}  // namespace

CheckReport east7_window_check(const std::string& data_dir, East7Options options) {
    CheckReport report;
    report.name = "east7-west7";
    report.pass = true;

    const std::set<Window7> ew_set = build_ew();
    const std::set<Window7> ww_set = reverse_all(ew_set);
    report.add("EW", static_cast<long long>(ew_set.size()));
    report.add("WW", static_cast<long long>(ww_set.size()));
    {
        std::set<Window7> both(ew_set);
        both.insert(ww_set.begin(), ww_set.end());
        report.add("EW union WW", static_cast<long long>(both.size()));
    }

    // Threshold tables from the descent inequalities.
    East7Tables tables;
    for (int id_val = 10; id_val <= 21; ++id_val) tables.case1[id_val] = compute_nk_case1(id_val);
    for (int id_val = 0; id_val <= 21; ++id_val) tables.case2[id_val] = compute_nk_case2(id_val);
    auto encode = [](const std::optional<int>& v) { return v ? *v : -1LL; };
    for (const auto& [id_val, entry] : tables.case1) {
        report.add("case1 id=" + std::to_string(id_val) + " N", encode(entry.first));
        report.add("case1 id=" + std::to_string(id_val) + " K", encode(entry.second));
    }
    for (const auto& [id_val, entry] : tables.case2) {
        report.add("case2 id=" + std::to_string(id_val) + " N", encode(entry.first));
        report.add("case2 id=" + std::to_string(id_val) + " K", encode(entry.second));
    }

    // id_mid structural bound and distribution over EW union WW.
    std::map<long long, long long> distribution;
    std::optional<std::tuple<long long, int, std::string, Window7>> min_record;
    for (const auto& [suffix_len, side, windows] :
         {std::make_tuple(3, std::string("East"), &ew_set),
          std::make_tuple(4, std::string("West"), &ww_set)}) {
        for (const Window7& w : *windows) {
            const auto [id_val, threshold] = compute_id_mid(w, suffix_len);
            ++distribution[id_val];
            if (!min_record || id_val < std::get<0>(*min_record))
                min_record = std::make_tuple(id_val, threshold, side, w);
        }
    }
    const long long min_id_mid = std::get<0>(*min_record);
    report.add("min id_mid", min_id_mid);
    for (const auto& [id_val, count] : distribution)
        report.add("id_mid " + std::to_string(id_val), count);
    if (min_id_mid < 10) note_failure(report, "id_mid bound below 10");
    {
        std::ostringstream os;
        const auto& [id_val, threshold, side, w] = *min_record;
        os << "min id_mid=" << id_val << ", threshold=" << threshold << ", side=" << side
           << ", window=" << seq_to_string(IntSeq(w.begin(), w.end()));
        report.notes.push_back(os.str());
    }

    // Finite gap-expanded searches.
    const std::vector<Window7> ew(ew_set.begin(), ew_set.end());
    const std::vector<Window7> ww(ww_set.begin(), ww_set.end());
    const int stride = options.fast ? 16 : 1;
    long long problems = 0;
    struct CaseSpec {
        int case_num;
        const std::vector<Window7>* windows;
        int suffix_len;
        const char* label;
    };
    const CaseSpec specs[] = {
        {1, &ew, 3, "case1 East"},
        {1, &ww, 4, "case1 West"},
        {2, &ew, 3, "case2 East"},
        {2, &ww, 4, "case2 West"},
    };
    for (const CaseSpec& spec : specs) {
        const auto counts =
            run_case(spec.case_num, spec.suffix_len, *spec.windows,
                     spec.case_num == 1 ? tables.case1 : tables.case2, options.threads, stride);
        if (!options.fast) {
            report.add(std::string(spec.label) + " children", counts.children);
            report.add(std::string(spec.label) + " active", counts.active_children);
            report.add(std::string(spec.label) + " triples", counts.triples);
        }
        if (counts.problem) {
            ++problems;
            note_failure(report, *counts.problem);
        }
    }
    report.add("problems", problems);

    compare_with_golden(report, data_dir + (options.fast ? "/east7_fast.golden" : "/east7.golden"));
    return report;
}

}  // namespace dycklab
