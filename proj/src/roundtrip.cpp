#include "dycklab/bijections.hpp"
#include "dycklab/catalan.hpp"
#include "dycklab/skeleton.hpp"
#include "dycklab/symfun.hpp"
#include "dycklab/text.hpp"
#include "dycklab/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dycklab {

RoundtripBudget RoundtripBudget::tiny() {
    RoundtripBudget b;
    b.rowsert_entry_max = 3;
    b.rowsert_len_max = 2;
    b.factor_multiset_size_max = 3;
    b.factor_value_max = 2;
    b.phi_chain_n_max = 3;
    b.window_entry_max = 2;
    b.updown_n_max = 3;
    b.strings_n_max = 3;
    b.schur_size_max = 3;
    b.schur_value_max = 2;
    b.catalan_equal_n_max = 3;
    b.skeleton_formula_n_max = 3;
    b.partition_formula_n_max = 3;
    b.symmetry_n_max = 3;
    return b;
}

IntSeq shrink_counterexample(IntSeq seed, const std::function<bool(const IntSeq&)>& fails) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < seed.size(); ++i) {
            IntSeq smaller(seed);
            smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
            if (fails(smaller)) {
                seed = std::move(smaller);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (std::size_t i = 0; i < seed.size(); ++i) {
            if (seed[i] <= 0) continue;
            IntSeq lowered(seed);
            --lowered[i];
            if (fails(lowered)) {
                seed = std::move(lowered);
                changed = true;
                break;
            }
        }
    }
    return seed;
}

namespace {

void fail_with(CheckReport& report, const std::string& message) {
    report.pass = false;
    if (!report.first_failure) report.first_failure = message;
}

std::vector<IntSeq> dual_words_upto(int entry_max, int len_max) {
    std::vector<IntSeq> out{IntSeq{}};
    std::vector<IntSeq> frontier{IntSeq{}};
    for (int len = 1; len <= len_max; ++len) {
        std::vector<IntSeq> next;
        for (const IntSeq& w : frontier) {
            const int lo = w.empty() ? 0 : w.back() + 2;
            for (int v = lo; v <= entry_max; ++v) {
                IntSeq extended(w);
                extended.push_back(v);
                out.push_back(extended);
                next.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// --- Suite 1: rowsert/worsert -----------------------------------------------

bool suite_row_insertion(const RoundtripBudget& budget, CheckReport& report) {
    const std::vector<IntSeq> words =
        dual_words_upto(budget.rowsert_entry_max, budget.rowsert_len_max);
    long long pairs = 0, roundtrips = 0;
    for (const IntSeq& row : words) {
        for (const IntSeq& input : words) {
            ++pairs;
            RowsertTrace trace;
            const RowsertResult forward = rowsert(row, input, &trace);
            if (!is_dual(forward.evicted) || !is_dual(forward.row)) {
                fail_with(report, "rowsert broke dual Dyck outputs on (" + seq_to_string(row) +
                                      ", " + seq_to_string(input) + ")");
                return false;
            }
            IntSeq lhs(row);
            lhs.insert(lhs.end(), input.begin(), input.end());
            IntSeq rhs(forward.evicted);
            rhs.insert(rhs.end(), forward.row.begin(), forward.row.end());
            IntSeq lhs_sorted(lhs), rhs_sorted(rhs);
            std::sort(lhs_sorted.begin(), lhs_sorted.end());
            std::sort(rhs_sorted.begin(), rhs_sorted.end());
            if (lhs_sorted != rhs_sorted || di(lhs) != di(rhs)) {
                fail_with(report, "rowsert multiset/di contract failed on (" +
                                      seq_to_string(row) + ", " + seq_to_string(input) + ")");
                return false;
            }
            if (!trace.case0_used()) {
                ++roundtrips;
                // Alpha monotonicity along the written order.
                const std::vector<int> alphas = trace.alphas_in_written_order(false);
                for (std::size_t h = 0; h + 1 < alphas.size(); ++h) {
                    if (alphas[h + 1] < alphas[h] + 2) {
                        fail_with(report, "rowsert alpha monotonicity failed on (" +
                                              seq_to_string(row) + ", " + seq_to_string(input) + ")");
                        return false;
                    }
                }
                RowsertTrace back_trace;
                const WorsertResult back = worsert(forward.evicted, forward.row, &back_trace);
                if (back.row != row || back.output != input) {
                    fail_with(report, "worsert failed to invert rowsert on (" +
                                          seq_to_string(row) + ", " + seq_to_string(input) + ")");
                    return false;
                }
                const std::vector<int> back_alphas = back_trace.alphas_in_written_order(true);
                for (std::size_t h = 0; h + 1 < back_alphas.size(); ++h) {
                    if (back_alphas[h + 1] < back_alphas[h] + 2) {
                        fail_with(report, "worsert alpha monotonicity failed");
                        return false;
                    }
                }
            }
            // Adjoint conjugation: worsert(E,R) matches the adjoint rowsert run.
            const WorsertResult direct = worsert(row, input);
            const RowsertResult adj = rowsert(adjoint(input), adjoint(row));
            if (adjoint(adj.evicted) != direct.output || adjoint(adj.row) != direct.row) {
                fail_with(report, "worsert is not the adjoint of rowsert on (" +
                                      seq_to_string(row) + ", " + seq_to_string(input) + ")");
                return false;
            }
        }
    }
    report.add("rowsert pairs", pairs);
    report.add("rowsert no-case0 roundtrips", roundtrips);
    return true;
}

// --- Suite 2: tableau-factorization bijection --------------------------------

void for_each_multiset(int size_max, int value_max, const std::function<void(const IntSeq&)>& visit) {
    IntSeq current;
    std::function<void(int, int)> walk = [&](int remaining, int min_value) {
        if (remaining == 0) return;
        for (int v = min_value; v <= value_max; ++v) {
            current.push_back(v);
            visit(current);
            walk(remaining - 1, v);
            current.pop_back();
        }
    };
    visit(current);
    walk(size_max, 0);
}

bool suite_tableau_bijection(const RoundtripBudget& budget, CheckReport& report) {
    long long forward_roundtrips = 0, backward_roundtrips = 0;
    bool ok = true;
    for_each_multiset(budget.factor_multiset_size_max, budget.factor_value_max,
                      [&](const IntSeq& multiset) {
        if (!ok) return;
        const int n = static_cast<int>(multiset.size());
        // Forward: factorization -> (P,Q) -> factorization, over every dual
        // factorization with factor indices below n.
        IntSeq word(multiset);
        std::sort(word.begin(), word.end());
        do {
            // Dual factorizations of this word: labels weakly increase with
            // forced breaks where the dual gap fails.
            std::vector<int> labels(word.size(), 0);
            std::function<void(std::size_t)> assign = [&](std::size_t pos) {
                if (!ok) return;
                if (pos == word.size()) {
                    DualFactorization f;
                    const int top = word.empty() ? 0 : labels.back();
                    f.factors.assign(static_cast<std::size_t>(top + 1), IntSeq{});
                    for (std::size_t i = 0; i < word.size(); ++i)
                        f.factors[static_cast<std::size_t>(labels[i])].push_back(word[i]);
                    f.normalize();
                    const auto [p, q] = insert_factorization(f);
                    if (!is_valid_tableau(p) ||
                        (q.rows.empty() ? !p.rows.empty() : !is_semistandard(q)) ||
                        di(row_reading_word(p)) != f.di_value()) {
                        fail_with(report,
                                  "insert_factorization contract failed on " +
                                      factors_to_string(f.factors));
                        ok = false;
                        return;
                    }
                    const DualFactorization back = extract_factorization(p, q);
                    if (back != f) {
                        fail_with(report, "extract(insert(f)) != f for " +
                                              factors_to_string(f.factors));
                        ok = false;
                        return;
                    }
                    ++forward_roundtrips;
                    return;
                }
                const int lo =
                    pos == 0 ? 0
                             : labels[pos - 1] + (word[pos] >= word[pos - 1] + 2 ? 0 : 1);
                for (int label = lo; label < n; ++label) {
                    labels[pos] = label;
                    assign(pos + 1);
                }
            };
            if (word.empty()) {
                const DualFactorization empty;
                const auto [p, q] = insert_factorization(empty);
                if (!p.rows.empty() || !q.rows.empty() ||
                    !(extract_factorization(p, q) == empty)) {
                    fail_with(report, "empty factorization round trip failed");
                    ok = false;
                } else {
                    ++forward_roundtrips;
                }
            } else {
                assign(0);
            }
        } while (ok && std::next_permutation(word.begin(), word.end()));
        if (!ok) return;
        // Backward: (P,Q) -> factorization -> (P,Q).
        for (int d = 0; d <= static_cast<int>(binom2(n)); ++d) {
            for (const DyckTableau& p : enumerate_dyck_tableaux(multiset, d)) {
                // All semistandard fillings with labels below n.
                RecordingTableau q;
                q.rows.assign(p.rows.size(), {});
                for (std::size_t r = 0; r < p.rows.size(); ++r)
                    q.rows[r].assign(p.rows[r].size(), 0);
                std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r,
                                                                         std::size_t c) {
                    if (!ok) return;
                    if (r == q.rows.size()) {
                        const DualFactorization f = extract_factorization(p, q);
                        const auto [p2, q2] = insert_factorization(f);
                        if (p2 != p || q2 != q) {
                            fail_with(report, "insert(extract(P,Q)) != (P,Q) for P=" +
                                                  rows_to_string(p.rows));
                            ok = false;
                        }
                        ++backward_roundtrips;
                        return;
                    }
                    if (c == q.rows[r].size()) {
                        fill(r + 1, 0);
                        return;
                    }
                    int lo = 0;
                    if (c > 0) lo = std::max(lo, q.rows[r][c - 1]);
                    if (r > 0 && c < q.rows[r - 1].size()) lo = std::max(lo, q.rows[r - 1][c] + 1);
                    for (int label = lo; label < n; ++label) {
                        q.rows[r][c] = label;
                        fill(r, c + 1);
                    }
                };
                fill(0, 0);
                if (!ok) return;
            }
        }
    });
    if (ok) {
        report.add("factorization forward roundtrips", forward_roundtrips);
        report.add("factorization backward roundtrips", backward_roundtrips);
    }
    return ok;
}

// --- Suite 3: phi chain -------------------------------------------------------

struct Triple4Key {
    IntSeq f;
    std::vector<IntSeq> p_rows;
    std::vector<std::vector<int>> q_rows;
    auto operator<=>(const Triple4Key&) const = default;
};

bool suite_phi_chain(const RoundtripBudget& budget, CheckReport& report) {
    long long words = 0;
    for (int n = 1; n <= budget.phi_chain_n_max; ++n) {
        std::set<Triple4Key> images;
        bool ok = true;
        for_each_dyck(n, [&](const IntSeq& d) {
            if (!ok) return;
            ++words;
            const TripleStats expected{area(d), dinv(d)};
            const Triple1 t1 = phi1(d);
            if (triple_stats(t1) != expected) {
                fail_with(report, "phi1 changed statistics on " + seq_to_string(d));
                ok = false;
                return;
            }
            if (phi1_inverse(t1) != d) {
                fail_with(report, "phi1 round trip failed on " + seq_to_string(d));
                ok = false;
                return;
            }
            const Triple2 t2 = phi2(t1);
            const Triple3 t3 = phi3(t2);
            const Triple4 t4 = phi4(t3);
            if (triple_stats(t2) != expected || triple_stats(t3) != expected ||
                triple_stats(t4) != expected) {
                fail_with(report, "phi chain changed statistics on " + seq_to_string(d));
                ok = false;
                return;
            }
            if (!(phi2_inverse(t2) == t1) || !(phi3_inverse(t3) == t2) ||
                !(phi4_inverse(t4) == t3)) {
                fail_with(report, "phi chain inverse failed on " + seq_to_string(d));
                ok = false;
                return;
            }
            images.insert(Triple4Key{t4.f, t4.p.rows, t4.q.rows});
        });
        if (!ok) return false;
        // Injectivity plus image characterization: the images are exactly the
        // Type 4 triples with |F| + |P| = n.
        long long expected_images = 0;
        for (int skeleton_len = 1; skeleton_len <= n; ++skeleton_len) {
            for_each_dyck(skeleton_len, [&](const IntSeq& f) {
                if (!is_m_skeleton(f)) return;
                const int m = f.back();
                for (const DyckTableau& p :
                     enumerate_two_column_tableaux(n - skeleton_len, m - 1)) {
                    expected_images +=
                        static_cast<long long>(enumerate_binary_reverse_ssyt(p.shape()).size());
                }
            });
        }
        if (static_cast<long long>(images.size()) != expected_images) {
            fail_with(report, "phi chain image count mismatch at n=" + std::to_string(n) +
                                  ": got " + std::to_string(images.size()) + ", expected " +
                                  std::to_string(expected_images));
            return false;
        }
    }
    report.add("phi chain words", words);
    return true;
}

// --- Suite 4: East/West window box --------------------------------------------

bool suite_east_west(const RoundtripBudget& budget, CheckReport& report) {
    const int cap = budget.window_entry_max;
    long long windows7 = 0, windows5 = 0;
    IntSeq w(7, 0);
    std::function<bool(int)> rec7 = [&](int pos) -> bool {
        if (pos == 7) {
            const bool l_form = is_affine(IntSeq(w.begin(), w.begin() + 4)) &&
                                is_reverse(IntSeq(w.begin() + 4, w.end()));
            if (!l_form || is_far_apart(w)) return true;
            ++windows7;
            const LocalMove move = east(w);
            const IntSeq& y = *move.output;
            // Multiset and di preservation, R-form membership.
            IntSeq in_sorted(w), out_sorted(y);
            std::sort(in_sorted.begin(), in_sorted.end());
            std::sort(out_sorted.begin(), out_sorted.end());
            const bool r_form = is_affine(IntSeq(y.begin(), y.begin() + 3)) &&
                                is_reverse(IntSeq(y.begin() + 3, y.end()));
            if (in_sorted != out_sorted || di(w) != di(y) || !r_form || y.front() != w.front() ||
                y.back() != w.back()) {
                fail_with(report, "east broke its window contract on " + seq_to_string(w));
                return false;
            }
            const LocalMove back = west(y);
            if (!back.output || *back.output != w) {
                fail_with(report, "west(east(x)) != x on " + seq_to_string(w));
                return false;
            }
            // No premature lower branch after a stage-reachable move: the
            // staged construction reaches the seven-window only when the
            // three- and five-window stages failed, which confines the
            // seven-window East to Cases 3 and 4.
            if (move.case_tag != LocalCase::Identity && move.case_tag != LocalCase::C2a &&
                move.case_tag != LocalCase::C2b) {
                const IntSeq w3(y.begin() + 2, y.begin() + 5);
                const IntSeq w5(y.begin() + 1, y.begin() + 6);
                if (west3(w3) || west5(w5)) {
                    fail_with(report, "lower West branch fires after East on " + seq_to_string(w));
                    return false;
                }
            }
            return true;
        }
        for (int v = 0; v <= cap; ++v) {
            w[static_cast<std::size_t>(pos)] = v;
            if (!rec7(pos + 1)) return false;
        }
        return true;
    };
    if (!rec7(0)) return false;
    // East(West(y)) = y over the reversed (R-form) box.
    std::function<bool(int)> rec7r = [&](int pos) -> bool {
        if (pos == 7) {
            const bool r_form = is_affine(IntSeq(w.begin(), w.begin() + 3)) &&
                                is_reverse(IntSeq(w.begin() + 3, w.end()));
            if (!r_form || is_far_apart(w)) return true;
            const LocalMove move = west(w);
            const LocalMove back = east(*move.output);
            if (!back.output || *back.output != w) {
                fail_with(report, "east(west(y)) != y on " + seq_to_string(w));
                return false;
            }
            if (move.case_tag != LocalCase::Identity && move.case_tag != LocalCase::C2a &&
                move.case_tag != LocalCase::C2b) {
                const IntSeq e3(move.output->begin() + 2, move.output->begin() + 5);
                const IntSeq e5(move.output->begin() + 1, move.output->begin() + 6);
                if (east3(e3) || east5(e5)) {
                    fail_with(report, "lower East branch fires after West on " + seq_to_string(w));
                    return false;
                }
            }
            return true;
        }
        for (int v = 0; v <= cap; ++v) {
            w[static_cast<std::size_t>(pos)] = v;
            if (!rec7r(pos + 1)) return false;
        }
        return true;
    };
    if (!rec7r(0)) return false;
    // Five-window stage: staged-relevant windows invert and do not enable a
    // premature three-window branch.
    IntSeq v5(5, 0);
    std::function<bool(int)> rec5 = [&](int pos) -> bool {
        if (pos == 5) {
            const bool staged = is_affine(IntSeq(v5.begin(), v5.begin() + 3)) &&
                                is_reverse(IntSeq(v5.begin() + 3, v5.end())) &&
                                v5[2] > v5[3] + 1;
            if (!staged) return true;
            const auto image = east5(v5);
            if (!image) return true;
            ++windows5;
            const auto back = west5(*image);
            if (!back || *back != v5) {
                fail_with(report, "west5(east5(w)) != w on " + seq_to_string(v5));
                return false;
            }
            const IntSeq mid3(image->begin() + 1, image->begin() + 4);
            if (west3(mid3)) {
                fail_with(report, "West3 fires on the centered window after East5 on " +
                                      seq_to_string(v5));
                return false;
            }
            return true;
        }
        for (int value = 0; value <= cap; ++value) {
            v5[static_cast<std::size_t>(pos)] = value;
            if (!rec5(pos + 1)) return false;
        }
        return true;
    };
    if (!rec5(0)) return false;
    report.add("east7 windows", windows7);
    report.add("east5 windows", windows5);
    return true;
}

// --- Suite 5: up/down ---------------------------------------------------------

/// True when the word is in the guaranteed up domain and breaks the up
/// contract; used to shrink failures for the diagnostic report.
bool up_property_fails(const IntSeq& s) {
    if (!is_dyck(s) || s.size() < 4) return false;
    const int n = static_cast<int>(s.size());
    const long long d = defc(s);
    if (d > 2 * n - 8) return false;
    const long long ell = (binom2(n) - d) / 2;
    if (area(s) > ell - 1) return false;
    try {
        const UpDownImage image = up_checked(s);
        if (area(image.word) != area(s) + 1 || dinv(image.word) != dinv(s) - 1) return true;
        return down_checked(image.word).word != s;
    } catch (const std::exception&) {
        return true;
    }
}

bool down_property_fails(const IntSeq& s) {
    if (!is_dyck(s) || s.size() < 4) return false;
    const int n = static_cast<int>(s.size());
    const long long d = defc(s);
    if (d > 2 * n - 8) return false;
    const long long ell = (binom2(n) - d) / 2;
    if (area(s) > ell || is_special_skeleton(s)) return false;
    try {
        const UpDownImage image = down_checked(s);
        if (area(image.word) != area(s) - 1 || dinv(image.word) != dinv(s) + 1) return true;
        return up_checked(image.word).word != s;
    } catch (const std::exception&) {
        return true;
    }
}

bool suite_up_down(const RoundtripBudget& budget, CheckReport& report) {
    long long up_calls = 0, down_calls = 0;
    for (int n = 4; n <= budget.updown_n_max; ++n) {
        bool ok = true;
        for_each_dyck(n, [&](const IntSeq& s) {
            if (!ok) return;
            const long long d = defc(s);
            if (d > 2 * n - 8) return;
            const long long ell = (binom2(n) - d) / 2;
            if (area(s) <= ell - 1) {
                ++up_calls;
                if (up_property_fails(s)) {
                    const IntSeq shrunk = shrink_counterexample(s, up_property_fails);
                    fail_with(report, "up contract failed on " + seq_to_string(s) +
                                          " (minimized: " + seq_to_string(shrunk) + ")");
                    ok = false;
                    return;
                }
            }
            if (area(s) <= ell && !is_special_skeleton(s)) {
                ++down_calls;
                if (down_property_fails(s)) {
                    const IntSeq shrunk = shrink_counterexample(s, down_property_fails);
                    fail_with(report, "down contract failed on " + seq_to_string(s) +
                                          " (minimized: " + seq_to_string(shrunk) + ")");
                    ok = false;
                    return;
                }
            }
        });
        if (!ok) return false;
    }
    report.add("up calls", up_calls);
    report.add("down calls", down_calls);
    return true;
}

// --- Suite 6: strings ----------------------------------------------------------

bool suite_strings(const RoundtripBudget& budget, CheckReport& report) {
    long long strings = 0, members = 0;
    for (int n = 4; n <= budget.strings_n_max; ++n) {
        for (int d = 0; d <= 2 * n - 8; ++d) {
            const auto records = make_strings(n, d);  // coverage asserted inside
            strings += static_cast<long long>(records.size());
            for (const StringRecord& record : records)
                members += static_cast<long long>(record.chain.size());
        }
    }
    report.add("strings", strings);
    report.add("string members", members);
    return true;
}

// --- Suite 7: Schur expansions -------------------------------------------------

bool suite_schur(const RoundtripBudget& budget, CheckReport& report) {
    long long cases = 0;
    bool ok = true;
    for_each_multiset(budget.schur_size_max, budget.schur_value_max, [&](const IntSeq& multiset) {
        if (!ok) return;
        const int n = static_cast<int>(multiset.size());
        const int vars = std::max(1, n);
        std::set<long long> d_values{0};
        IntSeq word(multiset);
        std::sort(word.begin(), word.end());
        do {
            d_values.insert(di(word));
        } while (std::next_permutation(word.begin(), word.end()));
        for (long long d : d_values) {
            ++cases;
            for (const FactorMode mode : {FactorMode::Dual, FactorMode::Affine}) {
                const ExpansionReport expansion =
                    verify_schur_expansion(multiset, static_cast<int>(d), vars, mode);
                if (!expansion.equal) {
                    fail_with(report,
                              "Schur expansion failed for multiset " + seq_to_string(multiset) +
                                  ", d=" + std::to_string(d) +
                                  (expansion.first_difference ? ": " + *expansion.first_difference
                                                              : ""));
                    ok = false;
                    return;
                }
            }
            if (!dyck_symmetric_function(multiset, static_cast<int>(d), FactorMode::Dual, vars)
                     .symmetric()) {
                fail_with(report, "DS* not symmetric for " + seq_to_string(multiset));
                ok = false;
                return;
            }
            const ComplementReport complement =
                fundamental_complement_check(multiset, static_cast<int>(d), vars);
            if (!complement.equal) {
                fail_with(report, "fundamental complement check failed for " +
                                      seq_to_string(multiset) + ", d=" + std::to_string(d));
                ok = false;
                return;
            }
        }
    });
    if (ok) report.add("schur cases", cases);
    return ok;
}

// --- Suite 8: Catalan equalities and statistic laws ----------------------------

bool suite_catalan(const RoundtripBudget& budget, CheckReport& report) {
    const int cap = std::max({budget.catalan_equal_n_max, budget.skeleton_formula_n_max,
                              budget.partition_formula_n_max, budget.symmetry_n_max});
    for (int n = 1; n <= budget.catalan_equal_n_max; ++n) {
        if (brute_force_catalan(n, cap) != two_column_catalan(n, cap)) {
            fail_with(report, "two-column formula disagrees with brute force at n=" +
                                  std::to_string(n));
            return false;
        }
    }
    for (int n = 4; n <= budget.skeleton_formula_n_max; ++n) {
        const QtPoly brute = brute_force_catalan(n, cap);
        const long long lo = binom2(n) - (2 * n - 8);
        if (low_deficit_catalan(n, cap) != brute.restrict_total_degree(lo, binom2(n))) {
            fail_with(report, "skeleton formula disagrees with brute force at n=" +
                                  std::to_string(n));
            return false;
        }
    }
    for (int n = 1; n <= budget.partition_formula_n_max; ++n) {
        const QtPoly brute = brute_force_catalan(n, cap);
        const long long lo = binom2(n) - (n - 3);
        if (partition_formula(n) != brute.restrict_total_degree(lo, binom2(n))) {
            fail_with(report, "partition formula disagrees with brute force at n=" +
                                  std::to_string(n));
            return false;
        }
    }
    for (int n = 1; n <= budget.symmetry_n_max; ++n) {
        if (!brute_force_catalan(n, cap).qt_symmetric()) {
            fail_with(report, "brute force polynomial is not q,t-symmetric at n=" +
                                  std::to_string(n));
            return false;
        }
    }
    // Deficit pair identity and skeleton area bound.
    for (int n = 1; n <= budget.symmetry_n_max; ++n) {
        bool ok = true;
        for_each_dyck(n, [&](const IntSeq& s) {
            if (!ok) return;
            const DeficitPairReport pairs = deficit_pairs(s);
            if (pairs.missing_correction != 0 || pairs.pair_count() != defc(s)) {
                fail_with(report, "deficit pair identity failed on " + seq_to_string(s));
                ok = false;
                return;
            }
            if (is_full_skeleton(s) && area(s) > defc(s)) {
                fail_with(report, "area(S) <= defc(S) failed on " + seq_to_string(s));
                ok = false;
            }
        });
        if (!ok) return false;
    }
    report.add("catalan equalities", budget.catalan_equal_n_max);
    return true;
}

}  // namespace

CheckReport roundtrip_suites(const RoundtripBudget& budget) {
    CheckReport report;
    report.name = "roundtrip";
    report.pass = true;
    const auto run = [&](const char* label, const std::function<bool()>& suite) {
        if (!report.pass) return;
        try {
            suite();
        } catch (const std::exception& err) {
            fail_with(report, std::string(label) + " raised: " + err.what());
        }
    };
    run("row insertion", [&] { return suite_row_insertion(budget, report); });
    run("tableau bijection", [&] { return suite_tableau_bijection(budget, report); });
    run("phi chain", [&] { return suite_phi_chain(budget, report); });
    run("east/west", [&] { return suite_east_west(budget, report); });
    if (budget.updown_n_max >= 4) run("up/down", [&] { return suite_up_down(budget, report); });
    if (budget.strings_n_max >= 4) run("strings", [&] { return suite_strings(budget, report); });
    run("schur", [&] { return suite_schur(budget, report); });
    run("catalan", [&] { return suite_catalan(budget, report); });
    return report;
}

}  // namespace dycklab
