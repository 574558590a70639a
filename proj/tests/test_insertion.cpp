#include "doctest.h"

#include "dycklab/insertion.hpp"
#include "dycklab/seq.hpp"
#include "dycklab/text.hpp"

#include <algorithm>
#include <random>

using namespace dycklab;

namespace {

IntSeq sorted_concat(const IntSeq& a, const IntSeq& b) {
    IntSeq out(a);
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntSeq> dual_words(int entry_max, int len_max) {
    std::vector<IntSeq> out{IntSeq{}};
    std::vector<IntSeq> frontier{IntSeq{}};
    for (int len = 1; len <= len_max; ++len) {
        std::vector<IntSeq> next;
        for (const IntSeq& w : frontier) {
            const int lo = w.empty() ? 0 : w.back() + 2;
            for (int v = lo; v <= entry_max; ++v) {
                IntSeq ext(w);
                ext.push_back(v);
                out.push_back(ext);
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("max chain") {
    CHECK(max_chain({0, 2, 4}, 0, ChainDirection::Start) == 3);
    CHECK(max_chain({0, 2, 3}, 0, ChainDirection::Start) == 2);
    CHECK(max_chain({1, 3, 5}, 2, ChainDirection::End) == 3);
    CHECK(max_chain({0, 2, 5}, 0, ChainDirection::Start) == 2);
    CHECK(max_chain({5}, 0, ChainDirection::End) == 1);
    CHECK_THROWS_AS(max_chain({0, 2}, 2, ChainDirection::Start), std::domain_error);
}

TEST_CASE("rowsert worked examples") {
    // Pass-through of a shorter chain.
    RowsertTrace trace1;
    const RowsertResult pass = rowsert({0, 2, 4}, {1, 3}, &trace1);
    CHECK(pass.evicted == IntSeq{1, 3});
    CHECK(pass.row == IntSeq{0, 2, 4});
    REQUIRE(trace1.steps.size() == 1);
    CHECK(trace1.steps[0].case_tag == 3);

    // Equal-length chain displaces the whole row.
    RowsertTrace trace2;
    const RowsertResult displace = rowsert({0, 2, 4}, {1, 3, 5}, &trace2);
    CHECK(displace.evicted == IntSeq{0, 2, 4});
    CHECK(displace.row == IntSeq{1, 3, 5});
    REQUIRE(trace2.steps.size() == 1);
    CHECK(trace2.steps[0].case_tag == 2);

    // Two Case-1 replacements followed by a terminal Case-0 append.
    RowsertTrace trace3;
    const RowsertResult cascade = rowsert({1, 3}, {0, 2, 4}, &trace3);
    CHECK(cascade.evicted == IntSeq{1, 3});
    CHECK(cascade.row == IntSeq{0, 2, 4});
    REQUIRE(trace3.steps.size() == 3);
    CHECK(trace3.steps[0].case_tag == 1);
    CHECK(trace3.steps[1].case_tag == 1);
    CHECK(trace3.steps[2].case_tag == 0);

    CHECK_THROWS_AS(rowsert({0, 1}, {}), std::domain_error);
}

TEST_CASE("worsert basics") {
    const WorsertResult empty = worsert({}, {0, 2, 4});
    CHECK(empty.row == IntSeq{0, 2, 4});
    CHECK(empty.output == IntSeq{});

    // Global reversibility on the displacement example.
    const RowsertResult fwd = rowsert({0, 2, 4}, {1, 3, 5});
    const WorsertResult back = worsert(fwd.evicted, fwd.row);
    CHECK(back.row == IntSeq{0, 2, 4});
    CHECK(back.output == IntSeq{1, 3, 5});
}

TEST_CASE("rowsert contracts on exhaustive dual pairs") {
    const std::vector<IntSeq> words = dual_words(6, 4);
    long long no_case0 = 0;
    for (const IntSeq& row : words) {
        for (const IntSeq& input : words) {
            RowsertTrace trace;
            const RowsertResult fwd = rowsert(row, input, &trace);
            CHECK(is_dual(fwd.evicted));
            CHECK(is_dual(fwd.row));
            CHECK(sorted_concat(row, input) == sorted_concat(fwd.evicted, fwd.row));
            IntSeq lhs(row);
            lhs.insert(lhs.end(), input.begin(), input.end());
            IntSeq rhs(fwd.evicted);
            rhs.insert(rhs.end(), fwd.row.begin(), fwd.row.end());
            CHECK(di(lhs) == di(rhs));
            if (!trace.case0_used()) {
                ++no_case0;
                const WorsertResult back = worsert(fwd.evicted, fwd.row);
                CHECK(back.row == row);
                CHECK(back.output == input);
                // Alpha indices move strictly right by at least one position.
                const auto alphas = trace.alphas_in_written_order(false);
                for (std::size_t h = 0; h + 1 < alphas.size(); ++h)
                    CHECK(alphas[h + 1] >= alphas[h] + 2);
            }
        }
    }
    CHECK(no_case0 > 0);
}

TEST_CASE("rowsert contracts on many random longer pairs") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> len_dist(0, 7);
    std::uniform_int_distribution<int> start_dist(0, 6);
    std::uniform_int_distribution<int> gap_dist(2, 4);
    const auto random_dual = [&] {
        IntSeq w;
        const int len = len_dist(rng);
        int value = start_dist(rng);
        for (int i = 0; i < len; ++i) {
            w.push_back(value);
            value += gap_dist(rng);
        }
        return w;
    };
    for (int trial = 0; trial < 100000; ++trial) {
        const IntSeq row = random_dual();
        const IntSeq input = random_dual();
        const RowsertResult fwd = rowsert(row, input);
        if (!is_dual(fwd.evicted) || !is_dual(fwd.row)) {
            FAIL("dual Dyck broken on ", seq_to_string(row), " / ", seq_to_string(input));
        }
        if (sorted_concat(row, input) != sorted_concat(fwd.evicted, fwd.row)) {
            FAIL("multiset broken on ", seq_to_string(row), " / ", seq_to_string(input));
        }
        IntSeq lhs(row);
        lhs.insert(lhs.end(), input.begin(), input.end());
        IntSeq rhs(fwd.evicted);
        rhs.insert(rhs.end(), fwd.row.begin(), fwd.row.end());
        if (di(lhs) != di(rhs)) {
            FAIL("di broken on ", seq_to_string(row), " / ", seq_to_string(input));
        }
    }
    CHECK(true);
}

TEST_CASE("worsert adjoint conjugation on random dual pairs") {
    std::mt19937 rng(20240811);
    const std::vector<IntSeq> words = dual_words(6, 4);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    for (int trial = 0; trial < 10000; ++trial) {
        const IntSeq& evicted = words[pick(rng)];
        const IntSeq& row = words[pick(rng)];
        const WorsertResult direct = worsert(evicted, row);
        const RowsertResult adj = rowsert(adjoint(row), adjoint(evicted));
        CHECK(adjoint(adj.row) == direct.row);
        CHECK(adjoint(adj.evicted) == direct.output);
    }
}

TEST_CASE("tabsert reproduces the four-factor example") {
    DyckTableau p;
    p = tabsert(p, {0, 2, 4});
    CHECK(p.rows == std::vector<IntSeq>{{0, 2, 4}});
    p = tabsert(p, {1, 3});
    CHECK(p.rows == std::vector<IntSeq>{{0, 2, 4}, {1, 3}});
    p = tabsert(p, {1, 3, 5});
    CHECK(p.rows == std::vector<IntSeq>{{1, 3, 5}, {0, 2, 4}, {1, 3}});
    p = tabsert(p, {0, 6});
    CHECK(p.rows == std::vector<IntSeq>{{0, 3, 6}, {0, 2, 5}, {1, 4}, {1, 3}});
    CHECK(is_valid_tableau(p));

    // Empty factor leaves the tableau unchanged; empty tableau grows one row.
    CHECK(tabsert(p, {}).rows == p.rows);
    CHECK(tabsert(DyckTableau{}, {}).rows.empty());
}

TEST_CASE("tabsert grows by a horizontal strip and preserves di") {
    const std::vector<IntSeq> words = dual_words(5, 3);
    std::vector<DyckTableau> tableaux{DyckTableau{}};
    // A few seed tableaux assembled by insertion.
    for (const IntSeq& w : words)
        if (!w.empty()) tableaux.push_back(tabsert(DyckTableau{}, w));
    for (const DyckTableau& t : std::vector<DyckTableau>(tableaux)) {
        for (const IntSeq& f : words) {
            const DyckTableau grown = tabsert(t, f);
            CHECK(is_valid_tableau(grown));
            const std::vector<int> before = t.shape();
            const std::vector<int> after = grown.shape();
            REQUIRE(after.size() >= before.size());
            // Horizontal strip: rows grow, and row r+1 cannot outgrow row r's
            // old length.
            long long added = 0;
            for (std::size_t r = 0; r < after.size(); ++r) {
                const int old_len = r < before.size() ? before[r] : 0;
                CHECK(after[r] >= old_len);
                if (r > 0) CHECK(after[r] <= before[r - 1]);
                added += after[r] - old_len;
            }
            CHECK(added == static_cast<long long>(f.size()));
            IntSeq lhs = row_reading_word(t);
            lhs.insert(lhs.end(), f.begin(), f.end());
            CHECK(di(lhs) == di(row_reading_word(grown)));
        }
    }
}

TEST_CASE("factorization insertion reproduces the recording example") {
    DualFactorization f;
    f.factors = {{0, 2, 4}, {1, 3}, {1, 3, 5}, {0, 6}};
    const auto [p, q] = insert_factorization(f);
    CHECK(p.rows == std::vector<IntSeq>{{0, 3, 6}, {0, 2, 5}, {1, 4}, {1, 3}});
    CHECK(q.rows == std::vector<std::vector<int>>{{0, 0, 0}, {1, 1, 2}, {2, 2}, {3, 3}});
    CHECK(is_semistandard(q));
    for (int i = 0; i < 4; ++i)
        CHECK(q.content(i) == static_cast<long long>(f.factors[static_cast<std::size_t>(i)].size()));
    CHECK(di(row_reading_word(p)) == f.di_value());

    const DualFactorization back = extract_factorization(p, q);
    CHECK(back == f);

    // Single factor and empty factorization.
    DualFactorization single;
    single.factors = {{0, 2}};
    const auto [ps, qs] = insert_factorization(single);
    CHECK(ps.rows == std::vector<IntSeq>{{0, 2}});
    CHECK(qs.rows == std::vector<std::vector<int>>{{0, 0}});
    CHECK(extract_factorization(ps, qs) == single);

    const auto [pe, qe] = insert_factorization(DualFactorization{});
    CHECK(pe.rows.empty());
    CHECK(qe.rows.empty());
    CHECK(extract_factorization(pe, qe) == DualFactorization{});
}

TEST_CASE("factorization bijection is exhaustive on a small multiset") {
    const IntSeq multiset{0, 0, 1, 1, 2};
    auto roundtrip_all = [&](int max_factors) {
        IntSeq word(multiset);
        long long count = 0;
        do {
            std::vector<int> labels(word.size(), 0);
            std::function<void(std::size_t)> assign = [&](std::size_t pos) {
                if (pos == word.size()) {
                    DualFactorization f;
                    f.factors.assign(static_cast<std::size_t>(labels.back() + 1), IntSeq{});
                    for (std::size_t i = 0; i < word.size(); ++i)
                        f.factors[static_cast<std::size_t>(labels[i])].push_back(word[i]);
                    f.normalize();
                    const auto [p, q] = insert_factorization(f);
                    CHECK(extract_factorization(p, q) == f);
                    ++count;
                    return;
                }
                const int lo =
                    pos == 0 ? 0 : labels[pos - 1] + (word[pos] >= word[pos - 1] + 2 ? 0 : 1);
                for (int label = lo; label < max_factors; ++label) {
                    labels[pos] = label;
                    assign(pos + 1);
                }
            };
            assign(0);
        } while (std::next_permutation(word.begin(), word.end()));
        return count;
    };
    // Dual factors drawn from {0,0,1,1,2} have length at most two, and the
    // single 2 admits only one length-two factor, so three factors cannot
    // cover five letters.
    CHECK(roundtrip_all(3) == 0);
    CHECK(roundtrip_all(5) > 0);
}

TEST_CASE("extract failure diagnostics") {
    DualFactorization f;
    f.factors = {{0, 2, 4}, {1, 3, 5}};
    auto [p, q] = insert_factorization(f);
    // Shape mismatch.
    RecordingTableau off(q);
    off.rows.back().pop_back();
    CHECK_THROWS_AS(extract_factorization(p, off), std::domain_error);
    // Non-semistandard recording tableau.
    RecordingTableau bad(q);
    bad.rows[0][0] = 5;
    CHECK_FALSE(is_semistandard(bad));
    CHECK_THROWS_AS(extract_factorization(p, bad), std::domain_error);
}
