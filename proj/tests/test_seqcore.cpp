#include "doctest.h"

#include "dycklab/catalan.hpp"
#include "dycklab/seq.hpp"
#include "dycklab/text.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace dycklab;

namespace {

// Independent pair-loop oracle for the statistics, kept separate from the
// library implementation.
long long oracle_di(const IntSeq& s) {
    long long c = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) c += (s[i] == s[j] + 1);
    return c;
}

long long oracle_nv(const IntSeq& s) {
    long long c = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) c += (s[i] == s[j]);
    return c;
}

long long oracle_defc(const IntSeq& s) {
    long long sum = 0;
    for (int x : s) sum += x;
    const long long n = static_cast<long long>(s.size());
    return n * (n - 1) / 2 - sum - oracle_di(s) - oracle_nv(s);
}

IntSeq random_word(std::mt19937& rng, int max_len, int lo, int hi) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> val_dist(lo, hi);
    IntSeq out(static_cast<std::size_t>(len_dist(rng)));
    for (int& v : out) v = val_dist(rng);
    return out;
}

}  // namespace

TEST_CASE("classification flags") {
    const SeqClass empty = classify({});
    CHECK(empty.affine);
    CHECK(empty.dual);
    CHECK(empty.reverse);
    CHECK_FALSE(empty.ordinary_dyck);  // nonempty required

    CHECK_FALSE(classify({0, 1, 0, 2}).affine);
    const SeqClass dual_row = classify({0, 2, 4});
    CHECK(dual_row.dual);
    CHECK_FALSE(dual_row.affine);

    CHECK(classify({0, 1, 1}, 0, 1).interval_ok.value());
    CHECK_FALSE(classify({0, 1, 2}, 0, 1).interval_ok.value());
    // An empty interval admits only the empty sequence.
    CHECK(classify({}, 3, 1).interval_ok.value());
    CHECK_FALSE(classify({2}, 3, 1).interval_ok.value());
}

TEST_CASE("statistics on the named words") {
    const Stats single = statistics({0});
    CHECK(single.area == 0);
    CHECK(single.dinv == 0);
    CHECK(single.defc == 0);

    // Frozen from the definitional pair loops.
    const Stats omega9 = statistics(omega_word(9));
    CHECK(omega9.area == 1);
    CHECK(omega9.dinv == 28);
    CHECK(omega9.defc == 7);
    CHECK(omega9.defc <= 2 * 9 - 8);

    const Stats eps9 = statistics(epsilon_word(9));
    CHECK(eps9.area == 2);
    CHECK(eps9.dinv == 27);
    CHECK(eps9.defc == 7);

    CHECK(epsilon_word(9) == IntSeq{0, 0, 1, 0, 0, 0, 0, 0, 1});
    CHECK(epsilon_word(4) == IntSeq{0, 0, 1, 1});
    CHECK_THROWS_AS(epsilon_word(3), std::domain_error);
    CHECK_THROWS_AS(omega_word(1), std::domain_error);

    CHECK_THROWS_AS(area({0, -1}), std::domain_error);
}

TEST_CASE("statistics agree with the oracle loops on random words") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 2000; ++trial) {
        const IntSeq w = random_word(rng, 8, 0, 6);
        CHECK(di(w) == oracle_di(w));
        CHECK(nv(w) == oracle_nv(w));
        CHECK(dinv(w) == oracle_di(w) + oracle_nv(w));
        CHECK(defc(w) == oracle_defc(w));
    }
}

TEST_CASE("deficit pairs") {
    const DeficitPairReport constant = deficit_pairs({0, 0, 0});
    CHECK(constant.type_a.empty());
    CHECK(constant.type_b.empty());
    CHECK(constant.missing_correction == 0);

    // Correction vanishes on Dyck words and the pair count equals the deficit.
    for (int n = 1; n <= 9; ++n) {
        for_each_dyck(n, [&](const IntSeq& s) {
            const DeficitPairReport report = deficit_pairs(s);
            CHECK(report.missing_correction == 0);
            CHECK(report.pair_count() == defc(s));
        });
    }

    const DeficitPairReport gap = deficit_pairs({0, 2});
    CHECK(gap.type_a.empty());
    CHECK(gap.type_b.empty());
    CHECK(gap.missing_correction == 1);
    CHECK(gap.pair_count() - gap.missing_correction == defc({0, 2}));

    // The identity |A|+|B|-correction = defc holds on arbitrary nonnegative
    // words as well.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const IntSeq w = random_word(rng, 7, 0, 5);
        const DeficitPairReport report = deficit_pairs(w);
        CHECK(report.pair_count() - report.missing_correction == defc(w));
    }
}

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_dyck(1) == std::vector<IntSeq>{{0}});
    CHECK(enumerate_dyck(4).size() == 14);
    // Catalan numbers up to n=10.
    const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 1; n <= 10; ++n) {
        long long count = 0;
        for_each_dyck(n, [&](const IntSeq&) { ++count; });
        CHECK(count == catalan[n]);
    }
    // Fixed recursive order: next entry ascending.
    const auto three = enumerate_dyck(3);
    CHECK(three[0] == IntSeq{0, 0, 0});
    CHECK(three[1] == IntSeq{0, 0, 1});
    CHECK(three[2] == IntSeq{0, 1, 0});
    CHECK(three[3] == IntSeq{0, 1, 1});
    CHECK(three[4] == IntSeq{0, 1, 2});
    CHECK_THROWS_AS(enumerate_dyck(0), std::domain_error);

    // n=13 with at most 7 nonzero entries (appendix table value).
    long long limited = 0;
    for_each_dyck(13, [&](const IntSeq& s) {
        int nonzero = 0;
        for (int v : s) nonzero += (v != 0);
        if (nonzero <= 7) ++limited;
    });
    CHECK(limited == 38760);
}

TEST_CASE("extractable elements") {
    CHECK_FALSE(find_extractable({0, 0, 0}));
    CHECK(find_extractable({0, 1, 1}) == std::pair<int, int>{1, 1});
    CHECK_FALSE(find_extractable(epsilon_word(9)));
    CHECK(find_extractable({0, 1, 0, 1}) == std::pair<int, int>{1, 1});
    CHECK_THROWS_AS(find_extractable({0, 2}), std::domain_error);

    // The extractable entry is the leftmost occurrence of its value, and
    // deleting it leaves a Dyck sequence.
    for (int n = 1; n <= 8; ++n) {
        for_each_dyck(n, [&](const IntSeq& s) {
            const auto hit = find_extractable(s);
            if (!hit) return;
            const auto [index, value] = *hit;
            for (int i = 0; i < index; ++i) CHECK(s[i] != value);
            CHECK(is_dyck(remove_at(s, index)));
        });
    }
}

TEST_CASE("injection") {
    CHECK(inject({0, 0, 1}, 2) == IntSeq{0, 0, 1, 2});
    CHECK(inject({0, 0, 1}, 1) == IntSeq{0, 1, 0, 1});
    CHECK_THROWS_AS(inject({0}, 2), InjectionError);

    // inject then extract and extract then inject are mutually inverse.
    for (int n = 1; n <= 8; ++n) {
        for_each_dyck(n, [&](const IntSeq& s) {
            const auto hit = find_extractable(s);
            if (hit) {
                const auto [index, value] = *hit;
                const IntSeq removed = remove_at(s, index);
                CHECK(inject(removed, value) == s);
            }
            const int top = *std::max_element(s.begin(), s.end());
            for (int e = 1; e <= top + 1; ++e) {
                const IntSeq grown = inject(s, e);
                CHECK(is_dyck(grown));
                // The new entry sits right after the first e-1 and is eligible
                // there: unique parent to its left, non-rising successor.
                int p = 0;
                while (s[p] != e - 1) ++p;
                const int at = p + 1;
                REQUIRE(grown[at] == e);
                CHECK(remove_at(grown, at) == s);
                int parents = 0;
                for (int i = 0; i < at; ++i) parents += (grown[i] == e - 1);
                CHECK(parents == 1);
                if (at + 1 < static_cast<int>(grown.size())) CHECK(grown[at + 1] <= e);
            }
        });
    }
}

TEST_CASE("skeleton tests") {
    const SkeletonTests eps = skeleton_tests(epsilon_word(9));
    CHECK(eps.full);
    CHECK_FALSE(eps.special);

    const SkeletonTests zeros = skeleton_tests({0, 0, 0, 0});
    CHECK(zeros.full);
    CHECK(zeros.special);
    CHECK(zeros.m_skeleton == 0);

    CHECK_FALSE(skeleton_tests({0, 1, 0, 1}).full);
    CHECK_FALSE(skeleton_tests({0, 1, 0, 1}).m_skeleton.has_value());
    CHECK(skeleton_tests({0, 0, 1}).m_skeleton == 1);
    CHECK_FALSE(skeleton_tests({0, 1, 0}).m_skeleton.has_value());

    // Short lengths: every full skeleton is special.
    for (int n = 1; n <= 3; ++n)
        for_each_dyck(n, [&](const IntSeq& s) {
            const SkeletonTests t = skeleton_tests(s);
            if (t.full) CHECK(t.special);
        });

    // area(S) <= defc(S) for every full skeleton up to n=10.
    for (int n = 1; n <= 10; ++n)
        for_each_dyck(n, [&](const IntSeq& s) {
            if (is_full_skeleton(s)) CHECK(area(s) <= defc(s));
        });
}

TEST_CASE("adjoint") {
    CHECK(adjoint({}) == IntSeq{});
    CHECK(adjoint({0, 2, 4}) == IntSeq{-4, -2, 0});
    CHECK(is_dual(adjoint({0, 2, 4})));
    std::mt19937 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const IntSeq w = random_word(rng, 8, -4, 6);
        CHECK(adjoint(adjoint(w)) == w);
        CHECK(is_dual(w) == is_dual(adjoint(w)));
    }
}

TEST_CASE("suffix corrected bound") {
    // Cross-check against the pair report: the bound never exceeds the
    // actual deficit whenever the hypotheses hold.
    std::mt19937 rng(1234);
    int checked = 0;
    while (checked < 500) {
        IntSeq t = random_word(rng, 9, 0, 4);
        if (t.size() < 2) continue;
        for (int k = 1; k < static_cast<int>(t.size()); ++k) {
            const IntSeq prefix(t.begin(), t.end() - k);
            const IntSeq suffix(t.end() - k, t.end());
            if (!is_dyck(prefix) || !is_reverse(suffix)) continue;
            if (std::find(prefix.begin(), prefix.end(), suffix.back()) == prefix.end()) continue;
            const long long bound = suffix_corrected_bound(t, k);
            CHECK(bound <= defc(t));
            ++checked;
        }
    }

    // Dyck word, suffix of one entry whose value occurs earlier: the bound is
    // the full pair count.
    const IntSeq word{0, 1, 1, 0, 1};
    const long long bound = suffix_corrected_bound(word, 1);
    CHECK(bound == deficit_pairs(word).pair_count());

    // Skeleton-branch shapes at n=8: when the down skeleton branch is legal,
    // the intermediate word satisfies the bound within the deficit range.
    for_each_dyck(8, [&](const IntSeq& y) {
        const long long d = defc(y);
        if (d > 2 * 8 - 8) return;
        if (is_special_skeleton(y)) return;
        const auto hit = find_extractable(y);
        if (!hit) return;
        const auto [index, value] = *hit;
        IntSeq candidate = remove_at(y, index);
        candidate.push_back(value - 1);
        if (!leftmost_eligible_index(candidate) && is_dyck(candidate) && value >= 1) {
            const IntSeq prefix(candidate.begin(), candidate.end() - 1);
            if (std::find(prefix.begin(), prefix.end(), candidate.back()) == prefix.end()) return;
            CHECK(suffix_corrected_bound(candidate, 1) <= 2 * 8 - 8);
        }
    });

    CHECK_THROWS_AS(suffix_corrected_bound({0, 1}, 2), std::domain_error);
    CHECK_THROWS_AS(suffix_corrected_bound({0, 5, 0}, 1), std::domain_error);  // 0 occurs, 5-suffix fine?
}

TEST_CASE("brute force catalan") {
    // Frozen from the enumeration oracle: the full polynomial for n=3 carries
    // the middle q*t term on top of the deficit-zero band.
    QtPoly expected;
    expected.add_term(3, 0, 1);
    expected.add_term(2, 1, 1);
    expected.add_term(1, 2, 1);
    expected.add_term(0, 3, 1);
    expected.add_term(1, 1, 1);
    CHECK(brute_force_catalan(3) == expected);
    CHECK(brute_force_catalan(3).str() == "q^3 + q^2*t + q*t^2 + t^3 + q*t");

    CHECK(brute_force_catalan(1) == QtPoly::constant(1));
    CHECK_THROWS_AS(brute_force_catalan(13), ResourceLimitError);
    CHECK_THROWS_AS(brute_force_catalan(13, 12), ResourceLimitError);
    CHECK(brute_force_catalan(13, 13).coeff(0, 78) == 1);

    // Deficit-zero slice of C_4 is the full geometric band of degree 6.
    const QtPoly c4 = brute_force_catalan(4);
    const QtPoly band = c4.restrict_total_degree(6, 6);
    for (int j = 0; j <= 6; ++j) CHECK(band.coeff(j, 6 - j) == 1);
    CHECK(band.term_count() == 7);

    // q,t symmetry, exhaustively for n <= 10.
    for (int n = 1; n <= 10; ++n) CHECK(brute_force_catalan(n).qt_symmetric());
}

TEST_CASE("sequence text encoding") {
    CHECK(seq_to_string({0, 1, 2, 1, 0}) == "[0,1,2,1,0]");
    CHECK(seq_to_string({}) == "[]");
    CHECK(parse_seq("[0,1,2]") == IntSeq{0, 1, 2});
    CHECK(parse_seq("[0, 1, 2]") == IntSeq{0, 1, 2});
    CHECK(parse_seq("[]") == IntSeq{});
    CHECK(parse_seq("[-3,0]") == IntSeq{-3, 0});
    CHECK_THROWS_AS(parse_seq("[0,1,x]"), ParseError);
    CHECK_THROWS_AS(parse_seq("0,1"), ParseError);
    try {
        parse_seq("[0,1,x]");
    } catch (const ParseError& err) {
        CHECK(err.position() == 5);
    }
}
