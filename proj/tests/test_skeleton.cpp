#include "doctest.h"

#include "dycklab/bijections.hpp"
#include "dycklab/catalan.hpp"
#include "dycklab/skeleton.hpp"
#include "dycklab/text.hpp"
#include "dycklab/verify.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

using namespace dycklab;

TEST_CASE("far apart decomposability") {
    CHECK(is_far_apart({0, 2, 4, 6, 8, 10, 12}));
    CHECK_FALSE(is_far_apart({0, 0, 0, 0, 0, 0, 0}));
    CHECK_FALSE(is_far_apart({1, 1, 2, 2, 1, 0, 1}));
    // Every window retained by the seven-window search set is far-apart
    // decomposable; its canonical minimum witness included.
    CHECK(is_far_apart({1, 2, 3, 4, 1, 1, 0}));
    CHECK_THROWS_AS(is_far_apart({0, 1}), std::domain_error);
}

TEST_CASE("local case tables") {
    case4_table_selfcheck();

    // Case 1: identity whenever the central pair is already reverse.
    const IntSeq idw{0, 1, 2, 2, 1, 1, 0};
    const LocalMove id_move = east(idw);
    CHECK(id_move.case_tag == LocalCase::Identity);
    CHECK(*id_move.output == idw);

    // Case 4a normalized row, embedded with spectator ends that keep the
    // multiset from decomposing.
    const IntSeq in4a{2, 3, 3, 4, 1, 2, 2};
    REQUIRE_FALSE(is_far_apart(in4a));
    const LocalMove move4a = east(in4a);
    CHECK(move4a.case_tag == LocalCase::C4a);
    CHECK(*move4a.output == IntSeq{2, 1, 2, 4, 3, 3, 2});

    // Case 4d with o = 0: middle five [3,4,2,0,2] rewrites to [2,0,4,3,2].
    const IntSeq in4d{2, 3, 4, 2, 0, 2, 2};
    REQUIRE_FALSE(is_far_apart(in4d));
    const LocalMove move4d = east(in4d);
    CHECK(move4d.case_tag == LocalCase::C4d);
    CHECK(*move4d.output == IntSeq{2, 2, 0, 4, 3, 2, 2});

    // Far-apart multisets are rejected up front.
    CHECK_THROWS_AS(east(IntSeq{0, 2, 4, 6, 8, 10, 12}), std::domain_error);

    // Outer entries never move.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> val(0, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        IntSeq w(7);
        for (int& v : w) v = val(rng);
        const bool l_form = is_affine(IntSeq(w.begin(), w.begin() + 4)) &&
                            is_reverse(IntSeq(w.begin() + 4, w.end()));
        if (!l_form || is_far_apart(w)) continue;
        const LocalMove move = east(w);
        CHECK(move.output->front() == w.front());
        CHECK(move.output->back() == w.back());
        CHECK(west(*move.output).output == w);
    }
}

TEST_CASE("staged helpers mirror the reversal conjugation") {
    // east3 is the three-window identity test.
    CHECK(east3({5, 1, 2}).has_value());
    CHECK_FALSE(east3({0, 3, 1}).has_value());
    // west maps are reversal conjugates.
    CHECK(west3({2, 1, 5}).has_value());
    CHECK_FALSE(west3({1, 3, 0}).has_value());
    // east5 reports not-applicable outside Cases 2a/2b.
    CHECK_FALSE(east5({2, 2, 3, 0, 0}).has_value());
}

TEST_CASE("window count symmetry") {
    CHECK(window_count_symmetry({3, 3, 3, 3, 3, 3, 3}, 0) == std::pair<long long, long long>{1, 1});
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> val(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> multiset(7);
        for (int& v : multiset) v = val(rng);
        // All realized di values for this multiset.
        std::vector<int> sorted(multiset);
        std::sort(sorted.begin(), sorted.end());
        std::set<long long> ks;
        do {
            ks.insert(di(sorted));
        } while (std::next_permutation(sorted.begin(), sorted.end()));
        for (long long k : ks) {
            const auto [l, r] = window_count_symmetry(multiset, static_cast<int>(k));
            CHECK(l == r);
        }
    }
    // The count identity has no far-apart hypothesis.
    const std::vector<int> far{0, 2, 4, 6, 8, 10, 12};
    CHECK(window_count_symmetry(far, 0).first == window_count_symmetry(far, 0).second);
}

TEST_CASE("up and down on the named words") {
    CHECK(up_checked(omega_word(9)) == UpDownImage{epsilon_word(9), 3});
    CHECK(down_checked(epsilon_word(9)) == UpDownImage{omega_word(9), 3});
    CHECK(up_checked({0, 0, 0, 0, 0, 0, 1, 1, 0}) ==
          UpDownImage{{0, 1, 0, 0, 0, 0, 0, 1, 1}, 3});
    CHECK_THROWS_AS(up({0, 1, 0}), std::domain_error);

    // Outside the guaranteed domain a structured failure may be reported but
    // never a crash.
    for_each_dyck(6, [&](const IntSeq& s) {
        const UpDownOutcome outcome = up(s);
        if (const auto* failure = std::get_if<StageFailure>(&outcome))
            CHECK_FALSE(failure->stage.empty());
    });
}

TEST_CASE("up and down invert with the right statistics") {
    for (int n = 4; n <= 9; ++n) {
        for_each_dyck(n, [&](const IntSeq& s) {
            const long long d = defc(s);
            if (d > 2 * n - 8) return;
            const long long ell = (binom2(n) - d) / 2;
            if (area(s) <= ell - 1) {
                const UpDownImage image = up_checked(s);
                CHECK(area(image.word) == area(s) + 1);
                CHECK(dinv(image.word) == dinv(s) - 1);
                CHECK(defc(image.word) == d);
                CHECK(down_checked(image.word).word == s);
            }
            if (area(s) <= ell && !is_special_skeleton(s)) {
                const UpDownImage image = down_checked(s);
                CHECK(area(image.word) == area(s) - 1);
                CHECK(dinv(image.word) == dinv(s) + 1);
                CHECK(up_checked(image.word).word == s);
            }
        });
    }
}

TEST_CASE("strings reproduce the length-9 deficit-10 table") {
    const auto records = make_strings(9, 10);
    CHECK(records.size() == 31);
    long long members = 0;
    for (const StringRecord& r : records) members += static_cast<long long>(r.chain.size());
    CHECK(members == 274);
    CHECK(records[0].chain.front() == IntSeq{0, 0, 0, 0, 0, 0, 1, 1, 0});

    // Fixture comparison: start areas, every word, and every step level.
    std::ifstream in(default_data_dir() + "/strings_9_10.tsv");
    REQUIRE(in.good());
    std::string line;
    std::size_t index = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string idx_text, area_text, words_text, levels_text;
        std::getline(fields, idx_text, '\t');
        std::getline(fields, area_text, '\t');
        std::getline(fields, words_text, '\t');
        std::getline(fields, levels_text, '\t');
        REQUIRE(index < records.size());
        const StringRecord& record = records[index];
        CHECK(area(record.start) == std::stoll(area_text));
        std::vector<IntSeq> expected_words;
        std::istringstream words_stream(words_text);
        std::string word_text;
        while (std::getline(words_stream, word_text, ';'))
            expected_words.push_back(parse_seq(word_text));
        CHECK(record.chain == expected_words);
        std::vector<int> expected_levels;
        if (!levels_text.empty()) {
            std::istringstream level_stream(levels_text);
            std::string level;
            while (std::getline(level_stream, level, ','))
                expected_levels.push_back(std::stoi(level));
        }
        CHECK(record.levels == expected_levels);
        ++index;
    }
    CHECK(index == 31);
}

TEST_CASE("strings cover small slices") {
    // Single string for (4,0).
    const auto small = make_strings(4, 0);
    REQUIRE(small.size() == 1);
    CHECK(small[0].chain == std::vector<IntSeq>{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 1}});

    // A deficit with no special skeleton yields an empty decomposition, and
    // exhaustive coverage holds for all n <= 9.
    for (int n = 4; n <= 9; ++n)
        for (int d = 0; d <= 2 * n - 8; ++d) CHECK_NOTHROW(make_strings(n, d));
    CHECK_THROWS_AS(make_strings(3, 0), std::domain_error);
    CHECK_THROWS_AS(make_strings(5, 3), std::domain_error);
}

TEST_CASE("skeleton formula matches restricted brute force") {
    for (int n = 4; n <= 9; ++n) {
        const QtPoly brute = brute_force_catalan(n);
        const long long lo = binom2(n) - (2 * n - 8);
        CHECK(low_deficit_catalan(n) == brute.restrict_total_degree(lo, binom2(n)));
    }
    // n=4 keeps only the deficit-zero band (2n-8 = 0); its middle term has
    // coefficient one.
    const QtPoly single = low_deficit_catalan(4);
    CHECK(single == brute_force_catalan(4).restrict_total_degree(6, 6));
    CHECK(single.coeff(3, 3) == 1);
}

TEST_CASE("partition formula and its bijection") {
    QtPoly expected;
    // (q^7 - t^7)/(q - t) + (q^5 t - q t^5)/(q - t), expanded.
    for (int j = 0; j <= 6; ++j) expected.add_term(j, 6 - j, 1);
    for (int j = 1; j <= 4; ++j) expected.add_term(j, 5 - j, 1);
    CHECK(partition_formula(4) == expected);

    QtPoly c3;
    for (int j = 0; j <= 3; ++j) c3.add_term(j, 3 - j, 1);
    CHECK(partition_formula(3) == c3);
    CHECK(partition_formula(1).empty());
    CHECK(partition_formula(2).empty());

    for (int n = 1; n <= 9; ++n) {
        const QtPoly brute = brute_force_catalan(n);
        const long long lo = binom2(n) - (n - 3);
        CHECK(partition_formula(n) == brute.restrict_total_degree(lo, binom2(n)));
    }

    // The binary-skeleton correspondence is a bijection with the stated
    // statistics.
    for (int n = 4; n <= 9; ++n) {
        long long skeletons = 0;
        for_each_dyck(n, [&](const IntSeq& s) {
            if (!is_special_skeleton(s) || defc(s) > n - 3) return;
            ++skeletons;
            const Partition lambda = special_skeleton_to_partition(s);
            CHECK(lambda.size() == defc(s));
            CHECK(lambda.length() == area(s));
            CHECK(partition_to_special_skeleton(lambda, n) == s);
        });
        long long partitions = 0;
        for (int size = 0; size <= n - 3; ++size)
            partitions += static_cast<long long>(partitions_of(size).size());
        CHECK(skeletons == partitions);
    }
}

TEST_CASE("flat middle scan") {
    const FlatMiddleReport report = flat_middle_scan(9);
    CHECK(report.remark_ok);
    // d=10 band is flat with value 31 (the string count).
    bool found = false;
    for (const FlatBand& band : report.bands) {
        if (band.d == 10) {
            found = true;
            CHECK(band.in_remark_range);
            CHECK(band.constant);
            CHECK(band.value == 31);
        }
        if (band.d == 0) {
            CHECK(band.constant);
            CHECK(band.value == 1);
            CHECK(band.j_lo == 0);
            CHECK(band.j_hi == binom2(9));
        }
    }
    CHECK(found);
    for (int n = 4; n <= 8; ++n) CHECK(flat_middle_scan(n).remark_ok);
}
