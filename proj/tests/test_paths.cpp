#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sweeplab/enumerate.hpp"
#include "sweeplab/error.hpp"
#include "sweeplab/params.hpp"
#include "sweeplab/statistics.hpp"
#include "sweeplab/word.hpp"

using namespace sweeplab;

namespace {

std::vector<rank_t> ranks_of(const char* w, rank_t m, rank_t n, rank_t d) {
    const auto r = start_ranks(parse_word(w, make_params(m, n, d)));
    return {r.values().begin(), r.values().end()};
}

std::vector<std::string> words(const std::vector<StepWord>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.str());
    return out;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::NotDyck;
}

}  // namespace

TEST_CASE("make_params validates co-primality and positivity") {
    CHECK(make_params(3, 2, 1).m() == 3);
    CHECK(make_params(7, 5, 1).height() == 35);
    CHECK(code_of([] { make_params(4, 2, 1); }) == ErrorCode::NonCoprime);
    CHECK(code_of([] { make_params(0, 1, 1); }) == ErrorCode::NonPositive);
    CHECK(code_of([] { make_params(3, 2, 0); }) == ErrorCode::NonPositive);
    CHECK(code_of([] { make_params(1 << 16, 1 << 15, 1); }) == ErrorCode::NonCoprime);
    CHECK(code_of([] { make_params(65537, 65536, 1); }) == ErrorCode::ParamsTooLarge);

    const auto p = make_params(3, 2, 2);
    CHECK(p.north_count() == 4);
    CHECK(p.east_count() == 6);
    CHECK(p.length() == 10);
    CHECK(p.to_string() == "(3,2,2)");
}

TEST_CASE("parse_word accepts N/E and the S/W synonyms") {
    const auto p = make_params(3, 2, 1);
    CHECK(parse_word("NENEE", p).str() == "NENEE");
    CHECK(parse_word("SWSWW", p) == parse_word("NENEE", p));
    CHECK(parse_word("SENWE", p).str() == "NENEE");
    CHECK(code_of([&] { parse_word("NNEE", p); }) == ErrorCode::BadCounts);
    CHECK(code_of([&] { parse_word("NENEX", p); }) == ErrorCode::BadLetter);
    CHECK(code_of([&] { parse_word("nenee", p); }) == ErrorCode::BadLetter);
    CHECK(code_of([&] { parse_word("", p); }) == ErrorCode::BadCounts);
}

TEST_CASE("start_ranks adds m after North and subtracts n after East") {
    CHECK(ranks_of("NENEE", 3, 2, 1) == std::vector<rank_t>{0, 3, 1, 4, 2});
    CHECK(ranks_of("NNEEE", 3, 2, 1) == std::vector<rank_t>{0, 3, 6, 4, 2});
    CHECK(ranks_of("NNEE", 1, 1, 2) == std::vector<rank_t>{0, 1, 2, 1});

    // Every complete word, Dyck or not, ends on rank 0.
    for (const char* w : {"NENEE", "EEENN", "NEENE"}) {
        CHECK(start_ranks(parse_word(w, make_params(3, 2, 1))).final_rank() == 0);
    }
}

TEST_CASE("is_dyck requires every vertex rank to be nonnegative") {
    const auto p = make_params(3, 2, 1);
    CHECK(is_dyck(parse_word("NENEE", p)));
    CHECK(is_dyck(parse_word("NNEEE", p)));
    CHECK_FALSE(is_dyck(parse_word("NEENE", p)));
    CHECK_FALSE(is_dyck(parse_word("ENNEE", p)));
    CHECK_FALSE(is_dyck(parse_word("ENEN", make_params(1, 1, 2))));
    CHECK(code_of([&] { require_dyck(parse_word("NEENE", p)); }) == ErrorCode::NotDyck);
}

TEST_CASE("enumerate_dyck lists every Dyck path once in lexicographic order") {
    CHECK(words(enumerate_dyck(make_params(3, 2, 1))) ==
          std::vector<std::string>{"NNEEE", "NENEE"});
    CHECK(words(enumerate_dyck(make_params(1, 1, 2))) == std::vector<std::string>{"NNEE", "NENE"});
    CHECK(words(enumerate_dyck(make_params(5, 2, 1))) ==
          std::vector<std::string>{"NNEEEEE", "NENEEEE", "NEENEEE"});

    // Against brute force over all binomial(dm+dn, dn) words.
    for (auto [m, n, d] : {std::tuple{5, 3, 1}, {7, 4, 1}, {2, 1, 3}, {3, 2, 2}, {4, 3, 2}}) {
        CAPTURE(m);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(words(enumerate_dyck(make_params(m, n, d))) == oracle::all_dyck(m, n, d));
    }
}

TEST_CASE("enumeration honours its size limit") {
    const auto p = make_params(7, 5, 1);
    CHECK(code_of([&] { enumerate_dyck(p, 11); }) == ErrorCode::LimitExceeded);
    CHECK(enumerate_dyck(p, 12).size() == 66);
    CHECK(default_enumeration_limit() == kDefaultEnumerationLimit);
}

TEST_CASE("count_dyck agrees with enumeration") {
    CHECK(count_dyck(make_params(3, 2, 1)) == 2);
    CHECK(count_dyck(make_params(5, 2, 1)) == 3);
    CHECK(count_dyck(make_params(7, 5, 1)) == 66);
    CHECK(count_dyck(make_params(1, 1, 2)) == 2);
    for (auto [m, n, d] : {std::tuple{5, 3, 1}, {8, 5, 1}, {2, 1, 2}, {3, 2, 2}, {2, 1, 3},
                           {5, 4, 2}, {1, 1, 7}}) {
        const auto p = make_params(m, n, d);
        CHECK(count_dyck(p) == enumerate_dyck(p).size());
    }
    // No size limit on counting: the 100th Catalan number has 57 digits.
    CHECK(count_dyck(make_params(1, 1, 100)).str() ==
          "896519947090131496687170070074100632420837521538745909320");
}

TEST_CASE("distinct starting ranks when d = 1") {
    for (const auto& w : enumerate_dyck(make_params(8, 5, 1))) {
        const auto r = start_ranks(w);
        std::set<rank_t> distinct(r.values().begin(), r.values().end());
        CHECK(distinct.size() == w.size());
    }
}

TEST_CASE("base_path hugs the diagonal") {
    CHECK(base_path(make_params(3, 2, 1)).str() == "NENEE");
    CHECK(base_path(make_params(1, 1, 2)).str() == "NENE");
    CHECK(base_path(make_params(5, 2, 1)).str() == "NEENEEE");
    CHECK(corner_path(make_params(3, 2, 2)).str() == "NNNNEEEEEE");

    for (auto [m, n, d] : {std::tuple{7, 5, 1}, {3, 2, 2}, {2, 1, 3}, {5, 4, 2}}) {
        const auto p = make_params(m, n, d);
        const auto base = base_path(p);
        CHECK(is_dyck(base));
        // The only enumerated path with zero area.
        std::vector<std::string> flat;
        for (const auto& w : oracle::all_dyck(m, n, d)) {
            if (oracle::area(w, m, n) == 0) flat.push_back(w);
        }
        CHECK(flat == std::vector<std::string>{base.str()});

        // South ends: 0..n-1, each d times.
        auto south = south_end_ranks(base);
        std::sort(south.begin(), south.end());
        std::vector<rank_t> expected;
        for (rank_t r = 0; r < n; ++r) {
            for (rank_t k = 0; k < d; ++k) expected.push_back(r);
        }
        CHECK(south == expected);
    }
}

TEST_CASE("south_end_ranks reads the North-step ranks in path order") {
    const auto p = make_params(3, 2, 1);
    CHECK(south_end_ranks(parse_word("NNEEE", p)) == std::vector<rank_t>{0, 3});
    CHECK(south_end_ranks(parse_word("NENEE", p)) == std::vector<rank_t>{0, 1});
    CHECK(code_of([&] { south_end_ranks(parse_word("NEENE", p)); }) == ErrorCode::NotDyck);
}

TEST_CASE("with_swapped exchanges two adjacent letters") {
    const auto w = parse_word("NNEEE", make_params(3, 2, 1));
    CHECK(w.with_swapped(2).str() == "NENEE");
    CHECK(code_of([&] { w.with_swapped(5); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([&] { w.at(0); }) == ErrorCode::IndexOutOfRange);
}
