#include "doctest.h"
#include "piles/genseq.hpp"
#include "piles/oracle.hpp"
#include "piles/rules.hpp"
#include "piles/staircase.hpp"

using namespace piles;

namespace {
Configuration cfg(std::initializer_list<long long> parts) {
    return Configuration(std::vector<long long>(parts));
}
GeneratingSequence seq(std::initializer_list<std::size_t> values) {
    return GeneratingSequence(values);
}
}  // namespace

TEST_CASE("alpha and beta") {
    CHECK(alpha(3) == seq({0, 1, 2}));
    CHECK(alpha(0) == seq({}));
    CHECK(beta(2) == seq({0, 1, 0}));
    CHECK(beta(0) == seq({}));
    CHECK(beta(1) == seq({0}));
}

TEST_CASE("socle prefix replays to a staircase plus remainder") {
    CHECK(socle_prefix(1) == seq({}));
    CHECK(socle_prefix(3) == seq({0, 0, 1, 0}));
    CHECK(verify_sequence(6, socle_prefix(3)) == cfg({3, 2, 1}));
    CHECK(verify_sequence(3, socle_prefix(2)) == cfg({2, 1}));
    // With extra grains the remainder stays on column 0.
    CHECK(verify_sequence(10, socle_prefix(3)) == cfg({7, 2, 1}));
}

TEST_CASE("path on reduced forms") {
    CHECK(path(ReducedForm{{0, 0, 1}}) == seq({0, 1}));
    CHECK(path(ReducedForm{{0, 0, 0, 0}}) == seq({}));
    CHECK(path(ReducedForm{{1, 2, 0, 1, 0, 1}}) == seq({0, 1, 2, 3, 4, 0, 1, 2, 0, 0}));
    CHECK_THROWS_AS(path(ReducedForm{{1, 1}}), NotAReducedForm);
}

TEST_CASE("fall on reduced forms mirrors fall on configurations") {
    for (long long n : {12, 17, 21}) {
        const auto oracle_members_c = bfs_spm(n, false);
        for (const auto& c : oracle_members_c.members()) {
            const long long w = staircase_width(c);
            const ReducedForm r = reduce(c);
            for (std::size_t l : fall_targets(c)) {
                const Configuration next = apply_fall(c, l);
                if (staircase_width(next) != w) continue;  // width-changing moves excluded
                REQUIRE(l + 1 <= static_cast<std::size_t>(w));
                CHECK(can_fall_prime(r, l));
                CHECK(apply_fall_prime(r, l) == reduce(next));
            }
        }
    }
}

TEST_CASE("generating sequences certify membership") {
    CHECK(generating_sequence(cfg({2, 1, 1})) == seq({0, 0, 1}));
    CHECK(generating_sequence(cfg({9})) == seq({}));
    CHECK(generating_sequence(cfg({3, 2, 1})) == seq({0, 0, 1, 0}));
    CHECK_THROWS_AS(generating_sequence(cfg({2, 2, 2})), InvalidConfiguration);

    for (long long n = 0; n <= 20; ++n) {
        const auto oracle_members_c = bfs_spm(n, false);
        for (const auto& c : oracle_members_c.members()) {
            const GeneratingSequence s = generating_sequence(c);
            CHECK(verify_sequence(n, s) == c);
            // every FALL moves one grain one column to the right
            CHECK(static_cast<long long>(s.size()) == c.moment());
        }
    }
}

TEST_CASE("verify_sequence reports the first failing step") {
    CHECK(verify_sequence(4, seq({0, 0, 1})) == cfg({2, 1, 1}));
    CHECK(verify_sequence(6, seq({0, 0, 1, 0})) == cfg({3, 2, 1}));
    CHECK(verify_sequence(0, seq({})) == Configuration());
    try {
        verify_sequence(2, seq({1}));
        FAIL("expected InvalidStep");
    } catch (const InvalidStep& e) {
        CHECK(e.position == 0);
    }
    try {
        verify_sequence(4, seq({0, 0, 0}));
        FAIL("expected InvalidStep");
    } catch (const InvalidStep& e) {
        CHECK(e.position == 2);  // (2,2) cannot fall at column 0
    }
}

TEST_CASE("sequence text round trip") {
    CHECK(sequence_to_string(seq({0, 0, 1})) == "0,0,1");
    CHECK(parse_sequence("0,0,1") == seq({0, 0, 1}));
    CHECK(parse_sequence("") == seq({}));
    CHECK_THROWS_AS(parse_sequence("0,,1"), Error);
}
