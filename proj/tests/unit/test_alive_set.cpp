#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "gwheaps/alive_set.hpp"

using gwheaps::AliveSet;
using gwheaps::RankedAliveSet;

TEST_CASE("map alive set predecessor is strict") {
    AliveSet s;
    s.insert(0.2, 2, 0);
    s.insert(0.5, 1, 1);
    CHECK(s.predecessor(0.2) == s.end());
    CHECK(s.predecessor(0.3)->first == 0.2);
    CHECK(s.predecessor(0.5)->first == 0.2);
    CHECK(s.predecessor(0.9)->first == 0.5);
    CHECK(s.consume_life(s.predecessor(0.9)));
    CHECK_FALSE(s.contains(0.5));
    CHECK_FALSE(s.consume_life(s.predecessor(0.9)));
    CHECK(s.entries().at(0.2).lives == 1);
}

TEST_CASE("ranked alive set on tiny capacities") {
    RankedAliveSet one(1);
    CHECK(one.predecessor(0) == RankedAliveSet::npos);
    one.insert(0, 1);
    CHECK(one.predecessor(0) == RankedAliveSet::npos);
    CHECK(one.consume_life(0));
    CHECK(one.size() == 0);

    RankedAliveSet empty(0);
    CHECK(empty.size() == 0);
}

TEST_CASE("ranked alive set agrees with std::set under random operations") {
    for (std::size_t capacity : {5u, 64u, 65u, 4096u, 4097u, 300000u}) {
        std::mt19937_64 gen(capacity);
        RankedAliveSet fast(capacity);
        std::set<std::size_t> ref;
        std::uniform_int_distribution<std::size_t> pick(0, capacity - 1);
        bool agree = true;
        for (int op = 0; op < 20000; ++op) {
            const std::size_t r = pick(gen);
            if (gen() % 2 == 0 && !ref.contains(r)) {
                fast.insert(r, 1);
                ref.insert(r);
            } else if (ref.contains(r)) {
                fast.consume_life(r);
                ref.erase(r);
            }
            const std::size_t q = pick(gen);
            auto it = ref.lower_bound(q);
            const std::size_t expect = it == ref.begin() ? RankedAliveSet::npos : *std::prev(it);
            agree = agree && fast.predecessor(q) == expect && fast.size() == ref.size();
        }
        CHECK_MESSAGE(agree, "capacity " << capacity);
    }
}

TEST_CASE("ranked alive set counts lives") {
    RankedAliveSet s(200);
    s.insert(130, 3);
    CHECK(s.predecessor(199) == 130);
    CHECK_FALSE(s.consume_life(130));
    CHECK_FALSE(s.consume_life(130));
    CHECK(s.lives(130) == 1);
    CHECK(s.consume_life(130));
    CHECK(s.predecessor(199) == RankedAliveSet::npos);
}
