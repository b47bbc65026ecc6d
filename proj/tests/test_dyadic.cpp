#include <catch2/catch_amalgamated.hpp>

#include "alpert/dyadic.hpp"
#include "oracles.hpp"

using namespace alpert;

TEST_CASE("children halve an interval") {
    DyadicCube q(0, {0});
    auto kids = q.children();
    REQUIRE(kids.size() == 2);
    CHECK(kids[0] == DyadicCube(-1, {0}));
    CHECK(kids[1] == DyadicCube(-1, {1}));
}

TEST_CASE("children quadrant split in 2d") {
    DyadicCube q(1, {0, 0});
    auto kids = q.children();
    REQUIRE(kids.size() == 4);
    CHECK(kids[0].coords == std::vector<std::int64_t>{0, 0});
    CHECK(kids[1].coords == std::vector<std::int64_t>{1, 0});
    CHECK(kids[2].coords == std::vector<std::int64_t>{0, 1});
    CHECK(kids[3].coords == std::vector<std::int64_t>{1, 1});
    for (const auto& k : kids) CHECK(k.level == 0);
}

TEST_CASE("parent floors negative coordinates") {
    CHECK(DyadicCube(-1, {1}).parent() == DyadicCube(0, {0}));
    CHECK(DyadicCube(0, {-1}).parent() == DyadicCube(1, {-1}));
    CHECK(DyadicCube(0, {-2}).parent() == DyadicCube(1, {-1}));
}

TEST_CASE("parent child round trip on random cubes") {
    oracle::Rng rng(202401);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng.int_in(1, 3));
        std::vector<std::int64_t> coords;
        for (int i = 0; i < n; ++i) coords.push_back(rng.int_in(-20, 20));
        DyadicCube q(static_cast<int>(rng.int_in(-5, 5)), coords);
        auto kids = q.children();
        for (const auto& k : kids) {
            CHECK(k.parent() == q);
            CHECK(q.contains(k));
        }
        // children are pairwise disjoint and their volumes sum to the parent's
        Rational vol(0);
        for (std::size_t i = 0; i < kids.size(); ++i) {
            vol += kids[i].volume();
            for (std::size_t j = i + 1; j < kids.size(); ++j)
                CHECK(disjoint(kids[i], kids[j]));
        }
        CHECK(vol == q.volume());
    }
}

TEST_CASE("membership is half open") {
    DyadicCube q(0, {0}); // [0, 1)
    std::vector<Rational> lo{Rational(0)}, mid{Rational(1, 2)}, hi{Rational(1)};
    CHECK(q.contains_point(lo));
    CHECK(q.contains_point(mid));
    CHECK_FALSE(q.contains_point(hi));
}

TEST_CASE("cubes at a level tile the roots") {
    GridWindow w(-2, 0, {DyadicCube(0, {0, 0})});
    auto cubes = w.cubes_at_level(-2);
    REQUIRE(cubes.size() == 16);
    Rational vol(0);
    for (std::size_t i = 0; i < cubes.size(); ++i) {
        vol += cubes[i].volume();
        for (std::size_t j = i + 1; j < cubes.size(); ++j) CHECK(disjoint(cubes[i], cubes[j]));
    }
    CHECK(vol == DyadicCube(0, {0, 0}).volume());
}

TEST_CASE("tower ascends to the containing root") {
    GridWindow w(-1, 1, {DyadicCube(1, {0})});
    auto chain = tower(DyadicCube(-1, {0}), w);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == DyadicCube(-1, {0}));
    CHECK(chain[1] == DyadicCube(0, {0}));
    CHECK(chain[2] == DyadicCube(1, {0}));

    CHECK(tower(DyadicCube(1, {0}), w) == std::vector<DyadicCube>{DyadicCube(1, {0})});
    CHECK_THROWS_AS(tower(DyadicCube(0, {5}), w), std::invalid_argument);
}

TEST_CASE("tower length matches the level gap") {
    GridWindow w(-3, 2, {DyadicCube(2, {0}), DyadicCube(2, {1})});
    for (int m = -3; m <= 2; ++m)
        for (const auto& q : w.cubes_at_level(m))
            CHECK(tower(q, w).size() == static_cast<std::size_t>(w.max_level - m + 1));
}

TEST_CASE("window validation") {
    CHECK_THROWS_AS(GridWindow(1, 0, {DyadicCube(0, {0})}), std::invalid_argument);
    CHECK_THROWS_AS(GridWindow(0, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(GridWindow(-1, 0, {DyadicCube(1, {0})}), std::invalid_argument);
    CHECK_THROWS_AS(GridWindow(0, 1, {DyadicCube(1, {0}), DyadicCube(1, {0})}),
                    std::invalid_argument);
}

TEST_CASE("intersection of grid cubes is nested or empty") {
    DyadicCube big(1, {0}), small(-1, {3}), other(1, {1});
    auto i1 = intersect(big, small);
    REQUIRE(i1.has_value());
    CHECK(*i1 == small);
    CHECK_FALSE(intersect(small, other).has_value());
    CHECK_FALSE(intersect(big, other).has_value());
}
