#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bhall/ffenum.hpp"

using namespace bhall;

TEST_CASE("integer_pow and gaussian binomials", "[ffenum]") {
    CHECK(integer_pow(2, 10) == 1024);
    CHECK(integer_pow(7, 0) == 1);
    CHECK(gaussian_binomial(2, 1, 2) == 3);   // lines in F_2^2
    CHECK(gaussian_binomial(2, 1, 3) == 4);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 0, 2) == 1);
    CHECK(gaussian_binomial(2, 3, 2) == 0);
}

TEST_CASE("tuple enumeration is exhaustive and ordered", "[ffenum]") {
    std::vector<std::vector<uint8_t>> seen;
    ff_enumerate_tuples(3, 2, 100, [&](const std::vector<uint8_t>& t) {
        seen.push_back(t);
        return true;
    });
    REQUIRE(seen.size() == 9);
    CHECK(seen.front() == std::vector<uint8_t>{0, 0});
    CHECK(seen[1] == std::vector<uint8_t>{0, 1});  // last coordinate fastest
    CHECK(seen.back() == std::vector<uint8_t>{2, 2});
    // early stop
    int n = 0;
    ff_enumerate_tuples(2, 4, 100, [&](const std::vector<uint8_t>&) { return ++n < 3; });
    CHECK(n == 3);
}

TEST_CASE("map enumeration covers every matrix tuple once", "[ffenum]") {
    MapShape shape{{1, 2}, {2, 1}};
    CHECK(map_shape_entries(shape) == 4);
    std::set<std::vector<int>> seen;
    ff_enumerate_maps(2, shape, 100, [&](const std::vector<FFMatrix>& ms) {
        std::vector<int> key;
        for (const auto& m : ms)
            for (uint8_t x : m.a) key.push_back(x);
        seen.insert(key);
        return true;
    });
    CHECK(seen.size() == 16);
}

TEST_CASE("subspace enumeration matches the gaussian count", "[ffenum]") {
    int count = 0;
    std::set<std::vector<uint8_t>> bases;
    ff_enumerate_subspaces(2, 4, 2, 1000, [&](const FFMatrix& B) {
        ++count;
        CHECK(B.rows == 2);
        CHECK(B.cols == 4);
        CHECK(ff_rank(B) == 2);
        bases.insert(B.a);
        return true;
    });
    CHECK(count == 35);
    CHECK(bases.size() == 35);  // RREF form is a canonical representative
    // k = 0 yields the single trivial subspace
    int zeros = 0;
    ff_enumerate_subspaces(3, 2, 0, 10, [&](const FFMatrix&) {
        ++zeros;
        return true;
    });
    CHECK(zeros == 1);
}

TEST_CASE("budget guard throws before enumerating", "[ffenum]") {
    CHECK_THROWS_AS(ff_enumerate_tuples(2, 40, 1000, [](const std::vector<uint8_t>&) { return true; }),
                    budget_exceeded);
    CHECK_THROWS_AS(ff_enumerate_subspaces(2, 30, 15, 1000, [](const FFMatrix&) { return true; }),
                    budget_exceeded);
}
