#include <catch2/catch_amalgamated.hpp>

#include "bhall/quiver.hpp"

using namespace bhall;

TEST_CASE("euler form on the linear quiver", "[quiver]") {
    Quiver Q = linear_quiver(2);  // 0 -> 1
    auto e0 = Q.unit_class(0), e1 = Q.unit_class(1);
    CHECK(euler_form(Q, e0, e0) == 1);
    CHECK(euler_form(Q, e0, e1) == -1);  // the arrow contributes -a_0 b_1
    CHECK(euler_form(Q, e1, e0) == 0);
    CHECK(sym_euler_form(Q, e0, e1) == -1);
    Quiver A1 = linear_quiver(1);
    CHECK(euler_form(A1, A1.unit_class(0), A1.unit_class(0)) == 1);
}

TEST_CASE("projective classes and their multiplicities", "[quiver]") {
    Quiver Q = linear_quiver(2);
    CHECK(Q.proj_class(0) == GrothendieckClass{1, 1});  // P_0 has top S_0 and socle S_1
    CHECK(Q.proj_class(1) == GrothendieckClass{0, 1});
    auto s = Q.proj_multiplicities(GrothendieckClass{2, 3});  // 2 P_0 + 1 P_1
    CHECK(s == std::vector<long long>{2, 1});
    Quiver A3 = linear_quiver(3);
    CHECK(A3.proj_class(0) == GrothendieckClass{1, 1, 1});
    auto t = A3.proj_multiplicities(gk_add(A3.proj_class(0), A3.proj_class(2)));
    CHECK(t == std::vector<long long>{1, 0, 1});
}

TEST_CASE("class arithmetic", "[quiver]") {
    Quiver Q = linear_quiver(2);
    auto a = gk_add(Q.unit_class(0), Q.unit_class(1));
    CHECK(a == GrothendieckClass{1, 1});
    CHECK(gk_is_zero(gk_sub(a, a)));
    CHECK_FALSE(gk_is_zero(a));
}

TEST_CASE("validation rejects cycles and bad arrows", "[quiver]") {
    CHECK_THROWS_AS(Quiver(2, {{0, 1}, {1, 0}}), invalid_input);
    CHECK_THROWS_AS(Quiver(1, {{0, 1}}), invalid_input);
    CHECK_THROWS_AS(Quiver(0, {}), invalid_input);
    CHECK_NOTHROW(Quiver(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("hash is stable per structure", "[quiver]") {
    Quiver a = linear_quiver(2), b = linear_quiver(2), c = linear_quiver(3);
    CHECK(quiver_hash(a) == quiver_hash(b));
    CHECK(quiver_hash(a) != quiver_hash(c));
    CHECK(quiver_hash(a).size() == 16);
}
