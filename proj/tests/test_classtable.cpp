#include <catch2/catch_amalgamated.hpp>

#include "bhall/context.hpp"

using namespace bhall;

TEST_CASE("group orders", "[classtable]") {
    CHECK(gl_order(1, 2) == 1);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(2, 3) == 48);
    CHECK(gl_order(0, 5) == 1);
    CHECK(primitive_root(3) == 2);
    CHECK(primitive_root(5) == 2);
    CHECK(primitive_root(7) == 3);
}

TEST_CASE("single-vertex class table", "[classtable]") {
    Context C(linear_quiver(1), 2, 3);
    auto ids = C.table.class_list(2);
    REQUIRE(ids.size() == 3);  // 0, k, k^2
    CHECK(C.cls(ids[0]) == GrothendieckClass{0});
    CHECK(C.cls(ids[1]) == GrothendieckClass{1});
    CHECK(C.cls(ids[2]) == GrothendieckClass{2});
    CHECK(C.aut(ids[0]) == 1);
    CHECK(C.aut(ids[1]) == 1);
    CHECK(C.aut(ids[2]) == 6);
    Context C3(linear_quiver(1), 3, 3);
    auto ids3 = C3.table.class_list(2);
    REQUIRE(ids3.size() == 3);
    CHECK(C3.aut(ids3[1]) == 2);
    CHECK(C3.aut(ids3[2]) == 48);
}

TEST_CASE("two-vertex class table", "[classtable]") {
    Context C(linear_quiver(2), 2, 3);
    // dim <= 2 classes: 0, S0, S1, S0^2, S0+S1, P0, S1^2 — seven in all
    auto ids = C.table.class_list(2);
    CHECK(ids.size() == 7);
    // dims (1,1) splits into split sum and the nontrivial extension P0
    int split = -1, proj = -1;
    for (int id : ids) {
        if (C.cls(id) != GrothendieckClass{1, 1}) continue;
        Representation r = C.rep(id);
        (r.maps[0].is_zero() ? split : proj) = id;
    }
    REQUIRE(split >= 0);
    REQUIRE(proj >= 0);
    CHECK(C.aut(split) == 1);
    CHECK(C.aut(proj) == 1);
    CHECK(split < proj);  // zero map has the least encoding
}

TEST_CASE("interning is basis-change invariant", "[classtable]") {
    Context C(linear_quiver(2), 3, 3);
    Representation A, B;
    A.dims = B.dims = {1, 1};
    FFMatrix ma(3, 1, 1), mb(3, 1, 1);
    ma.at(0, 0) = 1;
    mb.at(0, 0) = 2;  // scalar multiple of the same arrow map
    A.maps = {ma};
    B.maps = {mb};
    int ia = C.intern(A), ib = C.intern(B);
    CHECK(ia == ib);
    CHECK(C.intern(C.rep(ia)) == ia);  // representative re-interns to itself
    // aut * orbit = |GL_1 x GL_1|
    CHECK(C.table.entries[static_cast<size_t>(ia)].aut *
              C.table.entries[static_cast<size_t>(ia)].orbit ==
          gl_order(1, 3) * gl_order(1, 3));
}

TEST_CASE("class ids are stable and validated", "[classtable]") {
    Context C(linear_quiver(1), 2, 3);
    CHECK(C.intern(rep_zero(C.qv, 2)) == 0);
    CHECK_THROWS_AS(C.rep(99), invalid_input);
    CHECK_THROWS_AS(C.aut(-1), invalid_input);
    CHECK_THROWS_AS(Context(linear_quiver(1), 4, 3), invalid_input);   // q not prime
    CHECK_THROWS_AS(Context(linear_quiver(1), 2, 2), invalid_input);   // m = 2 unsupported
    CHECK_NOTHROW(Context(linear_quiver(1), 2, 0));
}
