#include <catch2/catch_amalgamated.hpp>

#include "bhall/ffmatrix.hpp"

using namespace bhall;

namespace {
FFMatrix make(int q, int r, int c, std::initializer_list<int> vals) {
    FFMatrix m(q, r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<uint8_t>(*it++ % q);
    return m;
}
}  // namespace

TEST_CASE("rank and reduced echelon form", "[ffmatrix]") {
    // rank 2 over F_2: row 3 = row 1 + row 2
    FFMatrix m = make(2, 3, 3, {1, 0, 1, 0, 1, 1, 1, 1, 0});
    CHECK(ff_rank(m) == 2);
    RrefResult r = rref(m);
    CHECK(r.pivot_cols == std::vector<int>{0, 1});
    CHECK(rref(r.mat).mat == r.mat);  // idempotent
    CHECK(ff_rank(FFMatrix::identity(5, 4)) == 4);
}

TEST_CASE("kernel vectors annihilate the matrix", "[ffmatrix]") {
    FFMatrix m = make(3, 2, 4, {1, 2, 0, 1, 0, 1, 1, 0});
    FFMatrix K = ff_kernel(m);
    CHECK(K.rows == 4 - ff_rank(m));
    for (int r = 0; r < K.rows; ++r) {
        for (int i = 0; i < m.rows; ++i) {
            int s = 0;
            for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * K.at(r, j);
            CHECK(s % 3 == 0);
        }
    }
    CHECK(ff_rank(K) == K.rows);
}

TEST_CASE("solve and inverse", "[ffmatrix]") {
    FFMatrix A = make(5, 2, 2, {1, 2, 3, 4});
    auto inv = ff_inverse(A);
    REQUIRE(inv.has_value());
    CHECK((A * *inv) == FFMatrix::identity(5, 2));
    std::vector<uint8_t> b{3, 1};
    auto x = ff_solve(A, b);
    REQUIRE(x.has_value());
    for (int i = 0; i < 2; ++i) {
        int s = 0;
        for (int j = 0; j < 2; ++j) s += A.at(i, j) * (*x)[static_cast<size_t>(j)];
        CHECK(s % 5 == b[static_cast<size_t>(i)]);
    }
    // inconsistent system: x = 2x = 1 has no solution over F_2... use rows (1),(0) with b=(0,1)
    FFMatrix S = make(2, 2, 1, {1, 0});
    CHECK_FALSE(ff_solve(S, {0, 1}).has_value());
    CHECK_FALSE(ff_inverse(make(2, 2, 2, {1, 1, 1, 1})).has_value());
    CHECK(ff_invertible(A));
}

TEST_CASE("arithmetic stays in the field", "[ffmatrix]") {
    FFMatrix A = make(3, 2, 2, {1, 2, 2, 1});
    CHECK((A + A.scaled(2)).is_zero());
    CHECK((A - A).is_zero());
    CHECK(A.transposed().transposed() == A);
    CHECK(ff_inv(2, 5) == 3);
    CHECK(ff_inv(1, 2) == 1);
}
