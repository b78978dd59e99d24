#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhopf/linalg.hpp"

using namespace qhopf;

TEST_CASE("tensor index codec") {
    std::vector<uint32_t> dims{3, 3};
    CHECK(tensor_index_encode({0, 0}, dims) == 0);
    CHECK(tensor_index_encode({1, 2}, dims) == 5);
    CHECK(tensor_index_encode({2, 1, 0}, {3, 3, 3}) == 21);
    for (uint32_t f = 0; f < 9; ++f) CHECK(tensor_index_encode(tensor_index_decode(f, dims), dims) == f);
    CHECK_THROWS_AS((void)tensor_index_encode({3, 0}, dims), field_error);
}

TEST_CASE("kron and apply") {
    const Field& F = Field::cyclotomic(5);
    SparseMatrix id2 = SparseMatrix::identity(2, F);
    SparseMatrix id3 = SparseMatrix::identity(3, F);
    CHECK(kron(id2, id3) == SparseMatrix::identity(6, F));

    SparseMatrix dq(2, 2);
    dq.set(0, 0, F.q());
    dq.set(1, 1, F.q());
    SparseMatrix k = kron(dq, dq);
    for (uint32_t i = 0; i < 4; ++i) CHECK(k.get(i, i) == F.q_pow(2));

    SparseMatrix z(3, 3);
    SparseVec v(3);
    v.set(1, F.q());
    CHECK(mat_apply(z, v).is_zero());
}

TEST_CASE("solve, rank, nullspace") {
    const Field& F = Field::cyclotomic(5);
    SparseMatrix id = SparseMatrix::identity(4, F);
    SparseVec b(4);
    b.set(2, F.q_pow(3));
    auto x = solve(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    SparseMatrix z(3, 5);
    CHECK(rank(z) == 0);
    CHECK(nullspace(z).size() == 5);

    // [[1, q],[q^-1, 1]] has determinant 0, nullspace dim 1
    SparseMatrix m(2, 2);
    m.set(0, 0, F.one());
    m.set(0, 1, F.q());
    m.set(1, 0, F.q_pow(4));
    m.set(1, 1, F.one());
    CHECK(rank(m) == 1);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(mat_apply(m, ns[0]).is_zero());
}

TEST_CASE("randomized solve consistency") {
    const Field& F = Field::cyclotomic(3);
    std::mt19937_64 rng(99);
    for (int t = 0; t < 25; ++t) {
        uint32_t n = 2 + rng() % 5, m = 2 + rng() % 5;
        SparseMatrix A(n, m);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < m; ++j)
                if (rng() % 2) A.set(i, j, F.mul(F.from_int(long(rng() % 5) - 2), F.q_pow(rng() % 3)));
        CHECK(rank(A) + nullspace(A).size() == m);
        SparseVec b(n);
        for (uint32_t i = 0; i < n; ++i)
            if (rng() % 2) b.set(i, F.q_pow(rng() % 3));
        auto x = solve(A, b);
        if (x) CHECK(mat_apply(A, *x) == b);
    }
}

TEST_CASE("inverse and characteristic polynomial") {
    const Field& F = Field::cyclotomic(1);  // plain Q
    SparseMatrix m(2, 2);
    m.set(0, 0, F.from_int(2));
    m.set(0, 1, F.from_int(1));
    m.set(1, 1, F.from_int(3));
    auto mi = mat_inverse(m, F);
    REQUIRE(mi.has_value());
    CHECK(mat_mul(m, *mi) == SparseMatrix::identity(2, F));
    // char poly of [[2,1],[0,3]] = x^2 -5x + 6
    auto cp = char_poly(m, F);
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == F.from_int(6));
    CHECK(cp[1] == F.from_int(-5));
    CHECK(cp[2] == F.one());
}
