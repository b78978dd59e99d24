#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhopf/scalar.hpp"

using namespace qhopf;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == ZPoly{BigInt(-1), BigInt(1)});
    CHECK(cyclotomic_polynomial(2) == ZPoly{BigInt(1), BigInt(1)});
    // Phi_5 = x^4+x^3+x^2+x+1, via division of x^5-1 by x-1
    CHECK(cyclotomic_polynomial(5) == ZPoly{BigInt(1), BigInt(1), BigInt(1), BigInt(1), BigInt(1)});
    CHECK(cyclotomic_polynomial(6) == ZPoly{BigInt(1), BigInt(-1), BigInt(1)});
    CHECK(Field::cyclotomic(1).degree() == 1);
    CHECK(Field::cyclotomic(5).degree() == 4);
    CHECK(Field::cyclotomic(12).degree() == 4);
}

TEST_CASE("root of unity arithmetic") {
    const Field& F = Field::cyclotomic(3);
    Scalar q = F.q();
    CHECK(F.mul(F.mul(q, q), q) == F.one());
    CHECK(q != F.one());
    CHECK(F.mul(q, q) != F.one());

    const Field& F5 = Field::cyclotomic(5);
    CHECK(F5.inv(F5.q()) == F5.q_pow(4));
    // q^n = 1, q^k != 1 for 0<k<n
    for (unsigned n : {2u, 3u, 5u, 7u, 11u}) {
        const Field& Fn = Field::cyclotomic(n);
        CHECK(Fn.q_pow(n) == Fn.one());
        for (unsigned k = 1; k < n; ++k) CHECK(Fn.q_pow(k) != Fn.one());
    }
}

TEST_CASE("rational function field") {
    const Field& Q = Field::rational_function();
    Scalar q = Q.q();
    // inv(1-q) * (1-q^2) = 1+q
    Scalar a = Q.inv(Q.sub(Q.one(), q));
    Scalar b = Q.sub(Q.one(), Q.mul(q, q));
    CHECK(Q.mul(a, b) == Q.add(Q.one(), q));
    CHECK(Q.mul(q, Q.inv(q)) == Q.one());
    CHECK_THROWS_AS((void)Q.inv(Q.zero()), field_error);
}

TEST_CASE("ring axioms, randomized") {
    std::mt19937_64 rng(12345);
    auto rnd = [&](const Field& F) {
        QPoly c(F.is_cyclotomic() ? F.degree() : 3);
        for (auto& x : c) x = Rat(long(rng() % 13) - 6, 1 + long(rng() % 4));
        if (F.is_cyclotomic()) return F.from_coeffs(c);
        QPoly d{Rat(1), Rat(long(rng() % 3))};
        return F.from_ratfun(c, d);
    };
    for (const Field* F : {&Field::cyclotomic(5), &Field::rational_function()}) {
        for (int t = 0; t < 40; ++t) {
            Scalar a = rnd(*F), b = rnd(*F), c = rnd(*F);
            CHECK(F->add(a, b) == F->add(b, a));
            CHECK(F->mul(a, b) == F->mul(b, a));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->add(a, F->neg(a)) == F->zero());
            if (!a.is_zero()) CHECK(F->mul(a, F->inv(a)) == F->one());
        }
    }
}

TEST_CASE("mixed-field operations rejected") {
    const Field& F3 = Field::cyclotomic(3);
    const Field& F5 = Field::cyclotomic(5);
    CHECK_THROWS_AS((void)F3.add(F3.q(), F5.q()), field_error);
}

TEST_CASE("q-combinatorics basics") {
    const Field& F = Field::cyclotomic(5);
    CHECK(F.q_factorial(0) == F.one());
    CHECK(F.q_int(2) == F.add(F.one(), F.q()));
    // [4 choose 2]_q = (1+q^2)(1+q+q^2)
    Scalar expect = F.mul(F.add(F.one(), F.q_pow(2)),
                          F.add(F.add(F.one(), F.q()), F.q_pow(2)));
    CHECK(F.q_binomial(4, 2) == expect);
}

TEST_CASE("q-binomial against Gaussian product oracle") {
    // independent oracle: prod_{i=0}^{r-1} (1-q^{a-i})/(1-q^{i+1}), computed in Q(q)
    const Field& Q = Field::rational_function();
    auto oracle = [&](long a, long r) {
        Scalar v = Q.one();
        for (long i = 0; i < r; ++i) {
            v = Q.mul(v, Q.sub(Q.one(), Q.q_pow(a - i)));
            v = Q.mul(v, Q.inv(Q.sub(Q.one(), Q.q_pow(i + 1))));
        }
        return v;
    };
    for (long a = 0; a <= 8; ++a)
        for (long r = 0; r <= a; ++r) CHECK(Q.q_binomial(a, r) == oracle(a, r));
    // and at a root of unity via the polynomial route
    const Field& F = Field::cyclotomic(5);
    for (long a = 0; a <= 8; ++a)
        for (long r = 0; r <= a; ++r) {
            auto [num, den] = Q.ratfun_parts(Q.q_binomial(a, r));
            CHECK(den == zpoly_one());
            QPoly qc(num.size());
            for (size_t i = 0; i < num.size(); ++i) qc[i] = Rat(num[i]);
            CHECK(F.q_binomial(a, r) == F.from_coeffs(qc));
        }
}

TEST_CASE("q-identities") {
    for (unsigned n : {2u, 3u, 5u, 7u, 11u}) {
        const Field& F = Field::cyclotomic(n);
        for (long a = 0; a < long(n); ++a) CHECK(check_q_identity_1(F, a));
        for (long r = 0; r < long(n); ++r)
            for (long s = 0; s < long(n); ++s) CHECK(check_q_identity_2(F, r, s));
    }
    // n=3, a=1: two-term sum equals (1-q)
    const Field& F3 = Field::cyclotomic(3);
    CHECK(check_q_identity_1(F3, 1));
}

TEST_CASE("solve_beta and mod_inverse") {
    CHECK(solve_beta(3) == 0);
    CHECK(solve_beta(11) == 5);
    CHECK(!solve_beta(5).has_value());
    CHECK(mod_inverse(1, 7) == 1);
    CHECK(mod_inverse(5, 11) == 9);
    CHECK_THROWS_AS((void)mod_inverse(3, 9), field_error);
}

TEST_CASE("scalar string round trip") {
    const Field& F = Field::cyclotomic(5);
    Scalar v = F.add(F.q_pow(3), F.from_rat(Rat(-7, 2)));
    CHECK(F.parse(F.to_string(v)) == v);
    const Field& Q = Field::rational_function();
    Scalar w = Q.from_ratfun(QPoly{Rat(1), Rat(0), Rat(-2)}, QPoly{Rat(1), Rat(1)});
    CHECK(Q.parse(Q.to_string(w)) == w);
    CHECK(Q.to_string(Q.one()) == "1");
}
