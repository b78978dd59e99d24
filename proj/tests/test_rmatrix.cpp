#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhopf/rmatrix.hpp"

using namespace qhopf;

namespace {

// standard quasitriangular structure on C_q[Z_n]: (1/n) sum q^{-ab} K^a (x) K^b
SparseVec rk_element(const Field& F, uint32_t n) {
    SparseVec R(n * n);
    Scalar ninv = inv(F.from_int(long(n)));
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) R.add(a * n + b, ninv * F.q_pow(-long(a) * long(b)));
    return R;
}

}  // namespace

TEST_CASE("trivial R on a cocommutative host") {
    const Field& F = Field::cyclotomic(3);
    HopfData H = group_algebra_zn(F, 3);
    SparseVec R(9);
    R.set(0, F.one());
    QTElement Q = make_qt(H, R);
    Report r = verify_qt(Q);
    INFO(r.summary());
    CHECK(r.ok());
    CHECK(is_triangular(Q));
    CHECK(factorisable_rank(Q) == 1);
    QTElement B = bar_qt(Q);
    CHECK(verify_qt(B).ok());
}

TEST_CASE("R_K on C_q[Z_n] for n=3 and n=5") {
    for (unsigned n : {3u, 5u}) {
        const Field& F = Field::cyclotomic(n);
        HopfData H = group_algebra_zn(F, n);
        QTElement Q = make_qt(H, rk_element(F, n));
        Report r = verify_qt(Q);
        INFO("n=", n, "\n", r.summary());
        CHECK(r.ok());
        // bar(R_K) = (1/n) sum q^{+ab} K^a (x) K^b re-indexed
        QTElement B = bar_qt(Q);
        SparseVec expect(n * n);
        Scalar ninv = inv(F.from_int(long(n)));
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b) expect.add(a * n + b, ninv * F.q_pow(long(a) * long(b)));
        CHECK(B.R == expect);
        CHECK(verify_qt(B).ok());
    }
}

TEST_CASE("cqt q^{rs} on C_q[t]/(t^n-1)") {
    const Field& F = Field::cyclotomic(5);
    HopfData A = group_algebra_zn(F, 5);
    SparseMatrix G(5, 5);
    for (uint32_t r = 0; r < 5; ++r)
        for (uint32_t s = 0; s < 5; ++s) G.set(r, s, F.q_pow(long(r) * s));
    CQTForm C = make_cqt(A, G);
    Report rep = verify_cqt(C);
    INFO(rep.summary());
    CHECK(rep.ok());
    // Rbar(a,b) = R(Sb, a) on all pairs
    CQTForm B = bar_cqt(C);
    for (uint32_t a = 0; a < 5; ++a)
        for (uint32_t b = 0; b < 5; ++b) {
            Scalar rhs = F.zero();
            for (const auto& [sb, v] : A.antipode(b).e) rhs = rhs + v * C.gram.get(sb, a);
            CHECK(B.gram.get(a, b) == rhs);
        }
    CHECK(verify_cqt(B).ok());
    // bar of bar returns the original (and equals R on S x S)
    CQTForm BB = bar_cqt(B);
    CHECK(BB.gram == C.gram);
    SparseMatrix S = antipode_matrix(A);
    CHECK(mat_mul(S.transpose(), mat_mul(C.gram, S)) == C.gram);
}

TEST_CASE("mutated cqt fails verification with witness") {
    const Field& F = Field::cyclotomic(3);
    HopfData A = group_algebra_zn(F, 3);
    SparseMatrix G(3, 3);
    for (uint32_t r = 0; r < 3; ++r)
        for (uint32_t s = 0; s < 3; ++s) G.set(r, s, F.q_pow(long(r) * s));
    CQTForm C = make_cqt(A, G);
    C.gram.set(1, 2, F.one());  // perturb R(t, t^2)
    Report rep = verify_cqt(C);
    CHECK(!rep.ok());
    bool witnessed = false;
    for (const auto& it : rep.items)
        if (!it.pass && !it.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("braiding from cqt: braided line and flip") {
    const Field& F = Field::cyclotomic(5);
    HopfData A = group_algebra_zn(F, 5);
    SparseMatrix G(5, 5);
    for (uint32_t r = 0; r < 5; ++r)
        for (uint32_t s = 0; s < 5; ++s) G.set(r, s, F.q_pow(long(r) * s));
    CQTForm C = make_cqt(A, G);

    // left comodule C[X]/(X^5) with X^r -> t^r (x) X^r
    Comodule V;
    V.host = &A;
    V.dim = 5;
    V.left = true;
    V.coaction.resize(5);
    for (uint32_t r = 0; r < 5; ++r) V.coaction[r].push_back({r, r, F.one()});
    CHECK(verify_comodule(V).ok());
    auto [Psi, PsiInv] = braiding_from_cqt(C, V, V);
    // Psi(X^r (x) X^s) = q^{rs} X^s (x) X^r
    for (uint32_t r = 0; r < 5; ++r)
        for (uint32_t s = 0; s < 5; ++s) {
            SparseVec in(25);
            in.set(r * 5 + s, F.one());
            SparseVec out = mat_apply(Psi, in);
            REQUIRE(out.nnz() == 1);
            CHECK(out.get(s * 5 + r) == F.q_pow(long(r) * s));
        }
    CHECK(mat_mul(Psi, PsiInv) == SparseMatrix::identity(25, F));

    // trivial coaction gives the flip
    Comodule T;
    T.host = &A;
    T.dim = 2;
    T.left = true;
    T.coaction.resize(2);
    for (uint32_t r = 0; r < 2; ++r) T.coaction[r].push_back({0, r, F.one()});
    auto [Flip, FlipInv] = braiding_from_cqt(C, T, T);
    for (uint32_t r = 0; r < 2; ++r)
        for (uint32_t s = 0; s < 2; ++s) {
            SparseVec in(4);
            in.set(r * 2 + s, F.one());
            CHECK(mat_apply(Flip, in).get(s * 2 + r) == F.one());
        }

    // hexagon: Psi_{V (x) V, V} = (Psi x id)(id x Psi)
    Comodule VV = tensor_comodule(V, V);
    auto [PsiVV_V, inv1] = braiding_from_cqt(C, VV, V);
    SparseMatrix left = kron(Psi, SparseMatrix::identity(5, F));
    SparseMatrix right = kron(SparseMatrix::identity(5, F), Psi);
    CHECK(PsiVV_V == mat_mul(left, right));
}

TEST_CASE("braiding from qt on modules") {
    const Field& F = Field::cyclotomic(3);
    HopfData H = group_algebra_zn(F, 3);
    QTElement Q = make_qt(H, rk_element(F, 3));
    // right module C[E]/(E^3) with E^r <| K = q^r E^r
    ModuleAction M;
    M.host = &H;
    M.dim = 3;
    M.left = false;
    M.action.resize(3, SparseMatrix(3, 3));
    for (uint32_t a = 0; a < 3; ++a)
        for (uint32_t r = 0; r < 3; ++r) M.action[a].set(r, r, F.q_pow(long(a) * r));
    CHECK(verify_module(M).ok());
    auto [Psi, PsiInv] = braiding_from_qt(Q, M, M);
    // for the grading braiding: Psi(E^r (x) E^s) = q^{rs} E^s (x) E^r
    for (uint32_t r = 0; r < 3; ++r)
        for (uint32_t s = 0; s < 3; ++s) {
            SparseVec in(9);
            in.set(r * 3 + s, F.one());
            SparseVec out = mat_apply(Psi, in);
            REQUIRE(out.nnz() == 1);
            CHECK(out.get(s * 3 + r) == F.q_pow(long(r) * s));
        }
}
