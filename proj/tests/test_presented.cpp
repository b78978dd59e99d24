#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhopf/presented.hpp"

using namespace qhopf;

namespace {

// u_q(sl2) at a primitive n-th root: generators F, K, Ki, E; PBW order F K E
// with Ki = K^{n-1} kept implicit via K powers.
PresentedHopf make_uqsl2(unsigned n) {
    const Field& F = Field::cyclotomic(n);
    RewriteSystem rs(F, {"F", "K", "E"});
    PresentedHopf P(rs);
    auto& R = P.rs;
    uint32_t f = 0, k = 1, e = 2;
    Scalar q = F.q();
    // K F = q F K ; E K = q K E ; E F = F E + K - K^{-1}
    NCPoly kf;
    nc_add(kf, {f, k}, q);
    R.add_rule({k, f}, kf);
    NCPoly ek;
    nc_add(ek, {k, e}, q);
    R.add_rule({e, k}, ek);
    NCPoly ef;
    nc_add(ef, {f, e}, F.one());
    nc_add(ef, {k}, F.one());
    Word kinv(n - 1, k);
    nc_add(ef, kinv, -F.one());
    R.add_rule({e, f}, ef);
    // powers
    NCPoly one;
    nc_add(one, {}, F.one());
    R.add_rule(Word(n, k), one);
    R.add_rule(Word(n, e), NCPoly{});
    R.add_rule(Word(n, f), NCPoly{});

    // Delta K = K(x)K, Delta E = E(x)K + 1(x)E, Delta F = F(x)1 + K^{-1}(x)F
    nc2_add(P.comul_gen[k], {k}, {k}, F.one());
    nc2_add(P.comul_gen[e], {e}, {k}, F.one());
    nc2_add(P.comul_gen[e], {}, {e}, F.one());
    nc2_add(P.comul_gen[f], {f}, {}, F.one());
    nc2_add(P.comul_gen[f], kinv, {f}, F.one());
    P.counit_gen[k] = F.one();
    P.counit_gen[e] = F.zero();
    P.counit_gen[f] = F.zero();
    // S K = K^{-1}, S E = -E K^{-1}, S F = -K F
    nc_add(P.antipode_gen[k], kinv, F.one());
    NCPoly se;
    nc_add(se, [&] { Word w{e}; w.insert(w.end(), kinv.begin(), kinv.end()); return w; }(), -F.one());
    P.antipode_gen[e] = se;
    NCPoly sf;
    nc_add(sf, {k, f}, -F.one());
    P.antipode_gen[f] = sf;
    return P;
}

}  // namespace

TEST_CASE("basic rewriting and normal forms") {
    const Field& F = Field::cyclotomic(5);
    RewriteSystem rs(F, {"x", "y"});
    NCPoly xy;
    nc_add(xy, {0, 1}, F.q());
    rs.add_rule({1, 0}, xy);  // y x -> q x y
    NCPoly p;
    nc_add(p, {1, 0, 1, 0}, F.one());  // yxyx
    NCPoly nf = rs.normal_form(p);
    REQUIRE(nf.size() == 1);
    CHECK(nf.begin()->first == Word({0, 0, 1, 1}));
    CHECK(nf.begin()->second == F.q_pow(3));
    // idempotent
    CHECK(rs.normal_form(nf) == nf);
    Report conf = rs.check_confluence();
    CHECK(conf.ok());
}

TEST_CASE("inconsistent rule set reports an unresolved pair") {
    const Field& F = Field::cyclotomic(5);
    RewriteSystem rs(F, {"x", "y"});
    NCPoly r1, r2;
    nc_add(r1, {0, 1}, F.one());
    nc_add(r2, {0, 1}, F.q());
    rs.add_rule({1, 0}, r1);
    rs.add_rule({1, 0, 0}, rs.mul(r2, NCPoly{{{0}, F.one()}}));  // conflicting on yxx
    Report conf = rs.check_confluence();
    CHECK(!conf.ok());
}

TEST_CASE("u_q(sl2) presentation at n=3: confluence, relations, basis") {
    PresentedHopf P = make_uqsl2(3);
    const Field& F = P.field();
    Report conf = P.rs.check_confluence();
    INFO(conf.summary());
    CHECK(conf.ok());
    Report compat = P.verify_rule_compatibility();
    INFO(compat.summary());
    CHECK(compat.ok());

    // EF - FE = K - K^{-1}
    NCPoly lhs = P.parse("E F - F E");
    NCPoly rhs = P.parse("K - K^2");  // K^{-1} = K^2 at n=3
    CHECK(P.verify_relation(lhs, rhs));

    auto basis = P.rs.enumerate_basis(100);
    REQUIRE(basis.has_value());
    CHECK(basis->size() == 27);

    HopfData H = P.to_structure_constants(100);
    Report hopf = verify_hopf(H);
    INFO(hopf.summary());
    CHECK(hopf.ok());
}

TEST_CASE("products via rewriting equal products via structure constants") {
    PresentedHopf P = make_uqsl2(3);
    auto basis = *P.rs.enumerate_basis(100);
    auto sp = std::make_shared<PresentedHopf>(P);
    PresentedOracle O(sp, basis);
    HopfData H = materialize(O);
    for (uint32_t i = 0; i < H.dim(); ++i)
        for (uint32_t j = 0; j < H.dim(); ++j) CHECK(H.mul(i, j) == O.mul(i, j));
}

TEST_CASE("step budget guard") {
    const Field& F = Field::cyclotomic(3);
    RewriteSystem rs(F, {"x"});
    NCPoly grow;
    nc_add(grow, {0, 0}, F.one());
    rs.add_rule({0}, grow);  // x -> x^2, non-terminating
    CHECK(!rs.check_termination());
    rs.step_budget = 100;
    NCPoly p;
    nc_add(p, {0}, F.one());
    CHECK_THROWS_AS((void)rs.normal_form(p), field_error);
}

TEST_CASE("cqt on presented host: braided-line bicharacter") {
    // A = C_q[t]/(t^n-1), R(t^r, t^s) = q^{rs}
    const Field& F = Field::cyclotomic(5);
    RewriteSystem rs(F, {"t"});
    NCPoly one;
    nc_add(one, {}, F.one());
    rs.add_rule(Word(5, 0), one);
    PresentedHopf P(rs);
    nc2_add(P.comul_gen[0], {0}, {0}, F.one());
    P.counit_gen[0] = F.one();
    nc_add(P.antipode_gen[0], Word(4, 0), F.one());
    auto sp = std::make_shared<PresentedHopf>(P);
    SparseMatrix table(1, 1);
    table.set(0, 0, F.q());
    PresentedCqt R(sp, table);
    for (unsigned r = 0; r < 5; ++r)
        for (unsigned s = 0; s < 5; ++s) CHECK(R.eval_words(Word(r, 0), Word(s, 0)) == F.q_pow(long(r) * s));
    // R(1, y) = eps(y)
    CHECK(R.eval_words({}, Word(2, 0)) == F.one());
}

TEST_CASE("rule file round trip") {
    const Field& F = Field::cyclotomic(3);
    std::string text =
        "# comment line\n"
        "gens x y\n"
        "y x -> q x y + 2\n"
        "x^3 -> 1\n"
        "y^3 -> 0\n";
    RewriteSystem rs = parse_rewrite_file(F, text);
    CHECK(rs.rules().size() == 3);
    CHECK(rs.rules()[0].lhs == Word({1, 0}));
    CHECK(rs.rules()[1].rhs.begin()->first == Word{});
    CHECK(rs.rules()[2].rhs.empty());
    NCPoly p;
    nc_add(p, {1, 0}, F.one());
    NCPoly nf = rs.normal_form(p);
    CHECK(nf.size() == 2);
}
