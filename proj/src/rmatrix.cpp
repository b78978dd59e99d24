#include "qhopf/rmatrix.hpp"

#include <array>
#include <random>

namespace qhopf {

namespace {

using Tensor3 = std::map<std::array<uint32_t, 3>, Scalar>;

void t3_add(Tensor3& t, std::array<uint32_t, 3> k, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = t.try_emplace(k, v);
    if (!fresh) {
        Scalar s = it->second + v;
        if (s.is_zero())
            t.erase(it);
        else
            it->second = s;
    }
}

Tensor3 t3_mul(const HopfOracle& H, const Tensor3& a, const Tensor3& b) {
    Tensor3 r;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            SparseVec p0 = H.mul(ka[0], kb[0]);
            if (p0.is_zero()) continue;
            SparseVec p1 = H.mul(ka[1], kb[1]);
            if (p1.is_zero()) continue;
            SparseVec p2 = H.mul(ka[2], kb[2]);
            if (p2.is_zero()) continue;
            Scalar c = va * vb;
            for (const auto& [x, vx] : p0.e)
                for (const auto& [y, vy] : p1.e)
                    for (const auto& [z, vz] : p2.e) t3_add(r, {x, y, z}, c * vx * vy * vz);
        }
    return r;
}

Tensor3 embed_2tensor(const HopfOracle& H, const SparseVec& R, int leg1, int leg2) {
    uint32_t n = H.dim();
    uint32_t unit_idx = 0;
    // unit must be a single basis vector for this embedding
    if (H.unit().nnz() != 1 || !H.unit().e.begin()->second.is_one())
        throw field_error("embed_2tensor requires a basis unit");
    unit_idx = H.unit().e.begin()->first;
    Tensor3 t;
    for (const auto& [ij, v] : R.e) {
        std::array<uint32_t, 3> k{unit_idx, unit_idx, unit_idx};
        k[leg1] = ij / n;
        k[leg2] = ij % n;
        t3_add(t, k, v);
    }
    return t;
}

}  // namespace

std::optional<SparseVec> invert_2tensor(const HopfOracle& H, const SparseVec& R) {
    // right multiplication by R as a matrix on H (x) H, then solve M x = 1(x)1
    uint32_t n = H.dim();
    uint64_t nn = uint64_t(n) * n;
    if (nn > 60000) throw field_error("invert_2tensor: dimension too large");
    uint32_t N = uint32_t(nn);
    SparseMatrix M(N, N);
    for (uint32_t i1 = 0; i1 < n; ++i1)
        for (uint32_t i2 = 0; i2 < n; ++i2) {
            // column (i1,i2): (e_i1 (x) e_i2) * R
            for (const auto& [jk, v] : R.e) {
                SparseVec p1 = H.mul(i1, jk / n);
                if (p1.is_zero()) continue;
                SparseVec p2 = H.mul(i2, jk % n);
                for (const auto& [x, vx] : p1.e)
                    for (const auto& [y, vy] : p2.e) M.add(x * n + y, i1 * n + i2, v * vx * vy);
            }
        }
    SparseVec one2(N);
    for (const auto& [i, v] : H.unit().e)
        for (const auto& [j, w] : H.unit().e) one2.add(i * n + j, v * w);
    auto x = solve(M, one2);
    if (!x) return std::nullopt;
    // certify on both sides
    SparseVec lr = mul2(H, *x, R);
    SparseVec rl = mul2(H, R, *x);
    if (lr != one2 || rl != one2) return std::nullopt;
    return x;
}

QTElement make_qt(const HopfOracle& H, SparseVec R) {
    auto inv = invert_2tensor(H, R);
    if (!inv) throw field_error("quasitriangular element is not invertible");
    return QTElement{&H, std::move(R), std::move(*inv)};
}

Report verify_qt(const QTElement& Q, VerifyMode mode) {
    Report rep;
    const HopfOracle& H = *Q.host;
    const Field& F = H.field();
    uint32_t n = H.dim();
    SparseVec one2(n * n);
    for (const auto& [i, v] : H.unit().e)
        for (const auto& [j, w] : H.unit().e) one2.add(i * n + j, v * w);

    rep.add("R invertible", mul2(H, Q.R, Q.Rinv) == one2 && mul2(H, Q.Rinv, Q.R) == one2);

    // (Delta (x) id) R = R13 R23
    {
        Tensor3 lhs;
        for (const auto& [ij, v] : Q.R.e) {
            uint32_t i = ij / n, j = ij % n;
            for (const auto& [pq, w] : H.comul(i).e) t3_add(lhs, {pq / n, pq % n, j}, v * w);
        }
        Tensor3 rhs = t3_mul(H, embed_2tensor(H, Q.R, 0, 2), embed_2tensor(H, Q.R, 1, 2));
        rep.add("(Delta x id)R = R13 R23", lhs == rhs);
    }
    // (id (x) Delta) R = R13 R12
    {
        Tensor3 lhs;
        for (const auto& [ij, v] : Q.R.e) {
            uint32_t i = ij / n, j = ij % n;
            for (const auto& [pq, w] : H.comul(j).e) t3_add(lhs, {i, pq / n, pq % n}, v * w);
        }
        Tensor3 rhs = t3_mul(H, embed_2tensor(H, Q.R, 0, 2), embed_2tensor(H, Q.R, 0, 1));
        rep.add("(id x Delta)R = R13 R12", lhs == rhs);
    }
    // quasicommutativity: flip(Delta h) R = R Delta h
    {
        bool ok = true;
        std::string w;
        std::mt19937_64 rng(mode.seed ? mode.seed : 1);
        auto probe = [&](uint32_t h) {
            SparseVec dh = H.comul(h), fdh(n * n);
            for (const auto& [pq, v] : dh.e) fdh.add((pq % n) * n + (pq / n), v);
            if (mul2(H, fdh, Q.R) != mul2(H, Q.R, dh)) {
                ok = false;
                w = H.label(h);
            }
        };
        if (mode.exhaustive && n <= kExhaustiveDimThreshold) {
            for (uint32_t h = 0; h < n && ok; ++h) probe(h);
        } else {
            for (uint64_t t = 0; t < std::max<uint64_t>(mode.samples, 1) && ok; ++t) probe(uint32_t(rng() % n));
        }
        rep.add("quasicommutativity", ok, w);
    }
    (void)F;
    return rep;
}

std::optional<SparseMatrix> cqt_convolution_inverse(const HopfOracle& A, const SparseMatrix& gram) {
    uint32_t n = A.dim();
    const Field& F = A.field();
    // candidate Rbar(a, b) = R(S a, b)
    SparseMatrix cand(n, n);
    for (uint32_t a = 0; a < n; ++a) {
        for (const auto& [sa, v] : A.antipode(a).e)
            for (uint32_t b = 0; b < n; ++b) {
                Scalar g = gram.get(sa, b);
                if (!g.is_zero()) cand.add(a, b, v * g);
            }
    }
    // certify: sum Rinv(a1,b1) R(a2,b2) = eps(a) eps(b) and the other order
    auto certify = [&](const SparseMatrix& inv_form) {
        for (uint32_t a = 0; a < n; ++a) {
            SparseVec da = A.comul(a);
            for (uint32_t b = 0; b < n; ++b) {
                SparseVec db = A.comul(b);
                Scalar l = F.zero(), r = F.zero();
                for (const auto& [a12, va] : da.e)
                    for (const auto& [b12, vb] : db.e) {
                        Scalar i1 = inv_form.get(a12 / n, b12 / n);
                        Scalar g2 = gram.get(a12 % n, b12 % n);
                        if (!i1.is_zero() && !g2.is_zero()) l = l + va * vb * i1 * g2;
                        Scalar g1 = gram.get(a12 / n, b12 / n);
                        Scalar i2 = inv_form.get(a12 % n, b12 % n);
                        if (!g1.is_zero() && !i2.is_zero()) r = r + va * vb * g1 * i2;
                    }
                Scalar expect = A.counit(a) * A.counit(b);
                if (l != expect || r != expect) return false;
            }
        }
        return true;
    };
    if (certify(cand)) return cand;
    // linear solve fallback at small dimension
    if (uint64_t(n) * n > 40000) return std::nullopt;
    uint32_t N = n * n;
    SparseMatrix M(N, N);
    SparseVec rhs(N);
    for (uint32_t a = 0; a < n; ++a) {
        SparseVec da = A.comul(a);
        for (uint32_t b = 0; b < n; ++b) {
            SparseVec db = A.comul(b);
            for (const auto& [a12, va] : da.e)
                for (const auto& [b12, vb] : db.e) {
                    Scalar g2 = gram.get(a12 % n, b12 % n);
                    if (g2.is_zero()) continue;
                    M.add(a * n + b, (a12 / n) * n + (b12 / n), va * vb * g2);
                }
            rhs.set(a * n + b, A.counit(a) * A.counit(b));
        }
    }
    auto x = solve(M, rhs);
    if (!x) return std::nullopt;
    SparseMatrix S(n, n);
    for (const auto& [flat, v] : x->e) S.set(flat / n, flat % n, v);
    if (!certify(S)) return std::nullopt;
    return S;
}

CQTForm make_cqt(const HopfOracle& A, SparseMatrix gram) {
    auto inv = cqt_convolution_inverse(A, gram);
    if (!inv) throw field_error("coquasitriangular form is not convolution invertible");
    return CQTForm{&A, std::move(gram), std::move(*inv)};
}

Report verify_cqt(const CQTForm& C, VerifyMode mode) {
    Report rep;
    const HopfOracle& A = *C.host;
    const Field& F = A.field();
    uint32_t n = A.dim();
    bool exhaustive = mode.exhaustive && n <= kExhaustiveDimThreshold;
    std::mt19937_64 rng(mode.seed ? mode.seed : 1);
    uint64_t samples = mode.exhaustive ? 10000 : mode.samples;

    // unit laws R(1,b) = eps(b), R(a,1) = eps(a)
    {
        bool ok = true;
        std::string w;
        for (uint32_t b = 0; b < n && ok; ++b) {
            Scalar l = F.zero();
            for (const auto& [i, v] : A.unit().e) l = l + v * C.gram.get(i, b);
            if (l != A.counit(b)) {
                ok = false;
                w = "R(1," + A.label(b) + ")";
            }
        }
        for (uint32_t a = 0; a < n && ok; ++a) {
            Scalar l = F.zero();
            for (const auto& [i, v] : A.unit().e) l = l + v * C.gram.get(a, i);
            if (l != A.counit(a)) {
                ok = false;
                w = "R(" + A.label(a) + ",1)";
            }
        }
        rep.add("cqt unit laws", ok, w);
    }

    // convolution invertibility
    {
        bool ok = true;
        std::string w;
        auto probe = [&](uint32_t a, uint32_t b) {
            Scalar l = F.zero(), r = F.zero();
            for (const auto& [a12, va] : A.comul(a).e)
                for (const auto& [b12, vb] : A.comul(b).e) {
                    Scalar i1 = C.gram_inv.get(a12 / n, b12 / n);
                    if (!i1.is_zero()) {
                        Scalar g2 = C.gram.get(a12 % n, b12 % n);
                        if (!g2.is_zero()) l = l + va * vb * i1 * g2;
                    }
                    Scalar g1 = C.gram.get(a12 / n, b12 / n);
                    if (!g1.is_zero()) {
                        Scalar i2 = C.gram_inv.get(a12 % n, b12 % n);
                        if (!i2.is_zero()) r = r + va * vb * g1 * i2;
                    }
                }
            Scalar expect = A.counit(a) * A.counit(b);
            if (l != expect || r != expect) {
                ok = false;
                w = A.label(a) + " ; " + A.label(b);
            }
        };
        if (exhaustive) {
            for (uint32_t a = 0; a < n && ok; ++a)
                for (uint32_t b = 0; b < n && ok; ++b) probe(a, b);
        } else {
            for (uint64_t t = 0; t < samples && ok; ++t) probe(uint32_t(rng() % n), uint32_t(rng() % n));
        }
        rep.add("cqt convolution inverse", ok, w);
    }

    // gram rows/cols as sparse vectors for fast access
    std::vector<SparseVec> grow(n, SparseVec(n)), gcol(n, SparseVec(n));
    for (const auto& [ij, v] : C.gram.e) {
        grow[ij.first].set(ij.second, v);
        gcol[ij.second].set(ij.first, v);
    }

    // bicharacter law 1: R(ab, c) = R(a, c1) R(b, c2)
    {
        bool ok = true;
        std::string w;
        auto probe = [&](uint32_t a, uint32_t b, uint32_t c) {
            Scalar lhs = F.zero();
            for (const auto& [e2, v] : A.mul(a, b).e) {
                Scalar g = gcol[c].get(e2);
                if (!g.is_zero()) lhs = lhs + v * g;
            }
            Scalar rhs = F.zero();
            for (const auto& [c12, v] : A.comul(c).e) {
                Scalar g1 = grow[a].get(c12 / n);
                if (g1.is_zero()) continue;
                Scalar g2 = grow[b].get(c12 % n);
                if (!g2.is_zero()) rhs = rhs + v * g1 * g2;
            }
            if (lhs != rhs) {
                ok = false;
                w = A.label(a) + "," + A.label(b) + " ; " + A.label(c);
            }
        };
        if (exhaustive) {
            // per c: lhs entries via the mul table filtered by gram column c,
            // rhs via outer products of gram rows against Delta c
            // mul-preimage index: e -> list of (a, b, coeff)
            std::vector<std::vector<std::tuple<uint32_t, uint32_t, Scalar>>> pre(n);
            for (uint32_t a = 0; a < n && ok; ++a)
                for (uint32_t b = 0; b < n; ++b)
                    for (const auto& [e2, v] : A.mul(a, b).e) pre[e2].push_back({a, b, v});
            for (uint32_t c = 0; c < n && ok; ++c) {
                std::map<uint64_t, Scalar> lhs, rhs;
                auto acc = [](std::map<uint64_t, Scalar>& m, uint64_t k, const Scalar& v) {
                    if (v.is_zero()) return;
                    auto [it, fresh] = m.try_emplace(k, v);
                    if (!fresh) {
                        Scalar s = it->second + v;
                        if (s.is_zero())
                            m.erase(it);
                        else
                            it->second = s;
                    }
                };
                for (const auto& [e2, g] : gcol[c].e)
                    for (const auto& [a, b, v] : pre[e2]) acc(lhs, uint64_t(a) * n + b, v * g);
                for (const auto& [c12, v] : A.comul(c).e) {
                    uint32_t c1 = c12 / n, c2 = c12 % n;
                    for (const auto& [a, g1] : gcol[c1].e)
                        for (const auto& [b, g2] : gcol[c2].e) acc(rhs, uint64_t(a) * n + b, v * g1 * g2);
                }
                if (lhs != rhs) {
                    ok = false;
                    uint64_t ab = lhs.size() ? lhs.begin()->first : rhs.begin()->first;
                    w = A.label(uint32_t(ab / n)) + "," + A.label(uint32_t(ab % n)) + " ; " + A.label(c);
                }
            }
        } else {
            for (uint64_t t = 0; t < samples && ok; ++t)
                probe(uint32_t(rng() % n), uint32_t(rng() % n), uint32_t(rng() % n));
        }
        rep.add("cqt product law (first argument)", ok, w);
    }

    // bicharacter law 2: R(a, bc) = R(a1, c) R(a2, b)
    {
        bool ok = true;
        std::string w;
        auto probe = [&](uint32_t a, uint32_t b, uint32_t c) {
            Scalar lhs = F.zero();
            for (const auto& [e2, v] : A.mul(b, c).e) {
                Scalar g = grow[a].get(e2);
                if (!g.is_zero()) lhs = lhs + v * g;
            }
            Scalar rhs = F.zero();
            for (const auto& [a12, v] : A.comul(a).e) {
                Scalar g1 = grow[a12 / n].get(c);
                if (g1.is_zero()) continue;
                Scalar g2 = grow[a12 % n].get(b);
                if (!g2.is_zero()) rhs = rhs + v * g1 * g2;
            }
            if (lhs != rhs) {
                ok = false;
                w = A.label(a) + " ; " + A.label(b) + "," + A.label(c);
            }
        };
        if (exhaustive) {
            std::vector<std::vector<std::tuple<uint32_t, uint32_t, Scalar>>> pre(n);
            for (uint32_t b = 0; b < n; ++b)
                for (uint32_t c = 0; c < n; ++c)
                    for (const auto& [e2, v] : A.mul(b, c).e) pre[e2].push_back({b, c, v});
            for (uint32_t a = 0; a < n && ok; ++a) {
                std::map<uint64_t, Scalar> lhs, rhs;
                auto acc = [](std::map<uint64_t, Scalar>& m, uint64_t k, const Scalar& v) {
                    if (v.is_zero()) return;
                    auto [it, fresh] = m.try_emplace(k, v);
                    if (!fresh) {
                        Scalar s = it->second + v;
                        if (s.is_zero())
                            m.erase(it);
                        else
                            it->second = s;
                    }
                };
                for (const auto& [e2, g] : grow[a].e)
                    for (const auto& [b, c, v] : pre[e2]) acc(lhs, uint64_t(b) * n + c, v * g);
                for (const auto& [a12, v] : A.comul(a).e) {
                    for (const auto& [c, g1] : grow[a12 / n].e)
                        for (const auto& [b, g2] : grow[a12 % n].e) acc(rhs, uint64_t(b) * n + c, v * g1 * g2);
                }
                if (lhs != rhs) {
                    ok = false;
                    uint64_t bc = lhs.size() ? lhs.begin()->first : rhs.begin()->first;
                    w = A.label(a) + " ; " + A.label(uint32_t(bc / n)) + "," + A.label(uint32_t(bc % n));
                }
            }
        } else {
            for (uint64_t t = 0; t < samples && ok; ++t)
                probe(uint32_t(rng() % n), uint32_t(rng() % n), uint32_t(rng() % n));
        }
        rep.add("cqt product law (second argument)", ok, w);
    }

    // quasicommutativity: a1 b1 R(b2, a2) = R(b1, a1) b2 a2
    {
        bool ok = true;
        std::string w;
        // Vl[b]: a2 -> sum Delta b coeff * R(b2, a2) * b1
        // Vr[b]: a1 -> sum Delta b coeff * R(b1, a1) * b2
        std::vector<std::map<uint32_t, SparseVec>> Vl(n), Vr(n);
        auto build_v = [&](uint32_t b) {
            auto& left = Vl[b];
            auto& right = Vr[b];
            for (const auto& [b12, vb] : A.comul(b).e) {
                uint32_t b1 = b12 / n, b2 = b12 % n;
                for (const auto& [a2, g] : grow[b2].e) {
                    auto [it, fresh] = left.try_emplace(a2, SparseVec(n));
                    it->second.add(b1, vb * g);
                }
                for (const auto& [a1, g] : grow[b1].e) {
                    auto [it, fresh] = right.try_emplace(a1, SparseVec(n));
                    it->second.add(b2, vb * g);
                }
            }
        };
        auto probe = [&](uint32_t a, uint32_t b) {
            if (Vl[b].empty() && Vr[b].empty()) build_v(b);
            SparseVec lhs(n), rhs(n);
            for (const auto& [a12, va] : A.comul(a).e) {
                uint32_t a1 = a12 / n, a2 = a12 % n;
                auto itl = Vl[b].find(a2);
                if (itl != Vl[b].end())
                    for (const auto& [b1, c] : itl->second.e) lhs.axpy(va * c, A.mul(a1, b1));
                auto itr = Vr[b].find(a1);
                if (itr != Vr[b].end())
                    for (const auto& [b2, c] : itr->second.e) rhs.axpy(va * c, A.mul(b2, a2));
            }
            if (lhs != rhs) {
                ok = false;
                w = A.label(a) + " ; " + A.label(b);
            }
        };
        if (exhaustive) {
            for (uint32_t b = 0; b < n && ok; ++b)
                for (uint32_t a = 0; a < n && ok; ++a) probe(a, b);
        } else {
            for (uint64_t t = 0; t < samples && ok; ++t) probe(uint32_t(rng() % n), uint32_t(rng() % n));
        }
        rep.add("cqt quasicommutativity", ok, w);
    }

    return rep;
}

QTElement bar_qt(const QTElement& Q) {
    uint32_t n = Q.host->dim();
    QTElement B;
    B.host = Q.host;
    B.R = SparseVec(n * n);
    B.Rinv = SparseVec(n * n);
    for (const auto& [ij, v] : Q.Rinv.e) B.R.set((ij % n) * n + (ij / n), v);
    for (const auto& [ij, v] : Q.R.e) B.Rinv.set((ij % n) * n + (ij / n), v);
    return B;
}

CQTForm bar_cqt(const CQTForm& C) {
    CQTForm B;
    B.host = C.host;
    B.gram = C.gram_inv.transpose();
    B.gram_inv = C.gram.transpose();
    return B;
}

SparseVec monodromy(const QTElement& Q) {
    uint32_t n = Q.host->dim();
    SparseVec R21(n * n);
    for (const auto& [ij, v] : Q.R.e) R21.set((ij % n) * n + (ij / n), v);
    return mul2(*Q.host, R21, Q.R);
}

bool is_triangular(const QTElement& Q, std::string* witness) {
    const HopfOracle& H = *Q.host;
    uint32_t n = H.dim();
    SparseVec one2(n * n);
    for (const auto& [i, v] : H.unit().e)
        for (const auto& [j, w] : H.unit().e) one2.add(i * n + j, v * w);
    SparseVec Qm = monodromy(Q);
    if (Qm == one2) return true;
    if (witness) {
        SparseVec diff = Qm;
        for (const auto& [i, v] : one2.e) diff.add(i, -v);
        uint32_t flat = diff.e.begin()->first;
        *witness = "Q - 1(x)1 has term " + H.label(flat / n) + " (x) " + H.label(flat % n);
    }
    return false;
}

namespace {
SparseMatrix monodromy_matrix(const QTElement& Q) {
    uint32_t n = Q.host->dim();
    SparseVec Qm = monodromy(Q);
    SparseMatrix M(n, n);
    for (const auto& [ij, v] : Qm.e) M.set(ij % n, ij / n, v);  // (phi x id)Q: row = second leg
    return M;
}
}  // namespace

uint32_t factorisable_rank(const QTElement& Q) { return rank(monodromy_matrix(Q)); }

bool in_monodromy_image(const QTElement& Q, const SparseVec& v) {
    return solve(monodromy_matrix(Q), v).has_value();
}

// ---------------------------------------------------------------------------
// comodules and braidings

Report verify_comodule(const Comodule& V) {
    Report rep;
    const HopfOracle& A = *V.host;
    const Field& F = A.field();
    uint32_t na = A.dim();
    bool coassoc = true, counit_ok = true;
    for (uint32_t j = 0; j < V.dim && (coassoc || counit_ok); ++j) {
        // counit: (eps x id) coaction = id
        SparseVec cu(V.dim);
        for (const auto& t : V.coaction[j]) cu.add(t.carrier_idx, t.coeff * A.counit(t.host_idx));
        if (cu != basis_vec(V.dim, j, F.one())) counit_ok = false;
        // coassociativity of the coaction
        std::map<std::array<uint32_t, 3>, Scalar> lhs, rhs;  // (a, a', i)
        for (const auto& t : V.coaction[j]) {
            for (const auto& [pq, w] : A.comul(t.host_idx).e) {
                auto key = std::array<uint32_t, 3>{pq / na, pq % na, t.carrier_idx};
                auto [it, fresh] = lhs.try_emplace(key, t.coeff * w);
                if (!fresh) {
                    Scalar s = it->second + t.coeff * w;
                    if (s.is_zero())
                        lhs.erase(it);
                    else
                        it->second = s;
                }
            }
            for (const auto& t2 : V.coaction[t.carrier_idx]) {
                std::array<uint32_t, 3> key = V.left ? std::array<uint32_t, 3>{t.host_idx, t2.host_idx, t2.carrier_idx}
                                                     : std::array<uint32_t, 3>{t2.host_idx, t.host_idx, t2.carrier_idx};
                auto [it, fresh] = rhs.try_emplace(key, t.coeff * t2.coeff);
                if (!fresh) {
                    Scalar s = it->second + t.coeff * t2.coeff;
                    if (s.is_zero())
                        rhs.erase(it);
                    else
                        it->second = s;
                }
            }
        }
        if (lhs != rhs) coassoc = false;
    }
    rep.add("coaction counit law", counit_ok);
    rep.add("coaction coassociativity", coassoc);
    return rep;
}

Comodule tensor_comodule(const Comodule& V, const Comodule& W) {
    if (V.host != W.host || V.left != W.left) throw field_error("tensor_comodule: incompatible");
    Comodule T;
    T.host = V.host;
    T.left = V.left;
    T.dim = V.dim * W.dim;
    T.coaction.resize(T.dim);
    const HopfOracle& A = *V.host;
    for (uint32_t j1 = 0; j1 < V.dim; ++j1)
        for (uint32_t j2 = 0; j2 < W.dim; ++j2)
            for (const auto& t1 : V.coaction[j1])
                for (const auto& t2 : W.coaction[j2]) {
                    SparseVec prod = V.left ? A.mul(t1.host_idx, t2.host_idx) : A.mul(t1.host_idx, t2.host_idx);
                    for (const auto& [h, c] : prod.e)
                        T.coaction[j1 * W.dim + j2].push_back(
                            {h, t1.carrier_idx * W.dim + t2.carrier_idx, t1.coeff * t2.coeff * c});
                }
    return T;
}

std::pair<SparseMatrix, SparseMatrix> braiding_from_cqt(const CQTForm& C, const Comodule& V, const Comodule& W) {
    if (V.left != W.left) throw field_error("braiding: mixed comodule sides");
    uint32_t dv = V.dim, dw = W.dim;
    SparseMatrix Psi(dv * dw, dv * dw);
    for (uint32_t j1 = 0; j1 < dv; ++j1)
        for (uint32_t j2 = 0; j2 < dw; ++j2)
            for (const auto& tv : V.coaction[j1])
                for (const auto& tw : W.coaction[j2]) {
                    Scalar g = V.left ? C.gram.get(tw.host_idx, tv.host_idx)   // R(w1, v1) w(inf) x v(inf)
                                      : C.gram.get(tv.host_idx, tw.host_idx);  // w0 x v0 R(v1, w1)
                    if (g.is_zero()) continue;
                    Psi.add(tw.carrier_idx * dv + tv.carrier_idx, j1 * dw + j2, g * tv.coeff * tw.coeff);
                }
    auto inv = mat_inverse(Psi, C.host->field());
    if (!inv) throw field_error("braiding is singular");
    return {Psi, *inv};
}

Report verify_module(const ModuleAction& M) {
    Report rep;
    const HopfOracle& H = *M.host;
    uint32_t n = H.dim();
    bool ok = true;
    // action of products agrees with composition; unit acts as identity
    SparseMatrix id = SparseMatrix::identity(M.dim, H.field());
    SparseMatrix uact(M.dim, M.dim);
    for (const auto& [i, v] : H.unit().e) uact = mat_add(uact, mat_scaled(M.action[i], v));
    if (!(uact == id)) ok = false;
    for (uint32_t i = 0; i < n && ok; ++i)
        for (uint32_t j = 0; j < n && ok; ++j) {
            SparseMatrix lhs(M.dim, M.dim);
            for (const auto& [k, v] : H.mul(i, j).e) lhs = mat_add(lhs, mat_scaled(M.action[k], v));
            SparseMatrix rhs = M.left ? mat_mul(M.action[i], M.action[j]) : mat_mul(M.action[j], M.action[i]);
            if (!(lhs == rhs)) ok = false;
        }
    rep.add(M.left ? "left action axioms" : "right action axioms", ok);
    return rep;
}

std::pair<SparseMatrix, SparseMatrix> braiding_from_qt(const QTElement& Q, const ModuleAction& V,
                                                       const ModuleAction& W) {
    if (V.left != W.left) throw field_error("braiding: mixed module sides");
    uint32_t dv = V.dim, dw = W.dim, n = Q.host->dim();
    SparseMatrix Psi(dv * dw, dv * dw);
    for (const auto& [ij, c] : Q.R.e) {
        uint32_t r1 = ij / n, r2 = ij % n;
        if (V.left) {
            // Psi_L(v x w) = R2 |> w (x) R1 |> v
            const SparseMatrix& aw = W.action[r2];
            const SparseMatrix& av = V.action[r1];
            for (const auto& [wkl, wv] : aw.e)
                for (const auto& [vkl, vv] : av.e)
                    Psi.add(wkl.first * dv + vkl.first, vkl.second * dw + wkl.second, c * wv * vv);
        } else {
            // Psi_R(v x w) = w <| R1 (x) v <| R2
            const SparseMatrix& aw = W.action[r1];
            const SparseMatrix& av = V.action[r2];
            for (const auto& [wkl, wv] : aw.e)
                for (const auto& [vkl, vv] : av.e)
                    Psi.add(wkl.first * dv + vkl.first, vkl.second * dw + wkl.second, c * wv * vv);
        }
    }
    auto inv = mat_inverse(Psi, Q.host->field());
    if (!inv) throw field_error("braiding is singular");
    return {Psi, *inv};
}

}  // namespace qhopf
