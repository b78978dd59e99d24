#include "qhopf/braided.hpp"

namespace qhopf {

BraidedHopfObj::BraidedHopfObj(const Field& f, uint32_t d)
    : F(&f),
      dim(d),
      mul_table(size_t(d) * d, SparseVec(d)),
      unit(d),
      comul_table(d, SparseVec(d * d)),
      counit(d),
      antipode(d, d),
      antipode_inv(d, d),
      braiding(d * d, d * d),
      braiding_inv(d * d, d * d) {}

SparseVec BraidedHopfObj::mul_elem(const SparseVec& a, const SparseVec& b) const {
    SparseVec r(dim);
    for (const auto& [i, va] : a.e)
        for (const auto& [j, vb] : b.e) r.axpy(va * vb, mul(i, j));
    return r;
}

SparseVec BraidedHopfObj::comul_elem(const SparseVec& a) const {
    SparseVec r(dim * dim);
    for (const auto& [i, v] : a.e) r.axpy(v, comul_table[i]);
    return r;
}

Scalar BraidedHopfObj::counit_elem(const SparseVec& a) const {
    Scalar s = F->zero();
    for (const auto& [i, v] : a.e) s = s + v * counit.get(i);
    return s;
}

SparseVec BraidedHopfObj::braided_mul2(const SparseVec& a2, const SparseVec& b2) const {
    // (x (x) y)(u (x) v) = x Psi(y (x) u)_1 (x) Psi(y (x) u)_2 v
    SparseVec r(dim * dim);
    for (const auto& [xy, va] : a2.e) {
        uint32_t x = xy / dim, y = xy % dim;
        for (const auto& [uv, vb] : b2.e) {
            uint32_t u = uv / dim, v = uv % dim;
            Scalar c = va * vb;
            SparseVec in(dim * dim);
            in.set(y * dim + u, F->one());
            SparseVec mid = mat_apply(braiding, in);
            for (const auto& [kl, w] : mid.e) {
                uint32_t u2 = kl / dim, y2 = kl % dim;
                SparseVec left = mul(x, u2);
                if (left.is_zero()) continue;
                SparseVec right = mul(y2, v);
                for (const auto& [p, vp] : left.e)
                    for (const auto& [q, vq] : right.e) r.add(p * dim + q, c * w * vp * vq);
            }
        }
    }
    return r;
}

std::vector<TensorTerm> BraidedHopfObj::comul_legs(uint32_t i, unsigned legs) const {
    std::map<std::vector<uint32_t>, Scalar> acc;
    acc[{i}] = F->one();
    for (unsigned l = 2; l <= legs; ++l) {
        std::map<std::vector<uint32_t>, Scalar> nxt;
        for (const auto& [key, v] : acc) {
            uint32_t last = key.back();
            for (const auto& [pq, w] : comul_table[last].e) {
                std::vector<uint32_t> k2(key.begin(), key.end() - 1);
                k2.push_back(pq / dim);
                k2.push_back(pq % dim);
                auto [it, fresh] = nxt.try_emplace(std::move(k2), v * w);
                if (!fresh) {
                    Scalar s = it->second + v * w;
                    if (s.is_zero())
                        nxt.erase(it);
                    else
                        it->second = s;
                }
            }
        }
        acc = std::move(nxt);
    }
    std::vector<TensorTerm> out;
    for (auto& [k, v] : acc) out.push_back({k, v});
    return out;
}

// ---------------------------------------------------------------------------

Report verify_braided_hopf(const BraidedHopfObj& B) {
    Report rep;
    const Field& F = *B.F;
    uint32_t n = B.dim;

    // (co)action axioms and induced-braiding consistency
    if (B.coaction) {
        rep.merge(verify_comodule(*B.coaction));
        if (B.host_cqt) {
            auto [psi, psi_inv] = braiding_from_cqt(*B.host_cqt, *B.coaction, *B.coaction);
            rep.add("braiding matches coaction-induced braiding", psi == B.braiding);
        }
        // coaction is an algebra map into A (x) B
        const HopfOracle& A = *B.coaction->host;
        uint32_t na = A.dim();
        bool ok = true;
        std::string w;
        bool left = B.side == Side::LeftComodule;
        for (uint32_t i = 0; i < n && ok; ++i)
            for (uint32_t j = 0; j < n && ok; ++j) {
                // coact(e_i e_j) vs product of coactions
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
                for (const auto& [k, v] : B.mul(i, j).e)
                    for (const auto& t : B.coaction->coaction[k]) acc(lhs, uint64_t(t.host_idx) * n + t.carrier_idx, v * t.coeff);
                for (const auto& t1 : B.coaction->coaction[i])
                    for (const auto& t2 : B.coaction->coaction[j]) {
                        SparseVec ha = left ? A.mul(t1.host_idx, t2.host_idx) : A.mul(t1.host_idx, t2.host_idx);
                        SparseVec bb = B.mul(t1.carrier_idx, t2.carrier_idx);
                        for (const auto& [h, vh] : ha.e)
                            for (const auto& [k, vk] : bb.e) acc(rhs, uint64_t(h) * n + k, t1.coeff * t2.coeff * vh * vk);
                    }
                if (lhs != rhs) {
                    ok = false;
                    w = B.label(i) + ", " + B.label(j);
                }
            }
        rep.add("coaction multiplicative", ok, w);
        // comodule coalgebra compatibility
        ok = true;
        for (uint32_t i = 0; i < n && ok; ++i) {
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
            // key encodes (host, leg1, leg2)
            for (const auto& t : B.coaction->coaction[i])
                for (const auto& [pq, v] : B.comul_table[t.carrier_idx].e)
                    acc(lhs, (uint64_t(t.host_idx) * n + pq / n) * n + pq % n, t.coeff * v);
            for (const auto& [pq, v] : B.comul_table[i].e) {
                for (const auto& t1 : B.coaction->coaction[pq / n])
                    for (const auto& t2 : B.coaction->coaction[pq % n]) {
                        for (const auto& [h, vh] : A.mul(t1.host_idx, t2.host_idx).e)
                            acc(rhs, (uint64_t(h) * n + t1.carrier_idx) * n + t2.carrier_idx,
                                v * t1.coeff * t2.coeff * vh);
                    }
            }
            if (lhs != rhs) {
                ok = false;
                w = B.label(i);
            }
        }
        rep.add("comodule coalgebra compatibility", ok, w);
        // counit of the carrier is a comodule map: (id x eps) coact = eps(.) 1_A
        ok = true;
        for (uint32_t i = 0; i < n && ok; ++i) {
            SparseVec l(na);
            for (const auto& t : B.coaction->coaction[i]) l.add(t.host_idx, t.coeff * B.counit.get(t.carrier_idx));
            if (l != A.unit().scaled(B.counit.get(i))) ok = false;
        }
        rep.add("counit equivariant", ok);
    }
    if (B.action) {
        rep.merge(verify_module(*B.action));
        if (B.host_qt) {
            auto [psi, psi_inv] = braiding_from_qt(*B.host_qt, *B.action, *B.action);
            rep.add("braiding matches action-induced braiding", psi == B.braiding);
        }
        const HopfOracle& H = *B.action->host;
        uint32_t nh = H.dim();
        bool left = B.side == Side::LeftModule;
        bool ok = true;
        std::string w;
        // module algebra: h |> (bc) = (h1 |> b)(h2 |> c), resp. (bc) <| h = (b <| h1)(c <| h2)
        for (uint32_t h = 0; h < nh && ok; ++h)
            for (uint32_t i = 0; i < n && ok; ++i)
                for (uint32_t j = 0; j < n && ok; ++j) {
                    SparseVec lhs = mat_apply(B.action->action[h], B.mul(i, j));
                    SparseVec rhs(n);
                    for (const auto& [pq, v] : H.comul(h).e) {
                        SparseVec bi = mat_apply(B.action->action[pq / nh], basis_vec(n, i, F.one()));
                        SparseVec cj = mat_apply(B.action->action[pq % nh], basis_vec(n, j, F.one()));
                        rhs.axpy(v, B.mul_elem(bi, cj));
                    }
                    if (lhs != rhs) {
                        ok = false;
                        w = H.label(h) + " ; " + B.label(i) + ", " + B.label(j);
                    }
                }
        rep.add("module algebra law", ok, w);
        // module coalgebra: braided coproduct is a module map
        ok = true;
        for (uint32_t h = 0; h < nh && ok; ++h)
            for (uint32_t i = 0; i < n && ok; ++i) {
                SparseVec lhs = B.comul_elem(mat_apply(B.action->action[h], basis_vec(n, i, F.one())));
                SparseVec rhs(n * n);
                for (const auto& [pq, v] : B.comul_table[i].e)
                    for (const auto& [hh, vh] : H.comul(h).e) {
                        SparseVec b1 = mat_apply(B.action->action[left ? hh / nh : hh / nh], basis_vec(n, pq / n, F.one()));
                        SparseVec b2 = mat_apply(B.action->action[left ? hh % nh : hh % nh], basis_vec(n, pq % n, F.one()));
                        for (const auto& [x, vx] : b1.e)
                            for (const auto& [y, vy] : b2.e) rhs.add(x * n + y, v * vh * vx * vy);
                    }
                if (lhs != rhs) {
                    ok = false;
                    w = H.label(h) + " ; " + B.label(i);
                }
            }
        rep.add("module coalgebra law", ok, w);
    }

    // algebra axioms
    {
        bool ok = true;
        std::string w;
        for (uint32_t i = 0; i < n && ok; ++i) {
            SparseVec ei = basis_vec(n, i, F.one());
            if (B.mul_elem(B.unit, ei) != ei || B.mul_elem(ei, B.unit) != ei) {
                ok = false;
                w = B.label(i);
            }
        }
        for (uint32_t i = 0; i < n && ok; ++i)
            for (uint32_t j = 0; j < n && ok; ++j)
                for (uint32_t k = 0; k < n && ok; ++k) {
                    SparseVec lhs = B.mul_elem(B.mul(i, j), basis_vec(n, k, F.one()));
                    SparseVec rhs = B.mul_elem(basis_vec(n, i, F.one()), B.mul(j, k));
                    if (lhs != rhs) {
                        ok = false;
                        w = B.label(i) + "," + B.label(j) + "," + B.label(k);
                    }
                }
        rep.add("associativity and unit", ok, w);
    }

    // coalgebra axioms
    {
        bool ok = true;
        std::string w;
        for (uint32_t i = 0; i < n && ok; ++i) {
            SparseVec l(n), r(n);
            for (const auto& [pq, v] : B.comul_table[i].e) {
                l.add(pq % n, v * B.counit.get(pq / n));
                r.add(pq / n, v * B.counit.get(pq % n));
            }
            SparseVec ei = basis_vec(n, i, F.one());
            if (l != ei || r != ei) {
                ok = false;
                w = B.label(i);
            }
            std::map<uint64_t, Scalar> a, b;
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
            for (const auto& [pq, v] : B.comul_table[i].e) {
                for (const auto& [rs, u] : B.comul_table[pq / n].e) acc(a, uint64_t(rs) * n + pq % n, v * u);
                for (const auto& [rs, u] : B.comul_table[pq % n].e) acc(b, uint64_t(pq / n) * n * n + rs, v * u);
            }
            if (a != b) {
                ok = false;
                w = B.label(i);
            }
        }
        rep.add("braided coassociativity and counit", ok, w);
    }

    // braided bialgebra law
    {
        bool ok = true;
        std::string w;
        for (uint32_t i = 0; i < n && ok; ++i)
            for (uint32_t j = 0; j < n && ok; ++j) {
                SparseVec lhs = B.comul_elem(B.mul(i, j));
                SparseVec rhs = B.braided_mul2(B.comul_table[i], B.comul_table[j]);
                if (lhs != rhs) {
                    ok = false;
                    w = B.label(i) + ", " + B.label(j);
                }
            }
        rep.add("braided bialgebra law", ok, w);
        bool eok = true;
        for (uint32_t i = 0; i < n && eok; ++i)
            for (uint32_t j = 0; j < n && eok; ++j)
                if (B.counit_elem(B.mul(i, j)) != B.counit.get(i) * B.counit.get(j)) eok = false;
        rep.add("braided counit multiplicative", eok);
    }

    // antipode laws
    {
        bool ok = true;
        std::string w;
        for (uint32_t i = 0; i < n && ok; ++i) {
            SparseVec l(n), r(n);
            for (const auto& [pq, v] : B.comul_table[i].e) {
                l.axpy(v, B.mul_elem(mat_apply(B.antipode, basis_vec(n, pq / n, F.one())),
                                     basis_vec(n, pq % n, F.one())));
                r.axpy(v, B.mul_elem(basis_vec(n, pq / n, F.one()),
                                     mat_apply(B.antipode, basis_vec(n, pq % n, F.one()))));
            }
            SparseVec expect = B.unit.scaled(B.counit.get(i));
            if (l != expect || r != expect) {
                ok = false;
                w = B.label(i);
            }
        }
        rep.add("braided antipode law", ok, w);
    }

    // (braidedS): S mul = mul Psi (S x S) ; Delta S = (S x S) Psi Delta
    {
        bool ok1 = true, ok2 = true;
        std::string w1, w2;
        for (uint32_t i = 0; i < n && (ok1 || ok2); ++i) {
            for (uint32_t j = 0; j < n && ok1; ++j) {
                SparseVec lhs = mat_apply(B.antipode, B.mul(i, j));
                SparseVec ss(n * n);
                SparseVec si = mat_apply(B.antipode, basis_vec(n, i, F.one()));
                SparseVec sj = mat_apply(B.antipode, basis_vec(n, j, F.one()));
                for (const auto& [x, vx] : si.e)
                    for (const auto& [y, vy] : sj.e) ss.add(x * n + y, vx * vy);
                SparseVec braided = mat_apply(B.braiding, ss);
                SparseVec rhs(n);
                for (const auto& [kl, v] : braided.e) rhs.axpy(v, B.mul(kl / n, kl % n));
                if (lhs != rhs) {
                    ok1 = false;
                    w1 = B.label(i) + ", " + B.label(j);
                }
            }
            if (ok2) {
                SparseVec lhs = B.comul_elem(mat_apply(B.antipode, basis_vec(n, i, F.one())));
                SparseVec braided = mat_apply(B.braiding, B.comul_table[i]);
                SparseVec rhs(n * n);
                for (const auto& [kl, v] : braided.e) {
                    SparseVec s1 = mat_apply(B.antipode, basis_vec(n, kl / n, F.one()));
                    SparseVec s2 = mat_apply(B.antipode, basis_vec(n, kl % n, F.one()));
                    for (const auto& [x, vx] : s1.e)
                        for (const auto& [y, vy] : s2.e) rhs.add(x * n + y, v * vx * vy);
                }
                if (lhs != rhs) {
                    ok2 = false;
                    w2 = B.label(i);
                }
            }
        }
        rep.add("braided antipode anti-multiplicative", ok1, w1);
        rep.add("braided antipode anti-comultiplicative", ok2, w2);
    }

    // S inverse
    rep.add("braided antipode inverse",
            mat_mul(B.antipode, B.antipode_inv) == SparseMatrix::identity(n, F) &&
                mat_mul(B.antipode_inv, B.antipode) == SparseMatrix::identity(n, F));

    return rep;
}

// ---------------------------------------------------------------------------

BraidedHopfObj braided_opposite(const BraidedHopfObj& B) {
    BraidedHopfObj O(*B.F, B.dim);
    O.labels = B.labels;
    O.side = B.side;
    if (B.host_qt) O.host_qt = bar_qt(*B.host_qt);
    if (B.host_cqt) O.host_cqt = bar_cqt(*B.host_cqt);
    O.action = B.action;
    O.coaction = B.coaction;
    uint32_t n = B.dim;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            SparseVec in(n * n);
            in.set(i * n + j, B.F->one());
            SparseVec mid = mat_apply(B.braiding_inv, in);
            SparseVec& out = O.mul_table[size_t(i) * n + j];
            for (const auto& [kl, v] : mid.e) out.axpy(v, B.mul(kl / n, kl % n));
        }
    O.unit = B.unit;
    O.comul_table = B.comul_table;
    O.counit = B.counit;
    O.antipode = B.antipode_inv;
    O.antipode_inv = B.antipode;
    O.braiding = B.braiding_inv;
    O.braiding_inv = B.braiding;
    return O;
}

BraidedHopfObj braided_coopposite(const BraidedHopfObj& B) {
    BraidedHopfObj O(*B.F, B.dim);
    O.labels = B.labels;
    O.side = B.side;
    if (B.host_qt) O.host_qt = bar_qt(*B.host_qt);
    if (B.host_cqt) O.host_cqt = bar_cqt(*B.host_cqt);
    O.action = B.action;
    O.coaction = B.coaction;
    O.mul_table = B.mul_table;
    O.unit = B.unit;
    for (uint32_t i = 0; i < B.dim; ++i) O.comul_table[i] = mat_apply(B.braiding_inv, B.comul_table[i]);
    O.counit = B.counit;
    O.antipode = B.antipode_inv;
    O.antipode_inv = B.antipode;
    O.braiding = B.braiding_inv;
    O.braiding_inv = B.braiding;
    return O;
}

BraidedHopfObj braided_dual(const BraidedHopfObj& B) {
    uint32_t n = B.dim;
    BraidedHopfObj D(*B.F, n);
    D.labels.resize(n);
    for (uint32_t i = 0; i < n; ++i) D.labels[i] = B.label(i) + "*";
    // adjoint structure maps
    for (uint32_t k = 0; k < n; ++k)
        for (const auto& [pq, v] : B.comul_table[k].e) D.mul_table[size_t(pq / n) * n + pq % n].add(k, v);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            for (const auto& [k, v] : B.mul(i, j).e) D.comul_table[k].add(i * n + j, v);
    for (uint32_t i = 0; i < n; ++i) D.unit.set(i, B.counit.get(i));
    for (const auto& [i, v] : B.unit.e) D.counit.set(i, v);
    D.antipode = B.antipode.transpose();
    D.antipode_inv = B.antipode_inv.transpose();
    // the (co)action moves to the other side
    switch (B.side) {
        case Side::LeftComodule: {
            D.side = Side::RightComodule;
            D.host_cqt = B.host_cqt;
            Comodule C;
            C.host = B.coaction->host;
            C.dim = n;
            C.left = false;
            C.coaction.resize(n);
            // Delta_R f^k = sum over terms (a, e_k, c) of Delta_L e_i : f^i (x) c a
            for (uint32_t i = 0; i < n; ++i)
                for (const auto& t : B.coaction->coaction[i])
                    C.coaction[t.carrier_idx].push_back({t.host_idx, i, t.coeff});
            D.coaction = std::move(C);
            auto [psi, psi_inv] = braiding_from_cqt(*D.host_cqt, *D.coaction, *D.coaction);
            D.braiding = psi;
            D.braiding_inv = psi_inv;
            break;
        }
        case Side::RightComodule: {
            D.side = Side::LeftComodule;
            D.host_cqt = B.host_cqt;
            Comodule C;
            C.host = B.coaction->host;
            C.dim = n;
            C.left = true;
            C.coaction.resize(n);
            for (uint32_t i = 0; i < n; ++i)
                for (const auto& t : B.coaction->coaction[i])
                    C.coaction[t.carrier_idx].push_back({t.host_idx, i, t.coeff});
            D.coaction = std::move(C);
            auto [psi, psi_inv] = braiding_from_cqt(*D.host_cqt, *D.coaction, *D.coaction);
            D.braiding = psi;
            D.braiding_inv = psi_inv;
            break;
        }
        case Side::RightModule: {
            D.side = Side::LeftModule;
            D.host_qt = B.host_qt;
            ModuleAction M;
            M.host = B.action->host;
            M.dim = n;
            M.left = true;
            M.action.resize(B.action->action.size());
            for (size_t h = 0; h < M.action.size(); ++h) M.action[h] = B.action->action[h].transpose();
            D.action = std::move(M);
            auto [psi, psi_inv] = braiding_from_qt(*D.host_qt, *D.action, *D.action);
            D.braiding = psi;
            D.braiding_inv = psi_inv;
            break;
        }
        case Side::LeftModule: {
            D.side = Side::RightModule;
            D.host_qt = B.host_qt;
            ModuleAction M;
            M.host = B.action->host;
            M.dim = n;
            M.left = false;
            M.action.resize(B.action->action.size());
            for (size_t h = 0; h < M.action.size(); ++h) M.action[h] = B.action->action[h].transpose();
            D.action = std::move(M);
            auto [psi, psi_inv] = braiding_from_qt(*D.host_qt, *D.action, *D.action);
            D.braiding = psi;
            D.braiding_inv = psi_inv;
            break;
        }
    }
    return D;
}

Report verify_braided_pairing(const BraidedPairing& P, VerifyMode mode) {
    Report rep;
    const BraidedHopfObj& B = *P.B;
    const BraidedHopfObj& D = *P.Bstar;
    const Field& F = *B.F;
    uint32_t nb = B.dim, nd = D.dim;
    (void)mode;

    auto pair_idx = [&](uint32_t i, uint32_t j) { return P.gram.get(i, j); };
    auto pair_elem = [&](const SparseVec& b, const SparseVec& f) {
        Scalar s = F.zero();
        for (const auto& [i, vb] : b.e)
            for (const auto& [j, vf] : f.e) {
                Scalar g = pair_idx(i, j);
                if (!g.is_zero()) s = s + vb * vf * g;
            }
        return s;
    };

    // <bc, phi> = <b, phi1><c, phi2>
    {
        bool ok = true;
        std::string w;
        for (uint32_t b = 0; b < nb && ok; ++b)
            for (uint32_t c = 0; c < nb && ok; ++c)
                for (uint32_t f = 0; f < nd && ok; ++f) {
                    Scalar lhs = F.zero();
                    for (const auto& [k, v] : B.mul(b, c).e) lhs = lhs + v * pair_idx(k, f);
                    Scalar rhs = F.zero();
                    for (const auto& [pq, v] : D.comul_table[f].e)
                        rhs = rhs + v * pair_idx(b, pq / nd) * pair_idx(c, pq % nd);
                    if (lhs != rhs) {
                        ok = false;
                        w = B.label(b) + "," + B.label(c) + " ; " + D.label(f);
                    }
                }
        rep.add("braided pairing: product vs coproduct", ok, w);
    }
    // <b, phi psi> = <b1, phi><b2, psi>
    {
        bool ok = true;
        std::string w;
        for (uint32_t b = 0; b < nb && ok; ++b)
            for (uint32_t f = 0; f < nd && ok; ++f)
                for (uint32_t g = 0; g < nd && ok; ++g) {
                    Scalar lhs = F.zero();
                    for (const auto& [k, v] : D.mul(f, g).e) lhs = lhs + v * pair_idx(b, k);
                    Scalar rhs = F.zero();
                    for (const auto& [pq, v] : B.comul_table[b].e)
                        rhs = rhs + v * pair_idx(pq / nb, f) * pair_idx(pq % nb, g);
                    if (lhs != rhs) {
                        ok = false;
                        w = B.label(b) + " ; " + D.label(f) + "," + D.label(g);
                    }
                }
        rep.add("braided pairing: coproduct vs product", ok, w);
    }
    // units and counits
    {
        bool ok = true;
        for (uint32_t f = 0; f < nd && ok; ++f)
            if (pair_elem(B.unit, basis_vec(nd, f, F.one())) != D.counit.get(f)) ok = false;
        for (uint32_t b = 0; b < nb && ok; ++b)
            if (pair_elem(basis_vec(nb, b, F.one()), D.unit) != B.counit.get(b)) ok = false;
        rep.add("braided pairing: unit/counit", ok);
    }
    // antipodes adjoint
    {
        bool ok = true;
        for (uint32_t b = 0; b < nb && ok; ++b)
            for (uint32_t f = 0; f < nd && ok; ++f) {
                Scalar lhs = pair_elem(mat_apply(B.antipode, basis_vec(nb, b, F.one())), basis_vec(nd, f, F.one()));
                Scalar rhs = pair_elem(basis_vec(nb, b, F.one()), mat_apply(D.antipode, basis_vec(nd, f, F.one())));
                if (lhs != rhs) ok = false;
            }
        rep.add("braided pairing: antipode adjoint", ok);
    }
    // duality intertwines the coactions: <b, f^(0)> f^(1) = <b^(inf), f> b^(1)
    if (B.coaction && D.coaction) {
        const HopfOracle& A = *B.coaction->host;
        uint32_t na = A.dim();
        bool ok = true;
        for (uint32_t b = 0; b < nb && ok; ++b)
            for (uint32_t f = 0; f < nd && ok; ++f) {
                SparseVec lhs(na), rhs(na);
                for (const auto& t : D.coaction->coaction[f]) lhs.add(t.host_idx, t.coeff * pair_idx(b, t.carrier_idx));
                for (const auto& t : B.coaction->coaction[b]) rhs.add(t.host_idx, t.coeff * pair_idx(t.carrier_idx, f));
                if (lhs != rhs) ok = false;
            }
        rep.add("braided pairing: coactions intertwined", ok);
    }
    return rep;
}

ModuleAction comodule_to_module(const Comodule& V, const PairingForm& hosts) {
    if (V.host != hosts.left) throw field_error("comodule_to_module: pairing left side must be the comodule host");
    const HopfOracle& H = *hosts.right;
    ModuleAction M;
    M.host = &H;
    M.dim = V.dim;
    M.left = !V.left;  // left comodule over A becomes a right H-module and vice versa
    M.action.assign(H.dim(), SparseMatrix(V.dim, V.dim));
    for (uint32_t j = 0; j < V.dim; ++j)
        for (const auto& t : V.coaction[j])
            for (uint32_t h = 0; h < H.dim(); ++h) {
                Scalar g = hosts.gram.get(t.host_idx, h);
                if (!g.is_zero()) M.action[h].add(t.carrier_idx, j, t.coeff * g);
            }
    return M;
}

BraidedHopfObj braided_line_comodule(const CQTForm& A, bool left, const std::string& gen_name) {
    const HopfOracle& host = *A.host;
    const Field& F = host.field();
    uint32_t n = host.dim();
    BraidedHopfObj B(F, n);
    B.side = left ? Side::LeftComodule : Side::RightComodule;
    B.host_cqt = A;
    B.labels.resize(n);
    for (uint32_t r = 0; r < n; ++r) B.labels[r] = r == 0 ? "1" : gen_name + (r == 1 ? "" : "^" + std::to_string(r));
    for (uint32_t r = 0; r < n; ++r)
        for (uint32_t s = 0; s < n; ++s)
            if (r + s < n) B.mul_table[size_t(r) * n + s].set(r + s, F.one());
    B.unit.set(0, F.one());
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t r = 0; r <= a; ++r) B.comul_table[a].add(r * n + (a - r), F.q_binomial(a, r));
    B.counit.set(0, F.one());
    for (uint32_t a = 0; a < n; ++a) {
        Scalar s = F.mul(F.q_pow(long(a) * (long(a) - 1) / 2), F.from_int((a % 2) ? -1 : 1));
        B.antipode.set(a, a, s);
    }
    auto ai = mat_inverse(B.antipode, F);
    B.antipode_inv = *ai;
    Comodule C;
    C.host = &host;
    C.dim = n;
    C.left = left;
    C.coaction.resize(n);
    for (uint32_t r = 0; r < n; ++r) C.coaction[r].push_back({r, r, F.one()});
    B.coaction = std::move(C);
    auto [psi, psi_inv] = braiding_from_cqt(A, *B.coaction, *B.coaction);
    B.braiding = std::move(psi);
    B.braiding_inv = std::move(psi_inv);
    return B;
}

BraidedHopfObj braided_line_module(const QTElement& H, bool left, const std::string& gen_name) {
    const HopfOracle& host = *H.host;
    const Field& F = host.field();
    uint32_t n = host.dim();
    BraidedHopfObj B(F, n);
    B.side = left ? Side::LeftModule : Side::RightModule;
    B.host_qt = H;
    B.labels.resize(n);
    for (uint32_t r = 0; r < n; ++r) B.labels[r] = r == 0 ? "1" : gen_name + (r == 1 ? "" : "^" + std::to_string(r));
    for (uint32_t r = 0; r < n; ++r)
        for (uint32_t s = 0; s < n; ++s)
            if (r + s < n) B.mul_table[size_t(r) * n + s].set(r + s, F.one());
    B.unit.set(0, F.one());
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t r = 0; r <= a; ++r) B.comul_table[a].add(r * n + (a - r), F.q_binomial(a, r));
    B.counit.set(0, F.one());
    for (uint32_t a = 0; a < n; ++a) {
        Scalar s = F.mul(F.q_pow(long(a) * (long(a) - 1) / 2), F.from_int((a % 2) ? -1 : 1));
        B.antipode.set(a, a, s);
    }
    B.antipode_inv = *mat_inverse(B.antipode, F);
    ModuleAction M;
    M.host = &host;
    M.dim = n;
    M.left = left;
    M.action.assign(n, SparseMatrix(n, n));
    // K^a acts on the grade-r line by q^{ar}
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t r = 0; r < n; ++r) M.action[a].set(r, r, F.q_pow(long(a) * r));
    B.action = std::move(M);
    auto [psi, psi_inv] = braiding_from_qt(H, *B.action, *B.action);
    B.braiding = std::move(psi);
    B.braiding_inv = std::move(psi_inv);
    return B;
}

}  // namespace qhopf
