#include "qhopf/hopf.hpp"

#include <algorithm>
#include <random>

namespace qhopf {

HopfData::HopfData(const Field& f, uint32_t dim)
    : F(&f),
      n(dim),
      mul_table(size_t(dim) * dim, SparseVec(dim)),
      comul_table(dim, SparseVec(dim * dim)),
      unit_vec(dim),
      counit_vec(dim),
      antipode_mat(dim, dim) {}

SparseVec HopfData::antipode(uint32_t i) const {
    SparseVec r(n);
    for (const auto& [ij, v] : antipode_mat.e)
        if (ij.second == i) r.set(ij.first, v);
    return r;
}

LazyHopf::LazyHopf(const Field& f, uint32_t dim, std::vector<std::string> labels, SparseVec unit,
                   std::function<SparseVec(uint32_t, uint32_t)> mul, std::function<SparseVec(uint32_t)> comul,
                   std::function<Scalar(uint32_t)> counit, std::function<SparseVec(uint32_t)> antipode)
    : F_(&f),
      n_(dim),
      labels_(std::move(labels)),
      unit_(std::move(unit)),
      mul_(std::move(mul)),
      comul_(std::move(comul)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {}

SparseVec LazyHopf::mul(uint32_t i, uint32_t j) const {
    uint64_t key = (uint64_t(i) << 32) | j;
    auto it = mul_memo_.find(key);
    if (it != mul_memo_.end()) return it->second;
    SparseVec v = mul_(i, j);
    return mul_memo_.emplace(key, std::move(v)).first->second;
}

SparseVec LazyHopf::comul(uint32_t i) const {
    auto it = comul_memo_.find(i);
    if (it != comul_memo_.end()) return it->second;
    return comul_memo_.emplace(i, comul_(i)).first->second;
}

SparseVec LazyHopf::antipode(uint32_t i) const {
    auto it = antipode_memo_.find(i);
    if (it != antipode_memo_.end()) return it->second;
    return antipode_memo_.emplace(i, antipode_(i)).first->second;
}

// ---------------------------------------------------------------------------
// element helpers

SparseVec mul_elem(const HopfOracle& H, const SparseVec& a, const SparseVec& b) {
    SparseVec r(H.dim());
    for (const auto& [i, va] : a.e)
        for (const auto& [j, vb] : b.e) r.axpy(va * vb, H.mul(i, j));
    return r;
}

SparseVec mul_elem_basis(const HopfOracle& H, const SparseVec& a, uint32_t j) {
    SparseVec r(H.dim());
    for (const auto& [i, va] : a.e) r.axpy(va, H.mul(i, j));
    return r;
}

SparseVec mul_basis_elem(const HopfOracle& H, uint32_t i, const SparseVec& b) {
    SparseVec r(H.dim());
    for (const auto& [j, vb] : b.e) r.axpy(vb, H.mul(i, j));
    return r;
}

SparseVec comul_elem(const HopfOracle& H, const SparseVec& a) {
    SparseVec r(H.dim() * H.dim());
    for (const auto& [i, v] : a.e) r.axpy(v, H.comul(i));
    return r;
}

SparseVec mul2(const HopfOracle& H, const SparseVec& a2, const SparseVec& b2) {
    uint32_t n = H.dim();
    SparseVec r(n * n);
    for (const auto& [ij, va] : a2.e) {
        uint32_t i1 = ij / n, i2 = ij % n;
        for (const auto& [kl, vb] : b2.e) {
            uint32_t k1 = kl / n, k2 = kl % n;
            SparseVec left = H.mul(i1, k1);
            if (left.is_zero()) continue;
            SparseVec right = H.mul(i2, k2);
            if (right.is_zero()) continue;
            Scalar c = va * vb;
            for (const auto& [x, vx] : left.e)
                for (const auto& [y, vy] : right.e) r.add(x * n + y, c * vx * vy);
        }
    }
    return r;
}

Scalar counit_elem(const HopfOracle& H, const SparseVec& a) {
    Scalar s = H.field().zero();
    for (const auto& [i, v] : a.e) s = s + v * H.counit(i);
    return s;
}

SparseVec antipode_elem(const HopfOracle& H, const SparseVec& a) {
    SparseVec r(H.dim());
    for (const auto& [i, v] : a.e) r.axpy(v, H.antipode(i));
    return r;
}

std::vector<TensorTerm> comul_legs(const HopfOracle& H, uint32_t i, unsigned legs) {
    uint32_t n = H.dim();
    std::map<std::vector<uint32_t>, Scalar> acc;
    acc[{i}] = H.field().one();
    for (unsigned l = 2; l <= legs; ++l) {
        std::map<std::vector<uint32_t>, Scalar> nxt;
        for (const auto& [key, v] : acc) {
            uint32_t last = key.back();
            for (const auto& [pq, w] : H.comul(last).e) {
                std::vector<uint32_t> k2(key.begin(), key.end() - 1);
                k2.push_back(pq / n);
                k2.push_back(pq % n);
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
    out.reserve(acc.size());
    for (auto& [key, v] : acc) out.push_back({key, v});
    return out;
}

SparseVec power_elem(const HopfOracle& H, const SparseVec& a, unsigned k) {
    SparseVec r = H.unit();
    for (unsigned t = 0; t < k; ++t) r = mul_elem(H, r, a);
    return r;
}

// ---------------------------------------------------------------------------
// verification

namespace {

std::string tuple_witness(const HopfOracle& H, std::initializer_list<uint32_t> idx) {
    std::string s;
    for (uint32_t i : idx) {
        if (!s.empty()) s += ", ";
        s += H.label(i);
    }
    return s;
}

}  // namespace

Report verify_hopf(const HopfOracle& H, VerifyMode mode) {
    Report rep;
    const Field& F = H.field();
    uint32_t n = H.dim();
    bool exhaustive = mode.exhaustive && n <= kExhaustiveDimThreshold;
    std::mt19937_64 rng(mode.seed ? mode.seed : 1);
    auto rnd = [&]() { return uint32_t(rng() % n); };
    uint64_t samples = mode.exhaustive ? 10000 : mode.samples;
    if (mode.exhaustive && !exhaustive)
        rep.add("mode", true, "dim " + std::to_string(n) + " above exhaustive threshold; sampling " +
                                  std::to_string(samples) + " tuples");

    // unit laws
    {
        bool ok = true;
        std::string w;
        for (uint32_t i = 0; i < n && ok; ++i) {
            SparseVec ei = basis_vec(n, i, F.one());
            if (mul_elem(H, H.unit(), ei) != ei || mul_elem(H, ei, H.unit()) != ei) {
                ok = false;
                w = tuple_witness(H, {i});
            }
        }
        rep.add("unit law", ok, w);
    }

    // associativity
    {
        bool ok = true;
        std::string w;
        auto probe = [&](uint32_t i, uint32_t j, uint32_t k) {
            if (mul_elem_basis(H, H.mul(i, j), k) != mul_basis_elem(H, i, H.mul(j, k))) {
                ok = false;
                w = tuple_witness(H, {i, j, k});
            }
        };
        if (exhaustive) {
            for (uint32_t i = 0; i < n && ok; ++i)
                for (uint32_t j = 0; j < n && ok; ++j)
                    for (uint32_t k = 0; k < n && ok; ++k) probe(i, j, k);
        } else {
            for (uint64_t t = 0; t < samples && ok; ++t) probe(rnd(), rnd(), rnd());
        }
        rep.add("associativity", ok, w);
    }

    // counit laws
    {
        bool ok = true;
        std::string w;
        auto probe = [&](uint32_t i) {
            SparseVec l(n), r(n);
            for (const auto& [pq, v] : H.comul(i).e) {
                l.add(pq % n, v * H.counit(pq / n));
                r.add(pq / n, v * H.counit(pq % n));
            }
            SparseVec ei = basis_vec(n, i, F.one());
            if (l != ei || r != ei) {
                ok = false;
                w = tuple_witness(H, {i});
            }
        };
        if (exhaustive) {
            for (uint32_t i = 0; i < n && ok; ++i) probe(i);
        } else {
            for (uint64_t t = 0; t < samples && ok; ++t) probe(rnd());
        }
        rep.add("counit law", ok, w);
    }

    // coassociativity
    {
        bool ok = true;
        std::string w;
        auto probe = [&](uint32_t i) {
            std::map<uint64_t, Scalar> a, b;
            auto acc = [](std::map<uint64_t, Scalar>& m, uint64_t k, const Scalar& v) {
                auto [it, fresh] = m.try_emplace(k, v);
                if (!fresh) {
                    Scalar s = it->second + v;
                    if (s.is_zero())
                        m.erase(it);
                    else
                        it->second = s;
                }
            };
            for (const auto& [pq, v] : H.comul(i).e) {
                uint32_t p = pq / n, q = pq % n;
                for (const auto& [rs, u] : H.comul(p).e) acc(a, uint64_t(rs) * n + q, v * u);
                for (const auto& [rs, u] : H.comul(q).e) acc(b, uint64_t(p) * n * n + rs, v * u);
            }
            if (a != b) {
                ok = false;
                w = tuple_witness(H, {i});
            }
        };
        if (exhaustive) {
            for (uint32_t i = 0; i < n && ok; ++i) probe(i);
        } else {
            for (uint64_t t = 0; t < samples && ok; ++t) probe(rnd());
        }
        rep.add("coassociativity", ok, w);
    }

    // counit is an algebra map
    {
        bool ok = counit_elem(H, H.unit()) == F.one();
        std::string w = ok ? "" : "counit(1) != 1";
        auto probe = [&](uint32_t i, uint32_t j) {
            if (counit_elem(H, H.mul(i, j)) != H.counit(i) * H.counit(j)) {
                ok = false;
                w = tuple_witness(H, {i, j});
            }
        };
        if (exhaustive) {
            for (uint32_t i = 0; i < n && ok; ++i)
                for (uint32_t j = 0; j < n && ok; ++j) probe(i, j);
        } else {
            for (uint64_t t = 0; t < samples && ok; ++t) probe(rnd(), rnd());
        }
        rep.add("counit multiplicative", ok, w);
    }

    // coproduct is an algebra map
    {
        SparseVec u2(n * n);
        for (const auto& [i, v] : H.unit().e)
            for (const auto& [j, w2] : H.unit().e) u2.add(i * n + j, v * w2);
        bool ok = comul_elem(H, H.unit()) == u2;
        std::string w = ok ? "" : "Delta(1) != 1(x)1";
        auto probe = [&](uint32_t i, uint32_t j) {
            if (comul_elem(H, H.mul(i, j)) != mul2(H, H.comul(i), H.comul(j))) {
                ok = false;
                w = tuple_witness(H, {i, j});
            }
        };
        if (exhaustive) {
            for (uint32_t i = 0; i < n && ok; ++i)
                for (uint32_t j = 0; j < n && ok; ++j) probe(i, j);
        } else {
            for (uint64_t t = 0; t < samples && ok; ++t) probe(rnd(), rnd());
        }
        rep.add("coproduct multiplicative", ok, w);
    }

    // antipode convolution identities
    {
        bool ok = true;
        std::string w;
        auto probe = [&](uint32_t i) {
            SparseVec l(n), r(n);
            for (const auto& [pq, v] : H.comul(i).e) {
                uint32_t p = pq / n, q = pq % n;
                l.axpy(v, mul_elem_basis(H, H.antipode(p), q));
                r.axpy(v, mul_basis_elem(H, p, H.antipode(q)));
            }
            SparseVec expect = H.unit().scaled(H.counit(i));
            if (l != expect || r != expect) {
                ok = false;
                w = tuple_witness(H, {i});
            }
        };
        if (exhaustive) {
            for (uint32_t i = 0; i < n && ok; ++i) probe(i);
        } else {
            for (uint64_t t = 0; t < samples && ok; ++t) probe(rnd());
        }
        rep.add("antipode law", ok, w);
    }

    // antipode invertibility
    if (n <= kExhaustiveDimThreshold) {
        SparseMatrix S = antipode_matrix(H);
        rep.add("antipode invertible", rank(S) == n);
    } else {
        rep.add("antipode invertible", true, "rank check skipped at this dimension");
    }

    return rep;
}

// ---------------------------------------------------------------------------
// constructions

SparseMatrix antipode_matrix(const HopfOracle& H) {
    uint32_t n = H.dim();
    SparseMatrix S(n, n);
    for (uint32_t j = 0; j < n; ++j)
        for (const auto& [i, v] : H.antipode(j).e) S.set(i, j, v);
    return S;
}

std::optional<SparseMatrix> antipode_inverse_matrix(const HopfOracle& H) {
    return mat_inverse(antipode_matrix(H), H.field());
}

HopfData materialize(const HopfOracle& H) {
    HopfData D(H.field(), H.dim());
    uint32_t n = H.dim();
    D.labels.resize(n);
    for (uint32_t i = 0; i < n; ++i) D.labels[i] = H.label(i);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) D.mul_table[size_t(i) * n + j] = H.mul(i, j);
    for (uint32_t i = 0; i < n; ++i) D.comul_table[i] = H.comul(i);
    D.unit_vec = H.unit();
    for (uint32_t i = 0; i < n; ++i) D.counit_vec.set(i, H.counit(i));
    D.antipode_mat = antipode_matrix(H);
    return D;
}

HopfData dual_hopf(const HopfOracle& H) {
    uint32_t n = H.dim();
    HopfData D(H.field(), n);
    D.labels.resize(n);
    for (uint32_t i = 0; i < n; ++i) D.labels[i] = H.label(i) + "*";
    for (uint32_t k = 0; k < n; ++k)
        for (const auto& [pq, v] : H.comul(k).e) D.mul_table[size_t(pq / n) * n + (pq % n)].add(k, v);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            for (const auto& [k, v] : H.mul(i, j).e) D.comul_table[k].add(i * n + j, v);
    for (uint32_t i = 0; i < n; ++i) D.unit_vec.set(i, H.counit(i));
    D.counit_vec = H.unit();
    D.antipode_mat = antipode_matrix(H).transpose();
    return D;
}

HopfData op_cop(const HopfOracle& H, bool flip_mul, bool flip_comul) {
    uint32_t n = H.dim();
    HopfData D(H.field(), n);
    D.labels.resize(n);
    for (uint32_t i = 0; i < n; ++i) D.labels[i] = H.label(i);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) D.mul_table[size_t(i) * n + j] = flip_mul ? H.mul(j, i) : H.mul(i, j);
    for (uint32_t i = 0; i < n; ++i) {
        if (!flip_comul) {
            D.comul_table[i] = H.comul(i);
        } else {
            for (const auto& [pq, v] : H.comul(i).e) D.comul_table[i].add((pq % n) * n + (pq / n), v);
        }
    }
    D.unit_vec = H.unit();
    for (uint32_t i = 0; i < n; ++i) D.counit_vec.set(i, H.counit(i));
    if (flip_mul == flip_comul) {
        D.antipode_mat = antipode_matrix(H);
    } else {
        auto si = antipode_inverse_matrix(H);
        if (!si) throw field_error("op_cop: antipode not invertible");
        D.antipode_mat = *si;
    }
    return D;
}

HopfData tensor_hopf(const HopfOracle& H1, const HopfOracle& H2) {
    if (&H1.field() != &H2.field()) throw field_error("tensor_hopf: mixed fields");
    uint32_t n1 = H1.dim(), n2 = H2.dim(), n = n1 * n2;
    HopfData D(H1.field(), n);
    D.labels.resize(n);
    for (uint32_t i = 0; i < n1; ++i)
        for (uint32_t j = 0; j < n2; ++j)
            D.labels[i * n2 + j] = H2.label(j) == "1" ? H1.label(i)
                                   : H1.label(i) == "1" ? H2.label(j)
                                                        : H1.label(i) + " " + H2.label(j);
    for (uint32_t i1 = 0; i1 < n1; ++i1)
        for (uint32_t j1 = 0; j1 < n1; ++j1) {
            SparseVec p1 = H1.mul(i1, j1);
            if (p1.is_zero()) continue;
            for (uint32_t i2 = 0; i2 < n2; ++i2)
                for (uint32_t j2 = 0; j2 < n2; ++j2) {
                    SparseVec p2 = H2.mul(i2, j2);
                    if (p2.is_zero()) continue;
                    SparseVec& out = D.mul_table[size_t(i1 * n2 + i2) * n + (j1 * n2 + j2)];
                    for (const auto& [a, va] : p1.e)
                        for (const auto& [b, vb] : p2.e) out.add(a * n2 + b, va * vb);
                }
        }
    for (uint32_t i1 = 0; i1 < n1; ++i1)
        for (uint32_t i2 = 0; i2 < n2; ++i2) {
            SparseVec& out = D.comul_table[i1 * n2 + i2];
            for (const auto& [pq, v] : H1.comul(i1).e) {
                uint32_t p1 = pq / n1, q1 = pq % n1;
                for (const auto& [rs, w] : H2.comul(i2).e) {
                    uint32_t p2 = rs / n2, q2 = rs % n2;
                    out.add((p1 * n2 + p2) * n + (q1 * n2 + q2), v * w);
                }
            }
        }
    for (const auto& [i, v] : H1.unit().e)
        for (const auto& [j, w] : H2.unit().e) D.unit_vec.add(i * n2 + j, v * w);
    for (uint32_t i1 = 0; i1 < n1; ++i1)
        for (uint32_t i2 = 0; i2 < n2; ++i2) D.counit_vec.set(i1 * n2 + i2, H1.counit(i1) * H2.counit(i2));
    for (uint32_t j1 = 0; j1 < n1; ++j1)
        for (uint32_t j2 = 0; j2 < n2; ++j2) {
            SparseVec s1 = H1.antipode(j1), s2 = H2.antipode(j2);
            for (const auto& [a, va] : s1.e)
                for (const auto& [b, vb] : s2.e) D.antipode_mat.set(a * n2 + b, j1 * n2 + j2, va * vb);
        }
    return D;
}

HopfData group_algebra_zn(const Field& F, uint32_t n) {
    HopfData D(F, n);
    D.labels.resize(n);
    for (uint32_t i = 0; i < n; ++i) D.labels[i] = i == 0 ? "1" : "g^" + std::to_string(i);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) D.mul_table[size_t(i) * n + j].set((i + j) % n, F.one());
    for (uint32_t i = 0; i < n; ++i) D.comul_table[i].set(i * n + i, F.one());
    D.unit_vec.set(0, F.one());
    for (uint32_t i = 0; i < n; ++i) D.counit_vec.set(i, F.one());
    for (uint32_t i = 0; i < n; ++i) D.antipode_mat.set((n - i) % n, i, F.one());
    return D;
}

// ---------------------------------------------------------------------------
// convolution inverse of id

namespace {

std::vector<SparseVec> conv_with_id(const HopfOracle& H, const std::vector<SparseVec>& f) {
    uint32_t n = H.dim();
    std::vector<SparseVec> r(n, SparseVec(n));
    for (uint32_t j = 0; j < n; ++j)
        for (const auto& [pq, v] : H.comul(j).e) {
            const SparseVec& fa = f[pq / n];
            if (fa.is_zero()) continue;
            r[j].axpy(v, mul_elem_basis(H, fa, pq % n));
        }
    return r;
}

SparseVec flatten_cols(const std::vector<SparseVec>& cols, uint32_t n) {
    SparseVec flat(n * n);
    for (uint32_t j = 0; j < uint32_t(cols.size()); ++j)
        for (const auto& [i, v] : cols[j].e) flat.add(j * n + i, v);
    return flat;
}

bool check_conv_inverse(const HopfOracle& H, const SparseMatrix& S) {
    uint32_t n = H.dim();
    std::vector<SparseVec> cols(n, SparseVec(n));
    for (const auto& [ij, v] : S.e) cols[ij.second].set(ij.first, v);
    for (uint32_t j = 0; j < n; ++j) {
        SparseVec l(n), r(n);
        for (const auto& [pq, v] : H.comul(j).e) {
            uint32_t p = pq / n, q = pq % n;
            l.axpy(v, mul_elem_basis(H, cols[p], q));
            r.axpy(v, mul_basis_elem(H, p, cols[q]));
        }
        SparseVec expect = H.unit().scaled(H.counit(j));
        if (l != expect || r != expect) return false;
    }
    return true;
}

}  // namespace

std::optional<SparseMatrix> convolution_inverse_of_id(const HopfOracle& H, size_t krylov_budget) {
    const Field& F = H.field();
    uint32_t n = H.dim();

    std::vector<std::vector<SparseVec>> powers;
    {
        std::vector<SparseVec> v0(n, SparseVec(n));
        for (uint32_t j = 0; j < n; ++j) v0[j] = H.unit().scaled(H.counit(j));
        powers.push_back(std::move(v0));
        std::vector<SparseVec> v1(n, SparseVec(n));
        for (uint32_t j = 0; j < n; ++j) v1[j] = basis_vec(n, j, F.one());
        powers.push_back(std::move(v1));
    }

    struct Row {
        SparseVec vec;
        std::vector<Scalar> coords;
    };
    std::vector<Row> rows;
    auto reduce = [&](SparseVec vec, std::vector<Scalar> coords) -> Row {
        bool changed = true;
        while (changed && !vec.is_zero()) {
            changed = false;
            for (const auto& row : rows) {
                if (vec.is_zero()) break;
                uint32_t pivot = row.vec.e.begin()->first;
                Scalar c = vec.get(pivot);
                if (c.is_zero()) continue;
                Scalar f = -(c * inv(row.vec.e.begin()->second));
                vec.axpy(f, row.vec);
                if (coords.size() < row.coords.size()) coords.resize(row.coords.size(), F.zero());
                for (size_t t = 0; t < row.coords.size(); ++t) coords[t] = coords[t] + f * row.coords[t];
                changed = true;
            }
        }
        return {std::move(vec), std::move(coords)};
    };

    for (size_t k = 0; k <= krylov_budget; ++k) {
        if (k >= powers.size()) powers.push_back(conv_with_id(H, powers.back()));
        std::vector<Scalar> coords(k + 1, F.zero());
        coords[k] = F.one();
        Row row = reduce(flatten_cols(powers[k], n), std::move(coords));
        if (row.vec.is_zero()) {
            std::vector<Scalar> rel = row.coords;
            rel.resize(k + 1, F.zero());
            if (rel[0].is_zero()) break;  // fall through to linear solve
            Scalar scale = -inv(rel[0]);
            std::vector<SparseVec> invcols(n, SparseVec(n));
            for (size_t i = 1; i <= k; ++i) {
                if (rel[i].is_zero()) continue;
                Scalar c = scale * rel[i];
                for (uint32_t j = 0; j < n; ++j) invcols[j].axpy(c, powers[i - 1][j]);
            }
            SparseMatrix S(n, n);
            for (uint32_t j = 0; j < n; ++j)
                for (const auto& [i, v] : invcols[j].e) S.set(i, j, v);
            if (!check_conv_inverse(H, S)) break;
            return S;
        }
        rows.push_back(std::move(row));
        std::sort(rows.begin(), rows.end(),
                  [](const Row& a, const Row& b) { return a.vec.e.begin()->first < b.vec.e.begin()->first; });
    }

    // dense fallback, feasible only at small dimension
    if (uint64_t(n) * n > 40000) return std::nullopt;
    SparseMatrix A(n * n, n * n);
    SparseVec b(n * n);
    for (uint32_t j = 0; j < n; ++j) {
        for (const auto& [pq, v] : H.comul(j).e) {
            uint32_t p = pq / n, q = pq % n;
            for (uint32_t i = 0; i < n; ++i)
                for (const auto& [out, w] : H.mul(i, q).e) A.add(j * n + out, i * n + p, v * w);
        }
        for (const auto& [out, w] : H.unit().scaled(H.counit(j)).e) b.add(j * n + out, w);
    }
    auto x = solve(A, b);
    if (!x) return std::nullopt;
    SparseMatrix S(n, n);
    for (const auto& [flat, v] : x->e) S.set(flat / n, flat % n, v);
    if (!check_conv_inverse(H, S)) return std::nullopt;
    return S;
}

// ---------------------------------------------------------------------------
// pairings

Report verify_pairing(const PairingForm& P, VerifyMode mode) {
    Report rep;
    const HopfOracle& A = *P.left;
    const HopfOracle& H = *P.right;
    const Field& F = A.field();
    uint32_t na = A.dim(), nh = H.dim();
    const SparseMatrix& G = P.gram;
    bool exhaustive = mode.exhaustive && uint64_t(na) * na * nh <= 100000000ull;
    std::mt19937_64 rng(mode.seed ? mode.seed : 1);

    std::vector<SparseVec> gcol(nh, SparseVec(na)), grow(na, SparseVec(nh));
    for (const auto& [ij, v] : G.e) {
        gcol[ij.second].set(ij.first, v);
        grow[ij.first].set(ij.second, v);
    }
    auto pair_elem = [&](const SparseVec& a, const SparseVec& h) {
        Scalar s = F.zero();
        for (const auto& [i, va] : a.e)
            for (const auto& [j, vh] : h.e) {
                Scalar g = grow[i].get(j);
                if (!g.is_zero()) s = s + va * vh * g;
            }
        return s;
    };

    {
        bool ok = true;
        std::string w;
        auto probe = [&](uint32_t a, uint32_t b, uint32_t h) {
            Scalar lhs = F.zero();
            for (const auto& [e2, v] : A.mul(a, b).e) {
                Scalar g = gcol[h].get(e2);
                if (!g.is_zero()) lhs = lhs + v * g;
            }
            Scalar rhs = F.zero();
            for (const auto& [pq, v] : H.comul(h).e) {
                Scalar g1 = grow[a].get(pq / nh), g2 = grow[b].get(pq % nh);
                if (!g1.is_zero() && !g2.is_zero()) rhs = rhs + v * g1 * g2;
            }
            if (lhs != rhs) {
                ok = false;
                w = A.label(a) + "," + A.label(b) + " ; " + H.label(h);
            }
        };
        if (exhaustive) {
            for (uint32_t a = 0; a < na && ok; ++a)
                for (uint32_t b = 0; b < na && ok; ++b)
                    for (uint32_t h = 0; h < nh && ok; ++h) probe(a, b, h);
        } else {
            for (uint64_t t = 0; t < mode.samples && ok; ++t)
                probe(uint32_t(rng() % na), uint32_t(rng() % na), uint32_t(rng() % nh));
        }
        rep.add("pairing: product adjoint to coproduct", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        auto probe = [&](uint32_t a, uint32_t h, uint32_t g) {
            Scalar lhs = F.zero();
            for (const auto& [e2, v] : H.mul(h, g).e) {
                Scalar gv = grow[a].get(e2);
                if (!gv.is_zero()) lhs = lhs + v * gv;
            }
            Scalar rhs = F.zero();
            for (const auto& [pq, v] : A.comul(a).e) {
                Scalar g1 = grow[pq / na].get(h), g2 = grow[pq % na].get(g);
                if (!g1.is_zero() && !g2.is_zero()) rhs = rhs + v * g1 * g2;
            }
            if (lhs != rhs) {
                ok = false;
                w = A.label(a) + " ; " + H.label(h) + "," + H.label(g);
            }
        };
        if (exhaustive) {
            for (uint32_t a = 0; a < na && ok; ++a)
                for (uint32_t h = 0; h < nh && ok; ++h)
                    for (uint32_t g = 0; g < nh && ok; ++g) probe(a, h, g);
        } else {
            for (uint64_t t = 0; t < mode.samples && ok; ++t)
                probe(uint32_t(rng() % na), uint32_t(rng() % nh), uint32_t(rng() % nh));
        }
        rep.add("pairing: coproduct adjoint to product", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (uint32_t h = 0; h < nh && ok; ++h)
            if (pair_elem(A.unit(), basis_vec(nh, h, F.one())) != H.counit(h)) {
                ok = false;
                w = "<1, " + H.label(h) + ">";
            }
        for (uint32_t a = 0; a < na && ok; ++a)
            if (pair_elem(basis_vec(na, a, F.one()), H.unit()) != A.counit(a)) {
                ok = false;
                w = "<" + A.label(a) + ", 1>";
            }
        rep.add("pairing: unit/counit compatibility", ok, w);
    }

    {
        bool ok = true;
        std::string w;
        for (uint32_t a = 0; a < na && ok; ++a)
            for (uint32_t h = 0; h < nh && ok; ++h) {
                Scalar lhs = pair_elem(A.antipode(a), basis_vec(nh, h, F.one()));
                Scalar rhs = pair_elem(basis_vec(na, a, F.one()), H.antipode(h));
                if (lhs != rhs) {
                    ok = false;
                    w = A.label(a) + " ; " + H.label(h);
                }
            }
        rep.add("pairing: antipode self-adjoint", ok, w);
    }

    return rep;
}

DualBasis dual_basis(const PairingForm& P) {
    const Field& F = P.left->field();
    auto gi = mat_inverse(P.gram, F);
    if (!gi) {
        auto ns = nullspace(P.gram.transpose());
        std::string w = "degenerate pairing";
        if (!ns.empty() && !ns[0].e.empty()) w += ", radical witness index " + std::to_string(ns[0].e.begin()->first);
        throw field_error(w);
    }
    uint32_t nh = P.right->dim();
    DualBasis db;
    db.gram_inverse = *gi;
    db.coevaluation = SparseVec(P.left->dim() * nh);
    for (const auto& [ji, v] : gi->e) db.coevaluation.add(ji.second * nh + ji.first, v);
    return db;
}

bool is_commutative(const HopfOracle& H, std::string* witness) {
    uint32_t n = H.dim();
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j)
            if (H.mul(i, j) != H.mul(j, i)) {
                if (witness) *witness = H.label(i) + ", " + H.label(j);
                return false;
            }
    return true;
}

bool is_cocommutative(const HopfOracle& H, std::string* witness) {
    uint32_t n = H.dim();
    for (uint32_t i = 0; i < n; ++i) {
        SparseVec c = H.comul(i), f(n * n);
        for (const auto& [pq, v] : c.e) f.add((pq % n) * n + (pq / n), v);
        if (c != f) {
            if (witness) *witness = H.label(i);
            return false;
        }
    }
    return true;
}

}  // namespace qhopf
