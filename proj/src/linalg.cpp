#include "qhopf/linalg.hpp"

#include <algorithm>

namespace qhopf {

void SparseVec::set(uint32_t i, const Scalar& v) {
    if (i >= dim) throw field_error("SparseVec::set index out of range");
    if (v.is_zero())
        e.erase(i);
    else
        e[i] = v;
}

void SparseVec::add(uint32_t i, const Scalar& v) {
    if (v.is_zero()) return;
    if (i >= dim) throw field_error("SparseVec::add index out of range");
    auto it = e.find(i);
    if (it == e.end()) {
        e.emplace(i, v);
    } else {
        Scalar s = it->second + v;
        if (s.is_zero())
            e.erase(it);
        else
            it->second = s;
    }
}

Scalar SparseVec::get(uint32_t i) const {
    auto it = e.find(i);
    return it == e.end() ? Scalar() : it->second;
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
    for (const auto& [i, v] : o.e) add(i, v);
    return *this;
}

SparseVec& SparseVec::axpy(const Scalar& c, const SparseVec& o) {
    if (c.is_zero()) return *this;
    for (const auto& [i, v] : o.e) add(i, c * v);
    return *this;
}

SparseVec SparseVec::scaled(const Scalar& c) const {
    SparseVec r(dim);
    if (c.is_zero()) return r;
    for (const auto& [i, v] : e) r.e.emplace(i, c * v);
    return r;
}

SparseVec basis_vec(uint32_t dim, uint32_t i, const Scalar& c) {
    SparseVec v(dim);
    v.set(i, c);
    return v;
}

void SparseMatrix::set(uint32_t i, uint32_t j, const Scalar& v) {
    if (i >= rows || j >= cols) throw field_error("SparseMatrix::set index out of range");
    if (v.is_zero())
        e.erase({i, j});
    else
        e[{i, j}] = v;
}

void SparseMatrix::add(uint32_t i, uint32_t j, const Scalar& v) {
    if (v.is_zero()) return;
    if (i >= rows || j >= cols) throw field_error("SparseMatrix::add index out of range");
    auto key = std::make_pair(i, j);
    auto it = e.find(key);
    if (it == e.end()) {
        e.emplace(key, v);
    } else {
        Scalar s = it->second + v;
        if (s.is_zero())
            e.erase(it);
        else
            it->second = s;
    }
}

Scalar SparseMatrix::get(uint32_t i, uint32_t j) const {
    auto it = e.find({i, j});
    return it == e.end() ? Scalar() : it->second;
}

SparseMatrix SparseMatrix::identity(uint32_t n, const Field& F) {
    SparseMatrix m(n, n);
    for (uint32_t i = 0; i < n; ++i) m.e[{i, i}] = F.one();
    return m;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix m(cols, rows);
    for (const auto& [ij, v] : e) m.e[{ij.second, ij.first}] = v;
    return m;
}

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw field_error("mat_mul shape mismatch");
    // gather b rows for cache-friendly access
    std::vector<std::vector<std::pair<uint32_t, Scalar>>> browse(b.rows);
    for (const auto& [ij, v] : b.e) browse[ij.first].push_back({ij.second, v});
    SparseMatrix r(a.rows, b.cols);
    for (const auto& [ij, va] : a.e) {
        for (const auto& [j, vb] : browse[ij.second]) r.add(ij.first, j, va * vb);
    }
    return r;
}

SparseVec mat_apply(const SparseMatrix& a, const SparseVec& v) {
    if (a.cols != v.dim) throw field_error("mat_apply shape mismatch");
    SparseVec r(a.rows);
    for (const auto& [ij, m] : a.e) {
        auto it = v.e.find(ij.second);
        if (it != v.e.end()) r.add(ij.first, m * it->second);
    }
    return r;
}

SparseMatrix mat_add(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw field_error("mat_add shape mismatch");
    SparseMatrix r = a;
    for (const auto& [ij, v] : b.e) r.add(ij.first, ij.second, v);
    return r;
}

SparseMatrix mat_scaled(const SparseMatrix& a, const Scalar& c) {
    SparseMatrix r(a.rows, a.cols);
    if (c.is_zero()) return r;
    for (const auto& [ij, v] : a.e) r.e.emplace(ij, c * v);
    return r;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix r(a.rows * b.rows, a.cols * b.cols);
    for (const auto& [ij, va] : a.e)
        for (const auto& [kl, vb] : b.e)
            r.e[{ij.first * b.rows + kl.first, ij.second * b.cols + kl.second}] = va * vb;
    return r;
}

uint32_t tensor_index_encode(const MultiIndex& parts, const std::vector<uint32_t>& dims) {
    if (parts.size() != dims.size()) throw field_error("tensor index arity mismatch");
    uint64_t flat = 0;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] >= dims[k]) throw field_error("tensor index out of range");
        flat = flat * dims[k] + parts[k];
    }
    return static_cast<uint32_t>(flat);
}

MultiIndex tensor_index_decode(uint32_t flat, const std::vector<uint32_t>& dims) {
    MultiIndex parts(dims.size());
    uint64_t rest = flat;
    for (size_t k = dims.size(); k-- > 0;) {
        parts[k] = static_cast<uint32_t>(rest % dims[k]);
        rest /= dims[k];
    }
    if (rest != 0) throw field_error("tensor index out of range");
    return parts;
}

// ---------------------------------------------------------------------------
// Gaussian elimination on a dense-row working copy of the sparse input.

namespace {

struct Elim {
    uint32_t rows, cols;
    std::vector<std::map<uint32_t, Scalar>> r;     // row -> col -> value
    std::vector<int64_t> pivot_of_col;             // col -> row or -1
    std::vector<uint32_t> pivot_cols;

    Elim(const SparseMatrix& A) : rows(A.rows), cols(A.cols), r(A.rows), pivot_of_col(A.cols, -1) {
        for (const auto& [ij, v] : A.e) r[ij.first][ij.second] = v;
    }

    // reduced row echelon, first-nonzero pivoting in column order
    void run() {
        uint32_t row = 0;
        for (uint32_t c = 0; c < cols && row < rows; ++c) {
            uint32_t p = rows;
            for (uint32_t i = row; i < rows; ++i) {
                auto it = r[i].find(c);
                if (it != r[i].end() && !it->second.is_zero()) { p = i; break; }
            }
            if (p == rows) continue;
            std::swap(r[row], r[p]);
            Scalar piv = r[row][c];
            if (!piv.is_one()) {
                Scalar pi = inv(piv);
                for (auto& [j, v] : r[row]) v = v * pi;
            }
            for (uint32_t i = 0; i < rows; ++i) {
                if (i == row) continue;
                auto it = r[i].find(c);
                if (it == r[i].end() || it->second.is_zero()) continue;
                Scalar f = it->second;
                for (const auto& [j, v] : r[row]) {
                    Scalar upd = r[i].count(j) ? r[i][j] - f * v : -(f * v);
                    if (upd.is_zero())
                        r[i].erase(j);
                    else
                        r[i][j] = upd;
                }
            }
            pivot_of_col[c] = row;
            pivot_cols.push_back(c);
            ++row;
        }
    }
};

}  // namespace

std::optional<SparseVec> solve(const SparseMatrix& A, const SparseVec& b) {
    if (A.rows != b.dim) throw field_error("solve shape mismatch");
    SparseMatrix aug(A.rows, A.cols + 1);
    aug.e = A.e;
    for (const auto& [i, v] : b.e) aug.e[{i, A.cols}] = v;
    Elim el(aug);
    el.run();
    SparseVec x(A.cols);
    for (uint32_t k = 0; k < el.pivot_cols.size(); ++k) {
        uint32_t c = el.pivot_cols[k];
        if (c == A.cols) return std::nullopt;  // pivot in augmented column: inconsistent
        auto it = el.r[k].find(A.cols);
        if (it != el.r[k].end()) x.set(c, it->second);
    }
    return x;
}

std::vector<SparseVec> nullspace(const SparseMatrix& A) {
    Elim el(A);
    el.run();
    std::vector<SparseVec> basis;
    const Field* F = nullptr;
    for (const auto& [ij, v] : A.e) { F = &v.field(); break; }
    for (uint32_t c = 0; c < A.cols; ++c) {
        if (el.pivot_of_col[c] >= 0) continue;
        SparseVec v(A.cols);
        if (F)
            v.set(c, F->one());
        else
            v.e.clear();
        for (uint32_t k = 0; k < el.pivot_cols.size(); ++k) {
            auto it = el.r[k].find(c);
            if (it != el.r[k].end()) v.set(el.pivot_cols[k], -it->second);
        }
        if (!F) v.dim = A.cols;
        basis.push_back(std::move(v));
    }
    return basis;
}

uint32_t rank(const SparseMatrix& A) {
    Elim el(A);
    el.run();
    return static_cast<uint32_t>(el.pivot_cols.size());
}

std::optional<SparseMatrix> mat_inverse(const SparseMatrix& A, const Field& F) {
    if (A.rows != A.cols) throw field_error("mat_inverse: not square");
    SparseMatrix aug(A.rows, 2 * A.cols);
    for (const auto& [ij, v] : A.e) aug.e[ij] = v;
    for (uint32_t i = 0; i < A.rows; ++i) aug.e[{i, A.cols + i}] = F.one();
    Elim el(aug);
    el.run();
    for (uint32_t i = 0; i < A.rows; ++i)
        if (el.pivot_of_col[i] != int64_t(i)) return std::nullopt;
    SparseMatrix inv(A.rows, A.cols);
    for (uint32_t i = 0; i < A.rows; ++i)
        for (const auto& [j, v] : el.r[i])
            if (j >= A.cols) inv.set(i, j - A.cols, v);
    return inv;
}

std::vector<Scalar> char_poly(const SparseMatrix& A, const Field& F) {
    if (A.rows != A.cols) throw field_error("char_poly: not square");
    uint32_t n = A.rows;
    std::vector<Scalar> c(n + 1, F.zero());
    c[n] = F.one();
    SparseMatrix Mk(n, n);  // M_1 = I
    for (uint32_t i = 0; i < n; ++i) Mk.e[{i, i}] = F.one();
    for (uint32_t k = 1; k <= n; ++k) {
        SparseMatrix AM = mat_mul(A, Mk);
        Scalar tr = F.zero();
        for (uint32_t i = 0; i < n; ++i) tr = tr + AM.get(i, i);
        Scalar ck = -(tr * inv(F.from_int(k)));
        c[n - k] = ck;
        if (k < n) {
            for (uint32_t i = 0; i < n; ++i) AM.add(i, i, ck);
            Mk = std::move(AM);
        }
    }
    return c;
}

}  // namespace qhopf
