#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

// Sparse vector over a Scalar field; never stores zeros.
struct SparseVec {
    uint32_t dim = 0;
    std::map<uint32_t, Scalar> e;

    SparseVec() = default;
    explicit SparseVec(uint32_t d) : dim(d) {}

    void set(uint32_t i, const Scalar& v);
    void add(uint32_t i, const Scalar& v);
    Scalar get(uint32_t i) const;
    bool is_zero() const { return e.empty(); }
    size_t nnz() const { return e.size(); }

    SparseVec& operator+=(const SparseVec& o);
    SparseVec& axpy(const Scalar& c, const SparseVec& o);   // this += c * o
    SparseVec scaled(const Scalar& c) const;
    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.dim == b.dim && a.e == b.e; }
};

SparseVec basis_vec(uint32_t dim, uint32_t i, const Scalar& c);

struct SparseMatrix {
    uint32_t rows = 0, cols = 0;
    std::map<std::pair<uint32_t, uint32_t>, Scalar> e;

    SparseMatrix() = default;
    SparseMatrix(uint32_t r, uint32_t c) : rows(r), cols(c) {}

    void set(uint32_t i, uint32_t j, const Scalar& v);
    void add(uint32_t i, uint32_t j, const Scalar& v);
    Scalar get(uint32_t i, uint32_t j) const;
    bool is_zero() const { return e.empty(); }

    static SparseMatrix identity(uint32_t n, const Field& F);
    SparseMatrix transpose() const;
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b);
SparseVec mat_apply(const SparseMatrix& a, const SparseVec& v);
SparseMatrix mat_add(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix mat_scaled(const SparseMatrix& a, const Scalar& c);
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

// Mixed-radix encoding of multi-indices into a flat tensor-power basis.
using MultiIndex = std::vector<uint32_t>;
uint32_t tensor_index_encode(const MultiIndex& parts, const std::vector<uint32_t>& dims);
MultiIndex tensor_index_decode(uint32_t flat, const std::vector<uint32_t>& dims);

// Exact Gaussian elimination.  Pivots are the first nonzero entry in column
// order, so results are deterministic.
std::optional<SparseVec> solve(const SparseMatrix& A, const SparseVec& b);
std::vector<SparseVec> nullspace(const SparseMatrix& A);
uint32_t rank(const SparseMatrix& A);

// Inverse of a square matrix; nullopt when singular.
std::optional<SparseMatrix> mat_inverse(const SparseMatrix& A, const Field& F);

// Characteristic polynomial by the Faddeev-LeVerrier recursion (needs
// characteristic zero, which all our fields have).  Returned coefficients are
// ordered from x^0 up to x^n, monic.
std::vector<Scalar> char_poly(const SparseMatrix& A, const Field& F);

}  // namespace qhopf
