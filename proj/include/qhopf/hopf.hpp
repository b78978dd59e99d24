#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/linalg.hpp"
#include "qhopf/report.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf {

// Verification mode: exhaustive iterates all basis tuples; sampled draws
// tuples from a seeded generator.  Exhaustive is the default up to the
// dimension threshold, above which verify() falls back to sampling.
struct VerifyMode {
    bool exhaustive = true;
    uint64_t samples = 10000;
    uint64_t seed = 1;
    static VerifyMode Exhaustive() { return {true, 0, 0}; }
    static VerifyMode Sampled(uint64_t count, uint64_t seed) { return {false, count, seed}; }
};

constexpr uint32_t kExhaustiveDimThreshold = 1000;

// A finite-dimensional Hopf algebra presented through structure data on a
// fixed basis.  Implementations may store tensors (HopfData) or compute
// entries on demand (LazyHopf), so verification code works at dimensions
// where the full product table would not fit.
class HopfOracle {
  public:
    virtual ~HopfOracle() = default;
    virtual const Field& field() const = 0;
    virtual uint32_t dim() const = 0;
    virtual std::string label(uint32_t i) const = 0;
    virtual const SparseVec& unit() const = 0;
    virtual SparseVec mul(uint32_t i, uint32_t j) const = 0;
    virtual SparseVec comul(uint32_t i) const = 0;  // lives in dim*dim
    virtual Scalar counit(uint32_t i) const = 0;
    virtual SparseVec antipode(uint32_t i) const = 0;
};

struct HopfData final : public HopfOracle {
    const Field* F = nullptr;
    uint32_t n = 0;
    std::vector<std::string> labels;
    std::vector<SparseVec> mul_table;    // (i*n+j) -> product vector
    std::vector<SparseVec> comul_table;  // i -> vector over n*n
    SparseVec unit_vec;
    SparseVec counit_vec;                // functional values on the basis
    SparseMatrix antipode_mat;           // column j = S(e_j)

    HopfData() = default;
    HopfData(const Field& f, uint32_t dim);

    const Field& field() const override { return *F; }
    uint32_t dim() const override { return n; }
    std::string label(uint32_t i) const override {
        return labels.empty() ? "e" + std::to_string(i) : labels[i];
    }
    const SparseVec& unit() const override { return unit_vec; }
    SparseVec mul(uint32_t i, uint32_t j) const override { return mul_table[size_t(i) * n + j]; }
    SparseVec comul(uint32_t i) const override { return comul_table[i]; }
    Scalar counit(uint32_t i) const override { return counit_vec.get(i); }
    SparseVec antipode(uint32_t i) const override;
};

// Structure maps supplied as callbacks, with memoized results; used when the
// dimension is too large to materialize the product table.
class LazyHopf final : public HopfOracle {
  public:
    LazyHopf(const Field& f, uint32_t dim, std::vector<std::string> labels, SparseVec unit,
             std::function<SparseVec(uint32_t, uint32_t)> mul, std::function<SparseVec(uint32_t)> comul,
             std::function<Scalar(uint32_t)> counit, std::function<SparseVec(uint32_t)> antipode);

    const Field& field() const override { return *F_; }
    uint32_t dim() const override { return n_; }
    std::string label(uint32_t i) const override { return labels_.empty() ? "e" + std::to_string(i) : labels_[i]; }
    const SparseVec& unit() const override { return unit_; }
    SparseVec mul(uint32_t i, uint32_t j) const override;
    SparseVec comul(uint32_t i) const override;
    Scalar counit(uint32_t i) const override { return counit_(i); }
    SparseVec antipode(uint32_t i) const override;

  private:
    const Field* F_;
    uint32_t n_;
    std::vector<std::string> labels_;
    SparseVec unit_;
    std::function<SparseVec(uint32_t, uint32_t)> mul_;
    std::function<SparseVec(uint32_t)> comul_;
    std::function<Scalar(uint32_t)> counit_;
    std::function<SparseVec(uint32_t)> antipode_;
    mutable std::unordered_map<uint64_t, SparseVec> mul_memo_;
    mutable std::unordered_map<uint32_t, SparseVec> comul_memo_, antipode_memo_;
};

// --- element-level helpers (linear extensions of the structure maps) -------
SparseVec mul_elem(const HopfOracle& H, const SparseVec& a, const SparseVec& b);
SparseVec mul_elem_basis(const HopfOracle& H, const SparseVec& a, uint32_t j);   // a * e_j
SparseVec mul_basis_elem(const HopfOracle& H, uint32_t i, const SparseVec& b);   // e_i * b
SparseVec comul_elem(const HopfOracle& H, const SparseVec& a);                    // in dim^2
SparseVec mul2(const HopfOracle& H, const SparseVec& a2, const SparseVec& b2);    // product in H (x) H
Scalar counit_elem(const HopfOracle& H, const SparseVec& a);
SparseVec antipode_elem(const HopfOracle& H, const SparseVec& a);
// iterated coproduct with `legs` tensor factors (legs >= 1), as explicit leg tuples
using TensorTerm = std::pair<std::vector<uint32_t>, Scalar>;
std::vector<TensorTerm> comul_legs(const HopfOracle& H, uint32_t i, unsigned legs);
SparseVec power_elem(const HopfOracle& H, const SparseVec& a, unsigned k);

// --- verification -----------------------------------------------------------
Report verify_hopf(const HopfOracle& H, VerifyMode mode = VerifyMode::Exhaustive());

// --- constructions ----------------------------------------------------------
HopfData dual_hopf(const HopfOracle& H);
HopfData op_cop(const HopfOracle& H, bool flip_mul, bool flip_comul);
HopfData tensor_hopf(const HopfOracle& H1, const HopfOracle& H2);
HopfData materialize(const HopfOracle& H);  // snapshot any oracle into tensors

// group algebra of Z_n over the given field (Delta g = g (x) g)
HopfData group_algebra_zn(const Field& F, uint32_t n);

// The antipode as a matrix, and its inverse.
SparseMatrix antipode_matrix(const HopfOracle& H);
std::optional<SparseMatrix> antipode_inverse_matrix(const HopfOracle& H);

// Convolution inverse of the identity map.  Computed independently of any
// antipode data: a minimal linear recurrence over the convolution powers of
// id, with a graded / dense linear solve as fallback.  The result is
// certified against both convolution identities before being returned.
std::optional<SparseMatrix> convolution_inverse_of_id(const HopfOracle& H, size_t krylov_budget = 300);

// --- dual pairings ----------------------------------------------------------
struct PairingForm {
    const HopfOracle* left = nullptr;   // A
    const HopfOracle* right = nullptr;  // H
    SparseMatrix gram;                  // gram[i][j] = <a_i, h_j>
};

Report verify_pairing(const PairingForm& P, VerifyMode mode = VerifyMode::Exhaustive());

struct DualBasis {
    SparseVec coevaluation;  // in A (x) H, flat dimA*dimH
    SparseMatrix gram_inverse;
};
DualBasis dual_basis(const PairingForm& P);  // throws on degenerate pairing

// Is the algebra (co)commutative?  Returns witness index pair when not.
bool is_commutative(const HopfOracle& H, std::string* witness = nullptr);
bool is_cocommutative(const HopfOracle& H, std::string* witness = nullptr);

}  // namespace qhopf
