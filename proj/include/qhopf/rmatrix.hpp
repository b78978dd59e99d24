#pragma once

#include "qhopf/hopf.hpp"
#include "qhopf/presented.hpp"

namespace qhopf {

// Quasitriangular element R in H (x) H, stored flat over dim^2.
struct QTElement {
    const HopfOracle* host = nullptr;
    SparseVec R;
    SparseVec Rinv;
};

// Coquasitriangular form on a structure-constant host, as a Gram matrix
// together with its convolution inverse.
struct CQTForm {
    const HopfOracle* host = nullptr;
    SparseMatrix gram;
    SparseMatrix gram_inv;
};

// Convolution inverse of a bilinear form on A (x) A.  Tries the closed-form
// candidate R(S a, b) first and certifies it; falls back to an exact linear
// solve at small dimension.
std::optional<SparseMatrix> cqt_convolution_inverse(const HopfOracle& A, const SparseMatrix& gram);

CQTForm make_cqt(const HopfOracle& A, SparseMatrix gram);
QTElement make_qt(const HopfOracle& H, SparseVec R);  // computes the 2-tensor inverse

Report verify_qt(const QTElement& Q, VerifyMode mode = VerifyMode::Exhaustive());
Report verify_cqt(const CQTForm& C, VerifyMode mode = VerifyMode::Exhaustive());

QTElement bar_qt(const QTElement& Q);
CQTForm bar_cqt(const CQTForm& C);

SparseVec monodromy(const QTElement& Q);  // R21 * R
bool is_triangular(const QTElement& Q, std::string* witness = nullptr);
uint32_t factorisable_rank(const QTElement& Q);
bool in_monodromy_image(const QTElement& Q, const SparseVec& v);

// inverse of an invertible element of H (x) H (used for R^{-1})
std::optional<SparseVec> invert_2tensor(const HopfOracle& H, const SparseVec& R);

// (co)module carriers for braidings.  Coaction terms are stored per carrier
// basis vector as (host index, carrier index, coefficient): for a left
// comodule v_j -> sum a_h (x) v_i, for a right comodule v_j -> sum v_i (x) a_h.
struct CoactionTerm {
    uint32_t host_idx;
    uint32_t carrier_idx;
    Scalar coeff;
};
struct Comodule {
    const HopfOracle* host = nullptr;
    uint32_t dim = 0;
    bool left = true;
    std::vector<std::vector<CoactionTerm>> coaction;  // indexed by source carrier vector
};

// carrier V (x) W with the componentwise coaction
Comodule tensor_comodule(const Comodule& V, const Comodule& W);
Report verify_comodule(const Comodule& V);

// the braiding Psi_{V,W} as a (dimV*dimW) x (dimV*dimW) matrix, plus inverse
std::pair<SparseMatrix, SparseMatrix> braiding_from_cqt(const CQTForm& C, const Comodule& V, const Comodule& W);

// module-side braidings from a QT element
struct ModuleAction {
    const HopfOracle* host = nullptr;
    uint32_t dim = 0;
    bool left = true;
    // action[h] : dim x dim matrix of h acting on the carrier
    std::vector<SparseMatrix> action;
};
Report verify_module(const ModuleAction& M);
std::pair<SparseMatrix, SparseMatrix> braiding_from_qt(const QTElement& Q, const ModuleAction& V,
                                                       const ModuleAction& W);

}  // namespace qhopf
