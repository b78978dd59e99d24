#pragma once

#include "qhopf/rmatrix.hpp"

namespace qhopf {

enum class Side { LeftModule, RightModule, LeftComodule, RightComodule };

// A braided Hopf algebra in the (co)module category of a (co)quasitriangular
// host.  The self-braiding Psi_{B,B} is stored explicitly so the braided
// structure maps are usable even when the host is kept presented (the
// fermionic plane); when the host data is attached, verification also checks
// Psi against the braiding induced by the (co)action.
struct BraidedHopfObj {
    const Field* F = nullptr;
    uint32_t dim = 0;
    std::vector<std::string> labels;
    Side side = Side::LeftComodule;

    std::optional<QTElement> host_qt;   // module sides
    std::optional<CQTForm> host_cqt;    // comodule sides
    std::optional<ModuleAction> action;
    std::optional<Comodule> coaction;

    std::vector<SparseVec> mul_table;    // (i*dim+j) -> product
    SparseVec unit;
    std::vector<SparseVec> comul_table;  // braided coproduct, i -> dim^2
    SparseVec counit;                    // functional values
    SparseMatrix antipode;               // braided antipode
    SparseMatrix antipode_inv;
    SparseMatrix braiding;               // Psi_{B,B} on dim^2
    SparseMatrix braiding_inv;

    BraidedHopfObj() = default;
    BraidedHopfObj(const Field& f, uint32_t d);

    std::string label(uint32_t i) const { return labels.empty() ? "b" + std::to_string(i) : labels[i]; }
    SparseVec mul(uint32_t i, uint32_t j) const { return mul_table[size_t(i) * dim + j]; }
    SparseVec mul_elem(const SparseVec& a, const SparseVec& b) const;
    SparseVec comul_elem(const SparseVec& a) const;
    Scalar counit_elem(const SparseVec& a) const;
    SparseVec antipode_elem(const SparseVec& a) const { return mat_apply(antipode, a); }
    // product in B (x) B twisted by the middle braiding
    SparseVec braided_mul2(const SparseVec& a2, const SparseVec& b2) const;
    // iterated braided coproducts, explicit legs
    std::vector<TensorTerm> comul_legs(uint32_t i, unsigned legs) const;
};

Report verify_braided_hopf(const BraidedHopfObj& B);

BraidedHopfObj braided_opposite(const BraidedHopfObj& B);
BraidedHopfObj braided_coopposite(const BraidedHopfObj& B);
// dual with structure transposed and the (co)action moved to the other side
BraidedHopfObj braided_dual(const BraidedHopfObj& B);

struct BraidedPairing {
    const BraidedHopfObj* B = nullptr;      // e.g. in ^A M
    const BraidedHopfObj* Bstar = nullptr;  // on the other side
    SparseMatrix gram;                      // gram[i][j] = <B_i, Bstar_j>
};

Report verify_braided_pairing(const BraidedPairing& P, VerifyMode mode = VerifyMode::Exhaustive());

// action induced by a coaction through a dual pairing of the hosts
ModuleAction comodule_to_module(const Comodule& V, const PairingForm& hosts);

// the n-dimensional braided line C[X]/(X^n) over C_q[Z_n]-comodules (left
// side: coaction X -> t (x) X) or C_q[Z_n]-modules
BraidedHopfObj braided_line_comodule(const CQTForm& A, bool left, const std::string& gen_name);
BraidedHopfObj braided_line_module(const QTElement& H, bool left, const std::string& gen_name);

}  // namespace qhopf
