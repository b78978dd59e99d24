#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/hopf.hpp"
#include "qhopf/report.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf {

// A word in the free monoid on the generators; empty word is the unit.
using Word = std::vector<uint32_t>;
// Noncommutative polynomial: words with nonzero scalar coefficients.
using NCPoly = std::map<Word, Scalar>;
// Element of H (x) H in the presented setting.
using NCPoly2 = std::map<std::pair<Word, Word>, Scalar>;

void nc_add(NCPoly& p, const Word& w, const Scalar& c);
void nc2_add(NCPoly2& p, const Word& a, const Word& b, const Scalar& c);
NCPoly nc_scaled(const NCPoly& p, const Scalar& c);

struct RewriteRule {
    Word lhs;     // pattern of length >= 1
    NCPoly rhs;
};

// Oriented rewriting to an ordered normal form.  The term order is
// (weighted degree, length, lex), which is stable under concatenation for
// positive weights, so checking each rule decreases the order certifies
// termination.
class RewriteSystem {
  public:
    RewriteSystem(const Field& F, std::vector<std::string> gen_names, std::vector<long> gen_weights = {});

    const Field& field() const { return *F_; }
    uint32_t num_gens() const { return uint32_t(names_.size()); }
    const std::string& gen_name(uint32_t g) const { return names_[g]; }
    uint32_t gen_index(const std::string& name) const;

    void add_rule(Word lhs, NCPoly rhs);
    const std::vector<RewriteRule>& rules() const { return rules_; }

    bool word_less(const Word& a, const Word& b) const;
    bool is_normal_word(const Word& w) const;

    NCPoly normal_form(const NCPoly& p) const;
    NCPoly normal_form(const Word& w) const;
    NCPoly mul(const NCPoly& a, const NCPoly& b) const;
    NCPoly2 mul2(const NCPoly2& a, const NCPoly2& b) const;

    // termination certificate: every rule's rhs terms are smaller than its lhs
    bool check_termination(std::string* offender = nullptr) const;
    // local confluence by resolving all critical pairs (overlaps + inclusions)
    Report check_confluence() const;

    // normal words from per-generator power caps; nullopt when some generator
    // has no terminating power rule or the count exceeds cap
    std::optional<std::vector<Word>> enumerate_basis(size_t cap) const;

    std::string word_str(const Word& w) const;
    std::string poly_str(const NCPoly& p) const;

    size_t step_budget = 1000000;

  private:
    const Field* F_;
    std::vector<std::string> names_;
    std::vector<long> weights_;
    std::vector<RewriteRule> rules_;
    std::vector<std::vector<uint32_t>> rules_by_first_;  // generator -> rule ids
    mutable std::map<Word, std::shared_ptr<const NCPoly>> nf_cache_;

    // returns rule id and position of leftmost-outermost match, or nullopt
    std::optional<std::pair<uint32_t, size_t>> find_redex(const Word& w) const;
};

// Generators-and-relations Hopf algebra: the rewrite system plus coproduct,
// counit and antipode data on generators.  Products and coproducts of words
// are evaluated lazily through the rewrite system.
class PresentedHopf {
  public:
    RewriteSystem rs;
    std::vector<NCPoly2> comul_gen;        // per generator
    std::vector<Scalar> counit_gen;
    std::vector<NCPoly> antipode_gen;      // extended anti-homomorphically
    std::vector<NCPoly> antipode_inv_gen;  // optional; empty = unknown

    explicit PresentedHopf(RewriteSystem r) : rs(std::move(r)) {
        comul_gen.resize(rs.num_gens());
        counit_gen.resize(rs.num_gens(), rs.field().zero());
        antipode_gen.resize(rs.num_gens());
    }

    const Field& field() const { return rs.field(); }

    NCPoly normal_form(const NCPoly& p) const { return rs.normal_form(p); }
    NCPoly mul(const NCPoly& a, const NCPoly& b) const { return rs.mul(a, b); }
    NCPoly2 comul(const Word& w) const;
    NCPoly2 comul(const NCPoly& p) const;
    Scalar counit(const Word& w) const;
    Scalar counit(const NCPoly& p) const;
    NCPoly antipode(const Word& w) const;         // uses antipode_gen
    NCPoly antipode(const NCPoly& p) const;
    NCPoly antipode_inv(const NCPoly& p) const;

    // true iff both sides have equal normal forms
    bool verify_relation(const NCPoly& lhs, const NCPoly& rhs) const;

    // Delta/counit/antipode applied to both sides of every rewrite rule agree
    Report verify_rule_compatibility() const;

    // full structure constants; throws when the basis exceeds dim_cap
    HopfData to_structure_constants(size_t dim_cap = 4000) const;

    // expression parser over this presentation's generator names
    NCPoly parse(const std::string& expr) const;

    std::string poly_str(const NCPoly& p) const { return rs.poly_str(p); }
};

// Adapter exposing a finite-basis presented Hopf algebra through the oracle
// interface without materializing the product table.
class PresentedOracle final : public HopfOracle {
  public:
    PresentedOracle(std::shared_ptr<const PresentedHopf> P, std::vector<Word> basis);

    const Field& field() const override { return P_->field(); }
    uint32_t dim() const override { return uint32_t(basis_.size()); }
    std::string label(uint32_t i) const override { return P_->rs.word_str(basis_[i]); }
    const SparseVec& unit() const override { return unit_; }
    SparseVec mul(uint32_t i, uint32_t j) const override;
    SparseVec comul(uint32_t i) const override;
    Scalar counit(uint32_t i) const override { return P_->counit(basis_[i]); }
    SparseVec antipode(uint32_t i) const override;

    SparseVec to_vec(const NCPoly& p) const;  // expand a normal-form poly in the basis
    const std::vector<Word>& basis() const { return basis_; }
    const PresentedHopf& presented() const { return *P_; }

  private:
    std::shared_ptr<const PresentedHopf> P_;
    std::vector<Word> basis_;
    std::map<Word, uint32_t> index_;
    SparseVec unit_;
    mutable std::unordered_map<uint64_t, SparseVec> mul_memo_;
    mutable std::unordered_map<uint32_t, SparseVec> comul_memo_, antipode_memo_;
};

// Coquasitriangular form on a presented host, given on generator pairs and
// extended to all words by the bicharacter laws; memoized per word pair.
class PresentedCqt {
  public:
    PresentedCqt(std::shared_ptr<const PresentedHopf> host, SparseMatrix gen_table);

    Scalar eval_words(const Word& x, const Word& y) const;
    Scalar eval(const NCPoly& x, const NCPoly& y) const;

    const PresentedHopf& host() const { return *P_; }

  private:
    std::shared_ptr<const PresentedHopf> P_;
    SparseMatrix table_;  // gen x gen
    mutable std::map<std::pair<Word, Word>, Scalar> memo_;
};

// rule-file io: one rule per line, "LHS -> c1*MON1 + c2*MON2"; '#' comments.
// The first non-comment line must be "gens name1 name2 ...".
RewriteSystem parse_rewrite_file(const Field& F, const std::string& text);
std::string serialize_rules(const RewriteSystem& rs);

}  // namespace qhopf
