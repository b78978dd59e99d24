#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qhopf {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct field_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense univariate polynomial helpers (coefficient index = power).
using ZPoly = std::vector<BigInt>;
using QPoly = std::vector<Rat>;

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_gcd(ZPoly a, ZPoly b);   // primitive, positive leading coefficient
void zpoly_trim(ZPoly& a);
ZPoly zpoly_one();

// n-th cyclotomic polynomial, computed by exact division of x^n-1 by the
// Phi_d for proper divisors d.
ZPoly cyclotomic_polynomial(unsigned n);

// Extended Euclid; throws if gcd(a,n) != 1.
long mod_inverse(long a, long n);

// Smallest beta in [0,n) with beta^2 = 3 mod n, if one exists.
std::optional<long> solve_beta(long n);

class Field;

// Exact scalar in Q(zeta_n) or Q(q).  Values are interned per field, so
// copies are cheap and equality is an id comparison.
class Scalar {
  public:
    Scalar() : fld_(nullptr), id_(0) {}
    Scalar(const Field* f, uint32_t id) : fld_(f), id_(id) {}

    const Field& field() const {
        if (!fld_) throw field_error("scalar has no field");
        return *fld_;
    }
    const Field* field_ptr() const { return fld_; }
    uint32_t id() const { return id_; }
    bool is_zero() const { return fld_ == nullptr || id_ == 0; }
    bool is_one() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  private:
    const Field* fld_;
    uint32_t id_;
};

// A coefficient field: either Q(zeta_n) in the power basis mod Phi_n, or the
// rational function field Q(q).  Instances are created once via the static
// constructors and referenced by pointer; scalars from different instances
// never mix.
class Field {
  public:
    enum class Kind { Cyclotomic, RationalFunction };

    static const Field& cyclotomic(unsigned n);
    static const Field& rational_function();

    Kind kind() const { return kind_; }
    bool is_cyclotomic() const { return kind_ == Kind::Cyclotomic; }
    unsigned n() const { return n_; }                 // root order (cyclotomic only)
    unsigned degree() const { return degree_; }       // phi(n), or 1 for Q(q) marker
    const ZPoly& min_poly() const { return min_poly_; }

    Scalar zero() const { return Scalar(this, 0); }
    Scalar one() const { return Scalar(this, 1); }
    Scalar q() const { return q_; }                   // root of unity / indeterminate
    Scalar from_int(long v) const;
    Scalar from_rat(const Rat& v) const;
    // Cyclotomic element from power-basis coefficients (length <= 2*degree-1
    // allowed, reduced here); RatFun from numerator/denominator coefficients.
    Scalar from_coeffs(const QPoly& c) const;
    Scalar from_ratfun(const QPoly& num, const QPoly& den) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar pow(const Scalar& a, long k) const;
    Scalar q_pow(long k) const;                       // cached q^k

    std::string to_string(const Scalar& a) const;
    Scalar parse(const std::string& s) const;

    // q-combinatorics
    Scalar q_int(long a) const;                       // [a]_q = (1-q^a)/(1-q)
    Scalar q_factorial(long a) const;
    Scalar q_binomial(long a, long r) const;          // Gaussian binomial, polynomial route
    Scalar q_int_at(long a, long qexp) const;         // [a]_{q^qexp}

    // Cyclotomic access (power basis), also defined for Q(q) (num/den).
    const QPoly& cyc_coeffs(const Scalar& a) const;
    std::pair<ZPoly, ZPoly> ratfun_parts(const Scalar& a) const;

  private:
    explicit Field(unsigned n);   // cyclotomic
    Field();                      // rational function

    struct Payload;
    uint32_t intern(Payload&& p) const;
    const Payload& payload(uint32_t id) const;
    uint32_t add_ids(uint32_t a, uint32_t b) const;
    uint32_t mul_ids(uint32_t a, uint32_t b) const;
    void check(const Scalar& a) const;

    Kind kind_;
    unsigned n_ = 0;
    unsigned degree_ = 1;
    ZPoly min_poly_;
    std::vector<QPoly> xpow_red_;     // x^k mod Phi_n for k in [degree, 2*degree-2]
    Scalar q_;
    mutable std::vector<Scalar> qpow_cache_;

    struct Impl;
    std::unique_ptr<Impl> impl_;
};

inline bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.fld_ == b.fld_ && a.id_ == b.id_;
}

// Unattached default scalars act as a universal zero.
inline Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return a.field().add(a, b);
}
inline Scalar operator-(const Scalar& a) { return a.is_zero() ? a : a.field().neg(a); }
inline Scalar operator-(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return a.field().sub(a, b);
}
inline Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    return a.field().mul(a, b);
}
inline Scalar inv(const Scalar& a) { return a.field().inv(a); }

// q-identity checks from the construction of the reduced coordinate algebras:
//   sum_r (-1)^r q^{r(r+1)/2} / ([r]! [a-r]!)       = (1-q)^a
//   sum_r q^r (-1)^r q^{r(r+1)/2} / ([r]! [a-r]!)   = (1-q)^a [a+1]_q
//   sum_{r1} (-1)^{r-r1} q^{r1(r1+1)/2 + s r1} / ([r1]![r-r1]!) = (q-1)^r C[r+s,r]_q
bool check_q_identity_1(const Field& F, long a);
bool check_q_identity_2(const Field& F, long r, long s);

}  // namespace qhopf

template <>
struct std::hash<qhopf::Scalar> {
    size_t operator()(const qhopf::Scalar& s) const noexcept {
        return std::hash<const void*>()(static_cast<const void*>(s.field_ptr())) * 1000003u ^ s.id();
    }
};
