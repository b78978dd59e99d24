#include "qhopf/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include <boost/functional/hash.hpp>

namespace qhopf {

// ---------------------------------------------------------------------------
// integer polynomial helpers

void zpoly_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zpoly_one() { return ZPoly{BigInt(1)}; }

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zpoly_trim(r);
    return r;
}

static BigInt zpoly_content(const ZPoly& a) {
    BigInt g = 0;
    for (const auto& c : a) g = boost::multiprecision::gcd(g, c);
    return g;
}

static ZPoly zpoly_primitive(ZPoly a) {
    zpoly_trim(a);
    if (a.empty()) return a;
    BigInt g = zpoly_content(a);
    if (a.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : a) c /= g;
    return a;
}

static QPoly qpoly_of(const ZPoly& a) {
    QPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

static void qpoly_trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a by monic-normalized b over Q
static QPoly qpoly_rem(QPoly a, const QPoly& b) {
    qpoly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        qpoly_trim(a);
    }
    return a;
}

static QPoly qpoly_divexact(QPoly a, const QPoly& b) {
    qpoly_trim(a);
    if (a.empty()) return {};
    QPoly q(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        qpoly_trim(a);
    }
    if (!a.empty()) throw field_error("polynomial division is not exact");
    return q;
}

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    zpoly_trim(a);
    zpoly_trim(b);
    if (a.empty()) return zpoly_primitive(std::move(b));
    if (b.empty()) return zpoly_primitive(std::move(a));
    QPoly x = qpoly_of(a), y = qpoly_of(b);
    while (!y.empty()) {
        QPoly r = qpoly_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    // rescale x to primitive integer
    BigInt den = 1;
    for (const auto& c : x) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    ZPoly z(x.size());
    for (size_t i = 0; i < x.size(); ++i)
        z[i] = boost::multiprecision::numerator(x[i]) * (den / boost::multiprecision::denominator(x[i]));
    return zpoly_primitive(std::move(z));
}

ZPoly cyclotomic_polynomial(unsigned n) {
    // x^n - 1 divided by all Phi_d, d | n, d < n
    QPoly num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        QPoly phi = qpoly_of(cyclotomic_polynomial(d));
        num = qpoly_divexact(std::move(num), phi);
    }
    ZPoly out(num.size());
    for (size_t i = 0; i < num.size(); ++i) {
        if (boost::multiprecision::denominator(num[i]) != 1)
            throw field_error("cyclotomic polynomial has non-integer coefficient");
        out[i] = boost::multiprecision::numerator(num[i]);
    }
    return out;
}

long mod_inverse(long a, long n) {
    long r0 = n, r1 = ((a % n) + n) % n;
    long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw field_error("mod_inverse: arguments are not coprime");
    return ((t0 % n) + n) % n;
}

std::optional<long> solve_beta(long n) {
    for (long b = 0; b < n; ++b)
        if ((b * b) % n == 3 % n) return b;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Field payloads and interning

struct Field::Payload {
    // Cyclotomic: coeffs used (length degree, trailing zeros trimmed).
    // RatFun: num/den as primitive integer polynomials, den lc > 0.
    QPoly coeffs;
    ZPoly num, den;
    size_t hash = 0;

    bool equal(const Payload& o) const { return coeffs == o.coeffs && num == o.num && den == o.den; }
};

struct Field::Impl {
    std::vector<std::unique_ptr<Payload>> pool;
    std::unordered_map<size_t, std::vector<uint32_t>> index;
    std::unordered_map<uint64_t, uint32_t> mul_memo;
    std::unordered_map<uint64_t, uint32_t> add_memo;
    static constexpr size_t memo_cap = 1u << 23;
};

static size_t payload_hash_impl(const QPoly& coeffs, const ZPoly& num, const ZPoly& den) {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& c : coeffs) {
        boost::hash_combine(h, hash_value(boost::multiprecision::numerator(c)));
        boost::hash_combine(h, hash_value(boost::multiprecision::denominator(c)));
    }
    for (const auto& c : num) boost::hash_combine(h, hash_value(c));
    boost::hash_combine(h, den.size());
    for (const auto& c : den) boost::hash_combine(h, hash_value(c));
    return h;
}

uint32_t Field::intern(Payload&& p) const {
    p.hash = payload_hash_impl(p.coeffs, p.num, p.den);
    auto& bucket = impl_->index[p.hash];
    for (uint32_t id : bucket)
        if (impl_->pool[id]->equal(p)) return id;
    uint32_t id = static_cast<uint32_t>(impl_->pool.size());
    impl_->pool.push_back(std::make_unique<Payload>(std::move(p)));
    bucket.push_back(id);
    return id;
}

const Field::Payload& Field::payload(uint32_t id) const { return *impl_->pool[id]; }

void Field::check(const Scalar& a) const {
    if (a.field_ptr() != this && !(a.is_zero() && a.field_ptr() == nullptr))
        throw field_error("mixed-field operation");
}

// ---------------------------------------------------------------------------
// construction

Field::Field(unsigned n) : kind_(Kind::Cyclotomic), n_(n), impl_(std::make_unique<Impl>()) {
    if (n == 0) throw field_error("root order must be positive");
    min_poly_ = cyclotomic_polynomial(n);
    degree_ = static_cast<unsigned>(min_poly_.size() - 1);
    // reduction table x^k mod Phi_n, k in [degree, 2*degree-2]
    QPoly cur(degree_, Rat(0));
    QPoly phi = qpoly_of(min_poly_);
    // x^degree = -(lower part) since Phi is monic
    QPoly xd(degree_);
    for (unsigned i = 0; i < degree_; ++i) xd[i] = -phi[i];
    xpow_red_.push_back(xd);
    for (unsigned k = degree_ + 1; k + 1 <= 2 * degree_ - 1; ++k) {
        const QPoly& prev = xpow_red_.back();
        QPoly nxt(degree_, Rat(0));
        // multiply prev by x, reduce the overflow term via xpow_red_[0]
        for (unsigned i = 0; i + 1 < degree_; ++i) nxt[i + 1] = prev[i];
        if (degree_ >= 1 && prev[degree_ - 1] != 0) {
            Rat c = prev[degree_ - 1];
            for (unsigned i = 0; i < degree_; ++i) nxt[i] += c * xpow_red_[0][i];
        }
        xpow_red_.push_back(std::move(nxt));
    }
    // interning: id 0 = zero, id 1 = one
    Payload zero;
    intern(std::move(zero));
    Payload one;
    one.coeffs = QPoly{Rat(1)};
    intern(std::move(one));
    if (degree_ == 1) {
        // q is rational: q = root of the linear Phi_n (n=1: 1, n=2: -1)
        Rat root = -Rat(min_poly_[0]);
        q_ = from_rat(root);
    } else {
        Payload qq;
        qq.coeffs = QPoly{Rat(0), Rat(1)};
        q_ = Scalar(this, intern(std::move(qq)));
    }
}

Field::Field() : kind_(Kind::RationalFunction), impl_(std::make_unique<Impl>()) {
    Payload zero;
    intern(std::move(zero));
    Payload one;
    one.num = zpoly_one();
    one.den = zpoly_one();
    intern(std::move(one));
    Payload qq;
    qq.num = ZPoly{BigInt(0), BigInt(1)};
    qq.den = zpoly_one();
    q_ = Scalar(this, intern(std::move(qq)));
}

const Field& Field::cyclotomic(unsigned n) {
    static std::map<unsigned, std::unique_ptr<Field>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<Field>(new Field(n))).first;
    return *it->second;
}

const Field& Field::rational_function() {
    static Field f;
    return f;
}

// ---------------------------------------------------------------------------
// element construction

Scalar Field::from_rat(const Rat& v) const {
    if (v == 0) return zero();
    if (kind_ == Kind::Cyclotomic) {
        Payload p;
        p.coeffs = QPoly{v};
        return Scalar(this, intern(std::move(p)));
    }
    Payload p;
    p.num = ZPoly{boost::multiprecision::numerator(v)};
    p.den = ZPoly{boost::multiprecision::denominator(v)};
    return Scalar(this, intern(std::move(p)));
}

Scalar Field::from_int(long v) const { return from_rat(Rat(v)); }

Scalar Field::from_coeffs(const QPoly& c) const {
    if (kind_ != Kind::Cyclotomic) throw field_error("from_coeffs only on cyclotomic fields");
    QPoly r(degree_, Rat(0));
    if (c.size() <= 2 * degree_ - 1 || degree_ == 1) {
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            if (k < degree_) {
                r[k] += c[k];
            } else {
                const QPoly& red = xpow_red_[std::min<size_t>(k, 2 * degree_ - 2) - degree_];
                // degree_==1: every power k>=1 reduces through x^1; fold iteratively
                if (degree_ == 1) {
                    Rat v = c[k];
                    for (size_t t = 0; t < k; ++t) v *= xpow_red_[0][0];
                    r[0] += v;
                } else {
                    for (unsigned i = 0; i < degree_; ++i) r[i] += c[k] * red[i];
                }
            }
        }
    } else {
        // Horner from the top; multiplying by x overflows one slot at a time
        for (size_t k = c.size(); k-- > 0;) {
            if (k + 1 < c.size()) {
                Rat top = r[degree_ - 1];
                for (size_t i = degree_ - 1; i > 0; --i) r[i] = r[i - 1];
                r[0] = 0;
                if (top != 0)
                    for (unsigned i = 0; i < degree_; ++i) r[i] += top * xpow_red_[0][i];
            }
            r[0] += c[k];
        }
    }
    qpoly_trim(r);
    if (r.empty()) return zero();
    Payload p;
    p.coeffs = std::move(r);
    return Scalar(this, intern(std::move(p)));
}

Scalar Field::from_ratfun(const QPoly& num, const QPoly& den) const {
    if (kind_ != Kind::RationalFunction) throw field_error("from_ratfun only on Q(q)");
    // clear rational denominators, reduce by gcd, normalize sign
    auto to_z = [](QPoly a) {
        qpoly_trim(a);
        BigInt l = 1;
        for (const auto& c : a) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
        ZPoly z(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            z[i] = boost::multiprecision::numerator(a[i]) * (l / boost::multiprecision::denominator(a[i]));
        return z;
    };
    ZPoly zn = to_z(num), zd = to_z(den);
    if (zd.empty()) throw field_error("zero denominator");
    if (zn.empty()) return zero();
    ZPoly g = zpoly_gcd(zn, zd);
    if (g.size() > 1 || g.empty() || g[0] != 1) {
        QPoly qn = qpoly_divexact(qpoly_of(zn), qpoly_of(g));
        QPoly qd = qpoly_divexact(qpoly_of(zd), qpoly_of(g));
        zn = to_z(qn);
        zd = to_z(qd);
    }
    BigInt cn = zpoly_content(zn), cd = zpoly_content(zd);
    BigInt cg = boost::multiprecision::gcd(cn, cd);
    if (zd.back() < 0) cg = -cg;
    for (auto& c : zn) c /= cg;
    for (auto& c : zd) c /= cg;
    Payload p;
    p.num = std::move(zn);
    p.den = std::move(zd);
    return Scalar(this, intern(std::move(p)));
}

// ---------------------------------------------------------------------------
// arithmetic

bool Scalar::is_one() const { return fld_ != nullptr && id_ == 1; }

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    check(a);
    check(b);
    if (a.is_zero()) return b.is_zero() ? zero() : b;
    if (b.is_zero()) return a;
    uint64_t key = (uint64_t(std::min(a.id(), b.id())) << 32) | uint64_t(std::max(a.id(), b.id()));
    auto it = impl_->add_memo.find(key);
    if (it != impl_->add_memo.end()) return Scalar(this, it->second);
    uint32_t rid = add_ids(a.id(), b.id());
    if (impl_->add_memo.size() < Impl::memo_cap) impl_->add_memo.emplace(key, rid);
    return Scalar(this, rid);
}

uint32_t Field::add_ids(uint32_t a, uint32_t b) const {
    const Payload& pa = payload(a);
    const Payload& pb = payload(b);
    if (kind_ == Kind::Cyclotomic) {
        QPoly r(std::max(pa.coeffs.size(), pb.coeffs.size()), Rat(0));
        for (size_t i = 0; i < pa.coeffs.size(); ++i) r[i] += pa.coeffs[i];
        for (size_t i = 0; i < pb.coeffs.size(); ++i) r[i] += pb.coeffs[i];
        qpoly_trim(r);
        if (r.empty()) return 0;
        Payload p;
        p.coeffs = std::move(r);
        return intern(std::move(p));
    }
    // a/b + c/d = (ad + cb)/(bd)
    ZPoly n1 = zpoly_mul(pa.num, pb.den);
    ZPoly n2 = zpoly_mul(pb.num, pa.den);
    ZPoly nn(std::max(n1.size(), n2.size()), BigInt(0));
    for (size_t i = 0; i < n1.size(); ++i) nn[i] += n1[i];
    for (size_t i = 0; i < n2.size(); ++i) nn[i] += n2[i];
    zpoly_trim(nn);
    Scalar s = from_ratfun(qpoly_of(nn), qpoly_of(zpoly_mul(pa.den, pb.den)));
    return s.id();
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) return zero();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    uint64_t key = (uint64_t(std::min(a.id(), b.id())) << 32) | uint64_t(std::max(a.id(), b.id()));
    auto it = impl_->mul_memo.find(key);
    if (it != impl_->mul_memo.end()) return Scalar(this, it->second);
    uint32_t rid = mul_ids(a.id(), b.id());
    if (impl_->mul_memo.size() < Impl::memo_cap) impl_->mul_memo.emplace(key, rid);
    return Scalar(this, rid);
}

uint32_t Field::mul_ids(uint32_t a, uint32_t b) const {
    const Payload& pa = payload(a);
    const Payload& pb = payload(b);
    if (kind_ == Kind::Cyclotomic) {
        QPoly prod(pa.coeffs.size() + pb.coeffs.size() - 1, Rat(0));
        for (size_t i = 0; i < pa.coeffs.size(); ++i) {
            if (pa.coeffs[i] == 0) continue;
            for (size_t j = 0; j < pb.coeffs.size(); ++j) prod[i + j] += pa.coeffs[i] * pb.coeffs[j];
        }
        Scalar s = from_coeffs(prod);
        return s.id();
    }
    Scalar s = from_ratfun(qpoly_of(zpoly_mul(pa.num, pb.num)), qpoly_of(zpoly_mul(pa.den, pb.den)));
    return s.id();
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
    check(a);
    if (a.is_zero()) return zero();
    const Payload& pa = payload(a.id());
    if (kind_ == Kind::Cyclotomic) {
        Payload p;
        p.coeffs = pa.coeffs;
        for (auto& c : p.coeffs) c = -c;
        return Scalar(this, intern(std::move(p)));
    }
    Payload p;
    p.num = pa.num;
    for (auto& c : p.num) c = -c;
    p.den = pa.den;
    return Scalar(this, intern(std::move(p)));
}

Scalar Field::inv(const Scalar& a) const {
    check(a);
    if (a.is_zero()) throw field_error("division by zero");
    const Payload& pa = payload(a.id());
    if (kind_ == Kind::RationalFunction) {
        return from_ratfun(qpoly_of(pa.den), qpoly_of(pa.num));
    }
    // extended Euclid over Q: u*a + v*Phi = 1
    QPoly r0 = qpoly_of(min_poly_), r1 = pa.coeffs;
    QPoly s0{}, s1{Rat(1)};
    qpoly_trim(r1);
    while (!r1.empty() && r1.size() > 1) {
        // r0 = q*r1 + r2
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
        QPoly r2 = r0;
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rat c = r2.back() / r1.back();
            size_t off = r2.size() - r1.size();
            q[off] += c;
            for (size_t i = 0; i < r1.size(); ++i) r2[off + i] -= c * r1[i];
            qpoly_trim(r2);
        }
        // s2 = s0 - q*s1
        QPoly qs = {};
        if (!s1.empty() && !q.empty()) {
            qs.assign(q.size() + s1.size() - 1, Rat(0));
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        }
        QPoly s2(std::max(s0.size(), qs.size()), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qpoly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) {
        // r0 is the gcd; must be a nonzero constant for invertibility (Phi irreducible)
        if (r0.size() != 1) throw field_error("inv: element not invertible");
        QPoly s = s0;
        for (auto& c : s) c /= r0[0];
        return from_coeffs(s);
    }
    QPoly s = s1;
    for (auto& c : s) c /= r1[0];
    return from_coeffs(s);
}

Scalar Field::pow(const Scalar& a, long k) const {
    if (k == 0) return one();
    Scalar base = k < 0 ? inv(a) : a;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    Scalar r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Scalar Field::q_pow(long k) const {
    if (kind_ == Kind::Cyclotomic) {
        long kk = ((k % long(n_)) + long(n_)) % long(n_);
        if (qpow_cache_.empty()) {
            qpow_cache_.resize(n_);
            Scalar cur = one();
            for (unsigned i = 0; i < n_; ++i) {
                qpow_cache_[i] = cur;
                cur = mul(cur, q_);
            }
        }
        return qpow_cache_[kk];
    }
    return pow(q_, k);
}

// ---------------------------------------------------------------------------
// q-combinatorics

Scalar Field::q_int(long a) const {
    // [a]_q = (1-q^a)/(1-q); at q=1 this is a itself
    if (q_ == one()) return from_int(a);
    Scalar num = sub(one(), q_pow(a));
    Scalar den = sub(one(), q_);
    return mul(num, inv(den));
}

Scalar Field::q_int_at(long a, long qexp) const {
    Scalar qq = q_pow(qexp);
    if (qq == one()) return from_int(a);
    Scalar num = sub(one(), pow(qq, a));
    Scalar den = sub(one(), qq);
    return mul(num, inv(den));
}

Scalar Field::q_factorial(long a) const {
    if (a < 0) throw field_error("q_factorial of negative argument");
    Scalar r = one();
    for (long i = 2; i <= a; ++i) r = mul(r, q_int(i));
    return r;
}

Scalar Field::q_binomial(long a, long r) const {
    if (r < 0 || r > a) return zero();
    if (kind_ == Kind::RationalFunction || a < long(n_)) {
        Scalar num = q_factorial(a);
        Scalar den = mul(q_factorial(r), q_factorial(a - r));
        if (den.is_zero()) throw field_error("q_binomial: denominator factorial vanishes");
        return mul(num, inv(den));
    }
    // at a root of unity with a >= n, evaluate the Gaussian binomial as a
    // polynomial in generic q and then specialize
    const Field& Q = Field::rational_function();
    Scalar g = Q.q_binomial(a, r);
    auto [num, den] = Q.ratfun_parts(g);
    if (den.size() != 1 || den[0] != 1)
        throw field_error("q_binomial: generic value is not polynomial");
    return from_coeffs(qpoly_of(num));
}

bool check_q_identity_1(const Field& F, long a) {
    Scalar lhs1 = F.zero(), lhs2 = F.zero();
    for (long r = 0; r <= a; ++r) {
        Scalar den = F.mul(F.q_factorial(r), F.q_factorial(a - r));
        if (den.is_zero()) return false;
        Scalar t = F.mul(F.q_pow(r * (r + 1) / 2), F.inv(den));
        if (r % 2) t = F.neg(t);
        lhs1 = F.add(lhs1, t);
        lhs2 = F.add(lhs2, F.mul(F.q_pow(r), t));
    }
    Scalar rhs1 = F.pow(F.sub(F.one(), F.q()), a);
    Scalar rhs2 = F.mul(rhs1, F.q_int(a + 1));
    return lhs1 == rhs1 && lhs2 == rhs2;
}

bool check_q_identity_2(const Field& F, long r, long s) {
    Scalar lhs = F.zero();
    for (long r1 = 0; r1 <= r; ++r1) {
        Scalar den = F.mul(F.q_factorial(r1), F.q_factorial(r - r1));
        if (den.is_zero()) return false;
        Scalar t = F.mul(F.q_pow(r1 * (r1 + 1) / 2 + s * r1), F.inv(den));
        if ((r - r1) % 2) t = F.neg(t);
        lhs = F.add(lhs, t);
    }
    Scalar rhs = F.mul(F.pow(F.sub(F.q(), F.one()), r), F.q_binomial(r + s, r));
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// printing and parsing

const QPoly& Field::cyc_coeffs(const Scalar& a) const {
    check(a);
    if (kind_ != Kind::Cyclotomic) throw field_error("cyc_coeffs on Q(q) scalar");
    return payload(a.id()).coeffs;
}

std::pair<ZPoly, ZPoly> Field::ratfun_parts(const Scalar& a) const {
    check(a);
    if (kind_ != Kind::RationalFunction) throw field_error("ratfun_parts on cyclotomic scalar");
    if (a.is_zero()) return {ZPoly{}, zpoly_one()};
    const Payload& p = payload(a.id());
    return {p.num, p.den};
}

static std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

static std::string zpoly_str(const ZPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        BigInt c = p[k];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (c != 1 || k == 0) os << c;
        if (k >= 1) {
            if (c != 1) os << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) return "0";
    return os.str();
}

std::string Field::to_string(const Scalar& a) const {
    check(a);
    if (kind_ == Kind::Cyclotomic) {
        QPoly c = a.is_zero() ? QPoly{} : payload(a.id()).coeffs;
        c.resize(degree_, Rat(0));
        std::string s;
        for (unsigned i = 0; i < degree_; ++i) {
            if (i) s += ",";
            s += rat_str(c[i]);
        }
        return s;
    }
    if (a.is_zero()) return "0";
    const Payload& p = payload(a.id());
    if (p.den.size() == 1 && p.den[0] == 1) return zpoly_str(p.num);
    return "(" + zpoly_str(p.num) + ") / (" + zpoly_str(p.den) + ")";
}

static Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

static QPoly parse_qpoly(const std::string& in) {
    // integer polynomial in q, e.g. "1 - 2*q + q^3"
    QPoly out;
    std::string s;
    for (char ch : in)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        std::string numstr;
        while (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) numstr += s[i++];
        Rat coef = numstr.empty() ? Rat(1) : parse_rat(numstr);
        long power = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
                power = std::stol(e);
            }
        }
        if (out.size() <= size_t(power)) out.resize(power + 1, Rat(0));
        out[power] += sign * coef;
    }
    return out;
}

Scalar Field::parse(const std::string& s) const {
    if (kind_ == Kind::Cyclotomic) {
        QPoly c;
        size_t start = 0;
        while (start <= s.size()) {
            size_t comma = s.find(',', start);
            std::string part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!part.empty()) c.push_back(parse_rat(part));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return from_coeffs(c);
    }
    // "num" or "(num) / (den)"
    std::string t = s;
    auto strip = [](std::string x) {
        size_t b = x.find_first_not_of(" \t");
        size_t e = x.find_last_not_of(" \t");
        if (b == std::string::npos) return std::string();
        return x.substr(b, e - b + 1);
    };
    t = strip(t);
    if (!t.empty() && t[0] == '(') {
        size_t close = t.find(')');
        std::string num = t.substr(1, close - 1);
        std::string rest = strip(t.substr(close + 1));
        if (!rest.empty() && rest[0] == '/') {
            std::string den = strip(rest.substr(1));
            if (!den.empty() && den.front() == '(') den = den.substr(1, den.find(')') - 1);
            return from_ratfun(parse_qpoly(num), parse_qpoly(den));
        }
        return from_ratfun(parse_qpoly(num), QPoly{Rat(1)});
    }
    return from_ratfun(parse_qpoly(t), QPoly{Rat(1)});
}

}  // namespace qhopf
