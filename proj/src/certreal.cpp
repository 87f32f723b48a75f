#include "lucasrep/certreal.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace lucasrep {

namespace {

constexpr mpfr_prec_t kRadPrec = 32;

struct Raii {
    mpfr_t v;
    explicit Raii(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~Raii() { mpfr_clear(v); }
    Raii(const Raii&) = delete;
    Raii& operator=(const Raii&) = delete;
};

// Upper bound on (1 + 2^{1-p}) for every working precision we use; applied
// where a rounded midpoint stands in for the true value inside a radius
// formula.
void fudge_up(mpfr_ptr x) {
    Raii f(kRadPrec);
    mpfr_set_ui_2exp(f.v, 1, -20, MPFR_RNDU);
    mpfr_add_ui(f.v, f.v, 1, MPFR_RNDU);
    mpfr_mul(x, x, f.v, MPFR_RNDU);
}

}  // namespace

struct CertRealDetail {
    static mpfr_srcptr mid(const CertReal& x) { return x.mid_; }
    static mpfr_srcptr rad(const CertReal& x) { return x.rad_; }
};

long CertReal::bits_for_digits(int digits) {
    if (digits < 1) digits = 1;
    return static_cast<long>(std::ceil(digits * 3.3219280948873626)) + 16;
}

CertReal::CertReal() : prec_(64) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

CertReal::CertReal(long prec_bits) : prec_(prec_bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec_bits) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

CertReal::CertReal(const CertReal& o) : prec_(o.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

CertReal::CertReal(CertReal&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(mid_, MPFR_PREC_MIN);
    mpfr_init2(rad_, kRadPrec);
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
}

CertReal& CertReal::operator=(const CertReal& o) {
    if (this != &o) {
        mpfr_set_prec(mid_, o.prec_);
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
        prec_ = o.prec_;
    }
    return *this;
}

CertReal& CertReal::operator=(CertReal&& o) noexcept {
    if (this != &o) {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
        prec_ = o.prec_;
    }
    return *this;
}

CertReal::~CertReal() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

void CertReal::bump_ulp(int ternary) {
    if (ternary == 0 || mpfr_zero_p(mid_)) return;
    Raii u(kRadPrec);
    mpfr_set_ui_2exp(u.v, 1, mpfr_get_exp(mid_) - prec_, MPFR_RNDU);
    mpfr_add(rad_, rad_, u.v, MPFR_RNDU);
}

CertReal CertReal::from_long(long v, int digits) {
    CertReal r(bits_for_digits(digits));
    int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
    r.bump_ulp(t);
    return r;
}

CertReal CertReal::from_integer(const mpz_class& v, int digits) {
    CertReal r(bits_for_digits(digits));
    int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
    r.bump_ulp(t);
    return r;
}

CertReal CertReal::from_ratio(const mpz_class& num, const mpz_class& den, int digits) {
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    CertReal r(bits_for_digits(digits));
    int t = mpfr_set_q(r.mid_, q.get_mpq_t(), MPFR_RNDN);
    r.bump_ulp(t);
    return r;
}

CertReal CertReal::from_ratio(long num, long den, int digits) {
    return from_ratio(mpz_class(num), mpz_class(den), digits);
}

CertReal CertReal::from_decimal(const std::string& s, int digits) {
    CertReal r(bits_for_digits(digits));
    int bad = mpfr_set_str(r.mid_, s.c_str(), 10, MPFR_RNDN);
    if (bad != 0) throw std::invalid_argument("bad decimal literal: " + s);
    // mpfr_set_str does not report exactness; charge one ulp unconditionally.
    r.bump_ulp(1);
    return r;
}

CertReal CertReal::from_mpfr(mpfr_srcptr mid) {
    CertReal r(mpfr_get_prec(mid));
    mpfr_set(r.mid_, mid, MPFR_RNDN);
    return r;
}

int CertReal::digits() const {
    return static_cast<int>((prec_ - 16) / 3.3219280948873626);
}

bool CertReal::exact() const { return mpfr_zero_p(rad_); }

double CertReal::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

mpz_class CertReal::round_mid() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), mid_, MPFR_RNDN);
    return z;
}

std::string CertReal::str(int sig_digits) const {
    std::vector<char> buf(static_cast<std::size_t>(sig_digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", sig_digits - 1, mid_);
    return std::string(buf.data());
}

std::string CertReal::radius_str() const {
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.2Re", rad_);
    return std::string(buf);
}

std::optional<int> CertReal::sign() const {
    if (mpfr_zero_p(mid_)) {
        if (mpfr_zero_p(rad_)) return 0;
        return std::nullopt;
    }
    if (mpfr_cmpabs(mid_, rad_) > 0) return mpfr_sgn(mid_) > 0 ? 1 : -1;
    return std::nullopt;
}

bool CertReal::contains_zero() const {
    if (mpfr_zero_p(mid_)) return true;
    return mpfr_cmpabs(mid_, rad_) <= 0;
}

std::optional<bool> CertReal::less_than(const CertReal& o) const {
    const long p = std::max(prec_, o.prec_) + 32;
    Raii hi_a(p), lo_b(p);
    mpfr_add(hi_a.v, mid_, rad_, MPFR_RNDU);
    mpfr_sub(lo_b.v, o.mid_, o.rad_, MPFR_RNDD);
    if (mpfr_cmp(hi_a.v, lo_b.v) < 0) return true;
    Raii lo_a(p), hi_b(p);
    mpfr_sub(lo_a.v, mid_, rad_, MPFR_RNDD);
    mpfr_add(hi_b.v, o.mid_, o.rad_, MPFR_RNDU);
    if (mpfr_cmp(lo_a.v, hi_b.v) > 0) return false;
    return std::nullopt;
}

bool CertReal::certainly_le(const CertReal& o) const {
    const long p = std::max(prec_, o.prec_) + 32;
    Raii hi_a(p), lo_b(p);
    mpfr_add(hi_a.v, mid_, rad_, MPFR_RNDU);
    mpfr_sub(lo_b.v, o.mid_, o.rad_, MPFR_RNDD);
    return mpfr_cmp(hi_a.v, lo_b.v) <= 0;
}

bool CertReal::radius_below_pow10(long neg_exp) const {
    Raii t(kRadPrec);
    mpfr_set_si(t.v, 10, MPFR_RNDD);
    mpfr_pow_si(t.v, t.v, -neg_exp, MPFR_RNDD);
    return mpfr_cmp(rad_, t.v) < 0;
}

mpz_class CertReal::ceil_hi() const {
    Raii hi(prec_ + 32);
    mpfr_add(hi.v, mid_, rad_, MPFR_RNDU);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), hi.v, MPFR_RNDU);
    return z;
}

mpz_class CertReal::floor_lo() const {
    Raii lo(prec_ + 32);
    mpfr_sub(lo.v, mid_, rad_, MPFR_RNDD);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), lo.v, MPFR_RNDD);
    return z;
}

CertReal CertReal::operator-() const {
    CertReal r(*this);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
    return r;
}

CertReal CertReal::abs() const {
    CertReal r(*this);
    mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
    return r;
}

CertReal operator+(const CertReal& a, const CertReal& b) {
    CertReal r(std::max(a.prec_, b.prec_));
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

CertReal operator-(const CertReal& a, const CertReal& b) {
    CertReal r(std::max(a.prec_, b.prec_));
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

CertReal operator*(const CertReal& a, const CertReal& b) {
    CertReal r(std::max(a.prec_, b.prec_));
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    Raii t1(kRadPrec), t2(kRadPrec), t3(kRadPrec);
    mpfr_mul(t1.v, a.mid_, b.rad_, MPFR_RNDA);
    mpfr_abs(t1.v, t1.v, MPFR_RNDU);
    mpfr_mul(t2.v, b.mid_, a.rad_, MPFR_RNDA);
    mpfr_abs(t2.v, t2.v, MPFR_RNDU);
    mpfr_mul(t3.v, a.rad_, b.rad_, MPFR_RNDU);
    mpfr_add(r.rad_, t1.v, t2.v, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, t3.v, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

CertReal operator/(const CertReal& a, const CertReal& b) {
    if (b.contains_zero()) throw PrecisionFault("division by a ball containing zero");
    CertReal r(std::max(a.prec_, b.prec_));
    int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |a/b - mid(a)/mid(b)| <= (rad(a) + |mid(a)/mid(b)| rad(b)) / (|mid(b)| - rad(b))
    Raii num(kRadPrec), den(kRadPrec);
    mpfr_mul(num.v, r.mid_, b.rad_, MPFR_RNDA);
    mpfr_abs(num.v, num.v, MPFR_RNDU);
    fudge_up(num.v);  // rounded quotient stands in for the true one
    mpfr_add(num.v, num.v, a.rad_, MPFR_RNDU);
    mpfr_abs(den.v, b.mid_, MPFR_RNDD);
    mpfr_sub(den.v, den.v, b.rad_, MPFR_RNDD);
    mpfr_div(num.v, num.v, den.v, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, num.v, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

CertReal CertReal::mul_long(long v) const {
    CertReal r(prec_);
    int t = mpfr_mul_si(r.mid_, mid_, v, MPFR_RNDN);
    mpfr_mul_si(r.rad_, rad_, v < 0 ? -v : v, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

CertReal CertReal::mul_mpz(const mpz_class& v) const {
    CertReal r(prec_);
    int t = mpfr_mul_z(r.mid_, mid_, v.get_mpz_t(), MPFR_RNDN);
    mpz_class av = ::abs(v);
    mpfr_mul_z(r.rad_, rad_, av.get_mpz_t(), MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

CertReal CertReal::mul_2exp(long e) const {
    CertReal r(*this);
    mpfr_mul_2si(r.mid_, r.mid_, e, MPFR_RNDN);
    mpfr_mul_2si(r.rad_, r.rad_, e, MPFR_RNDU);
    return r;
}

CertReal CertReal::frac_nearest() const {
    mpz_class z = round_mid();
    CertReal r(*this);
    int t = mpfr_sub_z(r.mid_, r.mid_, z.get_mpz_t(), MPFR_RNDN);
    // The difference fits in the working precision, so this is normally
    // exact; charge an ulp if it ever is not.
    r.bump_ulp(t);
    return r;
}

CertReal CertReal::dist_to_nearest_int_ball() const {
    Raii quarter(kRadPrec);
    mpfr_set_ui_2exp(quarter.v, 1, -2, MPFR_RNDN);
    if (mpfr_cmp(rad_, quarter.v) >= 0)
        throw PrecisionFault("distance to nearest integer: radius >= 1/4");
    return frac_nearest().abs();
}

CertReal log(const CertReal& a) {
    Raii lo(a.prec_ + 32);
    mpfr_sub(lo.v, a.mid_, a.rad_, MPFR_RNDD);
    if (mpfr_sgn(lo.v) <= 0) throw PrecisionFault("log of a ball reaching zero");
    CertReal r(a.prec_);
    int t = mpfr_log(r.mid_, a.mid_, MPFR_RNDN);
    Raii dlo(kRadPrec);
    mpfr_set(dlo.v, lo.v, MPFR_RNDD);
    mpfr_div(dlo.v, a.rad_, dlo.v, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, dlo.v, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

CertReal exp(const CertReal& a) {
    CertReal r(a.prec_);
    int t = mpfr_exp(r.mid_, a.mid_, MPFR_RNDN);
    Raii grow(kRadPrec);
    mpfr_expm1(grow.v, a.rad_, MPFR_RNDU);
    mpfr_mul(grow.v, grow.v, r.mid_, MPFR_RNDA);
    mpfr_abs(grow.v, grow.v, MPFR_RNDU);
    fudge_up(grow.v);
    mpfr_add(r.rad_, r.rad_, grow.v, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

CertReal sqrt(const CertReal& a) {
    Raii lo(a.prec_ + 32);
    mpfr_sub(lo.v, a.mid_, a.rad_, MPFR_RNDD);
    if (mpfr_sgn(lo.v) <= 0) throw PrecisionFault("sqrt of a ball reaching zero");
    CertReal r(a.prec_);
    int t = mpfr_sqrt(r.mid_, a.mid_, MPFR_RNDN);
    Raii den(kRadPrec);
    mpfr_set(den.v, lo.v, MPFR_RNDD);
    mpfr_sqrt(den.v, den.v, MPFR_RNDD);
    mpfr_mul_2ui(den.v, den.v, 1, MPFR_RNDD);
    mpfr_div(den.v, a.rad_, den.v, MPFR_RNDU);
    mpfr_add(r.rad_, r.rad_, den.v, MPFR_RNDU);
    r.bump_ulp(t);
    return r;
}

CertReal pow_ui(const CertReal& a, unsigned long e) {
    CertReal acc(a.prec_);
    if (e == 0) {
        CertReal one = CertReal::from_long(1, 2);
        return one;
    }
    CertReal base(a);
    bool first = true;
    while (e) {
        if (e & 1UL) {
            if (first) {
                acc = base;
                first = false;
            } else {
                acc = acc * base;
            }
        }
        e >>= 1UL;
        if (e) base = base * base;
    }
    return acc;
}

CertReal CertReal::with_radius_at_least(const CertReal& r) const {
    CertReal out(*this);
    if (mpfr_cmp(out.rad_, r.mid_) < 0) mpfr_set(out.rad_, r.mid_, MPFR_RNDU);
    mpfr_add(out.rad_, out.rad_, r.rad_, MPFR_RNDU);
    return out;
}

}  // namespace lucasrep
