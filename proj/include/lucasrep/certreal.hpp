#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

// Midpoint-radius ("ball") arithmetic on top of MPFR. Every operation
// propagates a worst-case error radius, so comparisons are either certified
// or reported as undecidable. The radius is itself a low-precision MPFR
// value rounded upward; a double would underflow long before the ~600
// decimal digits this project works at.

namespace lucasrep {

// Raised when a required decision stays undecidable after the precision
// escalation policy is exhausted.
class PrecisionFault : public std::runtime_error {
  public:
    explicit PrecisionFault(const std::string& what) : std::runtime_error(what) {}
};

class CertReal {
  public:
    CertReal();  // exact zero at minimal precision
    explicit CertReal(long prec_bits);
    CertReal(const CertReal&);
    CertReal(CertReal&&) noexcept;
    CertReal& operator=(const CertReal&);
    CertReal& operator=(CertReal&&) noexcept;
    ~CertReal();

    static long bits_for_digits(int digits);

    // Factories; `digits` is the working precision in decimal digits.
    static CertReal from_long(long v, int digits);
    static CertReal from_integer(const mpz_class& v, int digits);
    static CertReal from_ratio(const mpz_class& num, const mpz_class& den, int digits);
    static CertReal from_ratio(long num, long den, int digits);
    // Exact decimal literal like "1.4" or "2.3e13"; rounds once into the ball.
    static CertReal from_decimal(const std::string& s, int digits);
    // Exact copy of an MPFR value, zero radius.
    static CertReal from_mpfr(mpfr_srcptr mid);

    // Read-only view of the midpoint, for plain-float codepaths (Newton
    // polish, the dual-precision continued-fraction runs).
    mpfr_srcptr mid_srcptr() const { return mid_; }

    int digits() const;
    long prec_bits() const { return prec_; }
    bool exact() const;

    double mid_double() const;
    mpz_class round_mid() const;  // nearest integer to the midpoint
    std::string str(int sig_digits) const;
    std::string radius_str() const;

    // Certified predicates. nullopt means the ball straddles the boundary.
    std::optional<int> sign() const;
    bool certainly_positive() const { return sign() == 1; }
    bool certainly_negative() const { return sign() == -1; }
    bool contains_zero() const;
    std::optional<bool> less_than(const CertReal& o) const;
    bool certainly_less(const CertReal& o) const { return less_than(o) == true; }
    // upper endpoint of this <= lower endpoint of o
    bool certainly_le(const CertReal& o) const;
    bool radius_below_pow10(long neg_exp) const;  // radius < 10^(-neg_exp)

    mpz_class ceil_hi() const;   // smallest integer >= upper endpoint
    mpz_class floor_lo() const;  // largest integer <= lower endpoint

    CertReal operator-() const;
    CertReal abs() const;
    friend CertReal operator+(const CertReal&, const CertReal&);
    friend CertReal operator-(const CertReal&, const CertReal&);
    friend CertReal operator*(const CertReal&, const CertReal&);
    friend CertReal operator/(const CertReal&, const CertReal&);
    CertReal mul_long(long v) const;
    CertReal mul_mpz(const mpz_class& v) const;
    CertReal mul_2exp(long e) const;

    // this - round(mid): exact shift by an integer, radius unchanged.
    CertReal frac_nearest() const;
    // Enclosure of the distance to the nearest integer, clamped to [0, 1/2].
    // Requires radius < 1/4.
    CertReal dist_to_nearest_int_ball() const;

    friend CertReal log(const CertReal&);
    friend CertReal exp(const CertReal&);
    friend CertReal sqrt(const CertReal&);
    friend CertReal pow_ui(const CertReal&, unsigned long e);

    // Inflate the radius to at least `r` (used to certify root enclosures).
    CertReal with_radius_at_least(const CertReal& r) const;

  private:
    mpfr_t mid_;
    mpfr_t rad_;  // >= 0, low precision, conservative
    long prec_;

    void bump_ulp(int ternary);
    friend struct CertRealDetail;
};

// Escalation helper: runs fn at doubling precision until it returns a value,
// starting at start_digits, at most `doublings` extra rounds.
template <typename F>
auto escalate(int start_digits, int doublings, F&& fn)
    -> typename std::invoke_result_t<F, int> {
    int d = start_digits;
    for (int i = 0; i <= doublings; ++i, d *= 2) {
        auto r = fn(d);
        if (r) return r;
    }
    return {};
}

inline constexpr int kPrecisionStartDigits = 64;
inline constexpr int kPrecisionDoublings = 8;

}  // namespace lucasrep
