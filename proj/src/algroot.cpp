#include "lucasrep/algroot.hpp"

#include "lucasrep/lucas.hpp"

#include <stdexcept>
#include <string>

namespace lucasrep {

namespace {

void check_order(int k) {
    if (k < 2) throw std::invalid_argument("order must be >= 2");
}

int digits_for_bits(long bits) { return static_cast<int>(bits / 3.3219280948873626) + 1; }

// Exact ball for the lower bracket endpoint 2(1 - 2^{-k}) = (2^k - 1) 2^{1-k}.
CertReal bracket_lo(int k, int digits) {
    mpz_class num = (mpz_class(1) << k) - 1;
    return CertReal::from_integer(num, digits).mul_2exp(1 - k);
}

// g(y), g'(y) for g(x) = x^k (x - 2) + 1 on plain midpoints.
void eval_g(mpfr_ptr g, mpfr_ptr gp, mpfr_srcptr y, int k, mpfr_ptr scratch) {
    mpfr_pow_ui(scratch, y, static_cast<unsigned long>(k - 1), MPFR_RNDN);
    mpfr_mul(g, scratch, y, MPFR_RNDN);  // y^k
    mpfr_sub_ui(gp, y, 2, MPFR_RNDN);
    mpfr_mul(g, g, gp, MPFR_RNDN);
    mpfr_add_ui(g, g, 1, MPFR_RNDN);
    mpfr_mul_si(gp, y, k + 1, MPFR_RNDN);
    mpfr_sub_ui(gp, gp, 2UL * static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_mul(gp, gp, scratch, MPFR_RNDN);
}

}  // namespace

CertReal psi_numerator(int k, const CertReal& x) {
    check_order(k);
    CertReal xk = pow_ui(x, static_cast<unsigned long>(k));
    CertReal shifted = x - CertReal::from_long(2, 2);
    CertReal one = CertReal::from_long(1, 2);
    return xk * shifted + one;
}

CertReal psi_eval(int k, const CertReal& x) {
    check_order(k);
    CertReal den = x - CertReal::from_long(1, 2);
    if (den.contains_zero()) throw PrecisionFault("Psi_k evaluated on a ball containing 1");
    return psi_numerator(k, x) / den;
}

DominantRoot dominant_root(int k, int precision_digits) {
    check_order(k);
    if (precision_digits < 30) throw std::invalid_argument("root precision must be >= 30 digits");

    // The bracketing interval has width 2^{1-k}, so the working precision
    // must exceed k bits before its endpoints are even distinct.
    const long bits = CertReal::bits_for_digits(precision_digits + 10) + k + 64;
    const int wd = digits_for_bits(bits);

    const CertReal lo = bracket_lo(k, wd);
    const CertReal hi = CertReal::from_long(2, wd);

    auto sign_at = [&](const CertReal& p) { return psi_numerator(k, p).sign(); };

    if (sign_at(lo) != -1 || sign_at(hi) != 1)
        throw PrecisionFault("failed to certify the initial sign change for Psi_k");

    // Bisection isolates; Newton at full precision finishes the job.
    CertReal a = lo, b = hi;
    const CertReal half = CertReal::from_ratio(1, 2, wd);
    for (int step = 0; step < 60; ++step) {
        CertReal m = (a + b) * half;
        std::optional<int> s = sign_at(m);
        if (!s) {
            // Cut point indistinguishable from the root; nudge it off-center.
            m = a + (b - a) * CertReal::from_ratio(27, 64, wd);
            s = sign_at(m);
            if (!s) break;
        }
        if (*s < 0)
            a = m;
        else
            b = m;
    }

    mpfr_t y, g, gp, scratch;
    mpfr_init2(y, bits);
    mpfr_init2(g, bits);
    mpfr_init2(gp, bits);
    mpfr_init2(scratch, bits);
    {
        CertReal m = (a + b) * half;
        mpfr_set(y, m.mid_srcptr(), MPFR_RNDN);
    }
    for (int it = 0; it < 300; ++it) {
        eval_g(g, gp, y, k, scratch);
        if (mpfr_zero_p(gp)) break;
        mpfr_div(g, g, gp, MPFR_RNDN);
        mpfr_sub(y, y, g, MPFR_RNDN);
        if (mpfr_zero_p(g) || mpfr_get_exp(g) < mpfr_get_exp(y) - bits + 8) break;
    }

    // Certified enclosure: grow delta until g(y-delta) < 0 < g(y+delta).
    DominantRoot out;
    out.k = k;
    out.requested_digits = precision_digits;
    bool certified = false;
    const CertReal center = CertReal::from_mpfr(y);
    for (long de = -(bits - 24); de < -8 && !certified; de += 4) {
        CertReal delta = CertReal::from_long(1, wd).mul_2exp(de);
        if (sign_at(center - delta) == -1 && sign_at(center + delta) == 1) {
            out.alpha = center.with_radius_at_least(delta);
            certified = true;
        }
    }
    mpfr_clear(y);
    mpfr_clear(g);
    mpfr_clear(gp);
    mpfr_clear(scratch);
    if (!certified) throw PrecisionFault("failed to certify a sign-change bracket around alpha");

    // The sign change pins *a* root of g; on (3/2, 2) the only one is alpha,
    // and the paper's interval must hold as well.
    CertReal three_halves = CertReal::from_ratio(3, 2, wd);
    if (!three_halves.certainly_less(out.alpha) || !out.alpha.certainly_less(hi) ||
        !lo.certainly_less(out.alpha))
        throw PrecisionFault("certified root enclosure escapes (2(1-2^-k), 2)");

    CertReal one = CertReal::from_long(1, wd);
    CertReal two = CertReal::from_long(2, wd);
    out.two_alpha_minus_one = out.alpha.mul_long(2) - one;
    out.fk_alpha = (out.alpha - one) / (two + (out.alpha - two).mul_long(k + 1));

    if (!CertReal::from_ratio(1, 2, wd).certainly_less(out.fk_alpha) ||
        !out.fk_alpha.certainly_less(CertReal::from_ratio(3, 4, wd)))
        throw PrecisionFault("failed to certify 1/2 < f_k(alpha) < 3/4");
    return out;
}

CertReal approx_defect(int k, long n, const DominantRoot& root) {
    check_order(k);
    if (n < 1) throw std::invalid_argument("defect needs n >= 1");
    int wd = digits_for_bits(root.alpha.prec_bits());
    CertReal dominant = root.fk_alpha * root.two_alpha_minus_one *
                        pow_ui(root.alpha, static_cast<unsigned long>(n - 1));
    CertReal exact = CertReal::from_integer(klucas(k, n), wd);
    return (exact - dominant).abs();
}

HeightBudget height_eta3(int lambda_case, int k, long l, long m, int a) {
    check_order(k);
    if (a < 1 || a > 9) throw std::invalid_argument("digit must be 1..9");
    const int wd = 64;
    CertReal logk = log(CertReal::from_long(k, wd));
    CertReal log2 = log(CertReal::from_long(2, wd));
    HeightBudget hb;
    hb.lambda_case = lambda_case;
    switch (lambda_case) {
        case 1:
            hb.bound = logk.mul_long(17);
            break;
        case 2:
            if (l < 0) throw std::invalid_argument("case 2 needs l >= 0");
            hb.bound = logk.mul_long(14) + log2.mul_long(l);
            break;
        case 3:
            if (l < 0 || m < l) throw std::invalid_argument("case 3 needs 0 <= l <= m");
            hb.bound = logk.mul_long(10) + log2.mul_long(2 * m);
            break;
        default:
            throw std::invalid_argument("lambda case must be 1, 2 or 3");
    }
    return hb;
}

std::shared_ptr<const DominantRoot> RootCache::get(int k, int digits) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = roots_.find(k);
        if (it != roots_.end() && it->second->requested_digits >= digits) return it->second;
    }
    auto fresh = std::make_shared<const DominantRoot>(dominant_root(k, digits));
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = roots_[k];
    if (!slot || slot->requested_digits < digits) slot = fresh;
    return slot;
}

RootCache& RootCache::global() {
    static RootCache cache;
    return cache;
}

}  // namespace lucasrep
