#include "lucasrep/contfrac.hpp"

#include "lucasrep/algroot.hpp"

#include <stdexcept>

namespace lucasrep {

namespace {

// Plain-midpoint expansion at a fixed precision. Stops when the tail has
// consumed most of the mantissa; the caller intersects two such runs.
std::vector<mpz_class> expand_raw(const CertReal& x, std::size_t max_count) {
    const long bits = x.prec_bits();
    mpfr_t t, inv;
    mpfr_init2(t, bits);
    mpfr_init2(inv, bits);
    mpfr_set(t, x.mid_srcptr(), MPFR_RNDN);

    std::vector<mpz_class> a;
    long budget = bits - 16;  // bits of mantissa still trustworthy
    while (a.size() < max_count && budget > 8) {
        mpz_class q;
        mpfr_get_z(q.get_mpz_t(), t, MPFR_RNDD);  // floor
        a.push_back(q);
        mpfr_sub_z(t, t, q.get_mpz_t(), MPFR_RNDN);  // frac in [0,1)
        if (mpfr_zero_p(t)) break;
        budget -= std::max<long>(1, -mpfr_get_exp(t));  // leading zero bits are spent
        budget -= static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
        mpfr_ui_div(inv, 1, t, MPFR_RNDN);
        mpfr_swap(t, inv);
    }
    mpfr_clear(t);
    mpfr_clear(inv);
    return a;
}

std::size_t common_prefix(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i]) ++i;
    return i;
}

}  // namespace

CFExpansion cf_expand(const RealProvider& target, const std::string& label, std::size_t count,
                      int start_digits) {
    CFExpansion cf;
    cf.target = label;
    int digits = std::max(start_digits, 32);
    for (int round = 0; round <= kPrecisionDoublings; ++round, digits *= 2) {
        auto lo = expand_raw(target(digits), count + 4);
        auto hi = expand_raw(target(2 * digits), count + 4);
        std::size_t agree = common_prefix(lo, hi);
        if (agree >= count) {
            lo.resize(count);
            cf.partial_quotients = std::move(lo);
            cf.certified_len = count;
            return cf;
        }
    }
    throw PrecisionFault("continued fraction of " + label + ": certified prefix stayed short");
}

std::vector<Convergent> convergents(const CFExpansion& cf) {
    std::vector<Convergent> out;
    out.reserve(cf.certified_len);
    mpz_class p_prev2 = 0, p_prev1 = 1;
    mpz_class q_prev2 = 1, q_prev1 = 0;
    for (std::size_t i = 0; i < cf.certified_len; ++i) {
        Convergent c;
        c.index = i;
        c.p = cf.partial_quotients[i] * p_prev1 + p_prev2;
        c.q = cf.partial_quotients[i] * q_prev1 + q_prev2;
        p_prev2 = p_prev1;
        p_prev1 = c.p;
        q_prev2 = q_prev1;
        q_prev1 = c.q;
        out.push_back(std::move(c));
    }
    return out;
}

mpz_class max_partial_quotient(const CFExpansion& cf, std::size_t upto) {
    if (upto >= cf.certified_len)
        throw std::invalid_argument("partial quotient index beyond the certified prefix");
    mpz_class m = cf.partial_quotients[0];
    for (std::size_t i = 1; i <= upto; ++i)
        if (cf.partial_quotients[i] > m) m = cf.partial_quotients[i];
    return m;
}

CFStream::CFStream(std::string label, RealProvider target, int start_digits)
    : label_(std::move(label)), target_(std::move(target)), digits_(std::max(start_digits, 32)) {}

void CFStream::ensure_len(std::size_t count) {
    if (cf_.certified_len >= count) return;
    // Re-expansion restarts from scratch, so grow in doubling chunks.
    count = std::max({count, 2 * cf_.certified_len, std::size_t{64}});
    CFExpansion wider = cf_expand(target_, label_, count, digits_);
    // Certification consistency: a re-expansion must reproduce what we
    // already handed out.
    for (std::size_t i = 0; i < cf_.certified_len; ++i)
        if (wider.partial_quotients[i] != cf_.partial_quotients[i])
            throw PrecisionFault("continued fraction of " + label_ +
                                 ": certified prefix changed under re-expansion");
    cf_ = std::move(wider);
    extend_convergents(cf_.certified_len);
}

void CFStream::extend_convergents(std::size_t upto) {
    while (convs_.size() < upto) {
        std::size_t i = convs_.size();
        Convergent c;
        c.index = i;
        if (i == 0) {
            c.p = cf_.partial_quotients[0];
            c.q = 1;
        } else if (i == 1) {
            c.p = cf_.partial_quotients[1] * convs_[0].p + 1;
            c.q = cf_.partial_quotients[1];
        } else {
            c.p = cf_.partial_quotients[i] * convs_[i - 1].p + convs_[i - 2].p;
            c.q = cf_.partial_quotients[i] * convs_[i - 1].q + convs_[i - 2].q;
        }
        convs_.push_back(std::move(c));
    }
}

const mpz_class& CFStream::quotient(std::size_t i) {
    ensure_len(i + 1);
    return cf_.partial_quotients[i];
}

Convergent CFStream::convergent(std::size_t i) {
    ensure_len(i + 1);
    return convs_[i];
}

Convergent CFStream::first_q_exceeding(const mpz_class& bound) {
    if (bound < 1) throw std::invalid_argument("denominator bound must be >= 1");
    // Initial precision guess: enough mantissa to push q past the bound.
    std::size_t bound_digits = mpz_sizeinbase(bound.get_mpz_t(), 10);
    digits_ = std::max<int>(digits_, static_cast<int>(2 * bound_digits) + 30);
    std::size_t i = 0;
    while (true) {
        ensure_len(i + 1);
        for (; i < convs_.size(); ++i)
            if (convs_[i].q > bound) return convs_[i];
        // Need more certified quotients; ensure_len grows via cf_expand,
        // whose precision-doubling loop starts from digits_.
        digits_ *= 2;
        ensure_len(convs_.size() + 32);
    }
}

mpz_class CFStream::max_partial_quotient(std::size_t upto) {
    ensure_len(upto + 1);
    return lucasrep::max_partial_quotient(cf_, upto);
}

long legendre_bound_step(CFStream& target, const mpz_class& window_max, long coeff_num,
                         long coeff_den) {
    if (window_max < 1) throw std::invalid_argument("window bound must be >= 1");
    if (coeff_num <= 0 || coeff_den <= 0) throw std::invalid_argument("coefficient must be positive");
    Convergent past = target.first_q_exceeding(window_max);
    mpz_class max_a = target.max_partial_quotient(past.index);
    max_a += 2;  // worst-case quality 1/((a_{i+1}+2) q_i^2)

    const int digits = std::max(64, static_cast<int>(mpz_sizeinbase(window_max.get_mpz_t(), 10)) + 30);
    CertReal tau = target.target_value(digits);
    CertReal log10 = log(CertReal::from_long(10, digits));
    CertReal rhs = CertReal::from_integer(max_a * window_max, digits) *
                   CertReal::from_ratio(coeff_num, coeff_den, digits) / log10;
    // B^w < rhs with log B = tau * log 10.
    CertReal w = log(rhs) / (tau * log10);
    return static_cast<long>(w.ceil_hi().get_si());
}

RealProvider provider_log2_over_log10() {
    return [](int digits) {
        CertReal two = CertReal::from_long(2, digits + 10);
        CertReal ten = CertReal::from_long(10, digits + 10);
        return log(two) / log(ten);
    };
}

RealProvider provider_log_alpha_over_log10(int k) {
    return [k](int digits) {
        auto root = RootCache::global().get(k, digits + 10);
        CertReal ten = CertReal::from_long(10, digits + 10);
        return log(root->alpha) / log(ten);
    };
}

}  // namespace lucasrep
