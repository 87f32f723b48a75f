#pragma once

#include "lucasrep/certreal.hpp"

#include <functional>
#include <string>
#include <vector>

// Certified continued-fraction expansion of irrational targets, exact
// convergents, and the Legendre-criterion bound used when the reduction
// lemma degenerates.
//
// Quotients are certified by dual-precision agreement: the expansion is run
// on plain midpoints at P and 2P digits and only the common prefix is kept.
// A failure shows up as a short certified prefix, never as a silently wrong
// quotient; the test suite re-checks prefixes at 4P.

namespace lucasrep {

// Recomputable target: must deliver a ball with radius <= ~10^{-digits}.
using RealProvider = std::function<CertReal(int digits)>;

struct CFExpansion {
    std::string target;
    std::vector<mpz_class> partial_quotients;
    std::size_t certified_len = 0;  // == partial_quotients.size()
};

struct Convergent {
    std::size_t index = 0;
    mpz_class p, q;
};

CFExpansion cf_expand(const RealProvider& target, const std::string& label, std::size_t count,
                      int start_digits = kPrecisionStartDigits);

std::vector<Convergent> convergents(const CFExpansion& cf);

mpz_class max_partial_quotient(const CFExpansion& cf, std::size_t upto);

// Lazy expansion stream: extends the certified prefix (raising precision as
// needed) so convergents can be pulled until some denominator target is met.
class CFStream {
  public:
    CFStream(std::string label, RealProvider target, int start_digits = kPrecisionStartDigits);

    const std::string& label() const { return label_; }
    std::size_t certified_len() const { return cf_.certified_len; }
    int digits_used() const { return digits_; }

    const mpz_class& quotient(std::size_t i);
    Convergent convergent(std::size_t i);
    // Least-index convergent with q > bound.
    Convergent first_q_exceeding(const mpz_class& bound);
    mpz_class max_partial_quotient(std::size_t upto);

    // Ball for the target itself at the stream's current working precision.
    CertReal target_value(int digits) const { return target_(digits); }

  private:
    void ensure_len(std::size_t count);
    void extend_convergents(std::size_t upto);

    std::string label_;
    RealProvider target_;
    int digits_;
    CFExpansion cf_;
    std::vector<Convergent> convs_;
};

// Bound on the exponent w from the Legendre-criterion fallback: any solution
// obeys  B^w < (max_a + 2) * coefficient * window_max / log 10  with
// B = 10^target, where max_a runs over the partial quotients with
// denominator at most window_max. Returns the ceiling of the bound on w.
long legendre_bound_step(CFStream& target, const mpz_class& window_max, long coeff_num,
                         long coeff_den);

// Ready-made providers.
RealProvider provider_log2_over_log10();
RealProvider provider_log_alpha_over_log10(int k);

}  // namespace lucasrep
