#pragma once

#include "lucasrep/certreal.hpp"

#include <map>
#include <memory>
#include <mutex>

// Certified computation of the dominant root alpha(k) of
//   Psi_k(x) = x^k - x^{k-1} - ... - x - 1,
// of the weight f_k(alpha) = (alpha-1)/(2+(k+1)(alpha-2)), and of the
// closed-form logarithmic-height budgets the bound chain consumes.

namespace lucasrep {

struct DominantRoot {
    int k = 0;
    int requested_digits = 0;
    CertReal alpha;
    CertReal fk_alpha;
    CertReal two_alpha_minus_one;
};

// Psi_k(x) through the telescoped form (x^k (x-2) + 1) / (x - 1).
// Signals if x's ball contains 1.
CertReal psi_eval(int k, const CertReal& x);

// Numerator of the telescoped form; shares its roots > 1 with Psi_k.
CertReal psi_numerator(int k, const CertReal& x);

// Isolates alpha(k) in (2(1-2^{-k}), 2) by bisection, polishes with Newton
// steps, and certifies the result with a sign-change bracket. The returned
// ball radius is at most 10^{-precision_digits} (and also below the width
// of the containing interval, which shrinks like 2^{-k}).
DominantRoot dominant_root(int k, int precision_digits);

// Certified |L_n^{(k)} - f_k(alpha)(2 alpha - 1) alpha^{n-1}|.
CertReal approx_defect(int k, long n, const DominantRoot& root);

// Closed-form height budget, in nats, for the third logarithm of each
// linear form: 17 log k / 14 log k + l log 2 / 10 log k + 2m log 2.
struct HeightBudget {
    int lambda_case = 0;
    CertReal bound;
};
HeightBudget height_eta3(int lambda_case, int k, long l, long m, int a);

// Monotone per-k cache: a request is served from cache whenever a root with
// at least the requested precision is already known.
class RootCache {
  public:
    std::shared_ptr<const DominantRoot> get(int k, int digits);
    static RootCache& global();

  private:
    std::mutex mu_;
    std::map<int, std::shared_ptr<const DominantRoot>> roots_;
};

}  // namespace lucasrep
