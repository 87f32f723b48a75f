#pragma once

#include "lucasrep/certreal.hpp"
#include "lucasrep/lucas.hpp"

#include <vector>

// The explicit bound chain: a lower-bound exponent for linear forms in
// logarithms, the closed-form bounds on l, m, n it yields, and the large-k
// contradiction machinery.

namespace lucasrep {

// Parameters of one lower-bound instance: t logarithms over a field of
// degree dK, coefficient bound B, height parameters A_i (nats).
struct MatveevInstance {
    int t = 0;
    long dK = 1;
    mpz_class B;
    std::vector<CertReal> A;
};

// The positive magnitude E with |Lambda| > exp(-E):
//   E = 1.4 * 30^{t+3} * t^{4.5} * dK^2 (1 + log dK)(1 + log B) * A_1...A_t.
CertReal matveev_exponent(const MatveevInstance& inst, int digits = 64);

// l < 2.3e13 k^4 log^2 k log 3n, rounded outward.
mpz_class bound_l(int k, const mpz_class& n, int digits = 64);
// m < 2.2e25 k^8 log^3 k log^2 3n.
mpz_class bound_m(int k, const mpz_class& n, int digits = 64);
// n < 1.8e45 k^12 log^7 k.
mpz_class bound_n(long long k, int digits = 64);

// x/(log x)^s < T implies x < 2^s T (log T)^s, for T > (4 s^2)^s.
CertReal guzman_envelope(int s, const CertReal& T);

// Per-variable search window for d: (n-3)/5 < d < n+2, returned as the
// inclusive integer range {d_min..d_max}.
std::pair<long, long> d_window(long n, long m, long l);

// The large-k chain: assembles k < C log k with C from the form
// |2^{-(n+m+l-6)} 10^d 3^{-5} a - 1|, iterates the fixed point and reports
// the milestone bounds.
struct KLargeChain {
    CertReal coeff;          // assembled constant, ~1.63e14
    long long fixed_point;   // smallest k-scale stable point of k = C log k
    long long k_bound;       // milestone bound, 6e15
    mpz_class n_bound;       // bound_n at k_bound, < 3.3e245
};
KLargeChain bound_k_large();

// Exhaustive treatment of the regime n <= k, where every term in play has
// the closed form 3*2^{i-2} (or is a seed). Confirms there is no solution
// with d >= 2.
struct NleKRecord {
    long n_cap = 0;          // indices searched up to this bound
    long sum_cap = 0;        // n+m+l bound forced by the 2-adic argument
    ExactInt boundary_L9;    // max possible term value at index 9
    std::size_t cells = 0;
    std::vector<SolutionRecord> solutions;  // expected empty
};
NleKRecord case_n_le_k();

}  // namespace lucasrep
