#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

// Exact arithmetic for k-generalized Lucas sequences, repdigit recognition
// and the 2-/5-adic valuations used to prune searches.
//
// The order-k sequence is defined by
//   L_n = L_{n-1} + ... + L_{n-k}   for n >= 2,
// with seeds L_0 = 2, L_1 = 1 and L_{2-k} = ... = L_{-1} = 0.

namespace lucasrep {

using ExactInt = mpz_class;

// Validated (order, index) pair. Indices below 2-k do not exist.
struct KIndex {
    int k;
    long n;
    KIndex(int k_, long n_);
};

// A number whose decimal expansion repeats a single digit `a`, d times.
struct Repdigit {
    int a = 0;   // leading digit, 1..9
    long d = 0;  // digit count, >= 1
    ExactInt value;

    static Repdigit make(int a, long d);
};

// A claimed solution of L_n * L_m * L_l = a * (10^d - 1) / 9.
struct SolutionRecord {
    int k = 0;
    long n = 0, m = 0, l = 0;
    int a = 0;
    long d = 0;

    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
    friend auto operator<=>(const SolutionRecord&, const SolutionRecord&) = default;
};

// Streaming generator: keeps a window of the k trailing terms and a running
// window sum, so each step costs one big-int add and one subtract.
class LucasWindow {
  public:
    LucasWindow(int k, long start);

    long index() const { return next_; }

    // Term at the current index; advances by one.
    ExactInt next();

  private:
    int k_;
    long next_;
    std::vector<ExactInt> window_;  // trailing k terms, ring buffer
    std::size_t head_ = 0;
    ExactInt sum_;
};

// Exact term value. Rejects k < 2 and n < 2-k.
ExactInt klucas(int k, long n);

// Terms lo..hi inclusive.
std::vector<ExactInt> klucas_window(int k, long lo, long hi);

// L_i = 3 * 2^(i-2), valid for 2 <= i <= k.
ExactInt closed_form_small(int k, long i);

// Some(a, d) iff every decimal digit of x equals a. Rejects x <= 0.
std::optional<Repdigit> as_repdigit(const ExactInt& x);

// Largest e with p^e | x, for p in {2, 5} only. Rejects x <= 0.
long valuation(int p, const ExactInt& x);

// Exact check of the defining equation for a candidate tuple.
bool verify_solution(const SolutionRecord& r);

// a * (10^d - 1) / 9.
ExactInt repdigit_value(int a, long d);

}  // namespace lucasrep
