#include "lucasrep/lucas.hpp"

#include <stdexcept>
#include <string>

namespace lucasrep {

namespace {

void check_order(int k) {
    if (k < 2) throw std::invalid_argument("sequence order must be >= 2, got " + std::to_string(k));
}

// Seed values for n <= 1.
ExactInt seed(int k, long n) {
    if (n < 2 - static_cast<long>(k))
        throw std::invalid_argument("index " + std::to_string(n) + " below first seed 2-k");
    if (n == 0) return 2;
    if (n == 1) return 1;
    return 0;
}

}  // namespace

KIndex::KIndex(int k_, long n_) : k(k_), n(n_) {
    check_order(k);
    if (n < 2 - static_cast<long>(k))
        throw std::invalid_argument("index " + std::to_string(n) + " below first seed 2-k");
}

Repdigit Repdigit::make(int a, long d) {
    if (a < 1 || a > 9) throw std::invalid_argument("repdigit digit must be 1..9");
    if (d < 1) throw std::invalid_argument("repdigit length must be >= 1");
    Repdigit r;
    r.a = a;
    r.d = d;
    r.value = repdigit_value(a, d);
    return r;
}

LucasWindow::LucasWindow(int k, long start) : k_(k), next_(start) {
    check_order(k);
    if (start < 2 - static_cast<long>(k))
        throw std::invalid_argument("window start below first seed 2-k");
    // Window holds L_{next-k} .. L_{next-1} once next_ >= 2; until then terms
    // come straight from the seeds.
    window_.resize(k_);
    sum_ = 0;
    long base = (start < 2 ? 2 : start);
    for (int i = 0; i < k_; ++i) {
        long idx = base - k_ + i;
        window_[i] = (idx < 2 - static_cast<long>(k_)) ? ExactInt(0) : seed(k_, idx);
        sum_ += window_[i];
    }
    // If start >= 2 we must roll the recurrence forward from L_2.
    if (start > 2) {
        LucasWindow fresh(k_, 2);
        ExactInt t;
        for (long n = 2; n < start; ++n) t = fresh.next();
        *this = fresh;
    }
}

ExactInt LucasWindow::next() {
    if (next_ < 2) {
        ExactInt v = seed(k_, next_);
        ++next_;
        if (next_ == 2) *this = LucasWindow(k_, 2);
        return v;
    }
    ExactInt v = sum_;
    sum_ += v;
    sum_ -= window_[head_];
    window_[head_] = v;
    head_ = (head_ + 1) % window_.size();
    ++next_;
    return v;
}

ExactInt klucas(int k, long n) {
    check_order(k);
    if (n < 2) return seed(k, n);
    LucasWindow w(k, 2);
    ExactInt v;
    for (long i = 2; i <= n; ++i) v = w.next();
    return v;
}

std::vector<ExactInt> klucas_window(int k, long lo, long hi) {
    check_order(k);
    if (lo > hi) throw std::invalid_argument("window bounds out of order");
    if (lo < 2 - static_cast<long>(k))
        throw std::invalid_argument("window start below first seed 2-k");
    std::vector<ExactInt> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    LucasWindow w(k, lo);
    for (long n = lo; n <= hi; ++n) out.push_back(w.next());
    return out;
}

ExactInt closed_form_small(int k, long i) {
    check_order(k);
    if (i < 2 || i > k) throw std::invalid_argument("closed form needs 2 <= i <= k");
    ExactInt v = 3;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(i - 2));
    return v;
}

ExactInt repdigit_value(int a, long d) {
    if (a < 1 || a > 9) throw std::invalid_argument("digit must be 1..9");
    if (d < 1) throw std::invalid_argument("digit count must be >= 1");
    ExactInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), 10, static_cast<unsigned long>(d));
    v -= 1;
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 9);
    v *= a;
    return v;
}

std::optional<Repdigit> as_repdigit(const ExactInt& x) {
    if (x <= 0) throw std::invalid_argument("repdigit test needs x >= 1");
    // Chunked digit extraction: peel 9 decimal digits at a time so the scan
    // is a handful of big-int divisions rather than a string format.
    constexpr unsigned long kChunk = 1000000000UL;  // 10^9
    constexpr unsigned long kRep1 = 111111111UL;    // nine ones
    const int a = static_cast<int>(mpz_fdiv_ui(x.get_mpz_t(), 10));
    if (a == 0) return std::nullopt;  // trailing zero: never a repdigit

    long d = 0;
    ExactInt cur = x;
    while (true) {
        unsigned long c = mpz_fdiv_q_ui(cur.get_mpz_t(), cur.get_mpz_t(), kChunk);
        if (sgn(cur) == 0) {
            // Topmost (possibly partial) chunk: every digit must equal a.
            while (c) {
                if (static_cast<int>(c % 10) != a) return std::nullopt;
                c /= 10;
                ++d;
            }
            break;
        }
        // Interior chunks must be exactly aaaaaaaaa.
        if (c != static_cast<unsigned long>(a) * kRep1) return std::nullopt;
        d += 9;
    }
    Repdigit r;
    r.a = a;
    r.d = d;
    r.value = x;
    return r;
}

long valuation(int p, const ExactInt& x) {
    if (p != 2 && p != 5) throw std::invalid_argument("valuation supports p in {2,5} only");
    if (x <= 0) throw std::invalid_argument("valuation needs x >= 1");
    if (p == 2) return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
    long e = 0;
    ExactInt t = x;
    while (mpz_divisible_ui_p(t.get_mpz_t(), 5)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), 5);
        ++e;
    }
    return e;
}

bool verify_solution(const SolutionRecord& r) {
    if (r.k < 2 || r.a < 1 || r.a > 9 || r.d < 1) return false;
    if (!(r.n >= r.m && r.m >= r.l && r.l >= 0)) return false;
    ExactInt prod = klucas(r.k, r.n) * klucas(r.k, r.m) * klucas(r.k, r.l);
    return prod == repdigit_value(r.a, r.d);
}

}  // namespace lucasrep
