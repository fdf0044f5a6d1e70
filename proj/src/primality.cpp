#include "primdiv/primality.hpp"

namespace primdiv {

namespace {

// Witness bound from Sorenson & Webster: first twelve primes decide
// primality for all n < 3.317e24.
const char* kDeterministicBound = "3317044064679887385961981";

bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d, long r) {
    Integer x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace

Primality classify_prime(const Integer& n) {
    static const int small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                       41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
    if (n < 2) return Primality::Composite;
    for (int p : small_primes) {
        if (n == p) return Primality::Prime;
        if (n % p == 0) return Primality::Composite;
    }

    Integer d = n - 1;
    long r = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++r;
    }

    static const Integer det_bound(kDeterministicBound);
    if (n < det_bound) {
        for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
            if (miller_rabin_witness(n, a, d, r)) return Primality::Composite;
        return Primality::Prime;
    }

    // Fixed 64 witnesses: deterministic output, probabilistic guarantee.
    Integer a = 2;
    for (int i = 0; i < 64; ++i) {
        if (miller_rabin_witness(n, a, d, r)) return Primality::Composite;
        mpz_nextprime(a.get_mpz_t(), a.get_mpz_t());
    }
    return Primality::ProbablePrime;
}

}  // namespace primdiv
