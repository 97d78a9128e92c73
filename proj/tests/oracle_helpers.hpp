#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <homeoforge/scalar.hpp>

#include <random>

namespace oracle {

using homeoforge::Int;
using homeoforge::QuadScalar;
using homeoforge::Rational;

// Sign of a + b*sqrt(d) by shrinking dyadic enclosures of sqrt(d) from integer
// square roots. Never consults QuadScalar::sign's case analysis.
inline int sign_by_interval(const QuadScalar& x) {
    const Rational& a = x.rational_part();
    const Rational& b = x.radical_part();
    if (b.is_zero()) return a.sign();
    for (unsigned k = 16; k <= 4096; k *= 2) {
        Int two_k = 1;
        mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), k);
        Int s;
        Int rad = Int(x.field_d()) * two_k * two_k;
        mpz_sqrt(s.get_mpz_t(), rad.get_mpz_t());
        Rational lo_root(s, two_k), hi_root(s + 1, two_k);
        Rational lo = a + (b.sign() > 0 ? b * lo_root : b * hi_root);
        Rational hi = a + (b.sign() > 0 ? b * hi_root : b * lo_root);
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
    }
    // a + b*sqrt(d) with b != 0 is irrational, hence nonzero; enclosures at
    // 4096 bits decide every value this suite generates.
    throw std::logic_error("sign_by_interval: enclosure failed to separate");
}

inline QuadScalar random_quad(std::mt19937_64& rng, long d = 2, long span = 1000) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    if (b.is_zero()) return QuadScalar(a);
    return QuadScalar(a, b, d);
}

}  // namespace oracle
