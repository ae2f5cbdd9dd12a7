#pragma once

#include "conjcert/rational.hpp"

#include <cstdint>
#include <vector>

namespace conjcert {

// A place of the rationals: the real place or a finite prime.
struct Place {
    bool at_infinity = false;
    std::uint64_t p = 0;
};

bool operator==(const Place& a, const Place& b);

// (alpha, beta)_v: +1 iff z^2 = alpha x^2 + beta y^2 has a nontrivial solution
// over the completion at v. Odd primes use the valuation/Legendre formula; the
// place 2 is decided by exhaustive search for primitive solutions mod 2^6.
int hilbert_symbol(const Rational& alpha, const Rational& beta, const Place& place);

// Places where the symbol can be -1: infinity, 2, and odd primes dividing a
// numerator or denominator. Sorted: infinity, then primes ascending.
std::vector<Place> ramifiable_places(const Rational& alpha, const Rational& beta);

struct DivisionReport {
    bool division = false;
    std::vector<Place> ramified; // places with symbol -1
};

// (alpha, beta / Q) is division iff some place has symbol -1. The product
// formula over all ramifiable places is asserted as a self-check.
DivisionReport is_division_quaternion(const Rational& alpha, const Rational& beta);

} // namespace conjcert
