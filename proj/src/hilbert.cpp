#include "conjcert/hilbert.hpp"

#include "conjcert/error.hpp"

#include <algorithm>

namespace conjcert {

bool operator==(const Place& a, const Place& b) {
    return a.at_infinity == b.at_infinity && (a.at_infinity || a.p == b.p);
}

namespace {

constexpr std::uint64_t kFactorBound = 1000000;

// p-adic valuation of a nonzero integer plus its unit cofactor
int valuation(BigInt& n, std::uint64_t p) {
    int v = 0;
    BigInt pb(static_cast<std::int64_t>(p));
    while (true) {
        BigInt q, r;
        BigInt::divmod(n, pb, q, r);
        if (!r.is_zero()) break;
        n = q;
        ++v;
    }
    return v;
}

// primes here can exceed 2^32 (trial-division bound squared), so widen products
std::uint64_t mod_mul_wide(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = mod_mul_wide(acc, b, p);
        b = mod_mul_wide(b, b, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t mod_reduce(const BigInt& n, std::uint64_t p) {
    BigInt r = n % BigInt(static_cast<std::int64_t>(p));
    if (r.is_negative()) r += BigInt(static_cast<std::int64_t>(p));
    return r.to_uint64();
}

// Legendre symbol of a p-unit rational at an odd prime
int legendre_unit(const Rational& u, std::uint64_t p) {
    std::uint64_t num = mod_reduce(u.num(), p);
    std::uint64_t den = mod_reduce(u.den(), p);
    internal_check(num != 0 && den != 0, "legendre of a non-unit");
    std::uint64_t v = mod_mul_wide(num, mod_pow(den, p - 2, p), p);
    return mod_pow(v, (p - 1) / 2, p) == 1 ? 1 : -1;
}

struct TwoAdic {
    int valuation_parity; // 0 or 1
    std::uint64_t unit_mod8;
};

TwoAdic two_adic_class(const Rational& x) {
    BigInt num = x.num().abs();
    BigInt den = x.den();
    int v = valuation(num, 2) - valuation(den, 2);
    std::uint64_t n8 = mod_reduce(num, 8);
    std::uint64_t d8 = mod_reduce(den, 8);
    // odd residues are self-inverse mod 8
    std::uint64_t u = n8 * d8 % 8;
    if (x.sign() < 0) u = (8 - u) % 8;
    return {((v % 2) + 2) % 2, u};
}

// Exhaustive search for a primitive solution of z^2 = a x^2 + b y^2 mod 2^k.
// With coefficients reduced to square-class representatives (valuation <= 1),
// a primitive zero mod 2^6 lifts 2-adically and conversely.
bool primitive_solution_mod_2k(std::int64_t a, std::int64_t b, int k) {
    const std::int64_t mod = std::int64_t(1) << k;
    for (std::int64_t x = 0; x < mod; ++x)
        for (std::int64_t y = 0; y < mod; ++y)
            for (std::int64_t z = 0; z < mod; ++z) {
                if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
                if (((a * x * x + b * y * y - z * z) % mod + mod) % mod == 0) return true;
            }
    return false;
}

std::int64_t square_class_rep_at_2(const Rational& x) {
    TwoAdic c = two_adic_class(x);
    return (c.valuation_parity ? 2 : 1) * static_cast<std::int64_t>(c.unit_mod8);
}

int hilbert_symbol_at_2(const Rational& alpha, const Rational& beta) {
    std::int64_t a = square_class_rep_at_2(alpha);
    std::int64_t b = square_class_rep_at_2(beta);
    return primitive_solution_mod_2k(a, b, 6) ? 1 : -1;
}

int hilbert_symbol_at_odd(const Rational& alpha, const Rational& beta, std::uint64_t p) {
    BigInt an = alpha.num(), ad = alpha.den();
    BigInt bn = beta.num(), bd = beta.den();
    int a = valuation(an, p) - valuation(ad, p);
    int b = valuation(bn, p) - valuation(bd, p);
    Rational u(an, ad); // unit parts
    Rational v(bn, bd);
    int eps_exp = static_cast<int>((p - 1) / 2) % 2;
    int sign = 1;
    if ((a % 2) && (b % 2) && eps_exp) sign = -sign;
    if (b % 2) sign *= legendre_unit(u, p);
    if (a % 2) sign *= legendre_unit(v, p);
    return sign;
}

void collect_odd_primes(const BigInt& n0, std::vector<std::uint64_t>& out) {
    BigInt n = n0.abs();
    if (n.is_zero()) return;
    valuation(n, 2);
    for (std::uint64_t d = 3; d <= kFactorBound && !n.is_one(); d += 2) {
        if (n.fits_int64() && static_cast<std::uint64_t>(n.to_int64()) < d * d) break;
        if (valuation(n, d) > 0) out.push_back(d);
    }
    if (n.is_one()) return;
    // no divisor <= min(kFactorBound, sqrt(n)) remains: n is prime if small enough
    if (n.fits_int64() &&
        static_cast<std::uint64_t>(n.to_int64()) <= kFactorBound * kFactorBound) {
        out.push_back(static_cast<std::uint64_t>(n.to_int64()));
        return;
    }
    throw Error(Errc::UnsupportedField, "numerator/denominator too large to factor by trial division");
}

} // namespace

int hilbert_symbol(const Rational& alpha, const Rational& beta, const Place& place) {
    if (alpha.is_zero() || beta.is_zero())
        throw Error(Errc::DivisionByZero, "hilbert symbol needs nonzero arguments");
    if (place.at_infinity) return (alpha.sign() < 0 && beta.sign() < 0) ? -1 : 1;
    if (place.p == 2) return hilbert_symbol_at_2(alpha, beta);
    return hilbert_symbol_at_odd(alpha, beta, place.p);
}

std::vector<Place> ramifiable_places(const Rational& alpha, const Rational& beta) {
    std::vector<std::uint64_t> primes;
    collect_odd_primes(alpha.num(), primes);
    collect_odd_primes(alpha.den(), primes);
    collect_odd_primes(beta.num(), primes);
    collect_odd_primes(beta.den(), primes);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    std::vector<Place> out;
    out.push_back({true, 0});
    out.push_back({false, 2});
    for (auto p : primes) out.push_back({false, p});
    return out;
}

DivisionReport is_division_quaternion(const Rational& alpha, const Rational& beta) {
    if (alpha.is_zero() || beta.is_zero())
        throw Error(Errc::DivisionByZero, "quaternion parameters must be nonzero");
    DivisionReport report;
    int product = 1;
    for (const auto& place : ramifiable_places(alpha, beta)) {
        int s = hilbert_symbol(alpha, beta, place);
        product *= s;
        if (s < 0) report.ramified.push_back(place);
    }
    internal_check(product == 1, "hilbert symbols violate the product formula");
    report.division = !report.ramified.empty();
    return report;
}

} // namespace conjcert
