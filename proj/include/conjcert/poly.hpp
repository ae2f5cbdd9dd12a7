#pragma once

#include "conjcert/field.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace conjcert {

// Univariate polynomial with coefficients in an exact field, stored in
// ascending degree with a nonzero leading coefficient (empty = zero).
class Poly {
public:
    Poly() = default;
    Poly(FieldPtr field, std::vector<FieldElement> coeffs);

    static Poly zero_poly(const FieldPtr& f);
    static Poly constant(const FieldPtr& f, const FieldElement& c);
    static Poly identity_x(const FieldPtr& f); // the polynomial X
    static Poly from_ints(const FieldPtr& f, const std::vector<std::int64_t>& coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
    const FieldElement& leading() const;
    FieldElement coeff(int i) const; // zero beyond the stored range

    std::string to_string() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);

    Poly scaled(const FieldElement& c) const;
    Poly monic() const;
    FieldElement evaluate(const FieldElement& x) const;
    Poly derivative() const;

private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
    void trim();
};

// Quotient and remainder with deg r < deg g.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);

// Monic greatest common divisor (zero if both inputs are zero).
Poly poly_gcd(const Poly& f, const Poly& g);

// f^e mod m
Poly poly_pow_mod(const Poly& f, const BigInt& e, const Poly& m);

struct PolyFactor {
    Poly factor; // monic irreducible
    int multiplicity;
};

// Factorization over a prime field: leading coefficient times the product of
// monic irreducible powers. Factors are sorted by (degree, coefficients).
// The seed steers the randomized equal-degree splitting; any seed yields the
// same sorted output. deterministic=true forces exhaustive splitting (p <= 7).
struct PolyFactorization {
    FieldElement leading;
    std::vector<PolyFactor> factors;
};
PolyFactorization factor_over_prime_field(const Poly& f, std::uint64_t seed = 1, bool deterministic = false);

// Distinct-degree certificate: X^(p^d) = X mod f and gcd(X^(p^(d/l)) - X, f) = 1
// for every prime l dividing d.
bool is_irreducible_over_prime_field(const Poly& f);

} // namespace conjcert
