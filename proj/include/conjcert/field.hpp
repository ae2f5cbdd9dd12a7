#pragma once

#include "conjcert/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace conjcert {

struct Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldKind { Rationals, Prime, QuadExt };

// Element of an exact field: the rationals, a prime field F_p, or a quadratic
// extension F(sqrt(alpha)). Elements are combinable only when their field
// descriptors agree.
class FieldElement {
public:
    FieldElement() = default;

    const FieldPtr& field() const { return field_; }
    FieldKind kind() const;

    bool is_zero() const;
    bool is_one() const;

    // Rationals payload
    const Rational& rat() const { return rat_; }
    // Prime-field payload, residue in [0, p)
    std::uint64_t residue() const { return res_; }
    // QuadExt payload: x0 + x1*sqrt(alpha)
    const FieldElement& ext0() const { return ext_[0]; }
    const FieldElement& ext1() const { return ext_[1]; }

    std::string to_string() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend FieldElement inv(const FieldElement& a);

    friend FieldElement make_rational_element(const FieldPtr& f, Rational v);
    friend FieldElement make_prime_element(const FieldPtr& f, const BigInt& v);
    friend FieldElement make_quad_element(const FieldPtr& f, FieldElement x0, FieldElement x1);

private:
    FieldPtr field_;
    Rational rat_;
    std::uint64_t res_ = 0;
    std::vector<FieldElement> ext_; // size 2 when kind == QuadExt
};

// Immutable field descriptor; share via FieldPtr.
struct Field {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0;     // Prime
    FieldPtr base;           // QuadExt
    FieldElement alpha;      // QuadExt: nonzero non-square in base
};

FieldPtr rationals();
FieldPtr prime_field(std::uint64_t p);
FieldPtr quad_ext(const FieldPtr& base, const FieldElement& alpha);

bool same_field(const FieldPtr& a, const FieldPtr& b);

FieldElement zero(const FieldPtr& f);
FieldElement one(const FieldPtr& f);
FieldElement from_int(const FieldPtr& f, std::int64_t v);
FieldElement make_rational_element(const FieldPtr& f, Rational v);
FieldElement make_prime_element(const FieldPtr& f, const BigInt& v);
FieldElement make_quad_element(const FieldPtr& f, FieldElement x0, FieldElement x1);

// p for prime fields (and quadratic extensions of them), 0 in characteristic 0.
std::uint64_t characteristic(const FieldPtr& f);

// Defined for the rationals and prime fields; QuadExt inputs are rejected.
bool is_square(const FieldPtr& f, const FieldElement& x);

} // namespace conjcert
