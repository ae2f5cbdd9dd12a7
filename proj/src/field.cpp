#include "conjcert/field.hpp"

#include "conjcert/error.hpp"

namespace conjcert {

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field(), b.field()))
        throw Error(Errc::DescriptorMismatch, "elements live in different fields");
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_p");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = mod_mul(acc, b, p);
        b = mod_mul(b, b, p);
        e >>= 1;
    }
    return acc;
}

bool trial_division_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FieldKind FieldElement::kind() const { return field_->kind; }

bool FieldElement::is_zero() const {
    switch (field_->kind) {
        case FieldKind::Rationals: return rat_.is_zero();
        case FieldKind::Prime: return res_ == 0;
        case FieldKind::QuadExt: return ext_[0].is_zero() && ext_[1].is_zero();
    }
    return false;
}

bool FieldElement::is_one() const {
    switch (field_->kind) {
        case FieldKind::Rationals: return rat_.is_one();
        case FieldKind::Prime: return res_ == 1;
        case FieldKind::QuadExt: return ext_[0].is_one() && ext_[1].is_zero();
    }
    return false;
}

std::string FieldElement::to_string() const {
    switch (field_->kind) {
        case FieldKind::Rationals: return rat_.to_string();
        case FieldKind::Prime: return std::to_string(res_);
        case FieldKind::QuadExt: return ext_[0].to_string() + " + (" + ext_[1].to_string() + ")*s";
    }
    return {};
}

FieldPtr rationals() {
    static const FieldPtr q = std::make_shared<Field>(Field{FieldKind::Rationals, 0, nullptr, {}});
    return q;
}

FieldPtr prime_field(std::uint64_t p) {
    if (p >= (1ull << 31))
        throw Error(Errc::UnsupportedField, "prime exceeds 2^31");
    if (!trial_division_prime(p))
        throw Error(Errc::UnsupportedField, "modulus " + std::to_string(p) + " is not prime");
    return std::make_shared<Field>(Field{FieldKind::Prime, p, nullptr, {}});
}

FieldPtr quad_ext(const FieldPtr& base, const FieldElement& alpha) {
    if (base->kind == FieldKind::QuadExt)
        throw Error(Errc::UnsupportedField, "quadratic extension towers are not supported");
    if (!same_field(base, alpha.field()))
        throw Error(Errc::DescriptorMismatch, "alpha does not live in the base field");
    if (alpha.is_zero())
        throw Error(Errc::UnsupportedField, "alpha must be nonzero");
    if (is_square(base, alpha))
        throw Error(Errc::UnsupportedField, "alpha is a square; the extension is not a field");
    return std::make_shared<Field>(Field{FieldKind::QuadExt, 0, base, alpha});
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case FieldKind::Rationals: return true;
        case FieldKind::Prime: return a->p == b->p;
        case FieldKind::QuadExt: return same_field(a->base, b->base) && a->alpha == b->alpha;
    }
    return false;
}

FieldElement make_rational_element(const FieldPtr& f, Rational v) {
    FieldElement e;
    e.field_ = f;
    e.rat_ = std::move(v);
    return e;
}

FieldElement make_prime_element(const FieldPtr& f, const BigInt& v) {
    FieldElement e;
    e.field_ = f;
    BigInt m = v % BigInt(static_cast<std::int64_t>(f->p));
    if (m.is_negative()) m += BigInt(static_cast<std::int64_t>(f->p));
    e.res_ = m.to_uint64();
    return e;
}

FieldElement make_quad_element(const FieldPtr& f, FieldElement x0, FieldElement x1) {
    if (!same_field(f->base, x0.field()) || !same_field(f->base, x1.field()))
        throw Error(Errc::DescriptorMismatch, "components do not live in the base field");
    FieldElement e;
    e.field_ = f;
    e.ext_.reserve(2);
    e.ext_.push_back(std::move(x0));
    e.ext_.push_back(std::move(x1));
    return e;
}

FieldElement zero(const FieldPtr& f) { return from_int(f, 0); }
FieldElement one(const FieldPtr& f) { return from_int(f, 1); }

FieldElement from_int(const FieldPtr& f, std::int64_t v) {
    switch (f->kind) {
        case FieldKind::Rationals: return make_rational_element(f, Rational(v));
        case FieldKind::Prime: return make_prime_element(f, BigInt(v));
        case FieldKind::QuadExt: return make_quad_element(f, from_int(f->base, v), from_int(f->base, 0));
    }
    throw Error(Errc::UnsupportedField, "unknown field kind");
}

std::uint64_t characteristic(const FieldPtr& f) {
    switch (f->kind) {
        case FieldKind::Rationals: return 0;
        case FieldKind::Prime: return f->p;
        case FieldKind::QuadExt: return characteristic(f->base);
    }
    return 0;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    const FieldPtr& f = a.field_;
    switch (f->kind) {
        case FieldKind::Rationals: return make_rational_element(f, a.rat_ + b.rat_);
        case FieldKind::Prime: {
            FieldElement e;
            e.field_ = f;
            e.res_ = mod_add(a.res_, b.res_, f->p);
            return e;
        }
        case FieldKind::QuadExt:
            return make_quad_element(f, a.ext_[0] + b.ext_[0], a.ext_[1] + b.ext_[1]);
    }
    throw Error(Errc::UnsupportedField, "unknown field kind");
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    const FieldPtr& f = a.field_;
    switch (f->kind) {
        case FieldKind::Rationals: return make_rational_element(f, a.rat_ - b.rat_);
        case FieldKind::Prime: {
            FieldElement e;
            e.field_ = f;
            e.res_ = mod_sub(a.res_, b.res_, f->p);
            return e;
        }
        case FieldKind::QuadExt:
            return make_quad_element(f, a.ext_[0] - b.ext_[0], a.ext_[1] - b.ext_[1]);
    }
    throw Error(Errc::UnsupportedField, "unknown field kind");
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    const FieldPtr& f = a.field_;
    switch (f->kind) {
        case FieldKind::Rationals: return make_rational_element(f, a.rat_ * b.rat_);
        case FieldKind::Prime: {
            FieldElement e;
            e.field_ = f;
            e.res_ = mod_mul(a.res_, b.res_, f->p);
            return e;
        }
        case FieldKind::QuadExt: {
            // (x0 + x1 s)(y0 + y1 s) = x0 y0 + alpha x1 y1 + (x0 y1 + x1 y0) s
            const FieldElement& alpha = f->alpha;
            return make_quad_element(f,
                                     a.ext_[0] * b.ext_[0] + alpha * (a.ext_[1] * b.ext_[1]),
                                     a.ext_[0] * b.ext_[1] + a.ext_[1] * b.ext_[0]);
        }
    }
    throw Error(Errc::UnsupportedField, "unknown field kind");
}

FieldElement inv(const FieldElement& a) {
    const FieldPtr& f = a.field_;
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    switch (f->kind) {
        case FieldKind::Rationals: return make_rational_element(f, a.rat_.inv());
        case FieldKind::Prime: {
            FieldElement e;
            e.field_ = f;
            e.res_ = mod_inv(a.res_, f->p);
            return e;
        }
        case FieldKind::QuadExt: {
            // 1/(x0 + x1 s) = (x0 - x1 s) / (x0^2 - alpha x1^2); the norm is
            // nonzero because alpha is not a square in the base field.
            const FieldElement& alpha = f->alpha;
            FieldElement norm = a.ext_[0] * a.ext_[0] - alpha * (a.ext_[1] * a.ext_[1]);
            internal_check(!norm.is_zero(), "vanishing norm in quadratic extension");
            FieldElement ninv = inv(norm);
            return make_quad_element(f, a.ext_[0] * ninv, -(a.ext_[1] * ninv));
        }
    }
    throw Error(Errc::UnsupportedField, "unknown field kind");
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return a * inv(b);
}

FieldElement operator-(const FieldElement& a) {
    const FieldPtr& f = a.field_;
    switch (f->kind) {
        case FieldKind::Rationals: return make_rational_element(f, -a.rat_);
        case FieldKind::Prime: {
            FieldElement e;
            e.field_ = f;
            e.res_ = a.res_ == 0 ? 0 : f->p - a.res_;
            return e;
        }
        case FieldKind::QuadExt:
            return make_quad_element(f, -a.ext_[0], -a.ext_[1]);
    }
    throw Error(Errc::UnsupportedField, "unknown field kind");
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field_, b.field_)) return false;
    switch (a.field_->kind) {
        case FieldKind::Rationals: return a.rat_ == b.rat_;
        case FieldKind::Prime: return a.res_ == b.res_;
        case FieldKind::QuadExt: return a.ext_[0] == b.ext_[0] && a.ext_[1] == b.ext_[1];
    }
    return false;
}

bool is_square(const FieldPtr& f, const FieldElement& x) {
    if (!same_field(f, x.field()))
        throw Error(Errc::DescriptorMismatch, "element does not live in the given field");
    switch (f->kind) {
        case FieldKind::Rationals: {
            if (x.rat().sign() < 0) return false;
            return x.rat().num().is_perfect_square() && x.rat().den().is_perfect_square();
        }
        case FieldKind::Prime: {
            if (x.residue() == 0) return true;
            if (f->p == 2) return true;
            return mod_pow(x.residue(), (f->p - 1) / 2, f->p) == 1; // Euler criterion
        }
        case FieldKind::QuadExt:
            throw Error(Errc::UnsupportedField, "is_square is not defined on quadratic extensions");
    }
    throw Error(Errc::UnsupportedField, "unknown field kind");
}

} // namespace conjcert
