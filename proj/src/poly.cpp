#include "conjcert/poly.hpp"

#include "conjcert/error.hpp"

#include <algorithm>
#include <map>

namespace conjcert {

Poly::Poly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!same_field(c.field(), field_))
            throw Error(Errc::DescriptorMismatch, "polynomial coefficient in the wrong field");
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::zero_poly(const FieldPtr& f) { return Poly(f, {}); }

Poly Poly::constant(const FieldPtr& f, const FieldElement& c) { return Poly(f, {c}); }

Poly Poly::identity_x(const FieldPtr& f) { return Poly(f, {zero(f), one(f)}); }

Poly Poly::from_ints(const FieldPtr& f, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(from_int(f, v));
    return Poly(f, std::move(c));
}

const FieldElement& Poly::leading() const {
    if (coeffs_.empty()) throw Error(Errc::InternalAssertion, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero(field_);
    return coeffs_[static_cast<std::size_t>(i)];
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const auto& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || !c.is_one()) out += "(" + c.to_string() + ")";
        if (i >= 1) out += "X";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (!same_field(a.field_, b.field_)) throw Error(Errc::DescriptorMismatch, "polynomial field mismatch");
    std::vector<FieldElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), zero(a.field_));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.coeffs_.size()) c[i] = c[i] + a.coeffs_[i];
        if (i < b.coeffs_.size()) c[i] = c[i] + b.coeffs_[i];
    }
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
    std::vector<FieldElement> c;
    c.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) c.push_back(-x);
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!same_field(a.field_, b.field_)) throw Error(Errc::DescriptorMismatch, "polynomial field mismatch");
    if (a.is_zero() || b.is_zero()) return Poly::zero_poly(a.field_);
    std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Poly(a.field_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (!same_field(a.field_, b.field_)) return false;
    return a.coeffs_ == b.coeffs_;
}

Poly Poly::scaled(const FieldElement& c) const {
    std::vector<FieldElement> r;
    r.reserve(coeffs_.size());
    for (const auto& x : coeffs_) r.push_back(x * c);
    return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "monic normalization of zero polynomial");
    if (is_monic()) return *this;
    return scaled(inv(leading()));
}

FieldElement Poly::evaluate(const FieldElement& x) const {
    FieldElement acc = zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return zero_poly(field_);
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * from_int(field_, static_cast<std::int64_t>(i)));
    return Poly(field_, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    if (!same_field(f.field(), g.field())) throw Error(Errc::DescriptorMismatch, "polynomial field mismatch");
    if (g.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    const FieldPtr& F = f.field();
    std::vector<FieldElement> rem = f.coeffs();
    int dg = g.degree();
    int dr = f.degree();
    if (dr < dg) return {Poly::zero_poly(F), f};
    std::vector<FieldElement> q(static_cast<std::size_t>(dr - dg + 1), zero(F));
    FieldElement lg_inv = inv(g.leading());
    for (int k = dr; k >= dg; --k) {
        FieldElement c = rem[static_cast<std::size_t>(k)] * lg_inv;
        if (c.is_zero()) continue;
        q[static_cast<std::size_t>(k - dg)] = c;
        for (int i = 0; i <= dg; ++i)
            rem[static_cast<std::size_t>(k - dg + i)] =
                rem[static_cast<std::size_t>(k - dg + i)] - c * g.coeff(i);
    }
    return {Poly(F, std::move(q)), Poly(F, std::move(rem))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly poly_pow_mod(const Poly& f, const BigInt& e, const Poly& m) {
    if (e.is_negative()) throw Error(Errc::InternalAssertion, "negative exponent");
    std::vector<bool> bits;
    BigInt cur = e;
    BigInt two(2);
    while (!cur.is_zero()) {
        bits.push_back(cur.odd());
        cur = cur / two;
    }
    Poly acc = Poly::constant(f.field(), one(f.field()));
    Poly base = poly_divmod(f, m).second;
    for (bool bit : bits) {
        if (bit) acc = poly_divmod(acc * base, m).second;
        base = poly_divmod(base * base, m).second;
    }
    return acc;
}

namespace {

// splitmix64; deterministic across platforms
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

Poly pth_root(const Poly& f) {
    // over F_p, c^(1/p) = c; keep coefficients at indices divisible by p
    std::uint64_t p = characteristic(f.field());
    std::vector<FieldElement> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
    return Poly(f.field(), std::move(c));
}

void squarefree_parts(const Poly& f, int mult_scale, std::vector<std::pair<Poly, int>>& out) {
    const FieldPtr& F = f.field();
    std::uint64_t p = characteristic(F);
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_parts(pth_root(f), mult_scale * static_cast<int>(p), out);
        return;
    }
    Poly c = poly_gcd(f, fp);
    Poly w = poly_divmod(f, c).first;
    int i = 1;
    while (!w.is_one()) {
        Poly y = poly_gcd(w, c);
        Poly z = poly_divmod(w, y).first;
        if (!z.is_one()) out.emplace_back(z, i * mult_scale);
        ++i;
        w = std::move(y);
        c = poly_divmod(c, w).first;
    }
    if (!c.is_one()) squarefree_parts(pth_root(c), mult_scale * static_cast<int>(p), out);
}

// products of irreducibles of one degree -> (poly, degree)
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& g0) {
    std::vector<std::pair<Poly, int>> out;
    const FieldPtr& F = g0.field();
    std::uint64_t p = characteristic(F);
    Poly g = g0;
    Poly x = Poly::identity_x(F);
    Poly h = poly_divmod(x, g).second;
    int d = 1;
    while (g.degree() >= 2 * d) {
        h = poly_pow_mod(h, BigInt(static_cast<std::int64_t>(p)), g);
        Poly t = poly_gcd(h - x, g);
        if (!t.is_one()) {
            out.emplace_back(t, d);
            g = poly_divmod(g, t).first;
            h = poly_divmod(h, g).second;
        }
        ++d;
    }
    if (g.degree() > 0) out.emplace_back(g, g.degree());
    return out;
}

bool poly_coeff_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        std::uint64_t ra = a.coeff(i).residue(), rb = b.coeff(i).residue();
        if (ra != rb) return ra < rb;
    }
    return false;
}

// enumerate monic degree-d polynomials in coefficient-lex order and peel
// divisors off h until it is fully split
std::vector<Poly> split_exhaustive(Poly h, int d) {
    const FieldPtr& F = h.field();
    std::uint64_t p = characteristic(F);
    std::vector<Poly> out;
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(d), 0);
    auto build = [&]() {
        std::vector<FieldElement> c;
        for (auto v : digits) c.push_back(from_int(F, static_cast<std::int64_t>(v)));
        c.push_back(one(F));
        return Poly(F, std::move(c));
    };
    while (h.degree() > d) {
        Poly cand = build();
        while (true) {
            auto [q, r] = poly_divmod(h, cand);
            if (r.is_zero()) {
                out.push_back(cand);
                h = q;
            } else {
                break;
            }
        }
        // odometer step
        std::size_t i = 0;
        while (i < digits.size()) {
            if (++digits[i] < p) break;
            digits[i] = 0;
            ++i;
        }
        if (i == digits.size()) break;
    }
    internal_check(h.degree() == d, "exhaustive equal-degree split left a non-irreducible remainder");
    out.push_back(h);
    return out;
}

void split_equal_degree(const Poly& h, int d, SplitMix& rng, bool deterministic, std::vector<Poly>& out) {
    const FieldPtr& F = h.field();
    std::uint64_t p = characteristic(F);
    if (h.degree() == d) {
        out.push_back(h.monic());
        return;
    }
    if (deterministic && p <= 7) {
        auto parts = split_exhaustive(h.monic(), d);
        out.insert(out.end(), parts.begin(), parts.end());
        return;
    }
    BigInt half_order = (BigInt::pow(BigInt(static_cast<std::int64_t>(p)), static_cast<std::uint64_t>(d)) - BigInt(1)) / BigInt(2);
    for (int attempt = 0; attempt < 512; ++attempt) {
        std::vector<FieldElement> rc;
        for (int i = 0; i < h.degree(); ++i)
            rc.push_back(from_int(F, static_cast<std::int64_t>(rng.next() % p)));
        Poly r(F, std::move(rc));
        if (r.degree() < 1) continue;
        Poly t;
        if (p == 2) {
            // trace map r + r^2 + r^4 + ... + r^(2^(d-1)) mod h
            Poly acc = poly_divmod(r, h).second;
            Poly cur = acc;
            for (int i = 1; i < d; ++i) {
                cur = poly_divmod(cur * cur, h).second;
                acc = acc + cur;
            }
            t = poly_gcd(acc, h);
        } else {
            Poly s = poly_pow_mod(r, half_order, h);
            t = poly_gcd(s - Poly::constant(F, one(F)), h);
        }
        if (t.degree() > 0 && t.degree() < h.degree()) {
            split_equal_degree(t, d, rng, deterministic, out);
            split_equal_degree(poly_divmod(h, t).first, d, rng, deterministic, out);
            return;
        }
        if (attempt > 48 && p <= 7) {
            auto parts = split_exhaustive(h.monic(), d);
            out.insert(out.end(), parts.begin(), parts.end());
            return;
        }
    }
    throw Error(Errc::InternalAssertion, "equal-degree splitting failed to find a factor");
}

} // namespace

bool is_irreducible_over_prime_field(const Poly& f) {
    if (f.field()->kind != FieldKind::Prime)
        throw Error(Errc::UnsupportedField, "irreducibility certificate needs a prime field");
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const FieldPtr& F = f.field();
    std::uint64_t p = characteristic(F);
    Poly x = Poly::identity_x(F);
    BigInt pb(static_cast<std::int64_t>(p));
    Poly xq = poly_pow_mod(x, BigInt::pow(pb, static_cast<std::uint64_t>(n)), f);
    if (!(poly_divmod(xq - x, f).second.is_zero())) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool prime = true;
        for (int d2 = 2; d2 * d2 <= l; ++d2)
            if (l % d2 == 0) prime = false;
        if (!prime) continue;
        Poly xe = poly_pow_mod(x, BigInt::pow(pb, static_cast<std::uint64_t>(n / l)), f);
        if (!poly_gcd(xe - x, f).is_one()) return false;
    }
    return true;
}

PolyFactorization factor_over_prime_field(const Poly& f, std::uint64_t seed, bool deterministic) {
    if (f.field()->kind != FieldKind::Prime)
        throw Error(Errc::UnsupportedField, "factorization is implemented over prime fields only");
    if (f.is_zero()) throw Error(Errc::DivisionByZero, "factorization of the zero polynomial");
    const FieldPtr& F = f.field();
    PolyFactorization result;
    result.leading = f.leading();
    if (f.degree() == 0) return result;

    Poly fm = f.monic();
    std::vector<std::pair<Poly, int>> sqf;
    squarefree_parts(fm, 1, sqf);

    SplitMix rng{seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull};
    std::vector<Poly> irreducibles;
    for (const auto& [part, mult] : sqf) {
        (void)mult; // multiplicities recounted below by repeated division
        for (const auto& [prod, d] : distinct_degree(part))
            split_equal_degree(prod, d, rng, deterministic, irreducibles);
    }
    std::sort(irreducibles.begin(), irreducibles.end(), poly_coeff_less);
    irreducibles.erase(std::unique(irreducibles.begin(), irreducibles.end(),
                                   [](const Poly& a, const Poly& b) { return a == b; }),
                       irreducibles.end());

    Poly rest = fm;
    for (const auto& irr : irreducibles) {
        int mult = 0;
        while (true) {
            auto [q, r] = poly_divmod(rest, irr);
            if (!r.is_zero()) break;
            rest = q;
            ++mult;
        }
        internal_check(mult > 0, "irreducible factor does not divide its source");
        internal_check(is_irreducible_over_prime_field(irr), "reported factor fails the distinct-degree certificate");
        result.factors.push_back({irr, mult});
    }
    internal_check(rest.is_one(), "factorization left a nontrivial cofactor");

    Poly check = Poly::constant(F, result.leading);
    for (const auto& pf : result.factors)
        for (int i = 0; i < pf.multiplicity; ++i) check = check * pf.factor;
    internal_check(check == f, "factor product does not reproduce the input");
    return result;
}

} // namespace conjcert
