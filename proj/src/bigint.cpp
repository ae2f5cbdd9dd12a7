#include "conjcert/bigint.hpp"

#include "conjcert/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>

namespace conjcert {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
} // namespace

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    std::uint64_t m = v < 0 ? (~static_cast<std::uint64_t>(v)) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(m));
    if (m >> 32) mag_.push_back(static_cast<std::uint32_t>(m >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt BigInt::from_mag(int sign, Mag m) {
    BigInt r;
    r.sign_ = sign;
    r.mag_ = std::move(m);
    r.trim();
    return r;
}

int BigInt::cmp_mag(const Mag& a, const Mag& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

BigInt::Mag BigInt::add_mag(const Mag& a, const Mag& b) {
    const Mag& lo = a.size() < b.size() ? a : b;
    const Mag& hi = a.size() < b.size() ? b : a;
    Mag r(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(lo[i]) + hi[i] + carry;
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    for (std::size_t i = lo.size(); i < hi.size(); ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(hi[i]) + carry;
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt::Mag BigInt::sub_mag(const Mag& a, const Mag& b) {
    Mag r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt::Mag BigInt::mul_mag(const Mag& a, const Mag& b) {
    if (a.empty() || b.empty()) return {};
    Mag r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t t = ai * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        r[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D with 32-bit digits (Hacker's Delight divmnu layout).
void BigInt::divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r) {
    q.clear();
    r.clear();
    if (v.empty()) throw Error(Errc::DivisionByZero, "integer division by zero");
    if (cmp_mag(u, v) < 0) {
        r = u;
        return;
    }
    const std::size_t n = v.size();
    const std::size_t m = u.size();
    if (n == 1) {
        std::uint64_t d = v[0];
        std::uint64_t rem = 0;
        q.assign(m, 0);
        for (std::size_t i = m; i-- > 0;) {
            std::uint64_t cur = (rem << 32) | u[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    const int s = std::countl_zero(v[n - 1]);
    Mag vn(n);
    for (std::size_t i = n - 1; i > 0; --i)
        vn[i] = (v[i] << s) | (s ? (v[i - 1] >> (32 - s)) : 0);
    vn[0] = v[0] << s;
    Mag un(m + 1);
    un[m] = s ? (u[m - 1] >> (32 - s)) : 0;
    for (std::size_t i = m - 1; i > 0; --i)
        un[i] = (u[i] << s) | (s ? (u[i - 1] >> (32 - s)) : 0);
    un[0] = u[0] << s;

    q.assign(m - n + 1, 0);
    for (std::size_t j = m - n + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= kBase ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }

        std::int64_t k = 0;
        std::int64_t t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i];
            t = static_cast<std::int64_t>(un[i + j]) - k - static_cast<std::int64_t>(p & 0xFFFFFFFFull);
            un[i + j] = static_cast<std::uint32_t>(t);
            k = static_cast<std::int64_t>(p >> 32) - (t >> 32);
        }
        t = static_cast<std::int64_t>(un[j + n]) - k;
        un[j + n] = static_cast<std::uint32_t>(t);

        q[j] = static_cast<std::uint32_t>(qhat);
        if (t < 0) { // qhat was one too large: add divisor back
            --q[j];
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s2 = static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry;
                un[i + j] = static_cast<std::uint32_t>(s2);
                carry = s2 >> 32;
            }
            un[j + n] = static_cast<std::uint32_t>(un[j + n] + carry);
        }
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    r.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = (un[i] >> s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(un[i + 1]) << (32 - s)) : 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    if (a.sign_ == b.sign_) return BigInt::from_mag(a.sign_, BigInt::add_mag(a.mag_, b.mag_));
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) return BigInt::from_mag(a.sign_, BigInt::sub_mag(a.mag_, b.mag_));
    return BigInt::from_mag(b.sign_, BigInt::sub_mag(b.mag_, a.mag_));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    return BigInt::from_mag(a.sign_ * b.sign_, BigInt::mul_mag(a.mag_, b.mag_));
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw Error(Errc::DivisionByZero, "integer division by zero");
    Mag qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q = from_mag(a.sign_ * b.sign_, std::move(qm));
    r = from_mag(a.sign_, std::move(rm));
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) { *this = *this + o; return *this; }
BigInt& BigInt::operator-=(const BigInt& o) { *this = *this - o; return *this; }
BigInt& BigInt::operator*=(const BigInt& o) { *this = *this * o; return *this; }

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_) * a.sign_;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::negated() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs();
    BigInt y = b.abs();
    while (!y.is_zero()) {
        BigInt r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

BigInt BigInt::pow(const BigInt& base, std::uint64_t e) {
    BigInt acc(1);
    BigInt b = base;
    while (e) {
        if (e & 1) acc *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return acc;
}

std::size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    return 32 * (mag_.size() - 1) + (32 - std::countl_zero(mag_.back()));
}

BigInt BigInt::isqrt(const BigInt& n) {
    if (n.sign_ < 0) throw Error(Errc::InternalAssertion, "isqrt of negative value");
    if (n.sign_ == 0) return BigInt();
    if (n.bit_length() <= 52) { // exact in double precision
        std::int64_t v = n.to_int64();
        auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        return BigInt(r);
    }
    // Newton iteration from an overestimate; monotone decrease to the floor.
    BigInt x(1);
    std::size_t half = (n.bit_length() + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) x += x; // x = 2^ceil(bits/2) >= sqrt(n)
    BigInt two(2);
    while (true) {
        BigInt next = (x + n / x) / two;
        if (!(next < x)) break;
        x = std::move(next);
    }
    return x;
}

bool BigInt::is_perfect_square() const {
    if (sign_ < 0) return false;
    if (sign_ == 0) return true;
    BigInt r = isqrt(*this);
    return r * r == *this;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t m = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return m <= static_cast<std::uint64_t>(INT64_MAX);
    return m <= static_cast<std::uint64_t>(INT64_MAX) + 1;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw Error(Errc::InternalAssertion, "BigInt out of int64 range");
    std::uint64_t m = 0;
    if (!mag_.empty()) m = mag_[0];
    if (mag_.size() > 1) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return sign_ < 0 ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
}

std::uint64_t BigInt::to_uint64() const {
    if (sign_ < 0 || mag_.size() > 2) throw Error(Errc::InternalAssertion, "BigInt out of uint64 range");
    std::uint64_t m = 0;
    if (!mag_.empty()) m = mag_[0];
    if (mag_.size() > 1) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return m;
}

BigInt BigInt::from_string(std::string_view s) {
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i >= s.size()) throw Error(Errc::ParseError, "empty integer literal");
    static constexpr std::int64_t pow10[10] = {1, 10, 100, 1000, 10000, 100000, 1000000, 10000000, 100000000, 1000000000};
    BigInt r;
    while (i < s.size()) {
        std::size_t take = std::min<std::size_t>(9, s.size() - i);
        std::uint32_t v = 0;
        for (std::size_t k = 0; k < take; ++k) {
            char c = s[i + k];
            if (c < '0' || c > '9') throw Error(Errc::ParseError, "invalid digit in integer literal");
            v = v * 10 + static_cast<std::uint32_t>(c - '0');
        }
        r = r * BigInt(pow10[take]) + BigInt(v);
        i += take;
    }
    if (neg) r.sign_ = -r.sign_;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    Mag cur = mag_;
    std::vector<std::uint32_t> chunks; // base 10^9, little-endian
    while (!cur.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            std::uint64_t v = (rem << 32) | cur[i];
            cur[i] = static_cast<std::uint32_t>(v / 1000000000u);
            rem = v % 1000000000u;
        }
        chunks.push_back(static_cast<std::uint32_t>(rem));
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
    }
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}


} // namespace conjcert
