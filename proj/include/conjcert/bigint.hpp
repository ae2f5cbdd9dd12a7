#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace conjcert {

// Arbitrary-precision signed integer. Sign-magnitude with base-2^32 limbs,
// little-endian, no trailing zero limbs; sign is 0 exactly for the zero value.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_string(std::string_view s);
    std::string to_string() const;

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }
    bool odd() const { return !mag_.empty() && (mag_[0] & 1u); }

    BigInt abs() const;
    BigInt negated() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a) { return a.negated(); }

    // Quotient truncated toward zero; remainder carries the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    static BigInt gcd(const BigInt& a, const BigInt& b); // nonnegative
    static BigInt pow(const BigInt& base, std::uint64_t e);
    static BigInt isqrt(const BigInt& n); // floor square root, n >= 0
    bool is_perfect_square() const;

    // Number of bits in the magnitude; 0 for the zero value.
    std::size_t bit_length() const;

    bool fits_int64() const;
    std::int64_t to_int64() const;
    std::uint64_t to_uint64() const; // requires 0 <= *this < 2^64

private:
    using Mag = std::vector<std::uint32_t>;

    int sign_ = 0;
    Mag mag_;

    void trim();
    static int cmp_mag(const Mag& a, const Mag& b);
    static Mag add_mag(const Mag& a, const Mag& b);
    static Mag sub_mag(const Mag& a, const Mag& b); // requires a >= b
    static Mag mul_mag(const Mag& a, const Mag& b);
    static void divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r);
    static BigInt from_mag(int sign, Mag m);
};

} // namespace conjcert
