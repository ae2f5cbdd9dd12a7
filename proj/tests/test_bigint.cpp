#include <doctest.h>

#include "conjcert/bigint.hpp"
#include "conjcert/error.hpp"
#include "helpers.hpp"

#include <string>

using conjcert::BigInt;

namespace {

// Reference divider: binary shift-and-subtract on absolute values. Slow and
// obviously correct; used only to cross-check the production algorithm.
void reference_divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    BigInt ua = a.abs(), ub = b.abs();
    q = BigInt(0);
    r = BigInt(0);
    if (ub.is_zero()) throw conjcert::Error(conjcert::Errc::DivisionByZero, "ref");
    std::size_t bits = ua.bit_length();
    for (std::size_t i = bits; i-- > 0;) {
        r = r + r;
        // extract bit i of ua
        BigInt shifted = ua;
        for (std::size_t k = 0; k < i; ++k) shifted = shifted / BigInt(2);
        if (shifted.odd()) r += BigInt(1);
        q = q + q;
        if (!(r < ub)) {
            r -= ub;
            q += BigInt(1);
        }
    }
    if (a.sign() * b.sign() < 0) q = q.negated();
    if (a.sign() < 0) r = r.negated();
}

BigInt rand_big(std::mt19937_64& rng, int limbs) {
    BigInt v(0);
    for (int i = 0; i < limbs; ++i)
        v = v * BigInt(static_cast<std::int64_t>(1) << 32) + BigInt(static_cast<std::int64_t>(rng() & 0xFFFFFFFFull));
    if (rng() & 1) v = v.negated();
    return v;
}

} // namespace

TEST_CASE("bigint small arithmetic matches int64") {
    auto rng = testutil::make_rng(1);
    for (int iter = 0; iter < 4000; ++iter) {
        std::int64_t x = testutil::rand_int(rng, -1000000, 1000000);
        std::int64_t y = testutil::rand_int(rng, -1000000, 1000000);
        BigInt bx(x), by(y);
        CHECK((bx + by).to_int64() == x + y);
        CHECK((bx - by).to_int64() == x - y);
        CHECK((bx * by).to_int64() == x * y);
        if (y != 0) {
            CHECK((bx / by).to_int64() == x / y);
            CHECK((bx % by).to_int64() == x % y);
        }
        CHECK((bx < by) == (x < y));
        CHECK((bx == by) == (x == y));
    }
}

TEST_CASE("bigint division identity on large operands") {
    auto rng = testutil::make_rng(2);
    for (int iter = 0; iter < 400; ++iter) {
        BigInt a = rand_big(rng, 1 + static_cast<int>(rng() % 8));
        BigInt b = rand_big(rng, 1 + static_cast<int>(rng() % 5));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint division agrees with binary reference") {
    auto rng = testutil::make_rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        BigInt a = rand_big(rng, 1 + static_cast<int>(rng() % 5));
        BigInt b = rand_big(rng, 1 + static_cast<int>(rng() % 3));
        if (b.is_zero()) continue;
        BigInt q1, r1, q2, r2;
        BigInt::divmod(a, b, q1, r1);
        reference_divmod(a, b, q2, r2);
        CHECK(q1 == q2);
        CHECK(r1 == r2);
    }
}

TEST_CASE("bigint division on structured corner operands") {
    // limb patterns chosen to stress quotient-digit estimation (top bits set,
    // borderline carries, the add-back branch)
    const std::uint32_t alphabet[] = {0u, 1u, 2u, 0x7FFFFFFFu, 0x80000000u, 0x80000001u, 0xFFFFFFFEu, 0xFFFFFFFFu};
    const BigInt base = BigInt(1) + BigInt(0xFFFFFFFFll);
    std::vector<BigInt> operands;
    for (auto hi : alphabet)
        for (auto mid : alphabet)
            for (auto lo : alphabet) {
                BigInt v = (BigInt(static_cast<std::int64_t>(hi)) * base + BigInt(static_cast<std::int64_t>(mid))) * base +
                           BigInt(static_cast<std::int64_t>(lo));
                operands.push_back(v);
            }
    auto rng = testutil::make_rng(7);
    for (int iter = 0; iter < 1500; ++iter) {
        const BigInt& a = operands[static_cast<std::size_t>(rng() % operands.size())];
        const BigInt& b = operands[static_cast<std::size_t>(rng() % operands.size())];
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        BigInt q2, r2;
        reference_divmod(a, b, q2, r2);
        CHECK(q == q2);
        CHECK(r == r2);
    }
}

TEST_CASE("bigint decimal round trip") {
    auto rng = testutil::make_rng(4);
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-17).to_string() == "-17");
    CHECK(BigInt::from_string("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK(BigInt::from_string("-000123").to_string() == "-123");
    for (int iter = 0; iter < 200; ++iter) {
        BigInt v = rand_big(rng, 1 + static_cast<int>(rng() % 10));
        CHECK(BigInt::from_string(v.to_string()) == v);
    }
    CHECK_THROWS_AS(BigInt::from_string("12x4"), conjcert::Error);
    CHECK_THROWS_AS(BigInt::from_string(""), conjcert::Error);
}

TEST_CASE("bigint gcd") {
    auto rng = testutil::make_rng(5);
    CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
    CHECK(BigInt::gcd(BigInt(0), BigInt(-6)) == BigInt(6));
    for (int iter = 0; iter < 300; ++iter) {
        std::int64_t x = testutil::rand_int(rng, -100000, 100000);
        std::int64_t y = testutil::rand_int(rng, -100000, 100000);
        std::int64_t g = std::gcd(x, y);
        CHECK(BigInt::gcd(BigInt(x), BigInt(y)) == BigInt(g));
    }
    for (int iter = 0; iter < 50; ++iter) {
        BigInt a = rand_big(rng, 4).abs();
        BigInt b = rand_big(rng, 3).abs();
        if (a.is_zero() || b.is_zero()) continue;
        BigInt g = BigInt::gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        CHECK(BigInt::gcd(a / g, b / g).is_one());
    }
}

TEST_CASE("bigint isqrt and perfect squares") {
    auto rng = testutil::make_rng(6);
    for (int iter = 0; iter < 200; ++iter) {
        BigInt n = rand_big(rng, 1 + static_cast<int>(rng() % 6)).abs();
        BigInt r = BigInt::isqrt(n);
        CHECK(!(n < r * r));
        BigInt r1 = r + BigInt(1);
        CHECK(n < r1 * r1);
        CHECK((r * r).is_perfect_square());
    }
    CHECK(BigInt(49).is_perfect_square());
    CHECK(!BigInt(48).is_perfect_square());
    CHECK(!BigInt(-4).is_perfect_square());
    CHECK(BigInt(0).is_perfect_square());
}

TEST_CASE("bigint pow") {
    CHECK(BigInt::pow(BigInt(3), 0) == BigInt(1));
    CHECK(BigInt::pow(BigInt(2), 70).to_string() == "1180591620717411303424");
    CHECK(BigInt::pow(BigInt(-5), 3) == BigInt(-125));
}
