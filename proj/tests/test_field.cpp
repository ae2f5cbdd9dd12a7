#include <doctest.h>

#include "conjcert/error.hpp"
#include "conjcert/field.hpp"
#include "helpers.hpp"

using namespace conjcert;

namespace {

FieldElement rand_element(std::mt19937_64& rng, const FieldPtr& f) {
    switch (f->kind) {
        case FieldKind::Rationals:
            return make_rational_element(f, Rational(BigInt(testutil::rand_int(rng, -20, 20)),
                                                     BigInt(testutil::rand_int(rng, 1, 12))));
        case FieldKind::Prime:
            return make_prime_element(f, BigInt(testutil::rand_int(rng, 0, static_cast<std::int64_t>(f->p) - 1)));
        case FieldKind::QuadExt:
            return make_quad_element(f, rand_element(rng, f->base), rand_element(rng, f->base));
    }
    return {};
}

} // namespace

TEST_CASE("rational field basics") {
    auto Q = rationals();
    auto half = make_rational_element(Q, Rational(BigInt(1), BigInt(2)));
    auto third = make_rational_element(Q, Rational(BigInt(1), BigInt(3)));
    CHECK((half + third) == make_rational_element(Q, Rational(BigInt(5), BigInt(6))));
    CHECK((half / third) == make_rational_element(Q, Rational(BigInt(3), BigInt(2))));
    CHECK_THROWS_AS(inv(zero(Q)), Error);
}

TEST_CASE("prime field inverse matches residue brute force") {
    auto F7 = prime_field(7);
    // independent oracle: scan all residues for the inverse of 3
    std::uint64_t expect = 0;
    for (std::uint64_t y = 1; y < 7; ++y)
        if (3 * y % 7 == 1) expect = y;
    CHECK(expect == 5);
    CHECK(inv(from_int(F7, 3)).residue() == 5);
    CHECK_THROWS_AS(prime_field(6), Error);
    CHECK_THROWS_AS(inv(zero(F7)), Error);
}

TEST_CASE("quadratic extension arithmetic") {
    auto Q = rationals();
    auto K = quad_ext(Q, from_int(Q, -1)); // Q(i)
    auto a = make_quad_element(K, one(Q), one(Q));                 // 1 + s
    auto b = make_quad_element(K, one(Q), -one(Q));                // 1 - s
    CHECK((a * b) == from_int(K, 2));
    CHECK((a * inv(a)).is_one());
    // alpha must be a nonzero non-square
    CHECK_THROWS_AS(quad_ext(Q, from_int(Q, 4)), Error);
    CHECK_THROWS_AS(quad_ext(Q, zero(Q)), Error);
    CHECK_THROWS_AS(quad_ext(K, one(K)), Error); // no towers
}

TEST_CASE("descriptor mismatch is rejected") {
    auto Q = rationals();
    auto F5 = prime_field(5);
    CHECK_THROWS_AS(one(Q) + one(F5), Error);
    CHECK(same_field(prime_field(5), F5));
    CHECK(!same_field(Q, F5));
}

TEST_CASE("field axioms hold on random triples") {
    auto rng = testutil::make_rng(11);
    std::vector<FieldPtr> fields = {
        rationals(),
        prime_field(7),
        prime_field(2),
        quad_ext(rationals(), from_int(rationals(), -1)),
        quad_ext(prime_field(7), from_int(prime_field(7), 3)),
    };
    for (const auto& f : fields) {
        for (int iter = 0; iter < 200; ++iter) {
            auto x = rand_element(rng, f);
            auto y = rand_element(rng, f);
            auto z = rand_element(rng, f);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x * y) * z == x * (y * z));
            if (!x.is_zero()) CHECK((x * inv(x)).is_one());
        }
    }
}

TEST_CASE("is_square on F_p agrees with exhaustive enumeration") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                            37ull, 41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull,
                            79ull, 83ull, 89ull, 97ull, 101ull}) {
        auto F = prime_field(p);
        std::vector<bool> sq(p, false);
        for (std::uint64_t y = 0; y < p; ++y) sq[y * y % p] = true;
        for (std::uint64_t x = 0; x < p; ++x)
            CHECK(is_square(F, make_prime_element(F, BigInt(static_cast<std::int64_t>(x)))) == sq[x]);
    }
}

TEST_CASE("is_square over the rationals") {
    auto Q = rationals();
    CHECK(is_square(Q, make_rational_element(Q, Rational(BigInt(4), BigInt(9)))));
    CHECK(!is_square(Q, make_rational_element(Q, Rational(BigInt(-4), BigInt(9)))));
    CHECK(!is_square(Q, from_int(Q, 2)));
    CHECK(is_square(Q, zero(Q)));
    auto F7 = prime_field(7);
    CHECK(is_square(F7, from_int(F7, 2)));
    CHECK(!is_square(F7, from_int(F7, 6)));
    auto K = quad_ext(Q, from_int(Q, -1));
    CHECK_THROWS_AS(is_square(K, one(K)), Error);
}

TEST_CASE("rational string round trip") {
    auto rng = testutil::make_rng(12);
    for (int iter = 0; iter < 200; ++iter) {
        Rational r(BigInt(testutil::rand_int(rng, -100000, 100000)), BigInt(testutil::rand_int(rng, 1, 100000)));
        CHECK(Rational::from_string(r.to_string()) == r);
    }
    CHECK(Rational::from_string("6/4") == Rational(BigInt(3), BigInt(2)));
}
