#include <doctest.h>

#include "conjcert/error.hpp"
#include "conjcert/matrix.hpp"
#include "conjcert/poly.hpp"
#include "helpers.hpp"

using namespace conjcert;

namespace {

Poly rand_poly(std::mt19937_64& rng, const FieldPtr& f, int max_deg) {
    int d = static_cast<int>(testutil::rand_int(rng, 0, max_deg));
    std::vector<FieldElement> c;
    for (int i = 0; i <= d; ++i) {
        if (f->kind == FieldKind::Prime)
            c.push_back(from_int(f, testutil::rand_int(rng, 0, static_cast<std::int64_t>(f->p) - 1)));
        else
            c.push_back(from_int(f, testutil::rand_int(rng, -9, 9)));
    }
    return Poly(f, std::move(c));
}

} // namespace

TEST_CASE("poly divmod and monic") {
    auto Q = rationals();
    auto f = Poly::from_ints(Q, {-1, 0, 1}); // X^2 - 1
    auto g = Poly::from_ints(Q, {-1, 1});    // X - 1
    auto [q, r] = poly_divmod(f, g);
    CHECK(q == Poly::from_ints(Q, {1, 1}));
    CHECK(r.is_zero());
    CHECK(Poly::from_ints(Q, {2, 2}).monic() == Poly::from_ints(Q, {1, 1}));
    CHECK_THROWS_AS(poly_divmod(f, Poly::zero_poly(Q)), Error);
}

TEST_CASE("poly euclidean property on random pairs") {
    auto rng = testutil::make_rng(21);
    for (const auto& f : {rationals(), prime_field(7)}) {
        for (int iter = 0; iter < 150; ++iter) {
            Poly a = rand_poly(rng, f, 12);
            Poly b = rand_poly(rng, f, 12);
            if (b.is_zero()) continue;
            auto [q, r] = poly_divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("poly gcd") {
    auto Q = rationals();
    CHECK(poly_gcd(Poly::from_ints(Q, {-1, 0, 1}), Poly::from_ints(Q, {-1, 1})) == Poly::from_ints(Q, {-1, 1}));
    CHECK(poly_gcd(Poly::from_ints(Q, {1, 0, 1}), Poly::from_ints(Q, {-1, 0, 1})).is_one());
    auto F2 = prime_field(2);
    // X^2+1 = (X+1)^2 in characteristic 2
    CHECK(poly_gcd(Poly::from_ints(F2, {1, 0, 1}), Poly::from_ints(F2, {1, 1})) == Poly::from_ints(F2, {1, 1}));
    // gcd divides both; common divisors divide the gcd
    auto rng = testutil::make_rng(22);
    for (int iter = 0; iter < 80; ++iter) {
        Poly a = rand_poly(rng, Q, 6), b = rand_poly(rng, Q, 6), c = rand_poly(rng, Q, 3);
        Poly ac = a * c, bc = b * c;
        if (ac.is_zero() || bc.is_zero() || c.is_zero()) continue;
        Poly g = poly_gcd(ac, bc);
        CHECK(poly_divmod(ac, g).second.is_zero());
        CHECK(poly_divmod(bc, g).second.is_zero());
        CHECK(poly_divmod(g, poly_gcd(g, c)).second.is_zero());
    }
}

TEST_CASE("poly evaluation at a matrix") {
    auto Q = rationals();
    auto a = Mat::from_ints(Q, {{0, -1}, {1, 0}});
    auto f = Poly::from_ints(Q, {1, 0, 1}); // X^2 + 1
    CHECK(eval_poly_at_matrix(f, a).is_zero());
}

TEST_CASE("factorization over small prime fields") {
    auto F5 = prime_field(5);
    auto f = Poly::from_ints(F5, {1, 0, 1}); // X^2 + 1 = (X+2)(X+3) mod 5
    // oracle: the roots are the residues with r^2 = -1
    std::vector<std::int64_t> roots;
    for (std::int64_t r = 0; r < 5; ++r)
        if ((r * r + 1) % 5 == 0) roots.push_back(r);
    CHECK(roots == std::vector<std::int64_t>{2, 3});
    auto fac = factor_over_prime_field(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].factor == Poly::from_ints(F5, {2, 1})); // X+2 = X-3
    CHECK(fac.factors[1].factor == Poly::from_ints(F5, {3, 1})); // X+3 = X-2
    CHECK(fac.factors[0].multiplicity == 1);

    auto F3 = prime_field(3);
    auto g = Poly::from_ints(F3, {1, 0, 1});
    auto gfac = factor_over_prime_field(g);
    REQUIRE(gfac.factors.size() == 1);
    CHECK(gfac.factors[0].factor == g);
    CHECK(is_irreducible_over_prime_field(g));

    auto F7 = prime_field(7);
    auto h = Poly::from_ints(F7, {0, 0, 1}); // X^2
    auto hfac = factor_over_prime_field(h);
    REQUIRE(hfac.factors.size() == 1);
    CHECK(hfac.factors[0].factor == Poly::from_ints(F7, {0, 1}));
    CHECK(hfac.factors[0].multiplicity == 2);

    CHECK_THROWS_AS(factor_over_prime_field(Poly::from_ints(rationals(), {1, 1})), Error);
}

TEST_CASE("factorization reassembles and certifies on random inputs") {
    auto rng = testutil::make_rng(23);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 101ull}) {
        auto F = prime_field(p);
        for (int iter = 0; iter < 100; ++iter) {
            Poly f = rand_poly(rng, F, 8);
            if (f.is_zero()) continue;
            auto fac = factor_over_prime_field(f, /*seed=*/iter + 1);
            Poly check = Poly::constant(F, fac.leading);
            for (const auto& pf : fac.factors) {
                CHECK(pf.factor.is_monic());
                for (int i = 0; i < pf.multiplicity; ++i) check = check * pf.factor;
                // low-degree irreducibles have no roots
                if (pf.factor.degree() >= 2 && pf.factor.degree() <= 3) {
                    for (std::uint64_t r = 0; r < p; ++r)
                        CHECK(!pf.factor.evaluate(from_int(F, static_cast<std::int64_t>(r))).is_zero());
                }
            }
            CHECK(check == f);
        }
    }
}

TEST_CASE("deterministic exhaustive splitting matches randomized") {
    auto rng = testutil::make_rng(24);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        auto F = prime_field(p);
        for (int iter = 0; iter < 25; ++iter) {
            Poly f = rand_poly(rng, F, 6);
            if (f.is_zero()) continue;
            auto a = factor_over_prime_field(f, 1, false);
            auto b = factor_over_prime_field(f, 99, true);
            REQUIRE(a.factors.size() == b.factors.size());
            for (std::size_t i = 0; i < a.factors.size(); ++i) {
                CHECK(a.factors[i].factor == b.factors[i].factor);
                CHECK(a.factors[i].multiplicity == b.factors[i].multiplicity);
            }
        }
    }
}

TEST_CASE("companion matrices") {
    auto Q = rationals();
    auto f = Poly::from_ints(Q, {1, 0, 1});
    auto c = companion_matrix(f);
    CHECK(c == Mat::from_ints(Q, {{0, -1}, {1, 0}}));
    CHECK(companion_matrix(Poly::from_ints(Q, {-5, 1})) == Mat::from_ints(Q, {{5}}));
    auto x3 = companion_matrix(Poly::from_ints(Q, {0, 0, 0, 1}));
    CHECK(x3 == Mat::from_ints(Q, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
    CHECK_THROWS_AS(companion_matrix(Poly::from_ints(Q, {1, 2})), Error);

    auto rng = testutil::make_rng(25);
    for (int iter = 0; iter < 40; ++iter) {
        Poly g = rand_poly(rng, Q, 5);
        if (g.degree() < 1) continue;
        g = g.monic();
        Mat cm = companion_matrix(g);
        CHECK(eval_poly_at_matrix(g, cm).is_zero());
        CHECK(charpoly(cm) == g);
    }
}
