#include <doctest.h>

#include "conjcert/error.hpp"
#include "conjcert/frobenius.hpp"
#include "helpers.hpp"

using namespace conjcert;

namespace {

Mat rand_mat(std::mt19937_64& rng, const FieldPtr& f, int n, std::int64_t bound = 5) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (f->kind == FieldKind::Prime)
                m.at(i, j) = from_int(f, testutil::rand_int(rng, 0, static_cast<std::int64_t>(f->p) - 1));
            else
                m.at(i, j) = from_int(f, testutil::rand_int(rng, -bound, bound));
        }
    return m;
}

void check_decomposition(const Mat& a, const FrobeniusDecomposition& d) {
    REQUIRE(!d.invariant_factors.empty());
    Poly prod = Poly::constant(a.field(), one(a.field()));
    for (std::size_t i = 0; i < d.invariant_factors.size(); ++i) {
        CHECK(d.invariant_factors[i].is_monic());
        if (i + 1 < d.invariant_factors.size())
            CHECK(poly_divmod(d.invariant_factors[i + 1], d.invariant_factors[i]).second.is_zero());
        prod = prod * d.invariant_factors[i];
    }
    CHECK(prod == charpoly(a));
    CHECK(d.invariant_factors.back() == minpoly(a));
    CHECK(d.transform * a == d.block_matrix * d.transform);
    CHECK(!det(d.transform).is_zero());
}

} // namespace

TEST_CASE("cyclic vectors on pinned cases") {
    auto Q = rationals();
    auto c = companion_matrix(Poly::from_ints(Q, {1, 0, 0, 1})); // X^3 + 1
    auto v = cyclic_vector(c);
    REQUIRE(v.has_value());
    CHECK(v->at(0, 0).is_one());
    CHECK(v->at(1, 0).is_zero());
    CHECK(v->at(2, 0).is_zero());

    CHECK(!cyclic_vector(Mat::identity(Q, 2)).has_value());

    auto d = Mat::from_ints(Q, {{1, 0}, {0, 2}});
    auto vd = cyclic_vector(d);
    REQUIRE(vd.has_value());
    CHECK(vd->at(0, 0).is_one());
    CHECK(vd->at(1, 0).is_one());
}

TEST_CASE("frobenius form on pinned cases") {
    auto Q = rationals();

    auto id2 = frobenius_form(Mat::identity(Q, 2));
    REQUIRE(id2.invariant_factors.size() == 2);
    CHECK(id2.invariant_factors[0] == Poly::from_ints(Q, {-1, 1}));
    CHECK(id2.invariant_factors[1] == Poly::from_ints(Q, {-1, 1}));
    CHECK(id2.transform == Mat::identity(Q, 2));

    auto rot = frobenius_form(Mat::from_ints(Q, {{0, -1}, {1, 0}}));
    REQUIRE(rot.invariant_factors.size() == 1);
    CHECK(rot.invariant_factors[0] == Poly::from_ints(Q, {1, 0, 1}));

    auto d3 = frobenius_form(Mat::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    REQUIRE(d3.invariant_factors.size() == 2);
    CHECK(d3.invariant_factors[0] == Poly::from_ints(Q, {-1, 1}));
    CHECK(d3.invariant_factors[1] == Poly::from_ints(Q, {-1, 1}) * Poly::from_ints(Q, {-2, 1}));
    check_decomposition(Mat::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}), d3);
}

TEST_CASE("frobenius invariants on random matrices") {
    auto rng = testutil::make_rng(41);
    for (const auto& f : {rationals(), prime_field(5), prime_field(2)}) {
        for (int iter = 0; iter < 40; ++iter) {
            int n = static_cast<int>(testutil::rand_int(rng, 1, 6));
            Mat a = rand_mat(rng, f, n, 4);
            auto dec = frobenius_form(a);
            check_decomposition(a, dec);
            // determinism
            auto dec2 = frobenius_form(a);
            CHECK(dec.transform == dec2.transform);
            REQUIRE(dec.invariant_factors.size() == dec2.invariant_factors.size());
        }
    }
}

TEST_CASE("invariant factors are transpose invariant") {
    auto rng = testutil::make_rng(42);
    for (const auto& f : {rationals(), prime_field(3)}) {
        for (int iter = 0; iter < 40; ++iter) {
            int n = static_cast<int>(testutil::rand_int(rng, 1, 6));
            Mat a = rand_mat(rng, f, n, 4);
            auto da = frobenius_form(a);
            auto dt = frobenius_form(a.transpose());
            REQUIRE(da.invariant_factors.size() == dt.invariant_factors.size());
            for (std::size_t i = 0; i < da.invariant_factors.size(); ++i)
                CHECK(da.invariant_factors[i] == dt.invariant_factors[i]);
            CHECK(is_cyclic(a) == is_cyclic(a.transpose()));
        }
    }
}

TEST_CASE("frobenius at the upper desk-scale size") {
    auto rng = testutil::make_rng(44);
    auto Q = rationals();
    Mat a(Q, 9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) a.at(i, j) = from_int(Q, testutil::rand_int(rng, -3, 3));
    auto dec = frobenius_form(a);
    check_decomposition(a, dec);
    auto F2 = prime_field(2);
    Mat b(F2, 8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) b.at(i, j) = from_int(F2, testutil::rand_int(rng, 0, 1));
    auto decb = frobenius_form(b);
    check_decomposition(b, decb);
}

TEST_CASE("is_cyclic on pinned cases") {
    auto Q = rationals();
    CHECK(is_cyclic(companion_matrix(Poly::from_ints(Q, {3, 1, 4, 1}))));
    CHECK(!is_cyclic(Mat::identity(Q, 2)));
    CHECK(!is_cyclic(Mat::from_ints(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})));
    CHECK(is_cyclic(Mat::from_ints(Q, {{7}})));
}

TEST_CASE("primary decomposition on pinned cases") {
    auto F5 = prime_field(5);
    auto d = Mat::from_ints(F5, {{1, 0}, {0, 2}});
    auto comps = primary_decomposition(d);
    REQUIRE(comps.size() == 2);
    // canonical factor order is coefficient-lex: X-2 = X+3 before X-1 = X+4
    CHECK(comps[0].prime == Poly::from_ints(F5, {-2, 1}));
    CHECK(comps[0].multiplicity == 1);
    CHECK(comps[0].basis.size() == 1);
    CHECK(comps[1].prime == Poly::from_ints(F5, {-1, 1}));
    CHECK(comps[1].basis.size() == 1);

    auto F2 = prime_field(2);
    auto c = companion_matrix(Poly::from_ints(F2, {1, 0, 1}));
    auto comps2 = primary_decomposition(c);
    REQUIRE(comps2.size() == 1);
    CHECK(comps2[0].prime == Poly::from_ints(F2, {1, 1}));
    CHECK(comps2[0].multiplicity == 2);
    CHECK(comps2[0].basis.size() == 2);

    auto z = Mat(prime_field(7), 3, 3);
    auto comps3 = primary_decomposition(z);
    REQUIRE(comps3.size() == 1);
    CHECK(comps3[0].prime == Poly::from_ints(prime_field(7), {0, 1}));
    CHECK(comps3[0].multiplicity == 1);

    CHECK_THROWS_AS(primary_decomposition(Mat::identity(rationals(), 2)), Error);
}

TEST_CASE("primary dimensions follow the characteristic polynomial") {
    auto rng = testutil::make_rng(43);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        auto f = prime_field(p);
        for (int iter = 0; iter < 30; ++iter) {
            int n = static_cast<int>(testutil::rand_int(rng, 1, 6));
            Mat a = rand_mat(rng, f, n);
            auto comps = primary_decomposition(a);
            auto cfac = factor_over_prime_field(charpoly(a));
            REQUIRE(comps.size() == cfac.factors.size());
            for (std::size_t i = 0; i < comps.size(); ++i) {
                CHECK(comps[i].prime == cfac.factors[i].factor);
                CHECK(static_cast<int>(comps[i].basis.size()) ==
                      cfac.factors[i].multiplicity * comps[i].prime.degree());
            }
        }
    }
}
