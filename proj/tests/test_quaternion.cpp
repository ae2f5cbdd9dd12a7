#include <doctest.h>

#include "conjcert/error.hpp"
#include "conjcert/quaternion.hpp"
#include "helpers.hpp"

using namespace conjcert;

namespace {

QuaternionAlgebraPtr hamilton() {
    auto Q = rationals();
    return quaternion_algebra(Q, from_int(Q, -1), from_int(Q, -1));
}

Quaternion rand_quat(std::mt19937_64& rng, const QuaternionAlgebraPtr& alg, std::int64_t bound = 5) {
    auto mk = [&]() { return from_int(alg->base, testutil::rand_int(rng, -bound, bound)); };
    return Quaternion(alg, mk(), mk(), mk(), mk());
}

} // namespace

TEST_CASE("quaternion multiplication table") {
    auto D = hamilton();
    auto i = Quaternion::unit(D, 1), j = Quaternion::unit(D, 2), k = Quaternion::unit(D, 3);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == -Quaternion::one_q(D));
    CHECK(k * k == -Quaternion::one_q(D));
    CHECK(gamma_conj(i) == -i);
    // j i j^-1 = -i
    CHECK(j * i * quat_inverse(j) == -i);
}

TEST_CASE("reduced norm and trace closed forms") {
    auto D = hamilton();
    auto Q = rationals();
    Quaternion x(D, one(Q), one(Q), one(Q), one(Q)); // 1+i+j+k
    CHECK(quat_reduced_norm(x) == from_int(Q, 4));
    CHECK(quat_reduced_trace(x) == from_int(Q, 2));
    CHECK((x * quat_inverse(x)).is_one());
    CHECK_THROWS_AS(quat_inverse(Quaternion::zero_q(D)), Error);

    auto rng = testutil::make_rng(61);
    for (int iter = 0; iter < 100; ++iter) {
        Quaternion a = rand_quat(rng, D), b = rand_quat(rng, D);
        CHECK(quat_reduced_norm(a * b) == quat_reduced_norm(a) * quat_reduced_norm(b));
        CHECK(gamma_conj(a * b) == gamma_conj(b) * gamma_conj(a));
        CHECK(gamma_conj(gamma_conj(a)) == a);
    }
}

TEST_CASE("gamma is the identity exactly on the center") {
    auto D = hamilton();
    auto rng = testutil::make_rng(62);
    for (int iter = 0; iter < 50; ++iter) {
        Quaternion a = rand_quat(rng, D);
        bool fixed = gamma_conj(a) == a;
        bool central = a.coord(1).is_zero() && a.coord(2).is_zero() && a.coord(3).is_zero();
        CHECK(fixed == central);
    }
}

TEST_CASE("split embedding is an algebra homomorphism") {
    auto D = hamilton();
    auto Q = rationals();
    CHECK(split_embedding(Quaternion::one_q(D)) == Mat::identity(D->splitting, 2));
    auto phi_i = split_embedding(Quaternion::unit(D, 1));
    CHECK(det(phi_i) == one(D->splitting)); // det diag(s, -s) = -alpha = 1
    CHECK(phi_i.at(0, 0) == make_quad_element(D->splitting, zero(Q), one(Q)));

    auto rng = testutil::make_rng(63);
    for (int iter = 0; iter < 200; ++iter) {
        Quaternion a = rand_quat(rng, D), b = rand_quat(rng, D);
        CHECK(split_embedding(a * b) == split_embedding(a) * split_embedding(b));
        CHECK(split_embedding(a + b) == split_embedding(a) + split_embedding(b));
        // det of the embedding is the reduced norm, inside the base field
        FieldElement d = det(split_embedding(a));
        CHECK(d.ext1().is_zero());
        CHECK(d.ext0() == quat_reduced_norm(a));
        CHECK(split_pullback(D, split_embedding(a)) == a);
    }
}

TEST_CASE("algebra constructor validation") {
    auto Q = rationals();
    CHECK_THROWS_AS(quaternion_algebra(Q, from_int(Q, 4), from_int(Q, -1)), Error);  // square alpha
    CHECK_THROWS_AS(quaternion_algebra(Q, zero(Q), one(Q)), Error);                  // zero alpha
    CHECK_THROWS_AS(quaternion_algebra(prime_field(2), from_int(prime_field(2), 1), from_int(prime_field(2), 1)), Error);
    // split (non-division) presentations are allowed as long as alpha is a non-square
    auto split_alg = quaternion_algebra(Q, from_int(Q, 2), from_int(Q, -1));
    CHECK(split_alg->beta == from_int(Q, -1));
    // over F_7: 3 is not a square
    auto F7 = prime_field(7);
    auto alg7 = quaternion_algebra(F7, from_int(F7, 3), from_int(F7, 1));
    auto i7 = Quaternion::unit(alg7, 1);
    CHECK(quat_reduced_norm(i7) == from_int(F7, -3));
}

TEST_CASE("csa elements over M_n(D)") {
    auto D = hamilton();
    auto alg = matquat_algebra(D, 2);
    CHECK(reduced_degree(alg) == 4);
    CHECK(f_dimension(alg) == 16);

    auto id = CsaElement::identity(alg);
    CHECK(reduced_norm(id).is_one());

    // M_1(D): reduced norm of i is 1 for (-1,-1/Q)
    auto alg1 = matquat_algebra(D, 1);
    auto i_elem = CsaElement::from_quats(alg1, {Quaternion::unit(D, 1)});
    CHECK(reduced_norm(i_elem).is_one());

    auto rng = testutil::make_rng(64);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<Quaternion> ea, eb;
        for (int c = 0; c < 4; ++c) {
            ea.push_back(rand_quat(rng, D, 3));
            eb.push_back(rand_quat(rng, D, 3));
        }
        auto a = CsaElement::from_quats(alg, ea);
        auto b = CsaElement::from_quats(alg, eb);
        CHECK(reduced_norm(a * b) == reduced_norm(a) * reduced_norm(b));
        CHECK(split_matrix(a * b) == split_matrix(a) * split_matrix(b));
        if (!reduced_norm(a).is_zero()) {
            auto ainv = csa_inverse(a);
            CHECK(a * ainv == CsaElement::identity(alg));
            CHECK(ainv * a == CsaElement::identity(alg));
        }
        // coords round trip
        CHECK(CsaElement::from_coords(alg, a.coords()) == a);
    }
}

TEST_CASE("csa basis elements multiply like matrix units") {
    auto Q = rationals();
    auto alg = matf_algebra(Q, 2);
    auto e01 = CsaElement::basis_element(alg, 1); // E_{01}
    auto e10 = CsaElement::basis_element(alg, 2); // E_{10}
    CHECK(e01 * e10 == CsaElement::basis_element(alg, 0));
    CHECK((e10 * e01).mat().at(1, 1).is_one());
    CHECK(reduced_norm(CsaElement::identity(alg)).is_one());
}
