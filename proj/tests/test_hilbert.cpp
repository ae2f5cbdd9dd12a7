#include <doctest.h>

#include "conjcert/error.hpp"
#include "conjcert/hilbert.hpp"
#include "helpers.hpp"

using namespace conjcert;

namespace {

const Place kInf{true, 0};
const Place kTwo{false, 2};

Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

} // namespace

TEST_CASE("hilbert symbol pinned values") {
    // (1, b) is always split: x = z = 1, y = 0
    for (std::int64_t b : {2, -3, 7, 30}) {
        CHECK(hilbert_symbol(rat(1), rat(b), kInf) == 1);
        CHECK(hilbert_symbol(rat(1), rat(b), kTwo) == 1);
        CHECK(hilbert_symbol(rat(1), rat(b), {false, 3}) == 1);
        CHECK(hilbert_symbol(rat(1), rat(b), {false, 7}) == 1);
    }
    // x^2 + y^2 + z^2 = 0 has only the trivial real solution
    CHECK(hilbert_symbol(rat(-1), rat(-1), kInf) == -1);
    CHECK(hilbert_symbol(rat(-1), rat(-1), kTwo) == -1);
    CHECK(hilbert_symbol(rat(-1), rat(-1), {false, 3}) == 1);
    CHECK(hilbert_symbol(rat(-1), rat(-1), {false, 5}) == 1);
    // (2, p) at odd p depends on p mod 8; spot values
    CHECK(hilbert_symbol(rat(2), rat(7), {false, 7}) == 1);   // 2 is a square mod 7
    CHECK(hilbert_symbol(rat(3), rat(5), {false, 5}) == -1);  // 3 is not a square mod 5
    CHECK_THROWS_AS(hilbert_symbol(rat(0), rat(1), kTwo), Error);
}

TEST_CASE("hilbert symbol is symmetric and bilinear") {
    auto rng = testutil::make_rng(81);
    std::vector<Place> places = {kInf, kTwo, {false, 3}, {false, 5}, {false, 7}, {false, 11}};
    for (int iter = 0; iter < 120; ++iter) {
        std::int64_t a = testutil::rand_int(rng, -30, 30);
        std::int64_t b = testutil::rand_int(rng, -30, 30);
        std::int64_t c = testutil::rand_int(rng, -30, 30);
        if (!a || !b || !c) continue;
        for (const auto& v : places) {
            CHECK(hilbert_symbol(rat(a), rat(b), v) == hilbert_symbol(rat(b), rat(a), v));
            CHECK(hilbert_symbol(rat(a * c), rat(b), v) ==
                  hilbert_symbol(rat(a), rat(b), v) * hilbert_symbol(rat(c), rat(b), v));
        }
    }
}

TEST_CASE("squares are split everywhere") {
    auto rng = testutil::make_rng(82);
    for (int iter = 0; iter < 40; ++iter) {
        std::int64_t a = testutil::rand_int(rng, 1, 12);
        std::int64_t b = testutil::rand_int(rng, -30, 30);
        if (!b) continue;
        for (const auto& v : ramifiable_places(rat(a * a), rat(b)))
            CHECK(hilbert_symbol(rat(a * a), rat(b), v) == 1);
    }
}

TEST_CASE("product formula on random pairs") {
    auto rng = testutil::make_rng(83);
    int checked = 0;
    for (int iter = 0; iter < 80 && checked < 50; ++iter) {
        std::int64_t an = testutil::rand_int(rng, -30, 30);
        std::int64_t ad = testutil::rand_int(rng, 1, 30);
        std::int64_t bn = testutil::rand_int(rng, -30, 30);
        std::int64_t bd = testutil::rand_int(rng, 1, 30);
        if (!an || !bn) continue;
        ++checked;
        Rational alpha = rat(an, ad), beta = rat(bn, bd);
        int prod = 1;
        for (const auto& v : ramifiable_places(alpha, beta)) prod *= hilbert_symbol(alpha, beta, v);
        CHECK(prod == 1);
    }
    CHECK(checked == 50);
}

TEST_CASE("division detection") {
    auto rep = is_division_quaternion(rat(-1), rat(-1));
    CHECK(rep.division);
    REQUIRE(rep.ramified.size() == 2);
    CHECK(rep.ramified[0] == kInf);
    CHECK(rep.ramified[1] == kTwo);

    CHECK(!is_division_quaternion(rat(1), rat(-1)).division);
    CHECK(!is_division_quaternion(rat(2), rat(-1)).division); // norm form of Q(sqrt2) is isotropic at every place
    CHECK(is_division_quaternion(rat(-1), rat(-7)).division);
    auto r3 = is_division_quaternion(rat(2), rat(3));
    CHECK(r3.division); // ramified at 2 and 3
    REQUIRE(r3.ramified.size() == 2);
    CHECK(r3.ramified[0] == kTwo);
    CHECK(r3.ramified[1] == Place{false, 3});
}
