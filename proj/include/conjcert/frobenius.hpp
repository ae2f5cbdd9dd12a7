#pragma once

#include "conjcert/matrix.hpp"

#include <optional>

namespace conjcert {

// Invariant-factor decomposition: d_1 | d_2 | ... | d_r, product = charpoly,
// d_r = minpoly, and transform * a * transform^-1 = block_matrix where
// block_matrix is the block diagonal of the companion matrices of the d_i.
struct FrobeniusDecomposition {
    std::vector<Poly> invariant_factors;
    Mat transform;
    Mat block_matrix;
};

// A column vector generating the full Krylov space, when one exists.
std::optional<Mat> cyclic_vector(const Mat& a);

FrobeniusDecomposition frobenius_form(const Mat& a);

// Equivalent criteria (minpoly = charpoly; single invariant factor) are both
// evaluated and cross-checked.
bool is_cyclic(const Mat& a);

// A vector of maximal annihilator degree (= deg minpoly). Deterministic:
// basis sweep, then pair sweep, then an annihilator-combining construction
// that is guaranteed over any field.
Mat max_order_vector(const Mat& a);

struct PrimaryComponent {
    Poly prime;       // monic irreducible factor of the minimal polynomial
    int multiplicity; // its exponent in the minimal polynomial
    std::vector<std::vector<FieldElement>> basis; // basis of ker(prime(a)^multiplicity)
};

// Prime fields only (needs polynomial factorization).
std::vector<PrimaryComponent> primary_decomposition(const Mat& a);

} // namespace conjcert
