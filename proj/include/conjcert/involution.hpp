#pragma once

#include "conjcert/quaternion.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conjcert {

enum class BaseMap { Transpose, GammaTranspose };

// An involution of the first kind on M_n(F) or M_n(D): a base map (transpose,
// or entrywise canonical conjugation followed by transpose), optionally
// composed with conjugation by an element u satisfying base(u) = +-u.
// The sign epsilon and the inverse of the twist are computed on construction.
struct InvolutionSpec {
    CsaAlgebra algebra;
    BaseMap base = BaseMap::Transpose;
    std::optional<CsaElement> twist;
    std::optional<CsaElement> twist_inv;
    int epsilon = 1;
    int fixed_dim = 0; // dim_F of the +1 eigenspace, cached alongside epsilon
};

CsaElement apply_base_map(BaseMap base, const CsaElement& a);

// Validates the twist, checks the involution axioms, computes the sign.
InvolutionSpec make_involution(const CsaAlgebra& alg, BaseMap base,
                               std::optional<CsaElement> twist = std::nullopt);

CsaElement apply_involution(const InvolutionSpec& theta, const CsaElement& a);

// The N x N matrix of theta acting on the F-basis (N = dim_F A).
Mat involution_matrix(const InvolutionSpec& theta);

// Checks anti-multiplicativity on all basis pairs and that the map squares to
// the identity. The map is given by its matrix on the standard F-basis.
// An empty result means the axioms hold.
std::vector<std::string> involution_axioms_check(const CsaAlgebra& alg, const Mat& map_matrix);

// Cached sign; the fixed-space dimension determines it:
// dim = m(m+1)/2 -> +1, dim = m(m-1)/2 -> -1 (m the reduced degree).
int epsilon_sign(const InvolutionSpec& theta);

// For an explicit involution theta on M_n(F): the b with theta(x) = b (tx) b^-1,
// unique up to scalars (the solution space is checked to be 1-dimensional),
// plus the sign from tb = eps b. The map is given by its N x N matrix.
std::pair<Mat, int> involution_to_twist(const FieldPtr& f, int n, const Mat& theta_matrix);

// theta twisted by a purely imaginary invertible y (as y I_n): the result has
// sign +1, which is re-checked.
InvolutionSpec make_twisted_involution(const InvolutionSpec& theta, const Quaternion& y);

struct ConjugacyWitness {
    CsaElement g;
    int solution_dim = 0;
    std::vector<std::uint64_t> grid_point;
};

// The conjugacy certificate g with g a g^-1 = theta(a) and theta(g) = eps(theta) g,
// found by solving the linear conditions and walking a small integer grid until
// the reduced norm is nonzero. Rationals only.
ConjugacyWitness theorem_conjugator(const InvolutionSpec& theta, const CsaElement& a);

// Scale so the first nonzero F-coordinate is 1.
CsaElement normalize_first_coord(const CsaElement& a);

} // namespace conjcert
