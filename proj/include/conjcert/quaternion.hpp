#pragma once

#include "conjcert/matrix.hpp"

#include <array>
#include <memory>

namespace conjcert {

struct QuaternionAlgebra;
using QuaternionAlgebraPtr = std::shared_ptr<const QuaternionAlgebra>;

// (alpha, beta / F): basis 1, i, j, k with i^2 = alpha, j^2 = beta, ij = -ji = k.
// Base field of characteristic != 2; alpha must be a non-square so that
// F(sqrt(alpha)) is a field (it is the splitting field used for reduced norms).
struct QuaternionAlgebra {
    FieldPtr base;
    FieldElement alpha;
    FieldElement beta;
    FieldPtr splitting; // base(sqrt(alpha))
};

QuaternionAlgebraPtr quaternion_algebra(const FieldPtr& base, const FieldElement& alpha, const FieldElement& beta);
bool same_algebra(const QuaternionAlgebraPtr& a, const QuaternionAlgebraPtr& b);

class Quaternion {
public:
    Quaternion() = default;
    Quaternion(QuaternionAlgebraPtr alg, FieldElement c0, FieldElement c1, FieldElement c2, FieldElement c3);

    static Quaternion zero_q(const QuaternionAlgebraPtr& alg);
    static Quaternion one_q(const QuaternionAlgebraPtr& alg);
    static Quaternion unit(const QuaternionAlgebraPtr& alg, int axis); // 0..3 -> 1, i, j, k

    const QuaternionAlgebraPtr& algebra() const { return alg_; }
    const FieldElement& coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
    bool is_zero() const;
    bool is_one() const;
    std::string to_string() const;

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a);
    friend bool operator==(const Quaternion& a, const Quaternion& b);

    Quaternion scaled(const FieldElement& c) const; // c in the base field

private:
    QuaternionAlgebraPtr alg_;
    std::array<FieldElement, 4> c_;
};

// canonical conjugation: negates the imaginary part
Quaternion gamma_conj(const Quaternion& x);
// x gamma(x) = x0^2 - alpha x1^2 - beta x2^2 + alpha beta x3^2, in the base field
FieldElement quat_reduced_norm(const Quaternion& x);
FieldElement quat_reduced_trace(const Quaternion& x);
Quaternion quat_inverse(const Quaternion& x); // throws NonInvertible when the norm vanishes

// F-algebra embedding into M_2(F(sqrt(alpha))):
// i -> diag(s, -s), j -> [[0,1],[beta,0]] with s = sqrt(alpha).
Mat split_embedding(const Quaternion& x);
// Inverse of split_embedding on its image; checks membership.
Quaternion split_pullback(const QuaternionAlgebraPtr& alg, const Mat& block);

// Element of M_n(F) or M_n(D): the central simple algebras handled here.
enum class CsaKind { MatF, MatQuat };

struct CsaAlgebra {
    CsaKind kind = CsaKind::MatF;
    int n = 0;
    FieldPtr field;            // MatF: matrix field; MatQuat: base field of quat
    QuaternionAlgebraPtr quat; // MatQuat only
};

CsaAlgebra matf_algebra(const FieldPtr& f, int n);
CsaAlgebra matquat_algebra(const QuaternionAlgebraPtr& alg, int n);
bool same_csa(const CsaAlgebra& a, const CsaAlgebra& b);
int reduced_degree(const CsaAlgebra& a); // n or 2n
int f_dimension(const CsaAlgebra& a);    // n^2 or 4n^2

class CsaElement {
public:
    CsaElement() = default;

    static CsaElement from_mat(const CsaAlgebra& alg, Mat m);
    static CsaElement from_quats(const CsaAlgebra& alg, std::vector<Quaternion> entries);
    static CsaElement zero_elem(const CsaAlgebra& alg);
    static CsaElement identity(const CsaAlgebra& alg);
    // F-basis: matrix units (MatF) or matrix units times 1,i,j,k (MatQuat)
    static CsaElement basis_element(const CsaAlgebra& alg, int index);
    static CsaElement from_coords(const CsaAlgebra& alg, const std::vector<FieldElement>& coords);

    const CsaAlgebra& algebra() const { return alg_; }
    const Mat& mat() const { return mat_; }
    const Quaternion& quat_at(int i, int j) const;
    Quaternion& quat_at(int i, int j);
    bool is_zero() const;
    std::string to_string() const;

    std::vector<FieldElement> coords() const; // over F, basis order as above

    friend CsaElement operator+(const CsaElement& a, const CsaElement& b);
    friend CsaElement operator-(const CsaElement& a, const CsaElement& b);
    friend CsaElement operator*(const CsaElement& a, const CsaElement& b);
    friend bool operator==(const CsaElement& a, const CsaElement& b);

    CsaElement scaled(const FieldElement& c) const; // c in F

private:
    CsaAlgebra alg_;
    Mat mat_;                 // MatF payload
    std::vector<Quaternion> q_; // MatQuat payload, row-major
};

// MatF: determinant. MatQuat: determinant of the entrywise split embedding,
// whose sqrt(alpha) component must vanish; the base-field part is returned.
FieldElement reduced_norm(const CsaElement& a);

// MatQuat: the 2n x 2n matrix over the splitting field; MatF: the matrix itself.
Mat split_matrix(const CsaElement& a);

CsaElement csa_inverse(const CsaElement& a); // throws NonInvertible

} // namespace conjcert
