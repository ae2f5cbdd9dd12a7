#include "conjcert/involution.hpp"

#include "conjcert/error.hpp"

namespace conjcert {

CsaElement apply_base_map(BaseMap base, const CsaElement& a) {
    const CsaAlgebra& alg = a.algebra();
    if (base == BaseMap::Transpose) {
        if (alg.kind != CsaKind::MatF)
            throw Error(Errc::AlgebraMismatch, "transpose base map needs a matrix algebra over F");
        return CsaElement::from_mat(alg, a.mat().transpose());
    }
    if (alg.kind != CsaKind::MatQuat)
        throw Error(Errc::AlgebraMismatch, "gamma-transpose base map needs a quaternion matrix algebra");
    CsaElement out = CsaElement::zero_elem(alg);
    for (int i = 0; i < alg.n; ++i)
        for (int j = 0; j < alg.n; ++j) out.quat_at(i, j) = gamma_conj(a.quat_at(j, i));
    return out;
}

CsaElement apply_involution(const InvolutionSpec& theta, const CsaElement& a) {
    if (!same_csa(theta.algebra, a.algebra()))
        throw Error(Errc::AlgebraMismatch, "element is outside the involution's algebra");
    CsaElement m = apply_base_map(theta.base, a);
    if (theta.twist) m = *theta.twist * m * *theta.twist_inv;
    return m;
}

Mat involution_matrix(const InvolutionSpec& theta) {
    int dim = f_dimension(theta.algebra);
    const FieldPtr& f = theta.algebra.field;
    Mat t(f, dim, dim);
    for (int k = 0; k < dim; ++k) {
        auto img = apply_involution(theta, CsaElement::basis_element(theta.algebra, k)).coords();
        for (int i = 0; i < dim; ++i) t.at(i, k) = img[static_cast<std::size_t>(i)];
    }
    return t;
}

std::vector<std::string> involution_axioms_check(const CsaAlgebra& alg, const Mat& map_matrix) {
    int dim = f_dimension(alg);
    std::vector<std::string> violations;
    if (map_matrix.rows() != dim || map_matrix.cols() != dim) {
        violations.push_back("map matrix does not match dim_F of the algebra");
        return violations;
    }
    const FieldPtr& f = alg.field;

    auto apply = [&](const CsaElement& x) {
        Mat v(f, dim, 1);
        auto c = x.coords();
        for (int i = 0; i < dim; ++i) v.at(i, 0) = c[static_cast<std::size_t>(i)];
        Mat w = map_matrix * v;
        std::vector<FieldElement> out;
        out.reserve(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) out.push_back(w.at(i, 0));
        return CsaElement::from_coords(alg, out);
    };

    // c) the map squares to the identity
    if (!(map_matrix * map_matrix == Mat::identity(f, dim)))
        violations.push_back("map does not square to the identity");

    // b) anti-multiplicativity on every basis pair
    std::vector<CsaElement> basis, images;
    for (int k = 0; k < dim; ++k) {
        basis.push_back(CsaElement::basis_element(alg, k));
        images.push_back(apply(basis.back()));
    }
    bool anti_ok = true;
    for (int p = 0; p < dim && anti_ok; ++p)
        for (int q = 0; q < dim && anti_ok; ++q)
            if (!(apply(basis[static_cast<std::size_t>(p)] * basis[static_cast<std::size_t>(q)]) ==
                  images[static_cast<std::size_t>(q)] * images[static_cast<std::size_t>(p)]))
                anti_ok = false;
    if (!anti_ok) violations.push_back("map is not anti-multiplicative");
    return violations;
}

namespace {

int fixed_space_dimension(const Mat& theta_matrix) {
    const FieldPtr& f = theta_matrix.field();
    Mat diff = theta_matrix - Mat::identity(f, theta_matrix.rows());
    return theta_matrix.rows() - rank(diff);
}

// +1 or -1 from the fixed-space dimension; anything else contradicts the
// eigenspace dimension formula and is reported as a bug.
int epsilon_from_dimension(int dim, int m, std::uint64_t characteristic_p) {
    if (dim == m * (m + 1) / 2) return 1;
    if (characteristic_p != 2 && dim == m * (m - 1) / 2) return -1;
    throw Error(Errc::InternalAssertion,
                "fixed-space dimension " + std::to_string(dim) + " matches neither sign for reduced degree " +
                    std::to_string(m));
}

} // namespace

InvolutionSpec make_involution(const CsaAlgebra& alg, BaseMap base, std::optional<CsaElement> twist) {
    if (alg.kind == CsaKind::MatF && base != BaseMap::Transpose)
        throw Error(Errc::AlgebraMismatch, "matrix algebras over F use the transpose base map");
    if (alg.kind == CsaKind::MatQuat && base != BaseMap::GammaTranspose)
        throw Error(Errc::AlgebraMismatch, "quaternion matrix algebras use the gamma-transpose base map");

    InvolutionSpec spec;
    spec.algebra = alg;
    spec.base = base;
    if (twist) {
        if (!same_csa(twist->algebra(), alg))
            throw Error(Errc::BadTwist, "twist lives outside the algebra");
        if (reduced_norm(*twist).is_zero())
            throw Error(Errc::BadTwist, "twist is not invertible");
        CsaElement mapped = apply_base_map(base, *twist);
        bool plus = mapped == *twist;
        bool minus = mapped == CsaElement::zero_elem(alg) - *twist;
        if (!plus && !minus)
            throw Error(Errc::BadTwist, "base map does not send the twist to +-itself");
        spec.twist = std::move(twist);
        spec.twist_inv = csa_inverse(*spec.twist);
    }

    Mat t = involution_matrix(spec);
    auto violations = involution_axioms_check(alg, t);
    if (!violations.empty())
        throw Error(Errc::NotAnInvolution, violations.front());
    spec.fixed_dim = fixed_space_dimension(t);
    spec.epsilon = epsilon_from_dimension(spec.fixed_dim, reduced_degree(alg), characteristic(alg.field));
    return spec;
}

int epsilon_sign(const InvolutionSpec& theta) { return theta.epsilon; }

std::pair<Mat, int> involution_to_twist(const FieldPtr& f, int n, const Mat& theta_matrix) {
    CsaAlgebra alg = matf_algebra(f, n);
    auto violations = involution_axioms_check(alg, theta_matrix);
    if (!violations.empty()) throw Error(Errc::NotAnInvolution, violations.front());

    int dim = n * n;
    auto apply = [&](const Mat& x) {
        Mat v(f, dim, 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v.at(i * n + j, 0) = x.at(i, j);
        Mat w = theta_matrix * v;
        Mat out(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.at(i, j) = w.at(i * n + j, 0);
        return out;
    };

    // theta(E_k) b = b (transpose E_k) for all k: linear system in b
    Mat sys(f, dim * dim, dim);
    for (int k = 0; k < dim; ++k) {
        Mat ek(f, n, n);
        ek.at(k / n, k % n) = one(f);
        Mat lhs = apply(ek);
        Mat rhs = ek.transpose();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int row = k * dim + i * n + j;
                // (lhs b)_{ij} = sum_s lhs_{is} b_{sj};  (b rhs)_{ij} = sum_r b_{ir} rhs_{rj}
                for (int s = 0; s < n; ++s)
                    sys.at(row, s * n + j) = sys.at(row, s * n + j) + lhs.at(i, s);
                for (int r = 0; r < n; ++r)
                    sys.at(row, i * n + r) = sys.at(row, i * n + r) - rhs.at(r, j);
            }
    }

    auto kernel = kernel_basis(sys);
    internal_check(kernel.size() == 1, "twist solution space is not one-dimensional");
    Mat b(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = kernel[0][static_cast<std::size_t>(i * n + j)];
    if (det(b).is_zero()) throw Error(Errc::NotAnInvolution, "twist candidate is singular");

    int eps;
    if (b.transpose() == b)
        eps = 1;
    else if (b.transpose() == Mat(f, n, n) - b)
        eps = -1;
    else
        throw Error(Errc::InternalAssertion, "twist is neither symmetric nor antisymmetric");

    // verify theta(x) = b (tx) b^-1 on the basis
    Mat b_inv = inverse(b);
    for (int k = 0; k < dim; ++k) {
        Mat ek(f, n, n);
        ek.at(k / n, k % n) = one(f);
        internal_check(apply(ek) == b * ek.transpose() * b_inv, "twist does not represent the involution");
    }
    return {b, eps};
}

InvolutionSpec make_twisted_involution(const InvolutionSpec& theta, const Quaternion& y) {
    if (theta.algebra.kind != CsaKind::MatQuat || theta.base != BaseMap::GammaTranspose || theta.twist)
        throw Error(Errc::BadTwist, "twisting starts from the plain gamma-transpose involution");
    if (!same_algebra(y.algebra(), theta.algebra.quat))
        throw Error(Errc::BadTwist, "y is from a different quaternion algebra");
    if (!(gamma_conj(y) == -y))
        throw Error(Errc::BadTwist, "y is not purely imaginary (gamma(y) != -y)");
    if (quat_reduced_norm(y).is_zero())
        throw Error(Errc::BadTwist, "y is not invertible");

    // gamma(y) = -y forces y^2 in F
    Quaternion ysq = y * y;
    internal_check(ysq.coord(1).is_zero() && ysq.coord(2).is_zero() && ysq.coord(3).is_zero(),
                   "y^2 is not a scalar");

    CsaElement u = CsaElement::zero_elem(theta.algebra);
    for (int i = 0; i < theta.algebra.n; ++i) u.quat_at(i, i) = y;
    InvolutionSpec twisted = make_involution(theta.algebra, BaseMap::GammaTranspose, u);
    internal_check(twisted.epsilon == 1, "twist by an imaginary unit must have sign +1");
    return twisted;
}

CsaElement normalize_first_coord(const CsaElement& a) {
    for (const auto& c : a.coords())
        if (!c.is_zero()) return a.scaled(inv(c));
    return a;
}

ConjugacyWitness theorem_conjugator(const InvolutionSpec& theta, const CsaElement& a) {
    if (!same_csa(theta.algebra, a.algebra()))
        throw Error(Errc::AlgebraMismatch, "element is outside the involution's algebra");
    const CsaAlgebra& alg = theta.algebra;
    if (alg.field->kind != FieldKind::Rationals)
        throw Error(Errc::UnsupportedField,
                    "the grid search needs an infinite base field; use the transpose-certificate path over F_p");
    const FieldPtr& f = alg.field;
    int dim = f_dimension(alg);
    int eps = theta.epsilon;
    CsaElement theta_a = apply_involution(theta, a);

    // linear conditions: x a - theta(a) x = 0 and theta(x) - eps x = 0
    Mat sys(f, 2 * dim, dim);
    for (int k = 0; k < dim; ++k) {
        CsaElement ek = CsaElement::basis_element(alg, k);
        auto c1 = (ek * a - theta_a * ek).coords();
        auto c2 = (apply_involution(theta, ek) - ek.scaled(from_int(f, eps))).coords();
        for (int i = 0; i < dim; ++i) {
            sys.at(i, k) = c1[static_cast<std::size_t>(i)];
            sys.at(dim + i, k) = c2[static_cast<std::size_t>(i)];
        }
    }
    auto basis = kernel_basis(sys);
    if (basis.empty())
        throw Error(Errc::EmptySolutionSpace, "no solutions to the conjugacy conditions");
    std::size_t m = basis.size();
    std::vector<CsaElement> gens;
    gens.reserve(m);
    for (const auto& v : basis) gens.push_back(CsaElement::from_coords(alg, v));

    // Walk lambda in {0..d}^m by increasing max-norm, then lexicographically.
    // A nonzero polynomial of total degree <= d cannot vanish on the whole
    // grid, so the walk terminates.
    std::uint64_t d = static_cast<std::uint64_t>(reduced_degree(alg));
    for (std::uint64_t radius = 1; radius <= d; ++radius) {
        std::vector<std::uint64_t> lambda(m, 0);
        while (true) {
            bool hits_radius = false;
            for (auto v : lambda)
                if (v == radius) hits_radius = true;
            if (hits_radius) {
                CsaElement x = CsaElement::zero_elem(alg);
                for (std::size_t i = 0; i < m; ++i)
                    if (lambda[i]) x = x + gens[i].scaled(from_int(f, static_cast<std::int64_t>(lambda[i])));
                if (!reduced_norm(x).is_zero()) {
                    ConjugacyWitness w;
                    w.solution_dim = static_cast<int>(m);
                    w.grid_point = lambda;
                    w.g = normalize_first_coord(x);
                    internal_check(w.g * a == theta_a * w.g, "witness fails g a = theta(a) g");
                    internal_check(apply_involution(theta, w.g) == w.g.scaled(from_int(f, eps)),
                                   "witness fails theta(g) = eps g");
                    return w;
                }
            }
            // lexicographic odometer: last coordinate least significant
            std::size_t pos = m;
            while (pos > 0) {
                --pos;
                if (++lambda[pos] <= radius) break;
                lambda[pos] = 0;
                if (pos == 0) { pos = m + 1; break; }
            }
            if (pos == m + 1) break;
        }
    }
    throw Error(Errc::GridExhausted, "no invertible element on the search grid");
}

} // namespace conjcert
