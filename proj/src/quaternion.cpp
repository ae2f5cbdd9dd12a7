#include "conjcert/quaternion.hpp"

#include "conjcert/error.hpp"

namespace conjcert {

QuaternionAlgebraPtr quaternion_algebra(const FieldPtr& base, const FieldElement& alpha, const FieldElement& beta) {
    if (base->kind == FieldKind::QuadExt)
        throw Error(Errc::UnsupportedField, "quaternion base must be the rationals or a prime field");
    if (characteristic(base) == 2)
        throw Error(Errc::UnsupportedField, "quaternion algebras need characteristic != 2");
    if (!same_field(base, alpha.field()) || !same_field(base, beta.field()))
        throw Error(Errc::DescriptorMismatch, "alpha and beta must live in the base field");
    if (alpha.is_zero() || beta.is_zero())
        throw Error(Errc::UnsupportedField, "alpha and beta must be nonzero");
    if (is_square(base, alpha))
        throw Error(Errc::UnsupportedField, "alpha must be a non-square (pass an equivalent presentation)");
    auto alg = std::make_shared<QuaternionAlgebra>(QuaternionAlgebra{base, alpha, beta, quad_ext(base, alpha)});

    // spot-check the multiplication table
    Quaternion i = Quaternion::unit(alg, 1), j = Quaternion::unit(alg, 2), k = Quaternion::unit(alg, 3);
    internal_check(i * i == Quaternion::one_q(alg).scaled(alpha), "i^2 != alpha");
    internal_check(j * j == Quaternion::one_q(alg).scaled(beta), "j^2 != beta");
    internal_check(i * j == k, "ij != k");
    internal_check(j * i == -k, "ji != -k");
    return alg;
}

bool same_algebra(const QuaternionAlgebraPtr& a, const QuaternionAlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return same_field(a->base, b->base) && a->alpha == b->alpha && a->beta == b->beta;
}

Quaternion::Quaternion(QuaternionAlgebraPtr alg, FieldElement c0, FieldElement c1, FieldElement c2, FieldElement c3)
    : alg_(std::move(alg)), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    for (const auto& c : c_)
        if (!same_field(c.field(), alg_->base))
            throw Error(Errc::DescriptorMismatch, "quaternion coordinate outside the base field");
}

Quaternion Quaternion::zero_q(const QuaternionAlgebraPtr& alg) {
    auto z = zero(alg->base);
    return Quaternion(alg, z, z, z, z);
}

Quaternion Quaternion::one_q(const QuaternionAlgebraPtr& alg) {
    auto z = zero(alg->base);
    return Quaternion(alg, one(alg->base), z, z, z);
}

Quaternion Quaternion::unit(const QuaternionAlgebraPtr& alg, int axis) {
    auto q = zero_q(alg);
    q.c_[static_cast<std::size_t>(axis)] = one(alg->base);
    return q;
}

bool Quaternion::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool Quaternion::is_one() const {
    return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

std::string Quaternion::to_string() const {
    return "(" + c_[0].to_string() + ", " + c_[1].to_string() + ", " + c_[2].to_string() + ", " + c_[3].to_string() + ")";
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    if (!same_algebra(a.alg_, b.alg_)) throw Error(Errc::AlgebraMismatch, "quaternion addition across algebras");
    return Quaternion(a.alg_, a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    if (!same_algebra(a.alg_, b.alg_)) throw Error(Errc::AlgebraMismatch, "quaternion subtraction across algebras");
    return Quaternion(a.alg_, a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]);
}

Quaternion operator-(const Quaternion& a) {
    return Quaternion(a.alg_, -a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]);
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    if (!same_algebra(x.alg_, y.alg_)) throw Error(Errc::AlgebraMismatch, "quaternion product across algebras");
    const FieldElement& al = x.alg_->alpha;
    const FieldElement& be = x.alg_->beta;
    const FieldElement &x0 = x.c_[0], &x1 = x.c_[1], &x2 = x.c_[2], &x3 = x.c_[3];
    const FieldElement &y0 = y.c_[0], &y1 = y.c_[1], &y2 = y.c_[2], &y3 = y.c_[3];
    return Quaternion(x.alg_,
                      x0 * y0 + al * (x1 * y1) + be * (x2 * y2) - al * be * (x3 * y3),
                      x0 * y1 + x1 * y0 - be * (x2 * y3) + be * (x3 * y2),
                      x0 * y2 + x2 * y0 + al * (x1 * y3) - al * (x3 * y1),
                      x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1);
}

bool operator==(const Quaternion& a, const Quaternion& b) {
    return same_algebra(a.alg_, b.alg_) && a.c_ == b.c_;
}

Quaternion Quaternion::scaled(const FieldElement& c) const {
    return Quaternion(alg_, c_[0] * c, c_[1] * c, c_[2] * c, c_[3] * c);
}

Quaternion gamma_conj(const Quaternion& x) {
    return Quaternion(x.algebra(), x.coord(0), -x.coord(1), -x.coord(2), -x.coord(3));
}

FieldElement quat_reduced_norm(const Quaternion& x) {
    const FieldElement& al = x.algebra()->alpha;
    const FieldElement& be = x.algebra()->beta;
    return x.coord(0) * x.coord(0) - al * (x.coord(1) * x.coord(1)) - be * (x.coord(2) * x.coord(2)) +
           al * be * (x.coord(3) * x.coord(3));
}

FieldElement quat_reduced_trace(const Quaternion& x) {
    return x.coord(0) + x.coord(0);
}

Quaternion quat_inverse(const Quaternion& x) {
    FieldElement n = quat_reduced_norm(x);
    if (n.is_zero()) throw Error(Errc::NonInvertible, "quaternion with vanishing reduced norm");
    return gamma_conj(x).scaled(inv(n));
}

Mat split_embedding(const Quaternion& x) {
    const auto& alg = x.algebra();
    const FieldPtr& K = alg->splitting;
    Mat m(K, 2, 2);
    m.at(0, 0) = make_quad_element(K, x.coord(0), x.coord(1));
    m.at(0, 1) = make_quad_element(K, x.coord(2), x.coord(3));
    m.at(1, 0) = make_quad_element(K, alg->beta * x.coord(2), -(alg->beta * x.coord(3)));
    m.at(1, 1) = make_quad_element(K, x.coord(0), -x.coord(1));
    return m;
}

Quaternion split_pullback(const QuaternionAlgebraPtr& alg, const Mat& block) {
    if (block.rows() != 2 || block.cols() != 2 || !same_field(block.field(), alg->splitting))
        throw Error(Errc::ShapeMismatch, "pullback expects a 2x2 block over the splitting field");
    Quaternion q(alg, block.at(0, 0).ext0(), block.at(0, 0).ext1(), block.at(0, 1).ext0(), block.at(0, 1).ext1());
    internal_check(split_embedding(q) == block, "matrix is not in the image of the splitting embedding");
    return q;
}

CsaAlgebra matf_algebra(const FieldPtr& f, int n) {
    if (n <= 0) throw Error(Errc::ShapeMismatch, "algebra size must be positive");
    return {CsaKind::MatF, n, f, nullptr};
}

CsaAlgebra matquat_algebra(const QuaternionAlgebraPtr& alg, int n) {
    if (n <= 0) throw Error(Errc::ShapeMismatch, "algebra size must be positive");
    return {CsaKind::MatQuat, n, alg->base, alg};
}

bool same_csa(const CsaAlgebra& a, const CsaAlgebra& b) {
    if (a.kind != b.kind || a.n != b.n) return false;
    if (a.kind == CsaKind::MatF) return same_field(a.field, b.field);
    return same_algebra(a.quat, b.quat);
}

int reduced_degree(const CsaAlgebra& a) { return a.kind == CsaKind::MatF ? a.n : 2 * a.n; }
int f_dimension(const CsaAlgebra& a) { return a.kind == CsaKind::MatF ? a.n * a.n : 4 * a.n * a.n; }

CsaElement CsaElement::from_mat(const CsaAlgebra& alg, Mat m) {
    if (alg.kind != CsaKind::MatF) throw Error(Errc::AlgebraMismatch, "matrix payload for a quaternion algebra");
    if (m.rows() != alg.n || m.cols() != alg.n || !same_field(m.field(), alg.field))
        throw Error(Errc::ShapeMismatch, "matrix does not match the algebra");
    CsaElement e;
    e.alg_ = alg;
    e.mat_ = std::move(m);
    return e;
}

CsaElement CsaElement::from_quats(const CsaAlgebra& alg, std::vector<Quaternion> entries) {
    if (alg.kind != CsaKind::MatQuat) throw Error(Errc::AlgebraMismatch, "quaternion payload for a matrix algebra");
    if (static_cast<int>(entries.size()) != alg.n * alg.n)
        throw Error(Errc::ShapeMismatch, "entry count does not match the algebra");
    for (const auto& q : entries)
        if (!same_algebra(q.algebra(), alg.quat))
            throw Error(Errc::AlgebraMismatch, "entry from a different quaternion algebra");
    CsaElement e;
    e.alg_ = alg;
    e.q_ = std::move(entries);
    return e;
}

CsaElement CsaElement::zero_elem(const CsaAlgebra& alg) {
    if (alg.kind == CsaKind::MatF) return from_mat(alg, Mat(alg.field, alg.n, alg.n));
    return from_quats(alg, std::vector<Quaternion>(static_cast<std::size_t>(alg.n) * alg.n, Quaternion::zero_q(alg.quat)));
}

CsaElement CsaElement::identity(const CsaAlgebra& alg) {
    if (alg.kind == CsaKind::MatF) return from_mat(alg, Mat::identity(alg.field, alg.n));
    CsaElement e = zero_elem(alg);
    for (int i = 0; i < alg.n; ++i) e.quat_at(i, i) = Quaternion::one_q(alg.quat);
    return e;
}

const Quaternion& CsaElement::quat_at(int i, int j) const {
    return q_[static_cast<std::size_t>(i) * alg_.n + j];
}

Quaternion& CsaElement::quat_at(int i, int j) {
    return q_[static_cast<std::size_t>(i) * alg_.n + j];
}

CsaElement CsaElement::basis_element(const CsaAlgebra& alg, int index) {
    CsaElement e = zero_elem(alg);
    if (alg.kind == CsaKind::MatF) {
        int i = index / alg.n, j = index % alg.n;
        e.mat_.at(i, j) = one(alg.field);
    } else {
        int axis = index % 4;
        int cell = index / 4;
        e.q_[static_cast<std::size_t>(cell)] = Quaternion::unit(alg.quat, axis);
    }
    return e;
}

CsaElement CsaElement::from_coords(const CsaAlgebra& alg, const std::vector<FieldElement>& coords) {
    if (static_cast<int>(coords.size()) != f_dimension(alg))
        throw Error(Errc::ShapeMismatch, "coordinate vector has wrong length");
    CsaElement e = zero_elem(alg);
    if (alg.kind == CsaKind::MatF) {
        for (int i = 0; i < alg.n; ++i)
            for (int j = 0; j < alg.n; ++j) e.mat_.at(i, j) = coords[static_cast<std::size_t>(i * alg.n + j)];
    } else {
        for (int cell = 0; cell < alg.n * alg.n; ++cell)
            e.q_[static_cast<std::size_t>(cell)] =
                Quaternion(alg.quat, coords[static_cast<std::size_t>(cell * 4)], coords[static_cast<std::size_t>(cell * 4 + 1)],
                           coords[static_cast<std::size_t>(cell * 4 + 2)], coords[static_cast<std::size_t>(cell * 4 + 3)]);
    }
    return e;
}

std::vector<FieldElement> CsaElement::coords() const {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(f_dimension(alg_)));
    if (alg_.kind == CsaKind::MatF) {
        for (int i = 0; i < alg_.n; ++i)
            for (int j = 0; j < alg_.n; ++j) out.push_back(mat_.at(i, j));
    } else {
        for (const auto& q : q_)
            for (int c = 0; c < 4; ++c) out.push_back(q.coord(c));
    }
    return out;
}

bool CsaElement::is_zero() const {
    if (alg_.kind == CsaKind::MatF) return mat_.is_zero();
    for (const auto& q : q_)
        if (!q.is_zero()) return false;
    return true;
}

std::string CsaElement::to_string() const {
    if (alg_.kind == CsaKind::MatF) return mat_.to_string();
    std::string out = "[";
    for (int i = 0; i < alg_.n; ++i) {
        out += i ? "; " : "";
        for (int j = 0; j < alg_.n; ++j) out += (j ? ", " : "") + quat_at(i, j).to_string();
    }
    return out + "]";
}

CsaElement operator+(const CsaElement& a, const CsaElement& b) {
    if (!same_csa(a.alg_, b.alg_)) throw Error(Errc::AlgebraMismatch, "sum across algebras");
    CsaElement e = a;
    if (a.alg_.kind == CsaKind::MatF) {
        e.mat_ = a.mat_ + b.mat_;
    } else {
        for (std::size_t i = 0; i < e.q_.size(); ++i) e.q_[i] = a.q_[i] + b.q_[i];
    }
    return e;
}

CsaElement operator-(const CsaElement& a, const CsaElement& b) {
    if (!same_csa(a.alg_, b.alg_)) throw Error(Errc::AlgebraMismatch, "difference across algebras");
    CsaElement e = a;
    if (a.alg_.kind == CsaKind::MatF) {
        e.mat_ = a.mat_ - b.mat_;
    } else {
        for (std::size_t i = 0; i < e.q_.size(); ++i) e.q_[i] = a.q_[i] - b.q_[i];
    }
    return e;
}

CsaElement operator*(const CsaElement& a, const CsaElement& b) {
    if (!same_csa(a.alg_, b.alg_)) throw Error(Errc::AlgebraMismatch, "product across algebras");
    if (a.alg_.kind == CsaKind::MatF) {
        CsaElement e = a;
        e.mat_ = a.mat_ * b.mat_;
        return e;
    }
    int n = a.alg_.n;
    CsaElement e = CsaElement::zero_elem(a.alg_);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Quaternion& aik = a.quat_at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) e.quat_at(i, j) = e.quat_at(i, j) + aik * b.quat_at(k, j);
        }
    return e;
}

bool operator==(const CsaElement& a, const CsaElement& b) {
    if (!same_csa(a.alg_, b.alg_)) return false;
    if (a.alg_.kind == CsaKind::MatF) return a.mat_ == b.mat_;
    return a.q_ == b.q_;
}

CsaElement CsaElement::scaled(const FieldElement& c) const {
    CsaElement e = *this;
    if (alg_.kind == CsaKind::MatF) {
        e.mat_ = mat_.scaled(c);
    } else {
        for (auto& q : e.q_) q = q.scaled(c);
    }
    return e;
}

Mat split_matrix(const CsaElement& a) {
    if (a.algebra().kind == CsaKind::MatF) return a.mat();
    int n = a.algebra().n;
    const FieldPtr& K = a.algebra().quat->splitting;
    Mat m(K, 2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat blk = split_embedding(a.quat_at(i, j));
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) m.at(2 * i + r, 2 * j + c) = blk.at(r, c);
        }
    return m;
}

FieldElement reduced_norm(const CsaElement& a) {
    if (a.algebra().kind == CsaKind::MatF) return det(a.mat());
    FieldElement d = det(split_matrix(a));
    internal_check(d.ext1().is_zero(), "reduced norm has a nonzero sqrt(alpha) component");
    return d.ext0();
}

CsaElement csa_inverse(const CsaElement& a) {
    if (reduced_norm(a).is_zero()) throw Error(Errc::NonInvertible, "element with vanishing reduced norm");
    if (a.algebra().kind == CsaKind::MatF)
        return CsaElement::from_mat(a.algebra(), inverse(a.mat()));
    int n = a.algebra().n;
    Mat inv_split = inverse(split_matrix(a));
    CsaElement e = CsaElement::zero_elem(a.algebra());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat blk(inv_split.field(), 2, 2);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) blk.at(r, c) = inv_split.at(2 * i + r, 2 * j + c);
            e.quat_at(i, j) = split_pullback(a.algebra().quat, blk);
        }
    internal_check(e * a == CsaElement::identity(a.algebra()), "pullback inverse fails to invert");
    return e;
}

} // namespace conjcert
