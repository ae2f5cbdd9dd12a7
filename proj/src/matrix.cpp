#include "conjcert/matrix.hpp"

#include "conjcert/error.hpp"

#include <algorithm>

namespace conjcert {

Mat::Mat(FieldPtr field, int rows, int cols) : field_(std::move(field)), rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw Error(Errc::ShapeMismatch, "matrix dimensions must be positive");
    e_.assign(static_cast<std::size_t>(rows) * cols, zero(field_));
}

Mat Mat::identity(const FieldPtr& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one(f);
    return m;
}

Mat Mat::from_ints(const FieldPtr& f, const std::vector<std::vector<std::int64_t>>& rows) {
    if (rows.empty() || rows[0].empty()) throw Error(Errc::ShapeMismatch, "empty matrix literal");
    Mat m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols())
            throw Error(Errc::ShapeMismatch, "ragged matrix literal");
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = from_int(f, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return m;
}

Mat Mat::transpose() const {
    Mat t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::scaled(const FieldElement& c) const {
    Mat r = *this;
    for (auto& x : r.e_) x = x * c;
    return r;
}

bool Mat::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (!(at(i, j) == at(j, i))) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::string Mat::to_string() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
        out += i ? "; " : "";
        for (int j = 0; j < cols_; ++j) out += (j ? ", " : "[") + at(i, j).to_string();
        out += "]";
    }
    return out + "]";
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::ShapeMismatch, "matrix addition shape mismatch");
    Mat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
    return r;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::ShapeMismatch, "matrix subtraction shape mismatch");
    Mat r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
    return r;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::ShapeMismatch, "matrix product shape mismatch");
    if (!same_field(a.field_, b.field_)) throw Error(Errc::DescriptorMismatch, "matrix product field mismatch");
    Mat r(a.field_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const FieldElement& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
        }
    return r;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_field(a.field_, b.field_) && a.e_ == b.e_;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!m.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        FieldElement piv_inv = inv(m.at(row, col));
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * piv_inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            FieldElement factor = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

FieldElement det(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
    Mat m = a;
    const FieldPtr& f = a.field();
    FieldElement result = one(f);
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) return zero(f);
        if (pr != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(col, j));
            result = -result;
        }
        result = result * m.at(col, col);
        FieldElement piv_inv = inv(m.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            FieldElement factor = m.at(i, col) * piv_inv;
            for (int j = col; j < n; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
        }
    }
    return result;
}

Mat inverse(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "inverse of a non-square matrix");
    int n = a.rows();
    Mat aug(a.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = one(a.field());
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw Error(Errc::SingularMatrix, "matrix is not invertible");
    Mat r(a.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

int rank(const Mat& a) {
    Mat m = a;
    return static_cast<int>(rref(m).size());
}

std::vector<std::vector<FieldElement>> kernel_basis(const Mat& a) {
    Mat m = a;
    auto pivots = rref(m);
    const FieldPtr& f = a.field();
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<FieldElement> v(static_cast<std::size_t>(a.cols()), zero(f));
        v[static_cast<std::size_t>(free)] = one(f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;

    // canonicalize: reduced echelon form of the basis itself
    Mat stacked(f, static_cast<int>(basis.size()), a.cols());
    for (int i = 0; i < stacked.rows(); ++i)
        for (int j = 0; j < stacked.cols(); ++j) stacked.at(i, j) = basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    rref(stacked);
    for (int i = 0; i < stacked.rows(); ++i)
        for (int j = 0; j < stacked.cols(); ++j) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = stacked.at(i, j);
    return basis;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw Error(Errc::ShapeMismatch, "solve: row mismatch");
    if (!same_field(a.field(), b.field())) throw Error(Errc::DescriptorMismatch, "solve: field mismatch");
    int n = a.rows(), m = a.cols(), k = b.cols();
    Mat aug(a.field(), n, m + k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < k; ++j) aug.at(i, m + j) = b.at(i, j);
    }
    auto pivots = rref(aug);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] >= m) return std::nullopt; // inconsistent row
    Mat x(a.field(), m, k);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < k; ++j) x.at(pivots[r], j) = aug.at(static_cast<int>(r), m + j);
    return x;
}

Mat block_diag(const std::vector<Mat>& blocks) {
    if (blocks.empty()) throw Error(Errc::ShapeMismatch, "block_diag of nothing");
    int n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw Error(Errc::NotSquare, "block_diag needs square blocks");
        n += b.rows();
    }
    Mat r(blocks[0].field(), n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) r.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return r;
}

// Samuelson-Berkowitz: division-free, uniform over every exact field.
Poly charpoly(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "charpoly of a non-square matrix");
    const FieldPtr& f = a.field();
    int n = a.rows();
    // c holds the characteristic polynomial of the leading k x k principal
    // submatrix, descending degree.
    std::vector<FieldElement> c = {one(f), -a.at(0, 0)};
    for (int k = 1; k < n; ++k) {
        // v = [1, -a_kk, -(R S), -(R M S), ..., -(R M^{k-1} S)]
        std::vector<FieldElement> v;
        v.reserve(static_cast<std::size_t>(k) + 2);
        v.push_back(one(f));
        v.push_back(-a.at(k, k));
        std::vector<FieldElement> w(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = a.at(i, k); // S
        for (int step = 0; step < k; ++step) {
            FieldElement dot = zero(f);
            for (int i = 0; i < k; ++i) dot = dot + a.at(k, i) * w[static_cast<std::size_t>(i)];
            v.push_back(-dot);
            if (step + 1 < k) {
                std::vector<FieldElement> w2(static_cast<std::size_t>(k), zero(f));
                for (int i = 0; i < k; ++i) {
                    for (int j = 0; j < k; ++j)
                        w2[static_cast<std::size_t>(i)] = w2[static_cast<std::size_t>(i)] + a.at(i, j) * w[static_cast<std::size_t>(j)];
                }
                w = std::move(w2);
            }
        }
        std::vector<FieldElement> next(c.size() + 1, zero(f));
        for (std::size_t t = 0; t < next.size(); ++t)
            for (std::size_t j = 0; j < v.size() && j <= t; ++j)
                if (t - j < c.size()) next[t] = next[t] + v[j] * c[t - j];
        c = std::move(next);
    }
    std::reverse(c.begin(), c.end());
    return Poly(f, std::move(c));
}

Poly poly_lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly::zero_poly(f.field());
    Poly gcd = poly_gcd(f, g);
    return poly_divmod(f * g, gcd).first.monic();
}

Poly vector_annihilator(const Mat& a, const Mat& v) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "annihilator needs a square matrix");
    if (v.rows() != a.rows() || v.cols() != 1) throw Error(Errc::ShapeMismatch, "annihilator needs a column vector");
    const FieldPtr& f = a.field();
    int n = a.rows();
    if (v.is_zero()) return Poly::constant(f, one(f));
    std::vector<Mat> krylov = {v};
    Mat w = v;
    for (int k = 1; k <= n; ++k) {
        w = a * w;
        Mat kmat(f, n, k);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) kmat.at(i, j) = krylov[static_cast<std::size_t>(j)].at(i, 0);
        auto sol = solve(kmat, w);
        if (sol) {
            // a^k v = sum c_i a^i v  ->  annihilator X^k - sum c_i X^i
            std::vector<FieldElement> coeffs(static_cast<std::size_t>(k) + 1, zero(f));
            for (int i = 0; i < k; ++i) coeffs[static_cast<std::size_t>(i)] = -sol->at(i, 0);
            coeffs[static_cast<std::size_t>(k)] = one(f);
            return Poly(f, std::move(coeffs));
        }
        krylov.push_back(w);
    }
    throw Error(Errc::InternalAssertion, "Krylov sequence exceeded the ambient dimension");
}

Poly minpoly(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "minpoly of a non-square matrix");
    const FieldPtr& f = a.field();
    int n = a.rows();
    Poly m = Poly::constant(f, one(f));
    for (int i = 0; i < n; ++i) {
        Mat ei(f, n, 1);
        ei.at(i, 0) = one(f);
        m = poly_lcm(m, vector_annihilator(a, ei));
        if (m.degree() == n) break;
    }
    return m;
}

Mat companion_matrix(const Poly& f) {
    if (!f.is_monic()) throw Error(Errc::NotMonic, "companion matrix needs a monic polynomial");
    int d = f.degree();
    if (d < 1) throw Error(Errc::NotMonic, "companion matrix needs degree >= 1");
    Mat c(f.field(), d, d);
    for (int i = 0; i + 1 < d; ++i) c.at(i + 1, i) = one(f.field());
    for (int i = 0; i < d; ++i) c.at(i, d - 1) = -f.coeff(i);
    return c;
}

Mat eval_poly_at_matrix(const Poly& f, const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "polynomial evaluation needs a square matrix");
    if (!same_field(f.field(), a.field())) throw Error(Errc::DescriptorMismatch, "evaluation field mismatch");
    int n = a.rows();
    Mat acc(a.field(), n, n);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * a;
        FieldElement c = f.coeff(i);
        for (int d = 0; d < n; ++d) acc.at(d, d) = acc.at(d, d) + c;
    }
    return acc;
}

std::vector<Mat> intertwiner_space(const Mat& a, const Mat& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw Error(Errc::ShapeMismatch, "intertwiner space needs equal square shapes");
    const FieldPtr& f = a.field();
    int n = a.rows();
    Mat op(f, n * n, n * n);
    // row (i,j): coefficient of x_rs in (x a - b x)_{ij}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int row = i * n + j;
            for (int s = 0; s < n; ++s)
                op.at(row, i * n + s) = op.at(row, i * n + s) + a.at(s, j);
            for (int r = 0; r < n; ++r)
                op.at(row, r * n + j) = op.at(row, r * n + j) - b.at(i, r);
        }
    auto basis = kernel_basis(op);
    std::vector<Mat> out;
    out.reserve(basis.size());
    for (const auto& v : basis) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<std::size_t>(i * n + j)];
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace conjcert
