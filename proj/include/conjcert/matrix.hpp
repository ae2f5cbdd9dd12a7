#pragma once

#include "conjcert/poly.hpp"

#include <optional>
#include <vector>

namespace conjcert {

// Dense matrix over an exact field, row-major.
class Mat {
public:
    Mat() = default;
    Mat(FieldPtr field, int rows, int cols); // zero-filled

    static Mat identity(const FieldPtr& f, int n);
    static Mat from_ints(const FieldPtr& f, const std::vector<std::vector<std::int64_t>>& rows);

    const FieldPtr& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    FieldElement& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const FieldElement& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    Mat transpose() const;
    Mat scaled(const FieldElement& c) const;
    bool is_symmetric() const;
    bool is_zero() const;

    std::string to_string() const;

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);

private:
    FieldPtr field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<FieldElement> e_;
};

FieldElement det(const Mat& a);
Mat inverse(const Mat& a); // throws SingularMatrix
int rank(const Mat& a);

// Basis of {v : a v = 0} as rows in reduced echelon form (first nonzero
// entry of each basis vector is 1). Empty when the kernel is trivial.
std::vector<std::vector<FieldElement>> kernel_basis(const Mat& a);

// Particular solution of a X = b (free variables set to zero), or nullopt
// when the system is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

Mat block_diag(const std::vector<Mat>& blocks);

Poly charpoly(const Mat& a); // Berkowitz, division-free
Poly minpoly(const Mat& a);  // Krylov annihilators combined by lcm

// Monic annihilator of v under a: the lowest-degree monic g with g(a)v = 0.
Poly vector_annihilator(const Mat& a, const Mat& v);

Poly poly_lcm(const Poly& f, const Poly& g);

Mat companion_matrix(const Poly& f); // throws NotMonic
Mat eval_poly_at_matrix(const Poly& f, const Mat& a);

// Basis of {x : x a = b x}, canonicalized: reshaped kernel vectors of the
// row-major vectorization, first nonzero entry of each basis matrix is 1.
std::vector<Mat> intertwiner_space(const Mat& a, const Mat& b);

} // namespace conjcert
