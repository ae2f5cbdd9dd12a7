#include "conjcert/frobenius.hpp"

#include "conjcert/error.hpp"

#include <algorithm>

namespace conjcert {

namespace {

Mat basis_column(const FieldPtr& f, int n, int i) {
    Mat v(f, n, 1);
    v.at(i, 0) = one(f);
    return v;
}

// Split lcm(h, f) into coprime parts g1 | h and g2 | f with g1 g2 = lcm.
// Pure gcd manipulation, no factorization.
std::pair<Poly, Poly> coprime_split(const Poly& h, const Poly& f) {
    Poly g1 = h.monic();
    Poly g2 = poly_divmod(f.monic(), poly_gcd(h, f)).first.monic();
    while (true) {
        Poly d = poly_gcd(g1, g2);
        if (d.is_one()) break;
        g1 = poly_divmod(g1, d).first;
        g2 = (g2 * d).monic();
    }
    return {g1, g2};
}

} // namespace

Mat max_order_vector(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "max_order_vector needs a square matrix");
    const FieldPtr& f = a.field();
    int n = a.rows();
    Poly mp = minpoly(a);
    int target = mp.degree();

    for (int i = 0; i < n; ++i) {
        Mat v = basis_column(f, n, i);
        if (vector_annihilator(a, v).degree() == target) return v;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat v = basis_column(f, n, i) + basis_column(f, n, j);
            if (vector_annihilator(a, v).degree() == target) return v;
        }

    // Guaranteed construction: combine annihilators pairwise. If ann(x) and
    // ann(y) are coprime then ann(x + y) is their product.
    Mat v = basis_column(f, n, 0);
    Poly h = vector_annihilator(a, v);
    for (int i = 1; i < n && h.degree() < target; ++i) {
        Mat ei = basis_column(f, n, i);
        Poly fi = vector_annihilator(a, ei);
        Poly l = poly_lcm(h, fi);
        if (l == h) continue;
        auto [g1, g2] = coprime_split(h, fi);
        Mat x = eval_poly_at_matrix(poly_divmod(h, g1).first, a) * v;
        Mat y = eval_poly_at_matrix(poly_divmod(fi, g2).first, a) * ei;
        v = x + y;
        h = (g1 * g2).monic();
        internal_check(vector_annihilator(a, v) == h, "combined vector has unexpected annihilator");
    }
    internal_check(h.degree() == target, "no vector of maximal order found");
    return v;
}

std::optional<Mat> cyclic_vector(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "cyclic_vector needs a square matrix");
    int n = a.rows();
    if (minpoly(a).degree() < n) return std::nullopt;
    Mat v = max_order_vector(a);
    internal_check(vector_annihilator(a, v).degree() == n, "cyclic vector search failed");
    return v;
}

namespace {

struct BlockAccum {
    Poly factor;
    Mat columns; // n x deg(factor), Krylov basis in the original coordinates
};

// Deflation step: peel off a maximal cyclic block of the restriction M on the
// subspace spanned by the columns of B (a * B = B * M), then recurse on an
// M-stable complement.
void deflate(const Mat& basis, const Mat& restriction, std::vector<BlockAccum>& out) {
    const FieldPtr& f = restriction.field();
    int k = restriction.rows();
    Poly mp = minpoly(restriction);
    int d = mp.degree();
    Mat v = max_order_vector(restriction);

    Mat krylov(f, k, d);
    Mat w = v;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < k; ++i) krylov.at(i, j) = w.at(i, 0);
        if (j + 1 < d) w = restriction * w;
    }
    out.push_back({mp, basis * krylov});
    if (d == k) return;

    // A functional psi with psi(M^i v) = [i == d-1] yields the stable
    // complement ker(u -> (psi(u), psi(Mu), ..., psi(M^{d-1}u))).
    Mat target(f, d, 1);
    target.at(d - 1, 0) = one(f);
    auto psi_col = solve(krylov.transpose(), target);
    internal_check(psi_col.has_value(), "no dual functional for the Krylov basis");
    Mat psi_row = psi_col->transpose(); // 1 x k

    Mat phi(f, d, k);
    Mat row = psi_row;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < k; ++j) phi.at(i, j) = row.at(0, j);
        if (i + 1 < d) row = row * restriction;
    }
    auto comp = kernel_basis(phi);
    internal_check(static_cast<int>(comp.size()) == k - d, "stable complement has wrong dimension");

    Mat sub_basis(f, k, k - d);
    for (int j = 0; j < k - d; ++j)
        for (int i = 0; i < k; ++i) sub_basis.at(i, j) = comp[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    auto sub_restriction = solve(sub_basis, restriction * sub_basis);
    internal_check(sub_restriction.has_value(), "complement is not stable");
    deflate(basis * sub_basis, *sub_restriction, out);
}

} // namespace

FrobeniusDecomposition frobenius_form(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "frobenius_form needs a square matrix");
    const FieldPtr& f = a.field();
    int n = a.rows();

    std::vector<BlockAccum> blocks;
    deflate(Mat::identity(f, n), a, blocks);
    // Ascending divisibility chain. Within a chain, equal degree forces equal
    // factors, so a stable sort by degree keeps the discovery order of equal
    // blocks (and the transform for an already-diagonal input stays trivial).
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const BlockAccum& x, const BlockAccum& y) { return x.factor.degree() < y.factor.degree(); });

    FrobeniusDecomposition out;
    Mat p(f, n, n);
    int off = 0;
    std::vector<Mat> companions;
    for (const auto& blk : blocks) {
        out.invariant_factors.push_back(blk.factor);
        companions.push_back(companion_matrix(blk.factor));
        for (int j = 0; j < blk.columns.cols(); ++j)
            for (int i = 0; i < n; ++i) p.at(i, off + j) = blk.columns.at(i, j);
        off += blk.columns.cols();
    }
    internal_check(off == n, "block dimensions do not fill the space");
    out.block_matrix = block_diag(companions);
    out.transform = inverse(p);

    internal_check(out.transform * a == out.block_matrix * out.transform,
                   "transform does not conjugate to the block form");
    for (std::size_t i = 0; i + 1 < out.invariant_factors.size(); ++i)
        internal_check(poly_divmod(out.invariant_factors[i + 1], out.invariant_factors[i]).second.is_zero(),
                       "invariant factors do not form a divisibility chain");
    return out;
}

bool is_cyclic(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "is_cyclic needs a square matrix");
    bool by_poly = minpoly(a).degree() == a.rows();
    bool by_form = frobenius_form(a).invariant_factors.size() == 1;
    internal_check(by_poly == by_form, "cyclicity criteria disagree");
    return by_poly;
}

std::vector<PrimaryComponent> primary_decomposition(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "primary_decomposition needs a square matrix");
    if (a.field()->kind != FieldKind::Prime)
        throw Error(Errc::UnsupportedField, "primary decomposition needs polynomial factorization (prime fields)");
    const FieldPtr& f = a.field();
    int n = a.rows();
    Poly mp = minpoly(a);
    auto fac = factor_over_prime_field(mp);

    std::vector<PrimaryComponent> out;
    int total = 0;
    for (const auto& pf : fac.factors) {
        Mat pe = Mat::identity(f, n);
        Mat pa = eval_poly_at_matrix(pf.factor, a);
        for (int i = 0; i < pf.multiplicity; ++i) pe = pe * pa;
        auto basis = kernel_basis(pe);
        // each component is a-stable
        for (const auto& vec : basis) {
            Mat v(f, n, 1);
            for (int i = 0; i < n; ++i) v.at(i, 0) = vec[static_cast<std::size_t>(i)];
            Mat av = a * v;
            Mat bmat(f, n, static_cast<int>(basis.size()));
            for (int j = 0; j < bmat.cols(); ++j)
                for (int i = 0; i < n; ++i) bmat.at(i, j) = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            internal_check(solve(bmat, av).has_value(), "primary component is not stable");
        }
        total += static_cast<int>(basis.size());
        out.push_back({pf.factor, pf.multiplicity, std::move(basis)});
    }
    internal_check(total == n, "primary component dimensions do not sum to n");
    return out;
}

} // namespace conjcert
