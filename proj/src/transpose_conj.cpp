#include "conjcert/transpose_conj.hpp"

#include "conjcert/error.hpp"

#include <cmath>

namespace conjcert {

Mat normalize_first_entry(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return m.scaled(inv(m.at(i, j)));
    return m;
}

namespace {

TransposeCertificate build_certificate(const Mat& a, const Mat& g) {
    TransposeCertificate cert;
    cert.a = a;
    cert.g = normalize_first_entry(g);
    cert.checks.conjugates = cert.g * a == a.transpose() * cert.g;
    cert.checks.invertible = !det(cert.g).is_zero();
    cert.checks.symmetry = cert.g.is_symmetric();
    cert.symmetric = cert.checks.symmetry;
    internal_check(cert.checks.conjugates, "constructed conjugator fails g a = (transpose a) g");
    internal_check(cert.checks.invertible, "constructed conjugator is singular");
    return cert;
}

// Conjugator for a companion block: the Krylov basis of the transposed block
// at the last basis vector. For a cyclic block every conjugator is symmetric,
// which we re-check at runtime.
Mat companion_block_conjugator(const Mat& c) {
    const FieldPtr& f = c.field();
    int d = c.rows();
    Mat ct = c.transpose();
    Mat b(f, d, d);
    Mat w(f, d, 1);
    w.at(d - 1, 0) = one(f);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) b.at(i, j) = w.at(i, 0);
        if (j + 1 < d) w = ct * w;
    }
    internal_check(b * c == ct * b, "block conjugator does not intertwine");
    internal_check(b.is_symmetric(), "block conjugator is not symmetric");
    return b;
}

} // namespace

TransposeCertificate symmetric_conjugator(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "symmetric_conjugator needs a square matrix");
    if (a.is_symmetric()) return build_certificate(a, Mat::identity(a.field(), a.rows()));
    auto dec = frobenius_form(a);
    std::vector<Mat> blocks;
    blocks.reserve(dec.invariant_factors.size());
    for (const auto& fac : dec.invariant_factors)
        blocks.push_back(companion_block_conjugator(companion_matrix(fac)));
    // h a h^-1 = B and b B b^-1 = (transpose B) give (th b h) a (th b h)^-1 = ta
    Mat g = dec.transform.transpose() * block_diag(blocks) * dec.transform;
    TransposeCertificate cert = build_certificate(a, g);
    internal_check(cert.symmetric, "assembled conjugator is not symmetric");
    return cert;
}

bool all_conjugators_symmetric(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "all_conjugators_symmetric needs a square matrix");
    // symmetry is linear, so checking a basis decides the whole space
    for (const auto& m : intertwiner_space(a, a.transpose()))
        if (!m.is_symmetric()) return false;
    return true;
}

TransposeCertificate asymmetric_conjugator(const Mat& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "asymmetric_conjugator needs a square matrix");
    if (is_cyclic(a))
        throw Error(Errc::CyclicInput, "every conjugator of a cyclic matrix is symmetric");
    const FieldPtr& f = a.field();
    int n = a.rows();
    auto basis = intertwiner_space(a, a.transpose());
    std::vector<Mat> skew;
    for (const auto& m : basis)
        if (!m.is_symmetric()) skew.push_back(m);
    internal_check(!skew.empty(), "non-cyclic input has an all-symmetric solution space");

    Mat g0 = symmetric_conjugator(a).g;
    // g0 + t w stays a conjugator and is non-symmetric for every t != 0;
    // det(g0 + t w) is a nonzero polynomial of degree <= n in t.
    std::uint64_t p = characteristic(f);
    std::uint64_t limit = p == 0 ? static_cast<std::uint64_t>(n) + 1 : p - 1;
    for (const auto& w : skew) {
        for (std::uint64_t t = 1; t <= limit; ++t) {
            Mat g = g0 + w.scaled(from_int(f, static_cast<std::int64_t>(t)));
            if (det(g).is_zero()) continue;
            TransposeCertificate cert = build_certificate(a, g);
            internal_check(!cert.symmetric, "perturbed conjugator unexpectedly symmetric");
            return cert;
        }
    }
    internal_check(p != 0, "perturbation must succeed over the rationals");

    // Tiny fields: p - 1 values of t may all be roots of the determinant.
    // Enumerate the whole solution space when affordable.
    std::size_t m = basis.size();
    double space = static_cast<double>(m) * std::log2(static_cast<double>(p));
    if (space <= 21.0) {
        std::vector<std::uint64_t> lambda(m, 0);
        while (true) {
            std::size_t i = 0;
            while (i < m) {
                if (++lambda[i] < p) break;
                lambda[i] = 0;
                ++i;
            }
            if (i == m) break;
            Mat g(f, n, n);
            for (std::size_t k = 0; k < m; ++k)
                if (lambda[k]) g = g + basis[k].scaled(from_int(f, static_cast<std::int64_t>(lambda[k])));
            if (g.is_symmetric() || det(g).is_zero()) continue;
            return build_certificate(a, g);
        }
        throw Error(Errc::GridExhausted, "solution space holds no invertible non-symmetric element");
    }
    // Large space over a tiny field: combinations of up to three basis elements.
    for (std::size_t i = 0; i < skew.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::uint64_t s = 0; s < p; ++s)
                for (std::uint64_t t = 1; t < p; ++t) {
                    Mat g = skew[i].scaled(from_int(f, static_cast<std::int64_t>(t)));
                    if (s) g = g + basis[j].scaled(from_int(f, static_cast<std::int64_t>(s)));
                    Mat cand = g0 + g;
                    if (!cand.is_symmetric() && !det(cand).is_zero()) return build_certificate(a, cand);
                    if (!g.is_symmetric() && !det(g).is_zero()) return build_certificate(a, g);
                }
    throw Error(Errc::GridExhausted, "no non-symmetric conjugator found in the searched range");
}

VerifyReport verify_transpose_certificate(const TransposeCertificate& cert) {
    VerifyReport report;
    if (!cert.a.is_square() || cert.g.rows() != cert.a.rows() || cert.g.cols() != cert.a.cols() ||
        !same_field(cert.a.field(), cert.g.field())) {
        report.reasons.push_back("shape or field mismatch between a and g");
        return report;
    }
    bool conj = cert.g * cert.a == cert.a.transpose() * cert.g;
    bool invert = !det(cert.g).is_zero();
    bool sym = cert.g.is_symmetric();
    if (!conj) report.reasons.push_back("g a != (transpose a) g");
    if (!invert) report.reasons.push_back("g is singular");
    if (conj != cert.checks.conjugates) report.reasons.push_back("stored conjugation flag is stale");
    if (invert != cert.checks.invertible) report.reasons.push_back("stored invertibility flag is stale");
    if (sym != cert.checks.symmetry) report.reasons.push_back("stored symmetry flag is stale");
    if (cert.symmetric != sym) report.reasons.push_back("symmetric field disagrees with g");
    report.valid = report.reasons.empty();
    return report;
}

} // namespace conjcert
