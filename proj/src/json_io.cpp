#include "conjcert/json_io.hpp"

#include "conjcert/error.hpp"

namespace conjcert {

namespace {

std::string scalar_string(const Json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
    throw Error(Errc::ParseError, std::string(what) + " must be a string or integer");
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(Errc::ParseError, std::string("missing key \"") + key + "\"");
    return j.at(key);
}

} // namespace

Json field_to_json(const FieldPtr& f) {
    switch (f->kind) {
        case FieldKind::Rationals: return Json{{"kind", "Q"}};
        case FieldKind::Prime: return Json{{"kind", "Fp"}, {"p", std::to_string(f->p)}};
        case FieldKind::QuadExt:
            return Json{{"kind", "QuadExt"}, {"base", field_to_json(f->base)}, {"alpha", element_to_json(f->alpha)}};
    }
    throw Error(Errc::ParseError, "unknown field kind");
}

FieldPtr field_from_json(const Json& j) {
    std::string kind = scalar_string(require(j, "kind"), "field kind");
    if (kind == "Q") return rationals();
    if (kind == "Fp") {
        BigInt p = BigInt::from_string(scalar_string(require(j, "p"), "p"));
        if (p.is_negative() || !p.fits_int64()) throw Error(Errc::ParseError, "modulus out of range");
        return prime_field(static_cast<std::uint64_t>(p.to_int64()));
    }
    if (kind == "QuadExt") {
        FieldPtr base = field_from_json(require(j, "base"));
        return quad_ext(base, element_from_json(base, require(j, "alpha")));
    }
    throw Error(Errc::ParseError, "unknown field kind \"" + kind + "\"");
}

Json element_to_json(const FieldElement& x) {
    switch (x.kind()) {
        case FieldKind::Rationals: return x.rat().to_string();
        case FieldKind::Prime: return std::to_string(x.residue());
        case FieldKind::QuadExt: return Json::array({element_to_json(x.ext0()), element_to_json(x.ext1())});
    }
    throw Error(Errc::ParseError, "unknown element kind");
}

FieldElement element_from_json(const FieldPtr& f, const Json& j) {
    switch (f->kind) {
        case FieldKind::Rationals:
            return make_rational_element(f, Rational::from_string(scalar_string(j, "rational")));
        case FieldKind::Prime:
            return make_prime_element(f, BigInt::from_string(scalar_string(j, "residue")));
        case FieldKind::QuadExt: {
            if (!j.is_array() || j.size() != 2)
                throw Error(Errc::ParseError, "quadratic extension element must be a 2-array");
            return make_quad_element(f, element_from_json(f->base, j.at(0)), element_from_json(f->base, j.at(1)));
        }
    }
    throw Error(Errc::ParseError, "unknown field kind");
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_array() || j.empty() || !j.at(0).is_array() || j.at(0).empty())
        throw Error(Errc::ParseError, "matrix must be a nonempty array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.at(0).size());
    Mat m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw Error(Errc::ParseError, "ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = element_from_json(f, row.at(static_cast<std::size_t>(c)));
    }
    return m;
}

Json poly_to_json(const Poly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(element_to_json(c));
    return coeffs;
}

Poly poly_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be a coefficient array");
    std::vector<FieldElement> coeffs;
    for (const auto& c : j) coeffs.push_back(element_from_json(f, c));
    return Poly(f, std::move(coeffs));
}

Json quat_algebra_to_json(const QuaternionAlgebraPtr& alg) {
    return Json{{"field", field_to_json(alg->base)},
                {"alpha", element_to_json(alg->alpha)},
                {"beta", element_to_json(alg->beta)}};
}

QuaternionAlgebraPtr quat_algebra_from_json(const Json& j) {
    FieldPtr base = field_from_json(require(j, "field"));
    return quaternion_algebra(base, element_from_json(base, require(j, "alpha")),
                              element_from_json(base, require(j, "beta")));
}

Json quaternion_to_json(const Quaternion& q) {
    return Json::array({element_to_json(q.coord(0)), element_to_json(q.coord(1)), element_to_json(q.coord(2)),
                        element_to_json(q.coord(3))});
}

Quaternion quaternion_from_json(const QuaternionAlgebraPtr& alg, const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw Error(Errc::ParseError, "quaternion must be a 4-array of coordinates");
    return Quaternion(alg, element_from_json(alg->base, j.at(0)), element_from_json(alg->base, j.at(1)),
                      element_from_json(alg->base, j.at(2)), element_from_json(alg->base, j.at(3)));
}

Json csa_algebra_to_json(const CsaAlgebra& alg) {
    if (alg.kind == CsaKind::MatF)
        return Json{{"kind", "matf"}, {"n", std::to_string(alg.n)}, {"field", field_to_json(alg.field)}};
    return Json{{"kind", "matquat"}, {"n", std::to_string(alg.n)}, {"quaternion", quat_algebra_to_json(alg.quat)}};
}

CsaAlgebra csa_algebra_from_json(const Json& j) {
    std::string kind = scalar_string(require(j, "kind"), "algebra kind");
    BigInt n = BigInt::from_string(scalar_string(require(j, "n"), "n"));
    if (n.is_negative() || !n.fits_int64() || n.to_int64() > 64)
        throw Error(Errc::ParseError, "algebra size out of range");
    if (kind == "matf") return matf_algebra(field_from_json(require(j, "field")), static_cast<int>(n.to_int64()));
    if (kind == "matquat")
        return matquat_algebra(quat_algebra_from_json(require(j, "quaternion")), static_cast<int>(n.to_int64()));
    throw Error(Errc::ParseError, "unknown algebra kind \"" + kind + "\"");
}

Json csa_element_to_json(const CsaElement& e) {
    if (e.algebra().kind == CsaKind::MatF) return mat_to_json(e.mat());
    Json rows = Json::array();
    for (int i = 0; i < e.algebra().n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < e.algebra().n; ++j) row.push_back(quaternion_to_json(e.quat_at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CsaElement csa_element_from_json(const CsaAlgebra& alg, const Json& j) {
    if (alg.kind == CsaKind::MatF) return CsaElement::from_mat(alg, mat_from_json(alg.field, j));
    if (!j.is_array() || static_cast<int>(j.size()) != alg.n)
        throw Error(Errc::ParseError, "quaternion matrix must have n rows");
    std::vector<Quaternion> entries;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != alg.n)
            throw Error(Errc::ParseError, "quaternion matrix rows must have n entries");
        for (const auto& q : row) entries.push_back(quaternion_from_json(alg.quat, q));
    }
    return CsaElement::from_quats(alg, entries);
}

Json involution_to_json(const InvolutionSpec& theta) {
    Json j;
    j["base"] = theta.base == BaseMap::Transpose ? "transpose" : "gamma-transpose";
    j["twist"] = theta.twist ? csa_element_to_json(*theta.twist) : Json(nullptr);
    return j;
}

InvolutionSpec involution_from_json(const CsaAlgebra& alg, const Json& j) {
    std::string base = scalar_string(require(j, "base"), "involution base");
    BaseMap bm;
    if (base == "transpose")
        bm = BaseMap::Transpose;
    else if (base == "gamma-transpose")
        bm = BaseMap::GammaTranspose;
    else
        throw Error(Errc::ParseError, "unknown involution base \"" + base + "\"");

    std::optional<CsaElement> twist;
    const Json& tw = require(j, "twist");
    if (!tw.is_null()) {
        if (alg.kind == CsaKind::MatQuat && tw.is_array() && tw.size() == 4 && !tw.at(0).is_array()) {
            // scalar shorthand: y I_n
            Quaternion y = quaternion_from_json(alg.quat, tw);
            CsaElement u = CsaElement::zero_elem(alg);
            for (int i = 0; i < alg.n; ++i) u.quat_at(i, i) = y;
            twist = u;
        } else {
            twist = csa_element_from_json(alg, tw);
        }
    }
    return make_involution(alg, bm, std::move(twist));
}

Json transpose_certificate_to_json(const TransposeCertificate& cert) {
    Json j;
    j["type"] = "transpose-certificate";
    j["field"] = field_to_json(cert.a.field());
    j["a"] = mat_to_json(cert.a);
    j["g"] = mat_to_json(cert.g);
    j["symmetric"] = cert.symmetric;
    j["checks"] = Json{{"conjugates", cert.checks.conjugates},
                       {"invertible", cert.checks.invertible},
                       {"symmetry", cert.checks.symmetry}};
    return j;
}

TransposeCertificate transpose_certificate_from_json(const Json& j) {
    if (scalar_string(require(j, "type"), "type") != "transpose-certificate")
        throw Error(Errc::ParseError, "not a transpose certificate");
    FieldPtr f = field_from_json(require(j, "field"));
    TransposeCertificate cert;
    cert.a = mat_from_json(f, require(j, "a"));
    cert.g = mat_from_json(f, require(j, "g"));
    const Json& sym = require(j, "symmetric");
    if (!sym.is_boolean()) throw Error(Errc::ParseError, "symmetric must be a boolean");
    cert.symmetric = sym.get<bool>();
    const Json& checks = require(j, "checks");
    auto flag = [&](const char* key) {
        const Json& v = require(checks, key);
        if (!v.is_boolean()) throw Error(Errc::ParseError, std::string(key) + " must be a boolean");
        return v.get<bool>();
    };
    cert.checks.conjugates = flag("conjugates");
    cert.checks.invertible = flag("invertible");
    cert.checks.symmetry = flag("symmetry");
    return cert;
}

CsaCertificate make_csa_certificate(const InvolutionSpec& theta, const CsaElement& a, const CsaElement& g) {
    CsaCertificate cert;
    cert.theta = theta;
    cert.a = a;
    cert.g = g;
    cert.epsilon = theta.epsilon;
    CsaElement theta_a = apply_involution(theta, a);
    cert.conjugates = g * a == theta_a * g;
    cert.invertible = !reduced_norm(g).is_zero();
    cert.sign = apply_involution(theta, g) == g.scaled(from_int(theta.algebra.field, theta.epsilon));
    return cert;
}

Json csa_certificate_to_json(const CsaCertificate& cert) {
    Json j;
    j["type"] = "csa-certificate";
    j["algebra"] = csa_algebra_to_json(cert.theta.algebra);
    j["involution"] = involution_to_json(cert.theta);
    j["a"] = csa_element_to_json(cert.a);
    j["g"] = csa_element_to_json(cert.g);
    j["epsilon"] = std::to_string(cert.epsilon);
    j["checks"] = Json{{"conjugates", cert.conjugates}, {"invertible", cert.invertible}, {"sign", cert.sign}};
    return j;
}

CsaCertificate csa_certificate_from_json(const Json& j) {
    if (scalar_string(require(j, "type"), "type") != "csa-certificate")
        throw Error(Errc::ParseError, "not a csa certificate");
    CsaAlgebra alg = csa_algebra_from_json(require(j, "algebra"));
    CsaCertificate cert;
    cert.theta = involution_from_json(alg, require(j, "involution"));
    cert.a = csa_element_from_json(alg, require(j, "a"));
    cert.g = csa_element_from_json(alg, require(j, "g"));
    BigInt eps = BigInt::from_string(scalar_string(require(j, "epsilon"), "epsilon"));
    cert.epsilon = eps.is_negative() ? -1 : 1;
    const Json& checks = require(j, "checks");
    auto flag = [&](const char* key) {
        const Json& v = require(checks, key);
        if (!v.is_boolean()) throw Error(Errc::ParseError, std::string(key) + " must be a boolean");
        return v.get<bool>();
    };
    cert.conjugates = flag("conjugates");
    cert.invertible = flag("invertible");
    cert.sign = flag("sign");
    return cert;
}

VerifyReport verify_csa_certificate(const CsaCertificate& cert) {
    VerifyReport report;
    if (!same_csa(cert.theta.algebra, cert.a.algebra()) || !same_csa(cert.theta.algebra, cert.g.algebra())) {
        report.reasons.push_back("algebra mismatch between involution and elements");
        return report;
    }
    CsaElement theta_a = apply_involution(cert.theta, cert.a);
    bool conj = cert.g * cert.a == theta_a * cert.g;
    bool invert = !reduced_norm(cert.g).is_zero();
    bool sign = apply_involution(cert.theta, cert.g) ==
                cert.g.scaled(from_int(cert.theta.algebra.field, cert.theta.epsilon));
    if (!conj) report.reasons.push_back("g a != theta(a) g");
    if (!invert) report.reasons.push_back("g has vanishing reduced norm");
    if (!sign) report.reasons.push_back("theta(g) != epsilon g");
    if (cert.epsilon != cert.theta.epsilon) report.reasons.push_back("stored epsilon disagrees with the involution");
    if (conj != cert.conjugates) report.reasons.push_back("stored conjugation flag is stale");
    if (invert != cert.invertible) report.reasons.push_back("stored invertibility flag is stale");
    if (sign != cert.sign) report.reasons.push_back("stored sign flag is stale");
    report.valid = report.reasons.empty();
    return report;
}

} // namespace conjcert
