#pragma once

#include "conjcert/hilbert.hpp"
#include "conjcert/involution.hpp"
#include "conjcert/transpose_conj.hpp"

#include <json.hpp>

namespace conjcert {

// Insertion-ordered JSON so emitted certificates are byte-reproducible.
using Json = nlohmann::ordered_json;

// Field values are serialized as strings ("5/6", residues, ["x0","x1"]) so no
// precision is lost; parsing also accepts plain JSON integers.

Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const FieldPtr& f, const Json& j);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const FieldPtr& f, const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldPtr& f, const Json& j);

Json quat_algebra_to_json(const QuaternionAlgebraPtr& alg);
QuaternionAlgebraPtr quat_algebra_from_json(const Json& j);

Json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const QuaternionAlgebraPtr& alg, const Json& j);

Json csa_algebra_to_json(const CsaAlgebra& alg);
CsaAlgebra csa_algebra_from_json(const Json& j);

Json csa_element_to_json(const CsaElement& e);
CsaElement csa_element_from_json(const CsaAlgebra& alg, const Json& j);

// {"base": "transpose"|"gamma-transpose", "twist": element|null}; a 4-array
// twist over M_n(D) is shorthand for the scalar matrix y I_n.
Json involution_to_json(const InvolutionSpec& theta);
InvolutionSpec involution_from_json(const CsaAlgebra& alg, const Json& j);

Json transpose_certificate_to_json(const TransposeCertificate& cert);
TransposeCertificate transpose_certificate_from_json(const Json& j);

struct CsaCertificate {
    InvolutionSpec theta;
    CsaElement a;
    CsaElement g;
    int epsilon = 1;
    bool conjugates = false;
    bool invertible = false;
    bool sign = false; // theta(g) = epsilon g
};

CsaCertificate make_csa_certificate(const InvolutionSpec& theta, const CsaElement& a, const CsaElement& g);
Json csa_certificate_to_json(const CsaCertificate& cert);
CsaCertificate csa_certificate_from_json(const Json& j);
VerifyReport verify_csa_certificate(const CsaCertificate& cert);

} // namespace conjcert
