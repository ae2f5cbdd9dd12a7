#pragma once

#include "conjcert/frobenius.hpp"

#include <string>
#include <vector>

namespace conjcert {

struct TransposeChecks {
    bool conjugates = false; // g a = (transpose a) g
    bool invertible = false; // det g != 0
    bool symmetry = false;   // transpose g = g
};

// Machine-checkable witness that g carries a to its transpose.
struct TransposeCertificate {
    Mat a;
    Mat g;
    bool symmetric = false;
    TransposeChecks checks;
};

// Always succeeds: every square matrix is conjugate to its transpose by a
// symmetric matrix. The conjugator is assembled blockwise through the
// invariant-factor decomposition.
TransposeCertificate symmetric_conjugator(const Mat& a);

// True iff every solution of x a = (transpose a) x is symmetric, decided on a
// basis of the solution space. Coincides with cyclicity of a.
bool all_conjugators_symmetric(const Mat& a);

// A non-symmetric conjugator; exists exactly when a is not cyclic. Throws
// CyclicInput otherwise.
TransposeCertificate asymmetric_conjugator(const Mat& a);

struct VerifyReport {
    bool valid = false;
    std::vector<std::string> reasons;
};

// Recomputes every check from scratch and compares with the stored flags.
VerifyReport verify_transpose_certificate(const TransposeCertificate& cert);

// Scale so the first nonzero entry (row-major) is 1.
Mat normalize_first_entry(const Mat& m);

} // namespace conjcert
