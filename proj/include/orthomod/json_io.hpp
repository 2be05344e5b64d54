#pragma once

#include "json.hpp"
#include "orthomod/congruence.hpp"
#include "orthomod/lattice.hpp"

namespace omod {

using Json = nlohmann::ordered_json;

// ---- serialization ----

Json matrix_json(const MatI& M);
Json matrix_json(const MatQ& M);
Json matrix_json(const Mat<QuadInt>& M);
Json matrix_json(const Mat<Quaternion>& M);

Json group_elem_json(const GroupElem& g);
Json orth_image_json(const OrthImage& im);
Json verify_report_json(const VerifyReport& r);
Json lattice_image_json(const LatticeImage& li);

/// "Z x 3Z" style description of Z^k / (invariant factors).
std::string image_group_string(const LatticeImage& li);

/// Canonical dump used for all CLI output (2-space indent, trailing newline).
std::string dump_json(const Json& j);

// ---- parsing; all failures throw Error(Parse, ...) naming the entry ----

MatQ rat_matrix_from_json(const Json& j);
Mat<QuadInt> quad_matrix_from_json(const Json& j, long m);
Mat<Quaternion> quat_matrix_from_json(const Json& j);

/// Reads {"kind", "m", "halfTurn", "matrix"}; a bare matrix array is accepted
/// when `kind` (and `m` for the Hermitian kind) are supplied as fallbacks.
GroupElem group_elem_from_json(const Json& j, const std::string& fallback_kind = "",
                               long fallback_m = 0);

}  // namespace omod
