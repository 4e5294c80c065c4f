#pragma once

#include <json.hpp>

#include "hilbertkit/complex_matrix.hpp"
#include "hilbertkit/conjspace.hpp"
#include "hilbertkit/tensor.hpp"

namespace hilbertkit::json_io {

using nlohmann::json;

// Shared wire format. Matrices: {"rows": m, "cols": n,
// "data": [[re, im], ...]} row-major. Kets: a 1-column matrix plus
// "space": "plain" | "conjugate". Tensor elements: {"left_dim",
// "right_dim", "terms": [{"x": [[re,im],...], "y": [[re,im],...]}]};
// the matrix representation is recomputed on load and, when a
// "matrix_rep" copy is present, compared against it.
// Malformed input throws InvalidArgument.

json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);

json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const json& j);

json ket_to_json(const Ket& x);
Ket ket_from_json(const json& j);

json tensor_to_json(const TensorElement& t);
TensorElement tensor_from_json(const json& j);

std::vector<Complex> complex_vector_from_json(const json& j);
json complex_vector_to_json(const std::vector<Complex>& v);

}  // namespace hilbertkit::json_io
