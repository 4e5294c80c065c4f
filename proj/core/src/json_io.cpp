#include "hilbertkit/json_io.hpp"

#include <cmath>

#include "hilbertkit/errors.hpp"

namespace hilbertkit::json_io {

namespace {

double number_at(const json& j, const char* what) {
  if (!j.is_number()) {
    throw InvalidArgument(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

std::size_t positive_dim(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw InvalidArgument(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidArgument("complex entries must be [re, im] pairs");
  }
  return Complex(number_at(j[0], "re"), number_at(j[1], "im"));
}

json complex_vector_to_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (const Complex& z : v) out.push_back(complex_to_json(z));
  return out;
}

std::vector<Complex> complex_vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw InvalidArgument("expected a nonempty array of [re, im] pairs");
  }
  std::vector<Complex> v;
  v.reserve(j.size());
  for (const json& e : j) v.push_back(complex_from_json(e));
  return v;
}

json matrix_to_json(const ComplexMatrix& a) {
  json data = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      data.push_back(complex_to_json(a(i, j)));
  return json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data")) {
    throw InvalidArgument("matrix JSON needs rows, cols and data");
  }
  const std::size_t rows = positive_dim(j["rows"], "rows");
  const std::size_t cols = positive_dim(j["cols"], "cols");
  const json& data = j["data"];
  if (!data.is_array() || data.size() != rows * cols) {
    throw InvalidArgument("matrix data length must equal rows*cols");
  }
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (const json& e : data) entries.push_back(complex_from_json(e));
  return ComplexMatrix(rows, cols, std::move(entries));
}

json ket_to_json(const Ket& x) {
  json out = matrix_to_json(ComplexMatrix(x.dim(), 1, x.coords));
  out["space"] = x.space == Space::plain ? "plain" : "conjugate";
  return out;
}

Ket ket_from_json(const json& j) {
  const ComplexMatrix column = matrix_from_json(j);
  if (column.cols() != 1) {
    throw InvalidArgument("a ket must be a 1-column matrix");
  }
  Space space = Space::plain;
  if (j.contains("space")) {
    const json& tag = j["space"];
    if (tag == "plain") {
      space = Space::plain;
    } else if (tag == "conjugate") {
      space = Space::conjugate;
    } else {
      throw InvalidArgument("space must be \"plain\" or \"conjugate\"");
    }
  }
  return make_ket(column.column(0), space);
}

json tensor_to_json(const TensorElement& t) {
  json terms = json::array();
  for (const auto& [x, y] : t.terms()) {
    terms.push_back(json{{"x", complex_vector_to_json(x.coords)},
                         {"y", complex_vector_to_json(y.coords)}});
  }
  return json{{"left_dim", t.left_dim()},
              {"right_dim", t.right_dim()},
              {"terms", std::move(terms)},
              {"matrix_rep", matrix_to_json(t.matrix_rep())}};
}

TensorElement tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("left_dim") || !j.contains("right_dim") ||
      !j.contains("terms")) {
    throw InvalidArgument("tensor JSON needs left_dim, right_dim and terms");
  }
  const std::size_t left_dim = positive_dim(j["left_dim"], "left_dim");
  const std::size_t right_dim = positive_dim(j["right_dim"], "right_dim");
  const json& terms = j["terms"];
  if (!terms.is_array()) {
    throw InvalidArgument("terms must be an array");
  }
  std::vector<std::pair<Ket, Ket>> pairs;
  pairs.reserve(terms.size());
  for (const json& term : terms) {
    if (!term.is_object() || !term.contains("x") || !term.contains("y")) {
      throw InvalidArgument("each term needs x and y coordinate arrays");
    }
    Ket x = make_ket(complex_vector_from_json(term["x"]));
    Ket y = make_ket(complex_vector_from_json(term["y"]));
    if (x.dim() != left_dim || y.dim() != right_dim) {
      throw InvalidArgument("term dimensions must match left_dim/right_dim");
    }
    pairs.emplace_back(std::move(x), std::move(y));
  }
  TensorElement element(left_dim, right_dim, std::move(pairs));
  if (j.contains("matrix_rep")) {
    const ComplexMatrix stored = matrix_from_json(j["matrix_rep"]);
    if (stored.rows() != element.matrix_rep().rows() ||
        stored.cols() != element.matrix_rep().cols() ||
        max_abs_diff(stored, element.matrix_rep()) > 1e-9) {
      throw InvalidArgument("stored matrix_rep disagrees with the terms");
    }
  }
  return element;
}

}  // namespace hilbertkit::json_io
