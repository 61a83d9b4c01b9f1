#pragma once

// JSON and text forms of ring elements, matrices, modules and algebras.
// LaurentPoly: {"<v exponent>": "p/q"}; RatFunc: {"var": "v", "num": ..., "den": ...}.

#include "qla/qliealg.hpp"

#include "json.hpp"

#include <string>

namespace qla {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly &p);
LaurentPoly laurent_from_json(const Json &j);
Json to_json(const RatFunc &x);
RatFunc ratfunc_from_json(const Json &j);

Json to_json(const CartanDatum &cd);
CartanDatum cartan_from_json(const Json &j);

// {"rows", "cols", "entries": [[i, j, value], ...]} in column-major order
Json to_json(const SparseMatrix &m);
SparseMatrix sparse_from_json(const Json &j);
Json to_json(const SparseVec &x);
SparseVec sparse_vec_from_json(const Json &j);

Json to_json(const Module &m);
Json to_json(const IrrepModule &m);
Json to_json(const Report &r);

Json to_json(const QuantumLieAlgebra &A, const Report *checks = nullptr);
// Table, basis, provenance, parameters and normalization flag; the action is not stored.
QuantumLieAlgebra algebra_from_json(const Json &j);

// One line per nonzero constant in (a, b, c) order: "f[a,b]^{c} = value".
std::string to_text(const QuantumLieAlgebra &A);
// Reads a text table back against the basis of `shape`.
QuantumLieAlgebra algebra_from_text(const std::string &text, const QuantumLieAlgebra &shape);

}  // namespace qla
