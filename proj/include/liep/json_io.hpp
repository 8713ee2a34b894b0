#pragma once

#include <json.hpp>

#include "liep/classify.hpp"
#include "liep/verify.hpp"

namespace liep {

// Parsing accepts any key order; everything we emit uses ordered_json with a
// fixed insertion order so equal invocations produce identical bytes.
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// {"p": int, "k": int, "modulus": [int,...]}; modulus omitted when k = 1.
ojson field_to_json(const Field& F);
Field field_from_json(const json& j);

// Fe: array of k integers, constant term first.
ojson fe_to_json(const Field& F, Fe a);
Fe fe_from_json(const Field& F, const json& j);

ojson vec_to_json(const Field& F, const Vec& v);
Vec vec_from_json(const Field& F, int dim, const json& j);

// {"field": ..., "dim": n, "brackets": [{"i":, "j":, "value": [Fe,...]}]}
// with 1-based i < j; omitted pairs are zero brackets.
ojson algebra_to_json(const LieAlg& L);
LieAlg algebra_from_json(const json& j);

// {"images": [[Fe,...], ...]}, row i = coordinates of x_i^{[p]}.
ojson pmap_to_json(const Field& F, const PMapImages& P);
PMapImages pmap_from_json(const Field& F, int dim, const json& j);

// {"algebra": ..., "pmap": ...}; the [p]-map is validated on load.
ojson restricted_to_json(const RestrictedAlg& R);
RestrictedAlg restricted_from_json(const json& j);

// automorphisms: row-major [[Fe,...],...]
ojson mat_to_json(const Field& F, const Mat& M);
Mat mat_from_json(const Field& F, int dim, const json& j);

// {"family": "...", "params": [Fe,...]}
ojson label_to_json(const Field& F, const IsoLabel& l);

ojson classlist_to_json(const Field& F, const ClassList& cl);
ojson report_to_json(const Field& F, const OrbitReport& r);

// The full class database for one field: every catalog algebra with its
// canonical class list.  Byte-stable across runs.
ojson class_database(const Field& F);

} // namespace liep
