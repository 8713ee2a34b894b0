#include "liep/json_io.hpp"

namespace liep {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

int need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

ojson field_to_json(const Field& F) {
    ojson j;
    j["p"] = F.p();
    j["k"] = F.k();
    if (F.k() > 1) j["modulus"] = F.modulus();
    return j;
}

Field field_from_json(const json& j) {
    const int p = need_int(j, "p");
    const int k = need_int(j, "k");
    std::vector<int> modulus;
    if (j.contains("modulus")) {
        const json& m = j.at("modulus");
        if (!m.is_array()) throw ParseError("'modulus' must be an array of integers");
        for (const auto& c : m) {
            if (!c.is_number_integer()) throw ParseError("'modulus' must be an array of integers");
            modulus.push_back(c.get<int>());
        }
    }
    return Field(p, k, std::move(modulus));
}

ojson fe_to_json(const Field& F, Fe a) { return ojson(F.coeffs(a)); }

Fe fe_from_json(const Field& F, const json& j) {
    if (!j.is_array()) throw ParseError("field element must be an array of coefficients");
    std::vector<int> coeffs;
    for (const auto& c : j) {
        if (!c.is_number_integer()) throw ParseError("field element coefficients must be integers");
        coeffs.push_back(c.get<int>());
    }
    return F.from_coeffs(coeffs);
}

ojson vec_to_json(const Field& F, const Vec& v) {
    ojson j = ojson::array();
    for (int i = 0; i < v.size(); ++i) j.push_back(fe_to_json(F, v[i]));
    return j;
}

Vec vec_from_json(const Field& F, int dim, const json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError("coordinate vector must have exactly dim entries");
    Vec v = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) v[i] = fe_from_json(F, j.at(i));
    return v;
}

ojson algebra_to_json(const LieAlg& L) {
    ojson j;
    j["field"] = field_to_json(L.field());
    j["dim"] = L.dim();
    ojson brackets = ojson::array();
    for (int i = 0; i < L.dim(); ++i)
        for (int jj = i + 1; jj < L.dim(); ++jj) {
            if (L.sc(i, jj).is_zero()) continue;
            ojson b;
            b["i"] = i + 1;
            b["j"] = jj + 1;
            b["value"] = vec_to_json(L.field(), L.sc(i, jj));
            brackets.push_back(b);
        }
    j["brackets"] = brackets;
    return j;
}

LieAlg algebra_from_json(const json& j) {
    Field F = field_from_json(need(j, "field"));
    const int dim = need_int(j, "dim");
    if (dim < 1 || dim > max_dim) throw ParseError("dim must be between 1 and 4");
    std::vector<BracketEntry> entries;
    if (j.contains("brackets")) {
        const json& bs = j.at("brackets");
        if (!bs.is_array()) throw ParseError("'brackets' must be an array");
        for (const auto& b : bs) {
            const int bi = need_int(b, "i"), bj = need_int(b, "j");
            if (bi < 1 || bj > dim || bi >= bj)
                throw ParseError("bracket indices must satisfy 1 <= i < j <= dim");
            entries.push_back({bi - 1, bj - 1, vec_from_json(F, dim, need(b, "value"))});
        }
    }
    return LieAlg(std::move(F), dim, entries);
}

ojson pmap_to_json(const Field& F, const PMapImages& P) {
    ojson j;
    ojson imgs = ojson::array();
    for (int i = 0; i < P.dim; ++i) imgs.push_back(vec_to_json(F, P.imgs[i]));
    j["images"] = imgs;
    return j;
}

PMapImages pmap_from_json(const Field& F, int dim, const json& j) {
    const json& imgs = need(j, "images");
    if (!imgs.is_array() || static_cast<int>(imgs.size()) != dim)
        throw ParseError("'images' must list exactly dim image vectors");
    PMapImages P = PMapImages::zero(dim);
    for (int i = 0; i < dim; ++i) P.imgs[i] = vec_from_json(F, dim, imgs.at(i));
    return P;
}

ojson restricted_to_json(const RestrictedAlg& R) {
    ojson j;
    j["algebra"] = algebra_to_json(R.alg);
    j["pmap"] = pmap_to_json(R.alg.field(), R.pmap);
    return j;
}

RestrictedAlg restricted_from_json(const json& j) {
    LieAlg L = algebra_from_json(need(j, "algebra"));
    PMapImages P = pmap_from_json(L.field(), L.dim(), need(j, "pmap"));
    return make_restricted(std::move(L), P);
}

ojson mat_to_json(const Field& F, const Mat& M) {
    ojson j = ojson::array();
    for (int i = 0; i < M.rows; ++i) j.push_back(vec_to_json(F, M.row(i)));
    return j;
}

Mat mat_from_json(const Field& F, int dim, const json& j) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw ParseError("matrix must have exactly dim rows");
    Mat M = Mat::zero(dim, dim);
    for (int i = 0; i < dim; ++i) M.set_row(i, vec_from_json(F, dim, j.at(i)));
    return M;
}

ojson label_to_json(const Field& F, const IsoLabel& l) {
    ojson j;
    j["family"] = l.family;
    ojson params = ojson::array();
    for (Fe p : l.params) params.push_back(fe_to_json(F, p));
    j["params"] = params;
    return j;
}

ojson classlist_to_json(const Field& F, const ClassList& cl) {
    ojson j;
    j["algebra"] = cl.algebra;
    ojson entries = ojson::array();
    for (const ClassEntry& e : cl.entries) {
        ojson entry;
        entry["label"] = label_to_json(F, e.label);
        entry["images"] = pmap_to_json(F, e.rep)["images"];
        entries.push_back(entry);
    }
    j["classes"] = entries;
    if (!cl.note.empty()) j["note"] = cl.note;
    return j;
}

ojson report_to_json(const Field& F, const OrbitReport& r) {
    ojson j;
    j["algebra"] = r.algebra;
    j["field"] = field_to_json(F);
    j["total"] = r.total;
    ojson orbits = ojson::array();
    for (const OrbitEntry& o : r.orbits) {
        ojson e;
        e["size"] = o.size;
        e["representative"] = pmap_to_json(F, o.representative)["images"];
        e["label"] = label_to_json(F, o.label);
        orbits.push_back(e);
    }
    j["orbits"] = orbits;
    j["mismatches"] = r.mismatches;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ojson class_database(const Field& F) {
    ojson j;
    j["field"] = field_to_json(F);
    ojson algebras = ojson::array();
    for (int dim = 1; dim <= max_dim; ++dim)
        for (const LieAlg& L : catalog(F, dim)) {
            ojson a;
            a["algebra"] = L.name();
            a["dim"] = dim;
            ojson body = classlist_to_json(F, list_classes(L));
            a["classes"] = body["classes"];
            if (body.contains("note")) a["note"] = body["note"];
            algebras.push_back(a);
        }
    j["algebras"] = algebras;
    return j;
}

} // namespace liep
