#include "ringlat/serialize.hpp"

namespace ringlat {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

unsigned need_unsigned(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number_unsigned()) fail(where, std::string(key) + " must be a non-negative integer");
    return v.get<unsigned>();
}

std::string need_string(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_string()) fail(where, std::string(key) + " must be a string");
    return v.get<std::string>();
}

} // namespace

Json field_to_json(const FieldPtr& field) {
    Json j;
    if (field->kind() == Field::Kind::GF) {
        j["kind"] = "gf";
        j["p"] = field->characteristic();
        j["f"] = field->degree();
        j["modulus"] = field->modulus();
    } else {
        j["kind"] = "rf";
        j["base"] = field_to_json(field->base());
        j["var"] = field->var();
    }
    return j;
}

FieldPtr field_from_json(const Json& j) {
    std::string kind = need_string(j, "kind", "field");
    if (kind == "gf") {
        unsigned p = need_unsigned(j, "p", "field");
        unsigned f = need_unsigned(j, "f", "field");
        const Json& mod = need(j, "modulus", "field");
        if (!mod.is_array()) fail("field", "modulus must be an array");
        std::vector<unsigned> coeffs;
        for (const Json& c : mod) {
            if (!c.is_number_unsigned()) fail("field", "modulus entries must be non-negative integers");
            coeffs.push_back(c.get<unsigned>());
        }
        try {
            return Field::gf(p, f, std::move(coeffs));
        } catch (const Error& e) {
            fail("field", e.what());
        }
    }
    if (kind == "rf") {
        FieldPtr base = field_from_json(need(j, "base", "field"));
        try {
            return Field::rf(base, need_string(j, "var", "field"));
        } catch (const Error& e) {
            fail("field", e.what());
        }
    }
    fail("field", "kind must be \"gf\" or \"rf\"");
}

Json scalar_to_json(const Scalar& a) {
    if (a.field()->kind() == Field::Kind::GF) return Json(a.gfCoords());
    Json num = Json::array();
    for (const Scalar& c : a.rfNum()) num.push_back(scalar_to_json(c));
    Json den = Json::array();
    for (const Scalar& c : a.rfDen()) den.push_back(scalar_to_json(c));
    return Json{{"num", std::move(num)}, {"den", std::move(den)}};
}

Scalar scalar_from_json(const Json& j, const FieldPtr& field) {
    if (field->kind() == Field::Kind::GF) {
        if (!j.is_array()) fail("scalar", "GF scalar must be a coordinate array");
        if (j.size() != field->degree())
            fail("scalar", "coordinate array length must equal the field degree");
        std::vector<unsigned> coords;
        for (const Json& c : j) {
            if (!c.is_number_unsigned()) fail("scalar", "coordinates must be non-negative integers");
            coords.push_back(c.get<unsigned>());
        }
        try {
            return Scalar::makeGF(field, std::move(coords));
        } catch (const Error& e) {
            fail("scalar", e.what());
        }
    }
    const Json& num = need(j, "num", "scalar");
    const Json& den = need(j, "den", "scalar");
    if (!num.is_array() || !den.is_array()) fail("scalar", "num/den must be arrays");
    std::vector<Scalar> n, d;
    for (const Json& c : num) n.push_back(scalar_from_json(c, field->base()));
    for (const Json& c : den) d.push_back(scalar_from_json(c, field->base()));
    try {
        return Scalar::makeRF(field, std::move(n), std::move(d));
    } catch (const Error& e) {
        fail("scalar", e.what());
    }
}

Json vec_to_json(const Vec& v) {
    Json j = Json::array();
    for (const Scalar& a : v) j.push_back(scalar_to_json(a));
    return j;
}

Vec vec_from_json(const Json& j, const FieldPtr& field) {
    if (!j.is_array()) fail("vector", "expected an array of scalars");
    Vec v;
    for (const Json& a : j) v.push_back(scalar_from_json(a, field));
    return v;
}

Json mat_to_json(const Mat& m) {
    Json j = Json::array();
    for (const Vec& row : m) j.push_back(vec_to_json(row));
    return j;
}

Mat mat_from_json(const Json& j, const FieldPtr& field) {
    if (!j.is_array()) fail("matrix", "expected an array of rows");
    Mat m;
    for (const Json& row : j) m.push_back(vec_from_json(row, field));
    return m;
}

Json algebra_to_json(const AlgebraPtr& a) {
    Json j;
    j["field"] = field_to_json(a->field());
    j["dim"] = a->dim();
    j["basis"] = a->basisNames();
    j["unit"] = vec_to_json(a->unitCoords());
    Json table = Json::array();
    for (size_t i = 0; i < a->dim(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < a->dim(); ++k) row.push_back(vec_to_json(a->tableEntry(i, k)));
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

AlgebraPtr algebra_from_json(const Json& j) {
    FieldPtr field = field_from_json(need(j, "field", "algebra"));
    size_t dim = need_unsigned(j, "dim", "algebra");
    if (dim == 0) fail("algebra", "dim must be positive");
    std::vector<std::string> names;
    if (j.contains("basis")) {
        const Json& b = j["basis"];
        if (!b.is_array()) fail("algebra", "basis must be an array of names");
        for (const Json& n : b) {
            if (!n.is_string()) fail("algebra", "basis names must be strings");
            names.push_back(n.get<std::string>());
        }
        if (names.size() != dim) fail("algebra", "basis names must match dim");
    }
    Vec unit = vec_from_json(need(j, "unit", "algebra"), field);
    if (unit.size() != dim) fail("algebra", "unit vector length must equal dim");
    const Json& table = need(j, "table", "algebra");
    if (!table.is_array() || table.size() != dim) fail("algebra", "table must have dim rows");
    std::vector<std::vector<Vec>> t(dim);
    for (size_t i = 0; i < dim; ++i) {
        if (!table[i].is_array() || table[i].size() != dim)
            fail("algebra", "table row " + std::to_string(i) + " must have dim entries");
        for (size_t k = 0; k < dim; ++k) {
            Vec e = vec_from_json(table[i][k], field);
            if (e.size() != dim)
                fail("algebra", "table entry (" + std::to_string(i) + "," + std::to_string(k) +
                                    ") must have length dim");
            t[i].push_back(std::move(e));
        }
    }
    try {
        return Algebra::make(field, dim, std::move(t), std::move(unit), std::move(names));
    } catch (const Error& e) {
        fail("algebra", e.what());
    }
}

Json extension_to_json(const ExtensionInstance& e) {
    Json j = algebra_to_json(e.s);
    Json out;
    out["id"] = e.id;
    for (auto& [k, v] : j.items()) out[k] = v;
    out["R_basis"] = mat_to_json(e.r.space().basis().rows);
    if (!e.expected.is_null()) out["expected"] = e.expected;
    return out;
}

ExtensionInstance extension_from_json(const Json& j) {
    std::string id =
        j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>() : "unnamed";
    AlgebraPtr s = algebra_from_json(j);
    Mat rows = mat_from_json(need(j, "R_basis", "extension"), s->field());
    for (const Vec& row : rows)
        if (row.size() != s->dim()) fail("extension", "R_basis rows must have length dim");
    std::optional<Subalgebra> r;
    try {
        Subspace sp(s, rows);
        if (!sp.contains(s->unitCoords())) fail("extension", "R_basis must contain the unit");
        r.emplace(sp);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        fail("extension", err.what());
    }
    Json expected = j.contains("expected") ? j["expected"] : Json();
    return ExtensionInstance{std::move(id), std::move(s), std::move(*r), std::move(expected)};
}

ExtensionInstance parse_extension(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    return extension_from_json(j);
}

} // namespace ringlat
