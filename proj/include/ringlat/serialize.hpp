#ifndef RINGLAT_SERIALIZE_HPP
#define RINGLAT_SERIALIZE_HPP

#include <json.hpp>

#include "ringlat/algebra.hpp"

namespace ringlat {

/// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// {"kind":"gf","p":2,"f":2,"modulus":[1,1,1]} or
/// {"kind":"rf","base":{...},"var":"t"}.
Json field_to_json(const FieldPtr& field);
FieldPtr field_from_json(const Json& j);

/// GF scalars are coordinate arrays over F_p (constant first); RF scalars are
/// {"num":[...],"den":[...]} coefficient arrays over the base field.
Json scalar_to_json(const Scalar& a);
Scalar scalar_from_json(const Json& j, const FieldPtr& field);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j, const FieldPtr& field);
Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, const FieldPtr& field);

/// {"field":..., "dim":n, "basis":[names], "unit":vec, "table":[[vec,...]]};
/// the table is the full dim x dim matrix of product coordinate vectors.
Json algebra_to_json(const AlgebraPtr& a);
AlgebraPtr algebra_from_json(const Json& j);

/// An extension fixture: the ambient algebra plus {"R_basis":[[...]]} row
/// vectors spanning R, an "id" string, and optional "expected" metadata used
/// by the data-driven acceptance checks.
struct ExtensionInstance {
    std::string id;
    AlgebraPtr s;
    Subalgebra r;
    Json expected;  // may be null
};

Json extension_to_json(const ExtensionInstance& e);
ExtensionInstance extension_from_json(const Json& j);

/// Parses a whole document, converting json exceptions into ParseError with
/// the offending path in the message.
ExtensionInstance parse_extension(const std::string& text);

} // namespace ringlat

#endif
