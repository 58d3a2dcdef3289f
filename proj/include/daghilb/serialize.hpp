#pragma once

// JSON round-trips for scalars, matrices, subspaces, and check reports.
// Scalars serialize to arrays whose length is the field arity: [w], [re,im],
// [w,x,y,z].  Everything uses alphabetically sorted keys so that identical
// inputs produce identical bytes.

#include <json.hpp>

#include "daghilb/matrix.hpp"
#include "daghilb/report.hpp"
#include "daghilb/subobject.hpp"

namespace daghilb {

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j, FieldTag f);

nlohmann::json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const nlohmann::json& j);

// {"ambient": n, "field": "C", "basis": [vector, ...]}.  Loading runs the
// spanning vectors through Gram-Schmidt, so the basis need not arrive
// orthonormal.
nlohmann::json subobject_to_json(const Subobject& s);
Subobject subobject_from_json(const nlohmann::json& j,
                              const ToleranceProfile& tol = default_tol());

nlohmann::json check_to_json(const CheckResult& c);
nlohmann::json report_to_json(const Report& r);

}  // namespace daghilb
