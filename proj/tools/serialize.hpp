#pragma once

#include <string>

#include "json.hpp"
#include "mmk/classification.hpp"
#include "mmk/fusion.hpp"

namespace mmk::io {

using json = nlohmann::ordered_json;

std::string rational_string(const Rational& r);

json algebra_json(const Algebra& algebra);
/// Throws DomainError on an unknown or malformed algebra object.
Algebra algebra_from_json(const json& j);

json label_json(const Label& label);
json labels_json(const ModularDatum& datum);

json datum_json(const ModularDatum& datum);
json fusion_json(const Label& left, const Label& right, const std::vector<Label>& result);

/// {"algebra", "Z", "labels"} plus "label" when the A-D-E label is known.
json invariant_json(const ModularDatum& datum, const ModularInvariant& inv);
/// Reads {"algebra", "Z"[, "labels"]}; labels, when present, must match the datum.
ModularInvariant invariant_from_json(const json& j);

json label_result_json(const ModularDatum& datum, const ModularInvariant& inv);
json entry_json(const ModularDatum& datum, const ClassificationEntry& entry);

}  // namespace mmk::io
