#include "serialize.hpp"

#include "mmk/errors.hpp"

namespace mmk::io {

std::string rational_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json algebra_json(const Algebra& algebra) {
  if (algebra.family == Family::su2) return {{"type", "su2"}, {"level", algebra.level}};
  return {{"type", "minimal"}, {"m", algebra.level}};
}

Algebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw DomainError("algebra must be an object with a \"type\"");
  const auto type = j.at("type").get<std::string>();
  if (type == "su2" && j.contains("level")) return Algebra::su2(j.at("level").get<int>());
  if (type == "minimal" && j.contains("m")) return Algebra::minimal(j.at("m").get<int>());
  throw DomainError("unknown algebra '" + j.dump() + "'");
}

json label_json(const Label& label) {
  if (const auto* s = std::get_if<Su2Label>(&label)) return s->a;
  const auto& l = std::get<MinimalLabel>(label);
  return json::array({l.p, l.q});
}

json labels_json(const ModularDatum& datum) {
  json out = json::array();
  for (const auto& l : datum.labels) out.push_back(label_json(l));
  return out;
}

json datum_json(const ModularDatum& datum) {
  json h = json::array();
  json t = json::array();
  for (std::size_t i = 0; i < datum.size(); ++i) {
    h.push_back(rational_string(datum.h[i]));
    t.push_back(rational_string(datum.t[i]));
  }
  json S = json::array();
  for (Eigen::Index i = 0; i < datum.S.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < datum.S.cols(); ++j) row.push_back(datum.S(i, j));
    S.push_back(std::move(row));
  }
  return {{"algebra", algebra_json(datum.algebra)},
          {"labels", labels_json(datum)},
          {"c", rational_string(datum.c)},
          {"h", std::move(h)},
          {"S", std::move(S)},
          {"t", std::move(t)}};
}

json fusion_json(const Label& left, const Label& right, const std::vector<Label>& result) {
  json r = json::array();
  for (const auto& l : result) r.push_back(label_json(l));
  return {{"left", label_json(left)}, {"right", label_json(right)}, {"result", std::move(r)}};
}

namespace {

json matrix_json(const IntMatrix& Z) {
  json out = json::array();
  for (Eigen::Index i = 0; i < Z.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < Z.cols(); ++j) row.push_back(Z(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

ModularDatum datum_for(const Algebra& algebra) {
  return algebra.family == Family::su2 ? su2_data(algebra.level) : minimal_data(algebra.level);
}

json blocks_json(const ModularDatum& datum, const std::vector<std::vector<int>>& blocks) {
  json out = json::array();
  for (const auto& b : blocks) {
    json block = json::array();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (int r = 0; r < b[i]; ++r) block.push_back(label_json(datum.labels[i]));
    out.push_back(std::move(block));
  }
  return out;
}

}  // namespace

json invariant_json(const ModularDatum& datum, const ModularInvariant& inv) {
  json j = {{"algebra", algebra_json(inv.algebra)}, {"Z", matrix_json(inv.Z)}, {"labels", labels_json(datum)}};
  try {
    j["label"] = label_invariant(inv).to_string();
  } catch (const LabelingError&) {
  }
  return j;
}

ModularInvariant invariant_from_json(const json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("Z"))
    throw DomainError("invariant JSON needs \"algebra\" and \"Z\"");
  ModularInvariant inv;
  inv.algebra = algebra_from_json(j.at("algebra"));
  const auto& rows = j.at("Z");
  if (!rows.is_array()) throw DomainError("\"Z\" must be an array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  inv.Z.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw DomainError("\"Z\" must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& v = row.at(static_cast<std::size_t>(k));
      if (!v.is_number_integer()) throw DomainError("\"Z\" entries must be integers");
      inv.Z(i, k) = v.get<int>();
    }
  }
  if (j.contains("labels")) {
    const ModularDatum datum = datum_for(inv.algebra);
    if (j.at("labels") != labels_json(datum))
      throw DomainError("\"labels\" do not match the canonical order for " + to_string(inv.algebra));
  }
  return inv;
}

json label_result_json(const ModularDatum& datum, const ModularInvariant& inv) {
  const auto label = label_invariant(inv);
  const auto decision = is_type_I(inv);
  return {{"label", label.to_string()}, {"typeI", decision.type_I}, {"blocks", blocks_json(datum, decision.blocks)}};
}

json entry_json(const ModularDatum& datum, const ClassificationEntry& e) {
  json theta = json::array();
  for (const auto& [label, mult] : e.theta) theta.push_back(json::array({label_json(datum.labels[label]), mult}));
  json j = {{"algebra", algebra_json(e.algebra)},
            {"label", e.label.to_string()},
            {"typeI", e.type_I},
            {"theta", std::move(theta)},
            {"index", e.index},
            {"mu", mu_index(datum)},
            {"mu_extension", e.mu_extension},
            {"counts", json::array({e.counts.ab, e.counts.full, e.counts.chiral, e.counts.ambichiral})},
            {"subnets", e.subnets},
            {"blocks", blocks_json(datum, e.blocks)}};
  if (!e.index_symbolic.empty()) j["index_symbolic"] = e.index_symbolic;
  return j;
}

}  // namespace mmk::io
