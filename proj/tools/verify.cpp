#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mmk/classification.hpp"
#include "mmk/fusion.hpp"
#include "tables.hpp"

namespace mmk::verify {
namespace {

constexpr int kMaxLevel = 32;
constexpr int kMaxEnumeratedM = 12;

using Check = std::function<std::string()>;  // empty string = pass, else failure detail

CheckResult run_check(const std::string& name, const Check& check) {
  try {
    const std::string failure = check();
    return {name, failure.empty(), failure};
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

std::set<std::string> constructed_labels(const Algebra& algebra) {
  std::set<std::string> out;
  if (algebra.family == Family::su2) {
    for (const auto& G : diagrams_with_coxeter(algebra.level + 2))
      if (su2_constructible(G, algebra.level)) out.insert(G.name());
    return out;
  }
  const int m = algebra.level;
  for (const auto& G : diagrams_with_coxeter(m))
    for (const auto& Gp : diagrams_with_coxeter(m + 1))
      if (su2_constructible(G, m - 2) && su2_constructible(Gp, m - 1))
        out.insert(InvariantLabel{G, Gp}.to_string());
  return out;
}

std::string enumeration_matches(const ModularDatum& datum, unsigned workers) {
  std::set<std::string> found;
  for (const auto& inv : enumerate_invariants(datum, {workers})) {
    if (!is_modular_invariant(datum, inv.Z)) return "unsound invariant at " + to_string(datum.algebra);
    found.insert(label_invariant(inv).to_string());
  }
  if (found != constructed_labels(datum.algebra)) return "enumerated set differs at " + to_string(datum.algebra);
  return {};
}

}  // namespace

std::vector<CheckResult> run_all(int max_m, unsigned workers) {
  std::vector<CheckResult> results;

  results.push_back(run_check("modular data identities", [&] {
    for (int k = 1; k <= kMaxLevel; ++k)
      if (!check_modular_data(su2_data(k)).ok()) return "su2 level " + std::to_string(k);
    for (int m = 3; m <= max_m; ++m)
      if (!check_modular_data(minimal_data(m)).ok()) return "minimal m=" + std::to_string(m);
    return std::string{};
  }));

  results.push_back(run_check("coset S matrix agreement", [&] {
    for (int m = 3; m <= max_m; ++m)
      if ((minimal_S_coset(m) - minimal_data(m).S).cwiseAbs().maxCoeff() >= 1e-10) return "m=" + std::to_string(m);
    return std::string{};
  }));

  results.push_back(run_check("phase identity", [&] {
    for (int m = 3; m <= max_m; ++m)
      for (const auto& l : minimal_labels(m))
        if (statistical_phase(m, l.p, l.q) != mod1(weight(m, l.p, l.q))) return "m=" + std::to_string(m);
    for (int m = 3; m <= 100; ++m) {
      const auto sc = simple_current_locality(m);
      if (sc.local != (m % 4 == 1 || m % 4 == 2)) return "simple current at m=" + std::to_string(m);
    }
    return std::string{};
  }));

  results.push_back(run_check("fusion: Verlinde equals combinatorial rule", [&] {
    for (int m = 3; m <= max_m; ++m)
      if (!(verlinde(minimal_data(m)) == minimal_fusion_ring(m))) return "m=" + std::to_string(m);
    for (int k = 1; k <= kMaxLevel; ++k) {
      const auto N = verlinde(su2_data(k));
      if (!N.has_unit() || !N.is_commutative() || !N.is_associative()) return "su2 level " + std::to_string(k);
    }
    return std::string{};
  }));

  results.push_back(run_check("global index", [&] {
    for (int m = 3; m <= max_m; ++m) {
      const auto d = minimal_data(m);
      const double mu = mu_index(d);
      double sum = 0;
      for (std::size_t i = 0; i < d.size(); ++i) sum += qdim(d, i) * qdim(d, i);
      if (std::abs(mu / minimal_mu_closed_form(m) - 1) >= 1e-9 || std::abs(sum / mu - 1) >= 1e-9)
        return "m=" + std::to_string(m);
    }
    return std::string{};
  }));

  results.push_back(run_check("enumeration matches A-D-E constructors", [&] {
    for (int k = 1; k <= kMaxLevel; ++k)
      if (auto f = enumeration_matches(su2_data(k), workers); !f.empty()) return f;
    for (int m = 3; m <= std::min(max_m, kMaxEnumeratedM); ++m)
      if (auto f = enumeration_matches(minimal_data(m), workers); !f.empty()) return f;
    return std::string{};
  }));

  results.push_back(run_check("constructed invariants pass the invariant test", [&] {
    for (int m = 3; m <= max_m; ++m) {
      const auto d = minimal_data(m);
      for (const auto& G : diagrams_with_coxeter(m))
        for (const auto& Gp : diagrams_with_coxeter(m + 1)) {
          if (!su2_constructible(G, m - 2) || !su2_constructible(Gp, m - 1)) continue;
          const auto inv = minimal_invariant(G, Gp, m);
          if (!is_modular_invariant(d, inv.Z)) return "m=" + std::to_string(m) + " " + G.name() + "," + Gp.name();
          if (!(label_invariant(inv) == InvariantLabel{G, Gp})) return "label round trip at m=" + std::to_string(m);
        }
    }
    return std::string{};
  }));

  results.push_back(run_check("classification tables", [&] {
    for (const char* which : {"min-I", "min-II", "su2-ext", "vir-mod-I"}) tables::build(which, max_m);
    for (int m = 3; m <= max_m; ++m) {
      const auto entries = classify_minimal(m);
      const std::size_t expected = 1 + (m % 4 == 1 || m % 4 == 2 ? 1 : 0) +
                                   (m == 11 || m == 12 || m == 29 || m == 30 ? 1 : 0);
      if (entries.size() != expected) return "cardinality at m=" + std::to_string(m);
      for (const auto& e : entries)
        if (std::abs(e.mu_extension * e.index * e.index / mu_index(minimal_data(m)) - 1) >= 1e-9)
          return "global index relation at m=" + std::to_string(m);
      for (const auto& e : classify_minimal_type_II(m))
        if (e.type_I) return "type II entry accepted as type I at m=" + std::to_string(m);
    }
    return std::string{};
  }));

  results.push_back(run_check("subnet counts", [&] {
    for (int m = 3; m <= max_m; ++m) {
      std::set<int> s;
      for (const auto& e : classify_minimal(m)) s.insert(e.subnets);
      const bool two = m % 4 == 1 || m % 4 == 2 || m == 11 || m == 12;
      const bool three = m == 29 || m == 30;
      if (!s.contains(1) || s.contains(2) != two || s.contains(3) != three) return "m=" + std::to_string(m);
    }
    return std::string{};
  }));

  return results;
}

bool report(const std::vector<CheckResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.ok ? "PASS " : "FAIL ") << r.name;
    if (!r.ok) out << ": " << r.detail;
    out << "\n";
    all = all && r.ok;
  }
  return all;
}

}  // namespace mmk::verify
