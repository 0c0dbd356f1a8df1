#include "mmk/classification.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mmk/errors.hpp"
#include "mmk/fusion.hpp"

namespace mmk {
namespace {

struct KnownIndex {
  double value;
  const char* symbol;
};

const std::vector<KnownIndex>& known_indices() {
  static const std::vector<KnownIndex> table = {
      {1.0, "1"},
      {2.0, "2"},
      {3.0 + std::sqrt(3.0), "3+sqrt(3)"},
      {std::sqrt(30.0 - 6.0 * std::sqrt(5.0)) / (2.0 * std::sin(std::numbers::pi / 30.0)),
       "sqrt(30-6*sqrt(5))/(2*sin(pi/30))"},
  };
  return table;
}

std::string symbolic_index(double value) {
  for (const auto& k : known_indices())
    if (std::abs(value - k.value) < 1e-9) return k.symbol;
  return {};
}

bool has_kind(const InvariantLabel& label, DynkinKind kind) {
  return label.first.kind() == kind || (label.second && label.second->kind() == kind);
}

ClassificationEntry make_entry(const ModularDatum& datum, InvariantLabel label, ModularInvariant Z) {
  ClassificationEntry e;
  e.algebra = datum.algebra;
  e.label = std::move(label);
  e.Z = std::move(Z);
  for (Eigen::Index b = 0; b < e.Z.Z.cols(); ++b)
    if (e.Z.Z(0, b) != 0) e.theta.emplace_back(static_cast<std::size_t>(b), e.Z.Z(0, b));
  e.index = extension_index(e, datum);
  e.index_symbolic = symbolic_index(e.index);
  e.mu_extension = mu_of_extension(e, datum);
  const TypeIDecision decision = is_type_I(e.Z);
  e.type_I = decision.type_I;
  e.blocks = decision.blocks;
  e.counts = sector_counts(e);
  if (e.type_I && e.algebra.family == Family::minimal) e.subnets = subnet_count(e);
  return e;
}

// Every admissible pair at m, split by the Gram-factorization test.
std::pair<std::vector<ClassificationEntry>, std::vector<ClassificationEntry>> minimal_entries(int m) {
  if (m < 3) throw DomainError("minimal model classification needs m >= 3, got " + std::to_string(m));
  const ModularDatum datum = minimal_data(m);
  std::vector<ClassificationEntry> type_one;
  std::vector<ClassificationEntry> type_two;
  for (const auto& G : diagrams_with_coxeter(m)) {
    if (!su2_constructible(G, m - 2)) continue;
    for (const auto& Gp : diagrams_with_coxeter(m + 1)) {
      if (!su2_constructible(Gp, m - 1)) continue;
      auto entry = make_entry(datum, {G, Gp}, minimal_invariant(G, Gp, m));
      (entry.type_I ? type_one : type_two).push_back(std::move(entry));
    }
  }
  return {std::move(type_one), std::move(type_two)};
}

std::vector<InvariantLabel> expected_type_one(int m) {
  using D = DynkinDiagram;
  std::vector<InvariantLabel> out{{D::A(m - 1), D::A(m)}};
  if (m % 4 == 1 && m >= 5) out.push_back({D::A(m - 1), D::D((m - 1) / 2 + 2)});
  if (m % 4 == 2 && m >= 6) out.push_back({D::D((m - 2) / 2 + 2), D::A(m)});
  if (m == 11) out.push_back({D::A(10), D::E(6)});
  if (m == 12) out.push_back({D::E(6), D::A(12)});
  if (m == 29) out.push_back({D::A(28), D::E(8)});
  if (m == 30) out.push_back({D::E(8), D::A(30)});
  return out;
}

std::vector<InvariantLabel> expected_type_two(int m) {
  using D = DynkinDiagram;
  std::vector<InvariantLabel> out;
  if (m % 4 == 0 && m >= 8) out.push_back({D::D(m / 2 + 1), D::A(m)});
  if (m % 4 == 3 && m >= 7) out.push_back({D::A(m - 1), D::D((m + 1) / 2 + 1)});
  if (m == 17) out.push_back({D::A(16), D::E(7)});
  if (m == 18) out.push_back({D::E(7), D::A(18)});
  return out;
}

void require_labels(const std::vector<ClassificationEntry>& entries, std::vector<InvariantLabel> expected,
                    const std::string& what, int m) {
  std::vector<InvariantLabel> got;
  for (const auto& e : entries) got.push_back(e.label);
  const auto by_name = [](const InvariantLabel& a, const InvariantLabel& b) { return a.to_string() < b.to_string(); };
  std::sort(got.begin(), got.end(), by_name);
  std::sort(expected.begin(), expected.end(), by_name);
  if (got != expected) {
    std::ostringstream os;
    os << what << " invariants at m=" << m << " do not match the known families";
    throw ClassificationError(os.str());
  }
}

}  // namespace

std::vector<ClassificationEntry> classify_su2(int k) {
  if (k < 1) throw DomainError("SU(2) level must be >= 1, got " + std::to_string(k));
  const ModularDatum datum = su2_data(k);
  std::vector<DynkinDiagram> diagrams{DynkinDiagram::A(k + 1)};
  if (k % 4 == 0 && k >= 4) diagrams.push_back(DynkinDiagram::D(k / 2 + 2));
  if (k == 10) diagrams.push_back(DynkinDiagram::E(6));
  if (k == 28) diagrams.push_back(DynkinDiagram::E(8));
  std::vector<ClassificationEntry> out;
  for (const auto& G : diagrams) {
    auto entry = make_entry(datum, {G, std::nullopt}, su2_invariant(G, k));
    if (!entry.type_I) throw ClassificationError(G.name() + " invariant at level " + std::to_string(k) + " is not type I");
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<ClassificationEntry> classify_minimal(int m) {
  auto [type_one, type_two] = minimal_entries(m);
  require_labels(type_one, expected_type_one(m), "type I", m);
  return std::move(type_one);
}

std::vector<ClassificationEntry> classify_minimal_type_II(int m) {
  auto [type_one, type_two] = minimal_entries(m);
  require_labels(type_two, expected_type_two(m), "type II", m);
  return std::move(type_two);
}

double extension_index(const ClassificationEntry& entry, const ModularDatum& datum) {
  if (!(entry.algebra == datum.algebra)) throw DomainError("entry and datum belong to different algebras");
  double index = 0;
  for (const auto& [label, multiplicity] : entry.theta) index += multiplicity * qdim(datum, label);
  return index;
}

SimpleCurrentLocality simple_current_locality(int m) {
  if (m < 3) throw DomainError("simple current locality needs m >= 3");
  const long exponent = static_cast<long>(m - 1) * (m - 2) / 2;
  const int phase = exponent % 2 == 0 ? 1 : -1;
  const Rational angle = mod1(weight(m, m - 1, 1));
  const int from_weight = angle == Rational(0) ? 1 : angle == Rational(1, 2) ? -1 : 0;
  if (from_weight != phase)
    throw ClassificationError("simple current phase disagrees with its conformal weight at m=" + std::to_string(m));
  const bool local = phase == 1;
  if (local != (m % 4 == 1 || m % 4 == 2))
    throw ClassificationError("simple current locality breaks the mod-4 rule at m=" + std::to_string(m));
  return {phase, local};
}

SectorCounts sector_counts(const ClassificationEntry& entry) {
  const IntMatrix& Z = entry.Z.Z;
  SectorCounts c;
  c.ab = Z.trace();
  c.full = (Z.cwiseProduct(Z)).sum();

  SectorCounts constants;
  if (entry.label.second) {
    const SectorCounts g = entry.label.first.counts();
    const SectorCounts gp = entry.label.second->counts();
    const auto half = [](int a, int b) {
      if ((a * b) % 2 != 0) throw ClassificationError("odd product of sector-count constants");
      return a * b / 2;
    };
    constants = {half(g.ab, gp.ab), half(g.full, gp.full), half(g.chiral, gp.chiral),
                 half(g.ambichiral, gp.ambichiral)};
  } else {
    constants = entry.label.first.counts();
  }
  if (c.ab != constants.ab || c.full != constants.full) {
    std::ostringstream os;
    os << entry.label.to_string() << ": traces (" << c.ab << ", " << c.full << ") disagree with constants ("
       << constants.ab << ", " << constants.full << ")";
    throw ClassificationError(os.str());
  }
  c.chiral = constants.chiral;
  c.ambichiral = constants.ambichiral;
  if (entry.type_I && (c.chiral != c.ab || c.ambichiral != static_cast<int>(entry.blocks.size()))) {
    std::ostringstream os;
    os << entry.label.to_string() << ": type I counts inconsistent (chiral " << c.chiral << " vs tr Z " << c.ab
       << ", ambichiral " << c.ambichiral << " vs " << entry.blocks.size() << " blocks)";
    throw ClassificationError(os.str());
  }
  return c;
}

int subnet_count(const ClassificationEntry& entry) {
  if (entry.algebra.family != Family::minimal) throw DomainError("subnet counts are defined for minimal-model extensions");
  if (!entry.type_I) throw DomainError("subnet count needs a local (type I) extension");
  const int m = entry.algebra.level;
  int s = 1;
  if (has_kind(entry.label, DynkinKind::E) &&
      (entry.label.first.rank() == 8 || (entry.label.second && entry.label.second->rank() == 8)))
    s = 3;
  else if (has_kind(entry.label, DynkinKind::D) || has_kind(entry.label, DynkinKind::E))
    s = 2;
  const bool two_ok = m % 4 == 1 || m % 4 == 2 || m == 11 || m == 12;
  const bool three_ok = m == 29 || m == 30;
  if ((s == 2 && !two_ok) || (s == 3 && !three_ok))
    throw ClassificationError("subnet count " + std::to_string(s) + " is impossible at m=" + std::to_string(m));
  return s;
}

double mu_of_extension(const ClassificationEntry& entry, const ModularDatum& datum) {
  const double index = extension_index(entry, datum);
  return mu_index(datum) / (index * index);
}

}  // namespace mmk
