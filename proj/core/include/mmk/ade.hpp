#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmk/invariants.hpp"

namespace mmk {

enum class DynkinKind { A, D, E };

/// Sizes of the four sector systems attached to a diagram:
/// A-B sectors, B-B sectors, chiral (alpha-induced) and ambichiral.
struct SectorCounts {
  int ab = 0;
  int full = 0;
  int chiral = 0;
  int ambichiral = 0;
  friend bool operator==(const SectorCounts&, const SectorCounts&) = default;
};

class DynkinDiagram {
 public:
  /// Throws DomainError for A_0, D_{n<3} and E_{n} outside {6,7,8}.
  DynkinDiagram(DynkinKind kind, int rank);

  static DynkinDiagram A(int n) { return {DynkinKind::A, n}; }
  static DynkinDiagram D(int n) { return {DynkinKind::D, n}; }
  static DynkinDiagram E(int n) { return {DynkinKind::E, n}; }

  DynkinKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int coxeter() const;
  /// Exponents in ascending order; D_even repeats n-1.
  std::vector<int> exponents() const;
  SectorCounts counts() const;
  /// "A11", "D7", "E6".
  std::string name() const;

  friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;
  friend auto operator<=>(const DynkinDiagram&, const DynkinDiagram&) = default;

 private:
  DynkinKind kind_;
  int rank_;
};

/// Parses "A11", "D7", "E6".
DynkinDiagram parse_diagram(const std::string& name);

std::vector<DynkinDiagram> diagrams_with_coxeter(int h);

/// Whether the SU(2) invariant of type G exists at level k.
bool su2_constructible(const DynkinDiagram& G, int k);

ModularInvariant su2_invariant(const DynkinDiagram& G, int k);

/// Invariant of model m from su2_invariant(G, m-2) and su2_invariant(Gp, m-1).
ModularInvariant minimal_invariant(const DynkinDiagram& G, const DynkinDiagram& Gp, int m);

/// A single diagram for SU(2), a pair for the minimal models.
struct InvariantLabel {
  DynkinDiagram first = DynkinDiagram::A(1);
  std::optional<DynkinDiagram> second;

  /// "E6" or "(A10,E6)".
  std::string to_string() const;
  friend bool operator==(const InvariantLabel&, const InvariantLabel&) = default;
};

/// Reads the A-D-E label off the diagonal of Z. Throws LabelingError when no
/// diagram (pair) matches.
InvariantLabel label_invariant(const ModularInvariant& Z);

struct TypeIDecision {
  bool type_I = false;
  /// Non-negative integer vectors b_i over labels with Z = sum_i b_i b_i^T.
  std::vector<std::vector<int>> blocks;
};

/// Decides whether Z = sum_i b_i b_i^T over non-negative integer vectors.
/// Throws UndecidedError after `node_limit` search nodes.
TypeIDecision is_type_I(const ModularInvariant& Z, long node_limit = 1'000'000);

}  // namespace mmk
