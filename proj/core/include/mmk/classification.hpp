#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmk/ade.hpp"
#include "mmk/modular_data.hpp"

namespace mmk {

/// One extension of SU(2)_k or of a minimal model, with its invariant and
/// the numerical data attached to it.
struct ClassificationEntry {
  Algebra algebra;
  InvariantLabel label;
  ModularInvariant Z;
  /// Vacuum row of Z: (label position, multiplicity) for nonzero entries.
  std::vector<std::pair<std::size_t, int>> theta;
  double index = 0;
  /// Closed form of the index when it is one of the known values, else empty.
  std::string index_symbolic;
  double mu_extension = 0;
  SectorCounts counts;
  bool type_I = false;
  std::vector<std::vector<int>> blocks;
  /// Number of intermediate subnets; 0 for entries that are not local.
  int subnets = 0;
};

/// Local extensions of SU(2)_k: A_{k+1}, D_{k/2+2} for k = 0 mod 4, E6 at 10, E8 at 28.
std::vector<ClassificationEntry> classify_su2(int k);

/// Local extensions of the minimal model m (type I invariants).
std::vector<ClassificationEntry> classify_minimal(int m);

/// Type II invariants of model m: D_odd pairs and E7 pairs.
std::vector<ClassificationEntry> classify_minimal_type_II(int m);

/// Sum of quantum dimensions over theta.
double extension_index(const ClassificationEntry& entry, const ModularDatum& datum);

struct SimpleCurrentLocality {
  int phase = 1;
  bool local = true;
};

/// Statistics phase of the order-two sector (m-1, 1) and whether the index-2
/// extension it generates is local.
SimpleCurrentLocality simple_current_locality(int m);

/// (tr Z, tr ZZ^T, chiral, ambichiral). Throws ClassificationError when the
/// matrix traces disagree with the per-diagram constants, or for type I
/// entries when chiral != tr Z or ambichiral != number of blocks.
SectorCounts sector_counts(const ClassificationEntry& entry);

/// Number of subnets; requires a type I entry.
int subnet_count(const ClassificationEntry& entry);

/// Global index of the base datum divided by index^2.
double mu_of_extension(const ClassificationEntry& entry, const ModularDatum& datum);

}  // namespace mmk
