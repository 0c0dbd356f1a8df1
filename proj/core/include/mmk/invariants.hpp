#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmk/modular_data.hpp"

namespace mmk {

using IntMatrix = Eigen::MatrixXi;

/// Non-negative integer matrix over the labels of a datum with Z_00 = 1,
/// commuting with S and T.
struct ModularInvariant {
  Algebra algebra;
  IntMatrix Z;

  friend bool operator==(const ModularInvariant& a, const ModularInvariant& b) {
    return a.algebra == b.algebra && a.Z == b.Z;
  }
};

/// Lexicographic order on the row-major flattening of Z.
bool flat_less(const IntMatrix& a, const IntMatrix& b);

/// Largest value allowed at (a, b): floor(1 / (S_0a S_0b) + 1e-9).
int entry_bound(const ModularDatum& datum, std::size_t a, std::size_t b);

struct Coordinate {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

/// Reduced basis of {Z : ZS = SZ, supp Z within the equal-T-phase pairs}.
///
/// Coordinates are listed in `support`; each basis vector has one entry per
/// support coordinate. `pivots[i]` is the support position at which basis
/// vector i is 1 and every other basis vector is 0.
struct CommutantBasis {
  std::vector<Coordinate> support;
  std::vector<Eigen::VectorXd> basis;
  std::vector<std::size_t> pivots;
  /// Smallest singular value kept as nonzero and largest treated as zero.
  double smallest_kept = 0;
  double largest_dropped = 0;

  std::size_t dimension() const { return basis.size(); }
  Eigen::MatrixXd matrix(std::size_t i, std::size_t n) const;
};

/// Computes the commutant basis. Singular values of the commutator system
/// below 1e-10 count as zero, above 1e-8 as nonzero; anything in between
/// raises ConditioningError.
CommutantBasis commutant_basis(const ModularDatum& datum);

struct EnumerateOptions {
  /// 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// All modular invariants of the datum, sorted by flat_less.
std::vector<ModularInvariant> enumerate_invariants(const ModularDatum& datum,
                                                   const EnumerateOptions& options = {});

/// Outcome of is_modular_invariant. `condition` names the first violated
/// requirement: "shape", "vacuum", "negative", "bound", "T-support" or "S-commutation".
struct InvariantCheck {
  bool ok = true;
  std::string condition;
  int row = -1;
  int col = -1;
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Checks every defining condition; throws DomainError on a shape mismatch.
InvariantCheck is_modular_invariant(const ModularDatum& datum, const IntMatrix& Z);

}  // namespace mmk
