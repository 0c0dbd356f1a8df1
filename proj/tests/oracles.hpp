#pragma once

// Reference computations used by the tests. Everything here is written
// directly from the defining formulas and shares no code with mmk_core
// beyond the plain data types.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/rational.hpp>

namespace oracle {

using Q = boost::rational<long long>;
using KacLabel = std::pair<int, int>;

Q su2_weight(int k, int a);
Q minimal_weight(int m, int p, int q);
Q minimal_central_charge(int m);

/// Kac classes of model m, each represented by the member with the smaller
/// flat index (p-1)m + (q-1), ordered by that index.
std::vector<KacLabel> kac_classes(int m);
/// Position of (p, q) in kac_classes(m).
int kac_position(int m, int p, int q);

Eigen::MatrixXd su2_S(int k);
Eigen::MatrixXd minimal_S(int m);

/// N[(a * n + b) * n + c] by direct summation of the Verlinde formula,
/// rounded to the nearest integer.
std::vector<int> verlinde(const Eigen::MatrixXd& S);

/// Names of the A-D-E diagrams with Coxeter number h ("A11", "D7", "E6"),
/// excluding D3 which coincides with A3.
std::vector<std::string> diagrams_with_coxeter(int h);

/// Pair labels "(G,G')" of every minimal-model invariant at m.
std::vector<std::string> minimal_pairs(int m);

/// Expansion of a type I invariant from its character sum, in kac_classes order.
/// Supported labels are the seven type I families.
Eigen::MatrixXi table1_invariant(const std::string& label, int m);

struct Counts {
  int ab, full, chiral, ambichiral;
  bool operator==(const Counts&) const = default;
};

struct FamilyRow {
  std::string label;
  Counts counts;
  int subnets = 0;  // type I rows only
};

/// Rows of the type I and type II tables at m, from the closed forms.
std::vector<FamilyRow> type_I_rows(int m);
std::vector<FamilyRow> type_II_rows(int m);

/// Every invariant of the datum (S, equal-phase predicate) found by an
/// exhaustive bounded search over a set of free coordinates of the
/// commutant. Sorted by row-major lexicographic order.
struct BruteForceInput {
  Eigen::MatrixXd S;
  std::vector<Q> h;  // weights; equal T phase iff h_a - h_b is an integer
};
std::vector<Eigen::MatrixXi> brute_force_invariants(const BruteForceInput& input);

BruteForceInput su2_input(int k);
BruteForceInput minimal_input(int m);

}  // namespace oracle
