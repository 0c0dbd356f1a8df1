#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <boost/rational.hpp>

namespace mmk {

using Rational = boost::rational<std::int64_t>;

enum class Family { su2, minimal };

/// Chiral algebra instance: SU(2) at level k, or the minimal model with parameter m.
struct Algebra {
  Family family = Family::su2;
  int level = 1;  // k for su2, m for minimal

  static Algebra su2(int k) { return {Family::su2, k}; }
  static Algebra minimal(int m) { return {Family::minimal, m}; }

  friend bool operator==(const Algebra&, const Algebra&) = default;
};

std::string to_string(const Algebra& algebra);

struct Su2Label {
  int a = 0;
  friend auto operator<=>(const Su2Label&, const Su2Label&) = default;
};

/// Kac label (p, q); constructed values are canonical representatives of their class.
struct MinimalLabel {
  int p = 1;
  int q = 1;
  friend auto operator<=>(const MinimalLabel&, const MinimalLabel&) = default;
};

using Label = std::variant<Su2Label, MinimalLabel>;

std::string to_string(const Label& label);

/// Labels, S matrix, conformal weights and T phases of one rational chiral algebra.
///
/// Labels are ordered with the vacuum first. Weights, phases and the central
/// charge are exact; S is double precision.
struct ModularDatum {
  Algebra algebra;
  std::vector<Label> labels;
  Eigen::MatrixXd S;
  std::vector<Rational> h;
  std::vector<Rational> t;  // h - c/24 reduced to [0, 1)
  Rational c;

  std::size_t size() const { return labels.size(); }
  std::optional<std::size_t> index_of(const Label& label) const;
  /// Diagonal T = diag(exp(2 pi i t)).
  Eigen::VectorXcd T() const;
};

/// Reduces x to the representative in [0, 1).
Rational mod1(Rational x);

Rational central_charge(int m);
Rational weight(int m, int p, int q);
MinimalLabel canonical_label(int m, int p, int q);
/// Canonical labels of model m ordered by flat index (p-1)*m + (q-1).
std::vector<MinimalLabel> minimal_labels(int m);

ModularDatum su2_data(int k);
ModularDatum minimal_data(int m);

/// The minimal-model S matrix assembled from the SU(2) coset construction,
/// in the label order of minimal_data(m).
Eigen::MatrixXd minimal_S_coset(int m);

/// Angle (mod 1) of the statistical phase of the sector (p, q).
Rational statistical_phase(int m, int p, int q);

/// Residuals of the defining identities of modular data.
struct ModularResiduals {
  double symmetry = 0;        // max |S - S^T|
  double orthogonality = 0;   // max |S S^T - I|
  double s_squared = 0;       // max |S^2 - I|
  double modular = 0;         // max |(ST)^3 - S^2|
  double min_vacuum_row = 0;  // min_lambda S_{0 lambda}

  bool ok(double tol = 1e-9) const {
    return symmetry < tol && orthogonality < tol && s_squared < tol && modular < tol &&
           min_vacuum_row > 0;
  }
};

ModularResiduals check_modular_data(const ModularDatum& datum);

}  // namespace mmk
