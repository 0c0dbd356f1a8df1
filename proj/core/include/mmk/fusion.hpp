#pragma once

#include <cstddef>
#include <vector>

#include "mmk/modular_data.hpp"

namespace mmk {

/// Fusion multiplicities N_{ab}^c over the label positions of a datum.
class FusionCoefficients {
 public:
  FusionCoefficients() = default;
  explicit FusionCoefficients(std::size_t rank) : rank_(rank), n_(rank * rank * rank, 0) {}

  std::size_t rank() const { return rank_; }
  int operator()(std::size_t a, std::size_t b, std::size_t c) const { return n_[index(a, b, c)]; }
  int& operator()(std::size_t a, std::size_t b, std::size_t c) { return n_[index(a, b, c)]; }

  /// Fusion matrix (N_a)_{bc} = N_{ab}^c.
  Eigen::MatrixXd matrix(std::size_t a) const;

  bool is_commutative() const;
  bool has_unit() const;
  bool is_associative() const;

  friend bool operator==(const FusionCoefficients&, const FusionCoefficients&) = default;

 private:
  std::size_t index(std::size_t a, std::size_t b, std::size_t c) const {
    return (a * rank_ + b) * rank_ + c;
  }

  std::size_t rank_ = 0;
  std::vector<int> n_;
};

/// Fusion product of two canonical labels of model m by the truncated double
/// sum over (r, s). Returns canonical labels sorted by flat index.
std::vector<MinimalLabel> minimal_fusion(int m, MinimalLabel a, MinimalLabel b);

/// All coefficients induced by minimal_fusion, in minimal_data(m) label order.
FusionCoefficients minimal_fusion_ring(int m);

/// Verlinde formula evaluated from S. Throws IntegralityError when a value
/// is further than 1e-6 from an integer or is negative.
FusionCoefficients verlinde(const ModularDatum& datum);

/// Quantum dimension S_{0a} / S_{00}.
double qdim(const ModularDatum& datum, std::size_t label);

/// Largest eigenvalue modulus of the fusion matrix N_a.
double perron_frobenius(const FusionCoefficients& fusion, std::size_t label);

/// Global index sum_a qdim(a)^2, computed as 1 / S_{00}^2.
double mu_index(const ModularDatum& datum);

/// m(m+1) / (8 sin^2(pi/m) sin^2(pi/(m+1))).
double minimal_mu_closed_form(int m);

}  // namespace mmk
