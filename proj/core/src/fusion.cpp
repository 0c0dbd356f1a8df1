#include "mmk/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mmk/errors.hpp"

namespace mmk {
namespace {

constexpr double kVerlindeTolerance = 1e-6;

void require_canonical(int m, MinimalLabel l) {
  if (canonical_label(m, l.p, l.q) != l) {
    std::ostringstream os;
    os << "label (" << l.p << "," << l.q << ") is not canonical for m=" << m;
    throw DomainError(os.str());
  }
}

}  // namespace

Eigen::MatrixXd FusionCoefficients::matrix(std::size_t a) const {
  const auto n = static_cast<Eigen::Index>(rank_);
  Eigen::MatrixXd N(n, n);
  for (std::size_t b = 0; b < rank_; ++b)
    for (std::size_t c = 0; c < rank_; ++c)
      N(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(c)) = (*this)(a, b, c);
  return N;
}

bool FusionCoefficients::is_commutative() const {
  for (std::size_t a = 0; a < rank_; ++a)
    for (std::size_t b = 0; b < a; ++b)
      for (std::size_t c = 0; c < rank_; ++c)
        if ((*this)(a, b, c) != (*this)(b, a, c)) return false;
  return true;
}

bool FusionCoefficients::has_unit() const {
  for (std::size_t a = 0; a < rank_; ++a)
    for (std::size_t c = 0; c < rank_; ++c)
      if ((*this)(0, a, c) != (a == c ? 1 : 0)) return false;
  return true;
}

bool FusionCoefficients::is_associative() const {
  for (std::size_t a = 0; a < rank_; ++a)
    for (std::size_t b = 0; b < rank_; ++b)
      for (std::size_t c = 0; c < rank_; ++c)
        for (std::size_t d = 0; d < rank_; ++d) {
          long lhs = 0;
          long rhs = 0;
          for (std::size_t s = 0; s < rank_; ++s) {
            lhs += static_cast<long>((*this)(a, b, s)) * (*this)(s, c, d);
            rhs += static_cast<long>((*this)(b, c, s)) * (*this)(a, s, d);
          }
          if (lhs != rhs) return false;
        }
  return true;
}

std::vector<MinimalLabel> minimal_fusion(int m, MinimalLabel a, MinimalLabel b) {
  require_canonical(m, a);
  require_canonical(m, b);
  std::vector<MinimalLabel> out;
  const int r_hi = std::min(a.p + b.p - 1, 2 * m - a.p - b.p - 1);
  const int s_hi = std::min(a.q + b.q - 1, 2 * (m + 1) - a.q - b.q - 1);
  for (int r = std::abs(a.p - b.p) + 1; r <= r_hi; ++r) {
    if ((r + a.p + b.p) % 2 == 0) continue;
    for (int s = std::abs(a.q - b.q) + 1; s <= s_hi; ++s) {
      if ((s + a.q + b.q) % 2 == 0) continue;
      out.push_back(canonical_label(m, r, s));
    }
  }
  const auto flat = [m](MinimalLabel l) { return (l.p - 1) * m + (l.q - 1); };
  std::sort(out.begin(), out.end(), [&](auto x, auto y) { return flat(x) < flat(y); });
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    std::ostringstream os;
    os << "fusion of (" << a.p << "," << a.q << ") and (" << b.p << "," << b.q
       << ") has a repeated class at m=" << m;
    throw IntegralityError(os.str());
  }
  return out;
}

FusionCoefficients minimal_fusion_ring(int m) {
  const auto labels = minimal_labels(m);
  const auto position = [&](MinimalLabel l) {
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), l) - labels.begin());
  };
  FusionCoefficients N(labels.size());
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = 0; b < labels.size(); ++b)
      for (const auto& c : minimal_fusion(m, labels[a], labels[b])) N(a, b, position(c)) += 1;
  return N;
}

FusionCoefficients verlinde(const ModularDatum& datum) {
  const Eigen::MatrixXd& S = datum.S;
  const auto n = S.rows();
  if ((S * S - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-9)
    throw DomainError("verlinde expects S^2 = I (self-conjugate labels)");

  // W(s, c) = S_{cs} / S_{0s}; then N_{ab}^c = sum_s S_{as} S_{bs} W(s, c).
  Eigen::MatrixXd W(n, n);
  for (Eigen::Index s = 0; s < n; ++s) W.row(s) = S.col(s).transpose() / S(0, s);

  FusionCoefficients N(static_cast<std::size_t>(n));
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a; b < n; ++b) {
      const Eigen::RowVectorXd weights = S.row(a).cwiseProduct(S.row(b));
      const Eigen::RowVectorXd values = weights * W;
      for (Eigen::Index c = 0; c < n; ++c) {
        const double v = values(c);
        const double r = std::round(v);
        if (std::abs(v - r) >= kVerlindeTolerance || r < 0) {
          std::ostringstream os;
          os << "Verlinde coefficient N_{" << a << "," << b << "}^" << c << " = " << v
             << " is not a non-negative integer";
          throw IntegralityError(os.str());
        }
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        const auto uc = static_cast<std::size_t>(c);
        N(ua, ub, uc) = static_cast<int>(r);
        N(ub, ua, uc) = static_cast<int>(r);
      }
    }
  }
  return N;
}

double qdim(const ModularDatum& datum, std::size_t label) {
  if (label >= datum.size()) throw DomainError("label index out of range");
  return datum.S(0, static_cast<Eigen::Index>(label)) / datum.S(0, 0);
}

double perron_frobenius(const FusionCoefficients& fusion, std::size_t label) {
  if (label >= fusion.rank()) throw DomainError("label index out of range");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(fusion.matrix(label), false);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double mu_index(const ModularDatum& datum) { return 1.0 / (datum.S(0, 0) * datum.S(0, 0)); }

double minimal_mu_closed_form(int m) {
  if (m < 3) throw DomainError("closed-form global index needs m >= 3");
  const double a = std::sin(std::numbers::pi / m);
  const double b = std::sin(std::numbers::pi / (m + 1));
  return static_cast<double>(m) * (m + 1) / (8.0 * a * a * b * b);
}

}  // namespace mmk
