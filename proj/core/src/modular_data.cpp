#include "mmk/modular_data.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mmk/errors.hpp"

namespace mmk {
namespace {

constexpr double kPi = std::numbers::pi;

void require_minimal_range(int m, int p, int q) {
  if (m < 2) throw DomainError("minimal model parameter m must be >= 2, got " + std::to_string(m));
  if (p < 1 || p > m - 1 || q < 1 || q > m) {
    std::ostringstream os;
    os << "Kac label (" << p << "," << q << ") out of range for m=" << m;
    throw DomainError(os.str());
  }
}

int flat_index(int m, int p, int q) { return (p - 1) * m + (q - 1); }

Eigen::MatrixXd su2_S(int k) {
  const int n = k + 1;
  const double norm = std::sqrt(2.0 / (k + 2));
  Eigen::MatrixXd S(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      S(a, b) = norm * std::sin(kPi * (a + 1) * (b + 1) / (k + 2));
  return S;
}

}  // namespace

std::string to_string(const Algebra& algebra) {
  return algebra.family == Family::su2 ? "su2 level " + std::to_string(algebra.level)
                                       : "minimal m=" + std::to_string(algebra.level);
}

std::string to_string(const Label& label) {
  if (const auto* s = std::get_if<Su2Label>(&label)) return std::to_string(s->a);
  const auto& l = std::get<MinimalLabel>(label);
  return "(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
}

std::optional<std::size_t> ModularDatum::index_of(const Label& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

Eigen::VectorXcd ModularDatum::T() const {
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double angle = 2.0 * kPi * boost::rational_cast<double>(t[i]);
    diag(static_cast<Eigen::Index>(i)) = std::polar(1.0, angle);
  }
  return diag;
}

Rational mod1(Rational x) {
  const auto whole = x.numerator() / x.denominator();
  x -= whole;
  if (x < Rational(0)) x += 1;
  return x;
}

Rational central_charge(int m) {
  if (m < 2) throw DomainError("central charge needs m >= 2, got " + std::to_string(m));
  return Rational(1) - Rational(6, static_cast<std::int64_t>(m) * (m + 1));
}

Rational weight(int m, int p, int q) {
  require_minimal_range(m, p, q);
  const std::int64_t r = static_cast<std::int64_t>(m + 1) * p - static_cast<std::int64_t>(m) * q;
  return Rational(r * r - 1, 4 * static_cast<std::int64_t>(m) * (m + 1));
}

MinimalLabel canonical_label(int m, int p, int q) {
  require_minimal_range(m, p, q);
  const int pp = m - p;
  const int qq = m + 1 - q;
  if (flat_index(m, pp, qq) < flat_index(m, p, q)) return {pp, qq};
  return {p, q};
}

std::vector<MinimalLabel> minimal_labels(int m) {
  if (m < 2) throw DomainError("minimal model parameter m must be >= 2");
  std::vector<MinimalLabel> out;
  out.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
  for (int p = 1; p <= m - 1; ++p)
    for (int q = 1; q <= m; ++q)
      if (canonical_label(m, p, q) == MinimalLabel{p, q}) out.push_back({p, q});
  return out;
}

ModularDatum su2_data(int k) {
  if (k < 1) throw DomainError("SU(2) level must be >= 1, got " + std::to_string(k));
  ModularDatum d;
  d.algebra = Algebra::su2(k);
  d.c = Rational(3 * k, k + 2);
  d.S = su2_S(k);
  for (int a = 0; a <= k; ++a) {
    d.labels.emplace_back(Su2Label{a});
    d.h.emplace_back(a * (a + 2), 4 * (k + 2));
    d.t.push_back(mod1(d.h.back() - d.c / 24));
  }
  return d;
}

ModularDatum minimal_data(int m) {
  if (m < 3) throw DomainError("minimal model data needs m >= 3, got " + std::to_string(m));
  ModularDatum d;
  d.algebra = Algebra::minimal(m);
  d.c = central_charge(m);
  const auto labels = minimal_labels(m);
  const auto n = static_cast<Eigen::Index>(labels.size());
  d.S.resize(n, n);
  const double norm = 2.0 * std::sqrt(2.0 / (static_cast<double>(m) * (m + 1)));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto [p, q] = labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto [pp, qq] = labels[static_cast<std::size_t>(j)];
      const int sign = ((1 + p * qq + q * pp) % 2 == 0) ? 1 : -1;
      d.S(i, j) = norm * sign * std::sin(kPi * (m + 1) * p * pp / m) *
                  std::sin(kPi * m * q * qq / (m + 1));
    }
  }
  for (const auto& l : labels) {
    d.labels.emplace_back(l);
    d.h.push_back(weight(m, l.p, l.q));
    d.t.push_back(mod1(d.h.back() - d.c / 24));
  }
  return d;
}

Eigen::MatrixXd minimal_S_coset(int m) {
  if (m < 3) throw DomainError("coset construction needs m >= 3, got " + std::to_string(m));
  const Eigen::MatrixXd s_low = su2_S(m - 2);
  const Eigen::MatrixXd s_one = su2_S(1);
  const Eigen::MatrixXd s_high = su2_S(m - 1);
  const auto labels = minimal_labels(m);
  const auto n = static_cast<Eigen::Index>(labels.size());
  Eigen::MatrixXd S(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int j = labels[static_cast<std::size_t>(i)].p - 1;
    const int k = labels[static_cast<std::size_t>(i)].q - 1;
    const int l = ((j - k) % 2 + 2) % 2;
    for (Eigen::Index b = 0; b < n; ++b) {
      const int jj = labels[static_cast<std::size_t>(b)].p - 1;
      const int kk = labels[static_cast<std::size_t>(b)].q - 1;
      const int ll = ((jj - kk) % 2 + 2) % 2;
      S(i, b) = 2.0 * s_low(j, jj) * s_one(l, ll) * s_high(k, kk);
    }
  }
  return S;
}

Rational statistical_phase(int m, int p, int q) {
  require_minimal_range(m, p, q);
  const std::int64_t mm = m;
  const std::int64_t num = (mm + 1) * p * p - mm * q * q - 1 + mm * (mm + 1) * (p - q) * (p - q);
  return mod1(Rational(num, 4 * mm * (mm + 1)));
}

ModularResiduals check_modular_data(const ModularDatum& datum) {
  const Eigen::MatrixXd& S = datum.S;
  const auto n = S.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  ModularResiduals r;
  r.symmetry = (S - S.transpose()).cwiseAbs().maxCoeff();
  r.orthogonality = (S * S.transpose() - I).cwiseAbs().maxCoeff();
  const Eigen::MatrixXd S2 = S * S;
  r.s_squared = (S2 - I).cwiseAbs().maxCoeff();
  const Eigen::MatrixXcd ST = S.cast<std::complex<double>>() * datum.T().asDiagonal();
  const Eigen::MatrixXcd cube = ST * ST * ST;
  r.modular = (cube - S2.cast<std::complex<double>>()).cwiseAbs().maxCoeff();
  r.min_vacuum_row = S.row(0).minCoeff();
  return r;
}

}  // namespace mmk
