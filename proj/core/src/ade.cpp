#include "mmk/ade.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "mmk/errors.hpp"

namespace mmk {
namespace {

std::string kind_letter(DynkinKind kind) {
  switch (kind) {
    case DynkinKind::A: return "A";
    case DynkinKind::D: return "D";
    case DynkinKind::E: return "E";
  }
  return "?";
}

int isqrt(int v) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Multiset {a+1 : a in 0..n-1, with multiplicity diag[a]} as a sorted vector.
std::vector<int> unfold_multiplicities(const std::vector<int>& diag) {
  std::vector<int> out;
  for (std::size_t a = 0; a < diag.size(); ++a)
    for (int i = 0; i < diag[a]; ++i) out.push_back(static_cast<int>(a) + 1);
  return out;
}

std::optional<DynkinDiagram> match_exponents(const std::vector<int>& multiset, int coxeter) {
  std::optional<DynkinDiagram> hit;
  for (const auto& G : diagrams_with_coxeter(coxeter)) {
    if (G.exponents() != multiset) continue;
    if (hit) throw LabelingError("diagonal matches more than one diagram with Coxeter number " + std::to_string(coxeter));
    hit = G;
  }
  return hit;
}

class GramSearch {
 public:
  GramSearch(IntMatrix residual, long limit) : r_(std::move(residual)), limit_(limit) {}

  bool solve() {
    if (++nodes_ > limit_) throw UndecidedError("type I search exceeded " + std::to_string(limit_) + " nodes");
    const auto n = r_.rows();
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) {
        const long v = r_(a, b);
        if (v == 0) continue;
        if (v < 0 || static_cast<long>(r_(a, a)) * r_(b, b) < v * v) return false;
      }
    Eigen::Index lead = 0;
    while (lead < n && r_(lead, lead) == 0) ++lead;
    if (lead == n) return true;

    std::vector<Eigen::Index> support{lead};
    for (Eigen::Index b = lead + 1; b < n; ++b)
      if (r_(lead, b) > 0) support.push_back(b);
    std::vector<int> values(support.size(), 0);
    return extend(support, values, 0);
  }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

 private:
  bool extend(const std::vector<Eigen::Index>& support, std::vector<int>& values, std::size_t i) {
    if (i == support.size()) return apply(support, values);
    const Eigen::Index mu = support[i];
    int hi = isqrt(r_(mu, mu));
    for (std::size_t j = 0; j < i; ++j)
      if (values[j] > 0) hi = std::min(hi, r_(mu, support[j]) / values[j]);
    const int lo = (i == 0) ? 1 : 0;
    for (int v = hi; v >= lo; --v) {
      values[i] = v;
      if (extend(support, values, i + 1)) return true;
    }
    values[i] = 0;
    return false;
  }

  bool apply(const std::vector<Eigen::Index>& support, const std::vector<int>& values) {
    for (std::size_t i = 0; i < support.size(); ++i)
      for (std::size_t j = 0; j < support.size(); ++j) r_(support[i], support[j]) -= values[i] * values[j];
    std::vector<int> block(static_cast<std::size_t>(r_.rows()), 0);
    for (std::size_t i = 0; i < support.size(); ++i) block[static_cast<std::size_t>(support[i])] = values[i];
    blocks_.push_back(std::move(block));
    if (solve()) return true;
    blocks_.pop_back();
    for (std::size_t i = 0; i < support.size(); ++i)
      for (std::size_t j = 0; j < support.size(); ++j) r_(support[i], support[j]) += values[i] * values[j];
    return false;
  }

  IntMatrix r_;
  long limit_;
  long nodes_ = 0;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace

DynkinDiagram::DynkinDiagram(DynkinKind kind, int rank) : kind_(kind), rank_(rank) {
  const bool ok = (kind == DynkinKind::A && rank >= 1) || (kind == DynkinKind::D && rank >= 3) ||
                  (kind == DynkinKind::E && rank >= 6 && rank <= 8);
  if (!ok) throw DomainError("no Dynkin diagram " + kind_letter(kind) + std::to_string(rank));
}

int DynkinDiagram::coxeter() const {
  switch (kind_) {
    case DynkinKind::A: return rank_ + 1;
    case DynkinKind::D: return 2 * rank_ - 2;
    case DynkinKind::E: return rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
  }
  return 0;
}

std::vector<int> DynkinDiagram::exponents() const {
  std::vector<int> e;
  switch (kind_) {
    case DynkinKind::A:
      e.resize(static_cast<std::size_t>(rank_));
      std::iota(e.begin(), e.end(), 1);
      break;
    case DynkinKind::D:
      for (int x = 1; x <= 2 * rank_ - 3; x += 2) e.push_back(x);
      e.push_back(rank_ - 1);
      break;
    case DynkinKind::E:
      if (rank_ == 6) e = {1, 4, 5, 7, 8, 11};
      if (rank_ == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (rank_ == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

SectorCounts DynkinDiagram::counts() const {
  const int n = rank_;
  switch (kind_) {
    case DynkinKind::A: return {n, n, n, n};
    case DynkinKind::D:
      if (n % 2 == 0) return {n, 2 * n, n, (n + 2) / 2};
      return {n, 2 * n - 3, 2 * n - 3, 2 * n - 3};
    case DynkinKind::E:
      if (n == 6) return {6, 12, 6, 3};
      if (n == 7) return {7, 17, 10, 6};
      return {8, 32, 8, 2};
  }
  return {};
}

std::string DynkinDiagram::name() const { return kind_letter(kind_) + std::to_string(rank_); }

DynkinDiagram parse_diagram(const std::string& name) {
  if (name.size() < 2) throw DomainError("cannot parse Dynkin diagram '" + name + "'");
  DynkinKind kind;
  switch (name[0]) {
    case 'A': kind = DynkinKind::A; break;
    case 'D': kind = DynkinKind::D; break;
    case 'E': kind = DynkinKind::E; break;
    default: throw DomainError("cannot parse Dynkin diagram '" + name + "'");
  }
  const std::string digits = name.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) || digits.size() > 6)
    throw DomainError("cannot parse Dynkin diagram '" + name + "'");
  return {kind, std::stoi(digits)};
}

std::vector<DynkinDiagram> diagrams_with_coxeter(int h) {
  std::vector<DynkinDiagram> out;
  if (h < 2) return out;
  out.push_back(DynkinDiagram::A(h - 1));
  if (h % 2 == 0 && h >= 6) out.push_back(DynkinDiagram::D(h / 2 + 1));
  if (h == 12) out.push_back(DynkinDiagram::E(6));
  if (h == 18) out.push_back(DynkinDiagram::E(7));
  if (h == 30) out.push_back(DynkinDiagram::E(8));
  return out;
}

bool su2_constructible(const DynkinDiagram& G, int k) {
  if (k < 1 || G.coxeter() != k + 2) return false;
  return G.kind() != DynkinKind::D || G.rank() >= 4;
}

ModularInvariant su2_invariant(const DynkinDiagram& G, int k) {
  if (!su2_constructible(G, k)) {
    std::ostringstream os;
    os << G.name() << " (Coxeter number " << G.coxeter() << ") has no invariant at SU(2) level " << k;
    throw DomainError(os.str());
  }
  const int n = k + 1;
  IntMatrix Z = IntMatrix::Zero(n, n);
  const auto block = [&Z](std::initializer_list<int> members) {
    for (int a : members)
      for (int b : members) Z(a, b) += 1;
  };
  switch (G.kind()) {
    case DynkinKind::A:
      Z.setIdentity();
      break;
    case DynkinKind::D:
      if (k % 4 == 0) {
        for (int a = 0; a < k / 2; a += 2) block({a, k - a});
        Z(k / 2, k / 2) = 2;
      } else {
        for (int a = 0; a <= k; ++a) Z(a, a % 2 == 0 ? a : k - a) = 1;
      }
      break;
    case DynkinKind::E:
      if (G.rank() == 6) {
        block({0, 6});
        block({3, 7});
        block({4, 10});
      } else if (G.rank() == 7) {
        block({0, 16});
        block({4, 12});
        block({6, 10});
        block({8});
        for (int a : {2, 14}) {
          Z(a, 8) += 1;
          Z(8, a) += 1;
        }
      } else {
        block({0, 10, 18, 28});
        block({6, 12, 16, 22});
      }
      break;
  }
  return {Algebra::su2(k), std::move(Z)};
}

ModularInvariant minimal_invariant(const DynkinDiagram& G, const DynkinDiagram& Gp, int m) {
  if (m < 3 || G.coxeter() != m || Gp.coxeter() != m + 1 || !su2_constructible(G, m - 2) ||
      !su2_constructible(Gp, m - 1)) {
    std::ostringstream os;
    os << "(" << G.name() << "," << Gp.name() << ") is not an admissible pair at m=" << m;
    throw DomainError(os.str());
  }
  const IntMatrix X = su2_invariant(G, m - 2).Z;
  const IntMatrix Y = su2_invariant(Gp, m - 1).Z;
  const auto labels = minimal_labels(m);
  const auto n = static_cast<Eigen::Index>(labels.size());
  IntMatrix Z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto [p, q] = labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto [pp, qq] = labels[static_cast<std::size_t>(j)];
      Z(i, j) = X(p - 1, pp - 1) * Y(q - 1, qq - 1) + X(m - p - 1, pp - 1) * Y(m - q, qq - 1);
    }
  }
  return {Algebra::minimal(m), std::move(Z)};
}

std::string InvariantLabel::to_string() const {
  if (!second) return first.name();
  return "(" + first.name() + "," + second->name() + ")";
}

InvariantLabel label_invariant(const ModularInvariant& inv) {
  const IntMatrix& Z = inv.Z;
  const int level = inv.algebra.level;
  if (inv.algebra.family == Family::su2) {
    if (Z.rows() != level + 1) throw DomainError("invariant size does not match its SU(2) level");
    std::vector<int> diag(static_cast<std::size_t>(level + 1));
    for (int a = 0; a <= level; ++a) diag[static_cast<std::size_t>(a)] = Z(a, a);
    if (auto G = match_exponents(unfold_multiplicities(diag), level + 2)) return {*G, std::nullopt};
    throw LabelingError("diagonal of the level-" + std::to_string(level) + " invariant matches no A-D-E diagram");
  }

  // Minimal model: spread each class's diagonal entry over both Kac
  // representatives, then read off the marginals on p and on q. The diagonal
  // of a product invariant is x_p y_q with x_1 = y_1 = 1, so normalizing each
  // marginal by its vacuum entry recovers the two SU(2) diagonals.
  const int m = level;
  const auto labels = minimal_labels(m);
  if (Z.rows() != static_cast<Eigen::Index>(labels.size())) throw DomainError("invariant size does not match m");
  IntMatrix full = IntMatrix::Zero(m - 1, m);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto [p, q] = labels[i];
    const int v = Z(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    full(p - 1, q - 1) += v;
    full(m - p - 1, m - q) += v;
  }
  const Eigen::VectorXi row_sums = full.rowwise().sum();
  const Eigen::RowVectorXi col_sums = full.colwise().sum();
  const auto fail = [&] {
    return LabelingError("diagonal of the m=" + std::to_string(m) + " invariant matches no A-D-E pair");
  };
  if (row_sums(0) == 0 || col_sums(0) == 0) throw fail();
  std::vector<int> x(static_cast<std::size_t>(m - 1));
  std::vector<int> y(static_cast<std::size_t>(m));
  for (int p = 0; p < m - 1; ++p) {
    if (row_sums(p) % row_sums(0) != 0) throw fail();
    x[static_cast<std::size_t>(p)] = row_sums(p) / row_sums(0);
  }
  for (int q = 0; q < m; ++q) {
    if (col_sums(q) % col_sums(0) != 0) throw fail();
    y[static_cast<std::size_t>(q)] = col_sums(q) / col_sums(0);
  }
  for (int p = 0; p < m - 1; ++p)
    for (int q = 0; q < m; ++q)
      if (full(p, q) != x[static_cast<std::size_t>(p)] * y[static_cast<std::size_t>(q)]) throw fail();
  const auto G = match_exponents(unfold_multiplicities(x), m);
  const auto Gp = match_exponents(unfold_multiplicities(y), m + 1);
  if (!G || !Gp) throw fail();
  return {*G, *Gp};
}

TypeIDecision is_type_I(const ModularInvariant& inv, long node_limit) {
  const IntMatrix& Z = inv.Z;
  if (Z.rows() != Z.cols()) throw DomainError("invariant matrix must be square");
  if (Z != Z.transpose()) return {};
  GramSearch search(Z, node_limit);
  if (!search.solve()) return {};
  return {true, search.blocks()};
}

}  // namespace mmk
