#include "mmk/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <cmath>
#include <sstream>
#include <thread>

#include "mmk/errors.hpp"

namespace mmk {
namespace {

constexpr double kRankCut = 1e-8;
constexpr double kRankFloor = 1e-10;
constexpr double kPivotTolerance = 1e-7;
constexpr double kIntegrality = 1e-6;
constexpr double kCommutation = 1e-9;

// Integer search over the pivot coefficients of a reduced commutant basis.
// Coefficient i ranges over [lo[i], hi[i]]; every support coordinate x must
// end up in [floor_[x], ceil_[x]] and integral.
class PivotSearch {
 public:
  PivotSearch(const ModularDatum& datum, const CommutantBasis& cb)
      : datum_(datum), cb_(cb), dim_(cb.dimension()), size_(cb.support.size()) {
    coef_.resize(dim_, std::vector<double>(size_, 0.0));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t x = 0; x < size_; ++x) coef_[i][x] = cb.basis[i](static_cast<Eigen::Index>(x));

    floor_.resize(size_);
    ceil_.resize(size_);
    for (std::size_t x = 0; x < size_; ++x) {
      const auto [r, c] = cb.support[x];
      if (r == 0 && c == 0) {
        floor_[x] = ceil_[x] = 1;
      } else {
        floor_[x] = 0;
        ceil_[x] = entry_bound(datum, static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      }
    }
    lo_.resize(dim_);
    hi_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      lo_[i] = static_cast<int>(floor_[cb.pivots[i]]);
      hi_[i] = static_cast<int>(ceil_[cb.pivots[i]]);
    }

    suffix_min_.assign(dim_ + 1, std::vector<double>(size_, 0.0));
    suffix_max_.assign(dim_ + 1, std::vector<double>(size_, 0.0));
    for (std::size_t i = dim_; i-- > 0;) {
      for (std::size_t x = 0; x < size_; ++x) {
        const double a = coef_[i][x] * lo_[i];
        const double b = coef_[i][x] * hi_[i];
        suffix_min_[i][x] = suffix_min_[i + 1][x] + std::min(a, b);
        suffix_max_[i][x] = suffix_max_[i + 1][x] + std::max(a, b);
      }
    }

    // Coordinates whose value is fully determined once coefficient i is fixed.
    settled_at_.assign(dim_, {});
    for (std::size_t x = 0; x < size_; ++x) {
      std::size_t last = 0;
      bool any = false;
      for (std::size_t i = 0; i < dim_; ++i)
        if (coef_[i][x] != 0.0) {
          last = i;
          any = true;
        }
      if (any) settled_at_[last].push_back(x);
    }
  }

  std::size_t dimension() const { return dim_; }

  // Feasible prefixes of length `depth` (or shorter when the tree is exhausted first).
  std::vector<std::vector<int>> prefixes(std::size_t depth) const {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    std::vector<double> partial(size_, 0.0);
    collect(0, depth, prefix, partial, out);
    return out;
  }

  void run(const std::vector<int>& prefix, std::vector<IntMatrix>& found) const {
    std::vector<double> partial(size_, 0.0);
    for (std::size_t i = 0; i < prefix.size(); ++i)
      for (std::size_t x = 0; x < size_; ++x) partial[x] += prefix[i] * coef_[i][x];
    dfs(prefix.size(), partial, found);
  }

 private:
  // Integer interval for coefficient j given the partial sums of coefficients < j.
  std::pair<long, long> range(std::size_t j, const std::vector<double>& partial) const {
    double lo = lo_[j];
    double hi = hi_[j];
    for (std::size_t x = 0; x < size_ && lo <= hi; ++x) {
      const double b = coef_[j][x];
      if (b == 0.0) continue;
      const double low = floor_[x] - kIntegrality - partial[x] - suffix_max_[j + 1][x];
      const double high = ceil_[x] + kIntegrality - partial[x] - suffix_min_[j + 1][x];
      if (b > 0) {
        lo = std::max(lo, low / b);
        hi = std::min(hi, high / b);
      } else {
        lo = std::max(lo, high / b);
        hi = std::min(hi, low / b);
      }
    }
    return {static_cast<long>(std::ceil(lo - 1e-9)), static_cast<long>(std::floor(hi + 1e-9))};
  }

  bool settled_ok(std::size_t j, const std::vector<double>& partial) const {
    for (const std::size_t x : settled_at_[j]) {
      const double v = partial[x];
      const double r = std::round(v);
      if (std::abs(v - r) >= kIntegrality || r < floor_[x] || r > ceil_[x]) return false;
    }
    return true;
  }

  void collect(std::size_t j, std::size_t depth, std::vector<int>& prefix,
               std::vector<double>& partial, std::vector<std::vector<int>>& out) const {
    if (j == depth || j == dim_) {
      out.push_back(prefix);
      return;
    }
    const auto [lo, hi] = range(j, partial);
    for (long c = lo; c <= hi; ++c) {
      std::vector<double> next = partial;
      for (std::size_t x = 0; x < size_; ++x) next[x] += c * coef_[j][x];
      if (!settled_ok(j, next)) continue;
      prefix.push_back(static_cast<int>(c));
      collect(j + 1, depth, prefix, next, out);
      prefix.pop_back();
    }
  }

  void dfs(std::size_t j, const std::vector<double>& partial, std::vector<IntMatrix>& found) const {
    if (j == dim_) {
      emit(partial, found);
      return;
    }
    const auto [lo, hi] = range(j, partial);
    std::vector<double> next(size_);
    for (long c = lo; c <= hi; ++c) {
      for (std::size_t x = 0; x < size_; ++x) next[x] = partial[x] + c * coef_[j][x];
      if (!settled_ok(j, next)) continue;
      dfs(j + 1, next, found);
    }
  }

  void emit(const std::vector<double>& values, std::vector<IntMatrix>& found) const {
    const auto n = static_cast<Eigen::Index>(datum_.size());
    IntMatrix Z = IntMatrix::Zero(n, n);
    for (std::size_t x = 0; x < size_; ++x) {
      const double r = std::round(values[x]);
      if (std::abs(values[x] - r) >= kIntegrality || r < 0) return;
      Z(cb_.support[x].row, cb_.support[x].col) = static_cast<int>(r);
    }
    if (Z(0, 0) != 1) return;
    if (is_modular_invariant(datum_, Z)) found.push_back(std::move(Z));
  }

  const ModularDatum& datum_;
  const CommutantBasis& cb_;
  std::size_t dim_;
  std::size_t size_;
  std::vector<std::vector<double>> coef_;
  std::vector<double> floor_;
  std::vector<double> ceil_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<std::vector<double>> suffix_min_;
  std::vector<std::vector<double>> suffix_max_;
  std::vector<std::vector<std::size_t>> settled_at_;
};

}  // namespace

bool flat_less(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

int entry_bound(const ModularDatum& datum, std::size_t a, std::size_t b) {
  const double s = datum.S(0, static_cast<Eigen::Index>(a)) * datum.S(0, static_cast<Eigen::Index>(b));
  return static_cast<int>(std::floor(1.0 / s + 1e-9));
}

Eigen::MatrixXd CommutantBasis::matrix(std::size_t i, std::size_t n) const {
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
  for (std::size_t x = 0; x < support.size(); ++x)
    M(support[x].row, support[x].col) = basis[i](static_cast<Eigen::Index>(x));
  return M;
}

CommutantBasis commutant_basis(const ModularDatum& datum) {
  const auto n = datum.size();
  CommutantBasis cb;
  std::vector<std::pair<int, Coordinate>> keyed;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (datum.t[a] == datum.t[b]) {
        const int key = (a == 0 && b == 0) ? -1 : entry_bound(datum, a, b);
        keyed.push_back({key, {static_cast<int>(a), static_cast<int>(b)}});
      }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [key, coord] : keyed) cb.support.push_back(coord);

  // Z ↦ SZS is an orthogonal involution; on the support its compression is
  // M = (S ⊗ S)|_support, and the commutant is the eigenvalue-1 space of M.
  // The commutator system I - M is symmetric, so its singular values are |1 - λ|.
  const auto s = static_cast<Eigen::Index>(cb.support.size());
  Eigen::MatrixXd M(s, s);
  for (Eigen::Index i = 0; i < s; ++i) {
    const auto [a, b] = cb.support[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < s; ++j) {
      const auto [c, d] = cb.support[static_cast<std::size_t>(j)];
      M(i, j) = datum.S(a, c) * datum.S(b, d);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success) throw ConditioningError("eigen-decomposition of the commutator system failed");

  std::vector<Eigen::Index> null_columns;
  cb.smallest_kept = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < s; ++i) {
    const double sigma = std::abs(1.0 - solver.eigenvalues()(i));
    if (sigma < kRankFloor) {
      null_columns.push_back(i);
      cb.largest_dropped = std::max(cb.largest_dropped, sigma);
    } else if (sigma <= kRankCut) {
      std::ostringstream os;
      os << "ambiguous rank decision for " << to_string(datum.algebra) << ": singular value " << sigma;
      throw ConditioningError(os.str());
    } else {
      cb.smallest_kept = std::min(cb.smallest_kept, sigma);
    }
  }

  const auto d = static_cast<Eigen::Index>(null_columns.size());
  Eigen::MatrixXd R(d, s);
  for (Eigen::Index i = 0; i < d; ++i) R.row(i) = solver.eigenvectors().col(null_columns[static_cast<std::size_t>(i)]).transpose();

  // Reduced row-echelon form with columns visited in support order.
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < s && row < d; ++col) {
    Eigen::Index best = row;
    for (Eigen::Index r = row + 1; r < d; ++r)
      if (std::abs(R(r, col)) > std::abs(R(best, col))) best = r;
    if (std::abs(R(best, col)) < kPivotTolerance) continue;
    R.row(row).swap(R.row(best));
    R.row(row) /= R(row, col);
    for (Eigen::Index r = 0; r < d; ++r)
      if (r != row) R.row(r) -= R(r, col) * R.row(row);
    cb.pivots.push_back(static_cast<std::size_t>(col));
    ++row;
  }
  if (row != d) throw ConditioningError("commutant basis lost rank during row reduction");

  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index x = 0; x < s; ++x)
      if (std::abs(R(i, x)) < 1e-13) R(i, x) = 0.0;
    for (Eigen::Index j = 0; j < d; ++j) R(i, static_cast<Eigen::Index>(cb.pivots[static_cast<std::size_t>(j)])) = (i == j) ? 1.0 : 0.0;
    cb.basis.emplace_back(R.row(i).transpose());
  }
  if (d == 0) cb.smallest_kept = s > 0 ? cb.smallest_kept : 0.0;
  return cb;
}

std::vector<ModularInvariant> enumerate_invariants(const ModularDatum& datum, const EnumerateOptions& options) {
  const CommutantBasis cb = commutant_basis(datum);
  const PivotSearch search(datum, cb);

  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);

  std::vector<IntMatrix> found;
  if (workers == 1 || search.dimension() < 2) {
    search.run({}, found);
  } else {
    // Split on a prefix depth that yields enough independent subtrees.
    std::vector<std::vector<int>> tasks;
    for (std::size_t depth = 1; depth <= search.dimension(); ++depth) {
      tasks = search.prefixes(depth);
      if (tasks.size() >= 4 * static_cast<std::size_t>(workers)) break;
    }
    std::vector<std::vector<IntMatrix>> per_worker(workers);
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = next++; i < tasks.size(); i = next++) search.run(tasks[i], per_worker[w]);
        });
    }
    for (auto& part : per_worker)
      for (auto& Z : part) found.push_back(std::move(Z));
  }

  std::sort(found.begin(), found.end(), flat_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<ModularInvariant> out;
  out.reserve(found.size());
  for (auto& Z : found) out.push_back({datum.algebra, std::move(Z)});
  return out;
}

InvariantCheck is_modular_invariant(const ModularDatum& datum, const IntMatrix& Z) {
  const auto n = static_cast<Eigen::Index>(datum.size());
  if (Z.rows() != n || Z.cols() != n) {
    std::ostringstream os;
    os << "matrix is " << Z.rows() << "x" << Z.cols() << " but " << to_string(datum.algebra) << " has "
       << n << " labels";
    throw DomainError(os.str());
  }
  const auto fail = [](std::string condition, Eigen::Index r, Eigen::Index c, std::string message) {
    return InvariantCheck{false, std::move(condition), static_cast<int>(r), static_cast<int>(c), std::move(message)};
  };
  if (Z(0, 0) != 1) return fail("vacuum", 0, 0, "Z_00 = " + std::to_string(Z(0, 0)) + ", expected 1");
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      if (Z(a, b) < 0) return fail("negative", a, b, "negative entry " + std::to_string(Z(a, b)));
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      const int bound = entry_bound(datum, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      if (Z(a, b) > bound)
        return fail("bound", a, b, "entry " + std::to_string(Z(a, b)) + " exceeds bound " + std::to_string(bound));
    }
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      if (Z(a, b) != 0 && datum.t[static_cast<std::size_t>(a)] != datum.t[static_cast<std::size_t>(b)])
        return fail("T-support", a, b,
                    "nonzero entry between labels " + to_string(datum.labels[static_cast<std::size_t>(a)]) +
                        " and " + to_string(datum.labels[static_cast<std::size_t>(b)]) + " with different T phases");
  const Eigen::MatrixXd Zd = Z.cast<double>();
  const Eigen::MatrixXd commutator = (Zd * datum.S - datum.S * Zd).cwiseAbs();
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  const double worst = commutator.maxCoeff(&r, &c);
  if (worst >= kCommutation) {
    std::ostringstream os;
    os << "|ZS - SZ| = " << worst << " at (" << r << "," << c << ")";
    return fail("S-commutation", r, c, os.str());
  }
  return {};
}

}  // namespace mmk
