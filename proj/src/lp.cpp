#include "mpp/lp.hpp"

#include <stdexcept>

namespace mpp::lp {

namespace {

// basic[i] = beta[i] - sum_j coef[i][j] * nonbasic[j]
// z        = z0      + sum_j reduced[j] * nonbasic[j]
class Dictionary {
 public:
  Dictionary(Matrix coef, RationalVector beta, RationalVector reduced, Rational z0,
             std::vector<std::size_t> basic, std::vector<std::size_t> nonbasic)
      : coef_(std::move(coef)),
        beta_(std::move(beta)),
        reduced_(std::move(reduced)),
        z0_(std::move(z0)),
        basic_(std::move(basic)),
        nonbasic_(std::move(nonbasic)) {}

  // Runs to optimality or unboundedness.
  Status solve() {
    while (true) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < nonbasic_.size(); ++j)
        if (sgn(reduced_[j]) > 0 && (enter == npos || nonbasic_[j] < nonbasic_[enter])) enter = j;
      if (enter == npos) return Status::Optimal;

      std::size_t leave = npos;
      Rational best_ratio;
      for (std::size_t i = 0; i < basic_.size(); ++i) {
        if (sgn(coef_[i][enter]) <= 0) continue;
        Rational ratio = beta_[i] / coef_[i][enter];
        if (leave == npos || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == npos) return Status::Unbounded;
      pivot(leave, enter);
    }
  }

  const Rational& objective() const { return z0_; }
  std::size_t pivots() const { return pivots_; }

  // Current basic solution for labels [0, count).
  RationalVector values(std::size_t count) const {
    RationalVector x(count, Rational(0));
    for (std::size_t i = 0; i < basic_.size(); ++i)
      if (basic_[i] < count) x[basic_[i]] = beta_[i];
    return x;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void pivot(std::size_t l, std::size_t e) {
    ++pivots_;
    const Rational p = coef_[l][e];
    auto& row = coef_[l];
    beta_[l] /= p;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (j != e && sgn(row[j]) != 0) row[j] /= p;
    row[e] = 1 / p;

    for (std::size_t i = 0; i < coef_.size(); ++i) {
      if (i == l) continue;
      auto& other = coef_[i];
      if (sgn(other[e]) == 0) continue;
      const Rational factor = other[e];
      beta_[i] -= factor * beta_[l];
      for (std::size_t j = 0; j < other.size(); ++j)
        if (j != e && sgn(row[j]) != 0) other[j] -= factor * row[j];
      other[e] = -factor * row[e];
    }
    if (sgn(reduced_[e]) != 0) {
      const Rational factor = reduced_[e];
      z0_ += factor * beta_[l];
      for (std::size_t j = 0; j < reduced_.size(); ++j)
        if (j != e && sgn(row[j]) != 0) reduced_[j] -= factor * row[j];
      reduced_[e] = -factor * row[e];
    }
    std::swap(basic_[l], nonbasic_[e]);
  }

  Matrix coef_;
  RationalVector beta_;
  RationalVector reduced_;
  Rational z0_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::size_t pivots_ = 0;
};

}  // namespace

Solution maximize(const Matrix& A, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("lp::maximize: row count mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("lp::maximize: column count mismatch");
    if (sgn(b[i]) < 0) throw std::invalid_argument("lp::maximize: origin is not feasible");
  }
  std::vector<std::size_t> basic(m), nonbasic(n);
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;
  Dictionary dict(A, b, c, Rational(0), std::move(basic), std::move(nonbasic));
  Solution out;
  out.status = dict.solve();
  out.objective = dict.objective();
  out.x = dict.values(n);
  out.pivots = dict.pivots();
  return out;
}

std::optional<RationalVector> find_nonnegative_solution(const Matrix& A, const RationalVector& b) {
  const std::size_t m = A.size();
  if (b.size() != m) throw std::invalid_argument("lp::find_nonnegative_solution: row count mismatch");
  const std::size_t n = m == 0 ? 0 : A[0].size();
  Matrix coef(m);
  RationalVector beta(m);
  RationalVector reduced(n, Rational(0));
  Rational z0 = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw std::invalid_argument("lp::find_nonnegative_solution: column count mismatch");
    const bool flip = sgn(b[i]) < 0;
    coef[i] = A[i];
    beta[i] = b[i];
    if (flip) {
      for (auto& v : coef[i]) v = -v;
      beta[i] = -beta[i];
    }
    // Phase one: maximize -(sum of artificials).
    z0 -= beta[i];
    for (std::size_t j = 0; j < n; ++j) reduced[j] += coef[i][j];
  }
  std::vector<std::size_t> basic(m), nonbasic(n);
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;
  Dictionary dict(std::move(coef), std::move(beta), std::move(reduced), std::move(z0), std::move(basic),
                  std::move(nonbasic));
  dict.solve();  // bounded above by zero
  if (sgn(dict.objective()) < 0) return std::nullopt;
  return dict.values(n);
}

}  // namespace mpp::lp
