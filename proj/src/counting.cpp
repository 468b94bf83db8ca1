#include "mpp/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mpp/errors.hpp"

namespace mpp {

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, const Integer& coefficient) {
  std::vector<Integer> c(degree + 1, 0);
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::evaluate(const Integer& z) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

namespace {

void require_size(int n) {
  if (n < 4) throw InvalidParameter("counting is defined for n >= 4, got " + std::to_string(n));
}

CountState step(const CountState& s) {
  return {s.n + 1, s.t + 2 * s.q + 2 * s.c, 2 * s.q + s.c, 2 * s.t + 2 * s.c};
}

//   [ z      1+z  1+z ]
//   [ 0      1+z  z   ]
//   [ z+z^2  0    1+z ]
PolyCountState step(const PolyCountState& s) {
  static const Polynomial z({0, 1});
  static const Polynomial one_z({1, 1});
  static const Polynomial z_z2({0, 1, 1});
  return {s.n + 1, z * s.T + one_z * s.Q + one_z * s.C, one_z * s.Q + z * s.C, z_z2 * s.T + one_z * s.C};
}

CountState base_counts() { return {4, 3, 1, 4}; }

PolyCountState base_polys() {
  return {4, Polynomial({0, 0, 0, 2, 1}), Polynomial({0, 0, 0, 0, 1}), Polynomial({0, 0, 0, 2, 2})};
}

}  // namespace

std::vector<CountState> count_vectors_up_to(int n_max) {
  require_size(n_max);
  std::vector<CountState> out{base_counts()};
  while (out.back().n < n_max) out.push_back(step(out.back()));
  return out;
}

std::vector<PolyCountState> length_polys_up_to(int n_max) {
  require_size(n_max);
  std::vector<PolyCountState> out{base_polys()};
  while (out.back().n < n_max) out.push_back(step(out.back()));
  return out;
}

CountState count_vector(int n) {
  require_size(n);
  CountState s = base_counts();
  while (s.n < n) s = step(s);
  return s;
}

PolyCountState length_polys(int n) {
  require_size(n);
  PolyCountState s = base_polys();
  while (s.n < n) s = step(s);
  return s;
}

Integer count_total(int n) {
  require_size(n);
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 4, static_cast<unsigned long>(n - 4));
  return (25 * p - 1) / 3;
}

std::vector<Integer> length_row(const PolyCountState& state, std::size_t from) {
  const Polynomial v = state.total();
  std::vector<Integer> row;
  for (long i = static_cast<long>(from); i <= v.degree(); ++i) row.push_back(v[static_cast<std::size_t>(i)]);
  return row;
}

ExtremalLength max_coherent_length(int n) {
  require_size(n);
  const long l = 3L * (n - 1) / 2;
  ExtremalLength out{l, n % 2 == 1 ? Integer(1) : Integer(l)};
  const Polynomial v = length_polys(n).total();
  if (v.degree() != out.length || v.leading() != out.top_count)
    throw std::logic_error("extremal length disagrees with the length polynomial at n=" + std::to_string(n));
  return out;
}

Integer catalan_longest_count(int n) {
  if (n < 3) throw InvalidParameter("catalan_longest_count needs n >= 3");
  Integer b;
  const auto m = static_cast<unsigned long>(n - 2);
  mpz_bin_uiui(b.get_mpz_t(), 2 * m, m);
  return b / (n - 1);
}

bool is_log_concave(const std::vector<Integer>& sequence) {
  auto first = std::find_if(sequence.begin(), sequence.end(), [](const Integer& a) { return a > 0; });
  if (first == sequence.end()) return true;
  auto last = std::find_if(sequence.rbegin(), sequence.rend(), [](const Integer& a) { return a > 0; }).base();
  for (auto it = first; it != last; ++it)
    if (*it <= 0) return false;
  for (auto it = first + 1; it + 1 < last; ++it)
    if (*it * *it < *(it - 1) * *(it + 1)) return false;
  return true;
}

int first_size_with_length(int length) {
  // ceil((2l + 3) / 3)
  return (2 * length + 3 + 2) / 3;
}

ColumnFit column_polynomial_check(int length, int n_first, int n_last, int shift) {
  if (length < 3) throw InvalidParameter("column check needs length >= 3");
  const int n_min = std::max(4, first_size_with_length(length));
  if (n_first < n_min)
    throw InvalidParameter("column " + std::to_string(length) + " starts at n=" + std::to_string(n_min));
  const int fitted = length - 2;
  if (n_last - n_first + 1 < fitted + 1)
    throw InvalidParameter("column " + std::to_string(length) + " needs at least " + std::to_string(fitted + 1) +
                           " sizes");

  ColumnFit fit;
  fit.length = length;
  fit.shift = shift < 0 ? first_size_with_length(length) - 1 : shift;
  fit.n_first = n_first;
  fit.n_last = n_last;

  std::vector<Rational> xs, ys;
  for (const auto& state : length_polys_up_to(n_last)) {
    if (state.n < n_first) continue;
    xs.emplace_back(state.n - fit.shift);
    ys.emplace_back(state.total()[static_cast<std::size_t>(length)]);
  }

  // Newton divided differences on the first `fitted` points.
  std::vector<Rational> dd(ys.begin(), ys.begin() + fitted);
  for (int j = 1; j < fitted; ++j)
    for (int i = fitted - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);

  // Expand the Newton form into ascending monomial coefficients.
  std::vector<Rational> coeffs{dd[fitted - 1]};
  for (int i = fitted - 2; i >= 0; --i) {
    std::vector<Rational> next(coeffs.size() + 1, 0);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= coeffs[d] * xs[i];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  fit.coefficients = coeffs;
  fit.degree = static_cast<long>(coeffs.size()) - 1;
  fit.degree_ok = fit.degree <= length - 3;
  fit.points_fitted = static_cast<std::size_t>(fitted);

  fit.max_residual = 0;
  for (std::size_t i = static_cast<std::size_t>(fitted); i < xs.size(); ++i) {
    Rational value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * xs[i] + *it;
    Rational r = abs(ys[i] - value);
    if (r > fit.max_residual) fit.max_residual = r;
    ++fit.points_checked;
  }
  return fit;
}

}  // namespace mpp
