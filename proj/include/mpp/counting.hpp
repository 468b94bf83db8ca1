#pragma once

// Exact counting of coherent lattice paths of dimension 2: the 3x3 type
// recursion, its closed form, the length-refined polynomial recursion and the
// statements derived from it.

#include <cstddef>
#include <utility>
#include <vector>

#include "mpp/rational.hpp"

namespace mpp {

// Dense polynomial in z, coefficient i multiplies z^i. No trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);

  static Polynomial monomial(std::size_t degree, const Integer& coefficient = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }
  Integer evaluate(const Integer& z) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

struct CountState {
  int n = 4;
  Integer t, q, c;
  Integer total() const { return t + q + c; }
};

struct PolyCountState {
  int n = 4;
  Polynomial T, Q, C;
  Polynomial total() const { return T + Q + C; }
};

// n >= 4, otherwise InvalidParameter.
CountState count_vector(int n);
Integer count_total(int n);
PolyCountState length_polys(int n);

// States for n = 4 .. n_max, one recursion pass.
std::vector<CountState> count_vectors_up_to(int n_max);
std::vector<PolyCountState> length_polys_up_to(int n_max);

// Coefficients of V_n = T + Q + C from length `from` (default 3) to the degree.
std::vector<Integer> length_row(const PolyCountState& state, std::size_t from = 3);

struct ExtremalLength {
  long length = 0;
  Integer top_count;
};

// floor(3(n-1)/2) and 1 (n odd) or floor(3(n-1)/2) (n even). Checked against
// the degree and leading coefficient of V_n; throws std::logic_error on a
// mismatch.
ExtremalLength max_coherent_length(int n);

// Number of monotone paths on Δ(n,2) with the maximal number 2(n-2) of steps,
// i.e. 2n-3 vertices: C(2(n-2), n-2)/(n-1).
Integer catalan_longest_count(int n);

// a_i^2 >= a_{i-1} a_{i+1} over the block between the first and last positive
// entries. Zeros inside that block make the sequence fail.
bool is_log_concave(const std::vector<Integer>& sequence);

struct ColumnFit {
  int length = 0;
  // v_{n,length} is fitted as a polynomial in m = n - shift.
  int shift = 0;
  int n_first = 0;
  int n_last = 0;
  // Ascending coefficients in m.
  std::vector<Rational> coefficients;
  long degree = -1;
  std::size_t points_fitted = 0;
  std::size_t points_checked = 0;
  // Largest |v - fit| over the checked points.
  Rational max_residual;
  bool degree_ok = false;
  bool ok() const { return degree_ok && max_residual == 0; }
};

// First size n with a coherent path of `length` vertices: ceil(2*length/3 + 1).
int first_size_with_length(int length);

// Interpolates v_{n,length} on length-2 consecutive sizes starting at n_first
// and checks the remaining sizes up to n_last. `shift` defaults to
// first_size_with_length(length) - 1. Throws InvalidParameter when fewer than
// length-1 sizes are available or n_first is below the first nonzero size.
ColumnFit column_polynomial_check(int length, int n_first, int n_last, int shift = -1);

}  // namespace mpp
