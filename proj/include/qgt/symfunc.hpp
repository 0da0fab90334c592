#pragma once

// Complete homogeneous and Schur symmetric polynomials, principal
// specializations and the normalized Schur functions.

#include "qgt/lattice.hpp"
#include "qgt/numeric.hpp"
#include "qgt/qcalc.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgt {

/// Weakly decreasing nonnegative parts; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::size_t length() const { return parts_.size(); }
  int size() const;  // |nu|
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  /// n(nu) = sum (i-1) nu_i.
  long n_statistic() const;
  /// Hook lengths of all cells, row by row.
  std::vector<int> hooks() const;
  /// Contents j - i of all cells, row by row.
  std::vector<int> contents() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions with |nu| <= max_size and length <= max_length.
std::vector<Partition> partitions_up_to(int max_size, std::size_t max_length);

std::string to_string(const Partition& p);
/// "[a,b,...]"; "[]" is the empty partition.
Partition parse_partition(std::string_view text);

/// h_0 .. h_max at the given values.
template <class T>
std::vector<T> complete_homogeneous(std::span<const T> xs, int max_degree) {
  std::vector<T> h(max_degree + 1, T(0));
  h[0] = T(1);
  // Adding one variable x: h_m <- h_m + x h_{m-1}, ascending in m.
  for (const auto& x : xs) {
    if (is_zero(x)) continue;
    for (int m = 1; m <= max_degree; ++m) h[m] += x * h[m - 1];
  }
  return h;
}

/// Jacobi-Trudi determinant det[h_{nu_i - i + j}] at the given values.  Valid
/// at repeated values; vanishes when length(nu) exceeds the number of values.
template <class T>
T schur_values(const Partition& nu, std::span<const T> xs) {
  const std::size_t l = nu.length();
  if (l == 0) return T(1);
  const int top = nu[0] + static_cast<int>(l) - 1;
  auto h = complete_homogeneous(xs, top);
  Matrix<T> m(l, std::vector<T>(l, T(0)));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      int k = nu[i] - static_cast<int>(i) + static_cast<int>(j);
      if (k >= 0) m[i][j] = h[k];
    }
  return determinant(std::move(m));
}

Rational h_m(int m, const ExtConfig& x, const QParams& params);
/// h_m(1, q, ..., q^{N-1}) = (q^N;q)_m / (q;q)_m.
Rational h_principal(int m, long n, const Rational& q);

/// S_{nu|N} at the values of X; throws when length(nu) > N.
Rational schur(const Partition& nu, const ExtConfig& x, const QParams& params);
/// S_{nu|N}(1, q, ..., q^{N-1}), evaluated on the explicit progression.
Rational schur_principal(const Partition& nu, long n, const Rational& q);
/// S_{nu|N}(X) / S_{nu|N}(1, ..., q^{N-1}).
Rational normalized_schur(const Partition& nu, const ExtConfig& x, const QParams& params);

/// S_nu(1, q, q^2, ...) from a truncated progression of length M.  The
/// truncation ratio is prod_{cells}(1 - q^{M+c}), which certifies the bound.
TruncatedValue<Real> schur_principal_inf(const Partition& nu, const Rational& q, double tol);
/// S_nu(X) / S_nu(1, q, q^2, ...) for a finite configuration X (zeros drop out).
TruncatedValue<Real> normalized_schur_inf(const Partition& nu, const ExtConfig& x, const QParams& params,
                                          double tol);

}  // namespace qgt
