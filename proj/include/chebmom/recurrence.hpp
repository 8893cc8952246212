#pragma once

#include <stdexcept>
#include <vector>

#include "chebmom/moments.hpp"
#include "chebmom/rational.hpp"

// Linear recurrence in m for E S_n^{2m}(1/2). With ell = floor((n-1)/2) and
// a_k = (2k-n)^2, the coefficients c solve the Vandermonde system
// V c = rhs, V[k][j] = a_k^j, rhs[k] = a_k^{ell+1}, and then
//   E S_n^{2m+2ell+2}(1/2) = sum_j c_j 2^{2j-2ell-2} E S_n^{2m+2j}(1/2).

namespace chebmom {

struct RecurrenceCoeffs {
  int n = 0;
  int ell = 0;                // floor((n-1)/2)
  std::vector<Rational> a;    // a_k = (2k-n)^2, k = 0..ell
  std::vector<Rational> c;    // solution of the Vandermonde system
};

// Solves the (ell+1)-dimensional system by exact Gaussian elimination and
// verifies the residual is exactly zero before returning.
inline RecurrenceCoeffs recurrence_coeffs(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int ell = (n - 1) / 2;
  const int dim = ell + 1;

  RecurrenceCoeffs out;
  out.n = n;
  out.ell = ell;
  out.a.reserve(dim);
  for (int k = 0; k < dim; ++k) {
    const long long d = 2LL * k - n;
    out.a.emplace_back(d * d);
  }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (out.a[i] == out.a[j])
        throw std::logic_error("recurrence_coeffs: a_k not pairwise distinct");

  // augmented matrix [V | rhs]
  std::vector<std::vector<Rational>> mat(dim, std::vector<Rational>(dim + 1));
  for (int k = 0; k < dim; ++k) {
    Rational pw(1);
    for (int j = 0; j < dim; ++j) {
      mat[k][j] = pw;
      pw *= out.a[k];
    }
    mat[k][dim] = pw;  // a_k^{ell+1}
  }

  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int row = col; row < dim; ++row)
      if (mat[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::logic_error("recurrence_coeffs: singular Vandermonde system");
    std::swap(mat[col], mat[pivot]);
    for (int row = col + 1; row < dim; ++row) {
      if (mat[row][col] == 0) continue;
      const Rational factor = mat[row][col] / mat[col][col];
      for (int j = col; j <= dim; ++j) mat[row][j] -= factor * mat[col][j];
    }
  }

  out.c.assign(dim, Rational(0));
  for (int row = dim - 1; row >= 0; --row) {
    Rational acc = mat[row][dim];
    for (int j = row + 1; j < dim; ++j) acc -= mat[row][j] * out.c[j];
    out.c[row] = acc / mat[row][row];
  }

  // exact residual check
  for (int k = 0; k < dim; ++k) {
    Rational lhs(0);
    Rational pw(1);
    for (int j = 0; j < dim; ++j) {
      lhs += out.c[j] * pw;
      pw *= out.a[k];
    }
    if (lhs != pw) throw std::logic_error("recurrence_coeffs: nonzero residual");
  }
  return out;
}

// Seeds the first ell+1 even moments from the binomial-sum formula and then
// iterates the recurrence up to the requested order.
inline MomentValue moment_half_recurrence(int n, int m) {
  detail::require_nm(n, m);
  const int ell = (n - 1) / 2;
  MomentValue out{n, m, Rational(1, 2), Rational(0), MomentMethod::recurrence};
  if (m <= ell + 1) {
    out.value = moment_half_binomsum(n, m).value;
    return out;
  }

  const RecurrenceCoeffs rc = recurrence_coeffs(n);
  std::vector<Rational> window;  // E S_n^{2t}(1/2) for the last ell+1 values of t
  window.reserve(ell + 1);
  for (int t = 1; t <= ell + 1; ++t) window.push_back(moment_half_binomsum(n, t).value);

  std::vector<Rational> weights(ell + 1);  // c_j 2^{2j - 2ell - 2}
  const BigInt scale = ipow(2, static_cast<unsigned>(2 * ell + 2));
  for (int j = 0; j <= ell; ++j)
    weights[j] = rc.c[j] * Rational(ipow(2, static_cast<unsigned>(2 * j)), scale);

  for (int t = ell + 2; t <= m; ++t) {
    Rational next(0);
    for (int j = 0; j <= ell; ++j) next += weights[j] * window[j];
    window.erase(window.begin());
    window.push_back(next);
  }
  out.value = window.back();
  return out;
}

}  // namespace chebmom
