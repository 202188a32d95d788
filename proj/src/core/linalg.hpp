#pragma once

#include <optional>

#include "rational.hpp"

namespace klz {

// Dense rational matrix, row-major. Sizes here are desk scale (n <= ~10 for
// exact work), so no attempt is made at sparse or blocked storage.
class MatQ {
 public:
  MatQ() = default;
  MatQ(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static MatQ identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  bool operator==(const MatQ& other) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  VecQ data_;
};

struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  bool operator==(const Inertia&) const = default;
};

Rational dot(const VecQ& a, const VecQ& b);
VecQ matvec(const MatQ& m, const VecQ& x);
MatQ transpose(const MatQ& m);
MatQ matmul(const MatQ& a, const MatQ& b);
MatQ outer(const VecQ& a, const VecQ& b);
MatQ add(const MatQ& a, const MatQ& b);
MatQ sub(const MatQ& a, const MatQ& b);
MatQ scale(const MatQ& a, const Rational& c);
MatQ symmetric_part(const MatQ& a);
bool is_symmetric(const MatQ& a);
bool is_zero(const MatQ& a);
Rational max_abs(const MatQ& a);

int rank(MatQ a);
// Square solve; nullopt when singular.
std::optional<VecQ> solve(MatQ a, VecQ b);
std::optional<MatQ> inverse(const MatQ& a);

// Exact signature of a symmetric rational matrix via pivoted LDL^T congruence.
// When every remaining diagonal entry is zero, a hyperbolic 2x2 block
// [[0,b],[b,0]] is eliminated and contributes one positive and one negative
// eigenvalue.
Inertia ldl_inertia(MatQ q);

// Quadratic/bilinear forms.
Rational quad_form(const MatQ& q, const VecQ& x);              // x^T Q x
Rational bilinear(const VecQ& y, const MatQ& q, const VecQ& x);  // y^T Q x

}  // namespace klz
