#ifndef CY3_MATRIX_HPP
#define CY3_MATRIX_HPP

// Small dense matrices over Q. Ranks in this problem domain are the second
// Betti numbers of threefolds, so nothing here needs to scale.

#include <vector>

#include "cy3/vec.hpp"

namespace cy3 {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  int rows() const { return r_; }
  int cols() const { return c_; }

  const Rational& at(int i, int j) const { return a_[idx(i, j)]; }
  Rational& at(int i, int j) { return a_[idx(i, j)]; }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  static Matrix identity(int n);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;

  Vec col(int j) const;
  void set_col(int j, const Vec& v);

  bool is_integral() const;
  bool is_square() const { return r_ == c_; }

  // Exact determinant by fraction-free-ish Gaussian elimination over Q.
  Rational det() const;

  // Rank over Q.
  int rank_q() const;

  std::string str() const;

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(c_) + static_cast<size_t>(j);
  }
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

// Unimodular column transform U with w * U = (content(w), 0, ..., 0) for an
// integral row vector w != 0. Columns 1..n-1 of U are then a basis of the
// integer kernel of w, and they extend to a basis of Z^n by construction.
Matrix kernel_completion(const Vec& w);

}  // namespace cy3

#endif
