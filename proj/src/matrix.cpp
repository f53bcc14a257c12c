#include "cy3/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cy3 {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  r_ = static_cast<int>(rows.size());
  c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(r_) * static_cast<size_t>(c_));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : row) a_.push_back(x);
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.c_; ++j) p.at(i, j) += at(i, k) * o.at(k, j);
    }
  return p;
}

Vec Matrix::operator*(const Vec& v) const {
  if (c_ != v.rank()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec r(r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

Vec Matrix::col(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_col(int j, const Vec& v) {
  if (v.rank() != r_) throw std::invalid_argument("set_col shape mismatch");
  for (int i = 0; i < r_; ++i) at(i, j) = v[i];
}

bool Matrix::is_integral() const {
  for (const auto& x : a_)
    if (!cy3::is_integral(x)) return false;
  return true;
}

Rational Matrix::det() const {
  if (!is_square()) throw std::invalid_argument("det of non-square matrix");
  Matrix m = *this;
  Rational d = 1;
  for (int p = 0; p < r_; ++p) {
    int piv = -1;
    for (int i = p; i < r_; ++i)
      if (m.at(i, p) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != p) {
      for (int j = 0; j < c_; ++j) std::swap(m.at(p, j), m.at(piv, j));
      d = -d;
    }
    d *= m.at(p, p);
    for (int i = p + 1; i < r_; ++i) {
      if (m.at(i, p) == 0) continue;
      Rational f = m.at(i, p) / m.at(p, p);
      for (int j = p; j < c_; ++j) m.at(i, j) -= f * m.at(p, j);
    }
  }
  return d;
}

int Matrix::rank_q() const {
  Matrix m = *this;
  int rank = 0;
  int row = 0;
  for (int col = 0; col < c_ && row < r_; ++col) {
    int piv = -1;
    for (int i = row; i < r_; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < c_; ++j) std::swap(m.at(row, j), m.at(piv, j));
    for (int i = row + 1; i < r_; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(row, col);
      for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < c_; ++j) {
      if (j) os << " ";
      os << to_string(at(i, j));
    }
  }
  os << "]";
  return os.str();
}

Matrix kernel_completion(const Vec& w) {
  if (!w.is_integral() || w.is_zero())
    throw std::invalid_argument("kernel_completion: need a nonzero integral vector");
  const int n = w.rank();
  Matrix u = Matrix::identity(n);
  std::vector<Integer> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = numer(w[i]);

  // Sequential extended gcd: after step k, w * U = (g_k, 0, ..., 0, v[k+1], ...).
  Integer g = v[0];
  for (int k = 1; k < n; ++k) {
    Integer s, t, g2;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
               v[static_cast<size_t>(k)].get_mpz_t());
    if (g2 == 0) continue;  // both entries zero; columns already fine
    // 2x2 column block [[s, -v_k/g2], [t, g/g2]] has determinant 1.
    Integer a = -v[static_cast<size_t>(k)] / g2;
    Integer b = g / g2;
    Vec c0 = u.col(0), ck = u.col(k);
    u.set_col(0, c0 * Rational(s) + ck * Rational(t));
    u.set_col(k, c0 * Rational(a) + ck * Rational(b));
    g = g2;
  }
  // Normalize the pivot to +content; a single column sign flip keeps U unimodular.
  if (g < 0) u.set_col(0, u.col(0) * Rational(-1));
  return u;
}

}  // namespace cy3
