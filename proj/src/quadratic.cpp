#include "cy3/quadratic.hpp"

#include <sstream>
#include <stdexcept>

namespace cy3 {

std::string Signature::str() const {
  std::ostringstream os;
  os << "(" << plus << ", " << zero << ", " << minus << ")";
  return os.str();
}

QuadraticForm::QuadraticForm(Matrix gram) : a_(std::move(gram)) {
  if (!a_.is_square()) throw std::invalid_argument("quadratic form: gram matrix must be square");
  for (int i = 0; i < a_.rows(); ++i)
    for (int j = i + 1; j < a_.cols(); ++j)
      if (a_.at(i, j) != a_.at(j, i))
        throw std::invalid_argument("quadratic form: gram matrix must be symmetric");
}

void QuadraticForm::set(int i, int j, const Rational& v) {
  a_.at(i, j) = v;
  a_.at(j, i) = v;
}

bool QuadraticForm::is_zero() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (a_.at(i, j) != 0) return false;
  return true;
}

Rational QuadraticForm::operator()(const Vec& x) const { return bilinear(x, x); }

Rational QuadraticForm::bilinear(const Vec& x, const Vec& y) const {
  if (x.rank() != rank() || y.rank() != rank())
    throw std::invalid_argument("quadratic form: rank mismatch");
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < rank(); ++j) row += a_.at(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

Rational QuadraticForm::poly_coeff(int i, int j) const {
  return i == j ? a_.at(i, i) : 2 * a_.at(i, j);
}

std::string QuadraticForm::str() const { return a_.str(); }

Diagonalization diagonalize(const QuadraticForm& q) {
  const int n = q.rank();
  Matrix a = q.gram();
  Matrix p = Matrix::identity(n);

  auto swap_rc = [&](int i, int j) {
    for (int c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int r = 0; r < n; ++r) std::swap(a.at(r, i), a.at(r, j));
    Vec ci = p.col(i), cj = p.col(j);
    p.set_col(i, cj);
    p.set_col(j, ci);
  };
  // x_i -> x_i + x_j as a basis substitution: column i of the new basis is
  // old column i plus old column j, so row/col i of A gain row/col j.
  auto add_col = [&](int i, int j) {
    for (int c = 0; c < n; ++c) a.at(i, c) += a.at(j, c);
    for (int r = 0; r < n; ++r) a.at(r, i) += a.at(r, j);
    p.set_col(i, p.col(i) + p.col(j));
  };

  for (int piv = 0; piv < n; ++piv) {
    // First nonzero diagonal entry in index order.
    int d = -1;
    for (int i = piv; i < n; ++i)
      if (a.at(i, i) != 0) {
        d = i;
        break;
      }
    if (d < 0) {
      // All-zero active diagonal: a nonzero off-diagonal entry, if any,
      // yields the pivot 2 A_ij after x_i -> x_i + x_j.
      int fi = -1, fj = -1;
      for (int i = piv; i < n && fi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (a.at(i, j) != 0) {
            fi = i;
            fj = j;
            break;
          }
      if (fi < 0) break;  // active block is identically zero
      add_col(fi, fj);
      d = fi;
    }
    if (d != piv) swap_rc(piv, d);
    const Rational pivval = a.at(piv, piv);
    for (int r = piv + 1; r < n; ++r) {
      if (a.at(r, piv) == 0) continue;
      Rational f = a.at(r, piv) / pivval;
      for (int c = 0; c < n; ++c) a.at(r, c) -= f * a.at(piv, c);
      for (int c = 0; c < n; ++c) a.at(c, r) -= f * a.at(c, piv);
      p.set_col(r, p.col(r) - p.col(piv) * f);
    }
  }

  Diagonalization out;
  out.basis = p;
  out.diag.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.diag.push_back(a.at(i, i));
  return out;
}

Signature signature(const QuadraticForm& q) {
  Diagonalization d = diagonalize(q);
  Signature s;
  for (const auto& v : d.diag) {
    if (v > 0)
      ++s.plus;
    else if (v < 0)
      ++s.minus;
    else
      ++s.zero;
  }
  return s;
}

int kernel_dimension(const QuadraticForm& q) { return q.rank() - q.gram().rank_q(); }

std::vector<Vec> kernel_basis(const QuadraticForm& q) {
  const int n = q.rank();
  Matrix m = q.gram();
  // Row echelon with column pivots recorded.
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < n; ++j) std::swap(m.at(row, j), m.at(piv, j));
    for (int i = 0; i < n; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(row, col);
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int freec = 0; freec < n; ++freec) {
    if (is_pivot[static_cast<size_t>(freec)]) continue;
    Vec v(n);
    v[freec] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) {
      int pc = pivot_col[r];
      v[pc] = -m.at(static_cast<int>(r), freec) / m.at(static_cast<int>(r), pc);
    }
    basis.push_back(primitive_scaling(v));
  }
  return basis;
}

QuadraticForm restrict_to_span(const QuadraticForm& q, const std::vector<Vec>& basis) {
  const int m = static_cast<int>(basis.size());
  Matrix g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Rational v = q.bilinear(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  return QuadraticForm(g);
}

std::optional<Vec> isotropic_witness(const QuadraticForm& q) {
  const int n = q.rank();
  // Cheap wins first: a basis vector with q(e_i) = 0 that is not trivially zero rank.
  Diagonalization d = diagonalize(q);
  for (int i = 0; i < n; ++i)
    if (d.diag[static_cast<size_t>(i)] == 0) {
      Vec v = d.basis.col(i);
      if (!v.is_zero()) return primitive_scaling(v);
    }
  // A +/- pair with square ratio: alpha^2 d_i + beta^2 d_j = 0 with
  // (alpha/beta)^2 = -d_j/d_i.
  for (int i = 0; i < n; ++i) {
    if (d.diag[static_cast<size_t>(i)] <= 0) continue;
    for (int j = 0; j < n; ++j) {
      if (d.diag[static_cast<size_t>(j)] >= 0) continue;
      Rational ratio = -d.diag[static_cast<size_t>(j)] / d.diag[static_cast<size_t>(i)];
      if (auto root = perfect_sqrt(ratio)) {
        Vec v = d.basis.col(i) * (*root) + d.basis.col(j);
        return primitive_scaling(v);
      }
    }
  }
  return std::nullopt;
}

}  // namespace cy3
