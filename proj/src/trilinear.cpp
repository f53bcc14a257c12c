#include "cy3/trilinear.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cy3/cubic.hpp"

namespace cy3 {

Triple sorted_triple(int i, int j, int k) {
  Triple t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

void TrilinearForm::check_index(int i) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("trilinear index out of range");
}

void TrilinearForm::set(int i, int j, int k, Integer v) {
  check_index(i);
  check_index(j);
  check_index(k);
  Triple t = sorted_triple(i, j, k);
  if (v == 0)
    c_.erase(t);
  else
    c_[t] = std::move(v);
}

Integer TrilinearForm::get(int i, int j, int k) const {
  check_index(i);
  check_index(j);
  check_index(k);
  auto it = c_.find(sorted_triple(i, j, k));
  return it == c_.end() ? Integer(0) : it->second;
}

std::string TrilinearForm::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [t, v] : c_) {
    if (!first) os << ", ";
    first = false;
    os << "(" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << "): " << to_string(v);
  }
  os << "}";
  return os.str();
}

namespace {
void check_rank(const TrilinearForm& mu, const Vec& v, const char* what) {
  if (v.rank() != mu.rank()) throw std::invalid_argument(std::string(what) + ": rank mismatch");
}
}  // namespace

Rational eval_trilinear(const TrilinearForm& mu, const Vec& x, const Vec& y, const Vec& z) {
  check_rank(mu, x, "eval_trilinear");
  check_rank(mu, y, "eval_trilinear");
  check_rank(mu, z, "eval_trilinear");
  Rational acc = 0;
  for (const auto& [t, v] : mu.coeffs()) {
    // Sum x_a y_b z_c over the distinct arrangements (a, b, c) of the multiset t.
    Triple p = t;
    Rational s = 0;
    do {
      s += x[p[0]] * y[p[1]] * z[p[2]];
    } while (std::next_permutation(p.begin(), p.end()));
    acc += s * Rational(v);
  }
  return acc;
}

CubicForm cubic_polynomial(const TrilinearForm& mu) {
  CubicForm c(mu.rank());
  for (const auto& [t, v] : mu.coeffs()) {
    int mult;
    if (t[0] == t[2])
      mult = 1;
    else if (t[0] == t[1] || t[1] == t[2])
      mult = 3;
    else
      mult = 6;
    c.set(t[0], t[1], t[2], Rational(v) * mult);
  }
  return c;
}

Matrix contract(const TrilinearForm& mu, const Vec& L) {
  check_rank(mu, L, "contract");
  const int n = mu.rank();
  Matrix g(n, n);
  for (const auto& [t, v] : mu.coeffs()) {
    Triple p = t;
    do {
      g.at(p[1], p[2]) += L[p[0]] * Rational(v);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  // Each distinct arrangement contributed once; (i, j) and (j, i) both got
  // their own arrangements, so g is already symmetric.
  return g;
}

TrilinearForm change_basis(const TrilinearForm& mu, const Matrix& M) {
  const int n = mu.rank();
  if (!M.is_square() || M.rows() != n) throw std::invalid_argument("change_basis: shape mismatch");
  if (!M.is_integral()) throw std::invalid_argument("change_basis: matrix must be integral");
  if (M.det() == 0) throw std::invalid_argument("change_basis: matrix is singular");
  std::vector<Vec> cols;
  cols.reserve(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) cols.push_back(M.col(j));
  TrilinearForm out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        Rational v = eval_trilinear(mu, cols[static_cast<size_t>(i)], cols[static_cast<size_t>(j)],
                                    cols[static_cast<size_t>(k)]);
        if (v != 0) out.set(i, j, k, numer(v));  // integral: integer inputs throughout
      }
  return out;
}

int radical_dimension(const TrilinearForm& mu) {
  const int n = mu.rank();
  // v is in the radical iff contract(mu, e_i) v = 0 for all i; stack the n
  // Gram matrices and take the kernel dimension.
  Matrix stacked(n * n, n);
  for (int i = 0; i < n; ++i) {
    Matrix g = contract(mu, Vec::unit(n, i));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked.at(i * n + r, c) = g.at(r, c);
  }
  return n - stacked.rank_q();
}

}  // namespace cy3
