#ifndef CY3_TRILINEAR_HPP
#define CY3_TRILINEAR_HPP

// Symmetric integer trilinear forms mu on a rank-b2 lattice, stored sparsely
// by non-decreasing index triple (i <= j <= k, 0-based). mu(e_i, e_j, e_k)
// for arbitrary index order is the stored value of the sorted triple.

#include <array>
#include <map>

#include "cy3/matrix.hpp"
#include "cy3/vec.hpp"

namespace cy3 {

using Triple = std::array<int, 3>;

Triple sorted_triple(int i, int j, int k);

class CubicForm;

class TrilinearForm {
 public:
  TrilinearForm() = default;
  explicit TrilinearForm(int rank) : rank_(rank) {}

  int rank() const { return rank_; }

  // Triple in any index order; stores under the sorted key. Zero values are dropped.
  void set(int i, int j, int k, Integer v);
  Integer get(int i, int j, int k) const;

  const std::map<Triple, Integer>& coeffs() const { return c_; }

  bool operator==(const TrilinearForm& o) const { return rank_ == o.rank_ && c_ == o.c_; }
  bool operator!=(const TrilinearForm& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void check_index(int i) const;
  int rank_ = 0;
  std::map<Triple, Integer> c_;
};

// mu(x, y, z), trilinear extension over Q.
Rational eval_trilinear(const TrilinearForm& mu, const Vec& x, const Vec& y, const Vec& z);

// The degree-3 homogeneous polynomial C(a) = mu(a, a, a); monomial a_i a_j a_k
// (i <= j <= k) picks up the multiplicity 1, 3 or 6 of its index multiset.
CubicForm cubic_polynomial(const TrilinearForm& mu);

// Gram matrix of the bilinear form mu(L, -, -).
Matrix contract(const TrilinearForm& mu, const Vec& L);

// mu'(x, y, z) = mu(Mx, My, Mz) for an invertible integer matrix M.
TrilinearForm change_basis(const TrilinearForm& mu, const Matrix& M);

// Dimension of {v : mu(v, x, y) = 0 for all x, y}; directions the form
// does not depend on in any basis.
int radical_dimension(const TrilinearForm& mu);

}  // namespace cy3

#endif
