// Core exact-arithmetic objects: vectors, matrices, trilinear forms and the
// cubic polynomial, quadratic forms with signature and kernel machinery.

#include <stdexcept>

#include "cy3/cubic.hpp"
#include "cy3/linear.hpp"
#include "cy3/matrix.hpp"
#include "cy3/quadratic.hpp"
#include "cy3/trilinear.hpp"
#include "testutil.hpp"

using namespace cy3;
using cy3test::Rng;

static void vec_basics() {
  Vec v{Rational(6), Rational(-9), Rational(3)};
  Vec p = v.primitive();
  CHECK(p == Vec({Rational(2), Rational(-3), Rational(1)}));

  Vec neg{Rational(0), Rational(-4), Rational(6)};
  CHECK(neg.primitive() == Vec({Rational(0), Rational(2), Rational(-3)}));

  Vec q{Rational(1, 2), Rational(-3, 4)};
  CHECK(primitive_scaling(q) == Vec({Rational(2), Rational(-3)}));

  CHECK(Vec({Rational(1), Rational(0)}).lex_less(Vec({Rational(1), Rational(1)})));
  CHECK(!Vec({Rational(2)}).lex_less(Vec({Rational(1)})));
  CHECK(Vec::unit(3, 1) == Vec({Rational(0), Rational(1), Rational(0)}));
}

static void matrix_basics() {
  Matrix m{{Rational(2), Rational(1)}, {Rational(7), Rational(4)}};
  CHECK(m.det() == 1);
  CHECK(Matrix::identity(4).det() == 1);
  Matrix sw{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  CHECK(sw.det() == -1);
  CHECK((m * sw).rank_q() == 2);

  Matrix sing{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(sing.det() == 0);
  CHECK(sing.rank_q() == 1);
}

static void kernel_completion_props() {
  Rng rng(cy3test::kSeed ^ 0x55u);
  for (int t = 0; t < 50; ++t) {
    int n = rng.uniform(1, 6);
    Vec w = cy3test::random_int_vec(rng, n, -9, 9);
    if (w.is_zero()) w[0] = 1;
    Matrix u = kernel_completion(w);
    Rational d = u.det();
    CHECK(d == 1 || d == -1);
    CHECK(u.is_integral());
    // w * U = (content, 0, ..., 0)
    Integer g = 0;
    for (int i = 0; i < n; ++i) g = gcd(g, numer(w[i]));
    for (int j = 0; j < n; ++j) {
      Rational dot = 0;
      for (int i = 0; i < n; ++i) dot += w[i] * u.at(i, j);
      if (j == 0)
        CHECK(dot == Rational(g) || dot == Rational(-g));
      else
        CHECK(dot == 0);
    }
  }
}

static void trilinear_basics() {
  TrilinearForm mu(3);
  mu.set(2, 0, 1, 7);  // any index order stores the sorted triple
  CHECK(mu.get(0, 1, 2) == 7);
  CHECK(mu.get(1, 2, 0) == 7);
  mu.set(0, 1, 2, 0);  // zero assignment drops the entry
  CHECK(mu.coeffs().empty());

  TrilinearForm q(1);
  q.set(0, 0, 0, 5);
  CubicForm c = cubic_polynomial(q);
  CHECK(c.get(0, 0, 0) == 5);

  TrilinearForm r(2);
  r.set(0, 0, 0, 1);
  r.set(0, 1, 1, 2);
  CubicForm rc = cubic_polynomial(r);
  CHECK(rc.get(0, 0, 0) == 1);
  CHECK(rc.get(0, 1, 1) == 6);  // multiplicity 3 on a_1 a_2^2

  TrilinearForm s(3);
  s.set(0, 1, 2, 1);
  CHECK(cubic_polynomial(s).get(0, 1, 2) == 6);  // multiplicity 6
}

static void trilinear_symmetry_and_contract() {
  Rng rng(cy3test::kSeed ^ 0x66u);
  for (int t = 0; t < 30; ++t) {
    int n = rng.uniform(1, 4);
    TrilinearForm mu = cy3test::random_trilinear(rng, n, -5, 5);
    Vec x = cy3test::random_int_vec(rng, n, -4, 4);
    Vec y = cy3test::random_int_vec(rng, n, -4, 4);
    Vec z = cy3test::random_int_vec(rng, n, -4, 4);
    Rational v = eval_trilinear(mu, x, y, z);
    CHECK(v == eval_trilinear(mu, y, x, z));
    CHECK(v == eval_trilinear(mu, z, y, x));

    Matrix g = contract(mu, x);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        CHECK(g.at(i, j) == g.at(j, i));
        CHECK(g.at(i, j) == eval_trilinear(mu, x, Vec::unit(n, i), Vec::unit(n, j)));
      }

    Matrix m = cy3test::random_unimodular(rng, n);
    TrilinearForm mb = change_basis(mu, m);
    CHECK(eval_trilinear(mb, x, y, z) == eval_trilinear(mu, m * x, m * y, m * z));
  }
}

static void radical_examples() {
  TrilinearForm prod(3);
  prod.set(0, 1, 2, 1);  // 6 a1 a2 a3
  CHECK(radical_dimension(prod) == 0);

  TrilinearForm flat(3);  // supported on the first two coordinates only
  flat.set(0, 0, 0, 1);
  flat.set(0, 1, 1, 2);
  CHECK(radical_dimension(flat) == 1);

  TrilinearForm zero(2);
  CHECK(radical_dimension(zero) == 2);
}

static void quadratic_signatures() {
  QuadraticForm hyp(2);
  hyp.set(0, 1, 1);
  CHECK(signature(hyp) == (Signature{1, 0, 1}));

  QuadraticForm diag(2);
  diag.set(0, 0, 1);
  diag.set(1, 1, -1);
  CHECK(signature(diag) == (Signature{1, 0, 1}));

  QuadraticForm pos(3);
  pos.set(0, 0, 2);
  pos.set(1, 1, Rational(1, 3));
  pos.set(2, 2, 5);
  CHECK(signature(pos) == (Signature{3, 0, 0}));

  QuadraticForm zero(4);
  CHECK(signature(zero) == (Signature{0, 4, 0}));
  CHECK(kernel_dimension(zero) == 4);

  QuadraticForm rank1(3);
  rank1.set(0, 0, 1);
  rank1.set(0, 1, 1);
  rank1.set(1, 1, 1);  // (a1 + a2)^2-ish: gram [[1,1,0],[1,1,0],[0,0,0]]
  CHECK(signature(rank1) == (Signature{1, 2, 0}));
  CHECK(kernel_dimension(rank1) == 2);

  auto kb = kernel_basis(rank1);
  CHECK(kb.size() == 2);
  for (const Vec& v : kb) {
    CHECK(v.is_integral());
    for (int i = 0; i < 3; ++i) CHECK(rank1.bilinear(v, Vec::unit(3, i)) == 0);
  }
}

static void diagonalize_postcondition() {
  Rng rng(cy3test::kSeed ^ 0x77u);
  for (int t = 0; t < 40; ++t) {
    int n = rng.uniform(1, 5);
    QuadraticForm q(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) q.set(i, j, cy3test::frac(rng.uniform(-6, 6), rng.uniform(1, 3)));
    Diagonalization d = diagonalize(q);
    Matrix res = d.basis.transpose() * q.gram() * d.basis;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(res.at(i, j) == (i == j ? d.diag[static_cast<size_t>(i)] : Rational(0)));
    CHECK(d.basis.det() != 0);
  }
}

static void restriction_and_isotropy() {
  QuadraticForm q(3);
  q.set(0, 0, 1);
  q.set(1, 1, -1);
  q.set(2, 2, 3);
  std::vector<Vec> span = {Vec::unit(3, 0), Vec::unit(3, 1)};
  QuadraticForm r = restrict_to_span(q, span);
  CHECK(r.rank() == 2);
  CHECK(signature(r) == (Signature{1, 0, 1}));
  CHECK(restrict_to_span(q, {}).rank() == 0);
  CHECK(signature(restrict_to_span(q, {})) == (Signature{0, 0, 0}));

  auto iso = isotropic_witness(q);  // diag(1,-1,3): ratio 1 is a square
  CHECK(iso.has_value());
  if (iso) {
    CHECK(!iso->is_zero());
    CHECK(q(*iso) == 0);
  }

  QuadraticForm def(2);
  def.set(0, 0, 1);
  def.set(1, 1, 2);
  CHECK(!isotropic_witness(def).has_value());

  // x^2 - 3 y^2 has no rational zero; the witness must be absent even though
  // the form is indefinite.
  QuadraticForm nosol(2);
  nosol.set(0, 0, 1);
  nosol.set(1, 1, -3);
  CHECK(!isotropic_witness(nosol).has_value());
}

static void cubic_form_ops() {
  // (a1 + 6 a2) * (2 a1^2) = 2 a1^3 + 12 a1^2 a2
  LinearFunctional nu{Rational(1), Rational(6)};
  QuadraticForm xi(2);
  xi.set(0, 0, 2);
  CubicForm c = multiply(nu, xi);
  CHECK(c.get(0, 0, 0) == 2);
  CHECK(c.get(0, 0, 1) == 12);
  CHECK(c.get(0, 1, 1) == 0);

  auto b = c.restrict_to_pair(0, 1);
  CHECK(b[0] == 2 && b[1] == 12 && b[2] == 0 && b[3] == 0);

  CHECK(c.primitive_height() == 6);  // primitive part a1^3 + 6 a1^2 a2
  CHECK(c.depends_on(0));
  CHECK(c.depends_on(1));
  CubicForm flat(2);
  flat.set(0, 0, 0, 3);
  CHECK(!flat.depends_on(1));

  Vec w{Rational(2), Rational(1)};
  CHECK(c(w) == Rational(2 * 8 + 12 * 4));
}

static void linear_pivot() {
  LinearFunctional f{Rational(0), Rational(3), Rational(0)};
  CHECK(f.pivot() == 1);
  CHECK(LinearFunctional(3).pivot() == -1);
  Vec x{Rational(1), Rational(2), Rational(5)};
  CHECK(f(x) == 6);
}

static void polynomial_consistency() {
  Rng rng(cy3test::kSeed ^ 0x88u);
  for (int t = 0; t < 200; ++t) {
    int n = rng.uniform(1, 8);
    TrilinearForm mu = cy3test::random_trilinear(rng, n, -4, 4);
    CubicForm c = cubic_polynomial(mu);
    Vec a = cy3test::random_int_vec(rng, n, -5, 5);
    CHECK(c(a) == eval_trilinear(mu, a, a, a));
  }
}

static void contract_linearity() {
  Rng rng(cy3test::kSeed ^ 0x99u);
  for (int t = 0; t < 30; ++t) {
    int n = rng.uniform(1, 4);
    TrilinearForm mu = cy3test::random_trilinear(rng, n, -5, 5);
    Vec l1 = cy3test::random_int_vec(rng, n, -4, 4);
    Vec l2 = cy3test::random_int_vec(rng, n, -4, 4);
    Rational a(rng.uniform(-3, 3)), b(rng.uniform(-3, 3));
    Matrix lhs = contract(mu, l1 * a + l2 * b);
    Matrix g1 = contract(mu, l1);
    Matrix g2 = contract(mu, l2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(lhs.at(i, j) == a * g1.at(i, j) + b * g2.at(i, j));
  }
}

int main() {
  vec_basics();
  matrix_basics();
  kernel_completion_props();
  trilinear_basics();
  trilinear_symmetry_and_contract();
  radical_examples();
  quadratic_signatures();
  diagonalize_postcondition();
  restriction_and_isotropy();
  cubic_form_ops();
  linear_pivot();
  polynomial_consistency();
  contract_linearity();
  CHECK(cy3test::sylvester_fuzz(100) == 0);
  return cy3test::test_main_result("test_forms");
}
