// Integer group actions on the lattice: invariance of the trilinear form, of
// linear factors, orthogonality for the residual quadratic, and the combined
// equivariance report.

#include <stdexcept>

#include "cy3/action.hpp"
#include "cy3/factor.hpp"
#include "testutil.hpp"

using namespace cy3;
using cy3test::Rng;

static Matrix swap2() {
  return Matrix{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
}

static Matrix cyclic3() {  // e1 -> e2 -> e3 -> e1
  Matrix m(3, 3);
  m.at(1, 0) = 1;
  m.at(2, 1) = 1;
  m.at(0, 2) = 1;
  return m;
}

// a1^3 + 6 a1 a2^2
static TrilinearForm involution_cubic() {
  TrilinearForm mu(2);
  mu.set(0, 0, 0, 1);
  mu.set(0, 1, 1, 2);
  return mu;
}

static void invariance_examples() {
  TrilinearForm prod(3);
  prod.set(0, 1, 2, 1);  // 6 a1 a2 a3
  CHECK(preserves_trilinear(prod, Matrix::identity(3)));
  CHECK(preserves_trilinear(prod, cyclic3()));

  TrilinearForm cube(2);
  cube.set(0, 0, 0, 1);
  Triple w{9, 9, 9};
  CHECK(!preserves_trilinear(cube, swap2(), &w));
  CHECK((w == Triple{0, 0, 0}));

  LinearFunctional a1{Rational(1), Rational(0)};
  CHECK(preserves_linear(a1, Matrix::identity(2)));
  CHECK(!preserves_linear(a1, swap2()));
  CHECK(preserves_linear(LinearFunctional{Rational(1), Rational(1)}, swap2()));

  QuadraticForm xi(2);
  xi.set(0, 0, 1);
  xi.set(0, 1, 3);
  CHECK(in_orthogonal_group(xi, Matrix::identity(2)));
  Matrix neg(2, 2);
  neg.at(0, 0) = -1;
  neg.at(1, 1) = -1;
  CHECK(in_orthogonal_group(xi, neg));
  QuadraticForm id2(2);
  id2.set(0, 0, 1);
  id2.set(1, 1, 1);
  Matrix shear{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
  CHECK(!in_orthogonal_group(id2, shear));

  bool threw = false;
  try {
    Matrix sing(2, 2);  // zero matrix
    preserves_trilinear(cube, sing);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);
}

static void random_equivalence() {
  Rng rng(cy3test::kSeed ^ 0xa1u);
  for (int t = 0; t < 200; ++t) {
    int n = rng.uniform(2, 4);
    TrilinearForm mu;
    Matrix m;
    if (rng.coin()) {
      // invariant by construction: coefficients depend only on the index
      // multiset shape, so any coordinate permutation preserves the form
      mu = TrilinearForm(n);
      int diag = rng.uniform(-4, 4), two = rng.uniform(-4, 4), three = rng.uniform(-4, 4);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          for (int k = j; k < n; ++k) {
            int shape = (i == j && j == k) ? diag : (i == j || j == k) ? two : three;
            mu.set(i, j, k, shape);
          }
      m = Matrix(n, n);  // random permutation matrix
      std::vector<int> perm(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
      for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<size_t>(i)],
                                                perm[static_cast<size_t>(rng.uniform(0, i))]);
      for (int i = 0; i < n; ++i) m.at(perm[static_cast<size_t>(i)], i) = 1;
    } else {
      mu = cy3test::random_trilinear(rng, n, -4, 4);
      m = cy3test::random_unimodular(rng, n);
    }

    bool basis_level = preserves_trilinear(mu, m);
    CHECK(basis_level == (change_basis(mu, m) == mu));

    bool direct = true;
    for (int v = 0; v < 200 && direct; ++v) {
      Vec x = cy3test::random_int_vec(rng, n, -3, 3);
      Vec y = cy3test::random_int_vec(rng, n, -3, 3);
      Vec z = cy3test::random_int_vec(rng, n, -3, 3);
      if (eval_trilinear(mu, m * x, m * y, m * z) != eval_trilinear(mu, x, y, z)) direct = false;
    }
    // basis level true forces direct true; the converse can fail only with
    // astronomically bad sampling luck, so assert equality outright
    CHECK(basis_level == direct);
  }
}

static void closure_sanity() {
  QuadraticForm hyp(2);
  hyp.set(0, 1, 1);
  std::vector<Matrix> gens = {swap2(), Matrix{{Rational(-1), Rational(0)},
                                              {Rational(0), Rational(-1)}}};
  for (const Matrix& g : gens) CHECK(in_orthogonal_group(hyp, g));
  Rng rng(cy3test::kSeed ^ 0xa2u);
  for (int t = 0; t < 50; ++t) {
    Matrix word = Matrix::identity(2);
    int len = rng.uniform(1, 6);
    for (int s = 0; s < len; ++s) word = word * gens[static_cast<size_t>(rng.uniform(0, 1))];
    CHECK(in_orthogonal_group(hyp, word));
  }
}

static ThreefoldRecord action_record(int b2, TrilinearForm mu, Vec kahler) {
  ThreefoldRecord rec;
  rec.name = "inline";
  rec.b2 = b2;
  rec.is_calabi_yau = true;
  rec.irregularity_zero = true;
  rec.c1 = Vec::zero(b2);
  rec.mu = std::move(mu);
  SampleClass s;
  s.vec = std::move(kahler);
  s.flags = {SampleFlag::kahler_sample};
  rec.samples = {s};
  return rec;
}

static void report_cases() {
  // involution fixing the factor: straightforward pass
  ThreefoldRecord rec = action_record(2, involution_cubic(), Vec{Rational(1), Rational(1)});
  Matrix invol{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}};
  GroupRep rep = make_group_rep(2, {invol}, Integer(2));
  auto fs = find_linear_factors(*rec.mu, rec.kahler_sample());
  CHECK(fs.size() == 1);
  GroupActionReport r = verify_group_action(rec, fs[0], rep);
  CHECK(r.status == CheckStatus::pass);
  CHECK(!r.inconsistent);
  CHECK(r.generators.size() == 1);
  if (!r.generators.empty()) {
    CHECK(r.generators[0].preserves_mu);
    CHECK(r.generators[0].fixes_nu.value_or(false));
    CHECK(r.generators[0].orthogonal_for_xi.value_or(false));
  }

  // trivial group: vacuous pass
  GroupRep trivial;
  trivial.rank = 2;
  GroupActionReport tr = verify_group_action(rec, fs[0], trivial);
  CHECK(tr.status == CheckStatus::pass);
  CHECK(tr.note == "trivial group, nothing to check");

  // generator breaking the cubic: hypothesis unmet
  GroupRep broken = make_group_rep(2, {swap2()});
  GroupActionReport br = verify_group_action(rec, fs[0], broken);
  CHECK(br.status == CheckStatus::not_applicable);
  CHECK(br.generators.size() == 1);
  if (!br.generators.empty()) {
    CHECK(!br.generators[0].preserves_mu);
    CHECK(br.generators[0].mu_witness.has_value());
  }

  // swap on 9 a1 a2 (a1 + a2): the factors are permuted, never lost
  TrilinearForm bic(2);
  bic.set(0, 0, 1, 3);
  bic.set(0, 1, 1, 3);
  ThreefoldRecord brec = action_record(2, bic, Vec{Rational(1), Rational(1)});
  GroupRep swap_rep = make_group_rep(2, {swap2()}, Integer(2));
  auto bfs = find_linear_factors(*brec.mu, brec.kahler_sample());
  CHECK(bfs.size() == 3);
  bool saw_moved = false;
  for (const Factorization& f : bfs) {
    GroupActionReport pr = verify_group_action(brec, f, swap_rep);
    CHECK(pr.status == CheckStatus::pass);
    if (!pr.generators.empty() && !pr.generators[0].fixes_nu.value_or(true)) {
      saw_moved = true;
      CHECK(pr.note == "the action permutes the linear factors");
    }
  }
  CHECK(saw_moved);

  bool threw = false;
  try {
    verify_group_action(rec, fs[0], make_group_rep(3, {Matrix::identity(3)}));
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);  // representation rank must match the record
}

static void inconsistency_flag() {
  // the cyclic shift preserves 6 a1 a2 a3 but fixes none of its three
  // factors, so the orthogonality conclusion has no invariant nu to stand on
  TrilinearForm prod(3);
  prod.set(0, 1, 2, 1);
  ThreefoldRecord rec = action_record(3, prod, Vec{Rational(1), Rational(1), Rational(1)});
  GroupRep rep = make_group_rep(3, {cyclic3()}, Integer(3));
  auto fs = find_linear_factors(*rec.mu, rec.kahler_sample());
  CHECK(fs.size() == 3);
  GroupActionReport r = verify_group_action(rec, fs[0], rep);
  CHECK(r.status == CheckStatus::fail);
  CHECK(r.inconsistent);
  CHECK(r.note.find("fixes no linear factor") != std::string::npos);

  // same conclusion when the caller passes an explicit truncated factor list
  GroupActionReport t = verify_group_action(rec, fs[0], rep, {fs[0]});
  CHECK(t.status == CheckStatus::fail && t.inconsistent);
}

static void rep_validation() {
  bool threw = false;
  try {
    make_group_rep(2, {Matrix{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}}});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);  // det 2 is not a lattice automorphism of finite order

  threw = false;
  try {
    make_group_rep(2, {Matrix(2, 2)});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);  // singular

  threw = false;
  try {
    make_group_rep(2, {swap2()}, Integer(0));
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);  // order hint must be positive
}

int main() {
  invariance_examples();
  random_equivalence();
  closure_sanity();
  report_cases();
  inconsistency_flag();
  rep_validation();
  return cy3test::test_main_result("test_action");
}
