// Rational linear factors of the cubic form: exact division, hyperplane
// restriction, residual classification, lattice rescaling, and agreement of
// the restriction-and-lift search with the divide-and-test oracles.

#include <chrono>
#include <stdexcept>
#include <string>

#include "cy3/factor.hpp"
#include "testutil.hpp"

using namespace cy3;
using cy3test::Rng;

static QuadraticForm gram2(Rational a, Rational b, Rational c) {
  QuadraticForm q(2);
  q.set(0, 0, a);
  q.set(0, 1, b);
  q.set(1, 1, c);
  return q;
}

// a1 (14 a1^2 + 21 a1 a2 + 9 a2^2)
static TrilinearForm x7_cubic() {
  TrilinearForm mu(2);
  mu.set(0, 0, 0, 14);
  mu.set(0, 0, 1, 7);
  mu.set(0, 1, 1, 3);
  return mu;
}

// 2 a1^3 + 12 a1^2 a2
static TrilinearForm split_cubic() {
  TrilinearForm mu(2);
  mu.set(0, 0, 0, 2);
  mu.set(0, 0, 1, 4);
  return mu;
}

// 6 a1 a2 a3
static TrilinearForm triple_product() {
  TrilinearForm mu(3);
  mu.set(0, 1, 2, 1);
  return mu;
}

static void single_factor_example() {
  auto fs = find_linear_factors(x7_cubic());
  CHECK(fs.size() == 1);
  if (fs.empty()) return;
  const Factorization& f = fs[0];
  CHECK(f.nu == (LinearFunctional{Rational(1), Rational(0)}));
  CHECK(f.xi == gram2(14, Rational(21, 2), 9));
  CHECK(f.sig == (Signature{2, 0, 0}));
  CHECK(f.kernel_dim == 0);
}

static void two_factor_example() {
  auto fs = find_linear_factors(split_cubic());
  CHECK(fs.size() == 2);
  if (fs.size() != 2) return;
  // lexicographic order: a1 before a1 + 6 a2
  CHECK(fs[0].nu == (LinearFunctional{Rational(1), Rational(0)}));
  CHECK(fs[0].xi == gram2(2, 6, 0));
  CHECK(fs[0].sig == (Signature{1, 0, 1}));
  CHECK(fs[1].nu == (LinearFunctional{Rational(1), Rational(6)}));
  CHECK(fs[1].xi == gram2(2, 0, 0));
  CHECK(fs[1].sig == (Signature{1, 1, 0}));
  CHECK(fs[1].kernel_dim == 1);
  CHECK(fs[1].restricted_sig == (Signature{1, 0, 0}));

  // the identity nu * xi = C holds coefficient by coefficient
  CubicForm c = cubic_polynomial(split_cubic());
  for (const Factorization& f : fs) CHECK(multiply(f.nu, f.xi) == c);
}

static void triple_product_example() {
  // every coordinate plane through the anchor degenerates, forcing the
  // exhaustive fallback
  auto fs = find_linear_factors(triple_product());
  CHECK(fs.size() == 3);
  for (const Factorization& f : fs) {
    CHECK(f.sig == (Signature{1, 1, 1}));
    CHECK(f.kernel_dim == 1);
    CHECK(f.restricted_sig == (Signature{1, 0, 1}));
  }
  if (fs.size() == 3) {
    CHECK(fs[0].nu == (LinearFunctional{Rational(0), Rational(0), Rational(1)}));
    CHECK(fs[1].nu == (LinearFunctional{Rational(0), Rational(1), Rational(0)}));
    CHECK(fs[2].nu == (LinearFunctional{Rational(1), Rational(0), Rational(0)}));
  }
}

static void division_examples() {
  CubicForm c = cubic_polynomial(split_cubic());
  QuadraticForm xi = divide_by_linear(c, LinearFunctional{Rational(2), Rational(0)});
  CHECK(xi == gram2(1, 3, 0));  // a1^2 + 6 a1 a2

  CubicForm cube(1);
  cube.set(0, 0, 0, 1);
  QuadraticForm sq = divide_by_linear(cube, LinearFunctional{Rational(1)});
  CHECK(sq.at(0, 0) == 1);

  CubicForm sum(2);
  sum.set(0, 0, 0, 1);
  sum.set(1, 1, 1, 1);
  bool threw = false;
  try {
    divide_by_linear(sum, LinearFunctional{Rational(1), Rational(0)});
  } catch (const std::domain_error& e) {
    threw = true;
    CHECK(std::string(e.what()).find("a2^3") != std::string::npos);
  }
  CHECK(threw);
}

static void restriction_examples() {
  QuadraticForm r1 = restrict_to_hyperplane(gram2(1, 3, 0),
                                            LinearFunctional{Rational(2), Rational(0)}).second;
  CHECK(r1.rank() == 1);
  CHECK(r1.is_zero());

  QuadraticForm r2 = restrict_to_hyperplane(gram2(1, 0, 1),
                                            LinearFunctional{Rational(0), Rational(1)}).second;
  CHECK(r2.rank() == 1 && r2.at(0, 0) == 1);

  LinearFunctional nu{Rational(1), Rational(6)};
  auto [basis, r3] = restrict_to_hyperplane(gram2(2, 0, 0), nu);
  CHECK(r3.rank() == 1 && r3.at(0, 0) == 72);
  CHECK(basis.basis.is_integral());
  CHECK(nu(basis.basis.col(0)) == 0);
}

static void classification_examples() {
  ThreefoldRecord x7;
  x7.name = "x7_inline";
  x7.b2 = 2;
  x7.is_calabi_yau = true;
  x7.irregularity_zero = true;
  x7.c1 = Vec::zero(2);
  x7.mu = x7_cubic();
  SampleClass k;
  k.vec = Vec{Rational(1), Rational(1)};
  k.flags = {SampleFlag::kahler_sample};
  x7.samples = {k};

  auto fs = find_linear_factors(*x7.mu, x7.kahler_sample());
  CHECK(fs.size() == 1);
  if (fs.size() == 1) {
    auto checks = classify_residual_form(x7, fs[0]);
    CHECK(checks.size() == 3);
    CHECK(checks[0].check_id == "residual_kernel" && checks[0].passed());
    CHECK(checks[1].check_id == "residual_restriction" &&
          checks[1].status == CheckStatus::not_applicable);
    CHECK(checks[2].check_id == "residual_signature" && checks[2].passed());
  }

  // kernel-one factorization: restriction nondegeneracy becomes a real check
  ThreefoldRecord abq;
  abq.name = "abq_inline";
  abq.b2 = 3;
  abq.is_calabi_yau = true;
  abq.irregularity_zero = true;
  abq.c1 = Vec::zero(3);
  abq.mu = triple_product();
  SampleClass k3;
  k3.vec = Vec{Rational(1), Rational(1), Rational(1)};
  k3.flags = {SampleFlag::kahler_sample};
  abq.samples = {k3};
  for (const Factorization& f : find_linear_factors(*abq.mu, abq.kahler_sample())) {
    auto checks = classify_residual_form(abq, f);
    CHECK(checks[0].passed());
    CHECK(checks[1].passed());  // kernel is a line, restriction nondegenerate
    CHECK(checks[2].passed());  // (1,1,1) is allowed at b2 = 3
  }

  // rank-3 cube of a linear form: kernel dimension 2 violates the bound, and
  // without a Kahler sample the signature check has no sign convention
  ThreefoldRecord bad;
  bad.name = "bad_inline";
  bad.b2 = 3;
  bad.is_calabi_yau = true;
  bad.irregularity_zero = true;
  bad.c1 = Vec::zero(3);
  TrilinearForm cube(3);
  cube.set(0, 0, 0, 1);
  bad.mu = cube;
  auto bfs = find_linear_factors(*bad.mu, std::nullopt);
  CHECK(bfs.size() == 1);
  if (bfs.size() == 1) {
    CHECK(bfs[0].kernel_dim == 2);
    auto checks = classify_residual_form(bad, bfs[0]);
    CHECK(checks[0].status == CheckStatus::fail);
    CHECK(checks[1].status == CheckStatus::not_applicable);
    CHECK(checks[2].status == CheckStatus::not_applicable);
  }
}

static void lattice_examples() {
  LatticeGram a = lattice_gram(gram2(14, Rational(21, 2), 9));
  CHECK(a.lambda == 2);
  CHECK(a.gram == (Matrix{{Rational(28), Rational(21)}, {Rational(21), Rational(18)}}));

  QuadraticForm id(2);
  id.set(0, 0, 1);
  id.set(1, 1, 1);
  LatticeGram b = lattice_gram(id);
  CHECK(b.lambda == 1);
  CHECK(b.gram == Matrix::identity(2));

  LatticeGram c = lattice_gram(gram2(Rational(1, 3), 0, Rational(2, 3)));
  CHECK(c.lambda == 3);
  CHECK(c.gram == (Matrix{{Rational(1), Rational(0)}, {Rational(0), Rational(2)}}));

  // scale invariance of signature and the content-1 invariant
  Rng rng(cy3test::kSeed ^ 0xf1u);
  for (int t = 0; t < 40; ++t) {
    int n = rng.uniform(1, 4);
    QuadraticForm q(n);
    bool zero = true;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rational v = cy3test::frac(rng.uniform(-6, 6), rng.uniform(1, 5));
        q.set(i, j, v);
        if (v != 0) zero = false;
      }
    if (zero) continue;
    LatticeGram lg = lattice_gram(q);
    CHECK(lg.lambda > 0);
    CHECK(lg.gram.is_integral());
    Integer content = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) content = gcd(content, numer(lg.gram.at(i, j)));
    CHECK(content == 1);
    CHECK(signature(QuadraticForm(lg.gram)) == signature(q));
  }
}

static void isotropic_examples() {
  auto v1 = isotropic_witness(gram2(1, 3, 0));
  CHECK(v1.has_value());
  if (v1) CHECK(gram2(1, 3, 0)(*v1) == 0 && !v1->is_zero());

  QuadraticForm id3(3);
  for (int i = 0; i < 3; ++i) id3.set(i, i, 1);
  CHECK(!isotropic_witness(id3).has_value());

  auto v2 = isotropic_witness(gram2(2, 0, 0));
  CHECK(v2.has_value());
  if (v2) CHECK(gram2(2, 0, 0)(*v2) == 0 && !v2->is_zero());
}

static void sign_convention() {
  // 3 (a1 - a2)(a1^2 + a2^2), planted through the symmetrized product
  TrilinearForm mu(2);
  mu.set(0, 0, 0, 3);
  mu.set(0, 0, 1, -1);
  mu.set(0, 1, 1, 1);
  mu.set(1, 1, 1, -3);

  auto plain = find_linear_factors(mu);
  CHECK(plain.size() == 1);
  if (plain.size() == 1) CHECK(plain[0].nu == (LinearFunctional{Rational(1), Rational(-1)}));

  Vec above{Rational(2), Rational(1)};
  auto pos = find_linear_factors(mu, above);
  CHECK(pos.size() == 1);
  if (pos.size() == 1) {
    CHECK(pos[0].nu == (LinearFunctional{Rational(1), Rational(-1)}));
    CHECK(pos[0].nu(above) > 0);
  }

  Vec below{Rational(1), Rational(2)};
  auto neg = find_linear_factors(mu, below);
  CHECK(neg.size() == 1);
  if (neg.size() == 1) {
    CHECK(neg[0].nu == (LinearFunctional{Rational(-1), Rational(1)}));
    CHECK(neg[0].nu(below) > 0);
  }
}

static void zero_cubic_rejected() {
  TrilinearForm zero(2);
  bool threw = false;
  try {
    find_linear_factors(zero);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);

  CubicForm zc(2);
  threw = false;
  try {
    find_linear_factors(zc);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);
}

static void exhaustive_agreement_small_rank() {
  Rng rng(cy3test::kSeed ^ 0xf2u);
  int done = 0;
  while (done < 100) {
    int n = 1 + done % 2;
    TrilinearForm mu = cy3test::random_trilinear(rng, n, -3, 3);
    CubicForm c = cubic_polynomial(mu);
    if (c.is_zero()) continue;
    auto primary = find_linear_factors(c);
    auto box = find_linear_factors_exhaustive(c);
    auto oracle = cy3test::factor_oracle(c);
    CHECK(primary == box);
    CHECK(primary == oracle);
    ++done;
  }
  // a few rank-3 instances; the box scan is exponential, so only a few
  for (int t = 0; t < 8; ++t) {
    TrilinearForm mu = cy3test::random_trilinear(rng, 3, -2, 2);
    CubicForm c = cubic_polynomial(mu);
    if (c.is_zero()) continue;
    CHECK(find_linear_factors(c) == find_linear_factors_exhaustive(c));
  }
}

static void oracle_fuzz() {
  auto t0 = std::chrono::steady_clock::now();
  cy3test::FactorFuzzResult res = cy3test::factor_oracle_fuzz(800, 200);
  auto t1 = std::chrono::steady_clock::now();
  CHECK_MSG(res.discrepancies == 0, "search must agree with the divide-and-test oracle");
  CHECK_MSG(res.planted_missed == 0, "planted factors must always be found");
  CHECK(res.cubics == 1000);
  CHECK(res.with_factor >= 200);  // every planted cubic factors
  double secs = std::chrono::duration<double>(t1 - t0).count();
  CHECK_MSG(secs < 60.0, "factor fuzz must finish in under a minute");
}

int main() {
  single_factor_example();
  two_factor_example();
  triple_product_example();
  division_examples();
  restriction_examples();
  classification_examples();
  lattice_examples();
  isotropic_examples();
  sign_convention();
  zero_cubic_rejected();
  exhaustive_agreement_small_rank();
  oracle_fuzz();
  return cy3test::test_main_result("test_factor");
}
