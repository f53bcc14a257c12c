#ifndef CY3_FACTOR_HPP
#define CY3_FACTOR_HPP

// Rational linear factors of the cubic form mu(a,a,a): the exact division
// C = nu * xi, the hyperplane restriction of the residual quadratic xi, and
// the classification of kernels and signatures that holds for
// irregularity-zero threefolds.

#include <optional>
#include <utility>
#include <vector>

#include "cy3/congruence.hpp"
#include "cy3/cubic.hpp"
#include "cy3/linear.hpp"
#include "cy3/quadratic.hpp"
#include "cy3/record.hpp"

namespace cy3 {

// Integer basis of ker(nu) inside the lattice. The columns extend to a basis
// of Z^b2 (they come from a unimodular completion).
struct HyperplaneBasis {
  Matrix basis;  // b2 x (b2 - 1), integral
};

struct Factorization {
  LinearFunctional nu;  // primitive integral coefficients, normalized sign
  QuadraticForm xi;     // nu(a) * xi(a) = mu(a,a,a) exactly; carries the content
  Signature sig;        // signature of xi
  int kernel_dim = 0;   // dim ker(A_xi), computed independently of sig
  HyperplaneBasis hyperplane;
  QuadraticForm xi_restricted;  // xi on ker(nu), rank b2 - 1
  Signature restricted_sig;
};

// xi with nu * xi = C exactly. Division eliminates the pivot variable of nu
// (its last nonzero coefficient); a nonzero remainder is an error naming a
// surviving monomial.
QuadraticForm divide_by_linear(const CubicForm& c, const LinearFunctional& nu);

// Restriction of xi to the hyperplane nu = 0: an integer kernel basis B via
// unimodular column reduction of nu's coefficient row, and B^T A_xi B.
// nu must be a nonzero integral functional (primitivity is not required; the
// hyperplane only depends on the line spanned by nu).
std::pair<HyperplaneBasis, QuadraticForm> restrict_to_hyperplane(const QuadraticForm& xi,
                                                                 const LinearFunctional& nu);

// Every primitive integral linear form dividing C over Q, one per +/- pair.
// Sign convention: nu(kahler) > 0 when a sample is given and nu does not
// vanish on it, else first nonzero coefficient positive. Output is sorted
// lexicographically by coefficient vector.
//
// Search is restriction-and-lift: anchor on the first variable of the
// factor's support, read candidate coefficient ratios off the rational roots
// of the binary cubics C restricted to coordinate planes through the anchor,
// and verify every assembled candidate by exact division. When some needed
// coordinate-plane restriction vanishes identically the ratio sets carry no
// information, and the search falls back to the exhaustive box scan below.
std::vector<LinearFunctional> find_linear_factors(const CubicForm& c,
                                                  const std::optional<Vec>& kahler = std::nullopt);

// Divide-and-test over every primitive integral form supported on the
// variables C depends on, with |nu_l| bounded by the height of the primitive
// part of C. The bound is complete: if nu * xi = C with nu primitive, then by
// Gauss's lemma xi is integral, and in the monomial order that ranks a_l
// first the leading coefficients multiply, so |nu_l| * |lead(xi)| is itself a
// coefficient of the primitive part of C. Exponential in the support size;
// used as the degenerate-plane fallback and as a test oracle.
std::vector<LinearFunctional> find_linear_factors_exhaustive(
    const CubicForm& c, const std::optional<Vec>& kahler = std::nullopt);

// Full factorization data for every linear factor of mu's cubic.
std::vector<Factorization> find_linear_factors(const TrilinearForm& mu,
                                               const std::optional<Vec>& kahler = std::nullopt);

// The classification sub-checks for a factorization of rec's cubic form:
//   residual_kernel      dim ker(A_xi) <= 1
//   residual_restriction if the kernel is a line, xi restricted to the
//                        hyperplane nu = 0 is nondegenerate
//   residual_signature   for irregularity-zero records, sig(xi) is one of
//                        (2,0,b2-2), (1,1,b2-2), (1,0,b2-1)
// The signature check needs the sign convention nu > 0 on a Kahler class, so
// it is not_applicable without a kahler_sample whose cube is positive.
std::vector<CongruenceReport> classify_residual_form(const ThreefoldRecord& rec,
                                                     const Factorization& f);

// Minimal positive rescaling of A_xi that is integral with content 1; the
// lattice Gram matrix the residual form induces on H^2 mod torsion.
struct LatticeGram {
  Rational lambda;  // lattice_gram = lambda * A_xi
  Matrix gram;      // integral, entry gcd 1, same signature as xi
};
LatticeGram lattice_gram(const QuadraticForm& xi);

}  // namespace cy3

#endif
