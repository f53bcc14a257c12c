#ifndef CY3_CONGRUENCE_HPP
#define CY3_CONGRUENCE_HPP

// Integrality congruences carried by the trilinear form of a threefold:
// Wall's mod-2 and mod-24 conditions and the mod-12 Riemann-Roch condition
// on Calabi-Yau data. Everything is decided by finite basis reductions and
// re-checked on random vectors against the defining identity.

#include <string>
#include <vector>

#include "cy3/linear.hpp"
#include "cy3/trilinear.hpp"

namespace cy3 {

enum class CheckStatus { pass, fail, not_applicable };

std::string to_string(CheckStatus s);

// A failed congruence instance: the vectors violating it and the residue.
struct CongruenceWitness {
  std::vector<Vec> vectors;
  Integer residue;
};

struct CongruenceReport {
  std::string check_id;
  CheckStatus status = CheckStatus::not_applicable;
  std::vector<CongruenceWitness> witnesses;
  std::string citation;
  std::string note;
  bool passed() const { return status == CheckStatus::pass; }
};

// mu(x,x,y) + mu(x,y,y) = 0 mod 2 for all integral x, y.
// Reduction: the expression is Z-linear in each slot mod 2 and symmetric, so
// the basis pairs (e_i, e_k), i < k, decide it; diagonal pairs give 2*mu_iii.
CongruenceReport wall_parity(const TrilinearForm& mu);

// 4 mu(x,x,x) = p1(x) mod 24 for all integral x.
// Reduction: 4x^3 = 4x mod 24 and 12 x_i^2 x_k = 12 x_i x_k mod 24, so the
// congruence holds for all x iff 4 mu_iii = p1(e_i) mod 24 for every i and
// mu_iik + mu_ikk is even for every i < k (= wall_parity).
CongruenceReport wall_pontrjagin(const TrilinearForm& mu, const LinearFunctional& p1);

// 2 mu(x,x,x) + c2(x) = 0 mod 12 for all integral x (anticanonical class zero).
// Reduction: 2x^3 = 2x mod 12 and 6 x_i^2 x_k = 6 x_i x_k mod 12, so the
// condition is 2 mu_iii + c2(e_i) = 0 mod 12 for every i plus evenness of
// mu_iik + mu_ikk. Passing forces c2(x) even for every integral x.
CongruenceReport cy_riemann_roch(const TrilinearForm& mu, const LinearFunctional& c2);

// chi(nH) = (mu_x / 6) n^3 + (c2_x / 12) n; integral for every integer n
// whenever 2 mu_x + c2_x = 0 mod 12.
Rational hilbert_polynomial(const Rational& mu_x, const Rational& c2_x, const Integer& n);

}  // namespace cy3

#endif
