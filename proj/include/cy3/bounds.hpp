#ifndef CY3_BOUNDS_HPP
#define CY3_BOUNDS_HPP

// Inequalities bounding Chern data against the cubic form: the classical
// surface bounds transported to |H|-surfaces, nef-tangent-bundle Schur
// positivity, and the Euler-characteristic window they imply.

#include "cy3/congruence.hpp"
#include "cy3/record.hpp"

namespace cy3 {

// One inequality instance lhs <= rhs; slack = rhs - lhs, pass iff slack >= 0.
struct BoundReport {
  std::string check_id;
  CheckStatus status = CheckStatus::not_applicable;
  Rational lhs, rhs, slack;
  std::string citation;
  std::string note;
  bool passed() const { return status == CheckStatus::pass; }
};

BoundReport make_bound(std::string check_id, Rational lhs, Rational rhs, std::string citation);

// h^0(K_S) for the minimal surface S in |x|: mu(x)/6 + c2(x)/12 - 1.
// Requires a Calabi-Yau record with mu and c2; integrality is forced when
// the mod-12 congruence holds, and checked.
Rational geometric_genus(const ThreefoldRecord& rec, const Vec& x);

// (K_S^2, c2(S), s2(S)) = (mu(x), mu(x) + c2(x), -c2(x)) for S in |x|.
struct SurfaceInvariants {
  Integer k2;      // K_S^2
  Integer c2_s;    // c2(S) = e(S)
  Integer segre2;  // s2 of the rank-2 tautological quotient; -c2(x)
};
SurfaceInvariants surface_invariants(const ThreefoldRecord& rec, const Vec& x);

// (1/2) c2(x) <= 2 mu(x) + 18 (mu even) or + 15 (mu odd); x ample with
// dim |x| >= 2 and |x| free.
BoundReport c2_bound_noether(const ThreefoldRecord& rec, const Vec& x);

// (1/2) c2(x) <= mu(x) + 20; canonical map of S birational onto its image.
BoundReport c2_bound_castelnuovo(const ThreefoldRecord& rec, const Vec& x);

// c2(x) <= mu(x) + 48; canonical image cut out by quadrics.
BoundReport c2_bound_reid(const ThreefoldRecord& rec, const Vec& x);

// c2(v) >= 0 for every nef sample v of the record.
std::vector<BoundReport> c2_positivity(const ThreefoldRecord& rec);

// Schur polynomials of a rank-3 nef bundle in its Chern data, evaluated on
// caller-supplied top intersection numbers.
struct ChernNumbers {
  Rational c1;        // <c1 . w^2>-type number for degree-2 evaluations
  Rational c2;        // <c2 . w>
  Rational c3;        // <c3>
  Rational c1sq;      // <c1^2 . w>
  Rational c1c2;      // <c1 c2>
  Rational c1cubed;   // <c1^3>
};

enum class SchurPartition { p1, p2, p11, p3, p21, p111 };
std::optional<SchurPartition> parse_partition(const std::string& s);
Rational schur_eval(SchurPartition p, const ChernNumbers& c);

// The six degree-respecting Schur positivity inequalities for a threefold
// with nef Omega(2x): x very ample, y ample (Demailly-Peternell-Schneider).
std::vector<BoundReport> dps_inequalities(const ThreefoldRecord& rec, const Vec& x, const Vec& y);

// Their Calabi-Yau specialization (c1 = 0), four inequalities.
std::vector<BoundReport> cy_fl_inequalities(const ThreefoldRecord& rec, const Vec& x, const Vec& y);

// Window for c3/2 implied by the inequalities above on a very amply
// polarized Calabi-Yau threefold with mu = mu(x,x,x) > 0:
//   -36 mu - 80 <= c3/2 <= 6 mu + 40,
// sharpened to (-80, 28) at mu = 1 and (-180, 54) at mu = 3.
struct Window {
  Rational lo, hi;
};
Window c3_window(const Integer& mu_x);

// Both sides of the window against rec.c3 / 2.
std::vector<BoundReport> c3_window_check(const ThreefoldRecord& rec, const Vec& x);

}  // namespace cy3

#endif
