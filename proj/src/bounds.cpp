#include "cy3/bounds.hpp"

#include <stdexcept>

namespace cy3 {

namespace {

const TrilinearForm& need_mu(const ThreefoldRecord& rec, const char* what) {
  if (!rec.mu) throw std::invalid_argument(std::string(what) + ": record has no trilinear form");
  return *rec.mu;
}

const LinearFunctional& need_c2(const ThreefoldRecord& rec, const char* what) {
  if (!rec.c2) throw std::invalid_argument(std::string(what) + ": record has no c2");
  return *rec.c2;
}

Integer mu_cube(const ThreefoldRecord& rec, const Vec& x, const char* what) {
  Rational m = eval_trilinear(need_mu(rec, what), x, x, x);
  return numer(m);  // integral since mu and x are
}

void need_integral_sample(const Vec& x, const char* what) {
  if (!x.is_integral() || x.is_zero())
    throw std::invalid_argument(std::string(what) + ": sample must be a nonzero integral class");
}

}  // namespace

BoundReport make_bound(std::string check_id, Rational lhs, Rational rhs, std::string citation) {
  BoundReport r;
  r.check_id = std::move(check_id);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.slack = r.rhs - r.lhs;
  r.status = r.slack >= 0 ? CheckStatus::pass : CheckStatus::fail;
  r.citation = std::move(citation);
  return r;
}

Rational geometric_genus(const ThreefoldRecord& rec, const Vec& x) {
  need_integral_sample(x, "geometric_genus");
  if (!rec.is_calabi_yau)
    throw std::invalid_argument("geometric_genus: record is not Calabi-Yau");
  Rational mu(mu_cube(rec, x, "geometric_genus"));
  Rational c2x = need_c2(rec, "geometric_genus")(x);
  Rational pg = mu / 6 + c2x / 12 - 1;
  if (mod_nonneg(2 * numer(mu) + numer(c2x), 12) == 0 && !is_integral(pg))
    throw std::logic_error("geometric_genus: congruent data must give an integer");
  return pg;
}

SurfaceInvariants surface_invariants(const ThreefoldRecord& rec, const Vec& x) {
  need_integral_sample(x, "surface_invariants");
  if (!rec.is_calabi_yau)
    throw std::invalid_argument("surface_invariants: record is not Calabi-Yau");
  SurfaceInvariants s;
  s.k2 = mu_cube(rec, x, "surface_invariants");
  Integer c2x = numer(need_c2(rec, "surface_invariants")(x));
  s.c2_s = s.k2 + c2x;
  s.segre2 = -c2x;
  return s;
}

BoundReport c2_bound_noether(const ThreefoldRecord& rec, const Vec& x) {
  need_integral_sample(x, "c2_bound_noether");
  Integer mu = mu_cube(rec, x, "c2_bound_noether");
  Rational c2x = need_c2(rec, "c2_bound_noether")(x);
  bool even = mod_nonneg(mu, 2) == 0;
  BoundReport r = make_bound("c2_noether", c2x / 2, Rational(2 * mu + (even ? 18 : 15)),
                             "Noether inequality on an |H|-surface");
  if (!even) r.note = "odd mu(x) constant 15";
  return r;
}

BoundReport c2_bound_castelnuovo(const ThreefoldRecord& rec, const Vec& x) {
  need_integral_sample(x, "c2_bound_castelnuovo");
  Integer mu = mu_cube(rec, x, "c2_bound_castelnuovo");
  Rational c2x = need_c2(rec, "c2_bound_castelnuovo")(x);
  return make_bound("c2_castelnuovo", c2x / 2, Rational(mu + 20),
                    "Castelnuovo inequality for birational canonical maps");
}

BoundReport c2_bound_reid(const ThreefoldRecord& rec, const Vec& x) {
  need_integral_sample(x, "c2_bound_reid");
  Integer mu = mu_cube(rec, x, "c2_bound_reid");
  Rational c2x = need_c2(rec, "c2_bound_reid")(x);
  return make_bound("c2_reid", c2x, Rational(mu + 48),
                    "Reid inequality for quadric-section canonical images");
}

std::vector<BoundReport> c2_positivity(const ThreefoldRecord& rec) {
  const LinearFunctional& c2 = need_c2(rec, "c2_positivity");
  std::vector<BoundReport> out;
  bool c2_zero = c2.is_zero();
  int idx = 0;
  for (const auto& s : rec.samples) {
    if (!s.has(SampleFlag::nef)) {
      ++idx;
      continue;
    }
    BoundReport r = make_bound("c2_positivity[" + std::to_string(idx) + "]", Rational(0),
                               c2(s.vec), "Miyaoka nonnegativity of c2 on nef classes");
    if (c2_zero) r.note = "c2 identically zero: etale quotient of an abelian threefold";
    out.push_back(std::move(r));
    ++idx;
  }
  return out;
}

std::optional<SchurPartition> parse_partition(const std::string& s) {
  if (s == "1" || s == "(1)") return SchurPartition::p1;
  if (s == "2" || s == "(2)") return SchurPartition::p2;
  if (s == "1,1" || s == "(1,1)") return SchurPartition::p11;
  if (s == "3" || s == "(3)") return SchurPartition::p3;
  if (s == "2,1" || s == "(2,1)") return SchurPartition::p21;
  if (s == "1,1,1" || s == "(1,1,1)") return SchurPartition::p111;
  return std::nullopt;
}

Rational schur_eval(SchurPartition p, const ChernNumbers& c) {
  switch (p) {
    case SchurPartition::p1:
      return c.c1;
    case SchurPartition::p2:
      return c.c2;
    case SchurPartition::p11:
      return c.c1sq - c.c2;
    case SchurPartition::p3:
      return c.c3;
    case SchurPartition::p21:
      return c.c1c2 - c.c3;
    default:  // p111
      return c.c1cubed - 2 * c.c1c2 + c.c3;
  }
}

namespace {

// Shared intersection numbers for the positivity inequalities.
struct DpsData {
  Rational mx3;    // mu(x,x,x)
  Rational mc1xx;  // mu(c1,x,x)
  Rational mc1c1x; // mu(c1,c1,x)
  Rational mc1_3;  // mu(c1,c1,c1)
  Rational c2x;    // c2(x)
  Rational c1c2;   // c2(c1)
  Rational c3;
  Rational mxxy;   // mu(x,x,y)
  Rational mc1xy;  // mu(c1,x,y)
  Rational c2y;    // c2(y)
  Rational mc1c1y; // mu(c1,c1,y)
  Rational mxyy;   // mu(x,y,y)
  Rational mc1yy;  // mu(c1,y,y)
};

DpsData dps_data(const ThreefoldRecord& rec, const Vec& x, const Vec& y, const char* what) {
  const TrilinearForm& mu = need_mu(rec, what);
  const LinearFunctional& c2 = need_c2(rec, what);
  if (!rec.c3) throw std::invalid_argument(std::string(what) + ": record has no c3");
  DpsData d;
  d.mx3 = eval_trilinear(mu, x, x, x);
  d.mc1xx = eval_trilinear(mu, rec.c1, x, x);
  d.mc1c1x = eval_trilinear(mu, rec.c1, rec.c1, x);
  d.mc1_3 = eval_trilinear(mu, rec.c1, rec.c1, rec.c1);
  d.c2x = c2(x);
  d.c1c2 = c2(rec.c1);
  d.c3 = Rational(*rec.c3);
  d.mxxy = eval_trilinear(mu, x, x, y);
  d.mc1xy = eval_trilinear(mu, rec.c1, x, y);
  d.c2y = c2(y);
  d.mc1c1y = eval_trilinear(mu, rec.c1, rec.c1, y);
  d.mxyy = eval_trilinear(mu, x, y, y);
  d.mc1yy = eval_trilinear(mu, rec.c1, y, y);
  return d;
}

const char* kDpsCite = "Schur positivity for nef Omega(2x) (Demailly-Peternell-Schneider)";

}  // namespace

std::vector<BoundReport> dps_inequalities(const ThreefoldRecord& rec, const Vec& x, const Vec& y) {
  need_integral_sample(x, "dps_inequalities");
  need_integral_sample(y, "dps_inequalities");
  DpsData d = dps_data(rec, x, y, "dps_inequalities");
  std::vector<BoundReport> out;
  out.push_back(make_bound("dps_1", 4 * d.mc1xx + d.c3, 8 * d.mx3 + 2 * d.c2x, kDpsCite));
  out.push_back(make_bound("dps_2", 32 * d.mc1xx + d.c1c2,
                           64 * d.mx3 + 4 * d.mc1c1x + 4 * d.c2x + d.c3, kDpsCite));
  out.push_back(make_bound("dps_3", 40 * d.mc1xx + d.mc1_3 + 10 * d.c2x + d.c3,
                           80 * d.mx3 + 10 * d.mc1c1x + 2 * d.c1c2, kDpsCite));
  out.push_back(make_bound("dps_4", 4 * d.mc1xy, 12 * d.mxxy + d.c2y, kDpsCite));
  out.push_back(make_bound("dps_5", 8 * d.mc1xy + d.c2y, 24 * d.mxxy + d.mc1c1y, kDpsCite));
  out.push_back(make_bound("dps_6", d.mc1yy, 6 * d.mxyy, kDpsCite));
  return out;
}

std::vector<BoundReport> cy_fl_inequalities(const ThreefoldRecord& rec, const Vec& x,
                                            const Vec& y) {
  need_integral_sample(x, "cy_fl_inequalities");
  need_integral_sample(y, "cy_fl_inequalities");
  if (!rec.is_calabi_yau)
    throw std::invalid_argument("cy_fl_inequalities: record is not Calabi-Yau");
  DpsData d = dps_data(rec, x, y, "cy_fl_inequalities");
  const char* cite = "Fulton-Lazarsfeld positivity, anticanonical class zero";
  std::vector<BoundReport> out;
  out.push_back(make_bound("cy_fl_1", d.c3, 8 * d.mx3 + 2 * d.c2x, cite));
  out.push_back(make_bound("cy_fl_2", Rational(0), 64 * d.mx3 + 4 * d.c2x + d.c3, cite));
  out.push_back(make_bound("cy_fl_3", 10 * d.c2x + d.c3, 80 * d.mx3, cite));
  out.push_back(make_bound("cy_fl_4", d.c2y, 24 * d.mxxy, cite));
  return out;
}

Window c3_window(const Integer& mu_x) {
  if (mu_x <= 0) throw std::domain_error("c3_window: mu(x,x,x) must be positive");
  if (mu_x == 1) return {Rational(-80), Rational(28)};
  if (mu_x == 3) return {Rational(-180), Rational(54)};
  return {Rational(-36 * mu_x - 80), Rational(6 * mu_x + 40)};
}

std::vector<BoundReport> c3_window_check(const ThreefoldRecord& rec, const Vec& x) {
  need_integral_sample(x, "c3_window_check");
  if (!rec.c3) throw std::invalid_argument("c3_window_check: record has no c3");
  Integer mu = mu_cube(rec, x, "c3_window_check");
  Window w = c3_window(mu);
  Rational half_c3 = Rational(*rec.c3) / 2;
  const char* cite = "Euler characteristic window for very ample polarizations";
  std::vector<BoundReport> out;
  out.push_back(make_bound("c3_window_lower", w.lo, half_c3, cite));
  out.push_back(make_bound("c3_window_upper", half_c3, w.hi, cite));
  return out;
}

}  // namespace cy3
