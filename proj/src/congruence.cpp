#include "cy3/congruence.hpp"

#include <random>
#include <stdexcept>

namespace cy3 {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "not_applicable";
  }
}

namespace {

constexpr int kSpotChecks = 500;
constexpr unsigned kSpotSeed = 0x5eedc0deu;

Vec random_int_vec(std::mt19937_64& rng, int rank, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Vec v(rank);
  for (int i = 0; i < rank; ++i) v[i] = dist(rng);
  return v;
}

Integer wall_parity_value(const TrilinearForm& mu, const Vec& x, const Vec& y) {
  Rational v = eval_trilinear(mu, x, x, y) + eval_trilinear(mu, x, y, y);
  return mod_nonneg(numer(v), 2);
}

Integer wall_pontrjagin_value(const TrilinearForm& mu, const LinearFunctional& p1, const Vec& x) {
  Rational v = 4 * eval_trilinear(mu, x, x, x) - p1(x);
  return mod_nonneg(numer(v), 24);
}

Integer riemann_roch_value(const TrilinearForm& mu, const LinearFunctional& c2, const Vec& x) {
  Rational v = 2 * eval_trilinear(mu, x, x, x) + c2(x);
  return mod_nonneg(numer(v), 12);
}

void require_integral(const LinearFunctional& f, const char* what) {
  if (!f.is_integral())
    throw std::invalid_argument(std::string(what) + ": functional must have integer coefficients");
}

}  // namespace

CongruenceReport wall_parity(const TrilinearForm& mu) {
  CongruenceReport rep;
  rep.check_id = "wall_parity";
  rep.citation = "Wall congruence mod 2";
  rep.status = CheckStatus::pass;
  const int n = mu.rank();
  for (int i = 0; i < n && rep.passed(); ++i)
    for (int k = i + 1; k < n; ++k) {
      Integer r = mod_nonneg(mu.get(i, i, k) + mu.get(i, k, k), 2);
      if (r != 0) {
        rep.status = CheckStatus::fail;
        rep.witnesses.push_back({{Vec::unit(n, i), Vec::unit(n, k)}, r});
        break;
      }
    }
  // Redundant spot check of the reduction against the definition.
  std::mt19937_64 rng(kSpotSeed);
  if (rep.passed()) {
    for (int t = 0; t < kSpotChecks; ++t) {
      Vec x = random_int_vec(rng, n, -16, 16);
      Vec y = random_int_vec(rng, n, -16, 16);
      if (wall_parity_value(mu, x, y) != 0)
        throw std::logic_error("wall_parity: basis reduction contradicts direct evaluation");
    }
  } else {
    const auto& w = rep.witnesses.front();
    if (wall_parity_value(mu, w.vectors[0], w.vectors[1]) != w.residue)
      throw std::logic_error("wall_parity: witness does not reproduce under direct evaluation");
  }
  return rep;
}

CongruenceReport wall_pontrjagin(const TrilinearForm& mu, const LinearFunctional& p1) {
  if (p1.rank() != mu.rank()) throw std::invalid_argument("wall_pontrjagin: rank mismatch");
  require_integral(p1, "wall_pontrjagin");
  CongruenceReport rep;
  rep.check_id = "wall_pontrjagin";
  rep.citation = "Wall congruence mod 24";
  rep.status = CheckStatus::pass;
  const int n = mu.rank();
  for (int i = 0; i < n; ++i) {
    Integer r = mod_nonneg(4 * mu.get(i, i, i) - numer(p1(Vec::unit(n, i))), 24);
    if (r != 0) {
      rep.status = CheckStatus::fail;
      rep.witnesses.push_back({{Vec::unit(n, i)}, r});
      break;
    }
  }
  if (rep.passed()) {
    CongruenceReport parity = wall_parity(mu);
    if (!parity.passed()) {
      rep.status = CheckStatus::fail;
      // 12(mu_iik + mu_ikk) mod 24 is seen by x = e_i + e_k.
      const auto& pw = parity.witnesses.front();
      Vec x = pw.vectors[0] + pw.vectors[1];
      rep.witnesses.push_back({{x}, wall_pontrjagin_value(mu, p1, x)});
      rep.note = "mixed-term parity fails";
    }
  }
  std::mt19937_64 rng(kSpotSeed);
  if (rep.passed()) {
    for (int t = 0; t < kSpotChecks; ++t) {
      Vec x = random_int_vec(rng, n, -12, 12);
      if (wall_pontrjagin_value(mu, p1, x) != 0)
        throw std::logic_error("wall_pontrjagin: basis reduction contradicts direct evaluation");
    }
  } else {
    const auto& w = rep.witnesses.front();
    if (wall_pontrjagin_value(mu, p1, w.vectors[0]) != w.residue)
      throw std::logic_error("wall_pontrjagin: witness does not reproduce under direct evaluation");
  }
  return rep;
}

CongruenceReport cy_riemann_roch(const TrilinearForm& mu, const LinearFunctional& c2) {
  if (c2.rank() != mu.rank()) throw std::invalid_argument("cy_riemann_roch: rank mismatch");
  require_integral(c2, "cy_riemann_roch");
  CongruenceReport rep;
  rep.check_id = "cy_riemann_roch";
  rep.citation = "Riemann-Roch mod 12 (anticanonical class zero)";
  rep.status = CheckStatus::pass;
  const int n = mu.rank();
  for (int i = 0; i < n; ++i) {
    Integer r = mod_nonneg(2 * mu.get(i, i, i) + numer(c2(Vec::unit(n, i))), 12);
    if (r != 0) {
      rep.status = CheckStatus::fail;
      rep.witnesses.push_back({{Vec::unit(n, i)}, r});
      break;
    }
  }
  if (rep.passed()) {
    CongruenceReport parity = wall_parity(mu);
    if (!parity.passed()) {
      rep.status = CheckStatus::fail;
      const auto& pw = parity.witnesses.front();
      Vec x = pw.vectors[0] + pw.vectors[1];
      rep.witnesses.push_back({{x}, riemann_roch_value(mu, c2, x)});
      rep.note = "mixed-term parity fails";
    }
  }
  std::mt19937_64 rng(kSpotSeed);
  if (rep.passed()) {
    for (int t = 0; t < kSpotChecks; ++t) {
      Vec x = random_int_vec(rng, n, -12, 12);
      if (riemann_roch_value(mu, c2, x) != 0)
        throw std::logic_error("cy_riemann_roch: basis reduction contradicts direct evaluation");
    }
    // Derived fact: c2 is then even on the whole lattice.
    for (int i = 0; i < n; ++i)
      if (mod_nonneg(numer(c2(Vec::unit(n, i))), 2) != 0)
        throw std::logic_error("cy_riemann_roch: passing form with odd c2 value");
    rep.note = "c2 takes even values on the lattice";
  } else {
    const auto& w = rep.witnesses.front();
    if (riemann_roch_value(mu, c2, w.vectors[0]) != w.residue)
      throw std::logic_error("cy_riemann_roch: witness does not reproduce under direct evaluation");
  }
  return rep;
}

Rational hilbert_polynomial(const Rational& mu_x, const Rational& c2_x, const Integer& n) {
  Rational n3 = Rational(n) * Rational(n) * Rational(n);
  Rational chi = mu_x / 6 * n3 + c2_x / 12 * Rational(n);
  if (is_integral(mu_x) && is_integral(c2_x) &&
      mod_nonneg(2 * numer(mu_x) + numer(c2_x), 12) == 0 && !is_integral(chi))
    throw std::logic_error("hilbert_polynomial: congruent data must give integer values");
  return chi;
}

}  // namespace cy3
