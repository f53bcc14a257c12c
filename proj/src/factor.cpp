#include "cy3/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace cy3 {

namespace {

std::string var_name(int i) { return "a" + std::to_string(i + 1); }

std::string monomial_str(const Triple& t) {
  std::string out;
  for (int k = 0; k < 3;) {
    int j = k;
    while (j < 3 && t[j] == t[k]) ++j;
    if (!out.empty()) out += "*";
    out += var_name(t[k]);
    if (j - k > 1) out += "^" + std::to_string(j - k);
    k = j;
  }
  return out;
}

// Exact division C / nu by matching coefficients degree by degree in nu's
// pivot variable. Returns nullopt on a nonzero remainder (first surviving
// monomial written to *remainder).
std::optional<QuadraticForm> try_divide(const CubicForm& c, const LinearFunctional& nu,
                                        std::string* remainder) {
  const int n = c.rank();
  if (nu.rank() != n) throw std::invalid_argument("divide_by_linear: rank mismatch");
  const int v = nu.pivot();
  if (v < 0) throw std::invalid_argument("divide_by_linear: division by the zero functional");
  const Rational& nv = nu[v];

  // C split by the degree of a_v: C = c3 a_v^3 + a_v^2 c2(.) + a_v c1(.) + c0(.)
  Rational c3;
  std::map<int, Rational> c2m;
  std::map<std::pair<int, int>, Rational> c1m;
  std::map<Triple, Rational> c0m;
  for (const auto& [t, val] : c.coeffs()) {
    int rest[2];
    int d = 0, r = 0;
    for (int idx : t) {
      if (idx == v) ++d;
      else rest[r++] = idx;
    }
    if (d == 3) c3 = val;
    else if (d == 2) c2m[rest[0]] = val;
    else if (d == 1) c1m[{rest[0], rest[1]}] = val;
    else c0m[t] = val;
  }

  auto lin = [](const std::map<int, Rational>& m, int i) -> Rational {
    auto it = m.find(i);
    return it == m.end() ? Rational(0) : it->second;
  };
  auto quad = [](const std::map<std::pair<int, int>, Rational>& m, int i, int j) -> Rational {
    auto it = m.find({i, j});
    return it == m.end() ? Rational(0) : it->second;
  };

  // xi = x2 a_v^2 + a_v x1(.) + x0(.), solved top down; remainder check last.
  Rational x2 = c3 / nv;
  std::map<int, Rational> x1;
  for (int i = 0; i < n; ++i) {
    if (i == v) continue;
    Rational val = (lin(c2m, i) - nu[i] * x2) / nv;
    if (val != 0) x1[i] = val;
  }
  std::map<std::pair<int, int>, Rational> x0;
  for (int i = 0; i < n; ++i) {
    if (i == v) continue;
    for (int j = i; j < n; ++j) {
      if (j == v) continue;
      Rational cross = (i == j) ? Rational(nu[i] * lin(x1, i))
                                : Rational(nu[i] * lin(x1, j) + nu[j] * lin(x1, i));
      Rational val = (quad(c1m, i, j) - cross) / nv;
      if (val != 0) x0[{i, j}] = val;
    }
  }

  std::map<Triple, Rational> rem = c0m;
  for (int l = 0; l < n; ++l) {
    if (l == v || nu[l] == 0) continue;
    for (const auto& [ij, q] : x0) {
      Triple t = sorted_triple(l, ij.first, ij.second);
      auto it = rem.find(t);
      Rational left = (it == rem.end() ? Rational(0) : it->second) - nu[l] * q;
      if (left == 0) {
        if (it != rem.end()) rem.erase(it);
      } else {
        rem[t] = left;
      }
    }
  }
  if (!rem.empty()) {
    if (remainder) *remainder = monomial_str(rem.begin()->first);
    return std::nullopt;
  }

  QuadraticForm xi(n);
  xi.set(v, v, x2);
  for (const auto& [i, val] : x1) xi.set(v, i, val / 2);
  for (const auto& [ij, val] : x0) {
    if (ij.first == ij.second) xi.set(ij.first, ij.first, val);
    else xi.set(ij.first, ij.second, val / 2);
  }
  return xi;
}

std::vector<Integer> positive_divisors(const Integer& x) {
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      Integer e = x / d;
      if (e != d) out.push_back(e);
    }
  }
  return out;
}

// Rational roots of c0 w^3 + c1 w^2 + c2 w + c3 (integer coefficients, not
// all zero) by the rational root theorem.
std::vector<Rational> poly_rational_roots(const std::array<Integer, 4>& c) {
  int lead = 0;
  while (lead < 4 && c[lead] == 0) ++lead;
  std::vector<Rational> roots;
  if (lead == 3) return roots;  // nonzero constant
  int last = 3;
  while (last > lead && c[last] == 0) --last;
  if (last < 3) roots.push_back(Rational(0));
  if (last == lead) return roots;  // c_lead w^deg, only the root 0
  std::vector<Integer> nums = positive_divisors(abs(c[last]));
  std::vector<Integer> dens = positive_divisors(abs(c[lead]));
  std::set<Rational> seen;
  for (const Integer& p : nums) {
    for (const Integer& q : dens) {
      Rational base(p, q);
      base.canonicalize();
      for (int sgn = -1; sgn <= 1; sgn += 2) {
        Rational w = base * sgn;
        if (!seen.insert(w).second) continue;
        Rational acc(0);  // the deflated polynomial c[lead..last]
        for (int k = lead; k <= last; ++k) acc = acc * w + Rational(c[k]);
        if (acc == 0) roots.push_back(w);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

void check_nonzero_cubic(const CubicForm& c) {
  if (c.rank() < 1) throw std::invalid_argument("find_linear_factors: form of rank 0");
  if (c.is_zero())
    throw std::invalid_argument("find_linear_factors: the zero cubic has no factorization");
}

// Sign normalization and deterministic order for a finished factor list.
std::vector<LinearFunctional> finalize_factors(std::vector<Vec> nus,
                                               const std::optional<Vec>& kahler, int rank) {
  if (kahler && kahler->rank() != rank)
    throw std::invalid_argument("find_linear_factors: kahler sample rank mismatch");
  for (Vec& nu : nus) {
    if (!kahler) continue;
    Rational val(0);
    for (int i = 0; i < rank; ++i) val += nu[i] * (*kahler)[i];
    if (val < 0) nu = nu * Rational(-1);
  }
  std::sort(nus.begin(), nus.end(), [](const Vec& a, const Vec& b) { return a.lex_less(b); });
  std::vector<LinearFunctional> out;
  out.reserve(nus.size());
  for (Vec& nu : nus) out.emplace_back(std::move(nu));
  return out;
}

}  // namespace

QuadraticForm divide_by_linear(const CubicForm& c, const LinearFunctional& nu) {
  std::string rem;
  auto xi = try_divide(c, nu, &rem);
  if (!xi) throw std::domain_error("divide_by_linear: remainder contains " + rem);
  return *xi;
}

std::pair<HyperplaneBasis, QuadraticForm> restrict_to_hyperplane(const QuadraticForm& xi,
                                                                 const LinearFunctional& nu) {
  if (nu.is_zero()) throw std::invalid_argument("restrict_to_hyperplane: zero functional");
  if (!nu.is_integral())
    throw std::invalid_argument("restrict_to_hyperplane: functional must be integral");
  if (nu.rank() != xi.rank()) throw std::invalid_argument("restrict_to_hyperplane: rank mismatch");
  const int n = nu.rank();
  Matrix u = kernel_completion(nu.coeffs());
  HyperplaneBasis hb;
  hb.basis = Matrix(n, n - 1);
  std::vector<Vec> cols;
  cols.reserve(static_cast<size_t>(n) - 1);
  for (int j = 1; j < n; ++j) {
    Vec cj = u.col(j);
    hb.basis.set_col(j - 1, cj);
    cols.push_back(std::move(cj));
  }
  QuadraticForm res = restrict_to_span(xi, cols);
  return {std::move(hb), std::move(res)};
}

std::vector<LinearFunctional> find_linear_factors(const CubicForm& c,
                                                  const std::optional<Vec>& kahler) {
  check_nonzero_cubic(c);
  CubicForm f = c.primitive_part();
  const int n = f.rank();
  std::vector<int> active;
  for (int i = 0; i < n; ++i)
    if (f.depends_on(i)) active.push_back(i);

  std::vector<Vec> found;
  for (size_t ai = 0; ai < active.size(); ++ai) {
    const int p = active[ai];
    // Factors whose support starts at p. For each later active l, the ratio
    // nu_l / nu_p must be -w for a rational root w of the binary restriction
    // B(s,t) to span(e_p, e_l): nu restricts to nu_p s + nu_l t, which
    // divides B, and B(w,1) vanishes at w = s/t = -nu_l/nu_p.
    std::vector<std::pair<int, std::vector<Rational>>> ratio_sets;
    bool dead = false;
    for (size_t bi = ai + 1; bi < active.size(); ++bi) {
      const int l = active[bi];
      auto b = f.restrict_to_pair(p, l);
      if (b[0] == 0 && b[1] == 0 && b[2] == 0 && b[3] == 0) {
        // The whole coordinate plane lies in the zero locus, so the
        // restriction constrains nothing; only the box scan is complete here.
        return find_linear_factors_exhaustive(c, kahler);
      }
      std::vector<Rational> ratios =
          poly_rational_roots({numer(b[0]), numer(b[1]), numer(b[2]), numer(b[3])});
      if (ratios.empty()) {
        dead = true;  // no factor is anchored at p
        break;
      }
      for (Rational& w : ratios) w = -w;
      ratio_sets.emplace_back(l, std::move(ratios));
    }
    if (dead) continue;
    std::vector<size_t> idx(ratio_sets.size(), 0);
    while (true) {
      Vec cand(n);
      cand[p] = 1;
      for (size_t k = 0; k < ratio_sets.size(); ++k)
        cand[ratio_sets[k].first] = ratio_sets[k].second[idx[k]];
      Vec nu = primitive_scaling(cand);
      if (try_divide(f, LinearFunctional(nu), nullptr)) found.push_back(std::move(nu));
      size_t k = 0;
      for (; k < ratio_sets.size(); ++k) {
        if (++idx[k] < ratio_sets[k].second.size()) break;
        idx[k] = 0;
      }
      if (k == ratio_sets.size()) break;
    }
  }
  return finalize_factors(std::move(found), kahler, n);
}

std::vector<LinearFunctional> find_linear_factors_exhaustive(const CubicForm& c,
                                                             const std::optional<Vec>& kahler) {
  check_nonzero_cubic(c);
  CubicForm f = c.primitive_part();
  const int n = f.rank();
  std::vector<int> active;
  for (int i = 0; i < n; ++i)
    if (f.depends_on(i)) active.push_back(i);

  const Integer h = f.primitive_height();
  const Integer width = 2 * h + 1;
  Integer total = 1;
  for (size_t i = 0; i < active.size(); ++i) {
    total *= width;
    if (total > 20000000)
      throw std::runtime_error(
          "find_linear_factors: exhaustive search box exceeds 2e7 candidates");
  }
  const long hb = h.get_si();  // total bound keeps h small

  std::vector<Vec> found;
  std::vector<long> digit(active.size(), -hb);
  while (true) {
    long first = 0;
    long g = 0;
    for (long d : digit) {
      if (first == 0) first = d;
      g = std::gcd(g, d < 0 ? -d : d);
    }
    if (first > 0 && g == 1) {
      Vec nu(n);
      for (size_t k = 0; k < active.size(); ++k) nu[active[k]] = Rational(digit[k]);
      if (try_divide(f, LinearFunctional(nu), nullptr)) found.push_back(std::move(nu));
    }
    size_t k = active.size();
    while (k > 0) {
      --k;
      if (++digit[k] <= hb) break;
      digit[k] = -hb;
      if (k == 0) return finalize_factors(std::move(found), kahler, n);
    }
  }
}

std::vector<Factorization> find_linear_factors(const TrilinearForm& mu,
                                               const std::optional<Vec>& kahler) {
  CubicForm c = cubic_polynomial(mu);
  check_nonzero_cubic(c);
  std::vector<Factorization> out;
  for (LinearFunctional& nu : find_linear_factors(c, kahler)) {
    Factorization f;
    f.nu = std::move(nu);
    f.xi = divide_by_linear(c, f.nu);
    if (multiply(f.nu, f.xi) != c)
      throw std::logic_error("find_linear_factors: division identity violated");
    f.sig = signature(f.xi);
    f.kernel_dim = kernel_dimension(f.xi);
    if (f.kernel_dim != f.sig.zero)
      throw std::logic_error("find_linear_factors: kernel and signature disagree");
    auto [hb, res] = restrict_to_hyperplane(f.xi, f.nu);
    f.hyperplane = std::move(hb);
    f.xi_restricted = std::move(res);
    f.restricted_sig = signature(f.xi_restricted);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<CongruenceReport> classify_residual_form(const ThreefoldRecord& rec,
                                                     const Factorization& f) {
  if (f.nu.rank() != rec.b2)
    throw std::invalid_argument("classify_residual_form: factorization rank mismatch");
  std::vector<CongruenceReport> out;

  CongruenceReport a;
  a.check_id = "residual_kernel";
  a.citation = "kernel bound for the residual quadratic form";
  a.status = f.kernel_dim <= 1 ? CheckStatus::pass : CheckStatus::fail;
  a.note = "dim ker(A_xi) = " + std::to_string(f.kernel_dim);
  out.push_back(std::move(a));

  CongruenceReport b;
  b.check_id = "residual_restriction";
  b.citation = "nondegeneracy of the hyperplane restriction";
  if (f.kernel_dim == 1) {
    b.status = f.restricted_sig.zero == 0 ? CheckStatus::pass : CheckStatus::fail;
    b.note = "restriction to the hyperplane nu = 0 has signature " + f.restricted_sig.str();
  } else {
    b.status = CheckStatus::not_applicable;
    b.note = "kernel dimension is " + std::to_string(f.kernel_dim) +
             "; the statement concerns a one dimensional kernel";
  }
  out.push_back(std::move(b));

  CongruenceReport s;
  s.check_id = "residual_signature";
  s.citation = "allowed signatures (2,0,b2-2), (1,1,b2-2), (1,0,b2-1)";
  std::optional<Vec> omega = rec.kahler_sample();
  bool sample_ok = false;
  if (omega && rec.mu) sample_ok = eval_trilinear(*rec.mu, *omega, *omega, *omega) > 0;
  if (!rec.irregularity_zero) {
    s.status = CheckStatus::not_applicable;
    s.note = "record does not assert irregularity zero";
  } else if (!sample_ok) {
    s.status = CheckStatus::not_applicable;
    s.note = "no Kahler sample with positive cube, so the sign of nu is unconstrained";
  } else if (f.nu(*omega) <= 0) {
    s.status = CheckStatus::not_applicable;
    s.note = "nu is not positive on the Kahler sample";
  } else {
    const int b2 = rec.b2;
    std::vector<Signature> allowed;
    if (b2 >= 2) {
      allowed.push_back({2, 0, b2 - 2});
      allowed.push_back({1, 1, b2 - 2});
    }
    allowed.push_back({1, 0, b2 - 1});
    bool ok = std::find(allowed.begin(), allowed.end(), f.sig) != allowed.end();
    s.status = ok ? CheckStatus::pass : CheckStatus::fail;
    s.note = "signature " + f.sig.str();
  }
  out.push_back(std::move(s));
  return out;
}

LatticeGram lattice_gram(const QuadraticForm& xi) {
  if (xi.is_zero()) throw std::invalid_argument("lattice_gram: zero form");
  const int n = xi.rank();
  Integer den_lcm(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) den_lcm = lcm(den_lcm, denom(xi.at(i, j)));
  Integer content(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) content = gcd(content, numer(xi.at(i, j) * den_lcm));
  Rational lambda = Rational(den_lcm) / content;
  LatticeGram out;
  out.lambda = lambda;
  out.gram = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.gram.at(i, j) = xi.at(i, j) * lambda;
  return out;
}

}  // namespace cy3
