#include "cy3/action.hpp"

#include <stdexcept>
#include <string>

namespace cy3 {

namespace {

void check_action_matrix(int rank, const Matrix& m, const char* op) {
  if (!m.is_square() || m.rows() != rank)
    throw std::invalid_argument(std::string(op) + ": matrix shape does not match the form");
  if (m.det() == 0) throw std::invalid_argument(std::string(op) + ": singular matrix");
}

}  // namespace

bool preserves_trilinear(const TrilinearForm& mu, const Matrix& m, Triple* witness) {
  const int n = mu.rank();
  check_action_matrix(n, m, "preserves_trilinear");
  std::vector<Vec> img;
  img.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img.push_back(m.col(i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        Rational lhs = eval_trilinear(mu, img[static_cast<size_t>(i)],
                                      img[static_cast<size_t>(j)], img[static_cast<size_t>(k)]);
        if (lhs != mu.get(i, j, k)) {
          if (witness) *witness = Triple{i, j, k};
          return false;
        }
      }
  return true;
}

bool preserves_linear(const LinearFunctional& nu, const Matrix& m) {
  const int n = nu.rank();
  check_action_matrix(n, m, "preserves_linear");
  for (int i = 0; i < n; ++i)
    if (nu(m.col(i)) != nu[i]) return false;
  return true;
}

bool in_orthogonal_group(const QuadraticForm& xi, const Matrix& m) {
  check_action_matrix(xi.rank(), m, "in_orthogonal_group");
  const Matrix& a = xi.gram();
  return m.transpose() * a * m == a;
}

GroupActionReport verify_group_action(const ThreefoldRecord& rec, const Factorization& f,
                                      const GroupRep& rep,
                                      const std::vector<Factorization>& all_factors) {
  if (!rec.mu) throw std::invalid_argument("verify_group_action: record has no trilinear form");
  if (rep.rank != rec.b2 || f.nu.rank() != rec.b2)
    throw std::invalid_argument("verify_group_action: rank mismatch");

  GroupActionReport rep_out;
  rep_out.check_id = "group_action";
  rep_out.citation = "equivariance of the factored cup product cubic";

  if (rep.generators.empty()) {
    rep_out.status = CheckStatus::pass;
    rep_out.note = "trivial group, nothing to check";
    return rep_out;
  }

  bool any_hypothesis = false;
  bool moved_this_nu = false;
  int inconsistent_at = -1;
  for (size_t g = 0; g < rep.generators.size(); ++g) {
    const Matrix& m = rep.generators[g];
    GeneratorActionCheck gc;
    gc.index = static_cast<int>(g);
    Triple w{0, 0, 0};
    gc.preserves_mu = preserves_trilinear(*rec.mu, m, &w);
    if (!gc.preserves_mu) {
      gc.mu_witness = w;
      rep_out.generators.push_back(std::move(gc));
      continue;
    }
    any_hypothesis = true;
    gc.fixes_nu = preserves_linear(f.nu, m);
    gc.orthogonal_for_xi = in_orthogonal_group(f.xi, m);
    if (*gc.fixes_nu && !*gc.orthogonal_for_xi)
      throw std::logic_error("verify_group_action: nu fixed but xi not preserved");
    if (!*gc.fixes_nu) {
      moved_this_nu = true;
      bool fixes_some = false;
      for (const Factorization& other : all_factors)
        if (preserves_linear(other.nu, m)) {
          fixes_some = true;
          break;
        }
      if (!fixes_some && inconsistent_at < 0) inconsistent_at = static_cast<int>(g);
    }
    rep_out.generators.push_back(std::move(gc));
  }

  if (!any_hypothesis) {
    rep_out.status = CheckStatus::not_applicable;
    rep_out.note = "no generator preserves the trilinear form";
    return rep_out;
  }
  if (inconsistent_at >= 0) {
    rep_out.status = CheckStatus::fail;
    rep_out.inconsistent = true;
    rep_out.note = "generator " + std::to_string(inconsistent_at) +
                   " preserves the cubic but fixes no linear factor of it";
    return rep_out;
  }
  rep_out.status = CheckStatus::pass;
  if (moved_this_nu) rep_out.note = "the action permutes the linear factors";
  return rep_out;
}

GroupActionReport verify_group_action(const ThreefoldRecord& rec, const Factorization& f,
                                      const GroupRep& rep) {
  if (!rec.mu) throw std::invalid_argument("verify_group_action: record has no trilinear form");
  std::vector<Factorization> all = find_linear_factors(*rec.mu, rec.kahler_sample());
  return verify_group_action(rec, f, rep, all);
}

}  // namespace cy3
