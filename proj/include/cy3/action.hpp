#ifndef CY3_ACTION_HPP
#define CY3_ACTION_HPP

// Finite group actions on the degree-two lattice, given by integer matrices
// acting on the basis. The cubic form is assumed invariant (that is the
// hypothesis, checked, never presumed); the conclusions about the factored
// shape are then verified exactly.

#include <optional>
#include <string>
#include <vector>

#include "cy3/factor.hpp"
#include "cy3/record.hpp"

namespace cy3 {

// mu(Me_i, Me_j, Me_k) = mu(e_i, e_j, e_k) for all sorted triples; enough by
// multilinearity. On failure the first violating triple goes to *witness.
bool preserves_trilinear(const TrilinearForm& mu, const Matrix& m, Triple* witness = nullptr);

// nu(M e_i) = nu(e_i) for all i.
bool preserves_linear(const LinearFunctional& nu, const Matrix& m);

// M^T A M = A for the Gram matrix A of xi.
bool in_orthogonal_group(const QuadraticForm& xi, const Matrix& m);

struct GeneratorActionCheck {
  int index = 0;                          // position in rep.generators
  bool preserves_mu = false;              // the hypothesis
  std::optional<Triple> mu_witness;       // first violating triple when not
  std::optional<bool> fixes_nu;           // set only when the hypothesis holds
  std::optional<bool> orthogonal_for_xi;  // set only when the hypothesis holds
};

struct GroupActionReport {
  std::string check_id;
  CheckStatus status = CheckStatus::not_applicable;
  std::vector<GeneratorActionCheck> generators;
  // Some generator preserves the cubic yet fixes the nu of no factorization
  // at all. With an invariant Kahler class that cannot happen, so the flag
  // marks data worth a second look rather than a refuted theorem.
  bool inconsistent = false;
  std::string citation;
  std::string note;
  bool passed() const { return status != CheckStatus::fail; }
};

// Checks, for the factorization f of rec's cubic, that every generator
// preserving the cubic is compatible with the factored shape. A generator
// fixing nu lies in the orthogonal group of xi automatically (the polynomial
// ring is a domain); one moving nu must fix the nu of some other
// factorization in all_factors, otherwise the report fails with the
// inconsistency flag. Trivial group: vacuous pass. No generator preserving
// the cubic: not_applicable.
GroupActionReport verify_group_action(const ThreefoldRecord& rec, const Factorization& f,
                                      const GroupRep& rep,
                                      const std::vector<Factorization>& all_factors);

// Same, computing the full factorization list of rec's cubic internally.
GroupActionReport verify_group_action(const ThreefoldRecord& rec, const Factorization& f,
                                      const GroupRep& rep);

}  // namespace cy3

#endif
