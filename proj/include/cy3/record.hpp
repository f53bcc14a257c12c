#ifndef CY3_RECORD_HPP
#define CY3_RECORD_HPP

// A threefold's checkable topological data: the trilinear form, the Chern
// data c1/c2/c3 (any of which may be unknown for partially documented
// examples), and positivity-flagged sample classes in H^2.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cy3/linear.hpp"
#include "cy3/matrix.hpp"
#include "cy3/trilinear.hpp"

namespace cy3 {

enum class SampleFlag {
  nef,
  ample,
  very_ample,
  linear_system_free_dim_ge2,
  canonical_map_birational,
  quadrics_intersection,
  kahler_sample,
};

std::string to_string(SampleFlag f);
std::optional<SampleFlag> parse_sample_flag(const std::string& s);

struct SampleClass {
  Vec vec;
  std::set<SampleFlag> flags;

  bool has(SampleFlag f) const { return flags.count(f) != 0; }

  // Flag implications: very_ample => ample, linear_system_free_dim_ge2,
  // canonical_map_birational; ample => nef, kahler_sample (an ample integral
  // class lies in the Kahler cone).
  void close_flags();
};

// Scaling an ample class by 10 yields a very ample one on a Calabi-Yau
// threefold (Oguiso-Peternell effectivity), so this promotion is sound.
SampleClass promote_ample_tenfold(const SampleClass& s);

// Finite group representation on H^2 by integer matrices of determinant +-1.
struct GroupRep {
  int rank = 0;
  std::vector<Matrix> generators;
  std::optional<Integer> order_hint;  // advisory only, never used in checks
};

GroupRep make_group_rep(int rank, std::vector<Matrix> generators,
                        std::optional<Integer> order_hint = std::nullopt);  // validates

struct ThreefoldRecord {
  std::string name;
  int b2 = 0;
  std::optional<TrilinearForm> mu;
  std::optional<LinearFunctional> c2;
  std::optional<Integer> c3;
  Vec c1;  // zero vector for Calabi-Yau records
  bool is_calabi_yau = false;
  bool torsion_free = true;
  bool irregularity_zero = false;
  std::vector<SampleClass> samples;
  std::optional<GroupRep> rep;
  std::vector<std::pair<std::string, std::string>> provenance;  // field -> source note
  std::string notes;

  // First sample usable as a Kahler class, if any.
  std::optional<Vec> kahler_sample() const;

  void validate() const;  // throws std::invalid_argument naming the field
};

}  // namespace cy3

#endif
