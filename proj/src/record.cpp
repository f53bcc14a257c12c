#include "cy3/record.hpp"

#include <stdexcept>

namespace cy3 {

std::string to_string(SampleFlag f) {
  switch (f) {
    case SampleFlag::nef:
      return "nef";
    case SampleFlag::ample:
      return "ample";
    case SampleFlag::very_ample:
      return "very_ample";
    case SampleFlag::linear_system_free_dim_ge2:
      return "linear_system_free_dim_ge2";
    case SampleFlag::canonical_map_birational:
      return "canonical_map_birational";
    case SampleFlag::quadrics_intersection:
      return "quadrics_intersection";
    default:
      return "kahler_sample";
  }
}

std::optional<SampleFlag> parse_sample_flag(const std::string& s) {
  for (SampleFlag f :
       {SampleFlag::nef, SampleFlag::ample, SampleFlag::very_ample,
        SampleFlag::linear_system_free_dim_ge2, SampleFlag::canonical_map_birational,
        SampleFlag::quadrics_intersection, SampleFlag::kahler_sample}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

void SampleClass::close_flags() {
  if (has(SampleFlag::very_ample)) {
    flags.insert(SampleFlag::ample);
    flags.insert(SampleFlag::linear_system_free_dim_ge2);
    flags.insert(SampleFlag::canonical_map_birational);
  }
  if (has(SampleFlag::ample)) {
    flags.insert(SampleFlag::nef);
    flags.insert(SampleFlag::kahler_sample);
  }
}

SampleClass promote_ample_tenfold(const SampleClass& s) {
  if (!s.has(SampleFlag::ample))
    throw std::invalid_argument("promote_ample_tenfold: sample must be ample");
  SampleClass out;
  out.vec = s.vec * Rational(10);
  out.flags = s.flags;
  out.flags.insert(SampleFlag::very_ample);
  out.close_flags();
  return out;
}

GroupRep make_group_rep(int rank, std::vector<Matrix> generators,
                        std::optional<Integer> order_hint) {
  GroupRep rep;
  rep.rank = rank;
  if (order_hint) {
    if (*order_hint < 1) throw std::invalid_argument("group order_hint: must be positive");
    rep.order_hint = std::move(order_hint);
  }
  for (size_t g = 0; g < generators.size(); ++g) {
    const Matrix& m = generators[g];
    if (!m.is_square() || m.rows() != rank)
      throw std::invalid_argument("group generator " + std::to_string(g) + ": wrong shape");
    if (!m.is_integral())
      throw std::invalid_argument("group generator " + std::to_string(g) + ": must be integral");
    Rational d = m.det();
    if (d != 1 && d != -1)
      throw std::invalid_argument("group generator " + std::to_string(g) +
                                  ": determinant must be +1 or -1");
  }
  rep.generators = std::move(generators);
  return rep;
}

std::optional<Vec> ThreefoldRecord::kahler_sample() const {
  for (const auto& s : samples)
    if (s.has(SampleFlag::kahler_sample)) return s.vec;
  return std::nullopt;
}

void ThreefoldRecord::validate() const {
  if (name.empty()) throw std::invalid_argument("name: must be nonempty");
  if (b2 < 1) throw std::invalid_argument("b2: must be >= 1");
  if (mu && mu->rank() != b2) throw std::invalid_argument("mu: rank differs from b2");
  if (c2 && c2->rank() != b2) throw std::invalid_argument("c2: rank differs from b2");
  if (c2 && !c2->is_integral()) throw std::invalid_argument("c2: coefficients must be integers");
  if (c1.rank() != b2) throw std::invalid_argument("c1: rank differs from b2");
  if (!c1.is_integral()) throw std::invalid_argument("c1: entries must be integers");
  if (is_calabi_yau && !c1.is_zero())
    throw std::invalid_argument("c1: must be the zero vector for a Calabi-Yau record");
  if (is_calabi_yau && !irregularity_zero)
    throw std::invalid_argument("irregularity_zero: must hold for a Calabi-Yau record");
  for (size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].vec.rank() != b2)
      throw std::invalid_argument("samples[" + std::to_string(i) + "].vector: rank differs from b2");
    if (!samples[i].vec.is_integral())
      throw std::invalid_argument("samples[" + std::to_string(i) +
                                  "].vector: entries must be integers");
  }
  if (rep && rep->rank != b2) throw std::invalid_argument("group_generators: rank differs from b2");
}

}  // namespace cy3
