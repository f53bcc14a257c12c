#include "cy3/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cy3/action.hpp"
#include "cy3/bounds.hpp"
#include "cy3/congruence.hpp"
#include "cy3/factor.hpp"

namespace cy3 {

namespace {

std::string witness_note(const CongruenceReport& r) {
  if (r.witnesses.empty()) return "";
  const CongruenceWitness& w = r.witnesses.front();
  std::string out = "witness";
  for (const Vec& v : w.vectors) out += " " + v.str();
  out += ", residue " + to_string(w.residue);
  return out;
}

std::string join_notes(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "; " + b;
}

CheckLine from_congruence(const CongruenceReport& r, const std::string& suffix = "") {
  CheckLine line;
  line.id = r.check_id + suffix;
  line.status = r.status;
  line.citation = r.citation;
  line.note = join_notes(r.note, witness_note(r));
  return line;
}

CheckLine from_bound(const BoundReport& r, const std::string& suffix = "") {
  CheckLine line;
  line.id = r.check_id + suffix;
  line.status = r.status;
  line.lhs = r.lhs;
  line.rhs = r.rhs;
  line.slack = r.slack;
  line.citation = r.citation;
  line.note = r.note;
  return line;
}

CheckLine info_line(std::string id, std::string note, std::string citation = "") {
  CheckLine line;
  line.id = std::move(id);
  line.status = CheckStatus::pass;
  line.citation = std::move(citation);
  line.note = std::move(note);
  return line;
}

// p1(e_i) = mu(c1, c1, e_i) - 2 c2(e_i); the cubic term drops out for
// Calabi-Yau records, leaving p1 = -2 c2.
LinearFunctional pontrjagin_functional(const ThreefoldRecord& rec) {
  Vec p1(rec.b2);
  for (int i = 0; i < rec.b2; ++i)
    p1[i] = eval_trilinear(*rec.mu, rec.c1, rec.c1, Vec::unit(rec.b2, i)) - 2 * (*rec.c2)[i];
  return LinearFunctional(p1);
}

class Runner {
 public:
  explicit Runner(const ThreefoldRecord& rec) : rec_(rec) { out_.record = rec.name; }

  RunReport run() {
    congruences();
    positivity();
    surface_bounds();
    nef_inequalities();
    window();
    factor_pipeline();
    finish();
    return std::move(out_);
  }

 private:
  void add(CheckLine line) {
    if (line.status == CheckStatus::fail) out_.violations.push_back(line.id);
    out_.checks.push_back(std::move(line));
  }

  // A check that cannot run because the record lacks data; drives `partial`.
  void blocked(std::string id, std::string why, std::string citation = "") {
    CheckLine line;
    line.id = std::move(id);
    line.status = CheckStatus::not_applicable;
    line.citation = std::move(citation);
    line.note = std::move(why);
    out_.not_applicable.push_back(line.id);
    out_.checks.push_back(std::move(line));
  }

  void congruences() {
    if (rec_.mu) add(from_congruence(wall_parity(*rec_.mu)));
    else blocked("wall_parity", "record carries no trilinear form");

    if (!rec_.mu) blocked("wall_pontrjagin", "record carries no trilinear form");
    else if (!rec_.torsion_free)
      blocked("wall_pontrjagin", "torsion in H^2 obstructs the mod 24 invariant");
    else if (!rec_.c2)
      blocked("wall_pontrjagin", "record carries no c2, so p1 is undetermined");
    else add(from_congruence(wall_pontrjagin(*rec_.mu, pontrjagin_functional(rec_))));

    if (rec_.is_calabi_yau) {
      if (!rec_.mu) blocked("cy_riemann_roch", "record carries no trilinear form");
      else if (!rec_.c2) blocked("cy_riemann_roch", "record carries no c2");
      else add(from_congruence(cy_riemann_roch(*rec_.mu, *rec_.c2)));
    }
  }

  void positivity() {
    bool any_nef = false;
    for (const SampleClass& s : rec_.samples) any_nef = any_nef || s.has(SampleFlag::nef);
    if (!any_nef) return;
    if (!rec_.c2) {
      blocked("c2_positivity", "record carries no c2");
      return;
    }
    for (const BoundReport& r : c2_positivity(rec_)) add(from_bound(r));
  }

  void surface_bounds() {
    for (size_t i = 0; i < rec_.samples.size(); ++i) {
      const SampleClass& s = rec_.samples[i];
      if (!rec_.is_calabi_yau || !s.has(SampleFlag::ample) ||
          !s.has(SampleFlag::linear_system_free_dim_ge2))
        continue;
      std::string sfx = "[" + std::to_string(i) + "]";
      if (!rec_.mu || !rec_.c2) {
        blocked("surface_bounds" + sfx, "record carries no " + std::string(rec_.mu ? "c2" : "mu"));
        continue;
      }
      try {
        Rational pg = geometric_genus(rec_, s.vec);
        add(info_line("geometric_genus" + sfx, "p_g = " + to_string(pg),
                      "genus of the minimal surface in the sample's linear system"));
      } catch (const std::logic_error& e) {
        CheckLine line;
        line.id = "geometric_genus" + sfx;
        line.status = CheckStatus::fail;
        line.note = e.what();
        add(std::move(line));
      }
      SurfaceInvariants si = surface_invariants(rec_, s.vec);
      add(info_line("surface_invariants" + sfx,
                    "K^2 = " + to_string(si.k2) + ", c2(S) = " + to_string(si.c2_s) +
                        ", s2 = " + to_string(si.segre2),
                    "Chern data of the minimal surface in the sample's linear system"));
      add(from_bound(c2_bound_noether(rec_, s.vec), sfx));
      if (s.has(SampleFlag::canonical_map_birational))
        add(from_bound(c2_bound_castelnuovo(rec_, s.vec), sfx));
      if (s.has(SampleFlag::canonical_map_birational) && s.has(SampleFlag::quadrics_intersection))
        add(from_bound(c2_bound_reid(rec_, s.vec), sfx));
    }
  }

  void nef_inequalities() {
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < rec_.samples.size(); ++i) {
      if (!rec_.samples[i].has(SampleFlag::very_ample)) continue;
      for (size_t j = 0; j < rec_.samples.size(); ++j)
        if (rec_.samples[j].has(SampleFlag::ample)) pairs.emplace_back(i, j);
    }
    if (pairs.empty()) return;
    const char* family = rec_.is_calabi_yau ? "cy_fl" : "dps";
    if (!rec_.mu || !rec_.c2 || !rec_.c3) {
      std::string missing = !rec_.mu ? "mu" : (!rec_.c2 ? "c2" : "c3");
      blocked(family, "record carries no " + missing);
      return;
    }
    for (const auto& [i, j] : pairs) {
      std::string sfx = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      const Vec& x = rec_.samples[i].vec;
      const Vec& y = rec_.samples[j].vec;
      std::vector<BoundReport> rs = rec_.is_calabi_yau ? cy_fl_inequalities(rec_, x, y)
                                                       : dps_inequalities(rec_, x, y);
      for (const BoundReport& r : rs) add(from_bound(r, sfx));
    }
  }

  void window() {
    if (!rec_.is_calabi_yau) return;
    std::vector<size_t> eligible;
    for (size_t i = 0; i < rec_.samples.size(); ++i)
      if (rec_.samples[i].has(SampleFlag::very_ample)) eligible.push_back(i);
    if (eligible.empty()) return;
    if (!rec_.mu || !rec_.c3) {
      blocked("c3_window", "record carries no " + std::string(rec_.mu ? "c3" : "mu"));
      return;
    }
    for (size_t i : eligible) {
      std::string sfx = "[" + std::to_string(i) + "]";
      try {
        for (const BoundReport& r : c3_window_check(rec_, rec_.samples[i].vec))
          add(from_bound(r, sfx));
      } catch (const std::domain_error& e) {
        CheckLine line;
        line.id = "c3_window" + sfx;
        line.status = CheckStatus::fail;
        line.note = e.what();
        add(std::move(line));
      }
    }
  }

  void factor_pipeline() {
    if (!rec_.mu) {
      blocked("factorization", "record carries no trilinear form");
      return;
    }
    if (cubic_polynomial(*rec_.mu).is_zero()) {
      blocked("factorization", "the cubic form is identically zero");
      return;
    }
    std::vector<Factorization> factors = find_linear_factors(*rec_.mu, rec_.kahler_sample());
    if (factors.empty()) {
      add(info_line("factorization", "no rational linear factor"));
      return;
    }
    for (size_t j = 0; j < factors.size(); ++j) {
      const Factorization& f = factors[j];
      std::string sfx = "[" + std::to_string(j) + "]";
      add(info_line("factor" + sfx, "nu = " + f.nu.str() + ", xi = " + f.xi.str() +
                                        ", signature " + f.sig.str() + ", kernel dim " +
                                        std::to_string(f.kernel_dim)));
      for (const CongruenceReport& r : classify_residual_form(rec_, f)) {
        bool structural =
            r.check_id == "residual_signature" && r.status == CheckStatus::not_applicable;
        if (structural) blocked(r.check_id + sfx, r.note, r.citation);
        else add(from_congruence(r, sfx));
      }
      LatticeGram lg = lattice_gram(f.xi);
      add(info_line("lattice_gram" + sfx,
                    "lambda = " + to_string(lg.lambda) + ", gram = " + lg.gram.str(),
                    "integral lattice carried by the residual form"));
      if (rec_.rep) {
        GroupActionReport gr = verify_group_action(rec_, f, *rec_.rep, factors);
        CheckLine line;
        line.id = gr.check_id + sfx;
        line.status = gr.status;
        line.citation = gr.citation;
        line.note = gr.note;
        if (gr.status == CheckStatus::not_applicable) {
          out_.not_applicable.push_back(line.id);
          out_.checks.push_back(std::move(line));
        } else {
          add(std::move(line));
        }
      }
    }
  }

  void finish() {
    if (!out_.violations.empty()) out_.verdict = Verdict::violations;
    else if (!out_.not_applicable.empty()) out_.verdict = Verdict::partial;
    else out_.verdict = Verdict::consistent;
  }

  const ThreefoldRecord& rec_;
  RunReport out_;
};

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::violations: return "violations";
    case Verdict::partial: return "partial";
  }
  return "?";
}

RunReport run_all(const ThreefoldRecord& rec) { return Runner(rec).run(); }

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  os << "record " << r.record << "\n";
  for (const CheckLine& c : r.checks) {
    os << "  " << c.id << " " << to_string(c.status);
    if (c.lhs) os << " lhs=" << to_string(*c.lhs);
    if (c.rhs) os << " rhs=" << to_string(*c.rhs);
    if (c.slack) os << " slack=" << to_string(*c.slack);
    if (!c.citation.empty()) os << " [" << c.citation << "]";
    if (!c.note.empty()) os << "; " << c.note;
    os << "\n";
  }
  os << "  verdict " << to_string(r.verdict);
  if (!r.violations.empty()) {
    os << " (";
    for (size_t i = 0; i < r.violations.size(); ++i)
      os << (i ? ", " : "") << r.violations[i];
    os << ")";
  } else if (!r.not_applicable.empty()) {
    os << " (not applicable:";
    for (const std::string& id : r.not_applicable) os << " " << id;
    os << ")";
  }
  os << "\n";
  return os.str();
}

std::string render_text(const std::vector<RunReport>& rs) {
  std::string out;
  for (const RunReport& r : rs) out += render_text(r);
  return out;
}

std::string render_json(const std::vector<RunReport>& rs) {
  using json = nlohmann::ordered_json;
  json root = json::object();
  json records = json::array();
  for (const RunReport& r : rs) {
    json rj = json::object();
    rj["name"] = r.record;
    rj["verdict"] = to_string(r.verdict);
    rj["violations"] = r.violations;
    rj["not_applicable"] = r.not_applicable;
    json checks = json::array();
    for (const CheckLine& c : r.checks) {
      json cj = json::object();
      cj["id"] = c.id;
      cj["status"] = to_string(c.status);
      if (c.lhs) cj["lhs"] = to_string(*c.lhs);
      if (c.rhs) cj["rhs"] = to_string(*c.rhs);
      if (c.slack) cj["slack"] = to_string(*c.slack);
      if (!c.citation.empty()) cj["citation"] = c.citation;
      if (!c.note.empty()) cj["note"] = c.note;
      checks.push_back(std::move(cj));
    }
    rj["checks"] = std::move(checks);
    records.push_back(std::move(rj));
  }
  root["records"] = std::move(records);
  return root.dump(2) + "\n";
}

std::string render_factorizations(const ThreefoldRecord& rec) {
  std::ostringstream os;
  os << "record " << rec.name << "\n";
  if (!rec.mu) {
    os << "  no trilinear form, nothing to factor\n";
    return os.str();
  }
  if (cubic_polynomial(*rec.mu).is_zero()) {
    os << "  the cubic form is identically zero\n";
    return os.str();
  }
  std::vector<Factorization> factors = find_linear_factors(*rec.mu, rec.kahler_sample());
  if (factors.empty()) {
    os << "  no rational linear factor\n";
    return os.str();
  }
  for (const Factorization& f : factors) {
    os << "  nu = " << f.nu.str() << "\n";
    os << "    xi = " << f.xi.str() << "\n";
    os << "    signature " << f.sig.str() << ", kernel dim " << f.kernel_dim << "\n";
    os << "    restricted to nu = 0: signature " << f.restricted_sig.str() << "\n";
    LatticeGram lg = lattice_gram(f.xi);
    os << "    lattice: lambda = " << to_string(lg.lambda) << ", gram = " << lg.gram.str() << "\n";
  }
  return os.str();
}

std::string render_bounds(const ThreefoldRecord& rec) {
  RunReport r = run_all(rec);
  RunReport filtered;
  filtered.record = r.record;
  for (CheckLine& c : r.checks)
    if (c.lhs || c.rhs || c.slack) filtered.checks.push_back(std::move(c));
  filtered.verdict = r.verdict;
  std::ostringstream os;
  os << "record " << filtered.record << "\n";
  for (const CheckLine& c : filtered.checks) {
    os << "  " << c.id << " " << to_string(c.status);
    if (c.lhs) os << " lhs=" << to_string(*c.lhs);
    if (c.rhs) os << " rhs=" << to_string(*c.rhs);
    if (c.slack) os << " slack=" << to_string(*c.slack);
    if (!c.citation.empty()) os << " [" << c.citation << "]";
    if (!c.note.empty()) os << "; " << c.note;
    os << "\n";
  }
  return os.str();
}

}  // namespace cy3
