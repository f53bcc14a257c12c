#include "cy3/corpus.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cy3 {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& ctx, const std::string& msg) {
  throw std::runtime_error("corpus: " + ctx + ": " + msg);
}

const json& require(const json& obj, const std::string& ctx, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(ctx, std::string("missing field '") + key + "'");
  return *it;
}

// Integers are JSON numbers, or decimal strings for magnitudes a JSON
// number cannot carry exactly.
Integer to_integer(const json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
  if (j.is_number_unsigned()) {
    unsigned long long u = j.get<unsigned long long>();
    if (u > static_cast<unsigned long long>(std::numeric_limits<long>::max()))
      fail(ctx, "integer out of range");
    return Integer(static_cast<long>(u));
  }
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(ctx, "string is not a decimal integer");
    }
  }
  fail(ctx, "expected an integer");
}

int to_int(const json& j, const std::string& ctx) {
  Integer v = to_integer(j, ctx);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    fail(ctx, "integer out of range");
  return static_cast<int>(v.get_si());
}

bool to_bool(const json& j, const std::string& ctx) {
  if (!j.is_boolean()) fail(ctx, "expected a boolean");
  return j.get<bool>();
}

std::string to_str(const json& j, const std::string& ctx) {
  if (!j.is_string()) fail(ctx, "expected a string");
  return j.get<std::string>();
}

Vec to_vec(const json& j, int rank, const std::string& ctx) {
  if (!j.is_array()) fail(ctx, "expected an array of integers");
  if (static_cast<int>(j.size()) != rank)
    fail(ctx, "expected " + std::to_string(rank) + " entries, got " + std::to_string(j.size()));
  Vec v(rank);
  for (int i = 0; i < rank; ++i)
    v[i] = Rational(to_integer(j[static_cast<size_t>(i)], ctx + "[" + std::to_string(i) + "]"));
  return v;
}

Matrix to_matrix(const json& j, int rank, const std::string& ctx) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    fail(ctx, "expected " + std::to_string(rank) + " rows");
  Matrix m(rank, rank);
  for (int r = 0; r < rank; ++r) {
    Vec row = to_vec(j[static_cast<size_t>(r)], rank, ctx + "[" + std::to_string(r) + "]");
    for (int c = 0; c < rank; ++c) m.at(r, c) = row[c];
  }
  return m;
}

// Coefficient rows [i, j, k, value], 1-based, i <= j <= k.
TrilinearForm parse_mu(const json& j, int rank, const std::string& ctx) {
  if (!j.is_array()) fail(ctx, "expected an array of [i, j, k, value] rows");
  TrilinearForm mu(rank);
  std::set<Triple> seen;
  for (size_t r = 0; r < j.size(); ++r) {
    std::string rctx = ctx + "[" + std::to_string(r) + "]";
    const json& row = j[r];
    if (!row.is_array() || row.size() != 4) fail(rctx, "expected [i, j, k, value]");
    int a = to_int(row[0], rctx);
    int b = to_int(row[1], rctx);
    int c = to_int(row[2], rctx);
    if (!(1 <= a && a <= b && b <= c && c <= rank))
      fail(rctx, "indices must satisfy 1 <= i <= j <= k <= b2");
    if (!seen.insert(Triple{a - 1, b - 1, c - 1}).second) fail(rctx, "duplicate index triple");
    mu.set(a - 1, b - 1, c - 1, to_integer(row[3], rctx + ".value"));
  }
  return mu;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& ctx) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (allowed.count(it.key()) == 0) fail(ctx, "unknown field '" + it.key() + "'");
}

ThreefoldRecord parse_record(const json& j, size_t index) {
  std::string ctx = "record #" + std::to_string(index);
  if (!j.is_object()) fail(ctx, "expected an object");
  if (j.contains("name") && j["name"].is_string()) ctx = "record '" + to_str(j["name"], ctx) + "'";
  check_keys(j,
             {"name", "b2", "is_calabi_yau", "torsion_free", "irregularity_zero", "mu", "c2", "c3",
              "c1", "samples", "group_generators", "group_order", "provenance", "notes"},
             ctx);

  ThreefoldRecord rec;
  rec.name = to_str(require(j, ctx, "name"), ctx + ": name");
  if (rec.name.empty()) fail(ctx, "name: must be nonempty");
  rec.b2 = to_int(require(j, ctx, "b2"), ctx + ": b2");
  if (rec.b2 < 1) fail(ctx, "b2: must be positive");
  rec.is_calabi_yau = to_bool(require(j, ctx, "is_calabi_yau"), ctx + ": is_calabi_yau");
  rec.torsion_free =
      j.contains("torsion_free") ? to_bool(j["torsion_free"], ctx + ": torsion_free") : true;
  rec.irregularity_zero = j.contains("irregularity_zero")
                              ? to_bool(j["irregularity_zero"], ctx + ": irregularity_zero")
                              : rec.is_calabi_yau;

  if (j.contains("mu") && !j["mu"].is_null()) rec.mu = parse_mu(j["mu"], rec.b2, ctx + ": mu");
  if (j.contains("c2") && !j["c2"].is_null())
    rec.c2 = LinearFunctional(to_vec(j["c2"], rec.b2, ctx + ": c2"));
  if (j.contains("c3") && !j["c3"].is_null()) rec.c3 = to_integer(j["c3"], ctx + ": c3");
  rec.c1 = j.contains("c1") && !j["c1"].is_null() ? to_vec(j["c1"], rec.b2, ctx + ": c1")
                                                  : Vec::zero(rec.b2);

  if (j.contains("samples")) {
    const json& samples = j["samples"];
    if (!samples.is_array()) fail(ctx, "samples: expected an array");
    for (size_t s = 0; s < samples.size(); ++s) {
      std::string sctx = ctx + ": samples[" + std::to_string(s) + "]";
      const json& sj = samples[s];
      if (!sj.is_object()) fail(sctx, "expected an object");
      check_keys(sj, {"vector", "flags"}, sctx);
      SampleClass sc;
      sc.vec = to_vec(require(sj, sctx, "vector"), rec.b2, sctx + ".vector");
      const json& flags = require(sj, sctx, "flags");
      if (!flags.is_array()) fail(sctx, "flags: expected an array of strings");
      for (const json& fj : flags) {
        std::string fs = to_str(fj, sctx + ".flags");
        auto flag = parse_sample_flag(fs);
        if (!flag) fail(sctx, "unknown flag '" + fs + "'");
        sc.flags.insert(*flag);
      }
      sc.close_flags();
      rec.samples.push_back(std::move(sc));
    }
  }

  if (j.contains("group_generators") && !j["group_generators"].is_null()) {
    const json& gens = j["group_generators"];
    if (!gens.is_array()) fail(ctx, "group_generators: expected an array of matrices");
    std::vector<Matrix> mats;
    for (size_t g = 0; g < gens.size(); ++g)
      mats.push_back(
          to_matrix(gens[g], rec.b2, ctx + ": group_generators[" + std::to_string(g) + "]"));
    std::optional<Integer> order;
    if (j.contains("group_order") && !j["group_order"].is_null())
      order = to_integer(j["group_order"], ctx + ": group_order");
    try {
      rec.rep = make_group_rep(rec.b2, std::move(mats), std::move(order));
    } catch (const std::invalid_argument& e) {
      fail(ctx, e.what());
    }
  } else if (j.contains("group_order") && !j["group_order"].is_null()) {
    fail(ctx, "group_order: given without group_generators");
  }

  if (j.contains("provenance")) {
    const json& prov = j["provenance"];
    if (!prov.is_array()) fail(ctx, "provenance: expected an array");
    for (size_t p = 0; p < prov.size(); ++p) {
      std::string pctx = ctx + ": provenance[" + std::to_string(p) + "]";
      const json& pj = prov[p];
      if (!pj.is_object()) fail(pctx, "expected an object");
      check_keys(pj, {"field", "note"}, pctx);
      rec.provenance.emplace_back(to_str(require(pj, pctx, "field"), pctx + ".field"),
                                  to_str(require(pj, pctx, "note"), pctx + ".note"));
    }
  }

  if (j.contains("notes")) rec.notes = to_str(j["notes"], ctx + ": notes");

  try {
    rec.validate();
  } catch (const std::invalid_argument& e) {
    fail(ctx, e.what());
  }
  return rec;
}

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
  return json(v.get_str());
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.rank(); ++i) a.push_back(integer_json(numer(v[i])));
  return a;
}

json record_json(const ThreefoldRecord& rec) {
  json j = json::object();
  j["name"] = rec.name;
  j["b2"] = rec.b2;
  j["is_calabi_yau"] = rec.is_calabi_yau;
  j["torsion_free"] = rec.torsion_free;
  j["irregularity_zero"] = rec.irregularity_zero;
  if (rec.mu) {
    json rows = json::array();
    for (const auto& [t, v] : rec.mu->coeffs())
      rows.push_back(json::array({t[0] + 1, t[1] + 1, t[2] + 1, integer_json(v)}));
    j["mu"] = std::move(rows);
  } else {
    j["mu"] = nullptr;
  }
  if (rec.c2) j["c2"] = vec_json(rec.c2->coeffs());
  else j["c2"] = nullptr;
  if (rec.c3) j["c3"] = integer_json(*rec.c3);
  else j["c3"] = nullptr;
  j["c1"] = vec_json(rec.c1);
  json samples = json::array();
  for (const SampleClass& s : rec.samples) {
    json sj = json::object();
    sj["vector"] = vec_json(s.vec);
    json flags = json::array();
    for (SampleFlag f : s.flags) flags.push_back(to_string(f));
    sj["flags"] = std::move(flags);
    samples.push_back(std::move(sj));
  }
  j["samples"] = std::move(samples);
  if (rec.rep) {
    json gens = json::array();
    for (const Matrix& m : rec.rep->generators) {
      json rows = json::array();
      for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(integer_json(numer(m.at(r, c))));
        rows.push_back(std::move(row));
      }
      gens.push_back(std::move(rows));
    }
    j["group_generators"] = std::move(gens);
    if (rec.rep->order_hint) j["group_order"] = integer_json(*rec.rep->order_hint);
  }
  json prov = json::array();
  for (const auto& [field, note] : rec.provenance)
    prov.push_back(json{{"field", field}, {"note", note}});
  j["provenance"] = std::move(prov);
  j["notes"] = rec.notes;
  return j;
}

}  // namespace

CorpusFile parse_corpus(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("corpus: parse error: ") + e.what());
  }
  if (!j.is_object()) fail("top level", "expected an object");
  check_keys(j, {"schema_version", "records"}, "top level");
  CorpusFile corpus;
  corpus.schema_version = to_str(require(j, "top level", "schema_version"), "schema_version");
  if (corpus.schema_version != "1")
    fail("schema_version", "unsupported version '" + corpus.schema_version + "'");
  const json& records = require(j, "top level", "records");
  if (!records.is_array()) fail("records", "expected an array");
  for (size_t i = 0; i < records.size(); ++i)
    corpus.records.push_back(parse_record(records[i], i));
  return corpus;
}

CorpusFile load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("corpus: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

std::string serialize_corpus(const CorpusFile& corpus) {
  json j = json::object();
  j["schema_version"] = corpus.schema_version;
  json records = json::array();
  for (const ThreefoldRecord& rec : corpus.records) records.push_back(record_json(rec));
  j["records"] = std::move(records);
  return j.dump(2) + "\n";
}

void save_corpus(const CorpusFile& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("corpus: cannot write " + path);
  out << serialize_corpus(corpus);
}

const std::string& corpus_schema() {
  static const std::string schema = R"JSON({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "title": "Threefold invariant corpus",
  "type": "object",
  "required": ["schema_version", "records"],
  "additionalProperties": false,
  "properties": {
    "schema_version": { "const": "1" },
    "records": { "type": "array", "items": { "$ref": "#/definitions/record" } }
  },
  "definitions": {
    "integer": {
      "description": "JSON integer, or a decimal string for values beyond exact double range",
      "type": ["integer", "string"],
      "pattern": "^-?[0-9]+$"
    },
    "vector": {
      "description": "integer coordinates in the fixed basis of H^2; length b2",
      "type": "array",
      "items": { "$ref": "#/definitions/integer" }
    },
    "record": {
      "type": "object",
      "required": ["name", "b2", "is_calabi_yau"],
      "additionalProperties": false,
      "properties": {
        "name": { "type": "string", "minLength": 1 },
        "b2": { "type": "integer", "minimum": 1 },
        "is_calabi_yau": { "type": "boolean" },
        "torsion_free": { "type": "boolean", "default": true },
        "irregularity_zero": {
          "type": "boolean",
          "description": "defaults to the value of is_calabi_yau"
        },
        "mu": {
          "description": "cup product coefficients as [i, j, k, value], 1-based, i <= j <= k; null when unknown",
          "type": ["array", "null"],
          "items": {
            "type": "array",
            "minItems": 4,
            "maxItems": 4,
            "items": { "$ref": "#/definitions/integer" }
          }
        },
        "c2": {
          "description": "second Chern class as a functional on the basis; null when unknown",
          "anyOf": [{ "$ref": "#/definitions/vector" }, { "type": "null" }]
        },
        "c3": {
          "description": "Euler characteristic; null when unknown",
          "anyOf": [{ "$ref": "#/definitions/integer" }, { "type": "null" }]
        },
        "c1": {
          "description": "anticanonical class; defaults to the zero vector, required zero for Calabi-Yau records",
          "$ref": "#/definitions/vector"
        },
        "samples": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["vector", "flags"],
            "additionalProperties": false,
            "properties": {
              "vector": { "$ref": "#/definitions/vector" },
              "flags": {
                "type": "array",
                "items": {
                  "enum": ["nef", "ample", "very_ample", "linear_system_free_dim_ge2",
                           "canonical_map_birational", "quadrics_intersection", "kahler_sample"]
                }
              }
            }
          }
        },
        "group_generators": {
          "description": "integer b2 x b2 matrices (rows) with determinant +1 or -1",
          "type": "array",
          "items": { "type": "array", "items": { "$ref": "#/definitions/vector" } }
        },
        "group_order": {
          "description": "advisory order of the group; requires group_generators",
          "$ref": "#/definitions/integer"
        },
        "provenance": {
          "description": "which source each field's value comes from",
          "type": "array",
          "items": {
            "type": "object",
            "required": ["field", "note"],
            "additionalProperties": false,
            "properties": {
              "field": { "type": "string" },
              "note": { "type": "string" }
            }
          }
        },
        "notes": { "type": "string" }
      }
    }
  }
}
)JSON";
  return schema;
}

}  // namespace cy3
