#ifndef CY3_CORPUS_HPP
#define CY3_CORPUS_HPP

// JSON corpus of threefold records. The format is documented in
// docs/schema.md and printed by the `schema` CLI subcommand; loading
// validates every field and reports errors naming the record and field.

#include <string>
#include <vector>

#include "cy3/record.hpp"

namespace cy3 {

struct CorpusFile {
  std::string schema_version = "1";
  std::vector<ThreefoldRecord> records;
};

// Throws std::runtime_error with a record- and field-precise message on
// parse or schema violations.
CorpusFile load_corpus(const std::string& path);
CorpusFile parse_corpus(const std::string& text);

// Canonical serialization; load(serialize(c)) reproduces c exactly.
std::string serialize_corpus(const CorpusFile& corpus);
void save_corpus(const CorpusFile& corpus, const std::string& path);

// The JSON Schema document enforced by the loader.
const std::string& corpus_schema();

}  // namespace cy3

#endif
