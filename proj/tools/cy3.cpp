// Command line front end: batch checks, factorizations, bounds, and the
// Euler characteristic window, over JSON corpora of threefold records.
// Exit codes: 0 clean, 1 violations, 2 usage, 3 unreadable or invalid corpus.

#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cy3/bounds.hpp"
#include "cy3/corpus.hpp"
#include "cy3/report.hpp"

namespace {

int load_or_fail(const std::string& path, cy3::CorpusFile& corpus) {
  try {
    corpus = cy3::load_corpus(path);
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks of topological invariants for threefold records"};
  app.require_subcommand(1);

  std::string file;
  std::string record_name;
  std::string format = "text";
  long mu = 0;

  CLI::App* check = app.add_subcommand("check", "run every check over all records");
  check->add_option("file", file, "corpus JSON file")->required();

  CLI::App* factor = app.add_subcommand("factor", "print cubic factorizations");
  factor->add_option("file", file, "corpus JSON file")->required();
  factor->add_option("--record", record_name, "restrict to the record with this name");

  CLI::App* bounds = app.add_subcommand("bounds", "print inequality checks with slack");
  bounds->add_option("file", file, "corpus JSON file")->required();

  CLI::App* window = app.add_subcommand("window", "print the c3/2 window for a cubic value");
  window->add_option("--mu", mu, "mu(x,x,x) of the very ample class")->required();

  app.add_subcommand("schema", "print the corpus JSON schema");

  CLI::App* report = app.add_subcommand("report", "full machine readable dump");
  report->add_option("file", file, "corpus JSON file")->required();
  report->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits cleanly, bad usage is 2
  }

  try {
    if (window->parsed()) {
      if (mu <= 0) {
        std::cerr << "window: --mu must be positive\n";
        return 2;
      }
      cy3::Window w = cy3::c3_window(cy3::Integer(mu));
      std::cout << "c3/2 in [" << cy3::to_string(w.lo) << ", " << cy3::to_string(w.hi) << "]\n";
      return 0;
    }

    if (app.get_subcommand("schema")->parsed()) {
      std::cout << cy3::corpus_schema();
      return 0;
    }

    cy3::CorpusFile corpus;
    if (int rc = load_or_fail(file, corpus)) return rc;

    if (factor->parsed()) {
      bool found = record_name.empty();
      for (const cy3::ThreefoldRecord& rec : corpus.records) {
        if (!record_name.empty() && rec.name != record_name) continue;
        found = true;
        std::cout << cy3::render_factorizations(rec);
      }
      if (!found) {
        std::cerr << "factor: no record named '" << record_name << "'\n";
        return 2;
      }
      return 0;
    }

    std::vector<cy3::RunReport> reports;
    reports.reserve(corpus.records.size());
    for (const cy3::ThreefoldRecord& rec : corpus.records) reports.push_back(cy3::run_all(rec));
    bool violations = false;
    for (const cy3::RunReport& r : reports)
      violations = violations || r.verdict == cy3::Verdict::violations;

    if (check->parsed()) {
      std::cout << cy3::render_text(reports);
    } else if (bounds->parsed()) {
      for (const cy3::ThreefoldRecord& rec : corpus.records)
        std::cout << cy3::render_bounds(rec);
    } else if (report->parsed()) {
      std::cout << (format == "json" ? cy3::render_json(reports) : cy3::render_text(reports));
    }
    return violations ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
