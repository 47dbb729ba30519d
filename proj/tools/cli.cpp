#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "mmods/catalog.hpp"
#include "mmods/error.hpp"
#include "mmods/materializer.hpp"
#include "mmods/mods_mapper.hpp"
#include "mmods/ntriples.hpp"
#include "mmods/ontology.hpp"
#include "mmods/report_io.hpp"
#include "mmods/turtle.hpp"
#include "mmods/validator.hpp"

namespace mmods::cli {

namespace {

struct Config {
  std::string baseIri = std::string(kDefaultBaseIri);
  std::string format = "ttl";
  std::string report = "text";
  std::string inputFormat;
  std::string out;
  bool strict = false;
  bool noInfer = false;
  std::vector<std::string> inputs;
  std::string vocabName;
  bool vocabJson = false;
};

struct Loaded {
  int status = kOk;
  std::string message;
  Graph graph;
  std::vector<MappingWarning> warnings;
};

bool isNTriplesInput(const std::string& path, const Config& config) {
  if (!config.inputFormat.empty()) return config.inputFormat == "nt";
  return std::filesystem::path(path).extension() == ".nt";
}

bool readAll(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  text.assign(std::istreambuf_iterator<char>(in), {});
  return !in.bad();
}

Loaded load(const std::string& path, const Config& config, const VocabularyRegistry& registry) {
  Loaded result;
  std::string text;
  if (!readAll(path, text)) {
    result.status = kIoFailure;
    result.message = path + ": cannot read input";
    return result;
  }
  try {
    if (isNTriplesInput(path, config)) {
      result.graph = readNTriples(text);
    } else {
      auto mapped = mapRecord(mods::parseModsXml(text, path), registry, MappingOptions{config.strict});
      result.graph = std::move(mapped.graph);
      result.warnings = std::move(mapped.warnings);
    }
  } catch (const ParseError& e) {
    result.status = kParseFailure;
    result.message = isNTriplesInput(path, config) ? path + ": " + e.what() : std::string(e.what());
  } catch (const Error& e) {
    result.status = kParseFailure;
    result.message = e.what();
  }
  return result;
}

// Loads every input (concurrently), reports diagnostics in input order, and
// merges the graphs in input order.
int loadAll(const Config& config, const VocabularyRegistry& registry, Graph& merged, std::ostream& err) {
  std::vector<std::future<Loaded>> tasks;
  for (const auto& path : config.inputs) {
    const bool stdinInput = path == "-";
    tasks.push_back(std::async(stdinInput ? std::launch::deferred : std::launch::async,
                               [&, path] { return load(path, config, registry); }));
  }
  int status = kOk;
  for (auto& task : tasks) {
    Loaded loaded = task.get();
    for (const auto& w : loaded.warnings)
      err << w.source << ":" << w.line << ": warning: " << w.message << "\n";
    if (loaded.status != kOk) {
      err << "error: " << loaded.message << "\n";
      if (status == kOk) status = loaded.status;
      continue;
    }
    if (merged.empty()) merged = std::move(loaded.graph);
    else merged.merge(loaded.graph);
  }
  return status;
}

int emit(const std::string& text, const Config& config, std::ostream& out, std::ostream& err) {
  if (config.out.empty()) {
    out << text;
    out.flush();
    return kOk;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file || !(file << text)) {
    err << "error: cannot write " << config.out << "\n";
    return kIoFailure;
  }
  return kOk;
}

std::string serialize(const Graph& graph, const Config& config, const VocabularyRegistry& registry) {
  return config.format == "nt" ? writeNTriples(graph) : writeTurtle(graph, registry);
}

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

int cmdConvert(const Config& config, const VocabularyRegistry& registry, std::ostream& out, std::ostream& err) {
  Graph graph;
  if (int status = loadAll(config, registry, graph, err); status != kOk) return status;
  return emit(serialize(graph, config, registry), config, out, err);
}

int cmdValidate(const Config& config, const VocabularyRegistry& registry, const ConstraintCatalog& catalog,
                std::ostream& out, std::ostream& err) {
  Graph graph;
  if (int status = loadAll(config, registry, graph, err); status != kOk) return status;
  ValidationReport report = validate(graph, catalog, registry, {config.strict, !config.noInfer});
  report.source = joined(config.inputs);
  const std::string text = config.report == "json" ? writeReportJson(report) : writeReportText(report);
  if (int status = emit(text, config, out, err); status != kOk) return status;
  return report.conforms() ? kOk : kValidationErrors;
}

int cmdInfer(const Config& config, const VocabularyRegistry& registry, const ConstraintCatalog& catalog,
             std::ostream& out, std::ostream& err) {
  Graph graph;
  if (int status = loadAll(config, registry, graph, err); status != kOk) return status;
  return emit(serialize(materialize(graph, catalog), config, registry), config, out, err);
}

int cmdVocab(const Config& config, const VocabularyRegistry& registry, std::ostream& out, std::ostream& err) {
  if (config.vocabJson) return emit(registry.toJson(), config, out, err);
  std::string text;
  if (!config.vocabName.empty()) {
    if (!registry.isVocabulary(config.vocabName)) {
      try {
        registry.vocabulary(config.vocabName);
      } catch (const UnknownNameError& e) {
        err << "error: " << e.what() << "\n";
      }
      return kUnknownVocabulary;
    }
    for (const auto& ind : registry.vocabulary(config.vocabName).individuals) text += ind + "\n";
  } else {
    for (const auto& vocab : registry.vocabularies())
      for (const auto& ind : vocab.individuals) text += vocab.name + "\t" + ind + "\n";
  }
  return emit(text, config, out, err);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Compile MODS XML records into an MMODS-O knowledge graph and check it against the ontology axioms",
               "mmods"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--base-iri", config.baseIri, "Base IRI of ontology terms and minted nodes")
      ->envname("MMODS_BASE_IRI");
  app.add_option("--format", config.format, "Graph output format")->check(CLI::IsMember({"nt", "ttl"}));
  app.add_option("--report", config.report, "Validation report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--input-format", config.inputFormat, "Override input format sniffing")
      ->check(CLI::IsMember({"mods", "nt"}));
  app.add_option("--out", config.out, "Output file (default: standard output)");
  app.add_flag("--strict", config.strict, "Treat unknown vocabulary individuals as errors");
  app.add_flag("--no-infer", config.noInfer, "Validate without materializing inferences first");

  auto* convert = app.add_subcommand("convert", "Convert MODS XML to a graph");
  convert->add_option("inputs", config.inputs, "MODS XML files")->required();
  auto* validateCmd = app.add_subcommand("validate", "Validate MODS XML or N-Triples against the axiom catalog");
  validateCmd->add_option("inputs", config.inputs, "MODS XML or .nt files")->required();
  auto* infer = app.add_subcommand("infer", "Materialize role chains and subclass inferences");
  infer->add_option("input", config.inputs, "N-Triples file")->required()->expected(1);
  auto* emitOnto = app.add_subcommand("emit-ontology", "Write the ontology declaration graph");
  auto* vocab = app.add_subcommand("vocab", "List controlled vocabularies");
  vocab->add_option("name", config.vocabName, "Vocabulary name");
  vocab->add_flag("--json", config.vocabJson, "Dump the whole registry as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoFailure;
  }

  try {
    const VocabularyRegistry registry(config.baseIri);
    const ConstraintCatalog catalog = buildCatalog(registry);
    if (convert->parsed()) return cmdConvert(config, registry, out, err);
    if (validateCmd->parsed()) return cmdValidate(config, registry, catalog, out, err);
    if (infer->parsed()) return cmdInfer(config, registry, catalog, out, err);
    if (emitOnto->parsed()) return emit(serialize(emitOntology(registry, catalog), config, registry), config, out, err);
    if (vocab->parsed()) return cmdVocab(config, registry, out, err);
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  }
  return kOk;
}

}  // namespace mmods::cli
