#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "mmods/canonical.hpp"
#include "mmods/materializer.hpp"
#include "mmods/mods_mapper.hpp"
#include "mmods/validator.hpp"

namespace {

using namespace mmods;

std::string fixture(const char* name) {
  std::ifstream in(std::string(MMODS_FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A collection of `records` copies of the personal-name record.
std::string collection(std::size_t records) {
  std::string one = fixture("personal_name.xml");
  const auto open = one.find("<mods ");
  const auto body = one.substr(one.find('>', open) + 1);
  const auto inner = body.substr(0, body.rfind("</mods>"));
  std::string out = "<modsCollection xmlns=\"http://www.loc.gov/mods/v3\">";
  for (std::size_t i = 0; i < records; ++i) out += "<mods>" + inner + "</mods>";
  return out + "</modsCollection>";
}

const VocabularyRegistry& registry() {
  static const VocabularyRegistry r;
  return r;
}

const ConstraintCatalog& catalog() {
  static const ConstraintCatalog c = buildCatalog(registry());
  return c;
}

void BM_Ingest(benchmark::State& state) {
  const std::string xml = collection(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto result = mapRecord(mods::parseModsXml(xml), registry());
    benchmark::DoNotOptimize(result.graph.size());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * xml.size()));
}
BENCHMARK(BM_Ingest)->Arg(1)->Arg(10)->Arg(100);

void BM_Canonicalize(benchmark::State& state) {
  const Graph g = mapRecord(mods::parseModsXml(collection(static_cast<std::size_t>(state.range(0)))), registry()).graph;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(g));
  state.counters["triples"] = static_cast<double>(g.size());
}
BENCHMARK(BM_Canonicalize)->Arg(1)->Arg(10)->Arg(100);

void BM_Materialize(benchmark::State& state) {
  const Graph g = mapRecord(mods::parseModsXml(collection(static_cast<std::size_t>(state.range(0)))), registry()).graph;
  for (auto _ : state) benchmark::DoNotOptimize(materialize(g, catalog()).size());
}
BENCHMARK(BM_Materialize)->Arg(1)->Arg(10)->Arg(100);

void BM_Validate(benchmark::State& state) {
  const Graph g = mapRecord(mods::parseModsXml(collection(static_cast<std::size_t>(state.range(0)))), registry()).graph;
  for (auto _ : state) benchmark::DoNotOptimize(validate(g, catalog(), registry()).findings.size());
}
BENCHMARK(BM_Validate)->Arg(1)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
