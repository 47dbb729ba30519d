#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mmods/canonical.hpp"
#include "mmods/mods_mapper.hpp"
#include "mmods/ntriples.hpp"
#include "oracle/fixtures.hpp"

namespace mmods::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result runCli(std::vector<std::string> args) {
  args.insert(args.begin(), "mmods");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tempFile(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

std::size_t lineCount(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(CliTest, ConvertMinimalToNTriples) {
  auto r = runCli({"convert", "--format", "nt", testing::fixturePath("minimal.xml")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(lineCount(r.out), 1u);
  EXPECT_NE(r.out.find("ModsItem"), std::string::npos);
  EXPECT_NE(r.err.find("unmapped element <titleInfo>"), std::string::npos);
}

TEST(CliTest, MalformedXmlExitsOneWithLine) {
  auto r = runCli({"convert", testing::fixturePath("malformed.xml")});
  EXPECT_EQ(r.code, kParseFailure);
  EXPECT_NE(r.err.find(":5:"), std::string::npos);
}

TEST(CliTest, MissingFileExitsTwo) {
  EXPECT_EQ(runCli({"convert", "/nonexistent/file.xml"}).code, kIoFailure);
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(runCli({}).code, kIoFailure);
  EXPECT_EQ(runCli({"convert", "--format", "rdfxml", testing::fixturePath("minimal.xml")}).code, kIoFailure);
  EXPECT_EQ(runCli({"--help"}).code, kOk);
}

TEST(CliTest, UnwritableOutputExitsTwo) {
  EXPECT_EQ(runCli({"convert", "--out", "/nonexistent/dir/x.ttl", testing::fixturePath("minimal.xml")}).code,
            kIoFailure);
}

TEST(CliTest, ValidateConformantFixtures) {
  for (const char* f : {"personal_name.xml", "corporate_name.xml", "conference_name.xml", "dates.xml",
                        "lang_xlink.xml", "shared_affiliation.xml", "collection.xml"}) {
    auto r = runCli({"validate", testing::fixturePath(f)});
    EXPECT_EQ(r.code, kOk) << f << "\n" << r.out;
  }
}

class MissingNameTest : public ::testing::Test {
 protected:
  void SetUp() override {
    VocabularyRegistry registry;
    auto mapped = mapRecord(mods::parseModsXml(testing::readFixture("personal_name.xml")), registry);
    const Term type = Term::iri(std::string(iri::kRdfType));
    const Term agent = mapped.graph.subjects(type, registry.cls("Agent")).at(0);
    Graph g;
    for (const auto& t : mapped.graph)
      if (!(t.subject == agent && t.predicate == registry.property("hasName"))) g.add(t);
    ASSERT_EQ(g.size() + 1, mapped.graph.size());
    path = tempFile("missing_name.nt", writeNTriples(g));
  }
  std::string path;
};

TEST_F(MissingNameTest, WithoutInferenceExitsThree) {
  auto r = runCli({"validate", "--no-infer", "--report", "json", path});
  EXPECT_EQ(r.code, kValidationErrors);
  EXPECT_NE(r.out.find("\"E_AGENTROLE_6\""), std::string::npos);
  EXPECT_EQ(r.out.find("\"E_", r.out.find("\"E_AGENTROLE_6\"") + 1), std::string::npos);
}

TEST_F(MissingNameTest, RoleChainRestoresName) { EXPECT_EQ(runCli({"validate", path}).code, kOk); }

TEST(CliTest, InferTriangle) {
  VocabularyRegistry r;
  const std::string base = r.baseIri();
  const std::string nt = "<" + base + "a> <" + base + "assumesAgentRole> <" + base + "r> .\n<" + base + "r> <" + base +
                         "hasRoleUnderName> <" + base + "n> .\n";
  auto res = runCli({"infer", "--format", "nt", tempFile("triangle.nt", nt)});
  EXPECT_EQ(res.code, kOk);
  EXPECT_NE(res.out.find("<" + base + "a> <" + base + "hasName> <" + base + "n> ."), std::string::npos);
  EXPECT_EQ(lineCount(res.out), 3u);

  auto again = runCli({"infer", "--format", "nt", tempFile("closed.nt", res.out)});
  EXPECT_EQ(again.out, res.out);
}

TEST(CliTest, InferEmpty) {
  auto r = runCli({"infer", "--format", "nt", tempFile("empty.nt", "")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "");
}

TEST(CliTest, InferBadNTriplesExitsOne) {
  EXPECT_EQ(runCli({"infer", tempFile("bad.nt", "<a> <b> .\n")}).code, kParseFailure);
}

TEST(CliTest, VocabListings) {
  auto names = runCli({"vocab", "NameType"});
  EXPECT_EQ(names.code, kOk);
  EXPECT_EQ(names.out, "Personal\nCorporate\nConference\nFamily\n");
  EXPECT_EQ(runCli({"vocab", "Qualifier"}).out, "Approximate\nInferred\nQuestionable\n");
  auto all = runCli({"vocab"});
  EXPECT_NE(all.out.find("Point\tStart\n"), std::string::npos);
  auto unknown = runCli({"vocab", "Colour"});
  EXPECT_EQ(unknown.code, kUnknownVocabulary);
  EXPECT_FALSE(unknown.err.empty());
}

TEST(CliTest, EmitOntologyContainsSubclassTriples) {
  auto r = runCli({"emit-ontology", "--format", "nt"});
  EXPECT_EQ(r.code, kOk);
  const std::string sub = " <http://www.w3.org/2000/01/rdf-schema#subClassOf> ";
  EXPECT_NE(r.out.find("<https://example.org/mmods-o/NamePart>" + sub + "<https://example.org/mmods-o/ElementInfo> ."),
            std::string::npos);
  EXPECT_NE(r.out.find("<https://example.org/mmods-o/NameIdentifier>" + sub +
                       "<https://example.org/mmods-o/Identifier> ."),
            std::string::npos);
}

TEST(CliTest, BaseIriFlagAndEnvironment) {
  auto flag = runCli({"emit-ontology", "--format", "nt", "--base-iri", "http://flag.example/"});
  EXPECT_NE(flag.out.find("<http://flag.example/Agent>"), std::string::npos);
  ::setenv("MMODS_BASE_IRI", "http://env.example/", 1);
  auto env = runCli({"emit-ontology", "--format", "nt"});
  auto both = runCli({"emit-ontology", "--format", "nt", "--base-iri", "http://flag.example/"});
  ::unsetenv("MMODS_BASE_IRI");
  EXPECT_NE(env.out.find("<http://env.example/Agent>"), std::string::npos);
  EXPECT_EQ(both.out, flag.out);
}

TEST(CliTest, MultipleInputsDeterministic) {
  std::vector<std::string> args{"convert", "--format", "nt"};
  for (const char* f : {"personal_name.xml", "dates.xml", "shared_affiliation.xml", "collection.xml"})
    args.push_back(testing::fixturePath(f));
  auto a = runCli(args);
  auto b = runCli(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}

TEST(CliTest, StrictSurfacesMintedCalendar) {
  // Calendar is open, so a minted value never becomes an error; --strict
  // only surfaces it.
  auto lax = runCli({"validate", testing::fixturePath("dates.xml")});
  auto strict = runCli({"validate", "--strict", testing::fixturePath("dates.xml")});
  EXPECT_EQ(lax.code, kOk);
  EXPECT_EQ(strict.code, kOk);
  EXPECT_NE(strict.out.find("warning E_DATEATTRIBUTES_43"), std::string::npos);
}

TEST(CliTest, ExternalBinaryMatchesInProcess) {
  const std::string cmd = std::string(MMODS_CLI_PATH) + " vocab NameType > " + ::testing::TempDir() + "vocab.txt";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(testing::readFile(::testing::TempDir() + "vocab.txt"), runCli({"vocab", "NameType"}).out);
}

}  // namespace
}  // namespace mmods::cli
