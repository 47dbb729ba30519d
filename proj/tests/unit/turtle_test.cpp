#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "mmods/canonical.hpp"
#include "mmods/mods_mapper.hpp"
#include "mmods/ntriples.hpp"
#include "mmods/turtle.hpp"
#include "oracle/fixtures.hpp"

namespace mmods {
namespace {

const std::string kHeader =
    "@prefix mmods: <https://example.org/mmods-o/> .\n"
    "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";

TEST(TurtleTest, EmptyGraphIsHeaderOnly) {
  VocabularyRegistry r;
  EXPECT_EQ(writeTurtle(Graph{}, r), kHeader);
}

TEST(TurtleTest, RegistryTermsArePrefixed) {
  VocabularyRegistry r;
  auto m = mapRecord(mods::parseModsXml(testing::readFixture("personal_name.xml")), r);
  const std::string ttl = writeTurtle(m.graph, r);
  EXPECT_EQ(ttl.rfind(kHeader, 0), 0u);
  const std::string body = ttl.substr(kHeader.size());
  EXPECT_EQ(body.find("<https://example.org/mmods-o/"), std::string::npos);
  EXPECT_NE(body.find(" a mmods:Agent"), std::string::npos);
  EXPECT_NE(body.find("mmods:hasNamePartType mmods:FirstName"), std::string::npos);
  EXPECT_EQ(ttl, writeTurtle(m.graph, r));
}

TEST(TurtleTest, GroupsPredicatesAndObjects) {
  VocabularyRegistry r;
  Graph g;
  const Term s = r.mint("s");
  g.add(s, r.property("hasValue"), Term::literal("a"));
  g.add(s, r.property("hasValue"), Term::literal("b"));
  g.add(s, r.property("hasID"), Term::literal("c"));
  const std::string body = writeTurtle(g, r).substr(kHeader.size());
  EXPECT_EQ(body, "\nmmods:s mmods:hasID \"c\" ;\n    mmods:hasValue \"a\", \"b\" .\n");
}

TEST(TurtleTest, NonPrefixableLocalNamesStayFull) {
  VocabularyRegistry r;
  Graph g;
  g.add(r.mint("rec1/Agent0"), r.property("hasValue"), Term::literal("x"));
  const std::string ttl = writeTurtle(g, r);
  EXPECT_NE(ttl.find("<https://example.org/mmods-o/rec1/Agent0>"), std::string::npos);
}

// Cross-check with an external Turtle parser when one is installed.
TEST(TurtleTest, ExternalParserAgrees) {
  if (std::system("python3 -c 'import rdflib' >/dev/null 2>&1") != 0) GTEST_SKIP() << "rdflib not available";
  VocabularyRegistry r;
  auto m = mapRecord(mods::parseModsXml(testing::readFixture("lang_xlink.xml")), r);
  const std::string path = ::testing::TempDir() + "mmods_turtle_check.ttl";
  std::ofstream(path) << writeTurtle(m.graph, r);
  const std::string nt = path + ".nt";
  const std::string cmd = "python3 -c \"import rdflib,sys; g=rdflib.Graph(); g.parse(sys.argv[1], format='turtle'); "
                          "open(sys.argv[2],'w').write(g.serialize(format='nt'))\" " + path + " " + nt;
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  Graph back = readNTriples(testing::readFile(nt));
  EXPECT_TRUE(isomorphic(back, m.graph));
}

}  // namespace
}  // namespace mmods
