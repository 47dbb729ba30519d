#include <gtest/gtest.h>

#include "mmods/canonical.hpp"
#include "mmods/materializer.hpp"
#include "mmods/mods_mapper.hpp"
#include "mmods/validator.hpp"
#include "oracle/fixtures.hpp"

namespace mmods {
namespace {

class MapperTest : public ::testing::Test {
 protected:
  VocabularyRegistry registry;
  ConstraintCatalog catalog = buildCatalog(registry);
  const Term type = Term::iri(std::string(iri::kRdfType));

  MappingResult map(std::string_view xml, MappingOptions options = {}) {
    return mapRecord(mods::parseModsXml(xml), registry, options);
  }
  MappingResult mapFixture(const std::string& name) { return map(testing::readFixture(name)); }

  std::vector<Term> instances(const Graph& g, const std::string& cls) {
    return g.subjects(type, registry.cls(cls));
  }
  Term one(const Graph& g, const Term& s, const std::string& p) {
    auto os = g.objects(s, registry.property(p));
    EXPECT_EQ(os.size(), 1u) << p;
    return os.empty() ? Term::literal("") : os[0];
  }
};

TEST_F(MapperTest, EmptyRecord) {
  auto r = map("<mods xmlns='http://www.loc.gov/mods/v3'/>");
  ASSERT_EQ(r.graph.size(), 1u);
  EXPECT_EQ(instances(r.graph, "ModsItem").size(), 1u);
}

TEST_F(MapperTest, UnmappedElementsWarn) {
  auto r = mapFixture("minimal.xml");
  EXPECT_EQ(r.graph.size(), 1u);
  EXPECT_EQ(r.unmappedElements, 1u);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].message.find("titleInfo"), std::string::npos);
}

TEST_F(MapperTest, GivenAndFamilyNameParts) {
  auto r = mapFixture("personal_name.xml");
  const Graph& g = r.graph;
  auto names = instances(g, "Name");
  // The agent's Name plus the Organization's Name.
  ASSERT_EQ(names.size(), 2u);
  auto agent = instances(g, "Agent").at(0);
  Term name = one(g, agent, "hasName");
  auto parts = g.objects(name, registry.property("hasNamePart"));
  ASSERT_EQ(parts.size(), 2u);
  std::map<std::string, Term> byValue;
  for (const auto& p : parts) byValue.emplace(one(g, p, "hasValue").value(), one(g, p, "hasNamePartType"));
  EXPECT_EQ(byValue.at("Iain"), registry.individual("FirstName"));
  EXPECT_EQ(byValue.at("Banks"), registry.individual("LastName"));
  EXPECT_EQ(one(g, name, "hasNameType"), registry.individual("Personal"));
  EXPECT_EQ(one(g, name, "isPrimaryInstance"), registry.individual("Primary"));
  EXPECT_EQ(instances(g, "AuthorityInfo").size(), 1u);
  EXPECT_EQ(instances(g, "NameIdentifier").size(), 1u);
  EXPECT_EQ(instances(g, "Description").size(), 1u);
}

TEST_F(MapperTest, RoleTriangle) {
  auto r = mapFixture("personal_name.xml");
  const Graph& g = r.graph;
  auto agent = instances(g, "Agent").at(0);
  auto item = instances(g, "ModsItem").at(0);
  auto role = instances(g, "AgentRole").at(0);
  EXPECT_TRUE(g.contains({agent, registry.property("assumesAgentRole"), role}));
  EXPECT_TRUE(g.contains({item, registry.property("providesAgentRole"), role}));
  EXPECT_EQ(one(g, role, "hasRoleUnderName"), one(g, agent, "hasName"));
}

TEST_F(MapperTest, ConferenceType) {
  auto r = mapFixture("conference_name.xml");
  auto name = instances(r.graph, "Name").at(0);
  EXPECT_EQ(one(r.graph, name, "hasNameType"), registry.individual("Conference"));
}

TEST_F(MapperTest, AffiliationBecomesOrganization) {
  auto r = mapFixture("personal_name.xml");
  const Graph& g = r.graph;
  auto orgs = instances(g, "Organization");
  ASSERT_EQ(orgs.size(), 1u);
  Term orgName = one(g, orgs[0], "hasName");
  Term part = one(g, orgName, "hasNamePart");
  EXPECT_EQ(one(g, part, "hasValue"), Term::literal("Riverside Institute of Letters"));
  auto agent = instances(g, "Agent").at(0);
  EXPECT_TRUE(g.contains({agent, registry.property("hasAffiliation"), orgs[0]}));
  // Nothing about the affiliation hangs off the agent's own Name.
  Term agentName = one(g, agent, "hasName");
  EXPECT_TRUE(g.match(agentName, registry.property("hasAffiliation"), std::nullopt).empty());
}

TEST_F(MapperTest, SharedAffiliationDeduplicated) {
  auto r = mapFixture("shared_affiliation.xml");
  EXPECT_EQ(instances(r.graph, "Organization").size(), 1u);
  EXPECT_EQ(instances(r.graph, "Agent").size(), 2u);
}

TEST_F(MapperTest, DateIssuedExample) {
  auto r = map(
      "<mods xmlns='http://www.loc.gov/mods/v3'><originInfo>"
      "<dateIssued encoding='w3cdtf' keyDate='yes'>2002</dateIssued></originInfo></mods>");
  const Graph& g = r.graph;
  auto dates = instances(g, "DateInfo");
  ASSERT_EQ(dates.size(), 1u);
  EXPECT_EQ(one(g, dates[0], "hasValue"), Term::literal("2002"));
  EXPECT_EQ(one(g, dates[0], "isOfType"), registry.individual("DateIssued"));
  Term attrs = one(g, dates[0], "hasDateAttributes");
  EXPECT_EQ(one(g, attrs, "hasDateEncodingType"), registry.individual("W3cdtf"));
  EXPECT_EQ(one(g, attrs, "isKeyDate"), Term::boolean(true));
  EXPECT_TRUE(g.contains({instances(g, "ModsItem").at(0), registry.property("hasDateInfo"), dates[0]}));
}

TEST_F(MapperTest, PointAndQualifier) {
  auto r = map(
      "<mods xmlns='http://www.loc.gov/mods/v3'><originInfo>"
      "<dateCreated point='start' qualifier='approximate'>1990</dateCreated></originInfo></mods>");
  auto d = instances(r.graph, "DateInfo").at(0);
  Term attrs = one(r.graph, d, "hasDateAttributes");
  EXPECT_EQ(one(r.graph, attrs, "isStartOrEndPoint"), registry.individual("Start"));
  EXPECT_EQ(one(r.graph, attrs, "hasQualifier"), registry.individual("Approximate"));
}

TEST_F(MapperTest, BareDateStillGetsAttributes) {
  auto r = map("<mods xmlns='http://www.loc.gov/mods/v3'><originInfo><dateValid>2001</dateValid></originInfo></mods>");
  auto d = instances(r.graph, "DateInfo").at(0);
  Term attrs = one(r.graph, d, "hasDateAttributes");
  EXPECT_TRUE(r.graph.contains({attrs, type, registry.cls("DateAttributes")}));
  EXPECT_EQ(r.graph.match(attrs, std::nullopt, std::nullopt).size(), 1u);
}

TEST_F(MapperTest, EmptyDateSkipped) {
  auto r = map("<mods xmlns='http://www.loc.gov/mods/v3'><originInfo><dateIssued> </dateIssued></originInfo></mods>");
  EXPECT_TRUE(instances(r.graph, "DateInfo").empty());
  EXPECT_FALSE(r.warnings.empty());
}

TEST_F(MapperTest, EveryDateHasOneAttributesAndOneType) {
  auto r = mapFixture("dates.xml");
  auto dates = instances(r.graph, "DateInfo");
  EXPECT_EQ(dates.size(), 6u);
  for (const auto& d : dates) {
    EXPECT_EQ(r.graph.objects(d, registry.property("hasDateAttributes")).size(), 1u);
    EXPECT_EQ(r.graph.objects(d, registry.property("isOfType")).size(), 1u);
  }
}

TEST_F(MapperTest, CalendarMintedAndWarnedOnlyWhenStrict) {
  const std::string xml =
      "<mods xmlns='http://www.loc.gov/mods/v3'><originInfo>"
      "<copyrightDate calendar='julian'>1999</copyrightDate></originInfo></mods>";
  auto lax = map(xml);
  auto strict = map(xml, {.strict = true});
  EXPECT_TRUE(lax.warnings.empty());
  EXPECT_EQ(strict.warnings.size(), 1u);
  auto d = instances(lax.graph, "DateInfo").at(0);
  Term cal = one(lax.graph, one(lax.graph, d, "hasDateAttributes"), "hasAlternativeCalendar");
  EXPECT_TRUE(lax.graph.contains({cal, type, registry.cls("Calendar")}));
}

TEST_F(MapperTest, CommonAttributes) {
  auto r = mapFixture("lang_xlink.xml");
  const Graph& g = r.graph;
  auto agent = instances(g, "Agent").at(0);
  Term name = one(g, agent, "hasName");
  Term link = one(g, name, "hasLinkAttributes");
  EXPECT_EQ(g.match(link, std::nullopt, std::nullopt).size(), 3u);  // type, hasID, hasHref
  Term lang = one(g, name, "hasLanguageAttributes");
  EXPECT_EQ(one(g, lang, "hasLang"), Term::literal("fr"));
  EXPECT_EQ(one(g, name, "hasDisplayLabel"), Term::literal("Auteur"));
  // No NamePart ends up with an ID under its link attributes.
  for (const auto& part : g.objects(name, registry.property("hasNamePart")))
    for (const auto& la : g.objects(part, registry.property("hasLinkAttributes")))
      EXPECT_TRUE(g.objects(la, registry.property("hasID")).empty());
}

TEST_F(MapperTest, NoAttributesNoAdditions) {
  VocabularyRegistry r;
  Graph g;
  std::vector<MappingWarning> warnings;
  MappingContext ctx(r, g, warnings);
  auto doc = mods::parseModsXml("<mods><name><namePart>X</namePart></name></mods>");
  ctx.beginRecord(doc.root);
  const std::size_t before = g.size();
  ctx.mapCommonAttributes(doc.root.children[0], ctx.modsItem());
  EXPECT_EQ(g.size(), before);
}

TEST_F(MapperTest, Deterministic) {
  for (const char* f : {"personal_name.xml", "dates.xml", "collection.xml", "lang_xlink.xml"}) {
    auto a = mapFixture(f);
    auto b = mapFixture(f);
    EXPECT_EQ(canonicalize(a.graph), canonicalize(b.graph)) << f;
  }
}

TEST_F(MapperTest, FixturesConform) {
  for (const char* f : {"minimal.xml", "personal_name.xml", "corporate_name.xml", "conference_name.xml", "dates.xml",
                        "lang_xlink.xml", "shared_affiliation.xml", "collection.xml"}) {
    auto r = mapFixture(f);
    auto report = validate(r.graph, catalog, registry);
    EXPECT_EQ(report.errors(), 0u) << f;
    for (const auto& part : instances(materialize(r.graph, catalog), "NamePart"))
      EXPECT_EQ(r.graph.subjects(registry.property("hasNamePart"), part).size(), 1u) << f;
  }
}

TEST_F(MapperTest, CollectionMintsIrisFromRecordIds) {
  auto r = mapFixture("collection.xml");
  EXPECT_EQ(r.records, 2u);
  EXPECT_EQ(instances(r.graph, "Organization").size(), 1u);
  for (const auto& item : instances(r.graph, "ModsItem")) EXPECT_TRUE(item.isIri());
}

}  // namespace
}  // namespace mmods
