#include <gtest/gtest.h>

#include "mmods/error.hpp"
#include "mmods/mods_document.hpp"
#include "oracle/fixtures.hpp"

namespace mmods::mods {
namespace {

TEST(ModsDocumentTest, MinimalRecord) {
  auto doc = parseModsXml("<mods><titleInfo><title>T</title></titleInfo></mods>");
  EXPECT_FALSE(doc.isCollection());
  ASSERT_EQ(doc.records().size(), 1u);
  ASSERT_EQ(doc.root.children.size(), 1u);
  EXPECT_TRUE(doc.root.children[0].is("titleInfo"));
  EXPECT_EQ(doc.root.children[0].children[0].trimmedText(), "T");
  EXPECT_EQ(doc.root.elementCount(), 3u);
}

TEST(ModsDocumentTest, UndeclaredPrefixIsParseError) {
  EXPECT_THROW(parseModsXml("<mods><foo:titleInfo/></mods>"), ParseError);
}

TEST(ModsDocumentTest, MalformedReportsLineAndColumn) {
  try {
    parseModsXml(testing::readFixture("malformed.xml"), "malformed.xml");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_NE(std::string(e.what()).find("malformed.xml:5:"), std::string::npos);
  }
}

TEST(ModsDocumentTest, WrongRootIsStructuralError) {
  EXPECT_THROW(parseModsXml("<record><title>T</title></record>"), StructuralError);
  EXPECT_THROW(parseModsXml("<x:mods xmlns:x='urn:other'/>"), StructuralError);
}

TEST(ModsDocumentTest, HandCountedElements) {
  // mods, titleInfo, title, name, 2 namePart, displayForm, affiliation, role,
  // roleTerm, nameIdentifier, description, originInfo, publisher, dateIssued.
  auto doc = parseModsXml(testing::readFixture("personal_name.xml"));
  EXPECT_EQ(doc.root.elementCount(), 15u);
}

TEST(ModsDocumentTest, NamespacedAttributesRetained) {
  auto doc = parseModsXml(testing::readFixture("lang_xlink.xml"));
  const Element* name = doc.root.childrenNamed("name").at(0);
  ASSERT_NE(name->attribute(kXlinkNamespace, "href"), nullptr);
  EXPECT_EQ(*name->attribute(kXlinkNamespace, "href"), "https://example.org/people/dupont");
  ASSERT_NE(name->attribute(kXmlNamespace, "lang"), nullptr);
  EXPECT_EQ(*name->attribute(kXmlNamespace, "lang"), "fr");
  EXPECT_EQ(*name->attribute("ID"), "n1");
  EXPECT_EQ(name->attribute("href"), nullptr);
}

TEST(ModsDocumentTest, Collection) {
  auto doc = parseModsXml(testing::readFixture("collection.xml"));
  EXPECT_TRUE(doc.isCollection());
  EXPECT_EQ(doc.records().size(), 2u);
}

TEST(ModsDocumentTest, MappedFlags) {
  auto doc = parseModsXml(testing::readFixture("personal_name.xml"));
  EXPECT_FALSE(doc.root.childrenNamed("titleInfo").at(0)->mapped);
  EXPECT_TRUE(doc.root.childrenNamed("name").at(0)->mapped);
  const Element* origin = doc.root.childrenNamed("originInfo").at(0);
  EXPECT_TRUE(origin->childrenNamed("dateIssued").at(0)->mapped);
  EXPECT_FALSE(origin->childrenNamed("publisher").at(0)->mapped);
}

}  // namespace
}  // namespace mmods::mods
