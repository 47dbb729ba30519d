#include "mmods/mods_document.hpp"

#include <expat.h>

#include <memory>
#include <set>

#include "mmods/error.hpp"

namespace mmods::mods {

namespace {

constexpr char kSeparator = '\x1f';

QName splitName(const XML_Char* raw) {
  std::string_view name(raw);
  auto pos = name.find(kSeparator);
  if (pos == std::string_view::npos) return {{}, std::string(name)};
  return {std::string(name.substr(0, pos)), std::string(name.substr(pos + 1))};
}

bool isModsNamespace(std::string_view ns) { return ns.empty() || ns == kModsNamespace; }

struct ParserState {
  XML_Parser parser = nullptr;
  std::vector<Element*> stack;
  Element root;
};

void XMLCALL onStart(void* data, const XML_Char* name, const XML_Char** attrs) {
  auto* state = static_cast<ParserState*>(data);
  Element* element;
  if (state->stack.empty()) {
    element = &state->root;
  } else {
    element = &state->stack.back()->children.emplace_back();
  }
  element->name = splitName(name);
  element->line = XML_GetCurrentLineNumber(state->parser);
  for (int i = 0; attrs[i]; i += 2) element->attributes.emplace_back(splitName(attrs[i]), attrs[i + 1]);
  state->stack.push_back(element);
}

void XMLCALL onEnd(void* data, const XML_Char*) { static_cast<ParserState*>(data)->stack.pop_back(); }

void XMLCALL onText(void* data, const XML_Char* text, int len) {
  auto* state = static_cast<ParserState*>(data);
  if (!state->stack.empty()) state->stack.back()->text.append(text, static_cast<std::size_t>(len));
}

const std::set<std::string, std::less<>> kNameChildren = {"namePart", "displayForm", "affiliation", "role",
                                                          "description", "nameIdentifier"};
const std::set<std::string, std::less<>> kDateElements = {"dateIssued",   "dateCreated", "dateCaptured",
                                                          "dateModified", "dateValid",   "dateOther",
                                                          "copyrightDate"};

void markName(Element& name) {
  name.mapped = true;
  for (auto& child : name.children) {
    if (!isModsNamespace(child.name.ns) || !kNameChildren.contains(child.name.local)) continue;
    child.mapped = true;
    if (child.is("role"))
      for (auto& term : child.children) term.mapped = term.is("roleTerm");
  }
}

void markRecord(Element& record) {
  record.mapped = true;
  for (auto& child : record.children) {
    if (child.is("name")) {
      markName(child);
    } else if (child.is("originInfo")) {
      child.mapped = true;
      for (auto& date : child.children)
        date.mapped = isModsNamespace(date.name.ns) && kDateElements.contains(date.name.local);
    }
  }
}

}  // namespace

bool Element::is(std::string_view local) const { return name.local == local && isModsNamespace(name.ns); }

const std::string* Element::attribute(std::string_view ns, std::string_view local) const {
  for (const auto& [qname, value] : attributes)
    if (qname.ns == ns && qname.local == local) return &value;
  return nullptr;
}

std::vector<const Element*> Element::childrenNamed(std::string_view local) const {
  std::vector<const Element*> out;
  for (const auto& child : children)
    if (child.is(local)) out.push_back(&child);
  return out;
}

std::string Element::trimmedText() const {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = text.find_first_not_of(kSpace);
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(kSpace);
  return text.substr(first, last - first + 1);
}

std::size_t Element::elementCount() const {
  std::size_t n = 1;
  for (const auto& child : children) n += child.elementCount();
  return n;
}

std::vector<const Element*> ModsDocument::records() const {
  if (root.is("mods")) return {&root};
  return root.childrenNamed("mods");
}

ModsDocument parseModsXml(std::string_view bytes, std::string source) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
      XML_ParserCreateNS(nullptr, kSeparator), &XML_ParserFree);
  if (!parser) throw Error("cannot allocate XML parser");

  ParserState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), onStart, onEnd);
  XML_SetCharacterDataHandler(parser.get(), onText);

  if (XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) == XML_STATUS_ERROR) {
    const auto line = XML_GetCurrentLineNumber(parser.get());
    const auto column = XML_GetCurrentColumnNumber(parser.get()) + 1;
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                         XML_ErrorString(XML_GetErrorCode(parser.get())),
                     line, column);
  }

  ModsDocument doc{std::move(source), std::move(state.root)};
  if (!doc.root.is("mods") && !doc.root.is("modsCollection")) {
    const std::string shown = doc.root.name.ns.empty() ? doc.root.name.local
                                                       : "{" + doc.root.name.ns + "}" + doc.root.name.local;
    throw StructuralError(doc.source + ": root element must be mods or modsCollection, found " + shown);
  }
  if (doc.root.is("mods")) {
    markRecord(doc.root);
  } else {
    doc.root.mapped = true;
    for (auto& child : doc.root.children)
      if (child.is("mods")) markRecord(child);
  }
  return doc;
}

}  // namespace mmods::mods
