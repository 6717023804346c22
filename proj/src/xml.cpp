#include "scoregen/xml.hpp"

#include <expat.h>

#include <cstring>
#include <memory>

namespace scoregen {

const XmlElement* XmlElement::child(std::string_view child_name) const {
    for (const auto& c : children)
        if (c.name == child_name) return &c;
    return nullptr;
}

const XmlElement& XmlElement::require_child(std::string_view child_name) const {
    const XmlElement* c = child(child_name);
    if (!c)
        throw ParseError("<" + name + "> is missing required <" + std::string(child_name) + ">",
                         line, 0);
    return *c;
}

std::vector<const XmlElement*> XmlElement::children_named(std::string_view child_name) const {
    std::vector<const XmlElement*> out;
    for (const auto& c : children)
        if (c.name == child_name) out.push_back(&c);
    return out;
}

std::string_view XmlElement::attribute(std::string_view attr_name) const {
    for (const auto& [k, v] : attributes)
        if (k == attr_name) return v;
    return {};
}

std::string XmlElement::trimmed_text() const {
    std::size_t begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    std::size_t end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

long XmlElement::int_text() const {
    std::string t = trimmed_text();
    if (t.empty()) throw ParseError("<" + name + "> has no integer content", line, 0);
    char* endp = nullptr;
    long v = std::strtol(t.c_str(), &endp, 10);
    if (endp == t.c_str() || *endp != '\0')
        throw ParseError("<" + name + "> content '" + t + "' is not an integer", line, 0);
    return v;
}

namespace {

struct BuildState {
    XmlElement root;
    std::vector<XmlElement*> stack;
    bool have_root = false;
    XML_Parser parser = nullptr;
};

void start_element(void* user, const XML_Char* name, const XML_Char** attrs) {
    auto* st = static_cast<BuildState*>(user);
    XmlElement* el;
    if (st->stack.empty()) {
        st->root.name = name;
        st->have_root = true;
        el = &st->root;
    } else {
        st->stack.back()->children.emplace_back();
        el = &st->stack.back()->children.back();
        el->name = name;
    }
    el->line = static_cast<long>(XML_GetCurrentLineNumber(st->parser));
    for (int i = 0; attrs[i]; i += 2)
        el->attributes.emplace_back(attrs[i], attrs[i + 1]);
    st->stack.push_back(el);
}

void end_element(void* user, const XML_Char*) {
    static_cast<BuildState*>(user)->stack.pop_back();
}

void character_data(void* user, const XML_Char* data, int len) {
    auto* st = static_cast<BuildState*>(user);
    if (!st->stack.empty()) st->stack.back()->text.append(data, static_cast<std::size_t>(len));
}

}  // namespace

XmlElement parse_xml(std::string_view bytes) {
    XML_Parser parser = XML_ParserCreate(nullptr);
    if (!parser) throw IoError("could not allocate XML parser");
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> guard(
        parser, XML_ParserFree);

    BuildState st;
    st.parser = parser;
    XML_SetUserData(parser, &st);
    XML_SetElementHandler(parser, start_element, end_element);
    XML_SetCharacterDataHandler(parser, character_data);

    if (bytes.size() > static_cast<std::size_t>(INT32_MAX))
        throw ParseError("XML document too large");
    if (XML_Parse(parser, bytes.data(), static_cast<int>(bytes.size()), 1) != XML_STATUS_OK) {
        throw ParseError(std::string("malformed XML: ") +
                             XML_ErrorString(XML_GetErrorCode(parser)),
                         static_cast<long>(XML_GetCurrentLineNumber(parser)),
                         static_cast<long>(XML_GetCurrentByteIndex(parser)));
    }
    if (!st.have_root) throw ParseError("XML document has no root element");
    return std::move(st.root);
}

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace scoregen
