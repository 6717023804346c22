#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scoregen/error.hpp"

namespace scoregen {

// Minimal element tree, enough for MusicXML. Mixed content is not
// preserved: character data is concatenated per element.
struct XmlElement {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<XmlElement> children;
    std::string text;
    long line = 0;

    const XmlElement* child(std::string_view child_name) const;
    const XmlElement& require_child(std::string_view child_name) const;
    std::vector<const XmlElement*> children_named(std::string_view child_name) const;
    std::string_view attribute(std::string_view attr_name) const;  // "" when absent
    bool has_child(std::string_view child_name) const { return child(child_name) != nullptr; }

    // Text with surrounding whitespace stripped.
    std::string trimmed_text() const;
    long int_text() const;  // trimmed text as integer, or ParseError at this line
};

// Parses a complete document and returns the root element.
// Throws ParseError with line/byte position on malformed input.
XmlElement parse_xml(std::string_view bytes);

std::string xml_escape(std::string_view text);

}  // namespace scoregen
