#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scoregen/score.hpp"

namespace scoregen {

enum class ScoreFormat { musicxml, mxl };

struct ParseResult {
    Score score;
    // One entry per skipped construct (grace notes, ornaments, dynamics...).
    // Nothing is dropped silently.
    std::vector<std::string> warnings;
};

// Parses uncompressed MusicXML or a compressed .mxl container.
ParseResult parse_score(std::string_view bytes, ScoreFormat format);

// "PK" magic means mxl, anything else is treated as XML.
ScoreFormat detect_format(std::string_view bytes);

// Serializes to uncompressed MusicXML 3.1 with 480 divisions per quarter.
// Every duration and offset must be an integer number of divisions.
std::string write_musicxml(const Score& score);

constexpr int kDivisionsPerQuarter = 480;

}  // namespace scoregen
