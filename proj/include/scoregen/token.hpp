#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scoregen/fraction.hpp"
#include "scoregen/score.hpp"

namespace scoregen {

// The training unit: (name, duration[, instrument]). Names are pitch
// spellings like "E4", chord spellings like "C4.E4" (ascending midi,
// dot-joined) or "rest". The instrument tag is present only for
// vertically extracted corpora.
struct Token {
    std::string name;
    Fraction duration;
    std::optional<std::string> instrument;

    bool is_rest() const { return name == "rest"; }
    bool is_chord() const { return name.find('.') != std::string::npos; }

    // Parsed pitches; empty for rests. Throws ParseError on a bad spelling.
    std::vector<Pitch> pitches() const;

    bool operator==(const Token&) const = default;
};

// Deterministic (name, duration, instrument) ordering used everywhere a
// token order matters; absent instrument sorts before present.
bool token_less(const Token& a, const Token& b);

Token token_from_event(const NoteEvent& event, std::optional<std::string> instrument = {});

// One token per line: name<TAB>duration[<TAB>instrument], durations as
// reduced fractions.
std::string format_token_line(const Token& token);
Token parse_token_line(std::string_view line, std::size_t line_number);

void write_token_file(const std::filesystem::path& path, const std::vector<Token>& tokens);
std::vector<Token> read_token_file(const std::filesystem::path& path);

}  // namespace scoregen
