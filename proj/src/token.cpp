#include "scoregen/token.hpp"

#include <fstream>
#include <sstream>

namespace scoregen {

std::vector<Pitch> Token::pitches() const {
    if (is_rest()) return {};
    std::vector<Pitch> out;
    std::size_t start = 0;
    while (start <= name.size()) {
        std::size_t dot = name.find('.', start);
        std::string_view spelling(name.data() + start,
                                  (dot == std::string::npos ? name.size() : dot) - start);
        out.push_back(parse_pitch(spelling));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return out;
}

bool token_less(const Token& a, const Token& b) {
    if (a.name != b.name) return a.name < b.name;
    if (a.duration != b.duration) return a.duration < b.duration;
    return a.instrument < b.instrument;
}

Token token_from_event(const NoteEvent& event, std::optional<std::string> instrument) {
    Token t;
    if (event.is_rest()) {
        t.name = "rest";
    } else {
        for (std::size_t i = 0; i < event.pitches.size(); ++i) {
            if (i > 0) t.name += '.';
            t.name += event.pitches[i].name();
        }
    }
    t.duration = event.duration;
    t.instrument = std::move(instrument);
    return t;
}

std::string format_token_line(const Token& token) {
    std::string line = token.name + "\t" + token.duration.str();
    if (token.instrument) line += "\t" + *token.instrument;
    return line;
}

Token parse_token_line(std::string_view line, std::size_t line_number) {
    auto fail = [&](const std::string& what) {
        throw ParseError("token file: " + what, static_cast<long>(line_number), 0);
    };
    std::size_t tab1 = line.find('\t');
    if (tab1 == std::string_view::npos) fail("expected name<TAB>duration");
    Token t;
    t.name = std::string(line.substr(0, tab1));
    if (t.name.empty()) fail("empty token name");
    std::size_t tab2 = line.find('\t', tab1 + 1);
    std::string_view dur = tab2 == std::string_view::npos
                               ? line.substr(tab1 + 1)
                               : line.substr(tab1 + 1, tab2 - tab1 - 1);
    try {
        t.duration = Fraction::parse(dur);
    } catch (const ParseError& e) {
        fail(e.what());
    }
    if (!(t.duration > Fraction(0))) fail("token duration must be positive");
    if (tab2 != std::string_view::npos) {
        std::string instrument(line.substr(tab2 + 1));
        if (instrument.empty()) fail("empty instrument field");
        t.instrument = std::move(instrument);
    }
    if (!t.is_rest()) t.pitches();  // validates the spelling
    return t;
}

void write_token_file(const std::filesystem::path& path, const std::vector<Token>& tokens) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    for (const auto& t : tokens) out << format_token_line(t) << "\n";
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<Token> read_token_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open token file '" + path.string() + "'");
    std::vector<Token> tokens;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        tokens.push_back(parse_token_line(line, line_number));
    }
    return tokens;
}

}  // namespace scoregen
