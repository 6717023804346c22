#include "scoregen/vocabulary.hpp"

#include <algorithm>
#include <fstream>

namespace scoregen {

Vocabulary Vocabulary::build(std::span<const Token> tokens) {
    if (tokens.empty()) throw DataError("cannot build a vocabulary from an empty corpus");
    Vocabulary v;
    v.tokens_.assign(tokens.begin(), tokens.end());
    std::sort(v.tokens_.begin(), v.tokens_.end(), token_less);
    v.tokens_.erase(std::unique(v.tokens_.begin(), v.tokens_.end()), v.tokens_.end());
    return v;
}

int Vocabulary::encode(const Token& token) const {
    auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token, token_less);
    if (it == tokens_.end() || !(*it == token))
        throw DataError("token '" + format_token_line(token) + "' is not in the vocabulary");
    return static_cast<int>(it - tokens_.begin());
}

const Token& Vocabulary::decode(int index) const {
    if (index < 0 || index >= size())
        throw DataError("vocabulary index " + std::to_string(index) + " out of range 0.." +
                        std::to_string(size() - 1));
    return tokens_[static_cast<std::size_t>(index)];
}

std::vector<int> encode_all(const Vocabulary& vocabulary, std::span<const Token> tokens) {
    std::vector<int> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(vocabulary.encode(t));
    return out;
}

void write_vocabulary_file(const std::filesystem::path& path, const Vocabulary& vocabulary) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    for (int i = 0; i < vocabulary.size(); ++i)
        out << i << "\t" << format_token_line(vocabulary.decode(i)) << "\n";
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

Vocabulary read_vocabulary_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open vocabulary file '" + path.string() + "'");
    std::vector<Token> tokens;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("vocabulary file: expected index<TAB>token",
                             static_cast<long>(line_number), 0);
        std::size_t expected = tokens.size();
        if (line.substr(0, tab) != std::to_string(expected))
            throw ParseError("vocabulary file: expected index " + std::to_string(expected) +
                                 ", found '" + line.substr(0, tab) + "'",
                             static_cast<long>(line_number), 0);
        tokens.push_back(parse_token_line(std::string_view(line).substr(tab + 1), line_number));
    }
    if (tokens.empty()) throw DataError("vocabulary file '" + path.string() + "' is empty");
    for (std::size_t i = 1; i < tokens.size(); ++i)
        if (!token_less(tokens[i - 1], tokens[i]))
            throw ParseError("vocabulary file entries are not in canonical order",
                             static_cast<long>(i + 1), 0);
    Vocabulary v;
    v = Vocabulary::build(tokens);
    if (v.size() != static_cast<int>(tokens.size()))
        throw ParseError("vocabulary file contains duplicate tokens");
    return v;
}

}  // namespace scoregen
