#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "scoregen/token.hpp"

namespace scoregen {

// Dense bijection Token <-> index. Indices follow the deterministic
// (name, duration, instrument) ordering of the distinct tokens, so two
// runs over the same corpus always agree.
class Vocabulary {
public:
    static Vocabulary build(std::span<const Token> tokens);

    int encode(const Token& token) const;          // DataError if unknown
    const Token& decode(int index) const;          // DataError if out of range
    int size() const { return static_cast<int>(tokens_.size()); }

    const std::vector<Token>& tokens() const { return tokens_; }

private:
    std::vector<Token> tokens_;  // sorted by token_less
};

std::vector<int> encode_all(const Vocabulary& vocabulary, std::span<const Token> tokens);

// index<TAB>name<TAB>duration[<TAB>instrument] per line.
void write_vocabulary_file(const std::filesystem::path& path, const Vocabulary& vocabulary);
Vocabulary read_vocabulary_file(const std::filesystem::path& path);

}  // namespace scoregen
