#include "scoregen/pitch.hpp"

#include <array>
#include <cstdlib>

namespace scoregen {

int step_semitone(char step) {
    switch (step) {
        case 'C': return 0;
        case 'D': return 2;
        case 'E': return 4;
        case 'F': return 5;
        case 'G': return 7;
        case 'A': return 9;
        case 'B': return 11;
        default:
            throw ValidationError(std::string("invalid pitch step '") + step + "'");
    }
}

int Pitch::midi() const {
    return 12 * (octave + 1) + step_semitone(step) + alter;
}

std::string Pitch::name() const {
    std::string s(1, step);
    for (int i = 0; i < alter; ++i) s += '#';
    for (int i = 0; i > alter; --i) s += 'b';
    return s + std::to_string(octave);
}

Pitch pitch_from_midi(int midi, int alter) {
    static constexpr std::array<char, 12> natural = {
        'C', 0, 'D', 0, 'E', 'F', 0, 'G', 0, 'A', 0, 'B'};
    int natural_midi = midi - alter;
    int pc = ((natural_midi % 12) + 12) % 12;
    char step = natural[static_cast<std::size_t>(pc)];
    if (step == 0)
        throw ValidationError("midi " + std::to_string(midi) + " with alter " +
                              std::to_string(alter) + " has no natural spelling");
    Pitch p;
    p.step = step;
    p.alter = alter;
    p.octave = (natural_midi - pc) / 12 - 1;
    return p;
}

Pitch parse_pitch(std::string_view name) {
    if (name.empty()) throw ParseError("empty pitch name");
    Pitch p;
    p.step = name.front();
    if (p.step < 'A' || p.step > 'G')
        throw ParseError("bad pitch step in '" + std::string(name) + "'");
    std::size_t i = 1;
    p.alter = 0;
    while (i < name.size() && (name[i] == '#' || name[i] == 'b')) {
        p.alter += name[i] == '#' ? 1 : -1;
        ++i;
    }
    if (i >= name.size())
        throw ParseError("missing octave in pitch '" + std::string(name) + "'");
    bool neg = name[i] == '-';
    if (neg) ++i;
    if (i >= name.size())
        throw ParseError("missing octave in pitch '" + std::string(name) + "'");
    int octave = 0;
    for (; i < name.size(); ++i) {
        char c = name[i];
        if (c < '0' || c > '9')
            throw ParseError("bad octave in pitch '" + std::string(name) + "'");
        octave = octave * 10 + (c - '0');
    }
    p.octave = neg ? -octave : octave;
    validate_pitch(p);
    return p;
}

void validate_pitch(const Pitch& p) {
    if (p.step < 'A' || p.step > 'G')
        throw ValidationError(std::string("invalid pitch step '") + p.step + "'");
    if (p.alter < -2 || p.alter > 2)
        throw ValidationError("pitch alter " + std::to_string(p.alter) + " out of [-2, 2]");
    int m = p.midi();
    if (m < 0 || m > 127)
        throw ValidationError("pitch " + p.name() + " maps to midi " + std::to_string(m) +
                              ", outside 0..127");
}

const std::set<int>& eb_major_pitch_classes() {
    static const std::set<int> classes = {3, 5, 7, 8, 10, 0, 2};
    return classes;
}

}  // namespace scoregen
