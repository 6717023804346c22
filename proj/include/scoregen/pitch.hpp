#pragma once

#include <set>
#include <string>
#include <string_view>

#include "scoregen/error.hpp"

namespace scoregen {

// A spelled pitch: letter step, chromatic alteration and octave in
// scientific pitch notation. MIDI number is derived, never stored.
struct Pitch {
    char step = 'C';  // 'A'..'G'
    int alter = 0;    // -2..+2 semitones
    int octave = 4;

    // 12*(octave+1) + semitone(step) + alter. C4 = 60.
    int midi() const;
    int pitch_class() const { return ((midi() % 12) + 12) % 12; }

    // "Eb4", "F#5", "C4". Flats as 'b', sharps as '#', repeated for
    // double alterations.
    std::string name() const;

    bool operator==(const Pitch&) const = default;
};

// Semitone offset of a natural step letter within the octave (C=0 .. B=11).
int step_semitone(char step);

// Inverse of midi() for a fixed alteration. Throws ValidationError when the
// (midi, alter) pair does not land on a natural step.
Pitch pitch_from_midi(int midi, int alter);

// Parses names produced by Pitch::name(), e.g. "Eb4", "C#5", "A-1".
Pitch parse_pitch(std::string_view name);

// Validates step/alter ranges and the 0..127 MIDI window.
void validate_pitch(const Pitch& p);

// Pitch classes of the Eb major scale: Eb F G Ab Bb C D.
const std::set<int>& eb_major_pitch_classes();

}  // namespace scoregen
