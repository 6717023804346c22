#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scoregen/fraction.hpp"
#include "scoregen/pitch.hpp"

namespace scoregen {

enum class EventKind { note, chord, rest };

// One timed musical event. pitches is empty iff rest, has one entry for a
// note and two or more (ascending midi) for a chord.
struct NoteEvent {
    EventKind kind = EventKind::rest;
    std::vector<Pitch> pitches;
    Fraction duration;  // quarter-lengths, > 0
    Fraction offset;    // quarter-lengths from score start, >= 0
    int part_index = 0;

    bool is_rest() const { return kind == EventKind::rest; }

    // Highest pitch by midi; events are kept midi-sorted.
    const Pitch& top_pitch() const { return pitches.back(); }

    bool operator==(const NoteEvent&) const = default;
};

struct Part {
    std::string instrument;
    std::vector<NoteEvent> events;  // sorted by nondecreasing offset

    bool operator==(const Part&) const = default;
};

struct Score {
    std::vector<Part> parts;
    int key_fifths = 0;  // -7..+7; -3 = three flats (Eb major)
    int time_beats = 4;
    int time_beat_type = 4;
    std::optional<int> tempo_bpm;

    // End of the last event over all parts, in quarter-lengths.
    Fraction length() const {
        Fraction end = 0;
        for (const auto& part : parts)
            for (const auto& ev : part.events) {
                Fraction e = ev.offset + ev.duration;
                if (e > end) end = e;
            }
        return end;
    }

    bool operator==(const Score&) const = default;
};

// Builds a kind-consistent event from pitches (sorted ascending by midi).
NoteEvent make_event(std::vector<Pitch> pitches, Fraction duration, Fraction offset,
                     int part_index = 0);

// Checks per-event invariants and per-part offset monotonicity.
void validate_score(const Score& score);

}  // namespace scoregen
