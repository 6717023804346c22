#include "scoregen/score.hpp"

#include <algorithm>

namespace scoregen {

NoteEvent make_event(std::vector<Pitch> pitches, Fraction duration, Fraction offset,
                     int part_index) {
    NoteEvent ev;
    std::sort(pitches.begin(), pitches.end(),
              [](const Pitch& a, const Pitch& b) { return a.midi() < b.midi(); });
    ev.pitches = std::move(pitches);
    ev.kind = ev.pitches.empty() ? EventKind::rest
              : ev.pitches.size() == 1 ? EventKind::note
                                       : EventKind::chord;
    ev.duration = duration;
    ev.offset = offset;
    ev.part_index = part_index;
    return ev;
}

void validate_score(const Score& score) {
    if (score.key_fifths < -7 || score.key_fifths > 7)
        throw ValidationError("key_fifths " + std::to_string(score.key_fifths) +
                              " out of [-7, 7]");
    if (score.time_beats < 1 || score.time_beat_type < 1)
        throw ValidationError("invalid time signature");
    if (score.tempo_bpm && *score.tempo_bpm <= 0)
        throw ValidationError("tempo must be positive");
    for (std::size_t pi = 0; pi < score.parts.size(); ++pi) {
        const Part& part = score.parts[pi];
        Fraction prev_offset = 0;
        for (const auto& ev : part.events) {
            bool kind_ok = (ev.kind == EventKind::rest && ev.pitches.empty()) ||
                           (ev.kind == EventKind::note && ev.pitches.size() == 1) ||
                           (ev.kind == EventKind::chord && ev.pitches.size() >= 2);
            if (!kind_ok)
                throw ValidationError("event kind inconsistent with pitch count in part " +
                                      std::to_string(pi));
            if (!(ev.duration > Fraction(0)))
                throw ValidationError("event with non-positive duration in part " +
                                      std::to_string(pi));
            if (ev.offset < Fraction(0))
                throw ValidationError("event with negative offset in part " + std::to_string(pi));
            if (ev.offset < prev_offset)
                throw ValidationError("events not sorted by offset in part " + std::to_string(pi));
            prev_offset = ev.offset;
            for (const auto& p : ev.pitches) validate_pitch(p);
        }
    }
}

}  // namespace scoregen
