#include "scoregen/midi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace scoregen {

namespace {

void append_u16_be(std::string& out, std::uint16_t v) {
    out += static_cast<char>(v >> 8);
    out += static_cast<char>(v & 0xff);
}

void append_u32_be(std::string& out, std::uint32_t v) {
    out += static_cast<char>(v >> 24);
    out += static_cast<char>((v >> 16) & 0xff);
    out += static_cast<char>((v >> 8) & 0xff);
    out += static_cast<char>(v & 0xff);
}

// Variable-length quantity, 7 bits per byte, high bit marks continuation.
void append_varlen(std::string& out, std::uint32_t v) {
    std::uint32_t buffer = v & 0x7f;
    while ((v >>= 7) != 0) {
        buffer <<= 8;
        buffer |= 0x80 | (v & 0x7f);
    }
    while (true) {
        out += static_cast<char>(buffer & 0xff);
        if (buffer & 0x80)
            buffer >>= 8;
        else
            break;
    }
}

struct ChannelEvent {
    long tick;
    int order;  // note-off sorts before note-on at the same tick
    int pitch;
    bool note_on;
};

long to_ticks(const Fraction& quarter_lengths, const std::string& what) {
    Fraction scaled = quarter_lengths * Fraction(kTicksPerQuarter);
    if (!scaled.is_integer())
        throw SerializationError(what + " of " + quarter_lengths.str() +
                                 " quarter-lengths is not an integer number of ticks");
    return scaled.num();
}

void finish_track(std::string& file, const std::string& track_data) {
    file += "MTrk";
    append_u32_be(file, static_cast<std::uint32_t>(track_data.size()));
    file += track_data;
}

int log2_exact(int v) {
    int l = 0;
    while ((1 << l) < v) ++l;
    if ((1 << l) != v) throw SerializationError("time signature denominator is not a power of 2");
    return l;
}

}  // namespace

std::string write_midi(const Score& score) {
    validate_score(score);
    constexpr std::size_t kMaxParts = 15;  // channel 9 is reserved for percussion
    if (score.parts.size() > kMaxParts)
        throw DataError("score has " + std::to_string(score.parts.size()) +
                        " parts, MIDI output supports at most " + std::to_string(kMaxParts));

    long end_tick = to_ticks(score.length(), "score length");

    std::string file;
    file += "MThd";
    append_u32_be(file, 6);
    append_u16_be(file, 1);
    append_u16_be(file, static_cast<std::uint16_t>(score.parts.size() + 1));
    append_u16_be(file, kTicksPerQuarter);

    // Track 0: time signature, key signature, optional tempo.
    std::string meta;
    append_varlen(meta, 0);
    meta += '\xff';
    meta += '\x58';
    meta += '\x04';
    meta += static_cast<char>(score.time_beats);
    meta += static_cast<char>(log2_exact(score.time_beat_type));
    meta += '\x18';  // 24 clocks per metronome click
    meta += '\x08';  // 32nd notes per quarter
    append_varlen(meta, 0);
    meta += '\xff';
    meta += '\x59';
    meta += '\x02';
    meta += static_cast<char>(score.key_fifths);
    meta += '\x00';  // major
    if (score.tempo_bpm) {
        long usec_per_quarter = std::lround(60000000.0 / *score.tempo_bpm);
        append_varlen(meta, 0);
        meta += '\xff';
        meta += '\x51';
        meta += '\x03';
        meta += static_cast<char>((usec_per_quarter >> 16) & 0xff);
        meta += static_cast<char>((usec_per_quarter >> 8) & 0xff);
        meta += static_cast<char>(usec_per_quarter & 0xff);
    }
    append_varlen(meta, static_cast<std::uint32_t>(end_tick));
    meta += '\xff';
    meta += '\x2f';
    meta += '\x00';
    finish_track(file, meta);

    for (std::size_t pi = 0; pi < score.parts.size(); ++pi) {
        const Part& part = score.parts[pi];
        int channel = static_cast<int>(pi < 9 ? pi : pi + 1);

        std::vector<ChannelEvent> events;
        for (const auto& ev : part.events) {
            if (ev.is_rest()) continue;
            std::string where = "part " + std::to_string(pi + 1);
            long on = to_ticks(ev.offset, where + " offset");
            long off = to_ticks(ev.offset + ev.duration, where + " end");
            for (const auto& p : ev.pitches) {
                int midi = p.midi();
                if (midi < 0 || midi > 127)
                    throw DataError("pitch " + p.name() + " outside midi range 0..127");
                events.push_back({on, 1, midi, true});
                events.push_back({off, 0, midi, false});
            }
        }
        std::sort(events.begin(), events.end(), [](const ChannelEvent& a, const ChannelEvent& b) {
            if (a.tick != b.tick) return a.tick < b.tick;
            if (a.order != b.order) return a.order < b.order;
            return a.pitch < b.pitch;
        });

        std::string track;
        append_varlen(track, 0);
        track += '\xff';
        track += '\x03';
        append_varlen(track, static_cast<std::uint32_t>(part.instrument.size()));
        track += part.instrument;

        long cursor = 0;
        for (const auto& ev : events) {
            append_varlen(track, static_cast<std::uint32_t>(ev.tick - cursor));
            cursor = ev.tick;
            track += static_cast<char>((ev.note_on ? 0x90 : 0x80) | channel);
            track += static_cast<char>(ev.pitch);
            track += static_cast<char>(ev.note_on ? kMidiVelocity : 0);
        }
        append_varlen(track, static_cast<std::uint32_t>(end_tick - cursor));
        track += '\xff';
        track += '\x2f';
        track += '\x00';
        finish_track(file, track);
    }
    return file;
}

}  // namespace scoregen
