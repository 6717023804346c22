#pragma once

#include <string>

#include "scoregen/score.hpp"

namespace scoregen {

// Standard MIDI File type 1, 480 ticks per quarter: one tempo/meta track
// plus one track per part. Note-on velocity is fixed at 64; the model
// generates no dynamics. Output is byte-exact deterministic.
std::string write_midi(const Score& score);

constexpr int kTicksPerQuarter = 480;
constexpr int kMidiVelocity = 64;

}  // namespace scoregen
