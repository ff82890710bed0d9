#pragma once

#include <array>

namespace vox {

/// The two binary environmental stimuli. Pattern index is 2*s1 + s2, which
/// fixes the canonical enumeration order (Absent,Absent), (Absent,Present),
/// (Present,Absent), (Present,Present).
struct StimulusPattern {
  bool s1 = false;
  bool s2 = false;

  friend bool operator==(const StimulusPattern&, const StimulusPattern&) = default;
};

constexpr int pattern_index(StimulusPattern p) {
  return 2 * static_cast<int>(p.s1) + static_cast<int>(p.s2);
}

constexpr StimulusPattern pattern_from_index(int i) {
  return StimulusPattern{(i & 2) != 0, (i & 1) != 0};
}

inline constexpr std::array<StimulusPattern, 4> kAllPatterns = {
    StimulusPattern{false, false},
    StimulusPattern{false, true},
    StimulusPattern{true, false},
    StimulusPattern{true, true},
};

}  // namespace vox
