#pragma once

#include <cstdint>
#include <optional>

namespace vox {

/// Voxel material taxonomy. The numeric indices are frozen: they define the
/// order of the generator network's output vector and the argmax tie-break
/// (lowest index wins), so reordering them silently changes every genome.
enum class MaterialKind : std::uint8_t {
  Empty = 0,
  SoftPassive = 1,
  RigidPassive = 2,
  ActivePhaseA = 3,   // sinusoidal horizontal actuation
  ActivePhaseB = 4,   // same signal, 180 degrees out of phase
  Sensor1Expand = 5,  // widens when stimulus 1 is present
  Sensor1Contract = 6,
  Sensor2Expand = 7,
  Sensor2Contract = 8,
};

inline constexpr int kMaterialCount = 9;

constexpr bool is_occupied(MaterialKind k) { return k != MaterialKind::Empty; }

constexpr bool is_active(MaterialKind k) {
  return k == MaterialKind::ActivePhaseA || k == MaterialKind::ActivePhaseB;
}

constexpr bool is_sensor(MaterialKind k) {
  return static_cast<int>(k) >= 5 && static_cast<int>(k) <= 8;
}

constexpr bool is_passive(MaterialKind k) {
  return k == MaterialKind::SoftPassive || k == MaterialKind::RigidPassive;
}

/// One character per material, used by the text grid format.
/// Order matches the enum: . S R A B 1 ! 2 ?
char material_char(MaterialKind k);
std::optional<MaterialKind> material_from_char(char c);

}  // namespace vox
