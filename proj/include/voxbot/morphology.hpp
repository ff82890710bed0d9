#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "voxbot/materials.hpp"

namespace vox {

enum class MorphError {
  None,
  EmptyBody,     // no occupied voxel
  Disconnected,  // occupied voxels not 4-connected
  NoActuator,    // no active voxel in either phase
  BadShape,      // grid size does not match H*W, or H/W < 1
};

const char* morph_error_name(MorphError e);

struct MorphCounts {
  int n_active = 0;
  int n_sensor = 0;
  int n_total = 0;

  friend bool operator==(const MorphCounts&, const MorphCounts&) = default;
};

/// A validated voxel-grid body. Row 0 is the top row; immutable after
/// validation. Occupied voxels are guaranteed nonempty, 4-connected, and to
/// include at least one active voxel.
class Morphology {
 public:
  /// Validates a row-major grid. Returns nullopt and sets `err` on failure.
  static std::optional<Morphology> validate(std::vector<MaterialKind> grid,
                                            int height, int width,
                                            MorphError* err = nullptr);

  int height() const { return height_; }
  int width() const { return width_; }
  MaterialKind at(int row, int col) const { return grid_[row * width_ + col]; }
  const std::vector<MaterialKind>& grid() const { return grid_; }

  MorphCounts counts() const;

  /// Horizontal extent of the occupied columns at rest, in units of L0.
  double body_length(double voxel_rest_length = 1.0) const;

  /// Reflection about the vertical axis; material kinds unchanged.
  Morphology mirror_lr() const;

  /// Text grid format: height() lines of width() characters.
  std::string to_text() const;

  friend bool operator==(const Morphology&, const Morphology&) = default;

 private:
  Morphology(std::vector<MaterialKind> grid, int height, int width)
      : grid_(std::move(grid)), height_(height), width_(width) {}

  std::vector<MaterialKind> grid_;
  int height_ = 0;
  int width_ = 0;
};

/// Parses the text grid format (lines of material characters, one row per
/// line, row 0 on top). Does not validate connectivity; feed the result to
/// Morphology::validate.
struct ParsedGrid {
  std::vector<MaterialKind> grid;
  int height = 0;
  int width = 0;
};
std::optional<ParsedGrid> parse_grid_text(std::string_view text,
                                          std::string* error = nullptr);

}  // namespace vox
