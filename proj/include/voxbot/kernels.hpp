#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace vox::kernels {

/// Spring axis determines how the rest length responds to voxel actuation:
/// horizontal springs scale with the owners' widths, vertical springs are
/// fixed, diagonals follow sqrt(s^2 + 1).
enum class SpringAxis : std::uint8_t { Horizontal = 0, Vertical = 1, Diagonal = 2 };

/// Structure-of-arrays spring storage. Springs are stored grouped by axis in
/// the order horizontal, vertical, diagonal so the per-axis rest-length loops
/// are branch-free. owner_a == owner_b when a spring has a single owner voxel.
struct SpringSoA {
  std::vector<std::int32_t> vi, vj;            // endpoint vertex indices, vi != vj
  std::vector<std::int32_t> owner_a, owner_b;  // owning voxel indices
  std::vector<double> stiffness;

  std::size_t n_horizontal = 0;
  std::size_t n_vertical = 0;
  std::size_t n_diagonal = 0;

  std::size_t size() const { return vi.size(); }

  SpringAxis axis_of(std::size_t s) const {
    if (s < n_horizontal) return SpringAxis::Horizontal;
    if (s < n_horizontal + n_vertical) return SpringAxis::Vertical;
    return SpringAxis::Diagonal;
  }
};

/// Per-step constants consumed by the integration kernel.
struct IntegrateParams {
  double dt;
  double gravity;          // positive, acts along -y
  double global_drag;      // velocity multiplier per step
  double ground_stiffness;
  double ground_damping;
  double friction_mu;
  double speed_cap;
};

/// A backend is one vector lane width of the same arithmetic. All backends
/// compute bit-identical results: the AVX2 kernels use the exact operation
/// sequence of the scalar ones (no FMA contraction, IEEE sqrt/div/min/max),
/// so backend choice never changes a trajectory.
struct Backend {
  std::string_view name;

  /// rest[s] for every spring from the current per-voxel scales.
  void (*rest_lengths)(const SpringSoA& springs, const double* scale,
                       double voxel_rest_length, double* rest);

  /// Per-spring force on endpoint vj (Hooke + axial damping); the force on
  /// vi is the negation. Results go to sfx/sfy, one entry per spring.
  void (*spring_forces)(const SpringSoA& springs, const double* rest,
                        const double* px, const double* py, const double* vx,
                        const double* vy, double spring_damping, double* sfx,
                        double* sfy);

  /// Adds gravity, ground penalty, and Coulomb friction to the accumulated
  /// spring forces fx/fy, then advances state by one semi-implicit Euler step.
  void (*integrate)(std::size_t n, const double* fx, const double* fy,
                    const double* mass, const double* inv_mass, double* px,
                    double* py, double* vx, double* vy,
                    const IntegrateParams& p);
};

enum class BackendKind { Auto, Scalar, Avx2 };

const Backend& scalar_backend();

/// AVX2 backend, or nullptr when the build target or the running CPU does
/// not support it.
const Backend* avx2_backend();

/// Auto resolves to the widest backend the CPU supports.
/// Throws std::runtime_error when an explicitly requested backend is
/// unavailable.
const Backend& select_backend(BackendKind kind);

const char* backend_kind_name(BackendKind kind);
BackendKind backend_kind_from_name(std::string_view name);  // throws on unknown

}  // namespace vox::kernels
