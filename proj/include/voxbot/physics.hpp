#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "voxbot/kernels.hpp"
#include "voxbot/morphology.hpp"
#include "voxbot/stimulus.hpp"

namespace vox {

using kernels::SpringAxis;

struct PhysicsParams {
  double voxel_rest_length = 1.0;  // L0
  double dt = 0.005;               // seconds per step
  int steps_per_cycle = 128;       // steps per actuation cycle
  double gravity = 9.81;           // L0/s^2, downward
  double stiffness_soft = 60.0;
  double stiffness_rigid = 300.0;
  double spring_damping = 1.0;
  double global_drag = 0.999;     // velocity multiplier per step
  double ground_stiffness = 800.0;
  double ground_damping = 2.0;
  double friction_mu = 0.8;
  double sensor_ramp_cycles = 0.25;  // fraction of a cycle to traverse the full scale range
  double speed_cap = 50.0;           // L0/s

  /// Throws std::invalid_argument when an invariant is violated.
  void check() const;
};

/// Minimum and maximum per-voxel actuation scale. Active materials sweep the
/// whole range once per cycle; sensors ramp between the two endpoints.
inline constexpr double kScaleMin = 0.6;
inline constexpr double kScaleMax = 1.6;

enum class ActuationPhase { A, B };

/// Sinusoidal scale of an active voxel at the given cycle fraction.
/// Phase A is 1.1 + 0.5*sin(2*pi*c); phase B is 180 degrees offset.
double active_scale(ActuationPhase phase, double cycle_fraction);

struct NotASensor : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Target scale of a sensory voxel under a stimulus pattern. Expand sensors
/// go to 1.6 when their stimulus is present and 0.6 when absent; contract
/// sensors respond the opposite way. Throws NotASensor for other materials.
double sensor_target(MaterialKind kind, StimulusPattern pattern);

/// Raised when a step produces a non-finite coordinate. Treated as an
/// evaluation outcome by callers, not a crash.
struct SimulationUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidMorphology : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Descriptive view of one spring, materialized from the SoA storage.
struct Spring {
  int i = 0, j = 0;
  SpringAxis axis = SpringAxis::Horizontal;
  double stiffness = 0.0;
  int owner_a = 0, owner_b = 0;
};

/// Per-voxel record of an occupied grid cell.
struct VoxelRef {
  int row = 0, col = 0;
  MaterialKind kind = MaterialKind::Empty;
};

/// The physics world for one robot: point masses on distinct voxel corners,
/// deduplicated edge springs plus per-voxel diagonals, flat ground at y = 0.
/// Built by build_sim; advanced by step/simulate_segment.
struct SimState {
  // Vertex data (SoA).
  std::vector<double> pos_x, pos_y;
  std::vector<double> vel_x, vel_y;
  std::vector<double> mass, inv_mass;

  kernels::SpringSoA springs;

  std::vector<VoxelRef> voxels;  // occupied voxels, row-major
  std::vector<double> scale;     // current actuation scale per voxel

  std::int64_t t = 0;  // physics steps taken

  const kernels::Backend* backend = nullptr;

  std::size_t vertex_count() const { return pos_x.size(); }
  std::size_t spring_count() const { return springs.size(); }
  Spring spring(std::size_t s) const;

  double com_x() const;
  double com_y() const;

  // Sensor ramp bookkeeping: scale follows a closed-form ramp from the value
  // it had when its target last changed, which pins the arrival step exactly.
  std::vector<double> ramp_from;
  std::vector<std::int64_t> ramp_start_t;
  std::vector<double> ramp_target;

  // Scratch buffers reused across steps.
  std::vector<double> rest, sfx, sfy, fx, fy;
};

/// Rest length of a spring given the mean scale of its owners.
double rest_length(SpringAxis axis, double mean_owner_scale, double voxel_rest_length);

/// Builds the resting world for a valid morphology: one vertex per distinct
/// occupied corner with mass 0.25 per incident voxel, shared edges
/// deduplicated (stiffness = max of owners), lowest vertices at y = 0 and
/// leftmost at x = 0, all scales 1.0. Throws InvalidMorphology if `morph`
/// came from an unvalidated grid. Backend choice is fixed per simulation.
SimState build_sim(const Morphology& morph, const PhysicsParams& params,
                   kernels::BackendKind backend = kernels::BackendKind::Auto);

/// Applies the stimulus pattern at the state's current cycle fraction:
/// actives are set exactly to their sinusoid, sensors ramp toward their
/// target by at most one full range per sensor_ramp_cycles, passives hold 1.
void set_actuation(SimState& state, StimulusPattern pattern, const PhysicsParams& params);

/// One semi-implicit Euler step. Throws SimulationUnstable when any
/// coordinate leaves the finite range.
void step(SimState& state, const PhysicsParams& params);

struct TraceRecord {
  std::int64_t step = 0;  // physics step index after the step, 1-based
  double cycle = 0.0;     // step / steps_per_cycle
  double com_x = 0.0;
  double com_y = 0.0;
  bool s1 = false;
  bool s2 = false;
};

/// Per-step COM history of one simulation, with the context needed to
/// normalize it at render time. Raw values stay in L0 and steps.
struct Trace {
  double body_length = 1.0;
  int steps_per_cycle = 128;
  double initial_com_x = 0.0;
  double initial_com_y = 0.0;
  std::vector<TraceRecord> records;

  /// COM x at a step boundary; step 0 is the initial state.
  double com_x_at(std::int64_t step) const;
};

/// Starts a trace from a freshly built state.
Trace begin_trace(const SimState& state, const Morphology& morph, const PhysicsParams& params);

/// Runs cycles * steps_per_cycle steps under a fixed pattern, appending one
/// record per step. Propagates SimulationUnstable.
void simulate_segment(SimState& state, StimulusPattern pattern, int cycles,
                      Trace& trace, const PhysicsParams& params);

}  // namespace vox
