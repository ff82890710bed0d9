#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "voxbot/materials.hpp"

namespace vox {

enum class Activation : std::uint8_t { Sine = 0, Abs = 1, Square = 2, Sqrt = 3 };
inline constexpr int kActivationCount = 4;
const char* activation_name(Activation a);

enum class NodeKind : std::uint8_t { Input = 0, Hidden = 1, Output = 2 };

/// Input labels, in the order node ids are assigned to them.
enum : int { kInputX = 0, kInputY = 1, kInputDCenter = 2, kInputBias = 3 };

struct CppnNode {
  int id = 0;
  NodeKind kind = NodeKind::Hidden;
  Activation activation = Activation::Sine;  // meaningful for hidden nodes only
  int label = -1;  // inputs: 0..3 per the enum above; outputs: material index 0..8
};

struct CppnEdge {
  int src = 0;
  int dst = 0;
  double weight = 0.0;
};

/// A pattern-producing network: a weighted DAG from the four coordinate
/// inputs (x_norm, y_norm, d_center, bias) to one output per material kind.
/// Genomes are immutable; mutate() returns a child. Evaluation clamps every
/// node to [-4, 4], defines sqrt on negatives as sqrt(|v|), and leaves
/// unconnected outputs at 0.
class Genome {
 public:
  /// 4 inputs, 9 outputs, no hidden nodes; each input->output edge is present
  /// independently with probability 0.5 with weight ~ U(-1, 1).
  static Genome minimal(std::mt19937_64& rng);

  /// Construct from explicit parts (deserialization, fixtures). Throws
  /// std::invalid_argument on structural violations: wrong input/output node
  /// set, duplicate ids or edges, edges into inputs or out of outputs, or a
  /// cycle.
  static Genome from_parts(std::vector<CppnNode> nodes, std::vector<CppnEdge> edges);

  const std::vector<CppnNode>& nodes() const { return nodes_; }
  const std::vector<CppnEdge>& edges() const { return edges_; }

  std::array<double, kMaterialCount> eval(double x_norm, double y_norm,
                                          double d_center) const;

  /// Material at one grid location; coordinates normalized to [-1, 1] and
  /// center distance to [0, 1]. Argmax over eval, ties to the lowest index.
  MaterialKind query_material(int row, int col, int height, int width) const;

  /// Queries every location in row-major order. Validity is judged by the
  /// caller via Morphology::validate.
  std::vector<MaterialKind> develop(int height, int width) const;

  /// Applies exactly one mutation operator (add/remove node, add/remove
  /// edge, change activation, perturb weights); operators that cannot apply
  /// fall back to weight perturbation. The parent is unchanged.
  Genome mutate(std::mt19937_64& rng) const;

  /// Hash of the structure and weights; independent of construction history.
  std::uint64_t structural_hash() const;

 private:
  Genome() = default;
  void rebuild_topology();  // validates + caches topological order

  std::vector<CppnNode> nodes_;
  std::vector<CppnEdge> edges_;
  int next_id_ = 0;

  // Cached evaluation plan: node visit order and per-node incoming edges.
  std::vector<int> topo_order_;                    // indices into nodes_
  std::vector<std::vector<int>> incoming_;         // edge indices per node index
};

}  // namespace vox
