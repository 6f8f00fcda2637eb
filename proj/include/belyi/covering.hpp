#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "belyi/words.hpp"

namespace belyi {

/// Boundary edges of a sheet: over the slit [0,1] (Tau), over the ray
/// [1, infinity) (Alpha), and over the short slit at the base point (Xi).
enum class EdgeKind { Tau, Alpha, Xi };

inline constexpr std::array<EdgeKind, 3> kEdgeKinds{EdgeKind::Tau, EdgeKind::Alpha, EdgeKind::Xi};

std::string_view name(EdgeKind kind);

/// For each sheet R_i and each labeled edge eps^i kind on it, the sheet across
/// the slit where that edge is glued.
class GluingTable {
 public:
  GluingTable(Integer n, std::array<std::vector<Integer>, 3> targets);

  Integer sheets() const { return n_; }
  Residue target(Residue sheet, EdgeKind kind) const;
  /// Sheet whose `kind` edge glues onto `sheet`.
  Residue source(Residue sheet, EdgeKind kind) const;

 private:
  Integer n_;
  std::array<std::vector<Integer>, 3> targets_;
};

/// Builds the gluing from the inertia type (1, k, -(k+1)): Tau edges step by
/// -1, Alpha edges by -(k+1), Xi edges stay on their sheet.
GluingTable gluing_table(const CurveParams& p);

/// A labeled boundary edge eps^label kind traversed with the given sign.
struct EdgePath {
  EdgeKind kind;
  Integer label;
  int sign;

  EdgePath inverse() const { return {kind, label, -sign}; }
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

/// One of the n turns of the lifted loop around infinity.
struct Revolution {
  Residue start;
  /// xi^{-1}, eps^{s+1} tau, (eps^s tau)^{-1}, alpha, alpha^{-1}, eps^{next} xi.
  std::vector<EdgePath> paths;
  /// The two tau edges left after cancellation, as E_{s+1} and E_s^{-1}.
  std::array<Letter, 2> letters;
  Residue next;
};

struct Cancellation {
  std::size_t revolution;
  EdgePath first;
  EdgePath second;
};

struct TraversalLog {
  std::vector<Revolution> revolutions;
  /// Every alpha/alpha^{-1} and xi/xi^{-1} pair that was cancelled, in order.
  std::vector<Cancellation> cancellations;
  /// Edge paths that survived cancellation (tau edges only).
  std::vector<EdgePath> reduced;
};

struct BoundaryLoop {
  TraversalLog log;
  Word word;
};

/// Lifts the loop around infinity to the slit cover starting on sheet R_0 and
/// returns the traversal together with the word L = L_0 ... L_{n-1}
/// (length 2n, E_0 placeholders kept).
BoundaryLoop lift_boundary_loop(const CurveParams& p);

/// L_j = E_{j(n-k-1)+1} E_{j(n-k-1)}^{-1}, concatenated for j = 0..n-1.
Word boundary_loop_formula(const CurveParams& p);

}  // namespace belyi
