#pragma once

// Chamber structure of the movable cone: walls in order, with verdicts,
// curve classes and the shape of each flopped locus.

#include "mukai/walls.hpp"

#include <optional>
#include <vector>

namespace mukai {

struct WallEntry {
  PlacedWall wall;
  WallVerdict verdict;
  std::vector<Decomposition> decompositions;
  bool decompositions_truncated = false;
  std::optional<BundleDescriptor> bundle;
  CurveClass curve;
  /// First or last wall of a closed movable cone.
  bool boundary = false;
};

struct ChamberChain {
  WallEnumeration enumeration;
  std::vector<WallEntry> walls;  // same order as enumeration.walls
  std::size_t chambers = 1;
  std::size_t interior_walls = 0;  // flopping walls strictly inside Mov
};

ChamberChain chamber_chain(const K3Config& cfg, const MukaiVector& v,
                           const EnumerationOptions& options = {});

}  // namespace mukai
