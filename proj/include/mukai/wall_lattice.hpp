#pragma once

#include "mukai/diophantine.hpp"
#include "mukai/ns_geometry.hpp"

namespace mukai {

/// Rank-2 primitive sublattice <v, a> containing v.
struct WallLattice {
  MukaiVector v;
  MukaiVector a;  // normalized: {v, a} is a basis and 0 <= (a, v) <= v^2/2
  /// Class shown in reports: a, or for a degenerate lattice the primitive
  /// isotropic class orthogonal to v (lexicographically larger sign).
  MukaiVector representative;
  GramForm2 gram;
  NSClass divisor;
  /// a^2 in {-2, 0}
  bool standard_form = false;
  /// Degenerate lattice: the wall is an isotropic boundary ray of the positive cone.
  bool isotropic_boundary = false;

  MukaiVector element(const Integer& p, const Integer& q) const { return v * p + a * q; }
};

/// Basis {v, u} of the saturation of span(v, a) in the Mukai lattice.
/// Throws std::invalid_argument when v is not primitive or a is proportional to v.
std::pair<MukaiVector, MukaiVector> saturate(const K3Config& cfg, const MukaiVector& v,
                                             const MukaiVector& a);

struct NormalizedRepresentative {
  MukaiVector a;
  bool standard_form = false;
};

/// Representative +-u + k v of the saturated lattice <v, a> with
/// 0 <= (a', v) <= v^2/2 and minimal square. standard_form is false when the
/// minimal square is outside {-2, 0}.
NormalizedRepresentative normalize_representative(const K3Config& cfg, const MukaiVector& v,
                                                  const MukaiVector& a);

WallLattice make_wall_lattice(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a,
                              const NSBasis& basis);

}  // namespace mukai
