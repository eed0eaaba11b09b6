#pragma once

// Wall taxonomy for moduli of objects on a K3 surface: divisorial, flopping
// or fake walls, totally semistable walls, effective decompositions of v and
// the projective-bundle shape of the flopped locus.

#include "mukai/stability.hpp"
#include "mukai/wall_lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mukai {

enum class WallKind { Divisorial, Flopping, Fake, LagrangianBoundary };
enum class DivisorialType { BrillNoether, HilbertChow, LiGiesekerUhlenbeck };
enum class FlopTrigger { Spherical, PositiveSum };

enum class CertificateRole {
  SphericalOrthogonal,   // s^2 = -2, (s, v) = 0
  IsotropicPairingOne,   // w^2 = 0, (w, v) = 1
  IsotropicPairingTwo,   // w^2 = 0, (w, v) = 2
  SphericalFlop,         // s^2 = -2, 0 < (s, v) <= v^2/2
  PositivePart,          // a^2 >= 0, (a, v) > 0 and v - a positive
  EffectiveNegative,     // s^2 = -2, phi(s) > 0, (s, v) < 0
  IsotropicOrthogonal,   // w^2 = 0, (w, v) = 0
};

std::string to_string(WallKind kind);
std::string to_string(DivisorialType type);
std::string to_string(FlopTrigger trigger);
std::string to_string(CertificateRole role);

struct Certificate {
  MukaiVector cls;
  CertificateRole role;
};

/// phi(p v + q a) = p + q phi_a, the ratio Z(x)/Z(v) at a point of the
/// numerical wall.
struct AlignmentFunctional {
  Rational b;
  Rational t2;
  Rational phi_a;

  Rational operator()(const Integer& p, const Integer& q) const { return Rational(p) + Rational(q) * phi_a; }
};

struct WallVerdict {
  WallKind kind = WallKind::Fake;
  std::optional<DivisorialType> divisorial;
  std::optional<FlopTrigger> trigger;
  bool totally_semistable = false;
  /// Totally semistable only because of a spherical class judged effective by
  /// phi-positivity.
  bool proxy_decisive = false;
  /// Spherical effectivity differs between arcs of the wall split by holes.
  bool arc_dependent = false;
  std::vector<Certificate> certificates;
  std::optional<AlignmentFunctional> phi;
};

/// Rational point of the numerical wall of the lattice inside the geometric
/// region, avoiding holes. nullopt when the wall does not meet the half-plane.
std::optional<AlignmentFunctional> alignment_functional(const K3Config& cfg,
                                                        const WallLattice& wall);

/// The top point of the wall followed by points just left and right of each
/// hole lying on it.
std::vector<AlignmentFunctional> alignment_points(const K3Config& cfg, const WallLattice& wall);

WallVerdict classify(const K3Config& cfg, const WallLattice& wall);

struct Decomposition {
  std::vector<MukaiVector> parts;
  /// Two-part splitting whose parallelogram 0, a, v - a, v holds further
  /// lattice points.
  bool refinable = false;
};

struct DecompositionLimits {
  std::size_t max_parts = 16;
  std::size_t max_results = 1024;
};

struct DecompositionSearch {
  std::vector<Decomposition> found;
  /// A limit was hit; found is incomplete.
  bool truncated = false;
};

/// Unordered splittings v = a_1 + ... + a_m (m >= 2) into effective classes of
/// the wall lattice: positive classes, and spherical classes with phi > 0.
DecompositionSearch effective_decompositions(const K3Config& cfg, const WallLattice& wall,
                                             const AlignmentFunctional& phi,
                                             const DecompositionLimits& limits = {});

/// Effective classes x of the wall lattice with 0 < phi(x) < 1, in (p, q) coordinates.
std::vector<LatticePoint2> effective_classes_in_strip(const WallLattice& wall,
                                                      const AlignmentFunctional& phi);

struct BundleDescriptor {
  MukaiVector a;
  MukaiVector b;
  Integer fiber_dim;                     // r = (v - a, a) - 1
  std::pair<Integer, Integer> base_dims;  // (a^2 + 2, b^2 + 2)
  Integer total_dim;
  Integer codim;

  std::string describe() const;
};

/// Throws std::invalid_argument when (v - a, a) - 1 < 1.
BundleDescriptor bundle_descriptor(const K3Config& cfg, const MukaiVector& v, const MukaiVector& a);

}  // namespace mukai
