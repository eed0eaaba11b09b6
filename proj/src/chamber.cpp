#include "mukai/chamber.hpp"

namespace mukai {

namespace {

std::optional<BundleDescriptor> flop_bundle(const K3Config& cfg, const WallLattice& wall,
                                            const WallVerdict& verdict) {
  if (verdict.kind != WallKind::Flopping) {
    return std::nullopt;
  }
  MukaiVector a = wall.a;
  for (const auto& c : verdict.certificates) {
    if (c.role == CertificateRole::SphericalFlop || c.role == CertificateRole::PositivePart) {
      a = c.cls;
      break;
    }
  }
  if (pairing(cfg, MukaiVector(wall.v - a), a) < 2) {
    return std::nullopt;
  }
  return bundle_descriptor(cfg, wall.v, a);
}

}  // namespace

ChamberChain chamber_chain(const K3Config& cfg, const MukaiVector& v,
                           const EnumerationOptions& options) {
  ChamberChain out;
  out.enumeration = enumerate_walls(cfg, v, options);
  const auto& placed = out.enumeration.walls;
  for (std::size_t i = 0; i < placed.size(); ++i) {
    WallEntry e;
    e.wall = placed[i];
    e.verdict = classify(cfg, e.wall.lattice);
    if (e.verdict.phi) {
      auto search = effective_decompositions(cfg, e.wall.lattice, *e.verdict.phi);
      e.decompositions = std::move(search.found);
      e.decompositions_truncated = search.truncated;
    }
    e.bundle = flop_bundle(cfg, e.wall.lattice, e.verdict);
    e.curve = curve_class(cfg, v, out.enumeration.basis, e.wall.lattice.divisor);
    const bool first = i == 0 && out.enumeration.lower_closed;
    const bool last = i + 1 == placed.size() && out.enumeration.upper_closed;
    e.boundary = options.sector == Sector::Movable && e.wall.bounds_movable && (first || last);
    if (!e.boundary && e.verdict.kind == WallKind::Flopping) {
      ++out.interior_walls;
    }
    out.walls.push_back(std::move(e));
  }
  out.chambers = out.interior_walls + 1;
  return out;
}

}  // namespace mukai
