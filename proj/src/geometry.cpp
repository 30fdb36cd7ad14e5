#include "superchab/geometry.hpp"

#include <numeric>

#include "superchab/errors.hpp"

namespace superchab {

BranchLocus padic_branch_points(const SuperellipticCurve& curve, const PadicContext& ctx) {
  BranchLocus out;
  out.infinity_is_branch = curve.degree() % curve.m() != 0;
  for (const auto& block : curve.blocks()) {
    if (block.root) {
      out.points.push_back({PadicNumber::from_rational(*block.root, ctx), block.multiplicity, block.root});
      continue;
    }
    const PadicRoots found = padic_roots(block.factor, ctx);
    for (const auto& r : found.roots) out.points.push_back({r, block.multiplicity, std::nullopt});
    if (!found.complete) out.unanalyzed.push_back(block.factor.to_string());
  }
  return out;
}

ClusterTree::ClusterTree(const std::vector<PadicNumber>& points) {
  if (points.empty()) throw DomainError("cluster tree of an empty set");
  std::vector<size_t> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  build(points, std::move(all), -1);
}

int ClusterTree::build(const std::vector<PadicNumber>& points, std::vector<size_t> members, int parent) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(ClusterNode{{}, kInfinity, points[members.front()], parent, {}});
  if (members.size() == 1) {
    nodes_[id].members = members;
    return id;
  }
  long depth = kInfinity;
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      const PadicNumber diff = points[members[i]] - points[members[j]];
      if (diff.is_zero()) throw DomainError("branch points coincide to working precision");
      depth = std::min(depth, diff.valuation());
    }
  }
  // v(a - b) > depth is an equivalence relation by the ultrametric inequality.
  std::vector<std::vector<size_t>> groups;
  for (size_t i : members) {
    bool placed = false;
    for (auto& g : groups) {
      if ((points[g.front()] - points[i]).valuation() > depth) {
        g.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({i});
  }
  const PadicNumber& rep = points[members.front()];
  nodes_[id].members = std::move(members);
  nodes_[id].depth = depth;
  nodes_[id].center = PadicNumber::from_rational(rep.with_absolute_precision(depth).lift(), rep.context());
  for (auto& g : groups) {
    const int child = build(points, std::move(g), id);
    nodes_[id].children.push_back(child);
  }
  return id;
}

ClusterTree build_cluster_tree(const std::vector<PadicNumber>& points) { return ClusterTree(points); }

std::string to_string(AnnulusCase c) {
  switch (c) {
    case AnnulusCase::split:
      return "split";
    case AnnulusCase::rotation:
      return "rotation";
    case AnnulusCase::inverting:
      return "inverting";
    case AnnulusCase::excluded:
      return "excluded";
  }
  return "unknown";
}

AnnulusCase classify_annulus(long n0, long m) {
  if (m < 2) throw DomainError("m must be at least 2");
  if (n0 < 1) throw DomainError("an annulus needs branch points in its inner disc");
  return std::gcd(n0, m) > 1 ? AnnulusCase::split : AnnulusCase::rotation;
}

AnnulusCase classify_disc(long points_in_disc, long m) {
  if (m < 2) throw DomainError("m must be at least 2");
  if (points_in_disc != 2) throw DomainError("only discs with two branch points are classified");
  return m == 2 ? AnnulusCase::inverting : AnnulusCase::excluded;
}

std::vector<ResidueAnnulus> enumerate_maximal_annuli(const ClusterTree& tree, const BranchLocus& locus, long m) {
  const auto& nodes = tree.nodes();
  const ClusterNode& root = tree.root();
  // With infinity unbranched the root has degree = #children in the hull.
  bool root_is_vertex = locus.infinity_is_branch || root.children.size() >= 3;
  bool merged_emitted = false;

  std::vector<ResidueAnnulus> out;
  for (size_t id = 1; id < nodes.size(); ++id) {
    const ClusterNode& node = nodes[id];
    if (node.is_leaf()) continue;
    bool merged = false;
    if (node.parent == 0 && !root_is_vertex) {
      const bool both_proper = root.children.size() == 2 && !nodes[root.children[0]].is_leaf() &&
                               !nodes[root.children[1]].is_leaf();
      if (!both_proper || merged_emitted) continue;  // part of a leaf edge, or already charted
      merged = merged_emitted = true;
    }
    ResidueAnnulus a{node.center, 0, 0, {}, {}};
    a.v_lo = nodes[node.parent].depth;
    a.v_hi = node.depth;
    a.merged = merged;
    std::vector<bool> inside(locus.points.size(), false);
    for (size_t i : node.members) inside[i] = true;
    for (size_t i = 0; i < locus.points.size(); ++i) {
      if (inside[i]) {
        a.theta0.push_back(i);
        a.n0 += locus.points[i].multiplicity;
      } else {
        a.theta_inf.push_back(i);
      }
    }
    a.d = std::gcd(a.n0, m);
    a.kind = classify_annulus(a.n0, m);
    out.push_back(std::move(a));
  }
  const long s = static_cast<long>(locus.points.size()) + (locus.infinity_is_branch ? 1 : 0);
  if (static_cast<long>(out.size()) > std::max(0L, s - 3)) {
    throw VerificationError("found " + std::to_string(out.size()) + " maximal annuli for " + std::to_string(s) +
                            " branch points");
  }
  return out;
}

GeometryReport analyze_geometry(const SuperellipticCurve& curve, const PadicContext& ctx) {
  GeometryReport out;
  out.locus = padic_branch_points(curve, ctx);
  out.p1_branch_count = curve.branch_count() + (out.locus.infinity_is_branch ? 1 : 0);
  out.orbit_cap = to_long(floor_of(frac(4 * genus(curve) - 4, curve.m()))) + 1;
  if (!out.locus.complete()) return out;
  std::vector<PadicNumber> thetas;
  for (const auto& b : out.locus.points) thetas.push_back(b.theta);
  out.annuli = enumerate_maximal_annuli(ClusterTree(thetas), out.locus, curve.m());
  out.orbit_count = static_cast<long>(out.annuli.size());
  if (out.orbit_count > out.orbit_cap) {
    throw VerificationError("annulus orbit count " + std::to_string(out.orbit_count) + " exceeds cap " +
                            std::to_string(out.orbit_cap));
  }
  return out;
}

long annulus_orbit_count(const SuperellipticCurve& curve, const PadicContext& ctx) {
  const GeometryReport r = analyze_geometry(curve, ctx);
  if (!r.locus.complete()) throw DomainError("branch locus does not split over Q_p");
  return r.orbit_count;
}

}  // namespace superchab
