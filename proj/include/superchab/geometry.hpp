#pragma once

#include <string>
#include <vector>

#include "superchab/curve.hpp"

namespace superchab {

struct BranchPoint {
  PadicNumber theta;
  long multiplicity = 1;
  std::optional<Rational> rational;
};

// Finite branch points located in Q_p; blocks that do not split are listed as unanalyzed.
struct BranchLocus {
  std::vector<BranchPoint> points;
  std::vector<std::string> unanalyzed;
  bool infinity_is_branch = false;  // m does not divide deg f
  bool complete() const { return unanalyzed.empty(); }
};

BranchLocus padic_branch_points(const SuperellipticCurve& curve, const PadicContext& ctx);

struct ClusterNode {
  std::vector<size_t> members;  // indices into the input points
  long depth = kInfinity;       // min v(theta_i - theta_j) over members; kInfinity for leaves
  PadicNumber center;           // a member truncated below p^depth
  int parent = -1;
  std::vector<int> children;
  bool is_leaf() const { return members.size() == 1; }
};

// Ultrametric clustering; node 0 is the root.
class ClusterTree {
 public:
  explicit ClusterTree(const std::vector<PadicNumber>& points);
  const std::vector<ClusterNode>& nodes() const { return nodes_; }
  const ClusterNode& root() const { return nodes_.front(); }

 private:
  int build(const std::vector<PadicNumber>& points, std::vector<size_t> members, int parent);
  std::vector<ClusterNode> nodes_;
};

ClusterTree build_cluster_tree(const std::vector<PadicNumber>& points);

enum class AnnulusCase { split, rotation, inverting, excluded };
std::string to_string(AnnulusCase c);

struct ResidueAnnulus {
  PadicNumber center;
  long v_lo = 0;  // v_lo < v(x - center) < v_hi
  long v_hi = 0;
  std::vector<size_t> theta0;     // branch points in the inner disc
  std::vector<size_t> theta_inf;  // the rest
  long n0 = 0;                    // #theta0 counted with multiplicity
  long d = 1;
  AnnulusCase kind = AnnulusCase::rotation;
  bool merged = false;  // the two root edges joined through an unbranched root
};

std::vector<ResidueAnnulus> enumerate_maximal_annuli(const ClusterTree& tree, const BranchLocus& locus, long m);

// d > 1 splits into d annuli permuted by tau; d = 1 is preserved and rotated.
AnnulusCase classify_annulus(long n0, long m);
// Discs carrying k branch points: two points give the inverting case for m = 2 only.
AnnulusCase classify_disc(long points_in_disc, long m);

struct GeometryReport {
  BranchLocus locus;
  std::vector<ResidueAnnulus> annuli;
  long p1_branch_count = 0;  // finite points plus infinity when branched
  long orbit_count = 0;
  long orbit_cap = 0;
};

GeometryReport analyze_geometry(const SuperellipticCurve& curve, const PadicContext& ctx);
// One tau-orbit per P^1 annulus; checked against floor((4g-4)/m) + 1.
long annulus_orbit_count(const SuperellipticCurve& curve, const PadicContext& ctx);

}  // namespace superchab
