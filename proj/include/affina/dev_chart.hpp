#pragma once

#include <map>
#include <string>
#include <vector>

#include "affina/affine.hpp"

namespace affina {

/// A finite atlas graph: chart labels plus one affine transition per
/// directed edge. The map stored under (i, j) re-expresses chart-j
/// coordinates in chart i, so g_{j,i} is always inverse(g_{i,j}).
class ChartComplex {
 public:
  ChartComplex(int dimension, std::vector<std::string> charts);

  /// Registers g_{from,to} and its inverse on the reverse edge. If the
  /// reverse edge already exists it must agree with the inverse to
  /// tolerance.
  void add_transition(const std::string& from, const std::string& to,
                      const AffineMap& map);

  int dimension() const { return dimension_; }
  const std::vector<std::string>& charts() const { return charts_; }
  bool has_chart(const std::string& id) const;

  /// g_{from,to}; throws MissingTransition if the edge is absent.
  const AffineMap& transition(const std::string& from,
                              const std::string& to) const;
  bool has_transition(const std::string& from, const std::string& to) const;

  const std::map<std::pair<std::string, std::string>, AffineMap>&
  transitions() const {
    return transitions_;
  }

 private:
  int dimension_;
  std::vector<std::string> charts_;
  std::map<std::pair<std::string, std::string>, AffineMap> transitions_;
};

struct PathSegment {
  std::string chart;
  std::vector<Vector> points;  // polyline in that chart's coordinates
};

/// A path through the atlas as per-chart polylines. Consecutive segments
/// must be joined by a transition and agree at the seam to tol::seam.
struct DevPath {
  std::vector<PathSegment> segments;
};

struct DevelopedPath {
  std::vector<Vector> polyline;  // model-space image of the whole path
  Vector terminal;
  AffineMap accumulated;  // product g_{0,1} ... g_{k-1,k}
};

/// Analytic continuation: segment i is emitted through the prefix product
/// of transitions. Validates seams; throws SeamMismatch with the segment
/// index and gap norm.
DevelopedPath develop(const ChartComplex& complex, const DevPath& path);

/// Accumulated transition product of a loop (first chart == last chart).
AffineMap loop_holonomy(const ChartComplex& complex, const DevPath& loop);

/// Joins two paths: `first` must end in the chart where `second` begins
/// and their endpoints must agree to tol::seam.
DevPath concatenate(const DevPath& first, const DevPath& second);

struct EquivarianceReport {
  bool ok = true;
  double max_gap = 0.0;
};

/// Checks develop(loop . path).terminal == apply(loop_holonomy(loop),
/// develop(path).terminal), and the same identity pointwise along the
/// developed image of `path`.
EquivarianceReport equivariance_check(const ChartComplex& complex,
                                      const DevPath& loop,
                                      const DevPath& path);

}  // namespace affina
