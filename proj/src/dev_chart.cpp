#include "affina/dev_chart.hpp"

#include <algorithm>
#include <sstream>

namespace affina {

ChartComplex::ChartComplex(int dimension, std::vector<std::string> charts)
    : dimension_(dimension), charts_(std::move(charts)) {
  if (dimension_ < 1) {
    throw InvalidInput("ChartComplex: dimension must be >= 1");
  }
  if (charts_.empty()) {
    throw InvalidInput("ChartComplex: need at least one chart");
  }
  for (size_t i = 0; i < charts_.size(); ++i) {
    for (size_t j = i + 1; j < charts_.size(); ++j) {
      if (charts_[i] == charts_[j]) {
        throw InvalidInput("ChartComplex: duplicate chart id '" + charts_[i] +
                           "'");
      }
    }
  }
}

bool ChartComplex::has_chart(const std::string& id) const {
  return std::find(charts_.begin(), charts_.end(), id) != charts_.end();
}

void ChartComplex::add_transition(const std::string& from,
                                  const std::string& to,
                                  const AffineMap& map) {
  if (!has_chart(from) || !has_chart(to)) {
    throw InvalidInput("add_transition: unknown chart id");
  }
  if (map.dim() != dimension_) {
    throw DimensionMismatch("add_transition: map dimension mismatch");
  }
  if (from == to) {
    if (!map.is_identity()) {
      throw InvalidInput("add_transition: self-transition must be identity");
    }
    return;
  }
  const AffineMap reverse = inverse(map);
  auto forward_it = transitions_.find({from, to});
  if (forward_it != transitions_.end() &&
      !forward_it->second.approx_equal(map)) {
    throw InvalidInput("add_transition: conflicting transition " + from +
                       " -> " + to);
  }
  auto reverse_it = transitions_.find({to, from});
  if (reverse_it != transitions_.end() &&
      !reverse_it->second.approx_equal(reverse)) {
    throw InvalidInput("add_transition: reverse edge " + to + " -> " + from +
                       " is not the inverse");
  }
  transitions_.insert_or_assign({from, to}, map);
  transitions_.insert_or_assign({to, from}, reverse);
}

bool ChartComplex::has_transition(const std::string& from,
                                  const std::string& to) const {
  return transitions_.count({from, to}) > 0;
}

const AffineMap& ChartComplex::transition(const std::string& from,
                                          const std::string& to) const {
  auto it = transitions_.find({from, to});
  if (it == transitions_.end()) {
    throw MissingTransition("no transition " + from + " -> " + to);
  }
  return it->second;
}

DevelopedPath develop(const ChartComplex& complex, const DevPath& path) {
  if (path.segments.empty()) {
    throw InvalidInput("develop: empty path");
  }
  for (const PathSegment& segment : path.segments) {
    if (!complex.has_chart(segment.chart)) {
      throw InvalidInput("develop: unknown chart '" + segment.chart + "'");
    }
    if (segment.points.empty()) {
      throw InvalidInput("develop: empty polyline in chart '" +
                         segment.chart + "'");
    }
    for (const Vector& p : segment.points) {
      if (static_cast<int>(p.size()) != complex.dimension()) {
        throw DimensionMismatch("develop: point dimension mismatch");
      }
    }
  }

  AffineMap accumulated = AffineMap::identity(complex.dimension());
  std::vector<Vector> polyline;
  for (const Vector& p : path.segments.front().points) {
    polyline.push_back(p);
  }
  for (size_t i = 1; i < path.segments.size(); ++i) {
    const PathSegment& prev = path.segments[i - 1];
    const PathSegment& curr = path.segments[i];
    const AffineMap step =
        prev.chart == curr.chart
            ? AffineMap::identity(complex.dimension())
            : complex.transition(prev.chart, curr.chart);
    const double gap =
        (apply(step, curr.points.front()) - prev.points.back()).norm();
    if (gap > tol::seam) {
      std::ostringstream msg;
      msg << "seam mismatch entering segment " << i << " (gap " << gap << ")";
      throw SeamMismatch(msg.str(), static_cast<int>(i), gap);
    }
    accumulated = compose(accumulated, step);
    for (const Vector& p : curr.points) {
      polyline.push_back(apply(accumulated, p));
    }
  }
  Vector terminal = polyline.back();
  return DevelopedPath{std::move(polyline), std::move(terminal),
                       std::move(accumulated)};
}

AffineMap loop_holonomy(const ChartComplex& complex, const DevPath& loop) {
  if (loop.segments.empty()) {
    throw InvalidInput("loop_holonomy: empty path");
  }
  if (loop.segments.front().chart != loop.segments.back().chart) {
    throw NotALoop("loop_holonomy: path starts in '" +
                   loop.segments.front().chart + "' but ends in '" +
                   loop.segments.back().chart + "'");
  }
  return develop(complex, loop).accumulated;
}

DevPath concatenate(const DevPath& first, const DevPath& second) {
  if (first.segments.empty() || second.segments.empty()) {
    throw InvalidInput("concatenate: empty path");
  }
  DevPath joined = first;
  joined.segments.insert(joined.segments.end(), second.segments.begin(),
                         second.segments.end());
  return joined;
}

EquivarianceReport equivariance_check(const ChartComplex& complex,
                                      const DevPath& loop,
                                      const DevPath& path) {
  const AffineMap holonomy = loop_holonomy(complex, loop);
  const DevelopedPath direct = develop(complex, path);
  const DevelopedPath via_loop = develop(complex, concatenate(loop, path));

  // The developed image of `path` is the tail of the concatenation; it
  // must match applying the holonomy to the directly developed image.
  EquivarianceReport report;
  const size_t tail = direct.polyline.size();
  const size_t offset = via_loop.polyline.size() - tail;
  for (size_t i = 0; i < tail; ++i) {
    const Vector expected = apply(holonomy, direct.polyline[i]);
    const double gap = (via_loop.polyline[offset + i] - expected).norm();
    report.max_gap = std::max(report.max_gap, gap);
  }
  const double terminal_gap =
      (via_loop.terminal - apply(holonomy, direct.terminal)).norm();
  report.max_gap = std::max(report.max_gap, terminal_gap);
  report.ok = report.max_gap <=
              tol::entry * std::max(1.0, via_loop.terminal.norm());
  return report;
}

}  // namespace affina
