#pragma once

#include <string>
#include <vector>

#include "affina/affine.hpp"

namespace affina {

/// Orbit-of-a-fundamental-domain rendering job. The polygon must be simple
/// with at least three vertices; the group must be two-dimensional.
struct TilingJob {
  std::vector<Vector> polygon;  // counterclockwise vertices
  GroupPresentation group;
  int max_word_length = 4;
  Vector viewport_min;  // defaults to (-1,-1)
  Vector viewport_max;  // defaults to (5,3)
};

TilingJob make_tiling_job(std::vector<Vector> polygon, GroupPresentation group,
                          int max_word_length);

struct TileCopy {
  Word word;
  std::string label;
  std::vector<Vector> vertices;
};

/// Reduced words over the generators, shortest first and lexicographic
/// within each length (letter order: g0, g0^-1, g1, g1^-1, ...).
std::vector<Word> enumerate_reduced_words(int generator_count, int max_length);

/// Evaluates every reduced word up to the job's length, deduplicates maps
/// by a fingerprint of entries rounded to tol::fingerprint, transforms the
/// polygon and drops copies whose bounding box misses the viewport. The
/// identity copy, when it survives, is always first.
std::vector<TileCopy> enumerate_tiles(const TilingJob& job);

/// SVG 1.1 document with one path per tile copy; the identity copy is
/// highlighted and carries edge labels.
std::string render_tiling(const TilingJob& job);

}  // namespace affina
