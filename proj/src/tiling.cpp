#include "affina/tiling.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace affina {

namespace {

double cross(const Vector& o, const Vector& a, const Vector& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

bool segments_intersect(const Vector& a, const Vector& b, const Vector& c,
                        const Vector& d) {
  const double d1 = cross(c, d, a);
  const double d2 = cross(c, d, b);
  const double d3 = cross(a, b, c);
  const double d4 = cross(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

bool polygon_is_simple(const std::vector<Vector>& polygon) {
  const size_t n = polygon.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      // Adjacent edges share a vertex and are skipped.
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_intersect(polygon[i], polygon[(i + 1) % n], polygon[j],
                             polygon[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

void validate_job(const TilingJob& job) {
  if (job.group.dimension() != 2) {
    throw InvalidInput("tiling: group must be two-dimensional");
  }
  if (job.polygon.size() < 3) {
    throw InvalidInput("tiling: polygon needs at least three vertices");
  }
  for (const Vector& v : job.polygon) {
    if (v.size() != 2) {
      throw DimensionMismatch("tiling: polygon vertices must be planar");
    }
  }
  if (!polygon_is_simple(job.polygon)) {
    throw InvalidInput("tiling: polygon is self-intersecting");
  }
  if (job.max_word_length < 0) {
    throw InvalidInput("tiling: max_word_length must be >= 0");
  }
  if (job.viewport_min.size() != 2 || job.viewport_max.size() != 2 ||
      !(job.viewport_max(0) > job.viewport_min(0)) ||
      !(job.viewport_max(1) > job.viewport_min(1))) {
    throw InvalidInput("tiling: viewport must have positive extent");
  }
}

using Fingerprint = std::vector<int64_t>;

Fingerprint fingerprint_of(const AffineMap& map) {
  Fingerprint fp;
  fp.reserve(static_cast<size_t>(map.dim() * (map.dim() + 1)));
  for (int i = 0; i < map.dim(); ++i) {
    for (int j = 0; j < map.dim(); ++j) {
      fp.push_back(std::llround(map.linear()(i, j) / tol::fingerprint));
    }
  }
  for (int i = 0; i < map.dim(); ++i) {
    fp.push_back(std::llround(map.translation()(i) / tol::fingerprint));
  }
  return fp;
}

bool bbox_meets_viewport(const std::vector<Vector>& vertices,
                         const Vector& lo, const Vector& hi) {
  double min_x = vertices[0](0), max_x = vertices[0](0);
  double min_y = vertices[0](1), max_y = vertices[0](1);
  for (const Vector& v : vertices) {
    min_x = std::min(min_x, v(0));
    max_x = std::max(max_x, v(0));
    min_y = std::min(min_y, v(1));
    max_y = std::max(max_y, v(1));
  }
  return max_x >= lo(0) && min_x <= hi(0) && max_y >= lo(1) && min_y <= hi(1);
}

std::string edge_label(size_t index) {
  static const std::array<const char*, 8> names = {
      "α", "β", "γ", "δ",
      "ε", "ζ", "η", "θ"};
  if (index < names.size()) return names[index];
  return "e" + std::to_string(index);
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace

TilingJob make_tiling_job(std::vector<Vector> polygon,
                          GroupPresentation group, int max_word_length) {
  TilingJob job{std::move(polygon), std::move(group), max_word_length,
                Vector(2), Vector(2)};
  job.viewport_min << -1.0, -1.0;
  job.viewport_max << 5.0, 3.0;
  return job;
}

std::vector<Word> enumerate_reduced_words(int generator_count,
                                          int max_length) {
  std::vector<Word> words;
  words.push_back(Word::empty());
  std::vector<Word> frontier = {Word::empty()};
  for (int length = 1; length <= max_length; ++length) {
    std::vector<Word> next;
    for (const Word& word : frontier) {
      for (int gen = 0; gen < generator_count; ++gen) {
        for (int sign : {1, -1}) {
          if (!word.letters.empty()) {
            const auto& [last_gen, last_sign] = word.letters.back();
            if (last_gen == gen && last_sign == -sign) continue;
          }
          Word extended = word;
          extended.letters.emplace_back(gen, sign);
          next.push_back(std::move(extended));
        }
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return words;
}

std::vector<TileCopy> enumerate_tiles(const TilingJob& job) {
  validate_job(job);
  std::map<Fingerprint, bool> seen;
  std::vector<TileCopy> tiles;
  for (const Word& word :
       enumerate_reduced_words(job.group.generator_count(),
                               job.max_word_length)) {
    const AffineMap image = evaluate_word(job.group, word);
    auto [it, inserted] = seen.try_emplace(fingerprint_of(image), true);
    if (!inserted) continue;
    std::vector<Vector> vertices;
    vertices.reserve(job.polygon.size());
    for (const Vector& v : job.polygon) {
      vertices.push_back(apply(image, v));
    }
    if (!bbox_meets_viewport(vertices, job.viewport_min, job.viewport_max)) {
      continue;
    }
    tiles.push_back(
        TileCopy{word, word_to_string(job.group, word), std::move(vertices)});
  }
  return tiles;
}

std::string render_tiling(const TilingJob& job) {
  const std::vector<TileCopy> tiles = enumerate_tiles(job);
  const double scale = 160.0;
  const double width = (job.viewport_max(0) - job.viewport_min(0)) * scale;
  const double height = (job.viewport_max(1) - job.viewport_min(1)) * scale;
  const auto to_svg_x = [&](double x) {
    return (x - job.viewport_min(0)) * scale;
  };
  const auto to_svg_y = [&](double y) {
    return (job.viewport_max(1) - y) * scale;
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << format_number(width) << "\" height=\""
      << format_number(height) << "\">\n";
  for (const TileCopy& tile : tiles) {
    const bool identity = tile.word.letters.empty();
    out << "  <path d=\"";
    for (size_t i = 0; i < tile.vertices.size(); ++i) {
      out << (i == 0 ? "M " : "L ")
          << format_number(to_svg_x(tile.vertices[i](0))) << " "
          << format_number(to_svg_y(tile.vertices[i](1))) << " ";
    }
    out << "Z\" fill=\"none\" stroke=\""
        << (identity ? "#c02020" : "#202020") << "\" stroke-width=\""
        << (identity ? "2" : "1") << "\" data-word=\"" << tile.label
        << "\"/>\n";
    if (identity) {
      const size_t n = tile.vertices.size();
      for (size_t i = 0; i < n; ++i) {
        const Vector& a = tile.vertices[i];
        const Vector& b = tile.vertices[(i + 1) % n];
        out << "  <text x=\"" << format_number(to_svg_x((a(0) + b(0)) / 2))
            << "\" y=\"" << format_number(to_svg_y((a(1) + b(1)) / 2))
            << "\" font-size=\"18\" fill=\"#c02020\">" << edge_label(i)
            << "</text>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace affina
