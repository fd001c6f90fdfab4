#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fatsep/instance.hpp"
#include "fatsep/separator.hpp"

namespace fatsep {

struct SvgOverlay {
  /// Colours objects by class and draws the box R (and its base box).
  const SeparatorResult* separator = nullptr;
  /// Objects drawn filled.
  std::vector<int> witness_ids;
  /// Piercing points, drawn as small dots.
  std::vector<Point> points;
};

/// Planar rendering. Every object is one <circle> or <rect> element with
/// class "obj" plus "inside", "outside" or "boundary" when a separator is
/// given and "witness" when filled. Throws unless the instance is planar.
std::string render_svg(const Instance& inst, const SvgOverlay& overlay = {});
void render_svg(const Instance& inst, const SvgOverlay& overlay, const std::filesystem::path& path);

}  // namespace fatsep
