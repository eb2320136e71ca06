#pragma once

// SVG pictures of rank-2 affine arrangements: alcoves shaded by reflection
// length, or the translates t_lambda * P coloured by local generating function.

#include <string>

#include "coxlen/rootsys.hpp"

namespace coxlen {

enum class SvgMode { AlcoveLength, TranslateClass };

struct SvgOptions {
  SvgMode mode = SvgMode::AlcoveLength;
  int radius = 2;
  double scale = 60.0;  // pixels per unit length
};

SvgMode parse_svg_mode(const std::string& text);

/// Throws UnsupportedError unless the type is A2, B2, C2 or G2.
std::string render_svg(const RootSystem& rs, const SvgOptions& options = {});

}  // namespace coxlen
