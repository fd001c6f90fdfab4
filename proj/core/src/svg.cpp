#include "fatsep/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "fatsep/error.hpp"

namespace fatsep {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

// compact fixed-point output keeps files small
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct View {
  double lo[2] = {0.0, 0.0};
  double scale = 1.0;
  double height = kCanvas;

  double x(double v) const { return kMargin + (v - lo[0]) * scale; }
  double y(double v) const { return height - kMargin - (v - lo[1]) * scale; }
};

const char* colour(const std::string& cls) {
  if (cls == "inside") return "#1f77b4";
  if (cls == "outside") return "#2ca02c";
  if (cls == "boundary") return "#d62728";
  return "#444444";
}

}  // namespace

std::string render_svg(const Instance& inst, const SvgOverlay& overlay) {
  if (inst.dim != 2) throw Error("SVG rendering needs a planar instance");
  double lo[2] = {0.0, 0.0}, hi[2] = {1.0, 1.0};
  bool first = true;
  auto grow = [&](const BoxRegion& b) {
    for (int i = 0; i < 2; ++i) {
      lo[i] = first ? b.low()[i] : std::min(lo[i], b.low()[i]);
      hi[i] = first ? b.high()[i] : std::max(hi[i], b.high()[i]);
    }
    first = false;
  };
  for (const auto& o : inst.objects) grow(bounding_region(o));
  if (overlay.separator) grow(overlay.separator->box);

  View view;
  view.lo[0] = lo[0];
  view.lo[1] = lo[1];
  const double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1e-12});
  view.scale = (kCanvas - 2 * kMargin) / span;
  view.height = (hi[1] - lo[1]) * view.scale + 2 * kMargin;
  const double width = (hi[0] - lo[0]) * view.scale + 2 * kMargin;

  std::vector<std::string> cls(inst.size());
  if (overlay.separator) {
    for (int id : overlay.separator->inside_ids) cls.at(static_cast<std::size_t>(id)) = "inside";
    for (int id : overlay.separator->outside_ids) cls.at(static_cast<std::size_t>(id)) = "outside";
    for (int id : overlay.separator->boundary_ids) cls.at(static_cast<std::size_t>(id)) = "boundary";
  }
  const std::set<int> filled(overlay.witness_ids.begin(), overlay.witness_ids.end());

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(view.height)
     << "\" viewBox=\"0 0 " << num(width) << ' ' << num(view.height) << "\">\n";
  os << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(view.height)
     << "\" fill=\"white\" stroke=\"black\"/>\n";
  for (const auto& o : inst.objects) {
    const auto& c = cls[static_cast<std::size_t>(o.id)];
    const bool fill = filled.count(o.id) > 0;
    std::string attrs = "class=\"obj" + (c.empty() ? std::string() : " " + c) + (fill ? " witness" : "") +
                        "\" stroke=\"" + colour(c) + "\" fill=\"" + (fill ? colour(c) : "none") + "\"" +
                        (fill ? " fill-opacity=\"0.4\"" : "");
    if (const auto* b = std::get_if<Ball>(&o.shape)) {
      os << "<circle " << attrs << " cx=\"" << num(view.x(b->center[0])) << "\" cy=\"" << num(view.y(b->center[1]))
         << "\" r=\"" << num(b->radius * view.scale) << "\"/>\n";
    } else {
      const auto& box = std::get<AxisBox>(o.shape);
      os << "<rect " << attrs << " x=\"" << num(view.x(box.low[0])) << "\" y=\"" << num(view.y(box.high[1]))
         << "\" width=\"" << num((box.high[0] - box.low[0]) * view.scale) << "\" height=\""
         << num((box.high[1] - box.low[1]) * view.scale) << "\"/>\n";
    }
  }
  if (overlay.separator) {
    auto region = [&](const BoxRegion& b, const char* name, const char* dash) {
      os << "<rect class=\"" << name << "\" x=\"" << num(view.x(b.low()[0])) << "\" y=\"" << num(view.y(b.high()[1]))
         << "\" width=\"" << num(b.side(0) * view.scale) << "\" height=\"" << num(b.side(1) * view.scale)
         << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"" << dash << "/>\n";
    };
    region(overlay.separator->base_box, "base-box", " stroke-dasharray=\"4 3\"");
    region(overlay.separator->box, "separator", "");
  }
  for (const auto& p : overlay.points) {
    os << "<circle class=\"pierce\" cx=\"" << num(view.x(p[0])) << "\" cy=\"" << num(view.y(p[1]))
       << "\" r=\"3\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void render_svg(const Instance& inst, const SvgOverlay& overlay, const std::filesystem::path& path) {
  const auto text = render_svg(inst, overlay);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace fatsep
