#include "coxlen/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <deque>
#include <memory>
#include <optional>
#include <unordered_set>

#include "coxlen/errors.hpp"
#include "coxlen/genfun.hpp"
#include "coxlen/reflen.hpp"

namespace coxlen {

namespace {

using Point = std::array<double, 2>;

constexpr std::array<const char*, 5> kGrays{"#1a1a1a", "#4d4d4d", "#808080", "#b3b3b3", "#e6e6e6"};
constexpr std::array<const char*, 8> kClassColors{"#1f4e9c", "#6f94d0", "#c6d7f0", "#e69f00",
                                                  "#009e73", "#cc79a7", "#f0e442", "#d55e00"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", std::abs(x) < 5e-5 ? 0.0 : x);
  return buf;
}

class Canvas {
 public:
  Canvas(const RootSystem& rs, double half, double scale) : half_(half), scale_(scale) {
    if (rs.ambient_dim() == 2) {
      basis_ = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
    } else {
      const double a = 1.0 / std::sqrt(2.0);
      const double b = 1.0 / std::sqrt(6.0);
      basis_ = {{{a, -a, 0.0}, {b, b, -2.0 * b}}};
    }
  }

  Point project(const Vector& x) const {
    Point p{0.0, 0.0};
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t i = 0; i < x.size(); ++i) p[r] += basis_[r][i] * x[i].get_d();
    }
    return p;
  }

  bool inside(const Point& p) const { return std::abs(p[0]) <= half_ + 1e-9 && std::abs(p[1]) <= half_ + 1e-9; }
  double half() const { return half_; }

  std::string x(double v) const { return fmt((v + half_) * scale_); }
  std::string y(double v) const { return fmt((half_ - v) * scale_); }

  std::string polygon(const std::vector<Point>& pts, const char* fill) const {
    std::string s = "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) s += ' ';
      s += x(pts[i][0]) + "," + y(pts[i][1]);
    }
    return s + "\" fill=\"" + fill + "\" stroke=\"" + fill + "\" stroke-width=\"0.5\"/>\n";
  }

  // The segment of {p : <p, a> = level} inside the box, if any.
  std::optional<std::array<Point, 2>> clip(const Point& a, double level) const {
    const double nn = a[0] * a[0] + a[1] * a[1];
    const Point p0{a[0] * level / nn, a[1] * level / nn};
    const Point d{-a[1], a[0]};
    double lo = -1e18;
    double hi = 1e18;
    for (int k = 0; k < 2; ++k) {
      if (std::abs(d[k]) < 1e-12) {
        if (std::abs(p0[k]) > half_) return std::nullopt;
        continue;
      }
      double t1 = (-half_ - p0[k]) / d[k];
      double t2 = (half_ - p0[k]) / d[k];
      if (t1 > t2) std::swap(t1, t2);
      lo = std::max(lo, t1);
      hi = std::min(hi, t2);
    }
    if (hi - lo < 1e-9) return std::nullopt;
    return std::array<Point, 2>{Point{p0[0] + lo * d[0], p0[1] + lo * d[1]},
                                Point{p0[0] + hi * d[0], p0[1] + hi * d[1]}};
  }

 private:
  double half_;
  double scale_;
  std::array<std::array<double, 3>, 2> basis_{};
};

std::vector<Vector> fundamental_alcove(const RootSystem& rs) {
  const std::size_t n = rs.ambient_dim();
  const Vector& theta = rs.root(rs.highest_root());
  const auto& simple = rs.simple_roots();
  std::vector<std::pair<std::vector<Vector>, Vector>> systems{
      {{simple[0], simple[1]}, {Rational(0), Rational(0)}},
      {{simple[0], theta}, {Rational(0), Rational(1)}},
      {{simple[1], theta}, {Rational(0), Rational(1)}},
  };
  std::vector<Vector> vertices;
  for (auto& [rows, rhs] : systems) {
    for (const auto& nv : rs.normals()) {
      rows.push_back(nv);
      rhs.emplace_back(0);
    }
    auto v = solve(Matrix::from_rows(rows, n), rhs);
    if (!v) throw InternalError("degenerate fundamental alcove");
    vertices.push_back(*v);
  }
  return vertices;
}

std::vector<Point> alcove_points(const Canvas& c, const AffineElement& w, const std::vector<Vector>& alcove) {
  std::vector<Point> pts;
  for (const auto& v : alcove) pts.push_back(c.project(w.apply(v)));
  return pts;
}

double norm(const Point& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1]); }

}  // namespace

SvgMode parse_svg_mode(const std::string& text) {
  if (text == "alcove-length") return SvgMode::AlcoveLength;
  if (text == "translate-class") return SvgMode::TranslateClass;
  throw ParseError("unknown render mode '" + text + "' (expected alcove-length or translate-class)");
}

std::string render_svg(const RootSystem& rs, const SvgOptions& options) {
  const auto& spec = rs.spec();
  const bool ok = spec.rank == 2 && (spec.family == Family::A || spec.family == Family::B ||
                                     spec.family == Family::C || spec.family == Family::G);
  if (!ok) throw UnsupportedError("rendering supports A2, B2, C2 and G2, not " + rs.name());
  if (options.radius < 0) throw ParseError("radius must be non-negative");

  const std::size_t n = rs.ambient_dim();
  const std::vector<Vector> alcove = fundamental_alcove(rs);
  double longest = 0.0;
  for (std::size_t i = 0; i < rs.size(); ++i) longest = std::max(longest, std::sqrt(dot(rs.coroot(i), rs.coroot(i)).get_d()));

  std::string body;
  std::unique_ptr<Canvas> canvas;

  if (options.mode == SvgMode::AlcoveLength) {
    canvas = std::make_unique<Canvas>(rs, std::max(1, options.radius) * longest, options.scale);
    DimensionCalculator calc(rs);
    std::vector<AffineElement> gens;
    for (const auto& a : rs.simple_roots()) gens.push_back(reflection_to_element({a, 0}));
    gens.push_back(reflection_to_element({rs.root(rs.highest_root()), 1}));

    std::deque<AffineElement> queue{AffineElement::identity(n)};
    std::unordered_set<std::string> seen{queue.front().key()};
    std::vector<std::pair<AffineElement, std::vector<Point>>> kept;
    while (!queue.empty()) {
      AffineElement w = std::move(queue.front());
      queue.pop_front();
      auto pts = alcove_points(*canvas, w, alcove);
      if (!std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return canvas->inside(p); })) continue;
      for (const auto& g : gens) {
        AffineElement next = w * g;
        if (seen.insert(next.key()).second) queue.push_back(std::move(next));
      }
      kept.emplace_back(std::move(w), std::move(pts));
    }
    for (const auto& [w, pts] : kept) {
      const int len = calc.report(w).length;
      body += canvas->polygon(pts, kGrays[static_cast<std::size_t>(std::min(len, 4))]);
    }
  } else {
    GenfunEngine engine(rs);
    auto classes = classify_coroots(engine, options.radius);
    double extent = 0.0;
    double reach = 0.0;
    auto probe = std::make_unique<Canvas>(rs, 1.0, options.scale);
    for (const auto& v : alcove) reach = std::max(reach, norm(probe->project(v)));
    for (const auto& cls : classes) {
      for (const auto& p : cls.points) {
        Point q = probe->project(rs.from_coroot_coordinates(p));
        extent = std::max({extent, std::abs(q[0]), std::abs(q[1])});
      }
    }
    canvas = std::make_unique<Canvas>(rs, extent + reach, options.scale);
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const char* color = kClassColors[k % kClassColors.size()];
      for (const auto& p : classes[k].points) {
        const Vector lambda = rs.from_coroot_coordinates(p);
        for (const auto& u : engine.group().elements) {
          body += canvas->polygon(alcove_points(*canvas, {u, lambda}, alcove), color);
        }
      }
    }
  }

  // Reflecting hyperplanes <x, alpha> = j crossing the box.
  const double half = canvas->half();
  for (auto i : rs.positive_roots()) {
    const Point a = canvas->project(rs.root(i));
    const long reach = static_cast<long>(std::ceil((std::abs(a[0]) + std::abs(a[1])) * half));
    for (long j = -reach; j <= reach; ++j) {
      auto seg = canvas->clip(a, static_cast<double>(j));
      if (!seg) continue;
      body += "<line x1=\"" + canvas->x((*seg)[0][0]) + "\" y1=\"" + canvas->y((*seg)[0][1]) + "\" x2=\"" +
              canvas->x((*seg)[1][0]) + "\" y2=\"" + canvas->y((*seg)[1][1]) +
              "\" stroke=\"#5a5a5a\" stroke-width=\"0.75\"/>\n";
    }
  }

  // Coroot lattice points, i.e. the alcoves' translation vertices.
  const auto simple_coroots = rs.simple_coroots();
  double step = 1e18;
  for (const auto& c : simple_coroots) step = std::min(step, norm(canvas->project(c)));
  const long m = static_cast<long>(std::ceil(4.0 * half / step)) + 1;
  for (long a = -m; a <= m; ++a) {
    for (long b = -m; b <= m; ++b) {
      Point p = canvas->project(rs.from_coroot_coordinates({a, b}));
      if (!canvas->inside(p)) continue;
      body += "<circle cx=\"" + canvas->x(p[0]) + "\" cy=\"" + canvas->y(p[1]) +
              "\" r=\"3.0000\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }
  }

  const std::string size = fmt(2.0 * half * options.scale);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<title>" + rs.name() + (options.mode == SvgMode::AlcoveLength ? " alcoves" : " translates") + "</title>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"#ffffff\"/>\n";
  out += body;
  out += "</svg>\n";
  return out;
}

}  // namespace coxlen
