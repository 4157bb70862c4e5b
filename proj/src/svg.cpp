#include "tt/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace tt {

namespace {

constexpr double kWidth = 1000.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 40.0;
constexpr double kLegendWidth = 230.0;

class Canvas {
 public:
  explicit Canvas(const Scene& s) {
    const double min_x = s.C1.x - s.R1;
    const double max_x = std::max(s.K.x, s.C2.x + s.R2);
    const double min_y = -s.R1;
    const double max_y = s.R1;
    const double avail_w = kWidth - kLegendWidth - 2 * kMargin;
    const double avail_h = kHeight - 2 * kMargin;
    scale_ = std::min(avail_w / (max_x - min_x), avail_h / (max_y - min_y));
    origin_x_ = kMargin + (avail_w - scale_ * (max_x - min_x)) / 2 - scale_ * min_x;
    origin_y_ = kMargin + (avail_h - scale_ * (max_y - min_y)) / 2 + scale_ * max_y;
    out_ << std::fixed << std::setprecision(2);
  }

  double x(const Point& p) const { return origin_x_ + scale_ * p.x; }
  double y(const Point& p) const { return origin_y_ - scale_ * p.y; }

  void circle(const Point& c, double r, const char* stroke) {
    out_ << "  <circle cx=\"" << x(c) << "\" cy=\"" << y(c) << "\" r=\"" << scale_ * r
         << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"/>\n";
  }

  void segment(const Point& a, const Point& b, const char* stroke, bool dashed = false) {
    out_ << "  <line x1=\"" << x(a) << "\" y1=\"" << y(a) << "\" x2=\"" << x(b) << "\" y2=\"" << y(b)
         << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"" << (dashed ? " stroke-dasharray=\"4 3\"" : "")
         << "/>\n";
  }

  void point(const std::string& label, const Point& p) {
    out_ << "  <circle cx=\"" << x(p) << "\" cy=\"" << y(p) << "\" r=\"2.5\" fill=\"black\"/>\n";
    out_ << "  <text x=\"" << x(p) + 4 << "\" y=\"" << y(p) - 5 << "\" font-size=\"13\">" << label << "</text>\n";
  }

  void text(double tx, double ty, const std::string& s, int size = 12) {
    out_ << "  <text x=\"" << tx << "\" y=\"" << ty << "\" font-size=\"" << size << "\">" << s << "</text>\n";
  }

  std::string str() const { return out_.str(); }

 private:
  double scale_ = 1.0;
  double origin_x_ = 0.0;
  double origin_y_ = 0.0;
  std::ostringstream out_;
};

}  // namespace

std::string render_svg(const Scene& s, const FullConfig* config) {
  Canvas canvas(s);
  canvas.circle(s.C1, s.R1, "#1f4e79");
  canvas.circle(s.C2, s.R2, "#7a1f1f");
  canvas.segment(s.C1, s.K, "gray");
  canvas.segment(s.T1, s.K, "gray", true);
  canvas.segment(s.T1, s.T2, "black");
  canvas.segment(s.C1, s.T1, "#1f4e79");
  canvas.segment(s.C2, s.T2, "#7a1f1f");
  canvas.segment(s.C1, s.M, "#1f4e79", true);
  canvas.segment(s.C2, s.M, "#7a1f1f", true);
  canvas.segment(s.T1, s.I, "black", true);
  canvas.segment(s.I, s.T2, "black", true);
  canvas.segment(s.I, s.M, "black");
  canvas.segment(s.C2, s.F, "gray", true);
  for (const auto& [name, p] : s.points()) canvas.point(name, p);

  const double legend_x = kWidth - kLegendWidth;
  double legend_y = kMargin;
  if (config != nullptr) {
    canvas.text(legend_x, legend_y, "m=" + config->params.m.get_str() + " n=" + config->params.n.get_str() +
                                        " t=" + config->t.get_str(), 14);
    legend_y += 20;
    canvas.text(legend_x, legend_y, "R1 = " + config->R1.get_str());
    legend_y += 16;
    canvas.text(legend_x, legend_y, "R2 = " + config->R2.get_str());
    for (std::size_t i = 0; i < IntegerLengths::kNames.size(); ++i) {
      legend_y += 16;
      canvas.text(legend_x, legend_y,
                  std::string(IntegerLengths::kNames[i]) + " = " + config->lengths.values[i].get_str());
    }
  } else {
    std::ostringstream radii;
    radii << "R1 = " << s.R1 << ", R2 = " << s.R2;
    canvas.text(legend_x, legend_y, radii.str(), 14);
  }

  std::ostringstream doc;
  doc << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << canvas.str() << "</svg>\n";
  return doc.str();
}

}  // namespace tt
