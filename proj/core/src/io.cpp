#include "pfsim/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pfsim/config.hpp"
#include "pfsim/rng.hpp"

namespace pfsim {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Display-only vertical jitter for the impact panel.
constexpr std::uint64_t kJitterStream = 0x8000000000000000ull;

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << content;
  if (!out.good()) {
    throw std::runtime_error("write failed: " + path);
  }
}

std::string events_to_csv(const std::vector<DetectionEvent>& events,
                          const std::string& config_digest,
                          std::uint64_t seed, std::int64_t n_particles) {
  std::ostringstream out;
  out << "# pfsim config_digest=" << config_digest << " seed=" << seed
      << " n_particles=" << n_particles << "\n";
  out << "particle_id,slit_index,y_eps_m,theta_rad,y_det_m,x_det_m\n";
  for (const auto& ev : events) {
    out << ev.particle_id << ',' << ev.slit_index << ',' << g17(ev.y_eps)
        << ',' << g17(ev.theta) << ',' << g17(ev.y_det) << ','
        << g17(ev.x_det) << "\n";
  }
  return out.str();
}

ParsedEvents events_from_csv(const std::string& csv_text) {
  ParsedEvents parsed;
  std::istringstream in(csv_text);
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) {
    throw ConfigError("events csv: empty file");
  }
  ++line_no;
  {
    char digest[32];
    unsigned long long seed = 0;
    long long n = 0;
    if (std::sscanf(line.c_str(),
                    "# pfsim config_digest=%31s seed=%llu n_particles=%lld",
                    digest, &seed, &n) != 3) {
      throw ConfigError("events csv: bad provenance comment at line 1");
    }
    parsed.config_digest = digest;
    parsed.seed = seed;
    parsed.n_particles = n;
  }

  if (!std::getline(in, line) ||
      line != "particle_id,slit_index,y_eps_m,theta_rad,y_det_m,x_det_m") {
    throw ConfigError("events csv: bad header at line 2");
  }
  ++line_no;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    DetectionEvent ev{};
    long long id = 0;
    int slit = 0;
    if (std::sscanf(line.c_str(), "%lld,%d,%lf,%lf,%lf,%lf", &id, &slit,
                    &ev.y_eps, &ev.theta, &ev.y_det, &ev.x_det) != 6) {
      throw ConfigError("events csv: malformed row at line " +
                        std::to_string(line_no));
    }
    ev.particle_id = id;
    ev.slit_index = slit;
    ev.flight_scale = 0.0;  // not stored
    parsed.events.push_back(ev);
  }
  if (static_cast<std::int64_t>(parsed.events.size()) != parsed.n_particles) {
    throw ConfigError("events csv: row count does not match n_particles");
  }
  return parsed;
}

std::string summary_to_json(const RunSummary& summary) {
  nlohmann::ordered_json j;
  j["provenance"]["seed"] = summary.seed;
  j["provenance"]["config_digest"] = summary.config_digest;
  j["n_particles"] = summary.n_particles;
  if (summary.fringes.fringe_spacing) {
    j["fringe_spacing_m"] = *summary.fringes.fringe_spacing;
  } else {
    j["fringe_spacing_m"] = nullptr;
  }
  j["envelope_zero_positions_m"] = summary.fringes.envelope_zeros;
  j["analytic_peak_positions_m"] = summary.fringes.analytic_peaks;
  auto& chi = j["chi_square"];
  if (summary.gof.chi_square) {
    chi["statistic"] = *summary.gof.chi_square;
    chi["dof"] = summary.gof.dof;
    chi["critical_0p99"] = summary.gof.critical;
  } else {
    chi["statistic"] = nullptr;
    chi["dof"] = nullptr;
    chi["critical_0p99"] = nullptr;
  }
  switch (summary.gof.verdict) {
    case Verdict::kPass:
      chi["verdict"] = "pass";
      break;
    case Verdict::kFail:
      chi["verdict"] = "fail";
      break;
    case Verdict::kUnavailable:
      chi["verdict"] = "unavailable";
      break;
  }
  j["histogram"]["edges_m"] = summary.histogram.edges;
  j["histogram"]["counts"] = summary.histogram.counts;
  j["histogram"]["expected"] = summary.histogram.expected;
  return j.dump(2) + "\n";
}

namespace {

// Minimal line/bar/scatter plotting into a self-contained SVG.
class SvgCanvas {
 public:
  SvgCanvas(double x_min, double x_max, double y_min, double y_max,
            const std::string& x_label, const std::string& y_label)
      : x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
         << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
         << kHeight << "\">\n";
    out_ << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
         << "\" fill=\"white\"/>\n";
    // frame
    out_ << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\""
         << plot_w() << "\" height=\"" << plot_h()
         << "\" fill=\"none\" stroke=\"black\"/>\n";
    axes(x_label, y_label);
  }

  double px(double x) const {
    return kMarginL + (x - x_min_) / (x_max_ - x_min_) * plot_w();
  }
  double py(double y) const {
    return kMarginT + plot_h() - (y - y_min_) / (y_max_ - y_min_) * plot_h();
  }

  void bar(double x0, double x1, double y) {
    const double base = py(0.0 > y_min_ ? 0.0 : y_min_);
    const double top = py(y);
    out_ << "<rect x=\"" << g6(px(x0)) << "\" y=\"" << g6(top)
         << "\" width=\"" << g6(px(x1) - px(x0)) << "\" height=\""
         << g6(base - top) << "\" fill=\"#4477aa\" stroke=\"none\"/>\n";
  }

  void polyline_begin(const std::string& color) {
    out_ << "<polyline fill=\"none\" stroke=\"" << color
         << "\" stroke-width=\"1\" points=\"";
  }
  void polyline_point(double x, double y) {
    out_ << g6(px(x)) << ',' << g6(py(y)) << ' ';
  }
  void polyline_end() { out_ << "\"/>\n"; }

  void dot(double x, double y) {
    out_ << "<circle cx=\"" << g6(px(x)) << "\" cy=\"" << g6(py(y))
         << "\" r=\"1.2\" fill=\"black\"/>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  static constexpr int kWidth = 800;
  static constexpr int kHeight = 500;
  static constexpr int kMarginL = 70;
  static constexpr int kMarginR = 20;
  static constexpr int kMarginT = 20;
  static constexpr int kMarginB = 60;

  double plot_w() const { return kWidth - kMarginL - kMarginR; }
  double plot_h() const { return kHeight - kMarginT - kMarginB; }

  void axes(const std::string& x_label, const std::string& y_label) {
    for (int i = 0; i <= 4; ++i) {
      const double fx = x_min_ + (x_max_ - x_min_) * i / 4.0;
      const double gx = px(fx);
      out_ << "<line x1=\"" << g6(gx) << "\" y1=\"" << kMarginT + plot_h()
           << "\" x2=\"" << g6(gx) << "\" y2=\""
           << g6(kMarginT + plot_h() + 5) << "\" stroke=\"black\"/>\n";
      out_ << "<text x=\"" << g6(gx) << "\" y=\""
           << g6(kMarginT + plot_h() + 20)
           << "\" font-size=\"11\" text-anchor=\"middle\" "
              "font-family=\"sans-serif\">"
           << g6(fx) << "</text>\n";
      const double fy = y_min_ + (y_max_ - y_min_) * i / 4.0;
      const double gy = py(fy);
      out_ << "<line x1=\"" << kMarginL - 5 << "\" y1=\"" << g6(gy)
           << "\" x2=\"" << kMarginL << "\" y2=\"" << g6(gy)
           << "\" stroke=\"black\"/>\n";
      out_ << "<text x=\"" << kMarginL - 8 << "\" y=\"" << g6(gy + 4)
           << "\" font-size=\"11\" text-anchor=\"end\" "
              "font-family=\"sans-serif\">"
           << g6(fy) << "</text>\n";
    }
    out_ << "<text x=\"" << g6(kMarginL + plot_w() / 2) << "\" y=\""
         << kHeight - 15
         << "\" font-size=\"13\" text-anchor=\"middle\" "
            "font-family=\"sans-serif\">"
         << x_label << "</text>\n";
    out_ << "<text x=\"18\" y=\"" << g6(kMarginT + plot_h() / 2)
         << "\" font-size=\"13\" text-anchor=\"middle\" "
            "font-family=\"sans-serif\" transform=\"rotate(-90 18 "
         << g6(kMarginT + plot_h() / 2) << ")\">" << y_label << "</text>\n";
  }

  double x_min_, x_max_, y_min_, y_max_;
  std::ostringstream out_;
};

}  // namespace

std::string render_histogram_svg(const ScreenHistogram& histogram) {
  double y_max = 1.0;
  for (auto c : histogram.counts) {
    y_max = std::max(y_max, static_cast<double>(c));
  }
  for (double e : histogram.expected) {
    y_max = std::max(y_max, e);
  }
  SvgCanvas canvas(histogram.edges.front(), histogram.edges.back(), 0.0,
                   1.05 * y_max, "screen position y_det [m]", "hits");
  for (std::size_t j = 0; j < histogram.counts.size(); ++j) {
    canvas.bar(histogram.edges[j], histogram.edges[j + 1],
               static_cast<double>(histogram.counts[j]));
  }
  canvas.polyline_begin("#cc3311");
  for (std::size_t j = 0; j < histogram.expected.size(); ++j) {
    canvas.polyline_point(0.5 * (histogram.edges[j] + histogram.edges[j + 1]),
                          histogram.expected[j]);
  }
  canvas.polyline_end();
  return canvas.finish();
}

std::string render_density_svg(const AngularDensityModel& model, int points) {
  if (points < 2) {
    throw std::invalid_argument("render_density_svg: points must be >= 2");
  }
  const double theta_max = model.theta_max();
  double y_max = 0.0;
  std::vector<double> thetas(static_cast<std::size_t>(points));
  std::vector<double> values(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double theta = -theta_max + 2.0 * theta_max * i / (points - 1);
    thetas[static_cast<std::size_t>(i)] = theta;
    values[static_cast<std::size_t>(i)] = model.density(theta);
    y_max = std::max(y_max, values[static_cast<std::size_t>(i)]);
  }
  SvgCanvas canvas(-theta_max, theta_max, 0.0, 1.05 * y_max,
                   "scattering angle theta [rad]", "density [1/rad]");
  canvas.polyline_begin("#4477aa");
  for (int i = 0; i < points; ++i) {
    canvas.polyline_point(thetas[static_cast<std::size_t>(i)],
                          values[static_cast<std::size_t>(i)]);
  }
  canvas.polyline_end();
  return canvas.finish();
}

std::string render_impacts_svg(const std::vector<DetectionEvent>& events,
                               std::uint64_t seed) {
  double x_min = 0.0, x_max = 1.0;
  if (!events.empty()) {
    x_min = x_max = events.front().y_det;
    for (const auto& ev : events) {
      x_min = std::min(x_min, ev.y_det);
      x_max = std::max(x_max, ev.y_det);
    }
    if (x_min == x_max) {
      x_min -= 1.0;
      x_max += 1.0;
    }
  }
  SvgCanvas canvas(x_min, x_max, 0.0, 1.0, "screen position y_det [m]",
                   "transverse spread (display only)");
  RngStream jitter(seed, kJitterStream);
  for (const auto& ev : events) {
    canvas.dot(ev.y_det, jitter.next_double());
  }
  return canvas.finish();
}

}  // namespace pfsim
