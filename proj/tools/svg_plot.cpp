#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace pgame::tools {

namespace {

constexpr double kScale = 220.0;  // svg units per target radius

struct Frame {
  double min_x, max_x, min_y, max_y;

  double sx(double x) const { return (x - min_x) * kScale; }
  double sy(double y) const { return (max_y - y) * kScale; }  // flip y
  double w() const { return (max_x - min_x) * kScale; }
  double h() const { return (max_y - min_y) * kScale; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

const char* stage_color(StageLabel s) {
  switch (s) {
    case StageLabel::PreGame: return "#9e9e9e";
    case StageLabel::PartialInfo: return "#ef8c00";
    case StageLabel::FullInfo: return "#d32f2f";
    case StageLabel::Escape: return "#7b1fa2";
  }
  return "#000";
}

void polyline(std::ostringstream& out, const Frame& fr,
              const std::vector<Vec2>& pts, const char* color, double width,
              const char* dash) {
  if (pts.size() < 2) return;
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
      << width << "\"";
  if (dash) out << " stroke-dasharray=\"" << dash << "\"";
  out << " points=\"";
  for (const auto& p : pts) out << fmt(fr.sx(p.x)) << "," << fmt(fr.sy(p.y)) << " ";
  out << "\"/>\n";
}

void marker(std::ostringstream& out, const Frame& fr, const Vec2& p,
            const std::string& label, const char* color) {
  out << "<circle cx=\"" << fmt(fr.sx(p.x)) << "\" cy=\"" << fmt(fr.sy(p.y))
      << "\" r=\"4\" fill=\"" << color << "\"/>\n";
  out << "<text x=\"" << fmt(fr.sx(p.x) + 7) << "\" y=\"" << fmt(fr.sy(p.y) - 5)
      << "\" font-family=\"sans-serif\" font-size=\"14\">" << label
      << "</text>\n";
}

}  // namespace

std::string render_svg(const Trajectory& traj, const ScenarioConfig& cfg) {
  Frame fr{-cfg.tsr_radius, cfg.tsr_radius, -cfg.tsr_radius, cfg.tsr_radius};
  for (const auto& s : traj.samples) {
    fr.min_x = std::min(fr.min_x, s.attacker.x);
    fr.max_x = std::max(fr.max_x, s.attacker.x);
    fr.min_y = std::min(fr.min_y, s.attacker.y);
    fr.max_y = std::max(fr.max_y, s.attacker.y);
  }
  const double pad = 0.35;
  fr.min_x -= pad;
  fr.max_x += pad;
  fr.min_y -= pad;
  fr.max_y += pad;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(fr.w())
      << "\" height=\"" << fmt(fr.h()) << "\" viewBox=\"0 0 " << fmt(fr.w())
      << " " << fmt(fr.h()) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  auto circle = [&](double cx, double cy, double r, const char* stroke,
                    const char* fill, const char* dash) {
    out << "<circle cx=\"" << fmt(fr.sx(cx)) << "\" cy=\"" << fmt(fr.sy(cy))
        << "\" r=\"" << fmt(r * kScale) << "\" stroke=\"" << stroke
        << "\" fill=\"" << fill << "\"";
    if (dash) out << " stroke-dasharray=\"" << dash << "\"";
    out << "/>\n";
  };
  circle(0, 0, 1.0, "#555", "#f2f2f2", nullptr);                  // target
  circle(0, 0, cfg.tsr_radius, "#2e7d32", "none", "8 6");         // TSR

  // ASR circle at the detection instant, if detection happened.
  double t_detect = -1.0;
  for (const auto& e : traj.events)
    if (e.label == "asr_detection") t_detect = e.t;
  if (t_detect >= 0.0) {
    for (const auto& s : traj.samples) {
      if (s.t >= t_detect) {
        circle(s.attacker.x, s.attacker.y, cfg.asr_radius, "#1565c0", "none", "4 4");
        break;
      }
    }
  }

  // Stage-colored trajectory segments.
  std::vector<Vec2> seg_a, seg_d;
  StageLabel cur = traj.samples.empty() ? StageLabel::PreGame : traj.samples.front().stage;
  auto flush = [&]() {
    polyline(out, fr, seg_a, stage_color(cur), 2.5, nullptr);
    polyline(out, fr, seg_d, stage_color(cur), 1.5, "2 3");
    Vec2 last_a = seg_a.empty() ? Vec2{} : seg_a.back();
    Vec2 last_d = seg_d.empty() ? Vec2{} : seg_d.back();
    seg_a.clear();
    seg_d.clear();
    if (last_a.x != 0 || last_a.y != 0) seg_a.push_back(last_a);
    if (last_d.x != 0 || last_d.y != 0) seg_d.push_back(last_d);
  };
  for (const auto& s : traj.samples) {
    if (s.stage != cur) {
      flush();
      cur = s.stage;
    }
    seg_a.push_back(s.attacker);
    seg_d.push_back(s.defender);
  }
  flush();

  // Special points in the style of the paper-like figures.
  if (!traj.samples.empty()) {
    const auto& first = traj.samples.front();
    const auto& last = traj.samples.back();
    marker(out, fr, first.attacker, "xA0", "#d32f2f");
    marker(out, fr, first.defender, "xD0", "#1565c0");
    int ai = 1;
    std::map<std::string, std::string> names = {
        {"tsr_entry", "xA"}, {"asr_detection", "xA"}, {"escape_begin", "xA"}};
    for (const auto& e : traj.events) {
      auto it = names.find(e.label);
      if (it == names.end()) continue;
      for (const auto& s : traj.samples) {
        if (s.t >= e.t) {
          marker(out, fr, s.attacker, it->second + std::to_string(ai), "#d32f2f");
          if (e.label == "asr_detection")
            marker(out, fr, s.defender, "xD1", "#1565c0");
          break;
        }
      }
      ++ai;
    }
    marker(out, fr, last.attacker, "xA" + std::to_string(ai), "#d32f2f");
    marker(out, fr, last.defender, "xDf", "#1565c0");
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace pgame::tools
