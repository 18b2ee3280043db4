#include "hyproj/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace hyproj {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string g4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double cart_re(const HalfPlanePoint& p) { return p.has_cartesian() ? p.re() : p.modulus() * std::cos(p.theta()); }
double cart_im(const HalfPlanePoint& p) { return p.has_cartesian() ? p.im() : p.modulus() * std::sin(p.theta()); }

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_text(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace

std::string csv_text(const ScenarioReport& report) {
  std::string out = "n,re_z,im_z,t_star,re_pi,im_pi,dist_w_pi,delta\n";
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const Row& r = report.rows[k];
    out += std::to_string(r.n) + ',' + g17(cart_re(r.z)) + ',' + g17(cart_im(r.z)) + ',';
    if (r.t_star) out += g17(*r.t_star);
    out += ',';
    if (r.pi) out += g17(cart_re(*r.pi)) + ',' + g17(cart_im(*r.pi));
    else out += ',';
    out += ',' + g17(r.value) + ',';
    if (k > 0) out += g17(r.value - report.rows[k - 1].value);
    out += '\n';
  }
  return out;
}

std::string plot_svg(const ScenarioReport& report) {
  constexpr double width = 640, height = 400, left = 70, right = 20, top = 40, bottom = 50;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo, y_lo = x_lo, y_hi = -x_lo;
  for (const Row& r : report.rows) {
    if (!std::isfinite(r.value)) continue;
    x_lo = std::min(x_lo, double(r.n));
    x_hi = std::max(x_hi, double(r.n));
    y_lo = std::min(y_lo, r.value);
    y_hi = std::max(y_hi, r.value);
  }
  if (!(x_lo <= x_hi)) x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  if (x_hi == x_lo) x_hi = x_lo + 1;
  if (y_hi == y_lo) y_lo -= 0.5, y_hi += 0.5;
  const auto sx = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * (width - left - right); };
  const auto sy = [&](double y) { return height - bottom - (y - y_lo) / (y_hi - y_lo) * (height - top - bottom); };

  std::string points;
  for (const Row& r : report.rows)
    if (std::isfinite(r.value)) points += g4(sx(r.n)) + ',' + g4(sy(r.value)) + ' ';

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  svg += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
         escape_xml(report.id + ": " + report.value_label) + "</text>\n";
  svg += "<line x1=\"" + g4(left) + "\" y1=\"" + g4(height - bottom) + "\" x2=\"" + g4(width - right) + "\" y2=\"" +
         g4(height - bottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + g4(left) + "\" y1=\"" + g4(top) + "\" x2=\"" + g4(left) + "\" y2=\"" + g4(height - bottom) +
         "\" stroke=\"black\"/>\n";
  const std::string label = "font-family=\"sans-serif\" font-size=\"11\"";
  svg += "<text x=\"" + g4(left) + "\" y=\"" + g4(height - bottom + 16) + "\" " + label + " text-anchor=\"middle\">" +
         g4(x_lo) + "</text>\n";
  svg += "<text x=\"" + g4(width - right) + "\" y=\"" + g4(height - bottom + 16) + "\" " + label +
         " text-anchor=\"middle\">" + g4(x_hi) + "</text>\n";
  svg += "<text x=\"" + g4((left + width - right) / 2) + "\" y=\"" + g4(height - 12) + "\" " + label +
         " text-anchor=\"middle\">n</text>\n";
  svg += "<text x=\"" + g4(left - 6) + "\" y=\"" + g4(height - bottom) + "\" " + label + " text-anchor=\"end\">" +
         g4(y_lo) + "</text>\n";
  svg += "<text x=\"" + g4(left - 6) + "\" y=\"" + g4(top + 4) + "\" " + label + " text-anchor=\"end\">" + g4(y_hi) +
         "</text>\n";
  svg += "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
  svg += "</svg>\n";
  return svg;
}

void emit_csv(const ScenarioReport& report, const std::filesystem::path& path) { write_text(csv_text(report), path); }

void emit_plot(const ScenarioReport& report, const std::filesystem::path& path) { write_text(plot_svg(report), path); }

}  // namespace hyproj
