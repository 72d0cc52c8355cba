#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "orbdet/figure.hpp"

namespace orbdet {

struct SvgOptions {
  int cell_px = 48;
  int margin_px = 28;
  int caption_px = 20;
  // stroke labels clutter dense figures; beyond this many strokes they move
  // to the JSON sidecar only
  int label_limit = 16;
};

namespace detail {

inline std::string fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

inline std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// Deterministic standalone SVG for a figure document. Solid/dashed carries
/// the stroke family, dark/light carries the sign.
inline std::string render_svg(const FigureDoc& doc, const SvgOptions& opt = {}) {
  using detail::escape_xml;
  using detail::fixed1;
  const double cell = opt.cell_px;
  const double ox = opt.margin_px;
  const double oy = opt.margin_px;
  const double grid_w = doc.cols * cell;
  const double grid_h = doc.rows * cell;
  const double caption_h = doc.captions.empty() ? 0.0 : opt.caption_px * 1.8;
  const double width = grid_w + 2 * opt.margin_px;
  const double height = grid_h + 2 * opt.margin_px + caption_h;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed1(width) + "\" height=\"" +
         fixed1(height) + "\" viewBox=\"0 0 " + fixed1(width) + " " + fixed1(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  svg += "<g stroke=\"#c8c8c8\" stroke-width=\"1\" fill=\"none\">\n";
  for (const GridCell& c : doc.cells)
    svg += "<rect x=\"" + fixed1(ox + (c.col - 1) * cell) + "\" y=\"" +
           fixed1(oy + (c.row - 1) * cell) + "\" width=\"" + fixed1(cell) + "\" height=\"" +
           fixed1(cell) + "\"/>\n";
  svg += "</g>\n";

  svg += "<g font-family=\"monospace\" font-size=\"" + fixed1(cell / 3.2) +
         "\" fill=\"#333333\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
  for (const GridCell& c : doc.cells)
    svg += "<text x=\"" + fixed1(ox + (c.col - 0.5) * cell) + "\" y=\"" +
           fixed1(oy + (c.row - 0.5) * cell) + "\">" + escape_xml(c.text) + "</text>\n";
  svg += "</g>\n";

  for (int sep : doc.separators)
    svg += "<line x1=\"" + fixed1(ox + sep * cell) + "\" y1=\"" + fixed1(oy) + "\" x2=\"" +
           fixed1(ox + sep * cell) + "\" y2=\"" + fixed1(oy + grid_h) +
           "\" stroke=\"#444444\" stroke-width=\"2\"/>\n";

  bool draw_labels = static_cast<int>(doc.strokes.size()) <= opt.label_limit;
  for (const Stroke& s : doc.strokes) {
    std::string color = s.sign == Sign::plus() ? "#1c3f8f" : "#c24c26";
    std::string points;
    for (const GridPoint& p : s.points) {
      if (!points.empty()) points += ' ';
      points += fixed1(ox + (p.col - 0.5) * cell) + "," + fixed1(oy + (p.row - 0.5) * cell);
    }
    svg += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
           fixed1(cell / 14.0) + "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"";
    if (s.style == StrokeStyle::dashed) svg += " stroke-dasharray=\"7 5\"";
    svg += " points=\"" + points + "\"/>\n";
    if (draw_labels && !s.points.empty()) {
      const GridPoint& p = s.points.front();
      svg += "<text font-family=\"monospace\" font-size=\"" + fixed1(cell / 4.2) + "\" fill=\"" +
             color + "\" x=\"" + fixed1(ox + (p.col - 0.5) * cell) + "\" y=\"" +
             fixed1(oy + (p.row - 1) * cell - 3.0) + "\" text-anchor=\"middle\">" +
             escape_xml(s.label) + "</text>\n";
    }
  }

  double cap_y = oy + grid_h + opt.caption_px * 1.2;
  for (const Caption& c : doc.captions)
    svg += "<text font-family=\"monospace\" font-size=\"" + fixed1(opt.caption_px * 0.8) +
           "\" fill=\"#222222\" x=\"" + fixed1(ox + c.anchor_col * cell - cell / 2.0) + "\" y=\"" +
           fixed1(cap_y) + "\" text-anchor=\"middle\">" + escape_xml(c.text) + "</text>\n";

  svg += "</svg>\n";
  return svg;
}

/// Machine-checkable companion to the SVG: every stroke with its permutation
/// label, orbit, family and vertices.
inline std::string stroke_labels_json(const FigureDoc& doc) {
  nlohmann::ordered_json j;
  j["method"] = doc.method;
  j["n"] = doc.n;
  j["rows"] = doc.rows;
  j["cols"] = doc.cols;
  j["strokes"] = nlohmann::ordered_json::array();
  for (const Stroke& s : doc.strokes) {
    nlohmann::ordered_json js;
    js["label"] = s.label;
    js["orbit"] = s.orbit_ref;
    js["rotation"] = s.rotation_index;
    js["block"] = s.block;
    js["sign"] = std::string(1, s.sign.symbol());
    js["slope"] = s.slope == SlopeClass::plus_one    ? "+1"
                  : s.slope == SlopeClass::minus_one ? "-1"
                                                     : "poly";
    js["style"] = s.style == StrokeStyle::solid ? "solid" : "dashed";
    auto pts = nlohmann::ordered_json::array();
    for (const GridPoint& p : s.points) pts.push_back({p.row, p.col});
    js["points"] = std::move(pts);
    j["strokes"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

}  // namespace orbdet
