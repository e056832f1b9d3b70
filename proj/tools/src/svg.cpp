/*
 Copyright 2026 The mmac Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "mmac_cli/svg.hpp"

#include "mmac/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace mmac::cli {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

constexpr std::array<const char*, 6> kColours = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::string svg_line_chart(const std::string& title, const std::vector<Series>& series) {
  constexpr double W = 640, H = 400, left = 70, right = 20, top = 40, bottom = 40;
  double ymin = std::numeric_limits<double>::infinity(), ymax = -ymin;
  std::size_t xmax = 1;
  for (const auto& s : series) {
    xmax = std::max(xmax, s.y.size() > 1 ? s.y.size() - 1 : std::size_t{1});
    for (double v : s.y) {
      if (!std::isfinite(v)) continue;
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!std::isfinite(ymin)) ymin = 0.0, ymax = 1.0;
  if (ymax - ymin < 1e-300) ymax = ymin + 1.0;

  const auto px = [&](double k) { return left + (W - left - right) * k / static_cast<double>(xmax); };
  const auto py = [&](double v) { return H - bottom - (H - top - bottom) * (v - ymin) / (ymax - ymin); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" viewBox=\"0 0 640 400\">\n";
  out += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  out += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
         escape(title) + "</text>\n";
  out += "<polyline fill=\"none\" stroke=\"black\" points=\"" + num(left) + "," + num(top) + " " + num(left) + "," +
         num(H - bottom) + " " + num(W - right) + "," + num(H - bottom) + "\"/>\n";
  out += "<text x=\"" + num(left - 6) + "\" y=\"" + num(top + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" + io::format_number(ymax) + "</text>\n";
  out += "<text x=\"" + num(left - 6) + "\" y=\"" + num(H - bottom) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" + io::format_number(ymin) + "</text>\n";
  out += "<text x=\"" + num(W - right) + "\" y=\"" + num(H - bottom + 16) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" + std::to_string(xmax) + "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* colour = kColours[s % kColours.size()];
    std::string points;
    const auto flush = [&] {
      if (!points.empty()) {
        out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"" +
               points + "\"/>\n";
      }
      points.clear();
    };
    for (std::size_t k = 0; k < series[s].y.size(); ++k) {
      const double v = series[s].y[k];
      if (!std::isfinite(v)) {
        flush();
        continue;
      }
      if (!points.empty()) points += ' ';
      points += num(px(static_cast<double>(k))) + "," + num(py(v));
    }
    flush();
    out += "<text x=\"" + num(W - right - 4) + "\" y=\"" + num(top + 14.0 * static_cast<double>(s + 1)) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" + colour + "\">" +
           escape(series[s].label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mmac::cli
