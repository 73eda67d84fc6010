#pragma once

// Deterministic braid diagrams, one crossing per letter, time flowing
// downward (ASCII) or rightward (SVG).  Positive letter i crosses the strand
// at position i over the strand at position i+1; the inverse crosses under.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidrep {

inline void check_render_word(int strands, const std::vector<int>& letters) {
  if (strands < 2) throw std::invalid_argument("rendering needs at least 2 strands");
  for (int a : letters)
    if (a == 0 || std::abs(a) >= strands)
      throw std::invalid_argument("braid letter out of range: " + std::to_string(a));
}

inline std::string render_ascii(int strands, const std::vector<int>& letters) {
  check_render_word(strands, letters);
  const int width = 2 * strands - 1;
  std::string out = "# " + std::to_string(strands) +
                    " strands; positive letter i: strand at position i crosses over "
                    "strand at position i+1\n";
  std::string head(width, ' ');
  for (int i = 0; i < strands; ++i) head[2 * i] = static_cast<char>('1' + (i % 9));
  out += head + "\n";
  auto bar_row = [&] {
    std::string row(width, ' ');
    for (int i = 0; i < strands; ++i) row[2 * i] = '|';
    return row;
  };
  if (letters.empty()) {
    out += bar_row() + "\n";
    return out;
  }
  for (int a : letters) {
    const int i = std::abs(a);
    const int c = 2 * (i - 1);
    std::string r1 = bar_row(), r2 = bar_row(), r3 = bar_row();
    r1[c] = '\\';
    r1[c + 2] = '/';
    r2[c] = ' ';
    r2[c + 2] = ' ';
    r2[c + 1] = a > 0 ? '\\' : '/';
    r3[c] = '/';
    r3[c + 2] = '\\';
    out += r1 + "\n" + r2 + "\n" + r3 + "\n";
  }
  return out;
}

inline std::string render_svg(int strands, const std::vector<int>& letters) {
  check_render_word(strands, letters);
  const int colw = 40, rowh = 30, margin = 20;
  const int cols = static_cast<int>(letters.size());
  const int width = 2 * margin + colw * std::max(cols, 1);
  const int height = 2 * margin + rowh * (strands - 1);
  auto x_at = [&](int col) { return margin + colw * col; };
  auto y_at = [&](int pos) { return margin + rowh * (pos - 1); };  // pos 1..strands

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
       "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
       " " + std::to_string(height) + "\">\n";
  s += "<!-- " + std::to_string(strands) +
       " strands; positive letter i: strand at position i crosses over strand at position "
       "i+1 -->\n";
  auto line = [&](int x1, int y1, int x2, int y2) {
    return "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
           std::to_string(x2) + "\" y2=\"" + std::to_string(y2) +
           "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  };
  if (letters.empty()) {
    for (int p = 1; p <= strands; ++p) s += line(x_at(0), y_at(p), x_at(1), y_at(p));
    s += "</svg>\n";
    return s;
  }
  for (int col = 0; col < cols; ++col) {
    const int a = letters[col];
    const int i = std::abs(a);
    s += "<g class=\"crossing " + std::string(a > 0 ? "positive" : "negative") + "\">\n";
    for (int p = 1; p <= strands; ++p)
      if (p != i && p != i + 1) s += line(x_at(col), y_at(p), x_at(col + 1), y_at(p));
    const int x0 = x_at(col), x1 = x_at(col + 1);
    const int yi = y_at(i), yj = y_at(i + 1);
    const int mx = (x0 + x1) / 2, my = (yi + yj) / 2;
    // Over-strand drawn whole; under-strand leaves a gap at the middle.
    const int gx = colw / 8, gy = rowh / 8;
    if (a > 0) {
      s += line(x0, yi, x1, yj);
      s += line(x0, yj, mx - gx, my + gy);
      s += line(mx + gx, my - gy, x1, yi);
    } else {
      s += line(x0, yj, x1, yi);
      s += line(x0, yi, mx - gx, my - gy);
      s += line(mx + gx, my + gy, x1, yj);
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace braidrep
