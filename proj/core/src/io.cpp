#include "cuspforge/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cuspforge/errors.hpp"

namespace cuspforge {

CsvWriter::CsvWriter(std::vector<std::string> columns)
    : columns_(std::move(columns)) {}

std::string CsvWriter::format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void CsvWriter::add_row(const std::vector<double>& values) {
  std::string line;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += format_double(values[i]);
  }
  rows_.push_back(std::move(line));
}

void CsvWriter::add_text_row(const std::vector<std::string>& values) {
  std::string line;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += values[i];
  }
  rows_.push_back(std::move(line));
}

std::string CsvWriter::str() const {
  std::string out;
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += columns_[i];
  }
  out += '\n';
  for (const auto& r : rows_) {
    out += r;
    out += '\n';
  }
  return out;
}

void CsvWriter::write_file(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << str();
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#17becf"};

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

SvgChart::SvgChart(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void SvgChart::add_series(
    const std::string& name,
    const std::vector<std::pair<double, double>>& points) {
  series_.push_back({name, points});
}

std::string SvgChart::str() const {
  const double w = 800.0, h = 600.0;
  const double left = 80.0, right = 770.0, top = 50.0, bottom = 545.0;

  double xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
  bool first = true;
  for (const auto& s : series_)
    for (const auto& p : s.pts) {
      if (!std::isfinite(p.first) || !std::isfinite(p.second)) continue;
      if (first) {
        xlo = xhi = p.first;
        ylo = yhi = p.second;
        first = false;
      } else {
        xlo = std::min(xlo, p.first);
        xhi = std::max(xhi, p.first);
        ylo = std::min(ylo, p.second);
        yhi = std::max(yhi, p.second);
      }
    }
  double xspan = std::max(xhi - xlo, 1e-12);
  double yspan = std::max(yhi - ylo, 1e-12);
  auto mx = [&](double x) { return left + (x - xlo) / xspan * (right - left); };
  auto my = [&](double y) {
    return bottom - (y - ylo) / yspan * (bottom - top);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " "
     << h << "\" width=\"" << w << "\" height=\"" << h << "\">\n";
  os << "<rect width=\"" << w << "\" height=\"" << h
     << "\" fill=\"#ffffff\"/>\n";
  os << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"18\">"
     << title_ << "</text>\n";
  os << "<line x1=\"" << px(left) << "\" y1=\"" << px(bottom) << "\" x2=\""
     << px(right) << "\" y2=\"" << px(bottom)
     << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << px(left) << "\" y1=\"" << px(top) << "\" x2=\""
     << px(left) << "\" y2=\"" << px(bottom)
     << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    double xv = xlo + xspan * i / 5.0;
    double yv = ylo + yspan * i / 5.0;
    double xp = mx(xv), yp = my(yv);
    os << "<line x1=\"" << px(xp) << "\" y1=\"" << px(bottom) << "\" x2=\""
       << px(xp) << "\" y2=\"" << px(bottom + 5)
       << "\" stroke=\"#333333\"/>\n";
    os << "<text x=\"" << px(xp) << "\" y=\"" << px(bottom + 20)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"11\">"
       << tick_label(xv) << "</text>\n";
    os << "<line x1=\"" << px(left - 5) << "\" y1=\"" << px(yp) << "\" x2=\""
       << px(left) << "\" y2=\"" << px(yp) << "\" stroke=\"#333333\"/>\n";
    os << "<text x=\"" << px(left - 8) << "\" y=\"" << px(yp + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
          "font-size=\"11\">"
       << tick_label(yv) << "</text>\n";
  }
  os << "<text x=\"" << px(0.5 * (left + right)) << "\" y=\"" << px(h - 12)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
     << x_label_ << "</text>\n";
  os << "<text x=\"18\" y=\"" << px(0.5 * (top + bottom))
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        "transform=\"rotate(-90 18 "
     << px(0.5 * (top + bottom)) << ")\">" << y_label_ << "</text>\n";

  for (size_t si = 0; si < series_.size(); ++si) {
    const auto& s = series_[si];
    const char* color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
    os << "<polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : s.pts) {
      if (!std::isfinite(p.first) || !std::isfinite(p.second)) continue;
      os << px(mx(p.first)) << ',' << px(my(p.second)) << ' ';
    }
    os << "\"/>\n";
    double ly = top + 16.0 * (double)si;
    os << "<line x1=\"" << px(right - 150) << "\" y1=\"" << px(ly)
       << "\" x2=\"" << px(right - 125) << "\" y2=\"" << px(ly)
       << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << px(right - 120) << "\" y=\"" << px(ly + 4)
       << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.name
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void SvgChart::write_file(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open for writing: " + path);
  f << str();
}

}  // namespace cuspforge
