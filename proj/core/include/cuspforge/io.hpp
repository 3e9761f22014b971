#pragma once

#include <string>
#include <vector>

namespace cuspforge {

// CSV with a header row, '.' decimal separator, LF line endings, numbers at
// 17 significant digits. Field order is exactly as given, so identical data
// produces identical bytes.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);

  void add_row(const std::vector<double>& values);
  void add_text_row(const std::vector<std::string>& values);

  std::string str() const;
  void write_file(const std::string& path) const;

  static std::string format_double(double v);  // %.17g

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> rows_;
};

// Minimal self-contained SVG line chart, fixed 800x600 viewBox: axes, tick
// labels, one polyline per series. Deterministic output for identical data.
class SvgChart {
 public:
  SvgChart(std::string title, std::string x_label, std::string y_label);

  void add_series(const std::string& name,
                  const std::vector<std::pair<double, double>>& points);

  std::string str() const;
  void write_file(const std::string& path) const;

 private:
  std::string title_, x_label_, y_label_;
  struct Series {
    std::string name;
    std::vector<std::pair<double, double>> pts;
  };
  std::vector<Series> series_;
};

}  // namespace cuspforge
