#include "bps/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "bps/common.hpp"
#include "bps/csv.hpp"

namespace bps {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

struct ChartLayout {
  double width = 1180.0;
  double height = 420.0;
  double margin_left = 70.0;
  double margin_right = 70.0;
  double margin_top = 30.0;
  double margin_bottom = 70.0;

  double plot_width() const { return width - margin_left - margin_right; }
  double plot_height() const { return height - margin_top - margin_bottom; }
};

std::string svg_header(const ChartLayout& l, const std::string& title) {
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt("%.0f", l.width) +
         "\" height=\"" + fmt("%.0f", l.height) + "\" font-family=\"sans-serif\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt("%.1f", l.width / 2.0) + "\" y=\"20\" text-anchor=\"middle\" " +
         "font-size=\"14\">" + title + "</text>\n";
  return out;
}

std::string bar(double x, double y, double w, double h, const char* fill) {
  return "<rect x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", y) + "\" width=\"" +
         fmt("%.2f", w) + "\" height=\"" + fmt("%.2f", h) + "\" fill=\"" + fill + "\"/>\n";
}

std::string code_labels(const std::vector<ScenarioResult>& results, const ChartLayout& l,
                        double group_width) {
  std::string out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const double cx = l.margin_left + (static_cast<double>(i) + 0.5) * group_width;
    const double cy = l.height - l.margin_bottom + 12.0;
    out += "<text x=\"" + fmt("%.2f", cx) + "\" y=\"" + fmt("%.2f", cy) +
           "\" font-size=\"9\" text-anchor=\"end\" transform=\"rotate(-55 " + fmt("%.2f", cx) +
           " " + fmt("%.2f", cy) + ")\">" + results[i].code + "</text>\n";
  }
  return out;
}

double nice_max(double v) {
  if (v <= 0.0) return 1.0;
  double scale = 1.0;
  while (v / scale >= 10.0) scale *= 10.0;
  while (v / scale < 1.0) scale /= 10.0;
  return std::ceil(v / scale) * scale;
}

}  // namespace

std::string results_to_csv(const std::vector<ScenarioResult>& results) {
  std::string out = "scenario_code,v_gas_m3,e_load_kwh,e_gen_kwh,e_feed_kwh,co2_t,cost_eur\n";
  for (const auto& r : results) {
    out += r.code;
    out += ',' + format_double(r.v_gas_m3);
    out += ',' + format_double(r.e_load_kwh);
    out += ',' + format_double(r.e_gen_kwh);
    out += ',' + format_double(r.e_feed_kwh);
    out += ',' + format_double(r.co2_t);
    out += ',' + format_double(r.cost_eur);
    out += '\n';
  }
  return out;
}

std::string summary_table(const std::vector<ScenarioResult>& results) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-8s %12s %12s %12s %12s %10s %12s\n", "scenario",
                "v_gas_m3", "e_load_kwh", "e_gen_kwh", "e_feed_kwh", "co2_t", "cost_eur");
  out += line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof(line), "%-8s %12.3f %12.3f %12.3f %12.3f %10.4f %12.3f\n",
                  r.code.c_str(), r.v_gas_m3, r.e_load_kwh, r.e_gen_kwh, r.e_feed_kwh, r.co2_t,
                  r.cost_eur);
    out += line;
  }
  return out;
}

std::string consumption_chart_svg(const std::vector<ScenarioResult>& results) {
  ChartLayout l;
  std::string out = svg_header(l, "Monthly consumption per scenario");
  if (!results.empty()) {
    double max_gas = 0.0, max_draw = 0.0;
    for (const auto& r : results) {
      max_gas = std::max(max_gas, r.v_gas_m3);
      max_draw = std::max(max_draw, std::max(0.0, -r.e_feed_kwh));
    }
    max_gas = nice_max(max_gas);
    max_draw = nice_max(max_draw);
    const double group = l.plot_width() / static_cast<double>(results.size());
    const double bw = group * 0.4;
    const double base = l.height - l.margin_bottom;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const double x0 = l.margin_left + static_cast<double>(i) * group + group * 0.1;
      const double hg = results[i].v_gas_m3 / max_gas * l.plot_height();
      const double hd = std::max(0.0, -results[i].e_feed_kwh) / max_draw * l.plot_height();
      out += bar(x0, base - hg, bw, hg, "#b5651d");
      out += bar(x0 + bw, base - hd, bw, hd, "#2c7fb8");
    }
    out += code_labels(results, l, group);
    out += "<text x=\"15\" y=\"" + fmt("%.1f", l.margin_top + 10.0) +
           "\" font-size=\"11\" fill=\"#b5651d\">gas m3 (max " + fmt("%.0f", max_gas) +
           ")</text>\n";
    out += "<text x=\"15\" y=\"" + fmt("%.1f", l.margin_top + 24.0) +
           "\" font-size=\"11\" fill=\"#2c7fb8\">net draw kWh (max " + fmt("%.0f", max_draw) +
           ")</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string cost_chart_svg(const std::vector<ScenarioResult>& results) {
  ChartLayout l;
  std::string out = svg_header(l, "Monthly cost per scenario [EUR]");
  if (!results.empty()) {
    double max_cost = 0.0;
    for (const auto& r : results) max_cost = std::max(max_cost, r.cost_eur);
    max_cost = nice_max(max_cost);
    const double group = l.plot_width() / static_cast<double>(results.size());
    const double bw = group * 0.7;
    const double base = l.height - l.margin_bottom;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const double x0 = l.margin_left + static_cast<double>(i) * group + group * 0.15;
      const double h = std::max(0.0, results[i].cost_eur) / max_cost * l.plot_height();
      out += bar(x0, base - h, bw, h, "#31a354");
    }
    out += code_labels(results, l, group);
    out += "<text x=\"15\" y=\"" + fmt("%.1f", l.margin_top + 10.0) +
           "\" font-size=\"11\" fill=\"#31a354\">cost EUR (max " + fmt("%.0f", max_cost) +
           ")</text>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_report(const std::vector<ScenarioResult>& results, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create output directory " + out_dir + ": " + ec.message());
  csv::write_file(out_dir + "/consumption.svg", consumption_chart_svg(results));
  csv::write_file(out_dir + "/cost.svg", cost_chart_svg(results));
  const std::string tmp = out_dir + "/results.csv.tmp";
  csv::write_file(tmp, results_to_csv(results));
  fs::rename(tmp, out_dir + "/results.csv", ec);
  if (ec) throw Error("cannot finalize results.csv: " + ec.message());
}

}  // namespace bps
