#include "straightedge/report.hpp"

#include <cstdio>
#include <fstream>

#include "straightedge/errors.hpp"

namespace straightedge {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string csv_header() { return "measure,target,value,theta,time_s,peak_mem_bytes,seed,mode"; }

std::string csv_row(const MetricReport& r) {
  std::string row;
  row += r.measure;
  row += ',';
  row += r.target;
  row += ',';
  row += fmt_double(r.value);
  row += ',';
  row += fmt_double(r.theta);
  row += ',';
  row += fmt_double(r.time_s);
  row += ',';
  row += std::to_string(r.peak_mem_bytes);
  row += ',';
  row += std::to_string(r.seed);
  row += ',';
  row += r.mode;
  return row;
}

void export_csv(const std::vector<MetricReport>& reports, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << csv_header() << '\n';
  for (const MetricReport& r : reports) out << csv_row(r) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace straightedge
