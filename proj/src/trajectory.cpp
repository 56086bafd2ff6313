#include "geomint/trajectory.hpp"

#include <fstream>
#include <ostream>

#include "geomint/errors.hpp"

namespace geomint {

const char* const kTrajectoryCsvHeader =
    "k,time,g00,g01,g02,g10,g11,g12,g20,g21,g22,m1,m2,m3,energy,casimir,orth_residual";

namespace {

void append_value(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), ",%.17g", v);
  line += buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryRecord>& records) {
  out << kTrajectoryCsvHeader << '\n';
  for (const TrajectoryRecord& rec : records) {
    std::string line = std::to_string(rec.k);
    append_value(line, rec.time);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) append_value(line, rec.g(r, c));
    for (int i = 0; i < 3; ++i) append_value(line, rec.m(i));
    append_value(line, rec.energy);
    append_value(line, rec.casimir);
    append_value(line, rec.orth_residual);
    out << line << '\n';
  }
}

void write_trajectory_csv(const std::string& path, const std::vector<TrajectoryRecord>& records) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  write_trajectory_csv(out, records);
  out.flush();
  if (!out) throw ConfigError("failed writing output file: " + path);
}

}  // namespace geomint
