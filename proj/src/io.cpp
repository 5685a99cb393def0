#include "stqm/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "stqm/errors.hpp"

namespace stqm {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void append_number(std::string& line, double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  line.append(buf, res.ptr);
}

std::string file_stem(const Snapshot& s) {
  std::string stem = s.label();
  for (char& ch : stem) {
    if (ch == '-') ch = 'm';
    if (ch == '+') ch = 'p';
  }
  return stem;
}

std::ofstream open_for_write(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

fs::path metadata_path(const fs::path& csv_path) {
  fs::path p = csv_path;
  p.replace_extension(".json");
  return p;
}

void write_json(const json& doc, const fs::path& path) {
  std::ofstream out = open_for_write(path);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

void export_snapshot(const ComplexField& field, const fs::path& csv_path, const json& metadata, double abs_scale,
                     int stride) {
  if (stride < 1) throw ConfigError("snapshot stride must be >= 1");
  const Grid2D& g = field.grid();
  std::ofstream out = open_for_write(csv_path);
  std::string line;
  out << "x,y,re,im,abs\n";
  for (int j = 0; j < g.ny(); j += stride) {
    for (int i = 0; i < g.nx(); i += stride) {
      const Complex v = field(i, j);
      line.clear();
      append_number(line, g.x(i));
      line += ',';
      append_number(line, g.y(j));
      line += ',';
      append_number(line, v.real());
      line += ',';
      append_number(line, v.imag());
      line += ',';
      append_number(line, std::abs(v) * abs_scale);
      line += '\n';
      out << line;
    }
  }
  if (!out) throw IoError("failed writing " + csv_path.string());
  write_json(metadata, metadata_path(csv_path));
}

ComplexField import_snapshot(const fs::path& csv_path, const Grid2D& grid) {
  std::ifstream in(csv_path);
  if (!in) throw IoError("cannot open " + csv_path.string());
  std::string line;
  if (!std::getline(in, line) || line != "x,y,re,im,abs") {
    throw IoError(csv_path.string() + ": missing x,y,re,im,abs header");
  }
  std::vector<Complex> values;
  values.reserve(grid.size());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double cols[5];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int c = 0; c < 5; ++c) {
      const auto res = std::from_chars(p, end, cols[c]);
      if (res.ec != std::errc()) throw IoError(csv_path.string() + ": malformed row " + std::to_string(values.size() + 2));
      p = res.ptr;
      if (c < 4) {
        if (p == end || *p != ',') throw IoError(csv_path.string() + ": malformed row " + std::to_string(values.size() + 2));
        ++p;
      }
    }
    values.emplace_back(cols[2], cols[3]);
  }
  if (values.size() != grid.size()) {
    throw IoError(csv_path.string() + ": expected " + std::to_string(grid.size()) + " rows, found " +
                  std::to_string(values.size()));
  }
  return ComplexField(grid, std::move(values));
}

json snapshot_metadata(const Snapshot& s, const ExperimentConfig& c, const std::string& hash) {
  json m = {
      {"time", s.time.t},
      {"label", s.time.label()},
      {"mode", to_string(s.theory)},
      {"branch", to_string(c.branch)},
      {"collapsed", s.collapsed},
      {"grid",
       {{"nx", c.grid.nx()}, {"ny", c.grid.ny()}, {"dx", c.grid.dx()}, {"dy", c.grid.dy()}, {"x0", c.grid.x0()},
        {"y0", c.grid.y0()}}},
      {"config_hash", hash},
  };
  if (s.theory == Theory::ST) {
    m["A_s"] = {{"re", s.integral.real()}, {"im", s.integral.imag()}};
    m["abs_A_s"] = std::abs(s.integral);
    m["abs_scale"] = kStAbsScale;
  } else {
    m["norm"] = s.integral.real();
    m["abs_scale"] = 1.0;
  }
  return m;
}

void write_artifacts(const RunArtifacts& a, const ExperimentConfig& c, const fs::path& out_dir, int stride) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  const std::string hash = config_hash(c);
  json index = json::array();
  for (const Snapshot& s : a.snapshots) {
    const fs::path csv = out_dir / (file_stem(s) + ".csv");
    json meta = snapshot_metadata(s, c, hash);
    meta["stride"] = stride;
    export_snapshot(s.density, csv, meta, s.theory == Theory::ST ? kStAbsScale : 1.0, stride);
    index.push_back(csv.filename().string());
  }
  json report = report_to_json(a.report);
  report["provenance"] = a.provenance;
  report["snapshots"] = index;
  write_json(report, out_dir / "report.json");
}

}  // namespace stqm
