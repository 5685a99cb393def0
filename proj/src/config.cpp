#include "stqm/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "stqm/errors.hpp"
#include "stqm/geometry.hpp"
#include "stqm/oracle.hpp"
#include "stqm/spectral.hpp"

namespace stqm {

using nlohmann::json;

std::string to_string(Theory t) {
  switch (t) {
    case Theory::CT: return "ct";
    case Theory::ST: return "st";
    case Theory::Both: return "both";
  }
  return "?";
}

std::string to_string(Branch b) { return b == Branch::D1 ? "d1" : "d2"; }

Theory theory_from_string(const std::string& s) {
  if (s == "ct" || s == "CT") return Theory::CT;
  if (s == "st" || s == "ST") return Theory::ST;
  if (s == "both") return Theory::Both;
  throw ConfigError("unknown mode '" + s + "' (expected ct, st or both)");
}

Branch branch_from_string(const std::string& s) {
  if (s == "d1" || s == "D1") return Branch::D1;
  if (s == "d2" || s == "D2") return Branch::D2;
  throw ConfigError("unknown branch '" + s + "' (expected d1 or d2)");
}

std::string SnapshotTime::label() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", t);
  std::string s(buf);
  if (side == Side::Before) s += "-";
  if (side == Side::After) s += "+";
  return s;
}

SnapshotTime SnapshotTime::parse(const std::string& label) {
  if (label.empty()) throw ConfigError("empty snapshot time");
  SnapshotTime out;
  std::string number = label;
  if (label.back() == '-' || label.back() == '+') {
    out.side = label.back() == '-' ? Side::Before : Side::After;
    number.pop_back();
  }
  std::size_t used = 0;
  try {
    out.t = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != number.size()) throw ConfigError("cannot parse snapshot time '" + label + "'");
  return out;
}

bool snapshot_before(const SnapshotTime& a, const SnapshotTime& b) {
  if (a.t != b.t) return a.t < b.t;
  const auto rank = [](SnapshotTime::Side s) {
    return s == SnapshotTime::Side::Before ? 0 : s == SnapshotTime::Side::At ? 1 : 2;
  };
  return rank(a.side) < rank(b.side);
}

Rect default_corridor(Point splitter, Point detector, double sigma) {
  const Point a{splitter.x + 0.25 * (detector.x - splitter.x), splitter.y + 0.25 * (detector.y - splitter.y)};
  const Point b{splitter.x + 0.75 * (detector.x - splitter.x), splitter.y + 0.75 * (detector.y - splitter.y)};
  const double half = 3.0 * sigma;
  const double len = std::hypot(detector.x - splitter.x, detector.y - splitter.y);
  // Transverse extent projected on each axis; exact for axis-aligned segments.
  const double tx = len > 0 ? half * std::abs(detector.y - splitter.y) / len : half;
  const double ty = len > 0 ? half * std::abs(detector.x - splitter.x) / len : half;
  return {std::min(a.x, b.x) - tx, std::max(a.x, b.x) + tx, std::min(a.y, b.y) - ty, std::max(a.y, b.y) + ty};
}

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig c;
  c.detectors[0].name = "d1";
  c.detectors[0].final_packet = {800.0, 0.0, 20.0, 0.4, 0.0};
  c.detectors[1].name = "d2";
  c.detectors[1].final_packet = {400.0, 400.0, 20.0, 0.0, 0.4};
  for (auto& d : c.detectors) d.corridor = default_corridor(c.splitter.position, d.final_packet.center(), d.final_packet.sigma);
  using S = SnapshotTime::Side;
  c.snapshot_times = {{0.0, S::At}, {500.0, S::At}, {1000.0, S::Before}, {1000.0, S::After}, {1500.0, S::At},
                      {2000.0, S::At}};
  return c;
}

namespace {

// Reads keys from one JSON object and rejects any it did not consume.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ConfigError(where() + " must be an object");
  }

  bool has(const char* key) const { return obj_.contains(key); }

  void number(const char* key, double& out) {
    if (const json* v = take(key)) {
      if (!v->is_number()) throw ConfigError(where(key) + " must be a number");
      out = v->get<double>();
    }
  }

  void integer(const char* key, int& out) {
    if (const json* v = take(key)) {
      if (!v->is_number_integer()) throw ConfigError(where(key) + " must be an integer");
      out = v->get<int>();
    }
  }

  void boolean(const char* key, bool& out) {
    if (const json* v = take(key)) {
      if (!v->is_boolean()) throw ConfigError(where(key) + " must be true or false");
      out = v->get<bool>();
    }
  }

  void string(const char* key, std::string& out) {
    if (const json* v = take(key)) {
      if (!v->is_string()) throw ConfigError(where(key) + " must be a string");
      out = v->get<std::string>();
    }
  }

  const json* take(const char* key) {
    seen_.insert(key);
    auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  std::string where(const char* key = nullptr) const {
    std::string p = path_.empty() ? "config" : path_;
    return key ? p + "." + key : p;
  }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError("unknown key '" + where(it.key().c_str()) + "'");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

GaussianSpec read_gaussian(const json& j, const std::string& path, GaussianSpec g) {
  ObjectReader r(j, path);
  r.number("cx", g.cx);
  r.number("cy", g.cy);
  r.number("sigma", g.sigma);
  r.number("kx", g.kx);
  r.number("ky", g.ky);
  r.finish();
  return g;
}

Rect read_rect(const json& j, const std::string& path, Rect rect) {
  ObjectReader r(j, path);
  r.number("xmin", rect.xmin);
  r.number("xmax", rect.xmax);
  r.number("ymin", rect.ymin);
  r.number("ymax", rect.ymax);
  r.finish();
  return rect;
}

Point read_point(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ConfigError(path + " must be a [x, y] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json gaussian_json(const GaussianSpec& g) {
  return {{"cx", g.cx}, {"cy", g.cy}, {"sigma", g.sigma}, {"kx", g.kx}, {"ky", g.ky}};
}

json rect_json(const Rect& r) { return {{"xmin", r.xmin}, {"xmax", r.xmax}, {"ymin", r.ymin}, {"ymax", r.ymax}}; }

}  // namespace

ExperimentConfig config_from_json(const json& doc) {
  ExperimentConfig c = ExperimentConfig::defaults();
  ObjectReader top(doc, "");

  if (const json* g = top.take("grid")) {
    ObjectReader r(*g, "grid");
    int nx = c.grid.nx(), ny = c.grid.ny();
    double dx = c.grid.dx(), dy = c.grid.dy(), x0 = c.grid.x0(), y0 = c.grid.y0();
    r.integer("nx", nx);
    r.integer("ny", ny);
    r.number("dx", dx);
    r.number("dy", dy);
    r.number("x0", x0);
    r.number("y0", y0);
    r.finish();
    c.grid = make_grid(nx, ny, dx, dy, x0, y0);
  }
  if (const json* s = top.take("source")) c.source = read_gaussian(*s, "source", c.source);

  bool splitter_moved = false;
  if (const json* s = top.take("splitter")) {
    ObjectReader r(*s, "splitter");
    if (const json* p = r.take("position")) {
      c.splitter.position = read_point(*p, "splitter.position");
      splitter_moved = true;
    }
    r.number("event_time", c.splitter.event_time);
    r.number("in_axis", c.splitter.in_axis);
    r.number("out_axis", c.splitter.out_axis);
    r.number("cone_half_angle", c.splitter.cone_half_angle);
    r.boolean("enabled", c.splitter.enabled);
    r.finish();
  }

  std::array<bool, 2> corridor_given{false, false};
  std::array<bool, 2> packet_given{false, false};
  if (const json* d = top.take("detectors")) {
    ObjectReader r(*d, "detectors");
    for (int k = 0; k < 2; ++k) {
      const char* name = k == 0 ? "d1" : "d2";
      const json* dj = r.take(name);
      if (!dj) continue;
      const std::string path = std::string("detectors.") + name;
      ObjectReader dr(*dj, path);
      DetectorSpec& det = c.detectors[k];
      if (const json* fp = dr.take("final_packet")) {
        det.final_packet = read_gaussian(*fp, path + ".final_packet", det.final_packet);
        packet_given[k] = true;
      }
      dr.number("age", det.age);
      if (const json* cr = dr.take("corridor")) {
        det.corridor = read_rect(*cr, path + ".corridor", det.corridor);
        corridor_given[k] = true;
      }
      dr.finish();
    }
    r.finish();
  }
  for (int k = 0; k < 2; ++k) {
    if (!corridor_given[k] && (packet_given[k] || splitter_moved)) {
      const DetectorSpec& det = c.detectors[k];
      c.detectors[k].corridor = default_corridor(c.splitter.position, det.final_packet.center(), det.final_packet.sigma);
    }
  }

  top.number("t_final", c.t_final);
  top.number("dt", c.dt);
  if (const json* st = top.take("snapshot_times")) {
    if (!st->is_array()) throw ConfigError("config.snapshot_times must be an array");
    c.snapshot_times.clear();
    for (const json& e : *st) {
      if (e.is_number()) {
        c.snapshot_times.push_back({e.get<double>(), SnapshotTime::Side::At});
      } else if (e.is_string()) {
        c.snapshot_times.push_back(SnapshotTime::parse(e.get<std::string>()));
      } else {
        throw ConfigError("snapshot_times entries must be numbers or strings like \"1000-\"");
      }
    }
  }
  std::string s;
  if (top.has("mode")) {
    top.string("mode", s);
    c.mode = theory_from_string(s);
  }
  if (top.has("branch")) {
    top.string("branch", s);
    c.branch = branch_from_string(s);
  }
  if (top.has("splitter_convention")) {
    top.string("splitter_convention", s);
    c.splitter.convention = splitter_convention_from_string(s);
  }
  top.number("guard_interval", c.guard_interval);
  top.number("modality_threshold", c.modality_threshold);
  top.finish();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return config_from_json(doc);
}

json config_to_json(const ExperimentConfig& c) {
  json snaps = json::array();
  for (const auto& t : c.snapshot_times) {
    if (t.side == SnapshotTime::Side::At) {
      snaps.push_back(t.t);
    } else {
      snaps.push_back(t.label());
    }
  }
  json detectors = json::object();
  for (const auto& d : c.detectors) {
    detectors[d.name] = {{"final_packet", gaussian_json(d.final_packet)}, {"age", d.age}, {"corridor", rect_json(d.corridor)}};
  }
  return {
      {"grid",
       {{"nx", c.grid.nx()}, {"ny", c.grid.ny()}, {"dx", c.grid.dx()}, {"dy", c.grid.dy()}, {"x0", c.grid.x0()},
        {"y0", c.grid.y0()}}},
      {"source", gaussian_json(c.source)},
      {"splitter",
       {{"position", {c.splitter.position.x, c.splitter.position.y}},
        {"event_time", c.splitter.event_time},
        {"in_axis", c.splitter.in_axis},
        {"out_axis", c.splitter.out_axis},
        {"cone_half_angle", c.splitter.cone_half_angle},
        {"enabled", c.splitter.enabled}}},
      {"detectors", detectors},
      {"t_final", c.t_final},
      {"dt", c.dt},
      {"snapshot_times", snaps},
      {"mode", to_string(c.mode)},
      {"branch", to_string(c.branch)},
      {"splitter_convention", to_string(c.splitter.convention)},
      {"guard_interval", c.guard_interval},
      {"modality_threshold", c.modality_threshold},
  };
}

namespace {

bool is_multiple(double value, double step) {
  const double q = value / step;
  return std::abs(q - std::round(q)) <= 1e-9 * std::max(1.0, std::abs(q));
}

// A packet whose center and width follow the closed-form free solution, copied
// by the splitter's rotation on one side of the event.
struct PacketTrack {
  std::string name;
  GaussianSpec spec;
  double oracle_offset;  // oracle time = t + oracle_offset
  int rotation = 0;      // quarter turns applied on the rotated side
};

void check_track_margin(const ExperimentConfig& c, const PacketTrack& track, double t, int turns) {
  const FreePacketState s = oracle_free_gaussian(track.spec, t + track.oracle_offset);
  const Point center = turns == 0 ? s.center : rotate_point(s.center, c.splitter.position, turns);
  const double margin = c.grid.distance_to_boundary(center);
  if (margin < kPacketBoundaryMarginSigmas * s.sigma) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s%s at t=%g: center (%.1f, %.1f) is %.2f sigma(t) from the grid edge, need %.0f",
                  track.name.c_str(), turns ? " (split copy)" : "", t, center.x, center.y, margin / s.sigma,
                  kPacketBoundaryMarginSigmas);
    throw ConfigError(buf);
  }
}

int split_rotation(const SplitterSpec& s, double kx, double ky) {
  if (in_momentum_cone(kx, ky, s.in_axis, s.cone_half_angle)) return 1;
  if (in_momentum_cone(kx, ky, s.out_axis, s.cone_half_angle)) return -1;
  return 0;
}

}  // namespace

std::vector<std::string> validate_config(const ExperimentConfig& c) {
  std::vector<std::string> warnings;
  const auto check_packet = [&](const GaussianSpec& g, const std::string& name) {
    if (!(g.sigma > 0.0)) throw ConfigError(name + ": sigma must be positive");
    const double need = g.momentum() + 5.0 * g.momentum_width();
    if (!(c.grid.nyquist() > need)) {
      char buf[200];
      std::snprintf(buf, sizeof buf, "%s: Nyquist margin violated (pi/d = %.4g must exceed |k| + 5/(2 sigma) = %.4g)",
                    name.c_str(), c.grid.nyquist(), need);
      throw ConfigError(buf);
    }
  };
  check_packet(c.source, "source");
  for (const auto& d : c.detectors) check_packet(d.final_packet, "detector " + d.name);

  if (!(c.dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(c.t_final > 0.0)) throw ConfigError("t_final must be positive");
  if (!is_multiple(c.t_final, c.dt)) throw ConfigError("t_final must be a whole number of dt steps");
  if (!(c.guard_interval > 0.0)) throw ConfigError("guard_interval must be positive");
  if (!(c.modality_threshold > 0.0 && c.modality_threshold < 1.0)) {
    throw ConfigError("modality_threshold must lie in (0, 1)");
  }
  for (const auto& d : c.detectors) {
    if (d.age < 0.0) throw ConfigError("detector " + d.name + ": age must be non-negative");
  }

  const SplitterSpec& s = c.splitter;
  if (s.enabled) {
    if (!(s.event_time > 0.0 && s.event_time < c.t_final)) throw ConfigError("splitter event_time must lie in (0, t_final)");
    if (!is_multiple(s.event_time, c.dt)) throw ConfigError("splitter event_time must be a whole number of dt steps");
    double diff = std::remainder(s.out_axis - s.in_axis - std::numbers::pi / 2.0, 2.0 * std::numbers::pi);
    if (std::abs(diff) > 1e-9) throw ConfigError("splitter out_axis must equal in_axis + pi/2");
    if (!(s.cone_half_angle > 0.0 && s.cone_half_angle <= std::numbers::pi / 4.0 + 1e-12)) {
      throw ConfigError("splitter cone_half_angle must lie in (0, pi/4]");
    }
    if (!c.grid.is_square()) throw ConfigError("the splitter rotation needs a square grid with equal spacing");
    if (!c.grid.contains(s.position)) throw ConfigError("splitter position lies outside the grid");

    const double dist = std::hypot(s.position.x - c.source.cx, s.position.y - c.source.cy);
    const double travelled = c.source.momentum() * s.event_time;
    if (dist > 0.0 && std::abs(travelled - dist) > 0.01 * dist) {
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "kinematics: |k| t_event = %.4g but the source-splitter distance is %.4g (more than 1%% apart)",
                    travelled, dist);
      warnings.emplace_back(buf);
    }
  }

  std::vector<SnapshotTime> sorted = c.snapshot_times;
  std::sort(sorted.begin(), sorted.end(), snapshot_before);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const SnapshotTime& t = sorted[k];
    if (t.t < 0.0 || t.t > c.t_final) throw ConfigError("snapshot time " + t.label() + " is outside [0, t_final]");
    if (!is_multiple(t.t, c.dt)) throw ConfigError("snapshot time " + t.label() + " is not a whole number of dt steps");
    const bool at_event = s.enabled && t.t == s.event_time;
    if (at_event && t.side == SnapshotTime::Side::At) {
      throw ConfigError("snapshot at the splitter event must say which side: \"" + t.label() + "-\" or \"" +
                        t.label() + "+\"");
    }
    if (!at_event && t.side != SnapshotTime::Side::At) {
      throw ConfigError("snapshot " + t.label() + ": a side suffix is only meaningful at the splitter event");
    }
    if (k > 0 && sorted[k - 1] == t) throw ConfigError("duplicate snapshot time " + t.label());
  }

  // Oracle pre-validation of every packet the run will carry.
  std::vector<double> times{0.0, c.t_final};
  if (s.enabled) times.push_back(s.event_time);
  for (const auto& t : c.snapshot_times) times.push_back(t.t);
  for (double t = 0.0; t < c.t_final; t += c.guard_interval) times.push_back(t);

  std::vector<PacketTrack> tracks{{"source packet", c.source, 0.0, split_rotation(s, c.source.kx, c.source.ky)}};
  if (c.mode != Theory::CT) {
    const DetectorSpec& d = c.selected_detector();
    tracks.push_back({"advanced packet from " + d.name, d.final_packet, d.age - c.t_final,
                      split_rotation(s, d.final_packet.kx, d.final_packet.ky)});
  }
  for (const auto& d : c.detectors) {
    if (c.grid.distance_to_boundary(d.final_packet.center()) < kPacketBoundaryMarginSigmas * d.final_packet.sigma) {
      throw ConfigError("detector " + d.name + " final packet is closer than 8 sigma to the grid edge");
    }
  }
  for (std::size_t n = 0; n < tracks.size(); ++n) {
    const bool forward = n == 0;
    for (double t : times) {
      check_track_margin(c, tracks[n], t, 0);
      if (!s.enabled || tracks[n].rotation == 0) continue;
      const bool rotated_side = forward ? t >= s.event_time : t <= s.event_time;
      if (rotated_side) check_track_margin(c, tracks[n], t, tracks[n].rotation);
    }
  }
  return warnings;
}

std::string config_hash(const ExperimentConfig& config) {
  const std::string text = config_to_json(config).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace stqm
