/*
 * Copyright (c) 2026 The spikeplace authors
 *
 * Licensed under the Apache License, Version 2.0;
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an 'AS IS' BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "spikeplace/events.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>

namespace svpr {

namespace {

constexpr char kEvtMagic[4] = {'E', 'V', 'T', '1'};

struct EvtHeader {
  char magic[4];
  uint16_t width;
  uint16_t height;
  uint32_t reserved;
};
static_assert(sizeof(EvtHeader) == 12);

#pragma pack(push, 1)
struct EvtRecord {
  uint64_t t;
  uint16_t x;
  uint16_t y;
  int8_t p;
  int8_t pad;
};
#pragma pack(pop)
static_assert(sizeof(EvtRecord) == 14);

int8_t normalize_polarity(long long raw, const char* where, uint64_t index) {
  // Parsers accept {0,1} encodings and remap 0 -> -1.
  if (raw == 1) return 1;
  if (raw == -1 || raw == 0) return -1;
  throw Error(detail::format_msg("polarity must be -1, 0 or 1 at ", where, " ",
                                 index, ", got ", raw));
}

void check_bounds(long long x, long long y, const Geometry& g,
                  const char* where, uint64_t index) {
  SVPR_CHECK(x >= 0 && x < g.width && y >= 0 && y < g.height,
             "geometry-violation at ", where, " ", index, ": (", x, ",", y,
             ") outside ", g.width, "x", g.height);
}

LoadedEvents finalize(std::vector<Event> events, Geometry g) {
  LoadedEvents out;
  uint64_t unsorted = 0;
  for (size_t i = 1; i < events.size(); ++i) {
    if (events[i].t < events[i - 1].t) ++unsorted;
  }
  if (unsorted > 0) {
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.t < b.t; });
  }
  out.stream.events = std::move(events);
  out.stream.geometry = g;
  out.unsorted_records = unsorted;
  return out;
}

LoadedEvents parse_csv(const std::string& path, Geometry g) {
  SVPR_CHECK(g.width > 0 && g.height > 0,
             "csv event parsing requires an explicit geometry");
  std::ifstream in(path);
  SVPR_CHECK(in.good(), "cannot open event file ", path);

  std::vector<Event> events;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    long long t, x, y, p;
    char c1, c2, c3;
    std::istringstream ss(line);
    if (!(ss >> t >> c1 >> x >> c2 >> y >> c3 >> p) || c1 != ',' ||
        c2 != ',' || c3 != ',') {
      if (line_no == 1) continue;  // optional header
      throw Error(detail::format_msg("malformed-record in ", path, " line ",
                                     line_no, ": '", line, "'"));
    }
    SVPR_CHECK(t >= 0, "malformed-record in ", path, " line ", line_no,
               ": negative timestamp");
    check_bounds(x, y, g, "line", line_no);
    events.push_back(Event{t, static_cast<uint16_t>(x),
                           static_cast<uint16_t>(y),
                           normalize_polarity(p, "line", line_no)});
  }
  return finalize(std::move(events), g);
}

LoadedEvents parse_evt_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  SVPR_CHECK(in.good(), "cannot open event file ", path);

  EvtHeader header{};
  in.read(reinterpret_cast<char*>(&header), sizeof(header));
  SVPR_CHECK(in.gcount() == sizeof(header), "truncated evt header in ", path);
  SVPR_CHECK(std::memcmp(header.magic, kEvtMagic, 4) == 0,
             "bad magic in ", path, " (expected EVT1)");
  SVPR_CHECK(header.reserved == 0, "nonzero reserved field in ", path);
  Geometry g{header.width, header.height};
  SVPR_CHECK(g.width > 0 && g.height > 0, "zero geometry in ", path);

  std::vector<Event> events;
  EvtRecord rec{};
  uint64_t index = 0;
  for (;;) {
    in.read(reinterpret_cast<char*>(&rec), sizeof(rec));
    const auto got = in.gcount();
    if (got == 0) break;
    SVPR_CHECK(got == sizeof(rec), "malformed-record: truncated record ",
               index, " at byte offset ",
               sizeof(EvtHeader) + index * sizeof(EvtRecord), " in ", path);
    check_bounds(rec.x, rec.y, g, "record", index);
    events.push_back(Event{static_cast<TimeUs>(rec.t), rec.x, rec.y,
                           normalize_polarity(rec.p, "record", index)});
    ++index;
  }
  return finalize(std::move(events), g);
}

}  // namespace

Tensor EventHistogram::to_tensor() const {
  Tensor t({2, geometry.height, geometry.width});
  for (size_t i = 0; i < counts.size(); ++i) {
    t.v[i] = static_cast<float>(counts[i]);
  }
  return t;
}

double distance_m(const Position& u, const Position& v) {
  SVPR_CHECK(u.geodetic == v.geodetic,
             "cannot mix arc-length and lat/lon positions");
  if (!u.geodetic) return std::abs(u.a - v.a);
  constexpr double kEarthRadiusM = 6371000.0;
  constexpr double deg = std::numbers::pi / 180.0;
  const double dlat = (v.a - u.a) * deg;
  const double dlon = (v.b - u.b) * deg;
  const double s1 = std::sin(dlat / 2);
  const double s2 = std::sin(dlon / 2);
  const double h = s1 * s1 + std::cos(u.a * deg) * std::cos(v.a * deg) * s2 * s2;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

LoadedEvents parse_event_file(const std::string& path, EventFileFormat format,
                              Geometry geometry_for_csv) {
  switch (format) {
    case EventFileFormat::Csv:
      return parse_csv(path, geometry_for_csv);
    case EventFileFormat::EvtBinary:
      return parse_evt_binary(path);
  }
  throw Error("unknown event file format");
}

void write_event_file(const std::string& path, EventFileFormat format,
                      const EventStream& stream) {
  if (format == EventFileFormat::Csv) {
    std::ofstream out(path);
    SVPR_CHECK(out.good(), "cannot write ", path);
    out << "t_us,x,y,p\n";
    for (const Event& e : stream.events) {
      out << e.t << ',' << e.x << ',' << e.y << ',' << int(e.p) << '\n';
    }
    return;
  }
  std::ofstream out(path, std::ios::binary);
  SVPR_CHECK(out.good(), "cannot write ", path);
  EvtHeader header{};
  std::memcpy(header.magic, kEvtMagic, 4);
  header.width = static_cast<uint16_t>(stream.geometry.width);
  header.height = static_cast<uint16_t>(stream.geometry.height);
  header.reserved = 0;
  out.write(reinterpret_cast<const char*>(&header), sizeof(header));
  for (const Event& e : stream.events) {
    EvtRecord rec{static_cast<uint64_t>(e.t), e.x, e.y, e.p, 0};
    out.write(reinterpret_cast<const char*>(&rec), sizeof(rec));
  }
}

EventHistogram build_histogram(const EventStream& stream, TimeUs t_start,
                               TimeUs t_end) {
  SVPR_CHECK(t_start < t_end, "histogram window must satisfy t_start < t_end");
  EventHistogram h;
  h.geometry = stream.geometry;
  h.t_start = t_start;
  h.t_end = t_end;
  h.counts.assign(static_cast<size_t>(2) * h.geometry.width * h.geometry.height,
                  0);
  const auto& ev = stream.events;
  auto lo = std::lower_bound(ev.begin(), ev.end(), t_start,
                             [](const Event& e, TimeUs t) { return e.t < t; });
  auto hi = std::lower_bound(lo, ev.end(), t_end,
                             [](const Event& e, TimeUs t) { return e.t < t; });
  for (auto it = lo; it != hi; ++it) {
    ++h.at(it->p > 0 ? 0 : 1, it->y, it->x);
  }
  return h;
}

EventStream spatial_decimate(const EventStream& stream, Geometry target) {
  const Geometry src = stream.geometry;
  SVPR_CHECK(target.width > 0 && target.height > 0, "empty target geometry");
  SVPR_CHECK(target.width <= src.width && target.height <= src.height,
             "target geometry ", target.width, "x", target.height,
             " exceeds source ", src.width, "x", src.height);
  EventStream out;
  out.geometry = target;
  out.events.reserve(stream.events.size());
  for (const Event& e : stream.events) {
    Event m = e;
    m.x = static_cast<uint16_t>(int64_t(e.x) * target.width / src.width);
    m.y = static_cast<uint16_t>(int64_t(e.y) * target.height / src.height);
    out.events.push_back(m);
  }
  return out;
}

std::vector<PlaceSample> slice_places(const EventStream& stream,
                                      const PoseTrack& track, double spacing_m,
                                      TimeUs half_window_us, int traverse_id,
                                      int stream_index) {
  (void)stream;  // places are defined by the track; callers window the stream
  SVPR_CHECK(spacing_m > 0, "spacing_m must be positive");
  SVPR_CHECK(track.samples.size() >= 2, "track-too-short: need >= 2 poses");

  const auto& ps = track.samples;
  std::vector<double> cum(ps.size(), 0.0);
  for (size_t i = 1; i < ps.size(); ++i) {
    cum[i] = cum[i - 1] + distance_m(ps[i - 1].pos, ps[i].pos);
  }

  std::vector<PlaceSample> places;
  const double total = cum.back();
  size_t cursor = 0;
  for (int k = 0;; ++k) {
    const double s = k * spacing_m;
    if (k > 0 && s > total) break;
    // First sample at or past the crossing, then pick the nearer neighbor.
    while (cursor + 1 < ps.size() && cum[cursor] < s) ++cursor;
    size_t at = cursor;
    if (at > 0 && s - cum[at - 1] < cum[at] - s) at = cursor - 1;
    PlaceSample p;
    p.place_id = k;
    p.traverse_id = traverse_id;
    p.position = ps[at].pos;
    p.t_start = ps[at].t - half_window_us;
    p.t_end = ps[at].t + half_window_us;
    p.stream_index = stream_index;
    places.push_back(p);
    if (total == 0.0) break;  // stationary track: single place at start
  }
  return places;
}

PoseTrack parse_pose_csv(const std::string& path) {
  std::ifstream in(path);
  SVPR_CHECK(in.good(), "cannot open pose file ", path);
  PoseTrack track;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    long long t;
    double a, b;
    char c1, c2;
    if (!(ss >> t >> c1 >> a) || c1 != ',') {
      if (line_no == 1) continue;  // header
      throw Error(detail::format_msg("malformed pose row in ", path, " line ",
                                     line_no));
    }
    PoseSample s;
    s.t = t;
    if (ss >> c2 >> b && c2 == ',') {
      s.pos = Position{true, a, b};
    } else {
      s.pos = Position{false, a, 0.0};
    }
    SVPR_CHECK(std::isfinite(s.pos.a) && std::isfinite(s.pos.b),
               "non-finite pose in ", path, " line ", line_no);
    track.samples.push_back(s);
  }
  SVPR_CHECK(std::is_sorted(track.samples.begin(), track.samples.end(),
                            [](const PoseSample& x, const PoseSample& y) {
                              return x.t < y.t;
                            }),
             "pose file ", path, " is not sorted by time");
  return track;
}

void write_pose_csv(const std::string& path, const PoseTrack& track) {
  std::ofstream out(path);
  SVPR_CHECK(out.good(), "cannot write ", path);
  for (const PoseSample& s : track.samples) {
    out << s.t << ',' << s.pos.a;
    if (s.pos.geodetic) out << ',' << s.pos.b;
    out << '\n';
  }
}

}  // namespace svpr
