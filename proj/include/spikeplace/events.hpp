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
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spikeplace/tensor.hpp"

namespace svpr {

// Timestamps are integer microseconds everywhere. Both supported sensors
// report at us resolution, and integer time keeps windowing bit-exact.
using TimeUs = int64_t;

struct Geometry {
  int width = 0;
  int height = 0;
  bool operator==(const Geometry&) const = default;
};

// One polarity event. p is +1 (brightness up) or -1 (down).
struct Event {
  TimeUs t = 0;
  uint16_t x = 0;
  uint16_t y = 0;
  int8_t p = 1;
  bool operator==(const Event&) const = default;
};

// Time-sorted event sequence with its sensor geometry. Every constructor and
// transform keeps the sort order and the geometry bound; treat instances as
// immutable once built.
struct EventStream {
  std::vector<Event> events;
  Geometry geometry;

  bool empty() const { return events.empty(); }
  size_t size() const { return events.size(); }
  TimeUs t_begin() const { return events.empty() ? 0 : events.front().t; }
  TimeUs t_end() const { return events.empty() ? 0 : events.back().t; }
};

// Per-polarity integer count grid over a half-open time window.
// Channel 0 counts ON (+1) events, channel 1 counts OFF (-1).
// Counts are never normalized; the values stay integers end to end.
struct EventHistogram {
  std::vector<int32_t> counts;  // [2, height, width] row-major
  Geometry geometry;
  TimeUs t_start = 0;
  TimeUs t_end = 0;

  int32_t& at(int c, int y, int x) {
    return counts[(static_cast<size_t>(c) * geometry.height + y) *
                      geometry.width +
                  x];
  }
  int32_t at(int c, int y, int x) const {
    return counts[(static_cast<size_t>(c) * geometry.height + y) *
                      geometry.width +
                  x];
  }
  int64_t total() const {
    int64_t s = 0;
    for (int32_t c : counts) s += c;
    return s;
  }

  // Network input view: counts as float, shape [2, H, W].
  Tensor to_tensor() const;
};

// Geographic position: either a 1-D route arc length in meters or a
// (lat, lon) pair in degrees.
struct Position {
  bool geodetic = false;
  double a = 0.0;  // arc-length meters, or latitude degrees
  double b = 0.0;  // unused, or longitude degrees
};

// Meters between two positions: absolute difference for arc-length,
// great-circle (haversine, R = 6371 km) for lat/lon.
double distance_m(const Position& u, const Position& v);

struct PoseSample {
  TimeUs t = 0;
  Position pos;
};

// (t, position) samples sorted by t.
struct PoseTrack {
  std::vector<PoseSample> samples;
};

// One place observation: an event window tied to a geographic position.
struct PlaceSample {
  int place_id = 0;
  int traverse_id = 0;
  Position position;
  TimeUs t_start = 0;
  TimeUs t_end = 0;  // window is [t_start, t_end)
  int stream_index = 0;
};

enum class EventFileFormat { Csv, EvtBinary };

struct LoadedEvents {
  EventStream stream;
  // Records that arrived out of order and were re-sorted (permitted, flagged).
  uint64_t unsorted_records = 0;
};

// CSV rows are "t_us,x,y,p" with p in {-1,1} or {0,1} (0 maps to -1); header
// line optional. The binary format is described in docs/formats.md.
// Throws Error on malformed records (with line/offset) and on coordinates
// outside `geometry` (csv) / the header geometry (binary).
LoadedEvents parse_event_file(const std::string& path, EventFileFormat format,
                              Geometry geometry_for_csv = {});

void write_event_file(const std::string& path, EventFileFormat format,
                      const EventStream& stream);

// counts[c][y][x] = number of events of polarity channel c at (x, y) with
// t_start <= t < t_end. An empty window yields an all-zero histogram.
EventHistogram build_histogram(const EventStream& stream, TimeUs t_start,
                               TimeUs t_end);

// Floor-ratio coordinate decimation: x' = floor(x * width' / width), same for
// y. Timestamps, polarities and the event count are unchanged. Target must
// not exceed the source geometry.
EventStream spatial_decimate(const EventStream& stream, Geometry target);

// One PlaceSample per `spacing_m` of traveled arc length. Each place is
// centered at the pose timestamp nearest the crossing, with window
// [t_c - half_window_us, t_c + half_window_us). Requires >= 2 pose samples.
std::vector<PlaceSample> slice_places(const EventStream& stream,
                                      const PoseTrack& track, double spacing_m,
                                      TimeUs half_window_us, int traverse_id,
                                      int stream_index);

// Pose CSV: "t_us,pos" (1-D meters) or "t_us,lat,lon"; the column count
// selects the mode.
PoseTrack parse_pose_csv(const std::string& path);
void write_pose_csv(const std::string& path, const PoseTrack& track);

}  // namespace svpr
