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
#include "spikeplace/augment.hpp"

#include <algorithm>
#include <cmath>

#include "spikeplace/rng.hpp"

namespace svpr {

DilationResult event_dilation(const EventStream& stream, TimeUs t_c,
                              const DilationConfig& cfg, uint64_t seed) {
  SVPR_CHECK(cfg.valid(), "dilation needs 0 < t_min_us <= t_max_us");
  Rng rng(seed);
  const TimeUs dt = rng.uniform_int(cfg.t_min_us, cfg.t_max_us);

  DilationResult out;
  out.dt_us = dt;
  out.window_start = t_c - dt / 2;
  out.window_end = t_c + dt / 2;
  out.stream.geometry = stream.geometry;

  const auto& ev = stream.events;
  auto lo = std::lower_bound(
      ev.begin(), ev.end(), out.window_start,
      [](const Event& e, TimeUs t) { return e.t < t; });
  auto hi = std::upper_bound(
      lo, ev.end(), out.window_end,
      [](TimeUs t, const Event& e) { return t < e.t; });
  out.stream.events.assign(lo, hi);
  return out;
}

EventStream event_drop(const EventStream& stream, const DropConfig& cfg,
                       uint64_t seed) {
  SVPR_CHECK(cfg.valid(), "drop ratio must be in [0, 1)");
  EventStream out;
  out.geometry = stream.geometry;
  if (stream.empty() || cfg.ratio == 0.0) {
    out.events = stream.events;
    return out;
  }
  Rng rng(seed);
  out.events.reserve(stream.events.size());

  switch (cfg.mode) {
    case DropMode::Random: {
      for (const Event& e : stream.events) {
        if (!rng.bernoulli(cfg.ratio)) out.events.push_back(e);
      }
      break;
    }
    case DropMode::TimeWindow: {
      const TimeUs t0 = stream.t_begin();
      const TimeUs t1 = stream.t_end();
      const TimeUs span =
          static_cast<TimeUs>(std::llround(cfg.ratio * double(t1 - t0)));
      const TimeUs start =
          span >= t1 - t0 ? t0 : t0 + rng.uniform_int(0, (t1 - t0) - span);
      for (const Event& e : stream.events) {
        if (e.t < start || e.t >= start + span) out.events.push_back(e);
      }
      break;
    }
    case DropMode::SpatialRegion: {
      const int w = stream.geometry.width;
      const int h = stream.geometry.height;
      const double side = std::sqrt(cfg.ratio);
      const int rw = std::min(w, static_cast<int>(std::ceil(side * w)));
      const int rh = std::min(h, static_cast<int>(std::ceil(side * h)));
      const int x0 = static_cast<int>(rng.uniform_int(0, w - rw));
      const int y0 = static_cast<int>(rng.uniform_int(0, h - rh));
      for (const Event& e : stream.events) {
        const bool inside = e.x >= x0 && e.x < x0 + rw && e.y >= y0 &&
                            e.y < y0 + rh;
        if (!inside) out.events.push_back(e);
      }
      break;
    }
  }
  return out;
}

EventHistogram flip_x(const EventHistogram& hist) {
  EventHistogram out = hist;
  const int w = hist.geometry.width;
  const int h = hist.geometry.height;
  for (int c = 0; c < 2; ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        out.at(c, y, x) = hist.at(c, y, w - 1 - x);
      }
    }
  }
  return out;
}

}  // namespace svpr
