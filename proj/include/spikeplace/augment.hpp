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

#include "spikeplace/events.hpp"

namespace svpr {

// Temporal-window dilation. A duration dt ~ U[t_min_us, t_max_us] (integer
// microseconds) is drawn per call and the stream is cut to the closed
// interval [t_c - dt/2, t_c + dt/2]. Note the interval is closed on both
// ends, unlike the half-open histogram windows; with integer timestamps this
// can include one boundary event a half-open cut would drop.
struct DilationConfig {
  TimeUs t_min_us = 0;
  TimeUs t_max_us = 0;
  bool valid() const { return t_min_us > 0 && t_min_us <= t_max_us; }
};

enum class DropMode { Random, TimeWindow, SpatialRegion };

struct DropConfig {
  DropMode mode = DropMode::Random;
  double ratio = 0.2;
  bool valid() const { return ratio >= 0.0 && ratio < 1.0; }
};

struct DilationResult {
  EventStream stream;
  TimeUs dt_us = 0;  // the drawn window duration
  TimeUs window_start = 0;
  TimeUs window_end = 0;  // inclusive
};

// Deterministic under (input, cfg, seed); output is a contiguous slice of the
// input, so order is preserved.
DilationResult event_dilation(const EventStream& stream, TimeUs t_c,
                              const DilationConfig& cfg, uint64_t seed);

// Removes events, never adds or reorders. Random mode drops each event
// independently with probability `ratio`; time-window mode removes one
// contiguous span covering a ratio-fraction of the stream duration;
// spatial-region mode removes a rectangle covering a ratio-fraction of the
// sensor area.
EventStream event_drop(const EventStream& stream, const DropConfig& cfg,
                       uint64_t seed);

// counts'[c][y][x] = counts[c][y][width-1-x]. Operates on histograms: the
// flip commutes with histogramming, so no stream-level variant exists.
EventHistogram flip_x(const EventHistogram& hist);

}  // namespace svpr
