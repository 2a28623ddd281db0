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
#include <functional>

namespace svpr {

// Worker count: SPIKEPLACE_THREADS if set (>0), else hardware concurrency.
int max_threads();

// Runs fn(begin, end) over a partition of [0, n). Ranges are disjoint, so
// callers stay deterministic as long as each index writes only its own
// outputs: no cross-range accumulation happens here.
void parallel_for(int64_t n, const std::function<void(int64_t, int64_t)>& fn);

}  // namespace svpr
