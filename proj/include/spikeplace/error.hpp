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

#include <sstream>
#include <stdexcept>
#include <string>

namespace svpr {

// Data/usage problems the caller can act on: bad files, bad config, bad
// shapes. Internal invariant breaches use SVPR_ASSERT and are bugs.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
template <typename... Args>
std::string format_msg(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}
}  // namespace detail

}  // namespace svpr

#define SVPR_CHECK(cond, ...)                                         \
  do {                                                                \
    if (!(cond)) {                                                    \
      throw ::svpr::Error(::svpr::detail::format_msg(__VA_ARGS__));   \
    }                                                                 \
  } while (0)

#define SVPR_ASSERT(cond, ...)                                        \
  do {                                                                \
    if (!(cond)) {                                                    \
      throw std::logic_error(                                         \
          ::svpr::detail::format_msg("internal: ", __VA_ARGS__));     \
    }                                                                 \
  } while (0)
