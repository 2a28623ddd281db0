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

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "spikeplace/error.hpp"

namespace svpr {

// Dense row-major tensor. Training runs Tens<float>; the gradient-check
// oracles instantiate the same code with double.
template <typename T>
struct Tens {
  std::vector<int> shape;
  std::vector<T> v;

  Tens() = default;
  explicit Tens(std::vector<int> s) : shape(std::move(s)) {
    v.assign(static_cast<size_t>(numel_of(shape)), T(0));
  }
  Tens(std::vector<int> s, std::vector<T> data)
      : shape(std::move(s)), v(std::move(data)) {
    SVPR_ASSERT(static_cast<int64_t>(v.size()) == numel_of(shape),
                "tensor data does not match shape");
  }

  static int64_t numel_of(const std::vector<int>& s) {
    int64_t n = 1;
    for (int d : s) n *= d;
    return n;
  }

  int64_t numel() const { return static_cast<int64_t>(v.size()); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }
  int ndim() const { return static_cast<int>(shape.size()); }

  T* data() { return v.data(); }
  const T* data() const { return v.data(); }

  T& operator[](int64_t i) { return v[static_cast<size_t>(i)]; }
  const T& operator[](int64_t i) const { return v[static_cast<size_t>(i)]; }

  // [N, C, H, W] indexing
  int64_t idx4(int n, int c, int h, int w) const {
    return ((static_cast<int64_t>(n) * shape[1] + c) * shape[2] + h) *
               shape[3] +
           w;
  }
  // [N, R, K] indexing
  int64_t idx3(int n, int r, int k) const {
    return (static_cast<int64_t>(n) * shape[1] + r) * shape[2] + k;
  }
  // [N, F] indexing
  int64_t idx2(int n, int f) const {
    return static_cast<int64_t>(n) * shape[1] + f;
  }

  void fill(T x) { std::fill(v.begin(), v.end(), x); }

  void add_(const Tens& other) {
    SVPR_ASSERT(v.size() == other.v.size(), "add_: size mismatch");
    for (size_t i = 0; i < v.size(); ++i) v[i] += other.v[i];
  }

  void scale_(T a) {
    for (auto& x : v) x *= a;
  }

  Tens reshaped(std::vector<int> s) const {
    SVPR_ASSERT(numel_of(s) == numel(), "reshape: element count mismatch");
    return Tens(std::move(s), v);
  }

  bool same_shape(const Tens& o) const { return shape == o.shape; }

  bool all_finite() const {
    for (T x : v) {
      if (!std::isfinite(static_cast<double>(x))) return false;
    }
    return true;
  }

  double sum() const {
    double s = 0;
    for (T x : v) s += static_cast<double>(x);
    return s;
  }

  template <typename U>
  Tens<U> cast() const {
    Tens<U> out;
    out.shape = shape;
    out.v.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) out.v[i] = static_cast<U>(v[i]);
    return out;
  }
};

using Tensor = Tens<float>;
using TensorD = Tens<double>;

}  // namespace svpr
