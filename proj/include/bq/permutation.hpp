/*
 *   Copyright 2026 The bqlib Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Permutations of {0, ..., n-1} in image notation.
 */

#ifndef BQ_PERMUTATION_HPP
#define BQ_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace bq {

/// Elements of every finite carrier are the indices 0..n-1.
using Element = std::uint32_t;

/// A total map between two index ranges, not necessarily bijective.
using IndexMap = std::vector<Element>;

inline bool is_permutation(std::span<const Element> images) {
  std::vector<bool> seen(images.size(), false);
  for (Element v : images) {
    if (v >= images.size() || seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Element> images) : images_(std::move(images)) {
    if (!is_permutation(images_)) {
      throw InputError("not a permutation: [" + join(images_) + "]");
    }
  }

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), Element{0});
    return p;
  }

  /// Skips validation; the caller guarantees `images` is a permutation.
  static Permutation unchecked(std::vector<Element> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Element operator()(Element x) const { return images_[x]; }
  Element operator[](std::size_t x) const { return images_[x]; }
  std::span<const Element> images() const noexcept { return images_; }
  const std::vector<Element>& vector() const noexcept { return images_; }

  Permutation inverse() const {
    std::vector<Element> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[images_[i]] = static_cast<Element>(i);
    }
    return unchecked(std::move(inv));
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  /// Order in the symmetric group: lcm of the cycle lengths.
  std::size_t order() const {
    std::vector<bool> done(images_.size(), false);
    std::size_t result = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (done[i]) {
        continue;
      }
      std::size_t len = 0;
      for (std::size_t j = i; !done[j]; j = images_[j]) {
        done[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  static std::string join(std::span<const Element> values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i != 0) {
        os << ' ';
      }
      os << values[i];
    }
    return os.str();
  }

 private:
  std::vector<Element> images_;
};

/// (f * g)(x) = f(g(x)): apply g first.
inline Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) {
    throw InputError("composing permutations of different degree");
  }
  std::vector<Element> out(g.degree());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f(g(static_cast<Element>(i)));
  }
  return Permutation::unchecked(std::move(out));
}

/// h f h^-1
inline Permutation conjugate(const Permutation& f, const Permutation& h) {
  return h * f * h.inverse();
}

inline std::string to_string(const Permutation& p) {
  return Permutation::join(p.images());
}

}  // namespace bq

#endif  // BQ_PERMUTATION_HPP
