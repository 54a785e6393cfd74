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
 * Exception types shared by every bqlib module.
 *
 * Three kinds of failure are kept apart:
 *  - InputError: the caller handed over something malformed (a non-square
 *    table, a non-permutation, a parameter that is not a unit, ...);
 *  - CapExceeded: an exhaustive search would exceed a configured bound;
 *  - ConsistencyError: an internal self-check failed. These correspond to
 *    a mathematical statement being violated by the computation and should
 *    never be observed.
 */

#ifndef BQ_ERRORS_HPP
#define BQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bq {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string bound, std::size_t limit, std::size_t requested)
      : std::runtime_error("cap exceeded: " + bound + " is " +
                           std::to_string(requested) + ", limit " +
                           std::to_string(limit)),
        bound_(std::move(bound)),
        limit_(limit),
        requested_(requested) {}

  const std::string& bound() const noexcept { return bound_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::string bound_;
  std::size_t limit_;
  std::size_t requested_;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bq

#endif  // BQ_ERRORS_HPP
