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

#ifndef BQ_REPORT_HPP
#define BQ_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace bq {

/// Axiom identifiers used in violation records.
namespace axiom {
inline constexpr std::string_view kIdempotence = "Q1-idempotence";
inline constexpr std::string_view kRightTranslation = "Q2-right-translation";
inline constexpr std::string_view kSelfDistributivity = "Q3-self-distributivity";

inline constexpr std::string_view kDiagonal = "B1-diagonal";
inline constexpr std::string_view kAlphaBijective = "B2-alpha-bijective";
inline constexpr std::string_view kBetaBijective = "B2-beta-bijective";
inline constexpr std::string_view kPairMapBijective = "B2-pair-map-bijective";
inline constexpr std::string_view kExchange1 = "B3-exchange-1";
inline constexpr std::string_view kExchange2 = "B3-exchange-2";
inline constexpr std::string_view kExchange3 = "B3-exchange-3";

inline constexpr std::string_view kAssociativity = "G-associativity";
inline constexpr std::string_view kIdentity = "G-identity";
inline constexpr std::string_view kInverse = "G-inverse";

inline constexpr std::string_view kBetaAutomorphism = "S0-beta-automorphism";
inline constexpr std::string_view kCoherence = "S1-coherence";
inline constexpr std::string_view kDiagonalBijection = "S2-diagonal-bijection";
}  // namespace axiom

struct Violation {
  std::string axiom;
  std::vector<Element> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline constexpr std::size_t kDefaultViolationCap = 16;

struct VerifyOptions {
  /// Maximum number of violations stored in a report; must be positive.
  std::size_t max_violations = kDefaultViolationCap;
};

/// Outcome of an exhaustive axiom check. Stores at most `cap` violations but
/// counts all of them.
class VerificationReport {
 public:
  explicit VerificationReport(std::size_t cap = kDefaultViolationCap)
      : cap_(cap) {
    if (cap_ == 0) {
      throw InputError("violation cap must be positive");
    }
  }

  bool passed() const noexcept { return violations_.empty(); }
  std::size_t total() const noexcept { return total_; }
  std::size_t cap() const noexcept { return cap_; }
  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

  void add(std::string_view axiom_id, std::vector<Element> witness) {
    ++total_;
    if (violations_.size() < cap_) {
      violations_.push_back({std::string(axiom_id), std::move(witness)});
    }
  }

  bool has(std::string_view axiom_id) const {
    return std::any_of(violations_.begin(), violations_.end(),
                       [&](const Violation& v) { return v.axiom == axiom_id; });
  }

  void merge(const VerificationReport& other) {
    for (const auto& v : other.violations_) {
      if (violations_.size() < cap_) {
        violations_.push_back(v);
      }
    }
    total_ += other.total_;
  }

  std::string summary() const {
    if (passed()) {
      return "PASS";
    }
    std::string s = "FAIL (" + std::to_string(total_) + " violation" +
                    (total_ == 1 ? "" : "s") + ")";
    return s;
  }

 private:
  std::size_t cap_;
  std::size_t total_ = 0;
  std::vector<Violation> violations_;
};

inline std::string to_string(const Violation& v) {
  return v.axiom + " [" + Permutation::join(v.witness) + "]";
}

/// Thrown when a table fails the axioms of the type being constructed.
class AxiomError : public InputError {
 public:
  AxiomError(const std::string& what_kind, VerificationReport report)
      : InputError(what_kind + " axioms fail: " +
                   (report.violations().empty()
                        ? std::string("?")
                        : to_string(report.violations().front()))),
        report_(std::move(report)) {}

  const VerificationReport& report() const noexcept { return report_; }

 private:
  VerificationReport report_;
};

}  // namespace bq

#endif  // BQ_REPORT_HPP
