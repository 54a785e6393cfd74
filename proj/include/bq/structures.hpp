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
 * Biquandle structures on a quandle.
 *
 * A biquandle structure on (X, *) is a family of quandle automorphisms
 * beta_y, one per element, with
 *
 *   (1) beta_{beta_y(x*y)} beta_y = beta_{beta_x(y)} beta_x   for all x, y;
 *   (2) y -> beta_y(y) is a bijection.
 *
 * Every such family gives a biquandle via
 *
 *   x under y = beta_y(x * y),   x over y = beta_y(x),
 *
 * and every finite biquandle arises this way from the over-columns of its own
 * underlying quandle x * y = beta_y^-1(x under y). `realize` and
 * `extract_structure` are mutually inverse.
 */

#ifndef BQ_STRUCTURES_HPP
#define BQ_STRUCTURES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "report.hpp"
#include "tables.hpp"

namespace bq {

namespace detail {

template <class Sink>
void check_structure(const FiniteQuandle& base, std::span<const Permutation> betas,
                     Sink& sink) {
  const auto n = static_cast<Element>(base.order());
  for (Element y = 0; y < n; ++y) {
    const auto& b = betas[y];
    for (Element u = 0; u < n; ++u) {
      for (Element v = 0; v < n; ++v) {
        if (b(base(u, v)) != base(b(u), b(v)) &&
            !sink(axiom::kBetaAutomorphism, {y, u, v})) {
          return;
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const auto& lhs_outer = betas[betas[y](base(x, y))];
      const auto& rhs_outer = betas[betas[x](y)];
      for (Element a = 0; a < n; ++a) {
        if (lhs_outer(betas[y](a)) != rhs_outer(betas[x](a))) {
          if (!sink(axiom::kCoherence, {x, y, a})) {
            return;
          }
          break;
        }
      }
    }
  }
  std::vector<Element> first(n, n);
  for (Element y = 0; y < n; ++y) {
    const Element v = betas[y](y);
    if (first[v] != n) {
      if (!sink(axiom::kDiagonalBijection, {first[v], y})) {
        return;
      }
    } else {
      first[v] = y;
    }
  }
}

inline void check_beta_shapes(const FiniteQuandle& base, std::span<const Permutation> betas) {
  if (betas.size() != base.order()) {
    throw InputError("structure has " + std::to_string(betas.size()) +
                     " maps for a quandle of order " + std::to_string(base.order()));
  }
  for (std::size_t y = 0; y < betas.size(); ++y) {
    if (betas[y].degree() != base.order()) {
      throw InputError("beta_" + std::to_string(y) + " has degree " +
                       std::to_string(betas[y].degree()) + ", expected " +
                       std::to_string(base.order()));
    }
  }
}

}  // namespace detail

/// Exhaustive check of the automorphism property, coherence and diagonal
/// bijectivity.
/// Witnesses: S0 (y, u, v); S1 (x, y, a) with a the first point where the two
/// composites differ; S2 (y1, y2) with beta_y1(y1) == beta_y2(y2).
inline VerificationReport verify_structure(const FiniteQuandle& base,
                                           std::span<const Permutation> betas,
                                           const VerifyOptions& options = {}) {
  detail::check_beta_shapes(base, betas);
  VerificationReport report(options.max_violations);
  detail::ReportSink sink{report};
  detail::check_structure(base, betas, sink);
  return report;
}

inline bool is_structure(const FiniteQuandle& base, std::span<const Permutation> betas) {
  detail::check_beta_shapes(base, betas);
  detail::FirstFailureSink sink;
  detail::check_structure(base, betas, sink);
  return !sink.failed;
}

class BiquandleStructure {
 public:
  BiquandleStructure(FiniteQuandle base, std::vector<Permutation> betas)
      : base_(std::move(base)), betas_(std::move(betas)) {
    auto report = verify_structure(base_, betas_);
    if (!report.passed()) {
      throw AxiomError("biquandle structure", std::move(report));
    }
  }
  BiquandleStructure(FiniteQuandle base, std::vector<Permutation> betas, Unchecked)
      : base_(std::move(base)), betas_(std::move(betas)) {}

  std::size_t order() const noexcept { return base_.order(); }
  const FiniteQuandle& base() const noexcept { return base_; }
  const std::vector<Permutation>& betas() const noexcept { return betas_; }
  const Permutation& beta(Element y) const { return betas_[y]; }

  friend bool operator==(const BiquandleStructure&, const BiquandleStructure&) = default;
  friend auto operator<=>(const BiquandleStructure&, const BiquandleStructure&) = default;

 private:
  FiniteQuandle base_;
  std::vector<Permutation> betas_;
};

/// beta_y = f for every y; f must be an automorphism of `base`.
inline BiquandleStructure constant_structure(const FiniteQuandle& base, const Permutation& f) {
  if (f.degree() != base.order()) {
    throw InputError("automorphism degree does not match quandle order");
  }
  const auto n = static_cast<Element>(base.order());
  for (Element u = 0; u < n; ++u) {
    for (Element v = 0; v < n; ++v) {
      if (f(base(u, v)) != base(f(u), f(v))) {
        throw InputError("[" + to_string(f) + "] is not an automorphism of the quandle");
      }
    }
  }
  return BiquandleStructure(base, std::vector<Permutation>(n, f), unchecked);
}

/// The structure beta_y(a) = y^-2 a on the core quandle a * b = b a^-1 b.
/// Realizes to the Wada biquandle of the group.
inline BiquandleStructure wada_structure(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Permutation> betas;
  betas.reserve(n);
  for (Element y = 0; y < n; ++y) {
    const Element yinv = g.inverse(y);
    const Element y_minus_two = g(yinv, yinv);
    std::vector<Element> images(n);
    for (Element a = 0; a < n; ++a) {
      images[a] = g(y_minus_two, a);
    }
    betas.push_back(Permutation::unchecked(std::move(images)));
  }
  return BiquandleStructure(core_quandle(g), std::move(betas));
}

struct RealizeOptions {
  /// Re-verify the structure and the resulting tables. Bulk enumeration,
  /// where structures are already validated, can switch this off.
  bool validate = true;
};

/// x under y = beta_y(x * y), x over y = beta_y(x).
inline FiniteBiquandle realize(const BiquandleStructure& s, const RealizeOptions& options = {}) {
  const auto n = static_cast<Element>(s.order());
  if (options.validate) {
    auto report = verify_structure(s.base(), s.betas());
    if (!report.passed()) {
      throw AxiomError("biquandle structure", std::move(report));
    }
  }
  std::vector<Element> under(static_cast<std::size_t>(n) * n);
  std::vector<Element> over(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      under[x * n + y] = s.beta(y)(s.base()(x, y));
      over[x * n + y] = s.beta(y)(x);
    }
  }
  OperationTable u(n, std::move(under));
  OperationTable o(n, std::move(over));
  if (options.validate) {
    auto report = verify_biquandle(u, o);
    if (!report.passed()) {
      throw ConsistencyError("realized tables are not a biquandle: " +
                             to_string(report.violations().front()));
    }
  }
  return FiniteBiquandle(std::move(u), std::move(o), unchecked);
}

/// x * y = beta_y^-1(x under y). The result is always a quandle; a failure
/// is reported as a ConsistencyError.
inline FiniteQuandle underlying_quandle(const FiniteBiquandle& b) {
  const auto n = static_cast<Element>(b.order());
  std::vector<Element> entries(static_cast<std::size_t>(n) * n);
  for (Element y = 0; y < n; ++y) {
    const auto beta_inv = b.beta(y).inverse();
    for (Element x = 0; x < n; ++x) {
      entries[x * n + y] = beta_inv(b.under(x, y));
    }
  }
  OperationTable op(n, std::move(entries));
  auto report = verify_quandle(op);
  if (!report.passed()) {
    throw ConsistencyError("underlying operation is not a quandle: " +
                           to_string(report.violations().front()));
  }
  return FiniteQuandle(std::move(op), unchecked);
}

/// The over-columns of `b` as a structure on its underlying quandle. The
/// result is verified; failure raises ConsistencyError.
inline BiquandleStructure extract_structure(const FiniteBiquandle& b) {
  auto base = underlying_quandle(b);
  std::vector<Permutation> betas;
  betas.reserve(b.order());
  for (Element y = 0; y < b.order(); ++y) {
    betas.push_back(b.beta(y));
  }
  auto report = verify_structure(base, betas);
  if (!report.passed()) {
    throw ConsistencyError("extracted family is not a biquandle structure: " +
                           to_string(report.violations().front()));
  }
  return BiquandleStructure(std::move(base), std::move(betas), unchecked);
}

}  // namespace bq

#endif  // BQ_STRUCTURES_HPP
