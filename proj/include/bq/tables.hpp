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
 * Operation tables of finite quandles, biquandles and groups, exhaustive axiom
 * verifiers, and constructors for the standard example families.
 *
 * Operand convention: `table(x, y)` is `x op y`, the left operand selects the
 * row. For a biquandle, `under(x, y)` is the underlined operation and
 * `over(x, y)` the overlined one; alpha_y and beta_y are their columns.
 */

#ifndef BQ_TABLES_HPP
#define BQ_TABLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "report.hpp"

namespace bq {

/// Residue of `a` modulo `n` in 0..n-1 for possibly negative `a`.
inline Element mod(long long a, std::size_t n) {
  const auto m = static_cast<long long>(n);
  long long r = a % m;
  if (r < 0) {
    r += m;
  }
  return static_cast<Element>(r);
}

inline bool is_unit_mod(long long a, std::size_t n) {
  return std::gcd(static_cast<long long>(mod(a, n)), static_cast<long long>(n)) == 1;
}

/// Multiplicative inverse of a unit modulo n.
inline Element inverse_mod(long long a, std::size_t n) {
  const Element r = mod(a, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (mod(static_cast<long long>(r) * static_cast<long long>(k), n) == mod(1, n)) {
      return static_cast<Element>(k);
    }
  }
  throw InputError(std::to_string(a) + " is not a unit modulo " + std::to_string(n));
}

class OperationTable {
 public:
  OperationTable() = default;

  /// Row-major entries, `entries[x * n + y] = x op y`.
  OperationTable(std::size_t n, std::vector<Element> entries)
      : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) {
      throw InputError("table order must be positive");
    }
    if (entries_.size() != n_ * n_) {
      throw InputError("table of order " + std::to_string(n_) + " needs " +
                       std::to_string(n_ * n_) + " entries, got " +
                       std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] >= n_) {
        throw InputError("entry (" + std::to_string(i / n_) + ", " +
                         std::to_string(i % n_) + ") = " +
                         std::to_string(entries_[i]) + " out of range 0.." +
                         std::to_string(n_ - 1));
      }
    }
  }

  static OperationTable from_rows(const std::vector<std::vector<Element>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Element> entries;
    entries.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      if (rows[x].size() != n) {
        throw InputError("table is not square: row " + std::to_string(x) +
                         " has " + std::to_string(rows[x].size()) +
                         " entries, expected " + std::to_string(n));
      }
      entries.insert(entries.end(), rows[x].begin(), rows[x].end());
    }
    return OperationTable(n, std::move(entries));
  }

  /// Builds the table of `f(x, y)` reduced modulo n.
  template <class F>
  static OperationTable generate(std::size_t n, F&& f) {
    if (n == 0) {
      throw InputError("table order must be positive");
    }
    std::vector<Element> entries(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        entries[x * n + y] = mod(static_cast<long long>(f(static_cast<long long>(x),
                                                          static_cast<long long>(y))),
                                 n);
      }
    }
    return OperationTable(n, std::move(entries));
  }

  std::size_t order() const noexcept { return n_; }
  Element operator()(Element x, Element y) const { return entries_[x * n_ + y]; }
  std::span<const Element> entries() const noexcept { return entries_; }

  std::vector<Element> row(Element x) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(x * n_),
            entries_.begin() + static_cast<std::ptrdiff_t>((x + 1) * n_)};
  }

  /// The column map x -> x op y.
  std::vector<Element> column(Element y) const {
    std::vector<Element> c(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      c[x] = entries_[x * n_ + y];
    }
    return c;
  }

  bool column_is_permutation(Element y) const { return is_permutation(column(y)); }

  friend bool operator==(const OperationTable&, const OperationTable&) = default;
  friend auto operator<=>(const OperationTable&, const OperationTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> entries_;
};

namespace detail {

// Sink collecting every violation into a report.
struct ReportSink {
  VerificationReport& report;
  bool operator()(std::string_view id, std::vector<Element> witness) {
    report.add(id, std::move(witness));
    return true;
  }
};

// Sink that stops at the first violation.
struct FirstFailureSink {
  bool failed = false;
  bool operator()(std::string_view, std::vector<Element>) {
    failed = true;
    return false;
  }
};

// Reports every x2 that collides with an earlier x1 in the column map of y.
template <class Sink>
bool check_column_bijective(const OperationTable& t, std::string_view id,
                            Sink& sink) {
  const auto n = static_cast<Element>(t.order());
  for (Element y = 0; y < n; ++y) {
    std::vector<Element> first(n, n);
    for (Element x = 0; x < n; ++x) {
      const Element v = t(x, y);
      if (first[v] != n) {
        if (!sink(id, {y, first[v], x})) {
          return false;
        }
      } else {
        first[v] = x;
      }
    }
  }
  return true;
}

template <class Sink>
void check_quandle(const OperationTable& op, Sink& sink) {
  const auto n = static_cast<Element>(op.order());
  for (Element x = 0; x < n; ++x) {
    if (op(x, x) != x && !sink(axiom::kIdempotence, {x})) {
      return;
    }
  }
  if (!check_column_bijective(op, axiom::kRightTranslation, sink)) {
    return;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (op(op(x, y), z) != op(op(x, z), op(y, z)) &&
            !sink(axiom::kSelfDistributivity, {x, y, z})) {
          return;
        }
      }
    }
  }
}

template <class Sink>
void check_biquandle(const OperationTable& under, const OperationTable& over,
                     Sink& sink) {
  const auto n = static_cast<Element>(under.order());
  for (Element x = 0; x < n; ++x) {
    if (under(x, x) != over(x, x) && !sink(axiom::kDiagonal, {x})) {
      return;
    }
  }
  if (!check_column_bijective(under, axiom::kAlphaBijective, sink) ||
      !check_column_bijective(over, axiom::kBetaBijective, sink)) {
    return;
  }
  // S(x, y) = (y over x, x under y); record the first preimage of each pair.
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  std::vector<std::size_t> first(nn, nn);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::size_t image = static_cast<std::size_t>(over(y, x)) * n + under(x, y);
      const std::size_t pre = static_cast<std::size_t>(x) * n + y;
      if (first[image] != nn) {
        const auto x1 = static_cast<Element>(first[image] / n);
        const auto y1 = static_cast<Element>(first[image] % n);
        if (!sink(axiom::kPairMapBijective, {x1, y1, x, y})) {
          return;
        }
      } else {
        first[image] = pre;
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (under(under(x, y), under(z, y)) != under(under(x, z), over(y, z)) &&
            !sink(axiom::kExchange1, {x, y, z})) {
          return;
        }
        if (over(under(x, y), under(z, y)) != under(over(x, z), over(y, z)) &&
            !sink(axiom::kExchange2, {x, y, z})) {
          return;
        }
        if (over(over(x, y), over(z, y)) != over(over(x, z), under(y, z)) &&
            !sink(axiom::kExchange3, {x, y, z})) {
          return;
        }
      }
    }
  }
}

inline std::size_t find_identity(const OperationTable& mul) {
  const std::size_t n = mul.order();
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      ok = mul(e, x) == x && mul(x, e) == x;
    }
    if (ok) {
      return e;
    }
  }
  return n;
}

template <class Sink>
void check_group(const OperationTable& mul, Sink& sink) {
  const auto n = static_cast<Element>(mul.order());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z)) &&
            !sink(axiom::kAssociativity, {x, y, z})) {
          return;
        }
      }
    }
  }
  const std::size_t e = find_identity(mul);
  if (e == n) {
    sink(axiom::kIdentity, {});
    return;
  }
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      found = mul(x, y) == e && mul(y, x) == e;
    }
    if (!found && !sink(axiom::kInverse, {x})) {
      return;
    }
  }
}

}  // namespace detail

inline VerificationReport verify_quandle(const OperationTable& op,
                                         const VerifyOptions& options = {}) {
  VerificationReport report(options.max_violations);
  detail::ReportSink sink{report};
  detail::check_quandle(op, sink);
  return report;
}

inline bool is_quandle(const OperationTable& op) {
  detail::FirstFailureSink sink;
  detail::check_quandle(op, sink);
  return !sink.failed;
}

inline VerificationReport verify_biquandle(const OperationTable& under,
                                           const OperationTable& over,
                                           const VerifyOptions& options = {}) {
  if (under.order() != over.order()) {
    throw InputError("biquandle tables have different orders " +
                     std::to_string(under.order()) + " and " +
                     std::to_string(over.order()));
  }
  VerificationReport report(options.max_violations);
  detail::ReportSink sink{report};
  detail::check_biquandle(under, over, sink);
  return report;
}

inline bool is_biquandle(const OperationTable& under, const OperationTable& over) {
  if (under.order() != over.order()) {
    return false;
  }
  detail::FirstFailureSink sink;
  detail::check_biquandle(under, over, sink);
  return !sink.failed;
}

inline VerificationReport verify_group(const OperationTable& mul,
                                       const VerifyOptions& options = {}) {
  VerificationReport report(options.max_violations);
  detail::ReportSink sink{report};
  detail::check_group(mul, sink);
  return report;
}

/// Tag selecting the non-validating constructors.
struct Unchecked {};
inline constexpr Unchecked unchecked{};

class FiniteQuandle {
 public:
  explicit FiniteQuandle(OperationTable op) : op_(std::move(op)) {
    auto report = verify_quandle(op_);
    if (!report.passed()) {
      throw AxiomError("quandle", std::move(report));
    }
  }
  FiniteQuandle(OperationTable op, Unchecked) : op_(std::move(op)) {}

  std::size_t order() const noexcept { return op_.order(); }
  Element operator()(Element x, Element y) const { return op_(x, y); }
  const OperationTable& table() const noexcept { return op_; }

  /// S_y : x -> x * y.
  Permutation symmetry(Element y) const {
    return Permutation::unchecked(op_.column(y));
  }

  friend bool operator==(const FiniteQuandle&, const FiniteQuandle&) = default;
  friend auto operator<=>(const FiniteQuandle&, const FiniteQuandle&) = default;

 private:
  OperationTable op_;
};

class FiniteBiquandle {
 public:
  FiniteBiquandle(OperationTable under, OperationTable over)
      : under_(std::move(under)), over_(std::move(over)) {
    auto report = verify_biquandle(under_, over_);
    if (!report.passed()) {
      throw AxiomError("biquandle", std::move(report));
    }
  }
  FiniteBiquandle(OperationTable under, OperationTable over, Unchecked)
      : under_(std::move(under)), over_(std::move(over)) {}

  std::size_t order() const noexcept { return under_.order(); }
  Element under(Element x, Element y) const { return under_(x, y); }
  Element over(Element x, Element y) const { return over_(x, y); }
  const OperationTable& under_table() const noexcept { return under_; }
  const OperationTable& over_table() const noexcept { return over_; }

  /// alpha_y : x -> x under y.
  Permutation alpha(Element y) const { return Permutation::unchecked(under_.column(y)); }
  /// beta_y : x -> x over y.
  Permutation beta(Element y) const { return Permutation::unchecked(over_.column(y)); }

  friend bool operator==(const FiniteBiquandle&, const FiniteBiquandle&) = default;
  friend auto operator<=>(const FiniteBiquandle&, const FiniteBiquandle&) = default;

 private:
  OperationTable under_;
  OperationTable over_;
};

class FiniteGroup {
 public:
  explicit FiniteGroup(OperationTable mul) : mul_(std::move(mul)) {
    auto report = verify_group(mul_);
    if (!report.passed()) {
      throw AxiomError("group", std::move(report));
    }
    const std::size_t n = mul_.order();
    identity_ = static_cast<Element>(detail::find_identity(mul_));
    inverse_.assign(n, 0);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (mul_(x, y) == identity_) {
          inverse_[x] = y;
          break;
        }
      }
    }
  }

  std::size_t order() const noexcept { return mul_.order(); }
  Element operator()(Element a, Element b) const { return mul_(a, b); }
  Element identity() const noexcept { return identity_; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::span<const Element> inverses() const noexcept { return inverse_; }
  const OperationTable& table() const noexcept { return mul_; }

 private:
  OperationTable mul_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

// ---------------------------------------------------------------------------
// Groups used as carriers.

inline FiniteGroup cyclic_group(std::size_t n) {
  return FiniteGroup(OperationTable::generate(n, [](long long a, long long b) { return a + b; }));
}

inline FiniteGroup klein_four_group() {
  return FiniteGroup(OperationTable::generate(4, [](long long a, long long b) { return a ^ b; }));
}

/// Symmetric group on k letters. Element i is the i-th permutation in
/// lexicographic order; the product is composition, (a b)(x) = a(b(x)).
inline FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0) {
    throw InputError("symmetric group needs at least one letter");
  }
  std::vector<Permutation> perms;
  std::vector<Element> images(k);
  std::iota(images.begin(), images.end(), Element{0});
  do {
    perms.push_back(Permutation::unchecked(images));
  } while (std::next_permutation(images.begin(), images.end()));
  const std::size_t n = perms.size();
  std::vector<Element> entries(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto prod = perms[a] * perms[b];
      entries[a * n + b] = static_cast<Element>(
          std::lower_bound(perms.begin(), perms.end(), prod) - perms.begin());
    }
  }
  return FiniteGroup(OperationTable(n, std::move(entries)));
}

// ---------------------------------------------------------------------------
// Quandle families.

inline FiniteQuandle trivial_quandle(std::size_t n) {
  return FiniteQuandle(OperationTable::generate(n, [](long long x, long long) { return x; }));
}

/// R_n: x * y = 2y - x mod n.
inline FiniteQuandle dihedral_quandle(std::size_t n) {
  return FiniteQuandle(
      OperationTable::generate(n, [](long long x, long long y) { return 2 * y - x; }));
}

/// x * y = t x + (1 - t) y over Z_n, t a unit.
inline FiniteQuandle alexander_quandle(std::size_t n, Element t) {
  if (n == 0) {
    throw InputError("table order must be positive");
  }
  if (t >= n || !is_unit_mod(t, n)) {
    throw InputError("alexander quandle parameter t=" + std::to_string(t) +
                     " is not a unit modulo " + std::to_string(n));
  }
  const long long tt = t;
  return FiniteQuandle(OperationTable::generate(
      n, [tt](long long x, long long y) { return tt * x + (1 - tt) * y; }));
}

/// a * b = b^-1 a b.
inline FiniteQuandle conjugation_quandle(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> entries(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      entries[a * n + b] = g(g(g.inverse(b), a), b);
    }
  }
  return FiniteQuandle(OperationTable(n, std::move(entries)));
}

/// a o b = b a^-1 b.
inline FiniteQuandle core_quandle(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> entries(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      entries[a * n + b] = g(g(b, g.inverse(a)), b);
    }
  }
  return FiniteQuandle(OperationTable(n, std::move(entries)));
}

// ---------------------------------------------------------------------------
// Biquandle families.

/// under = (s + 1) y - x, over = s x over Z_n, s a unit.
inline FiniteBiquandle dihedral_biquandle(std::size_t n, Element s) {
  if (n == 0) {
    throw InputError("table order must be positive");
  }
  if (s >= n || !is_unit_mod(s, n)) {
    throw InputError("dihedral biquandle parameter s=" + std::to_string(s) +
                     " is not a unit modulo " + std::to_string(n));
  }
  const long long ss = s;
  return FiniteBiquandle(
      OperationTable::generate(n, [ss](long long x, long long y) { return (ss + 1) * y - x; }),
      OperationTable::generate(n, [ss](long long x, long long) { return ss * x; }));
}

/// under = t x + (s - t) y, over = s x over Z_n, s and t units.
inline FiniteBiquandle alexander_biquandle(std::size_t n, Element t, Element s) {
  if (n == 0) {
    throw InputError("table order must be positive");
  }
  if (t >= n || !is_unit_mod(t, n)) {
    throw InputError("alexander biquandle parameter t=" + std::to_string(t) +
                     " is not a unit modulo " + std::to_string(n));
  }
  if (s >= n || !is_unit_mod(s, n)) {
    throw InputError("alexander biquandle parameter s=" + std::to_string(s) +
                     " is not a unit modulo " + std::to_string(n));
  }
  const long long tt = t;
  const long long ss = s;
  return FiniteBiquandle(
      OperationTable::generate(
          n, [tt, ss](long long x, long long y) { return tt * x + (ss - tt) * y; }),
      OperationTable::generate(n, [ss](long long x, long long) { return ss * x; }));
}

/// under = b^-1 a^-1 b, over = b^-2 a.
inline FiniteBiquandle wada_biquandle(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> under(n * n);
  std::vector<Element> over(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element binv = g.inverse(b);
      under[a * n + b] = g(g(binv, g.inverse(a)), b);
      over[a * n + b] = g(g(binv, binv), a);
    }
  }
  return FiniteBiquandle(OperationTable(n, std::move(under)),
                         OperationTable(n, std::move(over)));
}

/// A quandle viewed as a biquandle with identity over-columns.
inline FiniteBiquandle as_biquandle(const FiniteQuandle& q) {
  return FiniteBiquandle(
      q.table(),
      OperationTable::generate(q.order(), [](long long x, long long) { return x; }),
      unchecked);
}

}  // namespace bq

#endif  // BQ_TABLES_HPP
