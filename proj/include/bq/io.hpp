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
 * Line-oriented text formats.
 *
 * Table document:
 *
 *     <kind>            quandle | biquandle | group | structure
 *     <n>
 *     n rows of n integers
 *     [blank line, then a second block]
 *
 * A biquandle carries the under block then the over block. A structure
 * carries the base quandle block then n lines, line y holding the images of
 * beta_y. Lines starting with '#' are comments; blank lines are ignored
 * except as visual separators.
 *
 * Group listing (one permutation per line, images separated by spaces):
 *
 *     order <N>
 *     degree <d>
 *     <element 0>
 *     ...
 *     [generators <k>
 *      <generator 0> ...]
 *
 * Partitions are written as `<label> <i> size <s>: <members>`.
 */

#ifndef BQ_IO_HPP
#define BQ_IO_HPP

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enumeration.hpp"
#include "errors.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"
#include "products.hpp"
#include "structures.hpp"
#include "tables.hpp"

namespace bq {

/// Parse failure with a source position (1-based line and column).
class ParseError : public InputError {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message)
      : InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                   message),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

enum class DocumentKind { quandle, biquandle, group, structure };

inline std::string_view kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::quandle:
      return "quandle";
    case DocumentKind::biquandle:
      return "biquandle";
    case DocumentKind::group:
      return "group";
    case DocumentKind::structure:
      return "structure";
  }
  return "?";
}

/// Tables as read, with no axiom checks applied.
struct RawDocument {
  DocumentKind kind = DocumentKind::quandle;
  std::size_t order = 0;
  /// One table, or two for biquandles (under, over).
  std::vector<OperationTable> tables;
  /// Structures only.
  std::vector<Permutation> betas;
  std::string source;
};

namespace detail {

struct Line {
  std::size_t number;
  std::string text;
};

struct Token {
  std::string_view text;
  std::size_t column;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') {
      ++i;
    }
    if (i > start) {
      out.push_back({s.substr(start, i - start), start + 1});
    }
  }
  return out;
}

class DocumentReader {
 public:
  DocumentReader(std::istream& in, std::string source) : source_(std::move(source)) {
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
      ++number;
      if (!text.empty() && text.back() == '\r') {
        text.pop_back();
      }
      const auto first = text.find_first_not_of(" \t");
      if (first == std::string::npos || text[first] == '#') {
        continue;
      }
      lines_.push_back({number, std::move(text)});
    }
    last_line_ = number;
  }

  RawDocument read() {
    RawDocument doc;
    doc.source = source_;
    const auto& kind_line = next("kind tag");
    const auto kind_tokens = tokenize(kind_line.text);
    if (kind_tokens.size() != 1) {
      fail(kind_line, kind_tokens.size() > 1 ? kind_tokens[1].column : 1,
           "expected a single kind tag");
    }
    const auto tag = kind_tokens[0].text;
    if (tag == "quandle") {
      doc.kind = DocumentKind::quandle;
    } else if (tag == "biquandle") {
      doc.kind = DocumentKind::biquandle;
    } else if (tag == "group") {
      doc.kind = DocumentKind::group;
    } else if (tag == "structure") {
      doc.kind = DocumentKind::structure;
    } else {
      fail(kind_line, kind_tokens[0].column,
           "unknown kind tag '" + std::string(tag) +
               "' (expected quandle, biquandle, group or structure)");
    }

    const auto& n_line = next("order");
    const auto n_tokens = tokenize(n_line.text);
    if (n_tokens.size() != 1) {
      fail(n_line, n_tokens.size() > 1 ? n_tokens[1].column : 1, "expected a single order");
    }
    const auto n = number(n_line, n_tokens[0], 0, kMaxOrder);
    if (n == 0) {
      fail(n_line, n_tokens[0].column, "order must be positive");
    }
    doc.order = n;

    doc.tables.push_back(block(n));
    if (doc.kind == DocumentKind::biquandle) {
      doc.tables.push_back(block(n));
    }
    if (doc.kind == DocumentKind::structure) {
      for (std::size_t y = 0; y < n; ++y) {
        const auto& line = next("beta line");
        auto images = row(line, n);
        if (!is_permutation(images)) {
          fail(line, 1, "beta_" + std::to_string(y) + " is not a permutation");
        }
        doc.betas.push_back(Permutation::unchecked(std::move(images)));
      }
    }
    if (pos_ < lines_.size()) {
      const auto& extra = lines_[pos_];
      fail(extra, tokenize(extra.text).front().column, "unexpected trailing content");
    }
    return doc;
  }

 private:
  static constexpr std::size_t kMaxOrder = 4096;

  [[noreturn]] void fail(const Line& line, std::size_t column, const std::string& message) const {
    throw ParseError(source_, line.number, column, message);
  }

  const Line& next(const char* what) {
    if (pos_ == lines_.size()) {
      throw ParseError(source_, last_line_ + 1, 1,
                       std::string("unexpected end of input, expected ") + what);
    }
    return lines_[pos_++];
  }

  std::size_t number(const Line& line, const Token& tok, std::size_t lo, std::size_t hi) const {
    std::size_t value = 0;
    const auto* begin = tok.text.data();
    const auto* end = begin + tok.text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      fail(line, tok.column, "expected a non-negative integer, got '" + std::string(tok.text) + "'");
    }
    if (value < lo || value > hi) {
      fail(line, tok.column,
           "entry " + std::to_string(value) + " out of range " + std::to_string(lo) + ".." +
               std::to_string(hi));
    }
    return value;
  }

  std::vector<Element> row(const Line& line, std::size_t n) const {
    const auto toks = tokenize(line.text);
    if (toks.size() != n) {
      fail(line, toks.size() > n ? toks[n].column : line.text.size() + 1,
           "expected " + std::to_string(n) + " entries, got " + std::to_string(toks.size()));
    }
    std::vector<Element> out;
    out.reserve(n);
    for (const auto& t : toks) {
      out.push_back(static_cast<Element>(number(line, t, 0, n - 1)));
    }
    return out;
  }

  OperationTable block(std::size_t n) {
    std::vector<Element> entries;
    entries.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto r = row(next("table row"), n);
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return OperationTable(n, std::move(entries));
  }

  std::string source_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

}  // namespace detail

inline RawDocument parse_document(std::istream& in, const std::string& source = "<input>") {
  return detail::DocumentReader(in, source).read();
}

inline RawDocument parse_document_string(const std::string& text,
                                         const std::string& source = "<string>") {
  std::istringstream in(text);
  return parse_document(in, source);
}

inline RawDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  return parse_document(in, path.string());
}

namespace detail {

inline void expect_kind(const RawDocument& doc, DocumentKind kind) {
  if (doc.kind != kind) {
    throw InputError(doc.source + ": expected a " + std::string(kind_name(kind)) + " document, got " +
                     std::string(kind_name(doc.kind)));
  }
}

}  // namespace detail

/// Typed views; each applies the axiom checks of its type.
inline FiniteQuandle to_quandle(const RawDocument& doc) {
  detail::expect_kind(doc, DocumentKind::quandle);
  return FiniteQuandle(doc.tables[0]);
}

inline FiniteBiquandle to_biquandle(const RawDocument& doc) {
  detail::expect_kind(doc, DocumentKind::biquandle);
  return FiniteBiquandle(doc.tables[0], doc.tables[1]);
}

inline FiniteGroup to_group(const RawDocument& doc) {
  detail::expect_kind(doc, DocumentKind::group);
  return FiniteGroup(doc.tables[0]);
}

inline BiquandleStructure to_structure(const RawDocument& doc) {
  detail::expect_kind(doc, DocumentKind::structure);
  return BiquandleStructure(FiniteQuandle(doc.tables[0]), doc.betas);
}

// ---------------------------------------------------------------------------
// Writers.

inline void write_block(std::ostream& os, const OperationTable& t) {
  const std::size_t n = t.order();
  for (Element x = 0; x < n; ++x) {
    os << Permutation::join(t.row(x)) << '\n';
  }
}

inline void write_quandle(std::ostream& os, const FiniteQuandle& q) {
  os << "quandle\n" << q.order() << '\n';
  write_block(os, q.table());
}

inline void write_biquandle(std::ostream& os, const FiniteBiquandle& b) {
  os << "biquandle\n" << b.order() << '\n';
  write_block(os, b.under_table());
  os << '\n';
  write_block(os, b.over_table());
}

inline void write_group(std::ostream& os, const FiniteGroup& g) {
  os << "group\n" << g.order() << '\n';
  write_block(os, g.table());
}

inline void write_structure(std::ostream& os, const BiquandleStructure& s) {
  os << "structure\n" << s.order() << '\n';
  write_block(os, s.base().table());
  os << '\n';
  for (const auto& b : s.betas()) {
    os << to_string(b) << '\n';
  }
}

inline std::string to_text(const FiniteQuandle& q) {
  std::ostringstream os;
  write_quandle(os, q);
  return os.str();
}

inline std::string to_text(const FiniteBiquandle& b) {
  std::ostringstream os;
  write_biquandle(os, b);
  return os.str();
}

inline std::string to_text(const BiquandleStructure& s) {
  std::ostringstream os;
  write_structure(os, s);
  return os.str();
}

inline std::string to_text(const FiniteGroup& g) {
  std::ostringstream os;
  write_group(os, g);
  return os.str();
}

inline void write_perm_group(std::ostream& os, const PermGroup& g, bool with_generators = false) {
  os << "order " << g.order() << '\n' << "degree " << g.degree() << '\n';
  for (const auto& p : g.elements()) {
    os << to_string(p) << '\n';
  }
  if (with_generators) {
    const auto gens = g.generators() ? *g.generators() : greedy_generators(g);
    os << "generators " << gens.size() << '\n';
    for (const auto& p : gens) {
      os << to_string(p) << '\n';
    }
  }
}

/// Writes `values` after `prefix`; with width > 0, wraps so that no line
/// exceeds `width` characters where possible, continuing with two spaces.
inline void write_wrapped(std::ostream& os, const std::string& prefix,
                          const std::vector<std::size_t>& values, std::size_t width) {
  std::string line = prefix;
  bool fresh = true;
  for (const auto v : values) {
    const std::string item = std::to_string(v);
    if (width > 0 && !fresh && line.size() + 1 + item.size() > width) {
      os << line << '\n';
      line = "  " + item;
      continue;
    }
    line += ' ';
    line += item;
    fresh = false;
  }
  os << line << '\n';
}

/// `<label> <i> size <s>: <members>` for each block.
inline void write_partition(std::ostream& os, const std::string& label,
                            const std::vector<std::vector<std::size_t>>& blocks,
                            std::size_t width = 0) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    write_wrapped(os, label + " " + std::to_string(i) + " size " + std::to_string(blocks[i].size()) +
                          ":",
                  blocks[i], width);
  }
}

inline std::vector<std::vector<std::size_t>> class_indices(
    const PermGroup& g, const std::vector<std::vector<Permutation>>& classes) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& cls : classes) {
    std::vector<std::size_t> idx;
    for (const auto& p : cls) {
      idx.push_back(g.index_of(p));
    }
    std::sort(idx.begin(), idx.end());
    out.push_back(std::move(idx));
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> partition_blocks(const ComponentPartition& p) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : p.blocks) {
    out.emplace_back(b.begin(), b.end());
  }
  return out;
}

/// Sidecar for a product biquandle: codec and component partitions.
inline void write_product_sidecar(std::ostream& os, const ProductBiquandle& p) {
  const auto left = quandle_components(p.left());
  const auto right = quandle_components(p.right());
  const auto whole = biquandle_components(p.biquandle());
  os << "product-sidecar\n";
  os << "left-order " << p.left().order() << '\n';
  os << "right-order " << p.right().order() << '\n';
  os << "codec index = x * " << p.right().order() << " + a\n";
  os << "left-components " << left.size() << '\n';
  write_partition(os, "block", partition_blocks(left));
  os << "right-components " << right.size() << '\n';
  write_partition(os, "block", partition_blocks(right));
  os << "product-components " << whole.size() << '\n';
  write_partition(os, "block", partition_blocks(whole));
}

// ---------------------------------------------------------------------------
// Census directories.

inline std::string numbered_file(const std::string& stem, std::size_t i) {
  std::ostringstream os;
  os << stem << '-' << std::setw(4) << std::setfill('0') << i << ".txt";
  return os.str();
}

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InputError("cannot write " + path.string());
  }
  out << text;
}

}  // namespace detail

/// MANIFEST:
///
///     census biquandle
///     order <n>
///     count <N>
///     file <name>          (one per member, in sorted order)
inline void write_biquandle_census(const std::filesystem::path& dir, const BiquandleCensus& c) {
  std::filesystem::create_directories(dir);
  std::ostringstream manifest;
  manifest << "census biquandle\n" << "order " << c.order << '\n' << "count " << c.count() << '\n';
  for (std::size_t i = 0; i < c.all.size(); ++i) {
    const auto name = numbered_file("biquandle", i);
    detail::write_file(dir / name, to_text(c.all[i]));
    manifest << "file " << name << '\n';
  }
  detail::write_file(dir / "MANIFEST", manifest.str());
}

/// MANIFEST:
///
///     census structure
///     order <n>
///     count <N>
///     classes <C>
///     class <c> size <s> representative <name>: <member indices>
///     file <name> class <c>
inline void write_structure_census(const std::filesystem::path& dir, const StructureCensus& c) {
  std::filesystem::create_directories(dir);
  std::vector<std::size_t> class_of(c.all.size(), 0);
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    for (const auto i : c.classes[k]) {
      class_of[i] = k;
    }
  }
  std::ostringstream manifest;
  manifest << "census structure\n"
           << "order " << c.base.order() << '\n'
           << "count " << c.all.size() << '\n'
           << "classes " << c.classes.size() << '\n';
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    write_wrapped(manifest,
                  "class " + std::to_string(k) + " size " + std::to_string(c.classes[k].size()) +
                      " representative " + numbered_file("structure", c.representatives[k]) + ":",
                  c.classes[k], 0);
  }
  for (std::size_t i = 0; i < c.all.size(); ++i) {
    const auto name = numbered_file("structure", i);
    detail::write_file(dir / name, to_text(c.all[i]));
    manifest << "file " << name << " class " << class_of[i] << '\n';
  }
  detail::write_file(dir / "MANIFEST", manifest.str());
}

}  // namespace bq

#endif  // BQ_IO_HPP
