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
 * The bqtool command set, separated from main() so tests can drive it with
 * string streams.
 *
 * Exit status: 0 success or verification pass, 1 verification failure or
 * "not isomorphic", 2 input, parse or cap error, 3 internal consistency
 * failure.
 */

#ifndef BQTOOL_APP_HPP
#define BQTOOL_APP_HPP

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bq/bq.hpp"
#include "json.hpp"

namespace bqtool {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

/// Environment variable read for the list-wrapping width.
inline constexpr const char* kWidthVariable = "BQTOOL_WIDTH";

namespace detail {

struct Options {
  bool manifest = false;
  std::string file;
  std::string file2;
  std::string output;
  std::string sidecar;
  std::string out_dir;
  std::string family;
  std::string group;
  std::optional<long long> n;
  std::optional<long long> t;
  std::optional<long long> s;
  std::size_t max_violations = bq::kDefaultViolationCap;
  bool oracle = false;
  std::size_t oracle_max_order = 8;
  bool generators = false;
  bool classes = false;
  std::size_t order = 0;
  std::size_t cap = 3;
  std::size_t max_order = bq::EnumerationCaps{}.max_order;
  std::size_t max_aut = bq::EnumerationCaps{}.max_aut_order;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out), width_(read_width()) {}

  int dispatch(const std::string& verb) {
    manifest_["verb"] = verb;
    int code = kExitOk;
    if (verb == "verify") {
      code = verify();
    } else if (verb == "make") {
      code = make();
    } else if (verb == "underlying") {
      emit(bq::to_text(bq::underlying_quandle(bq::to_biquandle(load(o_.file)))));
    } else if (verb == "realize") {
      emit(bq::to_text(bq::realize(bq::to_structure(load(o_.file)))));
    } else if (verb == "extract") {
      emit(bq::to_text(bq::extract_structure(bq::to_biquandle(load(o_.file)))));
    } else if (verb == "aut") {
      code = aut();
    } else if (verb == "iso") {
      code = iso();
    } else if (verb == "classify-constant") {
      code = classify_constant();
    } else if (verb == "structures") {
      code = structures();
    } else if (verb == "product") {
      code = product();
    } else if (verb == "components") {
      code = components();
    } else if (verb == "census") {
      code = census();
    } else if (verb == "crosscheck") {
      code = crosscheck();
    }
    manifest_["exit"] = code;
    if (o_.manifest) {
      out_ << "--- manifest\n" << manifest_.dump() << '\n';
    }
    return code;
  }

 private:
  static std::size_t read_width() {
    const char* v = std::getenv(kWidthVariable);
    if (v == nullptr) {
      return 0;
    }
    try {
      const long long w = std::stoll(v);
      return w > 0 ? static_cast<std::size_t>(w) : 0;
    } catch (const std::exception&) {
      return 0;
    }
  }

  bq::RawDocument load(const std::string& path) {
    auto doc = bq::read_document(path);
    manifest_["kind"] = std::string(bq::kind_name(doc.kind));
    manifest_["order"] = doc.order;
    return doc;
  }

  // Writes to -o when given, otherwise to stdout.
  void emit(const std::string& text) {
    if (o_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.output, std::ios::binary);
    if (!f) {
      throw bq::InputError("cannot write " + o_.output);
    }
    f << text;
    out_ << "wrote " << o_.output << '\n';
  }

  int verify() {
    const auto doc = load(o_.file);
    const bq::VerifyOptions vo{o_.max_violations};
    bq::VerificationReport report(o_.max_violations);
    switch (doc.kind) {
      case bq::DocumentKind::quandle:
        report = bq::verify_quandle(doc.tables[0], vo);
        break;
      case bq::DocumentKind::biquandle:
        report = bq::verify_biquandle(doc.tables[0], doc.tables[1], vo);
        break;
      case bq::DocumentKind::group:
        report = bq::verify_group(doc.tables[0], vo);
        break;
      case bq::DocumentKind::structure:
        report = bq::verify_quandle(doc.tables[0], vo);
        if (report.passed()) {
          report = bq::verify_structure(bq::FiniteQuandle(doc.tables[0], bq::unchecked), doc.betas,
                                        vo);
        }
        break;
    }
    out_ << bq::kind_name(doc.kind) << ": " << report.summary() << '\n';
    for (const auto& v : report.violations()) {
      out_ << "violation " << bq::to_string(v) << '\n';
    }
    if (report.total() > report.violations().size()) {
      out_ << "... " << report.total() - report.violations().size() << " more\n";
    }
    manifest_["passed"] = report.passed();
    manifest_["violations"] = report.total();
    return report.passed() ? kExitOk : kExitFail;
  }

  long long need(const std::optional<long long>& v, const char* name) const {
    if (!v) {
      throw bq::InputError("family " + o_.family + " needs --" + name);
    }
    if (*v < 0) {
      throw bq::InputError(std::string("--") + name + " must be non-negative");
    }
    return *v;
  }

  std::size_t need_order() const {
    const auto n = need(o_.n, "n");
    if (n == 0) {
      throw bq::InputError("--n must be positive");
    }
    return static_cast<std::size_t>(n);
  }

  bq::FiniteGroup group_from_option() const {
    const auto& desc = o_.group;
    if (desc.empty()) {
      throw bq::InputError("family " + o_.family + " needs --group");
    }
    if (desc == "klein") {
      return bq::klein_four_group();
    }
    const auto colon = desc.find(':');
    if (colon != std::string::npos) {
      const auto name = desc.substr(0, colon);
      std::size_t k = 0;
      try {
        k = static_cast<std::size_t>(std::stoul(desc.substr(colon + 1)));
      } catch (const std::exception&) {
        throw bq::InputError("bad group size in '" + desc + "'");
      }
      if (name == "cyclic" && k > 0) {
        return bq::cyclic_group(k);
      }
      if (name == "symmetric" && k > 0 && k <= 6) {
        return bq::symmetric_group(k);
      }
      throw bq::InputError("bad group description '" + desc + "'");
    }
    return bq::to_group(bq::read_document(desc));
  }

  int make() {
    const auto& f = o_.family;
    manifest_["family"] = f;
    std::string text;
    if (f == "trivial-quandle") {
      text = bq::to_text(bq::trivial_quandle(need_order()));
    } else if (f == "dihedral-quandle") {
      text = bq::to_text(bq::dihedral_quandle(need_order()));
    } else if (f == "alexander-quandle") {
      text = bq::to_text(bq::alexander_quandle(need_order(), bq::Element(need(o_.t, "t"))));
    } else if (f == "conjugation-quandle") {
      text = bq::to_text(bq::conjugation_quandle(group_from_option()));
    } else if (f == "core-quandle") {
      text = bq::to_text(bq::core_quandle(group_from_option()));
    } else if (f == "dihedral-biquandle") {
      text = bq::to_text(bq::dihedral_biquandle(need_order(), bq::Element(need(o_.s, "s"))));
    } else if (f == "alexander-biquandle") {
      text = bq::to_text(bq::alexander_biquandle(need_order(), bq::Element(need(o_.t, "t")),
                                                 bq::Element(need(o_.s, "s"))));
    } else if (f == "wada-biquandle") {
      text = bq::to_text(bq::wada_biquandle(group_from_option()));
    } else if (f == "wada-structure") {
      text = bq::to_text(bq::wada_structure(group_from_option()));
    } else if (f == "group") {
      text = bq::to_text(group_from_option());
    } else {
      throw bq::InputError("unknown family '" + f + "'");
    }
    emit(text);
    return kExitOk;
  }

  bq::FiniteBiquandle as_biquandle_doc(const bq::RawDocument& doc) {
    switch (doc.kind) {
      case bq::DocumentKind::biquandle:
        return bq::to_biquandle(doc);
      case bq::DocumentKind::structure:
        return bq::realize(bq::to_structure(doc));
      default:
        throw bq::InputError(doc.source + ": expected a biquandle or structure document");
    }
  }

  int aut() {
    const auto doc = load(o_.file);
    bq::SearchOptions so;
    so.naive = o_.oracle;
    so.naive_max_order = o_.oracle_max_order;
    const auto g = doc.kind == bq::DocumentKind::quandle
                       ? bq::quandle_aut_group(bq::to_quandle(doc), so)
                       : bq::biquandle_aut_group(as_biquandle_doc(doc), so);
    bq::write_perm_group(out_, g, o_.generators);
    manifest_["aut_order"] = g.order();
    if (o_.classes) {
      const auto idx = bq::class_indices(g, bq::conjugacy_classes(g));
      out_ << "classes " << idx.size() << '\n';
      bq::write_partition(out_, "class", idx, width_);
      manifest_["classes"] = idx.size();
    }
    return kExitOk;
  }

  int iso() {
    const auto a = load(o_.file);
    const auto b = bq::read_document(o_.file2);
    if (a.kind != b.kind) {
      throw bq::InputError("cannot compare a " + std::string(bq::kind_name(a.kind)) + " with a " +
                           std::string(bq::kind_name(b.kind)));
    }
    bq::IsoResult r;
    switch (a.kind) {
      case bq::DocumentKind::quandle:
        r = bq::quandles_isomorphic(bq::to_quandle(a), bq::to_quandle(b));
        break;
      case bq::DocumentKind::biquandle:
        r = bq::biquandles_isomorphic(bq::to_biquandle(a), bq::to_biquandle(b));
        break;
      case bq::DocumentKind::structure:
        r = bq::structures_isomorphic(bq::to_structure(a), bq::to_structure(b));
        break;
      case bq::DocumentKind::group: {
        const auto g1 = bq::to_group(a);
        const auto g2 = bq::to_group(b);
        if (g1.order() == g2.order()) {
          const bq::TablePair pair{&g1.table(), &g2.table()};
          bq::for_each_isomorphism(std::span<const bq::TablePair>(&pair, 1),
                                   [&](const bq::Permutation& p) {
                                     r.found = true;
                                     r.witness = p.vector();
                                     return false;
                                   });
        }
        break;
      }
    }
    manifest_["isomorphic"] = r.found;
    if (!r.found) {
      out_ << "not isomorphic\n";
      return kExitFail;
    }
    out_ << "isomorphic\n" << "map " << bq::Permutation::join(*r.witness) << '\n';
    return kExitOk;
  }

  int classify_constant() {
    const auto q = bq::to_quandle(load(o_.file));
    const auto classes = bq::classify_constant_structures(q);
    const auto conj = bq::conjugacy_classes(bq::quandle_aut_group(q)).size();
    out_ << "classes " << classes.size() << '\n';
    for (std::size_t i = 0; i < classes.size(); ++i) {
      out_ << "class " << i << " size " << classes[i].class_size
           << " representative: " << bq::to_string(classes[i].representative) << '\n';
    }
    out_ << "conjugacy-classes " << conj << '\n';
    manifest_["classes"] = classes.size();
    manifest_["conjugacy_classes"] = conj;
    return classes.size() == conj ? kExitOk : kExitFail;
  }

  int structures() {
    const auto q = bq::to_quandle(load(o_.file));
    const auto c = bq::enumerate_structures(q, {o_.max_order, o_.max_aut});
    out_ << "structures " << c.all.size() << '\n' << "classes " << c.classes.size() << '\n';
    bq::write_partition(out_, "class", c.classes, width_);
    for (std::size_t i = 0; i < c.all.size(); ++i) {
      out_ << "structure " << i << ":";
      for (const auto& b : c.all[i].betas()) {
        out_ << (&b == &c.all[i].betas().front() ? " " : " | ") << bq::to_string(b);
      }
      out_ << '\n';
    }
    if (!o_.out_dir.empty()) {
      bq::write_structure_census(o_.out_dir, c);
      out_ << "wrote " << o_.out_dir << '\n';
    }
    manifest_["structures"] = c.all.size();
    manifest_["classes"] = c.classes.size();
    std::vector<std::size_t> sizes;
    for (const auto& k : c.classes) {
      sizes.push_back(k.size());
    }
    manifest_["class_sizes"] = sizes;
    return kExitOk;
  }

  int product() {
    const auto q = bq::to_quandle(load(o_.file));
    const auto k = bq::to_quandle(bq::read_document(o_.file2));
    const auto p = bq::product_biquandle(q, k);
    emit(bq::to_text(p.biquandle()));
    std::string sidecar = o_.sidecar;
    if (sidecar.empty() && !o_.output.empty()) {
      sidecar = o_.output + ".sidecar";
    }
    if (!sidecar.empty()) {
      std::ofstream f(sidecar, std::ios::binary);
      if (!f) {
        throw bq::InputError("cannot write " + sidecar);
      }
      bq::write_product_sidecar(f, p);
      out_ << "wrote " << sidecar << '\n';
    }
    manifest_["order"] = p.order();
    manifest_["components"] = bq::biquandle_components(p.biquandle()).size();
    return kExitOk;
  }

  int components() {
    const auto doc = load(o_.file);
    const auto part = doc.kind == bq::DocumentKind::quandle
                          ? bq::quandle_components(bq::to_quandle(doc))
                          : bq::biquandle_components(as_biquandle_doc(doc));
    out_ << "components " << part.size() << '\n';
    bq::write_partition(out_, "block", bq::partition_blocks(part), width_);
    manifest_["components"] = part.size();
    return kExitOk;
  }

  int census() {
    const auto c = bq::enumerate_biquandles_bruteforce(o_.order, o_.cap);
    out_ << "census order " << c.order << " count " << c.count() << '\n';
    if (!o_.out_dir.empty()) {
      bq::write_biquandle_census(o_.out_dir, c);
      out_ << "wrote " << o_.out_dir << '\n';
    }
    manifest_["order"] = c.order;
    manifest_["count"] = c.count();
    return kExitOk;
  }

  int crosscheck() {
    const auto r = bq::census_crosscheck(o_.order, o_.cap);
    out_ << "census=" << r.census_count << ", roundtrip=" << r.roundtrip_ok << '/'
         << r.census_count << '\n';
    out_ << "quandles=" << r.quandle_count << ", structures=" << r.structure_count
         << ", bijection=" << (r.bijection ? "yes" : "no") << '\n';
    for (const auto& f : r.failures) {
      out_ << "failure " << f << '\n';
    }
    out_ << "crosscheck: " << (r.passed() ? "PASS" : "FAIL") << '\n';
    manifest_["census"] = r.census_count;
    manifest_["roundtrip"] = r.roundtrip_ok;
    manifest_["structures"] = r.structure_count;
    manifest_["passed"] = r.passed();
    return r.passed() ? kExitOk : kExitFail;
  }

  const Options& o_;
  std::ostream& out_;
  std::size_t width_;
  nlohmann::json manifest_ = nlohmann::json::object();
};

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Finite quandle and biquandle toolkit", "bqtool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--manifest", o.manifest, "Append a JSON summary block");

  auto* verify = app.add_subcommand("verify", "Check the axioms of a table file");
  verify->add_option("file", o.file)->required();
  verify->add_option("--max-violations", o.max_violations, "Violations listed")
      ->check(CLI::PositiveNumber);

  auto* make = app.add_subcommand("make", "Write a built-in family member");
  make->add_option("family", o.family,
                   "trivial-quandle, dihedral-quandle, alexander-quandle, conjugation-quandle, "
                   "core-quandle, dihedral-biquandle, alexander-biquandle, wada-biquandle, "
                   "wada-structure, group")
      ->required();
  make->add_option("--n", o.n);
  make->add_option("--t", o.t);
  make->add_option("--s", o.s);
  make->add_option("--group", o.group, "cyclic:N, symmetric:K, klein, or a group file");
  make->add_option("-o,--output", o.output);

  auto add_transform = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file)->required();
    sub->add_option("-o,--output", o.output);
    return sub;
  };
  add_transform("underlying", "Underlying quandle of a biquandle");
  add_transform("realize", "Biquandle realized by a structure");
  add_transform("extract", "Structure extracted from a biquandle");

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  aut->add_option("file", o.file)->required();
  aut->add_flag("--oracle", o.oracle, "Use exhaustive permutation enumeration");
  aut->add_option("--oracle-max-order", o.oracle_max_order);
  aut->add_flag("--generators", o.generators);
  aut->add_flag("--classes", o.classes, "List conjugacy classes");

  auto* iso = app.add_subcommand("iso", "Isomorphism test (exit 1 when not isomorphic)");
  iso->add_option("first", o.file)->required();
  iso->add_option("second", o.file2)->required();

  auto* cc = app.add_subcommand("classify-constant", "Constant structures up to isomorphism");
  cc->add_option("file", o.file)->required();

  auto* st = app.add_subcommand("structures", "All structures on a quandle");
  st->add_option("file", o.file)->required();
  st->add_option("--max-order", o.max_order);
  st->add_option("--max-aut", o.max_aut);
  st->add_option("--out-dir", o.out_dir);

  auto* pr = app.add_subcommand("product", "Product biquandle of two quandles");
  pr->add_option("left", o.file)->required();
  pr->add_option("right", o.file2)->required();
  pr->add_option("-o,--output", o.output);
  pr->add_option("--sidecar", o.sidecar, "Defaults to <output>.sidecar");

  auto* comp = app.add_subcommand("components", "Connected components");
  comp->add_option("file", o.file)->required();

  auto* census = app.add_subcommand("census", "Brute-force biquandle census");
  census->add_option("--order", o.order)->required()->check(CLI::PositiveNumber);
  census->add_option("--cap", o.cap, "Largest order allowed");
  census->add_option("--out-dir", o.out_dir);

  auto* cross = app.add_subcommand("crosscheck", "Compare brute-force and structure censuses");
  cross->add_option("--order", o.order)->required()->check(CLI::PositiveNumber);
  cross->add_option("--cap", o.cap, "Largest order allowed");

  // Reject unknown verbs up front, before any option handling touches files.
  for (const auto& a : args) {
    if (a.empty() || a.front() == '-') {
      continue;
    }
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "error: unknown verb '" << a << "'\n";
      return kExitInput;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  const auto verb = app.get_subcommands().front()->get_name();
  try {
    return detail::Runner(o, out).dispatch(verb);
  } catch (const bq::CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const bq::InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const bq::ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace bqtool

#endif  // BQTOOL_APP_HPP
