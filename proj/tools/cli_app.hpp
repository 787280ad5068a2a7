/*
 * Copyright 2026 The revcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Subcommands:
//
//   construct  reversible code from an m-quasi-reciprocal seed word
//   dna        reversible (or reversible-complement) DNA code over GF(4^k)
//   check      DNA constraint report for a word set
//   verify     recompute the golden examples and tables
//
// Exit codes: 0 ok, 1 invalid input, 2 mismatch.

#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revcodes/dna.hpp"
#include "revcodes/errors.hpp"
#include "revcodes/field.hpp"
#include "revcodes/field_text.hpp"
#include "revcodes/lincode.hpp"
#include "revcodes/repro.hpp"
#include "revcodes/wordops.hpp"

namespace revcodes::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kMismatch = 2 };

using Json = nlohmann::json;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Non-blank lines that do not start with '#'.
inline std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

inline std::vector<Elem> parse_modulus(const Field& base, const std::string& text) {
  std::vector<Elem> out;
  const auto syms = default_symbols(base);
  for (const auto& tok : split_tokens(text)) out.push_back(parse_element(base, tok, syms));
  return out;
}

inline FieldPtr select_field(std::uint32_t q, const std::optional<std::string>& modulus) {
  if (!modulus) return canonical_field(q);
  const auto pp = revcodes::detail::prime_power(q);
  if (!pp) throw UnsupportedFieldError("no field of order " + std::to_string(q));
  const auto k = revcodes::detail::log4(q);
  const auto base = (k && *k >= 2) ? canonical_field(4) : canonical_field(pp->first);
  return field_with_modulus(q, parse_modulus(*base, *modulus));
}

inline Json token_rows(const std::vector<Codeword>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (Elem e : r.entries()) row.push_back(format_element(*r.field(), e));
    out.push_back(std::move(row));
  }
  return out;
}

inline std::string join_tokens(const Json& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ',';
    s += row[i].get<std::string>();
  }
  return s;
}

// Text rendering of a flat record; arrays of token rows print one per line.
inline void render(std::ostream& out, const Json& rec, const std::string& prefix = "") {
  for (const auto& [key, val] : rec.items()) {
    if (val.is_array() && !val.empty() && val.front().is_array() && val.front().size() > 0 &&
        val.front().front().is_string()) {
      out << prefix << key << ":\n";
      for (const auto& row : val) out << prefix << "  " << join_tokens(row) << '\n';
    } else if (val.is_string()) {
      out << prefix << key << ": " << val.get<std::string>() << '\n';
    } else {
      out << prefix << key << ": " << val.dump() << '\n';
    }
  }
}

inline Json lincode_record(const LinearCode& code, unsigned workers) {
  const auto d = code.min_distance(workers);
  return Json{{"q", code.field()->order()},
              {"n", code.n()},
              {"k", code.k()},
              {"d", d},
              {"reversible", code.is_reversible()},
              {"griesmer", to_string(griesmer_check(code.n(), code.k(), d, code.field()->order()))},
              {"class", to_string(mds_class(code.n(), code.k(), d))},
              {"generators", token_rows(code.basis())}};
}

struct Output {
  std::ostream& out;
  std::ostream& err;
};

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

struct ConstructConfig {
  std::uint32_t q = 0;
  std::optional<std::string> modulus;
  std::size_t m = 0, t = 0;
  std::string variant = "S";
  std::optional<std::string> coeffs, file;
  bool json = false;
  unsigned workers = 0;
};

inline int cmd_construct(const ConstructConfig& cfg, Output io) {
  const auto f = select_field(cfg.q, cfg.modulus);
  const auto v = parse_variant(cfg.variant);
  std::vector<std::string> seeds;
  if (cfg.coeffs) {
    seeds.push_back(*cfg.coeffs);
  } else {
    seeds = content_lines(read_file(*cfg.file));
    if (seeds.empty()) throw ValidationError("no codeword in '" + *cfg.file + "'");
  }
  for (const auto& text : seeds) {
    const auto seed = parse_codeword(f, text);
    const auto code = LinearCode::span(build_generating_set(seed, cfg.m, cfg.t, v));
    Json rec = lincode_record(code, cfg.workers);
    rec["seed"] = format_codeword(seed);
    rec["m"] = cfg.m;
    rec["t"] = cfg.t;
    rec["variant"] = to_string(v);
    rec["field"] = f->name();
    if (cfg.json) {
      io.out << rec.dump() << '\n';
    } else {
      io.out << "[" << code.n() << "," << code.k() << "," << rec["d"].get<std::size_t>() << "] over " << f->name()
             << '\n';
      render(io.out, rec, "  ");
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// dna
// ---------------------------------------------------------------------------

struct DnaConfig {
  std::size_t k = 0, m = 0, t = 0;
  std::string variant = "S";
  std::optional<std::string> bases, coeffs, file;
  bool complement = false;
  bool no_enumerate = false;
  std::uint64_t cap = kDefaultEnumerationCap;
  bool json = false;
  unsigned workers = 0;
};

inline int cmd_dna(const DnaConfig& cfg, Output io) {
  const auto b = make_dna_basis(cfg.k);
  const auto v = parse_variant(cfg.variant);
  Codeword seed = Codeword::zeros(b.field(), 1);
  if (cfg.coeffs) {
    seed = parse_codeword(b.field(), *cfg.coeffs);
  } else {
    std::string word;
    if (cfg.bases) {
      for (const auto& kb : parse_kbases(*cfg.bases)) word += kb;
    } else {
      const auto words = parse_dna_lines(read_file(*cfg.file));
      if (words.size() != 1) throw ValidationError("expected exactly one DNA word in '" + *cfg.file + "'");
      word = words.front().str();
    }
    if (word.empty() || word.size() % cfg.k != 0)
      throw ValidationError("DNA input length " + std::to_string(word.size()) + " is not a positive multiple of k = " +
                            std::to_string(cfg.k));
    seed = b.zeta_bar(DnaWord(word));
  }
  const DnaCodeOptions opts{!cfg.no_enumerate, cfg.cap};
  DnaCode dc = [&] {
    try {
      return cfg.complement ? reversible_complement_dna_code(seed, cfg.m, cfg.t, v, b, opts)
                            : reversible_dna_code(seed, cfg.m, cfg.t, v, b, opts);
    } catch (const TooLargeError& e) {
      throw TooLargeError(std::string(e.what()) + "; rerun with --no-enumerate");
    }
  }();
  const auto& mc = dc.code;
  const auto dna_d = mc.dna_distance(cfg.workers);
  const auto len = mc.k() * mc.n();
  Json rec{{"q", b.field()->order()},
           {"n", mc.n()},
           {"k", mc.k()},
           {"dim4", mc.dim4()},
           {"d", mc.symbol_distance(cfg.workers)},
           {"dna_distance", dna_d},
           {"reversible", mc.is_reverse_closed()},
           {"complement_closed", mc.is_complement_closed()},
           {"griesmer", to_string(griesmer_check(len, mc.dim4(), dna_d, 4))},
           {"class", to_string(mds_class(len, mc.dim4(), dna_d))},
           {"seed", b.zeta_bar_inv(seed).str()},
           {"mode", cfg.complement ? "reversible-complement" : "reversible"},
           {"generators", token_rows(dc.generating_set)}};
  if (dc.words) rec["words"] = dc.words->size();
  if (cfg.json) {
    io.out << rec.dump() << '\n';
    if (dc.words)
      for (const auto& w : *dc.words) io.out << Json{{"word", w.str()}}.dump() << '\n';
  } else {
    std::ostringstream report;
    render(report, rec);
    std::string line;
    std::istringstream lines(report.str());
    while (std::getline(lines, line)) io.out << "# " << line << '\n';
    if (dc.words)
      for (const auto& w : *dc.words) io.out << w.str() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckConfig {
  std::optional<std::string> file, words;
  std::size_t d = 0;
  bool strict = false;
  bool json = false;
};

inline Json verdict_json(const ConstraintVerdict& v) {
  Json pairs = Json::array();
  for (const auto& [i, j] : v.violations) pairs.push_back({i, j});
  return Json{{"pass", v.pass}, {"violations", pairs}};
}

inline int cmd_check(const CheckConfig& cfg, Output io) {
  std::vector<DnaWord> words;
  if (cfg.words) {
    for (const auto& w : parse_kbases(*cfg.words)) words.emplace_back(w);
  } else {
    words = parse_dna_lines(read_file(*cfg.file));
  }
  const auto rep = check_constraints(words, cfg.d);
  Json rec{{"words", words.size()},
           {"length", words.front().size()},
           {"d", rep.d},
           {"hamming", verdict_json(rep.hamming)},
           {"reverse", verdict_json(rep.reverse)},
           {"reverse_complement", verdict_json(rep.reverse_complement)},
           {"fixed_gc", Json{{"pass", rep.fixed_gc}, {"gc_counts", rep.gc_counts}}}};
  const bool all = rep.hamming.pass && rep.reverse.pass && rep.reverse_complement.pass && rep.fixed_gc;
  if (cfg.json) {
    io.out << rec.dump() << '\n';
  } else {
    io.out << words.size() << " words of length " << words.front().size() << ", d = " << rep.d << '\n';
    auto line = [&](const char* name, const ConstraintVerdict& v) {
      io.out << name << ": " << (v.pass ? "pass" : "fail");
      if (!v.pass) io.out << " (" << v.violations.size() << " violations)";
      io.out << '\n';
      for (const auto& [i, j] : v.violations)
        io.out << "  " << i << ' ' << j << ' ' << words[i].str() << ' ' << words[j].str() << '\n';
    };
    line("hamming", rep.hamming);
    line("reverse", rep.reverse);
    line("reverse_complement", rep.reverse_complement);
    io.out << "fixed_gc: " << (rep.fixed_gc ? "pass" : "fail");
    if (!rep.gc_counts.empty()) {
      const auto [lo, hi] = std::minmax_element(rep.gc_counts.begin(), rep.gc_counts.end());
      io.out << " (GC counts " << *lo << ".." << *hi << ")";
    }
    io.out << '\n';
  }
  return cfg.strict && !all ? kMismatch : kOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyConfig {
  std::string target;
  std::optional<std::string> only;
  bool json = false;
  unsigned workers = 0;
};

inline int cmd_verify(const VerifyConfig& cfg, Output io) {
  if (cfg.target != "paper") throw ValidationError("unknown verify target '" + cfg.target + "' (expected 'paper')");
  const auto report = verify_paper(Golden::embedded(), cfg.only, RunOptions{cfg.workers});
  for (const auto& f : report.facts) {
    if (cfg.json) {
      io.out << to_json(f).dump() << '\n';
    } else {
      io.out << (f.pass ? "PASS " : "FAIL ") << f.id << "  " << f.description << "  expected " << f.expected
             << "  actual " << f.actual;
      if (!f.note.empty()) io.out << "  (" << f.note << ")";
      io.out << '\n';
    }
  }
  if (cfg.json) {
    io.out << Json{{"summary", {{"facts", report.facts.size()}, {"failures", report.failures()}}}}.dump() << '\n';
  } else {
    io.out << report.facts.size() - report.failures() << "/" << report.facts.size() << " facts pass\n";
  }
  return report.all_pass() ? kOk : kMismatch;
}

}  // namespace detail

/// Runs the CLI on argv, writing to out/err; returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible codes from m-quasi-reciprocal words and reversible DNA codes over GF(4^k)"};
  app.require_subcommand(1);
  const std::vector<std::string> variants{"S", "E", "E1", "E2", "E3"};

  detail::ConstructConfig cc;
  auto* construct = app.add_subcommand("construct", "Build a reversible code from a quasi-reciprocal seed word");
  construct->add_option("--q", cc.q, "Field order")->required();
  construct->add_option("--modulus", cc.modulus, "Modulus coefficients c0,c1,... over the base field");
  construct->add_option("--m", cc.m, "Quasi-reciprocity offset")->required();
  construct->add_option("--t", cc.t, "Shift depth")->capture_default_str();
  construct->add_option("--variant", cc.variant, "Generating set: S, E, E1, E2, E3")
      ->check(CLI::IsMember(variants))
      ->capture_default_str();
  auto* c_coeffs = construct->add_option("--coeffs", cc.coeffs, "Seed word: comma-separated element tokens");
  auto* c_file = construct->add_option("--file", cc.file, "File with one seed word per line");
  c_coeffs->excludes(c_file);
  construct->add_flag("--json", cc.json, "Line-delimited JSON output");
  construct->add_option("--workers", cc.workers, "Distance workers (0: hardware threads)");

  detail::DnaConfig dc;
  auto* dna = app.add_subcommand("dna", "Build a reversible DNA code over GF(4^k)");
  dna->add_option("--k", dc.k, "DNA block size")->required()->check(CLI::Range(1, 6));
  dna->add_option("--m", dc.m, "Quasi-reciprocity offset")->required();
  dna->add_option("--t", dc.t, "Shift depth")->capture_default_str();
  dna->add_option("--variant", dc.variant, "Generating set: S, E, E1, E2, E3")
      ->check(CLI::IsMember(variants))
      ->capture_default_str();
  auto* d_bases = dna->add_option("--bases", dc.bases, "Seed as DNA k-bases, whitespace or comma separated");
  auto* d_coeffs = dna->add_option("--coeffs", dc.coeffs, "Seed as GF(4^k) element tokens");
  auto* d_file = dna->add_option("--file", dc.file, "File holding the seed as one DNA word");
  d_bases->excludes(d_coeffs)->excludes(d_file);
  d_coeffs->excludes(d_file);
  dna->add_flag("--complement", dc.complement, "Add the all-ones word (reverse-complement closure)");
  dna->add_flag("--no-enumerate", dc.no_enumerate, "Report only, do not list words");
  dna->add_option("--cap", dc.cap, "Enumeration cap in codewords")->capture_default_str();
  dna->add_flag("--json", dc.json, "Line-delimited JSON output");
  dna->add_option("--workers", dc.workers, "Distance workers (0: hardware threads)");

  detail::CheckConfig kc;
  auto* check = app.add_subcommand("check", "DNA constraint report for a set of words");
  auto* k_file = check->add_option("--file", kc.file, "Word file, one word per line");
  auto* k_words = check->add_option("--words", kc.words, "Words, whitespace or comma separated");
  k_file->excludes(k_words);
  check->add_option("--d", kc.d, "Minimum distance")->required();
  check->add_flag("--strict", kc.strict, "Exit 2 when any constraint fails");
  check->add_flag("--json", kc.json, "Line-delimited JSON output");

  detail::VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Recompute the golden examples and tables");
  verify->add_option("target", vc.target, "What to verify (paper)")->required();
  verify->add_option("--only", vc.only, "Single example id");
  verify->add_flag("--json", vc.json, "Line-delimited JSON output");
  verify->add_option("--workers", vc.workers, "Distance workers (0: hardware threads)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  const detail::Output io{out, err};
  try {
    if (*construct) {
      if (!cc.coeffs && !cc.file) throw ValidationError("construct needs --coeffs or --file");
      return detail::cmd_construct(cc, io);
    }
    if (*dna) {
      if (!dc.bases && !dc.coeffs && !dc.file) throw ValidationError("dna needs --bases, --coeffs or --file");
      return detail::cmd_dna(dc, io);
    }
    if (*check) {
      if (!kc.file && !kc.words) throw ValidationError("check needs --file or --words");
      return detail::cmd_check(kc, io);
    }
    return detail::cmd_verify(vc, io);
  } catch (const InternalInconsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace revcodes::cli
