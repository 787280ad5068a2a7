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

/**
 * @file repro.hpp
 * @brief Golden-data harness: recomputes each worked example and table entry
 *        and reports one fact per asserted value.
 *
 * Golden values live in data/golden.json, which is embedded at build time.
 * The file carries an FNV-1a checksum of its compact `data` member so that
 * accidental edits are caught on load.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "revcodes/dna.hpp"
#include "revcodes/field.hpp"
#include "revcodes/field_text.hpp"
#include "revcodes/golden_json.hpp"
#include "revcodes/lincode.hpp"
#include "revcodes/wordops.hpp"

namespace revcodes {

struct Fact {
  std::string id;
  std::string example;
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string note;
};

struct Report {
  std::vector<Fact> facts;

  bool all_pass() const {
    return std::all_of(facts.begin(), facts.end(), [](const Fact& f) { return f.pass; });
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(facts.begin(), facts.end(), [](const Fact& f) { return !f.pass; }));
  }
  void append(Report other) {
    facts.insert(facts.end(), std::make_move_iterator(other.facts.begin()), std::make_move_iterator(other.facts.end()));
  }
};

inline nlohmann::json to_json(const Fact& f) {
  nlohmann::json j{{"id", f.id},           {"example", f.example}, {"description", f.description},
                   {"expected", f.expected}, {"actual", f.actual},   {"pass", f.pass}};
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string checksum_of(const nlohmann::json& data) {
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(data.dump());
  return os.str();
}

class Golden {
 public:
  /// Parses a golden file and verifies its checksum.
  static Golden parse(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("golden data: ") + e.what());
    }
    if (!j.contains("data") || !j.contains("checksum")) throw ValidationError("golden data lacks data/checksum");
    const auto want = j.at("checksum").get<std::string>();
    const auto got = checksum_of(j.at("data"));
    if (want != got) throw ValidationError("golden data checksum mismatch: file says " + want + ", content is " + got);
    Golden g;
    g.version_ = j.value("version", 0);
    g.data_ = j.at("data");
    return g;
  }

  static const Golden& embedded() {
    static const Golden g = parse(kEmbeddedGoldenJson);
    return g;
  }

  int version() const { return version_; }
  const nlohmann::json& data() const { return data_; }

 private:
  int version_ = 0;
  nlohmann::json data_;
};

struct RunOptions {
  unsigned workers = 0;
};

// ---------------------------------------------------------------------------
// Parameter-table rows
// ---------------------------------------------------------------------------

struct Table1Row {
  int row = 0;
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::size_t m = 0;
  std::string coeffs;  // tokens in powers of w
  SetVariant variant = SetVariant::S;
  std::size_t t = 0;
  std::size_t k = 0, d = 0;
  std::string mds;  // "MDS", "almost-MDS" or "-"

  static Table1Row from_json(const nlohmann::json& j) {
    Table1Row r;
    r.row = j.at("row").get<int>();
    r.n = j.at("n").get<std::size_t>();
    r.q = j.at("q").get<std::uint32_t>();
    r.m = j.at("m").get<std::size_t>();
    r.coeffs = j.at("coeffs").get<std::string>();
    r.variant = parse_variant(j.at("variant").get<std::string>());
    r.t = j.at("t").get<std::size_t>();
    r.k = j.at("k").get<std::size_t>();
    r.d = j.at("d").get<std::size_t>();
    r.mds = j.at("class").get<std::string>();
    return r;
  }
};

inline std::vector<Table1Row> table1_rows(const Golden& g) {
  std::vector<Table1Row> out;
  for (const auto& j : g.data().at("table_1")) out.push_back(Table1Row::from_json(j));
  return out;
}

namespace detail {

inline std::string params_str(std::size_t n, std::size_t k, std::size_t d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

class FactSink {
 public:
  explicit FactSink(std::string example) : example_(std::move(example)) {}

  void add(const std::string& id, const std::string& desc, const std::string& expected, const std::string& actual,
           std::string note = {}) {
    report_.facts.push_back({example_ + "/" + id, example_, desc, expected, actual, expected == actual, std::move(note)});
  }

  void check(const std::string& id, const std::string& desc, bool ok) {
    add(id, desc, "true", bool_str(ok));
  }

  /// Runs fn, recording a failed fact if it throws.
  void guard(const std::string& id, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      report_.facts.push_back({example_ + "/" + id, example_, "evaluation", "no error", e.what(), false, {}});
    }
  }

  Report take() { return std::move(report_); }

 private:
  std::string example_;
  Report report_;
};

inline SymbolTable gf64_symbols(const Field& f) { return {{"g", f.primitive()}, {"a", subfield_alpha(f)}}; }
inline SymbolTable gf4_symbols(const Field& f) { return {{"a", f.primitive()}, {"w", f.primitive()}}; }

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    if constexpr (std::is_same_v<T, std::string>) {
      s += v[i];
    } else {
      s += std::to_string(v[i]);
    }
  }
  return s + "}";
}

inline std::vector<std::string> sorted_rows(const std::vector<Codeword>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back("(" + format_codeword(w) + ")");
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<long long> sorted_shifts(std::vector<long long> v, std::size_t n) {
  const auto nn = static_cast<long long>(n);
  for (auto& x : v) x = ((x % nn) + nn) % nn;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Evaluates sum coef * eta^e(shift^s(seed)) [+ ones * r].
inline Codeword combine(const DnaBasis& b, const Codeword& seed, const nlohmann::json& cw, const SymbolTable& syms) {
  const Field& f = *b.field();
  Codeword acc = Codeword::zeros(b.field(), seed.size());
  for (const auto& term : cw.at("terms")) {
    const Elem coef = parse_element(f, term.at("coef").get<std::string>(), syms);
    auto w = b.eta_pow(cyclic_shift(seed, term.at("shift").get<long long>()), term.at("eta").get<long long>());
    acc = acc + w.scaled(coef);
  }
  if (cw.contains("ones"))
    acc = acc + Codeword::ones(b.field(), seed.size()).scaled(parse_element(f, cw.at("ones").get<std::string>(), syms));
  return acc;
}

inline void check_code(FactSink& out, const std::string& id, const LinearCode& code, const nlohmann::json& want,
                       unsigned workers) {
  const std::size_t d = code.min_distance(workers);
  out.add(id + ".params", "(n,k,d)",
          params_str(want.at("n").get<std::size_t>(), want.at("k").get<std::size_t>(), want.at("d").get<std::size_t>()),
          params_str(code.n(), code.k(), d));
  out.check(id + ".reversible", "code is reversible", code.is_reversible());
  if (want.contains("class"))
    out.add(id + ".class", "MDS classification", want.at("class").get<std::string>(),
            to_string(mds_class(code.n(), code.k(), d)));
  if (want.contains("griesmer"))
    out.add(id + ".griesmer", "Griesmer bound", want.at("griesmer").get<std::string>(),
            to_string(griesmer_check(code.n(), code.k(), d, code.field()->order())));
}

// ---------------------------------------------------------------------------
// Individual examples
// ---------------------------------------------------------------------------

inline Report gf64_shift_codes(const Golden& g, const RunOptions& opts) {
  FactSink out("3.5");
  const auto& j = g.data().at("example_3_5");
  const auto f = canonical_field(j.at("q").get<std::uint32_t>());
  const auto syms = gf64_symbols(*f);
  out.guard("seed", [&] {
    const auto seed = parse_codeword(f, j.at("seed").get<std::string>(), syms);
    const auto m = j.at("m").get<std::size_t>();
    const auto t = j.at("t").get<std::size_t>();
    out.check("seed.quasi_reciprocal", "seed is 2-quasi-reciprocal", is_m_quasi_reciprocal(seed, m));
    for (const auto& cj : j.at("codes")) {
      const std::string name = cj.at("name").get<std::string>();
      out.guard(name, [&] {
        const auto v = parse_variant(cj.at("variant").get<std::string>());
        const auto exps = generating_set_exponents(seed.size(), m, t, v);
        out.add(name + ".shifts", "generating-set shift exponents (mod n, as a set)",
                join(sorted_shifts(cj.at("shifts").get<std::vector<long long>>(), seed.size())),
                join(sorted_shifts(exps, seed.size())));
        const auto gens = build_generating_set(seed, m, t, v);
        std::vector<Codeword> rows;
        for (const auto& r : cj.at("G")) rows.push_back(parse_codeword(f, r.get<std::string>(), syms));
        out.add(name + ".G", "generator rows (as a set)", join(sorted_rows(rows)), join(sorted_rows(gens)));
        check_code(out, name, LinearCode::span(gens), cj, opts.workers);
      });
    }
  });
  return out.take();
}

inline Report overlapping_shift_sets(const Golden& g, const RunOptions&) {
  FactSink out("3.remark");
  const auto& j = g.data().at("remark_3");
  const auto f = canonical_field(j.at("q").get<std::uint32_t>());
  const auto syms = gf4_symbols(*f);
  out.guard("sets", [&] {
    const auto seed = parse_codeword(f, j.at("seed").get<std::string>(), syms);
    const auto m = j.at("m").get<std::size_t>();
    out.check("seed.quasi_reciprocal", "(a,a,b,c,b) is 2-quasi-reciprocal", is_m_quasi_reciprocal(seed, m));
    std::vector<LinearCode> codes;
    std::vector<std::size_t> listed;
    for (const auto& sj : j.at("sets")) {
      const auto t = sj.at("t").get<std::size_t>();
      const auto exps = generating_set_exponents(seed.size(), m, t, SetVariant::S);
      out.add("S" + std::to_string(t) + ".shifts", "listed shift exponents",
              join(sj.at("shifts").get<std::vector<long long>>()), join(exps));
      listed.push_back(exps.size());
      codes.push_back(LinearCode::span(build_generating_set(seed, m, t, SetVariant::S)));
    }
    const auto rev = [&](long long i) { return reverse(cyclic_shift(seed, i)); };
    out.check("identity.pi1", "(pi^1 c)^r = pi^-3 c = pi^2 c",
              rev(1) == cyclic_shift(seed, -3) && cyclic_shift(seed, -3) == cyclic_shift(seed, 2));
    out.check("identity.pi2", "(pi^2 c)^r = pi^-4 c = pi^1 c",
              rev(2) == cyclic_shift(seed, -4) && cyclic_shift(seed, -4) == cyclic_shift(seed, 1));
    out.add("dims", "dim <S1> = dim <S2>", std::to_string(codes[0].k()), std::to_string(codes[1].k()));
    out.add("span", "<S1> = <S2> (reduced bases)", join(sorted_rows(codes[0].basis())),
            join(sorted_rows(codes[1].basis())));
    out.check("dim_below_listed", "dimension of <S2> is below the number of listed shifts",
              codes[1].k() < listed[1]);
  });
  return out.take();
}

inline Report tower_identities(const Golden& g, const RunOptions&) {
  FactSink out("4.2");
  const auto& j = g.data().at("example_4_2");
  const auto f = canonical_field(64);
  const auto syms = gf64_symbols(*f);
  out.guard("identities", [&] {
    for (const auto& id : j.at("identities")) {
      const auto lhs = id[0].get<std::string>(), rhs = id[1].get<std::string>();
      out.add(lhs + "=" + rhs, lhs + " = " + rhs, format_element(*f, parse_element(*f, rhs, syms)),
              format_element(*f, parse_element(*f, lhs, syms)));
    }
    const auto b = make_dna_basis(3);
    const auto kb = j.at("kbase").get<std::string>();
    const Elem z = b.zeta_bar(kb);
    out.add("zeta_bar." + kb + ".expansion", "zeta_bar(" + kb + ") via its basis expansion",
            format_element(*f, parse_element(*f, j.at("expansion").get<std::string>(), syms)), format_element(*f, z));
    out.add("zeta_bar." + kb, "zeta_bar(" + kb + ")",
            format_element(*f, parse_element(*f, j.at("value").get<std::string>(), syms)), format_element(*f, z));
  });
  return out.take();
}

inline Report phi_reversal(const Golden& g, const RunOptions&) {
  FactSink out("4.4");
  const auto& j = g.data().at("example_4_4");
  const auto f = canonical_field(64);
  const auto syms = gf64_symbols(*f);
  out.guard("phi", [&] {
    const auto b = make_dna_basis(3);
    const auto kb = j.at("kbase").get<std::string>();
    const auto rk = j.at("reverse_kbase").get<std::string>();
    const Elem want = parse_element(*f, j.at("reverse_value").get<std::string>(), syms);
    out.add("zeta_bar." + rk, "zeta_bar(" + rk + ")", format_element(*f, want), format_element(*f, b.zeta_bar(rk)));
    out.add("phi", "phi(zeta_bar(" + kb + ")) = zeta_bar(" + rk + ")", format_element(*f, want),
            format_element(*f, b.phi(b.zeta_bar(kb))));
  });
  return out.take();
}

inline Report dna_tuple(const Golden& g, const RunOptions&) {
  FactSink out("4.6");
  const auto& j = g.data().at("example_4_6");
  out.guard("tuple", [&] {
    const auto bases = j.at("bases").get<std::vector<std::string>>();
    const auto m = j.at("m").get<std::size_t>();
    out.check("quasi_reversible", "tuple of DNA 4-bases is 2-quasi-reversible", is_dna_m_quasi_reciprocal(bases, m));
  });
  return out.take();
}

inline Report eta_rotation(const Golden& g, const RunOptions&) {
  FactSink out("4.7");
  const auto k = g.data().at("example_4_7").at("k").get<std::size_t>();
  out.guard("eta", [&] {
    const auto b = make_dna_basis(k);
    std::size_t bad = 0, total = 0;
    std::string kb(k, 'A');
    const std::string sym = "ATCG";
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= 4;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < k; ++i, v /= 4) kb[i] = sym[v % 4];
      std::string rot = kb.substr(1) + kb[0];
      bad += b.zeta_bar_inv(b.eta(b.zeta_bar(kb))) != rot;
      ++total;
    }
    out.add("rotation", "zeta_bar^-1(eta(zeta_bar(b1..bk))) = b2..bk b1 for every k-base",
            std::to_string(total) + "/" + std::to_string(total),
            std::to_string(total - bad) + "/" + std::to_string(total));
  });
  return out.take();
}

inline Report gf4_code(const Golden& g, const RunOptions& opts) {
  FactSink out("4.11");
  const auto& j = g.data().at("example_4_11");
  const auto f = canonical_field(j.at("q").get<std::uint32_t>());
  const auto syms = gf4_symbols(*f);
  out.guard("code", [&] {
    const auto seed = parse_codeword(f, j.at("seed").get<std::string>(), syms);
    const auto m = j.at("m").get<std::size_t>();
    const auto t = j.at("t").get<std::size_t>();
    const auto v = parse_variant(j.at("variant").get<std::string>());
    out.check("seed.quasi_reciprocal", "seed is 3-quasi-reciprocal", is_m_quasi_reciprocal(seed, m));
    out.add("shifts", "generating-set shift exponents", join(j.at("shifts").get<std::vector<long long>>()),
            join(generating_set_exponents(seed.size(), m, t, v)));
    const auto gens = build_generating_set(seed, m, t, v);
    std::vector<Codeword> rows;
    for (const auto& r : j.at("G")) rows.push_back(parse_codeword(f, r.get<std::string>(), syms));
    out.add("G", "generator rows (as a set)", join(sorted_rows(rows)), join(sorted_rows(gens)));
    check_code(out, "code", LinearCode::span(gens), j, opts.workers);
  });
  return out.take();
}

inline Report dna_map_code(const Golden& g, const std::string& name, bool complement, const RunOptions& opts) {
  FactSink out(name);
  const auto& base = g.data().at("example_4_12");
  const auto& j = complement ? g.data().at("example_4_14") : base;
  const auto f = canonical_field(64);
  const auto syms = gf64_symbols(*f);
  out.guard("code", [&] {
    const auto b = make_dna_basis(base.at("k").get<std::size_t>());
    const auto m = base.at("m").get<std::size_t>();
    const auto t = base.at("t").get<std::size_t>();
    std::string word;
    const auto bases = base.at("bases").get<std::vector<std::string>>();
    for (const auto& kb : bases) word += kb;
    const auto seed = b.zeta_bar(DnaWord(word));
    if (!complement) {
      out.add("seed", "c = zeta_bar(B)", format_codeword(parse_codeword(f, base.at("seed").get<std::string>(), syms)),
              format_codeword(seed));
      out.check("seed.quasi_reciprocal", "B is DNA-3-quasi-reciprocal", is_dna_m_quasi_reciprocal(bases, m));
    }
    const DnaCodeOptions no_enum{false, 0};
    const auto code = complement ? reversible_complement_dna_code(seed, m, t, SetVariant::S, b, no_enum)
                                 : reversible_dna_code(seed, m, t, SetVariant::S, b, no_enum);
    out.add("dim4", "GF(4)-dimension of the map-code", std::to_string(j.at("dim4").get<std::size_t>()),
            std::to_string(code.code.dim4()));
    std::map<std::string, DnaWord> dna;
    for (const auto& cw : j.at("codewords")) {
      const auto cname = cw.at("name").get<std::string>();
      const auto value = combine(b, seed, cw, syms);
      if (cw.contains("value"))
        out.add(cname + ".value", cname + " over GF(64)",
                format_codeword(parse_codeword(f, cw.at("value").get<std::string>(), syms)), format_codeword(value));
      const auto d = b.zeta_bar_inv(value);
      dna.emplace(cname, d);
      out.add(cname + ".dna", "DNA image of " + cname, cw.at("dna").get<std::string>(), d.str());
      out.check(cname + ".member", cname + " lies in the map-code", code.code.contains(value));
    }
    for (const auto& p : j.at("reverse_pairs")) {
      const auto a = p[0].get<std::string>(), r = p[1].get<std::string>();
      out.add(a + "^r=" + r, "reverse of D_" + a + " is D_" + r, dna.at(r).str(), dna_reverse(dna.at(a)).str());
    }
    if (j.contains("complement_pairs")) {
      for (const auto& p : j.at("complement_pairs")) {
        const auto a = p[0].get<std::string>(), c = p[1].get<std::string>();
        out.add(a + "^c=" + c, "complement of D_" + a + " is D_" + c, dna.at(c).str(),
                dna_complement(dna.at(a)).str());
      }
    }
    out.check("reverse_closed", "DNA image is closed under reversal", code.code.is_reverse_closed());
    if (complement)
      out.check("complement_closed", "DNA image is closed under complement", code.code.is_complement_closed());
    (void)opts;
  });
  return out.take();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

/// Code-parameter rows. GF(4) and GF(64) rows are evaluated with the pinned alpha/gamma
/// only; other rows retry every primitive element when the canonical one
/// does not reproduce (n, k, d).
inline Report run_table1(const Golden& g, const RunOptions& opts = {}) {
  detail::FactSink out("table1");
  for (const auto& row : table1_rows(g)) {
    const std::string id = "row" + std::to_string(row.row);
    out.guard(id, [&] {
      const auto f = canonical_field(row.q);
      const bool pinned = row.q == 4 || row.q == 64;
      std::vector<Elem> candidates{f->primitive()};
      if (!pinned)
        for (Elem w : enumerate_primitive_elements(*f))
          if (w != f->primitive()) candidates.push_back(w);

      std::optional<Elem> match;
      std::size_t k = 0, d = 0, tried = 0;
      bool all_reversible = true, all_griesmer = true;
      std::string griesmer_msg;
      for (Elem w : candidates) {
        const auto seed = parse_codeword(f, row.coeffs, {{"w", w}});
        const auto code = LinearCode::span(build_generating_set(seed, row.m, row.t, row.variant));
        const auto dd = code.min_distance(opts.workers);
        ++tried;
        all_reversible = all_reversible && code.is_reversible();
        try {
          griesmer_check(code.n(), code.k(), dd, row.q);
        } catch (const InternalInconsistencyError& e) {
          all_griesmer = false;
          griesmer_msg = e.what();
        }
        if (tried == 1) {
          k = code.k();
          d = dd;
        }
        if (code.k() == row.k && dd == row.d) {
          match = w;
          k = code.k();
          d = dd;
          break;
        }
      }
      std::string note;
      if (match) {
        note = "w = element " + std::to_string(*match) + " of " + f->name() +
               (*match == f->primitive() ? " (canonical)" : " (substituted)");
      } else {
        note = pinned ? "pinned primitive element does not reproduce the row"
                      : "no primitive element reproduces the row (" + std::to_string(tried) + " tried)";
      }
      out.add(id + ".params", "(n,k,d) over GF(" + std::to_string(row.q) + ")",
              detail::params_str(row.n, row.k, row.d), detail::params_str(row.n, k, d), note);
      out.check(id + ".reversible", "every constructed code is reversible", all_reversible);
      out.add(id + ".griesmer", "every constructed code satisfies the Griesmer bound", "true",
              detail::bool_str(all_griesmer), griesmer_msg);
      out.add(id + ".class", "MDS classification", row.mds, to_string(mds_class(row.n, k, d)));
    });
  }
  return out.take();
}

/// DNA word set of the length-11 GF(4) code, compared as a set.
inline Report run_table2(const Golden& g, const RunOptions& opts = {}) {
  detail::FactSink out("table2");
  const auto& j = g.data().at("table_2");
  const auto& src = g.data().at(j.at("source").get<std::string>());
  out.guard("set", [&] {
    const auto b = make_dna_basis(1);
    const auto f = b.field();
    const auto seed = parse_codeword(f, src.at("seed").get<std::string>(), detail::gf4_symbols(*f));
    const auto code = reversible_dna_code(seed, src.at("m").get<std::size_t>(), src.at("t").get<std::size_t>(),
                                          parse_variant(src.at("variant").get<std::string>()), b);
    std::vector<DnaWord> want;
    for (const auto& w : j.at("words")) want.emplace_back(w.get<std::string>());
    std::sort(want.begin(), want.end());
    const auto& got = *code.words;
    std::vector<DnaWord> missing, extra;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
    out.add("size", "number of codewords", std::to_string(want.size()), std::to_string(got.size()));
    out.add("set", "generated words equal the table (missing/extra)", "0/0",
            std::to_string(missing.size()) + "/" + std::to_string(extra.size()));
    out.add("params", "(n,k,d) of the GF(4) code",
            detail::params_str(j.at("n").get<std::size_t>(), j.at("k").get<std::size_t>(), j.at("d").get<std::size_t>()),
            detail::params_str(code.code.n(), code.code.dim4(), code.code.dna_distance(opts.workers)));
    std::size_t pair_min = std::numeric_limits<std::size_t>::max();
    for (std::size_t a = 0; a < got.size(); ++a)
      for (std::size_t c = a + 1; c < got.size(); ++c) pair_min = std::min(pair_min, hamming_distance(got[a], got[c]));
    out.add("pairwise_min", "minimum pairwise DNA distance", std::to_string(j.at("d").get<std::size_t>()),
            std::to_string(pair_min));
    bool closed = true;
    for (const auto& w : got) closed = closed && std::binary_search(got.begin(), got.end(), dna_reverse(w));
    out.check("reverse_closed", "word set is closed under reversal", closed);
  });
  return out.take();
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids{"3.5",  "3.remark", "4.2",    "4.4",   "4.6",
                                            "4.7",  "4.11",     "4.12",   "4.14",  "table1",
                                            "table2"};
  return ids;
}

inline Report run_example(const Golden& g, std::string_view name, const RunOptions& opts = {}) {
  if (name == "3.5") return detail::gf64_shift_codes(g, opts);
  if (name == "3.remark") return detail::overlapping_shift_sets(g, opts);
  if (name == "4.2") return detail::tower_identities(g, opts);
  if (name == "4.4") return detail::phi_reversal(g, opts);
  if (name == "4.6") return detail::dna_tuple(g, opts);
  if (name == "4.7") return detail::eta_rotation(g, opts);
  if (name == "4.11") return detail::gf4_code(g, opts);
  if (name == "4.12") return detail::dna_map_code(g, "4.12", false, opts);
  if (name == "4.14") return detail::dna_map_code(g, "4.14", true, opts);
  if (name == "table1") return run_table1(g, opts);
  if (name == "table2") return run_table2(g, opts);
  throw UnknownExampleError("unknown example '" + std::string(name) + "'");
}

/// Every registered example, or just `only`.
inline Report verify_paper(const Golden& g, std::optional<std::string> only = std::nullopt,
                           const RunOptions& opts = {}) {
  if (only) return run_example(g, *only, opts);
  Report all;
  for (const auto& id : example_ids()) all.append(run_example(g, id, opts));
  return all;
}

}  // namespace revcodes
