/*
 * Copyright 2026 The vstlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vstlab_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#ifdef VSTLAB_CLI11_SPLIT
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "vstlab/error.hpp"
#include "vstlab/io.hpp"
#include "vstlab/irreducibility.hpp"
#include "vstlab/presentations.hpp"
#include "vstlab/reps.hpp"
#include "vstlab/search.hpp"
#include "vstlab/words.hpp"

namespace vstlab::cli {

namespace {

/// Raised for invalid flag combinations detected after parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  int n = 0;
  std::string format = "json";

  std::string rep;
  std::string rep_file;
  std::map<std::string, std::string> params;
  std::string mode = "auto";
  std::string presentation;
  std::string at;

  std::string alphabet = "auto";
  std::string word_mode = "group";
  std::string from;
  std::string to;
  std::string kind;
  int index = 0;
  std::vector<std::string> words;
  std::vector<std::string> via;
  std::string trace_file;
  std::size_t max_len = 0;
  std::size_t max_nodes = 0;
};

class Command {
 public:
  Command(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  bool text() const { return o_.format == "text"; }

  int require_n() const {
    if (o_.n <= 0) throw UsageError("missing or invalid -n (strand count)");
    return o_.n;
  }

  const std::string& single_word() const {
    if (o_.words.size() != 1) throw UsageError("expected exactly one word argument");
    return o_.words.front();
  }

  Alphabet word_alphabet(const std::string& text) const {
    if (o_.alphabet != "auto") return parse_alphabet(o_.alphabet);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      if (tok[0] == 'm' || tok[0] == 'M' || tok[0] == 'g') return Alphabet::Connecting;
    }
    return Alphabet::Standard;
  }

  Word parse_word(const std::string& text) const {
    return Word::parse(text, require_n(), word_alphabet(text), parse_mode(o_.word_mode));
  }

  AnyRep load_rep() const {
    RepSpec spec;
    if (!o_.rep_file.empty()) {
      spec = rep_spec_from_json(read_json(o_.rep_file));
      if (spec.n == 0) spec.n = o_.n;
    } else {
      if (o_.rep.empty()) throw UsageError("choose a representation with --rep or --rep-file");
      spec.name = canonical_rep_name(o_.rep);
      spec.n = require_n();
      spec.params = o_.params;
      spec.mode = o_.mode;
    }
    if (spec.n <= 0 && spec.images.is_null()) throw UsageError("missing or invalid -n (strand count)");
    return build_rep(spec);
  }

  static Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
      return Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
  }

  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  int pi() {
    const Word w = parse_word(single_word());
    const Permutation p = pi_image(w);
    if (text()) {
      out_ << '[';
      for (std::size_t k = 0; k < p.images().size(); ++k) out_ << (k ? ", " : "") << p.images()[k];
      out_ << "]\npure: " << (p.is_identity() ? "true" : "false") << '\n';
    } else {
      emit({{"word", w.to_string()}, {"images", p.images()}, {"pure", p.is_identity()}});
    }
    return 0;
  }

  int reduce() {
    const Word w = free_reduce(parse_word(single_word()));
    if (text()) {
      out_ << w.to_string() << '\n';
    } else {
      emit({{"word", w.to_string()}, {"length", w.size()}});
    }
    return 0;
  }

  std::string default_presentation(const AnyRep& rep) const {
    if (!o_.presentation.empty()) return o_.presentation;
    return std::visit(
        [](const auto& r) -> std::string {
          if (r.name() == "eta1" || r.name() == "eta2") return "twin";
          return r.mode() == Mode::Group ? "vst" : "vstm";
        },
        rep);
  }

  int check_rep() {
    const AnyRep rep = load_rep();
    const Presentation pres = presentation_catalog(default_presentation(rep), strands(rep));
    const auto violations = std::visit([&](const auto& r) { return check_relations(r, pres); }, rep);
    if (text()) {
      if (violations.empty()) out_ << "ok: " << pres.relations().size() << " relations of " << pres.name() << '\n';
      for (const auto& v : violations) out_ << v.instance << (v.determinant ? " (determinant)" : "") << '\n';
    } else {
      emit(violations_to_json(violations));
    }
    return violations.empty() ? 0 : 1;
  }

  int eval() {
    const AnyRep rep = load_rep();
    const std::string& text_word = single_word();
    const Word w = Word::parse(text_word, strands(rep), word_alphabet(text_word), parse_mode(o_.word_mode));
    std::visit(
        [&](const auto& r) {
          const auto m = rep_eval(r, w);
          if (text()) {
            out_ << m.to_string() << '\n';
          } else {
            emit(matrix_to_json(m));
          }
        },
        rep);
    return 0;
  }

  int irreducible() {
    const AnyRep rep = load_rep();
    IrreducibilityReport report;
    if (const auto* poly = std::get_if<PolyRep>(&rep)) {
      if (o_.at.empty()) throw UsageError("--at is required for representations over Z[t, t^-1]");
      report = decide(*poly, Gaussian::parse(o_.at));
    } else {
      report = decide(std::get<FieldRep>(rep));
    }
    if (text()) {
      out_ << "verdict: " << to_string(report.verdict) << "\nalgebra_dimension: " << report.algebra_dimension
           << '\n';
      if (report.witness) {
        out_ << "witness:";
        for (const auto& x : *report.witness) out_ << ' ' << x.to_string();
        out_ << '\n';
      }
      if (report.predicate) out_ << "predicate: " << to_string(*report.predicate) << '\n';
    } else {
      emit(report_to_json(report));
    }
    return 0;
  }

  int convert() {
    if (o_.from.empty() || o_.to.empty()) throw UsageError("convert needs --from and --to");
    const Alphabet from = parse_alphabet(o_.from);
    const Alphabet to = parse_alphabet(o_.to);
    const Word w = Word::parse(single_word(), require_n(), from,
                               from == Alphabet::Connecting || from == Alphabet::ReducedConnecting
                                   ? Mode::Monoid
                                   : parse_mode(o_.word_mode));
    Word result;
    if (from == Alphabet::Reduced && to == Alphabet::Standard) {
      result = expand_reduced(w);
    } else if (from == Alphabet::ReducedConnecting && to == Alphabet::Connecting) {
      result = expand_reduced(w);
    } else if (from == Alphabet::Standard && to == Alphabet::Reduced) {
      result = to_reduced(w);
    } else if (from == Alphabet::Connecting && to == Alphabet::ReducedConnecting) {
      result = to_reduced(w);
    } else if (from == Alphabet::Connecting && to == Alphabet::Standard) {
      result = map_F(w);
    } else if (from == Alphabet::Standard && to == Alphabet::Connecting) {
      result = map_G(w);
    } else {
      throw UsageError("unsupported conversion " + o_.from + " -> " + o_.to);
    }
    result = free_reduce(result);
    if (text()) {
      out_ << result.to_string() << '\n';
    } else {
      emit({{"word", result.to_string()}, {"alphabet", std::string(to_string(result.alphabet()))}});
    }
    return 0;
  }

  int derive() {
    if (o_.kind.size() != 1) throw UsageError("--kind must be one of s, t, T, m, M, g");
    const Word probe = Word::parse(o_.kind + "1", 2, o_.kind == "m" || o_.kind == "M" || o_.kind == "g"
                                                         ? Alphabet::Connecting
                                                         : Alphabet::Standard);
    const Word w = derive_generator(probe.letters()[0].kind, o_.index, require_n());
    if (text()) {
      out_ << w.to_string() << '\n';
    } else {
      emit({{"word", w.to_string()}, {"length", w.size()}});
    }
    return 0;
  }

  int search() {
    if (o_.words.size() != 2) throw UsageError("search-equiv needs two words");
    const Presentation pres =
        presentation_catalog(o_.presentation.empty() ? "vstm" : o_.presentation, require_n());
    const Word u = pres.word(o_.words[0]);
    const Word w = pres.word(o_.words[1]);
    SearchBounds bounds = SearchBounds::from_env();
    if (o_.max_len != 0) bounds.max_len = o_.max_len;
    if (o_.max_nodes != 0) bounds.max_nodes = o_.max_nodes;
    std::vector<Word> waypoints{u};
    for (const auto& x : o_.via) waypoints.push_back(pres.word(x));
    waypoints.push_back(w);
    const SearchResult r = waypoints.size() == 2 ? search_equiv(u, w, pres, bounds)
                                                 : search_via(waypoints, pres, bounds);
    if (text()) {
      out_ << to_string(r.status) << " (" << r.nodes << " nodes)\n";
      if (r.trace) {
        for (const auto& s : r.trace->steps) {
          out_ << "  " << s.label << ' ' << to_string(s.dir) << " @" << s.pos << '\n';
        }
      }
    } else {
      emit({{"status", std::string(to_string(r.status))},
            {"nodes", r.nodes},
            {"trace", r.trace ? trace_to_json(*r.trace) : Json(nullptr)}});
    }
    return 0;
  }

  int trace_verify() {
    if (o_.trace_file.empty()) throw UsageError("trace verify needs a trace file");
    const RewriteTrace t = trace_from_json(read_json(o_.trace_file));
    const Presentation pres = presentation_catalog(t.presentation, t.n);
    const TraceCheck check = verify_trace(t, pres);
    if (text()) {
      out_ << (check.ok ? "verified" : "failed: " + check.message) << '\n';
    } else {
      emit({{"ok", check.ok},
            {"steps", t.steps.size()},
            {"failed_step", check.failed_step ? Json(*check.failed_step) : Json(nullptr)},
            {"message", check.message}});
    }
    return check.ok ? 0 : 1;
  }

  int catalog() {
    if (o_.presentation.empty()) throw UsageError("catalog needs --presentation");
    const Presentation pres = presentation_catalog(o_.presentation, require_n());
    if (text()) {
      for (const auto& r : pres.relations()) {
        out_ << r.instance << ": " << r.lhs.to_string() << " = " << r.rhs.to_string() << '\n';
      }
    } else {
      emit(catalog_to_json(pres));
    }
    return 0;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

void add_rep_options(CLI::App* sub, Options& o) {
  sub->add_option("--rep", o.rep, "eta1, eta2, eta1p, eta2p or upsilon");
  sub->add_option("--rep-file", o.rep_file, "representation spec JSON");
  for (const char* key : {"v", "f", "w", "y", "family", "a", "b", "c", "x"}) {
    sub->add_option_function<std::string>(
        std::string("--") + key, [&o, key](const std::string& value) { o.params[key] = value; },
        std::string("parameter ") + key);
  }
  sub->add_option("--mode", o.mode, "eta2p: monoid, group or auto")
      ->check(CLI::IsMember({"monoid", "group", "auto"}));
}

void add_word_options(CLI::App* sub, Options& o) {
  sub->add_option("--alphabet", o.alphabet, "standard, reduced, connecting, reduced-connecting or auto");
  sub->add_option("--word-mode", o.word_mode, "monoid or group")->check(CLI::IsMember({"monoid", "group"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations for virtual singular twin monoids and groups", "vstlab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-n", o.n, "strand count");
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* pi = app.add_subcommand("pi", "permutation image of a word and purity");
  pi->add_option("word", o.words)->required();
  add_word_options(pi, o);

  auto* reduce = app.add_subcommand("reduce", "free reduction of a word");
  reduce->add_option("word", o.words)->required();
  add_word_options(reduce, o);

  auto* check = app.add_subcommand("check-rep", "check a representation against a presentation");
  add_rep_options(check, o);
  check->add_option("--presentation", o.presentation);

  auto* eval = app.add_subcommand("eval", "image of a word under a representation");
  add_rep_options(eval, o);
  add_word_options(eval, o);
  eval->add_option("word", o.words)->required();

  auto* irr = app.add_subcommand("irreducible", "irreducibility report at a specialization");
  add_rep_options(irr, o);
  irr->add_option("--at", o.at, "specialization t0");

  auto* convert = app.add_subcommand("convert", "convert a word between alphabets");
  convert->add_option("word", o.words)->required();
  convert->add_option("--from", o.from)->required();
  convert->add_option("--to", o.to)->required();
  convert->add_option("--word-mode", o.word_mode)->check(CLI::IsMember({"monoid", "group"}));

  auto* derive = app.add_subcommand("derive", "expand s_k, t_k, m_k or g_k into index-1 generators");
  derive->add_option("--kind", o.kind)->required();
  derive->add_option("--index", o.index)->required();

  auto* search = app.add_subcommand("search-equiv", "bounded search for a rewriting certificate");
  search->add_option("words", o.words)->expected(2)->required();
  search->add_option("--presentation", o.presentation);
  search->add_option("--max-len", o.max_len);
  search->add_option("--max-nodes", o.max_nodes);
  search->add_option("--via", o.via, "intermediate word, repeatable");

  auto* trace = app.add_subcommand("trace", "rewriting traces");
  trace->require_subcommand(1);
  auto* verify = trace->add_subcommand("verify", "replay a trace file");
  verify->add_option("file", o.trace_file)->required();

  auto* catalog = app.add_subcommand("catalog", "dump a presentation as JSON");
  catalog->add_option("--presentation", o.presentation)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Command cmd(o, out);
  try {
    if (*pi) return cmd.pi();
    if (*reduce) return cmd.reduce();
    if (*check) return cmd.check_rep();
    if (*eval) return cmd.eval();
    if (*irr) return cmd.irreducible();
    if (*convert) return cmd.convert();
    if (*derive) return cmd.derive();
    if (*search) return cmd.search();
    if (*verify) return cmd.trace_verify();
    if (*catalog) return cmd.catalog();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace vstlab::cli
