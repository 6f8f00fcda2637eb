#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "belyi/covering.hpp"
#include "belyi/modsym.hpp"
#include "belyi/verify.hpp"
#include "belyi/words.hpp"

namespace belyi::cli {

namespace {

using nlohmann::json;

// Emits "a", " + a", " - a" style terms; `compact` drops the spaces.
class TermWriter {
 public:
  explicit TermWriter(bool compact) : compact_(compact) {}

  void add(Integer coeff, const std::string& symbol) {
    if (coeff == 0) return;
    const Integer m = coeff < 0 ? -coeff : coeff;
    if (first_) {
      if (coeff < 0) os_ << "-";
    } else if (compact_) {
      os_ << (coeff < 0 ? "-" : "+");
    } else {
      os_ << (coeff < 0 ? " - " : " + ");
    }
    if (m != 1) os_ << m;
    os_ << symbol;
    first_ = false;
  }

  std::string str() const { return first_ ? "0" : os_.str(); }

 private:
  bool compact_;
  bool first_ = true;
  std::ostringstream os_;
};

std::string latex_index(Integer i) {
  const std::string s = std::to_string(i);
  return s.size() == 1 ? s : "{" + s + "}";
}

}  // namespace

std::string format_text(const WedgeClass& w) {
  TermWriter out(false);
  for (const auto& [key, coeff] : w.terms()) {
    out.add(coeff, "[E_" + std::to_string(key.first) + "]^[E_" + std::to_string(key.second) + "]");
  }
  return out.str();
}

std::string format_text(const TDecomposition& t) {
  TermWriter out(false);
  for (std::size_t r = 0; r < t.coefficients.size(); ++r) {
    out.add(t.coefficients[r], "T_" + std::to_string(r + 1));
  }
  return out.str();
}

std::string format_latex(const WedgeClass& w) {
  TermWriter out(true);
  for (const auto& [key, coeff] : w.terms()) {
    out.add(coeff, "[E_" + latex_index(key.first) + "]\\wedge[E_" + latex_index(key.second) + "]");
  }
  return out.str();
}

std::string format_latex(const TDecomposition& t) {
  TermWriter out(true);
  for (std::size_t r = 0; r < t.coefficients.size(); ++r) {
    out.add(t.coefficients[r], "T_" + latex_index(static_cast<Integer>(r) + 1));
  }
  return out.str();
}

json delta_document(const CurveParams& p, const WedgeClass& w) {
  json terms = json::array();
  for (const auto& [key, coeff] : w.terms()) {
    terms.push_back({{"i", key.first}, {"j", key.second}, {"coeff", coeff}});
  }
  return {{"n", p.n()}, {"k", p.k()}, {"c", p.c()}, {"object", "delta"}, {"basis", "E"}, {"terms", terms}};
}

json delta_document(const CurveParams& p, const TDecomposition& t) {
  json terms = json::array();
  for (std::size_t r = 0; r < t.coefficients.size(); ++r) {
    if (t.coefficients[r] != 0) terms.push_back({{"r", r + 1}, {"coeff", t.coefficients[r]}});
  }
  return {{"n", p.n()}, {"k", p.k()}, {"c", p.c()}, {"object", "delta"}, {"basis", "T"}, {"terms", terms}};
}

namespace {

json letters_json(const std::vector<Letter>& letters) {
  json out = json::array();
  for (const Letter& l : letters) out.push_back({{"index", l.index}, {"sign", l.sign}});
  return out;
}

std::string letters_text(Integer n, const std::vector<Letter>& letters) {
  return to_string(Word(n, letters));
}

struct Options {
  Integer n = 0;
  Integer k = 0;
  Integer i = 0;
  Integer j = 0;
  std::string basis = "e";
  std::string format = "text";
  bool placeholders = false;
  bool check = false;
  Integer max_n = 0;
  Integer fuzz_words = 10000;
  unsigned threads = 0;
};

void add_nk(CLI::App* cmd, Options& o) {
  cmd->add_option("n", o.n, "odd degree n >= 3")->required();
  cmd->add_option("k", o.k, "exponent k in [1, n-2]")->required();
}

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> allowed) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

int cmd_validate(const Options& o, std::ostream& out) {
  const CurveParams p = validate(o.n, o.k);
  const auto& in = p.inertia();
  if (o.format == "json") {
    out << json{{"n", p.n()},
                {"k", p.k()},
                {"c", p.c()},
                {"genus", p.genus()},
                {"object", "params"},
                {"inertia", {in[0].value(), in[1].value(), in[2].value()}}}
               .dump()
        << "\n";
  } else {
    out << "n = " << p.n() << ", k = " << p.k() << ", c = " << p.c() << ", genus = " << p.genus()
        << ", inertia = (" << in[0].value() << ", " << in[1].value() << ", " << in[2].value() << ")\n";
  }
  return kOk;
}

int cmd_delta(const Options& o, std::ostream& out) {
  const CurveParams p = validate(o.n, o.k);
  if (o.basis == "t") {
    const TDecomposition t = t_decomposition(p);
    if (o.format == "json") out << delta_document(p, t).dump() << "\n";
    else if (o.format == "latex") out << format_latex(t) << "\n";
    else out << format_text(t) << "\n";
  } else {
    const WedgeClass d = closed_form_delta(p);
    if (o.format == "json") out << delta_document(p, d).dump() << "\n";
    else if (o.format == "latex") out << format_latex(d) << "\n";
    else out << format_text(d) << "\n";
  }
  return kOk;
}

int cmd_word(const Options& o, std::ostream& out) {
  const CurveParams p = validate(o.n, o.k);
  Word w = lift_boundary_loop(p).word;
  if (!o.placeholders) w = strip_placeholders(w);
  if (o.format == "json") {
    out << json{{"n", p.n()}, {"k", p.k()}, {"object", "word"}, {"placeholders", o.placeholders},
                {"letters", letters_json(w.letters())}}
               .dump()
        << "\n";
  } else {
    out << to_string(w) << "\n";
  }
  return kOk;
}

int cmd_between(const Options& o, std::ostream& out) {
  const CurveParams p = validate(o.n, o.k);
  if (o.i < 0 || o.i >= p.n()) {
    throw RangeError("generator index must lie in [0, " + std::to_string(p.n() - 1) + "]");
  }
  const auto letters = between(lift_boundary_loop(p).word, p.residue(o.i));
  if (o.format == "json") {
    out << json{{"n", p.n()}, {"k", p.k()}, {"i", o.i}, {"object", "between"},
                {"letters", letters_json(letters)}}
               .dump()
        << "\n";
  } else {
    out << letters_text(p.n(), letters) << "\n";
  }
  return kOk;
}

int cmd_sheets(const Options& o, std::ostream& out) {
  const CurveParams p = validate(o.n, o.k);
  const GluingTable table = gluing_table(p);
  out << "# edge on sheet R_i -> glued sheet (n = " << p.n() << ", k = " << p.k() << ")\n";
  for (EdgeKind kind : kEdgeKinds) {
    for (Integer i = 0; i < p.n(); ++i) {
      out << name(kind) << ": " << i << " -> " << table.target(p.residue(i), kind).value() << "\n";
    }
  }
  return kOk;
}

int cmd_modsym(const Options& o, std::ostream& out) {
  const CurveParams p = validate(o.n, o.k);
  out << "# [A^r] reduced over [A^s tau]\n";
  for (Integer r = 0; r < p.n(); ++r) {
    const IntVector red = reduce_plain_symbol(p, r);
    TermWriter terms(false);
    for (Integer s = 0; s < p.n(); ++s) terms.add(red(s), "[A^" + std::to_string(s) + " tau]");
    out << "[A^" << r << "] = " << terms.str() << "\n";
  }
  out << "# rho_r = [A^r tau] - [tau]\n";
  for (Integer r = 1; r < p.n(); ++r) {
    out << "rho_" << r << " -> " << rho_to_E(p, SymbolCombination::rho(p, r)) << "\n";
  }
  if (!o.check) return kOk;

  VerifyOptions options;
  options.fuzz_words = o.fuzz_words;
  const PairResult result = verify_pair(p, options);
  for (const std::string& name : result.passed) out << "pass " << name << "\n";
  if (result.failure) {
    out << "FAIL " << result.failure->property << ": " << result.failure->detail << "\n";
    return kCounterexample;
  }
  return kOk;
}

int cmd_fermat_image(const Options& o, std::ostream& out) {
  const CurveParams p = validate(o.n, o.k);
  out << fermat_image(p, p.residue(o.i), p.residue(o.j)) << "\n";
  return kOk;
}

int cmd_subst(const Options& o, std::ostream& out) {
  const CurveParams p = validate(o.n, o.k);
  const WedgeClass w = substitute(p, closed_form_delta(p), p.residue(o.j));
  if (o.format == "json") {
    json doc = delta_document(p, w);
    doc["object"] = "substitute";
    doc["factor"] = o.j;
    out << doc.dump() << "\n";
  } else if (o.format == "latex") {
    out << format_latex(w) << "\n";
  } else {
    out << format_text(w) << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.max_n = o.max_n;
  options.fuzz_words = o.fuzz_words;
  options.threads = o.threads;
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport report = run_verify(options);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  out << "   n  pairs  status\n";
  for (std::size_t i = 0; i < report.pairs.size();) {
    const Integer n = report.pairs[i].n;
    std::size_t count = 0;
    bool ok = true;
    for (; i < report.pairs.size() && report.pairs[i].n == n; ++i, ++count) {
      ok = ok && !report.pairs[i].failure;
    }
    out << std::string(n < 10 ? 3 : (n < 100 ? 2 : 1), ' ') << n << "  " << std::string(count < 10 ? 4 : 3, ' ')
        << count << "  " << (ok ? "ok" : "FAIL") << "\n";
  }
  out << report.pairs.size() << " (n,k) pairs checked, " << pair_properties().size()
      << " properties each\n";
  out << "operations exercised: " << report.operations.size() << "/" << library_operations().size()
      << "\n";
  for (const auto& [clause, count] : report.corollary_counts) {
    out << "corollary clause " << clause << ": " << count << " pair(s)\n";
  }
  out << "substitution sign (Delta_5,(3,1,1) relabeled by 3 vs Delta_5,2): "
      << report.substitution_sign << "\n";
  out << "elapsed: " << static_cast<long long>(seconds * 1000) << " ms\n";

  if (const auto failure = report.first_failure()) {
    err << "counterexample: n=" << failure->n << " k=" << failure->k
        << " property=" << failure->property << ": " << failure->detail << "\n";
    return kCounterexample;
  }
  if (report.substitution_sign == 0) {
    err << "counterexample: substitution example matches Delta_5,2 with neither sign\n";
    return kCounterexample;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classifying element of the cyclic Belyi curve v^n = u(1-u)^k", "belyi"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "check (n, k) and print derived constants");
  add_nk(validate_cmd, o);
  add_format(validate_cmd, o, {"text", "json"});

  auto* delta_cmd = app.add_subcommand("delta", "classifying element Delta");
  add_nk(delta_cmd, o);
  delta_cmd->add_option("--basis", o.basis, "E basis or T invariants")
      ->check(CLI::IsMember({"e", "t"}, CLI::ignore_case));
  add_format(delta_cmd, o, {"text", "json", "latex"});

  auto* word_cmd = app.add_subcommand("word", "the lifted boundary loop L");
  add_nk(word_cmd, o);
  word_cmd->add_flag("--placeholders", o.placeholders, "keep the trivial E_0 letters");
  add_format(word_cmd, o, {"text", "json"});

  auto* between_cmd = app.add_subcommand("between", "letters of L between E_i^-1 and E_i");
  add_nk(between_cmd, o);
  between_cmd->add_option("i", o.i, "generator index")->required();
  add_format(between_cmd, o, {"text", "json"});

  auto* sheets_cmd = app.add_subcommand("sheets", "gluing table of the slit cover");
  add_nk(sheets_cmd, o);

  auto* modsym_cmd = app.add_subcommand("modsym", "modular-symbol basis and rho/E dictionary");
  add_nk(modsym_cmd, o);
  modsym_cmd->add_flag("--check", o.check, "run the invariant suite for this pair");
  modsym_cmd->add_option("--fuzz-words", o.fuzz_words, "random coset words")->check(CLI::NonNegativeNumber);

  auto* fermat_cmd = app.add_subcommand("fermat-image", "image of the Fermat loop E_{i,j}");
  add_nk(fermat_cmd, o);
  fermat_cmd->add_option("i", o.i)->required();
  fermat_cmd->add_option("j", o.j)->required();

  auto* subst_cmd = app.add_subcommand("subst", "relabel Delta by E_i -> E_{j i mod n}");
  add_nk(subst_cmd, o);
  subst_cmd->add_option("j", o.j)->required();
  add_format(subst_cmd, o, {"text", "json", "latex"});

  auto* verify_cmd = app.add_subcommand("verify", "cross-verify every valid pair up to --max-n");
  verify_cmd->add_option("--max-n", o.max_n, "largest n")->required()->check(CLI::Range(3, 100000));
  verify_cmd->add_option("--fuzz-words", o.fuzz_words, "random coset words per pair")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kInvalidInput;
  }

  std::transform(o.basis.begin(), o.basis.end(), o.basis.begin(), ::tolower);
  try {
    if (*validate_cmd) return cmd_validate(o, out);
    if (*delta_cmd) return cmd_delta(o, out);
    if (*word_cmd) return cmd_word(o, out);
    if (*between_cmd) return cmd_between(o, out);
    if (*sheets_cmd) return cmd_sheets(o, out);
    if (*modsym_cmd) return cmd_modsym(o, out);
    if (*fermat_cmd) return cmd_fermat_image(o, out);
    if (*subst_cmd) return cmd_subst(o, out);
    if (*verify_cmd) return cmd_verify(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace belyi::cli
