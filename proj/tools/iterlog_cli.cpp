// Command-line front end: Stirling tables, series expansions, tableau
// inspection, and the verification sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "iterlog/expansions.hpp"
#include "iterlog/identities.hpp"
#include "iterlog/json_io.hpp"
#include "iterlog/tableau.hpp"

using namespace iterlog;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

unsigned max_order_ceiling() {
  if (const char* env = std::getenv("ITERLOG_MAX_ORDER")) {
    try {
      long v = std::stol(env);
      if (v >= 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return 16;
}

struct OutputSink {
  std::string path;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) file.open(path);
    return file;
  }
  std::ofstream file;
};

int emit(OutputSink& sink, const std::string& text) {
  sink.stream() << text << "\n";
  return 0;
}

// ---- stirling ----

struct StirlingOptions {
  int kind = 1;
  unsigned max_m = 5;
  std::string def = "recurrence";
  std::string format = "text";
};

BigInt stirling_by(const std::string& def, StirlingKind kind, unsigned m,
                   unsigned n) {
  bool first = kind == StirlingKind::First;
  if (def == "explicit")
    return first ? stirling1_explicit(m, n) : stirling2_explicit(m, n);
  if (def == "composition" || def == "partition")
    return first ? stirling1_composition(m, n) : stirling2_partition(m, n);
  if (def == "recurrence")
    return first ? stirling1_recurrence(m, n) : stirling2_recurrence(m, n);
  if (def == "genfunc")
    return first ? stirling1_genfunc(m, n) : stirling2_genfunc(m, n);
  if (def == "tableau") {
    BigInt c = factored_constant(TableauShape{{m - n, n}}, kind);
    if (first && (m - n) % 2 == 1) c = -c;
    return c;
  }
  throw CLI::ValidationError("--def", "unknown definition selector: " + def);
}

int run_stirling(const StirlingOptions& opt, OutputSink& sink) {
  StirlingKind kind = opt.kind == 1 ? StirlingKind::First : StirlingKind::Second;
  std::vector<std::string> defs;
  if (opt.def == "all")
    defs = {"explicit", "composition", "recurrence", "genfunc", "tableau"};
  else
    defs = {opt.def};

  std::vector<std::vector<BigInt>> table;
  for (unsigned m = 0; m <= opt.max_m; ++m) {
    std::vector<BigInt> row;
    for (unsigned n = 0; n <= m; ++n) {
      BigInt v = stirling_by(defs[0], kind, m, n);
      for (std::size_t d = 1; d < defs.size(); ++d) {
        if (stirling_by(defs[d], kind, m, n) != v) {
          std::cerr << "disagreement at m=" << m << " n=" << n << " between "
                    << defs[0] << " and " << defs[d] << "\n";
          return kExitFail;
        }
      }
      row.push_back(v);
    }
    table.push_back(std::move(row));
  }

  std::ostringstream out;
  if (opt.format == "json") {
    json rows = json::array();
    for (const auto& row : table) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.str());
      rows.push_back(r);
    }
    json doc = {{"kind", opt.kind}, {"max_m", opt.max_m}, {"table", rows}};
    out << doc.dump(2);
  } else if (opt.format == "csv") {
    out << "m,n,value";
    for (unsigned m = 0; m < table.size(); ++m)
      for (unsigned n = 0; n < table[m].size(); ++n)
        out << "\n" << m << "," << n << "," << table[m][n].str();
  } else {
    for (unsigned m = 0; m < table.size(); ++m) {
      out << m << ":";
      for (const auto& v : table[m]) out << " " << v.str();
      if (m + 1 < table.size()) out << "\n";
    }
  }
  return emit(sink, out.str());
}

// ---- expand ----

struct ExpandOptions {
  long long level = 0;
  std::string exponent = "r";
  unsigned order = 3;
  std::string method = "oracle";
  std::string format = "text";
};

TranslationSeries expand_by(const std::string& method, long long level,
                            unsigned order) {
  if (method == "1") return method1_expansion(level, order);
  if (method == "2") return method2_expansion(level, order);
  if (method == "oracle") return oracle_expansion(level, order);
  throw CLI::ValidationError("--method", "unknown method: " + method);
}

int run_expand(const ExpandOptions& opt, OutputSink& sink) {
  std::optional<Rational> r_value;
  if (opt.exponent != "r") {
    r_value = parse_rational(opt.exponent);
    if (!r_value)
      throw CLI::ValidationError("--r", "malformed rational: " + opt.exponent);
  }
  std::vector<std::string> methods;
  if (opt.method == "all")
    methods = {"1", "2", "oracle"};
  else
    methods = {opt.method};

  std::vector<TranslationSeries> series;
  for (const auto& m : methods) {
    TranslationSeries s = expand_by(m, opt.level, opt.order);
    if (r_value) s = specialize(s, *r_value);
    series.push_back(std::move(s));
  }
  bool match = true;
  for (std::size_t i = 1; i < series.size(); ++i)
    if (series[i] != series[0]) match = false;

  std::ostringstream out;
  if (opt.format == "json") {
    json docs = json::array();
    for (std::size_t i = 0; i < series.size(); ++i)
      docs.push_back(
          expansion_report(opt.level, opt.exponent, methods[i], series[i]));
    if (methods.size() == 1)
      out << docs[0].dump(2);
    else
      out << json({{"reports", docs}, {"match", match}}).dump(2);
  } else {
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (methods.size() > 1) out << "method " << methods[i] << ": ";
      out << series[i].str();
      if (i + 1 < series.size()) out << "\n";
    }
    if (methods.size() > 1)
      out << "\nmatch: " << (match ? "yes" : "NO");
  }
  emit(sink, out.str());
  return match ? 0 : kExitFail;
}

// ---- tableau ----

struct TableauOptions {
  std::string shape;
  int kind = 1;
  std::string mode = "list";
  std::string format = "text";
};

TableauShape parse_shape(const std::string& text) {
  TableauShape shape;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(part, &pos);
      if (pos != part.size() || v < 0) throw std::invalid_argument(part);
      shape.heights.push_back(static_cast<unsigned>(v));
    } catch (...) {
      throw CLI::ValidationError("--shape", "malformed shape: " + text);
    }
  }
  if (shape.heights.empty())
    throw CLI::ValidationError("--shape", "malformed shape: " + text);
  return shape;
}

int run_tableau(const TableauOptions& opt, OutputSink& sink) {
  TableauShape shape = parse_shape(opt.shape);
  StirlingKind kind = opt.kind == 1 ? StirlingKind::First : StirlingKind::Second;
  std::ostringstream out;
  if (opt.mode == "list") {
    auto all = tableau_enumerate(shape, kind);
    if (opt.format == "json") {
      json arr = json::array();
      for (const auto& t : all) arr.push_back(to_json(t));
      out << arr.dump(2);
    } else {
      for (std::size_t i = 0; i < all.size(); ++i) {
        out << to_json(all[i]).dump();
        if (i + 1 < all.size()) out << "\n";
      }
      if (all.empty()) out << "(no tableaux)";
    }
  } else if (opt.mode == "poly") {
    TableauPolynomial p = tableau_polynomial(shape, kind);
    if (opt.format == "json")
      out << json({{"shape", shape.heights}, {"poly", p.str()}}).dump(2);
    else
      out << p.str();
  } else if (opt.mode == "constant") {
    BigInt c = factored_constant(shape, kind);
    if (opt.format == "json")
      out << json({{"shape", shape.heights}, {"constant", c.str()}}).dump(2);
    else
      out << c.str();
  } else {
    throw CLI::ValidationError("--mode", "unknown mode: " + opt.mode);
  }
  return emit(sink, out.str());
}

// ---- verify ----

struct VerifyOptions {
  std::string suite = "all";
  unsigned max_order = 6;
  unsigned max_m = 10;
  std::string format = "text";
};

AlgebraElement random_monomial_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> level_dist(-3, 3);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> rc(0, 1);
  Monomial m;
  int factors = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < factors; ++i) {
    AffineExponent e(Rational(rc(rng)), Rational(small(rng)));
    if (e.is_zero()) e = AffineExponent::constant(1);
    m.shift(level_dist(rng), e);
  }
  return AlgebraElement(m);
}

bool verify_taylor(unsigned max_k, std::ostream& log) {
  for (long long level = -3; level <= 3; ++level) {
    AlgebraElement a = AlgebraElement::variable(level, AffineExponent(1, 0));
    TranslationSeries s = exp_derivation(a, max_k);
    BigInt kfact = 1;
    for (unsigned k = 0; k <= max_k; ++k) {
      if (k > 0) kfact *= k;
      if (elem_scale(s.coefficient(k), ParamPoly(Rational(kfact))) !=
          derive_power(a, k)) {
        log << "taylor: FAIL at (level=" << level << ", k=" << k << ")\n";
        return false;
      }
    }
  }
  log << "taylor: pass\n";
  return true;
}

bool verify_automorphism(unsigned order, unsigned pairs, std::ostream& log) {
  std::mt19937_64 rng(0x5eed);
  for (unsigned i = 0; i < pairs; ++i) {
    AlgebraElement a = random_monomial_element(rng);
    AlgebraElement b = random_monomial_element(rng);
    if (exp_derivation(a * b, order) !=
        series_mul(exp_derivation(a, order), exp_derivation(b, order))) {
      log << "automorphism: FAIL at pair " << i << "\n";
      return false;
    }
  }
  log << "automorphism: pass (" << pairs << " pairs, order " << order << ")\n";
  return true;
}

bool verify_recursion(unsigned max_order, std::ostream& log) {
  for (long long n = -2; n <= 2; ++n) {
    for (unsigned M = 0; M <= max_order; ++M) {
      TranslationSeries base =
          exp_derivation(AlgebraElement::variable(n), M);
      TranslationSeries up = recursion_step_up(n, base);
      if (up != exp_derivation(AlgebraElement::variable(n + 1), M)) {
        log << "recursion: FAIL step_up at (n=" << n << ", M=" << M << ")\n";
        return false;
      }
      if (recursion_step_down(n, up) != base) {
        log << "recursion: FAIL step_down at (n=" << n << ", M=" << M << ")\n";
        return false;
      }
    }
  }
  log << "recursion: pass\n";
  return true;
}

bool report_line(const IdentityReport& r, std::ostream& log) {
  log << r.str() << "\n";
  return r.pass;
}

int run_verify(const VerifyOptions& opt, OutputSink& sink) {
  std::ostream& log = sink.stream();
  bool ok = true;
  bool known = false;
  auto want = [&](const char* name) {
    bool w = opt.suite == "all" || opt.suite == name;
    known = known || opt.suite == name;
    return w;
  };
  if (want("taylor")) ok &= verify_taylor(std::min(opt.max_order + 2, 8u), log);
  if (want("automorphism")) ok &= verify_automorphism(opt.max_order, 100, log);
  if (want("methods-agree"))
    ok &= report_line(check_methods_equal(-3, 3, opt.max_order), log);
  if (want("recursion")) ok &= verify_recursion(opt.max_order, log);
  if (want("identities")) {
    ok &= report_line(check_four_way(StirlingKind::First, opt.max_m), log);
    ok &= report_line(check_four_way(StirlingKind::Second, opt.max_m), log);
    ok &= report_line(check_classical_first_kind(opt.max_m), log);
    ok &= report_line(check_classical_second_kind(opt.max_m), log);
    ok &= report_line(check_factorization(StirlingKind::First, 8), log);
    ok &= report_line(check_factorization(StirlingKind::Second, 8), log);
  }
  if (opt.suite != "all" && !known)
    throw CLI::ValidationError("--suite", "unknown suite: " + opt.suite);
  return ok ? 0 : kExitFail;
}

// Test fixture: lets the negative-control test corrupt one Stirling entry
// without a special build. Format "kind,m,n,delta".
void load_corruption_from_env() {
  const char* env = std::getenv("ITERLOG_TEST_CORRUPT_STIRLING");
  if (!env) return;
  int kind, delta;
  unsigned m, n;
  if (std::sscanf(env, "%d,%u,%u,%d", &kind, &m, &n, &delta) == 4)
    set_stirling_corruption(StirlingCorruption{
        kind == 1 ? StirlingKind::First : StirlingKind::Second, m, n, delta});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for formal iterated logarithms and "
               "exponentials"};
  app.require_subcommand(1);
  load_corruption_from_env();
  const unsigned order_cap = max_order_ceiling();

  OutputSink sink;
  app.add_option("--out", sink.path, "Write output to a file instead of stdout");

  StirlingOptions sopt;
  auto* cmd_stirling = app.add_subcommand("stirling", "Stirling number tables");
  cmd_stirling->add_option("--kind", sopt.kind, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  cmd_stirling->add_option("--max-m", sopt.max_m, "Largest row");
  cmd_stirling->add_option("--def", sopt.def, "Definition selector")
      ->check(CLI::IsMember({"explicit", "composition", "partition",
                             "recurrence", "genfunc", "tableau", "all"}));
  cmd_stirling->add_option("--format", sopt.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  ExpandOptions eopt;
  auto* cmd_expand = app.add_subcommand("expand", "Series expansion of l[n](x+y)^r");
  cmd_expand->add_option("--level", eopt.level, "Level n in Z")->required();
  cmd_expand->add_option("--r", eopt.exponent, "Exponent: 'r' or a rational");
  cmd_expand->add_option("--order", eopt.order, "Truncation order");
  cmd_expand->add_option("--method", eopt.method, "1|2|oracle|all")
      ->check(CLI::IsMember({"1", "2", "oracle", "all"}));
  cmd_expand->add_option("--format", eopt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  TableauOptions topt;
  auto* cmd_tableau = app.add_subcommand("tableau", "Tableau inspection");
  cmd_tableau->add_option("--shape", topt.shape, "Comma-separated heights")
      ->required();
  cmd_tableau->add_option("--kind", topt.kind, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  auto* mode_list = cmd_tableau->add_flag("--list", "List all tableaux");
  auto* mode_poly = cmd_tableau->add_flag("--poly", "Tableau polynomial");
  auto* mode_const = cmd_tableau->add_flag("--constant", "Factored constant");
  cmd_tableau->add_option("--format", topt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyOptions vopt;
  auto* cmd_verify = app.add_subcommand("verify", "Verification sweeps");
  cmd_verify->add_option("--suite", vopt.suite,
                         "taylor|automorphism|methods-agree|recursion|"
                         "identities|all");
  cmd_verify->add_option("--max-order", vopt.max_order, "Truncation bound");
  cmd_verify->add_option("--max-m", vopt.max_m, "Stirling sweep bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (cmd_stirling->parsed()) return run_stirling(sopt, sink);
    if (cmd_expand->parsed()) {
      if (eopt.order > order_cap) {
        std::cerr << "order " << eopt.order << " exceeds ITERLOG_MAX_ORDER ("
                  << order_cap << ")\n";
        return kExitUsage;
      }
      return run_expand(eopt, sink);
    }
    if (cmd_tableau->parsed()) {
      if (mode_poly->count())
        topt.mode = "poly";
      else if (mode_const->count())
        topt.mode = "constant";
      else if (mode_list->count())
        topt.mode = "list";
      return run_tableau(topt, sink);
    }
    if (cmd_verify->parsed()) {
      if (vopt.max_order > order_cap) {
        std::cerr << "max-order " << vopt.max_order
                  << " exceeds ITERLOG_MAX_ORDER (" << order_cap << ")\n";
        return kExitUsage;
      }
      return run_verify(vopt, sink);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
