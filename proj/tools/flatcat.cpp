// flatcat: enumerate flattened Catalan words, expand their generating
// functions, and run the verification suites.

#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "flatcat/bijection.hpp"
#include "flatcat/catalog.hpp"
#include "flatcat/enumerate.hpp"
#include "flatcat/errors.hpp"
#include "flatcat/formulas.hpp"
#include "flatcat/oracle.hpp"
#include "flatcat/recurrence.hpp"
#include "flatcat/verify.hpp"

using namespace flatcat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Brute-force columns are filled only up to this length.
constexpr int kOracleLimit = 12;

Bindings parse_bindings(const std::vector<std::string>& sets) {
  Bindings out;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw InvalidInput("--set expects var=value, got '" + s + "'");
    const Var v = parse_var(s.substr(0, eq));
    try {
      out[v] = BigInt(s.substr(eq + 1));
    } catch (const std::exception&) {
      throw InvalidInput("--set value for " + s.substr(0, eq) + " is not an integer");
    }
  }
  return out;
}

std::vector<Pattern> pattern_list(const std::string& arg, const std::vector<Pattern>& all) {
  if (arg == "all") return all;
  return {Pattern::parse(arg)};
}

struct Row {
  std::string pattern;
  int n;
  BigInt formula;
  std::optional<BigInt> oracle;
  BigInt gf;
  std::string oeis;

  bool match() const { return formula == gf && (!oracle || *oracle == formula); }
};

int print_rows(const std::vector<Row>& rows, const std::string& format) {
  bool all_match = true;
  if (format == "json") {
    for (const auto& r : rows) {
      Json j;
      j["pattern"] = r.pattern;
      j["n"] = r.n;
      j["formula"] = r.formula.str();
      j["oracle"] = r.oracle ? Json(r.oracle->str()) : Json(nullptr);
      j["gf"] = r.gf.str();
      j["match"] = r.match();
      j["oeis"] = r.oeis.empty() ? Json(nullptr) : Json(r.oeis);
      std::cout << j.dump() << '\n';
      all_match = all_match && r.match();
    }
  } else {
    std::cout << "pattern,n,formula,oracle,gf,match,oeis\n";
    for (const auto& r : rows) {
      std::cout << r.pattern << ',' << r.n << ',' << r.formula << ',' << (r.oracle ? r.oracle->str() : "") << ','
                << r.gf << ',' << (r.match() ? "true" : "false") << ',' << r.oeis << '\n';
      all_match = all_match && r.match();
    }
  }
  return all_match ? kExitOk : kExitFailed;
}

// --- subcommands -------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  std::optional<int> trun;
  std::string avoid;
  bool catalan = false;
  std::string format = "lines";
};

int cmd_enumerate(const EnumerateArgs& a) {
  StreamSpec spec;
  spec.word_class = a.catalan ? WordClass::catalan : WordClass::flattened;
  spec.n = a.n;
  spec.trun = a.trun;
  if (!a.avoid.empty()) spec.avoid = Pattern::parse(a.avoid);
  WordStream stream(spec);
  if (a.format == "count") {
    std::cout << stream.count() << '\n';
    return kExitOk;
  }
  for (WordView w : stream) std::cout << format_letters(w) << '\n';
  return kExitOk;
}

struct GfArgs {
  std::string id;
  int terms = 20;
  std::vector<std::string> sets;
};

int cmd_gf(const GfArgs& a) {
  const CatalogEntry& e = catalog_entry(a.id);
  const XSeries s = series_expand(e.gf.substitute(parse_bindings(a.sets)), static_cast<std::size_t>(a.terms));
  for (int n = 0; n <= a.terms; ++n) {
    Json j;
    j["n"] = n;
    j["poly"] = s[n].to_json();
    std::cout << j.dump() << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  VerifyOptions opts;
  bool no_timing = false;
};

int cmd_verify(VerifyArgs a) {
  a.opts.timing = !a.no_timing;
  const VerifyReport report = run_suite(a.suite, a.opts);
  std::cout << report.to_json().dump(2) << '\n';
  return report.passed() ? kExitOk : kExitFailed;
}

struct TableArgs {
  std::string pattern = "all";
  int max_n = 12;
  std::string format = "csv";
};

int cmd_totals(const TableArgs& a) {
  std::vector<Row> rows;
  for (const auto& tau : pattern_list(a.pattern, table1_patterns())) {
    gf_table1(tau);  // NotInCatalog for unsupported patterns
    const XSeries s = series_expand(gf_table1(tau), static_cast<std::size_t>(std::max(a.max_n, 1)));
    const auto label = oeis_label(tau.str());
    for (int n = 2; n <= a.max_n; ++n) {
      Row r{tau.str(), n, tot(tau, n), std::nullopt, 0, label.value_or("")};
      if (n <= kOracleLimit) {
        const MultiPoly d = pattern_distribution(tau, n);
        r.oracle = d.derivative(Var::q).substitute({{Var::q, 1}}).constant_term();
      }
      r.gf = s[n].derivative(Var::q).substitute({{Var::q, 1}}).constant_term();
      rows.push_back(std::move(r));
    }
  }
  return print_rows(rows, a.format);
}

int cmd_avoid(const TableArgs& a) {
  std::vector<Row> rows;
  for (const auto& tau : pattern_list(a.pattern, avoider_patterns())) {
    const int lo = avoiders_min_n(tau);
    const XSeries s =
        series_expand(gf_table1(tau).substitute({{Var::q, 0}}), static_cast<std::size_t>(std::max(a.max_n, 1)));
    for (int n = lo; n <= a.max_n; ++n) {
      Row r{tau.str(), n, avoiders(tau, n), std::nullopt, s[n].constant_term(), ""};
      if (n <= kOracleLimit) r.oracle = BigInt(iter_avoiders(n, tau).count());
      rows.push_back(std::move(r));
    }
  }
  return print_rows(rows, a.format);
}

struct RecurrenceArgs {
  std::string family;
  int max_n = 6;
  bool uvw = false;
};

int cmd_recurrence(const RecurrenceArgs& a) {
  const Family f = parse_family(a.family);
  if (a.uvw) {
    const UVWSeq seq = build_uvw(f, a.max_n);
    for (int n = 0; n <= a.max_n; ++n) {
      Json j;
      j["n"] = n;
      j["u"] = seq.u[n].to_json();
      j["v"] = seq.v[n].to_json();
      j["w"] = seq.w[n].to_json();
      std::cout << j.dump() << '\n';
    }
    return kExitOk;
  }
  for (const auto& row : build(f, a.max_n).to_json()) std::cout << row.dump() << '\n';
  return kExitOk;
}

struct BijectionArgs {
  std::string map;
  std::string word;
  std::optional<std::size_t> mark;
  bool verify = false;
  int max_n = 10;
};

void print_marked(const MarkedWord& mw) { std::cout << mw.word.str() << " mark=" << mw.mark << '\n'; }

std::size_t need_mark(const BijectionArgs& a) {
  if (!a.mark) throw InvalidInput("--map " + a.map + " needs --mark");
  return *a.mark;
}

int cmd_bijection(const BijectionArgs& a) {
  if (a.verify) {
    VerifyOptions o;
    o.max_n = a.max_n;
    o.timing = false;
    const VerifyReport report = run_suite("bijections", o);
    std::cout << report.to_json().dump(2) << '\n';
    return report.passed() ? kExitOk : kExitFailed;
  }
  if (a.map.empty() || a.word.empty()) throw InvalidInput("bijection needs --map and --word (or --verify)");
  if (a.map == "prime") {
    std::cout << prime_map(BinaryWord::parse(a.word)).str() << '\n';
  } else if (a.map == "prime-inverse") {
    std::cout << prime_inverse(CatalanWord::parse(a.word)).str() << '\n';
  } else if (a.map == "trun") {
    std::cout << trun_map({CatalanWord::parse(a.word), need_mark(a)}).str() << '\n';
  } else if (a.map == "trun-inverse") {
    print_marked(trun_map_inverse(CatalanWord::parse(a.word)));
  } else if (a.map == "tilde") {
    std::cout << tilde(CatalanWord::parse(a.word)).str() << '\n';
  } else if (a.map == "hat") {
    std::cout << hat(CatalanWord::parse(a.word)).str() << '\n';
  } else if (a.map == "swap") {
    std::cout << swap_231_221(CatalanWord::parse(a.word)).str() << '\n';
  } else if (a.map == "valley") {
    print_marked(valley_map({CatalanWord::parse(a.word), need_mark(a)}));
  } else if (a.map == "valley-inverse") {
    print_marked(valley_map_inverse({CatalanWord::parse(a.word), need_mark(a)}));
  } else {
    throw InvalidInput("unknown map '" + a.map + "'");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumeration and verification toolkit for flattened Catalan words"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List F_n (or C_n) in lexicographic order");
  enumerate->add_option("--n", en.n, "Word length")->required()->check(CLI::Range(1, 64));
  enumerate->add_option("--trun", en.trun, "Keep words with this trun");
  enumerate->add_option("--avoid", en.avoid, "Keep words avoiding this pattern, e.g. 312");
  enumerate->add_flag("--catalan", en.catalan, "All Catalan words instead of flattened ones");
  enumerate->add_option("--format", en.format, "lines or count")->check(CLI::IsMember({"lines", "count"}));

  GfArgs gf;
  auto* gf_cmd = app.add_subcommand("gf", "Expand a catalog generating function; one JSON line per power of x");
  gf_cmd->add_option("--id", gf.id, "Catalog id (A..E, trun, F11..F312, shortValley, U_A, ...)")->required();
  gf_cmd->add_option("--terms", gf.terms, "Highest power of x")->check(CLI::Range(0, 200));
  gf_cmd->add_option("--set", gf.sets, "Specialize a variable, e.g. q=1 (repeatable)");

  VerifyArgs va;
  va.opts.threads = std::max(1u, std::thread::hardware_concurrency());
  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its JSON report");
  verify->add_option("--suite", va.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", va.opts.max_n, "Brute-force bound (series order for functional)")->check(CLI::Range(1, 60));
  verify->add_option("--terms", va.opts.terms, "Series order for generating-function identities")
      ->check(CLI::Range(1, 60));
  verify->add_option("--threads", va.opts.threads, "Enumeration workers")->check(CLI::Range(1, 256));
  verify->add_flag("--no-timing", va.no_timing, "Report elapsed as 0 for reproducible output");

  TableArgs ta;
  auto* totals = app.add_subcommand(
      "totals", "tot_n(tau): columns pattern,n,formula,oracle,gf,match,oeis (oracle blank past n=12)");
  totals->add_option("--pattern", ta.pattern, "Pattern or 'all'");
  totals->add_option("--max-n", ta.max_n, "Largest n")->check(CLI::Range(2, 200));
  totals->add_option("--format", ta.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  TableArgs av;
  auto* avoid = app.add_subcommand(
      "avoid", "f_n(tau): columns pattern,n,formula,oracle,gf,match,oeis (oracle blank past n=12)");
  avoid->add_option("--pattern", av.pattern, "Pattern or 'all'");
  avoid->add_option("--max-n", av.max_n, "Largest n")->check(CLI::Range(1, 200));
  avoid->add_option("--format", av.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  RecurrenceArgs ra;
  auto* recurrence = app.add_subcommand("recurrence", "Dump a statistic array as JSON rows");
  recurrence->add_option("--family", ra.family, "a, b, c, d or e")->required();
  recurrence->add_option("--max-n", ra.max_n, "Largest n")->check(CLI::Range(1, 60));
  recurrence->add_flag("--uvw", ra.uvw, "Print u_n, v_n, w_n instead of the array");

  BijectionArgs ba;
  auto* bijection = app.add_subcommand("bijection", "Apply a bijection or verify all of them exhaustively");
  bijection->add_option("--map", ba.map,
                        "prime, prime-inverse, trun, trun-inverse, tilde, hat, swap, valley, valley-inverse");
  bijection->add_option("--word", ba.word, "Input word, comma separated");
  bijection->add_option("--mark", ba.mark, "0-based mark index");
  bijection->add_flag("--verify", ba.verify, "Run the exhaustive bijection suite");
  bijection->add_option("--max-n", ba.max_n, "Bound for --verify")->check(CLI::Range(2, 14));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(en);
    if (*gf_cmd) return cmd_gf(gf);
    if (*verify) return cmd_verify(va);
    if (*totals) return cmd_totals(ta);
    if (*avoid) return cmd_avoid(av);
    if (*recurrence) return cmd_recurrence(ra);
    if (*bijection) return cmd_bijection(ba);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotInCatalog& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonExpandable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
