#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toddpoly/arith.hpp"
#include "toddpoly/genera.hpp"
#include "toddpoly/numbers.hpp"
#include "toddpoly/partition.hpp"
#include "toddpoly/render.hpp"
#include "toddpoly/series.hpp"
#include "toddpoly/symfunc.hpp"
#include "toddpoly/verify.hpp"

namespace {

using namespace toddpoly;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitUsage = 64;

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

void emit(const std::string& body) {
  std::cout << body;
  if (body.empty() || body.back() != '\n') std::cout << "\n";
}

void emit_json(const Json& payload) { std::cout << payload.dump(2) << "\n"; }

Basis parse_basis(const std::string& s) {
  auto b = basis_from_symbol(s.at(0));
  if (!b || s.size() != 1) throw std::invalid_argument("unknown basis: " + s);
  return *b;
}

// ---------------------------------------------------------------------------
// todd / lgenus
// ---------------------------------------------------------------------------

int run_genus_single(GenusKind kind, int k, const std::string& method,
                     Basis display, Format format) {
  const GenusTable t = genus_table(kind, k, method);
  switch (format) {
    case Format::text: {
      std::string out = genus_text(t, display);
      for (const std::string& n : genus_notes(t)) out += "\n" + n;
      emit(out);
      break;
    }
    case Format::latex: {
      std::string out = genus_latex(t, display);
      for (const std::string& n : genus_notes(t)) out += "\n% " + n;
      emit(out);
      break;
    }
    case Format::json:
      emit_json(genus_json(t, display));
      break;
    case Format::csv:
      emit(genus_csv(t, display));
      break;
  }
  return kExitOk;
}

int run_genus_all(int k, Basis display, Format format) {
  const std::vector<std::string> methods = {"gf", "forgotten", "gbasis"};
  std::vector<GenusTable> tables;
  tables.reserve(methods.size());
  for (const std::string& m : methods) {
    tables.push_back(genus_table(GenusKind::todd, k, m));
  }
  bool agreement = true;
  for (size_t i = 1; i < tables.size(); ++i) {
    if (!equal(tables[i].in_e, tables[0].in_e) ||
        tables[i].denominator != tables[0].denominator) {
      agreement = false;
    }
  }
  switch (format) {
    case Format::text: {
      std::string out;
      for (const GenusTable& t : tables) {
        if (!out.empty()) out += "\n";
        out += "method " + t.method + ":\n" + genus_text(t, display) + "\n";
      }
      out += "agreement: " + std::string(agreement ? "true" : "false");
      for (const std::string& n : genus_notes(tables[0])) out += "\n" + n;
      emit(out);
      break;
    }
    case Format::latex: {
      std::string out;
      for (const GenusTable& t : tables) {
        out += "% method " + t.method + "\n" + genus_latex(t, display) + "\n";
      }
      out += "% agreement: " + std::string(agreement ? "true" : "false");
      for (const std::string& n : genus_notes(tables[0])) out += "\n% " + n;
      emit(out);
      break;
    }
    case Format::json: {
      Json payload;
      payload["kind"] = "todd";
      payload["k"] = k;
      payload["basis"] = std::string(1, basis_symbol(display));
      payload["agreement"] = agreement;
      Json per = Json::array();
      for (const GenusTable& t : tables) per.push_back(genus_json(t, display));
      payload["methods"] = std::move(per);
      emit_json(payload);
      break;
    }
    case Format::csv: {
      std::string out = "method,partition,num,den\n";
      for (const GenusTable& t : tables) {
        const SymFn shown = display == Basis::elementary
                                ? t.in_e
                                : convert(t.in_e, display);
        out += symfn_csv_rows(shown, t.method);
      }
      emit(out);
      break;
    }
  }
  if (!agreement) {
    std::cerr << "error: method disagreement at k = " << k << "\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// numbers
// ---------------------------------------------------------------------------

struct FamilySpec {
  std::vector<std::string> methods;  // first entry is the default
  bool integer_valued = true;
  int min_k = 0;
};

FamilySpec family_spec(const std::string& family) {
  if (family == "hirzebruch") {
    return {{"prime_product", "lcm_factorial", "lcm_plain"}, true, 0};
  }
  if (family == "ldenom") {
    return {{"prime_product", "lcm", "from_hirzebruch"}, true, 0};
  }
  if (family == "buchstaber") {
    return {{"prime_product"}, true, 1};
  }
  if (family == "bernoulli") {
    return {{"reference", "stirling", "partition_factorial", "partition_g"},
            false,
            0};
  }
  throw std::invalid_argument("unknown family: " + family);
}

Rat numbers_value(const std::string& family, const std::string& method, int k) {
  if (family == "hirzebruch") {
    if (method == "prime_product") return Rat(hirzebruch_prime(k));
    if (method == "lcm_factorial") return Rat(hirzebruch_lcm_factorial(k));
    if (method == "lcm_plain") return Rat(hirzebruch_lcm_plain(k));
  } else if (family == "ldenom") {
    if (method == "prime_product") return Rat(l_denominator_prime(k));
    if (method == "lcm") return Rat(l_denominator_lcm(k));
    if (method == "from_hirzebruch") return Rat(l_from_hirzebruch(k));
  } else if (family == "buchstaber") {
    if (method == "prime_product") return Rat(buchstaber(k));
  } else if (family == "bernoulli") {
    if (method == "reference") return bernoulli_ref(static_cast<unsigned>(k));
    if (method == "stirling") return bernoulli_stirling(k);
    if (method == "partition_factorial") return bernoulli_partition_factorial(k);
    if (method == "partition_g") return bernoulli_partition_g(k);
  }
  throw std::invalid_argument("unknown method for family " + family + ": " +
                              method);
}

int run_numbers(const std::string& family, int single_k, int upto,
                const std::string& method, Format format) {
  const FamilySpec spec = family_spec(family);
  std::vector<std::string> methods;
  if (method.empty()) {
    methods = {spec.methods.front()};
  } else if (method == "all") {
    methods = spec.methods;
  } else {
    if (std::find(spec.methods.begin(), spec.methods.end(), method) ==
        spec.methods.end()) {
      throw std::invalid_argument("unknown method for family " + family +
                                  ": " + method);
    }
    methods = {method};
  }

  int k0 = 0, k1 = 0;
  if (single_k >= 0) {
    k0 = k1 = single_k;
  } else {
    k0 = spec.min_k;
    k1 = upto;
  }
  if (k0 < spec.min_k || k1 < k0) {
    throw std::invalid_argument("family " + family + " requires k >= " +
                                std::to_string(spec.min_k));
  }

  NumbersTableView view;
  view.family = family;
  view.integer_valued = spec.integer_valued;
  view.methods = methods;
  bool all_agree = true;
  for (int k = k0; k <= k1; ++k) {
    NumbersRow row;
    row.k = k;
    for (const std::string& m : methods) {
      row.values.push_back(numbers_value(family, m, k));
    }
    for (const Rat& v : row.values) {
      if (v != row.values.front()) row.agree = false;
    }
    if (spec.integer_valued) {
      Int v = row.values.front().get_num();
      if (v > 0) row.factorization = factorize(v);
    }
    all_agree = all_agree && row.agree;
    view.rows.push_back(std::move(row));
  }
  if (family == "buchstaber") {
    view.notes = {
        "convention: b_n uses the exponent floor((n-1)/(2(p-1))) over odd "
        "primes p <= (n+1)/2; in particular b_1 = b_2 = 1"};
  }

  switch (format) {
    case Format::text:
      emit(numbers_text(view));
      break;
    case Format::latex:
      emit(numbers_latex(view));
      break;
    case Format::json:
      emit_json(numbers_json(view));
      break;
    case Format::csv:
      emit(numbers_csv(view));
      break;
  }
  if (!all_agree) {
    std::cerr << "error: method disagreement in family " << family << "\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// basis
// ---------------------------------------------------------------------------

int run_basis(const std::string& which, int k, Format format) {
  if (which == "cmatrix") {
    const CoeffMatrix& m = c_matrix(k);
    switch (format) {
      case Format::text: emit(cmatrix_text(m)); break;
      case Format::latex: emit(cmatrix_latex(m)); break;
      case Format::json: emit_json(cmatrix_json(m)); break;
      case Format::csv: emit(cmatrix_csv(m)); break;
    }
    return kExitOk;
  }
  const char letter = which.at(0);
  std::vector<BasisRow> rows;
  for (const Partition& lambda : partitions_of(k)) {
    BasisRow row{lambda, letter == 'f' ? forgotten(lambda) : g_function(lambda)};
    rows.push_back(std::move(row));
  }
  switch (format) {
    case Format::text: {
      std::string out = basis_rows_text(letter, rows);
      for (const std::string& n : basis_notes(letter, k)) out += "\n" + n;
      emit(out);
      break;
    }
    case Format::latex: {
      std::string out = basis_rows_latex(letter, rows);
      for (const std::string& n : basis_notes(letter, k)) out += "\n% " + n;
      emit(out);
      break;
    }
    case Format::json:
      emit_json(basis_rows_json(letter, k, rows));
      break;
    case Format::csv:
      emit(basis_rows_csv(rows));
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

std::string verify_text(const VerifyReport& report) {
  std::string out;
  for (const SuiteResult& s : report.suites) {
    out += "suite " + s.name + " (max_k " + std::to_string(s.max_k) + ")\n";
    for (const CheckResult& c : s.checks) {
      out += std::string("  [") + (c.pass ? "PASS" : "FAIL") + "] " + c.name +
             "  (" + c.range + ")";
      if (!c.pass) out += "\n        counterexample: " + c.counterexample;
      out += "\n";
    }
  }
  for (const std::string& n : report.notes) out += n + "\n";
  out += std::string("overall: ") + (report.ok() ? "PASS" : "FAIL");
  return out;
}

Json verify_json(const VerifyReport& report) {
  Json out;
  Json suites = Json::array();
  for (const SuiteResult& s : report.suites) {
    Json js;
    js["name"] = s.name;
    js["max_k"] = s.max_k;
    Json checks = Json::array();
    for (const CheckResult& c : s.checks) {
      Json jc;
      jc["name"] = c.name;
      jc["range"] = c.range;
      jc["pass"] = c.pass;
      if (!c.pass) jc["counterexample"] = c.counterexample;
      checks.push_back(std::move(jc));
    }
    js["checks"] = std::move(checks);
    js["ok"] = s.ok();
    suites.push_back(std::move(js));
  }
  out["suites"] = std::move(suites);
  Json notes = Json::array();
  for (const std::string& n : report.notes) notes.push_back(n);
  out["notes"] = std::move(notes);
  out["ok"] = report.ok();
  return out;
}

std::string verify_csv(const VerifyReport& report) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"') out += "\"\"";
      out += ch;
    }
    out += "\"";
    return out;
  };
  std::string out = "suite,check,range,pass,counterexample\n";
  for (const SuiteResult& s : report.suites) {
    for (const CheckResult& c : s.checks) {
      out += s.name + "," + quote(c.name) + "," + quote(c.range) + "," +
             (c.pass ? "true" : "false") + "," + quote(c.counterexample) +
             "\n";
    }
  }
  return out;
}

int run_verify_cmd(const std::string& suite, int max_k, Format format) {
  std::vector<std::string> suites;
  if (suite != "all") {
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      throw std::invalid_argument("unknown verify suite: " + suite);
    }
    suites.push_back(suite);
  }
  const VerifyReport report = run_verify(suites, max_k);
  switch (format) {
    case Format::text:
      emit(verify_text(report));
      break;
    case Format::latex: {
      std::string out;
      for (const SuiteResult& s : report.suites) {
        for (const CheckResult& c : s.checks) {
          out += "% " + s.name + ": " + c.name + " (" + c.range + "): " +
                 (c.pass ? "pass" : "FAIL") + "\n";
        }
      }
      out += std::string("% overall: ") + (report.ok() ? "pass" : "FAIL");
      emit(out);
      break;
    }
    case Format::json:
      emit_json(verify_json(report));
      break;
    case Format::csv:
      emit(verify_csv(report));
      break;
  }
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Todd and L-genus polynomials, symmetric-function bases, "
               "and characteristic-number tables"};
  app.require_subcommand(1);

  std::string format_name = "text";

  // todd
  auto* todd = app.add_subcommand(
      "todd", "Todd polynomial T_k with its denominator");
  int todd_k = 0;
  std::string todd_method = "gf";
  std::string todd_basis = "e";
  todd->add_option("--k", todd_k, "degree (k >= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  todd->add_option("--method", todd_method,
                   "construction: gf | forgotten | gbasis | all")
      ->check(CLI::IsMember({"gf", "forgotten", "gbasis", "all"}));
  todd->add_option("--basis", todd_basis, "display basis: m|e|h|p|f|g")
      ->check(CLI::IsMember({"m", "e", "h", "p", "f", "g"}));
  todd->add_option("--format", format_name, "text | json | latex | csv")
      ->check(CLI::IsMember({"text", "json", "latex", "csv"}));

  // lgenus
  auto* lgenus = app.add_subcommand(
      "lgenus", "L-genus polynomial L_k with its denominator");
  int lgenus_k = 0;
  std::string lgenus_basis = "e";
  lgenus->add_option("--k", lgenus_k, "degree (k >= 0)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  lgenus->add_option("--basis", lgenus_basis, "display basis: m|e|h|p|f|g")
      ->check(CLI::IsMember({"m", "e", "h", "p", "f", "g"}));
  lgenus->add_option("--format", format_name, "text | json | latex | csv")
      ->check(CLI::IsMember({"text", "json", "latex", "csv"}));

  // numbers
  auto* numbers = app.add_subcommand(
      "numbers", "integer/rational tables: hirzebruch, ldenom, buchstaber, "
                 "bernoulli");
  std::string family;
  int numbers_k = -1;
  int numbers_upto = -1;
  std::string numbers_method;
  numbers->add_option("family", family,
                      "hirzebruch | ldenom | buchstaber | bernoulli")
      ->required()
      ->check(CLI::IsMember({"hirzebruch", "ldenom", "buchstaber",
                             "bernoulli"}));
  auto* opt_k = numbers->add_option("--k", numbers_k, "single index")
                    ->check(CLI::NonNegativeNumber);
  auto* opt_upto =
      numbers->add_option("--upto", numbers_upto, "table from the smallest "
                                                  "valid index up to this one")
          ->check(CLI::NonNegativeNumber);
  opt_k->excludes(opt_upto);
  opt_upto->excludes(opt_k);
  numbers->add_option("--method", numbers_method,
                      "family-specific method name, or all");
  numbers->add_option("--format", format_name, "text | json | latex | csv")
      ->check(CLI::IsMember({"text", "json", "latex", "csv"}));

  // basis
  auto* basis = app.add_subcommand(
      "basis", "f/g expansions in the monomial basis, or the integer "
               "coefficient matrix");
  std::string which;
  int basis_k = 1;
  basis->add_option("which", which, "f | g | cmatrix")
      ->required()
      ->check(CLI::IsMember({"f", "g", "cmatrix"}));
  basis->add_option("--k", basis_k, "weight (k >= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  basis->add_option("--format", format_name, "text | json | latex | csv")
      ->check(CLI::IsMember({"text", "json", "latex", "csv"}));

  // verify
  auto* verify = app.add_subcommand(
      "verify", "run the cross-method identity suites");
  std::string suite = "all";
  int max_k = -1;
  verify->add_option("--suite", suite,
                     "all | symfunc | series | todd | hirzebruch | bernoulli")
      ->check(CLI::IsMember({"all", "symfunc", "series", "todd", "hirzebruch",
                             "bernoulli"}));
  verify->add_option("--max-k", max_k,
                     "principal bound (default: per-suite documented value)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--format", format_name, "text | json | latex | csv")
      ->check(CLI::IsMember({"text", "json", "latex", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = *format_from_string(format_name);
    if (todd->parsed()) {
      const Basis display = parse_basis(todd_basis);
      if (todd_method == "all") {
        return run_genus_all(todd_k, display, format);
      }
      return run_genus_single(GenusKind::todd, todd_k, todd_method, display,
                              format);
    }
    if (lgenus->parsed()) {
      return run_genus_single(GenusKind::lgenus, lgenus_k, "gf",
                              parse_basis(lgenus_basis), format);
    }
    if (numbers->parsed()) {
      if ((numbers_k < 0) == (numbers_upto < 0)) {
        return usage_error("numbers requires exactly one of --k or --upto");
      }
      return run_numbers(family, numbers_k, numbers_upto, numbers_method,
                         format);
    }
    if (basis->parsed()) {
      return run_basis(which, basis_k, format);
    }
    if (verify->parsed()) {
      return run_verify_cmd(suite, max_k, format);
    }
    return usage_error("no subcommand given");
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}
