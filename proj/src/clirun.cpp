#include "wolfhp/clirun.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "wolfhp/hilbert.hpp"
#include "wolfhp/verification.hpp"

namespace wolfhp {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

json envelope(const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = {{"name", "wolfhp"}, {"version", kToolVersion}};
  j["command"] = command;
  return j;
}

json checks_json(const std::vector<Check>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    arr.push_back(e);
  }
  return arr;
}

json rats_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

void emit(const json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

std::string right_align(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

struct WolfArgs {
  std::string algebra;
  std::string family;
  int n = -1;
  int r_max = 20;
  std::string format = "table";
  std::string output;
  std::string corrupt;
};

HilbertReport make_report(const WolfArgs& a) {
  if (!a.algebra.empty()) {
    RootSystem rs = build_root_system(a.algebra);
    if (a.corrupt == a.algebra) rs = corrupt_root_table(rs);
    HilbertReport rep = hilbert_poly(rs);
    verify_report(rep, a.r_max);
    return rep;
  }
  const auto fam = parse_family(a.family);
  if (!fam) throw CLI::ValidationError("--family", "unknown family " + a.family);
  if (a.n < 0) throw CLI::ValidationError("--n", "family selector needs --n");
  HilbertReport rep = family_report(*fam, a.n);
  verify_report(rep, a.r_max);
  return rep;
}

json wolf_json(const HilbertReport& rep, int r_max) {
  json j = envelope("wolf");
  j["label"] = rep.label;
  j["n"] = rep.n;
  j["degenerate"] = rep.degenerate;
  j["P_coeffs"] = rats_json(rep.P.coeffs());
  j["P_str"] = rep.P.str();
  j["P0"] = rep.P(Rational(0)).str();
  j["P1"] = rep.P(Rational(1)).str();
  json vals = json::array();
  for (long r = 0; r <= r_max; ++r) vals.push_back(rep.P(Rational(r)).str());
  j["values"] = vals;
  j["volume"] = rep.volume.str();
  j["twistor_degree"] = rep.twistor_degree.str();
  j["char_coeffs"] = rats_json(rep.char_coeffs);
  j["binomial_coeffs"] = rats_json(rep.binom_coeffs);
  j["dim_g"] = rep.dim_g.get_str();
  j["checks"] = checks_json(rep.checks);
  j["all_pass"] = rep.all_pass();
  return j;
}

void wolf_table(const HilbertReport& rep, int r_max, std::ostream& out) {
  out << "Hilbert polynomial report: " << rep.label << "\n";
  out << "  n = " << rep.n << (rep.degenerate ? "  (degenerate: n = 0)" : "") << "\n";
  out << "  P(r) = " << rep.P.str() << "\n";
  out << "  volume = " << rep.volume.str() << ", deg Z = " << rep.twistor_degree.str()
      << ", dim Iso = " << rep.P(Rational(1)).str() << "\n";
  out << "  char coeffs c_l = ";
  for (std::size_t i = 0; i < rep.char_coeffs.size(); ++i)
    out << (i ? ", " : "") << rep.char_coeffs[i].str();
  out << "\n";
  std::size_t wr = 1, wp = 1;
  std::vector<std::pair<std::string, std::string>> rows;
  for (long r = 0; r <= r_max; ++r) {
    rows.emplace_back(std::to_string(r), rep.P(Rational(r)).str());
    wr = std::max(wr, rows.back().first.size());
    wp = std::max(wp, rows.back().second.size());
  }
  out << "  " << right_align("r", wr) << "  " << right_align("P(r)", wp) << "\n";
  for (const auto& [r, p] : rows)
    out << "  " << right_align(r, wr) << "  " << right_align(p, wp) << "\n";
  for (const auto& c : rep.checks)
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
        << (c.detail.empty() || c.pass ? "" : "  (" + c.detail + ")") << "\n";
}

void wolf_csv(const HilbertReport& rep, int r_max, std::ostream& out) {
  out << "field,value\n";
  out << "label," << rep.label << "\n";
  out << "n," << rep.n << "\n";
  out << "degenerate," << (rep.degenerate ? "true" : "false") << "\n";
  out << "volume," << rep.volume.str() << "\n";
  out << "twistor_degree," << rep.twistor_degree.str() << "\n";
  for (std::size_t i = 0; i < rep.P.coeffs().size(); ++i)
    out << "coeff_" << i << "," << rep.P.coeffs()[i].str() << "\n";
  for (std::size_t i = 0; i < rep.char_coeffs.size(); ++i)
    out << "c_" << i << "," << rep.char_coeffs[i].str() << "\n";
  out << "r,P\n";
  for (long r = 0; r <= r_max; ++r) out << r << "," << rep.P(Rational(r)).str() << "\n";
  for (const auto& c : rep.checks)
    out << "check_" << c.name << "," << (c.pass ? "pass" : "fail") << "\n";
}

json prolong_json(const TwistorCellReport& rep) {
  json j = envelope("prolong");
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["cap"] = rep.cap;
  json levels = json::array();
  for (std::size_t l = 0; l < rep.level_dims.size(); ++l) {
    json e;
    e["l"] = l;
    e["dim"] = rep.level_dims[l];
    e["formula"] = rep.formula_dims[l];
    levels.push_back(e);
  }
  j["levels"] = levels;
  j["terminated"] = rep.termination_degree.has_value();
  if (rep.termination_degree)
    j["termination_degree"] = *rep.termination_degree;
  else
    j["termination_degree"] = nullptr;
  j["a_dim"] = rep.a_dim;
  j["total_dim"] = rep.termination_degree ? rep.total_dim.get_str() : "";
  j["binomial_total"] = rep.binomial_total.get_str();
  json sp = json::array();
  for (std::size_t i = 0; i < rep.spencer_ok.size(); ++i) {
    json e;
    e["l"] = i + 1;
    e["kernel_dim"] = rep.spencer_kernel_dims[i];
    e["exact"] = static_cast<bool>(rep.spencer_ok[i]);
    sp.push_back(e);
  }
  j["spencer"] = sp;
  json sols = json::array();
  for (const auto& [db, dim] : rep.solution_dims) {
    json e;
    e["degree_bound"] = db;
    e["dim"] = dim;
    sols.push_back(e);
  }
  j["solution_dims"] = sols;
  j["checks"] = checks_json(rep.checks);
  j["all_pass"] = rep.all_pass();
  return j;
}

void prolong_table(const TwistorCellReport& rep, std::ostream& out) {
  out << "Prolongation tower: twistor symbol, n = " << rep.n << ", r = " << rep.r
      << ", cap = " << rep.cap << "\n";
  out << "  l  dim A^(l)  formula\n";
  for (std::size_t l = 0; l < rep.level_dims.size(); ++l)
    out << "  " << l << "  " << right_align(std::to_string(rep.level_dims[l]), 9) << "  "
        << right_align(std::to_string(rep.formula_dims[l]), 7) << "\n";
  if (rep.termination_degree)
    out << "  terminated: d = " << *rep.termination_degree << ", dim A^{<=d} = "
        << rep.total_dim.get_str() << ", binomial " << rep.binomial_total.get_str() << "\n";
  else
    out << "  NOT terminated within cap\n";
  for (std::size_t i = 0; i < rep.spencer_ok.size(); ++i)
    out << "  spencer l=" << (i + 1) << ": kernel " << rep.spencer_kernel_dims[i] << " "
        << (rep.spencer_ok[i] ? "exact" : "NOT EXACT") << "\n";
  for (const auto& [db, dim] : rep.solution_dims)
    out << "  solutions deg<=" << db << ": " << dim << "\n";
  for (const auto& c : rep.checks)
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
        << (c.detail.empty() || c.pass ? "" : "  (" + c.detail + ")") << "\n";
}

void prolong_csv(const TwistorCellReport& rep, std::ostream& out) {
  out << "field,value\n";
  out << "n," << rep.n << "\nr," << rep.r << "\ncap," << rep.cap << "\n";
  out << "terminated," << (rep.termination_degree ? "true" : "false") << "\n";
  if (rep.termination_degree) {
    out << "termination_degree," << *rep.termination_degree << "\n";
    out << "total_dim," << rep.total_dim.get_str() << "\n";
  }
  out << "binomial_total," << rep.binomial_total.get_str() << "\n";
  out << "l,dim,formula\n";
  for (std::size_t l = 0; l < rep.level_dims.size(); ++l)
    out << l << "," << rep.level_dims[l] << "," << rep.formula_dims[l] << "\n";
  for (const auto& c : rep.checks)
    out << "check_" << c.name << "," << (c.pass ? "pass" : "fail") << "\n";
}

json verify_json(const std::string& scope, const std::vector<SuiteCell>& cells) {
  json j = envelope("verify");
  j["scope"] = scope;
  json arr = json::array();
  bool all = true;
  for (const auto& c : cells) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.all_pass();
    e["checks"] = checks_json(c.checks);
    arr.push_back(e);
    all = all && c.all_pass();
  }
  j["cells"] = arr;
  j["all_pass"] = all;
  return j;
}

void verify_table(const std::vector<SuiteCell>& cells, std::ostream& out) {
  for (const auto& cell : cells) {
    out << (cell.all_pass() ? "[pass] " : "[FAIL] ") << cell.name << "\n";
    for (const auto& c : cell.checks)
      if (!c.pass) out << "         " << c.name << ": " << c.detail << "\n";
  }
}

void verify_csv(const std::vector<SuiteCell>& cells, std::ostream& out) {
  out << "cell,check,pass,detail\n";
  for (const auto& cell : cells)
    for (const auto& c : cell.checks) {
      std::string detail = c.detail;
      for (auto& ch : detail)
        if (ch == ',' || ch == '\n') ch = ';';
      out << cell.name << "," << c.name << "," << (c.pass ? "pass" : "fail") << "," << detail
          << "\n";
    }
}

json expand_json(const HilbertReport& rep) {
  json j = envelope("expand");
  j["label"] = rep.label;
  j["n"] = rep.n;
  j["P_coeffs"] = rats_json(rep.P.coeffs());
  j["char_coeffs"] = rats_json(rep.char_coeffs);
  j["binomial_coeffs"] = rats_json(rep.binom_coeffs);
  j["volume"] = rep.volume.str();
  j["checks"] = checks_json(rep.checks);
  j["all_pass"] = rep.all_pass();
  return j;
}

void expand_table(const HilbertReport& rep, std::ostream& out) {
  out << "Characteristic-coefficient expansion: " << rep.label << " (n = " << rep.n << ")\n";
  out << "  P(r) = " << rep.P.str() << "\n";
  for (std::size_t l = 0; l < rep.char_coeffs.size(); ++l)
    out << "  c_" << l << " = " << rep.char_coeffs[l].str() << "\n";
  for (std::size_t i = 0; i < rep.binom_coeffs.size(); ++i)
    out << "  n_" << i << " = " << rep.binom_coeffs[i].str() << "\n";
  out << "  volume = " << rep.volume.str() << "\n";
}

int emit_and_code(const json& j, bool all_pass, const std::string& output, std::ostream& out,
                  std::ostream& err) {
  if (output.empty()) {
    emit(j, out);
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "cannot open output file " << output << "\n";
      return 2;
    }
    emit(j, f);
  }
  return all_pass ? 0 : 1;
}

template <typename TableFn, typename CsvFn>
int emit_text(const std::string& format, bool all_pass, const std::string& output,
              std::ostream& out, std::ostream& err, TableFn table, CsvFn csv) {
  std::ostringstream buf;
  if (format == "table")
    table(buf);
  else
    csv(buf);
  if (output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "cannot open output file " << output << "\n";
      return 2;
    }
    f << buf.str();
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hilbert polynomials of Wolf spaces and prolongations of the "
               "twistor symbol"};
  app.require_subcommand(1);

  WolfArgs wa;
  auto* wolf = app.add_subcommand("wolf", "Hilbert polynomial report for one Wolf space");
  wolf->add_option("--algebra", wa.algebra, "simple algebra label, e.g. G2, E8, C4");
  wolf->add_option("--family", wa.family, "closed-form family: HPn, Gr2C, Gr4R, G2");
  wolf->add_option("--n", wa.n, "quaternionic dimension for --family");
  wolf->add_option("--r-max", wa.r_max, "evaluation/scan radius")->default_val(20);
  wolf->add_option("--format", wa.format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->default_val("table");
  wolf->add_option("--output", wa.output, "write to file instead of stdout");
  wolf->add_option("--corrupt", wa.corrupt)->group("");  // test fixture, hidden

  struct {
    int n = 1, r = 1, cap = -1;
    bool imaps = false, solutions = false;
    std::string format = "table", output;
  } pa;
  auto* pro = app.add_subcommand("prolong", "prolongation tower of the twistor symbol");
  pro->add_option("--n", pa.n, "quaternionic dimension (>= 1)")->required();
  pro->add_option("--r", pa.r, "twist parameter (>= 1)")->required();
  pro->add_option("--cap", pa.cap, "highest prolongation level to compute (default 2r)");
  pro->add_flag("--imaps", pa.imaps, "build the jet-linearization maps and check them");
  pro->add_flag("--solutions", pa.solutions, "run the flat polynomial-solution oracle");
  pro->add_option("--format", pa.format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->default_val("table");
  pro->add_option("--output", pa.output, "write to file instead of stdout");

  struct {
    std::string scope = "all", format = "table", output, corrupt;
    int r_max = 20;
  } va;
  auto* ver = app.add_subcommand("verify", "run the full verification suites");
  ver->add_option("--scope", va.scope, "all|hilbert|prolong")
      ->check(CLI::IsMember({"all", "hilbert", "prolong"}))
      ->default_val("all");
  ver->add_option("--r-max", va.r_max, "scan radius for the identity suite")->default_val(20);
  ver->add_option("--format", va.format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->default_val("table");
  ver->add_option("--output", va.output, "write to file instead of stdout");
  ver->add_option("--corrupt", va.corrupt)->group("");  // test fixture, hidden

  WolfArgs ea;
  auto* exp = app.add_subcommand("expand", "characteristic and binomial coefficients");
  exp->add_option("--algebra", ea.algebra, "simple algebra label");
  exp->add_option("--family", ea.family, "closed-form family: HPn, Gr2C, Gr4R, G2");
  exp->add_option("--n", ea.n, "quaternionic dimension for --family");
  exp->add_option("--format", ea.format, "table|json|csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->default_val("table");
  exp->add_option("--output", ea.output, "write to file instead of stdout");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (wolf->parsed()) {
      if (wa.algebra.empty() == wa.family.empty()) {
        err << "wolf: give exactly one of --algebra or --family\n";
        return 2;
      }
      const HilbertReport rep = make_report(wa);
      if (wa.format == "json") return emit_and_code(wolf_json(rep, wa.r_max), rep.all_pass(),
                                                    wa.output, out, err);
      return emit_text(wa.format, rep.all_pass(), wa.output, out, err,
                       [&](std::ostream& o) { wolf_table(rep, wa.r_max, o); },
                       [&](std::ostream& o) { wolf_csv(rep, wa.r_max, o); });
    }
    if (pro->parsed()) {
      if (pa.n < 1 || pa.r < 1) {
        err << "prolong: need --n >= 1 and --r >= 1\n";
        return 2;
      }
      const TwistorCellReport rep =
          twistor_cell(pa.n, pa.r, pa.cap, pa.imaps ? 2 * pa.r : -1, pa.solutions);
      if (pa.format == "json")
        return emit_and_code(prolong_json(rep), rep.all_pass(), pa.output, out, err);
      return emit_text(pa.format, rep.all_pass(), pa.output, out, err,
                       [&](std::ostream& o) { prolong_table(rep, o); },
                       [&](std::ostream& o) { prolong_csv(rep, o); });
    }
    if (ver->parsed()) {
      std::vector<SuiteCell> cells;
      if (va.scope != "prolong")
        for (auto& c : hilbert_suite(va.r_max, va.corrupt)) cells.push_back(std::move(c));
      if (va.scope != "hilbert")
        for (auto& c : prolong_suite()) cells.push_back(std::move(c));
      bool all = true;
      for (const auto& c : cells) all = all && c.all_pass();
      if (va.format == "json")
        return emit_and_code(verify_json(va.scope, cells), all, va.output, out, err);
      return emit_text(va.format, all, va.output, out, err,
                       [&](std::ostream& o) { verify_table(cells, o); },
                       [&](std::ostream& o) { verify_csv(cells, o); });
    }
    // expand
    if (ea.algebra.empty() == ea.family.empty()) {
      err << "expand: give exactly one of --algebra or --family\n";
      return 2;
    }
    ea.r_max = 0;
    HilbertReport rep = make_report(ea);
    if (ea.format == "json")
      return emit_and_code(expand_json(rep), rep.all_pass(), ea.output, out, err);
    return emit_text(ea.format, rep.all_pass(), ea.output, out, err,
                     [&](std::ostream& o) { expand_table(rep, o); },
                     [&](std::ostream& o) { wolf_csv(rep, 0, o); });
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wolfhp
