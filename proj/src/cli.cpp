#include "charpoly/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "charpoly/error.hpp"
#include "charpoly/fredholm.hpp"
#include "charpoly/grid.hpp"
#include "charpoly/haar.hpp"
#include "charpoly/json_io.hpp"
#include "charpoly/kernels.hpp"
#include "charpoly/ratios.hpp"
#include "charpoly/structured.hpp"
#include "charpoly/tables.hpp"

namespace charpoly::cli {

namespace {

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::array();
  std::vector<std::string> plain;
  bool failed = false;
};

struct SymbolArgs {
  std::string a, b, c, d;
  CLI::Option* b_opt = nullptr;
  CLI::Option* d_opt = nullptr;

  void attach(CLI::App* app) {
    app->add_option("--a", a, "zeros, comma-separated rationals (e.g. 1/2,-1/3)");
    b_opt = app->add_option("--b", b, "unitary only: zeros in z (default: same as --a)");
    app->add_option("--c", c, "poles, comma-separated rationals");
    d_opt = app->add_option("--d", d, "unitary only: poles in z (default: same as --c)");
  }

  bool symmetric_default() const { return b_opt->count() == 0 && d_opt->count() == 0; }

  // Unitary targets take the full (A, B, C, D); the rest need phi = g g~.
  SymbolSpec spec(Family f) const {
    auto av = parse_rational_list(a);
    auto cv = parse_rational_list(c);
    auto bv = b_opt->count() ? parse_rational_list(b) : av;
    auto dv = d_opt->count() ? parse_rational_list(d) : cv;
    if (f != Family::U && (bv != av || dv != cv)) {
      throw DomainError(to_string(f) + " averages take g = prod (1 - a z)/(1 - c z); --b/--d must match --a/--c");
    }
    return make_symbol(std::move(av), std::move(bv), std::move(cv), std::move(dv));
  }
};

json inputs_json(Family f, int n, const SymbolSpec& spec) {
  json j;
  j["group"] = to_string(f);
  j["size"] = n;
  if (f == Family::U) {
    j["symbol"] = to_json(spec);
  } else {
    j["A"] = to_json(spec.a);
    j["C"] = to_json(spec.c);
  }
  return j;
}

Rational ratios_route(Family f, int n, const SymbolSpec& s, std::vector<SwapTerm>* terms) {
  int min_size = 0;
  switch (f) {
    case Family::U: min_size = unitary_min_size(s.a.size(), s.b.size(), s.c.size(), s.d.size()); break;
    case Family::USp: min_size = symplectic_min_size(s.a.size(), s.c.size()); break;
    default: min_size = orthogonal_min_size(s.a.size(), s.c.size()); break;
  }
  if (n < min_size) {
    throw DomainError("the ratios sum matches the " + to_string(f) + " average only for N >= " +
                      std::to_string(min_size) + " with these set sizes");
  }
  std::vector<SwapTerm> t;
  switch (f) {
    case Family::U: t = unitary_terms(s.a, s.b, s.c, s.d, n); break;
    case Family::USp: t = symplectic_terms(s.a, s.c, n); break;
    case Family::OPlus: t = orthogonal_terms(s.a, s.c, n, OrthogonalSign::plus); break;
    case Family::OMinus: t = orthogonal_terms(s.a, s.c, n, OrthogonalSign::minus); break;
  }
  Rational sum(0);
  for (const auto& x : t) sum += x.term;
  if (terms) *terms = std::move(t);
  return sum;
}

void record_identity(Report& rep, const IdentityReport& r) {
  rep.results.push_back(to_json(r));
  if (!r.equal) {
    rep.failed = true;
    rep.plain.push_back("FAIL " + r.identity + " " + r.inputs + " lhs=" + r.lhs.str() + " rhs=" + r.rhs.str());
  }
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void emit(const Report& rep, const std::string& format, double elapsed_ms, std::ostream& os) {
  if (format == "json") {
    json j;
    j["command"] = rep.command;
    j["inputs"] = rep.inputs;
    j["results"] = rep.results;
    j["elapsed_ms"] = elapsed_ms;
    os << j.dump(2) << "\n";
  } else {
    for (const auto& line : rep.plain) os << line << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact averages of characteristic polynomials over U(N), USp(2m) and O(N)", "charpoly"};
  app.require_subcommand(1);
  std::string format = "plain";
  std::string out_path;
  app.add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
  app.add_option("--out", out_path, "write the report to this file");

  auto* average = app.add_subcommand("average", "group average by one route");
  auto* ratios = app.add_subcommand("ratios", "closed-form subset sum");
  auto* verify = app.add_subcommand("verify", "check identities over a grid");
  auto* tables = app.add_subcommand("tables", "reproduce the appendix tables");
  auto* mc = app.add_subcommand("mc", "Haar Monte-Carlo estimate");
  auto* decay = app.add_subcommand("decay", "|D_n/E - 1| for n = 1..n_max");
  for (auto* sub : {average, ratios, verify, tables, mc, decay}) sub->fallthrough();

  std::string group;
  int size = 0;
  std::string route = "det";
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  SymbolArgs avg_sym, rat_sym, mc_sym, dec_sym;

  average->add_option("--group", group, "u, usp, o+ or o-")->required();
  average->add_option("--size", size, "N")->required();
  average->add_option("--route", route, "det, ratios or mc");
  average->add_option("--samples", samples, "Monte-Carlo samples");
  average->add_option("--seed", seed, "Monte-Carlo seed");
  avg_sym.attach(average);

  bool show_terms = false;
  ratios->add_option("--group", group, "u, usp, o+ or o-")->required();
  ratios->add_option("--size", size, "N")->required();
  ratios->add_flag("--terms", show_terms, "list every swap term");
  rat_sym.attach(ratios);

  std::string identity;
  std::string grid = "default";
  std::string which_case = "all";
  verify->add_option("--identity", identity, "bocg, be or factorization")
      ->required()
      ->check(CLI::IsMember({"bocg", "be", "factorization"}));
  verify->add_option("--grid", grid, "default or a JSON grid file");
  verify->add_option("--case", which_case, "be only: I, II, III, IV or all")
      ->check(CLI::IsMember({"I", "II", "III", "IV", "all"}));

  mc->add_option("--group", group, "u, usp, o+ or o-")->required();
  mc->add_option("--size", size, "N")->required();
  mc->add_option("--samples", samples, "sample count");
  mc->add_option("--seed", seed, "64-bit seed");
  mc_sym.attach(mc);

  std::size_t n_max = 25;
  bool decay_grid_flag = false;
  decay->add_option("--n-max", n_max, "largest n");
  decay->add_flag("--default-grid", decay_grid_flag, "probe the built-in grid instead of one symbol");
  dec_sym.attach(decay);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (average->parsed()) {
      rep.command = "average";
      const Family f = parse_family(group);
      const Route r = parse_route(route);
      const SymbolSpec spec = avg_sym.spec(f);
      rep.inputs = inputs_json(f, size, spec);
      rep.inputs["route"] = to_string(r);
      json res;
      res["group"] = to_string(f);
      res["size"] = size;
      res["route"] = to_string(r);
      if (r == Route::monte_carlo) {
        const auto est = mc_average({f, size}, spec, samples, seed);
        res["value"] = est.mean;
        res["stderr"] = est.std_error;
        res["samples"] = est.samples;
        res["seed"] = est.seed;
        rep.plain.push_back(format_double(est.mean) + " +- " + format_double(est.std_error));
      } else {
        const Rational v = r == Route::ratios ? ratios_route(f, size, spec, nullptr)
                                              : group_average({f, size}, spec).value;
        res["value"] = to_json(v);
        rep.plain.push_back(v.str());
      }
      rep.results.push_back(res);
    } else if (ratios->parsed()) {
      rep.command = "ratios";
      const Family f = parse_family(group);
      const SymbolSpec spec = rat_sym.spec(f);
      rep.inputs = inputs_json(f, size, spec);
      std::vector<SwapTerm> terms;
      const Rational v = ratios_route(f, size, spec, &terms);
      if (show_terms) {
        for (const auto& t : terms) {
          rep.results.push_back(to_json(t));
          rep.plain.push_back("mask_a=" + std::to_string(t.mask_a) + " mask_b=" + std::to_string(t.mask_b) +
                              " sign=" + std::to_string(t.sign) + " swap=" + t.swap_factor.str() +
                              " z=" + t.z_value.str() + " term=" + t.term.str());
        }
      }
      json res;
      res["value"] = to_json(v);
      rep.results.push_back(res);
      rep.plain.push_back(v.str());
    } else if (verify->parsed()) {
      rep.command = "verify";
      rep.inputs["identity"] = identity;
      rep.inputs["grid"] = grid;
      std::optional<GridFile> file;
      if (grid != "default") file = load_grid(grid);
      std::vector<int> sizes;
      if (file && !file->sizes.empty()) sizes = file->sizes;
      if (identity == "bocg") {
        if (sizes.empty()) sizes = {1, 2, 3, 4, 5, 6};
        const auto specs = file ? file->specs : bocg_grid();
        for (const auto& s : specs) {
          for (int n : sizes) record_identity(rep, verify_bocg(s, static_cast<std::size_t>(n)));
        }
      } else if (identity == "be") {
        rep.inputs["case"] = which_case;
        if (sizes.empty()) sizes = {0, 1, 2, 3, 4, 5};
        std::vector<THCase> cases{THCase::I, THCase::II, THCase::III, THCase::IV};
        if (which_case != "all") {
          for (auto c : cases) {
            if (to_string(c) == which_case) cases = {c};
          }
        }
        const auto specs = file ? file->specs : be_grid();
        for (const auto& s : specs) {
          for (auto c : cases) {
            for (int m : sizes) record_identity(rep, verify_basor_ehrhardt(s, static_cast<std::size_t>(m), c));
          }
        }
      } else {
        if (sizes.empty()) sizes = {1, 2, 3, 4, 5, 6};
        std::vector<Generator> gens;
        if (file) {
          for (const auto& s : file->specs) {
            if (!s.symmetric()) throw DomainError("factorization needs symmetric symbols (A, C)");
            gens.push_back(Generator{s.a, s.c});
          }
        } else {
          gens = default_generators();
        }
        for (const auto& g : gens) {
          for (int n : sizes) record_identity(rep, verify_factorization(g, n));
        }
      }
      std::size_t pass = 0;
      for (const auto& r : rep.results) pass += r["equal"].get<bool>() ? 1 : 0;
      rep.plain.push_back(identity + ": " + std::to_string(pass) + "/" + std::to_string(rep.results.size()) +
                          " equal");
    } else if (tables->parsed()) {
      rep.command = "tables";
      const TablePoint pt;
      rep.inputs["a"] = to_json(pt.a);
      rep.inputs["b"] = to_json(pt.b);
      rep.inputs["c"] = to_json(pt.c);
      for (const auto& row : appendix_rows()) {
        const auto chk = check_row(row, pt);
        json res;
        res["row"] = chk.name;
        res["value"] = to_json(chk.fixture);
        res["det"] = to_json(chk.determinant);
        res["ratios"] = to_json(chk.ratios);
        res["equal"] = chk.pass;
        rep.results.push_back(res);
        rep.plain.push_back(chk.name + "  fixture=" + chk.fixture.str() + "  det=" + chk.determinant.str() +
                            "  ratios=" + chk.ratios.str() + (chk.pass ? "  pass" : "  FAIL"));
        if (!chk.pass) rep.failed = true;
      }
      for (const auto& r : appendix_factorizations(pt)) {
        rep.results.push_back(to_json(r));
        rep.plain.push_back(r.identity + " factorization  lhs=" + r.lhs.str() + "  rhs=" + r.rhs.str() +
                            (r.equal ? "  pass" : "  FAIL"));
        if (!r.equal) rep.failed = true;
      }
    } else if (mc->parsed()) {
      rep.command = "mc";
      const Family f = parse_family(group);
      const SymbolSpec spec = mc_sym.spec(f);
      rep.inputs = inputs_json(f, size, spec);
      rep.inputs["samples"] = samples;
      rep.inputs["seed"] = seed;
      const auto est = mc_average({f, size}, spec, samples, seed);
      rep.results.push_back(to_json(est));
      rep.plain.push_back("mean=" + format_double(est.mean) + " stderr=" + format_double(est.std_error) +
                          " samples=" + std::to_string(est.samples) + " seed=" + std::to_string(est.seed));
    } else if (decay->parsed()) {
      rep.command = "decay";
      rep.inputs["n_max"] = n_max;
      std::vector<SymbolSpec> specs;
      if (decay_grid_flag) {
        specs = decay_grid();
      } else {
        specs.push_back(dec_sym.spec(Family::U));
      }
      for (const auto& s : specs) {
        const auto values = szego_decay_probe(s, n_max);
        for (std::size_t i = 0; i < values.size(); ++i) {
          json res;
          res["symbol"] = to_json(s);
          res["n"] = i + 1;
          res["value"] = values[i];
          rep.results.push_back(res);
          rep.plain.push_back(std::to_string(i + 1) + " " + format_double(values[i]));
        }
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return kExitInput;
    }
    emit(rep, format, elapsed, file);
  } else {
    emit(rep, format, elapsed, out);
  }
  return rep.failed ? kExitFailure : kExitPass;
}

}  // namespace charpoly::cli
