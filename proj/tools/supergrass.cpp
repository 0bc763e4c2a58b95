// supergrass command line: verification suites and one-off computations.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "supergrass/divalg.hpp"
#include "supergrass/expr_io.hpp"
#include "supergrass/minkowski.hpp"
#include "supergrass/models.hpp"
#include "supergrass/morphisms.hpp"
#include "supergrass/suites.hpp"
#include "supergrass/superspace.hpp"

namespace {

using namespace sg;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Supertime when every identifier belongs to it, otherwise a table inferred
/// from the names.
DslContext context_for(const std::vector<std::string>& texts) {
  static const std::set<std::string> supertime_names = {"t", "th", "et1", "et2", "dt", "D", "tau"};
  bool fits = true;
  for (const auto& t : texts)
    for (const auto& id : identifiers(t)) fits = fits && supertime_names.count(id);
  return fits ? DslContext::supertime() : DslContext::infer(texts);
}

void print_value(const DslValue& v, bool json) {
  if (json) {
    if (const auto* p = std::get_if<SuperPolynomial>(&v)) {
      std::cout << to_json(*p).dump() << "\n";
      return;
    }
    std::cout << nlohmann::json{{"operator", to_text(v)}}.dump() << "\n";
    return;
  }
  std::cout << to_text(v) << "\n";
}

DivAlg algebra(unsigned k) {
  if (k != 1 && k != 2 && k != 4 && k != 8) throw UsageError("--k must be 1, 2, 4 or 8");
  return divalg_from_dim(k);
}

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

/// {"m":1,"k":0,"L":2,"n":1,"l":0,"phi":["x"],"chi":[],"xi":[{"index":[1,2],"field":["1"]}]}
/// Polynomials are DSL text over x.., y.., th.., et.., ps...
FleshMorphism morphism_from_json(const nlohmann::json& j) {
  const auto dim = [&](const char* key) { return j.value(key, 0u); };
  const auto sp = MorphismSpace::make(dim("m"), dim("k"), dim("L"), dim("n"), dim("l"));
  FleshMorphism f;
  f.space = sp;
  for (const auto& p : j.value("phi", nlohmann::json::array())) f.phi.push_back(parse_poly(p.get<std::string>(), sp.table));
  for (const auto& p : j.value("chi", nlohmann::json::array())) f.chi.push_back(parse_poly(p.get<std::string>(), sp.table));
  if (f.phi.size() != sp.n || f.chi.size() != sp.l) throw UsageError("phi needs n entries and chi needs l entries");
  for (const auto& x : j.value("xi", nlohmann::json::array())) {
    Derivation d(sp.table, Parity::Even);
    const auto field = x.at("field");
    if (field.size() != sp.n) throw UsageError("each xi field needs n coefficients");
    for (unsigned i = 0; i < sp.n; ++i) d.set_image(sp.y[i], parse_poly(field[i].get<std::string>(), sp.table));
    f.xi[x.at("index").get<MultiIndex>()] = d;
  }
  return f;
}

std::string matrix_text(const RatMatrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < m[r].size(); ++c) s += (c ? " " : "") + m[r][c].get_str();
  }
  return s;
}

nlohmann::json matrix_json(const RatMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : m) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : r) row.push_back(v.get_str());
    rows.push_back(row);
  }
  return rows;
}

/// h(u) with rational coefficients, lowest degree first.
std::vector<Rational> superpotential_coeffs(const std::string& text) {
  const auto t = infer_table({text});
  for (std::uint32_t s = 0; s < t->size(); ++s)
    if (t->at(s).name != "u") throw UsageError("--h must be a polynomial in u, found " + t->at(s).name);
  const auto p = parse_poly(text, t);
  std::vector<Rational> c;
  for (const auto& [m, v] : p.terms()) {
    if (v.im() != 0) throw UsageError("--h needs rational coefficients");
    const unsigned e = t->size() ? m.exponent(0) : 0;
    if (e > 4) throw UsageError("--h has degree above 4");
    if (c.size() <= e) c.resize(e + 1, Rational(0));
    c[e] = v.re();
  }
  return c;
}

int report_check(const std::string& label, const CheckOutcome& c) {
  std::cout << (c.ok ? "PASS  " : "FAIL  ") << label << (c.ok ? "" : ": " + c.detail) << "\n";
  return c.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in supercommutative and Clifford algebras"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  unsigned cases = 100, k = 0;
  bool json = false, timing = false;
  std::string suite, expr, expr2, file, model, h_text;
  std::vector<std::string> box;

  auto* verify = app.add_subcommand("verify", "Run a property suite (or all) and print the report");
  verify->add_option("suite", suite, "kernel, divalg, superspace, morphisms, minkowski, models, expr_io or all")->required();
  verify->add_option("--seed", seed, "Seed for the random instances");
  verify->add_option("--cases", cases, "Random instances per check")->check(CLI::PositiveNumber);
  verify->add_option("--k", k, "Restrict the minkowski suite to one division algebra dimension");
  verify->add_flag("--json", json, "Emit the report as JSON");
  verify->add_flag("--timing", timing, "Include per-check and total wall time");

  auto* expand = app.add_subcommand("expand", "Evaluate an expression to canonical form");
  expand->add_option("expr", expr)->required();
  expand->add_flag("--json", json);

  auto* ber = app.add_subcommand("berezin", "Berezin integral over th<i>, optionally over a box in the even variables");
  ber->add_option("expr", expr)->required();
  ber->add_option("--box", box, "lo hi")->expected(2);
  ber->add_flag("--json", json);

  auto* bracket = app.add_subcommand("bracket", "Super bracket of two operators or polynomials");
  bracket->add_option("a", expr)->required();
  bracket->add_option("b", expr2)->required();
  bracket->add_flag("--json", json);

  auto* pull = app.add_subcommand("pullback", "Pull back a target expression along a morphism given as JSON");
  pull->add_option("morphism", file, "JSON file, - for stdin")->required();
  pull->add_option("expr", expr)->required();
  pull->add_flag("--json", json);

  auto* closure = app.add_subcommand("closure", "Dimension and basis of the Lorentz closure");
  closure->add_option("--k", k)->required();
  closure->add_flag("--json", json);

  auto* brackets = app.add_subcommand("brackets", "Supercharge bracket table");
  brackets->add_option("--k", k)->required();
  brackets->add_flag("--json", json);

  auto* table = app.add_subcommand("table", "Multiplication table of the division algebra");
  table->add_option("--k", k)->required();
  table->add_flag("--json", json);

  auto* modelcmd = app.add_subcommand("model", "Component form and checks for a model");
  modelcmd->set_help_flag("--help", "Print this help message and exit");
  modelcmd->add_option("name", model, "superparticle or sigma32")->required()->check(CLI::IsMember({"superparticle", "sigma32"}));
  modelcmd->add_option("--h", h_text, "Superpotential as a polynomial in u (sigma32), symbolic quartic by default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      SuiteOptions opts;
      opts.seed = seed;
      opts.cases = cases;
      if (k) {
        algebra(k);
        opts.k = k;
      }
      const auto& names = suite_names();
      if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "'");
      const auto rep = run_suite(suite, opts);
      if (json)
        std::cout << rep.to_json(timing).dump(2) << "\n";
      else
        std::cout << rep.to_text(timing);
      return rep.passed() ? 0 : 1;
    }
    if (*expand) {
      print_value(evaluate(expr, context_for({expr})), json);
      return 0;
    }
    if (*ber) {
      const auto ctx = context_for({expr});
      const auto f = parse_poly(expr, ctx.table);
      std::vector<std::uint32_t> th, even;
      for (std::uint32_t s = 0; s < ctx.table->size(); ++s) {
        const auto& sym = ctx.table->at(s);
        if (sym.name.rfind("th", 0) == 0 && sym.parity() == Parity::Odd) th.push_back(s);
        if (sym.parity() == Parity::Even && sym.kind != SymbolKind::CliffordGenerator) even.push_back(s);
      }
      auto out = berezin(f, th);
      if (!box.empty()) out = integrate_box(out, even, Rational(box[0]), Rational(box[1]));
      print_value(out, json);
      return 0;
    }
    if (*bracket) {
      print_value(evaluate("[" + expr + ", " + expr2 + "]", context_for({expr, expr2})), json);
      return 0;
    }
    if (*pull) {
      const auto f = morphism_from_json(nlohmann::json::parse(read_source(file)));
      print_value(f.pullback(parse_poly(expr, f.space.table)), json);
      return 0;
    }
    if (*closure) {
      const auto basis = lorentz_closure_basis(algebra(k));
      if (json) {
        nlohmann::json b = nlohmann::json::array();
        for (const auto& m : basis) b.push_back(matrix_json(m));
        std::cout << nlohmann::json{{"k", k}, {"dim", basis.size()}, {"basis", b}}.dump() << "\n";
      } else {
        std::cout << basis.size() << "\n";
        for (const auto& m : basis) std::cout << matrix_text(m) << "\n";
      }
      return 0;
    }
    if (*brackets) {
      const auto rows = bracket_table(algebra(k));
      nlohmann::json out = nlohmann::json::array();
      for (const auto& e : rows) {
        nlohmann::json c = nlohmann::json::object();
        for (const auto& [label, v] : e.coeffs) c[label] = v.get_str();
        if (json) {
          out.push_back({{"a", e.a}, {"alpha", e.alpha}, {"b", e.b}, {"beta", e.beta}, {"coeffs", c}});
          continue;
        }
        std::string rhs;
        for (const auto& [label, v] : e.coeffs) {
          const std::string mag = abs(v) == 1 ? "" : Rational(abs(v)).get_str() + "*";
          rhs += rhs.empty() ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
          rhs += mag + label;
        }
        std::cout << "[Q" << e.a << "^" << e.alpha << ", Q" << e.b << "^" << e.beta << "] = " << (rhs.empty() ? "0" : rhs)
                  << "\n";
      }
      if (json) std::cout << out.dump() << "\n";
      return 0;
    }
    if (*table) {
      const auto tag = algebra(k);
      nlohmann::json out = nlohmann::json::array();
      for (unsigned x = 0; x < k; ++x) {
        nlohmann::json row = nlohmann::json::array();
        std::ostringstream line;
        for (unsigned y = 0; y < k; ++y) {
          const auto p = basis_product(tag, x, y);
          const std::string cell = (p.sign < 0 ? "-u" : "u") + std::to_string(p.index + 1);
          row.push_back(cell);
          line << (y ? " " : "") << std::string(4 - cell.size(), ' ') << cell;
        }
        if (json)
          out.push_back(row);
        else
          std::cout << line.str() << "\n";
      }
      if (json) std::cout << nlohmann::json{{"k", k}, {"products", out}}.dump() << "\n";
      return 0;
    }
    if (*modelcmd) {
      int status = 0;
      if (model == "superparticle") {
        const auto p = Superparticle::make(2);
        std::cout << "L = " << p.lagrangian(p.superfield()).str() << "\n";
        std::cout << "charge = " << p.charge().str() << "\n";
        status |= report_check("expansion", superparticle_expansion_check(2));
        status |= report_check("plain variation", plain_variation_check(2));
        status |= report_check("noether charge", modulated_variation(2).outcome);
        status |= report_check("susy algebra", susy_algebra_check(2));
        status |= report_check("euler-lagrange", superparticle_el_check(2));
        return status;
      }
      const auto m = SigmaModel::make();
      const auto h = h_text.empty() ? m.symbolic_h(4) : m.rational_h(superpotential_coeffs(h_text));
      const auto el = sigma_euler_lagrange(m, h);
      std::cout << "L = " << m.component_lagrangian(h).str() << "\n";
      std::cout << "E_phi = " << el.e_phi.str() << "\nE_psi1 = " << el.e_psi1.str() << "\nE_psi2 = " << el.e_psi2.str()
                << "\nE_F = " << el.e_F.str() << "\n";
      status |= report_check("component action", sigma_action_check(m, h));
      status |= report_check("euler-lagrange", sigma_el_check(m, h));
      status |= report_check("bps", bps_check(m, h));
      status |= report_check("bogomolnyi", bogomolnyi_check(m, h));
      return status;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
