// shadowq: command-line front end for shadow state sums.
//
// Exit codes: 0 ok, 1 internal error, 2 usage, 3 parse/IO, 4 validation or
// compile failure, 5 unbounded coloring space, 6 verification failure,
// 7 incomplete enumeration under --strict.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "shadowq/builders.hpp"
#include "shadowq/diagram.hpp"
#include "shadowq/error.hpp"
#include "shadowq/skein.hpp"
#include "shadowq/statesum.hpp"

using namespace shadowq;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kUsage = 2, kParse = 3, kInvalid = 4, kUnbounded = 5, kVerify = 6, kIncomplete = 7 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
      return kParse;
    case ErrorKind::Validation:
    case ErrorKind::Compile:
    case ErrorKind::Inadmissible:
    case ErrorKind::Domain:
    case ErrorKind::Unsupported:
      return kInvalid;
    case ErrorKind::Unbounded:
      return kUnbounded;
    case ErrorKind::Incomplete:
      return kIncomplete;
    default:
      return kInternal;
  }
}

std::string read_input(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, what + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  out << text;
}

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

unsigned env_threads() {
  const char* v = std::getenv("SHADOWQ_THREADS");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 0 || n > 1024) throw Error(ErrorKind::Domain, "SHADOWQ_THREADS must be an integer in 0..1024");
  return static_cast<unsigned>(n);
}

struct EvalOptions {
  int cap = -1;
  bool strict = false;
  bool states = false;
  bool verify = false;
  int components = 0;
  std::string format = "text";
};

// Number of link components when the boundary is a link, 0 for graphs.
int link_components(const Shadow& s) {
  if (!s.boundary_vertices.empty()) return 0;
  int n = 0;
  for (const auto& e : s.boundary_edges) {
    if (e.kind != CellKind::Circle) return 0;
    ++n;
  }
  return n;
}

std::string coloring_text(const Shadow& s, const Coloring& c) {
  std::string out;
  for (std::size_t r = 0; r < s.regions.size(); ++r) {
    if (r) out += ' ';
    out += s.regions[r].id + "=" + std::to_string(c.colors[r]);
  }
  return out;
}

int run_eval(const Shadow& s, const std::string& digest, const EvalOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const int cap = o.cap >= 0 ? o.cap : s.max_fixed_color() + 16;
  const Enumeration en = enumerate_colorings(s, cap);
  std::vector<QRat> values;
  const BracketResult b = bracket(s, en, env_threads(), &values);

  json rep;
  rep["input"] = digest;
  rep["bracket"] = b.value.render();
  rep["ord_i"] = b.ord_i.str();
  rep["states"] = b.states_evaluated;
  rep["cap"] = b.cap_used;
  rep["complete"] = b.complete;
  rep["certificate"] =
      b.complete ? "complete (heuristic: no free region reaches cap-1 or cap, every region tied to a fixed color)"
                 : "INCOMPLETE: some state reaches cap-1 or cap; raise --cap (finiteness is only guaranteed for "
                   "collapsible shadows, and no a priori bound is known)";

  const int comps = o.components > 0 ? o.components : link_components(s);
  bool unit_colors = true;
  for (const auto& e : s.boundary_edges) unit_colors = unit_colors && e.color == 1;
  json ribbon = json::array();
  if (comps == 0) {
    ribbon.push_back("n/a: the boundary is not a link");
  } else if (!unit_colors && o.components == 0) {
    ribbon.push_back("n/a: boundary colors are not all 1");
  } else {
    try {
      for (const auto& line : ribbon_report(b, RibbonTarget{comps}).lines) ribbon.push_back(line);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Incomplete) throw;
      ribbon.push_back(std::string("refused: ") + e.what());
    }
  }
  rep["ribbon"] = ribbon;

  int violations = 0;
  if (o.verify || o.states) {
    std::optional<std::int64_t> min_slack2;
    json per_state = json::array();
    for (std::size_t k = 0; k < en.colorings.size(); ++k) {
      const auto& c = en.colorings[k];
      const StateBound sb = verify_state_bound(s, c, values[k]);
      if (!sb.holds) ++violations;
      if (!sb.ord.is_infinite()) {
        const std::int64_t slack2 = 2 * sb.ord.value() - sb.bound.twice;
        min_slack2 = min_slack2 ? std::min(*min_slack2, slack2) : slack2;
      }
      if (o.states) {
        per_state.push_back({{"coloring", coloring_text(s, c)},
                             {"value", values[k].reduced().render()},
                             {"ord", sb.ord.str()},
                             {"chi", sb.chi},
                             {"red", sb.red_boundary},
                             {"bound", sb.bound.str()},
                             {"holds", sb.holds}});
      }
    }
    if (o.verify) {
      rep["audit"] = {{"states", en.colorings.size()},
                      {"violations", violations},
                      {"min_slack", min_slack2 ? HalfInt{*min_slack2}.str() : "+inf"}};
    }
    if (o.states) rep["state_list"] = per_state;
  }

  if (o.format == "json") {
    std::cout << rep.dump(2) << '\n';
  } else {
    auto row = [](const std::string& k, const std::string& v) { std::cout << std::left << std::setw(12) << k << v << '\n'; };
    row("input", rep["input"]);
    row("bracket", rep["bracket"]);
    row("ord_i", rep["ord_i"]);
    row("states", std::to_string(b.states_evaluated));
    row("cap", std::to_string(b.cap_used));
    row("certificate", rep["certificate"]);
    for (const auto& line : ribbon) row("ribbon", line.get<std::string>());
    if (o.verify) {
      const auto& a = rep["audit"];
      row("audit", std::to_string(a["states"].get<std::size_t>()) + " states, " +
                       std::to_string(a["violations"].get<int>()) + " violations, min slack " +
                       a["min_slack"].get<std::string>());
    }
    if (o.states) {
      for (const auto& st : rep["state_list"]) {
        row("state", st["coloring"].get<std::string>() + " | ord " + st["ord"].get<std::string>() + " >= " +
                         st["bound"].get<std::string>() + " (chi " + std::to_string(st["chi"].get<std::int64_t>()) +
                         ", red " + std::to_string(st["red"].get<int>()) + ") " +
                         (st["holds"].get<bool>() ? "ok" : "VIOLATED") + " | " + st["value"].get<std::string>());
      }
    }
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "time " << ms << " ms\n";

  if (violations > 0) return kVerify;
  if (o.strict && !b.complete) return kIncomplete;
  return kOk;
}

Shadow load_shadow(const std::string& text) { return shadow_from_json(parse_json(text, "shadow JSON")); }

int run_closed_form(const std::string& kind, const std::vector<int>& colors) {
  QRat value;
  std::optional<OrderBoundCheck> check;
  auto need = [&](std::size_t n) {
    if (colors.size() != n) {
      throw Error(ErrorKind::Domain, kind + " takes " + std::to_string(n) + " integer argument(s)");
    }
  };
  if (kind == "circle") {
    need(1);
    check = order_bound_check(PlanarGraph::Circle, colors);
    value = circle_eval(colors[0]);
  } else if (kind == "theta") {
    need(3);
    check = order_bound_check(PlanarGraph::Theta, colors);
    value = theta_eval({colors[0], colors[1], colors[2]});
  } else if (kind == "tet") {
    need(6);
    check = order_bound_check(PlanarGraph::Tet, colors);
    value = tet_eval({colors[0], colors[1], colors[2], colors[3], colors[4], colors[5]});
  } else if (kind == "qint") {
    need(1);
    if (colors[0] < 0) throw Error(ErrorKind::Domain, "negative argument");
    value = QRat(quantum_int(colors[0]));
  } else if (kind == "factorial") {
    need(1);
    if (colors[0] < 0) throw Error(ErrorKind::Domain, "negative argument");
    value = QRat(quantum_factorial(colors[0]));
  } else {
    throw Error(ErrorKind::Domain, "unknown closed form '" + kind + "' (circle, theta, tet, qint, factorial)");
  }
  std::cout << "value  " << value.render() << '\n';
  std::cout << "ord_i  " << value.ord_at_i().str() << '\n';
  if (check) {
    std::cout << "bound  |L| - r/2 = " << check->bound.str() << (check->holds ? " (holds" : " (FAILS")
              << (check->equality_expected ? ", equality expected)" : ")") << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kauffman brackets from shadow state sums"};
  app.require_subcommand(1);

  EvalOptions eo;
  std::string input;
  auto add_eval_flags = [&](CLI::App* sub) {
    sub->add_option("--cap", eo.cap, "largest color tried (default: max boundary color + 16)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--strict", eo.strict, "exit 7 when the completeness certificate fails");
    sub->add_flag("--states", eo.states, "list every state");
    sub->add_option("--format", eo.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--components", eo.components, "number of link components for ribbon bounds")
        ->check(CLI::PositiveNumber);
  };

  auto* eval = app.add_subcommand("eval", "evaluate a shadow file");
  eval->add_option("shadow", input, "shadow JSON file, or - for stdin")->required();
  eval->add_flag("--verify", eo.verify, "audit every state against the odd-surface bound");
  add_eval_flags(eval);

  auto* verify = app.add_subcommand("verify", "same as eval --verify");
  verify->add_option("shadow", input, "shadow JSON file, or - for stdin")->required();
  add_eval_flags(verify);

  std::string out_path, report_path;
  auto* comp = app.add_subcommand("compile", "compile a diagram file to a shadow");
  comp->add_option("diagram", input, "diagram JSON file, or - for stdin")->required();
  comp->add_option("-o,--output", out_path, "shadow output file (default stdout)");
  comp->add_option("--report", report_path, "write the compile report JSON here");

  std::string skein_format = "text";
  auto* sk = app.add_subcommand("skein", "brute-force Kauffman bracket of a link diagram");
  sk->add_option("diagram", input, "diagram JSON file, or - for stdin")->required();
  sk->add_option("--format", skein_format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string ex_name;
  int ex_g = 1;
  std::int64_t ex_chi = -1;
  std::vector<int> ex_colors;
  bool ex_eval = false;
  auto* ex = app.add_subcommand("examples", "emit a built-in shadow (genus-knot, surface, circle, theta, tet)");
  ex->add_option("name", ex_name, "family name")
      ->required()
      ->transform(CLI::IsMember({"genus-knot", "surface", "circle", "theta", "tet"}))
      ->transform([](std::string v) { return v == "fig14" ? std::string("genus-knot") : v; });
  ex->add_option("--g", ex_g, "genus-knot: genus g of the bounded surface")->check(CLI::PositiveNumber);
  ex->add_option("--chi", ex_chi, "surface: Euler characteristic");
  ex->add_option("--color,--colors", ex_colors, "boundary colors")->check(CLI::NonNegativeNumber);
  ex->add_option("-o,--output", out_path, "shadow output file (default stdout)");
  ex->add_flag("--eval", ex_eval, "evaluate instead of printing the shadow");
  ex->add_flag("--verify", eo.verify, "with --eval, audit every state");
  add_eval_flags(ex);

  std::string cf_kind;
  std::vector<int> cf_args;
  auto* cf = app.add_subcommand("closed-form", "closed-form planar graph values and orders at q = i");
  cf->add_option("kind", cf_kind, "circle, theta, tet, qint or factorial")->required();
  cf->add_option("args", cf_args, "colors or integer argument")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval || *verify) {
      if (*verify) eo.verify = true;
      const std::string text = read_input(input);
      return run_eval(load_shadow(text), fnv1a64(text), eo);
    }
    if (*comp) {
      const Compiled c = compile(parse_diagram(read_input(input)));
      write_output(out_path, shadow_to_json(c.shadow).dump(2) + "\n");
      if (!report_path.empty()) write_output(report_path, c.report.to_json().dump(2) + "\n");
      if (!out_path.empty() && out_path != "-") {
        std::cout << "regions " << c.shadow.regions.size() << ", interior edges " << c.shadow.interior_edges.size()
                  << ", interior vertices " << c.shadow.interior_vertices.size() << ", boundary vertices "
                  << c.shadow.boundary_vertices.size() << ", boundary edges " << c.shadow.boundary_edges.size()
                  << '\n';
        for (const auto& m : c.report.merges) std::cout << "merge  " << m << '\n';
        for (const auto& f : c.report.fused_junctions) std::cout << "fused  " << f << '\n';
      }
      return kOk;
    }
    if (*sk) {
      const QRat v(kauffman_bracket(parse_diagram(read_input(input))));
      if (skein_format == "json") {
        std::cout << json{{"bracket", v.render()}, {"ord_i", v.ord_at_i().str()}}.dump(2) << '\n';
      } else {
        std::cout << "bracket     " << v.render() << "\nord_i       " << v.ord_at_i().str() << '\n';
      }
      return kOk;
    }
    if (*ex) {
      Shadow s;
      if (ex_name == "genus-knot") {
        s = genus_knot_shadow(ex_g, ex_colors.empty() ? 1 : ex_colors.at(0));
      } else if (ex_name == "surface") {
        s = surface_link_shadow(ex_chi, ex_colors.empty() ? std::vector<int>{1} : ex_colors);
      } else {
        const PlanarGraph k = ex_name == "circle" ? PlanarGraph::Circle
                              : ex_name == "theta" ? PlanarGraph::Theta
                                                   : PlanarGraph::Tet;
        s = atomic_cone(k, ex_colors);
      }
      const std::string text = shadow_to_json(s).dump(2) + "\n";
      if (ex_eval) return run_eval(s, fnv1a64(text), eo);
      write_output(out_path, text);
      return kOk;
    }
    if (*cf) return run_closed_form(cf_kind, cf_args);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
