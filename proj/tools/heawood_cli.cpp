// heawood: algebraic connectivity of small graphs, every implemented upper
// bound with provenance, surface tables, enumeration sweeps and family
// trends.
//
// Exit codes: 0 success/informative, 2 input error, 3 precondition violation,
// 4 resource cap.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heawood/heawood.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitResource = 4;

heawood::Graph load_graph(const std::string& spec) {
  std::ifstream file(spec);
  if (file.good()) {
    std::stringstream buf;
    buf << file.rdbuf();
    return heawood::parse_edge_list(buf.str());
  }
  // not a readable file: treat the argument as a graph6 record
  return heawood::graph6_decode(spec);
}

heawood::SurfaceContext parse_surface(const std::string& spec, const heawood::Graph& g) {
  if (spec == "auto") return heawood::SurfaceContext::detect(g);
  if (spec == "none") return heawood::SurfaceContext::none();
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("surface spec must be auto, none, orientable:h or nonorientable:k");
  const std::string kind = spec.substr(0, colon);
  const int genus = std::stoi(spec.substr(colon + 1));
  if (kind == "orientable") return heawood::SurfaceContext::given({true, genus});
  if (kind == "nonorientable") return heawood::SurfaceContext::given({false, genus});
  throw std::invalid_argument("surface kind must be orientable or nonorientable");
}

std::pair<int, int> parse_range(const std::string& spec) {
  const auto dots = spec.find("..");
  if (dots == std::string::npos) {
    const int v = std::stoi(spec);
    return {v, v};
  }
  return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
}

int cmd_analyze(const std::string& input, const std::string& surface_spec, bool json,
                double tol) {
  heawood::Graph g = load_graph(input);
  if (!heawood::is_connected(g)) {
    std::cerr << "error: graph is disconnected (" << heawood::component_count(g)
              << " components); bounds apply to connected graphs\n";
    return kExitPrecondition;
  }
  heawood::SurfaceContext ctx = parse_surface(surface_spec, g);
  heawood::VerdictOptions opt;
  opt.solver.value_tol = tol;
  heawood::BoundReport report = heawood::verdict(g, ctx, opt, input);
  std::cout << (json ? report.to_json() + "\n" : report.to_text());
  return kExitOk;
}

int cmd_surface(const std::string& chi_range, const std::string& genus_range, bool orientable,
                bool json) {
  std::vector<long long> chis;
  if (!genus_range.empty()) {
    auto [lo, hi] = parse_range(genus_range);
    if (lo > hi || lo < 0) throw std::invalid_argument("invalid genus range");
    for (int h = lo; h <= hi; ++h) {
      if (!orientable && h == 0) continue;  // no non-orientable genus 0
      chis.push_back(orientable ? 2 - 2LL * h : 2 - 1LL * h);
    }
  } else if (!chi_range.empty()) {
    auto [lo, hi] = parse_range(chi_range);
    if (lo > hi) throw std::invalid_argument("invalid chi range");
    if (hi > 2) throw std::invalid_argument("chi cannot exceed 2");
    for (long long chi = hi; chi >= lo; --chi) {
      if (orientable && (chi % 2 != 0)) continue;  // orientable surfaces have even chi
      chis.push_back(chi);
    }
  } else {
    throw std::invalid_argument("need --chi-range or --genus-range");
  }
  if (chis.empty()) throw std::invalid_argument("empty surface range");

  std::ostringstream out;
  if (json) out << "[";
  bool first = true;
  for (long long chi : chis) {
    heawood::Surface s{orientable,
                       static_cast<int>(orientable ? (2 - chi) / 2 : 2 - chi)};
    const long long h = heawood::heawood_number(chi);
    const bool has_cook = chi <= 1;
    const long long cook = has_cook ? heawood::cook_number(chi) : 0;
    const int kmax = heawood::maximal_complete_graph(s);
    const bool klein = s.is_klein_bottle();
    if (json) {
      out << (first ? "" : ",") << "{\"surface\":" << heawood::jsonio::quoted(s.name())
          << ",\"chi\":" << chi << ",\"heawood\":" << h
          << ",\"cook\":" << (has_cook ? std::to_string(cook) : "null")
          << ",\"max_complete\":" << kmax << ",\"cap\":" << (klein ? 6 : kmax)
          << (klein ? ",\"note\":\"cap 6 < H=7\"" : "") << "}";
    } else {
      out << s.name() << ": chi=" << chi << "  H=" << h
          << "  C=" << (has_cook ? std::to_string(cook) : "-") << "  K^gamma=K_" << kmax;
      if (klein) out << "  [cap 6 < H=7]";
      out << "\n";
    }
    first = false;
  }
  if (json) out << "]\n";
  std::cout << out.str();
  return kExitOk;
}

int cmd_sweep(const std::string& predicate, int max_n, const std::vector<std::string>& filters,
              int workers, bool json) {
  heawood::SweepOptions opt;
  opt.predicate = heawood::parse_predicate(predicate);
  opt.n_max = max_n;
  opt.filters = heawood::SweepFilters::parse(filters);
  opt.workers = workers;
  heawood::SweepReport report = heawood::run_sweep(opt);
  std::cout << (json ? report.to_json() + "\n" : report.to_text());
  if (!report.counterexamples.empty() && !json)
    std::cout << "*** review required: predicate violated on " << report.counterexamples.size()
              << " graph(s) ***\n";
  return kExitOk;
}

int cmd_trend(const std::string& family_name, const std::string& range, bool json) {
  auto [lo, hi] = parse_range(range);
  auto points = heawood::trend(family_name, lo, hi);
  if (json) {
    std::cout << heawood::trend_to_json(family_name, points) << "\n";
  } else {
    for (const auto& p : points)
      std::cout << p.n << " " << heawood::jsonio::real(p.a) << "\n";
  }
  return kExitOk;
}

int cmd_ramanujan(int degree, const std::string& input, bool json) {
  std::optional<long long> bound;
  std::string status = "ok";
  int d = degree;
  if (!input.empty()) {
    heawood::Graph g = load_graph(input);
    const auto reg = heawood::regular_degree(g);
    if (!reg) {
      status = "inapplicable: graph is not regular";
    } else if (!heawood::is_connected(g)) {
      status = "inapplicable: graph is disconnected";
    } else {
      d = *reg;
      const heawood::RamanujanCheck check = heawood::ramanujan_check(g);
      if (!check.ramanujan)
        status = "inapplicable: graph is not Ramanujan (|lambda| = " +
                 heawood::jsonio::real(check.max_other) + " > " +
                 heawood::jsonio::real(check.threshold) + ")";
      else if (d == g.vertex_count() - 1)
        status = "inapplicable: complete graph (d = n-1)";
      else if (check.boundary)
        status = "ok (boundary: nontrivial eigenvalue at the Ramanujan threshold)";
    }
  }
  if (status.rfind("inapplicable", 0) != 0) {
    bound = heawood::ramanujan_genus_lower_bound(d);
    if (!bound) status = "inapplicable: degree below 9, nothing can be concluded";
  }
  if (json) {
    std::cout << "{\"d\":" << d << ",\"genus_lower_bound\":"
              << (bound ? std::to_string(*bound) : "null") << ",\"status\":"
              << heawood::jsonio::quoted(status) << "}\n";
  } else if (bound) {
    std::cout << "degree " << d << ": orientable genus >= " << *bound;
    if (status != "ok") std::cout << "  [" << status << "]";
    std::cout << "\n";
  } else {
    std::cout << "degree " << d << ": " << status << "\n";
  }
  return kExitOk;
}

int cmd_family(const std::string& name, const std::vector<int>& params, const std::string& format) {
  heawood::Graph g = heawood::family(name, params);
  if (format == "g6")
    std::cout << heawood::graph6_encode(g) << "\n";
  else if (format == "edges")
    std::cout << heawood::to_edge_list(g);
  else
    throw std::invalid_argument("format must be edges or g6");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic connectivity bounds for graphs on surfaces"};
  app.require_subcommand(1);
  std::string output = "text";
  app.add_option("--output", output, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* analyze = app.add_subcommand("analyze", "bound report for one graph");
  std::string analyze_input, analyze_surface = "auto";
  double analyze_tol = 1e-10;
  analyze->add_option("graph", analyze_input, "edge-list file or graph6 string")->required();
  analyze->add_option("--surface", analyze_surface,
                      "surface context: auto, none, orientable:h, nonorientable:k");
  analyze->add_option("--tol", analyze_tol, "eigensolver tolerance");

  auto* surface = app.add_subcommand("surface", "Heawood/Cook/max-complete table");
  std::string chi_range, genus_range;
  bool orientable = true;
  surface->add_option("--chi-range", chi_range, "characteristic range a..b");
  surface->add_option("--genus-range", genus_range, "genus range a..b");
  surface->add_option("--orientable", orientable, "orientable surfaces (default true)");

  auto* sweep = app.add_subcommand("sweep", "check a predicate over all small graphs");
  std::string predicate;
  int max_n = 8, workers = 1;
  std::vector<std::string> filters;
  sweep->add_option("--predicate", predicate, "predicate id")->required();
  sweep->add_option("--max-n", max_n, "largest vertex count (<= 9)");
  sweep->add_option("--filters", filters, "planar bipartite regular cubic dmax<=K");
  sweep->add_option("--workers", workers, "worker threads (output is identical for any count)");

  auto* trendc = app.add_subcommand("trend", "a(G_n) along a sized family");
  std::string trend_family, trend_range;
  trendc->add_option("--family", trend_family, "family name")->required();
  trendc->add_option("--n", trend_range, "size range a..b")->required();

  auto* ramanujan = app.add_subcommand("ramanujan", "genus lower bound for Ramanujan graphs");
  int rd = 0;
  std::string rgraph;
  ramanujan->add_option("--d", rd, "degree (formula mode)");
  ramanujan->add_option("graph", rgraph, "edge-list file or graph6 string");

  auto* fam = app.add_subcommand("family", "print a named family");
  std::string fam_name, fam_format = "edges";
  std::vector<int> fam_params;
  fam->add_option("--name", fam_name, "family name")->required();
  fam->add_option("--param", fam_params, "family parameters");
  fam->add_option("--format", fam_format, "edges or g6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  const bool json = output == "json";
  try {
    if (*analyze) return cmd_analyze(analyze_input, analyze_surface, json, analyze_tol);
    if (*surface) return cmd_surface(chi_range, genus_range, orientable, json);
    if (*sweep) return cmd_sweep(predicate, max_n, filters, workers, json);
    if (*trendc) return cmd_trend(trend_family, trend_range, json);
    if (*ramanujan) {
      if (rgraph.empty() && rd == 0)
        throw std::invalid_argument("ramanujan needs --d or a graph argument");
      return cmd_ramanujan(rd, rgraph, json);
    }
    if (*fam) return cmd_family(fam_name, fam_params, fam_format);
  } catch (const heawood::resource_limit_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const heawood::precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
