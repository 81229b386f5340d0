#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "edge_list.hpp"
#include "frames/errors.hpp"
#include "frames/field.hpp"
#include "frames/strata.hpp"
#include "frames/thresholds.hpp"
#include "frames/witness.hpp"

#ifndef FRAMES_VERSION
#define FRAMES_VERSION "0.0.0"
#endif

namespace frames::cli {

namespace {

using nlohmann::json;

struct Options {
  Int d = 0;
  Int n = 0;
  Int p = 0;
  Int q = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> prime;
  std::string format = "text";
  int trials = 8;
  std::string graph_path;
  std::optional<Int> lss_d;
  std::optional<Int> vertices;
  Int n_min = 2;
  Int n_max = 10;
  Int d_min = 1;
  Int d_max = 12;
};

struct Context {
  std::string command;
  json params;
  std::uint64_t seed = 0;
  PrimeField field;
  std::string format;
};

json to_json(StratumIndex s) { return {{"p", s.p}, {"q", s.q}}; }

std::string label(StratumIndex s) { return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")"; }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(std::to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(std::ostream& out, const PrimeField& f, const Matrix& m) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      width = std::max(width, std::to_string(f.to_signed(m.at(i, j))).size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << std::setw(static_cast<int>(width)) << f.to_signed(m.at(i, j));
    }
    out << "]\n";
  }
}

json invariants_json(const FrameInvariants& inv) {
  json cols = json::array();
  for (auto c : inv.anisotropic_columns) cols.push_back(c + 1);
  return {{"in_variety", inv.in_variety},
          {"rank", inv.rank},
          {"rk_ani", inv.rk_ani},
          {"rk_iso", inv.rk_iso},
          {"anisotropic_columns", cols}};
}

json certificate_json(const JacobianCertificate& c, bool with_point) {
  json j = {{"params", {{"d", c.params.d()}, {"n", c.params.n()}}},
            {"stratum", to_json(c.stratum)},
            {"criterion", std::string(to_string(c.criterion))},
            {"jacobian_rank", c.jacobian_rank},
            {"required_bound", c.required_bound},
            {"passed", c.passed}};
  if (with_point) j["point"] = matrix_json(c.point);
  return j;
}

void emit(std::ostream& out, const Context& ctx, json payload) {
  json doc = {{"tool_version", FRAMES_VERSION},
              {"command", ctx.command},
              {"params", ctx.params},
              {"seed", ctx.seed},
              {"prime", ctx.field.modulus()},
              {"payload", std::move(payload)}};
  out << doc.dump(2) << '\n';
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::uint64_t cell_seed(std::uint64_t seed, Int d, Int n, Int p, Int q) {
  std::uint64_t x = seed;
  for (Int v : {d, n, p, q}) {
    x += 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(v);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x ^= x >> 31;
  }
  return x;
}

void require_format(const Context& ctx, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (ctx.format == a) return;
  throw InvalidArgument("--format " + ctx.format + " is not supported by " + ctx.command);
}

int cmd_analyze(const Context& ctx, const Options& o, std::ostream& out) {
  require_format(ctx, {"text", "json"});
  const FrameSpaceParams params(o.d, o.n);
  const auto report = component_report(params);
  const auto maximum = maximize_sigma(params);
  const auto maximal = maximal_strata(params);
  const auto [omega1, omega2] = boundary(params);
  auto segment_of = [&](StratumIndex s) -> std::optional<std::string> {
    if (std::find(omega1.points.begin(), omega1.points.end(), s) != omega1.points.end()) return "omega1";
    if (std::find(omega2.points.begin(), omega2.points.end(), s) != omega2.points.end()) return "omega2";
    return std::nullopt;
  };
  auto is_maximal = [&](StratumIndex s) { return std::find(maximal.begin(), maximal.end(), s) != maximal.end(); };

  if (ctx.format == "json") {
    json components = json::array();
    for (const auto& c : report.components) {
      components.push_back({{"p", c.stratum.p}, {"q", c.stratum.q}, {"dimension", c.dimension}, {"count", c.count}});
    }
    json argmax = json::array();
    for (auto s : maximum.argmax) argmax.push_back(to_json(s));
    json strata = json::array();
    for (auto s : enumerate_domain(params)) {
      const auto seg = segment_of(s);
      strata.push_back({{"p", s.p},
                        {"q", s.q},
                        {"sigma", sigma(params, s)},
                        {"boundary", seg ? json(*seg) : json(nullptr)},
                        {"component_count", component_count(params, s)},
                        {"maximal", is_maximal(s)}});
    }
    emit(out, ctx,
         {{"components", components},
          {"total_count", report.total_count},
          {"variety_dimension", report.variety_dimension},
          {"is_irreducible", report.is_irreducible},
          {"principal_dimension", report.principal_dimension ? json(*report.principal_dimension) : json(nullptr)},
          {"maximum", {{"value", maximum.max_value}, {"argmax", argmax}}},
          {"strata", strata}});
    return kExitOk;
  }

  out << "V(d=" << o.d << ", n=" << o.n << ")\n";
  out << "dimension " << report.variety_dimension << ", " << report.total_count << " irreducible component"
      << (report.total_count == 1 ? "" : "s") << (report.is_irreducible ? " (irreducible)" : "") << '\n';
  if (report.principal_dimension) out << "principal component dimension " << *report.principal_dimension << '\n';
  out << "max sigma " << maximum.max_value << " at";
  for (auto s : maximum.argmax) out << ' ' << label(s);
  out << "\nmaximal strata:\n";
  for (const auto& c : report.components) {
    out << "  " << std::left << std::setw(9) << label(c.stratum) << std::right << " dim " << std::setw(4) << c.dimension
        << "  x" << c.count << '\n';
  }
  out << "strata:\n   p    q  sigma  boundary  components  maximal\n";
  for (auto s : enumerate_domain(params)) {
    const auto seg = segment_of(s);
    out << std::setw(4) << s.p << ' ' << std::setw(4) << s.q << ' ' << std::setw(6) << sigma(params, s) << "  "
        << std::left << std::setw(8) << seg.value_or("-") << "  " << std::setw(10) << component_count(params, s)
        << "  " << (is_maximal(s) ? "yes" : "") << std::right << '\n';
  }
  return kExitOk;
}

int cmd_classify(const Context& ctx, const Options& o, std::ostream& out) {
  require_format(ctx, {"text", "json"});
  const FrameSpaceParams params(o.d, o.n);
  const auto r = classify_ring(params);
  const auto t = thresholds(o.n);
  if (ctx.format == "json") {
    emit(out, ctx,
         {{"complete_intersection", r.complete_intersection},
          {"gorenstein", r.gorenstein},
          {"cohen_macaulay", r.cohen_macaulay},
          {"equidimensional", r.equidimensional},
          {"domain", r.domain},
          {"normal_domain", r.normal_domain},
          {"ufd", std::string(to_string(r.ufd))},
          {"reduced", std::string(to_string(r.reduced))},
          {"thresholds", {{"d_ci", t.d_ci}, {"d_prime", t.d_prime}, {"d_ufd", t.d_ufd}}},
          {"justifications", r.justifications}});
    return kExitOk;
  }
  out << "R(d=" << o.d << ", n=" << o.n << ")\n";
  const std::pair<const char*, std::string> rows[] = {
      {"complete intersection", yes_no(r.complete_intersection)},
      {"gorenstein", yes_no(r.gorenstein)},
      {"cohen-macaulay", yes_no(r.cohen_macaulay)},
      {"equidimensional", yes_no(r.equidimensional)},
      {"domain", yes_no(r.domain)},
      {"normal domain", yes_no(r.normal_domain)},
      {"factorial", std::string(to_string(r.ufd))},
      {"reduced", std::string(to_string(r.reduced))},
  };
  for (const auto& [name, value] : rows) out << "  " << std::left << std::setw(22) << name << value << '\n';
  out << std::right << "thresholds: D_CI=" << t.d_ci << " D_prime=" << t.d_prime << " D_UFD=" << t.d_ufd << '\n';
  for (const auto& j : r.justifications) out << "  - " << j << '\n';
  return kExitOk;
}

int cmd_witness(const Context& ctx, const Options& o, std::ostream& out) {
  require_format(ctx, {"text", "json"});
  const FrameSpaceParams params(o.d, o.n);
  const StratumIndex s{o.p, o.q};
  if (!in_domain(params, s)) throw DomainError("stratum " + label(s) + " is outside the domain");
  const bool boundary_stratum = on_boundary(params, s);
  JacobianCertificate cert =
      boundary_stratum ? constructive_smooth_witness(ctx.field, params, s, ctx.seed, o.trials)
                       : certify_full_rank(ctx.field, params, sample_stratum_point(ctx.field, params, s, ctx.seed));
  const auto inv = frame_invariants(ctx.field, cert.point);
  const char* construction = boundary_stratum ? "boundary-chain" : "stratum-sample";

  if (ctx.format == "json") {
    emit(out, ctx,
         {{"stratum", to_json(s)},
          {"on_boundary", boundary_stratum},
          {"construction", construction},
          {"nu", std::to_string(ctx.field.nu())},
          {"point", matrix_json(cert.point)},
          {"invariants", invariants_json(inv)},
          {"certificates", json::array({certificate_json(cert, false)})}});
  } else {
    out << "stratum " << label(s) << " in V(d=" << o.d << ", n=" << o.n << ")"
        << (boundary_stratum ? ", on the boundary" : ", off the boundary") << '\n';
    out << "construction " << construction << ", nu = " << ctx.field.nu() << " mod " << ctx.field.modulus() << '\n';
    out << "point (signed residues):\n";
    print_matrix(out, ctx.field, cert.point);
    out << "invariants: rank " << inv.rank << ", rk_ani " << inv.rk_ani << ", rk_iso " << inv.rk_iso << '\n';
    out << "certificate (" << to_string(cert.criterion) << "): jacobian rank " << cert.jacobian_rank << ", required "
        << cert.required_bound << ", " << (cert.passed ? "passed" : "FAILED") << '\n';
  }
  return cert.passed ? kExitOk : kExitCertificateFailed;
}

int cmd_lss(const Context& ctx, const Options& o, std::ostream& out) {
  require_format(ctx, {"text", "json"});
  std::ifstream file(o.graph_path);
  if (!file) throw InvalidArgument("cannot read edge list '" + o.graph_path + "'");
  const auto graph = parse_edge_list(file, o.vertices);
  const auto t = thresholds(graph.vertex_count);
  const json minimal = {{"ci", t.d_ci}, {"prime", t.d_prime}, {"ufd", t.d_ufd}};

  if (!o.lss_d) {
    if (ctx.format == "json") {
      emit(out, ctx,
           {{"vertex_count", graph.vertex_count},
            {"edge_count", static_cast<Int>(graph.edges.size())},
            {"minimal_d", minimal}});
    } else {
      out << "graph: " << graph.vertex_count << " vertices, " << graph.edges.size() << " edges\n";
      out << "  radical complete intersection for d >= " << t.d_ci << '\n';
      out << "  normal domain for d >= " << t.d_prime << '\n';
      out << "  factorial for d >= " << t.d_ufd << '\n';
    }
    return kExitOk;
  }

  const auto c = certify_lss(graph.vertex_count, graph.edges, *o.lss_d);
  if (ctx.format == "json") {
    emit(out, ctx,
         {{"vertex_count", c.vertex_count},
          {"edge_count", c.edge_count},
          {"d", c.d},
          {"radical_ci", c.radical_ci},
          {"normal_domain", c.normal_domain},
          {"ufd", c.ufd},
          {"minimal_d", minimal}});
  } else {
    out << "graph: " << c.vertex_count << " vertices, " << c.edge_count << " edges, d = " << c.d << '\n';
    out << "  radical complete intersection  " << yes_no(c.radical_ci) << "  (d >= " << t.d_ci << ")\n";
    out << "  normal domain                  " << yes_no(c.normal_domain) << "  (d >= " << t.d_prime << ")\n";
    out << "  factorial                      " << yes_no(c.ufd) << "  (d >= " << t.d_ufd << ")\n";
  }
  return kExitOk;
}

int cmd_poset(const Context& ctx, const Options& o, std::ostream& out) {
  const FrameSpaceParams params(o.d, o.n);
  const auto points = enumerate_domain(params);
  const auto maximal = maximal_strata(params);
  auto is_maximal = [&](StratumIndex s) { return std::find(maximal.begin(), maximal.end(), s) != maximal.end(); };

  std::vector<PosetVerdict> below;
  std::vector<PosetVerdict> unknown;
  for (auto lower : points) {
    for (auto upper : points) {
      if (lower == upper) continue;
      const auto v = poset_compare(params, lower, upper);
      if (v.relation == PosetRelation::Unknown) {
        unknown.push_back(v);
      } else if (v.relation == PosetRelation::Below) {
        const bool step = (upper.p == lower.p + 1 && upper.q == lower.q) ||
                          (upper.p == lower.p && upper.q == lower.q + 1);
        if (step || v.reason == PosetReason::DichotomyToPrincipal) below.push_back(v);
      }
    }
  }

  auto node_id = [](StratumIndex s) { return "s" + std::to_string(s.p) + "_" + std::to_string(s.q); };
  if (ctx.format == "dot") {
    out << "digraph strata_d" << o.d << "_n" << o.n << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (auto s : points) {
      out << "  " << node_id(s) << " [label=\"" << s.p << ',' << s.q << " | " << sigma(params, s) << '"';
      if (is_maximal(s)) out << ", style=filled, fillcolor=gold, penwidth=2";
      out << "];\n";
    }
    for (const auto& v : below) {
      out << "  " << node_id(v.lower) << " -> " << node_id(v.upper);
      if (v.reason == PosetReason::DichotomyToPrincipal) out << " [style=dashed]";
      out << ";\n";
    }
    out << "  // unknown pairs (lower, upper): " << unknown.size() << '\n';
    for (const auto& v : unknown) out << "  // unknown " << label(v.lower) << " " << label(v.upper) << '\n';
    out << "}\n";
    return kExitOk;
  }
  if (ctx.format == "json") {
    json nodes = json::array();
    for (auto s : points) {
      nodes.push_back({{"p", s.p}, {"q", s.q}, {"dimension", sigma(params, s)}, {"maximal", is_maximal(s)}});
    }
    json edges = json::array();
    for (const auto& v : below) {
      edges.push_back({{"lower", to_json(v.lower)}, {"upper", to_json(v.upper)}, {"reason", to_string(v.reason)}});
    }
    json open = json::array();
    for (const auto& v : unknown) open.push_back({{"lower", to_json(v.lower)}, {"upper", to_json(v.upper)}});
    emit(out, ctx, {{"nodes", nodes}, {"below", edges}, {"unknown", open}});
    return kExitOk;
  }
  out << "strata order for V(d=" << o.d << ", n=" << o.n << "): " << points.size() << " strata, " << below.size()
      << " cover relations, " << unknown.size() << " undecided pairs\n";
  out << "maximal:";
  for (auto s : maximal) out << ' ' << label(s);
  out << '\n';
  for (const auto& v : below) out << "  " << label(v.lower) << " < " << label(v.upper) << "  " << to_string(v.reason) << '\n';
  for (const auto& v : unknown) out << "  " << label(v.lower) << " ? " << label(v.upper) << '\n';
  return kExitOk;
}

int cmd_certify_grid(const Context& ctx, const Options& o, std::ostream& out) {
  require_format(ctx, {"text", "json"});
  if (o.n_min < 2 || o.n_max < o.n_min || o.d_min < 1 || o.d_max < o.d_min) {
    throw InvalidArgument("grid bounds must satisfy 2 <= n-min <= n-max and 1 <= d-min <= d-max");
  }
  json cells = json::array();
  Int total = 0;
  Int failed = 0;
  std::ostringstream text;
  for (Int n = o.n_min; n <= o.n_max; ++n) {
    for (Int d = o.d_min; d <= o.d_max; ++d) {
      const FrameSpaceParams params(d, n);
      for (auto s : boundary_points(params)) {
        const auto cert = constructive_smooth_witness(ctx.field, params, s, cell_seed(ctx.seed, d, n, s.p, s.q), o.trials);
        ++total;
        if (!cert.passed) ++failed;
        cells.push_back(certificate_json(cert, false));
        text << std::setw(4) << d << std::setw(4) << n << "  " << std::left << std::setw(8) << label(s) << std::right
             << " rank " << std::setw(4) << cert.jacobian_rank << " >= " << std::setw(4) << cert.required_bound << "  "
             << (cert.passed ? "ok" : "FAILED") << '\n';
      }
    }
  }
  if (ctx.format == "json") {
    emit(out, ctx, {{"total", total}, {"failed", failed}, {"certificates", cells}});
  } else {
    out << "   d   n  stratum\n" << text.str();
    out << total - failed << "/" << total << " boundary strata certified smooth\n";
  }
  return failed == 0 ? kExitOk : kExitCertificateFailed;
}

std::uint64_t parse_prime_env(const std::string& text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("FRAMES_PRIME='" + text + "' is not an unsigned integer");
  }
  return value;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Orthogonal frame varieties: strata, thresholds and smoothness certificates", "frames"};
  app.set_version_flag("--version", FRAMES_VERSION);
  app.require_subcommand(1);
  Options o;

  auto add_dn = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "ambient dimension d >= 1")->required();
    sub->add_option("--n", o.n, "frame length n >= 2")->required();
  };
  auto add_common = [&](CLI::App* sub, bool dot) {
    std::vector<std::string> formats{"text", "json"};
    if (dot) formats.emplace_back("dot");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_option("--prime", o.prime, "field modulus, prime and 1 mod 4 (default 998244353, env FRAMES_PRIME)");
  };

  auto* analyze = app.add_subcommand("analyze", "strata, dimensions and irreducible components");
  add_dn(analyze);
  add_common(analyze, false);

  auto* classify = app.add_subcommand("classify", "ring-theoretic properties from the degree thresholds");
  add_dn(classify);
  add_common(classify, false);

  auto* witness = app.add_subcommand("witness", "explicit point of a stratum with a Jacobian certificate");
  add_dn(witness);
  witness->add_option("--p", o.p, "anisotropic rank")->required();
  witness->add_option("--q", o.q, "isotropic rank")->required();
  witness->add_option("--trials", o.trials, "random draws per certificate")->check(CLI::PositiveNumber);
  add_common(witness, false);

  auto* lss = app.add_subcommand("lss", "threshold certificate for the graph ideal of an edge list");
  lss->add_option("graph", o.graph_path, "edge-list file")->required();
  lss->add_option("--d", o.lss_d, "dimension to certify; omit for the minimal-d table");
  lss->add_option("--vertices", o.vertices, "vertex count (default: largest label)");
  add_common(lss, false);

  auto* poset = app.add_subcommand("poset", "known degeneration relations between strata");
  add_dn(poset);
  add_common(poset, true);

  auto* grid = app.add_subcommand("certify-grid", "constructive smoothness certificates on every boundary stratum");
  grid->add_option("--n-min", o.n_min)->capture_default_str();
  grid->add_option("--n-max", o.n_max)->capture_default_str();
  grid->add_option("--d-min", o.d_min)->capture_default_str();
  grid->add_option("--d-max", o.d_max)->capture_default_str();
  grid->add_option("--trials", o.trials, "random draws per certificate")->check(CLI::PositiveNumber);
  add_common(grid, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << FRAMES_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::uint64_t prime = kDefaultPrime;
    if (o.prime) {
      prime = *o.prime;
    } else if (env.frames_prime) {
      prime = parse_prime_env(*env.frames_prime);
    }
    CLI::App* sub = app.get_subcommands().front();
    Context ctx{sub->get_name(), json::object(), o.seed, PrimeField(prime), o.format};
    if (sub == lss) {
      ctx.params = {{"graph", o.graph_path}};
      if (o.lss_d) ctx.params["d"] = *o.lss_d;
      if (o.vertices) ctx.params["vertices"] = *o.vertices;
      return cmd_lss(ctx, o, out);
    }
    if (sub == grid) {
      ctx.params = {{"n_min", o.n_min}, {"n_max", o.n_max}, {"d_min", o.d_min}, {"d_max", o.d_max}, {"trials", o.trials}};
      return cmd_certify_grid(ctx, o, out);
    }
    ctx.params = {{"d", o.d}, {"n", o.n}};
    if (sub == analyze) return cmd_analyze(ctx, o, out);
    if (sub == classify) return cmd_classify(ctx, o, out);
    if (sub == poset) return cmd_poset(ctx, o, out);
    ctx.params["p"] = o.p;
    ctx.params["q"] = o.q;
    ctx.params["trials"] = o.trials;
    return cmd_witness(ctx, o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace frames::cli
