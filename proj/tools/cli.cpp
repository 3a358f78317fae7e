#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>

#include "sl3web/annulus_webs.hpp"
#include "sl3web/decomposition.hpp"
#include "sl3web/global_coords.hpp"
#include "sl3web/json_io.hpp"
#include "sl3web/oracle.hpp"
#include "sl3web/pants_coords.hpp"

namespace sl3web::cli {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed:
    case ErrorKind::LengthMismatch:
    case ErrorKind::Overflow:
    case ErrorKind::BoxTooLarge:
      return 2;
    default:
      return 1;
  }
}

struct Outcome {
  int exit_code = 0;
  Json payload;
};

Outcome ok(Json j) { return {0, std::move(j)}; }

std::string read_text(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Malformed, "cannot open input file " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorKind::Malformed, "cannot open output file " + tmp.string());
    file << text;
    if (!file.flush()) throw Error(ErrorKind::Malformed, "failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ErrorKind::Malformed, "cannot move output into place: " + ec.message());
}

struct Options {
  std::string in;
  std::string out;
  std::string graph;
  std::string descriptor;
  std::string coords;
  std::optional<Int> genus;
  std::optional<Int> bound;
  std::optional<Int> n_bound;
  std::optional<Int> t_bound;
  std::optional<Int> h_bound;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

Json load(const std::string& path, std::istream& in) { return parse_json(read_text(path, in)); }

DecompositionGraph load_graph(const std::string& path, std::istream& in) {
  return validate_graph(from_json<DecompositionGraph>(load(path, in)));
}

Json membership(const char* set) { return Json{{"set", set}, {"member", true}}; }

Outcome pants_check(const Json& j) {
  if (j.is_object() && j.contains("x11")) {
    const auto x = from_json<ShearVector>(j);
    if (auto bad = lambda_violation(x)) {
      const auto name = std::string(PantsTuple::kNames[static_cast<std::size_t>(*bad)]);
      return {1, to_json(Error(ErrorKind::NotInLambda, "", name))};
    }
    return ok(membership("Lambda"));
  }
  const auto t = from_json<PantsTuple>(j);
  if (auto bad = image_violation(t)) {
    return {1, to_json(Error(ErrorKind::ImageViolation, std::string(to_string(*bad))))};
  }
  return ok(membership("image"));
}

Outcome oracle_outcome(const OracleReport& report, bool timing) {
  return {report.clean() ? 0 : 1, to_json(report, timing)};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Coordinates for non-elliptic SL3 webs on closed surfaces", "sl3web"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all", "Expand all help");

  Options o;
  app.add_option("--in", o.in, "Input JSON file ('-' for stdin, the default)");
  app.add_option("--out", o.out, "Write the JSON result to this file");
  app.add_flag("--timing", o.timing, "Include elapsed_ms in oracle reports");

  std::function<Outcome()> action;
  auto bind = [&](CLI::App* sub, std::function<Outcome()> fn) {
    sub->fallthrough();
    sub->callback([&action, fn = std::move(fn)] { action = fn; });
  };

  auto* pants = app.add_subcommand("pants", "Pair-of-pants coordinates");
  pants->require_subcommand(1);
  pants->fallthrough();
  bind(pants->add_subcommand("forward", "ShearVector -> PantsTuple"),
       [&] { return ok(to_json(forward(from_json<ShearVector>(load(o.in, in))))); });
  bind(pants->add_subcommand("invert", "PantsTuple -> ShearVector"),
       [&] { return ok(to_json(invert(from_json<PantsTuple>(load(o.in, in))))); });
  bind(pants->add_subcommand("check", "Lambda membership (ShearVector) or image membership "
                                      "(PantsTuple)"),
       [&] { return pants_check(load(o.in, in)); });

  auto* annulus = app.add_subcommand("annulus", "Braided webs in the annulus");
  annulus->require_subcommand(1);
  annulus->fallthrough();
  bind(annulus->add_subcommand("validate", "Validate a descriptor"),
       [&] { return ok(to_json(from_json<AnnulusDescriptor>(load(o.in, in)))); });
  bind(annulus->add_subcommand("canonical", "Canonical descriptor of a twist tuple"), [&] {
    return ok(to_json(canonical_descriptor(from_json<TwistTuple>(load(o.in, in)))));
  });

  auto* graph = app.add_subcommand("graph", "Pants decompositions");
  graph->require_subcommand(1);
  graph->fallthrough();
  bind(graph->add_subcommand("validate", "Validate a decomposition graph"),
       [&] { return ok(to_json(load_graph(o.in, in))); });
  auto* standard = graph->add_subcommand("standard", "Standard decomposition of a genus");
  standard->add_option("--genus", o.genus, "Genus (>= 2)")->required();
  bind(standard, [&] { return ok(to_json(standard_graph(*o.genus))); });

  auto* kappa_cmd = app.add_subcommand("kappa", "Global coordinate of a surface web descriptor");
  kappa_cmd->add_option("--graph", o.graph, "Decomposition graph JSON (must match the "
                                            "descriptor's own graph when both are given)");
  kappa_cmd->add_option("--descriptor", o.descriptor, "SurfaceWebDescriptor JSON")->required();
  bind(kappa_cmd, [&] {
    Json dj = load(o.descriptor, in);
    if (!o.graph.empty()) {
      const DecompositionGraph g = load_graph(o.graph, in);
      if (dj.is_object() && !dj.contains("graph")) {
        dj["graph"] = to_json(g);
      } else if (from_json<SurfaceWebDescriptor>(dj).graph != g) {
        throw Error(ErrorKind::Malformed, "descriptor graph differs from --graph");
      }
    }
    return ok(to_json(kappa(from_json<SurfaceWebDescriptor>(dj))));
  });

  auto* theta = app.add_subcommand("theta", "Theta membership of a global coordinate");
  theta->add_option("--graph", o.graph, "Decomposition graph JSON")->required();
  theta->add_option("--coords", o.coords, "GlobalCoordinate JSON")->required();
  bind(theta, [&]() -> Outcome {
    const DecompositionGraph g = load_graph(o.graph, in);
    const auto c = from_json<GlobalCoordinate>(load(o.coords, in));
    if (auto bad = theta_violation(g, c)) return {1, to_json(Error(ErrorKind::NotInTheta, *bad))};
    return ok(membership("Theta"));
  });

  auto* recon = app.add_subcommand("reconstruct", "Surface web descriptor from coordinates");
  recon->add_option("--graph", o.graph, "Decomposition graph JSON")->required();
  recon->add_option("--coords", o.coords, "GlobalCoordinate JSON")->required();
  bind(recon, [&] {
    const DecompositionGraph g = load_graph(o.graph, in);
    return ok(to_json(reconstruct(g, from_json<GlobalCoordinate>(load(o.coords, in)))));
  });

  auto* torus = app.add_subcommand("torus", "Closed torus coordinates");
  torus->require_subcommand(1);
  torus->fallthrough();
  bind(torus->add_subcommand("check", "Validate a torus coordinate"), [&] {
    const auto c = from_json<TorusCoordinate>(load(o.in, in));
    return ok(to_json(torus_kappa(c.n1, c.n2, c.t1, c.t2)));
  });
  bind(torus->add_subcommand("reconstruct", "Annulus web of a torus coordinate"), [&] {
    const auto c = from_json<TorusCoordinate>(load(o.in, in));
    return ok(to_json(torus_reconstruct(torus_kappa(c.n1, c.n2, c.t1, c.t2))));
  });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive verification runs");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--bound", o.bound, "Primary box bound");
    sub->add_option("--n-bound", o.n_bound, "Intersection-count bound");
    sub->add_option("--t-bound", o.t_bound, "Twist bound");
    sub->add_option("--h-bound", o.h_bound, "Height bound");
  };
  auto* oracle_pants = oracle->add_subcommand("pants", "Pants image and inverse");
  add_bounds(oracle_pants);
  bind(oracle_pants, [&] {
    BoxSpec box;
    box.shear_bound = o.bound;
    box.n_bound = o.n_bound;
    box.t_bound = o.t_bound;
    box.h_bound = o.h_bound;
    return oracle_outcome(verify_pants_image(box), o.timing);
  });
  auto* oracle_torus = oracle->add_subcommand("torus", "Torus image and round trip");
  add_bounds(oracle_torus);
  bind(oracle_torus, [&] {
    BoxSpec box;
    box.n_bound = o.n_bound ? o.n_bound : o.bound;
    box.t_bound = o.t_bound ? o.t_bound : o.bound;
    return oracle_outcome(verify_torus_image(box), o.timing);
  });
  auto* oracle_g2 = oracle->add_subcommand("genus2", "Genus-2 global round trip");
  add_bounds(oracle_g2);
  oracle_g2->add_option("--samples", o.samples, "Number of samples (default 10000)");
  oracle_g2->add_option("--seed", o.seed, "Sampling seed");
  bind(oracle_g2, [&] {
    Genus2Options opts;
    if (o.bound) opts.n_bound = opts.t_bound = *o.bound;
    if (o.n_bound) opts.n_bound = *o.n_bound;
    if (o.t_bound) opts.t_bound = *o.t_bound;
    if (o.h_bound) opts.h_bound = *o.h_bound;
    if (o.samples) opts.samples = *o.samples;
    if (o.seed) opts.seed = *o.seed;
    return oracle_outcome(verify_genus2(opts), o.timing);
  });

  CommandResult result;
  Outcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    outcome = action();
  } catch (const CLI::CallForHelp&) {
    result.payload = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.payload = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    outcome = {2, to_json(Error(ErrorKind::Malformed, e.what()))};
  } catch (const Error& e) {
    outcome = {exit_code_for(e.kind()), to_json(e)};
  } catch (const std::exception& e) {
    outcome = {1, Json{{"error", "Internal"}, {"detail", e.what()}}};
  }

  result.exit_code = outcome.exit_code;
  result.payload = outcome.payload.dump() + "\n";
  if (!o.out.empty()) {
    try {
      write_atomically(o.out, result.payload);
      result.out_path = o.out;
    } catch (const Error& e) {
      result.exit_code = 2;
      result.payload = to_json(e).dump() + "\n";
    }
  }
  return result;
}

}  // namespace sl3web::cli
