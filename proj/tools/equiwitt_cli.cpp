#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "equiwitt/serial.hpp"

namespace {

using namespace equiwitt;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

struct CommonArgs {
  std::string group_file;
  int e = 1;
  std::optional<std::uint32_t> modulus;
  std::uint64_t seed = kMeataxeSeed;
};

std::pair<std::shared_ptr<const PermGroup>, Field> load_group_field(
    const CommonArgs& args) {
  auto group = group_from_json(load_json(args.group_file));
  Field f = Field::make(args.e, args.modulus);
  return {group, f};
}

int run_simples(const CommonArgs& args, const std::string& json_out) {
  auto [group, f] = load_group_field(args);
  Catalog cat = simple_catalog(group, f, {args.seed, 200});
  std::printf("%-4s %-5s %-9s %s\n", "id", "dim", "self-dual", "type");
  for (const SimpleClass& c : cat.simples)
    std::printf("%-4d %-5d %-9s %s\n", c.id, c.rep.dim,
                c.self_dual ? "yes" : "no", module_type_name(c.mtype));
  std::printf("s = %d self-dual classes\n", cat.s);
  if (!json_out.empty()) write_json(json_out, catalog_to_json(cat));
  return 0;
}

int run_witt(const CommonArgs& args, int samples,
             const std::string& json_out) {
  auto [group, f] = load_group_field(args);
  GroupWittDescription desc = describe(group, f, {args.seed, 200});
  TheoremReport report = verify_theorem(desc, samples, args.seed);
  std::printf("WQ(K,G) = C2^%d: rank %d = s(%d) + t(%d), %s\n", report.rank,
              report.rank, report.s, report.t,
              report.pass ? "PASS" : "FAIL");
  for (const CheckResult& c : report.checks)
    std::printf("  %-36s %-4s %8.1f ms\n", c.name.c_str(),
                c.pass ? "ok" : "FAIL", c.ms);
  std::printf("generators:");
  for (const LabeledForm& g : desc.generators)
    std::printf(" %s", g.label.c_str());
  std::printf("\n");
  if (!json_out.empty()) write_json(json_out, report_to_json(report, desc));
  return report.pass ? 0 : 4;
}

int run_class(const std::string& form_file, std::uint64_t seed, bool trace,
              const std::string& json_out) {
  EquivForm x = equivform_from_json(load_json(form_file), {seed, 200});
  GroupWittDescription desc =
      describe(x.rep.group, x.field(), {seed, 200});
  WittCoords coords = coordinates(desc, x);
  std::vector<ReductionStep> steps;
  EquivForm aniso = anisotropic_rep(x, SearchOrder::kForward, &steps);
  std::printf("dim %d -> anisotropic dim %d in %zu reduction steps\n",
              x.dim(), aniso.dim(), steps.size());
  std::printf("coords: c0 = [");
  for (std::size_t i = 0; i < coords.c0.size(); ++i)
    std::printf("%s%d", i ? " " : "", coords.c0[i]);
  std::printf("], a = %d, d = [", coords.a);
  for (std::size_t i = 0; i < coords.d.size(); ++i)
    std::printf("%s%d", i ? " " : "", coords.d[i]);
  std::printf("]\n");
  if (!json_out.empty()) {
    Json out{{"coords", coords_to_json(coords)},
             {"anisotropic", equivform_to_json(aniso)}};
    if (trace) out["transcript"] = transcript_to_json(steps);
    write_json(json_out, out);
  } else if (trace) {
    std::cout << transcript_to_json(steps).dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Witt groups of equivariant quadratic forms over GF(2^e)"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string json_out, form_file;
  int samples = 20;
  bool trace = false;
  std::uint32_t modulus_arg = 0;

  auto add_field_opts = [&](CLI::App* cmd) {
    cmd->add_option("--group", args.group_file, "group JSON file")
        ->required();
    cmd->add_option("--e", args.e, "field degree: K = GF(2^e)")->required();
    cmd->add_option("--modulus", modulus_arg,
                    "modulus polynomial bit pattern (default: smallest)");
    cmd->add_option("--seed", args.seed, "PRNG seed");
    cmd->add_option("--json", json_out, "write a JSON report to this file");
  };

  CLI::App* simples = app.add_subcommand("simples", "catalog of simple modules");
  add_field_opts(simples);
  CLI::App* witt = app.add_subcommand("witt", "Witt group rank and verification");
  add_field_opts(witt);
  witt->add_option("--samples", samples, "random spanning samples");
  CLI::App* cls = app.add_subcommand("class", "Witt class of a form");
  cls->add_option("--form", form_file, "EquivForm JSON file")->required();
  cls->add_option("--seed", args.seed, "PRNG seed");
  cls->add_option("--json", json_out, "write a JSON report to this file");
  cls->add_flag("--trace", trace, "emit the reduction transcript");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (simples->parsed()) {
      if (simples->count("--modulus")) args.modulus = modulus_arg;
      return run_simples(args, json_out);
    }
    if (witt->parsed()) {
      if (witt->count("--modulus")) args.modulus = modulus_arg;
      return run_witt(args, samples, json_out);
    }
    return run_class(form_file, args.seed, trace, json_out);
  } catch (const InvalidFormError& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness.empty()) {
      std::cerr << " (witness vector:";
      for (scalar_t v : e.witness) std::cerr << ' ' << v;
      std::cerr << ')';
    }
    std::cerr << '\n';
    return 5;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const VerifyError& e) {
    std::cerr << "internal verification failure: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
