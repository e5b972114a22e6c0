#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twconj/json_io.hpp"
#include "twconj/verify.hpp"

namespace {

using twconj::Json;

enum class Format { Table, JsonFmt, Csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::JsonFmt;
  if (s == "csv") return Format::Csv;
  if (s == "table") return Format::Table;
  throw CLI::ValidationError("--format must be json, csv or table");
}

Json load_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw twconj::Error(twconj::ErrorKind::InvalidInput,
                               "cannot open spec file '" + arg + "'");
  Json j;
  in >> j;
  return j;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_group_info(const twconj::GroupPtr& g, const std::string& source, Format format) {
  auto classes = twconj::conjugacy_classes(g);
  std::vector<int> class_sizes;
  for (const auto& c : classes) class_sizes.push_back(static_cast<int>(c.size()));
  int center_order = twconj::center(g).order();
  std::vector<std::string> gen_names;
  for (twconj::Elem e : g->generators()) gen_names.push_back(g->name_of(e));

  if (format == Format::JsonFmt) {
    Json j;
    j["source"] = source;
    j["order"] = g->order();
    j["abelian"] = g->is_abelian();
    j["center_order"] = center_order;
    j["conjugacy_class_count"] = classes.size();
    j["class_sizes"] = class_sizes;
    j["generators"] = g->generators();
    j["generator_names"] = gen_names;
    print_json(j);
    return;
  }
  if (format == Format::Csv) {
    std::cout << "source,order,abelian,center_order,conjugacy_class_count\n";
    std::cout << source << "," << g->order() << "," << (g->is_abelian() ? 1 : 0) << ","
              << center_order << "," << classes.size() << "\n";
    return;
  }
  std::cout << "group:    " << source << "\n";
  std::cout << "order:    " << g->order() << "\n";
  std::cout << "abelian:  " << (g->is_abelian() ? "yes" : "no") << "\n";
  std::cout << "center:   order " << center_order << "\n";
  std::cout << "classes:  " << classes.size() << " (sizes";
  for (int s : class_sizes) std::cout << " " << s;
  std::cout << ")\n";
  std::cout << "generators:";
  for (const auto& name : gen_names) std::cout << " " << name;
  std::cout << "\n";
}

void print_partition(const twconj::ReidemeisterPartition& p, Format format) {
  if (format == Format::JsonFmt) {
    print_json(twconj::partition_to_json(p));
    return;
  }
  if (format == Format::Csv) {
    std::cout << "class,representative,size\n";
    for (int c = 0; c < p.count(); ++c)
      std::cout << c << "," << p.representatives[c] << "," << p.classes[c].size() << "\n";
    return;
  }
  std::cout << "R(phi) = " << p.count() << "\n";
  for (int c = 0; c < p.count(); ++c) {
    std::cout << "  class " << c << " (rep " << p.group->name_of(p.representatives[c])
              << ", size " << p.classes[c].size() << "):";
    for (twconj::Elem x : p.classes[c]) std::cout << " " << x;
    std::cout << "\n";
  }
}

void print_spectrum(const twconj::Spectrum& s, Format format) {
  if (format == Format::JsonFmt) {
    print_json(twconj::spectrum_to_json(s));
  } else if (format == Format::Csv) {
    for (size_t i = 0; i < s.values().size(); ++i)
      std::cout << (i ? "," : "") << s.values()[i].str();
    std::cout << "\n";
  } else {
    std::cout << s.str() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted conjugacy toolkit for finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "table";
  app.add_option("--format", format_name, "output format: json, csv or table")
      ->envname("TWCONJ_FORMAT");
  int max_order = twconj::kDefaultOrderCap;
  app.add_option("--max-order", max_order, "order cap for constructed groups")
      ->envname("TWCONJ_MAX_ORDER");

  auto* info_cmd = app.add_subcommand("group", "group utilities");
  auto* info_sub = info_cmd->add_subcommand("info", "summary of a preset or Cayley-table file");
  std::string info_spec;
  info_sub->add_option("group", info_spec, "preset (e.g. cyclic:6) or JSON file")->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Reidemeister spectrum of a group");
  std::string spectrum_spec;
  spectrum_cmd->add_option("group", spectrum_spec)->required();

  auto* reid_cmd = app.add_subcommand("reidemeister", "twisted conjugacy classes of an endomorphism");
  std::string reid_group, reid_endo;
  reid_cmd->add_option("group", reid_group)->required();
  reid_cmd->add_option("--endo", reid_endo, "endo spec file or inline JSON")->required();

  auto* product_cmd = app.add_subcommand("product", "build a direct product and analyze an endomorphism");
  std::vector<std::string> product_groups;
  std::string product_endo;
  product_cmd->add_option("groups", product_groups, "factor specs")->required()->expected(-1);
  product_cmd->add_option("--endo", product_endo, "endo spec file or inline JSON");

  auto* verify_cmd = app.add_subcommand("verify", "machine-check a lemma against brute force");
  std::string lemma_id;
  verify_cmd->add_option("lemma", lemma_id, "lemma id; use 'list' to see all")->required();
  twconj::VerifyOptions vopt;
  bool exhaustive = false;
  verify_cmd->add_flag("--exhaustive", exhaustive, "exhaustive sweep where applicable");
  int samples = 0;
  verify_cmd->add_option("--samples", samples, "sample count for randomized sweeps");
  std::uint64_t seed = 0x5eed2024u;
  verify_cmd->add_option("--seed", seed, "seed for randomized sweeps");
  std::int64_t budget = twconj::kDefaultSearchBudget;
  verify_cmd->add_option("--budget", budget, "search budget in candidate nodes");
  int verify_max_order = 0;
  verify_cmd->add_option("--max-order", verify_max_order, "sweep order cap (driver default if 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Format format = parse_format(format_name);

    if (*info_sub) {
      twconj::GroupPtr g = twconj::parse_group_spec(info_spec, max_order);
      print_group_info(g, info_spec, format);
      return 0;
    }
    if (*spectrum_cmd) {
      twconj::GroupPtr g = twconj::parse_group_spec(spectrum_spec, max_order);
      print_spectrum(twconj::reidemeister_spectrum(g), format);
      return 0;
    }
    if (*reid_cmd) {
      twconj::GroupPtr g = twconj::parse_group_spec(reid_group, max_order);
      twconj::GroupHom endo = twconj::endo_from_spec_single(load_json_arg(reid_endo), g);
      print_partition(twconj::reidemeister_partition(g, endo), format);
      return 0;
    }
    if (*product_cmd) {
      std::vector<twconj::GroupPtr> factors;
      for (const auto& spec : product_groups)
        factors.push_back(twconj::parse_group_spec(spec, max_order));
      twconj::ProductGroup p = twconj::direct_product(factors, max_order);
      if (product_endo.empty()) {
        print_group_info(p.group, "product", format);
        return 0;
      }
      twconj::GroupHom endo = twconj::endo_from_spec(load_json_arg(product_endo), p);
      print_partition(twconj::reidemeister_partition(p.group, endo), format);
      return 0;
    }
    if (*verify_cmd) {
      if (lemma_id == "list") {
        for (const auto& id : twconj::verifier_ids()) std::cout << id << "\n";
        return 0;
      }
      vopt.exhaustive = exhaustive;
      vopt.samples = samples;
      vopt.seed = seed;
      vopt.budget = budget;
      vopt.max_order = verify_max_order;
      twconj::VerifyResult result = twconj::run_verifier(lemma_id, vopt);
      Json j;
      j["lemma"] = result.id;
      j["ok"] = result.ok;
      j["cases"] = result.cases;
      j["summary"] = result.summary;
      j["counterexample"] = result.counterexample;
      if (format == Format::JsonFmt) {
        print_json(j);
      } else {
        std::cout << (result.ok ? "VERIFIED " : "FAILED   ") << result.id << " (" << result.cases
                  << " cases): " << result.summary << "\n";
        if (!result.ok) print_json(result.counterexample);
      }
      return result.ok ? 0 : 1;
    }
  } catch (const twconj::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
