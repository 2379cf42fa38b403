// Command-line front end: exact symmetric group characters, skew module
// straightening, border strip enumeration, and the verification suites.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specht/specht.hpp"

namespace {

struct CliConfig {
  unsigned threads = specht::default_threads();
  std::string cache_dir = specht::default_cache_dir().string();
};

std::string signed_str(const specht::Int& v) {
  return (v > 0 ? "+" : "") + specht::to_string(v);
}

int cmd_char(const std::string& label_text, const std::string& type_text) {
  specht::Partition label = specht::Partition::parse(label_text);
  specht::Partition type = specht::Partition::parse(type_text);
  std::cout << specht::to_string(specht::mn_char(label, type)) << "\n";
  return 0;
}

int cmd_skew_char(const std::string& shape_text, const std::string& at_text) {
  specht::SkewShape shape = specht::SkewShape::parse(shape_text);
  specht::Int value;
  if (!at_text.empty() && at_text.front() == '(') {
    // explicit permutation: evaluate as a representing-matrix trace
    specht::Permutation p =
        specht::Permutation::from_cycles(at_text, shape.size());
    specht::StraightenCache cache;
    value = specht::skew_char_trace(shape, p, cache);
  } else {
    value = specht::skew_char(shape, specht::Partition::parse(at_text));
  }
  std::cout << specht::to_string(value) << "\n";
  return 0;
}

int cmd_straighten(const std::string& shape_text,
                   const std::string& tableau_text) {
  specht::SkewShape shape = specht::SkewShape::parse(shape_text);
  specht::SkewTableau t = specht::SkewTableau::parse(shape, tableau_text);
  specht::StraightenCache cache;
  specht::SpechtVector sv = specht::straighten(t, cache);
  for (const auto& [term, coeff] : sv.terms())
    std::cout << signed_str(coeff) << " " << term.str() << "\n";
  return 0;
}

int cmd_border_strips(const std::string& label_text, int k) {
  specht::Partition label = specht::Partition::parse(label_text);
  for (const auto& [mu, ht] : specht::border_strips(label, k))
    std::cout << mu.str() << " ht=" << ht << "\n";
  return 0;
}

int cmd_dim(const std::string& shape_text) {
  specht::SkewShape shape = specht::SkewShape::parse(shape_text);
  std::cout << specht::to_string(specht::dimension(shape)) << "\n";
  return 0;
}

int cmd_table(const CliConfig& cfg, int n,
              const std::vector<std::string>& checks,
              const std::string& format, int trace_limit) {
  namespace fs = std::filesystem;
  fs::path dir(cfg.cache_dir);
  std::optional<specht::CharacterTable> loaded = specht::load_table(dir, n);
  specht::CharacterTable table;
  if (loaded) {
    table = std::move(*loaded);
  } else {
    table = specht::char_table(n, cfg.threads, specht::global_mn_cache());
    try {
      specht::save_table(table, dir);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not persist table: " << e.what() << "\n";
    }
  }
  for (const std::string& check : checks) {
    if (check == "orthogonality") {
      if (!specht::rows_orthogonal(table) ||
          !specht::columns_orthogonal(table)) {
        std::cerr << "error: orthogonality check failed for n=" << n << "\n";
        return 1;
      }
    } else {  // "trace"
      if (n > trace_limit) {
        std::cerr << "error: trace check limited to n <= " << trace_limit
                  << " (raise with --trace-limit)\n";
        return 2;
      }
      specht::CharacterTable traced =
          specht::char_table_trace(n, cfg.threads);
      if (table.values != traced.values) {
        std::cerr << "error: trace check failed for n=" << n << "\n";
        return 1;
      }
    }
  }
  if (format == "json") {
    std::cout << specht::table_to_json(table).dump(1) << "\n";
  } else {
    std::cout << "label";
    for (const specht::Partition& c : table.classes)
      std::cout << "\t" << c.str();
    std::cout << "\n";
    for (std::size_t i = 0; i < table.labels.size(); ++i) {
      std::cout << table.labels[i].str();
      for (const specht::Int& v : table.values[i])
        std::cout << "\t" << specht::to_string(v);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_verify(const CliConfig& cfg, std::vector<std::string> names,
               int budget, const std::string& format) {
  if (names.empty())
    for (const specht::Suite& s : specht::suite_registry())
      names.push_back(s.name);
  std::vector<specht::SuiteReport> reports;
  bool all_ok = true;
  for (const std::string& name : names) {
    reports.push_back(specht::run_suite(name, budget, cfg.threads));
    all_ok = all_ok && reports.back().passed();
  }
  std::cout << (format == "json" ? specht::report_json(reports)
                                 : specht::report_text(reports));
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character computations for symmetric groups"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_option("--threads", cfg.threads, "worker thread count")
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir,
                 "character table cache directory")
      ->capture_default_str();

  std::string arg_label, arg_type, arg_shape, arg_at, arg_tableau;
  int arg_k = 0, arg_n = 0;

  CLI::App* c_char =
      app.add_subcommand("char", "irreducible character value");
  c_char->add_option("label", arg_label, "partition, e.g. 4,4,4")->required();
  c_char->add_option("type", arg_type, "cycle type, e.g. 5,5,2")->required();

  CLI::App* c_skew = app.add_subcommand(
      "skew-char", "skew module character value at a cycle type or at an "
                   "explicit permutation in cycle notation");
  c_skew->add_option("shape", arg_shape, "skew shape, e.g. 4,4,4/4,3")
      ->required();
  c_skew->add_option("at", arg_at, "cycle type 5,5,2 or permutation (1,2)(3,4)")
      ->required();

  CLI::App* c_str = app.add_subcommand(
      "straighten", "write a polytabloid over standard fillings");
  c_str->add_option("shape", arg_shape, "skew shape, e.g. 3,3,2")->required();
  c_str->add_option("tableau", arg_tableau,
                    "filling, rows joined by '/', e.g. 1,2,5/4,3,7/6,8")
      ->required();

  CLI::App* c_bs = app.add_subcommand(
      "border-strips", "removable border strips of one size with heights");
  c_bs->add_option("label", arg_label, "partition, e.g. 4,4,4")->required();
  c_bs->add_option("k", arg_k, "strip size")->required();

  CLI::App* c_dim =
      app.add_subcommand("dim", "number of standard fillings of a shape");
  c_dim->add_option("shape", arg_shape, "skew shape, e.g. 2,1,1/1")
      ->required();

  std::vector<std::string> arg_checks;
  std::string arg_format = "tsv";
  int arg_trace_limit = 8;
  CLI::App* c_table =
      app.add_subcommand("table", "full character table, cached on disk");
  c_table->add_option("n", arg_n, "group size")->required()
      ->check(CLI::NonNegativeNumber);
  c_table->add_option("--check", arg_checks, "validation to run")
      ->check(CLI::IsMember({"orthogonality", "trace"}));
  c_table->add_option("--format", arg_format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  c_table->add_option("--trace-limit", arg_trace_limit,
                      "largest n allowed for --check trace")
      ->capture_default_str();

  std::vector<std::string> arg_suites, arg_suite_opts;
  int arg_budget = -1;
  std::string arg_vformat = "text";
  CLI::App* c_verify = app.add_subcommand(
      "verify", "run verification suites (all when none are named)");
  c_verify->add_option("suites", arg_suites, "suite names");
  c_verify->add_option("--suite", arg_suite_opts, "suite name (repeatable)");
  c_verify->add_option("--budget", arg_budget,
                       "size cap override (default: per-suite)");
  c_verify->add_option("--format", arg_vformat, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // --threads / --cache-dir may also be given after the subcommand name
  for (CLI::App* sub : {c_char, c_skew, c_str, c_bs, c_dim, c_table, c_verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_char->parsed()) return cmd_char(arg_label, arg_type);
    if (c_skew->parsed()) return cmd_skew_char(arg_shape, arg_at);
    if (c_str->parsed()) return cmd_straighten(arg_shape, arg_tableau);
    if (c_bs->parsed()) return cmd_border_strips(arg_label, arg_k);
    if (c_dim->parsed()) return cmd_dim(arg_shape);
    if (c_table->parsed())
      return cmd_table(cfg, arg_n, arg_checks, arg_format, arg_trace_limit);
    if (c_verify->parsed()) {
      arg_suites.insert(arg_suites.end(), arg_suite_opts.begin(),
                        arg_suite_opts.end());
      return cmd_verify(cfg, arg_suites, arg_budget, arg_vformat);
    }
  } catch (const specht::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable: a subcommand is required
}
