// monochrome: command-line front end over the C API. Every command prints one
// JSON document on stdout; diagnostics go to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mono/mono.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

bool pretty = false;

std::string read_all(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

// One rational per line; '#' starts a comment.
std::vector<std::string> read_terms(const std::string& path) {
  std::vector<std::string> terms;
  std::istringstream in(read_all(path));
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    terms.push_back(line.substr(first, last - first + 1));
  }
  return terms;
}

int finish(mc_status status, mc_document* doc) {
  if (doc != nullptr) {
    std::fputs(mc_document_json(doc, pretty ? 1 : 0), stdout);
    std::fputc('\n', stdout);
    mc_document_free(doc);
  }
  if (status == MC_OK) return kExitOk;
  std::fprintf(stderr, "monochrome: %s: %s\n", mc_status_string(status), mc_last_error());
  switch (status) {
    case MC_BUDGET_EXHAUSTED: return kExitBudget;
    case MC_INTERNAL:
    case MC_NO_MEMORY: return kExitFailure;
    default: return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colourings, digit expansions and monochromatic sums-and-products search."};
  app.require_subcommand(1);
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  const std::vector<std::string> colourings{"phi", "bigphi", "psi", "psiprime", "theta",
                                            "nu", "mu", "alpha", "const"};
  const std::vector<std::string> modes{"pairwise", "finite"};

  std::string colouring = "nu", mode = "pairwise", value, file;
  std::size_t base_index = 0;

  auto* colour = app.add_subcommand("colour", "Colour of one value");
  colour->add_option("--colouring", colouring, "Colouring id")->check(CLI::IsMember(colourings));
  colour->add_option("value", value, "Rational p or p/q; integer pair a,b for bigphi, psi, psiprime")
      ->required();

  auto* expand = app.add_subcommand("expand", "Primorial-base digit expansion");
  expand->add_option("--base-index", base_index, "n for base P_n; 0 picks the minimal base");
  expand->add_option("value", value, "Rational p or p/q")->required();

  auto* check = app.add_subcommand("check", "Certificate for a sequence read from a file or stdin");
  check->add_option("--colouring", colouring, "Colouring id")->check(CLI::IsMember(colourings));
  check->add_option("--mode", mode, "Combination set")->check(CLI::IsMember(modes));
  check->add_option("file", file, "Input file, one rational per line; '-' or absent for stdin");

  mc_search_options search_opt;
  mc_search_options_init(&search_opt);
  std::string search_colouring = "theta", search_mode = "pairwise";
  std::string numerator_bound = search_opt.numerator_bound, denominator_bound = search_opt.denominator_bound;
  bool integers_only = false;
  auto* search = app.add_subcommand("search", "Bounded search for monochromatic configurations");
  search->add_option("--colouring", search_colouring, "Colouring id")->check(CLI::IsMember(colourings));
  search->add_option("--mode", search_mode, "Combination set")->check(CLI::IsMember(modes));
  search->add_option("--target", search_opt.target, "Configuration size to report")->capture_default_str();
  search->add_option("--budget", search_opt.budget, "Node limit")->capture_default_str();
  search->add_option("--workers", search_opt.workers, "Worker threads; 0 uses every core");
  search->add_option("--numerator-bound", numerator_bound, "Largest numerator")->capture_default_str();
  search->add_option("--denominator-bound", denominator_bound, "Largest denominator")->capture_default_str();
  search->add_option("--prime-index", search_opt.prime_index_bound, "Denominators use the first k primes")
      ->capture_default_str();
  search->add_flag("--integers-only", integers_only, "Restrict the universe to naturals");

  mc_construct_options construct_opt;
  mc_construct_options_init(&construct_opt);
  bool products_only = false;
  auto* construct = app.add_subcommand("construct", "Terms with monochromatic finite sums and products");
  construct->add_option("--terms", construct_opt.terms, "Number of terms m")->capture_default_str();
  construct->add_option("--budget", construct_opt.budget, "Node limit")->capture_default_str();
  construct->add_option("--workers", construct_opt.workers, "Worker threads; 0 uses every core");
  construct->add_option("--pool", construct_opt.pool, "Reciprocal-prime base terms")->capture_default_str();
  construct->add_flag("--products-only", products_only, "Stop at the product subsystem");

  std::uint64_t seed = 1, samples = 10'000;
  auto* properties = app.add_subcommand("properties", "Seeded checks of the digit laws");
  properties->add_option("--seed", seed, "Random seed")->capture_default_str();
  properties->add_option("--samples", samples, "Samples per law")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Recompute a certificate document");
  validate->add_option("file", file, "Certificate JSON; '-' or absent for stdin");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "monochrome: usage: %s\n", e.what());
    return kExitUsage;
  }

  mc_document* doc = nullptr;
  mc_status status = MC_INVALID_ARGUMENT;
  try {
    if (*colour) {
      status = mc_colour(colouring.c_str(), value.c_str(), &doc);
    } else if (*expand) {
      status = mc_expand(value.c_str(), base_index, &doc);
    } else if (*check) {
      const auto terms = read_terms(file);
      std::vector<const char*> ptrs;
      for (const auto& t : terms) ptrs.push_back(t.c_str());
      status = mc_check(colouring.c_str(), mode.c_str(), ptrs.data(), ptrs.size(), &doc);
    } else if (*search) {
      search_opt.colouring = search_colouring.c_str();
      search_opt.mode = search_mode.c_str();
      search_opt.numerator_bound = numerator_bound.c_str();
      search_opt.denominator_bound = denominator_bound.c_str();
      search_opt.integers_only = integers_only ? 1 : 0;
      status = mc_search(&search_opt, &doc);
    } else if (*construct) {
      construct_opt.products_only = products_only ? 1 : 0;
      status = mc_construct(&construct_opt, &doc);
    } else if (*properties) {
      status = mc_properties(seed, samples, &doc);
    } else if (*validate) {
      status = mc_validate(read_all(file).c_str(), &doc);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "monochrome: %s\n", e.what());
    return kExitUsage;
  }
  return finish(status, doc);
}
