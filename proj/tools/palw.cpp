// palw: command-line front end for the palindromic/commutator width oracles.
//
//   palw pw <group.json> [--notion word|group] [--lengths]
//   palw qh <element> [--group K.json] [--rank n] | palw qh --q J
//   palw decompose <element>
//   palw nilprod <factors.json>
//
// Global flags: --cap N (pair-state cap, env PALW_STATE_CAP), --pretty, --timing.
// Exit codes: 0 ok, 2 input error, 3 resource cap, 4 invariant breach.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "palw/decompose.hpp"
#include "palw/errors.hpp"
#include "palw/io.hpp"
#include "palw/nilprod.hpp"
#include "palw/pal_width.hpp"
#include "palw/wreath.hpp"

namespace {

using palw::json;

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitInvariant = 4;

json load_json(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw palw::InputError("cannot open '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw palw::InputError(std::string("JSON parse error: ") + e.what());
  }
}

struct Options {
  std::size_t cap = palw::kDefaultStateCap;
  bool pretty = false;
  bool timing = false;

  std::string group_path;
  std::string notion = "word";
  bool lengths = false;

  std::string element;
  std::string top_path;
  int rank = 2;
  std::int64_t q = 0;

  std::string factors_path;
};

json report(const std::string& command, const json& input, json result, json verified) {
  return json{{"command", command},
              {"input", input},
              {"input_digest", palw::digest(command + "\n" + input.dump())},
              {"result", std::move(result)},
              {"verified", std::move(verified)}};
}

json cmd_pw(const Options& opt) {
  const palw::GroupSpec spec = palw::parse_group_spec(load_json(opt.group_path));
  const palw::FiniteGroup group = palw::build_group(spec);
  const palw::Notion notion = palw::parse_notion(opt.notion);
  const palw::WidthReport r = palw::palindromic_width(group, notion, opt.cap);

  bool covered = true;
  int max_len = 0;
  for (int len : r.length) {
    covered = covered && len >= 0;
    max_len = std::max(max_len, len);
  }
  json verified{{"identity_length_zero", r.length[group.identity()] == 0},
                {"all_elements_covered", covered},
                {"width_is_max_length", max_len == r.width},
                {"layers_reach_order", r.layers.back() == group.order()}};
  json input{{"group", palw::to_json(spec)}, {"notion", palw::to_string(notion)}};
  return report("pw", input, palw::to_json(r, group, opt.lengths), verified);
}

json cmd_qh(const Options& opt) {
  palw::FiniteGroup top = opt.top_path.empty()
                              ? palw::sym3_fink()
                              : palw::build_group(palw::parse_group_spec(load_json(opt.top_path)));
  json top_spec = opt.top_path.empty() ? json{{"kind", "sym3_fink"}}
                                       : palw::to_json(palw::parse_group_spec(load_json(opt.top_path)));
  const palw::WreathGroup group(opt.rank, std::move(top));
  palw::WreathElement g;
  if (opt.q > 0) {
    if (!opt.element.empty()) throw palw::InputError("give either an element or --q, not both");
    g = palw::q_sequence(group, opt.q);
  } else {
    if (opt.element.empty()) throw palw::InputError("qh needs an element or --q J");
    g = group.parse(opt.element);
  }
  const std::int64_t d = palw::delta(g);
  const auto cert = palw::certify_cw_lower_bound(group, g);

  const std::int64_t abs_d = d < 0 ? -d : d;
  bool consistent = cert ? abs_d > palw::commutator_delta_bound(group.degree(), cert->lower_bound - 1)
                         : abs_d <= palw::commutator_delta_bound(group.degree(), 1);
  json verified{{"threshold_consistent", consistent},
                {"round_trip", group.parse(group.to_text(g)) == g}};
  json input{{"element", group.to_text(g)}, {"top", top_spec}, {"rank", opt.rank}};
  return report("qh", input, palw::to_json(group, cert, d), verified);
}

json cmd_decompose(const Options& opt) {
  const palw::WreathGroup group = palw::fink_wreath();
  const palw::WreathElement g = group.parse(opt.element);
  const palw::DecompositionCertificate cert = palw::decompose(g);
  // Recompute the flags from the emitted factors rather than trusting cert.
  const palw::DecompositionCertificate check = palw::verify_certificate(g, cert.factors);
  json verified{{"all_palindromic", check.all_palindromic},
                {"product_matches", check.product_matches},
                {"within_bound", check.within_bound},
                {"round_trip", group.parse(group.to_text(g)) == g}};
  json input{{"element", group.to_text(g)}};
  return report("decompose", input, palw::to_json(group, cert), verified);
}

json cmd_nilprod(const Options& opt) {
  const auto factors = palw::parse_abelian_list(load_json(opt.factors_path));
  const palw::NilpotentProduct product(factors);
  const palw::BoundReport bounds = palw::sandwich_report(product, palw::Notion::word, opt.cap);
  json result = palw::to_json(bounds);
  result["order"] = product.order();
  json central = json::array();
  for (std::size_t k = 0; k < product.factor_count(); ++k)
    central.push_back(product.centralizer(k).size());
  result["centralizer_orders"] = central;
  json input = json::array();
  for (const auto& f : factors) input.push_back(palw::to_json(f));
  json verified{{"sandwich", palw::check_sandwich(bounds)}};
  return report("nilprod", json{{"factors", input}}, result, verified);
}

std::size_t default_cap() {
  if (const char* env = std::getenv("PALW_STATE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "palw: ignoring invalid PALW_STATE_CAP='" << env << "'\n";
    }
  }
  return palw::kDefaultStateCap;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  opt.cap = default_cap();

  CLI::App app{"Palindromic and commutator width oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cap", opt.cap, "Pair-state cap for the BFS oracle (env PALW_STATE_CAP)");
  app.add_flag("--pretty", opt.pretty, "Indent JSON output");
  app.add_flag("--timing", opt.timing, "Include wall time (makes output non-deterministic)");

  auto* pw = app.add_subcommand("pw", "Exact palindromic width of a finite group");
  pw->add_option("group", opt.group_path, "Group spec JSON file (or inline JSON)")->required();
  pw->add_option("--notion", opt.notion, "word|group")->check(CLI::IsMember({"word", "group"}));
  pw->add_flag("--lengths", opt.lengths, "Emit per-element palindromic lengths");

  auto* qh = app.add_subcommand("qh", "Quasi-homomorphism value and commutator-length bound");
  qh->add_option("element", opt.element, "Wreath element \"[w1; ...; wl] k\"");
  qh->add_option("--group", opt.top_path, "Top group K spec (default: sym3_fink)");
  qh->add_option("--rank", opt.rank, "Free group rank n")->check(CLI::PositiveNumber);
  qh->add_option("--q", opt.q, "Use the element q_J instead of parsing one")
      ->check(CLI::PositiveNumber);

  auto* dec = app.add_subcommand("decompose", "Palindrome decomposition in F2 wr S3");
  dec->add_option("element", opt.element, "Wreath element \"[w1; ...; w6] k\"")->required();

  auto* nil = app.add_subcommand("nilprod", "Width sandwich for a 2-nilpotent product");
  nil->add_option("factors", opt.factors_path, "Abelian factor specs JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    json out;
    if (*pw) out = cmd_pw(opt);
    else if (*qh) out = cmd_qh(opt);
    else if (*dec) out = cmd_decompose(opt);
    else out = cmd_nilprod(opt);
    if (opt.timing)
      out["wall_time_ms"] = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    std::cout << (opt.pretty ? out.dump(2) : out.dump()) << '\n';
    return 0;
  } catch (const palw::InputError& e) {
    std::cerr << "palw: input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const palw::CapExceeded& e) {
    std::cerr << "palw: resource cap exceeded: " << e.what()
              << "\n  raise it with --cap or PALW_STATE_CAP\n";
    return kExitCap;
  } catch (const palw::InvariantBreach& e) {
    std::cerr << "palw: INVARIANT BREACH: " << e.what() << '\n';
    return kExitInvariant;
  }
}
