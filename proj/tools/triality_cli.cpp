// Command-line front end; every computation goes through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "triality/triality.h"

namespace {

using nlohmann::json;

constexpr int kExitParse = 2;

const std::map<std::string, std::string> kHelp{
    {"verify-triple", "check the 64 relations for a triple {g1,g2,g3}"},
    {"theta", "apply the triality automorphism (--power k)"},
    {"lift", "lift sigma_x sigma_y to Spin(8) from {x, y}"},
    {"center", "enumerate the center of Spin(8) and the kernels of rho_j"},
    {"trispin-check", "check the tri-spin identities on {t, spin}"},
    {"satake spin", "spin eigenvalues of a GSpinOdd parameter"},
    {"satake std", "standard eigenvalues"},
    {"satake halfspin", "half-spin eigenvalues (--sign + or -)"},
    {"satake embed", "torus embeddings: OddOdd, EvenEven, OddEvenToOdd, iota, nu, gspin4, gspin3"},
    {"satake theta-lift", "unramified theta lift (--m, optional --n, --q)"},
    {"satake g2", "G2 criterion for a PGSp6 parameter"},
    {"satake weights", "Siegel weights k1 k2 k3"},
    {"satake spinbar", "projective spin class, or equality of {c1, c2}"},
    {"arthur validate", "validate an Arthur parameter (--target-degree, --discrete)"},
    {"arthur eval", "Satake evaluation at primes (--primes)"},
    {"arthur spin-shape", "spin parameter of a Siegel shape"},
    {"arthur variant", "f1/f2 pullback shapes from a PGSp2 or PGSp4 source"},
    {"arthur remix", "before/after pairings of four GL2 constituents"},
    {"arthur tensor", "Rankin-Selberg tensor of sizes 2 and 4"},
    {"lfun factor", "local factor det(1 - c T) (--p, --rep)"},
    {"lfun gamma", "archimedean factor from weights (--k, --s)"},
    {"lfun euler", "truncated Euler product (--s, --cutoff)"},
    {"lfun epsilon", "root number sign of a parameter or shape"},
    {"lfun g2-identity", "compare the spin factor with (1 - T) times the std factor"},
};

struct Flags {
  std::map<std::string, std::string> values;
  std::vector<std::string> positional;
  bool generic = false, discrete = false, pretty = false;
  std::string in_path, inline_json;
};

void add_flags(CLI::App* app, Flags& f) {
  auto opt = [&](const std::string& name, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(name, [&f, key](const std::string& v) { f.values[key] = v; }, help);
  };
  opt("--mode", "mode", "scalar mode: rational, qhalf or complex");
  opt("--eps", "eps", "complex-mode tolerance");
  opt("--cutoff", "cutoff", "Euler product cutoff X");
  opt("--primes", "primes", "comma-separated primes");
  opt("--n", "n", "rank of the input parameter");
  opt("--m", "m", "target rank of the theta lift");
  opt("--q", "q", "residue field size as a scalar");
  opt("--sign", "sign", "half-spin sign, + or -");
  opt("--s", "s", "complex argument re,im");
  opt("--k", "k", "weights k1,k2,k3");
  opt("--p", "p", "prime");
  opt("--rep", "rep", "spin, std, halfspin+ or halfspin-");
  opt("--power", "power", "power of theta");
  opt("--beta", "beta", "eigenvalue bound exponent");
  opt("--target-degree", "target_degree", "declared target degree");
  opt("--j-t", "j_t", "scalar t used for the j_e checks");
  app->add_option("--in", f.in_path, "input JSON file, - for stdin");
  app->add_option("--inline", f.inline_json, "input JSON text");
  app->add_flag("--generic", f.generic, "parameter is generic");
  app->add_flag("--discrete", f.discrete, "parameter is discrete");
  app->add_flag("--pretty", f.pretty, "indent the output");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Builds the options document; throws std::invalid_argument on bad flags.
json options_json(const Flags& f) {
  json o = json::object();
  for (const auto& [k, v] : f.values) {
    if (k == "eps" || k == "beta") {
      o[k] = std::stod(v);
    } else if (k == "primes" || k == "k") {
      json a = json::array();
      for (const auto& item : split(v, ',')) a.push_back(std::stol(item));
      o[k] = a;
    } else {
      o[k] = v;
    }
  }
  if (!f.positional.empty()) {
    json a = json::array();
    for (const auto& item : f.positional) a.push_back(std::stol(item));
    o["k"] = a;
  }
  if (f.generic) o["generic"] = true;
  if (f.discrete) o["discrete"] = true;
  return o;
}

bool read_input(const Flags& f, std::string& out) {
  if (!f.inline_json.empty()) {
    out = f.inline_json;
    return true;
  }
  if (f.in_path.empty()) {
    out = "{}";
    return true;
  }
  std::stringstream ss;
  if (f.in_path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(f.in_path);
    if (!in) return false;
    ss << in.rdbuf();
  }
  out = ss.str();
  return true;
}

void print_usage_error(const std::string& message) {
  json err{{"schema", "v1"}, {"error", {{"code", "ParseError"}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact triality, Satake and L-factor computations"};
  app.require_subcommand(1);
  Flags flags;
  add_flags(&app, flags);

  // Leaf subcommands come from the library's own command table.
  std::map<std::string, CLI::App*> groups;
  std::map<const CLI::App*, std::pair<std::string, std::string>> leaves;
  for (const auto& line : split(tri_command_list(), '\n')) {
    const auto parts = split(line, ' ');
    const std::string cmd = parts[0];
    const std::string sub = parts.size() > 1 ? parts[1] : "";
    const auto help = kHelp.count(line) ? kHelp.at(line) : std::string();
    CLI::App* leaf = nullptr;
    if (sub.empty()) {
      leaf = app.add_subcommand(cmd, help);
    } else {
      if (!groups.count(cmd)) {
        groups[cmd] = app.add_subcommand(cmd, cmd + " subcommands");
        groups[cmd]->require_subcommand(1);
      }
      leaf = groups[cmd]->add_subcommand(sub, help);
    }
    add_flags(leaf, flags);
    if (line == "satake weights") leaf->add_option("weights", flags.positional, "k1 k2 k3");
    leaves[leaf] = {cmd, sub};
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_usage_error(e.what());
    return kExitParse;
  }

  const CLI::App* chosen = nullptr;
  for (const auto& [leaf, names] : leaves) {
    if (leaf->parsed()) chosen = leaf;
  }
  if (!chosen) {
    print_usage_error("no command given");
    return kExitParse;
  }
  const auto& [cmd, sub] = leaves.at(chosen);

  json opts;
  try {
    opts = options_json(flags);
  } catch (const std::exception&) {
    print_usage_error("malformed numeric flag");
    return kExitParse;
  }
  std::string input;
  if (!read_input(flags, input)) {
    print_usage_error("cannot read " + flags.in_path);
    return kExitParse;
  }

  std::unique_ptr<tri_context, decltype(&tri_context_free)> ctx(tri_context_new(), tri_context_free);
  char* out = nullptr;
  const tri_status st =
      tri_run(ctx.get(), cmd.c_str(), sub.empty() ? nullptr : sub.c_str(), input.c_str(), opts.dump().c_str(), &out);
  if (st != TRI_OK) {
    std::cerr << tri_last_error(ctx.get()) << "\n";
    return tri_status_exit_code(st);
  }
  std::string text(out);
  tri_string_free(out);
  if (flags.pretty) text = json::parse(text).dump(2);
  std::cout << text << "\n";
  return 0;
}
