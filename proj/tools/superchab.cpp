#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "superchab/commands.hpp"
#include "superchab/errors.hpp"

using namespace superchab;

namespace {

struct Options {
  std::string input;
  std::optional<long> m, rank, prime, precision, height;
  std::string f;
  bool json = false;
  std::string batch;
};

// Flags are appended as statements, so they override keys already present in the text.
std::string compose(const std::string& base, const Options& o) {
  std::string text = base;
  auto add = [&](const std::string& stmt) { text += (text.empty() ? "" : "; ") + stmt; };
  if (o.m) add("m=" + std::to_string(*o.m));
  if (!o.f.empty()) add("f=" + o.f);
  if (o.rank) add("rank=" + std::to_string(*o.rank));
  if (o.prime) add("prime=" + std::to_string(*o.prime));
  if (o.precision) add("precision=" + std::to_string(*o.precision));
  if (o.height) add("height=" + std::to_string(*o.height));
  return text;
}

int emit(const CommandResult& r, bool json) {
  if (json) std::cout << r.json.dump() << "\n";
  if (r.exit_code != kExitOk) {
    std::cerr << r.summary << "\n";
  } else if (!json) {
    std::cout << r.summary << "\n";
  }
  return r.exit_code;
}

int run(const std::string& command, const Options& o) {
  if (!o.batch.empty()) {
    std::ifstream file(o.batch);
    if (!file) {
      std::cerr << "cannot open batch file " << o.batch << "\n";
      return kExitParse;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(file, line);) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back(compose(line, o));
    }
    int code = kExitOk;
    for (const auto& r : run_batch(command, lines)) {
      std::cout << r.json.dump() << "\n";
      if (r.exit_code != kExitOk) std::cerr << r.summary << "\n";
      code = std::max(code, r.exit_code);
    }
    return code;
  }
  if (command == "prime" && o.input.empty() && o.f.empty()) {
    if (!o.m) {
      std::cerr << "prime needs --m\n";
      return kExitParse;
    }
    CurveInput in;
    in.m = *o.m;
    try {
      return emit(run_command(command, in), o.json);
    } catch (const DomainError& e) {
      std::cerr << e.what() << "\n";
      return kExitHypothesis;
    }
  }
  return emit(run_text(command, compose(o.input, o)), o.json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective Chabauty toolkit for superelliptic curves y^m = f(x)"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> descriptions{
      {"genus", "Riemann-Hurwitz genus and hypothesis check"},
      {"prime", "least prime p = 1 mod m and the exponential cap"},
      {"bound", "point-count bounds (needs a user-asserted rank)"},
      {"analyze", "residue-annulus geometry and charts over Q_p"},
      {"search", "rational points of bounded height"},
      {"verify", "search and compare against the closed-form bound"}};
  std::string chosen;
  for (const auto& [name, help] : descriptions) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "curve text, e.g. 'm=3; f=[1,0,0,0,1]'");
    sub->add_option("--m", o.m, "exponent m");
    sub->add_option("--f", o.f, "f as [a0,...,ad] or prod[(theta,n),...]; c=<q>");
    sub->add_option("--rank", o.rank, "user-asserted Mordell-Weil rank");
    sub->add_option("--prime", o.prime, "prime override (must be 1 mod m)");
    sub->add_option("--precision", o.precision, "p-adic working precision");
    sub->add_option("--height", o.height, "search height bound");
    sub->add_flag("--json", o.json, "emit JSON on stdout");
    sub->add_option("--batch", o.batch, "file with one curve per line; emits JSON lines");
    sub->callback([&chosen, name = name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }
  return run(chosen, o);
}
