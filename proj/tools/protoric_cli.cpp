// Command-line front end: fan analyses as JSON, solenoid points and K-ring
// normal forms as one-line text.
//
// Exit codes: 0 success, 1 domain error (precondition), 2 input/parse error.

#include "protoric/protoric.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace protoric;

RaySet parse_cone_indices(const Fan& fan, const std::string& text) {
  std::vector<std::size_t> idx;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("--cone: '" + item + "' is not a ray index");
    const auto i = std::stoull(item);
    if (i < 1 || i > fan.ray_count())
      throw input_error("--cone: ray index " + item + " out of range 1.." + std::to_string(fan.ray_count()));
    idx.push_back(static_cast<std::size_t>(i - 1));
  }
  return ray_set(idx);
}

std::int64_t to_level(const Rational& q, const char* what) {
  if (denominator(q) != 1 || q <= 0) throw input_error(std::string(what) + " must be a positive integer");
  return numerator(q).convert_to<std::int64_t>();
}

// "--a r/M": residue r at level M; a bare "r" takes the level from --level.
ProfiniteInt parse_profinite(const std::string& text, std::int64_t level) {
  const auto slash = text.find('/');
  const Rational residue = parse_rational(text.substr(0, slash));
  if (denominator(residue) != 1) throw input_error("--a: residue must be an integer");
  if (slash != std::string::npos) {
    const std::int64_t m = to_level(parse_rational(text.substr(slash + 1)), "--a level");
    if (level != 0 && level != m) throw input_error("--a level " + std::to_string(m) + " disagrees with --level");
    level = m;
  }
  if (level == 0) throw input_error("--a needs a level: give r/M or --level M");
  return ProfiniteInt(level, numerator(residue).convert_to<std::int64_t>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of proalgebraic toric completions and exact solenoid / K-ring arithmetic"};
  app.require_subcommand(1);
  std::function<void()> action;

  std::string fan_path;
  auto* analyze = app.add_subcommand("analyze", "Quotient data, symmetry, automorphisms and fiber ranks of a fan");
  analyze->add_option("fan", fan_path, "fan JSON file")->required();
  analyze->callback([&] {
    action = [&] { std::cout << analysis_report(read_fan_file(fan_path)).dump(2) << "\n"; };
  });

  std::string svg_path;
  auto* delzant = app.add_subcommand("delzant", "Face lattice of the Delzant polytope with fiber ranks");
  delzant->add_option("fan", fan_path, "fan JSON file")->required();
  delzant->add_option("--svg", svg_path, "write an SVG drawing (rank-2 fans only)");
  delzant->callback([&] {
    action = [&] {
      const Fan fan = read_fan_file(fan_path);
      const Json report = delzant_report(fan);
      if (!svg_path.empty()) {
        const std::string svg = delzant_svg(fan);
        std::ofstream out(svg_path);
        if (!out) throw input_error("cannot write '" + svg_path + "'");
        out << svg;
      }
      std::cout << report.dump(2) << "\n";
    };
  });

  std::string cone_text;
  auto* hilbert = app.add_subcommand("hilbert", "Dual cone and Hilbert basis of a fan cone");
  hilbert->add_option("fan", fan_path, "fan JSON file")->required();
  hilbert->add_option("--cone", cone_text, "comma-separated 1-based ray indices (empty for the zero cone)")
      ->required();
  hilbert->callback([&] {
    action = [&] {
      const Fan fan = read_fan_file(fan_path);
      std::cout << hilbert_report(fan, parse_cone_indices(fan, cone_text)).dump(2) << "\n";
    };
  });

  auto* solenoid = app.add_subcommand("solenoid", "Finite-level points of the adelic solenoid");
  solenoid->require_subcommand(1);
  std::string a_text;
  std::string turns_text = "0";
  std::string rho_text = "1";
  std::int64_t level = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t to = 0;
  std::int64_t branch = 0;

  auto* exp_cmd = solenoid->add_subcommand("exp", "exp(a, θ) = φ(a)·ν(θ), θ in turns");
  exp_cmd->add_option("--a", a_text, "profinite integer r/M")->required();
  exp_cmd->add_option("--turns", turns_text, "angle in turns p/q");
  exp_cmd->add_option("--level", level, "level M");
  exp_cmd->callback([&] {
    action = [&] {
      const ProfiniteInt a = parse_profinite(a_text, level);
      std::cout << sol_exp(a, parse_rational(turns_text)).str() << "\n";
    };
  });

  auto* cover_cmd = solenoid->add_subcommand("cover", "covering map p_{n,m}(z) = z^{m/n}");
  cover_cmd->add_option("--n", n, "target level")->required();
  cover_cmd->add_option("--m", m, "source level, a multiple of n")->required();
  cover_cmd->add_option("--rho", rho_text, "modulus p/q");
  cover_cmd->add_option("--turns", turns_text, "angle in turns a/b");
  cover_cmd->callback([&] {
    action = [&] {
      const PolarComplex z(parse_rational(rho_text), parse_rational(turns_text));
      std::cout << SolenoidPoint(n, cover_map(n, m, z)).str() << "\n";
    };
  });

  auto* refine_cmd = solenoid->add_subcommand("refine", "lift a level-M point to level M' along root branch k");
  refine_cmd->add_option("--level", level, "current level M")->required();
  refine_cmd->add_option("--rho", rho_text, "modulus p/q");
  refine_cmd->add_option("--turns", turns_text, "angle in turns a/b");
  refine_cmd->add_option("--to", to, "new level M', a multiple of M")->required();
  refine_cmd->add_option("--branch", branch, "root branch 0 <= k < M'/M");
  refine_cmd->callback([&] {
    action = [&] {
      const SolenoidPoint z(level, PolarComplex(parse_rational(rho_text), parse_rational(turns_text)));
      std::cout << refine(z, to, branch).str() << "\n";
    };
  });

  auto* kring = app.add_subcommand("kring", "Normal forms in K(CP^1_Q)");
  kring->require_subcommand(1);
  std::vector<std::string> exprs;
  auto* reduce_cmd = kring->add_subcommand("reduce", "normal form of an expression");
  reduce_cmd->add_option("expr", exprs, "expression, e.g. \"3*x^(1/2) - x^(2/3) + 1\"")->required()->expected(1);
  reduce_cmd->callback([&] {
    action = [&] { std::cout << reduce(parse_formal_sum(exprs.at(0))).str() << "\n"; };
  });
  auto* mul_cmd = kring->add_subcommand("mul", "product of two expressions");
  mul_cmd->add_option("exprs", exprs, "two expressions")->required()->expected(2);
  mul_cmd->callback([&] {
    action = [&] {
      std::cout << multiply(reduce(parse_formal_sum(exprs.at(0))), reduce(parse_formal_sum(exprs.at(1)))).str()
                << "\n";
    };
  });
  std::int64_t kring_level = 0;
  auto* level_cmd = kring->add_subcommand("level", "is the element in the level-n image?");
  level_cmd->add_option("n", kring_level, "level")->required();
  level_cmd->add_option("expr", exprs, "expression")->required()->expected(1);
  level_cmd->callback([&] {
    action = [&] {
      std::cout << (level_image(kring_level, reduce(parse_formal_sum(exprs.at(0)))) ? "true" : "false") << "\n";
    };
  });

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
    action();
  } catch (const protoric::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const protoric::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
