// cubiclass: admissible primes, classification tables, smoothness checks and Klein spectra.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cubiclass/io.hpp"

namespace {

using namespace cubiclass;
using nlohmann::json;

enum Exit : int { kOk = 0, kUsage = 2, kPartial = 3, kSingular = 4, kInconclusive = 5 };

std::vector<std::uint64_t> parse_moduli(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(',', start), s.size());
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + end, v);
    if (ec != std::errc() || ptr != s.data() + end) throw InputError("bad modulus list: " + s);
    if (!is_prime(v) || v <= 3) throw InputError("modulus must be a prime > 3: " + std::to_string(v));
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InputError("range must look like a..b");
  int a = 0, b = 0;
  auto r1 = std::from_chars(s.data(), s.data() + dots, a);
  auto r2 = std::from_chars(s.data() + dots + 2, s.data() + s.size(), b);
  if (r1.ec != std::errc() || r1.ptr != s.data() + dots || r2.ec != std::errc() || r2.ptr != s.data() + s.size()) {
    throw InputError("range must look like a..b");
  }
  if (a > b) throw InputError("empty range");
  return {a, b};
}

void check_dimension(int n) {
  if (n < 2) throw InputError("n must be at least 2");
  if (n > kMaxSieveDimension) throw InputError("n too large (max " + std::to_string(kMaxSieveDimension) + ")");
}

struct AdmissibleArgs {
  std::optional<int> n;
  std::string range;
  bool max_only = false;
  std::string format = "md";
};

int run_admissible(const AdmissibleArgs& a) {
  if (a.n.has_value() == !a.range.empty()) throw InputError("give exactly one of --n or --range");
  int lo = 0, hi = 0;
  if (a.n) {
    lo = hi = *a.n;
  } else {
    std::tie(lo, hi) = parse_range(a.range);
  }
  std::map<int, std::vector<std::uint64_t>> rows;
  for (int n = lo; n <= hi; ++n) {
    check_dimension(n);
    for (Prime p : admissible_primes(n)) rows[n].push_back(p.value());
  }
  std::cout << render_admissible(rows, a.max_only, parse_output_format(a.format));
  return kOk;
}

struct ClassifyArgs {
  int n = 0;
  std::optional<std::uint64_t> p;
  std::string strategy = "auto";
  int trials = 20;
  std::uint64_t seed = 0;
  std::string moduli;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::string format = "md";
};

int run_classify(const ClassifyArgs& a) {
  check_dimension(a.n);
  if (a.trials < 1) throw InputError("trials must be at least 1");
  const auto fmt = parse_output_format(a.format);
  ClassifyConfig config;
  if (a.strategy == "exhaustive") config.strategy = StrategyChoice::exhaustive;
  else if (a.strategy == "chain_pruned") config.strategy = StrategyChoice::chain_pruned;
  else if (a.strategy == "auto") config.strategy = StrategyChoice::automatic;
  else throw InputError("unknown strategy: " + a.strategy);
  config.trials = a.trials;
  config.seed = a.seed;
  config.budget = a.budget;
  if (!a.moduli.empty()) config.moduli = parse_moduli(a.moduli);

  std::vector<Classification> runs;
  if (a.p) {
    if (!is_prime(*a.p)) throw InputError(std::to_string(*a.p) + " is not prime");
    const Prime p(*a.p);
    if (p.value() <= 3 && config.strategy == StrategyChoice::chain_pruned) {
      throw InputError("chain_pruned requires p > 3");
    }
    runs.push_back(classify(a.n, p, config));
  } else {
    if (config.strategy == StrategyChoice::chain_pruned) throw InputError("chain_pruned requires --p > 3");
    for (auto& [p, c] : classify_all(a.n, config)) runs.push_back(std::move(c));
  }
  std::cout << render_classifications(runs, a.n, fmt);
  const bool complete = std::all_of(runs.begin(), runs.end(), [](const Classification& c) { return c.complete; });
  return complete ? kOk : kPartial;
}

int run_smooth(const std::string& path, const std::string& moduli) {
  const auto form = read_form_file(path);
  const auto mods = moduli.empty() ? kDefaultModuli : parse_moduli(moduli);
  json out;
  int code = kOk;
  if (auto w = singular_point_from_lemma_base(form)) {
    out = {{"status", "singular"}, {"witness", w->point}, {"partials_vanish", partials_vanish_at(form, w->point)}};
    code = kSingular;
  } else if (auto cert = certify_smooth_over_q(form, mods)) {
    out = {{"status", "smooth"}, {"certificate", to_json(*cert)}};
  } else {
    out = {{"status", "inconclusive"}, {"moduli", mods}};
    code = kInconclusive;
  }
  std::cout << dump(out);
  return code;
}

int run_spectrum(int n) {
  if (n != 3 && n != 5) throw InputError("spectrum supports --klein 3 or 5");
  const auto k = klein_tangent_spectrum(n);
  json out = to_json(k.tangent(), k.matched);
  out["n"] = n;
  out["degree"] = k.degree;
  out["size"] = k.tangent().size();
  out["raw"] = k.raw.exponents;
  out["negated"] = k.negated.exponents;
  out["multiplicity_free"] = k.tangent().multiplicity_free();
  if (n == 5) out["stable_under_11"] = is_stable_under(k.tangent(), 11);
  std::cout << dump(out);
  return kOk;
}

int regen_golden(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, content] : golden_documents()) {
    std::ofstream out(dir / name, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    std::cerr << "wrote " << (dir / name).string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime-order automorphisms of smooth cubic hypersurfaces"};
  app.require_subcommand(0, 1);
  std::string golden_dir;
  app.add_option("--regen-golden", golden_dir, "Rewrite the golden files into DIR and exit");

  AdmissibleArgs adm;
  auto* adm_cmd = app.add_subcommand("admissible", "Admissible primes for a dimension or a range");
  adm_cmd->add_option("--n", adm.n, "Dimension n >= 2");
  adm_cmd->add_option("--range", adm.range, "Dimension range a..b");
  adm_cmd->add_flag("--max-only", adm.max_only, "Only the largest admissible prime");
  adm_cmd->add_option("--format", adm.format, "json | csv | md")->capture_default_str();

  ClassifyArgs cls;
  auto* cls_cmd = app.add_subcommand("classify", "Classify smooth cubic n-folds with an automorphism of prime order");
  cls_cmd->add_option("--n", cls.n, "Dimension n >= 2")->required();
  cls_cmd->add_option("--p", cls.p, "Restrict to one prime");
  cls_cmd->add_option("--strategy", cls.strategy, "exhaustive | chain_pruned | auto")->capture_default_str();
  cls_cmd->add_option("--trials", cls.trials, "Coefficient trials per family")->capture_default_str();
  cls_cmd->add_option("--seed", cls.seed, "Seed for coefficient trials")->capture_default_str();
  cls_cmd->add_option("--moduli", cls.moduli, "Comma-separated certification primes");
  cls_cmd->add_option("--budget", cls.budget, "Exhaustive enumeration budget")->capture_default_str();
  cls_cmd->add_option("--format", cls.format, "json | csv | md")->capture_default_str();

  std::string form_path, smooth_moduli;
  auto* smooth_cmd = app.add_subcommand("smooth", "Certify a cubic form smooth, or exhibit a singular point");
  smooth_cmd->add_option("form", form_path, "JSON form file")->required();
  smooth_cmd->add_option("--moduli", smooth_moduli, "Comma-separated certification primes");

  int klein_n = 0;
  auto* spec_cmd = app.add_subcommand("spectrum", "Character on the Jacobian ring of a Klein hypersurface");
  spec_cmd->add_option("--klein", klein_n, "3 or 5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!golden_dir.empty()) return regen_golden(golden_dir);
    if (adm_cmd->parsed()) return run_admissible(adm);
    if (cls_cmd->parsed()) return run_classify(cls);
    if (smooth_cmd->parsed()) return run_smooth(form_path, smooth_moduli);
    if (spec_cmd->parsed()) return run_spectrum(klein_n);
    std::cerr << app.help();
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
