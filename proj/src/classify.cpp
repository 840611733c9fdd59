#include "cubiclass/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "parallel.hpp"

namespace cubiclass {

namespace {

struct LabelFixture {
  int n;
  std::uint64_t p;
  std::vector<std::int64_t> sigma;
  Residue weight;
  const char* label;
};

const std::vector<LabelFixture>& label_fixtures() {
  static const std::vector<LabelFixture> fixtures = {
      {3, 2, {0, 0, 0, 0, 1}, 0, "T_2^1"},
      {3, 2, {0, 0, 0, 1, 1}, 0, "T_2^2"},
      {3, 3, {0, 0, 0, 0, 1}, 0, "T_3^1"},
      {3, 3, {0, 0, 0, 1, 1}, 0, "T_3^2"},
      {3, 3, {0, 0, 0, 1, 2}, 0, "T_3^3"},
      {3, 3, {0, 0, 1, 1, 2}, 0, "T_3^4"},
      {3, 5, {0, 1, 2, 3, 4}, 0, "T_5^1"},
      {3, 11, {1, 3, 4, 5, 9}, 0, "T_11^1"},
      {4, 2, {0, 0, 0, 0, 0, 1}, 0, "F_2^1"},
      {4, 2, {0, 0, 0, 0, 1, 1}, 0, "F_2^2"},
      {4, 2, {0, 0, 0, 1, 1, 1}, 0, "F_2^3"},
      {4, 3, {0, 0, 0, 0, 0, 1}, 0, "F_3^1"},
      {4, 3, {0, 0, 0, 0, 1, 1}, 0, "F_3^2"},
      {4, 3, {0, 0, 0, 0, 1, 2}, 0, "F_3^3"},
      {4, 3, {0, 0, 0, 1, 1, 1}, 0, "F_3^4"},
      {4, 3, {0, 0, 0, 1, 1, 2}, 0, "F_3^5"},
      {4, 3, {0, 0, 1, 1, 2, 2}, 0, "F_3^6"},
      {4, 3, {0, 0, 1, 1, 2, 2}, 1, "F_3^7"},
      {4, 5, {0, 0, 1, 2, 3, 4}, 0, "F_5^1"},
      {4, 5, {1, 1, 2, 2, 3, 4}, 0, "F_5^2"},
      {4, 7, {1, 2, 3, 4, 5, 6}, 0, "F_7^1"},
      {4, 11, {0, 1, 3, 4, 5, 9}, 0, "F_11^1"},
  };
  return fixtures;
}

bool family_less(const FamilyRecord& a, const FamilyRecord& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.sigma.values() != b.sigma.values()) return a.sigma.values() < b.sigma.values();
  return a.weight < b.weight;
}

FamilyRecord make_record(int n, const Signature& sigma, Residue weight) {
  auto basis = eigenspace_basis(sigma, weight);
  const std::size_t dim_e = basis.dimension();
  const std::size_t dim_norm = normalizer_dim(sigma);
  return FamilyRecord{sigma.prime(),
                      n,
                      sigma,
                      weight,
                      std::move(basis),
                      dim_e,
                      dim_norm,
                      static_cast<std::int64_t>(dim_e) - static_cast<std::int64_t>(dim_norm),
                      std::nullopt,
                      family_label(n, sigma.prime(), sigma, weight),
                      std::nullopt};
}

}  // namespace

std::size_t normalizer_dim(const Signature& sigma) {
  std::map<Residue, std::size_t> counts;
  for (Residue v : sigma.values()) ++counts[v];
  std::size_t total = 0;
  for (const auto& [v, c] : counts) total += c * c;
  return total;
}

std::int64_t family_dimension(const Signature& sigma, Residue weight) {
  return static_cast<std::int64_t>(eigenspace_basis(sigma, weight).dimension()) -
         static_cast<std::int64_t>(normalizer_dim(sigma));
}

std::pair<Signature, Residue> canonical_family(const Signature& sigma, Residue weight) {
  const Prime p = sigma.prime();
  const std::uint64_t m = p.value();
  weight = static_cast<Residue>(weight % m);
  if (m != 3) return {canonicalize_scaling(normalize_weight(sigma, weight)), 0};
  if (weight == 0) return {canonicalize(sigma), 0};
  // (sigma, 2) and (2 sigma, 1) generate the same family.
  const std::uint64_t c = inverse_mod(weight, p);
  std::vector<Residue> scaled(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) scaled[i] = static_cast<Residue>(c * sigma[i] % m);
  return {canonicalize_translation(Signature::from_residues(p, std::move(scaled))), 1};
}

std::vector<std::pair<Signature, Residue>> families_of_class(const Signature& sigma) {
  std::set<std::pair<std::vector<Residue>, Residue>> seen;
  std::vector<std::pair<Signature, Residue>> out;
  const auto m = static_cast<Residue>(sigma.prime().value());
  for (Residue a = 0; a < m; ++a) {
    auto key = canonical_family(sigma, a);
    if (seen.emplace(key.first.values(), key.second).second) out.push_back(std::move(key));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first.values(), x.second) < std::tie(y.first.values(), y.second);
  });
  return out;
}

std::optional<std::string> family_label(int n, Prime p, const Signature& sigma, Residue weight) {
  if (sigma.prime() != p) return std::nullopt;
  const auto key = canonical_family(sigma, weight);
  for (const auto& fx : label_fixtures()) {
    if (fx.n != n || fx.p != p.value() || fx.sigma.size() != sigma.size()) continue;
    const auto fixture_key = canonical_family(Signature(p, fx.sigma), fx.weight);
    if (fixture_key == key) return std::string(fx.label);
  }
  return std::nullopt;
}

EnumerationStrategy resolve_strategy(Prime p, int n, const ClassifyConfig& config) {
  switch (config.strategy) {
    case StrategyChoice::exhaustive:
      return EnumerationStrategy::exhaustive;
    case StrategyChoice::chain_pruned:
      return EnumerationStrategy::chain_pruned;
    case StrategyChoice::automatic:
      break;
  }
  if (p.value() <= 3) return EnumerationStrategy::exhaustive;
  // p^(n+2) against the budget, saturating.
  unsigned __int128 space = 1;
  for (int i = 0; i < n + 2 && space <= config.budget; ++i) space *= p.value();
  return space > config.budget ? EnumerationStrategy::chain_pruned : EnumerationStrategy::exhaustive;
}

unsigned default_thread_count() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("CUBICLASS_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) threads = std::min(threads, static_cast<unsigned>(v));
  }
  return threads;
}

Classification classify(int n, Prime p, const ClassifyConfig& config) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
  Classification result{n, p, resolve_strategy(p, n, config), 0, {}, {}, {}, true};
  if (!is_admissible(p, n)) {
    result.notes.push_back(std::to_string(p.value()) + " not admissible in dimension " + std::to_string(n));
    return result;
  }
  if (result.strategy == EnumerationStrategy::chain_pruned && p.value() <= 3) {
    throw std::invalid_argument("chain-pruned enumeration requires p > 3");
  }

  std::vector<Signature> classes;
  try {
    classes = enumerate_orbits(p, n, result.strategy, config.budget);
  } catch (const BudgetExceeded& e) {
    result.complete = false;
    result.notes.push_back(std::string("incomplete: ") + e.what());
    return result;
  }
  result.classes_enumerated = classes.size();

  std::set<std::pair<std::vector<Residue>, Residue>> seen;
  std::vector<std::pair<Signature, Residue>> candidates;
  for (const auto& cls : classes) {
    for (auto& fam : families_of_class(cls)) {
      if (fam.first.is_zero()) continue;
      if (seen.emplace(fam.first.values(), fam.second).second) candidates.push_back(std::move(fam));
    }
  }

  std::vector<FamilyRecord> records(candidates.size(), make_record(n, Signature::zero(p, n), 0));
  const unsigned threads = config.threads ? config.threads : default_thread_count();
  detail::parallel_for(candidates.size(), threads, [&](std::size_t i) {
    const auto& [sigma, weight] = candidates[i];
    FamilyRecord rec = make_record(n, sigma, weight);
    if (auto bad = lemma_base_obstruction(sigma, weight)) {
      rec.rejected_reason = "lemma_base: x_" + std::to_string(*bad) + " has degree < 2 in every eigenspace monomial";
    } else if (auto member = find_smooth_member(sigma, weight, config.trials, config.seed, config.moduli)) {
      rec.witness = std::move(member);
    } else {
      rec.rejected_reason = "no smooth member certified after " + std::to_string(config.trials) + " trials";
    }
    records[i] = std::move(rec);
  });

  for (auto& rec : records) (rec.accepted() ? result.families : result.rejected).push_back(std::move(rec));
  std::sort(result.families.begin(), result.families.end(), family_less);
  std::sort(result.rejected.begin(), result.rejected.end(), family_less);
  if (std::any_of(result.rejected.begin(), result.rejected.end(),
                  [](const FamilyRecord& r) { return r.rejected_reason->starts_with("no smooth"); })) {
    result.notes.push_back("families rejected after exhausting smoothness trials are presumed singular, not proven");
  }
  return result;
}

std::map<Prime, Classification> classify_all(int n, const ClassifyConfig& config) {
  std::map<Prime, Classification> out;
  for (Prime p : admissible_primes(n)) out.emplace(p, classify(n, p, config));
  return out;
}

}  // namespace cubiclass
