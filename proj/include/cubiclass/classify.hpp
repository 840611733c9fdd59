#pragma once

// Classification of smooth cubic n-folds with an automorphism of prime order p.
//
// Pipeline: enumerate signature classes, expand each into its distinct
// (signature, eigenweight) families, discard families failing the degree-2
// test, then search for a member certified smooth. Accepted families carry
// the dimension D = dim E - dim N of their locus in moduli.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubiclass/forms.hpp"
#include "cubiclass/signature.hpp"
#include "cubiclass/smoothness.hpp"

namespace cubiclass {

enum class StrategyChoice { exhaustive, chain_pruned, automatic };

struct ClassifyConfig {
  StrategyChoice strategy = StrategyChoice::automatic;
  int trials = 20;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> moduli = kDefaultModuli;
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// Worker count; 0 picks hardware concurrency capped by CUBICLASS_THREADS.
  unsigned threads = 0;
};

struct FamilyRecord {
  Prime p;
  int n;
  Signature sigma;
  Residue weight;
  EigenspaceBasis basis;
  std::size_t dim_e;
  std::size_t dim_norm;
  std::int64_t family_dimension;
  std::optional<SmoothMember> witness;
  std::optional<std::string> label;
  std::optional<std::string> rejected_reason;

  bool accepted() const { return witness.has_value(); }
};

struct Classification {
  int n;
  Prime p;
  EnumerationStrategy strategy;
  std::size_t classes_enumerated = 0;
  std::vector<FamilyRecord> families;  // accepted, canonical order
  std::vector<FamilyRecord> rejected;  // canonical order, each with a reason
  std::vector<std::string> notes;
  bool complete = true;
};

/// Sum of squared multiplicities of the values of sigma.
std::size_t normalizer_dim(const Signature& sigma);

/// dim E(sigma, weight) - normalizer_dim(sigma).
std::int64_t family_dimension(const Signature& sigma, Residue weight);

/// Canonical representative of the family of (sigma, weight).
///
/// For p != 3 the generator is translated to weight 0 and the signature is
/// canonical under scaling. For p = 3 translation keeps the weight; weight 0
/// uses the full canonical form and a nonzero weight is scaled to 1 first.
std::pair<Signature, Residue> canonical_family(const Signature& sigma, Residue weight);

/// Distinct canonical families whose signature lies in the class of sigma.
std::vector<std::pair<Signature, Residue>> families_of_class(const Signature& sigma);

/// Labels such as "T_11^1" or "F_3^7" for the threefold and fourfold lists.
std::optional<std::string> family_label(int n, Prime p, const Signature& sigma, Residue weight);

EnumerationStrategy resolve_strategy(Prime p, int n, const ClassifyConfig& config);

/// Empty with a note when p is not admissible in dimension n. An enumeration budget
/// overrun yields complete = false.
Classification classify(int n, Prime p, const ClassifyConfig& config = {});

std::map<Prime, Classification> classify_all(int n, const ClassifyConfig& config = {});

unsigned default_thread_count();

}  // namespace cubiclass
