#pragma once

// JSON ingestion of cubic forms and JSON / CSV / Markdown rendering of results.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubiclass/classify.hpp"
#include "cubiclass/hodge.hpp"
#include "cubiclass/smoothness.hpp"

namespace cubiclass {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"n": int, "terms": [{"c": int, "m": [i, j, k]}, ...]}; triples must be sorted and
/// unique, coefficients nonzero. Throws InputError.
CubicForm form_from_json(const nlohmann::json& doc);
CubicForm read_form_file(const std::filesystem::path& path);
nlohmann::json form_to_json(const CubicForm& form);

nlohmann::json to_json(const SmoothnessCertificate& cert);
nlohmann::json to_json(const FamilyRecord& rec);
nlohmann::json to_json(const SpectrumSet& s, const std::optional<SpectrumConvention>& matched);
nlohmann::json to_json(const Classification& c);

enum class OutputFormat { json, csv, md };

OutputFormat parse_output_format(const std::string& s);

/// Columns: label, p, sigma, weight, dim_E, dim_norm, D.
std::string render_families_md(const std::vector<FamilyRecord>& families);
/// Accepted and rejected rows with a status column.
std::string render_families_csv(const std::vector<FamilyRecord>& families, const std::vector<FamilyRecord>& rejected);

std::string render_classifications(const std::vector<Classification>& runs, int n, OutputFormat fmt);

/// rows: n -> admissible primes (or just the maximum).
std::string render_admissible(const std::map<int, std::vector<std::uint64_t>>& rows, bool max_only, OutputFormat fmt);

/// File name -> content for the shipped golden files: classifications for n = 2, 3, 4
/// (JSON, default config) and the two admissible-prime tables.
std::map<std::string, std::string> golden_documents();

/// Pretty JSON with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace cubiclass
