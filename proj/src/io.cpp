#include "cubiclass/io.hpp"

#include <fstream>
#include <sstream>

#include "cubiclass/polynomial.hpp"

namespace cubiclass {

namespace {

using nlohmann::json;

std::string sigma_text(const Signature& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

std::string strategy_name(EnumerationStrategy s) {
  return s == EnumerationStrategy::exhaustive ? "exhaustive" : "chain_pruned";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

CubicForm form_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw InputError("form must be a JSON object");
    if (!doc.contains("n") || !doc.at("n").is_number_integer()) throw InputError("missing integer field \"n\"");
    if (!doc.contains("terms") || !doc.at("terms").is_array()) throw InputError("missing array field \"terms\"");
    const auto n = doc.at("n").get<std::int64_t>();
    if (n < 2 || n + 2 > static_cast<std::int64_t>(kMaxPolyVars)) throw InputError("n out of range");
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (const auto& t : doc.at("terms")) {
      if (!t.is_object() || !t.contains("c") || !t.contains("m")) throw InputError("term needs \"c\" and \"m\"");
      if (!t.at("c").is_number_integer()) throw InputError("coefficient must be an integer");
      const auto& m = t.at("m");
      if (!m.is_array() || m.size() != 3) throw InputError("monomial must be [i, j, k]");
      std::int64_t idx[3];
      for (int k = 0; k < 3; ++k) {
        if (!m[k].is_number_integer()) throw InputError("monomial index must be an integer");
        idx[k] = m[k].get<std::int64_t>();
        if (idx[k] < 0 || idx[k] >= n + 2) throw InputError("monomial index out of range");
      }
      if (idx[0] > idx[1] || idx[1] > idx[2]) throw InputError("monomial indices must satisfy i <= j <= k");
      const auto c = t.at("c").get<std::int64_t>();
      if (c == 0) throw InputError("zero coefficient");
      terms.emplace_back(Monomial(idx[0], idx[1], idx[2]), c);
    }
    auto form = CubicForm::from_terms(static_cast<int>(n), terms);
    if (form.is_zero()) throw InputError("zero form");
    return form;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

CubicForm read_form_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return form_from_json(doc);
}

json form_to_json(const CubicForm& form) {
  json terms = json::array();
  for (const auto& [m, c] : form.terms()) terms.push_back({{"c", c}, {"m", {m.idx[0], m.idx[1], m.idx[2]}}});
  return {{"n", form.dimension()}, {"terms", terms}};
}

json to_json(const SmoothnessCertificate& cert) {
  return {{"modulus", cert.modulus}, {"pure_powers", cert.pure_powers}, {"basis_size", cert.basis_size}};
}

json to_json(const FamilyRecord& rec) {
  json basis = json::array();
  for (const auto& m : rec.basis.monomials) basis.push_back({m.idx[0], m.idx[1], m.idx[2]});
  json out = {{"p", rec.p.value()},
              {"n", rec.n},
              {"label", rec.label ? json(*rec.label) : json(nullptr)},
              {"sigma", rec.sigma.values()},
              {"weight", rec.weight},
              {"dim_E", rec.dim_e},
              {"dim_norm", rec.dim_norm},
              {"D", rec.family_dimension},
              {"basis", basis}};
  if (rec.witness) {
    out["witness"] = {{"coeffs", rec.witness->coefficients}, {"certificate", to_json(rec.witness->certificate)}};
  } else {
    out["witness"] = nullptr;
  }
  out["rejected_reason"] = rec.rejected_reason ? json(*rec.rejected_reason) : json(nullptr);
  return out;
}

json to_json(const SpectrumSet& s, const std::optional<SpectrumConvention>& matched) {
  return {{"p", s.p.value()},
          {"exponents", s.exponents},
          {"matched_convention", matched ? json(to_string(*matched)) : json(nullptr)}};
}

json to_json(const Classification& c) {
  json fams = json::array(), rej = json::array();
  for (const auto& f : c.families) fams.push_back(to_json(f));
  for (const auto& f : c.rejected) rej.push_back(to_json(f));
  return {{"n", c.n},
          {"p", c.p.value()},
          {"strategy", strategy_name(c.strategy)},
          {"complete", c.complete},
          {"classes_enumerated", c.classes_enumerated},
          {"families", fams},
          {"rejected", rej},
          {"notes", c.notes}};
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "md") return OutputFormat::md;
  throw InputError("unknown format: " + s);
}

std::string render_families_md(const std::vector<FamilyRecord>& families) {
  std::ostringstream out;
  out << "| label | p | sigma | weight | dim_E | dim_norm | D |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& f : families) {
    out << "| " << f.label.value_or("") << " | " << f.p.value() << " | " << sigma_text(f.sigma) << " | " << f.weight
        << " | " << f.dim_e << " | " << f.dim_norm << " | " << f.family_dimension << " |\n";
  }
  return out.str();
}

std::string render_families_csv(const std::vector<FamilyRecord>& families, const std::vector<FamilyRecord>& rejected) {
  std::ostringstream out;
  out << "label,p,sigma,weight,dim_E,dim_norm,D,status,reason\n";
  auto row = [&](const FamilyRecord& f) {
    out << csv_quote(f.label.value_or("")) << ',' << f.p.value() << ',' << csv_quote(sigma_text(f.sigma)) << ','
        << f.weight << ',' << f.dim_e << ',' << f.dim_norm << ',' << f.family_dimension << ','
        << (f.accepted() ? "accepted" : "rejected") << ',' << csv_quote(f.rejected_reason.value_or("")) << '\n';
  };
  for (const auto& f : families) row(f);
  for (const auto& f : rejected) row(f);
  return out.str();
}

std::string render_classifications(const std::vector<Classification>& runs, int n, OutputFormat fmt) {
  std::vector<FamilyRecord> families, rejected;
  std::vector<std::string> notes;
  bool complete = true;
  for (const auto& c : runs) {
    families.insert(families.end(), c.families.begin(), c.families.end());
    rejected.insert(rejected.end(), c.rejected.begin(), c.rejected.end());
    for (const auto& note : c.notes) notes.push_back("p=" + std::to_string(c.p.value()) + ": " + note);
    complete = complete && c.complete;
  }
  switch (fmt) {
    case OutputFormat::json: {
      json doc = {{"n", n}, {"complete", complete}, {"classifications", json::array()}};
      for (const auto& c : runs) doc["classifications"].push_back(to_json(c));
      return dump(doc);
    }
    case OutputFormat::csv:
      return render_families_csv(families, rejected);
    case OutputFormat::md: {
      std::string out = "# Cubic " + std::to_string(n) + "-folds: " + std::to_string(families.size()) + " families\n\n";
      out += render_families_md(families);
      if (!rejected.empty()) {
        out += "\n## Rejected\n\n| p | sigma | weight | reason |\n|---|---|---|---|\n";
        for (const auto& r : rejected) {
          out += "| " + std::to_string(r.p.value()) + " | " + sigma_text(r.sigma) + " | " + std::to_string(r.weight) +
                 " | " + r.rejected_reason.value_or("") + " |\n";
        }
      }
      if (!notes.empty()) {
        out += "\n## Notes\n\n";
        for (const auto& note : notes) out += "- " + note + "\n";
      }
      return out;
    }
  }
  return {};
}

std::string render_admissible(const std::map<int, std::vector<std::uint64_t>>& rows, bool max_only, OutputFormat fmt) {
  auto cell = [&](const std::vector<std::uint64_t>& ps) {
    if (max_only) return std::to_string(ps.back());
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + std::to_string(ps[i]);
    return s;
  };
  const char* header = max_only ? "max_prime" : "primes";
  std::ostringstream out;
  switch (fmt) {
    case OutputFormat::json: {
      json doc = json::array();
      for (const auto& [n, ps] : rows) {
        doc.push_back(max_only ? json{{"n", n}, {"max_prime", ps.back()}} : json{{"n", n}, {"primes", ps}});
      }
      return dump(doc);
    }
    case OutputFormat::csv:
      out << "n," << header << "\n";
      for (const auto& [n, ps] : rows) out << n << ',' << csv_quote(cell(ps)) << '\n';
      return out.str();
    case OutputFormat::md:
      out << "| n | " << header << " |\n|---|---|\n";
      for (const auto& [n, ps] : rows) out << "| " << n << " | " << cell(ps) << " |\n";
      return out.str();
  }
  return {};
}

std::map<std::string, std::string> golden_documents() {
  std::map<std::string, std::string> out;
  ClassifyConfig config;
  for (int n = 2; n <= 4; ++n) {
    std::vector<Classification> runs;
    for (auto& [p, c] : classify_all(n, config)) runs.push_back(std::move(c));
    out["classify_n" + std::to_string(n) + ".json"] = render_classifications(runs, n, OutputFormat::json);
  }
  std::map<int, std::vector<std::uint64_t>> small, large;
  for (int n = 2; n <= 10; ++n) {
    for (Prime p : admissible_primes(n)) small[n].push_back(p.value());
  }
  for (int n = 11; n <= 20; ++n) large[n] = {max_admissible_prime(n).value()};
  out["admissible_n2-10.json"] = render_admissible(small, false, OutputFormat::json);
  out["max_admissible_n11-20.json"] = render_admissible(large, true, OutputFormat::json);
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cubiclass
