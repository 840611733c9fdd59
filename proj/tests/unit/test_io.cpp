#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cubiclass/io.hpp"

using namespace cubiclass;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void check_certificate_schema(const json& c) {
  CHECK(c.at("modulus").is_number_unsigned());
  CHECK(c.at("pure_powers").is_array());
  CHECK(c.at("basis_size").is_number_unsigned());
}

void check_family_schema(const json& f) {
  for (const char* k : {"p", "n", "sigma", "weight", "dim_E", "dim_norm", "D", "basis", "witness", "rejected_reason"}) {
    CHECK_MESSAGE(f.contains(k), k);
  }
  CHECK(f.at("sigma").is_array());
  for (const auto& m : f.at("basis")) {
    REQUIRE(m.size() == 3);
    CHECK(m[0] <= m[1]);
    CHECK(m[1] <= m[2]);
  }
  CHECK(f.at("D").get<std::int64_t>() == f.at("dim_E").get<std::int64_t>() - f.at("dim_norm").get<std::int64_t>());
  if (f.at("witness").is_null()) {
    CHECK(f.at("rejected_reason").is_string());
  } else {
    CHECK(f.at("rejected_reason").is_null());
    CHECK(f.at("witness").at("coeffs").size() == f.at("basis").size());
    check_certificate_schema(f.at("witness").at("certificate"));
  }
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("form JSON round trip") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(form_from_json(form_to_json(klein(n))) == klein(n));
    CHECK(form_from_json(form_to_json(fermat(n))) == fermat(n));
  }
  const auto doc = json::parse(R"({"n": 2, "terms": [{"c": 2, "m": [0, 0, 1]}, {"c": -5, "m": [3, 3, 3]}]})");
  const auto f = form_from_json(doc);
  CHECK(f.coefficient(Monomial(0, 0, 1)) == 2);
  CHECK(f.coefficient(Monomial(3, 3, 3)) == -5);
}

TEST_CASE("malformed forms are rejected") {
  const char* bad[] = {
      R"([1, 2])",
      R"({"terms": []})",
      R"({"n": 1, "terms": [{"c": 1, "m": [0, 0, 0]}]})",
      R"({"n": 2, "terms": []})",
      R"({"n": 2, "terms": [{"c": 1, "m": [1, 0, 0]}]})",
      R"({"n": 2, "terms": [{"c": 1, "m": [0, 0, 1]}, {"c": 3, "m": [0, 0, 1]}]})",
      R"({"n": 2, "terms": [{"c": 0, "m": [0, 0, 1]}]})",
      R"({"n": 2, "terms": [{"c": 1, "m": [0, 0, 4]}]})",
      R"({"n": 2, "terms": [{"c": 1.5, "m": [0, 0, 1]}]})",
      R"({"n": 2, "terms": [{"c": 1, "m": [0, 1]}]})",
      R"({"n": 2, "terms": [{"m": [0, 0, 1]}]})",
  };
  for (const char* text : bad) CHECK_THROWS_AS(form_from_json(json::parse(text)), InputError);
  CHECK_THROWS_AS(read_form_file("/nonexistent/form.json"), InputError);
}

TEST_CASE("family and classification JSON follow the schema") {
  const auto c = classify(3, Prime(3));
  const auto doc = to_json(c);
  CHECK(doc.at("p") == 3);
  CHECK(doc.at("complete") == true);
  CHECK(doc.at("families").size() == 4);
  for (const auto& f : doc.at("families")) check_family_schema(f);
  for (const auto& f : doc.at("rejected")) check_family_schema(f);
}

TEST_CASE("spectrum JSON") {
  const auto k = klein_tangent_spectrum(5);
  const auto doc = to_json(k.tangent(), k.matched);
  CHECK(doc.at("p") == 43);
  CHECK(doc.at("exponents").size() == 21);
  CHECK(doc.at("matched_convention") == "raw");
  const auto k3 = klein_tangent_spectrum(3);
  CHECK(to_json(k3.tangent(), k3.matched).at("matched_convention").is_null());
}

TEST_CASE("rendering") {
  const auto c = classify(3, Prime(11));
  const auto md = render_classifications({c}, 3, OutputFormat::md);
  CHECK(md.find("| label | p | sigma | weight | dim_E | dim_norm | D |") != std::string::npos);
  CHECK(md.find("| T_11^1 | 11 | (1,3,4,5,9) | 0 | 5 | 5 | 0 |") != std::string::npos);
  const auto csv = render_classifications({c}, 3, OutputFormat::csv);
  CHECK(csv.starts_with("label,p,sigma,weight,dim_E,dim_norm,D,status,reason\n"));
  CHECK(csv.find("T_11^1,11,\"(1,3,4,5,9)\",0,5,5,0,accepted,") != std::string::npos);
  CHECK(render_admissible({{3, {2, 3, 5, 11}}}, false, OutputFormat::md).find("| 3 | 2, 3, 5, 11 |") !=
        std::string::npos);
  CHECK(render_admissible({{11, {2, 3, 2731}}}, true, OutputFormat::csv) == "n,max_prime\n11,2731\n");
  CHECK_THROWS_AS(parse_output_format("xml"), InputError);
}

TEST_CASE("golden files are reproduced byte for byte") {
  const std::filesystem::path dir = CUBICLASS_GOLDEN_DIR;
  const auto docs = golden_documents();
  CHECK(docs.size() == 5);
  for (const auto& [name, content] : docs) {
    REQUIRE_MESSAGE(std::filesystem::exists(dir / name), name);
    CHECK_MESSAGE(slurp(dir / name) == content, name);
  }
}

}
