#include <doctest.h>

#include "json_schema.hpp"
#include "symres/cecomplex.hpp"
#include "symres/reports.hpp"

using namespace symres;

namespace {
std::shared_ptr<SymEngine> sym() {
  static auto engine = std::make_shared<SymEngine>();
  return engine;
}
}  // namespace

TEST_CASE("JSON payloads validate against the shipped schemas") {
  CoefficientEngine coeffs(sym());
  CEVerifier ver(sym());
  const CharacterEngine& chars = sym()->characters();

  testsupport::check_against_schema(json_symfn(sym()->lyndon_sym(4)), "symfn.schema.json");
  testsupport::check_against_schema(json_symfn(sym()->to_schur(sym()->lyndon_sym(3))),
                                    "symfn.schema.json");
  testsupport::check_against_schema(json_expansion(coeffs.m_expansion(Partition{2, 1})),
                                    "expansion.schema.json");
  testsupport::check_against_schema(json_inversion(coeffs.verify_inversion(Partition{1}, 4)),
                                    "inversion.schema.json");

  // a failing report must also validate (witness populated)
  Expansion corrupt = coeffs.m_expansion(Partition{1});
  corrupt.terms[0].coeff = 7;
  testsupport::check_against_schema(json_inversion(coeffs.verify_inversion_against(corrupt, 4)),
                                    "inversion.schema.json");

  testsupport::check_against_schema(json_littlewood(coeffs.verify_littlewood(3)),
                                    "littlewood.schema.json");
  testsupport::check_against_schema(json_orthogonality(verify_orthogonality(chars, 5)),
                                    "orthogonality.schema.json");
  testsupport::check_against_schema(json_slice(ver.verify_exactness(2, 2, 2)),
                                    "slice_report.schema.json");
  testsupport::check_against_schema(json_resolution(ver.verify_resolution(Partition{2}, 2, 4)),
                                    "resolution.schema.json");
  testsupport::check_against_schema(json_chartable(chars, 4), "chartable.schema.json");
  testsupport::check_against_schema(json_freelie(GAlgebra(2, 2, 3)), "freelie.schema.json");
}

TEST_CASE("symfn JSON term layout matches the documented format") {
  CHECK(json_symfn(sym()->lyndon_sym(2)) ==
        R"({"basis":"p","terms":[{"idx":[2],"num":-1,"den":2},{"idx":[1,1],"num":1,"den":2}]})");
}

TEST_CASE("chartable CSV golden for S_3") {
  CHECK(csv_chartable(sym()->characters(), 3) ==
        "lambda,\"3\",\"2,1\",\"1,1,1\"\n"
        "\"3\",1,1,1\n"
        "\"2,1\",-1,0,2\n"
        "\"1,1,1\",1,-1,1\n");
}

TEST_CASE("expansion CSV") {
  CHECK(csv_expansion(CoefficientEngine(sym()).m_expansion(Partition{2})) ==
        "lambda,coeff\n\"2\",1\n\"1\",-1\n");
}

TEST_CASE("orthogonality report carries counts") {
  OrthogonalityReport r = verify_orthogonality(sym()->characters(), 4);
  CHECK(r.pass);
  CHECK(r.pairs_checked == 25);  // 5x5 partitions of 4
}

TEST_CASE("reports serialize deterministically") {
  CEVerifier ver(sym());
  CHECK(json_slice(ver.verify_exactness(2, 3, 3)) == json_slice(ver.verify_exactness(2, 3, 3)));
  CoefficientEngine coeffs(sym());
  CHECK(json_expansion(coeffs.m_expansion(Partition{3})) ==
        json_expansion(coeffs.m_expansion(Partition{3})));
}
