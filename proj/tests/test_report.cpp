#include <doctest.h>

#include <stdexcept>

#include "sqlex/report.hpp"

using namespace sqlex;

namespace {

SqIdeal usli_pair() { return SqIdeal(4, {SqMonomial{1, 2}, SqMonomial{1, 3, 4}}); }

}  // namespace

TEST_CASE("ideal json round trip") {
  Json j = ideal_to_json(usli_pair());
  CHECK(j.dump() == R"({"n":4,"generators":["x1*x2","x1*x3*x4"]})");
  CHECK(ideal_from_json(j) == usli_pair());
  CHECK_THROWS_AS(ideal_from_json(Json{{"n", 3}}), std::invalid_argument);
}

TEST_CASE("emitted reports re-serialize byte-identically") {
  SqIdeal ideal = usli_pair();
  std::vector<Json> reports;
  reports.push_back(ideal_to_json(ideal));
  reports.push_back(betti_to_json(betti_table_stable(ideal)));
  reports.push_back(verdict_to_json(
      is_s_sequence(ideal.generators(), ideal.ambient()), true));
  reports.push_back(
      sym_comparison_to_json(sym_compare(lexsegment_prefix(2, 3, 4))));
  for (const auto& j : reports) {
    const std::string once = j.dump(2);
    CHECK(Json::parse(once).dump(2) == once);
  }
}

TEST_CASE("inline generator lists parse") {
  CHECK(parse_ideal_text("x1*x2, x1*x3*x4", 4) == usli_pair());
  CHECK(parse_ideal_text("x1*x2,x1*x3*x4,", 4) == usli_pair());
  CHECK_THROWS_AS(parse_ideal_text("x1*x5", 4), std::invalid_argument);
}

TEST_CASE("betti json lists entries by (i, j)") {
  Json j = betti_to_json(betti_table_stable(usli_pair()));
  CHECK(j["entries"].dump() == "[[0,2,1],[0,3,1],[1,4,1]]");
  CHECK(j["projdim"] == 1);
  CHECK(j["reg"] == 3);
}

TEST_CASE("betti text diagram") {
  std::string diagram = betti_diagram(betti_table_stable(usli_pair()));
  CHECK(diagram.find("i=0") != std::string::npos);
  CHECK(diagram.find("i=1") != std::string::npos);
  CHECK(diagram.find('.') != std::string::npos);
}

TEST_CASE("verdict json carries the interface fields") {
  Json j = verdict_to_json(is_s_sequence(lexsegment_prefix(2, 5, 4).generators(), 4),
                           false);
  CHECK(j["verdict"] == false);
  CHECK(j["strong"] == false);
  CHECK(j["basis_size"] == 7);
  CHECK(j["max_t_degree"] == 2);
  CHECK(!j.contains("basis"));
  CHECK(j["annihilators"].size() == 5);
}
