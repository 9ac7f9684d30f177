#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suites.hpp"

using namespace qha;
using namespace qha::test;

TEST_CASE("stasheff identities on every transferred model") {
  auto o = stasheff_suite();
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("realization is faithful on random twisted modules") {
  auto o = faithfulness_suite(11);
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("induction commutes with conjugation") {
  auto o = diagram_suite();
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("conjugation round trips") {
  auto o = round_trip_suite();
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("strong Borel lemmas") {
  auto o = lemma_suite();
  INFO(o.detail);
  CHECK(o.ok);
}

TEST_CASE("string count oracle") {
  CHECK(count_strings(2).dim_r == 5);
  CHECK(count_strings(3).dim_r == 21);
  CHECK(count_strings(3).q[0] == std::vector<int>{1, 0, 1});
}
