#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace qha;
using namespace qha::test;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_description(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* kDual = R"({
  "composition": "right-to-left",
  "name": "d",
  "quiver": {"vertices": ["1"], "arrows": [{"name": "x", "src": "1", "tgt": "1"}]},
  "relations": [[{"c": "1", "path": ["x", "x"]}]],
  "order": []
})";

}  // namespace

TEST_CASE("examples round trip") {
  std::vector<Description> ds{example_auslander(1), example_auslander(2), example_auslander(3),
                              example_auslander(3, "fp:103"), example_two_source(), example_yuehui(),
                              example_dual_numbers()};
  for (auto& d : ds) {
    auto text = emit_description(d);
    auto back = parse_description(text);
    CHECK(emit_description(back) == text);
    FieldScope fs(Field::parse(back.field));
    auto b = build_description(back);
    b.a->verify_associative();
    for (auto& s : b.subs) s.emb.verify();
    if (b.action_amb) b.action_amb->verify();
  }
}

TEST_CASE("example dimensions") {
  CHECK(build_description(example_auslander(1)).a->dim() == 1);
  CHECK(build_description(example_auslander(2)).a->dim() == 5);
  CHECK(build_description(example_auslander(3)).a->dim() == 14);
  auto t = build_description(example_two_source());
  CHECK(t.a->dim() == 5);
  CHECK(t.amb->dim() == 9);
  CHECK(t.sub("B").emb.sub->dim() == 5);
}

TEST_CASE("group data needs a root of unity") {
  CHECK(!example_auslander(3).group);
  CHECK(example_auslander(3, "fp:103").group);
  CHECK(example_auslander(2).group);
}

TEST_CASE("minimal description") {
  auto d = parse_description(kDual);
  CHECK(d.name == "d");
  CHECK(d.field == "rational");
  CHECK(build_description(d).a->dim() == 2);
}

TEST_CASE("syntax errors report line and column") {
  std::string text = "{\n  \"composition\": \"right-to-left\",\n  \"name\": ,\n}";
  auto e = error_of(text);
  CHECK(e.find("line 3") != std::string::npos);
  CHECK(e.find("column") != std::string::npos);
}

TEST_CASE("semantic errors report a JSON pointer") {
  std::string missing = kDual;
  missing.replace(missing.find("\"composition\": \"right-to-left\","), 32, "");
  CHECK(error_of(missing).find("composition") != std::string::npos);

  std::string wrong = kDual;
  wrong.replace(wrong.find("right-to-left"), 13, "left-to-right");
  CHECK(error_of(wrong).rfind("/composition", 0) == 0);

  std::string unknown = kDual;
  unknown.insert(unknown.rfind('}'), ", \"extra\": 1");
  CHECK(!error_of(unknown).empty());

  std::string badtype = kDual;
  badtype.replace(badtype.find("\"1\"]"), 3, "7");
  CHECK(error_of(badtype).find("/quiver/vertices/0") != std::string::npos);
}

TEST_CASE("build errors") {
  std::string text = kDual;
  text.replace(text.find("[\"x\", \"x\"]"), 10, "[\"y\"]");
  auto d = parse_description(text);
  CHECK_THROWS_AS(build_description(d), ParseError);
}

TEST_CASE("scalars") {
  CHECK(parse_scalar("3/4", std::nullopt) == Scalar(3, 4));
  CHECK(parse_scalar("-2", std::nullopt) == Scalar(-2));
  CHECK_THROWS_AS(parse_scalar("xi", std::nullopt), ScopeError);
  CHECK_THROWS_AS(parse_scalar("abc", std::nullopt), ParseError);
  FieldScope fs(Field::prime(7));
  auto xi = primitive_root(3);
  REQUIRE(xi);
  CHECK(*xi == Scalar(2));
  CHECK(xi->pow(3).is_one());
  CHECK(parse_scalar("-2*xi^2", xi) == Scalar(-8));
  CHECK(parse_scalar("xi", xi) == Scalar(2));
  CHECK(!primitive_root(4));
}

TEST_CASE("fields") {
  CHECK(Field::parse("rational").is_rational());
  CHECK(Field::parse("fp:103").characteristic() == 103);
  CHECK_THROWS(Field::parse("fp:100"));
  CHECK_THROWS(Field::parse("complex"));
}
