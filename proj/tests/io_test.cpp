#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <sys/wait.h>

#include "helpers.hpp"
#include "spbw/bounded.hpp"
#include "spbw/definition.hpp"
#include "spbw/report.hpp"

using namespace spbw;
using testing_util::entry;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(SPBW_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

int expected_code(const std::string& label) {
  if (label == "Holds") return 0;
  if (label == "FailsWithWitness") return 1;
  return 2;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/spbw_test_" + name + ".json";
  std::ofstream(path) << text;
  return path;
}

const std::vector<std::pair<std::string, std::string>> corpus = {
    {"weyl-z5", "x2*x1"},
    {"weyl-z5", "(x1 + 2)*(x2 - 3)^2"},
    {"weyl-z5", "-x1^3 + 4*x2*x1 - (x1 - x2)*(x1 + x2)"},
    {"weyl-z5", "x1^0"},
    {"quantum-plane-z3", "2*x2*x1*x2 + x1^2"},
    {"quantum-plane-z3", "((x1))^2 - -1"},
    {"z2xz2-swap", "(0,1) + (0,1)*x1"},
    {"z2xz2-swap", "(1,0) - (0,1)*x1"},
    {"z2xz2-swap", "x1*(1,0)*x1^2"},
    {"ut2z2-trivial", "[[1,1],[0,1]]*x1 + [[0,1],[0,0]]"},
    {"diff-poly-z5", "x1^2*t"},
    {"diff-poly-z5", "x1*poly(1,2,3) - t^2*x1"},
    {"matrix-zq-half", "x1*[1,1/3] + [2,-5/7]*x1^2"},
    {"z2poly-eval0", "x1*(t + 1)*x1"},
};

}  // namespace

TEST_CASE("parser precedence and round trip") {
  auto w = entry("weyl-z5");
  const auto& R = w->ring();
  auto e = parse_expr(R, 2, "x1 + 2*x2^2");
  REQUIRE(e.kind == ExprNode::Kind::Add);
  CHECK(e.kids[1].kind == ExprNode::Kind::Mul);
  CHECK(e.kids[1].kids[1].kind == ExprNode::Kind::Pow);
  // '*' keeps the written order
  CHECK(parse_expr(R, 2, "x2*x1") != parse_expr(R, 2, "x1*x2"));

  for (const auto& [name, text] : corpus) {
    CAPTURE(name);
    CAPTURE(text);
    auto a = entry(name);
    const auto tree = parse_expr(a->ring(), a->n(), text);
    CHECK(parse_expr(a->ring(), a->n(), render_expr(a->ring(), tree)) == tree);
    const auto f = evaluate(*a, tree);
    CHECK(parse_poly(*a, a->render(f)) == f);
  }

  CHECK_THROWS_AS(parse_expr(R, 2, "x3"), ParseError);
  CHECK_THROWS_AS(parse_expr(R, 2, "x1^-1"), ParseError);
  CHECK_THROWS_AS(parse_expr(R, 2, "(x1"), ParseError);
  CHECK_THROWS_AS(parse_expr(R, 2, "x1 x2"), ParseError);
}

TEST_CASE("rendering of every polynomial parses back") {
  for (const auto& name : {"z2xz2-swap", "ut2z2-trivial", "z4-trivial"}) {
    auto a = entry(name);
    for (const auto& f : all_polys_up_to(a, 1)) CHECK(parse_poly(*a, a->render(f)) == f);
  }
  std::mt19937_64 rng(2);
  for (const auto& name : {"matrix-zq-half", "diff-poly-z5", "weyl-z5"}) {
    auto a = entry(name);
    for (int k = 0; k < 100; ++k) {
      SkewPoly f;
      for (const auto& m : monomials_up_to(a->n(), 2)) f.add_term(a->ring(), m, a->ring().random(rng));
      CHECK(parse_poly(*a, a->render(f)) == f);
    }
  }
}

TEST_CASE("definition documents") {
  SUBCASE("catalog entries round trip") {
    for (const auto& name : catalog_names()) {
      CAPTURE(name);
      auto a = entry(name);
      const auto doc = to_definition(*a);
      auto b = load_definition(doc);
      CHECK(canonical_text(to_definition(*b)) == canonical_text(doc));
      CHECK(load_definition_text(canonical_text(doc))->name() == a->name());
      CHECK(b->flags().quasi_commutative == a->flags().quasi_commutative);
      CHECK(b->flags().bijective == a->flags().bijective);
    }
  }
  SUBCASE("schema problems are rejected") {
    auto doc = to_definition(*entry("z2xz2-swap"));
    auto extra = doc;
    extra["colour"] = "blue";
    CHECK_THROWS_AS(load_definition(extra), DefinitionError);
    auto nested = doc;
    nested["extension"]["bogus"] = 1;
    CHECK_THROWS_AS(load_definition(nested), DefinitionError);
    auto missing = doc;
    missing.erase("ring");
    CHECK_THROWS_AS(load_definition(missing), DefinitionError);
    CHECK_THROWS_AS(load_definition_text("{ not json"), DefinitionError);
  }
  SUBCASE("schema is a JSON document with the top-level keys") {
    const auto& s = definition_schema();
    for (const char* k : {"ring", "extension"}) CHECK(s["properties"].contains(k));
  }
}

TEST_CASE("cli examples") {
  auto r = cli("catalog quantum-plane-z3 eval 'x2*x1'");
  CHECK(r.code == 0);
  CHECK(r.out == "2*x1*x2\n");
  r = cli("catalog weyl-z5 eval 'x2*x1'");
  CHECK(r.out == "x1*x2 + 1\n");
  r = cli("catalog diff-poly-z5 eval 'x1^2*t'");
  CHECK(r.out == "t*x1^2 + 2*x1\n");
  r = cli("catalog diff-poly-z5 eval 'x1*t'");
  CHECK(r.out == "t*x1 + 1\n");
  r = cli("catalog z2-trivial eval 'x1^0'");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = cli("catalog z2xz2-swap witness skew-armendariz --degree 1");
  CHECK(r.code == 1);
  CHECK(r.out == "f=(0,1)*x1 + (0,1); g=(0,1)*x1 + (1,0); a0*b1=(0,1)\n");
}

TEST_CASE("cli exit codes") {
  CHECK(cli("").code == 64);
  CHECK(cli("catalog nope validate").code == 64);
  CHECK(cli("catalog z2-trivial check no-such-property").code == 64);
  CHECK(cli("catalog z2-trivial verify no-such-theorem").code == 64);
  CHECK(cli("catalog z2-trivial eval 'x1*('").code == 64);
  CHECK(cli("--format xml catalog list").code == 64);
  CHECK(cli("validate /nonexistent/file.json").code == 65);
  CHECK(cli("validate " + temp_file("unknown_key", R"({"ring":{"kind":"modular","modulus":2},"extension":{"n":1},"x":0})")).code == 65);
  CHECK(cli("--cap-multiplications 16 catalog ut2z2-trivial check skew-armendariz").code == 70);
  CHECK(cli("catalog matrix-zq-half check skew-armendariz").code == 70);

  const auto def = cli("catalog weyl-z5 definition");
  REQUIRE(def.code == 0);
  const auto path = temp_file("weyl", def.out);
  CHECK(cli("validate " + path).code == 0);
  CHECK(cli("eval " + path + " 'x2*x1'").out == "x1*x2 + 1\n");
  CHECK(cli("verify " + path + " all").code == 0);
}

TEST_CASE("exit codes match every expected-table row") {
  for (const auto& name : catalog_names()) {
    for (const auto& row : expected_table(name)) {
      CAPTURE(name);
      CAPTURE(property_name(row.property));
      const std::string args = "--degree " + std::to_string(row.degree) + " catalog " + name + " check " + property_name(row.property);
      const auto human = cli(args);
      CHECK(human.code == expected_code(row.status));
      const auto machine = cli("--format json " + args);
      CHECK(machine.code == human.code);
      const auto doc = Json::parse(machine.out);
      CHECK(doc["label"] == row.status);
    }
  }
}

TEST_CASE("machine output is stable") {
  for (const auto& args : {std::string("catalog z2xz2-swap report"), std::string("catalog ut2z2-trivial verify all"),
                           std::string("catalog z6-trivial check baer")}) {
    CAPTURE(args);
    const auto a = cli("--format json-like-tree " + args);
    const auto b = cli("--format json-like-tree " + args);
    const auto c = cli("--threads 4 --format json-like-tree " + args);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.code == c.code);
    CHECK(Json::parse(a.out).dump(2) + "\n" == a.out);
    CHECK(cli(args).code == a.code);
  }
}
