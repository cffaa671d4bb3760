#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glc/io.hpp"

#include <sstream>

using namespace glc;

namespace {

RingSpec bigraded2() {
  GradingData g{{Multidegree({1, 0})}, {Multidegree({0, 1})}};
  return RingSpec(g, PrimeField(32003));
}

}  // namespace

TEST_CASE("parsing the shipped hypersurface instance") {
  Instance inst = parse_instance_file(std::string(GLC_SOURCE_DIR) + "/instances/bigraded_hr.ring");
  CHECK(inst.grading.m() == 2);
  CHECK(inst.grading.n() == 1);
  CHECK(inst.grading.deg_x[0] == Multidegree({1, 0}));
  CHECK(inst.grading.deg_x[1] == Multidegree({1, 0}));
  CHECK(inst.grading.deg_y[0] == Multidegree({0, 1}));
  CHECK(inst.characteristic == 32003);
  REQUIRE(inst.quotient.size() == 1);
  CHECK(poly_str(inst.ring(), inst.quotient[0]) == "x1*y1");
  CHECK(inst.mod_m.f0.rank() == 1);
  CHECK(inst.mod_m.relations.empty());
  REQUIRE(inst.mod_n.relations.size() == 1);
  CHECK(poly_str(inst.ring(), inst.mod_n.relations[0][0]) == "x2");
  CHECK(inst.window == 3);
  CHECK(inst.max_resolution == 12);
  REQUIRE(inst.scenario.has_value());
  CHECK(*inst.scenario == "herzog_rahimi");
}

TEST_CASE("instance defaults") {
  std::istringstream in(
      "[ring]\n"
      "xvars = 1\n"
      "yvars = 1\n"
      "deg x1 = (1,0)\n"
      "deg y1 = (0,1)\n");
  Instance inst = parse_instance(in);
  CHECK(inst.characteristic == 32003);
  CHECK(inst.quotient.empty());
  CHECK(inst.mod_m.f0.rank() == 1);
  CHECK(inst.mod_m.f0.shifts[0].is_zero());
  CHECK(inst.mod_m.relations.empty());
  CHECK(inst.mod_n.f0.rank() == 1);
  CHECK(inst.window == 4);
  CHECK(inst.max_resolution == 12);
  CHECK(inst.oracle_tmax == 5);
  CHECK(inst.trunc_extra == 1);
  CHECK(!inst.scenario.has_value());
}

TEST_CASE("module sections with shifts and several components") {
  std::istringstream in(
      "[ring]\n"
      "xvars = 1\n"
      "yvars = 1\n"
      "deg x1 = (1,0)\n"
      "deg y1 = (0,1)\n"
      "[module M]\n"
      "shifts = (0,0), (0,1)\n"
      "y1, -1\n"
      "x1^2, 0\n"
      "[params]\n"
      "window = 2\n"
      "oracle_tmax = 7\n"
      "trunc_extra = 3\n");
  Instance inst = parse_instance(in);
  REQUIRE(inst.mod_m.f0.rank() == 2);
  CHECK(inst.mod_m.f0.shifts[1] == Multidegree({0, 1}));
  REQUIRE(inst.mod_m.relations.size() == 2);
  CHECK(poly_str(inst.ring(), inst.mod_m.relations[0][0]) == "y1");
  CHECK(poly_str(inst.ring(), inst.mod_m.relations[0][1]) == "32002");
  CHECK(poly_str(inst.ring(), inst.mod_m.relations[1][1]) == "0");
  CHECK(inst.window == 2);
  CHECK(inst.oracle_tmax == 7);
  CHECK(inst.trunc_extra == 3);
}

TEST_CASE("comments and blank lines are ignored") {
  std::istringstream in(
      "# leading comment\n"
      "\n"
      "[ring]  # trailing comment\n"
      "xvars = 1\n"
      "yvars = 0\n"
      "deg x1 = (1)\n"
      "\n"
      "[quotient]\n"
      "x1^2  # the relation\n");
  Instance inst = parse_instance(in);
  REQUIRE(inst.quotient.size() == 1);
  CHECK(poly_str(inst.ring(), inst.quotient[0]) == "x1^2");
}

TEST_CASE("instance parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_instance(in);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };

  CHECK(line_of("x1\n") == 1);                     // content before any section
  CHECK(line_of("[ring]\nxvars = 1\n") == 1);      // missing yvars
  CHECK(line_of("[nope]\n") == 1);                 // unknown section
  CHECK(line_of("") == 1);                         // missing [ring]
  CHECK(line_of("[ring]\nxvars\n") == 2);          // no '='
  CHECK(line_of("[ring]\nxvars = 1\nyvars = 0\nchar = 4\ndeg x1 = (1)\n") == 4);
  CHECK(line_of("[ring]\nxvars = 1\nyvars = 0\nwhat = 1\ndeg x1 = (1)\n") == 4);
  CHECK(line_of("[ring]\nxvars = 1\nyvars = 0\ndeg x2 = (1)\n") == 4);
  CHECK(line_of("[ring]\nxvars = 1\nyvars = 0\n") == 1);  // missing degree, blamed on header
  CHECK(line_of("[ring]\nxvars = -1\nyvars = 0\ndeg x1 = (1)\n") == 2);
  CHECK(line_of("[ring]\nxvars = 1\nyvars = 0\ndeg x1 = (1)\n[params]\nbogus = 1\n") == 6);
  CHECK(line_of("[ring]\nxvars = 1\nyvars = 0\ndeg x1 = (1)\n[params]\nwindow\n") == 6);

  std::string head =
      "[ring]\nxvars = 1\nyvars = 0\ndeg x1 = (1)\n[module M]\n";
  CHECK(line_of(head + "shifts = (0)\nshifts = (1)\n") == 7);   // duplicate shifts
  CHECK(line_of(head + "x1\nshifts = (0)\n") == 7);             // shifts after a row
  CHECK(line_of(head + "shifts =\n") == 6);                     // empty shifts list
  CHECK(line_of(head + "x1, x1\n") == 6);                       // wrong row width
}

TEST_CASE("polynomial grammar") {
  RingSpec R = bigraded2();
  CHECK(poly_str(R, parse_polynomial(R, "x1^2 - y1^2")) == "x1^2 + 32002*y1^2");
  CHECK(poly_str(R, parse_polynomial(R, "3*x1*y1")) == "3*x1*y1");
  CHECK(poly_str(R, parse_polynomial(R, "-x1")) == "32002*x1");
  CHECK(poly_str(R, parse_polynomial(R, "x1 - x1")) == "0");
  CHECK(poly_str(R, parse_polynomial(R, "2 + 3")) == "5");
  CHECK(poly_str(R, parse_polynomial(R, " x1 * y1 ")) == "x1*y1");

  CHECK_THROWS_AS(parse_polynomial(R, ""), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x1 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x3"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "y2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "z1"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x1^"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x1**y1"), ParseError);

  try {
    parse_polynomial(R, "q7", 42);
  } catch (const ParseError& e) {
    CHECK(e.line == 42);
    CHECK(std::string(e.what()).find("line 42") != std::string::npos);
  }
}

TEST_CASE("module element grammar") {
  RingSpec R = bigraded2();
  ModuleElement v = parse_module_element(R, 2, "x1 + y1, 0");
  REQUIRE(v.size() == 2);
  CHECK(poly_str(R, v[0]) == "x1 + y1");
  CHECK(poly_str(R, v[1]) == "0");
  CHECK_THROWS_AS(parse_module_element(R, 2, "x1"), ParseError);
  CHECK_THROWS_AS(parse_module_element(R, 1, "x1, y1"), ParseError);
}

TEST_CASE("degree tuple grammar") {
  CHECK(parse_degree_tuple("(1,-2)", 2) == Multidegree({1, -2}));
  CHECK(parse_degree_tuple(" ( 0 , 3 ) ", 2) == Multidegree({0, 3}));
  CHECK_THROWS_AS(parse_degree_tuple("1,0", 2), ParseError);
  CHECK_THROWS_AS(parse_degree_tuple("(1,0", 2), ParseError);
  CHECK_THROWS_AS(parse_degree_tuple("(1,0)", 3), ParseError);
  CHECK_THROWS_AS(parse_degree_tuple("(a,b)", 2), ParseError);
}

TEST_CASE("hypothesis report rendering") {
  HypothesisReport h;
  h.sharp = true;
  h.cohen_macaulay = true;
  h.pd_m = PdProbe{PdStatus::finite, 0};
  h.pd_n = PdProbe{PdStatus::exceeded_bound, 0};
  h.branch_m = true;
  CHECK(hypothesis_text(h) ==
        "sharp=yes cohen_macaulay=yes pd(M)=0 pd(N)=not certified branch=finite pd of M");

  h.branch_m = false;
  h.tor_vanishes = true;
  h.pd_n = PdProbe{PdStatus::finite, 2};
  h.branch_n = true;
  CHECK(hypothesis_text(h) ==
        "sharp=yes cohen_macaulay=yes pd(M)=0 pd(N)=2 tor_vanishes=yes "
        "branch=finite pd of N with Tor vanishing");
}

TEST_CASE("duality report rendering") {
  DualityReport rep;
  rep.dim_s = 1;
  rep.window = 0;
  rep.cells.push_back(DualityCell{0, Multidegree({0}), 1, 1, true});
  rep.cells.push_back(DualityCell{1, Multidegree({-1}), 2, 0, false});

  std::string text = duality_report_text(rep);
  CHECK(text.find("dim S = 1, window radius 0\n") != std::string::npos);
  CHECK(text.find("FAIL 1/2 cells\n") != std::string::npos);
  CHECK(text.find("  i=1 gamma=(-1) lhs=2 rhs=0\n") != std::string::npos);

  CHECK(duality_report_tsv(rep) ==
        "i\tgamma\tlhs\trhs\tmatch\n"
        "0\t(0)\t1\t1\t1\n"
        "1\t(-1)\t2\t0\t0\n");

  rep.cells[1].rhs = 2;
  rep.cells[1].match = true;
  std::string pass = duality_report_text(rep);
  CHECK(pass.find("PASS 2/2 cells\n") != std::string::npos);
  CHECK(pass.find("i=1") == std::string::npos);

  // rendering is a pure function of the report
  CHECK(duality_report_text(rep) == pass);
}

TEST_CASE("betti table rendering") {
  RingSpec R = bigraded2();
  QuotientContext ctx = QuotientContext::make(R, {});
  Presentation k{FreeModule::of_rank(1, 2), {{poly_var(2, 0)}, {poly_var(2, 1)}}};
  Resolution res = resolve(ctx, k, 4);
  minimize(ctx, res);
  CHECK(betti_table_text(res) ==
        "0: total 1, degrees (0,0)\n"
        "1: total 2, degrees (0,1), (1,0)\n"
        "2: total 1, degrees (1,1)\n");
}

TEST_CASE("sharpness rendering") {
  CHECK(sharp_report_text(bigraded2().grading) == "sharp\n");

  GradingData coarse{{Multidegree({1})}, {Multidegree({1})}};
  std::string s = sharp_report_text(coarse);
  CHECK(s.rfind("not sharp: alpha = (", 0) == 0);
  CHECK(s.find(", beta = (") != std::string::npos);
  CHECK(s.back() == '\n');
}

TEST_CASE("missing instance file") {
  CHECK_THROWS_AS(parse_instance_file("/nonexistent/path.ring"), Error);
}
