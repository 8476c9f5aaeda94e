#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"

#include "binom/session.hpp"

using namespace binom;
using nlohmann::json;

namespace {

const char* kCubics = "ring QQ[x,y]; ideal I = x^3-y^3, x^4*y^5-x^5*y^4; primary I;";

const char* kTwelve =
    "ring QQ(zeta 12)[a,b,c,d,e,f];\n"
    "ideal I = b*d^2-a*f^2, b*c*e-a*c*f, b*c*d-a*c*e, b^2*e-a*b*f, b^2*c, a*e^2-b*f^2,\n"
    "  a*d^2-b*e^2, a*c*d-b*c*f, a*b*e-a^2*f, a*b*c, a*b^2-b^3, a^2*e-b^2*f, a^2*c, b^4,\n"
    "  a^2*b-b^3, a^3-b^3, c^3*e-c^3*f, c^4, b^3*d-b^3*f, a*c^3-b*c^3, c*d^4-c*e^2*f^2;\n"
    "primary I;\n";

const char* kPermanental =
    "ring QQ[x11,x12,x13,x21,x22,x23];\n"
    "ideal P = x11*x22 + x12*x21, x11*x23 + x13*x21, x12*x23 + x13*x22;\n"
    "minprimes P;\n";

Report run(const std::string& text, bool as_json = false, bool verify = false) {
  RunOptions opt;
  opt.json = as_json;
  opt.verify = verify;
  return run_text(text, opt);
}

}  // namespace

TEST_CASE("field headers") {
  CHECK(parse_field("QQ") == Field::rationals());
  CHECK(parse_field(" QQ(zeta 12) ") == Field::cyclotomic(12));
  CHECK(parse_field("GF(7)").to_string() == "GF(7)");
  CHECK(parse_field("GF(3^2; t^2+1)").to_string() == "GF(3^2; t^2 + 1)");
  // coefficients are reduced mod p
  CHECK(parse_field("GF(3^2; t^2 - 2)") == parse_field("GF(3^2; t^2+1)"));
  CHECK(parse_field("GF(2^3)").is_finite());
  CHECK_THROWS_AS(parse_field("GF(4)"), BadFieldSpec);
  CHECK_THROWS_AS(parse_field("GF(3^2; t^2+2*t+1)"), BadFieldSpec);  // reducible
  CHECK_THROWS_AS(parse_field("RR"), BadFieldSpec);
  CHECK_THROWS_AS(parse_field("QQ(zeta x)"), BadFieldSpec);
}

TEST_CASE("parsing the cubic session") {
  Session s = parse_session(kCubics);
  CHECK(s.ring->field == Field::rationals());
  CHECK(s.ring->names == std::vector<std::string>{"x", "y"});
  REQUIRE(s.ideals.size() == 1);
  CHECK(s.ideal("I") == Ideal::parse(s.ring, "x^3 - y^3, x^4*y^5 - x^5*y^4"));
  REQUIRE(s.commands.size() == 1);
  CHECK(s.commands[0] == Command{"primary", "I"});
}

TEST_CASE("parsing a characteristic-two session") {
  Session s = parse_session("ring GF(2)[x]; ideal I = x^2-1; radical I;");
  CHECK(s.ring->field.is_finite());
  CHECK(s.ideal("I") == Ideal::parse(s.ring, "x^2 + 1"));
  CHECK(s.commands[0].op == "radical");
}

TEST_CASE("parsing the twenty-one generator session over QQ(zeta_12)") {
  Session s = parse_session(kTwelve);
  CHECK(s.ring->field == Field::cyclotomic(12));
  CHECK(s.find("I").gens.size() == 21);
}

TEST_CASE("character blocks") {
  Session s = parse_session("ring QQ(zeta 4)[a,b,c]; character J = {a,b} [[2,-2]] [z4]; circuits J;");
  const IdealDecl& d = s.find("J");
  CHECK(d.from_character);
  CHECK(d.character.cell == std::vector<std::string>{"a", "b"});
  CHECK(s.ideal("J") == Ideal::parse(s.ring, "a^2 - z4*b^2"));
  CHECK(s.character("J").lattice().rank() == 1);
  // the empty lattice gives the zero ideal
  Session e = parse_session("ring QQ[a]; character J = {a} [] []; radical J;");
  CHECK(e.ideal("J").is_zero());
}

TEST_CASE("comments and layout are ignored") {
  Session a = parse_session(kCubics);
  Session b = parse_session("# header\nring QQ[ x , y ];  # the ring\n\nideal I =\n  x^3-y^3,\n  x^4*y^5-x^5*y^4;\nprimary I;\n");
  CHECK(a == b);
}

TEST_CASE("render then parse is the identity") {
  const char* sessions[] = {
      kCubics, kTwelve, kPermanental, "ring GF(2)[x]; ideal I = x^2-1; radical I;",
      "ring GF(3^2; t^2+1)[x,y]; ideal I = x^2 - t*y^2, x*y^3 - (t+1)*y; ideal J = x - y; hull I; cellular J;",
      "ring QQ(zeta 6)[a,b,c]; character R = {a,c} [[1,-3],[0,6]] [z6^2, 1]; circuits R; primary R;",
      "ring QQ[a,b]; ideal I = a - 3/4*b, b^2; isprimary I; assprimes I;"};
  for (const char* text : sessions) {
    Session s = parse_session(text);
    std::string once = render_session(s);
    Session t = parse_session(once);
    CHECK(t == s);
    CHECK(render_session(t) == once);
  }
}

TEST_CASE("diagnostics carry line and column") {
  try {
    parse_session("ring QQ[x,y];\nideal I = x^2 - q*y;\n");
    FAIL("expected UnknownVariable");
  } catch (const UnknownVariable& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 17);
  }
  try {
    parse_session("ring QQ[x];\n\n  frobnicate I;");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_session("ring QQ[x]; ideal I = x^2"), SyntaxError);        // missing ';'
  CHECK_THROWS_AS(parse_session("ideal I = x; ring QQ[x];"), SyntaxError);         // ring first
  CHECK_THROWS_AS(parse_session("ring QQ[x]; ring QQ[y];"), SyntaxError);
  CHECK_THROWS_AS(parse_session("ring QQ[x]; ideal I = x; ideal I = x^2;"), SyntaxError);
  CHECK_THROWS_AS(parse_session("ring QQ[x]; ideal I = x + ;"), SyntaxError);
  CHECK_THROWS_AS(parse_session("ring GF(6)[x];"), BadFieldSpec);
  CHECK_THROWS_AS(parse_session("ring QQ[x]; radical J;"), UsageError);            // undeclared
  CHECK_THROWS_AS(parse_session("ring QQ[x,y]; character J = {x,w} [[1,1]] [1];"), UnknownVariable);
  CHECK_THROWS_AS(parse_session("ring QQ[x,y]; character J = {x,y} [[1,1]] [];"), SyntaxError);
}

TEST_CASE("primary decomposition of the cubic session") {
  Report r = run(kCubics, true, true);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["command"] == "primary");
  REQUIRE(j["components"].size() == 2);
  CHECK(j["components"][0]["generators"] == json::array({"x - y"}));
  CHECK(j["components"][1]["embedded"] == true);
  CHECK(j["certificates"]["intersection_verified"] == true);
  CHECK(j["certificates"]["primary_certified"] == true);
}

TEST_CASE("minimal primes of the permanental ideal") {
  Report r = run(kPermanental, true, true);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  REQUIRE(j["primes"].size() == 5);
  CHECK(j["certificates"]["all_prime"] == true);
  CHECK(j["certificates"]["intersection_is_radical"] == true);
  Session s = parse_session(kPermanental);
  std::vector<Ideal> expect = {Ideal::parse(s.ring, "x11, x12, x13"), Ideal::parse(s.ring, "x21, x22, x23"),
                               Ideal::parse(s.ring, "x11*x22 + x12*x21, x13, x23"),
                               Ideal::parse(s.ring, "x11*x23 + x13*x21, x12, x22"),
                               Ideal::parse(s.ring, "x12*x23 + x13*x22, x11, x21")};
  for (const auto& p : j["primes"]) {
    std::string gens;
    for (const auto& g : p["generators"]) gens += (gens.empty() ? "" : ", ") + g.get<std::string>();
    Ideal got = Ideal::parse(s.ring, gens);
    CHECK(std::count(expect.begin(), expect.end(), got) == 1);
  }
  // the radical command agrees: the permanental ideal is radical
  Report rad = run(std::string(kPermanental) + "radical P;", false);
  CHECK(rad.exit_code == 0);
}

TEST_CASE("a prime ideal is its own primary decomposition") {
  Report r = run("ring QQ[a,b,c,d]; ideal T = a*c - b^2, b*d - c^2, a*d - b*c; primary T;", true, true);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  REQUIRE(j["components"].size() == 1);
  Session s = parse_session("ring QQ[a,b,c,d]; ideal T = a*c - b^2, b*d - c^2, a*d - b*c;");
  std::string gens;
  for (const auto& g : j["components"][0]["generators"]) gens += (gens.empty() ? "" : ", ") + g.get<std::string>();
  CHECK(Ideal::parse(s.ring, gens) == s.ideal("T"));
}

TEST_CASE("cellular decomposition with an insufficient exponent guess") {
  Report r = run("ring QQ[x1,x2,x3,x4,x5];\n"
                 "ideal I = x1*x4^2 - x2*x5^2, x1^3*x3^3 - x2^4*x4^2, x2*x4^8 - x3^3*x5^6;\n"
                 "cellular I;",
                 true, true);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.output);
  CHECK(j["cells"].size() == 2);
  CHECK(j["certificates"]["intersection_verified"] == true);
}

TEST_CASE("every command runs") {
  std::string text = "ring QQ[x,y,z]; ideal I = x^2*y - x*y^2, x*z^2, y^3*z;";
  for (const auto& op : command_names())
    if (op != "circuits") text += op + " I;";
  text += "character R = {x,y,z} [[1,1,-2]] [1]; circuits R;";
  Report human = run(text, false, true);
  CHECK(human.exit_code == 0);
  CHECK(human.output.find("-- hull I") != std::string::npos);
  Report js = run(text, true, true);
  REQUIRE(js.exit_code == 0);
  json j = json::parse(js.output);
  CHECK(j.is_array());
  CHECK(j.size() == command_names().size());
  CHECK(j.back()["circuits"].size() == 1);
  CHECK(j[4]["primary"] == false);  // isprimary: the ideal has embedded structure on several cells
}

TEST_CASE("output is byte-identical across runs and with worker threads") {
  std::string text = std::string(kTwelve);
  Report a = run(text, true);
  Report b = run(text, true);
  RunOptions par;
  par.json = true;
  par.decompose.parallel = true;
  Report c = run_text(text, par);
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output == c.output);
  CHECK(json::parse(a.output)["components"].size() == 17);
}

TEST_CASE("exit codes") {
  CHECK(run("ring QQ[x]; ideal I = x^2 - 1; primary I;").exit_code == 0);
  Report usage = run("ring QQ[x]; ideal I = x^2 - q;");
  CHECK(usage.exit_code == 1);
  CHECK(usage.error.find("1:29") != std::string::npos);
  CHECK(run("ring GF(9)[x];").exit_code == 1);
  CHECK(run("ring QQ[x,y]; ideal I = x + y + 1; radical I;").exit_code == 1);  // not binomial
  // the component of x^2 - 2 needs a square root of 2
  Report math = run("ring QQ[x]; ideal I = x^2 - 2; primary I;", true);
  CHECK(math.exit_code == 2);
  CHECK(math.output.empty());
  CHECK(math.error.find("primary decomposition") != std::string::npos);
}
