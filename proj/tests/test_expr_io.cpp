#include <gtest/gtest.h>

#include "supergrass/expr_io.hpp"
#include "supergrass/random.hpp"

using namespace sg;

namespace {

TablePtr sample_table() {
  SymbolTable st;
  st.add_even("x");
  st.add_even("y");
  st.add_even("phi_t");
  st.add_clifford("eps", Rational(1));
  st.add_odd("th1");
  st.add_odd("th2");
  st.add_odd("th3");
  st.add_odd("et1");
  st.add_odd("et2");
  return freeze(std::move(st));
}

}  // namespace

TEST(Dsl, CanonicalOrdering) {
  const auto t = infer_table({"th1*th2 + 2*x"});
  EXPECT_EQ(parse_poly("th1*th2 + 2*x", t).str(), "2*x + th1*th2");
  EXPECT_EQ(parse_poly("th1*th1", t).str(), "0");
  EXPECT_EQ(parse_poly("th2*th1", t).str(), "-th1*th2");
}

TEST(Dsl, SupertimeBrackets) {
  const auto ctx = DslContext::supertime();
  EXPECT_EQ(to_text(evaluate("[D,D]", ctx)), "-2*d/dt");
  EXPECT_EQ(to_text(evaluate("[tau, tau]", ctx)), "2*d/dt");
  EXPECT_EQ(to_text(evaluate("[D, tau]", ctx)), "0");
  EXPECT_EQ(to_text(evaluate("tau - D", ctx)), "2*th*d/dt");
  EXPECT_EQ(to_text(evaluate("D[D](t*th)", ctx)), "t");
  EXPECT_EQ(to_text(evaluate("D[D](t + th)", ctx)), "1 - th");
  EXPECT_EQ(to_text(evaluate("[D,D](t^2)", ctx)), "-4*t");
}

TEST(Dsl, ArithmeticAndOperators) {
  const auto t = sample_table();
  EXPECT_EQ(parse_poly("(x + y)^2 - x^2 - y^2", t).str(), "2*x*y");
  EXPECT_EQ(parse_poly("eps*eps", t).str(), "-1");
  EXPECT_EQ(parse_poly("(1 + I)*(1 - I)", t).str(), "2");
  EXPECT_EQ(parse_poly("D[x](x^3*th1)", t).str(), "3*x^2*th1");
  EXPECT_EQ(parse_poly("D[th1](th2*th1)", t).str(), "-th2");
  EXPECT_EQ(parse_poly("ber(th1*th2*x)", t).str(), "0");
  EXPECT_EQ(parse_poly("ber(th1*th2*th3*x)", t).str(), "x");
  EXPECT_EQ(parse_poly("ber(th2*th1, th1, th2)", t).str(), "-1");
  EXPECT_EQ(parse_poly("[th1, th2]", t).str(), "0");
  EXPECT_EQ(parse_poly("[eps, eps]", t).str(), "-2");
  EXPECT_EQ(parse_poly("[x, th1]", t).str(), "0");
  EXPECT_EQ(parse_poly("-1/2*x", t).str(), "-1/2*x");
  EXPECT_EQ(parse_poly("phi_t^2", t).str(), "phi_t^2");
}

TEST(Dsl, Errors) {
  const auto t = sample_table();
  try {
    parse("x +\n  * y");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_TRUE(e.expected().count("identifier"));
    EXPECT_EQ(e.found(), "'*'");
  }
  EXPECT_THROW(parse("x^y"), ParseError);
  EXPECT_THROW(parse("(x"), ParseError);
  EXPECT_THROW(parse("x $ y"), ParseError);
  try {
    parse_poly("x*zz", t);
    FAIL() << "no error";
  } catch (const UnknownSymbolError& e) {
    EXPECT_EQ(e.name(), "zz");
  }
  EXPECT_THROW(parse_poly("[x + th1, y]", t), ParityError);
}

TEST(Dsl, InferTable) {
  const auto t = infer_table({"th10*th2 + psi1_x*et1 + y*x + eps + ps2"});
  std::vector<std::string> names;
  for (std::uint32_t s = 0; s < t->size(); ++s) names.push_back(t->at(s).name);
  EXPECT_EQ(names, (std::vector<std::string>{"x", "y", "eps", "th2", "th10", "et1", "ps2", "psi1_x"}));
  EXPECT_EQ(t->at(2).kind, SymbolKind::CliffordGenerator);
  EXPECT_EQ(t->at(7).parity(), Parity::Odd);
}

TEST(Dsl, SyntaxTreePrinting) {
  EXPECT_EQ(print(parse("-(x + y)*z - -w")), "-(x + y)*z - (-w)");
  EXPECT_EQ(print(parse("(a + b) + c")), "(a + b) + c");
  EXPECT_EQ(print(parse("(1/2)^3 + [D, tau](t)")), "(1/2)^3 + [D, tau](t)");
  for (const char* s : {"x - 2*y^3*th1", "ber(th1*th2, th1, th2)", "D[x](x^2)"}) EXPECT_EQ(print(parse(s)), s);
}

TEST(Dsl, RandomRoundTrip) {
  const auto t = sample_table();
  Rng rng(2024);
  PolyShape shape;
  shape.max_terms = 6;
  shape.max_even_degree = 3;
  shape.max_odd = 3;
  for (int i = 0; i < 1200; ++i) {
    shape.gaussian = i % 3 == 0;
    const auto p = random_poly(rng, t, shape);
    const auto text = p.str();
    const auto back = parse_poly(text, t);
    ASSERT_EQ(back, p) << text;
    ASSERT_EQ(back.str(), text);
    EXPECT_EQ(print(parse(text)), text);
  }
}

TEST(Json, Schema) {
  const auto t = sample_table();
  const auto p = parse_poly("2/3*x^2*th1*et2 - 5*y", t);
  const auto j = to_json(p);
  EXPECT_EQ(j.dump(),
            R"({"terms":[{"coeff":"-5","even":{"y":1},"odd":[]},{"coeff":"2/3","even":{"x":2},"odd":["th1","et2"]}],"version":1})");
  EXPECT_THROW(from_json(nlohmann::json::parse(R"({"terms":[{"coeff":"1","odd":["zz"]}]})"), t), UnknownSymbolError);
  EXPECT_THROW(from_json(nlohmann::json::parse(R"({"version":2,"terms":[]})"), t), UnsupportedError);
  // Odd names in non-canonical order pick up the sign.
  EXPECT_EQ(from_json(nlohmann::json::parse(R"({"terms":[{"coeff":"1","odd":["th2","th1"]}]})"), t).str(), "-th1*th2");
}

TEST(Json, RandomRoundTripBitExact) {
  const auto t = sample_table();
  Rng rng(77);
  PolyShape shape;
  shape.max_terms = 6;
  for (int i = 0; i < 1000; ++i) {
    shape.gaussian = i % 2 == 0;
    const auto p = random_poly(rng, t, shape);
    const auto text = to_json(p).dump();
    const auto back = from_json(nlohmann::json::parse(text), t);
    ASSERT_EQ(back, p) << text;
    ASSERT_EQ(to_json(back).dump(), text);
  }
}
