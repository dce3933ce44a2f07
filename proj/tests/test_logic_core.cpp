#include <set>

#include "doctest.h"
#include "ffrag/ast.hpp"
#include "ffrag/generate.hpp"
#include "ffrag/godel.hpp"
#include "ffrag/parse.hpp"
#include "ffrag/print.hpp"

using namespace ffrag;

TEST_CASE("built-in signatures") {
  const Signature& ring = ring_signature();
  CHECK(ring.sorts() == std::vector<std::string>{"K"});
  CHECK(ring.function("+.K") != nullptr);
  CHECK(ring.constant("1.K") != nullptr);
  CHECK(ring.relation("O") == nullptr);

  const Signature& val = valued_signature();
  CHECK(val.sorts() == std::vector<std::string>({"K", "k", "G"}));
  CHECK(val.function("v")->result_sort == "G");
  CHECK(val.function("res")->result_sort == "k");
  CHECK(val.constant("inf.G")->sort == "G");
  CHECK(val.constant("varpi") == nullptr);
  CHECK(valued_varpi_signature().constant("varpi")->sort == "K");
  CHECK(onesorted_signature().relation("O") != nullptr);
}

TEST_CASE("parse and print round trips") {
  const Signature& ring = ring_signature();
  std::string t = "(exists (x K) (= (*.K x x) (+.K 1.K 1.K)))";
  Sentence s = parse_sentence(t, ring);
  CHECK(s.kind == Formula::Kind::Exists);
  // binder renamed to the canonical depth name
  CHECK(print_canonical(s) == "(exists (x0 K) (= (*.K x0 x0) (+.K 1.K 1.K)))");
  CHECK(parse_sentence(print_canonical(s), ring) == s);

  CHECK(print_canonical(parse_sentence("(true)", ring)) == "(true)");
  CHECK(parse_sentence("(true)", ring) == f_true());
}

TEST_CASE("n-ary and/or canonicalize right-nested") {
  const Signature& ring = ring_signature();
  Sentence s = parse_sentence("(and (true) (false) (true))", ring);
  CHECK(print_canonical(s) == "(and (true) (and (false) (true)))");
  Sentence o = parse_sentence("(or (true) (false) (true) (false))", ring);
  CHECK(print_canonical(o) == "(or (true) (or (false) (or (true) (false))))");
}

TEST_CASE("parse errors") {
  const Signature& ring = ring_signature();
  CHECK_THROWS_AS(parse_sentence("(exists (x K) (= x y))", ring), Error);
  try {
    parse_sentence("(exists (x K) (= x y))", ring);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FreeVariable);
  }
  try {
    parse_sentence("(zap (true))", ring);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSymbol);
  }
  try {
    parse_sentence("(and (true)", ring);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Syntax);
  }
  // ill-sorted equality across sorts
  try {
    parse_sentence("(exists (x K) (= (v x) 0.K))", valued_signature());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Sort);
  }
}

TEST_CASE("check_well_sorted") {
  const Signature& val = valued_signature();
  Sentence ok = parse_sentence("(forall (x K) (= (v x) 0.G))", val);
  CHECK(check_well_sorted(ok, val).empty());

  Sentence o_atom = parse_sentence("(O (+.K 1.K 1.K))", onesorted_signature());
  CHECK(check_well_sorted(o_atom, onesorted_signature()).empty());

  // hand-built broken node: equality between K and G
  Formula bad = ok;
  bad.kids[0].terms[1] = Term::constant(ring_signature(), "0.K");
  auto violations = check_well_sorted(bad, val);
  REQUIRE(!violations.empty());
  CHECK(violations[0].kind == ErrorKind::Sort);

  // free variable reported, not thrown
  Formula open = f_eq(Term::var("y", "K"), Term::constant(ring_signature(), "0.K"));
  auto v2 = check_well_sorted(open, ring_signature());
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].kind == ErrorKind::FreeVariable);
  CHECK(free_variables(open) == std::vector<std::string>{"y"});
}

TEST_CASE("godel code of (true) matches the byte layout") {
  // bytes 01 28 74 72 75 65 29
  Natural expect("0x01287472756529");
  CHECK(godel_code(f_true()) == expect);
}

TEST_CASE("godel decode rejects non-codes") {
  CHECK(!godel_decode(Natural(0), ring_signature()).has_value());
  CHECK(!godel_decode(Natural(41), ring_signature()).has_value());
  // a code must re-print to the same bytes: non-canonical text fails
  Natural sloppy = godel_code_of_text("(and  (true) (true))");
  CHECK(!godel_decode(sloppy, ring_signature()).has_value());
}

TEST_CASE("round trip, injectivity and decidable image on a generated corpus") {
  Rng rng(20260811);
  std::set<std::string> texts;
  std::set<Natural> codes;
  const Signature& ring = ring_signature();
  int n = 10000;
  for (int i = 0; i < n; ++i) {
    Sentence s = gen_ring_sentence(rng);
    std::string text = print_canonical(s);
    Sentence back = parse_sentence(text, ring);
    REQUIRE(back == s);
    Natural code = godel_code(s);
    auto dec = godel_decode(code, ring);
    REQUIRE(dec.has_value());
    REQUIRE(*dec == s);
    bool new_text = texts.insert(text).second;
    bool new_code = codes.insert(code).second;
    REQUIRE(new_text == new_code);  // distinct ASTs get distinct codes
  }

  // image decidability: random naturals below 2^64 never mis-accept
  Rng r2(7);
  for (int i = 0; i < 10000; ++i) {
    Natural n64 = Natural(r2.next(~uint64_t{0}));
    auto dec = godel_decode(n64, ring);
    if (dec) {
      Natural re = godel_code(*dec);
      CHECK(re == n64);
    }
  }
}
