#include <memory>

#include "doctest.h"
#include "ffrag/generate.hpp"
#include "ffrag/model.hpp"
#include "ffrag/oracle.hpp"
#include "ffrag/parse.hpp"
#include "ffrag/print.hpp"
#include "ffrag/qrational.hpp"
#include "ffrag/toy.hpp"

using namespace ffrag;

namespace {
Sentence ring(const std::string& text) { return parse_sentence(text, ring_signature()); }
}  // namespace

TEST_CASE("rational root machinery") {
  // x^2 - 2 has no rational roots
  ZPoly p({-2, 0, 1});
  CHECK(rational_roots(p).empty());
  // 2x - 1 has root 1/2
  ZPoly lin({-1, 2});
  auto r = rational_roots(lin);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == Rational(1, 2));
  // x^3 - x = x(x-1)(x+1)
  ZPoly cub({0, -1, 0, 1});
  auto r3 = rational_roots(cub);
  REQUIRE(r3.size() == 3);
  CHECK(r3[0] == Rational(-1, 1));
  CHECK(r3[1] == Rational(0, 1));
  CHECK(r3[2] == Rational(1, 1));
}

TEST_CASE("decide_finite_field") {
  Sentence qr = ring("(exists (x K) (= (*.K x x) (+.K 1.K 1.K)))");
  CHECK(decide_finite_field(7, qr).verdict == Verdict::Yes);
  CHECK(decide_finite_field(3, qr).verdict == Verdict::No);
  CHECK(decide_finite_field(7, qr).soundness == Soundness::Exact);
  // rho_2 = "characteristic is not 2" fails in F_2
  Sentence rho2 = ring("(not (= (+.K 1.K 1.K) 0.K))");
  CHECK(decide_finite_field(2, rho2).verdict == Verdict::No);
  CHECK_THROWS_AS(decide_finite_field(6, qr), Error);
}

TEST_CASE("decide_exists1_Q golden cases") {
  CHECK(decide_exists1_Q(ring("(exists (x K) (= (*.K x x) (+.K 1.K 1.K)))")).verdict ==
        Verdict::No);  // x^2 = 2
  CHECK(decide_exists1_Q(ring("(exists (x K) (= (+.K x x) 1.K))")).verdict ==
        Verdict::Yes);  // x = 1/2
  CHECK(decide_exists1_Q(ring("(exists (x K) (and (not (= x 0.K)) (not (= x 1.K))))")).verdict ==
        Verdict::Yes);  // Q avoids finitely many points
  CHECK(decide_exists1_Q(f_true()).verdict == Verdict::Yes);
  CHECK(decide_exists1_Q(ring("(= (+.K 1.K 1.K) (*.K 1.K 1.K))")).verdict == Verdict::No);

  // two quantifiers in one leaf: budget error
  CHECK_THROWS_AS(decide_exists1_Q(ring("(exists (x K) (exists (y K) (= x y)))")), Error);
  // universal sentence: not existential
  CHECK_THROWS_AS(decide_exists1_Q(ring("(forall (x K) (= x x))")), Error);
}

TEST_CASE("decide_exists1_Q vs bounded brute force") {
  Rng rng(123);
  int concluded = 0;
  for (int iter = 0; iter < 200; ++iter) {
    Sentence s = gen_existential_ring_sentence(rng, 1);
    OracleAnswer a = decide_exists1_Q(s);
    REQUIRE(a.soundness == Soundness::Exact);

    // brute force over rationals with |num|, den <= 12 (scaled-down version
    // of the acceptance sweep, which uses 50)
    std::function<int(const Formula&)> brute = [&](const Formula& f) -> int {
      // 1 = yes, 0 = no (exact), -1 = inconclusive
      switch (f.kind) {
        case Formula::Kind::True: return 1;
        case Formula::Kind::False: return 0;
        case Formula::Kind::And: {
          int x = brute(f.kids[0]), y = brute(f.kids[1]);
          if (x == 0 || y == 0) return 0;
          if (x == 1 && y == 1) return 1;
          return -1;
        }
        case Formula::Kind::Or: {
          int x = brute(f.kids[0]), y = brute(f.kids[1]);
          if (x == 1 || y == 1) return 1;
          if (x == 0 && y == 0) return 0;
          return -1;
        }
        default: {
          // prenex leaf with 0 or 1 quantifiers
          std::string var;
          const Formula* body = &f;
          if (f.kind == Formula::Kind::Exists) {
            var = f.name;
            body = &f.kids[0];
          }
          std::function<std::optional<bool>(const Formula&, const Rational&)> ev =
              [&](const Formula& g, const Rational& val) -> std::optional<bool> {
            switch (g.kind) {
              case Formula::Kind::True: return true;
              case Formula::Kind::False: return false;
              case Formula::Kind::Eq: {
                ZPoly p = term_to_zpoly(g.terms[0], var) - term_to_zpoly(g.terms[1], var);
                return p.eval(val).num == 0;
              }
              case Formula::Kind::Not: {
                auto v = ev(g.kids[0], val);
                if (!v) return std::nullopt;
                return !*v;
              }
              case Formula::Kind::And:
              case Formula::Kind::Or: {
                auto x = ev(g.kids[0], val), y = ev(g.kids[1], val);
                if (!x || !y) return std::nullopt;
                return g.kind == Formula::Kind::And ? (*x && *y) : (*x || *y);
              }
              default: return std::nullopt;
            }
          };
          if (var.empty()) {
            auto v = ev(*body, Rational(0, 1));
            return v ? (*v ? 1 : 0) : -1;
          }
          for (int num = -12; num <= 12; ++num)
            for (int den = 1; den <= 12; ++den) {
              auto v = ev(*body, Rational(num, den));
              if (v && *v) return 1;
            }
          return -1;  // found no witness; cannot refute
        }
      }
    };
    int b = brute(s);
    if (b == 1) {
      ++concluded;
      REQUIRE(a.verdict == Verdict::Yes);
    } else if (b == 0) {
      ++concluded;
      REQUIRE(a.verdict == Verdict::No);
    }
  }
  CHECK(concluded > 50);  // the sweep must actually conclude somewhere
}

TEST_CASE("bounded_prime_check") {
  // x^2 = 2 or 3 or 6 holds in every prime field
  Sentence qr236 = ring(
      "(exists (x K) (or (= (*.K x x) (+.K 1.K 1.K)) "
      "(= (*.K x x) (+.K 1.K (+.K 1.K 1.K))) "
      "(= (*.K x x) (+.K 1.K (+.K 1.K (+.K 1.K (+.K 1.K (+.K 1.K 1.K))))))))");
  OracleAnswer a = bounded_prime_check(qr236, 500);
  CHECK(a.verdict == Verdict::Unknown);  // never an unqualified yes
  CHECK(a.soundness == Soundness::RefutationSound);

  // x^2 = 2 alone is refuted by p = 3
  Sentence qr2 = ring("(exists (x K) (= (*.K x x) (+.K 1.K 1.K)))");
  OracleAnswer b = bounded_prime_check(qr2, 10);
  CHECK(b.verdict == Verdict::No);
  CHECK(b.evidence.find("F_3") != std::string::npos);

  CHECK(bounded_prime_check(f_true(), 100).verdict == Verdict::Unknown);
  CHECK_THROWS_AS(bounded_prime_check(f_true(), 1), Error);
}

TEST_CASE("toy oracles") {
  auto inst = std::make_shared<ToyInstance>(4);
  ToyOracleFamily fam = toy_oracles(inst);
  Sentence r1 = inst->atom(1);

  CHECK(fam.sigma0(r1).verdict == Verdict::Yes);
  CHECK(fam.at_n(r1, 1).verdict == Verdict::No);  // axiom not-r1
  CHECK(fam.sigma(f_or(r1, f_not(r1))).verdict == Verdict::Yes);
  CHECK(fam.sigma(r1).verdict == Verdict::No);
  CHECK(fam.eventually(f_not(r1)).verdict == Verdict::No);  // for n >= 2 the axioms force r1
  CHECK(fam.positive(f_or(r1, f_not(r1))).verdict == Verdict::Yes);

  // language guard: a ring equality is not a toy sentence
  CHECK_THROWS_AS(fam.sigma(ring("(= 0.K 0.K)")), Error);
}

TEST_CASE("toy stabilization and containments") {
  auto inst = std::make_shared<ToyInstance>(4);
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    Sentence phi = gen_toy_sentence(rng, *inst, 3);
    int m = inst->max_index(phi);
    // membership in Sigma_n is constant past m + 1
    bool at2 = inst->in_sigma_n(phi, m + 2);
    bool at3 = inst->in_sigma_n(phi, m + 3);
    REQUIRE(at2 == at3);
    // monotone containments on yes-sets
    if (inst->in_sigma(phi)) {
      REQUIRE(inst->in_sigma0(phi));
      REQUIRE(inst->in_sigma_pos(phi));
    }
    if (inst->in_sigma_pos(phi)) REQUIRE(inst->in_sigma_inf(phi));
  }
}

TEST_CASE("lt class enumerator covers all toy classes") {
  auto inst = std::make_shared<ToyInstance>(3);
  LtClassEnumerator lt(inst);
  CHECK(lt.size() == 256);
  CHECK(lt.at(0) == f_false());
  CHECK(lt.at(255) == f_true());
  // representative of class i has truth table i
  for (uint64_t i = 0; i < 256; ++i) {
    Sentence rep = lt.at(i);
    CHECK(inst->in_language(rep));
    uint64_t table = 0;
    for (uint64_t a = 0; a < 8; ++a) {
      StructurePtr m = std::make_shared<PropStructure>(inst->sig(), a);
      if (evaluate(*m, rep)) table |= uint64_t{1} << a;
    }
    REQUIRE(table == i);
  }
}
