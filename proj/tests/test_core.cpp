#include <stdexcept>

#include "doctest.h"
#include "eqlog/core.hpp"

using namespace eqlog;

namespace {
Interpretation I(const char* digits) { return Interpretation::from_string(digits); }
}  // namespace

TEST_CASE("encode/decode are inverse bijections") {
  Signature pq{{"p", "q"}};
  CHECK(Interpretation::from_index(0, pq).str() == "00");

  Signature pqr{{"p", "q", "r"}};
  CHECK(I("102").index() == 11);  // 1*9 + 0*3 + 2
  for (std::size_t i = 0; i < 27; ++i)
    CHECK(Interpretation::from_index(i, pqr).index() == i);
}

TEST_CASE("encode/decode input validation") {
  Signature pq{{"p", "q"}};
  CHECK_THROWS_AS(Interpretation::from_index(9, pq), std::invalid_argument);
  CHECK_THROWS_AS(Interpretation::from_string("03"), std::invalid_argument);
  CHECK_THROWS_AS(Interpretation({0, 3}), std::invalid_argument);
}

TEST_CASE("signature construction") {
  CHECK_THROWS_AS(Signature({"p", "p"}), std::invalid_argument);
  CHECK_THROWS_AS(Signature({"1p"}), std::invalid_argument);
  Signature explicit_order{{"q", "p"}};
  CHECK(explicit_order.atom(0) == "q");
  CHECK(Signature::collated({"q", "p", "q"}).atoms() == std::vector<std::string>{"p", "q"});
}

TEST_CASE("leq and lt") {
  CHECK(leq(I("10"), I("20")));
  CHECK(leq(I("11"), I("22")));
  CHECK_FALSE(leq(I("10"), I("02")));
  CHECK_FALSE(leq(I("02"), I("10")));
  CHECK(lt(I("10"), I("20")));
  CHECK(lt(I("12"), I("22")));
  CHECK_FALSE(lt(I("12"), I("12")));
  CHECK_THROWS_AS(leq(I("10"), I("100")), std::invalid_argument);
}

TEST_CASE("totalisation and classicality") {
  CHECK(total_of(I("1021")).str() == "2022");
  CHECK(total_of(I("2022")).str() == "2022");
  CHECK(total_of(I("11")).str() == "22");
  CHECK(is_classical(I("20")));
  CHECK(is_classical(I("02")));
  CHECK_FALSE(is_classical(I("12")));
}

TEST_CASE("signature size cap") {
  std::vector<std::string> names;
  for (char c = 'a'; c < 'a' + 17; ++c) names.emplace_back(1, c);
  CHECK_THROWS_AS(Signature{names}, std::invalid_argument);
  names.pop_back();
  CHECK(Signature{names}.space_size() == 43046721u);  // 3^16
}

TEST_CASE("the ordering is a partial order, exhaustively for n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    Signature sig = n == 1 ? Signature{{"p"}}
                  : n == 2 ? Signature{{"p", "q"}}
                           : Signature{{"p", "q", "r"}};
    std::size_t space = sig.space_size();
    for (std::size_t a = 0; a < space; ++a) {
      Interpretation u = Interpretation::from_index(a, sig);
      CHECK(leq(u, u));
      CHECK(leq(u, total_of(u)));
      CHECK(is_classical(total_of(u)));
      CHECK(total_of(total_of(u)) == total_of(u));
      for (std::size_t b = 0; b < space; ++b) {
        Interpretation v = Interpretation::from_index(b, sig);
        if (leq(u, v) && leq(v, u)) CHECK(u == v);
        if (is_classical(u) && leq(u, v)) CHECK(u == v);  // classical = maximal
        for (std::size_t c = 0; c < space; ++c) {
          Interpretation w = Interpretation::from_index(c, sig);
          if (leq(u, v) && leq(v, w)) CHECK(leq(u, w));
        }
      }
    }
  }
}
