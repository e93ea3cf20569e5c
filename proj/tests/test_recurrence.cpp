#include <doctest.h>

#include <random>

#include "recdiff/errors.hpp"
#include "recdiff/recurrence.hpp"

using namespace recdiff;

namespace {

RecurrenceSpec fibonacci() { return make_recurrence({1, 1}, {0, 1}, "fibonacci"); }
RecurrenceSpec tribonacci() { return make_recurrence({1, 1, 1}, {0, 1, 1}, "tribonacci"); }
RecurrenceSpec pow2() { return make_recurrence({2}, {1}, "pow2"); }

}  // namespace

TEST_CASE("spec construction validates shape") {
  CHECK(fibonacci().order() == 2);
  CHECK(tribonacci().order() == 3);
  CHECK(pow2().order() == 1);
  CHECK_THROWS_AS(make_recurrence({1, 1}, {0}, "bad"), LengthMismatch);
  CHECK_THROWS_AS(make_recurrence({}, {}, "empty"), LengthMismatch);
  CHECK_THROWS_AS(make_recurrence({1, 1}, {0, 0}, "zero"), DegenerateSequence);
}

TEST_CASE("terms match known values") {
  RecurrenceSpec fib = fibonacci();
  CHECK(term(fib, 0) == 0);
  CHECK(term(fib, 1) == 1);
  CHECK(term(fib, 10) == 55);
  CHECK(term(fib, 50) == mpz_class("12586269025"));

  RecurrenceSpec p2 = pow2();
  CHECK(term(p2, 0) == 1);
  CHECK(term(p2, 20) == 1048576);
}

TEST_CASE("term ranges are contiguous and consistent") {
  RecurrenceSpec fib = fibonacci();
  auto r = term_range(fib, 0, 5);
  CHECK(r == std::vector<mpz_class>{0, 1, 1, 2, 3, 5});

  auto t = term_range(tribonacci(), 0, 5);
  CHECK(t == std::vector<mpz_class>{0, 1, 1, 2, 4, 7});

  auto single = term_range(fib, 3, 3);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == term(fib, 3));

  CHECK_THROWS_AS(term_range(fib, 5, 3), BadRange);
}

TEST_CASE("matrix power evaluation agrees with iteration") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(0, 1000);
  for (const RecurrenceSpec& spec : {fibonacci(), tribonacci(), pow2(),
                                     make_recurrence({-4, 4}, {0, 1}, "repeated-root"),
                                     make_recurrence({5, -2, 0, 1}, {3, -1, 4, 1}, "mixed")}) {
    TermCache cache(spec);
    for (int i = 0; i < 40; ++i) {
      long n = dist(rng);
      CHECK(term_by_matrix_power(spec, n) == term(cache, n));
    }
  }
}

TEST_CASE("recurrence identity holds at random indices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(0, 10000);
  for (const RecurrenceSpec& spec : {fibonacci(), tribonacci()}) {
    TermCache cache(spec);
    const int k = spec.order();
    for (int i = 0; i < 60; ++i) {
      long n = dist(rng);
      cache.ensure(n + k);
      mpz_class expected = 0;
      for (int j = 0; j < k; ++j) expected += spec.coeffs()[j] * cache[n + j];
      CHECK(cache[n + k] == expected);
    }
  }
}

TEST_CASE("monotone start detection") {
  // F_1 = F_2 = 1 breaks strictness at n = 1, so the certificate starts at 2.
  CHECK(find_monotone_start(fibonacci(), 100) == 2);
  CHECK(find_monotone_start(pow2(), 100) == 0);
  CHECK(find_monotone_start(tribonacci(), 100) == 2);

  RecurrenceSpec constant = make_recurrence({1}, {5}, "constant5");
  CHECK(!find_monotone_start(constant, 100).has_value());

  RecurrenceSpec alternating = make_recurrence({-1}, {1}, "alternating");
  CHECK(!find_monotone_start(alternating, 100).has_value());

  CHECK_THROWS_AS(find_monotone_start(fibonacci(), 1), BadRange);
}

TEST_CASE("monotone certificate re-verifies over the scanned range") {
  for (const RecurrenceSpec& spec : {fibonacci(), tribonacci(), pow2()}) {
    TermCache cache(spec);
    const long limit = 300;
    auto n0 = find_monotone_start(cache, limit);
    REQUIRE(n0.has_value());
    for (long n = *n0; n < limit; ++n) {
      CHECK(cache[n] != 0);
      CHECK(mpz_cmpabs(cache[n + 1].get_mpz_t(), cache[n].get_mpz_t()) > 0);
    }
    if (*n0 > 0) {
      // minimality: the pair just before the start violates the property
      long n = *n0 - 1;
      bool violates =
          cache[n] == 0 || mpz_cmpabs(cache[n + 1].get_mpz_t(), cache[n].get_mpz_t()) <= 0;
      CHECK(violates);
    }
  }
}

TEST_CASE("negative coefficients and terms are exact") {
  RecurrenceSpec alt = make_recurrence({-2}, {3}, "alt-geometric");  // 3*(-2)^n
  CHECK(term(alt, 3) == -24);
  CHECK(term(alt, 4) == 48);
  CHECK(term_by_matrix_power(alt, 11) == mpz_class(3) * mpz_class(-2048));
}
