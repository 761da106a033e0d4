#include <doctest.h>

#include "relcm/errors.hpp"
#include "relcm/field.hpp"

using namespace relcm;

TEST_CASE("field axioms hold exhaustively for small primes") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    for (Coeff a = 0; a < p; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Coeff b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == (a + b) % p);
        CHECK(f.mul(a, b) == (a * b) % p);
        CHECK(f.sub(f.add(a, b), b) == a);
        if (b != 0) CHECK(f.mul(f.div(a, b), b) == a);
        for (Coeff c = 0; c < p; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST_CASE("large prime arithmetic does not overflow") {
  PrimeField f(2147483647u);
  Coeff a = 2147483646u;
  CHECK(f.mul(a, a) == 1);
  CHECK(f.mul(f.inv(123456789u), 123456789u) == 1);
}

TEST_CASE("non-prime characteristic is rejected") {
  CHECK_THROWS_AS(PrimeField(4), InputError);
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_NOTHROW(PrimeField{kDefaultPrime});
}

TEST_CASE("symmetric representatives and integer embedding") {
  PrimeField f(7);
  CHECK(f.toSigned(6) == -1);
  CHECK(f.toSigned(3) == 3);
  CHECK(f.fromInt(-1) == 6);
  CHECK(f.fromInt(15) == 1);
  CHECK_THROWS_AS(f.inv(0), InternalError);
}
