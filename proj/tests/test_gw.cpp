#include "qhci/gw.hpp"

#include <doctest.h>

#include <functional>

using namespace qhci;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Usage;
}

}  // namespace

TEST_SUITE("gw") {
  TEST_CASE("degree-one base rows") {
    CHECK(base_descendant_row(validate_space(3, {2}), 1) == ints({0, 8, -8, 4}));
    // Index one: the exponential correction must keep <tau_0(H^r), 1> = 0.
    CHECK(base_descendant_row(validate_space(3, {4}), 1) == ints({0, -320, 320, 0}));
    CHECK_THROWS_AS(base_descendant(validate_space(3, {2}), 1, 4), Error);
  }

  TEST_CASE("two-point invariants of the cubic threefold") {
    GWTable table(validate_space(3, {3}), 1);
    std::vector<Rational> row;
    for (int s = 0; s <= 3; ++s) row.push_back(alpha(table, 1, s));
    CHECK(row == ints({0, 6, 15, 6}));
  }

  TEST_CASE("key validation") {
    GWTable table(validate_space(3, {2}), 2);
    CHECK(code_of([&] { table.descendant({0, 0, 1}); }) == ErrorCode::InconsistentKey);
    CHECK(code_of([&] { table.descendant({1, -1, 1}); }) == ErrorCode::InconsistentKey);
    CHECK(code_of([&] { table.descendant({3, 0, 1}); }) == ErrorCode::DegreeBoundExceeded);
    CHECK(code_of([&] { table.descendant(1, 0, 2, 2); }) == ErrorCode::InconsistentKey);
    // r + kd - 1 = 5 for k = 1; H^6 does not exist on a threefold.
    CHECK(table.descendant(1, 0, 0, 5) == 0);
    CHECK(table.descendant(1, 0, 2, 3) == table.descendant({1, 0, 2}));
    CHECK(vdim_02(table.space(), 2) == 8);
    CHECK(second_exponent(table.space(), {2, 1, 3}) == 4);
  }

  TEST_CASE("alpha symmetry through separate tables") {
    for (const auto& s : space_grid(3, 5, 2, 2, 4)) {
      CAPTURE(s.label());
      GWTable left(s, 3);
      GWTable right(s, 3);
      for (int k = 1; k <= 3; ++k) {
        for (int j = 0; j <= s.r; ++j) {
          const int other = k * s.fano_index + j - 1;
          if (other < 0 || other > s.r) continue;
          CHECK(alpha(left, k, s.r - j) == alpha(right, k, other));
        }
      }
    }
  }

  TEST_CASE("memo determinism and serial/parallel agreement") {
    const FanoSpace s = validate_space(4, {2, 3});
    GWTable serial(s, 5);
    fill_levels_serial(serial, 5);
    const auto snapshot = serial.memo();
    CHECK(!snapshot.empty());

    GWTable recursive(s, 5);
    for (const auto& [key, v] : snapshot) CHECK(recursive.value(key.k, key.a, key.i) == v);
    recursive.clear();
    CHECK(recursive.memo().empty());
    for (const auto& [key, v] : snapshot) CHECK(recursive.value(key.k, key.a, key.i) == v);

    GWTable parallel(s, 5);
    fill_levels_parallel(parallel, 5);
    CHECK(parallel.memo() == snapshot);
  }

  TEST_CASE("verified inserts") {
    const FanoSpace s = validate_space(3, {3});
    GWTable table(s, 2);
    const Rational v = table.value(1, 0, 1);
    table.insert_verified({1, 0, 1}, v);
    CHECK(code_of([&] { table.insert_verified({1, 0, 1}, v + 1); }) == ErrorCode::CacheMismatch);
    CHECK(code_of([&] { table.insert_verified({1, 0, 9}, 1); }) == ErrorCode::CacheMismatch);
  }
}
