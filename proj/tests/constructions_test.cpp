#include <doctest.h>

#include <random>

#include "ternary/constructions.hpp"
#include "ternary/counting.hpp"
#include "ternary/search.hpp"

using namespace ternary;

namespace {

BinaryCode random_binary_code(std::mt19937_64& rng, int length, int size) {
  std::vector<BinaryWord> words;
  std::vector<bool> used(std::size_t{1} << length, false);
  while (static_cast<int>(words.size()) < size) {
    const auto x = rng() & ((std::uint64_t{1} << length) - 1);
    if (used[x]) continue;
    used[x] = true;
    words.emplace_back(length, x);
  }
  return BinaryCode(length, words);
}

}  // namespace

TEST_CASE("binary lexicodes have the known sizes") {
  CHECK(binary_lexicode(3, 2).size() == 4);
  CHECK(binary_lexicode(7, 3).size() == 16);
  CHECK(binary_lexicode(8, 4).size() == 16);
  CHECK(binary_lexicode(5, 3).size() == 4);
  CHECK(binary_lexicode(0, 3).size() == 1);
  for (int n = 1; n <= 10; ++n) {
    for (int d = 1; d <= n; ++d) CHECK(min_distance(binary_lexicode(n, d)).satisfies(d));
  }
  CHECK_THROWS_AS(binary_lexicode(25, 2), LimitExceeded);
}

TEST_CASE("even-zeros code") {
  for (int n = 1; n <= 7; ++n) {
    const auto c = even_zeros_code(n);
    CHECK(mpz_class(static_cast<unsigned long>(c.size())) == even_zeros_size(n));
    CHECK(min_distance(c).satisfies(2));
  }
  CHECK(even_zeros_size(5) == 122);
  CHECK(even_zeros_size(30) == (power(3, 30) + 1) / 2);
  CHECK_THROWS_AS(even_zeros_code(13), LimitExceeded);
}

TEST_CASE("signed binary codes double the distance") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto b = random_binary_code(rng, n, 2 + static_cast<int>(rng() % 3));
    const auto s = signed_binary_code(b);
    CHECK(s.size() == b.size());
    CHECK(min_distance(s).value() == 2 * min_distance(b).value());
    for (const auto& x : s) CHECK(x.weight() == n);
  }
}

TEST_CASE("support construction on the repetition code") {
  const BinaryCode outer(3, {BinaryWord{0, 0, 0}, BinaryWord{1, 1, 1}});
  const auto inner = lexicode_inner_codes(3, 3);
  const auto code = support_construction(outer, inner, 3);
  CHECK(min_distance(code).value() >= 3);
  // The zero word plus a length-3 inner code with d_H >= 2.
  CHECK(code.size() == 1 + 4);
  CHECK(code.size() == static_cast<std::size_t>(support_construction_size(weight_distribution(outer), inner)));
}

TEST_CASE("support construction rejects bad inputs") {
  const BinaryCode weak(3, {BinaryWord{0, 0, 0}, BinaryWord{1, 1, 0}});
  CHECK_THROWS_WITH_AS(support_construction(weak, lexicode_inner_codes(3, 3), 3),
                       doctest::Contains("outer code has minimum Hamming distance 2"), std::invalid_argument);
  const BinaryCode outer(3, {BinaryWord{0, 0, 0}, BinaryWord{1, 1, 1}});
  InnerCodes missing;
  missing.emplace(0, BinaryCode(0, {BinaryWord(0, 0)}));
  CHECK_THROWS_WITH_AS(support_construction(outer, missing, 3), doctest::Contains("no inner code of length 3"),
                       std::invalid_argument);
  InnerCodes too_close = lexicode_inner_codes(3, 1);
  CHECK_THROWS_WITH_AS(support_construction(outer, too_close, 3), doctest::Contains("inner code of length 3"),
                       std::invalid_argument);
}

TEST_CASE("coset scan: serial and parallel agree and never lose words") {
  for (int n = 3; n <= 8; ++n) {
    for (int d = 2; d <= n; ++d) {
      const auto outer = binary_lexicode(n, d);
      const auto inner = lexicode_inner_codes(n, d);
      const auto a = coset_scan_construction(outer, inner, d, Execution::Serial);
      const auto b = coset_scan_construction(outer, inner, d, Execution::Parallel);
      CHECK(a == b);
      CHECK(min_distance(a).satisfies(d));
      CHECK(a.size() >= support_construction(outer, inner, d).size());
    }
  }
}

TEST_CASE("phi-shift meets the averaging guarantee") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int size = 1 + static_cast<int>(rng() % ((std::uint64_t{1} << (2 * n)) / 2));
    const auto b = random_binary_code(rng, 2 * n, size);
    const auto code = phi_shift_construction(b, PhiShiftStrategy::exhaustive(), Execution::Serial);
    // ceil(|b| 3^n / 4^n)
    const mpz_class bound = (mpz_class(size) * power(3, static_cast<unsigned long>(n)) +
                             power(4, static_cast<unsigned long>(n)) - 1) /
                            power(4, static_cast<unsigned long>(n));
    CHECK(mpz_class(static_cast<unsigned long>(code.size())) >= bound);
    CHECK(min_distance(code).satisfies(min_distance(b).is_unbounded() ? 0 : min_distance(b).value()));
    CHECK(best_phi_shift(b, PhiShiftStrategy::exhaustive(), Execution::Serial) ==
          best_phi_shift(b, PhiShiftStrategy::exhaustive(), Execution::Parallel));
  }
}

TEST_CASE("phi-shift hit counts and strategies") {
  const BinaryCode b(2, {BinaryWord{0, 0}, BinaryWord{1, 1}});
  CHECK(phi_image_hits(b, 0) == 1);
  CHECK(phi_image_hits(b, 1) == 2);
  CHECK(best_phi_shift(b, PhiShiftStrategy::exhaustive()) == 1);
  const auto randomized = PhiShiftStrategy::randomized(50, 3);
  CHECK(best_phi_shift(b, randomized) == best_phi_shift(b, randomized));
  CHECK_THROWS_AS(best_phi_shift(BinaryCode(3), PhiShiftStrategy::exhaustive()), std::invalid_argument);
}

TEST_CASE("every constructor meets its distance for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(verify_construction("even-zeros", even_zeros_code(n), 2).distance_ok);
    for (int d = 1; d <= 2 * n; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(verify_construction("greedy", greedy_gv_code(n, d), d).distance_ok);
      CHECK(verify_construction("signed-binary", signed_binary_code(binary_lexicode(n, (d + 1) / 2)), d).distance_ok);
      CHECK(verify_construction("phi-shift", phi_shift_construction(binary_lexicode(2 * n, d), PhiShiftStrategy::exhaustive()), d)
                .distance_ok);
      if (d <= n) {
        const auto outer = binary_lexicode(n, d);
        const auto inner = lexicode_inner_codes(n, d);
        CHECK(verify_construction("support", support_construction(outer, inner, d), d).distance_ok);
        CHECK(verify_construction("coset-scan", coset_scan_construction(outer, inner, d), d).distance_ok);
      }
    }
  }
}

TEST_CASE("construction report text") {
  const auto r = verify_construction("even-zeros", even_zeros_code(2), 2);
  CHECK(r.to_string() == "family=even-zeros n=2 size=5 min_distance=2 claimed_d=2 status=ok");
  const auto bad = verify_construction("x", even_zeros_code(2), 3);
  CHECK_FALSE(bad.distance_ok);
}
