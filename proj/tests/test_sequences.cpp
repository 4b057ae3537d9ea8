#include "doctest.h"
#include "mtc/sequences.hpp"
#include "oracles.hpp"

#include <thread>

using namespace mtc;

namespace {

std::vector<Integer> values(Integer (*f)(std::uint64_t), std::uint64_t n_max) {
  std::vector<Integer> out;
  for (std::uint64_t n = 0; n <= n_max; ++n) out.push_back(f(n));
  return out;
}

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("binomials, including negative upper index") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-3, 2) == 6);
  CHECK_THROWS(binomial(4, -1));
  for (std::int64_t n = 0; n <= 40; ++n)
    for (std::int64_t k = 0; k <= n + 2; ++k) CHECK(binomial(n, k) == oracle::binomial(n, k));
  // C(-n-1, k) = (-1)^k C(n+k, k)
  for (std::int64_t n = 0; n <= 20; ++n)
    for (std::int64_t k = 0; k <= 20; ++k) CHECK(binomial(-n - 1, k) == sign_power(k) * oracle::binomial(n + k, k));
}

TEST_CASE("factorial and binomial table") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  BinomialTable t(30);
  for (std::int64_t n = 0; n <= 30; ++n)
    for (std::int64_t k = -1; k <= n + 1; ++k) CHECK(t(n, k) == oracle::binomial(n, k));
  CHECK_THROWS_AS(t(31, 0), std::out_of_range);
}

TEST_CASE("Catalan and Narayana against path counts") {
  for (std::uint64_t n = 0; n <= 30; ++n) CHECK(catalan(n) == oracle::catalan(static_cast<std::int64_t>(n)));
  for (std::int64_t m = 1; m <= 12; ++m) {
    Integer row = 0;
    for (std::int64_t k = 1; k <= m; ++k) {
      CHECK(narayana(m, k) == oracle::narayana(m, k));
      row += narayana(m, k);
    }
    CHECK(row == catalan(static_cast<std::uint64_t>(m)));
  }
  CHECK_THROWS(narayana(3, 0));
  CHECK_THROWS(narayana(3, 4));
}

TEST_CASE("Motzkin and central trinomial") {
  CHECK(values(motzkin, 5) == ints({1, 1, 2, 4, 9, 21}));
  CHECK(values(central_trinomial, 5) == ints({1, 1, 3, 7, 19, 51}));
  const auto paths = oracle::motzkin_prefix(300);
  for (std::uint64_t n = 0; n <= 300; ++n) {
    const auto i = static_cast<std::int64_t>(n);
    CHECK(motzkin(n) == paths[n]);
    if (n % 10 == 0) CHECK(central_trinomial(n) == oracle::central_trinomial(i));
    // second formulas: M_n = sum C(n,2k) C_k, T_n = sum C(n,2k) C(2k,k)
    Integer m = 0, t = 0;
    for (std::int64_t k = 0; 2 * k <= i; ++k) {
      m += oracle::binomial(i, 2 * k) * oracle::binomial(2 * k, k) / (k + 1);
      t += oracle::binomial(i, 2 * k) * oracle::binomial(2 * k, k);
    }
    CHECK(motzkin(n) == m);
    CHECK(central_trinomial(n) == t);
  }
}

TEST_CASE("generalized sequences") {
  CHECK(gen_motzkin(3, {2, 1}) == 14);
  CHECK(gen_motzkin(2, {3, 2}) == 11);
  for (std::uint64_t n = 0; n <= 50; ++n) CHECK(gen_motzkin(n, {3, 0}) == pow(Integer(3), static_cast<unsigned long>(n)));
  for (std::int64_t b = -4; b <= 4; ++b) {
    for (std::int64_t c = -4; c <= 4; ++c) {
      for (std::uint64_t n = 0; n <= 25; ++n) {
        const auto i = static_cast<std::int64_t>(n);
        CHECK(gen_trinomial(n, {b, c}) == oracle::gen_trinomial(i, b, c));
        CHECK(gen_motzkin(n, {b, c}) == oracle::gen_motzkin(i, b, c));
      }
    }
  }
}

TEST_CASE("specialization lattice") {
  for (std::uint64_t n = 0; n <= 200; ++n) {
    const auto i = static_cast<std::int64_t>(n);
    CHECK(gen_trinomial(n, {1, 1}) == central_trinomial(n));
    CHECK(gen_trinomial(n, {2, 1}) == binomial(2 * i, i));
    CHECK(gen_trinomial(n, {3, 2}) == delannoy(n));
    CHECK(gen_motzkin(n, {1, 1}) == motzkin(n));
    CHECK(gen_motzkin(n, {2, 1}) == catalan(n + 1));
    CHECK(gen_motzkin(n, {3, 2}) == schroder_little(i + 1));
  }
}

TEST_CASE("Delannoy and Schroeder numbers") {
  CHECK(values(delannoy, 4) == ints({1, 3, 13, 63, 321}));
  CHECK(values(schroder_large, 4) == ints({1, 2, 6, 22, 90}));
  std::vector<Integer> little;
  for (std::int64_t n = 1; n <= 4; ++n) little.push_back(schroder_little(n));
  CHECK(little == ints({1, 3, 11, 45}));
  CHECK_THROWS(schroder_little(0));
  for (std::uint64_t n = 0; n <= 60; ++n) {
    const auto i = static_cast<std::int64_t>(n);
    CHECK(delannoy(n) == oracle::delannoy(i));
    CHECK(schroder_large(n) == oracle::schroder_large(i));
  }
  for (std::uint64_t n = 0; n <= 300; ++n) {
    const auto i = static_cast<std::int64_t>(n);
    Integer d2 = 0, s2 = 0;
    for (std::int64_t k = 0; k <= i; ++k) {
      d2 += binomial(i + k, 2 * k) * binomial(2 * k, k);
      s2 += binomial(i, k) * binomial(i + k, k) / (k + 1);
    }
    CHECK(delannoy(n) == d2);
    CHECK(schroder_large(n) == s2);
    if (n >= 1) CHECK(schroder_large(n) == 2 * schroder_little(i));
  }
}

TEST_CASE("w coefficients") {
  CHECK(w_coeff(2, 1) == 1);
  CHECK(w_coeff(2, 2) == 2);
  for (std::int64_t n = 1; n <= 30; ++n) CHECK(w_coeff(n, 1) == 1);
  CHECK_THROWS(w_coeff(2, 3));
  CHECK_THROWS(w_coeff(2, 0));
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      Integer inv = 0;
      for (std::int64_t j = 1; j <= k; ++j) inv += binomial(n - j, k - j) * narayana(n, j);
      CHECK(w_coeff(n, k) == inv);
    }
  }
}

TEST_CASE("W_n values and recurrence") {
  CHECK(values(motzkin_analog_W, 12) == ints({-1, -1, 1, 5, 13, 29, 63, 139, 317, 749, 1827, 4575, 11699}));
  for (std::uint64_t n = 0; n <= 120; ++n) CHECK(motzkin_analog_W(n) == oracle::motzkin_analog_W(static_cast<std::int64_t>(n)));
  const auto w = sequence_table(Sequence::MotzkinAnalogW, 1003);
  for (std::size_t n = 0; n <= 1000; ++n) {
    const Integer ni(static_cast<unsigned long>(n));
    const Integer residual =
        (ni + 3) * (*w)[n + 3] - (3 * ni + 7) * (*w)[n + 2] - (ni - 5) * (*w)[n + 1] + 3 * (ni + 1) * (*w)[n];
    if (residual != 0) FAIL_CHECK("W recurrence fails at n = " << n);
  }
}

TEST_CASE("sequence tables are memoized without changing results") {
  clear_sequence_cache();
  const auto a = sequence_table(Sequence::GenMotzkin, 40, {2, -3});
  const auto b = sequence_table(Sequence::GenMotzkin, 20, {2, -3});
  CHECK(a->size() == 41);
  for (std::size_t n = 0; n <= 20; ++n) CHECK((*b)[n] == (*a)[n]);
  const auto other = sequence_table(Sequence::GenMotzkin, 20, {2, 3});
  CHECK((*other)[3] != (*a)[3]);
  const auto little = sequence_table(Sequence::SchroderLittle, 5);
  CHECK((*little)[0] == 0);
  CHECK((*little)[5] == schroder_little(5));
  clear_sequence_cache();
  const auto fresh = sequence_table(Sequence::GenMotzkin, 40, {2, -3});
  CHECK(*fresh == *a);
}

TEST_CASE("concurrent table access is consistent") {
  clear_sequence_cache();
  std::vector<std::shared_ptr<const std::vector<Integer>>> results(8);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < results.size(); ++t)
      threads.emplace_back([&results, t] { results[t] = sequence_table(Sequence::CentralTrinomial, 100 + 10 * t); });
  }
  for (std::size_t t = 0; t < results.size(); ++t)
    for (std::size_t n = 0; n <= 100; ++n) CHECK((*results[t])[n] == central_trinomial(n));
}
