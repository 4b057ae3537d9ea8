// Main theorems: integrality of s(n), the mod p^2 congruence for
// sum (2k+1) M_k^2, divisibility of the T_k T_{k+1} sums, the (b, c) family
// and its Delannoy / Schröder corollaries.

#include "claim_impl.hpp"

#include "mtc/modular.hpp"

namespace mtc {

using detail::check_congruent;
using detail::check_divides;
using detail::check_equal;
using detail::ClaimDefinition;
using detail::params;
using detail::PointResult;
using detail::PreparedClaim;
using detail::require;

Integer s_quotient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("s_quotient: n must be positive");
  Integer sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    const Integer m = motzkin(static_cast<std::uint64_t>(k));
    sum += (2 * k + 1) * m * m;
  }
  return exact_quotient(2 * sum, Integer(static_cast<long>(n)));
}

Integer t_quotient(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("t_quotient: n must be at least 2");
  Integer sum = 0;
  Integer prev = central_trinomial(0);
  for (std::int64_t k = 0; k < n; ++k) {
    Integer next = central_trinomial(static_cast<std::uint64_t>(k + 1));
    sum += Integer(k) * (k + 1) * (8 * k + 9) * prev * next;
    prev = std::move(next);
  }
  const Integer n2 = Integer(static_cast<long>(n)) * n;
  return exact_quotient(6 * sum, n2 * (n2 - 1));
}

namespace detail {

PreparedClaim build_s_integrality(const ParamRange& range, const Weight& weight) {
  const auto M = sequence_table(Sequence::Motzkin, range.n_max);
  auto sums = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  for (std::uint64_t k = 1; k <= range.n_max; ++k)
    (*sums)[k] = (*sums)[k - 1] + weight(k) * (*M)[k] * (*M)[k];

  PreparedClaim pc;
  for (std::uint64_t n = 1; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [sums](std::size_t i) {
    const auto n = static_cast<long>(i + 1);
    const Integer twice = 2 * (*sums)[i + 1];
    if (!divides(Integer(n), twice)) return check_divides(Integer(n), twice);
    return PointResult::pass(to_string(Integer(twice / n)));
  };
  return pc;
}

}  // namespace detail

namespace {

PreparedClaim build_m_square_congruence(const ParamRange& range) {
  PreparedClaim pc;
  const auto primes = detail::claim_primes(range, 5, true, pc.skipped);
  const std::uint64_t top = primes.empty() ? 0 : primes.back();
  const auto M = sequence_table(Sequence::Motzkin, top);
  auto sums = std::make_shared<std::vector<Integer>>(top + 1);
  Integer acc = 0;
  for (std::uint64_t k = 0; k <= top; ++k) {
    acc += Integer(static_cast<unsigned long>(2 * k + 1)) * (*M)[k] * (*M)[k];
    (*sums)[k] = acc;
  }
  for (auto p : primes) pc.points.push_back(params({{"p", detail::as_i64(p)}}));
  pc.evaluate = [sums, primes](std::size_t i) {
    const auto p = primes[i];
    const Integer pz(static_cast<unsigned long>(p));
    const int p_over_3 = legendre(Integer(static_cast<unsigned long>(p % 3)), 3);
    return check_congruent((*sums)[p - 1], 12 * pz * p_over_3, pz * pz);
  };
  return pc;
}

}  // namespace

namespace detail {

PreparedClaim build_t_divisibility(const ParamRange& range, const Weight& weight) {
  const auto T = sequence_table(Sequence::CentralTrinomial, range.n_max);
  auto sums = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  for (std::uint64_t n = 1; n <= range.n_max; ++n) {
    const std::uint64_t k = n - 1;
    (*sums)[n] = (*sums)[n - 1] + weight(k) * (*T)[k] * (*T)[k + 1];
  }
  PreparedClaim pc;
  for (std::uint64_t n = 2; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [sums](std::size_t i) {
    const std::size_t n = i + 2;
    const Integer n2 = Integer(static_cast<unsigned long>(n * n));
    const Integer divisor = exact_quotient(n2 * (n2 - 1), Integer(6));
    const Integer& sum = (*sums)[n];
    if (!divides(divisor, sum)) return check_divides(divisor, sum);
    return PointResult::pass(to_string(Integer(sum / divisor)));
  };
  return pc;
}

}  // namespace detail

namespace {

// Shared state for the four (b, c)-family statements: tables per grid pair
// and the flattened (pair, n) point list.
struct FamilyData {
  std::vector<TrinomialParams> pairs;
  std::vector<std::shared_ptr<const std::vector<Integer>>> values;
  std::vector<std::vector<Integer>> d_powers;
  std::vector<std::pair<std::size_t, std::uint64_t>> index;
};

std::shared_ptr<FamilyData> family_data(const ParamRange& range, Sequence seq, PreparedClaim& pc) {
  auto data = std::make_shared<FamilyData>();
  data->pairs = detail::grid_pairs(range, {.b_nonzero = true, .d_nonzero = true}, pc.skipped);
  for (const auto& p : data->pairs) {
    data->values.push_back(sequence_table(seq, range.n_max, p));
    data->d_powers.push_back(detail::power_table(p.d(), range.n_max));
  }
  for (std::size_t j = 0; j < data->pairs.size(); ++j) {
    for (std::uint64_t n = 1; n <= range.n_max; ++n) {
      data->index.emplace_back(j, n);
      pc.points.push_back(
          params({{"b", data->pairs[j].b()}, {"c", data->pairs[j].c()}, {"n", detail::as_i64(n)}}));
    }
  }
  return data;
}

PreparedClaim build_family_a(const ParamRange& range) {
  PreparedClaim pc;
  auto data = family_data(range, Sequence::GenTrinomial, pc);
  pc.evaluate = [data](std::size_t i) {
    const auto [j, n] = data->index[i];
    const auto& T = *data->values[j];
    const auto& dp = data->d_powers[j];
    Integer sum = 0;
    for (std::uint64_t k = 1; k <= n; ++k) sum += Integer(static_cast<unsigned long>(k)) * T[k] * T[k - 1] * dp[n - k];
    const Integer divisor = Integer(static_cast<long>(data->pairs[j].b())) * (n * (n + 1) / 2);
    return check_divides(divisor, sum);
  };
  return pc;
}

PreparedClaim build_family_b(const ParamRange& range) {
  PreparedClaim pc;
  auto data = family_data(range, Sequence::GenTrinomial, pc);
  pc.evaluate = [data](std::size_t i) {
    const auto [j, n] = data->index[i];
    const auto& T = *data->values[j];
    const auto& dp = data->d_powers[j];
    Integer sum = 0;
    for (std::uint64_t k = 1; k <= n; ++k) sum += Integer(static_cast<unsigned long>(k * k * k)) * T[k] * T[k - 1] * dp[n - k];
    const Integer half = Integer(static_cast<unsigned long>(n * (n + 1) / 2));
    const Integer divisor = Integer(static_cast<long>(data->pairs[j].b())) * half * half;
    return check_divides(divisor, 3 * sum);
  };
  return pc;
}

PreparedClaim build_family_c(const ParamRange& range) {
  PreparedClaim pc;
  auto data = family_data(range, Sequence::GenMotzkin, pc);
  pc.evaluate = [data](std::size_t i) {
    const auto [j, n] = data->index[i];
    const auto& M = *data->values[j];
    const auto& dp = data->d_powers[j];
    Integer sum = 0;
    for (std::uint64_t k = 0; k < n; ++k)
      sum += Integer(static_cast<unsigned long>((k + 1) * (k + 2) * (2 * k + 3))) * M[k] * M[k] * dp[n - 1 - k];
    const auto g = static_cast<long>(n % 2 == 0 ? 2 : 1);
    return check_divides(Integer(static_cast<unsigned long>(n * (n + 1) * (n + 2))), g * sum);
  };
  return pc;
}

PreparedClaim build_family_d(const ParamRange& range) {
  PreparedClaim pc;
  auto data = family_data(range, Sequence::GenMotzkin, pc);
  pc.evaluate = [data](std::size_t i) {
    const auto [j, n] = data->index[i];
    const auto& M = *data->values[j];
    const auto& dp = data->d_powers[j];
    Integer sum = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
      Integer term = Integer(static_cast<unsigned long>((k + 1) * (k + 2) * (2 * k + 3))) * M[k] * M[k] * dp[n - 1 - k];
      if ((n - 1 - k) % 2 == 1) term = -term;  // (-d)^(n-1-k)
      sum += term;
    }
    const Integer b(static_cast<long>(data->pairs[j].b()));
    const Integer product = M[n] * M[n - 1];
    const Rational lhs = make_rational(sum, Integer(static_cast<unsigned long>(n * (n + 1) * (n + 2))));
    const Rational rhs = make_rational(product, b);
    if (lhs != rhs) return check_equal(lhs, rhs);
    if (!is_integral(rhs)) return PointResult::fail(to_string(lhs), to_string(rhs), "value is not an integer");
    return PointResult::pass();
  };
  return pc;
}

}  // namespace

namespace detail {

PreparedClaim build_motzkin_cubic_identity(const ParamRange& range, const Weight& weight) {
  const auto M = sequence_table(Sequence::Motzkin, range.n_max);
  auto threes = std::make_shared<std::vector<Integer>>(detail::power_table(Integer(3), range.n_max));
  PreparedClaim pc;
  for (std::uint64_t n = 1; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [M, threes, weight](std::size_t i) {
    const std::uint64_t n = i + 1;
    const auto& m = *M;
    Integer lhs = 0;
    for (std::uint64_t k = 0; k < n; ++k)
      lhs += weight(k) * m[k] * m[k] * (*threes)[n - 1 - k];
    const Integer rhs = Integer(static_cast<unsigned long>(n * (n + 1) * (n + 2))) * m[n] * m[n - 1];
    return check_equal(lhs, rhs);
  };
  return pc;
}

}  // namespace detail

namespace {

PreparedClaim build_delannoy_divisibility(const ParamRange& range) {
  const auto D = sequence_table(Sequence::Delannoy, range.n_max);
  auto linear = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  auto cubic = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  for (std::uint64_t k = 1; k <= range.n_max; ++k) {
    const Integer dd = (*D)[k] * (*D)[k - 1];
    (*linear)[k] = (*linear)[k - 1] + Integer(static_cast<unsigned long>(k)) * dd;
    (*cubic)[k] = (*cubic)[k - 1] + Integer(static_cast<unsigned long>(k * k * k)) * dd;
  }
  PreparedClaim pc;
  for (const char* part : {"a", "b"}) {
    for (std::uint64_t n = 1; n <= range.n_max; ++n)
      pc.points.push_back({{"part", std::string(part)}, {"n", detail::as_i64(n)}});
  }
  const std::uint64_t per_part = range.n_max;
  pc.evaluate = [linear, cubic, per_part](std::size_t i) {
    const bool first = i < per_part;
    const std::uint64_t n = (first ? i : i - per_part) + 1;
    const Integer half(static_cast<unsigned long>(n * (n + 1) / 2));
    if (first) return check_divides(3 * half, (*linear)[n]);
    return check_divides(half * half, (*cubic)[n]);
  };
  return pc;
}

PreparedClaim build_schroder_divisibility(const ParamRange& range) {
  const auto s = sequence_table(Sequence::SchroderLittle, std::max<std::uint64_t>(range.n_max, 1));
  auto sums = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  for (std::uint64_t k = 1; k <= range.n_max; ++k)
    (*sums)[k] = (*sums)[k - 1] + Integer(static_cast<unsigned long>(k * (k + 1) * (2 * k + 1))) * (*s)[k] * (*s)[k];
  PreparedClaim pc;
  for (std::uint64_t n = 1; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [sums](std::size_t i) {
    const std::uint64_t n = i + 1;
    const Integer divisor(static_cast<unsigned long>(n * (n + 1) * (n + 2) / (n % 2 == 0 ? 2 : 1)));
    return check_divides(divisor, (*sums)[n]);
  };
  return pc;
}

PreparedClaim build_schroder_alternating(const ParamRange& range) {
  const auto s = sequence_table(Sequence::SchroderLittle, range.n_max + 1);
  auto alt = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  for (std::uint64_t k = 1; k <= range.n_max; ++k)
    (*alt)[k] = Integer(static_cast<unsigned long>(k * (k + 1) * (2 * k + 1))) * (*s)[k] * (*s)[k] - (*alt)[k - 1];
  PreparedClaim pc;
  for (std::uint64_t n = 1; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [s, alt](std::size_t i) {
    const std::uint64_t n = i + 1;
    const Rational lhs = make_rational((*alt)[n], Integer(static_cast<unsigned long>(n * (n + 1) * (n + 2))));
    const Rational rhs = make_rational((*s)[n] * (*s)[n + 1], Integer(3));
    if (lhs != rhs) return check_equal(lhs, rhs);
    if (!is_integral(rhs)) return PointResult::fail(to_string(lhs), to_string(rhs), "value is not an integer");
    return PointResult::pass();
  };
  return pc;
}

ParamRange theorem_n(bool deep) { return detail::n_range(deep ? 1000 : detail::kTheoremN); }
ParamRange theorem_grid(bool deep) { return detail::grid_range(deep ? 200 : 100); }

}  // namespace

namespace detail {

void register_theorem_claims(Registry& r) {
  r.push_back({{"THM-1.1.i", StatementKind::Integrality, ClaimGroup::Theorem, "(n)",
                "s(n) = (2/n) sum_{k=1}^n (2k+1) M_k^2 is an integer, n >= 1"},
               theorem_n, [](const ParamRange& r) {
                 return build_s_integrality(r, [](std::uint64_t k) { return Integer(static_cast<unsigned long>(2 * k + 1)); });
               }});
  r.push_back({{"THM-1.1.ii", StatementKind::Congruence, ClaimGroup::Theorem, "(p)",
                "sum_{k=0}^{p-1} (2k+1) M_k^2 = 12 p (p/3) (mod p^2), primes p > 3"},
               [](bool deep) { return prime_range(deep ? 3000 : kPrimeHi); }, build_m_square_congruence});
  r.push_back({{"THM-1.2", StatementKind::Divisibility, ClaimGroup::Theorem, "(n)",
                "n^2(n^2-1)/6 divides sum_{k=0}^{n-1} k(k+1)(8k+9) T_k T_{k+1}, n >= 2"},
               theorem_n, [](const ParamRange& r) {
                 return build_t_divisibility(r, [](std::uint64_t k) {
                   return Integer(static_cast<unsigned long>(k * (k + 1) * (8 * k + 9)));
                 });
               }});
  r.push_back({{"THM-1.3.a", StatementKind::Divisibility, ClaimGroup::Theorem, "(b, c, n)",
                "b n(n+1)/2 divides sum_{k=1}^n k T_k(b,c) T_{k-1}(b,c) d^(n-k), b != 0, d != 0"},
               theorem_grid, build_family_a});
  r.push_back({{"THM-1.3.b", StatementKind::Divisibility, ClaimGroup::Theorem, "(b, c, n)",
                "b n^2(n+1)^2/4 divides 3 sum_{k=1}^n k^3 T_k(b,c) T_{k-1}(b,c) d^(n-k), b != 0, d != 0"},
               theorem_grid, build_family_b});
  r.push_back({{"THM-1.3.c", StatementKind::Integrality, ClaimGroup::Theorem, "(b, c, n)",
                "gcd(2,n)/(n(n+1)(n+2)) sum_{k=0}^{n-1} (k+1)(k+2)(2k+3) M_k(b,c)^2 d^(n-1-k) is an integer"},
               theorem_grid, build_family_c});
  r.push_back({{"THM-1.3.d", StatementKind::Identity, ClaimGroup::Theorem, "(b, c, n)",
                "sum_{k=0}^{n-1} (k+1)(k+2)(2k+3)/(n(n+1)(n+2)) M_k(b,c)^2 (-d)^(n-1-k) = M_n(b,c) M_{n-1}(b,c)/b, "
                "an integer"},
               theorem_grid, build_family_d});
  r.push_back({{"ID-1.8", StatementKind::Identity, ClaimGroup::Identity, "(n)",
                "sum_{k=0}^{n-1} (k+1)(k+2)(2k+3) M_k^2 3^(n-1-k) = n(n+1)(n+2) M_n M_{n-1}"},
               [](bool deep) { return n_range(deep ? 1000 : 500); },
               [](const ParamRange& r) {
                 return build_motzkin_cubic_identity(r, [](std::uint64_t k) {
                   return Integer(static_cast<unsigned long>((k + 1) * (k + 2) * (2 * k + 3)));
                 });
               }});
  r.push_back({{"COR-1.1.ab", StatementKind::Divisibility, ClaimGroup::Theorem, "(part, n)",
                "a: 3n(n+1)/2 divides sum_{k=1}^n k D_k D_{k-1}; b: n^2(n+1)^2/4 divides sum_{k=1}^n k^3 D_k D_{k-1}"},
               [](bool deep) { return n_range(deep ? 1000 : 300); }, build_delannoy_divisibility});
  r.push_back({{"COR-1.1.c", StatementKind::Divisibility, ClaimGroup::Theorem, "(n)",
                "n(n+1)(n+2)/gcd(2,n) divides sum_{k=1}^n k(k+1)(2k+1) s_k^2"},
               [](bool deep) { return n_range(deep ? 1000 : 300); }, build_schroder_divisibility});
  r.push_back({{"COR-1.1.d", StatementKind::Identity, ClaimGroup::Theorem, "(n)",
                "sum_{k=1}^n k(k+1)(2k+1)(-1)^(n-k) s_k^2 / (n(n+1)(n+2)) = s_n s_{n+1}/3, an integer"},
               [](bool deep) { return n_range(deep ? 1000 : 300); }, build_schroder_alternating});
}

}  // namespace detail

}  // namespace mtc
