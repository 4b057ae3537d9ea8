// Claims around the Schröder polynomial s_n(x), the summation behind s(n),
// the q-analogue divisibility and the Fermat-quotient congruence.

#include "claim_impl.hpp"

#include "mtc/families.hpp"
#include "mtc/modular.hpp"
#include "mtc/qpoly.hpp"
#include "mtc/quadratic.hpp"

namespace mtc {

using detail::check_congruent;
using detail::check_equal;
using detail::params;
using detail::PointResult;
using detail::PreparedClaim;

namespace {

Integer u(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

// Points (b, c, n) for n = 0..n_max over the pairs.
void grid_points(const std::vector<TrinomialParams>& pairs, std::uint64_t n_max, PreparedClaim& pc,
                 std::vector<std::pair<std::size_t, std::uint64_t>>& index) {
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      index.emplace_back(j, n);
      pc.points.push_back(params({{"b", pairs[j].b()}, {"c", pairs[j].c()}, {"n", detail::as_i64(n)}}));
    }
  }
}

PreparedClaim build_sqrt_d(const ParamRange& range) {
  PreparedClaim pc;
  struct Data {
    std::vector<TrinomialParams> pairs;
    std::vector<std::shared_ptr<const std::vector<Integer>>> motzkin;
    std::vector<IntPolynomial> s;  // s[n] = s_n(x), n >= 1
    std::vector<std::pair<std::size_t, std::uint64_t>> index;
  };
  auto data = std::make_shared<Data>();
  data->pairs = detail::grid_pairs(range, {.d_nonzero = true}, pc.skipped);
  for (const auto& p : data->pairs) data->motzkin.push_back(sequence_table(Sequence::GenMotzkin, range.n_max, p));
  data->s.resize(range.n_max + 2);
  for (std::uint64_t n = 1; n <= range.n_max + 1; ++n) data->s[n] = s_poly(detail::as_i64(n));
  grid_points(data->pairs, range.n_max, pc, data->index);

  pc.evaluate = [data](std::size_t i) {
    const auto [j, n] = data->index[i];
    const TrinomialParams& p = data->pairs[j];
    const Integer d = p.d();
    const Integer& expected = (*data->motzkin[j])[n];
    const IntPolynomial& s = data->s[n + 1];
    Integer root;
    if (perfect_square_root(d, root)) {
      const Rational x = (make_rational(Integer(p.b()), root) - 1) / 2;
      const Rational value = Rational(pow(root, n)) * s.evaluate_as(x);
      return check_equal(value, Rational(expected));
    }
    const QuadraticElement x(Rational(-1, 2), make_rational(Integer(p.b()), 2 * d), d);
    const QuadraticElement value = s.evaluate_as(x) * pow(QuadraticElement::sqrt_d(d), static_cast<long>(n));
    if (!value.is_rational())
      return PointResult::fail(value.to_string(), to_string(expected), "nonzero sqrt(d) component");
    return check_equal(value.u(), Rational(expected));
  };
  return pc;
}

PreparedClaim build_motzkin_square_sum(const ParamRange& range) {
  PreparedClaim pc;
  struct Data {
    std::vector<TrinomialParams> pairs;
    std::vector<std::shared_ptr<const std::vector<Integer>>> motzkin;
    std::vector<std::vector<Integer>> c_powers, d_powers;
    std::vector<std::pair<std::size_t, std::uint64_t>> index;
    std::unique_ptr<BinomialTable> binom;
  };
  auto data = std::make_shared<Data>();
  data->pairs = detail::grid_pairs(range, {.d_nonzero = true}, pc.skipped);
  for (const auto& p : data->pairs) {
    data->motzkin.push_back(sequence_table(Sequence::GenMotzkin, range.n_max, p));
    data->c_powers.push_back(detail::power_table(Integer(p.c()), range.n_max + 1));
    data->d_powers.push_back(detail::power_table(p.d(), range.n_max + 1));
  }
  data->binom = std::make_unique<BinomialTable>(2 * range.n_max + 2);
  grid_points(data->pairs, range.n_max, pc, data->index);

  pc.evaluate = [data](std::size_t i) {
    const auto [j, n] = data->index[i];
    const BinomialTable& C = *data->binom;
    const auto sn = detail::as_i64(n);
    Integer sum = 0;
    for (std::int64_t k = 1; k <= sn + 1; ++k) {
      sum += C(sn + k + 1, 2 * k) * C(2 * k, k) * C(2 * k, k + 1) * data->c_powers[j][k - 1] *
             data->d_powers[j][n + 1 - k];
    }
    const Integer& m = (*data->motzkin[j])[n];
    return check_equal(u((n + 1) * (n + 2)) * m * m, sum);
  };
  return pc;
}

// (n+2) sum_{k=1}^n (2k+1) M_k^2 against the single-sum closed form.
PreparedClaim build_single_sum(const ParamRange& range) {
  const auto M = sequence_table(Sequence::Motzkin, range.n_max);
  auto sums = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  for (std::uint64_t k = 1; k <= range.n_max; ++k) (*sums)[k] = (*sums)[k - 1] + u(2 * k + 1) * (*M)[k] * (*M)[k];
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max + 3);
  auto threes = std::make_shared<std::vector<Integer>>(detail::power_table(Integer(-3), range.n_max + 1));

  PreparedClaim pc;
  for (std::uint64_t n = 1; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [sums, binom, threes](std::size_t i) {
    const std::int64_t n = static_cast<std::int64_t>(i) + 1;
    const BinomialTable& C = *binom;
    Integer rhs = 0;
    for (std::int64_t k = 0; k <= n + 1; ++k) {
      rhs += Integer((4 * n - 2 * k + 3) * (n + k + 2)) * C(n + k + 1, 2 * k) * C(2 * k, k) * C(2 * k + 1, k) *
             (*threes)[n + 1 - k];
    }
    return check_equal(Integer((n + 2) * (*sums)[n]), rhs);
  };
  return pc;
}

// The double sum of F(k, l) against its telescoped single-sum form.
PreparedClaim build_double_sum(const ParamRange& range) {
  const std::uint64_t top = range.n_max;
  BinomialTable C(2 * top + 4);
  const auto threes = detail::power_table(Integer(-3), top);
  // Only l <= k contributes: C(k+l+2, 2l+2) vanishes for l > k.
  auto lhs = std::make_shared<std::vector<Rational>>(top + 1);
  Rational acc = 0;
  for (std::int64_t k = 0; k <= detail::as_i64(top); ++k) {
    Integer row = 0;
    for (std::int64_t l = 0; l <= k; ++l)
      row += C(k + l + 2, 2 * l + 2) * C(2 * l + 2, l + 1) * C(2 * l + 2, l) * threes[k - l];
    acc += make_rational(Integer(2 * k + 1) * row, Integer((k + 1) * (k + 2)));
    (*lhs)[k] = acc;
  }
  auto fact = std::make_shared<std::vector<Integer>>(2 * top + 4);
  (*fact)[0] = 1;
  for (std::size_t i = 1; i < fact->size(); ++i) (*fact)[i] = (*fact)[i - 1] * u(i);
  auto signed_threes = std::make_shared<std::vector<Integer>>(detail::power_table(Integer(-3), top + 1));

  PreparedClaim pc;
  for (std::uint64_t n = 0; n <= top; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [lhs, fact, signed_threes](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i);
    const auto& f = *fact;
    Rational rhs = Rational(1 + Integer(4 * n + 3) * (*signed_threes)[n + 1]);
    for (std::int64_t j = 0; j <= n; ++j) {
      const Integer num = (*signed_threes)[n - j] * Integer(4 * n - 2 * j + 1) * f[n + j + 3] * f[2 * j + 3];
      const Integer den = Integer((n + 2) * (j + 2)) * f[n - j] * pow(f[j + 1], 4);
      rhs += make_rational(num, den);
    }
    return check_equal((*lhs)[n], rhs);
  };
  return pc;
}

PreparedClaim build_fermat_quotient_congruence(const ParamRange& range) {
  PreparedClaim pc;
  const auto primes = detail::claim_primes(range, 5, true, pc.skipped);
  const std::uint64_t top = primes.empty() ? 0 : primes.back();
  auto central = std::make_shared<std::vector<Integer>>(top + 1);
  for (std::uint64_t k = 0; k <= top; ++k) (*central)[k] = binomial(detail::as_i64(2 * k), detail::as_i64(k));
  for (auto p : primes) pc.points.push_back(params({{"p", detail::as_i64(p)}}));
  pc.evaluate = [central, primes](std::size_t i) {
    const std::uint64_t p = primes[i];
    const Integer pz = u(p);
    Integer lhs = 0;
    Integer three_k = 1;
    for (std::uint64_t k = 1; k < p; ++k) {
      three_k = mod(three_k * 3, pz);
      lhs += mod((*central)[k], pz) * mod_inverse(u(k) * three_k, pz);
    }
    return check_congruent(lhs, fermat_quotient(Integer(3), p), pz);
  };
  return pc;
}

PreparedClaim build_mod_n_reduction(const ParamRange& range) {
  const auto M = sequence_table(Sequence::Motzkin, range.n_max);
  auto sums = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  for (std::uint64_t k = 1; k <= range.n_max; ++k) (*sums)[k] = (*sums)[k - 1] + u(2 * k + 1) * (*M)[k] * (*M)[k];
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max + 1);
  auto threes = std::make_shared<std::vector<Integer>>(detail::power_table(Integer(-3), range.n_max));

  PreparedClaim pc;
  for (std::uint64_t n = 1; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [sums, binom, threes](std::size_t i) {
    const std::int64_t n = static_cast<std::int64_t>(i) + 1;
    const BinomialTable& C = *binom;
    Integer rhs = 0;
    for (std::int64_t k = 0; k < n; ++k)
      rhs += C(n + 1, k) * C(n + k, k) * C(2 * k, k) * Integer(k + 2) * (*threes)[n - 1 - k];
    return check_congruent(2 * (*sums)[n], 27 * rhs, Integer(n));
  };
  return pc;
}

ParamRange q_defaults(bool deep) {
  ParamRange r = detail::n_range(deep ? 60 : 40);
  r.qexp_a_max = deep ? 3 : 2;
  r.qexp_b_max = deep ? 3 : 2;
  return r;
}

}  // namespace

namespace detail {

PreparedClaim build_q_divisibility(const ParamRange& range, std::uint64_t shift) {
  struct Point {
    std::uint64_t a, b, n;
  };
  auto points = std::make_shared<std::vector<Point>>();
  PreparedClaim pc;
  for (std::uint64_t a = 0; a <= range.qexp_a_max; ++a) {
    for (std::uint64_t b = 0; b <= range.qexp_b_max; ++b) {
      for (std::uint64_t n = 1; n <= range.n_max; ++n) {
        points->push_back({a, b, n});
        pc.points.push_back(params({{"a", as_i64(a)}, {"b", as_i64(b)}, {"n", as_i64(n)}}));
      }
    }
  }
  pc.notes.push_back("summands reduced modulo q^n - 1 before exact division by [n]_q");
  pc.evaluate = [points, shift](std::size_t i) {
    const Point pt = (*points)[i];
    const std::uint64_t a = pt.a, b = pt.b, n = pt.n;
    // Every factor is reduced modulo q^n - 1, a multiple of [n]_q.
    const auto rows = q_binomial_rows_cyclic(std::max(n + 1, 2 * n), n);
    const IntPolynomial minus_three = fold_cyclic(-q_integer(3), n);
    std::vector<IntPolynomial> neg_three_pow(n);
    neg_three_pow[0] = IntPolynomial(Integer(1));
    for (std::uint64_t e = 1; e < n; ++e) neg_three_pow[e] = mul_cyclic(neg_three_pow[e - 1], minus_three, n);
    auto cyclic_pow = [n](const IntPolynomial& base, std::uint64_t e) {
      IntPolynomial out(Integer(1));
      for (std::uint64_t t = 0; t < e; ++t) out = mul_cyclic(out, base, n);
      return fold_cyclic(out, n);
    };
    IntPolynomial sum;
    for (std::uint64_t k = 0; k < n; ++k) {
      IntPolynomial term = cyclic_pow(rows[n + 1][k], a);
      term = mul_cyclic(term, cyclic_pow(rows[n + k][k], b), n);
      term = mul_cyclic(term, rows[2 * k][k], n);
      term = mul_cyclic(term, fold_cyclic(q_integer(k + shift), n), n);
      term = mul_cyclic(term, neg_three_pow[n - 1 - k], n);
      sum += term;
    }
    try {
      exact_div(sum, q_integer(n));
    } catch (const NotDivisible& e) {
      return PointResult::fail(render(sum), render(q_integer(n)), "remainder " + render(e.remainder()));
    }
    return PointResult::pass();
  };
  return pc;
}

void register_section2_claims(Registry& r) {
  r.push_back({{"LEM-2.1.b", StatementKind::Identity, ClaimGroup::Lemma, "(b, c, n)",
                "M_n(b,c) = sqrt(d)^n s_{n+1}((b/sqrt(d) - 1)/2), d = b^2 - 4c != 0"},
               [](bool deep) { return grid_range(deep ? 100 : 50); }, build_sqrt_d});
  r.push_back({{"REM-2.1", StatementKind::Identity, ClaimGroup::Lemma, "(b, c, n)",
                "(n+1)(n+2) M_n(b,c)^2 = sum_{k=1}^{n+1} C(n+k+1,2k) C(2k,k) C(2k,k+1) c^(k-1) d^(n+1-k), d != 0"},
               [](bool deep) { return grid_range(deep ? 120 : kTriangleN); }, build_motzkin_square_sum});
  r.push_back({{"LEM-2.2", StatementKind::Identity, ClaimGroup::Lemma, "(n)",
                "sum_{k=1}^n (2k+1) M_k^2 = sum_{k=0}^{n+1} (4n-2k+3)(n+k+2)/(n+2) C(n+k+1,2k) C(2k,k) C(2k+1,k) "
                "(-3)^(n+1-k)"},
               [](bool deep) { return n_range(deep ? 1000 : kTheoremN); }, build_single_sum});
  r.push_back({{"EQ-2.8", StatementKind::Identity, ClaimGroup::Identity, "(n)",
                "sum_{k,l=0}^n (2k+1)/((k+1)(k+2)) C(k+l+2,2l+2) C(2l+2,l+1) C(2l+2,l) (-3)^(k-l) = "
                "1 + (4n+3)(-3)^(n+1) + sum_{j=0}^n (-3)^(n-j) (4n-2j+1)(n+j+3)!(2j+3)! / "
                "((n+2)(n-j)!(j+2)(j+1)!^4)"},
               [](bool deep) { return n_range(deep ? 300 : kSupportN); }, build_double_sum});
  r.push_back({{"LEM-2.3", StatementKind::PolynomialDivisibility, ClaimGroup::Lemma, "(a, b, n)",
                "[n]_q divides sum_{k=0}^{n-1} [n+1,k]_q^a [n+k,k]_q^b [2k,k]_q [k+2]_q (-[3]_q)^(n-1-k)"},
               q_defaults, [](const ParamRange& r) { return build_q_divisibility(r, 2); }});
  r.push_back({{"LEM-2.4", StatementKind::Congruence, ClaimGroup::Lemma, "(p)",
                "sum_{k=1}^{p-1} C(2k,k)/(k 3^k) = (3^(p-1) - 1)/p (mod p), primes p > 3"},
               [](bool deep) { return prime_range(deep ? 3000 : kPrimeHi); }, build_fermat_quotient_congruence});
  r.push_back({{"EQ-2.11", StatementKind::Congruence, ClaimGroup::Identity, "(n)",
                "2 sum_{k=1}^n (2k+1) M_k^2 = 27 sum_{k=0}^{n-1} C(n+1,k) C(n+k,k) C(2k,k) (k+2) (-3)^(n-1-k) (mod n)"},
               [](bool deep) { return n_range(deep ? 1000 : kTheoremN); }, build_mod_n_reduction});
}

}  // namespace detail

}  // namespace mtc
