// Supporting identities and divisibilities: trinomial square sums, the a(n,k)
// single sum, partial sums over (j, m) triangles, and the Narayana / w(n,k)
// inversion pair.

#include "claim_impl.hpp"

namespace mtc {

using detail::check_divides;
using detail::check_equal;
using detail::params;
using detail::PointResult;
using detail::PreparedClaim;

namespace {

Integer u(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }
Integer s(std::int64_t v) { return Integer(static_cast<long>(v)); }

Integer a_nk(std::int64_t n, std::int64_t k) {
  const Integer N = s(n), K = s(k);
  return 4 * K * K * N * N - 8 * K * N * N * N - 14 * K * K * N - 14 * K * N * N - 4 * N * N * N + 13 * K * K -
         11 * K * N - 26 * N * N + 39 * K + 4 * N + 26;
}

// Per-pair tables for claims over the (b, c) grid.
struct GridData {
  std::vector<TrinomialParams> pairs;
  std::vector<std::shared_ptr<const std::vector<Integer>>> trinomial;
  std::vector<std::vector<Integer>> c_powers, d_powers, neg_d_powers;
  struct Point {
    std::size_t pair;
    std::uint64_t n;
    std::uint64_t delta;
  };
  std::vector<Point> index;
};

std::shared_ptr<GridData> grid_data(const ParamRange& range, std::uint64_t n_min, bool with_delta,
                                    PreparedClaim& pc) {
  auto data = std::make_shared<GridData>();
  data->pairs = detail::grid_pairs(range, {}, pc.skipped);
  for (const auto& p : data->pairs) {
    data->trinomial.push_back(sequence_table(Sequence::GenTrinomial, range.n_max, p));
    data->c_powers.push_back(detail::power_table(Integer(p.c()), range.n_max));
    data->d_powers.push_back(detail::power_table(p.d(), range.n_max));
    data->neg_d_powers.push_back(detail::power_table(-p.d(), range.n_max));
  }
  for (std::size_t j = 0; j < data->pairs.size(); ++j) {
    for (std::uint64_t delta = 0; delta <= (with_delta ? 1U : 0U); ++delta) {
      for (std::uint64_t n = n_min; n <= range.n_max; ++n) {
        data->index.push_back({j, n, delta});
        ParamTuple t = params({{"b", data->pairs[j].b()}, {"c", data->pairs[j].c()}});
        if (with_delta) t.emplace_back("delta", ParamValue{detail::as_i64(delta)});
        t.emplace_back("n", ParamValue{detail::as_i64(n)});
        pc.points.push_back(std::move(t));
      }
    }
  }
  return data;
}

PreparedClaim build_trinomial_square_sum(const ParamRange& range) {
  PreparedClaim pc;
  auto data = grid_data(range, 1, false, pc);
  pc.evaluate = [data](std::size_t i) {
    const auto pt = data->index[i];
    const auto& T = *data->trinomial[pt.pair];
    Integer sum = 0;
    for (std::uint64_t k = 0; k < pt.n; ++k) sum += u(2 * k + 1) * T[k] * T[k] * data->neg_d_powers[pt.pair][pt.n - 1 - k];
    return check_equal(s(data->pairs[pt.pair].b()) * sum, u(pt.n) * T[pt.n] * T[pt.n - 1]);
  };
  return pc;
}

PreparedClaim build_trinomial_square(const ParamRange& range) {
  PreparedClaim pc;
  auto data = grid_data(range, 0, false, pc);
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max);
  pc.evaluate = [data, binom](std::size_t i) {
    const auto pt = data->index[i];
    const BinomialTable& C = *binom;
    const auto k = detail::as_i64(pt.n);
    Integer sum = 0;
    for (std::int64_t j = 0; j <= k; ++j)
      sum += C(k + j, 2 * j) * C(2 * j, j) * C(2 * j, j) * data->c_powers[pt.pair][j] * data->d_powers[pt.pair][k - j];
    const Integer& t = (*data->trinomial[pt.pair])[pt.n];
    return check_equal(t * t, sum);
  };
  return pc;
}

PreparedClaim build_a_nk_sum(const ParamRange& range) {
  const auto T = sequence_table(Sequence::CentralTrinomial, range.n_max);
  auto lhs = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  for (std::uint64_t n = 1; n <= range.n_max; ++n) {
    const std::uint64_t k = n - 1;
    (*lhs)[n] = (*lhs)[n - 1] + u(k * (k + 1) * (8 * k + 9)) * (*T)[k] * (*T)[k + 1];
  }
  PreparedClaim pc;
  for (std::uint64_t n = 1; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [lhs](std::size_t i) {
    const std::int64_t n = static_cast<std::int64_t>(i) + 1;
    Integer sum = 0;
    Integer three = 1;  // 3^(n-1-k), built from k = n-1 downwards
    for (std::int64_t k = n - 1; k >= 0; --k) {
      sum += binomial(n - 1, k) * binomial(-n - 1, k) * catalan(static_cast<std::uint64_t>(k)) * three * a_nk(n, k);
      three *= 3;
    }
    return check_equal(6 * (*lhs)[n], sign_power(static_cast<unsigned long>(n)) * s(n) * sum);
  };
  return pc;
}

// Points (j, m) with 0 <= j < m <= m_max (or j <= m when `inclusive`).
std::vector<std::pair<std::int64_t, std::int64_t>> triangle(std::uint64_t m_max, bool inclusive, PreparedClaim& pc,
                                                            std::optional<std::int64_t> delta = std::nullopt) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t m = 0; m <= detail::as_i64(m_max); ++m) {
    for (std::int64_t j = 0; inclusive ? j <= m : j < m; ++j) {
      out.emplace_back(j, m);
      if (delta)
        pc.points.push_back(params({{"delta", *delta}, {"j", j}, {"m", m}}));
      else
        pc.points.push_back(params({{"j", j}, {"m", m}}));
    }
  }
  return out;
}

PreparedClaim build_partial_geometric(const ParamRange& range) {
  PreparedClaim pc;
  auto tri = std::make_shared<const std::vector<std::pair<std::int64_t, std::int64_t>>>(triangle(range.n_max, false, pc));
  pc.evaluate = [tri](std::size_t i) {
    const auto [j, m] = (*tri)[i];
    Integer lhs = 0;
    for (std::int64_t k = j + 1; k <= m; ++k)
      lhs += s((k - 1) * (8 * k + 1)) * pow(3L, static_cast<unsigned long>(k - 1 - j));
    const Integer rhs =
        pow(3L, static_cast<unsigned long>(m - j)) * s(16 * m * m - 30 * m + 21) - s(16 * j * j - 30 * j + 21);
    return check_equal(4 * lhs, rhs);
  };
  return pc;
}

PreparedClaim build_telescoped_double_sum(const ParamRange& range) {
  const std::int64_t top = detail::as_i64(range.n_max);
  BinomialTable C(2 * range.n_max + 2);
  // row[k] = sum_l C(k+l,2l) C(2l,l)^2 (-3)^(k-l); terms with l > k vanish.
  auto row = std::make_shared<std::vector<Integer>>(range.n_max + 1);
  const auto neg3 = detail::power_table(Integer(-3), range.n_max + 1);
  for (std::int64_t k = 0; k <= top; ++k) {
    for (std::int64_t l = 0; l <= k; ++l) (*row)[k] += C(k + l, 2 * l) * C(2 * l, l) * C(2 * l, l) * neg3[k - l];
  }
  auto fact = std::make_shared<std::vector<Integer>>(2 * range.n_max + 1);
  (*fact)[0] = 1;
  for (std::size_t i = 1; i < fact->size(); ++i) (*fact)[i] = (*fact)[i - 1] * u(i);
  auto pow3 = std::make_shared<std::vector<Integer>>(detail::power_table(Integer(3), range.n_max + 1));
  auto npow3 = std::make_shared<std::vector<Integer>>(neg3);

  PreparedClaim pc;
  for (std::int64_t n = 1; n <= top; ++n) pc.points.push_back(params({{"n", n}}));
  pc.evaluate = [row, fact, pow3, npow3](std::size_t i) {
    const std::int64_t n = static_cast<std::int64_t>(i) + 1;
    const Integer bracket_n = s(16 * n * n - 30 * n + 21);
    Integer lhs = 0;
    for (std::int64_t k = 0; k <= n; ++k)
      lhs += s(2 * k + 1) * (*row)[k] * ((*pow3)[n - k] * bracket_n - s(16 * k * k - 30 * k + 21));
    const auto& f = *fact;
    Rational sum = 0;
    for (std::int64_t k = 0; k < n; ++k) {
      const Integer num = a_nk(n, k) * (*npow3)[n - k] * f[n + k] * f[2 * k];
      const Integer den = f[n - k - 1] * pow(f[k], 4) * s(k + 1);
      sum += make_rational(num, den);
    }
    return check_equal(Rational(lhs), Rational(2, 9) * sum);
  };
  return pc;
}

PreparedClaim build_n2_minus_1(const ParamRange& range) {
  PreparedClaim pc;
  for (std::uint64_t n = 1; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [](std::size_t i) {
    const std::int64_t n = static_cast<std::int64_t>(i) + 1;
    Integer sum = 0;
    Integer three = 1;
    for (std::int64_t k = n - 1; k >= 0; --k) {
      sum += binomial(n - 1, k) * binomial(-n - 1, k) * catalan(static_cast<std::uint64_t>(k)) * three * a_nk(n, k);
      three *= 3;
    }
    return check_divides(s(n * n - 1), sum);
  };
  return pc;
}

PreparedClaim build_two_n(const ParamRange& range) {
  struct Point {
    std::uint64_t a, b, n;
  };
  auto pts = std::make_shared<std::vector<Point>>();
  PreparedClaim pc;
  for (std::uint64_t a = 0; a <= range.qexp_a_max; ++a) {
    for (std::uint64_t b = 0; b <= range.qexp_b_max; ++b) {
      if ((a + b) % 2 != 0) {
        pc.skipped.push_back({params({{"a", detail::as_i64(a)}, {"b", detail::as_i64(b)}}), "requires a + b even"});
        continue;
      }
      for (std::uint64_t n = 1; n <= range.n_max; ++n) {
        pts->push_back({a, b, n});
        pc.points.push_back(params({{"a", detail::as_i64(a)}, {"b", detail::as_i64(b)}, {"n", detail::as_i64(n)}}));
      }
    }
  }
  pc.evaluate = [pts](std::size_t i) {
    const Point pt = (*pts)[i];
    const auto n = detail::as_i64(pt.n);
    Integer sum = 0;
    Integer three = 1;
    for (std::int64_t k = n - 1; k >= 0; --k) {
      sum += pow(binomial(n - 1, k), pt.a) * pow(binomial(-n - 1, k), pt.b) * binomial(2 * k, k) * s(k + 2) * three;
      three *= 3;
    }
    return check_divides(s(2 * n), sum);
  };
  return pc;
}

PreparedClaim build_trinomial_product(const ParamRange& range) {
  PreparedClaim pc;
  auto data = grid_data(range, 1, false, pc);
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max);
  pc.evaluate = [data, binom](std::size_t i) {
    const auto pt = data->index[i];
    const BinomialTable& C = *binom;
    const auto n = detail::as_i64(pt.n);
    Integer sum = 0;
    for (std::int64_t j = 0; j < n; ++j) {
      sum += s(n - j) * C(n + j, 2 * j) * C(2 * j, j) * C(2 * j, j) * data->c_powers[pt.pair][j] *
             data->d_powers[pt.pair][n - 1 - j];
    }
    const auto& T = *data->trinomial[pt.pair];
    return check_equal(s(n) * T[n] * T[n - 1], s(data->pairs[pt.pair].b()) * sum);
  };
  return pc;
}

PreparedClaim build_alternating_partial(const ParamRange& range) {
  PreparedClaim pc;
  auto tri = std::make_shared<const std::vector<std::pair<std::int64_t, std::int64_t>>>(triangle(range.n_max, false, pc));
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max);
  pc.evaluate = [tri, binom](std::size_t i) {
    const auto [j, m] = (*tri)[i];
    const BinomialTable& C = *binom;
    Integer lhs = 0;
    for (std::int64_t k = j; k < m; ++k) lhs += sign_power(static_cast<unsigned long>(m - 1 - k)) * s(2 * k + 1) * C(k + j, 2 * j);
    return check_equal(lhs, s(m - j) * C(m + j, 2 * j));
  };
  return pc;
}

std::vector<std::pair<std::int64_t, std::int64_t>> nk_points(std::uint64_t n_max, PreparedClaim& pc) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t n = 1; n <= detail::as_i64(n_max); ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      out.emplace_back(n, k);
      pc.points.push_back(params({{"n", n}, {"k", k}}));
    }
  }
  return out;
}

PreparedClaim build_lcm_divisibility(const ParamRange& range) {
  PreparedClaim pc;
  auto pts = std::make_shared<const std::vector<std::pair<std::int64_t, std::int64_t>>>(nk_points(range.n_max, pc));
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max + 1);
  pc.evaluate = [pts, binom](std::size_t i) {
    const auto [n, k] = (*pts)[i];
    const BinomialTable& C = *binom;
    const Integer value = s(n + k + 1) * C(n + k, k) * C(n + 1, k + 1) * C(2 * k, k + 1);
    return check_divides(s(n * (n + 1) * (n + 2) / (n % 2 == 0 ? 2 : 1)), value);
  };
  return pc;
}

PreparedClaim build_central_binomial_mod(const ParamRange& range) {
  PreparedClaim pc;
  for (std::uint64_t n = 0; n <= range.n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
  pc.evaluate = [](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i);
    return check_divides(s(n + 2), 6 * binomial(2 * n, n));
  };
  return pc;
}

PreparedClaim build_w_from_narayana(const ParamRange& range) {
  PreparedClaim pc;
  auto pts = std::make_shared<const std::vector<std::pair<std::int64_t, std::int64_t>>>(nk_points(range.n_max, pc));
  auto binom = std::make_shared<BinomialTable>(range.n_max);
  pc.evaluate = [pts, binom](std::size_t i) {
    const auto [n, k] = (*pts)[i];
    Integer sum = 0;
    for (std::int64_t j = 1; j <= k; ++j) sum += (*binom)(n - j, k - j) * narayana(n, j);
    return check_equal(w_coeff(n, k), sum);
  };
  return pc;
}

PreparedClaim build_narayana_from_w(const ParamRange& range) {
  PreparedClaim pc;
  auto pts = std::make_shared<const std::vector<std::pair<std::int64_t, std::int64_t>>>(nk_points(range.n_max, pc));
  auto binom = std::make_shared<BinomialTable>(range.n_max);
  pc.evaluate = [pts, binom](std::size_t i) {
    const auto [n, k] = (*pts)[i];
    Integer sum = 0;
    for (std::int64_t j = 1; j <= k; ++j)
      sum += (*binom)(n - j, k - j) * sign_power(static_cast<unsigned long>(k - j)) * w_coeff(n, j);
    return check_equal(narayana(n, k), sum);
  };
  return pc;
}

PreparedClaim build_power_partial(const ParamRange& range) {
  PreparedClaim pc;
  struct Point {
    std::int64_t delta, j, m;
  };
  auto pts = std::make_shared<std::vector<Point>>();
  for (std::int64_t delta = 0; delta <= 1; ++delta) {
    for (const auto& [j, m] : triangle(range.n_max, false, pc, delta)) pts->push_back({delta, j, m});
  }
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max);
  pc.evaluate = [pts, binom](std::size_t i) {
    const Point pt = (*pts)[i];
    const BinomialTable& C = *binom;
    const std::int64_t j = pt.j, m = pt.m;
    Integer lhs = 0;
    for (std::int64_t k = j + 1; k <= m; ++k) lhs += pow(s(k), static_cast<unsigned long>(2 * pt.delta)) * s(k - j) * C(k + j, 2 * j);
    const Integer mm1 = pow(s(m * (m + 1)), static_cast<unsigned long>(pt.delta));
    const Rational rhs = make_rational(mm1 * s((m - j) * (m + j + 1)) * C(m + j, 2 * j), s(2 * (j + pt.delta + 1)));
    return check_equal(Rational(lhs), rhs);
  };
  return pc;
}

PreparedClaim build_power_trinomial_sum(const ParamRange& range) {
  PreparedClaim pc;
  auto data = grid_data(range, 1, true, pc);
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max);
  pc.evaluate = [data, binom](std::size_t i) {
    const auto pt = data->index[i];
    const BinomialTable& C = *binom;
    const auto n = detail::as_i64(pt.n);
    const auto& T = *data->trinomial[pt.pair];
    const auto& cp = data->c_powers[pt.pair];
    const auto& dp = data->d_powers[pt.pair];
    Integer lhs = 0;
    for (std::int64_t k = 1; k <= n; ++k) lhs += pow(s(k), static_cast<unsigned long>(2 * pt.delta + 1)) * T[k] * T[k - 1] * dp[n - k];
    Rational sum = 0;
    for (std::int64_t j = 0; j < n; ++j) {
      sum += make_rational(C(n - 1, j) * C(n + j + 1, j) * C(2 * j, j) * cp[j] * dp[n - 1 - j],
                           s(j + detail::as_i64(pt.delta) + 1));
    }
    const Integer outer = pow(s(n * (n + 1)), static_cast<unsigned long>(pt.delta + 1));
    const Rational rhs = make_rational(s(data->pairs[pt.pair].b()) * outer, Integer(2)) * sum;
    return check_equal(Rational(lhs), rhs);
  };
  return pc;
}

PreparedClaim build_odd_partial(const ParamRange& range) {
  PreparedClaim pc;
  auto tri = std::make_shared<const std::vector<std::pair<std::int64_t, std::int64_t>>>(triangle(range.n_max, true, pc));
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max);
  pc.evaluate = [tri, binom](std::size_t i) {
    const auto [j, m] = (*tri)[i];
    const BinomialTable& C = *binom;
    Integer lhs = 0;
    for (std::int64_t k = j; k <= m; ++k) lhs += s(2 * k + 1) * C(k + j, 2 * j);
    return check_equal(s(j + 1) * lhs, s((m + 1) * (m + j + 1)) * C(m + j, 2 * j));
  };
  return pc;
}

ParamRange support_grid(bool deep) { return detail::grid_range(deep ? 200 : detail::kSupportN); }
ParamRange support_n(bool deep) { return detail::n_range(deep ? 400 : detail::kSupportN); }
ParamRange triangle_range(bool deep) { return detail::n_range(deep ? 150 : detail::kTriangleN); }

}  // namespace

namespace detail {

void register_support_claims(Registry& r) {
  r.push_back({{"LEM-3.1.a", StatementKind::Identity, ClaimGroup::Lemma, "(b, c, n)",
                "b sum_{k=0}^{n-1} (2k+1) T_k(b,c)^2 (-d)^(n-1-k) = n T_n(b,c) T_{n-1}(b,c)"},
               support_grid, build_trinomial_square_sum});
  r.push_back({{"LEM-3.1.b", StatementKind::Identity, ClaimGroup::Lemma, "(b, c, n)",
                "T_n(b,c)^2 = sum_{j=0}^n C(n+j,2j) C(2j,j)^2 c^j d^(n-j)"},
               support_grid, build_trinomial_square});
  r.push_back({{"LEM-3.2", StatementKind::Identity, ClaimGroup::Lemma, "(n)",
                "6 sum_{k=0}^{n-1} k(k+1)(8k+9) T_k T_{k+1} = (-1)^n n sum_{k=0}^{n-1} C(n-1,k) C(-n-1,k) C_k "
                "3^(n-1-k) a(n,k)"},
               support_n, build_a_nk_sum});
  r.push_back({{"EQ-3.partial", StatementKind::Identity, ClaimGroup::Identity, "(j, m)",
                "4 sum_{k=j+1}^m (k-1)(8k+1) 3^(k-1-j) = 3^(m-j)(16m^2-30m+21) - (16j^2-30j+21), 0 <= j < m"},
               triangle_range, build_partial_geometric});
  r.push_back({{"EQ-3.4", StatementKind::Identity, ClaimGroup::Identity, "(n)",
                "sum_{k,l=0}^n (2k+1) C(k+l,2l) C(2l,l)^2 (-3)^(k-l) (3^(n-k)(16n^2-30n+21) - (16k^2-30k+21)) = "
                "(2/9) sum_{k=0}^{n-1} a(n,k) (-3)^(n-k) (n+k)! (2k)! / ((n-k-1)! k!^4 (k+1))"},
               support_n, build_telescoped_double_sum});
  r.push_back({{"LEM-3.3", StatementKind::Divisibility, ClaimGroup::Lemma, "(n)",
                "n^2 - 1 divides sum_{k=0}^{n-1} C(n-1,k) C(-n-1,k) C_k 3^(n-1-k) a(n,k)"},
               support_n, build_n2_minus_1});
  r.push_back({{"LEM-3.4", StatementKind::Congruence, ClaimGroup::Lemma, "(a, b, n)",
                "2n divides sum_{k=0}^{n-1} C(n-1,k)^a C(-n-1,k)^b C(2k,k) (k+2) 3^(n-1-k), a + b even"},
               [](bool deep) {
                 ParamRange r = n_range(deep ? 200 : 80);
                 r.qexp_a_max = 3;
                 r.qexp_b_max = 3;
                 return r;
               },
               build_two_n});
  r.push_back({{"LEM-4.1", StatementKind::Identity, ClaimGroup::Lemma, "(b, c, n)",
                "n T_n(b,c) T_{n-1}(b,c) = b sum_{j=0}^{n-1} (n-j) C(n+j,2j) C(2j,j)^2 c^j d^(n-1-j)"},
               support_grid, build_trinomial_product});
  r.push_back({{"EQ-4.2", StatementKind::Identity, ClaimGroup::Identity, "(j, m)",
                "sum_{k=j}^{m-1} (-1)^(m-1-k) (2k+1) C(k+j,2j) = (m-j) C(m+j,2j), 0 <= j < m"},
               triangle_range, build_alternating_partial});
  r.push_back({{"LEM-4.2", StatementKind::Divisibility, ClaimGroup::Lemma, "(n, k)",
                "n(n+1)(n+2)/gcd(2,n) divides (n+k+1) C(n+k,k) C(n+1,k+1) C(2k,k+1), 1 <= k <= n"},
               support_n, build_lcm_divisibility});
  r.push_back({{"LEM-4.3", StatementKind::Congruence, ClaimGroup::Lemma, "(n)", "6 C(2n,n) = 0 (mod n+2)"},
               [](bool deep) { return n_range(deep ? 2000 : 500); }, build_central_binomial_mod});
  r.push_back({{"LEM-4.4.a", StatementKind::Identity, ClaimGroup::Lemma, "(n, k)",
                "w(n,k) = sum_{j=1}^k C(n-j,k-j) N(n,j), n >= k >= 1"},
               support_n, build_w_from_narayana});
  r.push_back({{"LEM-4.4.b", StatementKind::Identity, ClaimGroup::Lemma, "(n, k)",
                "N(n,k) = sum_{j=1}^k C(n-j,k-j) (-1)^(k-j) w(n,j), n >= k >= 1"},
               support_n, build_narayana_from_w});
  r.push_back({{"EQ-4.10", StatementKind::Identity, ClaimGroup::Identity, "(delta, j, m)",
                "sum_{k=j+1}^m k^(2 delta) (k-j) C(k+j,2j) = (m(m+1))^delta / 2 (m-j)(m+j+1)/(j+delta+1) C(m+j,2j)"},
               triangle_range, build_power_partial});
  r.push_back({{"EQ-4.11", StatementKind::Identity, ClaimGroup::Identity, "(b, c, delta, n)",
                "sum_{k=1}^n k^(2 delta+1) T_k(b,c) T_{k-1}(b,c) d^(n-k) = b/2 (n(n+1))^(delta+1) "
                "sum_{j=0}^{n-1} C(n-1,j) C(n+j+1,j) C(2j,j)/(j+delta+1) c^j d^(n-1-j)"},
               support_grid, build_power_trinomial_sum});
  r.push_back({{"EQ-4.12", StatementKind::Identity, ClaimGroup::Identity, "(j, m)",
                "sum_{k=j}^m (2k+1) C(k+j,2j) = (m+1)(m+j+1)/(j+1) C(m+j,2j), 0 <= j <= m"},
               triangle_range, build_odd_partial});
}

}  // namespace detail

}  // namespace mtc
