// Polynomial identities in Z[x] for the Schröder polynomials s_n(x), S_n(x)
// and the w_n(x) family.

#include "claim_impl.hpp"

#include "mtc/families.hpp"

namespace mtc {

using detail::check_equal;
using detail::params;
using detail::PointResult;
using detail::PreparedClaim;

namespace {

Integer s(std::int64_t v) { return Integer(static_cast<long>(v)); }

using PolyTable = std::shared_ptr<const std::vector<IntPolynomial>>;

// table[k] = f(k) for k = 1..top; index 0 is unused.
template <class F>
PolyTable poly_table(std::uint64_t top, F f) {
  auto t = std::make_shared<std::vector<IntPolynomial>>(top + 1);
  for (std::uint64_t k = 1; k <= top; ++k) (*t)[k] = f(detail::as_i64(k));
  return t;
}

std::vector<IntPolynomial> xx1_powers(std::uint64_t top) {
  std::vector<IntPolynomial> out(top + 1);
  out[0] = IntPolynomial(Integer(1));
  for (std::uint64_t k = 1; k <= top; ++k) out[k] = out[k - 1] * x_times_x_plus_one();
  return out;
}

void n_points(std::uint64_t n_max, PreparedClaim& pc) {
  for (std::uint64_t n = 1; n <= n_max; ++n) pc.points.push_back(params({{"n", detail::as_i64(n)}}));
}

PreparedClaim build_large_small(const ParamRange& range) {
  PreparedClaim pc;
  n_points(range.n_max, pc);
  pc.evaluate = [](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i) + 1;
    const IntPolynomial sum_form = big_schroder_poly(n);
    const IntPolynomial binomial_form = big_schroder_poly_binomial_form(n);
    if (sum_form != binomial_form) {
      PointResult r = check_equal(binomial_form, sum_form);
      r.detail = "the two forms of S_n(x) differ: " + r.detail;
      return r;
    }
    return check_equal(sum_form, IntPolynomial(std::vector<Integer>{1, 1}) * s_poly(n));
  };
  return pc;
}

PreparedClaim build_square_expansion(const ParamRange& range) {
  auto sp = poly_table(range.n_max, [](std::int64_t k) { return s_poly(k); });
  auto xx1 = std::make_shared<const std::vector<IntPolynomial>>(xx1_powers(range.n_max));
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max);
  PreparedClaim pc;
  n_points(range.n_max, pc);
  pc.evaluate = [sp, xx1, binom](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i) + 1;
    const BinomialTable& C = *binom;
    IntPolynomial rhs;
    for (std::int64_t k = 1; k <= n; ++k) rhs += (C(n + k, 2 * k) * C(2 * k, k) * C(2 * k, k + 1)) * (*xx1)[k - 1];
    const IntPolynomial& sn = (*sp)[n];
    return check_equal(s(n * (n + 1)) * (sn * sn), rhs);
  };
  return pc;
}

PreparedClaim build_w_equals_s(const ParamRange& range) {
  PreparedClaim pc;
  n_points(range.n_max, pc);
  pc.evaluate = [](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i) + 1;
    return check_equal(w_poly(n), s_poly(n));
  };
  return pc;
}

PreparedClaim build_w_alternating(const ParamRange& range) {
  auto wp = poly_table(range.n_max + 1, [](std::int64_t k) { return w_poly(k); });
  // alt[n] = sum_{k=1}^n k(k+1)(2k+1)(-1)^(n-k) w_k^2
  auto alt = std::make_shared<std::vector<IntPolynomial>>(range.n_max + 1);
  for (std::uint64_t n = 1; n <= range.n_max; ++n) {
    const auto k = detail::as_i64(n);
    (*alt)[n] = s(k * (k + 1) * (2 * k + 1)) * ((*wp)[n] * (*wp)[n]) - (*alt)[n - 1];
  }
  PreparedClaim pc;
  n_points(range.n_max, pc);
  pc.evaluate = [wp, alt](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i) + 1;
    const IntPolynomial two_x_plus_one(std::vector<Integer>{1, 2});
    return check_equal(two_x_plus_one * (*alt)[n], s(n * (n + 1) * (n + 2)) * ((*wp)[n] * (*wp)[n + 1]));
  };
  return pc;
}

// (n+3) w_{n+2+o} = (2x+1)(2n+3) w_{n+1+o} - n w_{n+o} for index offset o.
bool recurrence_holds(const std::vector<IntPolynomial>& w, std::int64_t n, std::int64_t o, IntPolynomial* lhs_out,
                      IntPolynomial* rhs_out) {
  const IntPolynomial two_x_plus_one(std::vector<Integer>{1, 2});
  IntPolynomial lhs = s(n + 3) * w[n + 2 + o];
  IntPolynomial rhs = s(2 * n + 3) * (two_x_plus_one * w[n + 1 + o]) - s(n) * w[n + o];
  const bool ok = lhs == rhs;
  if (lhs_out) *lhs_out = std::move(lhs);
  if (rhs_out) *rhs_out = std::move(rhs);
  return ok;
}

PreparedClaim build_w_recurrence(const ParamRange& range) {
  auto wp = poly_table(range.n_max + 3, [](std::int64_t k) { return w_poly(k); });
  // Determine which index alignment satisfies the recurrence on the whole range.
  std::int64_t offset = 0;
  std::vector<std::int64_t> holding;
  for (std::int64_t o : {-1, 0, 1}) {
    bool all = range.n_max >= 2;
    for (std::int64_t n = 2; all && n <= detail::as_i64(range.n_max); ++n) all = recurrence_holds(*wp, n, o, nullptr, nullptr);
    if (all) holding.push_back(o);
  }
  PreparedClaim pc;
  if (holding.empty()) {
    pc.notes.push_back("no index offset in {-1, 0, 1} satisfies the recurrence; checking the printed alignment");
  } else {
    offset = holding.front();
    std::string list;
    for (auto o : holding) list += (list.empty() ? "" : ", ") + std::to_string(o);
    pc.notes.push_back("index offset " + std::to_string(offset) + " (offsets holding over the range: " + list + ")");
  }
  const std::int64_t first = offset < 0 ? 1 - offset : 1;
  for (std::int64_t n = first; n <= detail::as_i64(range.n_max); ++n) pc.points.push_back(params({{"n", n}}));
  pc.evaluate = [wp, offset, first](std::size_t i) {
    const std::int64_t n = static_cast<std::int64_t>(i) + first;
    IntPolynomial lhs, rhs;
    if (recurrence_holds(*wp, n, offset, &lhs, &rhs)) return PointResult::pass();
    return check_equal(lhs, rhs);
  };
  return pc;
}

PreparedClaim build_weighted_square_sum(const ParamRange& range) {
  auto sp = poly_table(range.n_max, [](std::int64_t k) { return s_poly(k); });
  auto sums = std::make_shared<std::vector<IntPolynomial>>(range.n_max + 1);
  for (std::uint64_t n = 1; n <= range.n_max; ++n) {
    const auto k = detail::as_i64(n);
    (*sums)[n] = (*sums)[n - 1] + s(k * (k + 1) * (2 * k + 1)) * ((*sp)[n] * (*sp)[n]);
  }
  auto xx1 = std::make_shared<const std::vector<IntPolynomial>>(xx1_powers(range.n_max));
  auto binom = std::make_shared<BinomialTable>(2 * range.n_max + 1);
  PreparedClaim pc;
  n_points(range.n_max, pc);
  pc.evaluate = [sums, xx1, binom](std::size_t i) {
    const auto n = static_cast<std::int64_t>(i) + 1;
    const BinomialTable& C = *binom;
    IntPolynomial rhs;
    for (std::int64_t k = 1; k <= n; ++k)
      rhs += (s(n + k + 1) * C(n + 1, k + 1) * C(n + k, k) * C(2 * k, k + 1)) * (*xx1)[k - 1];
    return check_equal((*sums)[n], rhs);
  };
  return pc;
}

ParamRange poly_n(bool deep) { return detail::n_range(deep ? 100 : detail::kPolynomialN); }

}  // namespace

namespace detail {

void register_polynomial_claims(Registry& r) {
  r.push_back({{"ID-2.3", StatementKind::PolynomialIdentity, ClaimGroup::Identity, "(n)",
                "S_n(x) = (x+1) s_n(x), with sum_k C(n,k) C(n+k,k) x^k/(k+1) = sum_k C(n+k,2k) C_k x^k"},
               poly_n, build_large_small});
  r.push_back({{"LEM-2.1.a", StatementKind::PolynomialIdentity, ClaimGroup::Lemma, "(n)",
                "n(n+1) s_n(x)^2 = sum_{k=1}^n C(n+k,2k) C(2k,k) C(2k,k+1) (x(x+1))^(k-1)"},
               poly_n, build_square_expansion});
  r.push_back({{"LEM-4.5", StatementKind::PolynomialIdentity, ClaimGroup::Lemma, "(n)", "w_n(x) = s_n(x)"}, poly_n,
               build_w_equals_s});
  r.push_back({{"LEM-4.6", StatementKind::PolynomialIdentity, ClaimGroup::Lemma, "(n)",
                "(2x+1) sum_{k=1}^n k(k+1)(2k+1)(-1)^(n-k) w_k(x)^2 = n(n+1)(n+2) w_n(x) w_{n+1}(x)"},
               poly_n, build_w_alternating});
  r.push_back({{"REC-w", StatementKind::PolynomialIdentity, ClaimGroup::Identity, "(n)",
                "(n+3) w_{n+2}(x) = (2x+1)(2n+3) w_{n+1}(x) - n w_n(x)"},
               poly_n, build_w_recurrence});
  r.push_back({{"EQ-4.13", StatementKind::PolynomialIdentity, ClaimGroup::Identity, "(n)",
                "sum_{k=1}^n k(k+1)(2k+1) s_k(x)^2 = sum_{k=1}^n (n+k+1) C(n+1,k+1) C(n+k,k) C(2k,k+1) "
                "(x(x+1))^(k-1)"},
               poly_n, build_weighted_square_sum});
}

}  // namespace detail

}  // namespace mtc
