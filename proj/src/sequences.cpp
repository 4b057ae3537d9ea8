#include "mtc/sequences.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace mtc {

namespace {

void mul_ui(Integer& x, unsigned long v) { mpz_mul_ui(x.get_mpz_t(), x.get_mpz_t(), v); }
void divexact_ui(Integer& x, unsigned long v) { mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), v); }

std::vector<Integer> powers(std::int64_t base, std::size_t count) {
  std::vector<Integer> out(count + 1);
  out[0] = 1;
  for (std::size_t i = 1; i <= count; ++i) out[i] = out[i - 1] * base;
  return out;
}

// Shared body of T_n(b,c) and M_n(b,c): sum_k C(n,2k) C(2k,k) weight(k) b^(n-2k) c^k.
template <bool CatalanWeight>
Integer trinomial_sum(std::uint64_t n, TrinomialParams p) {
  const auto bp = powers(p.b(), n);
  const auto cp = powers(p.c(), n / 2);
  Integer binom_n_2k = 1;  // C(n, 2k)
  Integer central = 1;     // C(2k, k) or C_k
  Integer sum = 0;
  for (std::uint64_t k = 0; 2 * k <= n; ++k) {
    sum += binom_n_2k * central * bp[n - 2 * k] * cp[k];
    if (2 * k + 2 > n) break;
    mul_ui(binom_n_2k, (n - 2 * k) * (n - 2 * k - 1));
    divexact_ui(binom_n_2k, (2 * k + 1) * (2 * k + 2));
    if constexpr (CatalanWeight) {
      mul_ui(central, 2 * (2 * k + 1));
      divexact_ui(central, k + 2);
    } else {
      mul_ui(central, 2 * (2 * k + 1));
      divexact_ui(central, k + 1);
    }
  }
  return sum;
}

std::size_t approx_bytes(const std::vector<Integer>& v) {
  std::size_t bytes = v.size() * sizeof(Integer);
  for (const auto& x : v) bytes += mpz_size(x.get_mpz_t()) * sizeof(mp_limb_t);
  return bytes;
}

std::size_t cache_limit_bytes() {
  static const std::size_t limit = [] {
    const char* env = std::getenv("MTC_CACHE_MAX_MB");
    if (env == nullptr || *env == '\0') return static_cast<std::size_t>(-1);
    char* end = nullptr;
    const unsigned long long mb = std::strtoull(env, &end, 10);
    if (end == env) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(mb) * 1024 * 1024;
  }();
  return limit;
}

bool is_generalized(Sequence s) { return s == Sequence::GenTrinomial || s == Sequence::GenMotzkin; }

Integer element(Sequence s, std::size_t n, TrinomialParams p) {
  switch (s) {
    case Sequence::Motzkin: return motzkin(n);
    case Sequence::CentralTrinomial: return central_trinomial(n);
    case Sequence::GenTrinomial: return gen_trinomial(n, p);
    case Sequence::GenMotzkin: return gen_motzkin(n, p);
    case Sequence::Delannoy: return delannoy(n);
    case Sequence::SchroderLittle: return n == 0 ? Integer(0) : schroder_little(static_cast<std::int64_t>(n));
    case Sequence::SchroderLarge: return schroder_large(n);
    case Sequence::Catalan: return catalan(n);
    case Sequence::MotzkinAnalogW: return motzkin_analog_W(n);
  }
  throw std::logic_error("unknown sequence");
}

struct SequenceCache {
  using Key = std::tuple<int, std::int64_t, std::int64_t>;
  std::mutex mutex;
  std::map<Key, std::shared_ptr<const std::vector<Integer>>> tables;
  std::size_t bytes = 0;
};

SequenceCache& cache() {
  static SequenceCache instance;
  return instance;
}

}  // namespace

Integer binomial(const Integer& n, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("binomial: lower index must be non-negative");
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Integer binomial(std::int64_t n, std::int64_t k) { return binomial(Integer(static_cast<long>(n)), k); }

Integer factorial(std::uint64_t n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer catalan(std::uint64_t k) {
  return exact_quotient(binomial(static_cast<std::int64_t>(2 * k), static_cast<std::int64_t>(k)), Integer(k + 1));
}

Integer narayana(std::int64_t m, std::int64_t k) {
  if (k < 1 || m < k) throw std::invalid_argument("narayana: requires m >= k >= 1");
  return exact_quotient(binomial(m, k) * binomial(m, k - 1), Integer(static_cast<long>(m)));
}

Integer motzkin(std::uint64_t n) { return trinomial_sum<true>(n, {1, 1}); }

Integer central_trinomial(std::uint64_t n) { return trinomial_sum<false>(n, {1, 1}); }

Integer gen_trinomial(std::uint64_t n, TrinomialParams p) { return trinomial_sum<false>(n, p); }

Integer gen_motzkin(std::uint64_t n, TrinomialParams p) { return trinomial_sum<true>(n, p); }

Integer delannoy(std::uint64_t n) {
  Integer binom_n_k = 1;    // C(n, k)
  Integer binom_nk_k = 1;   // C(n+k, k)
  Integer sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    sum += binom_n_k * binom_nk_k;
    mul_ui(binom_n_k, n - k);
    divexact_ui(binom_n_k, k + 1);
    mul_ui(binom_nk_k, n + k + 1);
    divexact_ui(binom_nk_k, k + 1);
  }
  return sum;
}

Integer schroder_little(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("schroder_little: index starts at 1");
  const auto un = static_cast<std::uint64_t>(n);
  const auto two = powers(2, un);
  Integer binom_k = un;  // C(n, k) at k = 1
  Integer binom_km1 = 1; // C(n, k-1) at k = 1
  Integer sum = 0;
  for (std::uint64_t k = 1; k <= un; ++k) {
    sum += exact_quotient(binom_k * binom_km1, Integer(un)) * two[un - k];
    binom_km1 = binom_k;
    mul_ui(binom_k, un - k);
    divexact_ui(binom_k, k + 1);
  }
  return sum;
}

Integer schroder_large(std::uint64_t n) {
  Integer binom = 1;  // C(n+k, 2k)
  Integer cat = 1;    // C_k
  Integer sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    sum += binom * cat;
    if (k == n) break;
    mul_ui(binom, (n + k + 1) * (n - k));
    divexact_ui(binom, (2 * k + 1) * (2 * k + 2));
    mul_ui(cat, 2 * (2 * k + 1));
    divexact_ui(cat, k + 2);
  }
  return sum;
}

Integer w_coeff(std::int64_t n, std::int64_t k) {
  if (k < 1 || n < k) throw std::invalid_argument("w_coeff: requires n >= k >= 1");
  return exact_quotient(binomial(n - 1, k - 1) * binomial(n + k, k - 1), Integer(static_cast<long>(k)));
}

Integer motzkin_analog_W(std::uint64_t n) {
  // k = 0 contributes C(n,0) C(0,0) / (-1) = -1; for k >= 1 the weight is 2 C_{k-1}.
  Integer sum = -1;
  Integer binom = 1;  // C(n, 2k)
  Integer cat = 1;    // C_{k-1}
  for (std::uint64_t k = 1; 2 * k <= n; ++k) {
    mul_ui(binom, (n - 2 * k + 2) * (n - 2 * k + 1));
    divexact_ui(binom, (2 * k - 1) * (2 * k));
    if (k >= 2) {
      mul_ui(cat, 2 * (2 * k - 3));
      divexact_ui(cat, k);
    }
    sum += 2 * binom * cat;
  }
  return sum;
}

std::string to_string(Sequence s) {
  switch (s) {
    case Sequence::Motzkin: return "motzkin";
    case Sequence::CentralTrinomial: return "trinomial";
    case Sequence::GenTrinomial: return "gen-trinomial";
    case Sequence::GenMotzkin: return "gen-motzkin";
    case Sequence::Delannoy: return "delannoy";
    case Sequence::SchroderLittle: return "schroder-little";
    case Sequence::SchroderLarge: return "schroder-large";
    case Sequence::Catalan: return "catalan";
    case Sequence::MotzkinAnalogW: return "W";
  }
  return "?";
}

std::shared_ptr<const std::vector<Integer>> sequence_table(Sequence s, std::size_t n_max, TrinomialParams p) {
  if (!is_generalized(s)) p = TrinomialParams{0, 0};
  const SequenceCache::Key key{static_cast<int>(s), p.b(), p.c()};
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.tables.find(key); it != c.tables.end() && it->second->size() > n_max) return it->second;
  }
  auto table = std::make_shared<std::vector<Integer>>();
  table->reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) table->push_back(element(s, n, p));

  std::shared_ptr<const std::vector<Integer>> result = std::move(table);
  const std::size_t bytes = approx_bytes(*result);
  std::lock_guard lock(c.mutex);
  auto& slot = c.tables[key];
  if (slot && slot->size() >= result->size()) return slot;
  const std::size_t old_bytes = slot ? approx_bytes(*slot) : 0;
  if (c.bytes - old_bytes + bytes <= cache_limit_bytes()) {
    c.bytes = c.bytes - old_bytes + bytes;
    slot = result;
  } else if (!slot) {
    c.tables.erase(key);
  }
  return result;
}

void clear_sequence_cache() {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  c.tables.clear();
  c.bytes = 0;
}

BinomialTable::BinomialTable(std::size_t n_max) : rows_(n_max + 1) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto& row = rows_[n];
    row.resize(n + 1);
    row[0] = 1;
    row[n] = 1;
    for (std::size_t k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

const Integer& BinomialTable::operator()(std::int64_t n, std::int64_t k) const {
  if (n < 0) throw std::out_of_range("BinomialTable: negative upper index");
  if (static_cast<std::size_t>(n) >= rows_.size()) throw std::out_of_range("BinomialTable: upper index too large");
  if (k < 0 || k > n) return zero_;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace mtc
