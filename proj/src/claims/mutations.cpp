// Mutated fixtures: each perturbs one coefficient of a verified claim and must
// produce a counterexample, showing the verifier is not vacuously true.

#include "claim_impl.hpp"

namespace mtc::detail {

namespace {

Integer u(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

ParamRange mutation_n(bool) { return n_range(25); }

}  // namespace

void register_mutation_claims(Registry& r) {
  r.push_back({{"MUT-THM-1.1.i", StatementKind::Integrality, ClaimGroup::Mutation, "(n)",
                "(2/n) sum_{k=1}^n (2k+2) M_k^2 is an integer (weight 2k+1 replaced by 2k+2)"},
               mutation_n,
               [](const ParamRange& range) { return build_s_integrality(range, [](std::uint64_t k) { return u(2 * k + 2); }); }});
  r.push_back({{"MUT-THM-1.2", StatementKind::Divisibility, ClaimGroup::Mutation, "(n)",
                "n^2(n^2-1)/6 divides sum_{k=0}^{n-1} k(k+1)(8k+10) T_k T_{k+1} (8k+9 replaced by 8k+10)"},
               mutation_n,
               [](const ParamRange& range) {
                 return build_t_divisibility(range, [](std::uint64_t k) { return u(k * (k + 1) * (8 * k + 10)); });
               }});
  r.push_back({{"MUT-ID-1.8", StatementKind::Identity, ClaimGroup::Mutation, "(n)",
                "sum_{k=0}^{n-1} (k+1)(k+2)(2k+4) M_k^2 3^(n-1-k) = n(n+1)(n+2) M_n M_{n-1} (2k+3 replaced by 2k+4)"},
               mutation_n,
               [](const ParamRange& range) {
                 return build_motzkin_cubic_identity(range,
                                                     [](std::uint64_t k) { return u((k + 1) * (k + 2) * (2 * k + 4)); });
               }});
  r.push_back({{"MUT-LEM-2.3", StatementKind::PolynomialDivisibility, ClaimGroup::Mutation, "(a, b, n)",
                "[n]_q divides sum_{k=0}^{n-1} [n+1,k]_q^a [n+k,k]_q^b [2k,k]_q [k+3]_q (-[3]_q)^(n-1-k) "
                "([k+2]_q replaced by [k+3]_q)"},
               [](bool) {
                 ParamRange range = n_range(25);
                 range.qexp_a_max = 1;
                 range.qexp_b_max = 1;
                 return range;
               },
               [](const ParamRange& range) { return build_q_divisibility(range, 3); }});
}

}  // namespace mtc::detail
