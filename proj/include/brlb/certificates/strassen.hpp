// Strassen's equations, the commutator-rank bound, and the End-closed condition.
// All three look at the slice space T(A*) in B (x) C with b = c = m.
#pragma once

#include <brlb/certificates/obstruction.hpp>
#include <brlb/linalg/linalg.hpp>
#include <brlb/linalg/random.hpp>
#include <brlb/tensor/tensor.hpp>

#include <string>
#include <vector>

namespace brlb {

inline constexpr std::size_t kDefaultGenericityTrials = 8;
inline constexpr std::size_t kDefaultStrassenSamples = 50;
inline constexpr std::size_t kDefaultCommutatorSamples = 6;

namespace detail {

template <typename S>
std::vector<Matrix<S>> basis_slices(const Tensor3<S>& t) {
  std::vector<Matrix<S>> out;
  for (std::size_t i = 0; i < t.a(); ++i) {
    std::vector<S> e(t.a(), from_int<S>(0));
    e[i] = from_int<S>(1);
    out.push_back(contract_A(t, e));
  }
  return out;
}

template <typename S>
Matrix<S> strassen_residual(const Matrix<S>& x, const Matrix<S>& adj_y, const Matrix<S>& z) {
  return x * adj_y * z - z * adj_y * x;
}

template <typename S>
std::vector<S> flatten(const Matrix<S>& m) {
  return m.data();
}

}  // namespace detail

/// Strassen's equations X adj(Y) Z - Z adj(Y) X = 0 on T(side*), checked on
/// every triple of basis slices and on `samples` random triples. When a
/// full-rank slice X0 is found the equivalent commutativity of T(A*) X0^{-1}
/// is checked as well and both results are recorded.
template <typename S>
Obstruction strassen_test(const Tensor3<S>& tensor, Factor side, std::uint64_t seed,
                          std::size_t samples = kDefaultStrassenSamples) {
  const auto t = permute_factors(tensor, move_to_front(side));
  if (t.b() != t.c()) throw std::invalid_argument("strassen_test: the two other factors must have equal dimension");
  Obstruction ob;
  ob.name = ObstructionKind::STRASSEN;
  ob.field = scalar_traits<S>::field_tag();
  ob.seed = seed;
  ob.witness["side"] = factor_name(side);
  SeededRng rng(seed);

  const auto slices = detail::basis_slices(t);
  std::vector<Matrix<S>> adjs;
  for (const auto& y : slices) adjs.push_back(adjugate(y));

  bool poly_pass = true;
  std::size_t max_residual_rank = 0, triples = 0;
  auto record = [&](const Matrix<S>& res, const std::string& where) {
    ++triples;
    if (res.is_zero()) return;
    const auto r = rank(res);
    if (poly_pass) ob.witness["first_violation"] = where;
    poly_pass = false;
    max_residual_rank = std::max(max_residual_rank, r);
  };
  // The residual is antisymmetric in (X, Z), so x < z suffices.
  for (std::size_t y = 0; y < slices.size(); ++y)
    for (std::size_t x = 0; x < slices.size(); ++x)
      for (std::size_t z = x + 1; z < slices.size(); ++z)
        record(detail::strassen_residual(slices[x], adjs[y], slices[z]),
               "basis(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = contract_A(t, rng.vector<S>(t.a()));
    const auto y = contract_A(t, rng.vector<S>(t.a()));
    const auto z = contract_A(t, rng.vector<S>(t.a()));
    record(detail::strassen_residual(x, adjugate(y), z), "sample " + std::to_string(s));
  }

  const auto gen = genericity_rank(t, Factor::A, kDefaultGenericityTrials, rng.fork());
  ob.witness["max_slice_rank"] = std::to_string(gen.max_rank);
  bool comm_pass = true;
  if (gen.generic) {
    const auto x0inv = inverse(contract_A(t, gen.witness));
    std::vector<Matrix<S>> normalized;
    for (const auto& x : slices) normalized.push_back(x * x0inv);
    for (std::size_t i = 0; i < normalized.size() && comm_pass; ++i)
      for (std::size_t j = i + 1; j < normalized.size() && comm_pass; ++j)
        comm_pass = normalized[i] * normalized[j] == normalized[j] * normalized[i];
    ob.witness["commutativity"] = comm_pass ? "commuting" : "non-commuting";
  } else {
    ob.witness["commutativity"] = "not 1-generic; polynomial form only";
  }
  if (gen.generic && comm_pass != poly_pass) ob.witness["forms_disagree"] = "true";
  ob.witness["triples_checked"] = std::to_string(triples);
  ob.verdict = poly_pass && comm_pass ? Verdict::PASS : Verdict::FAIL;
  ob.payload = static_cast<long long>(max_residual_rank);
  if (ob.failed()) ob.lower_bound = t.c() + 1;
  return ob;
}

/// Strassen's refinement: for a full-rank slice X0 and slices X1, X2 from a
/// three-dimensional subspace of A*, the border rank is at least
/// m + rank[X1 X0^{-1}, X2 X0^{-1}] / 2. Returns m + ceil(max rank / 2) over
/// sampled pairs, or INAPPLICABLE when no full-rank slice is found.
template <typename S>
Obstruction commutator_bound(const Tensor3<S>& tensor, std::uint64_t seed, std::size_t samples = kDefaultCommutatorSamples,
                             Factor side = Factor::A) {
  const auto t = permute_factors(tensor, move_to_front(side));
  if (t.b() != t.c()) throw std::invalid_argument("commutator_bound: the two other factors must have equal dimension");
  Obstruction ob;
  ob.name = ObstructionKind::COMMUTATOR;
  ob.field = scalar_traits<S>::field_tag();
  ob.seed = seed;
  ob.witness["side"] = factor_name(side);
  SeededRng rng(seed);
  const std::size_t m = t.c();
  const auto gen = genericity_rank(t, Factor::A, kDefaultGenericityTrials, rng.fork());
  if (!gen.generic) {
    ob.verdict = Verdict::INAPPLICABLE;
    ob.witness["reason"] = "no full-rank slice found";
    return ob;
  }
  const auto x0inv = inverse(contract_A(t, gen.witness));
  std::size_t best = 0;
  for (std::size_t s = 0; s < std::max<std::size_t>(samples, 1); ++s) {
    const auto x1 = contract_A(t, rng.vector<S>(t.a()));
    const auto x2 = contract_A(t, rng.vector<S>(t.a()));
    // rank [X1 X0^-1, X2 X0^-1] = rank(X1 X0^-1 X2 - X2 X0^-1 X1)
    best = std::max(best, rank(x1 * x0inv * x2 - x2 * x0inv * x1));
  }
  const std::size_t bound = m + (best + 1) / 2;
  ob.payload = static_cast<long long>(bound);
  ob.lower_bound = bound;
  ob.witness["max_commutator_rank"] = std::to_string(best);
  ob.verdict = bound > m ? Verdict::FAIL : Verdict::PASS;
  return ob;
}

/// End-closed condition: with alpha1 of maximal sampled slice rank, every
/// product T(a') adj(T(alpha1)) T(a'') over basis covectors must lie in
/// T(A*). This is the vanishing of the wedge with T(alpha_1..alpha_m) when
/// those slices are independent; for a != m or dim T(A*) < m the condition is
/// vacuous and the result is INAPPLICABLE.
template <typename S>
Obstruction end_closed_test(const Tensor3<S>& tensor, std::uint64_t seed, Factor side = Factor::A) {
  const auto t = permute_factors(tensor, move_to_front(side));
  Obstruction ob;
  ob.name = ObstructionKind::END_CLOSED;
  ob.field = scalar_traits<S>::field_tag();
  ob.seed = seed;
  ob.witness["side"] = factor_name(side);
  if (t.b() != t.c()) throw std::invalid_argument("end_closed_test: the two other factors must have equal dimension");
  const std::size_t m = t.c();
  const auto span = slice_space(t, Factor::A);
  if (t.a() != m || span.dim() != m) {
    ob.verdict = Verdict::INAPPLICABLE;
    ob.witness["reason"] = "requires a = m and dim T(A*) = m";
    return ob;
  }
  SeededRng rng(seed);
  const auto gen = genericity_rank(t, Factor::A, kDefaultGenericityTrials, rng.fork());
  const auto adj1 = adjugate(contract_A(t, gen.witness));
  ob.witness["max_slice_rank"] = std::to_string(gen.max_rank);
  const auto slices = detail::basis_slices(t);
  long long outside = 0;
  for (std::size_t i = 0; i < slices.size(); ++i)
    for (std::size_t j = 0; j < slices.size(); ++j) {
      if (span.contains(detail::flatten(slices[i] * adj1 * slices[j]))) continue;
      if (outside == 0) ob.witness["first_violation"] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      ++outside;
    }
  ob.payload = outside;
  ob.verdict = outside == 0 ? Verdict::PASS : Verdict::FAIL;
  if (ob.failed()) ob.lower_bound = m + 1;
  return ob;
}

}  // namespace brlb
