// Runs every applicable certificate on one tensor and aggregates the bounds.
#pragma once

#include <brlb/certificates/algebra111.hpp>
#include <brlb/certificates/obstruction.hpp>
#include <brlb/certificates/strassen.hpp>
#include <brlb/errors.hpp>
#include <brlb/koszul/koszul.hpp>
#include <brlb/tensor/tensor.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace brlb {

struct BatteryOptions {
  std::uint64_t seed = 0;
  std::set<ObstructionKind> methods;  // empty: all
  std::size_t p_max = 3;
  std::size_t strassen_samples = kDefaultStrassenSamples;
  std::size_t commutator_samples = kDefaultCommutatorSamples;
  std::size_t genericity_trials = kDefaultGenericityTrials;
  std::size_t koszul_retries = 3;

  bool wants(ObstructionKind k) const { return methods.empty() || methods.count(k) > 0; }
};

template <typename S>
struct BatteryReport {
  Dims dims{};
  std::string field;
  std::uint64_t seed = 0;
  Conciseness conciseness;
  std::array<Genericity<S>, 3> genericity;
  std::vector<Obstruction> obstructions;
  std::vector<KoszulBound> koszul;
  std::optional<SymmetryDims> symmetry;
  std::optional<std::size_t> algebra_dim;
  bool minimal_obstruction_failed = false;
  std::size_t aggregate_lower_bound = 0;

  const Obstruction* find(ObstructionKind k) const {
    for (const auto& o : obstructions) {
      if (o.name == k) return &o;
    }
    return nullptr;
  }
};

namespace detail {
template <typename F>
Obstruction timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Obstruction ob = f();
  ob.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return ob;
}
}  // namespace detail

/// Conciseness, genericity, Strassen, commutator, End-closed, 111 (triple and
/// two-factor), symmetry dimensions, 111-algebra abundance and a Koszul sweep
/// over every side and every p with 2p+1 <= dim and p <= p_max. The aggregate
/// lower bound is the max of the conciseness bound and every certified bound;
/// any failed minimal-border-rank obstruction certifies m + 1.
template <typename S>
BatteryReport<S> minimal_br_battery(const Tensor3<S>& t, const BatteryOptions& opt = {}) {
  BatteryReport<S> rep;
  rep.dims = t.dims();
  rep.field = scalar_traits<S>::field_tag();
  rep.seed = opt.seed;

  // Seeds are forked in a fixed order so that selecting a subset of methods
  // does not change the witnesses of the others.
  SeededRng rng(opt.seed);
  std::array<std::uint64_t, 3> gen_seed{};
  for (auto& s : gen_seed) s = rng.fork();
  const std::uint64_t strassen_seed = rng.fork(), commutator_seed = rng.fork(), end_seed = rng.fork(), koszul_seed = rng.fork();

  rep.conciseness = is_concise(t);
  for (int f = 0; f < 3; ++f) rep.genericity[f] = genericity_rank(t, static_cast<Factor>(f), opt.genericity_trials, gen_seed[f]);

  const bool square_bc = t.b() == t.c();
  const bool cubic = t.is_cubic();
  const bool concise_cubic = cubic && rep.conciseness.concise;

  auto inapplicable = [&](ObstructionKind k, const char* reason) {
    Obstruction ob;
    ob.name = k;
    ob.verdict = Verdict::INAPPLICABLE;
    ob.field = rep.field;
    ob.witness["reason"] = reason;
    return ob;
  };

  if (opt.wants(ObstructionKind::STRASSEN)) {
    rep.obstructions.push_back(square_bc ? detail::timed([&] { return strassen_test(t, Factor::A, strassen_seed, opt.strassen_samples); })
                                         : inapplicable(ObstructionKind::STRASSEN, "requires b = c"));
  }
  if (opt.wants(ObstructionKind::COMMUTATOR)) {
    rep.obstructions.push_back(square_bc ? detail::timed([&] { return commutator_bound(t, commutator_seed, opt.commutator_samples); })
                                         : inapplicable(ObstructionKind::COMMUTATOR, "requires b = c"));
  }
  if (opt.wants(ObstructionKind::END_CLOSED)) {
    rep.obstructions.push_back(square_bc ? detail::timed([&] { return end_closed_test(t, end_seed); })
                                         : inapplicable(ObstructionKind::END_CLOSED, "requires b = c"));
  }
  if (opt.wants(ObstructionKind::T111_TRIPLE)) rep.obstructions.push_back(detail::timed([&] { return test_111_minimal(t); }));
  if (opt.wants(ObstructionKind::T111_TWOFACTOR)) rep.obstructions.push_back(detail::timed([&] { return test_111_twofactor(t); }));
  if (opt.wants(ObstructionKind::SYMLIE)) {
    rep.obstructions.push_back(detail::timed([&] {
      rep.symmetry = symmetry_lie_dims(t);
      return rep.symmetry->obstruction;
    }));
  }
  if (opt.wants(ObstructionKind::ALG111_ABUNDANCE)) {
    rep.obstructions.push_back(detail::timed([&] {
      const auto alg = compute_111_algebra(t);
      if (alg.abundance.verdict != Verdict::INAPPLICABLE || rep.conciseness.concise) {
        rep.algebra_dim = alg.dim();
        if (!alg.structure_ok()) throw ConsistencyError("111-algebra of a concise tensor lacks its guaranteed structure");
      }
      return alg.abundance;
    }));
  }
  if (opt.wants(ObstructionKind::KOSZUL)) {
    rep.obstructions.push_back(detail::timed([&] {
      Obstruction ob;
      ob.name = ObstructionKind::KOSZUL;
      ob.field = rep.field;
      ob.seed = koszul_seed;
      SeededRng krng(koszul_seed);
      std::size_t best = 0;
      for (int f = 0; f < 3; ++f) {
        for (std::size_t p = 0; p <= opt.p_max && 2 * p + 1 <= t.dims()[f]; ++p) {
          auto kb = koszul_bound(t, p, static_cast<Factor>(f), krng.fork(), opt.koszul_retries);
          if (kb.bound > best) {
            best = kb.bound;
            ob.witness["best_side"] = factor_name(kb.side);
            ob.witness["best_p"] = std::to_string(kb.p);
            ob.witness["best_rank"] = std::to_string(kb.rank);
          }
          rep.koszul.push_back(kb);
        }
      }
      ob.payload = static_cast<long long>(best);
      ob.lower_bound = best;
      if (cubic) {
        ob.verdict = best > t.a() ? Verdict::FAIL : Verdict::PASS;
      } else {
        ob.verdict = Verdict::INAPPLICABLE;
        ob.witness["reason"] = "bound reported; minimality verdict needs an m x m x m tensor";
      }
      return ob;
    }));
  }

  std::size_t agg = *std::max_element(rep.conciseness.slice_dims.begin(), rep.conciseness.slice_dims.end());
  for (const auto& ob : rep.obstructions) {
    if (ob.failed()) rep.minimal_obstruction_failed = true;
    if (ob.lower_bound) agg = std::max(agg, *ob.lower_bound);
  }
  if (rep.minimal_obstruction_failed && concise_cubic) agg = std::max(agg, t.a() + 1);
  rep.aggregate_lower_bound = agg;
  return rep;
}

}  // namespace brlb
