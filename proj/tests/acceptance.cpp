// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Expected values are either known results (the 2n^2-n and 3n^2/2 matrix
// multiplication bounds, the small CW border rank m+1, the W-state and big CW
// relabelings, dim g = 2m for the unit tensor) or computed here independently.

#include "oracles.hpp"

#include <brlb/io/json_io.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>

using namespace brlb;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << "s";
  return os.str();
}

Matrix<Fp> swap_matrix(std::size_t n, std::size_t x, std::size_t y) {
  Matrix<Fp> p = Matrix<Fp>::identity(n);
  p(x, x) = p(y, y) = Fp(0);
  p(x, y) = p(y, x) = Fp(1);
  return p;
}

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  const auto k2 = koszul_bound(matmul<Fp>(2, 2, 2), 1, Factor::A, 1);
  const double s2 = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const auto k3 = koszul_bound(matmul<Fp>(3, 3, 3), 2, Factor::A, 1);
  const double s3 = seconds_since(t0);
  // 2n^2 - n
  const bool ok = k2.bound == 6 && s2 < 1.0 && k3.bound >= 15 && s3 < 60.0;
  return {ok, "M<2> p=1: " + std::to_string(k2.bound) + " (" + fmt(s2) + "), M<3> p=2: " + std::to_string(k3.bound) + " (" +
                  fmt(s3) + ")"};
}

Outcome criterion2() {
  const auto c2 = commutator_bound(matmul<Fp>(2, 2, 2), 1);
  const auto c3 = commutator_bound(matmul<Fp>(3, 3, 3), 1);
  // ceil(3 n^2 / 2)
  const bool ok = c2.payload == 6 && c3.payload && *c3.payload >= 14;
  return {ok, "M<2>: " + std::to_string(c2.payload.value_or(-1)) + ", M<3>: " + std::to_string(c3.payload.value_or(-1))};
}

Outcome criterion3(Ledger& ledger) {
  const auto kb = koszul_bound(small_cw<Fp>(2), 1, Factor::A, 1);
  const auto cert = read_certificate(std::string(BRLB_DATA_DIR) + "/small_cw2_r4.cert.json");
  const bool verified = verify_eps_decomposition(small_cw<Rational>(2), cert);
  ledger.add({"zoo:small_cw:2", FactKind::LOWER, kb.bound, "koszul p=1"});
  if (verified) ledger.add({"zoo:small_cw:2", FactKind::UPPER, cert.r(), "eps-certificate h=" + std::to_string(cert.h)});
  const auto lo = ledger.best("zoo:small_cw:2", FactKind::LOWER), hi = ledger.best("zoo:small_cw:2", FactKind::UPPER);
  const bool ok = kb.bound == 4 && verified && cert.r() == 4 && lo == 4u && hi == 4u;
  return {ok, "koszul " + std::to_string(kb.bound) + ", certificate r=" + std::to_string(cert.r()) + " h=" + std::to_string(cert.h) +
                  (verified ? " verified" : " REJECTED") + ", ledger " + std::to_string(lo.value_or(0)) + " <= R <= " +
                  std::to_string(hi.value_or(0))};
}

Outcome criterion4() {
  const auto a = cw_omega_bound(8, 1, 10), b = cw_omega_bound(2, 1, 3);
  // independent evaluation of log_8(4/27 * 1000) in long double
  const long double ref = std::log(4000.0L / 27.0L) / std::log(8.0L);
  const bool formula_ok = std::fabs(a.value() - static_cast<double>(ref)) < 0.00006 && a.value() <= 2.41;
  const bool literal_ok = std::llabs(a.ten_thousandths - 24041) <= 1;
  const bool ok = formula_ok && literal_ok && b.ten_thousandths == 20000;
  std::string detail = "(8,1,10) -> " + a.decimal() + " [reference " + std::to_string(static_cast<double>(ref)).substr(0, 7) +
                       ", published: omega <= 2.41], (2,1,3) -> " + b.decimal();
  if (!literal_ok) detail += "; target 2.4041 +/- 0.0001 is not met: log_8(4000/27) = 2.40363, target appears miscomputed";
  return {ok, detail};
}

Outcome criterion5() {
  std::vector<std::pair<std::string, Tensor3<Fp>>> zoo;
  for (std::size_t m = 1; m <= 6; ++m) zoo.push_back({"unit(" + std::to_string(m) + ")", unit_tensor<Fp>(m)});
  zoo.push_back({"wstate", w_state<Fp>()});
  for (std::size_t q = 1; q <= 4; ++q) zoo.push_back({"big_cw(" + std::to_string(q) + ")", big_cw<Fp>(q)});
  for (std::size_t k = 1; k <= 5; ++k)
    zoo.push_back({"C[x]/(x^" + std::to_string(k) + ")", convert<Fp>(structure_tensor(truncated_polynomial_algebra<Rational>(k)))});
  std::string bad;
  std::size_t applicable = 0;
  for (const auto& [name, t] : zoo) {
    BatteryOptions opt;
    opt.seed = 5;
    const auto rep = minimal_br_battery(t, opt);
    for (const auto& ob : rep.obstructions) {
      if (ob.verdict != Verdict::INAPPLICABLE) ++applicable;
      if (ob.failed()) bad += " " + name + ":" + to_string(ob.name);
    }
    if (rep.aggregate_lower_bound != t.a()) bad += " " + name + ":aggregate=" + std::to_string(rep.aggregate_lower_bound);
  }
  return {bad.empty(), std::to_string(zoo.size()) + " tensors, " + std::to_string(applicable) + " applicable verdicts" +
                           (bad.empty() ? ", no FAIL" : ", FAIL:" + bad)};
}

Outcome criterion6() {
  // seeds 0..499; tensor entries from SeededRng(seed), battery seed = seed
  std::size_t failing = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    SeededRng rng(seed);
    const auto t = Tensor3<Fp>::random({4, 4, 4}, rng);
    BatteryOptions opt;
    opt.seed = seed;
    if (minimal_br_battery(t, opt).minimal_obstruction_failed) ++failing;
  }
  return {failing * 100 >= 95 * 500, std::to_string(failing) + "/500 random 4x4x4 tensors fail an obstruction"};
}

/// Mixture for the implication check; kind = index mod 5.
Tensor3<Fp> implication_sample(std::size_t index, SeededRng& rng) {
  const std::size_t m = 4 + index % 2;
  auto gl = [&](const Tensor3<Fp>& t) {
    return apply_gl(t, random_invertible<Fp>(m, rng), random_invertible<Fp>(m, rng), random_invertible<Fp>(m, rng));
  };
  switch ((index / 2) % 5) {
    case 0:
      return Tensor3<Fp>::random({m, m, m}, rng);
    case 1:  // rank <= m, often below
      return oracle::random_low_rank<Fp>({m, m, m}, 1 + rng.below(m), rng);
    case 2: {  // minimal border rank structure tensors
      const std::size_t which = rng.below(3);
      const auto alg = which == 0 ? truncated_polynomial_algebra<Rational>(m) : which == 1 ? cw_algebra<Rational>(m - 2) : split_algebra<Rational>(m);
      return gl(convert<Fp>(structure_tensor(alg)));
    }
    case 3: {  // m-2 rank-one terms plus a W-state-like tangent: border rank <= m
      auto t = oracle::random_low_rank<Fp>({m, m, m}, m - 2, rng);
      const auto a = rng.vector<Fp>(m), b = rng.vector<Fp>(m);
      t += Tensor3<Fp>::outer(a, a, b) + Tensor3<Fp>::outer(a, b, a) + Tensor3<Fp>::outer(b, a, a);
      return t;
    }
    default: {  // sparse small-integer tensors
      Tensor3<Fp> t(m, m, m);
      for (std::size_t n = 0; n < 2 * m; ++n) t(rng.below(m), rng.below(m), rng.below(m)) = rng.small_scalar<Fp>(-2, 2);
      return t;
    }
  }
}

Outcome criterion7() {
  std::size_t violations = 0, triple_pass = 0;
  BatteryOptions opt;
  opt.methods = {ObstructionKind::T111_TRIPLE, ObstructionKind::STRASSEN, ObstructionKind::END_CLOSED};
  opt.strassen_samples = 10;
  for (std::size_t s = 0; s < 1000; ++s) {
    SeededRng rng(1000 + s);
    const auto t = implication_sample(s, rng);
    opt.seed = s;
    const auto rep = minimal_br_battery(t, opt);
    if (rep.find(ObstructionKind::T111_TRIPLE)->verdict != Verdict::PASS) continue;
    ++triple_pass;
    if (rep.find(ObstructionKind::STRASSEN)->failed() || rep.find(ObstructionKind::END_CLOSED)->failed()) ++violations;
  }
  return {violations == 0 && triple_pass > 0, std::to_string(violations) + " violations among " + std::to_string(triple_pass) +
                                                  " tensors passing T111_TRIPLE (1000 sampled)"};
}

Outcome criterion8() {
  const auto id2 = Matrix<Fp>::identity(2);
  bool ok = apply_gl(convert<Fp>(structure_tensor(truncated_polynomial_algebra<Rational>(2))), id2, id2, swap_matrix(2, 0, 1)) ==
            w_state<Fp>();
  std::string detail = std::string("C[x]/(x^2) -> W-state ") + (ok ? "exact" : "MISMATCH");
  for (std::size_t q = 2; q <= 3; ++q) {
    const auto id = Matrix<Fp>::identity(q + 2);
    const bool m = apply_gl(convert<Fp>(structure_tensor(cw_algebra<Rational>(q))), id, id, swap_matrix(q + 2, 0, q + 1)) == big_cw<Fp>(q);
    ok = ok && m;
    detail += ", A_CW," + std::to_string(q) + " -> T_CW," + std::to_string(q) + (m ? " exact" : " MISMATCH");
  }
  return {ok, detail};
}

Outcome criterion9() {
  std::string detail;
  bool ok = true;
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto s = symmetry_lie_dims(unit_tensor<Rational>(m));
    ok = ok && s.full == 2 * m && s.ab == m && s.ac == m && s.bc == m;
    detail += (m > 1 ? " " : "") + std::string("m=") + std::to_string(m) + ":(" + std::to_string(s.full) + "," + std::to_string(s.ab) +
              "," + std::to_string(s.ac) + "," + std::to_string(s.bc) + ")";
  }
  return {ok, detail};
}

Outcome criterion10(Ledger ledger) {
  ledger.register_kronecker({"zoo:small_cw:2^2", {"zoo:small_cw:2", "zoo:small_cw:2"}});
  ledger = kron_ledger_update(ledger);
  const auto upper = ledger.best("zoo:small_cw:2^2", FactKind::UPPER);
  const auto sq = kronecker_power(small_cw<Fp>(2), 2);
  const auto conc = is_concise(sq);
  std::size_t best = *std::max_element(conc.slice_dims.begin(), conc.slice_dims.end());
  std::string per_p;
  for (std::size_t p = 1; p <= 4; ++p) {
    const auto kb = koszul_bound(sq, p, Factor::A, 10 + p);
    best = std::max(best, kb.bound);
    per_p += (p > 1 ? "," : "") + std::to_string(kb.bound);
  }
  const bool ok = upper == 16u && best >= 9;
  return {ok, "ledger upper " + std::to_string(upper.value_or(0)) + ", lower " + std::to_string(best) + " (koszul p=1..4: " + per_p +
                  "); the true value 16 needs border apolarity and stays open here"};
}

}  // namespace

int main() {
  Ledger ledger;
  std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, [&] { return criterion3(ledger); }}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, [&] { return criterion10(ledger); }}};
  int failures = 0;
  for (const auto& [n, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << " [" << fmt(seconds_since(t0)) << "]"
              << std::endl;
  }
  std::cout << (10 - failures) << "/10 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
