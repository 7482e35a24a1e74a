// Matrix-multiplication exponent bounds from border-rank facts, and a ledger
// of border-rank facts closed under Kronecker submultiplicativity.
#pragma once

#include <brlb/errors.hpp>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace brlb {

/// 50 significant decimal digits of working precision.
using Decimal = boost::multiprecision::cpp_dec_float_50;

/// An upper bound on omega, rounded half-even to four decimal places.
struct OmegaBound {
  std::string formula;  // "bini", "cw", "skewcw"
  std::map<std::string, long long> inputs;
  long long ten_thousandths = 0;  // value = ten_thousandths / 10^4
  bool informative = false;       // value < 3, i.e. better than the classical algorithm

  double value() const { return static_cast<double>(ten_thousandths) / 1e4; }
  std::string decimal() const {
    std::ostringstream os;
    os << ten_thousandths / 10000 << '.';
    const auto frac = ten_thousandths % 10000;
    os << (frac < 1000 ? "0" : "") << (frac < 100 ? "0" : "") << (frac < 10 ? "0" : "") << frac;
    return os.str();
  }
};

namespace detail {
inline long long round_half_even_4(const Decimal& x) {
  const Decimal scaled = x * 10000;
  const Decimal fl = floor(scaled);
  const Decimal frac = scaled - fl;
  auto n = fl.convert_to<long long>();
  if (frac > Decimal("0.5") || (frac == Decimal("0.5") && n % 2 != 0)) ++n;
  return n;
}

inline OmegaBound finish(std::string formula, std::map<std::string, long long> inputs, const Decimal& value) {
  // omega >= 2 always; allow for the last digits of working precision.
  if (value < Decimal(2) - Decimal("1e-40"))
    throw std::invalid_argument(formula + ": inputs imply omega < 2, so the border-rank value cannot be correct");
  OmegaBound b;
  b.formula = std::move(formula);
  b.inputs = std::move(inputs);
  b.ten_thousandths = round_half_even_4(value);
  b.informative = b.ten_thousandths < 30000;
  return b;
}
}  // namespace detail

/// R(M<n>) <= r gives omega <= log_n r.
inline OmegaBound bini_bound(long long n, long long r_upper) {
  if (n < 2) throw std::invalid_argument("bini_bound: n must be at least 2");
  if (r_upper < n * n) throw std::invalid_argument("bini_bound: r_upper is below n^2, impossible for a concise tensor");
  const Decimal v = log(Decimal(r_upper)) / log(Decimal(n));
  return detail::finish("bini", {{"n", n}, {"r_upper", r_upper}}, v);
}

enum class CwFormula { Small, Skew };

/// omega <= log_q( 4/27 * R(T^{(x)k})^{3/k} ) for the small Coppersmith-Winograd
/// tensor (or its skew cousin, which has the same shape), given an upper
/// bound r_upper on the border rank of the k-th Kronecker power.
inline OmegaBound cw_omega_bound(long long q, long long k, long long r_upper, CwFormula which = CwFormula::Small) {
  if (q < 2) throw std::invalid_argument("cw_omega_bound: q must be at least 2");
  if (k < 1) throw std::invalid_argument("cw_omega_bound: k must be at least 1");
  if (r_upper < 1) throw std::invalid_argument("cw_omega_bound: r_upper must be positive");
  const Decimal v = (log(Decimal(4) / Decimal(27)) + Decimal(3) / Decimal(k) * log(Decimal(r_upper))) / log(Decimal(q));
  return detail::finish(which == CwFormula::Small ? "cw" : "skewcw", {{"q", q}, {"k", k}, {"r_upper", r_upper}}, v);
}

enum class FactKind { LOWER, UPPER };

inline const char* to_string(FactKind k) { return k == FactKind::LOWER ? "LOWER" : "UPPER"; }

inline FactKind parse_fact_kind(const std::string& s) {
  if (s == "LOWER") return FactKind::LOWER;
  if (s == "UPPER") return FactKind::UPPER;
  throw std::invalid_argument("unknown fact kind: " + s);
}

struct BrFact {
  std::string tensor_id;
  FactKind kind = FactKind::LOWER;
  std::uint64_t value = 0;
  std::string provenance;

  friend bool operator==(const BrFact&, const BrFact&) = default;
};

/// Registers product_id as the Kronecker product of factor_ids (in order).
struct KroneckerRelation {
  std::string product_id;
  std::vector<std::string> factor_ids;

  friend bool operator==(const KroneckerRelation&, const KroneckerRelation&) = default;
};

struct Ledger {
  std::vector<BrFact> facts;
  std::vector<KroneckerRelation> kronecker;

  std::optional<std::uint64_t> best(const std::string& id, FactKind kind) const {
    std::optional<std::uint64_t> out;
    for (const auto& f : facts) {
      if (f.tensor_id != id || f.kind != kind) continue;
      if (!out) out = f.value;
      else out = kind == FactKind::LOWER ? std::max(*out, f.value) : std::min(*out, f.value);
    }
    return out;
  }

  /// Throws ConsistencyError if some tensor has max LOWER > min UPPER.
  void check_consistency() const {
    for (const auto& f : facts) {
      const auto lo = best(f.tensor_id, FactKind::LOWER), hi = best(f.tensor_id, FactKind::UPPER);
      if (lo && hi && *lo > *hi) {
        throw ConsistencyError("border-rank facts for " + f.tensor_id + " conflict: lower " + std::to_string(*lo) +
                               " > upper " + std::to_string(*hi));
      }
    }
  }

  /// Adds a fact unless an identical one is present, then rechecks consistency.
  void add(const BrFact& fact) {
    if (std::find(facts.begin(), facts.end(), fact) == facts.end()) facts.push_back(fact);
    check_consistency();
  }

  void register_kronecker(const KroneckerRelation& rel) {
    if (rel.factor_ids.empty()) throw std::invalid_argument("register_kronecker: no factors");
    if (std::find(kronecker.begin(), kronecker.end(), rel) == kronecker.end()) kronecker.push_back(rel);
  }
};

/// Closes UPPER facts under R(T (x) T') <= R(T) R(T') for the registered
/// products. Lower bounds are never propagated this way.
inline Ledger kron_ledger_update(Ledger ledger) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& rel : ledger.kronecker) {
      boost::multiprecision::cpp_int product = 1;
      bool all_known = true;
      std::string prov = "kronecker(";
      for (std::size_t i = 0; i < rel.factor_ids.size(); ++i) {
        const auto up = ledger.best(rel.factor_ids[i], FactKind::UPPER);
        if (!up) {
          all_known = false;
          break;
        }
        product *= *up;
        prov += (i ? "," : "") + rel.factor_ids[i] + "<=" + std::to_string(*up);
      }
      if (!all_known || product > std::numeric_limits<std::uint64_t>::max()) continue;
      const BrFact derived{rel.product_id, FactKind::UPPER, product.convert_to<std::uint64_t>(), prov + ")"};
      if (std::find(ledger.facts.begin(), ledger.facts.end(), derived) != ledger.facts.end()) continue;
      ledger.facts.push_back(derived);
      changed = true;
    }
  }
  ledger.check_consistency();
  return ledger;
}

}  // namespace brlb
