#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace brlb {

enum class ObstructionKind { STRASSEN, COMMUTATOR, END_CLOSED, T111_TRIPLE, T111_TWOFACTOR, SYMLIE, KOSZUL, ALG111_ABUNDANCE };

enum class Verdict { PASS, FAIL, INAPPLICABLE };

inline const char* to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::STRASSEN: return "STRASSEN";
    case ObstructionKind::COMMUTATOR: return "COMMUTATOR";
    case ObstructionKind::END_CLOSED: return "END_CLOSED";
    case ObstructionKind::T111_TRIPLE: return "T111_TRIPLE";
    case ObstructionKind::T111_TWOFACTOR: return "T111_TWOFACTOR";
    case ObstructionKind::SYMLIE: return "SYMLIE";
    case ObstructionKind::KOSZUL: return "KOSZUL";
    case ObstructionKind::ALG111_ABUNDANCE: return "ALG111_ABUNDANCE";
  }
  return "?";
}

inline ObstructionKind parse_obstruction_kind(const std::string& s) {
  for (auto k : {ObstructionKind::STRASSEN, ObstructionKind::COMMUTATOR, ObstructionKind::END_CLOSED,
                 ObstructionKind::T111_TRIPLE, ObstructionKind::T111_TWOFACTOR, ObstructionKind::SYMLIE,
                 ObstructionKind::KOSZUL, ObstructionKind::ALG111_ABUNDANCE}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown obstruction: " + s);
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::INAPPLICABLE: return "INAPPLICABLE";
  }
  return "?";
}

/// Outcome of one certificate. A FAIL is always backed by an exact nonzero
/// residual or rank deficit; a PASS over sampled witnesses is probabilistic.
struct Obstruction {
  ObstructionKind name = ObstructionKind::STRASSEN;
  Verdict verdict = Verdict::INAPPLICABLE;
  std::optional<long long> payload;       // method-specific bound or dimension
  std::optional<std::size_t> lower_bound; // border-rank lower bound this result certifies
  std::map<std::string, std::string> witness;
  std::string field;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;

  bool failed() const { return verdict == Verdict::FAIL; }
};

}  // namespace brlb
