#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ydelta {

// Generator letters of the singular braid monoid SB_n: classical crossings
// sigma_i (either sign) and singular crossings tau_i (no inverse).
enum class LetterKind { Sigma, Tau };

struct Letter {
  LetterKind kind = LetterKind::Sigma;
  int index = 1;  // 1 <= index <= n-1
  int sign = +1;  // always +1 for Tau

  bool operator==(const Letter&) const = default;
};

struct BraidWord {
  int n = 1;  // strand count
  std::vector<Letter> letters;

  bool operator==(const BraidWord&) const = default;
};

struct BraidParseError : std::runtime_error {
  size_t position;  // 0-based offset into the input text
  BraidParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar: word := item*; item := ('s'|'t') digits ('^' '-'? digits)?,
// whitespace separated.  "s2^-3" is sigma_2^{-3}; powers are unrolled.
// If n is omitted it defaults to 1 + max index (1 for the empty word).
BraidWord parse_braid(const std::string& text, std::optional<int> n = std::nullopt);

// Inverse of the grammar; runs of equal letters collapse into powers.
std::string render_braid(const BraidWord& w);

// Sum of letter signs, each tau counting +1.
int exponent(const BraidWord& w);

enum class MoveDir { FrontToBack, BackToFront };

struct MoveSpec {
  enum class Kind { RealConjugation, SingularCommuting, Stabilization, Destabilization };
  Kind kind;
  int index = 0;            // generator index for conjugation/commuting
  MoveDir dir = MoveDir::FrontToBack;
  int sign = +1;            // stabilization sign

  static MoveSpec real_conjugation(int i, MoveDir dir);
  static MoveSpec singular_commuting(int i, MoveDir dir);
  static MoveSpec stabilization(int sign);
  static MoveSpec destabilization();
  std::string str() const;
};

// One move of the singular Markov theorem; the closure of the result is
// isotopic to the closure of w.  Throws std::invalid_argument when the move
// does not apply ("not destabilizable" for an illegal destabilization).
BraidWord apply_move(const BraidWord& w, const MoveSpec& move);

// Moves from the stated move set that apply to w.  Stabilizations are listed
// only while w.n < max_n, except when nothing else applies.
std::vector<MoveSpec> applicable_moves(const BraidWord& w, int max_n);

// Deterministic for a fixed seed; letters uniform over the 3(n-1) generators
// {sigma_i^{+1}, sigma_i^{-1}} plus {tau_i} when allow_tau.
BraidWord random_word(int n, int len, bool allow_tau, uint64_t seed);

}  // namespace ydelta
