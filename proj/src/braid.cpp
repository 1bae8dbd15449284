#include "ydelta/braid.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

namespace ydelta {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

long read_number(const std::string& text, size_t& pos) {
  size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == start) throw BraidParseError("expected digits", start);
  return std::stol(text.substr(start, pos - start));
}

}  // namespace

BraidWord parse_braid(const std::string& text, std::optional<int> n) {
  std::vector<Letter> letters;
  int max_index = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    char c = text[pos];
    if (c != 's' && c != 't')
      throw BraidParseError("expected generator 's' or 't'", pos);
    LetterKind kind = (c == 's') ? LetterKind::Sigma : LetterKind::Tau;
    size_t gen_pos = pos;
    ++pos;
    long index = read_number(text, pos);
    if (index < 1) throw BraidParseError("generator index must be positive", gen_pos);
    long power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      power = read_number(text, pos);
      if (negative) power = -power;
    }
    if (kind == LetterKind::Tau && power <= 0)
      throw BraidParseError("singular generator has no inverse", gen_pos);
    if (n && index >= *n) throw BraidParseError("index out of range", gen_pos);
    max_index = std::max(max_index, static_cast<int>(index));
    int sign = power >= 0 ? +1 : -1;
    for (long k = 0; k < std::abs(power); ++k)
      letters.push_back({kind, static_cast<int>(index), sign});
  }
  BraidWord w;
  w.n = n ? *n : max_index + 1;
  if (w.n < 1) throw BraidParseError("strand count must be positive", 0);
  w.letters = std::move(letters);
  return w;
}

std::string render_braid(const BraidWord& w) {
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    long count = static_cast<long>(j - i);
    const Letter& l = w.letters[i];
    if (!first) os << " ";
    os << (l.kind == LetterKind::Sigma ? 's' : 't') << l.index;
    long power = l.sign * count;
    if (power != 1) os << "^" << power;
    first = false;
    i = j;
  }
  return os.str();
}

int exponent(const BraidWord& w) {
  int e = 0;
  for (const Letter& l : w.letters) e += l.sign;
  return e;
}

MoveSpec MoveSpec::real_conjugation(int i, MoveDir dir) {
  return {Kind::RealConjugation, i, dir, +1};
}
MoveSpec MoveSpec::singular_commuting(int i, MoveDir dir) {
  return {Kind::SingularCommuting, i, dir, +1};
}
MoveSpec MoveSpec::stabilization(int sign) {
  return {Kind::Stabilization, 0, MoveDir::FrontToBack, sign};
}
MoveSpec MoveSpec::destabilization() {
  return {Kind::Destabilization, 0, MoveDir::FrontToBack, +1};
}

std::string MoveSpec::str() const {
  switch (kind) {
    case Kind::RealConjugation:
      return "real_conjugation(" + std::to_string(index) + "," +
             (dir == MoveDir::FrontToBack ? "front" : "back") + ")";
    case Kind::SingularCommuting:
      return "singular_commuting(" + std::to_string(index) + "," +
             (dir == MoveDir::FrontToBack ? "front" : "back") + ")";
    case Kind::Stabilization:
      return sign > 0 ? "stabilization(+1)" : "stabilization(-1)";
    case Kind::Destabilization:
      return "destabilization";
  }
  return "?";
}

namespace {

// Strand n is touched only by letters of index n-1.
bool destabilizable(const BraidWord& w) {
  if (w.n < 2 || w.letters.empty()) return false;
  const Letter& last = w.letters.back();
  if (last.kind != LetterKind::Sigma || last.index != w.n - 1) return false;
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (w.letters[i].index == w.n - 1) return false;
  return true;
}

BraidWord rotate(const BraidWord& w, LetterKind kind, int index, MoveDir dir) {
  BraidWord r = w;
  if (dir == MoveDir::FrontToBack) {
    if (r.letters.empty() || r.letters.front().kind != kind ||
        r.letters.front().index != index || r.letters.front().sign != +1)
      throw std::invalid_argument("move not applicable");
    Letter l = r.letters.front();
    r.letters.erase(r.letters.begin());
    r.letters.push_back(l);
  } else {
    if (r.letters.empty() || r.letters.back().kind != kind ||
        r.letters.back().index != index || r.letters.back().sign != +1)
      throw std::invalid_argument("move not applicable");
    Letter l = r.letters.back();
    r.letters.pop_back();
    r.letters.insert(r.letters.begin(), l);
  }
  return r;
}

}  // namespace

BraidWord apply_move(const BraidWord& w, const MoveSpec& move) {
  switch (move.kind) {
    case MoveSpec::Kind::RealConjugation:
      return rotate(w, LetterKind::Sigma, move.index, move.dir);
    case MoveSpec::Kind::SingularCommuting:
      return rotate(w, LetterKind::Tau, move.index, move.dir);
    case MoveSpec::Kind::Stabilization: {
      BraidWord r = w;
      r.letters.push_back({LetterKind::Sigma, w.n, move.sign});
      r.n = w.n + 1;
      return r;
    }
    case MoveSpec::Kind::Destabilization: {
      if (!destabilizable(w)) throw std::invalid_argument("not destabilizable");
      BraidWord r = w;
      r.letters.pop_back();
      r.n = w.n - 1;
      return r;
    }
  }
  throw std::invalid_argument("unknown move");
}

std::vector<MoveSpec> applicable_moves(const BraidWord& w, int max_n) {
  std::vector<MoveSpec> moves;
  if (!w.letters.empty()) {
    const Letter& f = w.letters.front();
    if (f.sign == +1) {
      moves.push_back(f.kind == LetterKind::Sigma
                          ? MoveSpec::real_conjugation(f.index, MoveDir::FrontToBack)
                          : MoveSpec::singular_commuting(f.index, MoveDir::FrontToBack));
    }
    const Letter& b = w.letters.back();
    if (b.sign == +1) {
      moves.push_back(b.kind == LetterKind::Sigma
                          ? MoveSpec::real_conjugation(b.index, MoveDir::BackToFront)
                          : MoveSpec::singular_commuting(b.index, MoveDir::BackToFront));
    }
  }
  if (destabilizable(w)) moves.push_back(MoveSpec::destabilization());
  if (w.n < max_n || moves.empty()) {
    moves.push_back(MoveSpec::stabilization(+1));
    moves.push_back(MoveSpec::stabilization(-1));
  }
  return moves;
}

BraidWord random_word(int n, int len, bool allow_tau, uint64_t seed) {
  assert(n >= 2 && len >= 0);
  std::mt19937_64 eng(seed);
  BraidWord w;
  w.n = n;
  int span = n - 1;
  int options = allow_tau ? 3 * span : 2 * span;
  for (int i = 0; i < len; ++i) {
    int pick = static_cast<int>(eng() % static_cast<uint64_t>(options));
    if (pick < 2 * span) {
      int index = pick / 2 + 1;
      int sign = (pick % 2 == 0) ? +1 : -1;
      w.letters.push_back({LetterKind::Sigma, index, sign});
    } else {
      w.letters.push_back({LetterKind::Tau, pick - 2 * span + 1, +1});
    }
  }
  return w;
}

}  // namespace ydelta
