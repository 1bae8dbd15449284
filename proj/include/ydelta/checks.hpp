#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ydelta/esystem.hpp"
#include "ydelta/invariant.hpp"

namespace ydelta {

struct CheckResult {
  std::string name;
  int pass = 0;
  int fail = 0;
  std::string note;  // first failure detail, or extra info

  bool ok() const { return fail == 0; }
};

// Random element with `nterms` monomials and small coefficients;
// deterministic in the engine state.
class ElementSampler {
 public:
  ElementSampler(int d, int n, uint64_t seed);
  Element next(int nterms);

 private:
  int d_, n_;
  uint64_t state_;
  uint64_t next_u64();
};

// Defining relations, Lemma-type identities, power formulas and the monoid
// homomorphism, as exact Element equalities at modulus d over each n.
std::vector<CheckResult> relation_suite(int d, const std::vector<int>& ns);

// Conjugation, Markov and framing rules, zeta shifts, and the E-condition
// product rules tr(x e_n) = zeta tr(x), tr(x p_n) = (zeta - z) tr(x).
std::vector<CheckResult> trace_suite(const ESolution& sol, const std::vector<int>& ns,
                                     int conj_pairs, int rule_samples, uint64_t seed);

// Random move orbits; Delta must be constant along each.
std::vector<CheckResult> markov_suite(const DeltaParams& params, int words, int rounds,
                                      int max_n, int max_len, uint64_t seed);
std::vector<CheckResult> markov_suite_numeric(const NumericDeltaParams& params, int words,
                                              int rounds, int max_n, int max_len,
                                              uint64_t seed);

// Random (word, site) skein checks.
std::vector<CheckResult> skein_suite(const ESolution& sol, int cases, int max_n,
                                     int max_len, uint64_t seed);

}  // namespace ydelta
