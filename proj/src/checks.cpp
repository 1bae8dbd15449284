#include "ydelta/checks.hpp"

#include <algorithm>
#include <sstream>

namespace ydelta {

namespace {

void record(CheckResult& r, bool ok, const std::string& detail) {
  if (ok) {
    ++r.pass;
  } else {
    ++r.fail;
    if (r.note.empty()) r.note = detail;
  }
}

Scalar u_scalar() { return Scalar::u(1); }

}  // namespace

ElementSampler::ElementSampler(int d, int n, uint64_t seed)
    : d_(d), n_(n), state_(seed ^ 0x9e3779b97f4a7c15ull) {}

uint64_t ElementSampler::next_u64() {
  // splitmix64; deterministic across platforms
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t x = state_;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Element ElementSampler::next(int nterms) {
  Element e(d_, n_);
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    m.framing.resize(n_);
    for (int j = 0; j < n_; ++j) m.framing[j] = static_cast<int>(next_u64() % d_);
    std::vector<int> img(n_);
    for (int j = 0; j < n_; ++j) img[j] = j + 1;
    for (int j = n_ - 1; j > 0; --j)
      std::swap(img[j], img[next_u64() % static_cast<uint64_t>(j + 1)]);
    m.perm = Perm(std::move(img));
    long c = static_cast<long>(next_u64() % 5) - 2;  // -2..2
    if (c == 0) c = 3;
    Scalar coeff = Scalar::from_int(c);
    switch (next_u64() % 3) {
      case 0:
        coeff = coeff * Scalar::u(1);
        break;
      case 1:
        coeff = coeff * Scalar::z(1);
        break;
      default:
        break;
    }
    e.add_term(m, coeff);
  }
  return e;
}

std::vector<CheckResult> relation_suite(int d, const std::vector<int>& ns) {
  std::vector<CheckResult> results;

  Scalar u = u_scalar();
  Scalar one = Scalar::one();

  for (int n : ns) {
    std::string tag = "d=" + std::to_string(d) + ",n=" + std::to_string(n);
    Element id = Element::identity(d, n);

    CheckResult defining{"defining[" + tag + "]"};
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) > 1) {
          Element lhs = id.right_mul_g(i).right_mul_g(j);
          Element rhs = id.right_mul_g(j).right_mul_g(i);
          record(defining, lhs.equals(rhs), "far commutation g" + std::to_string(i));
        }
        if (std::abs(i - j) == 1) {
          Element lhs = id.right_mul_g(i).right_mul_g(j).right_mul_g(i);
          Element rhs = id.right_mul_g(j).right_mul_g(i).right_mul_g(j);
          record(defining, lhs.equals(rhs),
                 "braid relation g" + std::to_string(i) + ",g" + std::to_string(j));
        }
      }
    }
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        Element lhs = id.right_mul_t(a, 1).right_mul_t(b, 1);
        Element rhs = id.right_mul_t(b, 1).right_mul_t(a, 1);
        record(defining, lhs.equals(rhs), "t-commutation");
      }
    for (int i = 1; i < n; ++i)
      for (int j = 1; j <= n; ++j) {
        // t_j g_i = g_i t_{s_i(j)}
        Element lhs = id.right_mul_t(j, 1).right_mul_g(i);
        int sij = (j == i) ? i + 1 : (j == i + 1 ? i : j);
        Element rhs = id.right_mul_g(i).right_mul_t(sij, 1);
        record(defining, lhs.equals(rhs), "t/g exchange");
      }
    for (int j = 1; j <= n; ++j)
      record(defining, id.right_mul_t(j, d).equals(id), "t^d = 1");
    for (int i = 1; i < n; ++i) {
      Element lhs = id.right_mul_g(i).right_mul_g(i);
      Element e = framing_idempotent(d, n, i);
      Element rhs = id + e.scaled(u - one) - e.right_mul_g(i).scaled(u - one);
      record(defining, lhs.equals(rhs), "quadratic relation");
    }
    results.push_back(defining);

    CheckResult lemma{"idempotent-relations[" + tag + "]"};
    for (int i = 1; i < n; ++i) {
      Element ei = framing_idempotent(d, n, i);
      record(lemma, ei.mul(ei).equals(ei), "e idempotent");
      for (int j = 1; j < n; ++j) {
        Element ej = framing_idempotent(d, n, j);
        record(lemma, ei.mul(ej).equals(ej.mul(ei)), "e/e commute");
      }
      record(lemma, ei.right_mul_g(i).equals(braid_generator(d, n, i).mul(ei)),
             "e/g commute (same index)");
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) > 1)
          record(lemma, ei.right_mul_g(j).equals(braid_generator(d, n, j).mul(ei)),
                 "e/g far commute");
        if (std::abs(i - j) == 1) {
          Element lhs = framing_idempotent(d, n, j).right_mul_g(i).right_mul_g(j);
          Element rhs =
              braid_generator(d, n, i).right_mul_g(j).mul(framing_idempotent(d, n, i));
          record(lemma, lhs.equals(rhs), "e_j g_i g_j = g_i g_j e_i");
        }
      }
    }
    results.push_back(lemma);

    CheckResult prop{"singular-relations[" + tag + "]"};
    for (int i = 1; i < n; ++i) {
      Element pi = singular_element(d, n, i);
      Element ei = framing_idempotent(d, n, i);
      Element gi = braid_generator(d, n, i);
      record(prop, pi.equals(ei.mul(id - gi)), "p = e(1-g)");
      record(prop, ei.mul(pi).equals(pi), "e p = p");
      record(prop, pi.mul(ei).equals(pi), "p e = p");
      Element pk = pi;
      Scalar factor = one;
      for (int k = 2; k <= 5; ++k) {
        pk = pk.mul(pi);
        factor = factor * (u + one);
        record(prop, pk.equals(pi.scaled(factor)), "p^k = (u+1)^{k-1} p");
      }
      record(prop, gi.mul(pi).equals(pi.scaled(-u)), "g p = -u p");
      record(prop, pi.right_mul_g(i).equals(pi.scaled(-u)), "p g = -u p");
      for (int j = 1; j < n; ++j) {
        Element pj = singular_element(d, n, j);
        if (std::abs(i - j) > 1) {
          record(prop, gi.mul(pj).equals(pj.right_mul_g(i)), "g/p far commute");
          record(prop, pi.mul(pj).equals(pj.mul(pi)), "p/p far commute");
        }
        if (std::abs(i - j) == 1) {
          Element lhs = pj.right_mul_g(i).right_mul_g(j);
          Element rhs = gi.right_mul_g(j).mul(pi);
          record(prop, lhs.equals(rhs), "p_j g_i g_j = g_i g_j p_i");
        }
      }
      // g - g^{-1} = (u^{-1} - 1) p
      Element diff = gi - braid_generator(d, n, i, -1);
      record(prop, diff.equals(pi.scaled(Scalar::u(-1) - one)), "g - g^{-1}");
      record(prop, gi.right_mul_g_inv(i).equals(id), "g g^{-1} = 1");
      record(prop, braid_generator(d, n, i, -1).right_mul_g(i).equals(id), "g^{-1} g = 1");
    }
    results.push_back(prop);

    CheckResult powers{"power-formulas[" + tag + "]"};
    for (int i = 1; i < n; ++i) {
      for (int m = -6; m <= 6; ++m) {
        Element direct = Element::identity(d, n);
        for (int k = 0; k < std::abs(m); ++k)
          direct = (m > 0) ? direct.right_mul_g(i) : direct.right_mul_g_inv(i);
        record(powers, crossing_power(d, n, i, m).equals(direct),
               "g^" + std::to_string(m));
      }
    }
    results.push_back(powers);

    CheckResult monoid{"monoid-relations[" + tag + "]"};
    {
      auto image_equal = [&](const std::string& a, const std::string& b) {
        BraidWord wa = parse_braid(a, n);
        BraidWord wb = parse_braid(b, n);
        return braid_image(wa, d).equals(braid_image(wb, d));
      };
      for (int i = 1; i < n; ++i) {
        record(monoid, image_equal("s" + std::to_string(i) + " s" + std::to_string(i) + "^-1", ""),
               "sigma sigma^{-1} = 1");
        record(monoid,
               image_equal("s" + std::to_string(i) + " t" + std::to_string(i),
                           "t" + std::to_string(i) + " s" + std::to_string(i)),
               "[sigma_i, tau_i] = 0");
        for (int j = 1; j < n; ++j) {
          std::string si = std::to_string(i), sj = std::to_string(j);
          if (std::abs(i - j) > 1) {
            record(monoid, image_equal("s" + si + " s" + sj, "s" + sj + " s" + si),
                   "far [sigma, sigma]");
            record(monoid, image_equal("s" + si + " t" + sj, "t" + sj + " s" + si),
                   "far [sigma, tau]");
            record(monoid, image_equal("t" + si + " t" + sj, "t" + sj + " t" + si),
                   "far [tau, tau]");
          }
          if (std::abs(i - j) == 1) {
            record(monoid,
                   image_equal("s" + si + " s" + sj + " s" + si,
                               "s" + sj + " s" + si + " s" + sj),
                   "braid relation");
            record(monoid,
                   image_equal("s" + si + " s" + sj + " t" + si,
                               "t" + sj + " s" + si + " s" + sj),
                   "mixed relation");
          }
        }
      }
      // The same relations embedded in a random context.
      for (int rep = 0; rep < 3; ++rep) {
        BraidWord left = random_word(n, 2, true, 1000 + 10 * static_cast<uint64_t>(rep) + d);
        BraidWord right = random_word(n, 2, true, 2000 + 10 * static_cast<uint64_t>(rep) + d);
        for (int i = 1; i + 1 < n; ++i) {
          std::string si = std::to_string(i), sj = std::to_string(i + 1);
          BraidWord lhs = parse_braid(render_braid(left) + " s" + si + " s" + sj + " t" + si +
                                          " " + render_braid(right),
                                      n);
          BraidWord rhs = parse_braid(render_braid(left) + " t" + sj + " s" + si + " s" + sj +
                                          " " + render_braid(right),
                                      n);
          record(monoid, braid_image(lhs, d).equals(braid_image(rhs, d)),
                 "mixed relation in context");
        }
      }
    }
    results.push_back(monoid);

    CheckResult assoc{"associativity[" + tag + "]"};
    {
      ElementSampler sampler(d, n, 77 + static_cast<uint64_t>(100 * d + n));
      for (int rep = 0; rep < 4; ++rep) {
        Element a = sampler.next(2);
        Element b = sampler.next(2);
        Element c = sampler.next(2);
        record(assoc, a.mul(b).mul(c).equals(a.mul(b.mul(c))), "(ab)c = a(bc)");
      }
    }
    results.push_back(assoc);
  }
  return results;
}

std::vector<CheckResult> trace_suite(const ESolution& sol, const std::vector<int>& ns,
                                     int conj_pairs, int rule_samples, uint64_t seed) {
  std::vector<CheckResult> results;
  int d = sol.modulus();
  TraceParams params = sol.trace_params();
  Scalar zeta = Scalar::from_cyclo(params.zeta);
  Scalar z = Scalar::z(1);

  CheckResult conj{"conjugation"};
  CheckResult markov{"markov-rule"};
  CheckResult framing{"framing-rule"};
  CheckResult shifts{"zeta-shifts"};
  CheckResult thm5{"e-multiplicativity"};
  CheckResult cor1{"p-multiplicativity"};

  int per_n_pairs = std::max(1, conj_pairs / static_cast<int>(ns.size()));
  int per_n_rules = std::max(1, rule_samples / static_cast<int>(ns.size()));

  for (int n : ns) {
    TraceContext ctx(params);
    ElementSampler sampler(d, n, seed + static_cast<uint64_t>(n));
    for (int rep = 0; rep < per_n_pairs; ++rep) {
      Element a = sampler.next(2);
      Element b = sampler.next(2);
      Scalar ab = ctx.trace(a.mul(b));
      Scalar ba = ctx.trace(b.mul(a));
      record(conj, ab.equals(ba), "tr(ab) != tr(ba) at n=" + std::to_string(n));
    }

    TraceContext ctx_up(params);
    for (int rep = 0; rep < per_n_rules; ++rep) {
      Element x = sampler.next(2).embedded(n + 1);
      Scalar base = ctx_up.trace(x);
      record(markov, ctx_up.trace(x.right_mul_g(n)).equals(z * base),
             "tr(x g_n) != z tr(x) at n=" + std::to_string(n));
      int m = rep % d;
      Scalar xm = Scalar::from_cyclo(params.x(m));
      record(framing, ctx_up.trace(x.right_mul_t(n + 1, m)).equals(xm * base),
             "framing rule at n=" + std::to_string(n));
      record(thm5,
             ctx_up.trace(x.mul(framing_idempotent(d, n + 1, n))).equals(zeta * base),
             "tr(x e_n) != zeta tr(x) at n=" + std::to_string(n));
      record(cor1,
             ctx_up.trace(x.mul(singular_element(d, n + 1, n))).equals((zeta - z) * base),
             "tr(x p_n) != (zeta - z) tr(x) at n=" + std::to_string(n));
    }

    for (int i = 1; i < n; ++i)
      for (int m = 0; m < d; ++m) {
        Scalar lhs = Scalar::from_cyclo(zeta_shift(m, params));
        Scalar rhs = ctx.trace(framing_idempotent(d, n, i, m));
        record(shifts, lhs.equals(rhs), "zeta_shift mismatch");
      }
  }

  results.push_back(conj);
  results.push_back(markov);
  results.push_back(framing);
  results.push_back(shifts);
  results.push_back(thm5);
  results.push_back(cor1);
  return results;
}

namespace {

template <class Params, class OrbitFn>
std::vector<CheckResult> markov_suite_impl(const Params& params, int words, int rounds,
                                           int max_n, int max_len, uint64_t seed,
                                           OrbitFn orbit) {
  CheckResult res{"move-invariance"};
  for (int i = 0; i < words; ++i) {
    int n = 2 + static_cast<int>((seed + i) % static_cast<uint64_t>(std::max(1, max_n - 1)));
    int len = 1 + static_cast<int>((seed + 3 * i) % static_cast<uint64_t>(max_len));
    BraidWord w = random_word(n, len, true, seed + 1000 * static_cast<uint64_t>(i));
    MoveReport report = orbit(w, params, rounds, seed + 7919 * static_cast<uint64_t>(i));
    std::ostringstream os;
    os << "word " << render_braid(w) << " (n=" << n << "): move " << report.failed_move
       << " changed Delta";
    record(res, report.ok, os.str());
  }
  return {res};
}

}  // namespace

std::vector<CheckResult> markov_suite(const DeltaParams& params, int words, int rounds,
                                      int max_n, int max_len, uint64_t seed) {
  return markov_suite_impl(params, words, rounds, max_n, max_len, seed,
                           [](const BraidWord& w, const DeltaParams& p, int r, uint64_t s) {
                             return markov_invariance(w, p, r, s);
                           });
}

std::vector<CheckResult> markov_suite_numeric(const NumericDeltaParams& params, int words,
                                              int rounds, int max_n, int max_len,
                                              uint64_t seed) {
  return markov_suite_impl(
      params, words, rounds, max_n, max_len, seed,
      [](const BraidWord& w, const NumericDeltaParams& p, int r, uint64_t s) {
        return markov_invariance_numeric(w, p, r, s);
      });
}

std::vector<CheckResult> skein_suite(const ESolution& sol, int cases, int max_n,
                                     int max_len, uint64_t seed) {
  CheckResult res{"skein-relation"};
  DeltaParams params = DeltaParams::from_solution(sol);
  for (int i = 0; i < cases; ++i) {
    int n = 2 + static_cast<int>((seed + i) % static_cast<uint64_t>(std::max(1, max_n - 1)));
    int len = static_cast<int>((seed + 5 * i) % static_cast<uint64_t>(max_len + 1));
    BraidWord beta = random_word(n, len, true, seed + 1000 * static_cast<uint64_t>(i));
    int pos = static_cast<int>((seed + 11 * i) % (beta.letters.size() + 1));
    int gen = 1 + static_cast<int>((seed + 13 * i) % static_cast<uint64_t>(n - 1));
    bool ok = skein_check(beta, pos, gen, params);
    std::ostringstream os;
    os << "site (" << pos << ", " << gen << ") in " << render_braid(beta);
    record(res, ok, os.str());
  }
  return {res};
}

}  // namespace ydelta
