#pragma once

#include <string>
#include <vector>

namespace ydelta {

// Permutation of {1..n} in one-line notation, composed as (w*v)(j) = w(v(j)).
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n);
  explicit Perm(std::vector<int> images);  // images[i-1] = w(i), 1-based values

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int j) const { return img_[j - 1]; }
  int inverse_image(int v) const;  // w^{-1}(v)
  bool is_identity() const;

  Perm compose(const Perm& v) const;  // this after v
  Perm inverse() const;
  // Right product with the transposition s_i = (i, i+1); swaps positions i, i+1.
  Perm right_mul_s(int i) const;

  int length() const;  // inversion count

  // Canonical reduced word: peel the top value n off as the block
  // s_{n-1} s_{n-2} ... s_m with m = w^{-1}(n), then recurse on the rest.
  // The top generator appears at most once in the result.
  std::vector<int> staircase_word() const;

  // Restriction to {1..n-1}; requires w(n) = n.
  Perm restricted() const;
  // The permutation w' of the staircase factorization w = w' * (s_{n-1}...s_m):
  // position m (carrying value n) removed, later entries shifted left.
  Perm top_factor() const;
  Perm extended(int n) const;  // embed into S_n, fixing new points

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string str() const;  // one-line, e.g. "[2 1 3]"

 private:
  std::vector<int> img_;
};

}  // namespace ydelta
