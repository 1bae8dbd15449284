#include "ydelta/permutation.hpp"

#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ydelta {

Perm Perm::identity(int n) {
  Perm p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 1);
  return p;
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > size() || seen[v - 1])
      throw std::invalid_argument("not a permutation");
    seen[v - 1] = true;
  }
}

int Perm::inverse_image(int v) const {
  for (int j = 1; j <= size(); ++j)
    if (img_[j - 1] == v) return j;
  throw std::out_of_range("index out of range");
}

bool Perm::is_identity() const {
  for (int j = 1; j <= size(); ++j)
    if (img_[j - 1] != j) return false;
  return true;
}

Perm Perm::compose(const Perm& v) const {
  assert(size() == v.size());
  Perm r;
  r.img_.resize(img_.size());
  for (int j = 1; j <= size(); ++j) r.img_[j - 1] = img_[v(j) - 1];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (int j = 1; j <= size(); ++j) r.img_[img_[j - 1] - 1] = j;
  return r;
}

Perm Perm::right_mul_s(int i) const {
  assert(i >= 1 && i < size());
  Perm r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

int Perm::length() const {
  int inv = 0;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (img_[a] > img_[b]) ++inv;
  return inv;
}

std::vector<int> Perm::staircase_word() const {
  // Peel levels n, n-1, ..., 2, remembering where each level sits; emit the
  // blocks bottom level first.
  std::vector<int> cur = img_;
  std::vector<int> m_at(size() + 1, 0);
  for (int level = size(); level >= 2; --level) {
    int m = 0;
    for (int j = 0; j < level; ++j)
      if (cur[j] == level) m = j + 1;
    m_at[level] = m;
    cur.erase(cur.begin() + (m - 1));
  }
  std::vector<int> word;
  word.reserve(static_cast<size_t>(length()));
  for (int level = 2; level <= size(); ++level)
    for (int i = level - 1; i >= m_at[level]; --i) word.push_back(i);
  return word;
}

Perm Perm::restricted() const {
  assert(size() >= 1 && img_.back() == size());
  Perm r;
  r.img_.assign(img_.begin(), img_.end() - 1);
  return r;
}

Perm Perm::top_factor() const {
  int n = size();
  int m = inverse_image(n);
  Perm r;
  r.img_.reserve(n - 1);
  for (int j = 1; j <= n; ++j)
    if (j != m) r.img_.push_back(img_[j - 1]);
  return r;
}

Perm Perm::extended(int n) const {
  assert(n >= size());
  Perm r = *this;
  for (int j = size() + 1; j <= n; ++j) r.img_.push_back(j);
  return r;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << "[";
  for (int j = 0; j < size(); ++j) {
    if (j) os << " ";
    os << img_[j];
  }
  os << "]";
  return os.str();
}

}  // namespace ydelta
