#include "steenrod/bar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace steenrod {

std::string to_string(const BarElement& b) { return std::string(b.twist ? "T" : "") + "e" + std::to_string(b.level); }

BarElement twist(const BarElement& b) { return {!b.twist, b.level}; }

Chain<BarElement> bar_boundary(const BarElement& b) {
  Chain<BarElement> out;
  if (b.level == 0) return out;
  const BarElement lower{b.twist, b.level - 1};
  if (b.level == 1) {
    out.add_term(twist(lower), 1);
    out.add_term(lower, -1);
  } else {
    out.add_term(lower, 1);
    out.add_term(twist(lower), b.level % 2 == 0 ? 1 : -1);
  }
  return out;
}

Chain<BarElement> bar_boundary(const Chain<BarElement>& c) {
  Chain<BarElement> out(c.ring());
  for (const auto& [b, coef] : c) out += (coef * bar_boundary(b)).in_ring(c.ring());
  return out;
}

ChainComplex<BarElement> bar_complex(int max_level) {
  std::vector<std::vector<BarElement>> basis(max_level + 1);
  for (int n = 0; n <= max_level; ++n) basis[n] = {e(n), te(n)};
  return ChainComplex<BarElement>(Ring::integers(), std::move(basis),
                                  [](const BarElement& b) { return bar_boundary(b); });
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("images do not form a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::one_based(const std::vector<int>& images) {
  std::vector<int> v;
  for (int x : images) v.push_back(x - 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.images_.at(a), p.images_.at(b));
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int i = 0; i < size(); ++i) v[images_[i]] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> v(images_.size());
  for (int i = 0; i < size(); ++i) v[i] = images_[other(i)];
  return Permutation(std::move(v));
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p(i) + 1);
  }
  return out + "]";
}

Permutation block_compose(const Permutation& sigma, const std::vector<Permutation>& thetas) {
  const int n = sigma.size();
  if (static_cast<int>(thetas.size()) != n) throw std::invalid_argument("one block permutation per input needed");
  // blocks appear in the output in the order given by σ
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[sigma(i)] = i;
  std::vector<int> offset(n, 0);
  int running = 0;
  for (int pos = 0; pos < n; ++pos) {
    offset[order[pos]] = running;
    running += thetas[order[pos]].size();
  }
  std::vector<int> images;
  images.reserve(running);
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < thetas[i].size(); ++p) images.push_back(offset[i] + thetas[i](p));
  return Permutation(std::move(images));
}

Permutation partial_compose(const Permutation& sigma, int i, const Permutation& tau) {
  if (i < 1 || i > sigma.size()) throw std::out_of_range("composition slot out of range");
  std::vector<Permutation> thetas(sigma.size(), Permutation::identity(1));
  thetas[i - 1] = tau;
  return block_compose(sigma, thetas);
}

}  // namespace steenrod
