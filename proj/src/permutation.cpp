#include "rloop/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace rloop {

bool is_bijection(const std::vector<int>& images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (!is_bijection(images_))
    throw std::invalid_argument("permutation images are not a bijection");
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    inv[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

Permutation operator*(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> images(g.images_.size());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = f.images_[static_cast<std::size_t>(g.images_[x])];
  return Permutation(std::move(images));
}

}  // namespace rloop
