#pragma once

#include <compare>
#include <vector>

namespace rloop {

// Bijection on [0, n).  Translation maps of finite tables live here, so the
// composition convention matters everywhere: f * g applies g first,
// (f * g)(x) == f(g(x)).
class Permutation {
public:
  // Throws std::invalid_argument unless images is a bijection on [0, n).
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& f, const Permutation& g);

  auto operator<=>(const Permutation& rhs) const = default;

private:
  std::vector<int> images_;
};

// True when images describes a bijection on [0, images.size()).
bool is_bijection(const std::vector<int>& images);

}  // namespace rloop
