#ifndef S2TLAB_PERM_HPP
#define S2TLAB_PERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace s2tlab {

/// A permutation of the points {0, ..., n-1}, stored as its image table.
///
/// Composition convention, fixed project-wide: (p * q)[x] = p[q[x]], i.e.
/// the right factor acts first, and permutations act on points from the
/// left (g sends x to g[x]).  Conjugation is a^g = g^{-1} a g.
class Perm {
public:
  /// Identity permutation on `degree` points.
  explicit Perm(int degree);

  /// From an image table; throws std::invalid_argument unless `images` is
  /// a permutation of {0, ..., n-1}.
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  int fixed_point_count() const;

  /// Total order: lexicographic on the image table.  This is the canonical
  /// order used everywhere for deduplication and reproducible output.
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

private:
  std::vector<int> images_;
};

/// (p * q)[x] = p[q[x]].  Throws DegreeMismatchError on unequal degrees.
Perm compose(const Perm& p, const Perm& q);

Perm inverse(const Perm& p);

/// a^g = g^{-1} a g.  Satisfies (a^g)^h = a^(g h).
Perm conjugate(const Perm& a, const Perm& g);

/// Least k >= 1 with p^k = identity (lcm of cycle lengths).
long element_order(const Perm& p);

/// p^k for any k >= 0.
Perm power(const Perm& p, long k);

/// Cycle notation, fixed points omitted; "()" for the identity.
std::string to_cycle_string(const Perm& p);

} // namespace s2tlab

#endif
