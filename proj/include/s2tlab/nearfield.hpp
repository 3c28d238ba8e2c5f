#ifndef S2TLAB_NEARFIELD_HPP
#define S2TLAB_NEARFIELD_HPP

#include <string>
#include <vector>

#include "s2tlab/group.hpp"
#include "s2tlab/report.hpp"

namespace s2tlab {

/// A finite (right) near-field given by explicit operation tables.
/// Element codes are 0..q-1 with 0 the additive zero and 1 the
/// multiplicative one.  The one distributive law carried is the right one,
/// (a+b)*c = a*c + b*c, matching affine maps of the form x -> x*a + b.
struct NearField {
  int order = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  std::string label;

  int plus(int a, int b) const { return add[a][b]; }
  int times(int a, int b) const { return mul[a][b]; }
};

/// The field of order q = p^k (q <= 128), built from the pinned irreducible
/// polynomial for (p, k) listed in docs/irreducible_polynomials.md.
/// Element e encodes the polynomial with base-p digits of e as coefficients.
/// Throws std::invalid_argument if q is not a prime power in range.
NearField finite_field(int q);

/// The proper near-field of order 9: additive group of GF(9); a o b is
/// a*b when b is a nonzero square in GF(9) and a^3 * b when b is a
/// non-square.  Its multiplicative group is quaternion of order 8.
/// The construction is validated against the near-field axioms post hoc;
/// a validation failure throws InternalConsistencyError.
NearField dickson_nearfield_9();

/// Exhaustive check of every near-field invariant.  On failure the report
/// carries the violated law and the witness triple.  details["is_field"]
/// records whether left distributivity also holds.
CheckReport verify_nearfield_axioms(const NearField& nf);

/// The group of all maps x -> x*a + b (a != 0) as permutations of the q
/// element codes; order q(q-1).  Verifies the near-field axioms first and
/// throws std::invalid_argument if they fail.
PermGroup affine_group(const NearField& nf);

} // namespace s2tlab

#endif
