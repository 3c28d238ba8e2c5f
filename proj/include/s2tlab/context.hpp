#ifndef S2TLAB_CONTEXT_HPP
#define S2TLAB_CONTEXT_HPP

#include <optional>
#include <string>

#include "s2tlab/group.hpp"
#include "s2tlab/report.hpp"

namespace s2tlab {

/// Characteristic of a sharply 2-transitive group: 2 when the point
/// stabilizer has no involution, otherwise the common odd prime order of
/// the nontrivial products of two involutions.  (Characteristic 0 needs an
/// infinite torsion-free situation and cannot occur here.)
struct Characteristic {
  enum class Kind { Two, OddPrime };
  Kind kind = Kind::Two;
  int prime = 2;  // the odd prime when kind == OddPrime, else 2

  static Characteristic two() { return {Kind::Two, 2}; }
  static Characteristic odd_prime(int p) { return {Kind::OddPrime, p}; }
  bool is_two() const { return kind == Kind::Two; }
  friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

std::string to_string(const Characteristic& c);

/// Outcome of the sharp-2-transitivity test.  On failure, (x,y) -> (z,t)
/// is an ordered pair of distinct pairs with `count` != 1 solutions.
struct SharpnessResult {
  bool ok = false;
  int x = 0, y = 0, z = 0, t = 0;
  long count = 0;
  json witness_json(const PermGroup& g) const;
};

/// Rejection carrying the offending pair.
struct NotSharplyTransitiveError : std::runtime_error {
  NotSharplyTransitiveError(std::string msg, SharpnessResult w)
      : std::runtime_error(std::move(msg)), witness(w) {}
  SharpnessResult witness;
};

/// A verified sharply 2-transitive group with the derived objects the
/// analysis works on.  Immutable once built.
struct S2TContext {
  PermGroup group;
  int base_point = 0;           // fixed by convention
  PermSet stabilizer;           // H, the elements fixing the base point
  PermSet involutions;          // I
  PermSet involution_products;  // I^2 = { ij : i, j in I }
  Characteristic chr;
  std::string label;

  int degree() const { return group.degree; }
};

/// Exhaustive test: every ordered pair of distinct points must reach every
/// other such pair through exactly one element, and |G| must be n(n-1).
/// Requires degree >= 3.
SharpnessResult verify_sharp_2transitivity(const PermGroup& g);

/// Builds the full context (stabilizer, involutions, I^2, characteristic).
/// Throws NotSharplyTransitiveError if the group fails the sharpness test.
S2TContext build_context(const PermGroup& g, std::string label = "");

/// Recomputes the characteristic from H and I^2.  Throws
/// InternalConsistencyError if the nontrivial elements of I^2 do not share
/// a single odd prime order (impossible for a genuine instance).
Characteristic characteristic(const S2TContext& ctx);

/// {1} together with every fixed-point-free element.
PermSet frobenius_kernel(const S2TContext& ctx);

/// A (claimed) normal complement for the stabilizer, with the three
/// defining checks evaluated exhaustively.
struct SplitCertificate {
  PermSet kernel;
  bool kernel_normal = false;
  bool trivial_intersection = false;
  bool product_covers = false;
  bool used_fallback = false;  // primary candidate failed; found via search
  bool valid() const {
    return kernel_normal && trivial_intersection && product_covers;
  }
};

/// Tries N = I^2 first (which equals I ∪ {1} in characteristic 2); if that
/// fails, searches all normal subgroups for a complement, flagging the
/// fallback.  A certificate with valid() == false means G does not split.
SplitCertificate splitting_certificate(const S2TContext& ctx);

} // namespace s2tlab

#endif
