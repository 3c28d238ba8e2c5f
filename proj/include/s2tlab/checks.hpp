#ifndef S2TLAB_CHECKS_HPP
#define S2TLAB_CHECKS_HPP

#include <vector>

#include "s2tlab/context.hpp"
#include "s2tlab/report.hpp"

namespace s2tlab {

/// Exhaustive instance checks.  Each quantifier runs over the whole group;
/// no sampling.  Reports use a third outcome, hypothesis-not-met, when an
/// instance falls outside a check's hypothesis (this is not a failure).

/// I is a single conjugacy class.
CheckReport check_lemma1(const S2TContext& ctx);

/// Every nontrivial normal subgroup N satisfies NH = G.
CheckReport check_lemma2(const S2TContext& ctx);

/// The stabilizer contains at most one involution.
CheckReport check_lemma3(const S2TContext& ctx);

/// H ∩ H^z is nontrivial exactly for z in H.
CheckReport check_malnormality(const S2TContext& ctx);

/// Nontrivial elements of I^2 are fixed-point-free.
CheckReport check_lemma4(const S2TContext& ctx);

/// If the elements of Ii commute pairwise for some involution i, then I^2
/// is a normal subgroup.  Also checks Ii = iI and that the commuting
/// property is independent of the choice of i.
CheckReport check_lemma5(const S2TContext& ctx);

/// In odd characteristic, the action on points is equivalent to the
/// conjugation action on involutions via g.base ↦ i^(g^{-1}).
CheckReport check_lemma6(const S2TContext& ctx);

/// I^2 \ {1} is a single conjugacy class (runs in characteristic 2 too,
/// with a caveat noted in the details).
CheckReport check_bn_class(const S2TContext& ctx);

/// I^2 contains every power of each of its elements.
CheckReport check_power_closure(const S2TContext& ctx);

/// The characteristic-3 splitting: commutation identities, the conjugation
/// chain term by term, jiki = kiji, and the full split G = I^2 ⋊ H.
CheckReport check_theorem(const S2TContext& ctx);

/// All of the above, in a fixed order, never short-circuiting.
std::vector<CheckReport> run_all(const S2TContext& ctx);

} // namespace s2tlab

#endif
