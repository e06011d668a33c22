#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperext/rational.hpp"

namespace hyperext {

/// One Mobius factor of a rational map. The geodesic sigma joining `pole` to `zero`
/// is the one the product extension sends onto the vertical axis.
struct MobiusFactor {
  MobiusTransform map;
  SpherePoint zero;
  SpherePoint pole;
};

/// Pairing of zeros against poles.
///
/// Zeros and poles (with multiplicity) are sorted lexicographically by (re, im) and
/// the shorter list is padded with infinity up to the degree. Factor i pairs zero i
/// with pole pairing[i]; a padded infinity drops the matching term, giving z - z_i
/// or 1/(z - p_i).
struct Pairing {
  std::vector<std::size_t> pole_index;
  bool canonical = true;
};

struct MobiusFactorization {
  std::vector<MobiusFactor> factors;
  Pairing pairing;
  /// lead(num)/lead(den), folded into the first factor.
  Complex constant;

  /// Pointwise product of the factors. Throws std::domain_error on 0 * infinity.
  SpherePoint operator()(const SpherePoint& z) const;
};

/// Factor R into Mobius maps whose pointwise product is R. The canonical pairing is
/// the identity; `pairing` must then be a permutation of 0..deg-1.
/// Throws std::logic_error if the product misses R by more than 1e-8 (relative) at
/// any of 20 fixed sample points.
MobiusFactorization factor_rational(const RationalMap& r,
                                    const std::optional<std::vector<std::size_t>>& pairing = std::nullopt);

/// Factorizations for distinct pairings (as multisets of zero/pole pairs), in
/// lexicographic permutation order, at most `limit` of them.
std::vector<MobiusFactorization> enumerate_pairings(const RationalMap& r, std::size_t limit);

}  // namespace hyperext
