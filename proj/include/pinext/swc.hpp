#pragma once

#include "pinext/cliff.hpp"
#include "pinext/cohomology.hpp"
#include "pinext/ext.hpp"
#include "pinext/group.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pinext {

/// A homomorphism G -> O(n) over Q, stored per element.
class OrthogonalRep {
 public:
  /// Extends generator images multiplicatively. Throws NotOrthogonal,
  /// NotAHomomorphism if a relation fails, InputError if the indices do not
  /// generate G.
  static OrthogonalRep from_generators(GroupPtr g, int dim,
                                       const std::vector<std::pair<int, RationalMatrix>>& generator_images);
  /// Checks a full element table.
  static OrthogonalRep from_images(GroupPtr g, std::vector<RationalMatrix> images);
  static OrthogonalRep trivial(GroupPtr g, int dim);

  const GroupPtr& group() const { return group_; }
  int dim() const { return dim_; }
  const RationalMatrix& operator()(int g) const { return images_[g]; }
  const std::vector<RationalMatrix>& images() const { return images_; }

  /// The image as a matrix group, with the map G -> image.
  std::pair<GeneratedGroup, GroupHom> image() const;

  friend bool operator==(const OrthogonalRep& a, const OrthogonalRep& b) {
    return same_group(a.group_, b.group_) && a.images_ == b.images_;
  }

 private:
  OrthogonalRep(GroupPtr g, int dim, std::vector<RationalMatrix> images)
      : group_(std::move(g)), dim_(dim), images_(std::move(images)) {}

  GroupPtr group_;
  int dim_;
  std::vector<RationalMatrix> images_;
};

OrthogonalRep direct_sum(const OrthogonalRep& a, const OrthogonalRep& b);
/// g -> m rho(g) m^T for an orthogonal m.
OrthogonalRep conjugate(const OrthogonalRep& rho, const RationalMatrix& m);
/// rho o phi
OrthogonalRep compose(const OrthogonalRep& rho, const GroupHom& phi);
/// rho plus trivial summands up to dimension `dim`.
OrthogonalRep pad(const OrthogonalRep& rho, int dim);

/// g -> (1 - det rho(g)) / 2
Cochain1 w1(const OrthogonalRep& rho);
/// The Pin+ cocycle of the image group pulled back to G. Throws
/// DimensionTooSmall below dimension 2.
CohomClass w2(const OrthogonalRep& rho);

struct LiftVerdict {
  PinVariant variant;
  /// From class arithmetic.
  bool lifts = false;
  /// From decide_lift against the explicit preimage; must agree.
  bool lifts_by_extension = false;
  Cochain2 obstruction;
  long long count = 0;
  std::optional<std::vector<int>> witness;
  /// identify() of the pullback of the cover along rho.
  std::string pullback_type;
  bool pullback_split = false;
};

struct SWReport {
  Cochain1 w1;
  CohomClass w2;
  /// tilde, plus, minus in that order.
  std::vector<LiftVerdict> verdicts;

  const LiftVerdict& verdict(PinVariant v) const;
};

SWReport lifting_report(const OrthogonalRep& rho);

}  // namespace pinext
