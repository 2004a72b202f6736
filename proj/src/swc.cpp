#include "pinext/swc.hpp"

#include "pinext/error.hpp"

#include <map>

namespace pinext {

namespace {

void check_orthogonal(const RationalMatrix& m, int dim) {
  if (m.dim() != dim) throw Error(ErrorCode::kDimensionMismatch, "matrix has the wrong size");
  if (!m.is_orthogonal()) throw Error(ErrorCode::kNotOrthogonal, "matrix is not orthogonal");
}

void require_dim(const OrthogonalRep& rho) {
  if (rho.dim() < 2) throw Error(ErrorCode::kDimensionTooSmall, "Pin analysis needs dimension at least 2; pad first");
}

}  // namespace

OrthogonalRep OrthogonalRep::from_generators(GroupPtr g, int dim,
                                             const std::vector<std::pair<int, RationalMatrix>>& generator_images) {
  if (dim < 0) throw Error(ErrorCode::kInputError, "negative dimension");
  const int n = g->order();
  std::vector<std::optional<RationalMatrix>> images(n);
  images[0] = RationalMatrix::identity(dim);
  for (const auto& [s, m] : generator_images) {
    if (s < 0 || s >= n) throw Error(ErrorCode::kInputError, "generator index out of range");
    check_orthogonal(m, dim);
  }
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (const auto& [s, m] : generator_images) {
      const int y = g->mul(x, s);
      RationalMatrix image = *images[x] * m;
      if (!images[y]) {
        images[y] = std::move(image);
        queue.push_back(y);
      } else if (*images[y] != image) {
        throw Error(ErrorCode::kNotAHomomorphism, "generator images violate a relation of the group");
      }
    }
  }
  std::vector<RationalMatrix> out;
  for (auto& m : images) {
    if (!m) throw Error(ErrorCode::kInputError, "images are not given on a generating set");
    out.push_back(std::move(*m));
  }
  return OrthogonalRep(std::move(g), dim, std::move(out));
}

OrthogonalRep OrthogonalRep::from_images(GroupPtr g, std::vector<RationalMatrix> images) {
  const int n = g->order();
  if (static_cast<int>(images.size()) != n) throw Error(ErrorCode::kInputError, "one matrix per element is required");
  const int dim = images[0].dim();
  for (const auto& m : images) check_orthogonal(m, dim);
  if (!images[0].is_identity()) throw Error(ErrorCode::kNotAHomomorphism, "identity is not sent to I");
  for (int s : greedy_generating_set(*g))
    for (int x = 0; x < n; ++x)
      if (images[x] * images[s] != images[g->mul(x, s)])
        throw Error(ErrorCode::kNotAHomomorphism, "images do not respect the group law");
  return OrthogonalRep(std::move(g), dim, std::move(images));
}

OrthogonalRep OrthogonalRep::trivial(GroupPtr g, int dim) {
  std::vector<RationalMatrix> images(g->order(), RationalMatrix::identity(dim));
  return OrthogonalRep(std::move(g), dim, std::move(images));
}

std::pair<GeneratedGroup, GroupHom> OrthogonalRep::image() const {
  std::vector<RationalMatrix> gens;
  for (int s : greedy_generating_set(*group_)) gens.push_back(images_[s]);
  GeneratedGroup img = generate_matrix_group(dim_, gens, group_->order());
  std::map<RationalMatrix, int> index;
  for (int k = 0; k < img.group->order(); ++k) index.emplace(img.matrices[k], k);
  std::vector<int> map;
  for (const auto& m : images_) map.push_back(index.at(m));
  GroupHom onto = hom_from_map(group_, img.group, std::move(map));
  return {std::move(img), std::move(onto)};
}

OrthogonalRep direct_sum(const OrthogonalRep& a, const OrthogonalRep& b) {
  if (!same_group(a.group(), b.group())) throw Error(ErrorCode::kMismatchedAmbient, "representations of different groups");
  std::vector<RationalMatrix> images;
  for (int g = 0; g < a.group()->order(); ++g) images.push_back(RationalMatrix::direct_sum(a(g), b(g)));
  return OrthogonalRep::from_images(a.group(), std::move(images));
}

OrthogonalRep conjugate(const OrthogonalRep& rho, const RationalMatrix& m) {
  check_orthogonal(m, rho.dim());
  RationalMatrix mt = m.transpose();
  std::vector<RationalMatrix> images;
  for (const auto& x : rho.images()) images.push_back(m * x * mt);
  return OrthogonalRep::from_images(rho.group(), std::move(images));
}

OrthogonalRep compose(const OrthogonalRep& rho, const GroupHom& phi) {
  if (!same_group(phi.target, rho.group())) throw Error(ErrorCode::kMismatchedAmbient, "map does not land in the group");
  std::vector<RationalMatrix> images;
  for (int g = 0; g < phi.source->order(); ++g) images.push_back(rho(phi(g)));
  return OrthogonalRep::from_images(phi.source, std::move(images));
}

OrthogonalRep pad(const OrthogonalRep& rho, int dim) {
  if (dim <= rho.dim()) return rho;
  return direct_sum(rho, OrthogonalRep::trivial(rho.group(), dim - rho.dim()));
}

Cochain1 w1(const OrthogonalRep& rho) {
  Cochain1 out(rho.group(), Coefficients::cyclic(2));
  for (int g = 0; g < rho.group()->order(); ++g) out.set(g, 0, rho(g).determinant() < 0 ? 1 : 0);
  return out;
}

CohomClass w2(const OrthogonalRep& rho) {
  require_dim(rho);
  auto [img, onto] = rho.image();
  return CohomClass(pullback_cochain(pin_cocycles(img.group, img.matrices).plus, onto));
}

const LiftVerdict& SWReport::verdict(PinVariant v) const {
  for (const auto& x : verdicts)
    if (x.variant == v) return x;
  throw Error(ErrorCode::kInputError, "no verdict for this variant");
}

SWReport lifting_report(const OrthogonalRep& rho) {
  require_dim(rho);
  auto [img, onto] = rho.image();
  PinCocycleReport pin = pin_cocycles(img.group, img.matrices);
  Cochain1 first = w1(rho);
  CohomClass second(pullback_cochain(pin.plus, onto));
  CohomClass square = cup11(first, first);

  SWReport report{first, second, {}};
  struct Case {
    PinVariant variant;
    CohomClass obstruction;
    const Cochain2& cover;
  };
  for (const Case& c : {Case{PinVariant::kTilde, square, pin.tilde}, Case{PinVariant::kPlus, second, pin.plus},
                        Case{PinVariant::kMinus, second + square, pin.minus}}) {
    LiftVerdict v{c.variant, is_zero_class(c.obstruction), false, c.obstruction.representative(), 0, std::nullopt, "", false};
    CentralExtension cover = from_cocycle(c.cover);
    LiftReport lift = decide_lift(onto, cover);
    v.lifts_by_extension = lift.lifts;
    v.count = lift.count;
    v.witness = lift.witness;
    CentralExtension pulled = pullback(onto, cover);
    v.pullback_type = identify(*pulled.extension);
    v.pullback_split = is_zero_class(to_class(pulled));
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

}  // namespace pinext
