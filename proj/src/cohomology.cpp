#include "pinext/cohomology.hpp"

#include "pinext/error.hpp"

#include <algorithm>
#include <numeric>

namespace pinext {

using modular::Residue;
using modular::Vec;

// ---------------------------------------------------------------------------
// Coefficients and cochains

void Coefficients::validate() const {
  for (int m : orders)
    if (m < 2) throw Error(ErrorCode::kInputError, "coefficient orders must be at least 2");
}

int Coefficients::size() const {
  int n = 1;
  for (int m : orders) n *= m;
  return n;
}

int Coefficients::encode(std::span<const int> residues) const {
  int index = 0;
  for (std::size_t k = 0; k < orders.size(); ++k) index = index * orders[k] + residues[k];
  return index;
}

std::vector<int> Coefficients::decode(int index) const {
  std::vector<int> out(orders.size());
  for (std::size_t k = orders.size(); k-- > 0;) {
    out[k] = index % orders[k];
    index /= orders[k];
  }
  return out;
}

namespace {

void check_values(const std::vector<int>& values, const Coefficients& coeffs, std::size_t expected) {
  if (values.size() != expected) throw Error(ErrorCode::kDimensionMismatch, "cochain table has the wrong size");
  const std::size_t r = coeffs.orders.size();
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < 0 || values[i] >= coeffs.orders[i % r])
      throw Error(ErrorCode::kInputError, "cochain value out of range for its coefficient factor");
}

void check_ambient(const GroupPtr& a, const Coefficients& ca, const GroupPtr& b, const Coefficients& cb) {
  if (!same_group(a, b) || !(ca == cb))
    throw Error(ErrorCode::kMismatchedAmbient, "cochains live over different groups or coefficients");
}

int add_mod(int a, int b, int m) { return (a + b) % m; }
int sub_mod(int a, int b, int m) { return ((a - b) % m + m) % m; }

}  // namespace

Cochain1::Cochain1(GroupPtr group, Coefficients coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)),
      values_(static_cast<std::size_t>(group_->order()) * coeffs_.rank(), 0) {
  coeffs_.validate();
}

Cochain1::Cochain1(GroupPtr group, Coefficients coeffs, std::vector<int> values)
    : group_(std::move(group)), coeffs_(std::move(coeffs)), values_(std::move(values)) {
  coeffs_.validate();
  check_values(values_, coeffs_, static_cast<std::size_t>(group_->order()) * coeffs_.rank());
}

std::span<const int> Cochain1::at(int g) const {
  return std::span<const int>(values_).subspan(index(g, 0), coeffs_.rank());
}

void Cochain1::set(int g, int factor, int v) {
  const int m = coeffs_.orders[factor];
  values_[index(g, factor)] = ((v % m) + m) % m;
}

bool Cochain1::is_normalized() const {
  for (int k = 0; k < coeffs_.rank(); ++k)
    if (value(0, k) != 0) return false;
  return true;
}

bool Cochain1::is_homomorphism() const {
  const int n = group_->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < coeffs_.rank(); ++k)
        if (value(group_->mul(a, b), k) != add_mod(value(a, k), value(b, k), coeffs_.orders[k])) return false;
  return true;
}

Cochain1 Cochain1::operator+(const Cochain1& other) const {
  check_ambient(group_, coeffs_, other.group_, other.coeffs_);
  Cochain1 out(*this);
  const std::size_t r = coeffs_.orders.size();
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.values_[i] = add_mod(values_[i], other.values_[i], coeffs_.orders[i % r]);
  return out;
}

Cochain1 Cochain1::operator-(const Cochain1& other) const {
  check_ambient(group_, coeffs_, other.group_, other.coeffs_);
  Cochain1 out(*this);
  const std::size_t r = coeffs_.orders.size();
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.values_[i] = sub_mod(values_[i], other.values_[i], coeffs_.orders[i % r]);
  return out;
}

Cochain2::Cochain2(GroupPtr group, Coefficients coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)),
      values_(static_cast<std::size_t>(group_->order()) * group_->order() * coeffs_.rank(), 0) {
  coeffs_.validate();
}

Cochain2::Cochain2(GroupPtr group, Coefficients coeffs, std::vector<int> values)
    : group_(std::move(group)), coeffs_(std::move(coeffs)), values_(std::move(values)) {
  coeffs_.validate();
  check_values(values_, coeffs_, static_cast<std::size_t>(group_->order()) * group_->order() * coeffs_.rank());
}

std::span<const int> Cochain2::at(int g, int h) const {
  return std::span<const int>(values_).subspan(index(g, h, 0), coeffs_.rank());
}

void Cochain2::set(int g, int h, int factor, int v) {
  const int m = coeffs_.orders[factor];
  values_[index(g, h, factor)] = ((v % m) + m) % m;
}

bool Cochain2::is_normalized() const {
  for (int g = 0; g < group_->order(); ++g)
    for (int k = 0; k < coeffs_.rank(); ++k)
      if (value(0, g, k) != 0 || value(g, 0, k) != 0) return false;
  return true;
}

bool Cochain2::satisfies_cocycle_identity() const {
  const FiniteGroup& G = *group_;
  const int n = G.order();
  for (int k = 0; k < coeffs_.rank(); ++k) {
    const int m = coeffs_.orders[k];
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        const int gh = G.mul(g, h);
        const int lhs_gh = value(g, h, k);
        for (int x = 0; x < n; ++x) {
          int lhs = add_mod(lhs_gh, value(gh, x, k), m);
          int rhs = add_mod(value(h, x, k), value(g, G.mul(h, x), k), m);
          if (lhs != rhs) return false;
        }
      }
  }
  return true;
}

Cochain2 Cochain2::operator+(const Cochain2& other) const {
  check_ambient(group_, coeffs_, other.group_, other.coeffs_);
  Cochain2 out(*this);
  const std::size_t r = coeffs_.orders.size();
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.values_[i] = add_mod(values_[i], other.values_[i], coeffs_.orders[i % r]);
  return out;
}

Cochain2 Cochain2::operator-(const Cochain2& other) const {
  check_ambient(group_, coeffs_, other.group_, other.coeffs_);
  Cochain2 out(*this);
  const std::size_t r = coeffs_.orders.size();
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.values_[i] = sub_mod(values_[i], other.values_[i], coeffs_.orders[i % r]);
  return out;
}

CohomClass::CohomClass(Cochain2 representative) : rep_(std::move(representative)) {
  if (!rep_.is_normalized()) throw Error(ErrorCode::kInvalidCocycle, "cochain is not normalized");
  if (!rep_.satisfies_cocycle_identity()) throw Error(ErrorCode::kInvalidCocycle, "cochain violates the cocycle identity");
}

Cochain2 d1(const Cochain1& c) {
  const FiniteGroup& G = *c.group();
  Cochain2 out(c.group(), c.coefficients());
  for (int k = 0; k < c.coefficients().rank(); ++k)
    for (int g = 0; g < G.order(); ++g)
      for (int h = 0; h < G.order(); ++h) out.set(g, h, k, c.value(g, k) + c.value(h, k) - c.value(G.mul(g, h), k));
  return out;
}

// ---------------------------------------------------------------------------
// Generator coordinates
//
// A normalized 2-cocycle is determined by its values f(x, s) for s in a
// generating set S: along a breadth-first spanning tree of the Cayley graph,
// f(g, hs) = f(g, h) + f(gh, s) - f(h, s). The cocycle identity holds on all
// triples iff that recursion is consistent on every (g, h, s). So ker d2 is
// the kernel of those consistency relations in the (|G|-1)|S| coordinates
// f(x, s), x != 1.

namespace {

class Frame {
 public:
  explicit Frame(const FiniteGroup& g) : g_(g), gens_(greedy_generating_set(g)) {
    const int n = g.order();
    parent_.assign(n, -1);
    via_.assign(n, -1);
    tree_edge_.assign(static_cast<std::size_t>(n) * gens_.size(), false);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::vector<int> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int h = queue[head];
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        int next = g.mul(h, gens_[s]);
        if (seen[next]) continue;
        seen[next] = true;
        parent_[next] = h;
        via_[next] = static_cast<int>(s);
        tree_edge_[static_cast<std::size_t>(h) * gens_.size() + s] = true;
        queue.push_back(next);
        order_.push_back(next);
      }
    }
  }

  const FiniteGroup& group() const { return g_; }
  const std::vector<int>& gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }
  std::size_t num_vars() const { return static_cast<std::size_t>(g_.order() - 1) * gens_.size(); }
  std::size_t var(int x, std::size_t s) const { return static_cast<std::size_t>(x - 1) * gens_.size() + s; }

  // Adds sign * f(g, h), expressed in coordinates, to `row`.
  void accumulate_two(Vec& row, int g, int h, Residue sign, Residue m) const {
    for (int x = h; x != 0; x = parent_[x]) {
      const int p = parent_[x];
      const std::size_t s = static_cast<std::size_t>(via_[x]);
      const int gp = g_.mul(g, p);
      if (gp != 0) row[var(gp, s)] = modular::reduce_mod(row[var(gp, s)] + sign, m);
      if (p != 0) row[var(p, s)] = modular::reduce_mod(row[var(p, s)] - sign, m);
    }
  }

  // Adds sign * c(h) for a homomorphism c given on generators.
  void accumulate_one(Vec& row, int h, Residue sign, Residue m) const {
    for (int x = h; x != 0; x = parent_[x]) {
      const std::size_t s = static_cast<std::size_t>(via_[x]);
      row[s] = modular::reduce_mod(row[s] + sign, m);
    }
  }

  template <typename Emit>
  void two_cocycle_relations(Residue m, Emit emit) const {
    const int n = g_.order();
    for (int g = 1; g < n; ++g) {
      for (int h = 0; h < n; ++h) {
        for (std::size_t s = 0; s < gens_.size(); ++s) {
          if (tree_edge_[static_cast<std::size_t>(h) * gens_.size() + s]) continue;
          Vec row(num_vars(), 0);
          const int hs = g_.mul(h, gens_[s]);
          accumulate_two(row, g, hs, 1, m);
          accumulate_two(row, g, h, m - 1, m);
          const int gh = g_.mul(g, h);
          if (gh != 0) row[var(gh, s)] = modular::reduce_mod(row[var(gh, s)] - 1, m);
          if (h != 0) row[var(h, s)] = modular::reduce_mod(row[var(h, s)] + 1, m);
          emit(row);
        }
      }
    }
  }

  template <typename Emit>
  void homomorphism_relations(Residue m, Emit emit) const {
    const int n = g_.order();
    for (int h = 0; h < n; ++h) {
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        if (tree_edge_[static_cast<std::size_t>(h) * gens_.size() + s]) continue;
        Vec row(num_gens(), 0);
        accumulate_one(row, g_.mul(h, gens_[s]), 1, m);
        accumulate_one(row, h, m - 1, m);
        row[s] = modular::reduce_mod(row[s] - 1, m);
        emit(row);
      }
    }
  }

  Vec coordinates_of(const Cochain2& f, int factor) const {
    Vec out(num_vars());
    for (int x = 1; x < g_.order(); ++x)
      for (std::size_t s = 0; s < gens_.size(); ++s) out[var(x, s)] = f.value(x, gens_[s], factor);
    return out;
  }

  // Expands coordinates into the full table of one factor.
  std::vector<int> expand_two(const Vec& coords, Residue m) const {
    const int n = g_.order();
    auto at = [&](int x, int s) -> Residue { return x == 0 ? 0 : coords[var(x, static_cast<std::size_t>(s))]; };
    std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
    for (int g = 0; g < n; ++g) {
      for (int h : order_) {
        const int p = parent_[h];
        const int s = via_[h];
        Residue v = table[static_cast<std::size_t>(g) * n + p] + at(g_.mul(g, p), s) - at(p, s);
        table[static_cast<std::size_t>(g) * n + h] = static_cast<int>(modular::reduce_mod(v, m));
      }
    }
    return table;
  }

  std::vector<int> expand_one(const Vec& gen_values, Residue m) const {
    std::vector<int> out(g_.order(), 0);
    for (int h : order_)
      out[h] = static_cast<int>(modular::reduce_mod(out[parent_[h]] + gen_values[via_[h]], m));
    return out;
  }

  // Coordinates of d1 applied to the indicator cochain of g.
  Vec coboundary_of_point(int g) const {
    Vec out(num_vars(), 0);
    for (int x = 1; x < g_.order(); ++x)
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        Residue v = (x == g) + (gens_[s] == g) - (g_.mul(x, gens_[s]) == g);
        out[var(x, s)] = v;
      }
    return out;
  }

 private:
  const FiniteGroup& g_;
  std::vector<int> gens_;
  std::vector<int> parent_;
  std::vector<int> via_;
  std::vector<bool> tree_edge_;
  std::vector<int> order_;
};

Vec reduce_all(Vec v, Residue m) {
  for (auto& x : v) x = modular::reduce_mod(x, m);
  return v;
}

std::vector<Vec> coboundary_generators(const Frame& frame, Residue m) {
  std::vector<Vec> out;
  for (int g = 1; g < frame.group().order(); ++g) out.push_back(reduce_all(frame.coboundary_of_point(g), m));
  return out;
}

void put_factor(std::vector<int>& values, const std::vector<int>& table, int rank, int factor) {
  for (std::size_t i = 0; i < table.size(); ++i) values[i * rank + factor] = table[i];
}

}  // namespace

namespace detail {
struct SecondCohomologyData {
  std::vector<modular::Subquotient> factors;
};
}  // namespace detail

// ---------------------------------------------------------------------------
// H^1

long long FirstCohomology::size() const {
  long long n = 1;
  for (long long o : orders) n *= o;
  return n;
}

std::vector<Cochain1> FirstCohomology::elements() const {
  std::vector<Cochain1> out{Cochain1(group, coeffs)};
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<Cochain1> next;
    for (const auto& c : out) {
      Cochain1 acc = c;
      for (long long j = 0; j < orders[k]; ++j) {
        next.push_back(acc);
        acc = acc + basis[k];
      }
    }
    out = std::move(next);
  }
  return out;
}

FirstCohomology h1(const GroupPtr& g, const Coefficients& coeffs) {
  coeffs.validate();
  FirstCohomology out{g, coeffs, {}, {}};
  if (g->order() == 1) return out;
  Frame frame(*g);
  const int rank = coeffs.rank();
  for (int factor = 0; factor < rank; ++factor) {
    const Residue m = coeffs.orders[factor];
    modular::RowSpan relations(frame.num_gens(), m);
    frame.homomorphism_relations(m, [&](const Vec& row) { relations.add(row); });
    modular::Subquotient module(relations.kernel(), {}, frame.num_gens(), m);
    for (std::size_t k = 0; k < module.orders().size(); ++k) {
      std::vector<int> values(static_cast<std::size_t>(g->order()) * rank, 0);
      put_factor(values, frame.expand_one(module.basis()[k], m), rank, factor);
      out.basis.emplace_back(g, coeffs, std::move(values));
      out.orders.push_back(module.orders()[k]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// H^2

SecondCohomology h2(const GroupPtr& g, const Coefficients& coeffs) {
  coeffs.validate();
  SecondCohomology out;
  out.group_ = g;
  out.coeffs_ = coeffs;
  auto data = std::make_shared<detail::SecondCohomologyData>();
  if (g->order() > 1) {
    Frame frame(*g);
    const int rank = coeffs.rank();
    for (int factor = 0; factor < rank; ++factor) {
      const Residue m = coeffs.orders[factor];
      modular::RowSpan relations(frame.num_vars(), m);
      frame.two_cocycle_relations(m, [&](const Vec& row) { relations.add(row); });
      modular::Subquotient module(relations.kernel(), coboundary_generators(frame, m), frame.num_vars(), m);
      for (std::size_t k = 0; k < module.orders().size(); ++k) {
        std::vector<int> values(static_cast<std::size_t>(g->order()) * g->order() * rank, 0);
        put_factor(values, frame.expand_two(module.basis()[k], m), rank, factor);
        out.basis_.emplace_back(g, coeffs, std::move(values));
        out.orders_.push_back(module.orders()[k]);
      }
      data->factors.push_back(std::move(module));
    }
  }
  out.data_ = std::move(data);
  return out;
}

std::vector<long long> SecondCohomology::coordinates(const Cochain2& f) const {
  check_ambient(group_, coeffs_, f.group(), f.coefficients());
  if (!f.is_cocycle()) throw Error(ErrorCode::kInvalidCocycle, "coordinates requested for a non-cocycle");
  std::vector<long long> out;
  if (group_->order() == 1) return out;
  Frame frame(*group_);
  for (int factor = 0; factor < coeffs_.rank(); ++factor) {
    auto coords = data_->factors[factor].coordinates(frame.coordinates_of(f, factor));
    if (!coords) throw Error(ErrorCode::kNoSolution, "cocycle outside the computed cocycle space");
    out.insert(out.end(), coords->begin(), coords->end());
  }
  return out;
}

Cochain2 SecondCohomology::from_coordinates(const std::vector<long long>& coords) const {
  if (coords.size() != basis_.size()) throw Error(ErrorCode::kDimensionMismatch, "wrong number of coordinates");
  Cochain2 out(group_, coeffs_);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (long long j = 0; j < modular::reduce_mod(coords[k], orders_[k]); ++j) out = out + basis_[k];
  return out;
}

std::vector<Cochain2> SecondCohomology::all_classes() const {
  std::vector<std::vector<long long>> tuples{{}};
  for (long long order : orders_) {
    std::vector<std::vector<long long>> next;
    for (const auto& t : tuples)
      for (long long j = 0; j < order; ++j) {
        next.push_back(t);
        next.back().push_back(j);
      }
    tuples = std::move(next);
  }
  std::vector<Cochain2> out;
  for (const auto& t : tuples) out.push_back(from_coordinates(t));
  return out;
}

// ---------------------------------------------------------------------------
// Class arithmetic

std::optional<Cochain1> solve_coboundary(const Cochain2& f) {
  if (!f.is_cocycle()) throw Error(ErrorCode::kInvalidCocycle, "only cocycles can be coboundaries");
  const GroupPtr& g = f.group();
  const Coefficients& coeffs = f.coefficients();
  Cochain1 out(g, coeffs);
  if (g->order() == 1) return out;
  Frame frame(*g);
  for (int factor = 0; factor < coeffs.rank(); ++factor) {
    const Residue m = coeffs.orders[factor];
    modular::CombinationSolver solver(coboundary_generators(frame, m), frame.num_vars(), m);
    auto solution = solver.solve(frame.coordinates_of(f, factor));
    if (!solution) return std::nullopt;
    for (int x = 1; x < g->order(); ++x) out.set(x, factor, static_cast<int>((*solution)[x - 1]));
  }
  return out;
}

bool class_eq(const CohomClass& x, const CohomClass& y) {
  check_ambient(x.group(), x.coefficients(), y.group(), y.coefficients());
  return solve_coboundary(x.representative() - y.representative()).has_value();
}

bool is_zero_class(const CohomClass& x) { return solve_coboundary(x.representative()).has_value(); }

Cochain2 pullback_cochain(const Cochain2& f, const GroupHom& phi) {
  if (!same_group(phi.target, f.group()))
    throw Error(ErrorCode::kMismatchedAmbient, "homomorphism does not land in the cochain's group");
  const int n = phi.source->order();
  const int rank = f.coefficients().rank();
  std::vector<int> values(static_cast<std::size_t>(n) * n * rank);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto v = f.at(phi(a), phi(b));
      std::copy(v.begin(), v.end(), values.begin() + (static_cast<std::ptrdiff_t>(a) * n + b) * rank);
    }
  return Cochain2(phi.source, f.coefficients(), std::move(values));
}

Cochain1 pullback_cochain(const Cochain1& c, const GroupHom& phi) {
  if (!same_group(phi.target, c.group()))
    throw Error(ErrorCode::kMismatchedAmbient, "homomorphism does not land in the cochain's group");
  std::vector<int> values;
  for (int a = 0; a < phi.source->order(); ++a) {
    auto v = c.at(phi(a));
    values.insert(values.end(), v.begin(), v.end());
  }
  return Cochain1(phi.source, c.coefficients(), std::move(values));
}

CohomClass restrict_class(const CohomClass& x, const GroupHom& phi) {
  return CohomClass(pullback_cochain(x.representative(), phi));
}

CohomClass cup11(const Cochain1& a, const Cochain1& b) {
  const Coefficients f2 = Coefficients::cyclic(2);
  if (!(a.coefficients() == f2) || !(b.coefficients() == f2))
    throw Error(ErrorCode::kNonF2Coefficients, "cup products are supported with Z/2 coefficients only");
  check_ambient(a.group(), a.coefficients(), b.group(), b.coefficients());
  if (!a.is_homomorphism() || !b.is_homomorphism())
    throw Error(ErrorCode::kInvalidCocycle, "cup product factors must be homomorphisms");
  const int n = a.group()->order();
  Cochain2 out(a.group(), f2);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) out.set(g, h, 0, a.value(g) * b.value(h));
  return CohomClass(std::move(out));
}

// ---------------------------------------------------------------------------
// Polynomial coordinates over elementary abelian 2-groups

namespace {

// Bit mask of basis elements whose product is each group element.
std::vector<int> dual_masks(const FiniteGroup& g, const std::vector<int>& basis) {
  if (!g.is_abelian() || g.exponent() > 2)
    throw Error(ErrorCode::kNotElementaryAbelian, "group is not an elementary abelian 2-group");
  const int n = static_cast<int>(basis.size());
  if ((1 << n) != g.order())
    throw Error(ErrorCode::kNotElementaryAbelian, "basis size does not match the group order");
  std::vector<int> mask(g.order(), -1);
  for (int subset = 0; subset < (1 << n); ++subset) {
    int x = 0;
    for (int i = 0; i < n; ++i)
      if (subset >> i & 1) x = g.mul(x, basis[i]);
    if (mask[x] >= 0) throw Error(ErrorCode::kNotElementaryAbelian, "declared basis is not independent");
    mask[x] = subset;
  }
  return mask;
}

}  // namespace

Cochain1 dual_character(const GroupPtr& g, const std::vector<int>& basis, int i) {
  std::vector<int> mask = dual_masks(*g, basis);
  std::vector<int> values(g->order());
  for (int x = 0; x < g->order(); ++x) values[x] = mask[x] >> i & 1;
  return Cochain1(g, Coefficients::cyclic(2), std::move(values));
}

int PolyCoordinates::coefficient(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (auto [a, b, c] : monomials)
    if (a == i && b == j) return c;
  return 0;
}

std::string PolyCoordinates::to_string() const {
  std::string out;
  for (auto [i, j, c] : monomials) {
    if (!c) continue;
    if (!out.empty()) out += "+";
    out += i == j ? "v" + std::to_string(i + 1) + "^2" : "v" + std::to_string(i + 1) + "v" + std::to_string(j + 1);
  }
  return out.empty() ? "0" : out;
}

PolyCoordinates express_poly(const CohomClass& x, const std::vector<int>& basis) {
  if (!(x.coefficients() == Coefficients::cyclic(2)))
    throw Error(ErrorCode::kNonF2Coefficients, "polynomial coordinates need Z/2 coefficients");
  const GroupPtr& g = x.group();
  dual_masks(*g, basis);
  const int n = static_cast<int>(basis.size());
  PolyCoordinates out;
  out.rank = n;
  std::vector<Cochain1> v;
  for (int i = 0; i < n; ++i) v.push_back(dual_character(g, basis, i));

  SecondCohomology h = h2(g, Coefficients::cyclic(2));
  std::vector<Vec> monomial_coords;
  std::vector<std::pair<int, int>> index;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto coords = h.coordinates(cup11(v[i], v[j]).representative());
      monomial_coords.emplace_back(coords.begin(), coords.end());
      index.emplace_back(i, j);
    }
  const std::size_t dim = static_cast<std::size_t>(h.dimension());
  if (monomial_coords.size() != dim || modular::howell_form(monomial_coords, dim, 2).size() != dim)
    throw Error(ErrorCode::kNoSolution, "monomial classes do not form a basis of H^2");
  auto target = h.coordinates(x.representative());
  modular::CombinationSolver solver(monomial_coords, dim, 2);
  auto solution = solver.solve(Vec(target.begin(), target.end()));
  if (!solution) throw Error(ErrorCode::kNoSolution, "class is not a combination of monomials");
  for (std::size_t k = 0; k < index.size(); ++k)
    if ((*solution)[k] != 0) out.monomials.emplace_back(index[k].first, index[k].second, 1);

  // Symmetric iff all squares agree and all mixed terms agree.
  std::optional<int> square, mixed;
  bool symmetric = true;
  for (auto [i, j] : index) {
    auto& slot = i == j ? square : mixed;
    const int c = out.coefficient(i, j);
    if (!slot) slot = c;
    symmetric = symmetric && *slot == c;
  }
  if (symmetric) {
    std::string form;
    if (mixed.value_or(0)) form = "E2";
    if (square.value_or(0)) form += form.empty() ? "E1^2" : "+E1^2";
    out.symmetric_form = form.empty() ? "0" : form;
  }
  return out;
}

CohomClass class_from_poly(const GroupPtr& g, const std::vector<int>& basis,
                           const std::vector<std::tuple<int, int, int>>& monomials) {
  Cochain2 sum(g, Coefficients::cyclic(2));
  for (auto [i, j, c] : monomials)
    if (c % 2) sum = sum + cup11(dual_character(g, basis, i), dual_character(g, basis, j)).representative();
  return CohomClass(std::move(sum));
}

// ---------------------------------------------------------------------------
// Bar resolution matrices

std::vector<Vec> bar_coboundary_matrix(const FiniteGroup& g, int degree, int m) {
  const int n = g.order();
  const int q = n - 1;
  std::vector<Vec> rows;
  if (degree == 1) {
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) {
        Vec row(q, 0);
        row[a - 1] += 1;
        row[b - 1] += 1;
        if (int ab = g.mul(a, b); ab != 0) row[ab - 1] -= 1;
        rows.push_back(reduce_all(std::move(row), m));
      }
    return rows;
  }
  if (degree != 2) throw Error(ErrorCode::kInputError, "only d1 and d2 are available");
  auto col = [&](int a, int b) { return static_cast<std::size_t>(a - 1) * q + (b - 1); };
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c) {
        Vec row(static_cast<std::size_t>(q) * q, 0);
        row[col(b, c)] += 1;
        if (int ab = g.mul(a, b); ab != 0) row[col(ab, c)] -= 1;
        if (int bc = g.mul(b, c); bc != 0) row[col(a, bc)] += 1;
        row[col(a, b)] -= 1;
        rows.push_back(reduce_all(std::move(row), m));
      }
  return rows;
}

// ---------------------------------------------------------------------------
// Random sampling

Cochain1 random_cochain1(const GroupPtr& g, const Coefficients& coeffs, std::mt19937_64& rng) {
  Cochain1 c(g, coeffs);
  for (int x = 1; x < g->order(); ++x)
    for (int k = 0; k < coeffs.rank(); ++k)
      c.set(x, k, std::uniform_int_distribution<int>(0, coeffs.orders[k] - 1)(rng));
  return c;
}

Cochain2 random_cocycle(const SecondCohomology& h, std::mt19937_64& rng) {
  std::vector<long long> coords;
  for (long long order : h.invariant_factors())
    coords.push_back(std::uniform_int_distribution<long long>(0, order - 1)(rng));
  return h.from_coordinates(coords) + d1(random_cochain1(h.group(), h.coefficients(), rng));
}

}  // namespace pinext
