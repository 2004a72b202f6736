#include "pinext/modular.hpp"

#include "pinext/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace pinext::modular {

Gcdex gcdex(Residue a, Residue b) {
  // Extended Euclid on (a, b) tracking s, t with s*a + t*b = r.
  Residue old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Residue q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  if (old_r == 0) return {0, 1, 0, 0, 1};
  return {old_r, old_s, old_t, -b / old_r, a / old_r};
}

Residue inverse_unit(Residue a, Residue m) {
  Gcdex e = gcdex(reduce_mod(a, m), m);
  if (e.g != 1) throw Error(ErrorCode::kNoSolution, "element is not a unit");
  return reduce_mod(e.s, m);
}

Residue unit_normalizer(Residue a, Residue m) {
  a = reduce_mod(a, m);
  if (a == 0 || m == 1) return 1;
  Residue g = std::gcd(a, m);
  Residue m_prime = m / g;
  Residue w = m_prime == 1 ? 1 : inverse_unit(a / g, m_prime);
  while (std::gcd(w, m) != 1) w += m_prime;
  return w % m;
}

namespace {

void axpy(Vec& y, Residue a, const Vec& x, Residue m) {
  if (a == 0) return;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (x[k] != 0) y[k] = reduce_mod(y[k] + a * x[k], m);
}

void scale(Vec& y, Residue a, Residue m) {
  for (auto& v : y) v = reduce_mod(v * a, m);
}

// rows (r, i) <- (s*r + t*i, u*r + v*i)
void combine_rows(Vec& row_r, Vec& row_i, const Gcdex& e, Residue m) {
  for (std::size_t k = 0; k < row_r.size(); ++k) {
    Residue x = row_r[k], y = row_i[k];
    if (x == 0 && y == 0) continue;
    row_r[k] = reduce_mod(reduce_mod(e.s, m) * x + reduce_mod(e.t, m) * y, m);
    row_i[k] = reduce_mod(reduce_mod(e.u, m) * x + reduce_mod(e.v, m) * y, m);
  }
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

std::size_t leading(const Vec& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) return k;
  return v.size();
}

}  // namespace

std::vector<Vec> howell_form(std::vector<Vec> a, std::size_t ncols, Residue m) {
  if (m == 1) return {};
  for (auto& row : a) {
    if (row.size() != ncols) throw Error(ErrorCode::kDimensionMismatch, "row length does not match column count");
    for (auto& x : row) x = reduce_mod(x, m);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      Gcdex e = gcdex(a[r][c], a[i][c]);
      combine_rows(a[r], a[i], e, m);
    }
    if (a[r][c] == 0) continue;
    scale(a[r], unit_normalizer(a[r][c], m), m);
    const Residue p = a[r][c];
    for (std::size_t k = 0; k < r; ++k) {
      Residue q = a[k][c] / p;
      if (q != 0) axpy(a[k], m - q, a[r], m);
    }
    if (p != 1) {
      Vec annihilated = a[r];
      scale(annihilated, m / p, m);
      if (!is_zero(annihilated)) a.push_back(std::move(annihilated));
    }
    ++r;
  }
  a.resize(std::min(r, a.size()));
  return a;
}

Vec reduce_against(const std::vector<Vec>& howell_rows, Vec v, std::size_t limit, Residue m) {
  for (const Vec& row : howell_rows) {
    std::size_t c = leading(row);
    if (c >= limit) break;
    if (v[c] == 0) continue;
    Residue q = v[c] / row[c];
    if (q != 0) axpy(v, m - q, row, m);
  }
  return v;
}

// ---------------------------------------------------------------------------
// RowSpan

struct RowSpan::Gf2State {
  std::size_t words;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<int> pivot_row;  // per column, -1 when not a pivot

  explicit Gf2State(std::size_t ncols) : words((ncols + 63) / 64), pivot_row(ncols, -1) {}

  void insert(std::vector<std::uint64_t> v) {
    // Rows are fully reduced, so clearing one pivot never touches another.
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = v[w]; bits; bits &= bits - 1) {
        std::size_t c = w * 64 + std::countr_zero(bits);
        int pr = pivot_row[c];
        if (pr < 0) continue;
        for (std::size_t k = 0; k < words; ++k) v[k] ^= rows[pr][k];
      }
    }
    std::size_t c = 0;
    for (; c / 64 < words; c += 64)
      if (v[c / 64]) break;
    if (c / 64 >= words) return;
    c += std::countr_zero(v[c / 64]);
    for (auto& row : rows)
      if ((row[c / 64] >> (c % 64)) & 1u)
        for (std::size_t k = 0; k < words; ++k) row[k] ^= v[k];
    pivot_row[c] = static_cast<int>(rows.size());
    rows.push_back(std::move(v));
  }
};

RowSpan::RowSpan(std::size_t ncols, Residue m) : ncols_(ncols), m_(m) {
  if (m < 1) throw Error(ErrorCode::kInputError, "modulus must be positive");
  if (m == 2) gf2_ = new Gf2State(ncols);
}

RowSpan::~RowSpan() { delete gf2_; }

RowSpan::RowSpan(RowSpan&& other) noexcept
    : ncols_(other.ncols_), m_(other.m_), howell_(std::move(other.howell_)),
      pending_(std::move(other.pending_)), gf2_(std::exchange(other.gf2_, nullptr)) {}

RowSpan& RowSpan::operator=(RowSpan&& other) noexcept {
  if (this != &other) {
    delete gf2_;
    ncols_ = other.ncols_;
    m_ = other.m_;
    howell_ = std::move(other.howell_);
    pending_ = std::move(other.pending_);
    gf2_ = std::exchange(other.gf2_, nullptr);
  }
  return *this;
}

void RowSpan::add(const Vec& row) {
  if (row.size() != ncols_) throw Error(ErrorCode::kDimensionMismatch, "row length does not match column count");
  if (gf2_) {
    std::vector<std::uint64_t> bits(gf2_->words, 0);
    for (std::size_t c = 0; c < ncols_; ++c)
      if (reduce_mod(row[c], 2)) bits[c / 64] |= std::uint64_t{1} << (c % 64);
    gf2_->insert(std::move(bits));
    return;
  }
  pending_.push_back(row);
  if (pending_.size() >= 256) flush();
}

void RowSpan::flush() {
  if (pending_.empty()) return;
  std::vector<Vec> all = std::move(howell_);
  for (auto& row : pending_) all.push_back(std::move(row));
  pending_.clear();
  howell_ = howell_form(std::move(all), ncols_, m_);
}

std::vector<Vec> RowSpan::basis() {
  if (!gf2_) {
    flush();
    return howell_;
  }
  std::vector<std::pair<std::size_t, Vec>> keyed;
  for (std::size_t c = 0; c < ncols_; ++c) {
    int pr = gf2_->pivot_row[c];
    if (pr < 0) continue;
    Vec row(ncols_, 0);
    for (std::size_t k = 0; k < ncols_; ++k) row[k] = (gf2_->rows[pr][k / 64] >> (k % 64)) & 1u;
    keyed.emplace_back(c, std::move(row));
  }
  std::vector<Vec> out;
  for (auto& [c, row] : keyed) out.push_back(std::move(row));
  return out;
}

std::vector<Vec> RowSpan::kernel() {
  if (gf2_) {
    std::vector<Vec> out;
    for (std::size_t f = 0; f < ncols_; ++f) {
      if (gf2_->pivot_row[f] >= 0) continue;
      Vec x(ncols_, 0);
      x[f] = 1;
      for (std::size_t c = 0; c < ncols_; ++c) {
        int pr = gf2_->pivot_row[c];
        if (pr >= 0) x[c] = (gf2_->rows[pr][f / 64] >> (f % 64)) & 1u;
      }
      out.push_back(std::move(x));
    }
    return out;
  }
  flush();
  // Howell form of [H^T | I]; rows vanishing on the first block carry the kernel.
  const std::size_t r = howell_.size();
  std::vector<Vec> transposed(ncols_, Vec(r + ncols_, 0));
  for (std::size_t j = 0; j < ncols_; ++j) {
    for (std::size_t i = 0; i < r; ++i) transposed[j][i] = howell_[i][j];
    transposed[j][r + j] = 1;
  }
  std::vector<Vec> h = howell_form(std::move(transposed), r + ncols_, m_);
  std::vector<Vec> out;
  for (const Vec& row : h) {
    if (leading(row) < r) continue;
    out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(r), row.end());
  }
  return out;
}

std::vector<Vec> kernel(const std::vector<Vec>& rows, std::size_t ncols, Residue m) {
  RowSpan span(ncols, m);
  for (const Vec& row : rows) span.add(row);
  return span.kernel();
}

// ---------------------------------------------------------------------------
// Smith form

SmithForm smith_form(std::vector<Vec> a, std::size_t ncols, Residue m) {
  const std::size_t nrows = a.size();
  for (auto& row : a)
    for (auto& x : row) x = reduce_mod(x, m);
  SmithForm out;
  out.v.assign(ncols, Vec(ncols, 0));
  out.v_inv.assign(ncols, Vec(ncols, 0));
  for (std::size_t k = 0; k < ncols; ++k) out.v[k][k] = out.v_inv[k][k] = 1 % m;
  auto& v = out.v;
  auto& v_inv = out.v_inv;

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
    std::swap(v_inv[i], v_inv[j]);
  };
  // columns (k, j) <- (s*k + t*j, u*k + v*j); inverse applied to rows of v_inv
  auto combine_cols = [&](std::size_t k, std::size_t j, const Gcdex& e) {
    Residue s = reduce_mod(e.s, m), t = reduce_mod(e.t, m), u = reduce_mod(e.u, m), w = reduce_mod(e.v, m);
    auto apply = [&](std::vector<Vec>& mat) {
      for (auto& row : mat) {
        Residue x = row[k], y = row[j];
        row[k] = reduce_mod(s * x + t * y, m);
        row[j] = reduce_mod(u * x + w * y, m);
      }
    };
    apply(a);
    apply(v);
    Vec rk = v_inv[k], rj = v_inv[j];
    for (std::size_t c = 0; c < ncols; ++c) {
      v_inv[k][c] = reduce_mod(w * rk[c] - u * rj[c], m);
      v_inv[j][c] = reduce_mod(-t * rk[c] + s * rj[c], m);
    }
  };

  std::size_t k = 0;
  for (; k < std::min(nrows, ncols); ++k) {
    std::size_t bi = nrows, bj = ncols;
    Residue best = m;
    for (std::size_t i = k; i < nrows; ++i)
      for (std::size_t j = k; j < ncols; ++j)
        if (a[i][j] != 0 && std::gcd(a[i][j], m) < best) {
          best = std::gcd(a[i][j], m);
          bi = i;
          bj = j;
        }
    if (bi == nrows) break;
    std::swap(a[k], a[bi]);
    swap_cols(k, bj);

    // Keep the pivot equal to a divisor of m so that it strictly shrinks
    // whenever it fails to divide an entry.
    auto normalize_pivot = [&] { scale(a[k], unit_normalizer(a[k][k], m), m); };
    for (;;) {
      normalize_pivot();
      for (std::size_t i = k + 1; i < nrows; ++i) {
        if (a[i][k] == 0) continue;
        if (a[i][k] % a[k][k] == 0) {
          axpy(a[i], m - a[i][k] / a[k][k], a[k], m);
        } else {
          combine_rows(a[k], a[i], gcdex(a[k][k], a[i][k]), m);
          normalize_pivot();
        }
      }
      for (std::size_t j = k + 1; j < ncols; ++j) {
        if (a[k][j] == 0) continue;
        if (a[k][j] % a[k][k] == 0) {
          const Residue q = a[k][j] / a[k][k];
          combine_cols(k, j, Gcdex{a[k][k], 1, 0, -q, 1});
        } else {
          combine_cols(k, j, gcdex(a[k][k], a[k][j]));
          normalize_pivot();
        }
      }
      bool column_clear = true;
      for (std::size_t i = k + 1; i < nrows; ++i) column_clear = column_clear && a[i][k] == 0;
      if (!column_clear) continue;
      // The pivot must divide everything left in the trailing block.
      Residue g = std::gcd(a[k][k], m);
      std::size_t offending = nrows;
      for (std::size_t i = k + 1; i < nrows && offending == nrows; ++i)
        for (std::size_t j = k + 1; j < ncols; ++j)
          if (a[i][j] % g != 0) {
            offending = i;
            break;
          }
      if (offending == nrows) break;
      for (std::size_t j = 0; j < ncols; ++j) a[k][j] = reduce_mod(a[k][j] + a[offending][j], m);
    }

    Residue w = unit_normalizer(a[k][k], m);
    Residue w_inv = inverse_unit(w, m);
    for (auto& row : a) row[k] = reduce_mod(row[k] * w, m);
    for (auto& row : v) row[k] = reduce_mod(row[k] * w, m);
    for (auto& x : v_inv[k]) x = reduce_mod(x * w_inv, m);
    out.orders.push_back(a[k][k]);
  }
  for (; out.orders.size() < ncols;) out.orders.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// Subquotient

namespace {

std::vector<Vec> augment(const std::vector<Vec>& generators, const std::vector<Vec>& relations, std::size_t ncols) {
  const std::size_t t = generators.size();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < t; ++i) {
    Vec row(generators[i]);
    row.resize(ncols + t, 0);
    row[ncols + i] = 1;
    rows.push_back(std::move(row));
  }
  for (const Vec& r : relations) {
    Vec row(r);
    row.resize(ncols + t, 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Subquotient::Subquotient(const std::vector<Vec>& generators, const std::vector<Vec>& relations,
                         std::size_t ncols, Residue m)
    : ncols_(ncols), m_(m), ngens_(generators.size()) {
  augmented_ = howell_form(augment(generators, relations, ncols), ncols + ngens_, m);
  std::vector<Vec> syzygies;
  for (const Vec& row : augmented_) {
    if (leading(row) < ncols) continue;
    syzygies.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(ncols), row.end());
  }
  SmithForm smith = smith_form(std::move(syzygies), ngens_, m);
  v_ = std::move(smith.v);
  for (std::size_t k = 0; k < ngens_; ++k) {
    if (smith.orders[k] == 1) continue;
    kept_.push_back(k);
    orders_.push_back(smith.orders[k]);
    Vec rep(ncols, 0);
    for (std::size_t i = 0; i < ngens_; ++i) axpy(rep, smith.v_inv[k][i], generators[i], m);
    basis_.push_back(std::move(rep));
  }
}

std::optional<std::vector<Residue>> Subquotient::coordinates(const Vec& x) const {
  if (x.size() != ncols_) throw Error(ErrorCode::kDimensionMismatch, "vector length does not match module");
  Vec v(x);
  for (auto& e : v) e = reduce_mod(e, m_);
  v.resize(ncols_ + ngens_, 0);
  v = reduce_against(augmented_, std::move(v), ncols_, m_);
  for (std::size_t c = 0; c < ncols_; ++c)
    if (v[c] != 0) return std::nullopt;
  std::vector<Residue> out;
  for (std::size_t idx = 0; idx < kept_.size(); ++idx) {
    const std::size_t k = kept_[idx];
    Residue sum = 0;
    for (std::size_t i = 0; i < ngens_; ++i) sum = reduce_mod(sum - v[ncols_ + i] * v_[i][k], m_);
    out.push_back(sum % orders_[idx]);
  }
  return out;
}

bool Subquotient::is_trivial(const Vec& x) const {
  auto coords = coordinates(x);
  return coords && std::all_of(coords->begin(), coords->end(), [](Residue c) { return c == 0; });
}

CombinationSolver::CombinationSolver(const std::vector<Vec>& generators, std::size_t ncols, Residue m)
    : ncols_(ncols), m_(m), ngens_(generators.size()) {
  augmented_ = howell_form(augment(generators, {}, ncols), ncols + ngens_, m);
}

std::optional<Vec> CombinationSolver::solve(const Vec& target) const {
  Vec v(target);
  for (auto& e : v) e = reduce_mod(e, m_);
  v.resize(ncols_ + ngens_, 0);
  v = reduce_against(augmented_, std::move(v), ncols_, m_);
  for (std::size_t c = 0; c < ncols_; ++c)
    if (v[c] != 0) return std::nullopt;
  Vec out(ngens_);
  for (std::size_t i = 0; i < ngens_; ++i) out[i] = reduce_mod(-v[ncols_ + i], m_);
  return out;
}

}  // namespace pinext::modular
