#include "preproj/graded_rep.hpp"

#include "preproj/error.hpp"

#include <cassert>
#include <random>
#include <string>

namespace preproj {

namespace {

void require_shape(const RatMatrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    fail(ErrorKind::invalid_input, what + " has shape " + std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()) + ", expected " +
                                       std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace

GradedRep::GradedRep(std::size_t n, std::vector<std::size_t> dims, std::vector<RatMatrix> right,
                     std::vector<RatMatrix> left)
    : n_(n), dims_(std::move(dims)), right_(std::move(right)), left_(std::move(left)) {
  if (n_ < 2) fail(ErrorKind::invalid_input, "n must be at least 2");
  if (dims_.size() != n_ - 1)
    fail(ErrorKind::invalid_input, "dims must have n-1 = " + std::to_string(n_ - 1) + " entries");
  if (right_.size() != n_ - 2 || left_.size() != n_ - 2)
    fail(ErrorKind::invalid_input, "need n-2 = " + std::to_string(n_ - 2) + " maps in each direction");
  for (std::size_t k = 0; k + 2 < n_; ++k) {
    require_shape(right_[k], dims_[k + 1], dims_[k],
                  "right map (" + std::to_string(k + 1) + " -> " + std::to_string(k + 2) + ")");
    require_shape(left_[k], dims_[k], dims_[k + 1],
                  "left map (" + std::to_string(k + 2) + " -> " + std::to_string(k + 1) + ")");
  }
}

GradedRep GradedRep::from_untrusted(std::size_t n, std::vector<std::size_t> dims,
                                    std::vector<RatMatrix> right, std::vector<RatMatrix> left) {
  GradedRep m(n, std::move(dims), std::move(right), std::move(left));
  if (auto j = first_relation_failure(m))
    fail(ErrorKind::invalid_input, "preprojective relation fails at vertex " + std::to_string(*j));
  return m;
}

GradedRep GradedRep::make(std::size_t n, std::vector<std::size_t> dims,
                          std::vector<RatMatrix> right, std::vector<RatMatrix> left) {
  GradedRep m(n, std::move(dims), std::move(right), std::move(left));
  assert(check_preprojective(m));
  return m;
}

GradedRep GradedRep::zero(std::size_t n) {
  if (n < 2) fail(ErrorKind::invalid_input, "n must be at least 2");
  std::vector<RatMatrix> none(n - 2);
  return GradedRep(n, std::vector<std::size_t>(n - 1, 0), none, none);
}

GradedRep GradedRep::simple(std::size_t n, std::size_t i) {
  if (n < 2 || i < 1 || i >= n) fail(ErrorKind::invalid_input, "simple module vertex out of range");
  std::vector<std::size_t> dims(n - 1, 0);
  dims[i - 1] = 1;
  std::vector<RatMatrix> right, left;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    right.emplace_back(dims[k + 1], dims[k]);
    left.emplace_back(dims[k], dims[k + 1]);
  }
  return GradedRep(n, std::move(dims), std::move(right), std::move(left));
}

std::size_t GradedRep::total_dim() const {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

RatMatrix GradedRep::right(std::size_t j) const {
  if (j < 1 || j >= n_) fail(ErrorKind::invalid_input, "vertex out of range");
  if (j == n_ - 1) return RatMatrix(0, dim(j));
  return right_[j - 1];
}

RatMatrix GradedRep::left(std::size_t j) const {
  if (j < 1 || j >= n_) fail(ErrorKind::invalid_input, "vertex out of range");
  if (j == 1) return RatMatrix(0, dim(1));
  return left_[j - 2];
}

std::optional<std::size_t> first_relation_failure(const GradedRep& m) {
  for (std::size_t j = 1; j < m.n(); ++j) {
    // (j+1 → j)(j → j+1) and (j−1 → j)(j → j−1), each an endomorphism of M_j
    RatMatrix through_right(m.dim(j), m.dim(j));
    RatMatrix through_left(m.dim(j), m.dim(j));
    if (j + 1 < m.n()) through_right = m.left(j + 1) * m.right(j);
    if (j > 1) through_left = m.right(j - 1) * m.left(j);
    if (through_right != through_left) return j;
  }
  return std::nullopt;
}

bool check_preprojective(const GradedRep& m) { return !first_relation_failure(m).has_value(); }

RatMatrix socle_basis(const GradedRep& m, std::size_t j) {
  RatMatrix r = m.right(j);
  RatMatrix l = m.left(j);
  RatMatrix stacked(r.rows() + l.rows(), m.dim(j));
  for (std::size_t a = 0; a < r.rows(); ++a)
    for (std::size_t b = 0; b < m.dim(j); ++b) stacked(a, b) = r(a, b);
  for (std::size_t a = 0; a < l.rows(); ++a)
    for (std::size_t b = 0; b < m.dim(j); ++b) stacked(r.rows() + a, b) = l(a, b);
  return kernel_basis(stacked);
}

std::vector<std::size_t> socle_dims(const GradedRep& m) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < m.n(); ++j) out.push_back(socle_basis(m, j).cols());
  return out;
}

bool in_rep_w(const GradedRep& m, const std::vector<std::int64_t>& w) {
  if (w.size() != m.vertices()) fail(ErrorKind::invalid_input, "w must have length n-1");
  auto s = socle_dims(m);
  for (std::size_t k = 0; k < s.size(); ++k)
    if (static_cast<std::int64_t>(s[k]) > w[k]) return false;
  return true;
}

namespace {

RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

}  // namespace

GradedRep direct_sum(const GradedRep& a, const GradedRep& b) {
  if (a.n() != b.n()) fail(ErrorKind::invalid_input, "direct sum of modules with different n");
  std::vector<std::size_t> dims(a.vertices());
  for (std::size_t k = 0; k < dims.size(); ++k) dims[k] = a.dims()[k] + b.dims()[k];
  std::vector<RatMatrix> right, left;
  for (std::size_t k = 0; k + 2 < a.n(); ++k) {
    right.push_back(block_diag(a.rights()[k], b.rights()[k]));
    left.push_back(block_diag(a.lefts()[k], b.lefts()[k]));
  }
  return GradedRep::make(a.n(), std::move(dims), std::move(right), std::move(left));
}

// -------------------------------------------------------------- Intertwiner

Intertwiner::Intertwiner(std::shared_ptr<const GradedRep> source,
                         std::shared_ptr<const GradedRep> target, std::vector<RatMatrix> phis)
    : source_(std::move(source)), target_(std::move(target)), phis_(std::move(phis)) {
  if (source_->n() != target_->n())
    fail(ErrorKind::invalid_input, "intertwiner between modules with different n");
  if (phis_.size() != source_->vertices())
    fail(ErrorKind::invalid_input, "intertwiner needs one matrix per vertex");
  for (std::size_t j = 1; j <= phis_.size(); ++j)
    require_shape(phis_[j - 1], target_->dim(j), source_->dim(j),
                  "phi at vertex " + std::to_string(j));
}

bool Intertwiner::commutes() const {
  const GradedRep& m = *source_;
  const GradedRep& n = *target_;
  for (std::size_t j = 1; j + 1 < m.n(); ++j) {
    if (phi(j + 1) * m.right(j) != n.right(j) * phi(j)) return false;
    if (phi(j) * m.left(j + 1) != n.left(j + 1) * phi(j + 1)) return false;
  }
  return true;
}

bool Intertwiner::is_isomorphism() const {
  for (const auto& p : phis_)
    if (!is_invertible(p)) return false;
  return true;
}

std::vector<Rational> Intertwiner::flatten() const {
  std::vector<Rational> out;
  for (const auto& p : phis_) out.insert(out.end(), p.entries().begin(), p.entries().end());
  return out;
}

Intertwiner combine(const std::vector<Intertwiner>& basis, const std::vector<Rational>& coeffs) {
  if (basis.empty()) fail(ErrorKind::invalid_input, "cannot combine an empty family");
  if (coeffs.size() != basis.size())
    fail(ErrorKind::invalid_input, "coefficient count does not match the family");
  std::vector<RatMatrix> phis;
  for (const auto& p : basis.front().phis()) phis.emplace_back(p.rows(), p.cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t j = 0; j < phis.size(); ++j)
      phis[j] = phis[j] + coeffs[k] * basis[k].phis()[j];
  const auto& first = basis.front();
  return Intertwiner(first.source_ptr(), first.target_ptr(), std::move(phis));
}

RatMatrix span_matrix(const std::vector<Intertwiner>& maps) {
  if (maps.empty()) return {};
  const auto first = maps.front().flatten();
  RatMatrix out(first.size(), maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    auto v = maps[k].flatten();
    if (v.size() != first.size()) fail(ErrorKind::invalid_input, "intertwiners of different shape");
    for (std::size_t r = 0; r < v.size(); ++r) out(r, k) = v[r];
  }
  return out;
}

std::vector<Intertwiner> hom_space_basis(const GradedRep& m, const GradedRep& n) {
  if (m.n() != n.n()) fail(ErrorKind::invalid_input, "Hom between modules with different n");
  const std::size_t verts = m.vertices();

  // unknown phi_j[a][b] lives at offset[j] + a * dim M_j + b
  std::vector<std::size_t> offset(verts + 2, 0);
  for (std::size_t j = 1; j <= verts; ++j) offset[j + 1] = offset[j] + n.dim(j) * m.dim(j);
  const std::size_t unknowns = offset[verts + 1];
  auto var = [&](std::size_t j, std::size_t a, std::size_t b) { return offset[j] + a * m.dim(j) + b; };

  std::size_t equations = 0;
  for (std::size_t j = 1; j + 1 <= verts; ++j)
    equations += n.dim(j + 1) * m.dim(j) + n.dim(j) * m.dim(j + 1);
  RatMatrix sys(equations, unknowns);

  std::size_t row = 0;
  for (std::size_t j = 1; j + 1 <= verts; ++j) {
    // phi_{j+1} · right^M_j − right^N_j · phi_j = 0
    const RatMatrix rm = m.right(j), rn = n.right(j);
    for (std::size_t p = 0; p < n.dim(j + 1); ++p)
      for (std::size_t q = 0; q < m.dim(j); ++q, ++row) {
        for (std::size_t s = 0; s < m.dim(j + 1); ++s)
          if (!rm(s, q).is_zero()) sys(row, var(j + 1, p, s)) += rm(s, q);
        for (std::size_t t = 0; t < n.dim(j); ++t)
          if (!rn(p, t).is_zero()) sys(row, var(j, t, q)) -= rn(p, t);
      }
    // phi_j · left^M_{j+1} − left^N_{j+1} · phi_{j+1} = 0
    const RatMatrix lm = m.left(j + 1), ln = n.left(j + 1);
    for (std::size_t p = 0; p < n.dim(j); ++p)
      for (std::size_t q = 0; q < m.dim(j + 1); ++q, ++row) {
        for (std::size_t s = 0; s < m.dim(j); ++s)
          if (!lm(s, q).is_zero()) sys(row, var(j, p, s)) += lm(s, q);
        for (std::size_t t = 0; t < n.dim(j + 1); ++t)
          if (!ln(p, t).is_zero()) sys(row, var(j + 1, t, q)) -= ln(p, t);
      }
  }

  const RatMatrix kernel = kernel_basis(sys);
  auto src = std::make_shared<const GradedRep>(m);
  auto dst = std::make_shared<const GradedRep>(n);
  std::vector<Intertwiner> basis;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    std::vector<RatMatrix> phis;
    for (std::size_t j = 1; j <= verts; ++j) {
      RatMatrix p(n.dim(j), m.dim(j));
      for (std::size_t a = 0; a < n.dim(j); ++a)
        for (std::size_t b = 0; b < m.dim(j); ++b) p(a, b) = kernel(var(j, a, b), c);
      phis.push_back(std::move(p));
    }
    basis.emplace_back(src, dst, std::move(phis));
  }
  return basis;
}

std::size_t hom_dim(const GradedRep& m, const GradedRep& n) { return hom_space_basis(m, n).size(); }

GradedRep conjugate(const GradedRep& m, const std::vector<RatMatrix>& conjugators) {
  if (conjugators.size() != m.vertices())
    fail(ErrorKind::invalid_input, "need one conjugator per vertex");
  std::vector<RatMatrix> inv;
  for (std::size_t j = 1; j <= m.vertices(); ++j) {
    require_shape(conjugators[j - 1], m.dim(j), m.dim(j), "conjugator at vertex " + std::to_string(j));
    inv.push_back(inverse(conjugators[j - 1]));
  }
  std::vector<RatMatrix> right, left;
  for (std::size_t j = 1; j + 1 <= m.vertices(); ++j) {
    right.push_back(conjugators[j] * m.right(j) * inv[j - 1]);
    left.push_back(conjugators[j - 1] * m.left(j + 1) * inv[j]);
  }
  return GradedRep::make(m.n(), m.dims(), std::move(right), std::move(left));
}

std::vector<RatMatrix> random_conjugators(const GradedRep& m, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  // plain modulus rather than std::uniform_int_distribution so the stream is
  // identical across standard libraries
  auto draw = [&gen]() { return Rational(static_cast<long>(gen() % 7) - 3); };
  std::vector<RatMatrix> out;
  for (std::size_t j = 1; j <= m.vertices(); ++j) {
    const std::size_t d = m.dim(j);
    RatMatrix lower = RatMatrix::identity(d), upper = RatMatrix::identity(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < r; ++c) lower(r, c) = draw();
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = r + 1; c < d; ++c) upper(r, c) = draw();
    out.push_back(lower * upper);
  }
  return out;
}

GradedRep random_basis_change(const GradedRep& m, std::uint64_t seed) {
  return conjugate(m, random_conjugators(m, seed));
}

}  // namespace preproj
