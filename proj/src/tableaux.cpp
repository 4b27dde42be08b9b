#include "preproj/tableaux.hpp"

#include "preproj/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace preproj {

// ------------------------------------------------------------------ Tableau

Tableau::Tableau(std::size_t n, std::vector<std::vector<std::size_t>> rows)
    : n_(n), rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty()) fail(ErrorKind::invalid_input, "tableau has an empty row above a nonempty one");
    if (r > 0 && row.size() > rows_[r - 1].size())
      fail(ErrorKind::invalid_input, "tableau row lengths must weakly decrease");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n_)
        fail(ErrorKind::invalid_input, "tableau entry " + std::to_string(row[c]) + " outside 1.." +
                                           std::to_string(n_));
      if (c > 0 && row[c] < row[c - 1])
        fail(ErrorKind::invalid_input, "tableau rows must weakly increase");
      if (r > 0 && row[c] <= rows_[r - 1][c])
        fail(ErrorKind::invalid_input, "tableau columns must strictly increase");
      boxes_.push_back({r + 1, row[c]});
    }
  }
}

std::vector<std::size_t> Tableau::shape() const {
  std::vector<std::size_t> s;
  for (const auto& row : rows_) s.push_back(row.size());
  return s;
}

std::vector<std::int64_t> Tableau::content() const {
  std::vector<std::int64_t> mu(n_, 0);
  for (const auto& b : boxes_) ++mu[b.content - 1];
  return mu;
}

std::string Tableau::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += ',';
    s += '[';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ',';
      s += std::to_string(rows_[r][c]);
    }
    s += ']';
  }
  return s + "]";
}

std::vector<std::pair<std::size_t, std::size_t>> admissible_pairs(const Tableau& t) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& bx = t.boxes();
  for (std::size_t p = 0; p < bx.size(); ++p)
    for (std::size_t q = 0; q < bx.size(); ++q)
      if (bx[p].row < bx[q].row && bx[q].row <= bx[p].content && bx[p].content < bx[q].content)
        out.emplace_back(p, q);
  return out;
}

// -------------------------------------------------------------- enumeration

namespace {

class SsytFiller {
 public:
  SsytFiller(std::vector<std::size_t> shape, std::vector<std::int64_t> remaining)
      : shape_(std::move(shape)), remaining_(std::move(remaining)) {
    for (auto len : shape_) grid_.emplace_back(len, 0);
  }

  std::vector<Tableau> run() {
    fill(0, 0);
    return std::move(out_);
  }

 private:
  void fill(std::size_t r, std::size_t c) {
    if (r == shape_.size()) {
      out_.emplace_back(remaining_.size(), grid_);
      return;
    }
    if (c == shape_[r]) {
      fill(r + 1, 0);
      return;
    }
    std::size_t lo = r + 1;
    if (c > 0) lo = std::max(lo, grid_[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid_[r - 1][c] + 1);
    for (std::size_t v = lo; v <= remaining_.size(); ++v) {
      if (remaining_[v - 1] == 0) continue;
      --remaining_[v - 1];
      grid_[r][c] = v;
      fill(r, c + 1);
      ++remaining_[v - 1];
    }
  }

  std::vector<std::size_t> shape_;
  std::vector<std::int64_t> remaining_;
  std::vector<std::vector<std::size_t>> grid_;
  std::vector<Tableau> out_;
};

}  // namespace

std::vector<Tableau> ssyt_enumerate(const std::vector<std::size_t>& shape,
                                    const std::vector<std::int64_t>& content) {
  if (!std::is_sorted(shape.rbegin(), shape.rend()))
    fail(ErrorKind::invalid_input, "shape must be weakly decreasing");
  std::vector<std::size_t> rows(shape);
  while (!rows.empty() && rows.back() == 0) rows.pop_back();

  if (std::any_of(content.begin(), content.end(), [](auto x) { return x < 0; })) return {};
  const auto boxes = std::accumulate(rows.begin(), rows.end(), std::size_t{0});
  const auto filled = std::accumulate(content.begin(), content.end(), std::int64_t{0});
  if (static_cast<std::int64_t>(boxes) != filled || rows.size() > content.size()) return {};
  return SsytFiller(rows, content).run();
}

// ------------------------------------------------------------ g-statistics

std::size_t g_count(const Tableau& t, const SubsetI& a) {
  if (!is_connected(a))
    fail(ErrorKind::invalid_input, "{" + a.to_string() + "} is not a connected subset");
  const std::size_t i = a.size();
  const auto top = static_cast<std::size_t>(a.elements().back());
  std::size_t count = 0;
  for (const auto& x : t.boxes())
    if (x.row <= i && i < x.content && x.content <= top) ++count;
  return count;
}

Signature signature(const Tableau& t) {
  Signature sig;
  for (auto& a : connected_subsets(t.n(), true)) {
    const auto g = g_count(t, a);
    sig.emplace_back(std::move(a), g);
  }
  return sig;
}

// ------------------------------------------------------------ type-T modules

GradedRep type_t_module(const Tableau& t, const BoxScalars& scalars) {
  const auto pairs = admissible_pairs(t);
  if (scalars.size() != pairs.size())
    fail(ErrorKind::invalid_input, "scalars must be given on exactly the admissible box pairs");
  for (const auto& pq : pairs)
    if (!scalars.contains(pq))
      fail(ErrorKind::invalid_input, "missing scalar for box pair (" + std::to_string(pq.first) +
                                         "," + std::to_string(pq.second) + ")");

  const std::size_t n = t.n();
  if (n < 2) fail(ErrorKind::invalid_input, "n must be at least 2");
  const auto& bx = t.boxes();

  // index[j][x]: position of w^X_j inside M_j, or -1
  std::vector<std::vector<long>> index(n, std::vector<long>(bx.size(), -1));
  std::vector<std::size_t> dims(n - 1, 0);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t x = 0; x < bx.size(); ++x)
      if (bx[x].row <= j && j < bx[x].content) index[j][x] = static_cast<long>(dims[j - 1]++);

  std::vector<RatMatrix> right, left;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    RatMatrix r(dims[j], dims[j - 1]);
    RatMatrix l(dims[j - 1], dims[j]);
    for (std::size_t x = 0; x < bx.size(); ++x) {
      if (index[j + 1][x] >= 0 && index[j][x] >= 0) l(index[j][x], index[j + 1][x]) = 1;
    }
    for (const auto& [pq, e] : scalars) {
      const auto [x, q] = pq;
      if (index[j][x] >= 0 && index[j + 1][q] >= 0) r(index[j + 1][q], index[j][x]) += e;
    }
    right.push_back(std::move(r));
    left.push_back(std::move(l));
  }
  return GradedRep::make(n, std::move(dims), std::move(right), std::move(left));
}

BoxScalars generic_scalars(const Tableau& t, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  BoxScalars s;
  for (const auto& pq : admissible_pairs(t)) s[pq] = Rational(static_cast<long>(gen() % 1000000) + 1);
  return s;
}

BoxScalars constant_scalars(const Tableau& t, const Rational& value) {
  BoxScalars s;
  for (const auto& pq : admissible_pairs(t)) s[pq] = value;
  return s;
}

std::size_t f_value(const GradedRep& m, const MayaSubset& a) {
  if (!is_connected(a.subset()))
    fail(ErrorKind::invalid_input, "{" + a.subset().to_string() + "} is not a connected subset");
  if (a.n() != m.n()) fail(ErrorKind::invalid_input, "module and subset use different n");
  return hom_dim(m, maya_module(a));
}

Signature f_signature(const GradedRep& m) {
  Signature sig;
  for (auto& a : connected_subsets(m.n(), true)) {
    const auto f = f_value(m, MayaSubset(a));
    sig.emplace_back(std::move(a), f);
  }
  return sig;
}

namespace {

std::string render(const Signature& sig) {
  std::string s = "{";
  for (std::size_t k = 0; k < sig.size(); ++k) {
    if (k) s += ", ";
    s += "{" + sig[k].first.to_string() + "}:" + std::to_string(sig[k].second);
  }
  return s + "}";
}

}  // namespace

Classification classify(const GradedRep& m, const std::vector<std::size_t>& shape,
                        const std::vector<std::int64_t>& content, std::uint64_t seed) {
  const std::size_t n = m.n();
  if (content.size() != n) fail(ErrorKind::invalid_input, "content must have n entries");
  if (shape.size() > n) fail(ErrorKind::invalid_input, "shape has more than n rows");
  if (!std::is_sorted(shape.rbegin(), shape.rend()))
    fail(ErrorKind::invalid_input, "shape must be weakly decreasing");

  std::vector<std::int64_t> lambda(n, 0);
  for (std::size_t k = 0; k < shape.size(); ++k) lambda[k] = static_cast<std::int64_t>(shape[k]);

  // v_j = Σ_{k ≤ j} (λ_k − μ_k), since α_v = λ − μ
  std::int64_t acc = 0;
  for (std::size_t j = 1; j < n; ++j) {
    acc += lambda[j - 1] - content[j - 1];
    if (acc != static_cast<std::int64_t>(m.dim(j)))
      fail(ErrorKind::invalid_input, "module dimension at vertex " + std::to_string(j) +
                                         " does not match shape and content");
  }
  std::vector<std::int64_t> w(n - 1);
  for (std::size_t i = 1; i < n; ++i) w[i - 1] = lambda[i - 1] - lambda[i];
  if (!in_rep_w(m, w))
    fail(ErrorKind::invalid_input, "module socle exceeds the bound given by the shape");

  const Signature f = f_signature(m);
  std::vector<Tableau> matches;
  for (auto& t : ssyt_enumerate(shape, content))
    if (signature(t) == f) matches.push_back(std::move(t));

  if (matches.empty())
    fail(ErrorKind::unclassifiable, "no tableau has f-signature " + render(f));
  if (matches.size() > 1)
    fail(ErrorKind::internal, std::to_string(matches.size()) + " tableaux share signature " + render(f));

  Classification out{matches.front(), f, 0, 0};
  out.end_dim = hom_dim(m, m);
  const GradedRep generic = type_t_module(out.tableau, generic_scalars(out.tableau, seed));
  out.generic_end_dim = hom_dim(generic, generic);
  return out;
}

std::vector<std::vector<std::size_t>> partitions(std::size_t size, std::size_t max_parts) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left, std::size_t cap) -> void {
    if (left == 0) {
      auto p = cur;
      p.resize(max_parts, 0);
      out.push_back(std::move(p));
      return;
    }
    if (cur.size() == max_parts) return;
    for (std::size_t part = std::min(left, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, left - part, part);
      cur.pop_back();
    }
  };
  rec(rec, size, size);
  return out;
}

std::vector<std::vector<std::int64_t>> compositions(std::size_t total, std::size_t len) {
  std::vector<std::vector<std::int64_t>> out;
  if (len == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<std::int64_t> cur(len, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == len) {
      cur[pos] = static_cast<std::int64_t>(left);
      out.push_back(cur);
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      cur[pos] = static_cast<std::int64_t>(x);
      self(self, pos + 1, left - x);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace preproj
