#include "preproj/lattice.hpp"

#include "preproj/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace preproj {

// ---------------------------------------------------------------- RootVector

RootVector::RootVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) fail(ErrorKind::invalid_input, "root vector needs n >= 2");
  if (std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0}) != 0)
    fail(ErrorKind::invalid_input, "root vector coordinates must sum to zero");
}

RootVector RootVector::simple_root(std::size_t n, std::size_t i) {
  if (i < 1 || i + 1 > n) fail(ErrorKind::invalid_input, "simple root index out of range");
  std::vector<std::int64_t> c(n, 0);
  c[i - 1] = 1;
  c[i] = -1;
  return RootVector(std::move(c));
}

RootVector RootVector::from_dims(const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> c(v.size() + 1, 0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    c[j] += v[j];
    c[j + 1] -= v[j];
  }
  return RootVector(std::move(c));
}

std::vector<std::int64_t> RootVector::simple_coefficients() const {
  std::vector<std::int64_t> out(n() - 1);
  std::int64_t acc = 0;
  for (std::size_t j = 0; j + 1 < n(); ++j) out[j] = (acc += coords_[j]);
  return out;
}

bool RootVector::is_nonnegative() const {
  auto c = simple_coefficients();
  return std::all_of(c.begin(), c.end(), [](auto x) { return x >= 0; });
}

RootVector operator+(const RootVector& a, const RootVector& b) {
  if (a.n() != b.n()) fail(ErrorKind::invalid_input, "root vectors of different rank");
  auto c = a.coords_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.coords_[k];
  return RootVector(std::move(c));
}

RootVector operator-(const RootVector& a, const RootVector& b) {
  if (a.n() != b.n()) fail(ErrorKind::invalid_input, "root vectors of different rank");
  auto c = a.coords_;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= b.coords_[k];
  return RootVector(std::move(c));
}

// ------------------------------------------------------------------- SubsetI

SubsetI::SubsetI(std::size_t n, std::vector<int> elements) : n_(n), elems_(std::move(elements)) {
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (elems_[k] < 1 || static_cast<std::size_t>(elems_[k]) > n_)
      fail(ErrorKind::invalid_input,
           "subset element " + std::to_string(elems_[k]) + " outside 1.." + std::to_string(n_));
    if (k > 0 && elems_[k] <= elems_[k - 1])
      fail(ErrorKind::invalid_input, "subset elements must be strictly increasing");
  }
}

SubsetI SubsetI::initial(std::size_t n, std::size_t i) {
  std::vector<int> e(i);
  std::iota(e.begin(), e.end(), 1);
  return SubsetI(n, std::move(e));
}

SubsetI SubsetI::from_indicator(const std::vector<std::int64_t>& indicator) {
  std::vector<int> e;
  for (std::size_t k = 0; k < indicator.size(); ++k) {
    if (indicator[k] == 1)
      e.push_back(static_cast<int>(k + 1));
    else if (indicator[k] != 0)
      fail(ErrorKind::invalid_input, "indicator vector must be 0/1-valued");
  }
  return SubsetI(indicator.size(), std::move(e));
}

SubsetI SubsetI::parse(std::size_t n, const std::string& text) {
  std::vector<int> e;
  for (auto x : parse_int_list(text)) e.push_back(static_cast<int>(x));
  return SubsetI(n, std::move(e));
}

bool SubsetI::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool SubsetI::is_initial() const {
  for (std::size_t k = 0; k < elems_.size(); ++k)
    if (elems_[k] != static_cast<int>(k + 1)) return false;
  return true;
}

std::vector<std::int64_t> SubsetI::indicator() const {
  std::vector<std::int64_t> v(n_, 0);
  for (int x : elems_) v[x - 1] = 1;
  return v;
}

std::string SubsetI::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(elems_[k]);
  }
  return s;
}

// ---------------------------------------------------------------- operations

namespace {

void require_comparable(const SubsetI& a, const SubsetI& b) {
  if (a.n() != b.n()) fail(ErrorKind::invalid_input, "subsets live in different {1..n}");
  if (a.size() != b.size()) fail(ErrorKind::invalid_input, "subsets have different sizes");
}

}  // namespace

RootVector subset_diff(const SubsetI& a, const SubsetI& b) {
  require_comparable(a, b);
  auto ia = a.indicator();
  auto ib = b.indicator();
  for (std::size_t k = 0; k < ia.size(); ++k) ia[k] -= ib[k];
  return RootVector(std::move(ia));
}

bool dominance_leq(const SubsetI& c, const SubsetI& b) {
  return subset_diff(b, c).is_nonnegative();
}

SubsetI subset_from_dims(const std::vector<std::int64_t>& v, std::size_t i) {
  const std::size_t n = v.size() + 1;
  if (n < 2 || i < 1 || i >= n) fail(ErrorKind::invalid_input, "socle vertex out of range");
  if (std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; }))
    fail(ErrorKind::invalid_input, "negative dimension");

  auto dim = [&](std::size_t j) -> std::int64_t { return (j == 0 || j == n) ? 0 : v[j - 1]; };
  std::vector<std::int64_t> ind(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const std::int64_t x = dim(j) - dim(j - 1);
    // 1_A = 1_{1..i} − x; forces x ∈ {0, 1} left of the socle, {0, −1} right of it
    const bool ok = j <= i ? (x == 0 || x == 1) : (x == 0 || x == -1);
    if (!ok)
      fail(ErrorKind::invalid_input, "dimension vector violates the socle conditions at position " +
                                         std::to_string(j));
    ind[j - 1] = (j <= i ? 1 : 0) - x;
  }
  SubsetI a = SubsetI::from_indicator(ind);
  if (a.is_initial())
    fail(ErrorKind::invalid_input, "dimension vector gives A = {1..i}, which has no Maya module");
  return a;
}

std::vector<SubsetI> connected_subsets(std::size_t n, bool admissible_only) {
  std::vector<SubsetI> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t t = i; t <= n; ++t) {
      if (admissible_only && (t == i || i == n)) continue;
      std::vector<int> e;
      for (std::size_t x = t - i + 1; x <= t; ++x) e.push_back(static_cast<int>(x));
      out.emplace_back(n, std::move(e));
    }
  return out;
}

bool is_connected(const SubsetI& a) {
  const auto& e = a.elements();
  if (e.empty()) return false;
  return e.back() - e.front() + 1 == static_cast<int>(e.size());
}

WeightData weights_from(const std::vector<std::int64_t>& w, const std::vector<std::int64_t>& v) {
  if (w.size() != v.size()) fail(ErrorKind::invalid_input, "w and v must both have length n-1");
  WeightData d;
  d.n = w.size() + 1;
  d.w = w;
  d.lambda.assign(d.n, 0);
  for (std::size_t i = 1; i <= w.size(); ++i)
    for (std::size_t k = 0; k < i; ++k) d.lambda[k] += w[i - 1];
  const auto alpha = RootVector::from_dims(v);
  d.mu = d.lambda;
  for (std::size_t k = 0; k < d.n; ++k) d.mu[k] -= alpha[k];
  return d;
}

namespace {

/// Positive roots e_a − e_b (a < b) in a fixed order; each is stored as the
/// half-open interval [a, b) of simple roots it covers, 0-based.
struct PositiveRoot {
  std::size_t first;
  std::size_t last;  // exclusive
};

class KostantCounter {
 public:
  explicit KostantCounter(std::size_t rank) {
    for (std::size_t a = 0; a < rank; ++a)
      for (std::size_t b = a + 1; b <= rank; ++b) roots_.push_back({a, b});
  }

  std::uint64_t count(std::vector<std::int64_t> coeffs) {
    return count(coeffs, roots_.size());
  }

 private:
  // Ways to write `coeffs` using only roots_[0 .. upto).
  std::uint64_t count(std::vector<std::int64_t>& coeffs, std::size_t upto) {
    if (std::all_of(coeffs.begin(), coeffs.end(), [](auto x) { return x == 0; })) return 1;
    if (upto == 0) return 0;
    auto key = std::make_pair(coeffs, upto);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const PositiveRoot& root = roots_[upto - 1];
    std::uint64_t total = 0;
    std::size_t used = 0;
    while (true) {
      total += count(coeffs, upto - 1);
      bool fits = true;
      for (std::size_t j = root.first; j < root.last; ++j)
        if (coeffs[j] == 0) fits = false;
      if (!fits) break;
      for (std::size_t j = root.first; j < root.last; ++j) --coeffs[j];
      ++used;
    }
    for (std::size_t j = root.first; j < root.last; ++j) coeffs[j] += static_cast<std::int64_t>(used);

    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<PositiveRoot> roots_;
  std::map<std::pair<std::vector<std::int64_t>, std::size_t>, std::uint64_t> memo_;
};

}  // namespace

std::uint64_t kostant_partition(const RootVector& alpha) {
  if (alpha.n() < 2) return alpha.n() == 0 ? 1 : 0;
  auto coeffs = alpha.simple_coefficients();
  if (std::any_of(coeffs.begin(), coeffs.end(), [](auto x) { return x < 0; })) return 0;
  return KostantCounter(coeffs.size()).count(std::move(coeffs));
}

std::uint64_t weight_multiplicity(const std::vector<std::int64_t>& lambda,
                                  const std::vector<std::int64_t>& mu) {
  const std::size_t n = lambda.size();
  if (mu.size() != n) fail(ErrorKind::invalid_input, "lambda and mu must have the same length");
  if (!std::is_sorted(lambda.rbegin(), lambda.rend()))
    fail(ErrorKind::invalid_input, "lambda must be weakly decreasing");
  if (std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0}) !=
      std::accumulate(mu.begin(), mu.end(), std::int64_t{0}))
    return 0;

  std::vector<std::int64_t> shifted_lambda(n), shifted_mu(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto rho = static_cast<std::int64_t>(n - 1 - k);
    shifted_lambda[k] = lambda[k] + rho;
    shifted_mu[k] = mu[k] + rho;
  }

  KostantCounter counter(n - 1);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t total = 0;
  do {
    std::vector<std::int64_t> diff(n);
    for (std::size_t k = 0; k < n; ++k) diff[k] = shifted_lambda[perm[k]] - shifted_mu[k];
    const RootVector alpha(diff);
    auto coeffs = alpha.simple_coefficients();
    if (std::any_of(coeffs.begin(), coeffs.end(), [](auto x) { return x < 0; })) continue;

    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    const auto k = static_cast<std::int64_t>(counter.count(std::move(coeffs)));
    total += (inversions % 2 == 0) ? k : -k;
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (total < 0) fail(ErrorKind::internal, "negative weight multiplicity");
  return static_cast<std::uint64_t>(total);
}

std::vector<SubsetI> subsets_of_size(std::size_t n, std::size_t size) {
  std::vector<SubsetI> out;
  if (size > n) return out;
  std::vector<int> e(size);
  std::iota(e.begin(), e.end(), 1);
  while (true) {
    out.emplace_back(n, e);
    std::size_t k = size;
    while (k > 0 && e[k - 1] == static_cast<int>(n - size + k)) --k;
    if (k == 0) break;
    ++e[k - 1];
    for (std::size_t m = k; m < size; ++m) e[m] = e[m - 1] + 1;
  }
  return out;
}

std::vector<SubsetI> admissible_subsets(std::size_t n) {
  std::vector<SubsetI> out;
  for (std::size_t i = 1; i < n; ++i)
    for (auto& s : subsets_of_size(n, i))
      if (!s.is_initial()) out.push_back(std::move(s));
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      fail(ErrorKind::invalid_input, "'" + text + "' is not a comma-separated integer list");
    out.push_back(x);
  }
  if (!text.empty() && text.back() == ',')
    fail(ErrorKind::invalid_input, "trailing comma in '" + text + "'");
  return out;
}

}  // namespace preproj
