#include "gwcb/flags.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gwcb/memo.hpp"
#include "gwcb/schur.hpp"
#include "polynomial.hpp"

namespace gwcb {

using detail::Monomial;
using detail::Polynomial;

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<int>& images) const noexcept {
    std::size_t seed = images.size();
    for (int v : images) hash_combine(seed, static_cast<std::size_t>(v));
    return seed;
  }
};

ConcurrentMemo<std::vector<int>, Polynomial, ImagesHash>& schubert_cache() {
  static ConcurrentMemo<std::vector<int>, Polynomial, ImagesHash> cache;
  return cache;
}

// Schubert polynomials are stable under S_n -> S_{n+1}, so trailing fixed
// points are dropped before caching.
std::vector<int> trimmed(const Permutation& w) {
  std::vector<int> images = w.images();
  while (!images.empty() && images.back() == static_cast<int>(images.size())) images.pop_back();
  return images;
}

const Polynomial& schubert(const std::vector<int>& images) {
  return *schubert_cache().get_or_compute(images, [&]() -> Polynomial {
    const int n = static_cast<int>(images.size());
    if (n == 0) return Polynomial::constant(1);
    if (n > detail::kMaxVariables) throw std::out_of_range("permutation too long for Schubert polynomial");
    for (int i = 0; i + 1 < n; ++i) {
      if (images[i] < images[i + 1]) {
        std::vector<int> longer = images;
        std::swap(longer[i], longer[i + 1]);
        return schubert(longer).divided_difference(i + 1);
      }
    }
    // Longest element of S_n: x_1^{n-1} x_2^{n-2} ... x_{n-1}.
    Monomial staircase{};
    for (int i = 0; i + 1 < n; ++i) staircase[i] = static_cast<std::uint8_t>(n - 1 - i);
    return Polynomial::monomial(staircase);
  });
}

Polynomial product_of(std::span<const Permutation> classes) {
  std::vector<const Polynomial*> factors;
  factors.reserve(classes.size());
  for (const auto& w : classes) factors.push_back(&schubert(trimmed(w)));
  std::sort(factors.begin(), factors.end(), [](const Polynomial* x, const Polynomial* y) {
    return x->terms().size() < y->terms().size();
  });
  Polynomial acc = Polynomial::constant(1);
  for (const auto* f : factors) acc = acc * *f;
  return acc;
}

// The constant d_w(P) for P homogeneous of degree l(w); it is the coefficient
// of S_w in the Schubert expansion of P.
Integer schubert_coefficient(Polynomial p, Permutation w) {
  std::vector<int> images = w.images();
  while (true) {
    int descent = -1;
    for (std::size_t i = 0; i + 1 < images.size(); ++i) {
      if (images[i] > images[i + 1]) {
        descent = static_cast<int>(i);
        break;
      }
    }
    if (descent < 0) break;
    p = p.divided_difference(descent + 1);
    if (p.is_zero()) return 0;
    std::swap(images[descent], images[descent + 1]);
  }
  return p.constant_term();
}

void check_shape_class(const Permutation& w, const FlagShape& shape) {
  if (w.size() > shape.m) {
    throw std::invalid_argument("permutation " + to_string(w) + " is not in S_" +
                                std::to_string(shape.m));
  }
  if (!w.descents_within(shape.a, shape.b)) {
    throw std::invalid_argument("permutation " + to_string(w) + " has descents outside {" +
                                std::to_string(shape.a) + "," + std::to_string(shape.b) + "}");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < images_.size(); ++i) {
    if (images_[i] > images_[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

bool Permutation::descents_within(int a, int b) const {
  for (int d : descents()) {
    if (d != a && d != b) return false;
  }
  return true;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(out));
}

Permutation Permutation::compose(const Permutation& other) const {
  const int n = std::max(size(), other.size());
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[i - 1] = (*this)(other(i));
  return Permutation(std::move(out));
}

Permutation Permutation::extended(int m) const {
  if (m < size()) throw std::invalid_argument("cannot shrink a permutation");
  std::vector<int> out = images_;
  for (int i = size() + 1; i <= m; ++i) out.push_back(i);
  return Permutation(std::move(out));
}

std::string to_string(const Permutation& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.images().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.images()[i]);
  }
  return out + "]";
}

Permutation parse_permutation(std::string_view text) {
  // Same bracket syntax as partitions, without the ordering constraint.
  std::vector<int> images;
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw std::invalid_argument("expected a bracketed permutation like [2,1,3]");
  }
  std::string body(text.substr(open + 1, close - open - 1));
  std::size_t pos = 0;
  while (pos < body.size()) {
    const auto comma = body.find(',', pos);
    const std::string token = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    images.push_back(std::stoi(token, &used));
    if (token.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("bad permutation entry '" + token + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Permutation(std::move(images));
}

FlagShape::FlagShape(int a_, int b_, int m_) : a(a_), b(b_), m(m_) {
  if (!(0 <= a && a < b && b <= m)) {
    throw std::invalid_argument("flag shape needs 0 <= a < b <= m, got (" + std::to_string(a) +
                                "," + std::to_string(b) + ";" + std::to_string(m) + ")");
  }
}

Permutation FlagShape::point_class() const {
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(m));
  for (int v = m - a + 1; v <= m; ++v) images.push_back(v);
  for (int v = m - b + 1; v <= m - a; ++v) images.push_back(v);
  for (int v = 1; v <= m - b; ++v) images.push_back(v);
  return Permutation(std::move(images));
}

Permutation grassmann_perm(const Partition& lambda, int r, int m) {
  if (r < 0 || r > m) throw std::invalid_argument("need 0 <= r <= m");
  if (lambda.length() > r || lambda.width() > m - r) {
    throw std::invalid_argument(to_string(lambda) + " is outside the " + std::to_string(r) + "x" +
                                std::to_string(m - r) + " box");
  }
  std::vector<int> images;
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  for (int i = 1; i <= r; ++i) {
    const int v = lambda[r - i] + i;
    images.push_back(v);
    used[v] = true;
  }
  for (int v = 1; v <= m; ++v) {
    if (!used[v]) images.push_back(v);
  }
  return Permutation(std::move(images));
}

Partition grassmann_partition(const Permutation& w, int r) {
  const auto ds = w.descents();
  if (ds.size() > 1 || (ds.size() == 1 && ds.front() != r)) {
    throw std::invalid_argument(to_string(w) + " is not Grassmannian at " + std::to_string(r));
  }
  std::vector<int> parts(static_cast<std::size_t>(std::max(r, 0)));
  for (int i = 1; i <= r; ++i) parts[r - i] = w(i) - i;
  return Partition(std::move(parts));
}

Permutation level_d_perm(const Partition& lambda, int r, int m, int d) {
  if (d < 1 || d > std::min(r, m - r)) {
    throw std::invalid_argument("level d must satisfy 1 <= d <= min(r, m-r)");
  }
  std::vector<int> images = grassmann_perm(lambda, r, m).images();
  std::sort(images.begin() + (r - d), images.begin() + (r + d));
  return Permutation(std::move(images));
}

PairOfPartitions pair_factorization(const Permutation& w, const FlagShape& shape) {
  check_shape_class(w, shape);
  const Permutation full = w.extended(shape.m);
  // rho lists positions 1..b in the order of increasing value.
  std::vector<int> rho(static_cast<std::size_t>(shape.b));
  std::iota(rho.begin(), rho.end(), 1);
  std::sort(rho.begin(), rho.end(), [&](int x, int y) { return full(x) < full(y); });

  std::vector<int> w2 = full.images();
  for (int i = 1; i <= shape.b; ++i) w2[i - 1] = full(rho[i - 1]);
  const Permutation w1 = Permutation(rho).inverse();

  return {grassmann_partition(w1, shape.a), grassmann_partition(Permutation(std::move(w2)), shape.b),
          shape};
}

Permutation perm_from_pair(const PairOfPartitions& pair) {
  const auto& s = pair.shape;
  const Permutation w1 = grassmann_perm(pair.alpha, s.a, s.b).extended(s.m);
  const Permutation w2 = grassmann_perm(pair.beta, s.b, s.m);
  return w2.compose(w1);
}

std::vector<Permutation> flag_schubert_classes(const FlagShape& shape) {
  // Each class is determined by which values fill positions 1..a and a+1..b.
  std::vector<Permutation> out;
  std::vector<int> pool(static_cast<std::size_t>(shape.m));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> labels(static_cast<std::size_t>(shape.m));
  for (int i = 0; i < shape.m; ++i) labels[i] = i < shape.a ? 0 : (i < shape.b ? 1 : 2);
  // labels[v-1] is the block that receives value v; walk all arrangements.
  do {
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(shape.m));
    for (int block = 0; block < 3; ++block) {
      for (int v = 1; v <= shape.m; ++v) {
        if (labels[v - 1] == block) images.push_back(v);
      }
    }
    out.emplace_back(std::move(images));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Integer flag_intersection(std::span<const Permutation> classes, const FlagShape& shape) {
  int codim = 0;
  for (const auto& w : classes) {
    check_shape_class(w, shape);
    codim += w.inversions();
  }
  if (codim != shape.dimension()) return 0;
  return schubert_coefficient(product_of(classes), shape.point_class());
}

Integer factorized_intersection(std::span<const PairOfPartitions> pairs) {
  if (pairs.empty()) throw std::invalid_argument("need at least one class");
  const FlagShape shape = pairs.front().shape;
  std::vector<Partition> alphas;
  std::vector<Partition> betas;
  int alpha_weight = 0;
  int total = 0;
  for (const auto& p : pairs) {
    if (!(p.shape == shape)) throw std::invalid_argument("pairs live on different flag varieties");
    alphas.push_back(p.alpha);
    betas.push_back(p.beta);
    alpha_weight += p.alpha.weight();
    total += p.alpha.weight() + p.beta.weight();
  }
  const int alpha_dim = shape.a * (shape.b - shape.a);
  if (alpha_weight > alpha_dim) {
    throw std::invalid_argument("alpha weights exceed dim Gr(a,b); use flag_intersection");
  }
  if (total != shape.dimension() || alpha_weight < alpha_dim) return 0;
  return rectangle_intersection(alphas, shape.a, shape.b - shape.a) *
         rectangle_intersection(betas, shape.b, shape.m - shape.b);
}

FlagExpansion flag_multiply(std::span<const Permutation> classes, int m) {
  int degree = 0;
  for (const auto& w : classes) {
    if (w.size() > m) throw std::invalid_argument(to_string(w) + " is not in S_" + std::to_string(m));
    degree += w.inversions();
  }
  const Polynomial product = product_of(classes);
  FlagExpansion out;
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 1);
  do {
    Permutation w(images);
    if (w.inversions() != degree) continue;
    Integer c = schubert_coefficient(product, w);
    if (c != 0) out.emplace(std::move(w), std::move(c));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::size_t schubert_cache_size() { return schubert_cache().size(); }

}  // namespace gwcb
