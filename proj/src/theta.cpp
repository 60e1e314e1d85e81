#include "ikeda/theta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "ikeda/error.hpp"
#include "ikeda/linalg.hpp"

namespace ikeda {

namespace {


LatticeVector unit_pair(int i, int j, int sj) {
  LatticeVector v{};
  v[i] = 2;
  v[j] = static_cast<std::int8_t>(2 * sj);
  return v;
}

/// Basis of E8 in doubled coordinates, placed at ambient offset `off`.
std::vector<LatticeVector> e8_basis(int off) {
  std::vector<LatticeVector> b;
  LatticeVector s{};
  for (int i = 0; i < 8; ++i) s[off + i] = (i == 0 || i == 7) ? 1 : -1;
  b.push_back(s);
  b.push_back(unit_pair(off + 0, off + 1, 1));
  for (int i = 1; i < 7; ++i) {
    LatticeVector v{};
    v[off + i] = 2;
    v[off + i - 1] = -2;
    b.push_back(v);
  }
  return b;
}

using Wide = __int128;

Wide isqrt_floor(Wide n) {
  if (n < 0) return -1;
  Wide r = static_cast<Wide>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Wide floor_div(Wide a, Wide b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
Wide ceil_div(Wide a, Wide b) { return -floor_div(-a, b); }

/// Q(x) = sum_i b_i (L1 x_i + sum_{j>i} a_ij x_j)^2 / (L2 L1^2), exact.
struct ScaledLdl {
  Wide L1 = 1, L2 = 1;
  std::vector<Wide> b;
  std::vector<std::vector<Wide>> a;
};

Wide to_wide(const Int& x) {
  if (!x.fits_slong_p()) throw ConsistencyError("LDL entry exceeds 64 bits");
  return static_cast<Wide>(x.get_si());
}

ScaledLdl scaled_ldl(const IntMatrix& G) {
  const std::size_t n = G.size();
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = G[i][j];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  Int l1 = 1, l2 = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_lcm(l2.get_mpz_t(), l2.get_mpz_t(), q[i][i].get_den_mpz_t());
    for (std::size_t j = i + 1; j < n; ++j)
      mpz_lcm(l1.get_mpz_t(), l1.get_mpz_t(), q[i][j].get_den_mpz_t());
  }
  Int guard = Int(kMaxShortNorm) * l2 * l1 * l1;
  if (mpz_sizeinbase(guard.get_mpz_t(), 2) > 80)
    throw ConsistencyError("LDL denominators too large for exact integer pruning");
  ScaledLdl s;
  s.L1 = to_wide(l1);
  s.L2 = to_wide(l2);
  s.b.resize(n);
  s.a.assign(n, std::vector<Wide>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    s.b[i] = to_wide(Rat(q[i][i] * Rat(l2)).get_num());
    for (std::size_t j = i + 1; j < n; ++j) s.a[i][j] = to_wide(Rat(q[i][j] * Rat(l1)).get_num());
  }
  return s;
}

long gram_norm(const IntMatrix& G, const std::vector<long>& x) {
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j) s += x[i] * G[i][j] * x[j];
  }
  return s;
}

std::mutex svMutex;
std::map<std::string, std::pair<long, std::map<long, std::vector<LatticeVector>>>> svCache;

}  // namespace

EvenLattice::EvenLattice(std::string name, std::vector<LatticeVector> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  const std::size_t n = basis_.size();
  gram_.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long s = 0;
      for (int k = 0; k < kLatticeDim; ++k) s += static_cast<long>(basis_[i][k]) * basis_[j][k];
      if (s % 4 != 0) throw ConsistencyError(name_ + ": non-integral Gram entry");
      gram_[i][j] = s / 4;
    }
  if (n != kLatticeDim) throw ConsistencyError(name_ + ": wrong rank");
  for (std::size_t i = 0; i < n; ++i)
    if (gram_[i][i] % 2 != 0) throw ConsistencyError(name_ + ": Gram matrix is not even");
  if (determinant(gram_) != 1) throw ConsistencyError(name_ + ": Gram matrix is not unimodular");
  HalfIntegralMatrix check(gram_);  // positive definiteness
}

const EvenLattice& EvenLattice::e8e8() {
  static const EvenLattice L = [] {
    auto b = e8_basis(0);
    auto c = e8_basis(8);
    b.insert(b.end(), c.begin(), c.end());
    return EvenLattice("e8e8", std::move(b));
  }();
  return L;
}

const EvenLattice& EvenLattice::d16plus() {
  static const EvenLattice L = [] {
    std::vector<LatticeVector> b;
    LatticeVector s{};
    s.fill(1);
    b.push_back(s);
    for (int i = 1; i < 15; ++i) b.push_back(unit_pair(i, i + 1, -1));
    b.push_back(unit_pair(14, 15, 1));
    return EvenLattice("d16p", std::move(b));
  }();
  return L;
}

const EvenLattice& EvenLattice::by_name(const std::string& name) {
  if (name == "e8e8") return e8e8();
  if (name == "d16p" || name == "d16plus") return d16plus();
  throw ConfigError("unknown lattice '" + name + "' (expected e8e8 or d16p)");
}

const std::map<long, std::vector<LatticeVector>>& short_vectors(const EvenLattice& L,
                                                                long normBound) {
  if (normBound > kMaxShortNorm)
    throw BoundError("short_vectors: norm bound " + std::to_string(normBound) + " exceeds " +
                     std::to_string(kMaxShortNorm));
  std::lock_guard lock(svMutex);
  auto it = svCache.find(L.name());
  if (it != svCache.end() && it->second.first >= normBound) return it->second.second;

  const IntMatrix& G = L.gram();
  const ScaledLdl s = scaled_ldl(G);
  const int n = kLatticeDim;
  const Wide scale = s.L2 * s.L1 * s.L1;
  std::map<long, std::vector<LatticeVector>> out;
  for (long nn = 2; nn <= normBound; nn += 2) out[nn];
  std::vector<long> x(n, 0);
  std::function<void(int, Wide)> descend = [&](int i, Wide budget) {
    Wide A = 0;
    for (int j = i + 1; j < n; ++j) A += s.a[i][j] * x[j];
    Wide u = isqrt_floor(budget / s.b[i]);
    const long lo = static_cast<long>(ceil_div(-u - A, s.L1));
    const long hi = static_cast<long>(floor_div(u - A, s.L1));
    for (long xi = lo; xi <= hi; ++xi) {
      Wide t = s.L1 * xi + A;
      Wide rest = budget - s.b[i] * t * t;
      if (rest < 0) continue;
      x[i] = xi;
      if (i > 0) {
        descend(i - 1, rest);
        continue;
      }
      long norm = gram_norm(G, x);
      if (norm == 0) continue;
      if (Wide(norm) * scale != Wide(normBound) * scale - rest)
        throw ConsistencyError("short_vectors: pruning identity violated");
      LatticeVector v{};
      for (int k = 0; k < n; ++k)
        if (x[k] != 0)
          for (int c = 0; c < kLatticeDim; ++c) v[c] += static_cast<std::int8_t>(x[k] * L.basis()[k][c]);
      out[norm].push_back(v);
    }
    x[i] = 0;
  };
  descend(n - 1, Wide(normBound) * scale);
  for (auto& [nn, list] : out) std::sort(list.begin(), list.end());
  auto& slot = svCache[L.name()];
  slot = {normBound, std::move(out)};
  return slot.second;
}

namespace {

constexpr int kRootWords = 8;  // 480 roots fit in 512 bits
using RootSet = std::array<std::uint64_t, kRootWords>;

RootSet operator&(const RootSet& a, const RootSet& b) {
  RootSet r;
  for (int i = 0; i < kRootWords; ++i) r[i] = a[i] & b[i];
  return r;
}

long popcount(const RootSet& a) {
  long c = 0;
  for (auto w : a) c += __builtin_popcountll(w);
  return c;
}

template <class F>
void for_each_bit(const RootSet& a, F&& f) {
  for (int i = 0; i < kRootWords; ++i)
    for (std::uint64_t w = a[i]; w != 0; w &= w - 1) f(i * 64 + __builtin_ctzll(w));
}

/// Root bitsets: ipRoots[r][v + 2] holds the roots s with <r, s> = v, and
/// ipNorm4[y][v + 2] the roots s with <y, s> = v for each norm-4 vector y.
using WideSet = std::vector<std::uint64_t>;

struct RootTables {
  std::vector<LatticeVector> roots;
  std::vector<std::array<RootSet, 5>> ipRoots;
  std::vector<LatticeVector> norm4;
  std::vector<std::array<RootSet, 5>> ipNorm4;
  /// rootToNorm4[r][v + 2]: norm-4 vectors y with <r, y> = v.
  std::vector<std::array<WideSet, 5>> rootToNorm4;
};

std::array<RootSet, 5> ip_sets(const LatticeVector& x, const std::vector<LatticeVector>& roots) {
  std::array<RootSet, 5> sets{};
  for (std::size_t j = 0; j < roots.size(); ++j) {
    long v = inner(x, roots[j]);
    if (v < -2 || v > 2) throw ConsistencyError("root inner product out of range");
    sets[v + 2][j / 64] |= std::uint64_t(1) << (j % 64);
  }
  return sets;
}

std::mutex rtMutex;
std::map<std::string, std::unique_ptr<RootTables>> rtCache;

const RootTables& root_tables(const EvenLattice& L) {
  const auto& sv = short_vectors(L, 4);
  std::lock_guard lock(rtMutex);
  auto& slot = rtCache[L.name()];
  if (!slot) {
    auto t = std::make_unique<RootTables>();
    t->roots = sv.at(2);
    if (t->roots.size() > 64 * kRootWords) throw ConsistencyError("too many roots for RootSet");
    for (const auto& r : t->roots) t->ipRoots.push_back(ip_sets(r, t->roots));
    t->norm4 = sv.at(4);
    for (const auto& y : t->norm4) t->ipNorm4.push_back(ip_sets(y, t->roots));
    const std::size_t words = (t->norm4.size() + 63) / 64;
    t->rootToNorm4.resize(t->roots.size());
    for (auto& sets : t->rootToNorm4)
      for (auto& w : sets) w.assign(words, 0);
    for (std::size_t y = 0; y < t->norm4.size(); ++y)
      for (int v = 0; v < 5; ++v)
        for_each_bit(t->ipNorm4[y][v], [&](int r) {
          t->rootToNorm4[r][v][y / 64] |= std::uint64_t(1) << (y % 64);
        });
    slot = std::move(t);
  }
  return *slot;
}

long ip_index(long v) {
  if (v < -2 || v > 2) return -1;
  return v + 2;
}

/// Tuples whose first k columns are roots and whose optional last column has
/// norm 4. Bitsets carry the root candidates, an index list the norm-4 ones.
struct FastCounter {
  const RootTables& tab;
  std::size_t k;  // root columns
  bool tail;      // trailing norm-4 column
  std::vector<std::vector<long>> G;  // permuted 2T

  RootSet all() const {
    RootSet s{};
    for (std::size_t j = 0; j < tab.roots.size(); ++j) s[j / 64] |= std::uint64_t(1) << (j % 64);
    return s;
  }

  long pair_count(const RootSet& a, const RootSet& b, long t) const {
    long idx = ip_index(t);
    if (idx < 0) return 0;
    long c = 0;
    for_each_bit(a, [&](int x) { c += popcount(b & tab.ipRoots[x][idx]); });
    return c;
  }

  long tail_count(const RootSet& a, const WideSet& ys, long t) const {
    long idx = ip_index(t);
    if (idx < 0) return 0;
    long c = 0;
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::uint64_t w = ys[i]; w != 0; w &= w - 1)
        c += popcount(a & tab.ipNorm4[i * 64 + __builtin_ctzll(w)][idx]);
    return c;
  }

  long run(std::size_t level, std::vector<RootSet>& cand, const WideSet& ys) const {
    const std::size_t rootsLeft = k - level;
    if (!tail && rootsLeft == 1) return popcount(cand[level]);
    if (!tail && rootsLeft == 2) return pair_count(cand[level], cand[level + 1], G[level][level + 1]);
    if (tail && rootsLeft == 1) return tail_count(cand[level], ys, G[level][k]);
    long total = 0;
    for_each_bit(cand[level], [&](int x) {
      std::vector<RootSet> next = cand;
      for (std::size_t j = level + 1; j < k; ++j) {
        long idx = ip_index(G[level][j]);
        next[j] = idx < 0 ? RootSet{} : (cand[j] & tab.ipRoots[x][idx]);
      }
      WideSet ys2;
      if (tail) {
        long idx = ip_index(G[level][k]);
        ys2.assign(ys.size(), 0);
        if (idx >= 0)
          for (std::size_t i = 0; i < ys.size(); ++i) ys2[i] = ys[i] & tab.rootToNorm4[x][idx][i];
      }
      total += run(level + 1, next, ys2);
    });
    return total;
  }
};

/// Weyl orbits of the norm-n vectors: the group generated by reflections in the
/// roots preserves L, and each orbit meets the dominant chamber exactly once.
struct WeylOrbits {
  std::vector<LatticeVector> reps;
  std::vector<long> sizes;
};

std::vector<LatticeVector> simple_roots(const std::vector<LatticeVector>& roots) {
  // Positive for a generic linear form; simple = positive and not a sum of two positive roots.
  auto height = [](const LatticeVector& v) {
    long h = 0;
    for (int i = 0; i < kLatticeDim; ++i) h += static_cast<long>(v[i]) << i;
    return h;
  };
  std::vector<LatticeVector> pos;
  for (const auto& r : roots)
    if (height(r) > 0) pos.push_back(r);
  std::set<LatticeVector> posSet(pos.begin(), pos.end());
  std::vector<LatticeVector> simple;
  for (const auto& r : pos) {
    bool decomposable = false;
    for (const auto& a : pos) {
      LatticeVector b;
      for (int i = 0; i < kLatticeDim; ++i) b[i] = static_cast<std::int8_t>(r[i] - a[i]);
      if (posSet.count(b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  if (simple.size() != kLatticeDim) throw ConsistencyError("simple roots: wrong count");
  return simple;
}

LatticeVector dominant(LatticeVector x, const std::vector<LatticeVector>& simple) {
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& a : simple) {
      long ip = inner(x, a);
      if (ip >= 0) continue;
      for (int i = 0; i < kLatticeDim; ++i) x[i] = static_cast<std::int8_t>(x[i] - ip * a[i]);
      moved = true;
    }
  }
  return x;
}

std::mutex orbitMutex;
std::map<std::pair<std::string, long>, WeylOrbits> orbitCache;

const WeylOrbits& weyl_orbits(const EvenLattice& L, long norm) {
  std::lock_guard lock(orbitMutex);
  auto key = std::make_pair(L.name(), norm);
  auto it = orbitCache.find(key);
  if (it != orbitCache.end()) return it->second;
  const auto simple = simple_roots(short_vectors(L, 2).at(2));
  std::map<LatticeVector, long> count;
  for (const auto& v : short_vectors(L, norm).at(norm)) ++count[dominant(v, simple)];
  WeylOrbits o;
  for (const auto& [rep, n] : count) {
    o.reps.push_back(rep);
    o.sizes.push_back(n);
  }
  return orbitCache[key] = std::move(o);
}

/// Counts tuples column by column in `order`. With pinned set, the first column runs
/// over Weyl orbit representatives weighted by orbit size.
long generic_count(const EvenLattice& L, const HalfIntegralMatrix& T,
                   const std::vector<std::size_t>& order, bool pinned) {
  const std::size_t g = T.size();
  long top = 2;
  for (std::size_t i = 0; i < g; ++i) top = std::max(top, T.two_t(i, i));
  const auto& sv = short_vectors(L, top);
  std::function<long(std::size_t, std::vector<std::vector<LatticeVector>>&)> rec =
      [&](std::size_t level, std::vector<std::vector<LatticeVector>>& cand) -> long {
    if (level + 1 == g) return static_cast<long>(cand[level].size());
    long total = 0;
    for (const auto& x : cand[level]) {
      std::vector<std::vector<LatticeVector>> next(g);
      bool empty = false;
      for (std::size_t j = level + 1; j < g && !empty; ++j) {
        const long want = T.two_t(order[level], order[j]);
        for (const auto& y : cand[j])
          if (inner(x, y) == want) next[j].push_back(y);
        empty = next[j].empty();
      }
      if (!empty) total += rec(level + 1, next);
    }
    return total;
  };
  std::vector<std::vector<LatticeVector>> cand(g);
  for (std::size_t j = pinned ? 1 : 0; j < g; ++j) cand[j] = sv.at(T.two_t(order[j], order[j]));
  if (!pinned) return rec(0, cand);
  const WeylOrbits& orbits = weyl_orbits(L, T.two_t(order[0], order[0]));
  long total = 0;
  for (std::size_t r = 0; r < orbits.reps.size(); ++r) {
    cand[0] = {orbits.reps[r]};
    total += orbits.sizes[r] * rec(0, cand);
  }
  return total;
}

void check_bounds(const HalfIntegralMatrix& T) {
  if (T.size() > 4) throw ConfigError("theta_coefficient: size must be at most 4");
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T.two_t(i, i) > kMaxShortNorm)
      throw BoundError("theta_coefficient: norm " + std::to_string(T.two_t(i, i)) +
                       " exceeds " + std::to_string(kMaxShortNorm));
}

}  // namespace

Int theta_coefficient(const EvenLattice& L, const HalfIntegralMatrix& T) {
  check_bounds(T);
  const std::size_t g = T.size();
  std::vector<std::size_t> order(g);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return T.two_t(a, a) < T.two_t(b, b);
  });
  std::size_t k = 0;
  while (k < g && T.two_t(order[k], order[k]) == 2) ++k;
  const bool fast = k == g || (k + 1 == g && T.two_t(order[k], order[k]) == 4 && k > 0);
  if (!fast) return Int(generic_count(L, T, order, true));

  const RootTables& tab = root_tables(L);
  FastCounter fc{tab, k, k < g, {}};
  fc.G.assign(g, std::vector<long>(g));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) fc.G[i][j] = T.two_t(order[i], order[j]);
  // Aut(L) is transitive on roots for both lattices (W(E8) x W(E8) with the
  // swap, resp. W(D16)), so x_1 can be pinned to one root.
  std::vector<RootSet> cand(k, fc.all());
  cand[0] = RootSet{};
  cand[0][0] = 1;
  WideSet ys;
  if (fc.tail) {
    ys.assign((tab.norm4.size() + 63) / 64, 0);
    for (std::size_t y = 0; y < tab.norm4.size(); ++y) ys[y / 64] |= std::uint64_t(1) << (y % 64);
  }
  return Int(static_cast<long>(tab.roots.size())) * Int(fc.run(0, cand, ys));
}

Int theta_coefficient(const EvenLattice& L, const HalfIntegralMatrix& T,
                      const std::vector<std::size_t>& order) {
  check_bounds(T);
  if (order.size() != T.size()) throw ConfigError("theta_coefficient: bad column order");
  return Int(generic_count(L, T, order, false));
}

Int schottky_coefficient(const HalfIntegralMatrix& T) {
  return theta_coefficient(EvenLattice::e8e8(), T) - theta_coefficient(EvenLattice::d16plus(), T);
}

}  // namespace ikeda
