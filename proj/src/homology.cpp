#include "idemlab/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "idemlab/error.hpp"
#include "idemlab/grpcore.hpp"
#include "idemlab/homcache.hpp"

namespace idemlab {

namespace {

using U64 = std::uint64_t;

U64 ipow(U64 p, int e) {
  U64 r = 1;
  while (e-- > 0) r *= p;
  return r;
}

int valuation(U64 x, U64 p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

U64 mod_inverse(U64 a, U64 m) {
  __int128 t = 0, nt = 1, r = static_cast<__int128>(m), nr = static_cast<__int128>(a % m);
  while (nr != 0) {
    __int128 q = r / nr;
    std::tie(t, nt) = std::make_tuple(nt, t - q * nt);
    std::tie(r, nr) = std::make_tuple(nr, r - q * nr);
  }
  if (r != 1) throw InternalError("non-invertible pivot");
  if (t < 0) t += m;
  return static_cast<U64>(t);
}

// Normalized 2-cochains in tree gauge: a normalized cocycle is determined
// by its values u(y, s) on the edges y → ys of the right Cayley graph, and
// every class has a representative vanishing on a BFS spanning tree. The
// remaining edges are the unknowns ("columns").
struct TreeComplex {
  FiniteGroup g;
  std::vector<Elem> gens;
  std::size_t k = 0;
  std::vector<Elem> bfs;
  std::vector<Elem> parent;
  std::vector<std::uint8_t> via;
  std::vector<std::int32_t> col;  // [y·k + s], -1 on tree edges
  std::vector<std::pair<Elem, std::uint8_t>> edges;
  std::vector<std::vector<Int>> counts;  // generator counts of tree words

  explicit TreeComplex(const FiniteGroup& grp) : g(grp) {
    for (Elem s : grp.generators()) {
      if (s != 0) gens.push_back(s);
    }
    k = gens.size();
    const std::size_t n = grp.order();
    parent.assign(n, 0);
    via.assign(n, 0);
    counts.assign(n, std::vector<Int>(k, 0));
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<std::uint8_t> tree(n * k, 0);
    seen[0] = 1;
    bfs.push_back(0);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      Elem y = bfs[head];
      for (std::size_t s = 0; s < k; ++s) {
        Elem z = grp.mul(y, gens[s]);
        if (!seen[z]) {
          seen[z] = 1;
          parent[z] = y;
          via[z] = static_cast<std::uint8_t>(s);
          counts[z] = counts[y];
          ++counts[z][s];
          tree[y * k + s] = 1;
          bfs.push_back(z);
        }
      }
    }
    col.assign(n * k, -1);
    for (Elem y = 0; y < n; ++y) {
      for (std::size_t s = 0; s < k; ++s) {
        if (!tree[y * k + s]) {
          col[y * k + s] = static_cast<std::int32_t>(edges.size());
          edges.emplace_back(y, static_cast<std::uint8_t>(s));
        }
      }
    }
  }

  std::size_t ncols() const { return edges.size(); }

  // Cocycle-identity rows for the fixed first argument x: for every
  // non-tree edge (y, s), z = ys,
  //   F_x(y) + u(xy, s) − u(y, s) − F_x(z) = 0,
  // where F_x(w) = f(x, w) is expanded along the tree path of w.
  template <class Sink>
  void rows_for(Elem x, Sink&& sink) const {
    std::vector<std::pair<std::uint32_t, Int>> row;
    auto add_path = [&](Elem w, Int sign) {
      while (w != 0) {
        Elem p = parent[w];
        std::int32_t c = col[static_cast<std::size_t>(g.mul(x, p)) * k + via[w]];
        if (c >= 0) row.emplace_back(static_cast<std::uint32_t>(c), sign);
        w = p;
      }
    };
    for (std::size_t c = 0; c < edges.size(); ++c) {
      auto [y, s] = edges[c];
      row.clear();
      add_path(y, 1);
      std::int32_t cxy = col[static_cast<std::size_t>(g.mul(x, y)) * k + s];
      if (cxy >= 0) row.emplace_back(static_cast<std::uint32_t>(cxy), 1);
      row.emplace_back(static_cast<std::uint32_t>(c), -1);
      add_path(g.mul(y, gens[s]), -1);
      sink(row);
    }
  }

  // Coboundary of the 1-cochain with φ(gen t) = 1 in tree gauge.
  std::vector<Int> coboundary(std::size_t t) const {
    std::vector<Int> v(edges.size());
    for (std::size_t c = 0; c < edges.size(); ++c) {
      auto [y, s] = edges[c];
      Elem z = g.mul(y, gens[s]);
      v[c] = counts[y][t] + (s == t ? 1 : 0) - counts[z][t];
    }
    return v;
  }

  // Elementary divisors of the residual-coboundary matrix D1 (columns = k
  // generator values).
  std::vector<Int> d1_divisors() const {
    if (k == 0) return {};
    IntMatrix m(edges.size(), k);
    for (std::size_t t = 0; t < k; ++t) {
      auto v = coboundary(t);
      for (std::size_t c = 0; c < edges.size(); ++c) m(c, t) = v[c];
    }
    auto snf = smith_normal_form(m);
    std::vector<Int> d(k, 0);
    for (std::size_t i = 0; i < std::min(k, snf.diagonal.size()); ++i) d[i] = snf.diagonal[i];
    return d;
  }
};

using SparseRow = std::vector<std::pair<std::uint32_t, U64>>;

// Row reduction over ℤ/p^E: a reduced echelon basis with unit pivots plus
// the leftover rows divisible by p, finished by a Smith form of the
// leftovers on the non-pivot columns.
class ModEliminator {
 public:
  ModEliminator(std::size_t n, U64 p, int e)
      : n_(n), p_(p), e_(e), q_(ipow(p, e)), piv_(n, -1), acc_(n, 0), mark_(n, 0) {}

  void add(const std::vector<std::pair<std::uint32_t, Int>>& row) {
    SparseRow r = reduce(row);
    if (r.empty()) return;
    auto unit = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.second % p_ != 0; });
    if (unit == r.end()) {
      residual_.push_back(std::move(r));
      return;
    }
    const std::uint32_t c = unit->first;
    const U64 inv = mod_inverse(unit->second, q_);
    SparseRow fr;
    for (const auto& [cc, v] : r) {
      if (cc != c) fr.emplace_back(cc, mulmod(v, inv));
    }
    for (auto& b : basis_) {
      auto it = std::lower_bound(b.free.begin(), b.free.end(), c,
                                 [](const auto& e, std::uint32_t key) { return e.first < key; });
      if (it == b.free.end() || it->first != c) continue;
      U64 a = it->second;
      b.free.erase(it);
      b.free = axpy(b.free, q_ - a, fr);
    }
    piv_[c] = static_cast<std::int32_t>(basis_.size());
    basis_.push_back({c, std::move(fr)});
  }

  void finish() {
    for (std::size_t c = 0; c < n_; ++c) {
      if (piv_[c] < 0) {
        free_index_.push_back(static_cast<std::int32_t>(free_cols_.size()));
        free_cols_.push_back(static_cast<std::uint32_t>(c));
      } else {
        free_index_.push_back(-1);
      }
    }
    const std::size_t m = free_cols_.size();
    std::vector<std::vector<U64>> rmat;
    for (const auto& res : residual_) {
      std::vector<std::pair<std::uint32_t, Int>> as_int;
      for (const auto& [c, v] : res) as_int.emplace_back(c, static_cast<Int>(v));
      SparseRow r = reduce(as_int);
      if (r.empty()) continue;
      std::vector<U64> dense(m, 0);
      for (const auto& [c, v] : r) dense[free_index_[c]] = v;
      rmat.push_back(std::move(dense));
    }
    residual_.clear();
    residual_.shrink_to_fit();
    local_smith(rmat, m);
  }

  // log_p |{x : A x ≡ 0 mod p^e}|
  int log_kernel(int e) const {
    int total = 0;
    for (int v : diag_val_) total += std::min(v, e);
    return total;
  }

  // Generators of {x : A x ≡ 0 mod p^e}, entries in [0, p^e).
  std::vector<std::vector<Int>> kernel_generators(int e) const {
    const U64 qe = ipow(p_, e);
    const std::size_t m = free_cols_.size();
    std::vector<std::vector<Int>> gens;
    for (std::size_t j = 0; j < m; ++j) {
      int v = std::min(diag_val_[j], e);
      U64 mult = ipow(p_, e - v);
      if (mult % qe == 0) continue;
      std::vector<U64> x(n_, 0);
      for (std::size_t l = 0; l < m; ++l) x[free_cols_[l]] = static_cast<U64>((static_cast<unsigned __int128>(v_[l][j]) * mult) % qe);
      for (const auto& b : basis_) {
        unsigned __int128 s = 0;
        for (const auto& [fc, fv] : b.free) s += static_cast<unsigned __int128>(fv % qe) * x[fc];
        U64 sm = static_cast<U64>(s % qe);
        x[b.pivot] = sm == 0 ? 0 : qe - sm;
      }
      gens.emplace_back(x.begin(), x.end());
    }
    return gens;
  }

 private:
  struct BasisRow {
    std::uint32_t pivot;
    SparseRow free;
  };

  U64 mulmod(U64 a, U64 b) const { return static_cast<U64>((static_cast<unsigned __int128>(a) * b) % q_); }

  // a + f·b for sorted sparse rows.
  SparseRow axpy(const SparseRow& a, U64 f, const SparseRow& b) const {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        U64 v = mulmod(f, b[j].second);
        if (v) out.emplace_back(b[j].first, v);
        ++j;
      } else {
        U64 v = (a[i].second + mulmod(f, b[j].second)) % q_;
        if (v) out.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  SparseRow reduce(const std::vector<std::pair<std::uint32_t, Int>>& row) {
    touched_.clear();
    auto touch = [&](std::uint32_t c) {
      if (!mark_[c]) {
        mark_[c] = 1;
        acc_[c] = 0;
        touched_.push_back(c);
      }
    };
    for (const auto& [c, v] : row) {
      touch(c);
      Int r = v % static_cast<Int>(q_);
      if (r < 0) r += static_cast<Int>(q_);
      acc_[c] = (acc_[c] + static_cast<U64>(r)) % q_;
    }
    for (std::size_t i = 0; i < touched_.size(); ++i) {
      std::uint32_t c = touched_[i];
      if (piv_[c] < 0 || acc_[c] == 0) continue;
      U64 a = acc_[c];
      acc_[c] = 0;
      for (const auto& [fc, fv] : basis_[piv_[c]].free) {
        touch(fc);
        acc_[fc] = (acc_[fc] + q_ - mulmod(a, fv)) % q_;
      }
    }
    SparseRow out;
    for (std::uint32_t c : touched_) {
      if (acc_[c]) out.emplace_back(c, acc_[c]);
      mark_[c] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Smith form over the local ring ℤ/p^E, tracking the column transform.
  void local_smith(std::vector<std::vector<U64>>& r, std::size_t m) {
    v_.assign(m, std::vector<U64>(m, 0));
    for (std::size_t i = 0; i < m; ++i) v_[i][i] = 1;
    diag_val_.assign(m, e_);
    const std::size_t rows = r.size();
    for (std::size_t t = 0; t < std::min(rows, m); ++t) {
      int best = e_;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = t; i < rows && best > 1; ++i) {
        for (std::size_t j = t; j < m; ++j) {
          if (r[i][j] == 0) continue;
          int v = valuation(r[i][j], p_);
          if (v < best) {
            best = v;
            bi = i;
            bj = j;
            if (v <= 1) break;
          }
        }
      }
      if (best == e_) break;
      std::swap(r[t], r[bi]);
      if (bj != t) {
        for (auto& row : r) std::swap(row[t], row[bj]);
        for (auto& row : v_) std::swap(row[t], row[bj]);
      }
      const U64 pv = ipow(p_, best);
      const U64 unit = r[t][t] / pv;
      const U64 inv = mod_inverse(unit, q_);
      for (auto& x : r[t]) x = mulmod(x, inv);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == t || r[i][t] == 0) continue;
        U64 f = r[i][t] / pv;
        for (std::size_t j = t; j < m; ++j) {
          if (r[t][j]) r[i][j] = (r[i][j] + q_ - mulmod(f, r[t][j])) % q_;
        }
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (r[t][j] == 0) continue;
        U64 f = r[t][j] / pv;
        r[t][j] = 0;
        for (auto& row : v_) row[j] = (row[j] + q_ - mulmod(f, row[t])) % q_;
      }
      diag_val_[t] = best;
    }
  }

  std::size_t n_;
  U64 p_;
  int e_;
  U64 q_;
  std::vector<std::int32_t> piv_;
  std::vector<BasisRow> basis_;
  std::vector<SparseRow> residual_;
  std::vector<U64> acc_;
  std::vector<std::uint8_t> mark_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> free_cols_;
  std::vector<std::int32_t> free_index_;
  std::vector<int> diag_val_;
  std::vector<std::vector<U64>> v_;
};

ModEliminator eliminate(const TreeComplex& cx, U64 p, int e) {
  ModEliminator el(cx.ncols(), p, e);
  for (Elem x = 1; x < cx.g.order(); ++x) {
    cx.rows_for(x, [&](const auto& row) { el.add(row); });
  }
  el.finish();
  return el;
}

int log_hom_cyclic(const std::vector<Int>& divisors, U64 p, int e) {
  // log_p ∏ gcd(d, p^e), with d = 0 meaning Z
  int total = 0;
  for (Int d : divisors) {
    if (d == 1) continue;
    total += d == 0 ? e : std::min(valuation(static_cast<U64>(d), p), e);
  }
  return total;
}

// Cached per-prime elimination for one group.
struct CocycleSpace {
  const TreeComplex& cx;
  std::vector<Int> d1;
  std::vector<Int> h1;
  std::map<std::pair<U64, int>, ModEliminator> elims;

  explicit CocycleSpace(const TreeComplex& c) : cx(c), d1(c.d1_divisors()) {
    h1 = abelianization(c.g).h1.invariant_factors();
  }

  ModEliminator& elim(U64 p, int e) {
    auto key = std::make_pair(p, e);
    auto it = elims.find(key);
    if (it == elims.end()) it = elims.emplace(key, eliminate(cx, p, e)).first;
    return it->second;
  }

  int top_exponent(U64 p, int e) const {
    return std::max(valuation(static_cast<U64>(cx.g.order()), p) + 1, e);
  }

  // log_p |Z²|, log_p |B²| for coefficients ℤ/p^e (tree gauge).
  std::pair<int, int> logs(U64 p, int e) {
    int z = elim(p, top_exponent(p, e)).log_kernel(e);
    int ker_d1 = log_hom_cyclic(d1, p, e);
    int hom_h1 = log_hom_cyclic(h1, p, e);
    if (ker_d1 != hom_h1) throw InternalError("inconsistent counts: ker D1 differs from Hom(H1, Z/p^e)");
    int b = static_cast<int>(cx.k) * e - ker_d1;
    if (z < b) throw InternalError("inconsistent counts: coboundaries exceed cocycles");
    return {z, b};
  }
};

std::vector<std::pair<U64, int>> factor(U64 m) {
  std::vector<std::pair<U64, int>> out;
  for (Int p : prime_factors(static_cast<Int>(m))) out.emplace_back(static_cast<U64>(p), valuation(m, static_cast<U64>(p)));
  return out;
}

using Vec = std::vector<std::uint32_t>;

std::vector<Vec> span(const std::vector<Vec>& gens, std::uint32_t d, std::size_t n, std::size_t cap) {
  std::map<Vec, char> seen;
  std::vector<Vec> order{Vec(n, 0)};
  seen.emplace(order[0], 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : gens) {
      Vec v = order[head];
      for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + g[i]) % d;
      if (seen.emplace(v, 0).second) {
        order.push_back(std::move(v));
        if (order.size() > cap) throw CapExceeded("cocycle space exceeds cap " + std::to_string(cap));
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

// Lex-least representative of every class of Z²/B² for ℤ/d coefficients.
std::vector<Vec> canonical_classes(CocycleSpace& sp, std::uint32_t d, std::size_t cap) {
  const TreeComplex& cx = sp.cx;
  const std::size_t n = cx.ncols();
  std::vector<Vec> zgens;
  U64 expected_z = 1, expected_b = 1;
  for (auto [p, e] : factor(d)) {
    const U64 pe = ipow(p, e);
    const U64 co = d / pe;
    const U64 lift = co * mod_inverse(co % pe, pe) % d;  // ≡ 1 mod p^e, ≡ 0 mod d/p^e
    for (const auto& g : sp.elim(p, sp.top_exponent(p, e)).kernel_generators(e)) {
      Vec v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(static_cast<U64>(g[i]) * lift % d);
      zgens.push_back(std::move(v));
    }
    auto [lz, lb] = sp.logs(p, e);
    expected_z *= ipow(p, lz);
    expected_b *= ipow(p, lb);
  }
  std::vector<Vec> bgens;
  for (std::size_t t = 0; t < cx.k; ++t) {
    auto c = cx.coboundary(t);
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(((c[i] % static_cast<Int>(d)) + d) % d);
    bgens.push_back(std::move(v));
  }
  auto z = span(zgens, d, n, cap);
  auto b = span(bgens, d, n, cap);
  if (z.size() != expected_z || b.size() != expected_b) {
    throw InternalError("inconsistent counts: enumerated cocycle space has the wrong size");
  }
  std::map<Vec, std::size_t> index;
  for (std::size_t i = 0; i < z.size(); ++i) index.emplace(z[i], i);
  std::vector<char> done(z.size(), 0);
  std::vector<Vec> reps;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (done[i]) continue;
    reps.push_back(z[i]);
    for (const auto& bb : b) {
      Vec v = z[i];
      for (std::size_t c = 0; c < n; ++c) v[c] = (v[c] + bb[c]) % d;
      auto it = index.find(v);
      if (it == index.end()) throw InternalError("coboundary outside the cocycle space");
      done[it->second] = 1;
    }
  }
  return reps;
}

// f(x, w) for all x, w from tree-gauge values.
std::vector<std::uint32_t> expand(const TreeComplex& cx, const Vec& u, std::uint32_t d) {
  const std::size_t n = cx.g.order();
  std::vector<std::uint32_t> f(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (std::size_t i = 1; i < cx.bfs.size(); ++i) {
      Elem w = cx.bfs[i];
      Elem p = cx.parent[w];
      std::int32_t c = cx.col[static_cast<std::size_t>(cx.g.mul(x, p)) * cx.k + cx.via[w]];
      std::uint32_t val = f[x * n + p];
      if (c >= 0) val = (val + u[c]) % d;
      f[x * n + w] = val;
    }
  }
  return f;
}

}  // namespace

bool Cocycle::is_zero() const {
  return std::all_of(table.begin(), table.end(), [](std::uint32_t v) { return v == 0; });
}

AbelianGroup schur_multiplier(const FiniteGroup& g, const HomologyOptions& options) {
  if (options.store) {
    if (auto cached = options.store->find_h2(g)) return *cached;
  }
  const U64 n = g.order();
  if (n == 1) return {};
  if (n > options.h2_cap) {
    throw CapExceeded("|G| = " + std::to_string(n) + " exceeds the H2 cap " + std::to_string(options.h2_cap));
  }
  TreeComplex cx(g);
  CocycleSpace sp(cx);
  std::vector<Int> factors;
  for (auto [p, v] : factor(n)) {
    const int top = v + 1;
    std::vector<int> c(top + 1, 0);
    for (int e = 1; e <= top; ++e) {
      auto [lz, lb] = sp.logs(p, e);
      int ext = log_hom_cyclic(sp.h1, p, e);
      c[e] = lz - lb - ext;
      if (c[e] < 0) throw InternalError("inconsistent counts: negative Hom(H2, Z/p^e)");
    }
    std::vector<int> m(top + 2, 0);
    for (int e = 1; e <= top; ++e) m[e] = c[e] - c[e - 1];
    if (m[top] != 0) throw InternalError("inconsistent counts: H2 exponent exceeds |G|");
    for (int e = 1; e < top; ++e) {
      if (m[e] < m[e + 1]) throw InternalError("inconsistent counts");
      for (int i = 0; i < m[e] - m[e + 1]; ++i) factors.push_back(static_cast<Int>(ipow(p, e)));
    }
  }
  AbelianGroup h2 = AbelianGroup::from_cyclic_orders(factors);
  if (options.store) options.store->put_h2(g, h2);
  return h2;
}

Int cohomology_order(const FiniteGroup& g, Int m, const HomologyOptions& options) {
  if (m < 1) throw InvalidInput("coefficient modulus must be positive");
  if (g.order() == 1 || m == 1) return 1;
  if (g.order() > options.h2_cap) throw CapExceeded("|G| exceeds the H2 cap");
  TreeComplex cx(g);
  CocycleSpace sp(cx);
  Int total = 1;
  for (auto [p, e] : factor(static_cast<U64>(m))) {
    auto [lz, lb] = sp.logs(p, e);
    total *= static_cast<Int>(ipow(p, lz - lb));
  }
  return total;
}

LocalizedH2 h2_loc(const FiniteGroup& g, const HomologyOptions& options) {
  AbelianGroup h2 = schur_multiplier(g, options);
  AbelianGroup h1 = abelianization(g).h1;
  std::set<Int> primes;
  for (Int d : h1.invariant_factors()) {
    for (Int p : prime_factors(d)) primes.insert(p);
  }
  QuotClass loc = s_localize(h2, primes);
  return {h2, h1, primes, loc};
}

std::vector<Cocycle> two_cocycle_classes(const FiniteGroup& g, const AbelianGroup& k, const HomologyOptions& options) {
  const std::size_t n = g.order();
  if (static_cast<U64>(n) * static_cast<U64>(k.order()) > options.order_cap) {
    throw CapExceeded("|G|·|K| exceeds the order cap " + std::to_string(options.order_cap));
  }
  if (n > options.h2_cap) throw CapExceeded("|G| exceeds the H2 cap " + std::to_string(options.h2_cap));
  if (k.is_trivial() || n == 1) {
    return {Cocycle{g, k, std::vector<std::uint32_t>(n * n, 0),
                    std::vector<std::vector<Int>>(k.rank(), std::vector<Int>{})}};
  }
  TreeComplex cx(g);
  CocycleSpace sp(cx);
  std::vector<std::vector<Vec>> per_factor;
  std::size_t total = 1;
  for (Int d : k.invariant_factors()) {
    per_factor.push_back(canonical_classes(sp, static_cast<std::uint32_t>(d), options.cocycle_cap));
    total *= per_factor.back().size();
    if (total > options.cocycle_cap) throw CapExceeded("too many cohomology classes");
  }
  std::vector<std::vector<std::vector<std::uint32_t>>> tables(per_factor.size());
  for (std::size_t i = 0; i < per_factor.size(); ++i) {
    for (const auto& rep : per_factor[i]) {
      tables[i].push_back(expand(cx, rep, static_cast<std::uint32_t>(k.invariant_factors()[i])));
    }
  }
  std::vector<Cocycle> out;
  std::vector<std::size_t> pick(per_factor.size(), 0);
  std::vector<Int> tuple(per_factor.size());
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = per_factor.size(); i-- > 0;) {
      pick[i] = rest % per_factor[i].size();
      rest /= per_factor[i].size();
    }
    Cocycle f{g, k, std::vector<std::uint32_t>(n * n), {}};
    for (std::size_t i = 0; i < per_factor.size(); ++i) {
      const auto& rep = per_factor[i][pick[i]];
      f.coordinates.emplace_back(rep.begin(), rep.end());
    }
    for (std::size_t cell = 0; cell < n * n; ++cell) {
      for (std::size_t i = 0; i < per_factor.size(); ++i) tuple[i] = tables[i][pick[i]][cell];
      f.table[cell] = static_cast<std::uint32_t>(k.index(tuple));
    }
    check_cocycle(f);
    out.push_back(std::move(f));
  }
  return out;
}

void check_cocycle(const Cocycle& f) {
  const FiniteGroup& g = f.group;
  const std::size_t n = g.order();
  if (f.table.size() != n * n) throw InvalidInput("cocycle table has the wrong size");
  const std::size_t korder = static_cast<std::size_t>(f.kernel.order());
  for (auto v : f.table) {
    if (v >= korder) throw InvalidInput("cocycle value out of range");
  }
  FiniteGroup kg = f.kernel.to_group();
  for (Elem x = 0; x < n; ++x) {
    if (f(0, x) != 0 || f(x, 0) != 0) throw InvalidInput("cocycle is not normalized");
  }
  // The identity for generator third arguments implies it everywhere.
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem s : g.generators()) {
        Elem lhs = kg.mul(f(x, y), f(g.mul(x, y), s));
        Elem rhs = kg.mul(f(y, s), f(x, g.mul(y, s)));
        if (lhs != rhs) throw InvalidInput("cocycle identity fails");
      }
    }
  }
}

CentralExtension build_central_extension(const Cocycle& f, std::string name, std::size_t order_cap) {
  check_cocycle(f);
  const FiniteGroup& g = f.group;
  const std::size_t n = g.order();
  const std::size_t kn = static_cast<std::size_t>(f.kernel.order());
  const std::size_t total = n * kn;
  if (total > order_cap) throw CapExceeded("extension order " + std::to_string(total) + " exceeds cap");
  FiniteGroup kg = f.kernel.to_group(f.kernel.to_string());
  std::vector<Elem> table(total * total);
  for (std::size_t a = 0; a < total; ++a) {
    const Elem g1 = static_cast<Elem>(a / kn), k1 = static_cast<Elem>(a % kn);
    for (std::size_t b = 0; b < total; ++b) {
      const Elem g2 = static_cast<Elem>(b / kn), k2 = static_cast<Elem>(b % kn);
      const Elem k3 = kg.mul(kg.mul(k1, k2), f(g1, g2));
      table[a * total + b] = static_cast<Elem>(g.mul(g1, g2) * kn + k3);
    }
  }
  if (name.empty()) name = "E(" + g.name() + "," + f.kernel.to_string() + ")";
  FiniteGroup x = FiniteGroup::from_table(std::move(name), total, std::move(table), {}, order_cap);
  std::vector<Elem> proj(total), emb(kn);
  for (std::size_t a = 0; a < total; ++a) proj[a] = static_cast<Elem>(a / kn);
  for (std::size_t i = 0; i < kn; ++i) emb[i] = static_cast<Elem>(i);
  return CentralExtension{g, f.kernel, x, GroupHom(x, g, std::move(proj)), GroupHom(kg, x, std::move(emb))};
}

bool is_stem(const CentralExtension& ext) {
  return ext.kernel_subgroup().is_subset_of(derived_subgroup(ext.total));
}

}  // namespace idemlab
