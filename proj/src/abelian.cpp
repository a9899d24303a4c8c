#include "idemlab/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "idemlab/error.hpp"

namespace idemlab {

namespace {

Int checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw InternalError("integer overflow in abelian arithmetic");
  return static_cast<Int>(v);
}

Int mod_pos(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct ExtGcd {
  Int g, x, y;
};

ExtGcd ext_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Inserts v into an r x r upper-triangular basis whose lattice contains
// moduli[j] * e_j for every j.
void hermite_insert(IntMatrix& basis, std::vector<Int> v, const std::vector<Int>& moduli) {
  const std::size_t r = basis.cols();
  for (std::size_t j = 0; j < r; ++j) {
    v[j] = mod_pos(v[j], moduli[j]);
    if (v[j] == 0) continue;
    Int bj = basis(j, j);
    auto [g, x, y] = ext_gcd(bj, v[j]);
    Int a = v[j] / g;
    Int b = bj / g;
    std::vector<Int> nb(r), nv(r);
    for (std::size_t k = j; k < r; ++k) {
      nb[k] = checked(static_cast<__int128>(x) * basis(j, k) + static_cast<__int128>(y) * v[k]);
      nv[k] = checked(static_cast<__int128>(a) * basis(j, k) - static_cast<__int128>(b) * v[k]);
      if (k > j) {
        nb[k] = mod_pos(nb[k], moduli[k]);
        nv[k] = mod_pos(nv[k], moduli[k]);
      }
    }
    for (std::size_t k = 0; k < j; ++k) nb[k] = nv[k] = 0;
    nb[j] = g;
    nv[j] = 0;
    for (std::size_t k = 0; k < r; ++k) basis(j, k) = nb[k];
    v = std::move(nv);
  }
}

void hermite_finalize(IntMatrix& basis) {
  const std::size_t r = basis.cols();
  for (std::size_t j = 0; j < r; ++j) {
    Int p = basis(j, j);
    for (std::size_t i = 0; i < j; ++i) {
      Int q = floor_div(basis(i, j), p);
      if (q == 0) continue;
      for (std::size_t k = j; k < r; ++k) basis(i, k) = checked(static_cast<__int128>(basis(i, k)) - static_cast<__int128>(q) * basis(j, k));
    }
  }
}

IntMatrix diagonal_basis(const std::vector<Int>& d) {
  IntMatrix b(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) b(i, i) = d[i];
  return b;
}

// Coefficients c with v = c · basis (basis upper triangular, v in the row
// lattice).
std::vector<Int> solve_in_basis(const IntMatrix& basis, std::vector<Int> v) {
  const std::size_t r = basis.cols();
  std::vector<Int> c(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    if (v[j] % basis(j, j) != 0) throw InternalError("vector not in lattice");
    c[j] = v[j] / basis(j, j);
    if (c[j] == 0) continue;
    for (std::size_t k = j; k < r; ++k) v[k] = checked(static_cast<__int128>(v[k]) - static_cast<__int128>(c[j]) * basis(j, k));
  }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Int> IntMatrix::row(std::size_t r) const {
  return std::vector<Int>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<Int> IntMatrix::col(std::size_t c) const {
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = checked(static_cast<__int128>(out(i, j)) + static_cast<__int128>(x) * b(k, j));
      }
    }
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t j = 0; j < rows; ++j) std::swap(u(a, j), u(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < cols; ++i) std::swap(v(i, a), v(i, b));
  };
  // row_a -= q * row_b
  auto row_axpy = [&](std::size_t a, std::size_t b, Int q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) d(a, j) = checked(static_cast<__int128>(d(a, j)) - static_cast<__int128>(q) * d(b, j));
    for (std::size_t j = 0; j < rows; ++j) u(a, j) = checked(static_cast<__int128>(u(a, j)) - static_cast<__int128>(q) * u(b, j));
  };
  auto col_axpy = [&](std::size_t a, std::size_t b, Int q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows; ++i) d(i, a) = checked(static_cast<__int128>(d(i, a)) - static_cast<__int128>(q) * d(i, b));
    for (std::size_t i = 0; i < cols; ++i) v(i, a) = checked(static_cast<__int128>(v(i, a)) - static_cast<__int128>(q) * v(i, b));
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    bool any = false;
    while (true) {
      // Smallest nonzero |entry| in the trailing block.
      std::size_t pi = 0, pj = 0;
      Int best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          Int a = d(i, j) < 0 ? -d(i, j) : d(i, j);
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) break;
      any = true;
      swap_rows(t, pi);
      swap_cols(t, pj);
      Int p = d(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        row_axpy(i, t, d(i, t) / p);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        col_axpy(j, t, d(t, j) / p);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(i, j) % p != 0) {
            row_axpy(t, i, -1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (!any) break;
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  SmithForm out;
  out.diagonal.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = d(t, t);
  out.row_transform = std::move(u);
  out.column_transform = std::move(v);
  return out;
}

Int gcd_int(Int a, Int b) { return std::gcd(a, b); }
Int lcm_int(Int a, Int b) { return std::lcm(a, b); }

std::vector<Int> divisors(Int n) {
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<Int>& orders) {
  std::map<Int, std::vector<Int>> powers;  // prime -> prime powers
  for (Int o : orders) {
    if (o <= 0) throw InvalidInput("cyclic order must be positive");
    Int n = o;
    for (Int p : prime_factors(n)) {
      Int q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
  }
  std::size_t len = 0;
  for (auto& [p, list] : powers) {
    std::sort(list.begin(), list.end(), std::greater<>());
    len = std::max(len, list.size());
  }
  AbelianGroup g;
  g.factors_.assign(len, 1);
  // Largest prime powers go to the last factor.
  for (auto& [p, list] : powers) {
    for (std::size_t i = 0; i < list.size(); ++i) g.factors_[len - 1 - i] *= list[i];
  }
  return g;
}

Int AbelianGroup::order() const {
  Int o = 1;
  for (Int d : factors_) o = checked(static_cast<__int128>(o) * d);
  return o;
}

std::vector<Int> AbelianGroup::element(std::size_t index) const {
  std::vector<Int> t(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    t[i] = static_cast<Int>(index % factors_[i]);
    index /= factors_[i];
  }
  return t;
}

std::size_t AbelianGroup::index(const std::vector<Int>& tuple) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + mod_pos(tuple[i], factors_[i]);
  return idx;
}

std::vector<Int> AbelianGroup::reduce(std::vector<Int> tuple) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) tuple[i] = mod_pos(tuple[i], factors_[i]);
  return tuple;
}

std::vector<Int> AbelianGroup::add(const std::vector<Int>& a, const std::vector<Int>& b) const {
  std::vector<Int> t(factors_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = mod_pos(a[i] + b[i], factors_[i]);
  return t;
}

FiniteGroup AbelianGroup::to_group(std::string name) const {
  const std::size_t n = static_cast<std::size_t>(order());
  std::vector<std::vector<Int>> elems(n);
  for (std::size_t i = 0; i < n; ++i) elems[i] = element(i);
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>(index(add(elems[a], elems[b])));
  }
  return FiniteGroup::from_table(name.empty() ? to_string() : std::move(name), n, std::move(table), {},
                                 std::max(n, kDefaultOrderCap));
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " + ";
    s += "Z/" + std::to_string(factors_[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------

AbelianSubgroup::AbelianSubgroup(AbelianGroup parent, const std::vector<std::vector<Int>>& generators)
    : parent_(std::move(parent)) {
  const auto& d = parent_.invariant_factors();
  basis_ = diagonal_basis(d);
  for (const auto& g : generators) {
    if (g.size() != d.size()) throw InvalidInput("generator has wrong length");
    hermite_insert(basis_, g, d);
  }
  hermite_finalize(basis_);
}

AbelianSubgroup AbelianSubgroup::whole(const AbelianGroup& a) {
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    std::vector<Int> e(a.rank(), 0);
    e[i] = 1;
    gens.push_back(e);
  }
  return AbelianSubgroup(a, gens);
}

AbelianSubgroup AbelianSubgroup::trivial(const AbelianGroup& a) { return AbelianSubgroup(a, {}); }

Int AbelianSubgroup::order() const {
  Int det = 1;
  for (std::size_t i = 0; i < basis_.rows(); ++i) det *= basis_(i, i);
  return parent_.order() / det;
}

bool AbelianSubgroup::contains(const std::vector<Int>& tuple) const {
  std::vector<Int> x = parent_.reduce(tuple);
  const std::size_t r = basis_.cols();
  for (std::size_t j = 0; j < r; ++j) {
    if (x[j] % basis_(j, j) != 0) return false;
    Int c = x[j] / basis_(j, j);
    if (c == 0) continue;
    for (std::size_t k = j; k < r; ++k) x[k] -= c * basis_(j, k);
  }
  return true;
}

bool AbelianSubgroup::is_subset_of(const AbelianSubgroup& other) const {
  for (const auto& g : generators()) {
    if (!other.contains(g)) return false;
  }
  return true;
}

std::vector<std::size_t> AbelianSubgroup::element_indices() const {
  std::vector<std::size_t> out;
  const auto n = static_cast<std::size_t>(parent_.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (contains(parent_.element(i))) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<Int>> AbelianSubgroup::generators() const {
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    auto g = parent_.reduce(basis_.row(i));
    if (std::any_of(g.begin(), g.end(), [](Int v) { return v != 0; })) out.push_back(std::move(g));
  }
  return out;
}

AbelianGroup AbelianSubgroup::isomorphism_type() const {
  const auto& d = parent_.invariant_factors();
  const std::size_t r = d.size();
  // Relations: the rows of diag(d) written in the basis of L.
  IntMatrix rel(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Int> v(r, 0);
    v[i] = d[i];
    auto c = solve_in_basis(basis_, v);
    for (std::size_t j = 0; j < r; ++j) rel(i, j) = c[j];
  }
  auto snf = smith_normal_form(rel);
  std::vector<Int> orders;
  for (Int x : snf.diagonal) {
    if (x == 0) throw InternalError("subgroup of a finite group is infinite");
    if (x > 1) orders.push_back(x);
  }
  return AbelianGroup::from_cyclic_orders(orders);
}

bool operator<(const AbelianSubgroup& a, const AbelianSubgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  const auto& x = a.basis_;
  const auto& y = b.basis_;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j) != y(i, j)) return x(i, j) < y(i, j);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

AbelianNormalForm abelian_invariants(const FiniteGroup& a) {
  if (!a.is_abelian()) throw InvalidInput("group " + a.name() + " is not abelian");
  const std::size_t n = a.order();
  AbelianNormalForm out;
  if (n == 1) {
    out.coordinates.assign(1, {});
    return out;
  }
  auto gens = a.generators();
  const std::size_t k = gens.size();
  // BFS words as exponent vectors.
  std::vector<std::vector<Int>> word(n);
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Elem> queue{0};
  word[0].assign(k, 0);
  seen[0] = 1;
  std::vector<Int> moduli(k);
  for (std::size_t i = 0; i < k; ++i) moduli[i] = a.element_order(gens[i]);
  IntMatrix basis = diagonal_basis(moduli);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem y = queue[head];
    for (std::size_t i = 0; i < k; ++i) {
      Elem z = a.mul(y, gens[i]);
      std::vector<Int> w = word[y];
      w[i] += 1;
      if (!seen[z]) {
        seen[z] = 1;
        word[z] = std::move(w);
        queue.push_back(z);
      } else {
        for (std::size_t j = 0; j < k; ++j) w[j] -= word[z][j];
        hermite_insert(basis, std::move(w), moduli);
      }
    }
  }
  hermite_finalize(basis);
  auto snf = smith_normal_form(basis);
  std::vector<std::size_t> keep;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    if (snf.diagonal[i] > 1) {
      keep.push_back(i);
      factors.push_back(snf.diagonal[i]);
    }
  }
  out.group = AbelianGroup::from_cyclic_orders(factors);
  if (out.group.invariant_factors() != factors) throw InternalError("Smith diagonal not in divisibility order");
  if (out.group.order() != static_cast<Int>(n)) throw InternalError("abelian invariants do not match the order");
  const auto& v = snf.column_transform;
  out.coordinates.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Int> c(keep.size(), 0);
    for (std::size_t t = 0; t < keep.size(); ++t) {
      __int128 s = 0;
      for (std::size_t j = 0; j < k; ++j) s += static_cast<__int128>(word[x][j]) * v(j, keep[t]);
      c[t] = mod_pos(static_cast<Int>(s % factors[t]), factors[t]);
    }
    out.coordinates[x] = std::move(c);
  }
  return out;
}

std::vector<Int> QuotClass::apply(const std::vector<Int>& x) const {
  const auto& e = quotient.invariant_factors();
  std::vector<Int> out(e.size(), 0);
  for (std::size_t t = 0; t < e.size(); ++t) {
    __int128 s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += static_cast<__int128>(x[j]) * to_quotient(j, t);
    out[t] = mod_pos(static_cast<Int>(s % e[t]), e[t]);
  }
  return out;
}

QuotClass make_quot_class(const AbelianSubgroup& kernel) {
  const IntMatrix& b = kernel.hermite_basis();
  auto snf = smith_normal_form(b);
  const std::size_t r = b.cols();
  std::vector<std::size_t> keep;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    if (snf.diagonal[i] > 1) {
      keep.push_back(i);
      factors.push_back(snf.diagonal[i]);
    }
  }
  QuotClass q;
  q.kernel = kernel;
  q.quotient = AbelianGroup::from_cyclic_orders(factors);
  if (q.quotient.invariant_factors() != factors) throw InternalError("Smith diagonal not in divisibility order");
  q.to_quotient = IntMatrix(r, keep.size());
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t t = 0; t < keep.size(); ++t) q.to_quotient(j, t) = snf.column_transform(j, keep[t]);
  }
  return q;
}

std::vector<AbelianSubgroup> all_subgroups(const AbelianGroup& a, Int cap) {
  if (a.order() > cap) throw CapExceeded("abelian group order exceeds subgroup enumeration cap");
  const auto n = static_cast<std::size_t>(a.order());
  std::vector<std::vector<Int>> elems(n);
  for (std::size_t i = 0; i < n; ++i) elems[i] = a.element(i);
  std::set<AbelianSubgroup> found;
  std::vector<AbelianSubgroup> frontier{AbelianSubgroup::trivial(a)};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<AbelianSubgroup> next;
    for (const auto& s : frontier) {
      auto gens = s.generators();
      for (std::size_t i = 1; i < n; ++i) {
        if (s.contains(elems[i])) continue;
        auto g = gens;
        g.push_back(elems[i]);
        AbelianSubgroup t(a, g);
        if (found.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<QuotClass> quot_classes(const AbelianGroup& a, Int cap) {
  std::vector<QuotClass> out;
  for (const auto& s : all_subgroups(a, cap)) out.push_back(make_quot_class(s));
  return out;
}

AbelianSubgroup k_torsion(const AbelianGroup& a, Int k) {
  if (k <= 0) throw InvalidInput("torsion index must be positive");
  const auto& d = a.invariant_factors();
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::vector<Int> e(d.size(), 0);
    e[i] = d[i] / std::gcd(d[i], k);
    gens.push_back(std::move(e));
  }
  return AbelianSubgroup(a, gens);
}

AbelianSubgroup s_torsion(const AbelianGroup& a, const std::set<Int>& primes) {
  const auto& d = a.invariant_factors();
  std::vector<std::vector<Int>> gens;
  for (std::size_t i = 0; i < d.size(); ++i) {
    Int s_part = 1;
    Int rest = d[i];
    for (Int p : primes) {
      while (rest % p == 0) {
        rest /= p;
        s_part *= p;
      }
    }
    std::vector<Int> e(d.size(), 0);
    e[i] = d[i] / s_part;
    gens.push_back(std::move(e));
  }
  return AbelianSubgroup(a, gens);
}

QuotClass s_localize(const AbelianGroup& a, const std::set<Int>& primes) {
  return make_quot_class(s_torsion(a, primes));
}

Int hom_count_abelian(const AbelianGroup& a, const AbelianGroup& b) {
  Int count = 1;
  for (Int x : a.invariant_factors()) {
    for (Int y : b.invariant_factors()) count = checked(static_cast<__int128>(count) * std::gcd(x, y));
  }
  return count;
}

AbelianSubgroup apply_endomorphism(const AbelianSubgroup& s, const IntMatrix& m) {
  const auto& a = s.parent();
  std::vector<std::vector<Int>> images;
  for (const auto& g : s.generators()) {
    std::vector<Int> img(a.rank(), 0);
    for (std::size_t j = 0; j < a.rank(); ++j) {
      __int128 acc = 0;
      for (std::size_t i = 0; i < a.rank(); ++i) acc += static_cast<__int128>(g[i]) * m(i, j);
      img[j] = mod_pos(static_cast<Int>(acc % a.invariant_factors()[j]), a.invariant_factors()[j]);
    }
    images.push_back(std::move(img));
  }
  return AbelianSubgroup(a, images);
}

std::vector<AbelianSubgroup> invariant_subgroups(const AbelianGroup& a,
                                                 const std::vector<IntMatrix>& endomorphisms) {
  std::vector<AbelianSubgroup> out;
  for (const auto& s : all_subgroups(a)) {
    bool fixed = std::all_of(endomorphisms.begin(), endomorphisms.end(),
                             [&](const IntMatrix& m) { return apply_endomorphism(s, m).is_subset_of(s); });
    if (fixed) out.push_back(s);
  }
  return out;
}

}  // namespace idemlab
