#include "duplex/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace duplex {

namespace {

Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorKind::BudgetExceeded, "integer overflow in matrix arithmetic");
  return r;
}

Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorKind::BudgetExceeded, "integer overflow in matrix arithmetic");
  return r;
}

Int mod(Int x, Int d) {
  if (d == 0) return x;
  Int r = x % d;
  return r < 0 ? r + d : r;
}

// row_i += q * row_j
void add_row(IntMatrix& m, int i, int j, Int q) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = checked_add(m.at(i, c), checked_mul(q, m.at(j, c)));
}

void add_col(IntMatrix& m, int i, int j, Int q) {
  for (int r = 0; r < m.rows; ++r) m.at(r, i) = checked_add(m.at(r, i), checked_mul(q, m.at(r, j)));
}

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

struct Smith {
  IntMatrix D, U, V, Vi;
  bool track_u;
};

void run_smith(Smith& s) {
  IntMatrix& D = s.D;
  const int r = D.rows, c = D.cols;
  for (int t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = t; i < r; ++i) {
        for (int j = t; j < c; ++j) {
          Int v = D.at(i, j) < 0 ? -D.at(i, j) : D.at(i, j);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return;
      swap_rows(D, t, pi);
      if (s.track_u) swap_rows(s.U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(s.V, t, pj);
      swap_rows(s.Vi, t, pj);
      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        Int q = D.at(i, t) / D.at(t, t);
        if (q != 0) {
          add_row(D, i, t, -q);
          if (s.track_u) add_row(s.U, i, t, -q);
        }
        if (D.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < c; ++j) {
        Int q = D.at(t, j) / D.at(t, t);
        if (q != 0) {
          add_col(D, j, t, -q);
          add_col(s.V, j, t, -q);
          add_row(s.Vi, t, j, q);
        }
        if (D.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i) {
        for (int j = t + 1; j < c; ++j) {
          if (D.at(i, j) % D.at(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      add_row(D, t, bad, 1);
      if (s.track_u) add_row(s.U, t, bad, 1);
    }
    if (D.at(t, t) < 0) {
      for (int j = 0; j < c; ++j) D.at(t, j) = -D.at(t, j);
      if (s.track_u) {
        for (int j = 0; j < r; ++j) s.U.at(t, j) = -s.U.at(t, j);
      }
    }
  }
}

Smith smith(const IntMatrix& M, bool track_u) {
  Smith s{M, track_u ? IntMatrix::identity(M.rows) : IntMatrix{}, IntMatrix::identity(M.cols),
          IntMatrix::identity(M.cols), track_u};
  run_smith(s);
  return s;
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rs, int cols) {
  IntMatrix m(static_cast<int>(rs.size()), cols);
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(rs[i].size()) != cols) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rs[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw Error(ErrorKind::ShapeMismatch, "matrix product of incompatible shapes");
  IntMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) = checked_add(out.at(i, j), checked_mul(x.at(i, k), y.at(k, j)));
    }
  }
  return out;
}

std::vector<Int> SmithResult::invariant_factors() const {
  std::vector<Int> out;
  for (int t = 0; t < D.cols; ++t) out.push_back(t < D.rows ? D.at(t, t) : 0);
  return out;
}

SmithResult smith_normal_form(const IntMatrix& M) {
  auto s = smith(M, true);
  return {std::move(s.U), std::move(s.D), std::move(s.V), std::move(s.Vi)};
}

bool AbGroup::finite() const noexcept {
  return std::none_of(factors.begin(), factors.end(), [](Int d) { return d == 0; });
}

Int AbGroup::order() const {
  if (!finite()) throw Error(ErrorKind::InvalidInput, "infinite group " + describe());
  Int n = 1;
  for (Int d : factors) n = checked_mul(n, d);
  return n;
}

std::vector<Int> AbGroup::reduce(std::vector<Int> x) const {
  if (x.size() != factors.size()) throw Error(ErrorKind::ShapeMismatch, "element of the wrong rank");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i], factors[i]);
  return x;
}

std::vector<Int> AbGroup::unit(int j) const {
  auto x = zero();
  x.at(j) = 1;
  return x;
}

Int AbGroup::index_of(const std::vector<Int>& x) const {
  Int idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + x[i];
  return idx;
}

std::vector<Int> AbGroup::element(Int index) const {
  std::vector<Int> x(factors.size());
  for (int i = rank() - 1; i >= 0; --i) {
    x[i] = index % factors[i];
    index /= factors[i];
  }
  return x;
}

std::vector<std::vector<Int>> AbGroup::elements() const {
  std::vector<std::vector<Int>> out;
  const Int n = order();
  out.reserve(n);
  for (Int i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

std::string AbGroup::describe() const {
  if (factors.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << " + ";
    if (factors[i] == 0) {
      os << "Z";
    } else {
      os << "Z/" << factors[i];
    }
  }
  return os.str();
}

PresentedAbGroup::NormalForm PresentedAbGroup::normal_form() const {
  const int k = static_cast<int>(orders.size());
  std::vector<std::vector<Int>> rows;
  for (int j = 0; j < k; ++j) {
    if (orders[j] != 0) {
      std::vector<Int> r(k, 0);
      r[j] = orders[j];
      rows.push_back(std::move(r));
    }
  }
  for (const auto& r : relations) rows.push_back(r);
  auto s = smith(IntMatrix::from_rows(rows, k), false);
  std::vector<int> kept;
  NormalForm nf;
  for (int t = 0; t < k; ++t) {
    Int d = t < s.D.rows ? s.D.at(t, t) : 0;
    if (d != 1) {
      kept.push_back(t);
      nf.group.factors.push_back(d);
    }
  }
  const int r = static_cast<int>(kept.size());
  nf.proj = IntMatrix(r, k);
  nf.lift = IntMatrix(k, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < k; ++j) {
      nf.proj.at(i, j) = mod(s.V.at(j, kept[i]), nf.group.factors[i]);
      nf.lift.at(j, i) = s.Vi.at(kept[i], j);
    }
  }
  return nf;
}

bool well_defined(const AbGroup& dom, const AbGroup& cod, const IntMatrix& m) {
  if (m.rows != cod.rank() || m.cols != dom.rank()) return false;
  for (int j = 0; j < dom.rank(); ++j) {
    for (int i = 0; i < cod.rank(); ++i) {
      if (mod(checked_mul(dom.factors[j], m.at(i, j)), cod.factors[i]) != 0) return false;
    }
  }
  return true;
}

AbHom::AbHom(AbGroup dom, AbGroup cod, IntMatrix m) : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(m)) {
  if (m_.rows != cod_.rank() || m_.cols != dom_.rank()) throw Error(ErrorKind::ShapeMismatch, "hom matrix shape");
  for (int i = 0; i < m_.rows; ++i) {
    for (int j = 0; j < m_.cols; ++j) m_.at(i, j) = mod(m_.at(i, j), cod_.factors[i]);
  }
}

AbHom AbHom::identity(const AbGroup& g) { return AbHom(g, g, IntMatrix::identity(g.rank())); }

AbHom AbHom::zero(const AbGroup& dom, const AbGroup& cod) { return AbHom(dom, cod, IntMatrix(cod.rank(), dom.rank())); }

AbHom AbHom::from_images(const AbGroup& dom, const AbGroup& cod, const std::vector<std::vector<Int>>& images) {
  if (static_cast<int>(images.size()) != dom.rank()) throw Error(ErrorKind::ShapeMismatch, "one image per generator");
  IntMatrix m(cod.rank(), dom.rank());
  for (int j = 0; j < dom.rank(); ++j) {
    if (static_cast<int>(images[j].size()) != cod.rank()) throw Error(ErrorKind::ShapeMismatch, "image of wrong rank");
    for (int i = 0; i < cod.rank(); ++i) m.at(i, j) = images[j][i];
  }
  if (!well_defined(dom, cod, m)) throw Error(ErrorKind::ShapeMismatch, "images do not respect generator orders");
  return AbHom(dom, cod, std::move(m));
}

std::vector<Int> AbHom::image(int j) const {
  std::vector<Int> y(cod_.rank());
  for (int i = 0; i < cod_.rank(); ++i) y[i] = m_.at(i, j);
  return y;
}

std::vector<Int> AbHom::apply(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != dom_.rank()) throw Error(ErrorKind::ShapeMismatch, "element of the wrong rank");
  std::vector<Int> y(cod_.rank(), 0);
  for (int i = 0; i < cod_.rank(); ++i) {
    for (int j = 0; j < dom_.rank(); ++j) y[i] = mod(checked_add(y[i], checked_mul(m_.at(i, j), x[j])), cod_.factors[i]);
  }
  return y;
}

AbHom compose(const AbHom& g, const AbHom& f) {
  if (!(f.cod() == g.dom())) throw Error(ErrorKind::ShapeMismatch, "composing homs with mismatched ends");
  return AbHom(f.dom(), g.cod(), multiply(g.matrix(), f.matrix()));
}

AbHom add(const AbHom& f, const AbHom& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw Error(ErrorKind::ShapeMismatch, "adding homs of different shape");
  IntMatrix m = f.matrix();
  for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = checked_add(m.a[i], g.matrix().a[i]);
  return AbHom(f.dom(), f.cod(), std::move(m));
}

AbHom negate(const AbHom& f) {
  IntMatrix m = f.matrix();
  for (auto& v : m.a) v = -v;
  return AbHom(f.dom(), f.cod(), std::move(m));
}

std::vector<AbHom> enumerate_homs(const AbGroup& dom, const AbGroup& cod, Budget& budget) {
  const auto targets = cod.elements();
  std::vector<std::vector<std::vector<Int>>> choices(dom.rank());
  for (int j = 0; j < dom.rank(); ++j) {
    for (const auto& y : targets) {
      bool ok = true;
      for (int i = 0; i < cod.rank() && ok; ++i) ok = mod(checked_mul(dom.factors[j], y[i]), cod.factors[i]) == 0;
      if (ok) choices[j].push_back(y);
    }
  }
  std::vector<AbHom> out;
  std::vector<std::vector<Int>> images(dom.rank());
  std::vector<std::size_t> pos(dom.rank(), 0);
  for (;;) {
    budget.charge();
    for (int j = 0; j < dom.rank(); ++j) images[j] = choices[j][pos[j]];
    out.push_back(AbHom::from_images(dom, cod, images));
    int j = dom.rank() - 1;
    while (j >= 0 && ++pos[j] == choices[j].size()) pos[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

std::vector<Int> TensorGroup::pair(const std::vector<Int>& x, const std::vector<Int>& y) const {
  std::vector<Int> s(static_cast<std::size_t>(left.rank()) * right.rank());
  for (int i = 0; i < left.rank(); ++i) {
    for (int j = 0; j < right.rank(); ++j) s[i * right.rank() + j] = checked_mul(x[i], y[j]);
  }
  return form.group.reduce(AbHom(AbGroup{std::vector<Int>(s.size(), 0)}, form.group, form.proj).apply(s));
}

TensorGroup tensor(const AbGroup& g, const AbGroup& h) {
  PresentedAbGroup p;
  for (Int d : g.factors) {
    for (Int e : h.factors) p.orders.push_back(std::gcd(d, e));
  }
  return {g, h, p.normal_form()};
}

HomGroup hom_group(const AbGroup& g, const AbGroup& h) {
  PresentedAbGroup p;
  for (Int d : g.factors) {
    for (Int e : h.factors) {
      if (e == 0 && d != 0) throw Error(ErrorKind::InvalidInput, "Hom into a free summand from torsion is zero; unsupported");
      p.orders.push_back(std::gcd(d, e));
    }
  }
  return {g, h, p.normal_form()};
}

AbHom HomGroup::to_hom(const std::vector<Int>& element) const {
  const int k = static_cast<int>(form.lift.rows);
  std::vector<Int> s(k, 0);
  for (int t = 0; t < k; ++t) {
    for (int c = 0; c < form.group.rank(); ++c) s[t] = checked_add(s[t], checked_mul(form.lift.at(t, c), element[c]));
  }
  IntMatrix m(cod.rank(), dom.rank());
  for (int i = 0; i < dom.rank(); ++i) {
    for (int j = 0; j < cod.rank(); ++j) {
      Int g = std::gcd(dom.factors[i], cod.factors[j]);
      Int step = g == 0 ? 1 : cod.factors[j] / g;
      m.at(j, i) = checked_mul(s[i * cod.rank() + j], step);
    }
  }
  return AbHom(dom, cod, std::move(m));
}

std::vector<Int> HomGroup::from_hom(const AbHom& f) const {
  if (!(f.dom() == dom) || !(f.cod() == cod)) throw Error(ErrorKind::ShapeMismatch, "hom of the wrong shape");
  std::vector<Int> s;
  for (int i = 0; i < dom.rank(); ++i) {
    for (int j = 0; j < cod.rank(); ++j) {
      Int g = std::gcd(dom.factors[i], cod.factors[j]);
      Int step = g == 0 ? 1 : cod.factors[j] / g;
      s.push_back(f.matrix().at(j, i) / step);
    }
  }
  return AbHom(AbGroup{std::vector<Int>(s.size(), 0)}, form.group, form.proj).apply(s);
}

Report check_carrier_group(const CarrierGroup& c) {
  const int n = c.size;
  if (n <= 0 || static_cast<int>(c.add.size()) != n || c.zero < 0 || c.zero >= n) {
    throw Error(ErrorKind::ShapeMismatch, "carrier table shape");
  }
  for (const auto& row : c.add) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::ShapeMismatch, "carrier table shape");
    for (int v : row) {
      if (v < 0 || v >= n) throw Error(ErrorKind::ShapeMismatch, "carrier table entry out of range");
    }
  }
  auto w = [](int x, int y) { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; };
  for (int x = 0; x < n; ++x) {
    if (c.add[c.zero][x] != x) return Report::fail("AddIdentity", std::to_string(x));
    bool has_neg = false;
    for (int y = 0; y < n; ++y) {
      if (c.add[x][y] != c.add[y][x]) return Report::fail("AddCommutative", w(x, y));
      has_neg = has_neg || c.add[x][y] == c.zero;
      for (int z = 0; z < n; ++z) {
        if (c.add[c.add[x][y]][z] != c.add[x][c.add[y][z]]) return Report::fail("AddAssociative", w(x, y) + "," + std::to_string(z));
      }
    }
    if (!has_neg) return Report::fail("AddInverse", std::to_string(x));
  }
  return Report::pass();
}

CarrierIso decompose(const CarrierGroup& c) {
  if (auto r = check_carrier_group(c); !r) throw Error(ErrorKind::InvalidInput, "not an abelian group: " + r.describe());
  const int n = c.size;
  PresentedAbGroup p{std::vector<Int>(n, 0), {}};
  {
    std::vector<Int> r(n, 0);
    r[c.zero] = 1;
    p.relations.push_back(r);
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      std::vector<Int> r(n, 0);
      r[x] += 1;
      r[y] += 1;
      r[c.add[x][y]] -= 1;
      p.relations.push_back(std::move(r));
    }
  }
  auto nf = p.normal_form();
  CarrierIso iso;
  iso.group = nf.group;
  if (!iso.group.finite()) throw Error(ErrorKind::InvalidInput, "carrier presentation is not finite");
  iso.carrier_of.assign(static_cast<std::size_t>(iso.group.order()), -1);
  for (int x = 0; x < n; ++x) {
    std::vector<Int> v(iso.group.rank());
    for (int i = 0; i < iso.group.rank(); ++i) v[i] = nf.proj.at(i, x);
    Int idx = iso.group.index_of(v);
    if (iso.carrier_of[idx] != -1) throw Error(ErrorKind::InvalidInput, "decomposition is not injective");
    iso.carrier_of[idx] = x;
    iso.coords.push_back(std::move(v));
  }
  return iso;
}

std::optional<AbHom> AbTarget::inverse(const AbHom& f) const {
  if (!f.dom().finite() || !f.cod().finite() || f.dom().order() != f.cod().order()) return std::nullopt;
  const auto elems = f.dom().elements();
  std::vector<std::vector<Int>> images(f.cod().rank());
  std::vector<bool> found(f.cod().rank(), false);
  std::vector<bool> hit(static_cast<std::size_t>(f.cod().order()), false);
  for (const auto& x : elems) {
    auto y = f.apply(x);
    Int idx = f.cod().index_of(y);
    if (hit[idx]) return std::nullopt;
    hit[idx] = true;
    for (int j = 0; j < f.cod().rank(); ++j) {
      if (!found[j] && y == f.cod().unit(j)) {
        found[j] = true;
        images[j] = x;
      }
    }
  }
  return AbHom::from_images(f.cod(), f.dom(), images);
}

}  // namespace duplex
