#include "difflie/linfty.hpp"

#include <algorithm>

#include "difflie/cohomology.hpp"
#include "difflie/combinatorics.hpp"
#include "difflie/graded.hpp"
#include "difflie/nr_bracket.hpp"

namespace difflie {

namespace {

int parity(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

bool shape_less(const Piece& a, const Piece& b) {
  if (a.kind != b.kind) return a.kind == PieceKind::Shifted;
  if (a.map.arity() != b.map.arity()) return a.map.arity() < b.map.arity();
  if (a.map.src_dim() != b.map.src_dim()) return a.map.src_dim() < b.map.src_dim();
  return a.map.tgt_dim() < b.map.tgt_dim();
}

bool same_slot(const Piece& a, PieceKind kind, const AltMap& m) { return a.kind == kind && a.map.same_shape(m); }

}  // namespace

int piece_degree(const Piece& p) { return p.kind == PieceKind::Shifted ? p.map.arity() - 2 : p.map.arity() - 1; }

FormalElement FormalElement::shifted(const AltMap& f) {
  FormalElement e;
  e.add(PieceKind::Shifted, f);
  return e;
}

FormalElement FormalElement::plain(const AltMap& xi) {
  FormalElement e;
  e.add(PieceKind::Plain, xi);
  return e;
}

void FormalElement::add(PieceKind kind, const AltMap& map, const Scalar& c) {
  if (sgn(c) == 0 || map.is_zero()) return;
  for (auto it = pieces_.begin(); it != pieces_.end(); ++it) {
    if (!same_slot(*it, kind, map)) continue;
    it->map += map.scaled(c);
    if (it->map.is_zero()) pieces_.erase(it);
    return;
  }
  Piece p{kind, c == 1 ? map : map.scaled(c)};
  pieces_.insert(std::upper_bound(pieces_.begin(), pieces_.end(), p, shape_less), p);
}

FormalElement& FormalElement::operator+=(const FormalElement& other) {
  for (const auto& p : other.pieces_) add(p.kind, p.map);
  return *this;
}

FormalElement FormalElement::operator+(const FormalElement& other) const {
  FormalElement r = *this;
  r += other;
  return r;
}

FormalElement FormalElement::operator-(const FormalElement& other) const {
  FormalElement r = *this;
  for (const auto& p : other.pieces_) r.add(p.kind, p.map, -1);
  return r;
}

FormalElement FormalElement::scaled(const Scalar& c) const {
  FormalElement r;
  for (const auto& p : pieces_) r.add(p.kind, p.map, c);
  return r;
}

bool FormalElement::operator==(const FormalElement& other) const { return (*this - other).is_zero(); }

std::optional<int> FormalElement::degree() const {
  std::optional<int> d;
  for (const auto& p : pieces_) {
    const int k = piece_degree(p);
    if (d && *d != k) throw NonHomogeneousInput();
    d = k;
  }
  return d;
}

int FormalElement::max_arity() const {
  int m = 0;
  for (const auto& p : pieces_) m = std::max(m, p.map.arity());
  return m;
}

AltMap FormalElement::component(PieceKind kind, int arity, int src_dim, int tgt_dim) const {
  AltMap probe(arity, src_dim, tgt_dim);
  for (const auto& p : pieces_)
    if (same_slot(p, kind, probe)) return p.map;
  return probe;
}

namespace {

void expand_pieces(const std::vector<FormalElement>& args, std::size_t pos,
                   std::vector<const Piece*>& chosen, FormalElement& out,
                   const std::function<FormalElement(const std::vector<const Piece*>&)>& eval) {
  if (pos == args.size()) {
    const int n = static_cast<int>(chosen.size());
    Permutation sigma;
    for (int k = 0; k < n; ++k)
      if (chosen[static_cast<std::size_t>(k)]->kind == PieceKind::Shifted) sigma.push_back(k);
    for (int k = 0; k < n; ++k)
      if (chosen[static_cast<std::size_t>(k)]->kind == PieceKind::Plain) sigma.push_back(k);
    DegreeVector degs;
    for (const Piece* p : chosen) degs.push_back(piece_degree(*p));
    std::vector<const Piece*> sorted;
    for (int k : sigma) sorted.push_back(chosen[static_cast<std::size_t>(k)]);
    out += eval(sorted).scaled(koszul_sign(sigma, degs));
    return;
  }
  for (const auto& p : args[pos].pieces()) {
    chosen.push_back(&p);
    expand_pieces(args, pos + 1, chosen, out, eval);
    chosen.pop_back();
  }
}

}  // namespace

FormalElement PieceAlgebra::bracket(const std::vector<FormalElement>& args) const {
  FormalElement out;
  if (args.empty()) return out;
  std::vector<const Piece*> chosen;
  expand_pieces(args, 0, chosen, out, [this](const std::vector<const Piece*>& s) { return bracket_sorted(s); });
  return out;
}

FormalElement generalized_jacobi_residual(const LInftyAlgebra& L, const std::vector<FormalElement>& args) {
  const int n = static_cast<int>(args.size());
  FormalElement out;
  DegreeVector degs;
  for (const auto& a : args) {
    auto d = a.degree();
    if (!d) return out;
    degs.push_back(*d);
  }
  for (int i = 1; i <= n; ++i)
    for (const auto& sigma : shuffles({i, n - i})) {
      std::vector<FormalElement> inner, outer;
      for (int k = 0; k < i; ++k) inner.push_back(args[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])]);
      outer.push_back(L.bracket(inner));
      for (int k = i; k < n; ++k) outer.push_back(args[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])]);
      out += L.bracket(outer).scaled(koszul_sign(sigma, degs));
    }
  return out;
}

FormalElement mc_residual(const LInftyAlgebra& L, const FormalElement& alpha) {
  auto d = alpha.degree();
  if (d && *d != 0) throw DegreeMismatch("Maurer-Cartan elements have degree 0");
  FormalElement out;
  const int bound = L.bound(alpha.max_arity());
  for (int n = 1; n <= bound; ++n) {
    std::vector<FormalElement> args(static_cast<std::size_t>(n), alpha);
    out += L.bracket(args).scaled(Scalar(1) / factorial(n));
  }
  return out;
}

TwistedAlgebra::TwistedAlgebra(const LInftyAlgebra& base, FormalElement alpha) : base_(base), alpha_(std::move(alpha)) {
  if (!mc_residual(base_, alpha_).is_zero()) throw NotMaurerCartan();
}

int TwistedAlgebra::bound(int max_arity) const { return base_.bound(std::max(max_arity, alpha_.max_arity())); }

FormalElement TwistedAlgebra::bracket(const std::vector<FormalElement>& args) const {
  int m = alpha_.max_arity();
  for (const auto& a : args) m = std::max(m, a.max_arity());
  const int total = base_.bound(m);
  FormalElement out;
  const int n = static_cast<int>(args.size());
  for (int i = 0; n + i <= total; ++i) {
    std::vector<FormalElement> full(static_cast<std::size_t>(i), alpha_);
    full.insert(full.end(), args.begin(), args.end());
    out += base_.bracket(full).scaled(Scalar(1) / factorial(i));
  }
  return out;
}

RescaledAlgebra::RescaledAlgebra(const LInftyAlgebra& base, Scalar lambda, RescaleVariant variant)
    : base_(base), lambda_(std::move(lambda)), variant_(variant) {}

FormalElement RescaledAlgebra::bracket(const std::vector<FormalElement>& args) const {
  const int n = static_cast<int>(args.size());
  if (variant_ == RescaleVariant::AllBrackets) return base_.bracket(args).scaled(power(lambda_, n - 1));
  if (n == 1) return FormalElement();
  return base_.bracket(args).scaled(power(lambda_, n - 2));
}

AltMap key_closed_form(const AltMap& f, const std::vector<AltMap>& xis) {
  const int r = static_cast<int>(xis.size());
  const int a = f.arity();
  const int dim = f.src_dim();
  int t = a - r;
  for (const auto& xi : xis) t += xi.arity();
  if (r > a || t < 0) return AltMap(std::max(t, 0), dim, f.tgt_dim());
  AltMap out(t, dim, f.tgt_dim());
  // m_j = arity(xi_j) - 1; xi_j is xis[j-1].
  std::vector<long> m;
  for (const auto& xi : xis) m.push_back(xi.arity() - 1);
  long exponent = 0;
  for (int j = 0; j < r; ++j)
    for (int k = j + 1; k < r; ++k) exponent += m[static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k)];
  for (int j = 0; j < r; ++j)
    for (int k = j + 1; k < r; ++k) exponent += m[static_cast<std::size_t>(j)] * (m[static_cast<std::size_t>(k)] + 1);
  const Scalar base_sign = parity(exponent) ? -1 : 1;
  std::vector<int> blocks;
  for (int j = r - 1; j >= 0; --j) blocks.push_back(xis[static_cast<std::size_t>(j)].arity());
  blocks.push_back(a - r);
  const auto sh = shuffles(blocks);
  for (std::size_t ti = 0; ti < out.num_tuples(); ++ti) {
    const auto x = out.tuple(ti);
    Vector acc(static_cast<std::size_t>(f.tgt_dim()), Scalar(0));
    for (const auto& tau : sh) {
      std::vector<Vector> args;
      std::size_t pos = 0;
      bool vanishes = false;
      for (int b = 0; b < r; ++b) {
        const AltMap& xi = xis[static_cast<std::size_t>(r - 1 - b)];
        std::vector<int> in;
        for (int k = 0; k < xi.arity(); ++k) in.push_back(x[static_cast<std::size_t>(tau[pos++])]);
        Vector v = xi.on_basis(in);
        vanishes = vanishes || difflie::is_zero(v);
        args.push_back(std::move(v));
      }
      if (vanishes) continue;
      for (; pos < static_cast<std::size_t>(t); ++pos)
        args.push_back(unit_vector(static_cast<std::size_t>(dim), static_cast<std::size_t>(x[static_cast<std::size_t>(tau[pos])])));
      axpy(acc, base_sign * signature(tau), f.evaluate(args));
    }
    for (int k = 0; k < f.tgt_dim(); ++k) out.coeff(ti, k) = acc[static_cast<std::size_t>(k)];
  }
  return out;
}

FormalElement AbsoluteStructure::bracket_sorted(const std::vector<const Piece*>& args) const {
  const int n = static_cast<int>(args.size());
  int k = 0;
  for (const Piece* p : args) k += p->kind == PieceKind::Shifted ? 1 : 0;
  FormalElement out;
  if (n < 2 || k == 0 || (k == 2 && n > 2) || k > 2) return out;
  const AltMap& f = args[0]->map;
  if (k == 2) {
    const AltMap& g = args[1]->map;
    out.add(PieceKind::Shifted, nr_bracket(f, g), sign_power(nr_degree(f)));
    return out;
  }
  if (n == 2) {
    out.add(PieceKind::Plain, nr_bracket(f, args[1]->map));
    return out;
  }
  if (n - 1 > f.arity()) return out;
  std::vector<AltMap> xis;
  for (int i = 1; i < n; ++i) xis.push_back(args[static_cast<std::size_t>(i)]->map);
  out.add(PieceKind::Plain, key_closed_form(f, xis), power(lambda_, n - 2));
  return out;
}

AltMap iota_M_absolute(const AltMap& f) {
  const int N = f.src_dim();
  AltMap F(f.arity(), 2 * N, 2 * N);
  for (std::size_t t = 0; t < F.num_tuples(); ++t) {
    auto w = F.tuple(t);
    bool primed = false;
    for (int& i : w)
      if (i >= N) {
        primed = true;
        i -= N;
      }
    const Vector v = f.on_basis(w);
    const int off = primed ? N : 0;
    for (int c = 0; c < N; ++c) F.coeff(t, off + c) = v[static_cast<std::size_t>(c)];
  }
  return F;
}

AltMap iota_a_absolute(const AltMap& xi) {
  const int N = xi.src_dim();
  AltMap F(xi.arity(), 2 * N, 2 * N);
  for (std::size_t t = 0; t < xi.num_tuples(); ++t) {
    Vector v(static_cast<std::size_t>(2 * N), Scalar(0));
    for (int c = 0; c < N; ++c) v[static_cast<std::size_t>(N + c)] = xi.coeff(t, c);
    F.set(xi.tuple(t), v);
  }
  return F;
}

namespace {

// Restriction of F on W = U (+) R (U first, dim u) to tuples inside U, output block [off, off + len).
AltMap restrict_block(const AltMap& F, int u, int off, int len) {
  AltMap out(F.arity(), u, len);
  for (std::size_t t = 0; t < out.num_tuples(); ++t) {
    const Vector v = F.on_basis(out.tuple(t));
    for (int c = 0; c < len; ++c) out.coeff(t, c) = v[static_cast<std::size_t>(off + c)];
  }
  return out;
}

}  // namespace

AltMap P_absolute(const AltMap& F, int g_dim) { return restrict_block(F, g_dim, g_dim, g_dim); }

bool in_relative_M(const AltMap& F, int g_dim) {
  const int W = F.src_dim();
  for (std::size_t t = 0; t < F.num_tuples(); ++t) {
    const auto w = F.tuple(t);
    const bool all_g = std::all_of(w.begin(), w.end(), [&](int i) { return i < g_dim; });
    for (int c = 0; c < W; ++c) {
      if (sgn(F.coeff(t, c)) == 0) continue;
      const bool g_out = c < g_dim;
      if (g_out != all_g) return false;
    }
  }
  return true;
}

AltMap project_relative_M(AltMap F, int g_dim) {
  for (std::size_t t = 0; t < F.num_tuples(); ++t) {
    const auto w = F.tuple(t);
    const bool all_g = std::all_of(w.begin(), w.end(), [&](int i) { return i < g_dim; });
    for (int c = 0; c < F.tgt_dim(); ++c)
      if ((c < g_dim) != all_g) F.coeff(t, c) = 0;
  }
  return F;
}

AltMap relative_chi(const AltMap& pi, const std::vector<Matrix>& rho, const AltMap& mu) {
  const int g = pi.src_dim();
  const int h = mu.src_dim();
  AltMap chi(2, g + h, g + h);
  for (int i = 0; i < g + h; ++i)
    for (int j = i + 1; j < g + h; ++j) {
      Vector v(static_cast<std::size_t>(g + h), Scalar(0));
      if (j < g) {
        const Vector p = pi.on_basis({i, j});
        for (int c = 0; c < g; ++c) v[static_cast<std::size_t>(c)] = p[static_cast<std::size_t>(c)];
      } else if (i < g) {
        const Vector r = rho[static_cast<std::size_t>(i)].column(static_cast<std::size_t>(j - g));
        for (int c = 0; c < h; ++c) v[static_cast<std::size_t>(g + c)] = r[static_cast<std::size_t>(c)];
      } else {
        const Vector m = mu.on_basis({i - g, j - g});
        for (int c = 0; c < h; ++c) v[static_cast<std::size_t>(g + c)] = m[static_cast<std::size_t>(c)];
      }
      chi.set({i, j}, v);
    }
  return chi;
}

AltMap embed_relative_a(const AltMap& xi, int g_dim) {
  const int h = xi.tgt_dim();
  AltMap F(xi.arity(), g_dim + h, g_dim + h);
  for (std::size_t t = 0; t < xi.num_tuples(); ++t) {
    Vector v(static_cast<std::size_t>(g_dim + h), Scalar(0));
    for (int c = 0; c < h; ++c) v[static_cast<std::size_t>(g_dim + c)] = xi.coeff(t, c);
    F.set(xi.tuple(t), v);
  }
  return F;
}

VData absolute_vdata(int g_dim) {
  VData V;
  V.w_dim = 2 * g_dim;
  V.iota_M = iota_M_absolute;
  V.restrict_M = [g_dim](const AltMap& F) { return restrict_block(F, g_dim, 0, g_dim); };
  V.iota_a = iota_a_absolute;
  V.P = [g_dim](const AltMap& F) { return P_absolute(F, g_dim); };
  return V;
}

VData relative_vdata(int g_dim, int h_dim) {
  VData V;
  V.w_dim = g_dim + h_dim;
  V.iota_M = [](const AltMap& f) { return f; };
  V.restrict_M = [](const AltMap& f) { return f; };
  V.iota_a = [g_dim](const AltMap& xi) { return embed_relative_a(xi, g_dim); };
  V.P = [g_dim, h_dim](const AltMap& F) { return restrict_block(F, g_dim, g_dim, h_dim); };
  return V;
}

VDataReport check_vdata(const VData& V, const std::vector<AltMap>& M_samples, const std::vector<AltMap>& a_samples) {
  VDataReport r;
  for (const auto& xi : a_samples) r.P_iota_a_identity = r.P_iota_a_identity && V.P(V.iota_a(xi)) == xi;
  std::vector<AltMap> kernel;
  for (const auto& f : M_samples) {
    const AltMap F = V.iota_M(f);
    const AltMap Pf = V.P(F);
    r.P_iota_M_zero = r.P_iota_M_zero && Pf.is_zero();
    kernel.push_back(F - V.iota_a(Pf));
  }
  for (const auto& X : kernel)
    for (const auto& Y : kernel) r.ker_P_closed = r.ker_P_closed && V.P(nr_bracket(X, Y)).is_zero();
  if (V.delta) {
    r.delta_square_zero = nr_bracket(*V.delta, *V.delta).is_zero() && V.P(*V.delta).is_zero();
    for (const auto& f : M_samples) {
      const AltMap B = nr_bracket(*V.delta, V.iota_M(f));
      r.delta_preserves_M = r.delta_preserves_M && V.iota_M(V.restrict_M(B)) == B;
    }
  }
  return r;
}

DerivedStructure::DerivedStructure(VData V, Scalar lambda, DerivedTable table)
    : V_(std::move(V)), lambda_(std::move(lambda)), table_(table) {
  if (table_ == DerivedTable::Reduced && V_.delta && !V_.delta->is_zero())
    throw InvalidVData("reduced table needs Delta = 0");
}

int DerivedStructure::bound(int max_arity) const {
  int m = max_arity;
  if (V_.delta) m = std::max(m, V_.delta->arity());
  return std::max(2, m + 1);
}

AltMap DerivedStructure::nested(AltMap start, const std::vector<const Piece*>& xis, std::size_t from) const {
  for (std::size_t i = from; i < xis.size(); ++i) {
    // Two constants bracket into degree -2, which is zero.
    if (start.arity() == 0 && xis[i]->map.arity() == 0) return AltMap(0, start.src_dim(), start.tgt_dim());
    start = nr_bracket(start, V_.iota_a(xis[i]->map));
  }
  return start;
}

FormalElement DerivedStructure::bracket_sorted(const std::vector<const Piece*>& args) const {
  const int n = static_cast<int>(args.size());
  int k = 0;
  for (const Piece* p : args) k += p->kind == PieceKind::Shifted ? 1 : 0;
  FormalElement out;
  const bool general = table_ == DerivedTable::General;
  const bool has_delta = V_.delta && !V_.delta->is_zero();
  if (k == 2 && n == 2) {
    const AltMap& f = args[0]->map;
    const Scalar c = sign_power(nr_degree(f)) * (general ? lambda_ : Scalar(1));
    out.add(PieceKind::Shifted, nr_bracket(f, args[1]->map), c);
    return out;
  }
  if (k > 1) return out;
  if (n == 1) {
    if (!general) return out;
    if (k == 1) {
      const AltMap F = V_.iota_M(args[0]->map);
      if (has_delta) out.add(PieceKind::Shifted, V_.restrict_M(nr_bracket(*V_.delta, F)), -1);
      out.add(PieceKind::Plain, V_.P(F));
    } else if (has_delta) {
      out.add(PieceKind::Plain, V_.P(nr_bracket(*V_.delta, V_.iota_a(args[0]->map))));
    }
    return out;
  }
  if (k == 1) {
    const AltMap X = nested(V_.iota_M(args[0]->map), args, 1);
    out.add(PieceKind::Plain, V_.P(X), power(lambda_, general ? n - 1 : n - 2));
  } else if (general && has_delta) {
    const AltMap X = nested(*V_.delta, args, 0);
    out.add(PieceKind::Plain, V_.P(X), power(lambda_, n - 1));
  }
  return out;
}

std::unique_ptr<DerivedStructure> relative_structure(int g_dim, int h_dim, const Scalar& lambda) {
  return std::make_unique<DerivedStructure>(relative_vdata(g_dim, h_dim), lambda, DerivedTable::Reduced);
}

std::unique_ptr<DerivedStructure> absolute_derived_structure(int g_dim, const Scalar& lambda) {
  return std::make_unique<DerivedStructure>(absolute_vdata(g_dim), lambda, DerivedTable::Reduced);
}

KeyFormulaReport key_formula_check(const AltMap& f, const std::vector<AltMap>& xis) {
  const int N = f.src_dim();
  AltMap X = iota_M_absolute(f);
  bool vanished = false;
  for (const auto& xi : xis) {
    if (X.arity() == 0 && xi.arity() == 0) {
      vanished = true;
      break;
    }
    X = circ_bar(X, iota_a_absolute(xi));
  }
  KeyFormulaReport r;
  r.closed = key_closed_form(f, xis);
  if (vanished) {
    r.iterated = AltMap(r.closed.arity(), N, f.tgt_dim());
    r.stray = AltMap(r.closed.arity(), N, N);
    return r;
  }
  r.iterated = P_absolute(X, N);
  r.stray = restrict_block(X, N, 0, N);
  return r;
}

namespace {

void multisets(int count, int n, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < count; ++i) {
    cur.push_back(i);
    multisets(count, n, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<FormalElement> morphism_residual(const LInftyAlgebra& source, const LInftyAlgebra& target,
                                             const StrictMap& phi, const std::vector<FormalElement>& samples,
                                             int max_n) {
  std::vector<FormalElement> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::vector<int>> picks;
    std::vector<int> cur;
    multisets(static_cast<int>(samples.size()), n, 0, cur, picks);
    for (const auto& pick : picks) {
      std::vector<FormalElement> xs, ys;
      for (int i : pick) {
        xs.push_back(samples[static_cast<std::size_t>(i)]);
        ys.push_back(phi(samples[static_cast<std::size_t>(i)]));
      }
      out.push_back(phi(source.bracket(xs)) - target.bracket(ys));
    }
  }
  return out;
}

FormalElement absolute_to_relative(const FormalElement& x, int /*g_dim*/) {
  FormalElement out;
  for (const auto& p : x.pieces()) {
    if (p.kind == PieceKind::Shifted)
      out.add(PieceKind::Shifted, iota_M_absolute(p.map));
    else
      out.add(PieceKind::Plain, p.map);
  }
  return out;
}

FormalElement relative_to_absolute(const FormalElement& x, int g_dim, int /*h_dim*/) {
  FormalElement out;
  for (const auto& p : x.pieces()) {
    if (p.kind == PieceKind::Shifted)
      out.add(PieceKind::Shifted, p.map);
    else
      out.add(PieceKind::Plain, embed_relative_a(p.map, g_dim));
  }
  return out;
}

McReport mc_check_absolute(const AltMap& pi, const AltMap& D, const Scalar& lambda) {
  AbsoluteStructure A(pi.src_dim(), lambda);
  McReport r;
  r.residual = mc_residual(A, FormalElement::shifted(pi) + FormalElement::plain(D));
  r.maurer_cartan = r.residual.is_zero();
  DiffLieAlgebra cand{LieAlgebra(pi.src_dim(), pi), D.to_matrix(), lambda};
  r.structure_ok = is_lie(cand.algebra) && all_zero(weighted_derivation_residual(cand));
  return r;
}

RelativeMcReport mc_check_relative(const LieActTriple& T, const Matrix& D, const Scalar& lambda) {
  auto L = relative_structure(T.g.dim, T.h.dim, lambda);
  const AltMap chi = relative_chi(T.g.bracket, T.rho, T.h.bracket);
  RelativeMcReport r;
  r.residual = mc_residual(*L, FormalElement::shifted(chi) + FormalElement::plain(AltMap::from_matrix(D)));
  r.maurer_cartan = r.residual.is_zero();
  r.structure_ok = is_lie(T.g) && is_lie(T.h) && lieact_residuals(T).ok() &&
                   all_zero(relative_diff_residual(T, D, lambda));
  return r;
}

FormalElement twist_bridge_residual(const DiffLieAlgebra& A, const AltMap& f, const AltMap& g) {
  AbsoluteStructure base(A.dim(), A.weight);
  const FormalElement alpha = FormalElement::shifted(A.algebra.bracket) + FormalElement::plain(AltMap::from_matrix(A.d));
  TwistedAlgebra twisted(base, alpha);
  const FormalElement l1 = twisted.bracket({FormalElement::shifted(f) + FormalElement::plain(g)});
  const CocyclePair d = difflie_apply(A, adjoint_rep(A), CocyclePair{f, g});
  return l1 + FormalElement::shifted(d.f) + FormalElement::plain(d.g);
}

}  // namespace difflie
