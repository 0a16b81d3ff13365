#include "difflie/cohomology.hpp"

#include <stdexcept>

#include "difflie/combinatorics.hpp"

namespace difflie {

Flavor parse_flavor(const std::string& name) {
  if (name == "ce") return Flavor::CE;
  if (name == "do") return Flavor::DO;
  if (name == "difflie") return Flavor::DiffLie;
  if (name == "tilde") return Flavor::DiffLieTilde;
  throw std::invalid_argument("unknown flavor: " + name);
}

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::CE: return "ce";
    case Flavor::DO: return "do";
    case Flavor::DiffLie: return "difflie";
    case Flavor::DiffLieTilde: return "tilde";
  }
  return "";
}

AltMap ce_apply(const LieAlgebra& g, const std::vector<Matrix>& rho, const AltMap& f) {
  const int n = f.arity();
  const int dim = g.dim;
  const int m = f.tgt_dim();
  AltMap out(n + 1, dim, m);
  std::vector<int> rest;
  for (std::size_t t = 0; t < out.num_tuples(); ++t) {
    const auto x = out.tuple(t);
    Vector acc(static_cast<std::size_t>(m), Scalar(0));
    for (int i = 0; i <= n; ++i) {
      rest.clear();
      for (int k = 0; k <= n; ++k)
        if (k != i) rest.push_back(x[static_cast<std::size_t>(k)]);
      Vector fv = f.on_basis(rest);
      if (is_zero(fv)) continue;
      // 1-based exponent i+n becomes (i+1)+n.
      axpy(acc, sign_power(i + 1 + n), rho[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])] * fv);
    }
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Vector b = g.br_basis(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]);
        Scalar s = sign_power((i + 1) + (j + 1) + n + 1);
        std::vector<int> args(1, 0);
        for (int k = 0; k <= n; ++k)
          if (k != i && k != j) args.push_back(x[static_cast<std::size_t>(k)]);
        for (int c = 0; c < dim; ++c) {
          if (sgn(b[static_cast<std::size_t>(c)]) == 0) continue;
          args[0] = c;
          f.add_on_basis(acc, s * b[static_cast<std::size_t>(c)], args);
        }
      }
    for (int k = 0; k < m; ++k) out.coeff(t, k) = acc[static_cast<std::size_t>(k)];
  }
  return out;
}

AltMap delta_apply(const DiffLieAlgebra& A, const DiffRepresentation& rep, const AltMap& f) {
  const int n = f.arity();
  const int dim = A.dim();
  AltMap out(n, dim, f.tgt_dim());
  for (std::size_t t = 0; t < out.num_tuples(); ++t) {
    const auto x = out.tuple(t);
    Vector acc = scale(-1, rep.dV * f.at(t));
    // Nonempty subsets of positions receive d; weight lambda^{|S|-1}.
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vector> args;
      int k = 0;
      for (int i = 0; i < n; ++i) {
        Vector e = unit_vector(static_cast<std::size_t>(dim), static_cast<std::size_t>(x[static_cast<std::size_t>(i)]));
        if (mask & (1u << i)) {
          args.push_back(A.d * e);
          ++k;
        } else {
          args.push_back(e);
        }
      }
      axpy(acc, power(A.weight, k - 1), f.evaluate(args));
    }
    for (int c = 0; c < f.tgt_dim(); ++c) out.coeff(t, c) = acc[static_cast<std::size_t>(c)];
  }
  return out;
}

CocyclePair difflie_apply(const DiffLieAlgebra& A, const DiffRepresentation& rep, const CocyclePair& pair) {
  const int n = pair.f.arity();
  const DiffRepresentation shifted = rho_lambda(rep, A);
  CocyclePair out;
  out.f = ce_apply(A.algebra, rep.rho, pair.f);
  if (n == 0) {
    // Mapping-cone sign: the second component is -delta^0 v = d_V v.
    out.g = delta_apply(A, rep, pair.f).scaled(-1);
    return out;
  }
  out.g = ce_apply(A.algebra, shifted.rho, pair.g).scaled(-1) - delta_apply(A, rep, pair.f);
  return out;
}

std::size_t alg_cochain_dim(const CochainComplexSpec& spec, int n) {
  if (n < 0) return 0;
  return static_cast<std::size_t>(binomial(spec.algebra.dim(), n) * spec.coefficients.space_dim);
}

std::size_t cochain_dim(const CochainComplexSpec& spec, int n) {
  if (n < 0) return 0;
  switch (spec.flavor) {
    case Flavor::CE:
    case Flavor::DO: return alg_cochain_dim(spec, n);
    case Flavor::DiffLie: return n == 0 ? alg_cochain_dim(spec, 0) : alg_cochain_dim(spec, n) + alg_cochain_dim(spec, n - 1);
    case Flavor::DiffLieTilde:
      if (n == 0) return 0;
      if (n == 1) return alg_cochain_dim(spec, 1);
      return alg_cochain_dim(spec, n) + alg_cochain_dim(spec, n - 1);
  }
  return 0;
}

namespace {

template <class Apply>
Matrix matrix_of(std::size_t in_dim, std::size_t out_dim, Apply apply) {
  Matrix m(out_dim, in_dim);
  for (std::size_t c = 0; c < in_dim; ++c) {
    Vector v = apply(unit_vector(in_dim, c));
    m.set_column(c, v);
  }
  return m;
}

AltMap alt_from(const CochainComplexSpec& spec, int n, const Vector& flat) {
  return AltMap::from_flat(n, spec.algebra.dim(), spec.coefficients.space_dim, flat);
}

}  // namespace

Matrix ce_differential(const CochainComplexSpec& spec, int n) {
  return matrix_of(alg_cochain_dim(spec, n), alg_cochain_dim(spec, n + 1), [&](const Vector& v) {
    return ce_apply(spec.algebra.algebra, spec.coefficients.rho, alt_from(spec, n, v)).flat();
  });
}

Matrix do_differential(const CochainComplexSpec& spec, int n) {
  const DiffRepresentation shifted = rho_lambda(spec.coefficients, spec.algebra);
  return matrix_of(alg_cochain_dim(spec, n), alg_cochain_dim(spec, n + 1), [&](const Vector& v) {
    return ce_apply(spec.algebra.algebra, shifted.rho, alt_from(spec, n, v)).flat();
  });
}

Matrix delta_map(const CochainComplexSpec& spec, int n) {
  return matrix_of(alg_cochain_dim(spec, n), alg_cochain_dim(spec, n), [&](const Vector& v) {
    return delta_apply(spec.algebra, spec.coefficients, alt_from(spec, n, v)).flat();
  });
}

Vector pack_pair(const CocyclePair& p) {
  Vector v = p.f.flat();
  if (p.f.arity() > 0) v.insert(v.end(), p.g.flat().begin(), p.g.flat().end());
  return v;
}

CocyclePair unpack_pair(const CochainComplexSpec& spec, int n, const Vector& v) {
  const std::size_t a = alg_cochain_dim(spec, n);
  CocyclePair p;
  p.f = alt_from(spec, n, Vector(v.begin(), v.begin() + static_cast<long>(a)));
  if (n > 0) p.g = alt_from(spec, n - 1, Vector(v.begin() + static_cast<long>(a), v.end()));
  return p;
}

Matrix difflie_differential(const CochainComplexSpec& spec, int n) {
  CochainComplexSpec full = spec;
  full.flavor = Flavor::DiffLie;
  return matrix_of(cochain_dim(full, n), cochain_dim(full, n + 1), [&](const Vector& v) {
    return pack_pair(difflie_apply(spec.algebra, spec.coefficients, unpack_pair(full, n, v)));
  });
}

Matrix differential(const CochainComplexSpec& spec, int n) {
  switch (spec.flavor) {
    case Flavor::CE: return ce_differential(spec, n);
    case Flavor::DO: return do_differential(spec, n);
    case Flavor::DiffLie: return difflie_differential(spec, n);
    case Flavor::DiffLieTilde: {
      if (n == 0) return Matrix(cochain_dim(spec, 1), 0);
      Matrix full = difflie_differential(spec, n);
      if (n >= 2) return full;
      // C~^1 = C^1_alg sits as the first block of C^1.
      const std::size_t keep = alg_cochain_dim(spec, 1);
      Matrix out(full.rows(), keep);
      for (std::size_t r = 0; r < full.rows(); ++r)
        for (std::size_t c = 0; c < keep; ++c) out(r, c) = full(r, c);
      return out;
    }
  }
  throw std::logic_error("unreachable flavor");
}

std::vector<Matrix> build_complex(const CochainComplexSpec& spec) {
  std::vector<Matrix> d;
  for (int n = 0; n <= spec.max_degree; ++n) d.push_back(differential(spec, n));
  for (int n = 0; n + 1 <= spec.max_degree; ++n)
    if (!(d[static_cast<std::size_t>(n + 1)] * d[static_cast<std::size_t>(n)]).is_zero()) throw CompositionNonzero();
  return d;
}

std::vector<std::size_t> cohomology_dims(const CochainComplexSpec& spec) {
  auto d = build_complex(spec);
  std::vector<std::size_t> dims;
  for (int n = 0; n < spec.max_degree; ++n) {
    Matrix in = n == 0 ? Matrix(cochain_dim(spec, 0), 0) : d[static_cast<std::size_t>(n - 1)];
    dims.push_back(homology_dim(d[static_cast<std::size_t>(n)], in));
  }
  return dims;
}

ComplexReport complex_report(const CochainComplexSpec& spec) {
  ComplexReport r;
  for (int n = 0; n <= spec.max_degree; ++n) r.dims_C.push_back(cochain_dim(spec, n));
  try {
    r.dims_H = cohomology_dims(spec);
  } catch (const CompositionNonzero&) {
    r.d_squared_ok = false;
  }
  return r;
}

Vector cocycle_residual(const CochainComplexSpec& spec, int n, const CocyclePair& pair) {
  return pack_pair(difflie_apply(spec.algebra, spec.coefficients, pair));
}

std::vector<Vector> cohomology_representatives(const CochainComplexSpec& spec, int n) {
  const Matrix d_out = differential(spec, n);
  const std::size_t dim = cochain_dim(spec, n);
  std::vector<Vector> span;
  if (n > 0) {
    const Matrix d_in = differential(spec, n - 1);
    for (std::size_t c = 0; c < d_in.cols(); ++c) span.push_back(d_in.column(c));
  }
  std::size_t r = span.empty() ? 0 : rank(Matrix::from_columns(span, dim));
  std::vector<Vector> reps;
  for (const auto& z : kernel_basis(d_out)) {
    span.push_back(z);
    const std::size_t r2 = rank(Matrix::from_columns(span, dim));
    if (r2 > r) {
      reps.push_back(z);
      r = r2;
    } else {
      span.pop_back();
    }
  }
  return reps;
}

std::optional<Vector> coboundary_preimage(const CochainComplexSpec& spec, int n, const Vector& target) {
  if (n == 0) return is_zero(target) ? std::optional<Vector>(Vector()) : std::nullopt;
  return solve(differential(spec, n - 1), target);
}

Matrix embedding_into_extension(const CochainComplexSpec& small, int n) {
  const int N = small.algebra.dim();
  const int m = small.coefficients.space_dim;
  const int big = N + m;
  CochainComplexSpec full = small;
  full.flavor = Flavor::DiffLie;
  auto lift = [&](const AltMap& f) {
    AltMap F(f.arity(), big, big);
    for (std::size_t t = 0; t < f.num_tuples(); ++t) {
      Vector v(static_cast<std::size_t>(big), Scalar(0));
      for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(N + k)] = f.coeff(t, k);
      F.set(f.tuple(t), v);
    }
    return F;
  };
  const std::size_t in_dim = cochain_dim(full, n);
  const std::size_t out_dim = n == 0 ? static_cast<std::size_t>(big)
                                     : static_cast<std::size_t>(binomial(big, n) * big + binomial(big, n - 1) * big);
  return matrix_of(in_dim, out_dim, [&](const Vector& v) {
    CocyclePair p = unpack_pair(full, n, v);
    CocyclePair q;
    q.f = lift(p.f);
    if (n > 0) q.g = lift(p.g);
    return pack_pair(q);
  });
}

}  // namespace difflie
