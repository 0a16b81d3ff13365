#ifndef DIFFLIE_LINFTY_HPP
#define DIFFLIE_LINFTY_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "difflie/altmap.hpp"
#include "difflie/lie.hpp"

namespace difflie {

class DegreeMismatch : public std::runtime_error {
 public:
  explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

class NotMaurerCartan : public std::runtime_error {
 public:
  NotMaurerCartan() : std::runtime_error("element is not Maurer-Cartan") {}
};

class InvalidVData : public std::runtime_error {
 public:
  explicit InvalidVData(const std::string& what) : std::runtime_error(what) {}
};

// Shifted: s f with f in M, degree arity - 2. Plain: xi in a, degree arity - 1.
enum class PieceKind { Shifted, Plain };

struct Piece {
  PieceKind kind;
  AltMap map;
};

int piece_degree(const Piece& p);

// Finite sum of homogeneous pieces; like pieces are merged and zero pieces dropped.
class FormalElement {
 public:
  FormalElement() = default;
  static FormalElement shifted(const AltMap& f);
  static FormalElement plain(const AltMap& xi);

  const std::vector<Piece>& pieces() const { return pieces_; }
  void add(PieceKind kind, const AltMap& map, const Scalar& c = 1);

  FormalElement& operator+=(const FormalElement& other);
  FormalElement operator+(const FormalElement& other) const;
  FormalElement operator-(const FormalElement& other) const;
  FormalElement scaled(const Scalar& c) const;
  bool is_zero() const { return pieces_.empty(); }
  bool operator==(const FormalElement& other) const;

  // Common degree of all pieces; nullopt for zero; throws NonHomogeneousInput when mixed.
  std::optional<int> degree() const;
  int max_arity() const;
  // Component of the given kind and arity (zero map with the given dims if absent).
  AltMap component(PieceKind kind, int arity, int src_dim, int tgt_dim) const;

 private:
  std::vector<Piece> pieces_;
};

// Arity-bounded family of degree-1 graded symmetric brackets.
class LInftyAlgebra {
 public:
  virtual ~LInftyAlgebra() = default;
  virtual FormalElement bracket(const std::vector<FormalElement>& args) const = 0;
  // Largest n with l_n possibly nonzero on pieces of arity at most max_arity.
  virtual int bound(int max_arity) const = 0;
};

// Expands arguments into pieces and sorts each tuple (Shifted first, stable) with its Koszul sign.
class PieceAlgebra : public LInftyAlgebra {
 public:
  FormalElement bracket(const std::vector<FormalElement>& args) const override;

 protected:
  // Pieces arrive with every Shifted piece before every Plain piece.
  virtual FormalElement bracket_sorted(const std::vector<const Piece*>& args) const = 0;
};

FormalElement generalized_jacobi_residual(const LInftyAlgebra& L, const std::vector<FormalElement>& args);
FormalElement mc_residual(const LInftyAlgebra& L, const FormalElement& alpha);

class TwistedAlgebra : public LInftyAlgebra {
 public:
  // Throws NotMaurerCartan unless mc_residual(base, alpha) vanishes.
  TwistedAlgebra(const LInftyAlgebra& base, FormalElement alpha);
  FormalElement bracket(const std::vector<FormalElement>& args) const override;
  int bound(int max_arity) const override;

 private:
  const LInftyAlgebra& base_;
  FormalElement alpha_;
};

enum class RescaleVariant { AllBrackets, FixedDifferential };

// AllBrackets: l'_n = lambda^{n-1} l_n. FixedDifferential (needs l_1 = 0): l'_1 = 0, l'_n = lambda^{n-2} l_n.
class RescaledAlgebra : public LInftyAlgebra {
 public:
  RescaledAlgebra(const LInftyAlgebra& base, Scalar lambda, RescaleVariant variant);
  FormalElement bracket(const std::vector<FormalElement>& args) const override;
  int bound(int max_arity) const override { return base_.bound(max_arity); }

 private:
  const LInftyAlgebra& base_;
  Scalar lambda_;
  RescaleVariant variant_;
};

// Closed-form shuffle expression of f(xi_r, ..., xi_1, Id, ...) on the ungraded space of f.
// Sign: (-1)^{sum_{i<j} m_i m_j} times the Koszul sign of applying xi_r (x) ... (x) xi_1 to
// arguments of odd parity. Empty when r exceeds the arity of f.
AltMap key_closed_form(const AltMap& f, const std::vector<AltMap>& xis);

// Brackets on sM (+) a with M = a = Hom(wedge g, g), given by closed formulas.
class AbsoluteStructure : public PieceAlgebra {
 public:
  AbsoluteStructure(int g_dim, Scalar lambda) : g_dim_(g_dim), lambda_(std::move(lambda)) {}
  int g_dim() const { return g_dim_; }
  const Scalar& lambda() const { return lambda_; }
  int bound(int max_arity) const override { return std::max(2, max_arity + 1); }

 protected:
  FormalElement bracket_sorted(const std::vector<const Piece*>& args) const override;

 private:
  int g_dim_;
  Scalar lambda_;
};

// Septuple data realised inside L = Hom(wedge W, W) with the NR bracket.
struct VData {
  int w_dim = 0;
  std::function<AltMap(const AltMap&)> iota_M;
  std::function<AltMap(const AltMap&)> restrict_M;  // left inverse of iota_M
  std::function<AltMap(const AltMap&)> iota_a;
  std::function<AltMap(const AltMap&)> P;
  std::optional<AltMap> delta;                       // element of Ker(P) of degree 1
};

struct VDataReport {
  bool P_iota_a_identity = true;
  bool ker_P_closed = true;
  bool delta_square_zero = true;
  bool delta_preserves_M = true;
  bool P_iota_M_zero = true;
  bool ok() const { return P_iota_a_identity && ker_P_closed && delta_square_zero && delta_preserves_M; }
};

VDataReport check_vdata(const VData& V, const std::vector<AltMap>& M_samples, const std::vector<AltMap>& a_samples);

enum class DerivedTable { General, Reduced };

// General: every bracket from the septuple with weight lambda inserted as lambda^{n-1}.
// Reduced: requires Delta = 0 and P iota_M = 0; lambda^{n-2} on the mixed brackets.
class DerivedStructure : public PieceAlgebra {
 public:
  DerivedStructure(VData V, Scalar lambda, DerivedTable table);
  const VData& vdata() const { return V_; }
  int bound(int max_arity) const override;

 protected:
  FormalElement bracket_sorted(const std::vector<const Piece*>& args) const override;

 private:
  AltMap nested(AltMap start, const std::vector<const Piece*>& xis, std::size_t from) const;
  VData V_;
  Scalar lambda_;
  DerivedTable table_;
};

// Absolute data: W = g (+) g', indices of g first.
VData absolute_vdata(int g_dim);
// Relative data: W = g (+) h, indices of g first; M' is realised directly inside L'.
VData relative_vdata(int g_dim, int h_dim);

AltMap iota_M_absolute(const AltMap& f);
AltMap iota_a_absolute(const AltMap& xi);
AltMap P_absolute(const AltMap& F, int g_dim);

// True when F lies in M': g-output only on all-g inputs, h-output only when an h input occurs.
bool in_relative_M(const AltMap& F, int g_dim);
// Zeroes every coefficient that M' forbids.
AltMap project_relative_M(AltMap F, int g_dim);
// pi + rho^ + mu on g (+) h.
AltMap relative_chi(const AltMap& pi, const std::vector<Matrix>& rho, const AltMap& mu);
AltMap embed_relative_a(const AltMap& xi, int g_dim);  // Hom(wedge g, h) -> L'

std::unique_ptr<DerivedStructure> relative_structure(int g_dim, int h_dim, const Scalar& lambda);
std::unique_ptr<DerivedStructure> absolute_derived_structure(int g_dim, const Scalar& lambda);

// P applied to the iterated circle product (((iota_M f) o xi_1) o ...) o xi_r inside L, compared with
// key_closed_form; also the g-valued part of the restriction to all-g inputs, which must vanish.
struct KeyFormulaReport {
  AltMap iterated;
  AltMap closed;
  AltMap stray;
  bool ok() const { return iterated == closed && stray.is_zero(); }
};
KeyFormulaReport key_formula_check(const AltMap& f, const std::vector<AltMap>& xis);

using StrictMap = std::function<FormalElement(const FormalElement&)>;
// phi(l_n(x_1..x_n)) - l'_n(phi x_1, ..., phi x_n) for every n-subset-with-repetition of samples.
std::vector<FormalElement> morphism_residual(const LInftyAlgebra& source, const LInftyAlgebra& target,
                                             const StrictMap& phi, const std::vector<FormalElement>& samples,
                                             int max_n);

// Absolute on g into relative on (g, h = g'): s f -> s iota_M f, xi -> xi.
FormalElement absolute_to_relative(const FormalElement& x, int g_dim);
// Relative on (g, h) into absolute on g (+) h by natural inclusions.
FormalElement relative_to_absolute(const FormalElement& x, int g_dim, int h_dim);

struct McReport {
  FormalElement residual;
  bool maurer_cartan = false;
  bool structure_ok = false;  // Jacobi and weighted derivation residuals from lie-core
};
McReport mc_check_absolute(const AltMap& pi, const AltMap& D, const Scalar& lambda);

struct RelativeMcReport {
  FormalElement residual;
  bool maurer_cartan = false;
  bool structure_ok = false;  // LieAct and relative operator residuals from lie-core
};
RelativeMcReport mc_check_relative(const LieActTriple& T, const Matrix& D, const Scalar& lambda);

// l_1 of the absolute structure twisted by (s mu, d), applied to (s f, g), plus the DiffLie differential.
FormalElement twist_bridge_residual(const DiffLieAlgebra& A, const AltMap& f, const AltMap& g);

}  // namespace difflie

#endif
