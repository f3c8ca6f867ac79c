#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "semidual/ring.hpp"

namespace semidual {

/// Vector helpers over a presented ring; results are in storage order and
/// normal form.
Vec ring_scale(const Ring& R, const Polynomial& p, const Vec& v);
Vec ring_add(const Ring& R, const Vec& a, const Vec& b);
Vec ring_sub(const Ring& R, const Vec& a, const Vec& b);
Vec unit_vec(const Ring& R, std::uint32_t comp, const Polynomial& p);
/// Terms of `v` in component `comp`, as a ring element.
Polynomial component(const Ring& R, const Vec& v, std::uint32_t comp);
std::string vec_string(const Ring& R, const Vec& v);

/// Matrix over a presented ring, stored as sparse columns (terms carry the
/// row in `comp`).
class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t rows) : ring_(std::move(ring)), rows_(rows) {}
  /// Normalizes each column.
  Matrix(Ring ring, std::size_t rows, std::vector<Vec> cols);
  /// `entries[i][j]` is row i, column j.
  static Matrix from_entries(Ring ring, std::size_t rows, std::size_t cols,
                             const std::vector<std::vector<Polynomial>>& entries);
  static Matrix identity(Ring ring, std::size_t n);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  const Vec& col(std::size_t j) const { return cols_[j]; }
  const std::vector<Vec>& columns() const { return cols_; }
  Polynomial entry(std::size_t i, std::size_t j) const;

  /// Appends a column that is already in normal form.
  void push_normalized(Vec v) { cols_.push_back(std::move(v)); }
  void push(Vec v);

  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& coords) const;
  Matrix transpose() const;
  /// A (x) I_n: row (i, a) -> i*n + a, column (j, a) -> j*n + a.
  Matrix kron_identity(std::size_t n) const;
  /// I_m (x) A: row (k, i) -> k*rows + i, column (k, j) -> k*cols + j.
  Matrix identity_kron(std::size_t m) const;
  Matrix hcat(const Matrix& o) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;
  std::string to_string() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::vector<Vec> cols_;
};

/// A finitely presented module: the cokernel of its presentation matrix
/// (rows are generators, columns relations). Generator degrees are optional
/// and used for Hilbert functions only.
class PresentedModule {
 public:
  PresentedModule() = default;
  explicit PresentedModule(Matrix presentation, std::optional<std::vector<int>> degrees = std::nullopt);

  static PresentedModule free(const Ring& R, std::size_t n);
  /// The ideal (gens) as an abstract module: generators are the ideal
  /// generators, relations their syzygies.
  static PresentedModule ideal(const Ring& R, const std::vector<Polynomial>& gens);

  const Ring& ring() const { return pres_.ring(); }
  std::size_t ngens() const { return pres_.rows(); }
  const Matrix& presentation() const { return pres_; }
  const std::optional<std::vector<int>>& degrees() const { return degrees_; }
  /// Ideal generators when built by ideal().
  const std::vector<Polynomial>& ideal_gens() const { return ideal_gens_; }
  bool is_ideal() const { return !ideal_gens_.empty() || is_ideal_; }

  /// Groebner basis of the relation submodule (plus ring relations).
  const ModuleGB& gb() const;
  /// Canonical representative of a vector over the generators.
  Vec normal_form(const Vec& v) const;
  bool is_zero_element(const Vec& v) const { return normal_form(v).empty(); }

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<ModuleGB> gb;
  };
  Matrix pres_;
  std::optional<std::vector<int>> degrees_;
  std::vector<Polynomial> ideal_gens_;
  bool is_ideal_ = false;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Homomorphism given by the images of the source generators (columns over
/// the target generators). Construction checks that every source relation
/// maps into the target relations.
class ModuleMap {
 public:
  ModuleMap(PresentedModule source, PresentedModule target, Matrix matrix);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  Vec apply(const Vec& coords) const { return matrix_.apply(coords); }

 private:
  PresentedModule source_, target_;
  Matrix matrix_;
};

/// Generators of the syzygy module of the columns of A. A matrix with no
/// rows yields the identity.
Matrix syzygy_matrix(const Matrix& A);
/// Generators of {x : out * x in image(rel)}.
Matrix preimage(const Matrix& out, const Matrix& rel);

/// Coordinates of vectors over a fixed generating set (the columns of G).
class Lifter {
 public:
  explicit Lifter(const Matrix& G);
  /// c with G c = v (modulo the ring), or nullopt when v is not in the image.
  std::optional<Vec> lift(const Vec& v) const;

 private:
  Ring ring_;
  std::uint32_t rows_ = 0;
  std::shared_ptr<ModuleGB> gb_;
};

/// Result of eliminating generators at unit entries of a presentation.
struct Pruning {
  Matrix pres;                      // over the kept generators
  std::vector<std::size_t> kept;    // original indices of kept generators
  std::size_t original = 0;
  std::vector<std::pair<std::uint32_t, Vec>> steps;  // gen i = combination of the others
  /// Coordinates over the original generators -> over the kept ones.
  Vec transform(const Ring& R, Vec coords) const;
};
Pruning prune(const Matrix& pres);

/// A submodule Z of R^b modulo the relations D (restricted to Z), with a
/// pruned presentation and coordinates of ambient vectors.
class Subquotient {
 public:
  Subquotient(const Matrix& Z, const Matrix& D, std::optional<std::vector<int>> ambient_degrees = std::nullopt);

  const PresentedModule& module() const { return module_; }
  /// Ambient vectors of the module generators.
  const Matrix& gens() const { return gens_; }
  std::size_t ambient_rank() const { return gens_.rows(); }
  /// Coordinates over module() of an ambient vector lying in Z + D.
  /// Throws std::domain_error when it does not.
  Vec coordinates(const Vec& z) const;

 private:
  PresentedModule module_;
  Matrix gens_;
  std::shared_ptr<ModuleGB> lift_;
  std::size_t nz_ = 0;
  Pruning pruning_;
};

/// H = out^{-1}(im rel_c) / (im in + im rel_b) for maps R^a -> R^b -> R^c.
Subquotient homology(const Matrix& in, const Matrix& out, const Matrix& rel_b, const Matrix& rel_c,
                     std::optional<std::vector<int>> ambient_degrees = std::nullopt);
/// Same subquotient, only tested for vanishing; returns a nonzero cycle if any.
std::optional<Vec> homology_witness(const Matrix& in, const Matrix& out, const Matrix& rel_b,
                                    const Matrix& rel_c);

/// Hom(M, N) with generator decoding. Ambient index of (source gen j,
/// target gen i) is j*n + i.
struct HomModule {
  PresentedModule source, target;
  std::shared_ptr<Subquotient> sq;
  const PresentedModule& module() const { return sq->module(); }
  /// The map represented by generator k.
  ModuleMap decode(std::size_t k) const;
  /// Ambient vector of a map given by its matrix.
  Vec flatten(const Matrix& phi) const;
  /// Coordinates over module() of the map with matrix phi.
  Vec encode(const Matrix& phi) const { return sq->coordinates(flatten(phi)); }
};
HomModule hom_module(const PresentedModule& M, const PresentedModule& N);

/// M (x) N with generator (j, i) at index j*n + i.
PresentedModule tensor_module(const PresentedModule& M, const PresentedModule& N);

/// Minimalized (at unit pivots) free resolution, extended on demand.
class FreeResolution {
 public:
  explicit FreeResolution(const PresentedModule& M);

  /// The resolved module after generator pruning (isomorphic to the input).
  const PresentedModule& module() const { return module_; }
  /// Coordinates of an input-module vector over module()'s generators.
  Vec to_pruned(const Vec& coords) const { return gen_pruning_.transform(module_.ring(), coords); }
  /// d_i : F_i -> F_{i-1}, i >= 1, with final (pruned) columns.
  const Matrix& d(int i) const;
  std::size_t rank(int i) const;
  /// True when F_i = 0.
  bool vanishes_at(int i) const { return rank(i) == 0; }
  /// Length if the resolution stops at or before `limit`.
  std::optional<int> length_within(int limit) const;
  const Ring& ring() const { return module_.ring(); }

 private:
  void extend(int i) const;

  PresentedModule module_;
  Pruning gen_pruning_;
  mutable std::mutex mu_;
  mutable std::deque<Matrix> ds_;  // ds_[i-1] = d_i
  mutable int final_ = 0;
};

/// Certifies d_i d_{i+1} = 0 and ker d_i = im d_{i+1} for 1 <= i <= L,
/// plus coker d_1 = module. Returns a failure description or nullopt.
std::optional<std::string> certify_resolution(const FreeResolution& res, int L);

/// Generator degrees of F_i (graded input only).
std::optional<std::vector<int>> free_degrees(const FreeResolution& res, int i);
/// The n-th syzygy as coker d_{n+1} over F_n; n = 0 gives res.module().
PresentedModule syzygy_module(const FreeResolution& res, int n);

enum class Functor { Ext, Tor };
/// Ext^i(M, N) or Tor_i(M, N) computed from a resolution of M.
Subquotient derived_functor(Functor kind, int i, const FreeResolution& resM, const PresentedModule& N);
Subquotient derived_functor(Functor kind, int i, const PresentedModule& M, const PresentedModule& N);
/// Vanishing test for Ext^i(M, N) / Tor_i(M, N); returns a nonzero class.
std::optional<Vec> derived_witness(Functor kind, int i, const FreeResolution& resM, const PresentedModule& N);
/// Complex pieces used for the functors above.
struct HomologyData {
  Matrix in, out, rel_b, rel_c;
};
HomologyData ext_complex(int i, const FreeResolution& resM, const PresentedModule& N, int shift = 0);
HomologyData tor_complex(int i, const FreeResolution& resM, const PresentedModule& N, int shift = 0);

/// Generators (reduced Groebner basis) of Ann_R(M).
std::vector<Polynomial> annihilator(const PresentedModule& M);
bool is_zero_module(const PresentedModule& M);

/// k-dimension, or nullopt when infinite (leading-term cone test).
std::optional<std::size_t> k_dim(const PresentedModule& M);
/// Hilbert values at degrees lo..hi (needs generator degrees or all zero).
std::vector<long> hilbert_function(const PresentedModule& M, int lo, int hi);
/// Standard basis (monomial, component) of a finite-dimensional module.
std::vector<Term> k_basis(const PresentedModule& M);
/// Coordinates of a vector in the k_basis (after normal form).
std::vector<FieldElem> k_coordinates(const PresentedModule& M, const std::vector<Term>& basis, const Vec& v);

/// Report for an explicit candidate isomorphism.
CheckReport verify_map_iso(const ModuleMap& phi, const std::string& name = "iso");

/// k-linear dual of a module over an Artinian ring; generator j is the
/// functional dual to k_basis(M)[j] (before pruning: see `dual_gen`).
struct MatlisDual {
  PresentedModule module;
  std::vector<Term> basis;  // k-basis of M
  Pruning pruning;
  /// Coordinates over module() of the functional dual to basis element j.
  Vec dual_gen(std::size_t j) const;
};
MatlisDual matlis_dual(const PresentedModule& M);
/// R -> dual(R), 1 -> the functional dual to the last standard monomial.
ModuleMap matlis_pairing_map(const Ring& R, const MatlisDual& dual);

/// M over B viewed over A along phi, generated by gens[a] * (generator l)
/// at index a*p + l.
struct Restriction {
  PresentedModule module;
  std::shared_ptr<ModuleGB> gb;
  std::size_t nb = 0, na = 0, p = 0, t = 0;
  Ring A, B;
  /// A-coordinates of a vector over M's generators.
  Vec coordinates(const Vec& v) const;
};
Restriction restrict_scalars(const RingMap& phi, const PresentedModule& M, const std::vector<Polynomial>& gens);

// ------------------------------------------------------- canonical maps

/// chi : R -> Hom(C, C), 1 -> id.
ModuleMap homothety(const PresentedModule& C);
/// delta : M -> Hom(Hom(M, C), C), m -> (psi -> psi(m)).
ModuleMap biduality(const PresentedModule& M, const PresentedModule& C);
/// gamma : M -> Hom(C, C (x) M), m -> (c -> c (x) m).
ModuleMap gamma_map(const PresentedModule& M, const PresentedModule& C);
/// xi : C (x) Hom(C, M) -> M, c (x) psi -> psi(c).
ModuleMap xi_map(const PresentedModule& M, const PresentedModule& C);
/// Theta : S (x) Hom(M, N) -> Hom(Hom(S, M), N), s (x) psi -> (phi -> psi(phi(s))).
ModuleMap theta_map(const PresentedModule& S, const PresentedModule& M, const PresentedModule& N);
/// Omega : Hom(S, M) (x) N -> Hom(S, M (x) N), psi (x) n -> (s -> psi(s) (x) n).
ModuleMap omega_map(const PresentedModule& S, const PresentedModule& M, const PresentedModule& N);

}  // namespace semidual
