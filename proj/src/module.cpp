#include "semidual/module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semidual {

namespace {

ModuleOrder top_order(const Ring& R, std::uint32_t top) { return ModuleOrder{R->order(), top, false}; }

ModuleGB::Options sugar_options(const Ring& R) {
  ModuleGB::Options o;
  if (R->graded()) o.weights = R->weights();
  return o;
}

Vec shifted(const Vec& v, std::int64_t delta) {
  Vec r = v;
  for (auto& t : r) t.comp = static_cast<std::uint32_t>(static_cast<std::int64_t>(t.comp) + delta);
  return r;
}

FieldElem minus_one(const Ring& R) { return -R->field().one(); }

}  // namespace

// ---------------------------------------------------------- vector helpers

Vec ring_scale(const Ring& R, const Polynomial& p, const Vec& v) {
  Vec acc;
  acc.reserve(p.terms().size() * v.size());
  for (const auto& t : p.terms()) {
    for (const auto& u : v) acc.push_back(Term{u.mono * t.mono, u.coef * t.coef, u.comp});
  }
  return R->reduce_vec(std::move(acc));
}

Vec ring_add(const Ring& R, const Vec& a, const Vec& b) {
  Vec acc = a;
  acc.insert(acc.end(), b.begin(), b.end());
  return R->reduce_vec(std::move(acc));
}

Vec ring_sub(const Ring& R, const Vec& a, const Vec& b) {
  Vec acc = a;
  for (const auto& t : b) acc.push_back(Term{t.mono, -t.coef, t.comp});
  return R->reduce_vec(std::move(acc));
}

Vec unit_vec(const Ring& R, std::uint32_t comp, const Polynomial& p) {
  Vec v;
  for (const auto& t : p.terms()) v.push_back(Term{t.mono, t.coef, comp});
  return R->reduce_vec(std::move(v));
}

Polynomial component(const Ring& R, const Vec& v, std::uint32_t comp) {
  Vec terms;
  for (const auto& t : v) {
    if (t.comp == comp) terms.push_back(Term{t.mono, t.coef, 0});
  }
  return Polynomial(R->ambient(), std::move(terms));
}

std::string vec_string(const Ring& R, const Vec& v) {
  if (v.empty()) return "0";
  std::uint32_t maxc = 0;
  for (const auto& t : v) maxc = std::max(maxc, t.comp);
  if (maxc == 0) return component(R, v, 0).to_string();
  std::string s = "(";
  for (std::uint32_t c = 0; c <= maxc; ++c) {
    if (c > 0) s += ", ";
    s += component(R, v, c).to_string();
  }
  return s + ")";
}

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(Ring ring, std::size_t rows, std::vector<Vec> cols) : ring_(std::move(ring)), rows_(rows) {
  cols_.reserve(cols.size());
  for (auto& c : cols) push(std::move(c));
}

void Matrix::push(Vec v) {
  for (const auto& t : v) {
    if (t.comp >= rows_) throw std::out_of_range("matrix entry outside the row range");
  }
  cols_.push_back(ring_->reduce_vec(std::move(v)));
}

Matrix Matrix::from_entries(Ring ring, std::size_t rows, std::size_t cols,
                            const std::vector<std::vector<Polynomial>>& entries) {
  if (entries.size() != rows) throw std::invalid_argument("row count mismatch");
  Matrix m(ring, rows);
  for (std::size_t j = 0; j < cols; ++j) {
    Vec v;
    for (std::size_t i = 0; i < rows; ++i) {
      if (entries[i].size() != cols) throw std::invalid_argument("ragged matrix");
      for (const auto& t : entries[i][j].terms()) v.push_back(Term{t.mono, t.coef, static_cast<std::uint32_t>(i)});
    }
    m.push(std::move(v));
  }
  return m;
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.push_normalized(Vec{Term{Monomial(), ring->field().one(), static_cast<std::uint32_t>(i)}});
  }
  return m;
}

Polynomial Matrix::entry(std::size_t i, std::size_t j) const {
  return component(ring_, cols_.at(j), static_cast<std::uint32_t>(i));
}

Vec Matrix::apply(const Vec& coords) const {
  Vec acc;
  for (const auto& t : coords) {
    for (const auto& u : cols_.at(t.comp)) acc.push_back(Term{u.mono * t.mono, u.coef * t.coef, u.comp});
  }
  return ring_->reduce_vec(std::move(acc));
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols() != o.rows()) throw std::invalid_argument("matrix shapes do not compose");
  Matrix r(ring_, rows_);
  for (const auto& c : o.cols_) r.push_normalized(apply(c));
  return r;
}

Matrix Matrix::transpose() const {
  std::vector<Vec> out(rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    for (const auto& t : cols_[j]) out[t.comp].push_back(Term{t.mono, t.coef, static_cast<std::uint32_t>(j)});
  }
  Matrix m(ring_, cols_.size());
  for (auto& v : out) {
    sort_vec(v, ring_->storage_order());
    m.push_normalized(std::move(v));
  }
  return m;
}

Matrix Matrix::kron_identity(std::size_t n) const {
  Matrix m(ring_, rows_ * n);
  for (const auto& c : cols_) {
    for (std::size_t a = 0; a < n; ++a) {
      Vec v;
      v.reserve(c.size());
      for (const auto& t : c) v.push_back(Term{t.mono, t.coef, static_cast<std::uint32_t>(t.comp * n + a)});
      m.push_normalized(std::move(v));
    }
  }
  return m;
}

Matrix Matrix::identity_kron(std::size_t k) const {
  Matrix m(ring_, rows_ * k);
  for (std::size_t b = 0; b < k; ++b) {
    for (const auto& c : cols_) {
      Vec v = shifted(c, static_cast<std::int64_t>(b * rows_));
      m.push_normalized(std::move(v));
    }
  }
  return m;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("row count mismatch");
  Matrix m = *this;
  for (const auto& c : o.cols_) m.push_normalized(c);
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(ring_, rows_);
  for (std::size_t j : idx) m.push_normalized(cols_.at(j));
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Vec& v) { return v.empty(); });
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (j > 0) s += ", ";
      s += entry(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

// ------------------------------------------------------- PresentedModule

PresentedModule::PresentedModule(Matrix presentation, std::optional<std::vector<int>> degrees)
    : pres_(std::move(presentation)), degrees_(std::move(degrees)) {
  if (!pres_.ring()) throw std::invalid_argument("presentation without a ring");
  if (degrees_ && degrees_->size() != pres_.rows()) throw std::invalid_argument("degree count mismatch");
}

PresentedModule PresentedModule::free(const Ring& R, std::size_t n) {
  std::optional<std::vector<int>> deg;
  if (R->graded()) deg = std::vector<int>(n, 0);
  return PresentedModule(Matrix(R, n), deg);
}

PresentedModule PresentedModule::ideal(const Ring& R, const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("ideal needs generators");
  Matrix row(R, 1);
  std::optional<std::vector<int>> deg;
  if (R->graded()) deg = std::vector<int>();
  std::vector<Polynomial> red;
  for (const auto& g : gens) {
    Polynomial r = R->reduce(g);
    if (deg) {
      if (r.is_zero() || !R->is_homogeneous(r)) deg.reset();
      else deg->push_back(R->degree_of(r));
    }
    row.push(unit_vec(R, 0, r));
    red.push_back(r);
  }
  PresentedModule m(syzygy_matrix(row), deg);
  m.ideal_gens_ = std::move(red);
  m.is_ideal_ = true;
  return m;
}

const ModuleGB& PresentedModule::gb() const {
  std::call_once(cache_->once, [&] {
    const Ring& R = ring();
    ModuleGB::Options opts = sugar_options(R);
    if (degrees_) opts.comp_degrees = *degrees_;
    cache_->gb = std::make_unique<ModuleGB>(R->field(), top_order(R, 0), R->gb_vecs(), opts);
    cache_->gb->compute(pres_.columns());
  });
  return *cache_->gb;
}

Vec PresentedModule::normal_form(const Vec& v) const {
  Vec w = v;
  gb().sort(w);
  Vec r = gb().normal_form(std::move(w));
  sort_vec(r, ring()->storage_order());
  return r;
}

// --------------------------------------------------------------- ModuleMap

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens()) {
    throw std::invalid_argument("map matrix has the wrong shape");
  }
  for (const auto& rel : source_.presentation().columns()) {
    if (!target_.is_zero_element(matrix_.apply(rel))) throw std::invalid_argument("map is not well defined");
  }
}

// --------------------------------------------------------------- syzygies

Matrix preimage(const Matrix& out, const Matrix& rel) {
  const Ring& R = out.ring();
  std::size_t c = out.rows(), b = out.cols();
  if (c == 0) return Matrix::identity(R, b);
  if (rel.rows() != c) throw std::invalid_argument("relation rows mismatch");
  std::vector<Vec> gens;
  gens.reserve(b + rel.cols());
  FieldElem one = R->field().one();
  for (std::size_t j = 0; j < b; ++j) {
    Vec v = out.col(j);
    v.push_back(Term{Monomial(), one, static_cast<std::uint32_t>(c + j)});
    gens.push_back(std::move(v));
  }
  for (const auto& r : rel.columns()) gens.push_back(r);
  ModuleGB gb(R->field(), top_order(R, static_cast<std::uint32_t>(c)), R->gb_vecs(), sugar_options(R));
  gb.compute(std::move(gens));
  Matrix K(R, b);
  for (const auto& g : gb.basis()) {
    if (g.front().comp < c) continue;
    K.push(shifted(g, -static_cast<std::int64_t>(c)));
  }
  return K;
}

Matrix syzygy_matrix(const Matrix& A) { return preimage(A, Matrix(A.ring(), A.rows())); }

Lifter::Lifter(const Matrix& G) : ring_(G.ring()), rows_(static_cast<std::uint32_t>(G.rows())) {
  std::vector<Vec> gens;
  FieldElem one = ring_->field().one();
  for (std::size_t j = 0; j < G.cols(); ++j) {
    Vec v = G.col(j);
    v.push_back(Term{Monomial(), one, static_cast<std::uint32_t>(rows_ + j)});
    gens.push_back(std::move(v));
  }
  gb_ = std::make_shared<ModuleGB>(ring_->field(), top_order(ring_, rows_), ring_->gb_vecs(), sugar_options(ring_));
  gb_->compute(std::move(gens));
}

std::optional<Vec> Lifter::lift(const Vec& v) const {
  Vec w = v;
  gb_->sort(w);
  Vec nf = gb_->normal_form(std::move(w));
  Vec c;
  for (const auto& t : nf) {
    if (t.comp < rows_) return std::nullopt;
    c.push_back(Term{t.mono, -t.coef, t.comp - rows_});
  }
  return ring_->reduce_vec(std::move(c));
}

// ----------------------------------------------------------------- pruning

Vec Pruning::transform(const Ring& R, Vec a) const {
  for (const auto& [i, w] : steps) {
    Polynomial ai = component(R, a, i);
    if (ai.is_zero()) continue;
    Vec rest;
    for (const auto& t : a) {
      if (t.comp != i) rest.push_back(t);
    }
    a = ring_add(R, rest, ring_scale(R, ai, w));
  }
  std::vector<std::int64_t> pos(original, -1);
  for (std::size_t k = 0; k < kept.size(); ++k) pos[kept[k]] = static_cast<std::int64_t>(k);
  for (auto& t : a) {
    if (pos[t.comp] < 0) throw std::logic_error("pruned coordinate survived");
    t.comp = static_cast<std::uint32_t>(pos[t.comp]);
  }
  return R->reduce_vec(std::move(a));
}

Pruning prune(const Matrix& pres) {
  const Ring& R = pres.ring();
  std::size_t s = pres.rows();
  std::vector<Vec> cols = pres.columns();
  std::vector<char> alive_col(cols.size(), 1), alive_row(s, 1);
  Pruning out;
  out.original = s;

  auto unit_row = [&](const Vec& v) -> std::int64_t {
    // A row whose entry is a nonzero constant (and nothing else).
    std::size_t k = 0;
    while (k < v.size()) {
      std::size_t e = k;
      while (e < v.size() && v[e].comp == v[k].comp) ++e;
      if (e - k == 1 && v[k].mono.is_one()) return v[k].comp;
      k = e;
    }
    return -1;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < cols.size(); ++p) {
      if (!alive_col[p]) continue;
      std::int64_t ii = unit_row(cols[p]);
      if (ii < 0) continue;
      auto i = static_cast<std::uint32_t>(ii);
      FieldElem u;
      Vec w;
      for (const auto& t : cols[p]) {
        if (t.comp == i) u = t.coef;
        else w.push_back(t);
      }
      FieldElem scale = -(u.inverse());
      for (auto& t : w) t.coef *= scale;
      for (std::size_t q = 0; q < cols.size(); ++q) {
        if (q == p || !alive_col[q]) continue;
        Polynomial e = component(R, cols[q], i);
        if (e.is_zero()) continue;
        Vec rest;
        for (const auto& t : cols[q]) {
          if (t.comp != i) rest.push_back(t);
        }
        cols[q] = ring_add(R, rest, ring_scale(R, e, w));
      }
      out.steps.emplace_back(i, std::move(w));
      alive_col[p] = 0;
      alive_row[i] = 0;
      changed = true;
    }
  }
  std::vector<std::int64_t> pos(s, -1);
  for (std::size_t i = 0; i < s; ++i) {
    if (alive_row[i]) {
      pos[i] = static_cast<std::int64_t>(out.kept.size());
      out.kept.push_back(i);
    }
  }
  out.pres = Matrix(R, out.kept.size());
  for (std::size_t p = 0; p < cols.size(); ++p) {
    if (!alive_col[p] || cols[p].empty()) continue;
    Vec v = cols[p];
    for (auto& t : v) t.comp = static_cast<std::uint32_t>(pos[t.comp]);
    sort_vec(v, R->storage_order());
    out.pres.push_normalized(std::move(v));
  }
  return out;
}

// ------------------------------------------------------------- Subquotient

Subquotient::Subquotient(const Matrix& Z, const Matrix& D, std::optional<std::vector<int>> ambient_degrees) {
  const Ring& R = Z.ring();
  std::size_t b = Z.rows();
  nz_ = Z.cols();
  if (D.rows() != b) throw std::invalid_argument("subquotient rank mismatch");
  std::vector<Vec> gens;
  FieldElem one = R->field().one();
  for (std::size_t j = 0; j < nz_; ++j) {
    Vec v = Z.col(j);
    v.push_back(Term{Monomial(), one, static_cast<std::uint32_t>(b + j)});
    gens.push_back(std::move(v));
  }
  for (const auto& d : D.columns()) gens.push_back(d);
  lift_ = std::make_shared<ModuleGB>(R->field(), top_order(R, static_cast<std::uint32_t>(b)), R->gb_vecs(),
                                     sugar_options(R));
  lift_->compute(std::move(gens));
  Matrix rels(R, nz_);
  for (const auto& g : lift_->basis()) {
    if (g.front().comp < b) continue;
    rels.push(shifted(g, -static_cast<std::int64_t>(b)));
  }
  pruning_ = prune(rels);
  gens_ = Z.select_columns(pruning_.kept);
  std::optional<std::vector<int>> deg;
  if (ambient_degrees && R->graded()) {
    deg = std::vector<int>();
    for (const auto& c : gens_.columns()) {
      if (c.empty()) {
        deg->push_back(0);
        continue;
      }
      deg->push_back(c.front().mono.weighted_degree(R->weights()) + (*ambient_degrees)[c.front().comp]);
    }
  }
  module_ = PresentedModule(pruning_.pres, deg);
}

Vec Subquotient::coordinates(const Vec& z) const {
  const Ring& R = gens_.ring();
  auto b = static_cast<std::uint32_t>(gens_.rows());
  Vec w = z;
  lift_->sort(w);
  Vec nf = lift_->normal_form(std::move(w));
  Vec a;
  for (const auto& t : nf) {
    if (t.comp < b) throw std::domain_error("vector is not in the subquotient");
    a.push_back(Term{t.mono, -t.coef, t.comp - b});
  }
  return pruning_.transform(R, R->reduce_vec(std::move(a)));
}

Subquotient homology(const Matrix& in, const Matrix& out, const Matrix& rel_b, const Matrix& rel_c,
                     std::optional<std::vector<int>> ambient_degrees) {
  Matrix Z = preimage(out, rel_c);
  Matrix D = in.hcat(rel_b);
  return Subquotient(Z, D, std::move(ambient_degrees));
}

std::optional<Vec> homology_witness(const Matrix& in, const Matrix& out, const Matrix& rel_b, const Matrix& rel_c) {
  const Ring& R = in.ring();
  Matrix Z = preimage(out, rel_c);
  if (Z.cols() == 0) return std::nullopt;
  Matrix D = in.hcat(rel_b);
  ModuleGB gb(R->field(), top_order(R, 0), R->gb_vecs(), sugar_options(R));
  gb.compute(D.columns());
  for (const auto& z : Z.columns()) {
    Vec w = z;
    gb.sort(w);
    if (!gb.normal_form(std::move(w)).empty()) return z;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Hom, (x)

ModuleMap HomModule::decode(std::size_t k) const {
  const Ring& R = source.ring();
  std::size_t m = source.ngens(), n = target.ngens();
  std::vector<Vec> cols(m);
  for (const auto& t : sq->gens().col(k)) {
    cols[t.comp / n].push_back(Term{t.mono, t.coef, static_cast<std::uint32_t>(t.comp % n)});
  }
  return ModuleMap(source, target, Matrix(R, n, std::move(cols)));
}

Vec HomModule::flatten(const Matrix& phi) const {
  std::size_t n = target.ngens();
  Vec v;
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    for (const auto& t : phi.col(j)) v.push_back(Term{t.mono, t.coef, static_cast<std::uint32_t>(j * n + t.comp)});
  }
  return source.ring()->reduce_vec(std::move(v));
}

HomModule hom_module(const PresentedModule& M, const PresentedModule& N) {
  const Ring& R = M.ring();
  if (N.ring().get() != R.get()) throw std::invalid_argument("modules over different rings");
  std::size_t m = M.ngens(), n = N.ngens();
  const Matrix& A = M.presentation();
  const Matrix& B = N.presentation();
  Matrix out = A.transpose().kron_identity(n);
  Matrix rel_b = B.identity_kron(m);
  Matrix rel_c = B.identity_kron(A.cols());
  std::optional<std::vector<int>> deg;
  if (M.degrees() && N.degrees()) {
    deg = std::vector<int>(m * n);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) (*deg)[j * n + i] = (*N.degrees())[i] - (*M.degrees())[j];
    }
  }
  Matrix in(R, m * n);
  HomModule h{M, N, std::make_shared<Subquotient>(homology(in, out, rel_b, rel_c, deg))};
  return h;
}

PresentedModule tensor_module(const PresentedModule& M, const PresentedModule& N) {
  if (N.ring().get() != M.ring().get()) throw std::invalid_argument("modules over different rings");
  std::size_t m = M.ngens(), n = N.ngens();
  Matrix P = M.presentation().kron_identity(n).hcat(N.presentation().identity_kron(m));
  std::optional<std::vector<int>> deg;
  if (M.degrees() && N.degrees()) {
    deg = std::vector<int>(m * n);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) (*deg)[j * n + i] = (*M.degrees())[j] + (*N.degrees())[i];
    }
  }
  return PresentedModule(P, deg);
}

// ------------------------------------------------------------ resolutions

FreeResolution::FreeResolution(const PresentedModule& M) {
  gen_pruning_ = prune(M.presentation());
  std::optional<std::vector<int>> deg;
  if (M.degrees()) {
    deg = std::vector<int>();
    for (std::size_t k : gen_pruning_.kept) deg->push_back((*M.degrees())[k]);
  }
  module_ = PresentedModule(gen_pruning_.pres, deg);
  ds_.push_back(module_.presentation());
}

void FreeResolution::extend(int i) const {
  std::lock_guard<std::mutex> lock(mu_);
  const Ring& R = module_.ring();
  while (final_ < i) {
    auto k = static_cast<std::size_t>(final_ + 1);
    Matrix D = ds_[k - 1];
    if (D.cols() == 0) {
      ds_.push_back(Matrix(R, 0));
      ++final_;
      continue;
    }
    Matrix K = syzygy_matrix(D);
    Pruning P = prune(K);
    ds_[k - 1] = D.select_columns(P.kept);
    ds_.push_back(P.pres);
    ++final_;
  }
}

const Matrix& FreeResolution::d(int i) const {
  if (i < 1) throw std::out_of_range("differential index");
  extend(i);
  std::lock_guard<std::mutex> lock(mu_);
  return ds_[static_cast<std::size_t>(i - 1)];
}

std::size_t FreeResolution::rank(int i) const {
  if (i == 0) return module_.ngens();
  return d(i).cols();
}

std::optional<int> FreeResolution::length_within(int limit) const {
  for (int i = 0; i <= limit + 1; ++i) {
    if (rank(i) == 0) return std::max(0, i - 1);
  }
  return std::nullopt;
}

std::optional<std::string> certify_resolution(const FreeResolution& res, int L) {
  const Ring& R = res.ring();
  for (int i = 1; i <= L; ++i) {
    const Matrix& di = res.d(i);
    const Matrix& dn = res.d(i + 1);
    if (di.cols() == 0) break;
    if (dn.cols() > 0 && !(di * dn).is_zero()) return "d" + std::to_string(i) + "*d" + std::to_string(i + 1) + " != 0";
    Matrix K = syzygy_matrix(di);
    ModuleGB gb(R->field(), top_order(R, 0), R->gb_vecs(), sugar_options(R));
    gb.compute(dn.columns());
    for (const auto& k : K.columns()) {
      Vec w = k;
      gb.sort(w);
      if (!gb.normal_form(std::move(w)).empty()) return "homology at F" + std::to_string(i) + " is nonzero";
    }
  }
  return std::nullopt;
}

HomologyData ext_complex(int i, const FreeResolution& res, const PresentedModule& N, int shift) {
  const Ring& R = res.ring();
  std::size_t n = N.ngens();
  const Matrix& B = N.presentation();
  std::size_t ri = res.rank(i + shift);
  std::size_t rn = res.rank(i + 1 + shift);
  HomologyData h;
  if (i >= 1) h.in = res.d(i + shift).transpose().kron_identity(n);
  else h.in = Matrix(R, ri * n);
  h.out = res.d(i + 1 + shift).transpose().kron_identity(n);
  h.rel_b = B.identity_kron(ri);
  h.rel_c = B.identity_kron(rn);
  if (h.out.rows() == 0) h.out = Matrix(R, 0, std::vector<Vec>(ri * n));
  return h;
}

HomologyData tor_complex(int i, const FreeResolution& res, const PresentedModule& N, int shift) {
  const Ring& R = res.ring();
  std::size_t n = N.ngens();
  const Matrix& B = N.presentation();
  std::size_t ri = res.rank(i + shift);
  HomologyData h;
  h.in = res.d(i + 1 + shift).kron_identity(n);
  if (h.in.rows() != ri * n) h.in = Matrix(R, ri * n);
  h.rel_b = B.identity_kron(ri);
  if (i >= 1) {
    h.out = res.d(i + shift).kron_identity(n);
    h.rel_c = B.identity_kron(res.rank(i - 1 + shift));
  } else {
    h.out = Matrix(R, 0, std::vector<Vec>(ri * n));
    h.rel_c = Matrix(R, 0);
  }
  return h;
}

std::optional<std::vector<int>> free_degrees(const FreeResolution& res, int i) {
  const Ring& R = res.ring();
  if (!R->graded() || !res.module().degrees()) return std::nullopt;
  std::vector<int> deg = *res.module().degrees();
  for (int k = 1; k <= i; ++k) {
    std::vector<int> next;
    for (const auto& c : res.d(k).columns()) {
      next.push_back(c.empty() ? 0 : c.front().mono.weighted_degree(R->weights()) + deg[c.front().comp]);
    }
    deg = std::move(next);
  }
  return deg;
}


PresentedModule syzygy_module(const FreeResolution& res, int n) {
  if (n == 0) return res.module();
  if (n < 0) throw std::out_of_range("negative syzygy index");
  return PresentedModule(res.d(n + 1), free_degrees(res, n));
}

Subquotient derived_functor(Functor kind, int i, const FreeResolution& res, const PresentedModule& N) {
  if (i < 0) throw std::out_of_range("negative index");
  HomologyData h = kind == Functor::Ext ? ext_complex(i, res, N) : tor_complex(i, res, N);
  std::optional<std::vector<int>> deg;
  auto fd = free_degrees(res, i);
  if (fd && N.degrees()) {
    std::size_t n = N.ngens();
    deg = std::vector<int>(fd->size() * n);
    for (std::size_t j = 0; j < fd->size(); ++j) {
      for (std::size_t a = 0; a < n; ++a) {
        (*deg)[j * n + a] = kind == Functor::Ext ? (*N.degrees())[a] - (*fd)[j] : (*N.degrees())[a] + (*fd)[j];
      }
    }
  }
  return homology(h.in, h.out, h.rel_b, h.rel_c, deg);
}

Subquotient derived_functor(Functor kind, int i, const PresentedModule& M, const PresentedModule& N) {
  FreeResolution res(M);
  return derived_functor(kind, i, res, N);
}

std::optional<Vec> derived_witness(Functor kind, int i, const FreeResolution& res, const PresentedModule& N) {
  HomologyData h = kind == Functor::Ext ? ext_complex(i, res, N) : tor_complex(i, res, N);
  return homology_witness(h.in, h.out, h.rel_b, h.rel_c);
}

// ----------------------------------------------------- annihilator, k-dims

std::vector<Polynomial> annihilator(const PresentedModule& M) {
  const Ring& R = M.ring();
  std::size_t m = M.ngens();
  if (m == 0) return {R->one()};
  Vec diag;
  for (std::size_t j = 0; j < m; ++j) diag.push_back(Term{Monomial(), R->field().one(), static_cast<std::uint32_t>(j * m + j)});
  Matrix out(R, m * m);
  out.push(diag);
  Matrix K = preimage(out, M.presentation().identity_kron(m));
  std::vector<Vec> gens;
  for (const auto& c : K.columns()) {
    if (!c.empty()) gens.push_back(c);
  }
  ModuleGB gb(R->field(), top_order(R, 0), R->gb_vecs(), sugar_options(R));
  gb.compute(std::move(gens));
  std::vector<Polynomial> out_gens;
  for (const auto& g : gb.basis()) out_gens.emplace_back(R->ambient(), g);
  std::sort(out_gens.begin(), out_gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return R->order().compare(a.lead().mono, b.lead().mono) < 0;
  });
  return out_gens;
}

bool is_zero_module(const PresentedModule& M) {
  const Ring& R = M.ring();
  for (std::size_t j = 0; j < M.ngens(); ++j) {
    if (!M.is_zero_element(unit_vec(R, static_cast<std::uint32_t>(j), R->one()))) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<Monomial>> leads_by_comp(const PresentedModule& M) {
  const Ring& R = M.ring();
  std::vector<std::vector<Monomial>> leads(M.ngens());
  for (const auto& g : M.gb().basis()) leads[g.front().comp].push_back(g.front().mono);
  for (auto& l : leads) {
    for (const auto& r : R->gb_vecs()) l.push_back(r.front().mono);
  }
  return leads;
}

}  // namespace

std::optional<std::size_t> k_dim(const PresentedModule& M) {
  const Ring& R = M.ring();
  auto leads = leads_by_comp(M);
  std::size_t total = 0;
  for (const auto& l : leads) {
    if (!staircase_finite(l, R->nvars())) return std::nullopt;
  }
  for (const auto& l : leads) total += standard_monomials(l, R->nvars(), R->weights())->size();
  return total;
}

std::vector<long> hilbert_function(const PresentedModule& M, int lo, int hi) {
  const Ring& R = M.ring();
  auto leads = leads_by_comp(M);
  std::vector<long> h(static_cast<std::size_t>(std::max(0, hi - lo + 1)), 0);
  for (std::size_t c = 0; c < leads.size(); ++c) {
    int shift = M.degrees() ? (*M.degrees())[c] : 0;
    if (hi - shift < 0) continue;
    auto mons = standard_monomials(leads[c], R->nvars(), R->weights(), hi - shift);
    for (const auto& m : *mons) {
      int d = m.weighted_degree(R->weights()) + shift;
      if (d >= lo && d <= hi) ++h[static_cast<std::size_t>(d - lo)];
    }
  }
  return h;
}

std::vector<Term> k_basis(const PresentedModule& M) {
  const Ring& R = M.ring();
  auto leads = leads_by_comp(M);
  std::vector<Term> out;
  for (std::size_t c = 0; c < leads.size(); ++c) {
    auto mons = standard_monomials(leads[c], R->nvars(), R->weights());
    if (!mons) throw std::domain_error("module is not finite-dimensional");
    std::sort(mons->begin(), mons->end(),
              [&](const Monomial& a, const Monomial& b) { return R->order().compare(a, b) < 0; });
    for (const auto& m : *mons) out.push_back(Term{m, R->field().one(), static_cast<std::uint32_t>(c)});
  }
  return out;
}

std::vector<FieldElem> k_coordinates(const PresentedModule& M, const std::vector<Term>& basis, const Vec& v) {
  const Ring& R = M.ring();
  std::vector<FieldElem> out(basis.size(), R->field().zero());
  Vec nf = M.normal_form(v);
  for (const auto& t : nf) {
    bool found = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].comp == t.comp && basis[k].mono == t.mono) {
        out[k] = t.coef;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("normal form term outside the standard basis");
  }
  return out;
}

// -------------------------------------------------------- iso verification

CheckReport verify_map_iso(const ModuleMap& phi, const std::string& name) {
  const Ring& R = phi.source().ring();
  const PresentedModule& M = phi.source();
  const PresentedModule& N = phi.target();
  CheckReport rep = CheckReport::pass(name);
  auto ds = k_dim(M), dt = k_dim(N);
  if (ds && dt) {
    rep.detail("dim(source)", std::to_string(*ds));
    rep.detail("dim(target)", std::to_string(*dt));
  }
  // cokernel
  Matrix img = N.presentation().hcat(phi.matrix());
  ModuleGB cgb(R->field(), top_order(R, 0), R->gb_vecs(), sugar_options(R));
  cgb.compute(img.columns());
  for (std::size_t a = 0; a < N.ngens(); ++a) {
    Vec e = unit_vec(R, static_cast<std::uint32_t>(a), R->one());
    cgb.sort(e);
    if (!cgb.normal_form(e).empty()) {
      rep.verdict = Verdict::Fail;
      rep.witness = "cokernel contains generator " + std::to_string(a);
      return rep;
    }
  }
  // kernel
  Matrix Z = preimage(phi.matrix(), N.presentation());
  for (const auto& z : Z.columns()) {
    if (!M.is_zero_element(z)) {
      rep.verdict = Verdict::Fail;
      rep.witness = "kernel contains " + vec_string(R, M.normal_form(z));
      return rep;
    }
  }
  return rep;
}

// ------------------------------------------------------------------ Matlis

Vec MatlisDual::dual_gen(std::size_t j) const {
  const Ring& R = module.ring();
  return pruning.transform(R, unit_vec(R, static_cast<std::uint32_t>(j), R->one()));
}

MatlisDual matlis_dual(const PresentedModule& M) {
  const Ring& R = M.ring();
  if (!R->k_dim()) throw std::domain_error("ring is not Artinian");
  MatlisDual out;
  out.basis = k_basis(M);
  std::size_t d = out.basis.size();
  Matrix rels(R, d);
  for (std::size_t v = 0; v < R->nvars(); ++v) {
    // X[i] = coordinates of x_v * b_i
    std::vector<std::vector<FieldElem>> X(d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec prod{Term{out.basis[i].mono * Monomial::variable(v), R->field().one(), out.basis[i].comp}};
      X[i] = k_coordinates(M, out.basis, prod);
    }
    for (std::size_t j = 0; j < d; ++j) {
      Vec rel{Term{Monomial::variable(v), R->field().one(), static_cast<std::uint32_t>(j)}};
      for (std::size_t i = 0; i < d; ++i) {
        if (!X[i][j].is_zero()) rel.push_back(Term{Monomial(), -X[i][j], static_cast<std::uint32_t>(i)});
      }
      rels.push(std::move(rel));
    }
  }
  out.pruning = prune(rels);
  std::optional<std::vector<int>> deg;
  if (R->graded() && M.degrees()) {
    deg = std::vector<int>();
    for (std::size_t k : out.pruning.kept) {
      const Term& b = out.basis[k];
      deg->push_back(-(b.mono.weighted_degree(R->weights()) + (*M.degrees())[b.comp]));
    }
  }
  out.module = PresentedModule(out.pruning.pres, deg);
  return out;
}

ModuleMap matlis_pairing_map(const Ring& R, const MatlisDual& dual) {
  if (dual.basis.empty()) throw std::invalid_argument("dual of the zero module");
  Matrix m(R, dual.module.ngens());
  m.push(dual.dual_gen(dual.basis.size() - 1));
  return ModuleMap(PresentedModule::free(R, 1), dual.module, m);
}

// ------------------------------------------------------------- restriction

namespace {

Monomial embed(const Monomial& m, std::size_t offset, std::size_t n) {
  Monomial r;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] != 0) r.set(i + offset, m[i]);
  }
  return r;
}

bool x_free(const Vec& v, std::size_t nb) {
  for (const auto& t : v) {
    for (std::size_t i = 0; i < nb; ++i) {
      if (t.mono[i] != 0) return false;
    }
  }
  return true;
}

struct RestrictionSetup {
  std::shared_ptr<ModuleGB> gb;
  MonomialOrder order;
};

RestrictionSetup restriction_gb(const RingMap& phi, const PresentedModule& M, const std::vector<Polynomial>& gens) {
  const Ring& A = phi.domain();
  const Ring& B = phi.codomain();
  std::size_t nb = B->nvars(), na = A->nvars(), p = M.ngens(), t = gens.size();
  if (nb + na > kMaxVars) throw std::invalid_argument("too many variables for restriction of scalars");
  std::vector<OrderBlock> blocks;
  for (const auto& b : B->order().blocks()) blocks.push_back(b);
  for (const auto& b : A->order().blocks()) {
    OrderBlock s = b;
    for (auto& v : s.vars) v += nb;
    blocks.push_back(s);
  }
  MonomialOrder order = MonomialOrder::product(blocks);
  ModuleOrder mo{order, static_cast<std::uint32_t>(p), false};
  ModuleGB::Options opts;
  if (B->graded() && A->graded()) {
    opts.weights = B->weights();
    for (int w : A->weights()) opts.weights.push_back(w);
  }
  std::vector<Vec> input;
  auto embed_b = [&](const Vec& v) {
    Vec r;
    for (const auto& u : v) r.push_back(Term{embed(u.mono, 0, nb), u.coef, u.comp});
    return r;
  };
  for (const auto& c : M.presentation().columns()) input.push_back(embed_b(c));
  std::vector<Vec> K;
  for (const auto& g : B->gb_vecs()) K.push_back(embed_b(g));
  for (std::size_t k = 0; k < na; ++k) {
    Vec v = embed_b(phi.images()[k].terms());
    for (auto& u : v) u.coef = -u.coef;
    v.push_back(Term{Monomial::variable(nb + k), B->field().one(), 0});
    K.push_back(std::move(v));
  }
  for (std::size_t l = 0; l < p; ++l) {
    for (const auto& g : K) input.push_back(shifted(g, static_cast<std::int64_t>(l)));
  }
  FieldElem m1 = minus_one(B);
  for (std::size_t a = 0; a < t; ++a) {
    if (!gens[a].ring()->same_as(*B->ambient())) throw std::invalid_argument("generator not in the codomain");
    Vec bv = embed_b(gens[a].terms());
    for (std::size_t l = 0; l < p; ++l) {
      Vec v = shifted(bv, static_cast<std::int64_t>(l));
      v.push_back(Term{Monomial(), m1, static_cast<std::uint32_t>(p + a * p + l)});
      input.push_back(std::move(v));
    }
  }
  auto gb = std::make_shared<ModuleGB>(B->field(), mo, std::vector<Vec>{}, opts);
  gb->compute(std::move(input));
  return {gb, order};
}

}  // namespace

Vec Restriction::coordinates(const Vec& v) const {
  Vec w;
  for (const auto& u : v) w.push_back(Term{embed(u.mono, 0, nb), u.coef, u.comp});
  gb->sort(w);
  Vec nf = gb->normal_form(std::move(w));
  Vec out;
  for (const auto& u : nf) {
    if (u.comp < p) throw std::domain_error("element not generated by the supplied generators");
    Monomial m;
    for (std::size_t i = 0; i < nb; ++i) {
      if (u.mono[i] != 0) throw std::domain_error("element not generated by the supplied generators");
    }
    for (std::size_t i = 0; i < na; ++i) {
      if (u.mono[nb + i] != 0) m.set(i, u.mono[nb + i]);
    }
    out.push_back(Term{m, u.coef, static_cast<std::uint32_t>(u.comp - p)});
  }
  return A->reduce_vec(std::move(out));
}

Restriction restrict_scalars(const RingMap& phi, const PresentedModule& M, const std::vector<Polynomial>& gens) {
  const Ring& A = phi.domain();
  const Ring& B = phi.codomain();
  if (M.ring().get() != B.get()) throw std::invalid_argument("module is not over the codomain");
  if (gens.empty()) throw std::invalid_argument("no generators supplied");
  std::size_t nb = B->nvars(), na = A->nvars(), p = M.ngens(), t = gens.size();

  // Generation check on B itself: 1 and x_v * b_a re-express over A.
  {
    RestrictionSetup rb = restriction_gb(phi, PresentedModule::free(B, 1), gens);
    Restriction probe;
    probe.gb = rb.gb;
    probe.nb = nb;
    probe.na = na;
    probe.p = 1;
    probe.t = t;
    probe.A = A;
    probe.B = B;
    std::vector<Polynomial> tests{B->one()};
    for (const auto& b : gens) {
      for (std::size_t v = 0; v < nb; ++v) tests.push_back(B->mul(B->var(v), b));
    }
    for (const auto& e : tests) {
      try {
        probe.coordinates(unit_vec(B, 0, e));
      } catch (const std::domain_error&) {
        throw std::invalid_argument("supplied elements do not generate the ring over the base: " + e.to_string());
      }
    }
  }

  RestrictionSetup rs = restriction_gb(phi, M, gens);
  Restriction out;
  out.gb = rs.gb;
  out.nb = nb;
  out.na = na;
  out.p = p;
  out.t = t;
  out.A = A;
  out.B = B;
  Matrix rels(A, t * p);
  for (const auto& g : rs.gb->basis()) {
    if (g.front().comp < p || !x_free(g, nb)) continue;
    Vec v;
    for (const auto& u : g) {
      Monomial m;
      for (std::size_t i = 0; i < na; ++i) {
        if (u.mono[nb + i] != 0) m.set(i, u.mono[nb + i]);
      }
      v.push_back(Term{m, u.coef, static_cast<std::uint32_t>(u.comp - p)});
    }
    Vec red = A->reduce_vec(std::move(v));
    if (!red.empty()) rels.push_normalized(std::move(red));
  }
  std::optional<std::vector<int>> deg;
  if (B->graded() && A->graded()) {
    deg = std::vector<int>();
    for (std::size_t a = 0; a < t; ++a) {
      for (std::size_t l = 0; l < p; ++l) {
        int dl = M.degrees() ? (*M.degrees())[l] : 0;
        deg->push_back(B->degree_of(gens[a]) + dl);
      }
    }
  }
  out.module = PresentedModule(rels, deg);
  return out;
}

// ------------------------------------------------------- canonical maps

ModuleMap homothety(const PresentedModule& C) {
  const Ring& R = C.ring();
  HomModule H = hom_module(C, C);
  Matrix m(R, H.module().ngens());
  m.push(H.encode(Matrix::identity(R, C.ngens())));
  return ModuleMap(PresentedModule::free(R, 1), H.module(), m);
}

ModuleMap biduality(const PresentedModule& M, const PresentedModule& C) {
  const Ring& R = M.ring();
  HomModule H1 = hom_module(M, C);
  HomModule H2 = hom_module(H1.module(), C);
  std::size_t s = H1.module().ngens();
  std::vector<Matrix> decoded;
  for (std::size_t t = 0; t < s; ++t) decoded.push_back(H1.decode(t).matrix());
  Matrix delta(R, H2.module().ngens());
  for (std::size_t j = 0; j < M.ngens(); ++j) {
    Matrix eval(R, C.ngens());
    for (std::size_t t = 0; t < s; ++t) eval.push_normalized(decoded[t].col(j));
    delta.push(H2.encode(eval));
  }
  return ModuleMap(M, H2.module(), delta);
}

ModuleMap gamma_map(const PresentedModule& M, const PresentedModule& C) {
  const Ring& R = M.ring();
  std::size_t n = C.ngens(), m = M.ngens();
  PresentedModule T = tensor_module(C, M);
  HomModule H = hom_module(C, T);
  Matrix g(R, H.module().ngens());
  for (std::size_t j = 0; j < m; ++j) {
    Matrix phi(R, n * m);
    for (std::size_t i = 0; i < n; ++i) phi.push(unit_vec(R, static_cast<std::uint32_t>(i * m + j), R->one()));
    g.push(H.encode(phi));
  }
  return ModuleMap(M, H.module(), g);
}

ModuleMap xi_map(const PresentedModule& M, const PresentedModule& C) {
  const Ring& R = M.ring();
  HomModule H = hom_module(C, M);
  std::size_t n = C.ngens(), s = H.module().ngens();
  PresentedModule T = tensor_module(C, H.module());
  std::vector<Matrix> decoded;
  for (std::size_t t = 0; t < s; ++t) decoded.push_back(H.decode(t).matrix());
  Matrix x(R, M.ngens());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < s; ++t) x.push_normalized(decoded[t].col(i));
  }
  return ModuleMap(T, M, x);
}

ModuleMap theta_map(const PresentedModule& S, const PresentedModule& M, const PresentedModule& N) {
  const Ring& R = S.ring();
  HomModule H1 = hom_module(M, N);
  std::size_t s1 = H1.module().ngens();
  PresentedModule T = tensor_module(S, H1.module());
  HomModule H2 = hom_module(S, M);
  std::size_t s2 = H2.module().ngens();
  HomModule H3 = hom_module(H2.module(), N);
  std::vector<Matrix> psi, phi;
  for (std::size_t t = 0; t < s1; ++t) psi.push_back(H1.decode(t).matrix());
  for (std::size_t u = 0; u < s2; ++u) phi.push_back(H2.decode(u).matrix());
  Matrix th(R, H3.module().ngens());
  for (std::size_t a = 0; a < S.ngens(); ++a) {
    for (std::size_t t = 0; t < s1; ++t) {
      Matrix ev(R, N.ngens());
      for (std::size_t u = 0; u < s2; ++u) ev.push_normalized(psi[t].apply(phi[u].col(a)));
      th.push(H3.encode(ev));
    }
  }
  return ModuleMap(T, H3.module(), th);
}

ModuleMap omega_map(const PresentedModule& S, const PresentedModule& M, const PresentedModule& N) {
  const Ring& R = S.ring();
  HomModule H = hom_module(S, M);
  std::size_t s = H.module().ngens(), nN = N.ngens(), nM = M.ngens();
  PresentedModule T = tensor_module(H.module(), N);
  PresentedModule MN = tensor_module(M, N);
  HomModule H2 = hom_module(S, MN);
  std::vector<Matrix> psi;
  for (std::size_t t = 0; t < s; ++t) psi.push_back(H.decode(t).matrix());
  Matrix om(R, H2.module().ngens());
  for (std::size_t t = 0; t < s; ++t) {
    for (std::size_t l = 0; l < nN; ++l) {
      Matrix img(R, nM * nN);
      for (std::size_t a = 0; a < S.ngens(); ++a) {
        Vec v;
        for (const auto& term : psi[t].col(a)) {
          v.push_back(Term{term.mono, term.coef, static_cast<std::uint32_t>(term.comp * nN + l)});
        }
        img.push(std::move(v));
      }
      om.push(H2.encode(img));
    }
  }
  return ModuleMap(T, H2.module(), om);
}

}  // namespace semidual
