#include "mac/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>

#include "mac/kernels.hpp"

namespace mac {

namespace {

std::optional<QMat> inverse(const QMat& a) {
  const std::size_t n = a.rows();
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.r(i, n + j);
  return inv;
}

Rational row_dot(const QMat& a, std::size_t row, const QVec& x) {
  Rational s = 0;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (sgn(a(row, c)) != 0) s += a(row, c) * x[c];
  return s;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  QMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::string vec_str(const QVec& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].get_str();
  return s + ")";
}

}  // namespace

std::vector<HVertex> vertex_enumeration(int n, const QMat& a, const QVec& b) {
  const int m = static_cast<int>(a.rows());
  if (static_cast<int>(a.cols()) != n || static_cast<int>(b.size()) != m)
    throw std::invalid_argument("H-representation: A must be m x n and b of length m");
  if (m > kMaxVertices) throw std::invalid_argument("H-representation: more than 64 facets");
  if (n == 0) {
    for (const auto& x : b)
      if (sgn(x) < 0) throw std::invalid_argument("H-representation: empty polytope");
    return {HVertex{{}, 0}};
  }
  if (m < n + 1) throw std::invalid_argument("H-representation: fewer than n+1 facets cannot bound a polytope");
  if (rank(a) < static_cast<std::size_t>(n)) throw std::invalid_argument("H-representation: unbounded (A has rank < n)");

  std::map<QVec, VSet> found;
  VSet t = full_set(n);
  const VSet limit = bit(m - 1) << 1;
  while (true) {
    QMat sys(n, n + 1);
    int r = 0;
    for_each_bit(t, [&](int i) {
      for (int c = 0; c < n; ++c) sys(r, c) = a(i, c);
      sys(r, n) = -b[i];
      ++r;
    });
    auto e = rref(std::move(sys));
    if (e.pivots.size() == static_cast<std::size_t>(n) && e.pivots.back() == static_cast<std::size_t>(n - 1)) {
      QVec x(n);
      for (int i = 0; i < n; ++i) x[i] = e.r(i, n);
      bool feasible = true;
      VSet tight = 0;
      for (int i = 0; i < m && feasible; ++i) {
        Rational s = row_dot(a, i, x) + b[i];
        if (sgn(s) < 0) feasible = false;
        else if (sgn(s) == 0) tight |= bit(i);
      }
      if (feasible) found.emplace(std::move(x), tight);
    }
    // next n-subset (Gosper)
    VSet c = t & (~t + 1), rr = t + c;
    if (rr == 0) break;
    t = (((rr ^ t) >> 2) / c) | rr;
    if (m < 64 && t >= limit) break;
  }
  if (found.empty()) throw std::invalid_argument("H-representation: empty polytope (no vertices)");

  std::vector<HVertex> out;
  VSet used = 0;
  for (auto& [x, tight] : found) {
    if (card(tight) != n)
      throw std::invalid_argument("H-representation: not simple, vertex " + vec_str(x) + " lies on " +
                                  std::to_string(card(tight)) + " facets");
    used |= tight;
    QMat at(n, n);
    int r = 0;
    for_each_bit(tight, [&](int i) {
      for (int c = 0; c < n; ++c) at(r, c) = a(i, c);
      ++r;
    });
    auto inv = inverse(at);
    for (int j = 0; j < n; ++j) {
      QVec d(n);
      for (int i = 0; i < n; ++i) d[i] = (*inv)(i, j);
      bool bounded = false;
      for (int i = 0; i < m && !bounded; ++i)
        if (!contains(tight, i) && sgn(row_dot(a, i, d)) < 0) bounded = true;
      if (!bounded) throw std::invalid_argument("H-representation: unbounded edge at vertex " + vec_str(x));
    }
    out.push_back({x, tight});
  }
  if (used != full_set(m)) {
    int i = lowest(full_set(m) & ~used);
    throw std::invalid_argument("H-representation: inequality " + std::to_string(i + 1) + " is redundant");
  }
  std::sort(out.begin(), out.end(), [](const HVertex& p, const HVertex& q) { return canonical_less(p.facets, q.facets); });
  return out;
}

HPolytope::HPolytope(int n, QMat a, QVec b, std::vector<std::string> labels)
    : n_(n), a_(std::move(a)), b_(std::move(b)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != a_.rows()) throw std::invalid_argument("H-representation: label count differs from m");
  vertices_ = vertex_enumeration(n_, a_, b_);
}

QVec HPolytope::slack(const QVec& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("point has wrong dimension");
  QVec y(m());
  for (int i = 0; i < m(); ++i) y[i] = row_dot(a_, i, x) + b_[i];
  return y;
}

bool HPolytope::contains(const QVec& x) const {
  for (const auto& s : slack(x))
    if (sgn(s) < 0) return false;
  return true;
}

CombPolytope nerve_from_hrep(const HPolytope& p) {
  std::vector<VSet> faces;
  for (const auto& v : p.vertices()) faces.push_back(v.facets);
  return CombPolytope(p.n(), SimplicialComplex(p.m(), std::move(faces), p.labels()));
}

QuadricSystem quadric_system(const HPolytope& p) {
  QuadricSystem q;
  auto basis = nullspace(p.a().transposed());
  q.c = QMat(basis.size(), p.m());
  q.d.assign(basis.size(), Rational(0));
  for (std::size_t t = 0; t < basis.size(); ++t)
    for (int j = 0; j < p.m(); ++j) {
      q.c(t, j) = basis[t][j];
      q.d[t] += basis[t][j] * p.b()[j];
    }
  return q;
}

std::vector<std::complex<double>> lift_point(const HPolytope& p, const QVec& x, const std::vector<double>& theta) {
  if (!p.contains(x)) throw std::invalid_argument("lift_point: point " + vec_str(x) + " is outside the polytope");
  if (static_cast<int>(theta.size()) != p.m()) throw std::invalid_argument("lift_point: need one phase per facet");
  auto y = p.slack(x);
  std::vector<std::complex<double>> z(p.m());
  for (int i = 0; i < p.m(); ++i) z[i] = std::polar(std::sqrt(y[i].get_d()), theta[i]);
  return z;
}

FaceEmbeddingData face_embedding_data(const HPolytope& p, VSet s) {
  const int n = p.n(), m = p.m();
  FaceEmbeddingData e;
  e.s = s;
  e.r = n - card(s);
  const HVertex* v = nullptr;
  for (const auto& h : p.vertices())
    if (subset_of(s, h.facets)) {
      if (!v) v = &h;
      e.face_vertex_sets.push_back(h.facets);
    }
  if (!v) throw std::invalid_argument("face_embedding_data: facet set does not define a face");

  FrameChange& f = e.frame;
  f.vertex_facets = v->facets;
  for_each_bit(v->facets & ~s, [&](int i) { f.order.push_back(i); });
  for_each_bit(s, [&](int i) { f.order.push_back(i); });
  f.t_mat = QMat(n, n);
  f.t_vec.assign(n, Rational(0));
  for (int k = 0; k < n; ++k) {
    for (int c = 0; c < n; ++c) f.t_mat(k, c) = p.a()(f.order[k], c);
    f.t_vec[k] = p.b()[f.order[k]];
  }
  auto tinv = inverse(f.t_mat);
  if (!tinv) throw std::logic_error("face_embedding_data: facets through a simple vertex are dependent");
  // x = T^{-1}(x' - t): A x + b = (A T^{-1}) x' + (b - A T^{-1} t)
  e.a_new = mat_mul(p.a(), *tinv);
  e.b_new.assign(m, Rational(0));
  QVec shift = tinv->apply(f.t_vec);
  for (int i = 0; i < m; ++i) e.b_new[i] = p.b()[i] - row_dot(p.a(), i, shift);
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < n; ++c)
      if (e.a_new(f.order[k], c) != (c == k ? 1 : 0) || sgn(e.b_new[f.order[k]]) != 0)
        throw std::logic_error("face_embedding_data: frame normalization failed");

  VSet face_facets = 0;
  for (VSet t : e.face_vertex_sets) face_facets |= t;
  face_facets &= ~s;
  e.face_facets = elements(face_facets);
  e.other_facets = elements(full_set(m) & ~face_facets & ~s);
  const int r = e.r;
  auto block = [&](const std::vector<int>& rows, QMat& a, QVec& b) {
    a = QMat(rows.size(), r);
    b.assign(rows.size(), Rational(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (int c = 0; c < r; ++c) a(i, c) = e.a_new(rows[i], c);
      b[i] = e.b_new[rows[i]];
    }
  };
  block(e.face_facets, e.a_i, e.b_i);
  block(e.other_facets, e.a_ii, e.b_ii);

  // first r independent rows of A_I
  SpanBasis<Rational> span(r);
  for (std::size_t i = 0; i < e.a_i.rows() && static_cast<int>(e.inverse_rows.size()) < r; ++i) {
    QVec row(r);
    for (int c = 0; c < r; ++c) row[c] = e.a_i(i, c);
    if (span.insert(row)) e.inverse_rows.push_back(static_cast<int>(i));
  }
  if (static_cast<int>(e.inverse_rows.size()) < r) throw std::logic_error("face_embedding_data: rank(A_I) < r");
  e.c = QMat(r, e.a_i.rows());
  e.d.assign(r, Rational(0));
  if (r > 0) {
    QMat sel(r, r);
    for (int i = 0; i < r; ++i)
      for (int c = 0; c < r; ++c) sel(i, c) = e.a_i(e.inverse_rows[i], c);
    auto si = inverse(sel);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) {
        e.c(i, e.inverse_rows[k]) = (*si)(i, k);
        e.d[i] -= (*si)(i, k) * e.b_i[e.inverse_rows[k]];
      }
  }
  // left-inverse identities C A_I = E_r, C b_I + D = 0
  QMat ca = mat_mul(e.c, e.a_i);
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < r; ++k)
      if (ca(i, k) != (i == k ? 1 : 0)) throw std::logic_error("face_embedding_data: left inverse identity fails");
    if (sgn(row_dot(e.c, i, e.b_i) + e.d[i]) != 0) throw std::logic_error("face_embedding_data: C b_I + D != 0");
  }
  for (VSet t : e.face_vertex_sets) {
    const HVertex* h = nullptr;
    for (const auto& x : p.vertices())
      if (x.facets == t) h = &x;
    QVec xn(n);
    for (int k = 0; k < n; ++k) xn[k] = row_dot(f.t_mat, k, h->x) + f.t_vec[k];
    for (int k = r; k < n; ++k)
      if (sgn(xn[k]) != 0) throw std::logic_error("face_embedding_data: face vertex leaves the face");
    xn.resize(r);
    e.face_vertices.push_back(std::move(xn));
  }
  return e;
}

std::vector<AffineForm> embedding_forms(const FaceEmbeddingData& e, int m) {
  std::vector<AffineForm> out(m, AffineForm{QVec(e.r, Rational(0)), Rational(0)});
  for (int j = 0; j < m; ++j) {
    if (contains(e.s, j)) continue;
    for (int c = 0; c < e.r; ++c) out[j].coef[c] = e.a_new(j, c);
    out[j].constant = e.b_new[j];
  }
  return out;
}

std::vector<std::complex<double>> apply_embedding(const FaceEmbeddingData& e, int m,
                                                  const std::vector<std::complex<double>>& w, long* clamps) {
  const int r = e.r;
  if (w.size() != e.face_facets.size()) throw std::invalid_argument("apply_embedding: wrong face dimension");
  std::vector<double> y(w.size());
  for (std::size_t a = 0; a < w.size(); ++a) y[a] = std::norm(w[a]);
  std::vector<double> x(r, 0.0);
  for (int i = 0; i < r; ++i) {
    double s = e.d[i].get_d();
    for (std::size_t a = 0; a < y.size(); ++a)
      if (sgn(e.c(i, a)) != 0) s += e.c(i, a).get_d() * y[a];
    x[i] = s;
  }
  std::vector<std::complex<double>> z(m, 0.0);
  std::vector<int> alpha_of(m, -1);
  for (std::size_t a = 0; a < e.face_facets.size(); ++a) alpha_of[e.face_facets[a]] = static_cast<int>(a);
  for (int j = 0; j < m; ++j) {
    if (contains(e.s, j)) continue;
    if (alpha_of[j] >= 0) {
      z[j] = w[alpha_of[j]];
      continue;
    }
    double v = e.b_new[j].get_d();
    for (int c = 0; c < r; ++c) v += e.a_new(j, c).get_d() * x[c];
    if (v < 0) {
      if (clamps) ++*clamps;
      v = 0;
    }
    z[j] = std::sqrt(v);
  }
  return z;
}

ResidualReport embed_and_check(const HPolytope& p, VSet s, long samples, std::uint64_t seed, int threads) {
  auto e = face_embedding_data(p, s);
  auto q = quadric_system(p);
  const int m = p.m();
  std::vector<double> qc(q.c.rows() * m), qd(q.c.rows());
  for (std::size_t t = 0; t < q.c.rows(); ++t) {
    for (int j = 0; j < m; ++j) qc[t * m + j] = q.c(t, j).get_d();
    qd[t] = q.d[t].get_d();
  }
  std::vector<std::vector<double>> verts;
  for (const auto& v : e.face_vertices) {
    std::vector<double> d;
    for (const auto& x : v) d.push_back(x.get_d());
    verts.push_back(std::move(d));
  }
  struct Partial {
    double worst = 0;
    VSet nonzero = 0;
    long clamps = 0;
  };
  auto run = [&](long lo, long hi, Partial& out) {
    for (long i = lo; i < hi; ++i) {
      std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) >> 32)};
      std::mt19937_64 rng(ss);
      std::exponential_distribution<double> ex(1.0);
      std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
      std::vector<double> x(e.r, 0.0);
      double total = 0;
      for (const auto& v : verts) {
        double wgt = ex(rng);
        total += wgt;
        for (int c = 0; c < e.r; ++c) x[c] += wgt * v[c];
      }
      for (auto& c : x) c /= total;
      std::vector<std::complex<double>> w(e.face_facets.size());
      for (std::size_t a = 0; a < w.size(); ++a) {
        double y = e.b_i[a].get_d();
        for (int c = 0; c < e.r; ++c) y += e.a_i(a, c).get_d() * x[c];
        if (y < 0) {
          ++out.clamps;
          y = 0;
        }
        w[a] = std::polar(std::sqrt(y), ph(rng));
      }
      auto z = apply_embedding(e, m, w, &out.clamps);
      std::vector<double> mod(m);
      for (int j = 0; j < m; ++j) {
        mod[j] = std::norm(z[j]);
        if (z[j] != 0.0) out.nonzero |= bit(j);
      }
      out.worst = std::max(out.worst, kernels::max_affine_residual(qc.data(), q.c.rows(), m, mod.data(), qd.data()));
    }
  };
  int t = std::max(1, std::min<int>(threads, static_cast<int>(std::max(1L, samples))));
  std::vector<Partial> parts(t);
  if (t == 1) {
    run(0, samples, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i)
      pool.emplace_back(run, samples * i / t, samples * (i + 1) / t, std::ref(parts[i]));
    for (auto& th : pool) th.join();
  }
  ResidualReport rep;
  rep.samples = samples;
  rep.seed = seed;
  rep.r = e.r;
  VSet nonzero = 0;
  for (const auto& pt : parts) {
    rep.max_residual = std::max(rep.max_residual, pt.worst);
    nonzero |= pt.nonzero;
    rep.clamps += pt.clamps;
  }
  if (samples > 0)
    for (int j = 0; j < m; ++j)
      if (!contains(nonzero, j)) rep.zero_coords.push_back(j + 1);
  for (int o : e.frame.order) rep.frame_order.push_back(o + 1);
  return rep;
}

HPolytope cube_hrep(int n) {
  QMat a(2 * n, n);
  QVec b(2 * n, Rational(0));
  for (int j = 0; j < n; ++j) {
    a(j, j) = 1;
    a(n + j, j) = -1;
    b[n + j] = 1;
  }
  return HPolytope(n, std::move(a), std::move(b));
}

HPolytope pentagon_hrep() {
  QMat a(5, 2);
  int rows[5][2] = {{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
  for (int i = 0; i < 5; ++i)
    for (int c = 0; c < 2; ++c) a(i, c) = rows[i][c];
  return HPolytope(2, std::move(a), QVec{0, 0, 2, 3, 2});
}

HPolytope prism_hrep() {
  // triangles F1 (z >= 0), F5 (z <= 1); quads F2 (x >= 0), F3 (y >= 0), F4 (x + y <= 1)
  QMat a(5, 3);
  a(0, 2) = 1;
  a(1, 0) = 1;
  a(2, 1) = 1;
  a(3, 0) = -1;
  a(3, 1) = -1;
  a(4, 2) = -1;
  return HPolytope(3, std::move(a), QVec{0, 0, 0, 1, 1});
}

HPolytope polygon_hrep(int k) {
  if (k < 3) throw std::invalid_argument("polygon needs at least 3 sides");
  QMat a(k, 2);
  QVec b(k, Rational(1000));
  for (int i = 0; i < k; ++i) {
    double t = 2.0 * std::numbers::pi * i / k;
    a(i, 0) = static_cast<long>(std::lround(1000 * std::cos(t)));
    a(i, 1) = static_cast<long>(std::lround(1000 * std::sin(t)));
    a(i, 0) = -a(i, 0);
    a(i, 1) = -a(i, 1);
  }
  return HPolytope(2, std::move(a), std::move(b));
}

HPolytope qn_realization(int n) {
  auto cuts = qn_cuts(n);
  auto order = qn_truncation_order(n);
  const int m = 2 * n + static_cast<int>(cuts.size());
  QMat a(m, n);
  QVec b(m, Rational(0));
  for (int j = 0; j < n; ++j) {
    a(j, j) = 1;
    a(n + j, j) = -1;
    b[n + j] = 1;
  }
  for (std::size_t t = 0; t < order.size(); ++t) {
    int row = qn_cut_vertex(n, order[t]);
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 3, t + 1);
    a(row, order[t].k - 1) = 1;
    a(row, order[t].l - 1) = -1;
    b[row] = Rational(1) - Rational(mpz_class(1), pw);
  }
  std::vector<std::string> labels;
  for (int j = 1; j <= 2 * n; ++j) labels.push_back("v" + std::to_string(j));
  for (Cut c : cuts) labels.push_back(qn_cut_label(n, c));
  return HPolytope(n, std::move(a), std::move(b), std::move(labels));
}

}  // namespace mac
