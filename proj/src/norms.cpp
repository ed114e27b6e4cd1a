#include "tdks/norms.hpp"

#include <cmath>
#include <numbers>

namespace tdks {

namespace {

inline double abs2(double v) { return v * v; }
inline double abs2(const cplx& v) { return v.real() * v.real() + v.imag() * v.imag(); }

// Walks every axis line of the zero-extended field and accumulates
// visit(diff_f) over the n+1 edges per line (ghost zero at both ends).
template <typename T, typename Visit>
void for_each_edge(const GridSpec& g, const std::vector<T>& f, Visit&& visit) {
  const int n0 = g.points[0], n1 = g.points[1], n2 = g.points[2];
  const double h0 = g.spacing(0), h1 = g.spacing(1), h2 = g.spacing(2);
  // axis 0, stride n1*n2
  for (int j = 0; j < n1; ++j)
    for (int k = 0; k < n2; ++k) {
      T prev{};
      for (int i = 0; i < n0; ++i) {
        const T& v = f[std::size_t(g.index(i, j, k))];
        visit(0, h0, v - prev);
        prev = v;
      }
      visit(0, h0, T{} - prev);
    }
  // axis 1, stride n2
  for (int i = 0; i < n0; ++i)
    for (int k = 0; k < n2; ++k) {
      T prev{};
      for (int j = 0; j < n1; ++j) {
        const T& v = f[std::size_t(g.index(i, j, k))];
        visit(1, h1, v - prev);
        prev = v;
      }
      visit(1, h1, T{} - prev);
    }
  // axis 2, contiguous
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      T prev{};
      for (int k = 0; k < n2; ++k) {
        const T& v = f[std::size_t(g.index(i, j, k))];
        visit(2, h2, v - prev);
        prev = v;
      }
      visit(2, h2, T{} - prev);
    }
}

// Same edge walk over two fields in lockstep.
template <typename T, typename U, typename Visit>
void for_each_edge_pair(const GridSpec& g, const std::vector<T>& f, const std::vector<U>& w,
                        Visit&& visit) {
  const int n0 = g.points[0], n1 = g.points[1], n2 = g.points[2];
  const double h0 = g.spacing(0), h1 = g.spacing(1), h2 = g.spacing(2);
  for (int j = 0; j < n1; ++j)
    for (int k = 0; k < n2; ++k) {
      T pf{};
      U pw{};
      for (int i = 0; i < n0; ++i) {
        std::size_t idx = std::size_t(g.index(i, j, k));
        visit(h0, f[idx] - pf, w[idx] - pw);
        pf = f[idx];
        pw = w[idx];
      }
      visit(h0, T{} - pf, U{} - pw);
    }
  for (int i = 0; i < n0; ++i)
    for (int k = 0; k < n2; ++k) {
      T pf{};
      U pw{};
      for (int j = 0; j < n1; ++j) {
        std::size_t idx = std::size_t(g.index(i, j, k));
        visit(h1, f[idx] - pf, w[idx] - pw);
        pf = f[idx];
        pw = w[idx];
      }
      visit(h1, T{} - pf, U{} - pw);
    }
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j) {
      T pf{};
      U pw{};
      for (int k = 0; k < n2; ++k) {
        std::size_t idx = std::size_t(g.index(i, j, k));
        visit(h2, f[idx] - pf, w[idx] - pw);
        pf = f[idx];
        pw = w[idx];
      }
      visit(h2, T{} - pf, U{} - pw);
    }
}

template <typename T>
double l2_norm_impl(const GridSpec& g, const std::vector<T>& v) {
  double acc = 0.0;
  for (const T& x : v) acc += abs2(x);
  return std::sqrt(acc * g.cell_volume());
}

template <typename T>
double h1_seminorm_sq_impl(const GridSpec& g, const std::vector<T>& v) {
  double acc = 0.0;
  for_each_edge(g, v, [&](int, double h, T d) { acc += abs2(d) / (h * h); });
  return acc * g.cell_volume();
}

template <typename T>
double lp_norm_impl(const GridSpec& g, const std::vector<T>& v, double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    fail(errc::invalid_exponent, "lp_norm requires p >= 1");
  double acc = 0.0;
  for (const T& x : v) acc += std::pow(abs2(x), 0.5 * p);
  return std::pow(acc * g.cell_volume(), 1.0 / p);
}

template <typename T>
std::vector<T> laplacian_impl(const GridSpec& g, const std::vector<T>& f) {
  const int n0 = g.points[0], n1 = g.points[1], n2 = g.points[2];
  const double w0 = 1.0 / (g.spacing(0) * g.spacing(0));
  const double w1 = 1.0 / (g.spacing(1) * g.spacing(1));
  const double w2 = 1.0 / (g.spacing(2) * g.spacing(2));
  const std::int64_t s0 = std::int64_t(n1) * n2, s1 = n2;
  std::vector<T> out(f.size());
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n2; ++k) {
        std::int64_t idx = g.index(i, j, k);
        T c = f[std::size_t(idx)];
        T acc = T{} - (2.0 * (w0 + w1 + w2)) * c;
        if (i > 0) acc += w0 * f[std::size_t(idx - s0)];
        if (i + 1 < n0) acc += w0 * f[std::size_t(idx + s0)];
        if (j > 0) acc += w1 * f[std::size_t(idx - s1)];
        if (j + 1 < n1) acc += w1 * f[std::size_t(idx + s1)];
        if (k > 0) acc += w2 * f[std::size_t(idx - 1)];
        if (k + 1 < n2) acc += w2 * f[std::size_t(idx + 1)];
        out[std::size_t(idx)] = acc;
      }
  return out;
}

template <typename T>
double dot_real(const std::vector<T>& a, const std::vector<T>& b);

template <>
double dot_real(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}
template <>
double dot_real(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return acc;
}

// CG on the SPD operator -lap; works for real and complex right-hand sides
// since the operator is real and acts componentwise.
template <typename T>
std::vector<T> poisson_cg(const GridSpec& g, const std::vector<T>& rhs, double rel_tol) {
  const double rhs_norm = std::sqrt(dot_real(rhs, rhs));
  std::vector<T> u(rhs.size(), T{});
  if (rhs_norm == 0.0) return u;
  std::vector<T> r = rhs;
  std::vector<T> p = r;
  double rs = dot_real(r, r);
  const long max_iter = 10 * long(g.total());
  for (long it = 0; it < max_iter; ++it) {
    std::vector<T> ap = laplacian_impl(g, p);
    for (T& v : ap) v = T{} - v;  // -lap
    double pap = dot_real(p, ap);
    double alpha = rs / pap;
    for (std::size_t i = 0; i < u.size(); ++i) {
      u[i] += alpha * p[i];
      r[i] -= alpha * ap[i];
    }
    double rs_new = dot_real(r, r);
    if (std::sqrt(rs_new) <= rel_tol * rhs_norm) return u;
    double beta = rs_new / rs;
    rs = rs_new;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = r[i] + beta * p[i];
  }
  fail(errc::solver_failure, "Poisson conjugate gradients did not reach tolerance");
}

}  // namespace

RealField density(const OrbitalSet& s) {
  RealField rho(s.grid());
  for (const auto& orb : s.orbitals)
    for (std::size_t i = 0; i < rho.values.size(); ++i) rho.values[i] += abs2(orb.values[i]);
  return rho;
}

double l2_norm(const RealField& f) { return l2_norm_impl(f.grid, f.values); }
double l2_norm(const ComplexField& f) { return l2_norm_impl(f.grid, f.values); }
double l2_norm(const OrbitalSet& s) {
  double acc = 0.0;
  for (const auto& o : s.orbitals) {
    double n = l2_norm(o);
    acc += n * n;
  }
  return std::sqrt(acc);
}

double h1_seminorm(const RealField& f) { return std::sqrt(h1_seminorm_sq_impl(f.grid, f.values)); }
double h1_seminorm(const ComplexField& f) {
  return std::sqrt(h1_seminorm_sq_impl(f.grid, f.values));
}
double h1_seminorm(const OrbitalSet& s) {
  double acc = 0.0;
  for (const auto& o : s.orbitals) acc += h1_seminorm_sq_impl(o.grid, o.values);
  return std::sqrt(acc);
}

double lp_norm(const RealField& f, double p) { return lp_norm_impl(f.grid, f.values, p); }
double lp_norm(const ComplexField& f, double p) { return lp_norm_impl(f.grid, f.values, p); }

double l2_inner(const RealField& f, const RealField& g) {
  return dot_real(f.values, g.values) * f.grid.cell_volume();
}

cplx l2_inner(const ComplexField& f, const ComplexField& g) {
  cplx acc{};
  for (std::size_t i = 0; i < f.values.size(); ++i) acc += std::conj(f.values[i]) * g.values[i];
  return acc * f.grid.cell_volume();
}

cplx duality_pair(const ComplexField& f, const RealField& zeta) {
  cplx acc{};
  for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * zeta.values[i];
  return acc * f.grid.cell_volume();
}

double duality_pair(const RealField& f, const RealField& zeta) {
  return dot_real(f.values, zeta.values) * f.grid.cell_volume();
}

cplx grad_inner(const ComplexField& f, const ComplexField& g) {
  cplx acc{};
  for_each_edge_pair(f.grid, f.values, g.values,
                     [&](double h, cplx df, cplx dg) { acc += std::conj(df) * dg / (h * h); });
  return acc * f.grid.cell_volume();
}

double grad_inner(const RealField& f, const RealField& g) {
  double acc = 0.0;
  for_each_edge_pair(f.grid, f.values, g.values,
                     [&](double h, double df, double dg) { acc += df * dg / (h * h); });
  return acc * f.grid.cell_volume();
}

cplx grad_pair(const ComplexField& f, const RealField& zeta) {
  cplx acc{};
  for_each_edge_pair(f.grid, f.values, zeta.values,
                     [&](double h, cplx df, double dz) { acc += df * dz / (h * h); });
  return acc * f.grid.cell_volume();
}

ComplexField laplacian_apply(const ComplexField& f) {
  return ComplexField(f.grid, laplacian_impl(f.grid, f.values));
}

RealField laplacian_apply(const RealField& f) {
  return RealField(f.grid, laplacian_impl(f.grid, f.values));
}

ComplexField poisson_solve(const ComplexField& f, double rel_tol) {
  return ComplexField(f.grid, poisson_cg(f.grid, f.values, rel_tol));
}

RealField poisson_solve(const RealField& f, double rel_tol) {
  return RealField(f.grid, poisson_cg(f.grid, f.values, rel_tol));
}

double hminus1_norm(const RealField& f, double rel_tol) {
  return h1_seminorm(poisson_solve(f, rel_tol));
}

double hminus1_norm(const ComplexField& f, double rel_tol) {
  return h1_seminorm(poisson_solve(f, rel_tol));
}

double hminus1_norm(const OrbitalSet& s, double rel_tol) {
  double acc = 0.0;
  for (const auto& o : s.orbitals) {
    double n = hminus1_norm(o, rel_tol);
    acc += n * n;
  }
  return std::sqrt(acc);
}

double laplacian_mode_eigenvalue(const GridSpec& grid, const std::array<int, 3>& k) {
  double mu = 0.0;
  for (int a = 0; a < 3; ++a) {
    double h = grid.spacing(a);
    double s = std::sin(0.5 * std::numbers::pi * k[a] * h / grid.extent[a]);
    mu += 4.0 / (h * h) * s * s;
  }
  return mu;
}

double laplacian_min_eigenvalue(const GridSpec& grid) {
  return laplacian_mode_eigenvalue(grid, {1, 1, 1});
}

void axpy(cplx a, const ComplexField& x, ComplexField& y) {
  for (std::size_t i = 0; i < y.values.size(); ++i) y.values[i] += a * x.values[i];
}

void axpy(double a, const RealField& x, RealField& y) {
  for (std::size_t i = 0; i < y.values.size(); ++i) y.values[i] += a * x.values[i];
}

void scale(ComplexField& x, cplx a) {
  for (auto& v : x.values) v *= a;
}

}  // namespace tdks
