#pragma once

#include <complex>

#include "tdks/field.hpp"

namespace tdks {

// Discrete norms and pairings on the Dirichlet grid. Conventions:
//  - L2 quadrature is the midpoint rule: sum |f|^2 * h1*h2*h3 over interior
//    nodes.
//  - The H1 seminorm squares the gradient of the zero-extended field: on each
//    axis line the edge differences run from the low ghost zero through the
//    interior to the high ghost zero, so h1_seminorm(f)^2 equals the
//    quadratic form <-lap f, f> of the 7-point Dirichlet Laplacian exactly.
//    This makes the discrete Poincare constant 1/sqrt(lambda_min) sharp and
//    the H^-1 duality identities exact at solver tolerance.

RealField density(const OrbitalSet& s);

double l2_norm(const RealField& f);
double l2_norm(const ComplexField& f);
double l2_norm(const OrbitalSet& s);

double h1_seminorm(const RealField& f);
double h1_seminorm(const ComplexField& f);
double h1_seminorm(const OrbitalSet& s);

// (l2^2 + h1_seminorm^2)^(1/2) is never needed by the diagnostics; the
// gradient seminorm is used as the H1_0 norm throughout (Poincare makes it a
// norm on the Dirichlet space).

double lp_norm(const RealField& f, double p);   // throws InvalidExponent for p < 1
double lp_norm(const ComplexField& f, double p);

// Hermitian L2 inner products (conjugate on the first slot), volume-weighted.
double l2_inner(const RealField& f, const RealField& g);
cplx l2_inner(const ComplexField& f, const ComplexField& g);

// Bilinear duality pairing sum(f * zeta) * vol against a real test field.
cplx duality_pair(const ComplexField& f, const RealField& zeta);
double duality_pair(const RealField& f, const RealField& zeta);

// Gradient pairings over the same edge set as h1_seminorm.
cplx grad_inner(const ComplexField& f, const ComplexField& g);  // conj on first slot
double grad_inner(const RealField& f, const RealField& g);
cplx grad_pair(const ComplexField& f, const RealField& zeta);   // bilinear

// 7-point second-order Laplacian with Dirichlet ghost zeros; returns lap(f)
// without physical prefactors.
ComplexField laplacian_apply(const ComplexField& f);
RealField laplacian_apply(const RealField& f);

// Conjugate-gradient solve of -lap(u) = f; matrix-free, relative residual
// rel_tol, at most 10 * total-points iterations. Throws SolverFailure.
ComplexField poisson_solve(const ComplexField& f, double rel_tol = 1e-10);
RealField poisson_solve(const RealField& f, double rel_tol = 1e-10);

// Discrete H^-1 norm: h1_seminorm of the Poisson solve.
double hminus1_norm(const RealField& f, double rel_tol = 1e-10);
double hminus1_norm(const ComplexField& f, double rel_tol = 1e-10);
double hminus1_norm(const OrbitalSet& s, double rel_tol = 1e-10);

// Smallest eigenvalue of the discrete Dirichlet -lap on this grid (closed
// form for the product-sine mode k = (1,1,1)).
double laplacian_min_eigenvalue(const GridSpec& grid);
// Eigenvalue of -lap for mode indices k (1-based per axis).
double laplacian_mode_eigenvalue(const GridSpec& grid, const std::array<int, 3>& k);

// Elementwise helpers shared by the solvers.
void axpy(cplx a, const ComplexField& x, ComplexField& y);       // y += a*x
void axpy(double a, const RealField& x, RealField& y);
void scale(ComplexField& x, cplx a);

}  // namespace tdks
