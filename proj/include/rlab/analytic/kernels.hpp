#pragma once

namespace rlab {

// Heat kernel of d^2/dx^2: exp(-z^2/4t)/sqrt(4 pi t).
double heat_kernel(double t, double z);

// int_0^inf e^{-lambda t} g(t, x) dt.
double heat_kernel_laplace(double lambda, double x);

// int_0^inf e^{-lambda t} (|x|/t) g(t, x) dt.
double first_passage_laplace_kernel(double lambda, double x);

double reflected_bm_density(double t, double x, double y);

double resetting_density_free(double t, double x, double x_r, double y, double r);

// Half-line resetting process (reset to 0), method of images plus the
// reset contribution.
double resetting_density_reflected(double t, double x, double y, double r);

double stationary_density_free(double y, double r);
double stationary_density_halfline(double y, double r);
double stationary_cdf_halfline(double y, double r);

// Reflected BM with drift -2 sqrt(r). The improper integral is truncated
// where the integrand falls 1e-16 below its peak.
double drifted_reflected_density(double t, double x, double y, double r);

// Time Laplace transform of the joint (position, local time) density of the
// drifted reflected BM started at 0.
double joint_laplace_drift(double lambda, double y, double w, double r);

}  // namespace rlab
