#pragma once

#include <vector>

#include "prab/kernel_table.hpp"
#include "prab/params.hpp"

namespace prab {

struct KernelValue {
  double value = 0.0;
  double truncation_estimate = 0.0;  // size of the first discarded image ring
};

enum class Wall { Left, Right };
enum class TildePath { ClosedForm, Quadrature };

// omega(t, x) = t^{-1} E12_omega(-x t^{-beta1}, delta t^alpha).
double omega_kernel(double t, double x, const FracParams& p, const SeriesControl& ctl);

KernelValue boundary_kernel_gxi(double t, double x, double eta, Wall side, const DomainSpec& d,
                                const FracParams& p, const SeriesControl& ctl);

KernelValue green_g(double t, double x, double eta, double xi, const DomainSpec& d,
                    const FracParams& p, const SeriesControl& ctl);

// Closed form by default; the quadrature path integrates the time kernel against G.
KernelValue green_g_tilde(double t, double x, double xi, const DomainSpec& d, const FracParams& p,
                          const QuadratureSpec& q, const SeriesControl& ctl,
                          TildePath path = TildePath::ClosedForm);

// Both paths; throws PathMismatch when they differ by more than 1e-6 relative.
KernelValue green_g_tilde_checked(double t, double x, double xi, const DomainSpec& d,
                                  const FracParams& p, const QuadratureSpec& q,
                                  const SeriesControl& ctl);

double free_space_v(double t, double x, double eta, double xi, const FracParams& p,
                    const SeriesControl& ctl);

// Kernel tables shared by repeated evaluations for one (domain, params, control) triple.
class GreensKernels {
 public:
  GreensKernels(const DomainSpec& d, const FracParams& p, const SeriesControl& ctl);

  const KernelTable& table(KernelKind kind) const;
  const DomainSpec& domain() const { return d_; }
  const FracParams& params() const { return p_; }
  const SeriesControl& control() const { return ctl_; }

  double y_of(double tau) const;

  double omega(double tau, double x) const;
  double v(double tau, double dist) const;
  KernelValue gxi(double tau, double x, Wall side) const;
  KernelValue g(double tau, double x, double xi) const;
  KernelValue g_tilde(double t, double x, double xi) const;
  KernelValue g_tilde_quadrature(double t, double x, double xi, const QuadratureSpec& q) const;

  // Image sum of kernel differences sum_n [K(|x - xi + 2an| s) - K(|x + xi - 2an| s)], s = tau^{-beta1}.
  KernelValue image_difference(const KernelTable& tab, const KernelTable::Slice& sl, double scale,
                               double x, double xi) const;

 private:
  DomainSpec d_;
  FracParams p_;
  SeriesControl ctl_;
  KernelTable omega_;
  KernelTable green_;
  KernelTable tilde_;
};

}  // namespace prab
