#pragma once

namespace prab {

// Fractional parameters of the Prabhakar kernel t^{-beta} E^{-gamma}_{alpha,1-beta}(delta t^alpha).
struct FracParams {
  double alpha = 0.8;
  double beta = 0.5;
  double gamma = 0.3;
  double delta = 0.5;
  double beta1 = 0.25;
  double gamma1 = 0.15;

  // Validates alpha > 0 and 0 < beta < 1, fills the halves.
  static FracParams make(double alpha, double beta, double gamma, double delta);
};

struct SeriesControl {
  int k_max = 170;  // spatial power series order
  int i_max = 60;   // delta-power series order
  int n_images = 8;
  double abs_tol = 1e-14;
  double rel_tol = 1e-12;
  // Kernel values whose rounding error would exceed this are replaced by 0.
  double noise_floor = 1e-8;

  void validate() const;
};

struct QuadratureSpec {
  int n_panels = 64;
  double grading_exponent = 0.0;  // <= 0 picks max(2, 2/(p+1)) for endpoint power p
  int nodes_per_panel = 8;

  void validate() const;
  double grading_for(double endpoint_power) const;
};

struct DomainSpec {
  double a = 3.14159265358979323846;
  double T = 2.0;

  static DomainSpec make(double a, double T);
};

}  // namespace prab
