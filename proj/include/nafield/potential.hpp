#pragma once

#include <string>
#include <vector>

#include "nafield/errors.hpp"

namespace nafield {

/// Constants of the one-loop effective potential, artifact units.
struct PotentialParams {
  double alpha = 1.0;   // > 0
  double g = 1.0;       // != 0
  double mu_bar = 1.0;  // > 0
};

struct MexicanHatParams {
  double mu_sq = 1.0;  // either sign
};

/// V_eff(phi) = phi^2/(2 alpha g^2) + (phi^2/32 pi^2)(ln(phi^2/mu_bar^4) - 3),
/// exactly as printed. phi = 0 is a domain error unless the removable
/// phi^2 ln phi^2 -> 0 extension is requested.
double v_eff(double phi, const PotentialParams& p, bool extend_at_zero = false);

/// phi/(alpha g^2) + (phi/16 pi^2)(ln(phi^2/mu_bar^4) - 2).
double v_eff_prime(double phi, const PotentialParams& p);

struct Minimum {
  double phi_star = 0.0;
  double v_star = 0.0;
};

struct MinimaResult {
  std::vector<Minimum> minima;  // +- pairs, positive first
  double closed_form = 0.0;     // mu_bar^2 exp(1 - 8 pi^2/(alpha g^2))
  double paper_formula = 0.0;   // mu_bar^2 exp(1 - 8 pi/(alpha g^2 mu_bar^2)) as printed
  bool found = false;
};

/// Log-grid scan of v_eff_prime for sign changes (default range
/// [1e-6, 1e6]*mu_bar^2, widened in decades when the bracket lies outside),
/// then bisection to tol; each root is validated by second-difference
/// positivity. The closed-form stationary point and the paper's printed
/// minimum are returned alongside for comparison.
MinimaResult find_minima(const PotentialParams& p, double tol = 1e-10);

/// (phi^2 - mu^2)^2.
double mexican_hat(double phi, const MexicanHatParams& m);

/// One record per parameter set:
/// "alpha=.. g=.. mu_bar=.. phi_star=.. v_star=.. phi_closed_form=..
///  paper_formula=.. rel_gap=.."
std::string potential_record(const PotentialParams& p, const MinimaResult& r);

}  // namespace nafield
