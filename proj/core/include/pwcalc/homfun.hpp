// homfun.hpp — Homogeneous two-variable functions carried by their section ψ(t) = f(t, 1−t).
//
// Homogeneity is structural, never checked numerically: every evaluation goes through
//   f(r, s) = (r+s) · ψ(r/(r+s)),   f(0, 0) = 0.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pwcalc/extended.hpp"

namespace pwcalc {

enum class Domain { closed_quadrant, open_quadrant };

class HomogeneousFunction {
 public:
  // `section` must be total on its declared domain: all of [0,1] for closed_quadrant,
  // the open interval (0,1) for open_quadrant. Declared boundary infinities are carried
  // by the infinite_at flags and answered before `section` is consulted.
  HomogeneousFunction(std::string name, std::function<ExtendedReal(double)> section,
                      Domain domain, bool continuous_on_closed, bool infinite_at_zero,
                      bool infinite_at_one);

  const std::string& name() const { return name_; }
  Domain domain() const { return domain_; }
  bool continuous_on_closed() const { return continuous_on_closed_; }
  bool infinite_at_zero() const { return infinite_at_zero_; }
  bool infinite_at_one() const { return infinite_at_one_; }
  bool takes_infinite_values() const { return infinite_at_zero_ || infinite_at_one_; }

  // ψ(t) for t in [0,1]. Open-quadrant functions reject t = 0 and t = 1 with DomainError
  // unless the matching infinite_at flag declares the boundary value.
  ExtendedReal section(double t) const;

  // f(r, s) for r, s >= 0.
  ExtendedReal eval(double r, double s) const;

 private:
  std::string name_;
  std::function<ExtendedReal(double)> section_;
  Domain domain_;
  bool continuous_on_closed_;
  bool infinite_at_zero_;
  bool infinite_at_one_;
};

// ---------------------------------- catalogue ----------------------------------

HomogeneousFunction weighted_geometric(double alpha);  // r^{1-α} s^α, α in (0,1)
HomogeneousFunction renyi(double alpha);               // r^{1-α} s^α, α in (0,2]
HomogeneousFunction parallel_sum_function();           // rs/(r+s), 0 at (0,0)
HomogeneousFunction arithmetic_mean();                 // (r+s)/2
HomogeneousFunction left_coordinate();                 // r
HomogeneousFunction right_coordinate();                // s
HomogeneousFunction entropy_kernel();                  // r log(r/s); 0 on r=0, +inf on s=0 (r>0)
HomogeneousFunction perspective_of(std::function<double(double)> g, const std::string& g_name);

// g(r, s) = f(r/a, s/b), so that g(aA, bB) = f(A, B). Requires a, b > 0.
HomogeneousFunction rescale(const HomogeneousFunction& fn, double a, double b);

struct CatalogueParams {
  std::optional<double> alpha;
  std::optional<std::string> g;  // named generator for perspective_of
};

// Resolves a function by name: weighted_geometric | geometric | renyi | parallel_sum |
// arithmetic | left | right | entropy_kernel | perspective_of. Throws UnknownName for
// anything else and BadParameter for missing or out-of-range parameters.
HomogeneousFunction catalogue(const std::string& name, const CatalogueParams& params = {});

std::vector<std::string> catalogue_names();

// Named scalar maps used as perspective generators and section-scan targets:
// identity, t2, t3, t4, sqrt, inv, exp, log, tlogt.
std::function<double(double)> named_scalar_function(const std::string& name);

std::vector<std::string> named_scalar_function_names();

}  // namespace pwcalc
