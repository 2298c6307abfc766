#include "pwcalc/homfun.hpp"

#include <cmath>
#include <cstdio>

namespace pwcalc {

HomogeneousFunction::HomogeneousFunction(std::string name,
                                         std::function<ExtendedReal(double)> section,
                                         Domain domain, bool continuous_on_closed,
                                         bool infinite_at_zero, bool infinite_at_one)
    : name_(std::move(name)),
      section_(std::move(section)),
      domain_(domain),
      continuous_on_closed_(continuous_on_closed),
      infinite_at_zero_(infinite_at_zero),
      infinite_at_one_(infinite_at_one) {}

ExtendedReal HomogeneousFunction::section(double t) const {
  if (!(t >= 0.0 && t <= 1.0))  // also rejects NaN
    throw DomainError(name_ + ": section argument " + std::to_string(t) + " outside [0,1]");
  if (t == 0.0 && infinite_at_zero_) return ExtendedReal::plus_infinity();
  if (t == 1.0 && infinite_at_one_) return ExtendedReal::plus_infinity();
  if (domain_ == Domain::open_quadrant && (t == 0.0 || t == 1.0))
    throw DomainError(name_ + ": undefined on the boundary of the open quadrant");
  return section_(t);
}

ExtendedReal HomogeneousFunction::eval(double r, double s) const {
  if (!(r >= 0.0) || !(s >= 0.0) || !std::isfinite(r) || !std::isfinite(s))
    throw DomainError(name_ + ": eval arguments must be finite and nonnegative");
  const double sum = r + s;
  if (sum == 0.0) return ExtendedReal::finite(0.0);
  return scale(sum, section(r / sum));
}

// ---------------------------------- catalogue ----------------------------------

HomogeneousFunction weighted_geometric(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw BadParameter("weighted_geometric: alpha must lie in (0,1)");
  char name[64];
  std::snprintf(name, sizeof name, "weighted_geometric(%g)", alpha);
  auto psi = [alpha](double t) {
    return ExtendedReal::finite(std::pow(t, 1.0 - alpha) * std::pow(1.0 - t, alpha));
  };
  return HomogeneousFunction(name, psi, Domain::closed_quadrant, true, false, false);
}

HomogeneousFunction renyi(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw BadParameter("renyi: alpha must lie in (0,2]");
  char name[64];
  std::snprintf(name, sizeof name, "renyi(%g)", alpha);
  const bool inf_at_zero = alpha > 1.0;  // t=0 means (r,s)=(0,1): 0^{1-α} = +inf for α>1
  // For α <= 1 the power formula already gives the right closed values:
  // ψ(0) = 0 (α<1) or 1 (α=1), ψ(1) = 0. For α > 1 the t=0 infinity is declared above.
  auto psi = [alpha](double t) {
    return ExtendedReal::finite(std::pow(t, 1.0 - alpha) * std::pow(1.0 - t, alpha));
  };
  return HomogeneousFunction(name, psi, Domain::closed_quadrant, !inf_at_zero, inf_at_zero,
                             false);
}

HomogeneousFunction parallel_sum_function() {
  auto psi = [](double t) { return ExtendedReal::finite(t * (1.0 - t)); };
  return HomogeneousFunction("parallel_sum", psi, Domain::closed_quadrant, true, false, false);
}

HomogeneousFunction arithmetic_mean() {
  auto psi = [](double) { return ExtendedReal::finite(0.5); };
  return HomogeneousFunction("arithmetic", psi, Domain::closed_quadrant, true, false, false);
}

HomogeneousFunction left_coordinate() {
  auto psi = [](double t) { return ExtendedReal::finite(t); };
  return HomogeneousFunction("left", psi, Domain::closed_quadrant, true, false, false);
}

HomogeneousFunction right_coordinate() {
  auto psi = [](double t) { return ExtendedReal::finite(1.0 - t); };
  return HomogeneousFunction("right", psi, Domain::closed_quadrant, true, false, false);
}

HomogeneousFunction entropy_kernel() {
  auto psi = [](double t) {
    if (t == 0.0) return ExtendedReal::finite(0.0);  // 0 log 0 = 0
    return ExtendedReal::finite(t * std::log(t / (1.0 - t)));
  };
  // +inf on the s = 0 edge (t = 1) for r > 0.
  return HomogeneousFunction("entropy_kernel", psi, Domain::closed_quadrant, false, false, true);
}

HomogeneousFunction perspective_of(std::function<double(double)> g, const std::string& g_name) {
  auto psi = [g = std::move(g)](double t) {
    return scale(1.0 - t, ExtendedReal::from_value(g(t / (1.0 - t))));
  };
  return HomogeneousFunction("perspective_of(" + g_name + ")", psi, Domain::open_quadrant,
                             false, false, false);
}

HomogeneousFunction rescale(const HomogeneousFunction& fn, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw BadParameter("rescale: a and b must be positive");
  char suffix[80];
  std::snprintf(suffix, sizeof suffix, ",%g,%g)", a, b);
  auto psi = [fn, a, b](double t) { return fn.eval(t / a, (1.0 - t) / b); };
  return HomogeneousFunction("rescale(" + fn.name() + suffix, psi, fn.domain(),
                             fn.continuous_on_closed(), fn.infinite_at_zero(),
                             fn.infinite_at_one());
}

HomogeneousFunction catalogue(const std::string& name, const CatalogueParams& params) {
  auto need_alpha = [&]() {
    if (!params.alpha) throw BadParameter(name + ": requires alpha");
    return *params.alpha;
  };
  if (name == "weighted_geometric" || name == "geometric") return weighted_geometric(need_alpha());
  if (name == "renyi") return renyi(need_alpha());
  if (name == "parallel_sum") return parallel_sum_function();
  if (name == "arithmetic") return arithmetic_mean();
  if (name == "left") return left_coordinate();
  if (name == "right") return right_coordinate();
  if (name == "entropy_kernel") return entropy_kernel();
  if (name == "perspective_of") {
    if (!params.g) throw BadParameter("perspective_of: requires a named generator g");
    return perspective_of(named_scalar_function(*params.g), *params.g);
  }
  throw UnknownName("catalogue: no function named '" + name + "'");
}

std::vector<std::string> catalogue_names() {
  return {"weighted_geometric", "renyi",          "parallel_sum",  "arithmetic",
          "left",               "right",          "entropy_kernel", "perspective_of"};
}

std::function<double(double)> named_scalar_function(const std::string& name) {
  if (name == "identity") return [](double t) { return t; };
  if (name == "t2") return [](double t) { return t * t; };
  if (name == "t3") return [](double t) { return t * t * t; };
  if (name == "t4") return [](double t) { return t * t * t * t; };
  if (name == "sqrt") return [](double t) { return std::sqrt(t); };
  if (name == "inv") return [](double t) { return 1.0 / t; };
  if (name == "exp") return [](double t) { return std::exp(t); };
  if (name == "log") return [](double t) { return std::log(t); };
  if (name == "tlogt") return [](double t) { return t == 0.0 ? 0.0 : t * std::log(t); };
  throw UnknownName("named_scalar_function: no map named '" + name + "'");
}

std::vector<std::string> named_scalar_function_names() {
  return {"identity", "t2", "t3", "t4", "sqrt", "inv", "exp", "log", "tlogt"};
}

}  // namespace pwcalc
