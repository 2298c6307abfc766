// fixtures.cpp — see fixtures.hpp.
#include "pwcalc/fixtures.hpp"

#include <cmath>
#include <filesystem>
#include <utility>

#include "json.hpp"
#include "pwcalc/errors.hpp"
#include "pwcalc/matrix_io.hpp"
#include "pwcalc/random.hpp"
#include "pwcalc/report.hpp"
#include "pwcalc/spectral.hpp"

namespace pwcalc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Constructions keep containment residuals either below ~1e-12 or above ~0.1,
// so this gate never sits near a real margin.
constexpr double containment_tol = 1e-7;

struct Derived {
  bool commuting;
  int kernel_rank;
  bool bs_infinite;
  bool renyi_infinite;
};

Derived derive_properties(const HermitianMatrix& a, const HermitianMatrix& b, double rank_tol) {
  const Eigen::Index d = a.dim();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix comm = a.mat() * b.mat() - b.mat() * a.mat();
  const Matrix ka = kernel_projector(a, rank_tol);
  const Matrix kb = kernel_projector(b, rank_tol);
  const Matrix ks = kernel_projector(HermitianMatrix(a.mat() + b.mat(), a.herm_tol()), rank_tol);
  Derived out;
  out.commuting = spectral_norm(comm) <= 1e-9 * (1.0 + a.norm2() * b.norm2());
  out.kernel_rank = static_cast<int>(std::llround(ks.trace().real()));
  out.bs_infinite = spectral_norm((id - ka) * kb) > containment_tol;
  out.renyi_infinite = spectral_norm((id - kb) * ka) > containment_tol;
  return out;
}

HermitianMatrix from_spectrum(const Matrix& u, const Eigen::VectorXd& s) {
  return HermitianMatrix(hermitize(u * s.cast<Complex>().asDiagonal() * u.adjoint()));
}

// Commuting pair in a shared eigenbasis. Variants: 0 both spectra positive,
// 1 a shared zero eigenvalue (joint kernel), 2 zeros at different positions
// (each operand singular, the sum invertible).
std::pair<HermitianMatrix, HermitianMatrix> make_commuting(Eigen::Index d, int variant,
                                                           Rng& rng) {
  const Matrix u = random_unitary(d, rng);
  Eigen::VectorXd sa(d), sb(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    sa(i) = rng.uniform(0.2, 2.0);
    sb(i) = rng.uniform(0.2, 2.0);
  }
  if (variant == 1) {
    sa(0) = 0.0;
    sb(0) = 0.0;
  } else if (variant == 2) {
    sa(0) = 0.0;
    sb(1) = 0.0;
  }
  return {from_spectrum(u, sa), from_spectrum(u, sb)};
}

// PSD with a kernel of exact rank k and the rest of the spectrum in [0.2, 2).
HermitianMatrix make_singular(Eigen::Index d, Eigen::Index k, Rng& rng) {
  const Matrix u = random_unitary(d, rng);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(d);
  for (Eigen::Index i = k; i < d; ++i) s(i) = rng.uniform(0.2, 2.0);
  return from_spectrum(u, s);
}

// Pair sharing one null space, strictly positive on its complement.
std::pair<HermitianMatrix, HermitianMatrix> make_shared_kernel(Eigen::Index d, Eigen::Index k,
                                                               Rng& rng) {
  const Matrix q = random_isometry(d, d - k, rng);
  const Matrix sa = random_psd(d - k, 0.2, rng).mat();
  const Matrix sb = random_psd(d - k, 0.2, rng).mat();
  return {HermitianMatrix(hermitize(q * sa * q.adjoint())),
          HermitianMatrix(hermitize(q * sb * q.adjoint()))};
}

std::pair<HermitianMatrix, HermitianMatrix> make_invertible(Eigen::Index d, Rng& rng) {
  const double ratio = std::pow(10.0, rng.uniform(-1.0, 1.0));
  HermitianMatrix a(ratio * random_psd(d, 0.1, rng).mat());
  HermitianMatrix b = random_psd(d, 0.1, rng);
  return {a, b};
}

// Both operands singular with rank-1 kernels in general position: redraw until the
// kernels sit at a healthy angle, so neither containment holds and the sum stays
// well-conditioned.
std::pair<HermitianMatrix, HermitianMatrix> make_crossed_kernels(Eigen::Index d, Rng& rng) {
  const Matrix id = Matrix::Identity(d, d);
  for (int attempt = 0; attempt < 64; ++attempt) {
    HermitianMatrix a = make_singular(d, 1, rng);
    HermitianMatrix b = make_singular(d, 1, rng);
    const Matrix ka = kernel_projector(a);
    const Matrix kb = kernel_projector(b);
    if (spectral_norm((id - ka) * kb) >= 0.1 && spectral_norm((id - kb) * ka) >= 0.1)
      return {a, b};
  }
  throw Error("fixture generation: kernels would not separate");
}

Matrix dsum(const Matrix& x, const Matrix& y) {
  Matrix out = Matrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
  out.topLeftCorner(x.rows(), x.cols()) = x;
  out.bottomRightCorner(y.rows(), y.cols()) = y;
  return out;
}

std::pair<HermitianMatrix, HermitianMatrix> compose(
    const std::pair<HermitianMatrix, HermitianMatrix>& p,
    const std::pair<HermitianMatrix, HermitianMatrix>& q) {
  return {HermitianMatrix(dsum(p.first.mat(), q.first.mat())),
          HermitianMatrix(dsum(p.second.mat(), q.second.mat()))};
}

}  // namespace

void validate_fixture_pair(const FixturePair& p, double rank_tol) {
  if (p.a.dim() != p.b.dim())
    throw PreconditionViolation("fixture " + p.id + ": operand dims differ");
  const Derived d = derive_properties(p.a, p.b, rank_tol);
  if (d.commuting != p.commuting)
    throw PreconditionViolation("fixture " + p.id + ": commuting flag mismatch");
  if (d.kernel_rank != p.kernel_rank)
    throw PreconditionViolation("fixture " + p.id + ": kernel_rank mismatch");
  if (d.bs_infinite != p.bs_infinite)
    throw PreconditionViolation("fixture " + p.id + ": bs_infinite flag mismatch");
  if (d.renyi_infinite != p.renyi_infinite)
    throw PreconditionViolation("fixture " + p.id + ": renyi_infinite flag mismatch");
}

std::vector<FixturePair> generate_fixture_set(std::uint64_t seed) {
  std::vector<FixturePair> set;
  set.reserve(60);
  std::uint64_t counter = 0;

  auto push = [&](const std::string& id, const std::string& category,
                  std::pair<HermitianMatrix, HermitianMatrix> ab) {
    const Derived d = derive_properties(ab.first, ab.second, default_rank_tol);
    FixturePair p{id,          category,      std::move(ab.first), std::move(ab.second),
                  d.commuting, d.kernel_rank, d.bs_infinite,       d.renyi_infinite};
    validate_fixture_pair(p);
    set.push_back(std::move(p));
  };
  auto make_id = [](const std::string& category, int n, const std::string& tag,
                    Eigen::Index d) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s_%02d_%s_d%d", category.c_str(), n, tag.c_str(),
                  static_cast<int>(d));
    return std::string(buf);
  };

  int n = 0;
  for (Eigen::Index d : {2, 3, 4, 6}) {
    for (int variant : {0, 1, 2}) {
      Rng rng(derive_seed(seed, counter++));
      const char* tag = variant == 0 ? "generic" : (variant == 1 ? "joint0" : "split0");
      push(make_id("commuting", n++, tag, d), "commuting", make_commuting(d, variant, rng));
    }
  }

  n = 0;
  const std::pair<int, int> kernel_shapes[] = {{3, 1}, {4, 1}, {5, 1}, {6, 1}, {8, 1},
                                               {4, 2}, {5, 2}, {6, 2}, {8, 3}, {6, 4}};
  for (auto [d, k] : kernel_shapes) {
    Rng rng(derive_seed(seed, counter++));
    push(make_id("kernel", n++, "rank" + std::to_string(k), d), "kernel",
         make_shared_kernel(d, k, rng));
  }

  n = 0;
  for (const char* polarity : {"bs", "renyi", "both", "none"}) {
    for (Eigen::Index d : {2, 3, 4, 5, 6}) {
      Rng rng(derive_seed(seed, counter++));
      std::pair<HermitianMatrix, HermitianMatrix> ab = [&] {
        const Eigen::Index k = d >= 4 ? 1 + static_cast<Eigen::Index>(rng.integer(2)) : 1;
        if (std::string(polarity) == "bs")
          return std::pair{random_psd(d, 0.3, rng), make_singular(d, k, rng)};
        if (std::string(polarity) == "renyi")
          return std::pair{make_singular(d, k, rng), random_psd(d, 0.3, rng)};
        if (std::string(polarity) == "both") return make_crossed_kernels(d, rng);
        return make_shared_kernel(d, 1, rng);
      }();
      push(make_id("infinity", n++, polarity, d), "infinity", std::move(ab));
    }
  }

  n = 0;
  for (Eigen::Index d : {2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 8, 8}) {
    Rng rng(derive_seed(seed, counter++));
    push(make_id("invertible", n++, "spd", d), "invertible", make_invertible(d, rng));
  }

  n = 0;
  {
    Rng rng(derive_seed(seed, counter++));
    push(make_id("direct_sum", n++, "inv_kernel", 5), "direct_sum",
         compose(make_invertible(2, rng), make_shared_kernel(3, 1, rng)));
  }
  {
    Rng rng(derive_seed(seed, counter++));
    push(make_id("direct_sum", n++, "commuting", 5), "direct_sum",
         compose(make_commuting(2, 0, rng), make_commuting(3, 0, rng)));
  }
  {
    Rng rng(derive_seed(seed, counter++));
    push(make_id("direct_sum", n++, "bs_inv", 4), "direct_sum",
         compose(std::pair{random_psd(2, 0.3, rng), make_singular(2, 1, rng)},
                 make_invertible(2, rng)));
  }
  {
    // Individually singular blocks ride with invertible blocks, never with a
    // shared-kernel block: crossing an endpoint direction into a genuinely
    // singular pair would slow the epsilon limit from O(eps) to O(eps^{1/4}).
    Rng rng(derive_seed(seed, counter++));
    push(make_id("direct_sum", n++, "renyi_inv", 6), "direct_sum",
         compose(std::pair{make_singular(3, 1, rng), random_psd(3, 0.3, rng)},
                 make_invertible(3, rng)));
  }
  {
    Rng rng(derive_seed(seed, counter++));
    push(make_id("direct_sum", n++, "crossed_inv", 5), "direct_sum",
         compose(make_crossed_kernels(2, rng), make_invertible(3, rng)));
  }
  {
    Rng rng(derive_seed(seed, counter++));
    push(make_id("direct_sum", n++, "inv_inv", 5), "direct_sum",
         compose(make_invertible(3, rng), make_invertible(2, rng)));
  }

  return set;
}

void save_fixture_set(const std::string& dir, std::uint64_t seed,
                      const std::vector<FixturePair>& set) {
  fs::create_directories(dir);
  JsonEmitter e;
  e.begin_object();
  e.key("name");
  e.string_value("pwcalc fixture set");
  e.key("seed");
  e.int_value(static_cast<long long>(seed));
  e.key("count");
  e.int_value(static_cast<long long>(set.size()));
  e.key("pairs");
  e.begin_array();
  for (const auto& p : set) {
    const std::string file_a = p.id + "_a.json";
    const std::string file_b = p.id + "_b.json";
    write_matrix_file((fs::path(dir) / file_a).string(), p.id + "_a", p.a.mat());
    write_matrix_file((fs::path(dir) / file_b).string(), p.id + "_b", p.b.mat());
    e.begin_object();
    e.key("id");
    e.string_value(p.id);
    e.key("category");
    e.string_value(p.category);
    e.key("dim");
    e.int_value(p.a.dim());
    e.key("commuting");
    e.bool_value(p.commuting);
    e.key("kernel_rank");
    e.int_value(p.kernel_rank);
    e.key("bs_infinite");
    e.bool_value(p.bs_infinite);
    e.key("renyi_infinite");
    e.bool_value(p.renyi_infinite);
    e.key("a");
    e.string_value(file_a);
    e.key("b");
    e.string_value(file_b);
    e.end_object();
  }
  e.end_array();
  e.end_object();
  write_text_file((fs::path(dir) / "index.json").string(), e.take());
}

std::vector<FixturePair> load_fixture_set(const std::string& dir) {
  const std::string index_path = (fs::path(dir) / "index.json").string();
  json doc;
  try {
    doc = json::parse(read_text_file(index_path));
  } catch (const json::exception& e) {
    throw ParseError(index_path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array())
    throw ParseError(index_path + ": missing \"pairs\" array");

  std::vector<FixturePair> set;
  for (const json& item : doc["pairs"]) {
    if (!item.is_object()) throw ParseError(index_path + ": pair entries must be objects");
    for (const char* key : {"id", "category", "a", "b"})
      if (!item.contains(key) || !item[key].is_string())
        throw ParseError(index_path + std::string(": pair missing string field \"") + key +
                         "\"");
    for (const char* key : {"commuting", "bs_infinite", "renyi_infinite"})
      if (!item.contains(key) || !item[key].is_boolean())
        throw ParseError(index_path + std::string(": pair missing boolean field \"") + key +
                         "\"");
    if (!item.contains("kernel_rank") || !item["kernel_rank"].is_number_integer())
      throw ParseError(index_path + ": pair missing integer field \"kernel_rank\"");

    const auto file_a = (fs::path(dir) / item["a"].get<std::string>()).string();
    const auto file_b = (fs::path(dir) / item["b"].get<std::string>()).string();
    FixturePair p{item["id"].get<std::string>(),
                  item["category"].get<std::string>(),
                  to_hermitian(read_matrix_file(file_a)),
                  to_hermitian(read_matrix_file(file_b)),
                  item["commuting"].get<bool>(),
                  item["kernel_rank"].get<int>(),
                  item["bs_infinite"].get<bool>(),
                  item["renyi_infinite"].get<bool>()};
    validate_fixture_pair(p);
    set.push_back(std::move(p));
  }
  return set;
}

}  // namespace pwcalc
