// genfixtures_main.cpp — one-shot regeneration of the committed fixture corpus:
// the operand pairs with their manifest, plus the isometry documents used by the
// transformer-mode golden runs. Deterministic for a given seed.
#include <cstdio>
#include <filesystem>
#include <string>

#include "CLI11.hpp"
#include "pwcalc/errors.hpp"
#include "pwcalc/fixtures.hpp"
#include "pwcalc/matrix_io.hpp"
#include "pwcalc/random.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Regenerate the pwcalc fixture corpus"};
  std::string dir = "fixtures";
  std::uint64_t seed = 20260819ull;
  app.add_option("--dir", dir, "output directory");
  app.add_option("--seed", seed, "master seed");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    const auto set = pwcalc::generate_fixture_set(seed);
    pwcalc::save_fixture_set(dir, seed, set);

    // Isometries live in a separate seed range so the pair corpus is unaffected.
    const struct {
      int d, k;
    } shapes[] = {{4, 2}, {3, 1}, {5, 3}};
    int i = 0;
    for (const auto& s : shapes) {
      pwcalc::Rng rng(pwcalc::derive_seed(seed, 1000 + static_cast<std::uint64_t>(i)));
      const pwcalc::Matrix v = pwcalc::random_isometry(s.d, s.k, rng);
      char name[64];
      std::snprintf(name, sizeof(name), "isometry_%02d_d%d_k%d", i, s.d, s.k);
      pwcalc::write_matrix_file((std::filesystem::path(dir) / (std::string(name) + ".json")).string(),
                                name, v);
      ++i;
    }
    std::fprintf(stderr, "genfixtures: wrote %zu pairs and %d isometries to %s (seed %llu)\n",
                 set.size(), i, dir.c_str(), static_cast<unsigned long long>(seed));
  } catch (const pwcalc::ParseError& e) {
    std::fprintf(stderr, "genfixtures: error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "genfixtures: error: %s\n", e.what());
    return 2;
  }
  return 0;
}
