// fixtures.hpp — The committed test corpus: operand pairs with known structure.
//
// Five categories stress the calculus from different directions: "commuting" pairs
// (closed-form reference via the product spectrum), "kernel" pairs (shared null
// space, finite values on a proper subspace), "infinity" pairs (every polarity of
// the kernel-containment criteria), "invertible" pairs (all routes apply), and
// "direct_sum" composites (block additivity). Stored flags come from kernel
// containment and the commutator gate, never from the calculus under test.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pwcalc/hermitian.hpp"

namespace pwcalc {

struct FixturePair {
  std::string id;
  std::string category;  // commuting | kernel | infinity | invertible | direct_sum
  HermitianMatrix a;
  HermitianMatrix b;
  bool commuting;       // ||AB - BA||₂ within the commutator gate
  int kernel_rank;      // dim Ker(A+B)
  bool bs_infinite;     // Ker B not contained in Ker A
  bool renyi_infinite;  // Ker A not contained in Ker B
};

// Deterministic 60-pair corpus from a master seed: 12 commuting, 10 kernel,
// 20 infinity (5 per polarity class), 12 invertible, 6 direct_sum. Every pair is
// re-validated before being returned.
std::vector<FixturePair> generate_fixture_set(std::uint64_t seed);

// Re-derives commuting / kernel_rank / bs_infinite / renyi_infinite from the
// operands alone and throws PreconditionViolation on any mismatch with the stored
// values. The construction keeps kernel angles and spectral gaps far from the
// decision thresholds, so the derivation is unambiguous.
void validate_fixture_pair(const FixturePair& p, double rank_tol = default_rank_tol);

// Directory layout: index.json manifest plus one matrix document per operand
// (<id>_a.json / <id>_b.json). Loading validates every pair.
void save_fixture_set(const std::string& dir, std::uint64_t seed,
                      const std::vector<FixturePair>& set);
std::vector<FixturePair> load_fixture_set(const std::string& dir);

}  // namespace pwcalc
