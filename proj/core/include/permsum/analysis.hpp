#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permsum/products.hpp"
#include "permsum/sequence.hpp"

namespace permsum {

// Self-contained 64-bit generator (splitmix64) so seeded campaigns reproduce
// bit-for-bit regardless of standard-library implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (std::uint64_t(-1) / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit && limit != 0);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

// Uniform multiplicity vector with sum = length (stars and bars), re-drawn
// until the max multiplicity is within bound.
Sequence sample_bounded_sequence(const Ring& ring, std::uint32_t length,
                                 std::uint32_t max_mult, SplitMix64& rng);

// Identifier recorded in campaign reports for reproducibility.
inline constexpr const char* kSamplingAlgorithm =
    "composition-rejection/splitmix64/v1";

struct CanonicalTriple {
  Residue x;   // canonical third element, smallest over all 6 normalizations
  Affine map;  // sends the triple to {0, 1, x}
};

// Normalization of a square-free triple to {0, 1, x}; prime modulus.
CanonicalTriple canonicalize_triple(const Sequence& u);

enum class EqualityClass { BOTH_AP, ROOT_PAIR };

struct EqualityCase {
  Residue x;
  Residue y;
  EqualityClass cls;
};

struct LemmaReport {
  std::uint32_t p = 0;
  std::uint64_t pairs_checked = 0;
  std::uint32_t min_size = 0;
  std::vector<EqualityCase> equality_cases;  // populated for p > 7 only
};

// Exhaustive check of the triple-product floor over all normalized pairs
// (x, y), x, y outside {0, 1}: |U*V| >= 4, and for p > 7 every size-4 case is
// either two arithmetic progressions or a pair of roots of z^2 - z + 1, with
// U*V itself never an AP. Violations throw LemmaViolationError.
LemmaReport check_lemma(const Ring& ring);

enum class FamilyProperty { ZERO_NOT_IN_PRODUCT, PRODUCT_NOT_FULL };

struct FamilyInstance {
  int family;
  Ring ring;
  Sequence s1;
  Sequence s2;
  FamilyProperty property;
  std::uint32_t x = 0;           // family 3 repetition parameter
  std::uint32_t size_bound = 0;  // family 3 cardinality bound 3n-5x+1
};

// The three extremal families:
//   1: S1 = 0^(n-2) 1 (n-1), S2 = 0 1 2 ... (n-1)      (odd n >= 3)
//   2: S1 = S2 = 0^((n-1)/2) 1^((n-1)/2) ((n+1)/2)     (n = 3 mod 4)
//   3: S1 = S2 = 0^x 1^x 2^(n-2x), x = ceil((2n+2)/5)  (n > 7)
FamilyInstance make_family(int family, std::uint32_t n);

// Confirms the instance's claimed property with the exact oracle. Family 3
// additionally checks containment in the integer interval
// [n-2x, 4(n-2x)+x] reduced mod n.
bool verify_family(const FamilyInstance& inst,
                   std::uint64_t budget_words = kDefaultOracleBudget);

struct CampaignFailure {
  std::uint64_t instance;
  std::string s1;
  std::string s2;
  Residue target;
  std::string reason;
};

struct CampaignMode {
  bool exhaustive = false;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

struct CampaignReport {
  std::uint32_t p = 0;
  bool exhaustive = false;
  std::uint64_t samples = 0;  // sampled mode only
  std::uint64_t seed = 0;
  std::string algorithm;
  std::uint64_t instances_checked = 0;
  std::uint64_t targets_checked = 0;
  std::vector<CampaignFailure> failures;
};

// Witness-construction verification campaign: every hypothesis-satisfying
// pair must solve for every target. Exhaustive mode enumerates all pairs up
// to swapping S1/S2 and is budgeted for p in {5, 7}; sampled mode draws
// seeded pairs. Instance work shards across `jobs` stateless workers with
// per-instance seeds, so reports do not depend on the worker count.
CampaignReport verify_theorem(const Ring& ring, const CampaignMode& mode);

}  // namespace permsum
