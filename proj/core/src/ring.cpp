#include "permsum/ring.hpp"

#include <numeric>
#include <string>

namespace permsum {

namespace {

bool trial_division_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Ring make_ring(std::uint32_t n) {
  if (n < 2) {
    throw UsageError("modulus must be at least 2, got " + std::to_string(n));
  }
  if (n > 0x7FFFFFFFu) {
    throw UsageError("modulus must be below 2^31, got " + std::to_string(n));
  }
  return Ring{n, trial_division_prime(n)};
}

bool Ring::is_unit(Residue a) const {
  assert(a < n);
  return std::gcd(std::uint64_t(a), std::uint64_t(n)) == 1;
}

Residue Ring::inv(Residue a) const {
  assert(a < n);
  // Extended Euclid on (a, n).
  std::int64_t r0 = a, r1 = n, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) {
    throw UsageError(std::to_string(a) + " is not a unit mod " + std::to_string(n));
  }
  return reduce(s0);
}

Residue affine_apply(const Ring& ring, const Affine& f, Residue z) {
  assert(z < ring.n);
  if (!ring.is_unit(f.alpha)) {
    throw UsageError("affine map requires a unit slope");
  }
  return ring.add(ring.mul(f.alpha, z), f.beta);
}

Affine affine_compose(const Ring& ring, const Affine& f, const Affine& g) {
  return Affine{ring.mul(g.alpha, f.alpha), ring.add(ring.mul(g.alpha, f.beta), g.beta)};
}

Affine affine_inverse(const Ring& ring, const Affine& f) {
  Residue ai = ring.inv(f.alpha);
  return Affine{ai, ring.neg(ring.mul(ai, f.beta))};
}

std::vector<Residue> roots_z2_minus_z_plus_1(const Ring& ring) {
  std::vector<Residue> roots;
  for (Residue z = 0; z < ring.n; ++z) {
    // z^2 - z + 1 over the integers, reduced once; fits in 64 bits for n < 2^31.
    std::int64_t v = std::int64_t(z) * z - z + 1;
    if (ring.reduce(v) == 0) roots.push_back(z);
  }
  return roots;
}

}  // namespace permsum
