#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "permsum/error.hpp"

namespace permsum {

using Residue = std::uint32_t;

// Ambient ring Z/nZ. All residues handled by the library live in [0, n).
// Values are immutable after construction; every operation here is pure.
// Intermediate products are widened to 64 bits, which is exact for n < 2^31.
struct Ring {
  std::uint32_t n = 0;
  bool prime = false;

  bool operator==(const Ring&) const = default;

  Residue add(Residue a, Residue b) const {
    assert(a < n && b < n);
    std::uint32_t s = a + b;
    return s >= n ? s - n : s;
  }
  Residue sub(Residue a, Residue b) const {
    assert(a < n && b < n);
    return a >= b ? a - b : a + n - b;
  }
  Residue neg(Residue a) const {
    assert(a < n);
    return a == 0 ? 0 : n - a;
  }
  Residue mul(Residue a, Residue b) const {
    assert(a < n && b < n);
    return static_cast<Residue>(std::uint64_t(a) * b % n);
  }
  Residue reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(n);
    if (r < 0) r += n;
    return static_cast<Residue>(r);
  }
  bool is_unit(Residue a) const;
  // Multiplicative inverse of a unit; UsageError if gcd(a, n) != 1.
  Residue inv(Residue a) const;
};

Ring make_ring(std::uint32_t n);

// z -> alpha*z + beta with alpha a unit of Z/nZ.
struct Affine {
  Residue alpha = 1;
  Residue beta = 0;

  bool operator==(const Affine&) const = default;
};

Residue affine_apply(const Ring& ring, const Affine& f, Residue z);

// Applying f then g, as a single map.
Affine affine_compose(const Ring& ring, const Affine& f, const Affine& g);

// Inverse map; alpha must be a unit.
Affine affine_inverse(const Ring& ring, const Affine& f);

// All z in [0, n) with z^2 - z + 1 = 0, by exhaustive scan.
std::vector<Residue> roots_z2_minus_z_plus_1(const Ring& ring);

}  // namespace permsum
