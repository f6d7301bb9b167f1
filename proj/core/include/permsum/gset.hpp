#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "permsum/ring.hpp"

namespace permsum {

namespace detail {

// dst |= src rotated left by shift, over an n-bit vector stored in
// ceil(n/64) words; bits at positions >= n stay clear.
void or_rotated_words(std::uint64_t* dst, const std::uint64_t* src,
                      std::uint32_t n, std::uint32_t shift);

}  // namespace detail

// Dense subset of Z/nZ with one membership bit per residue.
class GSet {
 public:
  explicit GSet(const Ring& ring)
      : ring_(ring), words_((ring.n + 63) / 64, 0) {}
  GSet(const Ring& ring, std::initializer_list<Residue> members);
  GSet(const Ring& ring, const std::vector<Residue>& members);

  const Ring& ring() const { return ring_; }
  std::uint32_t n() const { return ring_.n; }

  bool contains(Residue g) const {
    assert(g < ring_.n);
    return (words_[g >> 6] >> (g & 63)) & 1;
  }
  void insert(Residue g) {
    assert(g < ring_.n);
    words_[g >> 6] |= std::uint64_t{1} << (g & 63);
  }
  void erase(Residue g) {
    assert(g < ring_.n);
    words_[g >> 6] &= ~(std::uint64_t{1} << (g & 63));
  }

  std::uint32_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<Residue> members() const;

  // this |= other rotated left by shift (mod n).
  void or_rotated(const GSet& other, Residue shift);

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const GSet&) const = default;

 private:
  Ring ring_;
  std::vector<std::uint64_t> words_;
};

// A + B = {a + b}. Kernel: for each a in A, OR in B rotated by a.
GSet sumset(const GSet& a, const GSet& b);

struct CdBound {
  std::uint32_t lhs;   // |A+B|
  std::uint32_t rhs;   // min(p, |A|+|B|-1)
  bool holds;          // lhs >= rhs

  bool operator==(const CdBound&) const = default;
};

// Cauchy-Davenport check; requires a prime modulus and nonempty inputs.
CdBound cd_bound_holds(const GSet& a, const GSet& b);

// Arithmetic-progression classification. Each entry of `differences` is a
// difference d for which the whole set is {first, first+d, ..., first+(m-1)d};
// `first_terms[i]` is the smallest valid anchor for `differences[i]`.
// A singleton is an AP for every d (including 0); a 2-element set for the two
// differences +-(b-a).
struct APStructure {
  bool is_ap = false;
  std::vector<Residue> differences;   // sorted ascending
  std::vector<Residue> first_terms;   // parallel to differences
};

APStructure ap_structure(const GSet& a);

// Is `a` an AP with the given difference (under the structure above)?
bool is_ap_with_difference(const GSet& a, Residue d);

enum class VosperClass {
  NOT_CRITICAL,          // |A+B| > |A|+|B|-1, or the sumset is everything
  CRITICAL_AP,           // |A+B| = |A|+|B|-1 <= p-2: A, B APs, common difference
  CRITICAL_COMPLEMENT,   // |A+B| = |A|+|B|-1 = p-1: A = x - complement(B)
};

struct VosperResult {
  VosperClass kind;
  Residue common_difference = 0;  // CRITICAL_AP
  Residue x = 0;                  // CRITICAL_COMPLEMENT

  bool operator==(const VosperResult&) const = default;
};

// Requires a prime modulus and |A|, |B| >= 2. The structural claims of the
// critical cases are confirmed on the spot; a failed confirmation throws
// ViolationError since it would contradict Vosper's theorem.
VosperResult vosper_classify(const GSet& a, const GSet& b);

GSet complement(const GSet& a);
GSet affine_image(const GSet& a, const Affine& f);

// Text form "{r1,r2,...}", increasing residues, no whitespace.
GSet parse_gset(const Ring& ring, std::string_view text);
std::string format_gset(const GSet& a);

}  // namespace permsum
