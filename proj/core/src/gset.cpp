#include "permsum/gset.hpp"

#include <algorithm>
#include <bit>

namespace permsum {

GSet::GSet(const Ring& ring, std::initializer_list<Residue> members) : GSet(ring) {
  for (Residue g : members) insert(g);
}

GSet::GSet(const Ring& ring, const std::vector<Residue>& members) : GSet(ring) {
  for (Residue g : members) insert(g);
}

std::uint32_t GSet::size() const {
  std::uint32_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<Residue> GSet::members() const {
  std::vector<Residue> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      unsigned b = std::countr_zero(w);
      out.push_back(static_cast<Residue>(i * 64 + b));
      w &= w - 1;
    }
  }
  return out;
}

namespace detail {

void or_rotated_words(std::uint64_t* dst, const std::uint64_t* src,
                      std::uint32_t n, std::uint32_t shift) {
  const std::size_t nwords = (n + 63) / 64;

  if (shift == 0) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] |= src[i];
    return;
  }

  // Source bits [0, n-shift) land on [shift, n): a left shift by `shift`.
  {
    const std::uint32_t ws = shift >> 6, bs = shift & 63;
    for (std::size_t i = nwords; i-- > 0;) {
      if (i < ws) break;
      std::uint64_t v = src[i - ws] << bs;
      if (bs && i > ws) v |= src[i - ws - 1] >> (64 - bs);
      dst[i] |= v;
    }
  }
  // Source bits [n-shift, n) wrap onto [0, shift): a right shift by n-shift.
  {
    const std::uint32_t r = n - shift;
    const std::uint32_t ws = r >> 6, bs = r & 63;
    for (std::size_t i = 0; i + ws < nwords; ++i) {
      std::uint64_t v = src[i + ws] >> bs;
      if (bs && i + ws + 1 < nwords) v |= src[i + ws + 1] << (64 - bs);
      dst[i] |= v;
    }
  }
  // Clear bits at positions >= n.
  const std::uint32_t tail = n & 63;
  if (tail) dst[nwords - 1] &= (std::uint64_t{1} << tail) - 1;
}

}  // namespace detail

void GSet::or_rotated(const GSet& other, Residue shift) {
  assert(ring_ == other.ring_);
  assert(shift < ring_.n);
  detail::or_rotated_words(words_.data(), other.words_.data(), ring_.n, shift);
}

GSet sumset(const GSet& a, const GSet& b) {
  if (a.ring() != b.ring()) {
    throw UsageError("sumset requires a common modulus");
  }
  GSet out(a.ring());
  if (a.empty() || b.empty()) return out;
  for (Residue x : a.members()) out.or_rotated(b, x);
  return out;
}

CdBound cd_bound_holds(const GSet& a, const GSet& b) {
  if (a.ring() != b.ring()) {
    throw UsageError("Cauchy-Davenport check requires a common modulus");
  }
  if (!a.ring().prime) {
    throw UsageError("Cauchy-Davenport check requires a prime modulus");
  }
  if (a.empty() || b.empty()) {
    throw UsageError("Cauchy-Davenport check requires nonempty sets");
  }
  std::uint32_t lhs = sumset(a, b).size();
  std::uint32_t rhs = std::min(a.ring().n, a.size() + b.size() - 1);
  return CdBound{lhs, rhs, lhs >= rhs};
}

namespace {

// Smallest anchor f in A whose progression f, f+d, ..., f+(m-1)d covers A
// exactly; returns false when no anchor works.
bool find_anchor(const GSet& a, Residue d, Residue& anchor) {
  const Ring& ring = a.ring();
  const std::uint32_t m = a.size();
  std::vector<bool> seen(ring.n, false);
  for (Residue f : a.members()) {
    Residue z = f;
    bool ok = true;
    std::vector<Residue> visited;
    visited.reserve(m);
    for (std::uint32_t k = 0; k < m; ++k) {
      if (!a.contains(z) || seen[z]) {
        ok = false;
        break;
      }
      seen[z] = true;
      visited.push_back(z);
      z = ring.add(z, d);
    }
    for (Residue v : visited) seen[v] = false;
    if (ok) {
      anchor = f;
      return true;
    }
  }
  return false;
}

}  // namespace

APStructure ap_structure(const GSet& a) {
  if (a.empty()) {
    throw UsageError("ap_structure requires a nonempty set");
  }
  const Ring& ring = a.ring();
  const std::uint32_t m = a.size();
  APStructure out;

  std::vector<Residue> mem = a.members();
  if (m == 1) {
    // A singleton is the length-1 progression from its element for every d.
    out.is_ap = true;
    out.differences.resize(ring.n);
    out.first_terms.assign(ring.n, mem[0]);
    for (Residue d = 0; d < ring.n; ++d) out.differences[d] = d;
    return out;
  }

  // Candidate differences: +-(s2 - s1) for a fixed s1 against every other
  // member. Any progression through s1 realizes one of these.
  std::vector<Residue> cands;
  for (std::size_t i = 1; i < mem.size(); ++i) {
    cands.push_back(ring.sub(mem[i], mem[0]));
    cands.push_back(ring.sub(mem[0], mem[i]));
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  for (Residue d : cands) {
    if (d == 0) continue;
    Residue anchor;
    if (find_anchor(a, d, anchor)) {
      out.differences.push_back(d);
      out.first_terms.push_back(anchor);
    }
  }
  out.is_ap = !out.differences.empty();
  return out;
}

bool is_ap_with_difference(const GSet& a, Residue d) {
  if (a.empty()) return false;
  if (a.size() == 1) return true;
  if (d == 0) return false;
  Residue anchor;
  return find_anchor(a, d, anchor);
}

VosperResult vosper_classify(const GSet& a, const GSet& b) {
  if (a.ring() != b.ring()) {
    throw UsageError("vosper_classify requires a common modulus");
  }
  if (!a.ring().prime) {
    throw UsageError("vosper_classify requires a prime modulus");
  }
  if (a.size() < 2 || b.size() < 2) {
    throw UsageError("vosper_classify requires |A|, |B| >= 2");
  }
  const std::uint32_t p = a.ring().n;
  GSet s = sumset(a, b);
  const std::uint32_t ss = s.size();
  const std::uint32_t crit = a.size() + b.size() - 1;

  if (ss == p || ss > crit) return VosperResult{VosperClass::NOT_CRITICAL};
  if (ss < crit) {
    throw ViolationError("Cauchy-Davenport bound violated: |A+B| = " +
                         std::to_string(ss) + " < " + std::to_string(crit));
  }

  if (crit <= p - 2) {
    APStructure pa = ap_structure(a);
    APStructure pb = ap_structure(b);
    for (Residue d : pa.differences) {
      if (std::find(pb.differences.begin(), pb.differences.end(), d) !=
          pb.differences.end()) {
        return VosperResult{VosperClass::CRITICAL_AP, d, 0};
      }
    }
    throw ViolationError("critical pair without a common AP difference");
  }

  // crit == p - 1: A = x - complement(B) for some x.
  GSet bc = complement(b);
  Residue c0 = bc.members().front();
  for (Residue a0 : a.members()) {
    Residue x = a.ring().add(a0, c0);
    GSet image = affine_image(bc, Affine{p - 1, x});
    if (image == a) return VosperResult{VosperClass::CRITICAL_COMPLEMENT, 0, x};
  }
  throw ViolationError("critical pair at p-1 without a complement representation");
}

GSet complement(const GSet& a) {
  GSet out(a.ring());
  for (Residue g = 0; g < a.ring().n; ++g) {
    if (!a.contains(g)) out.insert(g);
  }
  return out;
}

GSet affine_image(const GSet& a, const Affine& f) {
  if (!a.ring().is_unit(f.alpha)) {
    throw UsageError("affine_image requires a unit slope");
  }
  GSet out(a.ring());
  for (Residue g : a.members()) out.insert(affine_apply(a.ring(), f, g));
  return out;
}

GSet parse_gset(const Ring& ring, std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw UsageError("set text must look like {r1,r2,...}");
  }
  GSet out(ring);
  std::string_view body = text.substr(1, text.size() - 2);
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::uint64_t v = 0;
    std::size_t start = pos;
    while (pos < body.size() && body[pos] >= '0' && body[pos] <= '9') {
      v = v * 10 + (body[pos] - '0');
      if (v >= ring.n) throw UsageError("set member out of range");
      ++pos;
    }
    if (pos == start) throw UsageError("expected a residue in set text");
    out.insert(static_cast<Residue>(v));
    if (pos == body.size()) break;
    if (body[pos] != ',') throw UsageError("set members must be comma separated");
    ++pos;
  }
  return out;
}

std::string format_gset(const GSet& a) {
  std::string out = "{";
  bool first = true;
  for (Residue g : a.members()) {
    if (!first) out += ',';
    out += std::to_string(g);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace permsum
