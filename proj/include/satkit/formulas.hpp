#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "satkit/halfint.hpp"
#include "satkit/pattern.hpp"

namespace satkit {

struct SatFormulaAnswer {
    enum class Kind { Exact, Bounds, AsymptoticOnly };
    Kind kind = Kind::Bounds;
    std::int64_t value = -1;            // Exact only
    std::optional<std::int64_t> lower;  // Bounds; absent when nothing is certified
    std::optional<std::int64_t> upper;  // Bounds
    HalfInt leading{};                  // AsymptoticOnly: leading term of the bound
    std::string validity;               // range the answer is certified for
    std::string source;
};

// Closed-form dispatch over the catalogued families:
//   pattern larger than the host  -> C(n,2)        (K_n is the one saturated graph)
//   complete graphs K_r (n >= r)  -> (r-2)n - C(r-1,2)
//   K_{2,2} (n >= 5)              -> floor((3n-5)/2)
//   K_{2,3} (n >= 5)              -> 2n-3
//   K_{3,3}                       -> 2n for 6 <= n <= 8, 3n-9 for n >= 9
// Anything else, or an n outside a formula's certified range, degrades to
// Bounds via bfp_upper rather than extrapolating.  Throws for single-part
// patterns that fit in the host (no saturated graph exists) and out-of-range n.
SatFormulaAnswer known_sat(int n, const MultipartitePattern& p);

// Exact integer evaluation of the general multipartite upper bound
//   C(p,2) + p(n-p) + ceil((s_r-1)(n-p)/2 - s_r^2/8),  p = s_1+...+s_{r-1} - 1,
// with the ceiling taken over exact rationals.  Requires r >= 2 and n > p.
std::int64_t bfp_upper(int n, const MultipartitePattern& p);

// Leading term (p + (s_r-1)/2) * n of the same bound, exact as a half
// integer.  The sublinear slack in the matching lower bound is not
// computable, so the answer is tagged AsymptoticOnly and is never a
// certified bound for any particular n.
SatFormulaAnswer bfp_leading(int n, const MultipartitePattern& p);

// One row per n in [from, to]: aligned text, or CSV with header
// "n,pattern,kind,value,lower,upper".
std::string sat_table(const MultipartitePattern& p, int from, int to, bool csv);

}  // namespace satkit
