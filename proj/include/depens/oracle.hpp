#ifndef DEPENS_ORACLE_HPP
#define DEPENS_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "depens/core.hpp"
#include "depens/dpst.hpp"
#include "depens/mbr.hpp"

namespace depens {
namespace oracle {

constexpr int kMaxEnumerationLength = 8;

// All projective single-root head vectors of length n, by recursive span
// splitting. Guarded: n must be in [1, kMaxEnumerationLength].
std::vector<HeadVector> enumerate_projective_parses(int n);

// Exact MBR optimum by enumeration; ties resolved by enumeration order.
std::pair<HeadVector, std::int64_t> brute_force_uas_aggregate(
    const std::vector<HeadVector>& parses, const std::vector<Rational>& weights);

std::pair<Dpst, std::int64_t> brute_force_f1_aggregate(const HitCountTable& h);

}  // namespace oracle
}  // namespace depens

#endif
