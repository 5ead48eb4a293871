#ifndef PARTPAT_FORMULAS_HPP
#define PARTPAT_FORMULAS_HPP

#include <vector>

#include <gmpxx.h>

#include "partpat/patterns.hpp"
#include "partpat/set_partition.hpp"

namespace partpat {

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

// Falling factorial (k)_i = k(k-1)...(k-i+1); equals 0 when i > k and 1 when
// i = 0.
mpz_class falling_factorial(int k, int i);

// The odd product 1*3*5*...*(2i-1): the number of perfect matchings on 2i
// points.  Not the even double factorial.
mpz_class odd_double_factorial(int i);

// --- pattern builders ---

// 1/2/.../m: every block a singleton.
SetPartition min_pattern(int m);
// 12...m: a single block.
SetPartition max_pattern(int m);
// 12/3/4/.../m for m >= 3.
SetPartition pattern_12_3(int m);
// 1/23...m for m >= 2.
SetPartition coatom_pattern(int m);

// --- closed-form avoider counts ---

// Avoiders of 1/2/.../m: partitions with fewer than m blocks.
mpz_class count_min_pattern(int n, int m);
// Avoiders of 12...m: partitions with all blocks smaller than m.
mpz_class count_max_pattern(int n, int m);
// Avoiders of 12/3/4/.../m (m >= 3), by the explicit double-sum formula over
// the position of the last element of the non-initial part.
mpz_class count_12_3_etc(int n, int m);

// --- structural predicates ---

bool is_matching(const SetPartition& sigma);     // every block has <= 2 elements
bool is_layered(const SetPartition& sigma);      // blocks are consecutive intervals
bool blocks_at_most(const SetPartition& sigma, int k);

// Avoidance of 1/2/.../m: fewer than m blocks.
bool char_min_pattern(const SetPartition& sigma, int m);
// Avoidance of 12...m: every block smaller than m.
bool char_max_pattern(const SetPartition& sigma, int m);
// Avoidance of 12/3/.../m: some prefix [k] is all singletons and the rest of
// the partition restricted past k has fewer than m-1 blocks.
bool char_12_3(const SetPartition& sigma, int m);
// Avoidance of 1/23...m: later blocks all smaller than m-1, and the second
// block starts above the (m-1)st largest element of the first block.
bool char_coatom(const SetPartition& sigma, int m);
// Avoidance of the given pattern over [3] under the subpartition order.
bool char_pi3(const SetPartition& sigma, const SetPartition& pattern);
// Avoidance of the given pattern over [3] under the rgf order.
bool char_r3(const SetPartition& sigma, const SetPartition& pattern);

// --- closed-form profiles for recognized families ---

bool has_closed_form(const SetPartition& pattern, Notion notion);

// Avoider counts for n = 0..horizon computed from the closed form; throws
// std::invalid_argument when the pattern has none under the given notion.
std::vector<mpz_class> closed_form_profile(const SetPartition& pattern, Notion notion,
                                           int horizon);

} // namespace partpat

#endif
