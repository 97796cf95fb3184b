#ifndef GSTAR_SYMREP_HPP
#define GSTAR_SYMREP_HPP

#include "gstar/rational.hpp"

#include <string>
#include <vector>

namespace gstar {

// Weakly decreasing positive parts; the empty vector is the partition of 0.
using Partition = std::vector<int>;
using CycleType = Partition;

// One partition per multidegree block (2t of them), empty blocks allowed.
using Multipartition = std::vector<Partition>;
using MultiCycleType = std::vector<CycleType>;

int partition_weight(const Partition& p);
bool is_partition(const Partition& p);

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions(int n);

// n! / product of hook lengths.
long long hook_degree(const Partition& la);

// Irreducible S_n character value via the Murnaghan-Nakayama rule. Memoized;
// the cache is thread-safe. Throws on weight mismatch.
long long mn_character(const Partition& la, const CycleType& mu);

// n! / z_mu with z_mu = prod k^{m_k} m_k!.
BigInt class_size(const CycleType& mu);

// n! / (n_1! ... n_k!). Throws unless the parts sum to n.
BigInt multinomial(int n, const std::vector<int>& parts);

long long multi_hook_degree(const Multipartition& mla);
long long multi_character(const Multipartition& mla, const MultiCycleType& mu);

struct MultiClass {
    MultiCycleType type;
    BigInt size;
};

// Conjugacy classes of S_{n_1} x ... x S_{n_k}, blockwise cartesian product
// in deterministic order, with class sizes.
std::vector<MultiClass> multi_classes(const std::vector<int>& counts);

std::string partition_str(const Partition& p); // "3+1+1", "0" for empty

} // namespace gstar

#endif
