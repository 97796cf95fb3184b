#include "gstar/symrep.hpp"

#include "gstar/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace gstar {

int partition_weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

std::vector<Partition> partitions(int n) {
    if (n < 0) throw InvalidArgument("partitions: negative weight");
    std::vector<Partition> out;
    Partition cur;
    // Recursive descent emits reverse-lexicographic order directly.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

long long hook_degree(const Partition& la) {
    if (!is_partition(la)) throw InvalidArgument("hook_degree: not a partition");
    int n = partition_weight(la);
    if (n == 0) return 1;
    std::vector<int> conj(la[0], 0);
    for (int part : la)
        for (int c = 0; c < part; ++c) ++conj[c];
    BigInt num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    BigInt den = 1;
    for (std::size_t r = 0; r < la.size(); ++r)
        for (int c = 0; c < la[r]; ++c)
            den *= (la[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
    BigInt d = num / den;
    return d.get_si();
}

namespace {

// Beta-set form of the MN recursion: removing a border strip of length l
// means replacing a beta number b by b-l; the height is the number of beta
// numbers passed over.
long long mn_rec(const Partition& la, const CycleType& mu, std::size_t mu_pos,
                 std::map<std::pair<Partition, CycleType>, long long>& memo,
                 std::mutex& memo_mutex) {
    if (mu_pos == mu.size()) return 1; // both empty by weight bookkeeping
    CycleType mu_rest(mu.begin() + static_cast<long>(mu_pos), mu.end());
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({la, mu_rest});
        if (it != memo.end()) return it->second;
    }

    int l = mu[mu_pos];
    std::vector<long long> beta;
    int k = static_cast<int>(la.size());
    for (int i = 0; i < k; ++i) beta.push_back(la[i] + (k - 1 - i));

    long long total = 0;
    for (int i = 0; i < k; ++i) {
        long long target = beta[i] - l;
        if (target < 0) continue;
        bool occupied = false;
        int passed = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++passed;
        }
        if (occupied) continue;
        std::vector<long long> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        Partition nla;
        int nk = static_cast<int>(nb.size());
        for (int j = 0; j < nk; ++j) {
            int part = static_cast<int>(nb[j] - (nk - 1 - j));
            if (part > 0) nla.push_back(part);
        }
        long long sub = mn_rec(nla, mu, mu_pos + 1, memo, memo_mutex);
        total += (passed % 2 == 0) ? sub : -sub;
    }

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::make_pair(la, mu_rest), total);
    return total;
}

} // namespace

long long mn_character(const Partition& la, const CycleType& mu) {
    if (!is_partition(la) || !is_partition(mu))
        throw InvalidArgument("mn_character: malformed partition");
    if (partition_weight(la) != partition_weight(mu))
        throw InvalidArgument("mn_character: weight mismatch");
    static std::map<std::pair<Partition, CycleType>, long long> memo;
    static std::mutex memo_mutex;
    return mn_rec(la, mu, 0, memo, memo_mutex);
}

BigInt class_size(const CycleType& mu) {
    if (!is_partition(mu)) throw InvalidArgument("class_size: malformed cycle type");
    int n = partition_weight(mu);
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    std::map<int, int> mult;
    for (int part : mu) ++mult[part];
    BigInt z = 1;
    for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return fact / z;
}

BigInt multinomial(int n, const std::vector<int>& parts) {
    int sum = std::accumulate(parts.begin(), parts.end(), 0);
    if (sum != n) throw InvalidArgument("multinomial: parts do not sum to n");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    for (int p : parts)
        for (int i = 2; i <= p; ++i) out /= i;
    return out;
}

long long multi_hook_degree(const Multipartition& mla) {
    long long d = 1;
    for (const Partition& la : mla) d *= hook_degree(la);
    return d;
}

long long multi_character(const Multipartition& mla, const MultiCycleType& mu) {
    if (mla.size() != mu.size()) throw InvalidArgument("multi_character: block count mismatch");
    long long chi = 1;
    for (std::size_t b = 0; b < mla.size(); ++b) {
        chi *= mn_character(mla[b], mu[b]);
        if (chi == 0) return 0;
    }
    return chi;
}

std::vector<MultiClass> multi_classes(const std::vector<int>& counts) {
    std::vector<std::vector<CycleType>> per_block;
    for (int n : counts) per_block.push_back(partitions(n));

    std::vector<MultiClass> out;
    std::vector<std::size_t> idx(counts.size(), 0);
    while (true) {
        MultiClass mc;
        mc.size = 1;
        for (std::size_t b = 0; b < counts.size(); ++b) {
            mc.type.push_back(per_block[b][idx[b]]);
            mc.size *= class_size(per_block[b][idx[b]]);
        }
        out.push_back(std::move(mc));
        int b = static_cast<int>(counts.size()) - 1;
        while (b >= 0) {
            if (++idx[b] < per_block[b].size()) break;
            idx[b] = 0;
            --b;
        }
        if (b < 0) break;
    }
    return out;
}

std::string partition_str(const Partition& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += "+";
        out += std::to_string(p[i]);
    }
    return out;
}

} // namespace gstar
