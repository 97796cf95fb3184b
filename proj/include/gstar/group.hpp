#ifndef GSTAR_GROUP_HPP
#define GSTAR_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

namespace gstar {

// Exponent vector, componentwise modulo the group's cyclic orders. Always
// kept in canonical (reduced) form.
using GroupElement = std::vector<int>;

// Finite abelian group presented as C_{m1} x ... x C_{mr}. The element
// enumeration (identity first, lexicographic on exponent vectors) is a
// frozen contract: multidegree block indexing depends on it.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);
    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup({1}); }

    // "2,2" -> C2 x C2. nullopt on malformed text or order < 1.
    static std::optional<FiniteAbelianGroup> parse(const std::string& text);

    const std::vector<int>& cyclic_orders() const { return orders_; }
    int factor_count() const { return static_cast<int>(orders_.size()); }
    long long order() const { return order_; }

    GroupElement identity() const { return GroupElement(orders_.size(), 0); }
    bool is_identity(const GroupElement& a) const;
    bool contains(const GroupElement& a) const;

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, long long k) const;
    int element_order(const GroupElement& a) const;

    std::vector<GroupElement> all_elements() const;
    // Position of a in all_elements(), i.e. mixed-radix rank.
    int element_index(const GroupElement& a) const;

    std::string format_element(const GroupElement& a) const; // "(1,0)"
    std::optional<GroupElement> parse_element(const std::string& text) const;

    bool operator==(const FiniteAbelianGroup& other) const { return orders_ == other.orders_; }

private:
    std::vector<int> orders_;
    long long order_ = 1;
};

} // namespace gstar

#endif
