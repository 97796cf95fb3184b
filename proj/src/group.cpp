#include "gstar/group.hpp"

#include "gstar/errors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace gstar {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) orders_.push_back(1);
    for (int m : orders_) {
        if (m < 1) throw InvalidArgument("cyclic order must be >= 1");
        order_ *= m;
    }
}

std::optional<FiniteAbelianGroup> FiniteAbelianGroup::parse(const std::string& text) {
    std::vector<int> orders;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            int m = std::stoi(part, &used);
            if (used != part.size() || m < 1) return std::nullopt;
            orders.push_back(m);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (orders.empty()) return std::nullopt;
    return FiniteAbelianGroup(orders);
}

bool FiniteAbelianGroup::is_identity(const GroupElement& a) const {
    for (int e : a)
        if (e != 0) return false;
    return a.size() == orders_.size();
}

bool FiniteAbelianGroup::contains(const GroupElement& a) const {
    if (a.size() != orders_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= orders_[i]) return false;
    return true;
}

GroupElement FiniteAbelianGroup::multiply(const GroupElement& a, const GroupElement& b) const {
    if (a.size() != orders_.size() || b.size() != orders_.size())
        throw InvalidArgument("group element length mismatch");
    GroupElement c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
    return c;
}

GroupElement FiniteAbelianGroup::inverse(const GroupElement& a) const {
    if (a.size() != orders_.size()) throw InvalidArgument("group element length mismatch");
    GroupElement c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = (orders_[i] - a[i]) % orders_[i];
    return c;
}

GroupElement FiniteAbelianGroup::power(const GroupElement& a, long long k) const {
    if (a.size() != orders_.size()) throw InvalidArgument("group element length mismatch");
    GroupElement c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        long long e = (static_cast<long long>(a[i]) * k) % orders_[i];
        if (e < 0) e += orders_[i];
        c[i] = static_cast<int>(e);
    }
    return c;
}

int FiniteAbelianGroup::element_order(const GroupElement& a) const {
    if (a.size() != orders_.size()) throw InvalidArgument("group element length mismatch");
    long long ord = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        int g = std::gcd(a[i], orders_[i]);
        ord = std::lcm(ord, static_cast<long long>(orders_[i] / g));
    }
    return static_cast<int>(ord);
}

std::vector<GroupElement> FiniteAbelianGroup::all_elements() const {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    GroupElement cur(orders_.size(), 0);
    while (true) {
        out.push_back(cur);
        int i = static_cast<int>(orders_.size()) - 1;
        while (i >= 0) {
            if (++cur[i] < orders_[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

int FiniteAbelianGroup::element_index(const GroupElement& a) const {
    if (!contains(a)) throw InvalidArgument("element not in group");
    long long idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + a[i];
    return static_cast<int>(idx);
}

std::string FiniteAbelianGroup::format_element(const GroupElement& a) const {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a[i]);
    }
    out += ")";
    return out;
}

std::optional<GroupElement> FiniteAbelianGroup::parse_element(const std::string& text) const {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::vector<int> exps;
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            // allow surrounding spaces
            std::string trimmed;
            for (char ch : part)
                if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
            int e = std::stoi(trimmed, &used);
            if (used != trimmed.size()) return std::nullopt;
            exps.push_back(e);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (exps.size() != orders_.size()) return std::nullopt;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        exps[i] %= orders_[i];
        if (exps[i] < 0) exps[i] += orders_[i];
    }
    return exps;
}

} // namespace gstar
