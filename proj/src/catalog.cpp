#include "gstar/catalog.hpp"

#include "gstar/errors.hpp"
#include "gstar/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gstar::catalog {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string subset_label(const std::vector<int>& s) {
    if (s.empty()) return "1";
    std::string out;
    for (int i : s) out += "e" + std::to_string(i);
    return out;
}

} // namespace

GStarAlgebra grassmann(const FiniteAbelianGroup& group, int k,
                       const std::vector<GroupElement>& generator_degrees,
                       GrassmannInvolution involution) {
    if (k < 2) throw InvalidArgument("grassmann: k >= 2 required");
    if (static_cast<int>(generator_degrees.size()) != k)
        throw InvalidArgument("grassmann: need one degree per generator");
    for (const GroupElement& d : generator_degrees)
        if (!group.contains(d)) throw InvalidArgument("grassmann: degree not in the group");

    // Basis: square-free monomials, ordered by size then lexicographically.
    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) s.push_back(i + 1);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(subsets.size()); ++i) index[subsets[i]] = i;

    GStarAlgebra alg("G" + std::to_string(k), group, 1 << k);
    for (int i = 0; i < alg.dim(); ++i) {
        alg.set_label(i, subset_label(subsets[i]));
        GroupElement deg = group.identity();
        for (int gen : subsets[i]) deg = group.multiply(deg, generator_degrees[gen - 1]);
        alg.set_degree(i, deg);
    }

    for (int i = 0; i < alg.dim(); ++i) {
        for (int j = 0; j < alg.dim(); ++j) {
            const auto& s = subsets[i];
            const auto& t = subsets[j];
            bool disjoint = true;
            for (int x : s)
                if (std::find(t.begin(), t.end(), x) != t.end()) disjoint = false;
            if (!disjoint) continue;
            long long inversions = 0;
            for (int x : s)
                for (int y : t)
                    if (y < x) ++inversions;
            std::vector<int> u;
            std::merge(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
            alg.add_product_term(i, j, index[u], inversions % 2 == 0 ? 1 : -1);
        }
    }

    RationalMatrix inv(alg.dim(), alg.dim());
    for (int i = 0; i < alg.dim(); ++i) {
        const auto& s = subsets[i];
        int m = static_cast<int>(s.size());
        int sign = (m * (m - 1) / 2) % 2 == 0 ? 1 : -1; // reversal
        for (int gen : s) {
            switch (involution) {
                case GrassmannInvolution::psi: break;
                case GrassmannInvolution::tau: sign = -sign; break;
                case GrassmannInvolution::gamma:
                    if (gen % 2 == 1) sign = -sign;
                    break;
            }
        }
        inv.at(i, i) = sign;
    }
    alg.set_involution(std::move(inv));
    RationalVector unit(alg.dim());
    unit[0] = 1;
    alg.set_unit(std::move(unit));
    return alg;
}

GStarAlgebra commutative_chain(const FiniteAbelianGroup& group, int k, ChainVariant variant,
                               const std::optional<GroupElement>& g) {
    if (k < 2) throw InvalidArgument("commutative chain: k >= 2 required");
    bool graded = variant == ChainVariant::graded || variant == ChainVariant::graded_star;
    bool starred = variant == ChainVariant::star || variant == ChainVariant::graded_star;
    GroupElement gr = group.identity();
    if (graded) {
        if (!g || !group.contains(*g))
            throw InvalidArgument("graded chain: element g required");
        if (group.is_identity(*g))
            throw InvalidArgument("graded chain: g != 1 required");
        gr = *g;
    }

    std::string name = "C" + std::to_string(k);
    if (starred) name += "*";
    if (graded) name += "^g";
    GStarAlgebra alg(name, group, k);
    for (int i = 0; i < k; ++i) {
        alg.set_label(i, i == 0 ? "I" : (i == 1 ? "E" : "E^" + std::to_string(i)));
        alg.set_degree(i, graded ? group.power(gr, i) : group.identity());
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i + j < k) alg.add_product_term(i, j, i + j, 1);
    RationalMatrix inv(k, k);
    for (int i = 0; i < k; ++i) inv.at(i, i) = (starred && i % 2 == 1) ? -1 : 1;
    alg.set_involution(std::move(inv));
    RationalVector unit(k);
    unit[0] = 1;
    alg.set_unit(std::move(unit));
    return alg;
}

GStarAlgebra group_algebra(const FiniteAbelianGroup& group, GroupAlgebraVariant variant,
                           const std::optional<GroupElement>& h) {
    if (variant == GroupAlgebraVariant::fc_p) {
        if (!h || !group.contains(*h)) throw InvalidArgument("FC_p: element h required");
        int p = group.element_order(*h);
        if (!is_prime(p)) throw InvalidArgument("FC_p: h must have prime order");
        GStarAlgebra alg("FC" + std::to_string(p), group, p);
        for (int i = 0; i < p; ++i) {
            alg.set_label(i, i == 0 ? "1" : "h^" + std::to_string(i));
            alg.set_degree(i, group.power(*h, i));
        }
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) alg.add_product_term(i, j, (i + j) % p, 1);
        RationalVector unit(p);
        unit[0] = 1;
        alg.set_unit(std::move(unit));
        return alg;
    }

    bool sharp = variant == GroupAlgebraVariant::fc2_sharp;
    GroupElement hg = group.identity();
    if (sharp) {
        if (!h || !group.contains(*h)) throw InvalidArgument("(FC2)#: element h required");
        if (group.element_order(*h) != 2) throw InvalidArgument("(FC2)#: |h| = 2 required");
        hg = *h;
    }
    GStarAlgebra alg(sharp ? "FC2#" : "FC2*", group, 2);
    alg.set_label(0, "1");
    alg.set_label(1, "u");
    alg.set_degree(1, hg);
    alg.add_product_term(0, 0, 0, 1);
    alg.add_product_term(0, 1, 1, 1);
    alg.add_product_term(1, 0, 1, 1);
    alg.add_product_term(1, 1, 0, 1);
    RationalMatrix inv(2, 2);
    inv.at(0, 0) = 1;
    inv.at(1, 1) = -1;
    alg.set_involution(std::move(inv));
    RationalVector unit(2);
    unit[0] = 1;
    alg.set_unit(std::move(unit));
    return alg;
}

namespace {

using SparseMat = std::map<std::pair<int, int>, Rational>;

SparseMat mat_mul(const SparseMat& a, const SparseMat& b) {
    SparseMat c;
    for (const auto& [ij, x] : a)
        for (const auto& [kl, y] : b)
            if (ij.second == kl.first) {
                Rational& cell = c[{ij.first, kl.second}];
                cell += x * y;
                if (is_zero(cell)) c.erase({ij.first, kl.second});
            }
    return c;
}

SparseMat reflect(const SparseMat& a, int m) {
    SparseMat out;
    for (const auto& [ij, x] : a) out[{m - 1 - ij.second, m - 1 - ij.first}] = x;
    return out;
}

RationalVector flatten(const SparseMat& a, int m) {
    RationalVector v(static_cast<std::size_t>(m) * m);
    for (const auto& [ij, x] : a) v[static_cast<std::size_t>(ij.first) * m + ij.second] = x;
    return v;
}

// Builds a validated-by-construction algebra from explicit upper triangular
// matrices: products and the involution are expressed in the span (closure
// failures throw), the grading comes from the tuple h.
GStarAlgebra from_matrix_span(const std::string& name, const FiniteAbelianGroup& group,
                              int m, const std::vector<SparseMat>& basis,
                              const std::vector<std::string>& labels,
                              const std::vector<GroupElement>& tuple, bool reflection) {
    int d = static_cast<int>(basis.size());
    std::vector<RationalVector> flat;
    for (const SparseMat& b : basis) flat.push_back(flatten(b, m));
    SpanSolver solver(flat);

    GStarAlgebra alg(name, group, d);
    for (int i = 0; i < d; ++i) {
        alg.set_label(i, labels[i]);
        std::optional<GroupElement> deg;
        for (const auto& [ij, x] : basis[i]) {
            (void)x;
            GroupElement cell =
                group.multiply(group.inverse(tuple[ij.first]), tuple[ij.second]);
            if (!deg)
                deg = cell;
            else if (!(*deg == cell))
                throw InvalidArgument(name + ": basis element " + labels[i] +
                                      " is not homogeneous for the grading tuple");
        }
        alg.set_degree(i, deg.value_or(group.identity()));
    }

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto coeff = solver.solve(flatten(mat_mul(basis[i], basis[j]), m));
            if (!coeff)
                throw InvalidArgument(name + ": span is not closed under multiplication");
            for (int k = 0; k < d; ++k)
                if (!is_zero((*coeff)[k])) alg.add_product_term(i, j, k, (*coeff)[k]);
        }

    RationalMatrix inv(d, d);
    for (int j = 0; j < d; ++j) {
        if (!reflection) {
            inv.at(j, j) = 1;
            continue;
        }
        auto coeff = solver.solve(flatten(reflect(basis[j], m), m));
        if (!coeff) throw InvalidArgument(name + ": span is not closed under the involution");
        for (int i = 0; i < d; ++i) inv.at(i, j) = (*coeff)[i];
    }
    alg.set_involution(std::move(inv));

    SparseMat id;
    for (int i = 0; i < m; ++i) id[{i, i}] = 1;
    if (auto coeff = solver.solve(flatten(id, m))) alg.set_unit(*coeff);
    return alg;
}

} // namespace

GStarAlgebra reflection_family(const FiniteAbelianGroup& group, int k, ReflectionFamily family,
                               bool graded, const std::optional<GroupElement>& g) {
    GroupElement gr = group.identity();
    if (graded) {
        if (!g || !group.contains(*g))
            throw InvalidArgument("graded reflection family: element g required");
        if (group.is_identity(*g))
            throw InvalidArgument("graded reflection family: g != 1 required");
        gr = *g;
    }

    if (family == ReflectionFamily::m) {
        // M = F(e11+e44) + F(e22+e33) + F e12 + F e34 in UT_4.
        int m = 4;
        std::vector<SparseMat> basis(4);
        basis[0][{0, 0}] = 1;
        basis[0][{3, 3}] = 1;
        basis[1][{1, 1}] = 1;
        basis[1][{2, 2}] = 1;
        basis[2][{0, 1}] = 1;
        basis[3][{2, 3}] = 1;
        std::vector<GroupElement> tuple(4, group.identity());
        if (graded) {
            // e12, e34 homogeneous of degree g
            tuple[1] = gr;
            tuple[3] = gr;
        }
        return from_matrix_span(graded ? "M^g" : "M", group, m, basis,
                                {"e11+e44", "e22+e33", "e12", "e34"}, tuple, true);
    }

    if (k < 2) throw InvalidArgument("reflection family: k >= 2 required");
    int m = 2 * k;
    SparseMat e;
    for (int i = 2; i <= k - 1; ++i) {
        e[{i - 1, i}] = 1;
        e[{2 * k - i - 1, 2 * k - i}] = 1;
    }

    std::vector<SparseMat> basis;
    std::vector<std::string> labels;
    auto unit_cell = [&](int i, int j) {
        SparseMat s;
        s[{i - 1, j - 1}] = 1;
        return s;
    };

    if (family == ReflectionFamily::a) {
        SparseMat corner;
        corner[{0, 0}] = 1;
        corner[{m - 1, m - 1}] = 1;
        basis.push_back(corner);
        labels.push_back("e11+e(2k,2k)");
    } else {
        SparseMat id;
        for (int i = 0; i < m; ++i) id[{i, i}] = 1;
        basis.push_back(id);
        labels.push_back("I");
    }
    SparseMat ep = e;
    for (int p = 1; p <= k - 2; ++p) {
        basis.push_back(ep);
        labels.push_back(p == 1 ? "E" : "E^" + std::to_string(p));
        ep = mat_mul(ep, e);
    }
    if (family == ReflectionFamily::a) {
        for (int j = 2; j <= k; ++j) {
            basis.push_back(unit_cell(1, j));
            labels.push_back("e1" + std::to_string(j));
        }
        for (int j = k + 1; j <= 2 * k - 1; ++j) {
            basis.push_back(unit_cell(j, 2 * k));
            labels.push_back("e" + std::to_string(j) + "(2k)");
        }
    } else {
        SparseMat pair = unit_cell(1, 2);
        Rational s = family == ReflectionFamily::n ? Rational(-1) : Rational(1);
        pair[{2 * k - 2, 2 * k - 1}] = s;
        basis.push_back(pair);
        labels.push_back(family == ReflectionFamily::n ? "e12-e(2k-1,2k)" : "e12+e(2k-1,2k)");
        for (int j = 3; j <= k; ++j) {
            basis.push_back(unit_cell(1, j));
            labels.push_back("e1" + std::to_string(j));
        }
        for (int j = k + 1; j <= 2 * k - 2; ++j) {
            basis.push_back(unit_cell(j, 2 * k));
            labels.push_back("e" + std::to_string(j) + "(2k)");
        }
    }

    std::vector<GroupElement> tuple(m, group.identity());
    if (graded) {
        // (1, g x(k-1), 1 x(k-1), g)
        for (int i = 1; i <= k - 1; ++i) tuple[i] = gr;
        tuple[m - 1] = gr;
    }
    std::string base = family == ReflectionFamily::n ? "N" : family == ReflectionFamily::u ? "U" : "A";
    std::string name = base + std::to_string(k) + (graded ? "^g" : "*");
    return from_matrix_span(name, group, m, basis, labels, tuple, true);
}

GStarAlgebra w_algebra(const FiniteAbelianGroup& group, const GroupElement& g,
                       const GroupElement& h, WInvolution involution) {
    if (!group.contains(g) || !group.contains(h))
        throw InvalidArgument("w_algebra: g and h must be canonical group elements");
    GStarAlgebra alg("W", group, 4);
    alg.set_label(0, "1");
    alg.set_label(1, "u");
    alg.set_label(2, "v");
    alg.set_label(3, "w");
    alg.set_degree(1, g);
    alg.set_degree(2, h);
    alg.set_degree(3, group.multiply(g, h));
    for (int i = 0; i < 4; ++i) {
        alg.add_product_term(0, i, i, 1);
        if (i) alg.add_product_term(i, 0, i, 1);
    }
    alg.add_product_term(1, 2, 3, 1);
    alg.add_product_term(2, 1, 3, 1);
    RationalMatrix inv(4, 4);
    inv.at(0, 0) = 1;
    switch (involution) {
        case WInvolution::nu1:
            inv.at(1, 1) = 1;
            inv.at(2, 2) = 1;
            inv.at(3, 3) = 1;
            break;
        case WInvolution::nu2:
            inv.at(1, 1) = -1;
            inv.at(2, 2) = -1;
            inv.at(3, 3) = 1;
            break;
        case WInvolution::nu3:
            inv.at(1, 1) = -1;
            inv.at(2, 2) = 1;
            inv.at(3, 3) = -1;
            break;
    }
    alg.set_involution(std::move(inv));
    RationalVector unit(4);
    unit[0] = 1;
    alg.set_unit(std::move(unit));
    return alg;
}

GStarAlgebra trivial_unital(const FiniteAbelianGroup& group) {
    GStarAlgebra alg("F", group, 1);
    alg.set_label(0, "1");
    alg.add_product_term(0, 0, 0, 1);
    RationalVector unit(1);
    unit[0] = 1;
    alg.set_unit(std::move(unit));
    return alg;
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

GroupElement required_g(const CatalogParams& p, const std::string& who) {
    if (!p.g) throw InvalidArgument(who + ": --g required");
    return *p.g;
}

// Finds the first element of the given order, used when FC_p / (FC2)# get no
// explicit generator.
std::optional<GroupElement> first_element_of_order(const FiniteAbelianGroup& group, int order) {
    for (const GroupElement& e : group.all_elements())
        if (group.element_order(e) == order) return e;
    return std::nullopt;
}

GStarAlgebra build_single(const std::string& raw, const CatalogParams& params) {
    std::string name = lower(raw);
    // strip surrounding whitespace
    auto b = name.find_first_not_of(" \t");
    auto e = name.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidArgument("empty catalog name");
    name = name.substr(b, e - b + 1);

    const FiniteAbelianGroup& G = params.group;

    if (name == "f" || name == "c" || name == "trivial") return trivial_unital(G);

    // Grassmann: g2:tau, g2psi, g3:tau, gk:gamma --k, g2tau11
    if (name.size() >= 2 && name[0] == 'g' &&
        (std::isdigit(static_cast<unsigned char>(name[1])) || name[1] == 'k')) {
        std::size_t pos = 1;
        int k = 0;
        if (name[1] == 'k') {
            if (!params.k) throw InvalidArgument("grassmann: --k required for Gk");
            k = *params.k;
            pos = 2;
        } else {
            while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos])))
                k = k * 10 + (name[pos++] - '0');
        }
        if (pos < name.size() && (name[pos] == ':' || name[pos] == '_')) ++pos;
        std::string iota = name.substr(pos);
        bool force_trivial = false;
        if (iota.size() > 2 && iota.substr(iota.size() - 2) == "11") {
            force_trivial = true;
            iota = iota.substr(0, iota.size() - 2);
        }
        GrassmannInvolution kind;
        if (iota == "tau")
            kind = GrassmannInvolution::tau;
        else if (iota == "psi")
            kind = GrassmannInvolution::psi;
        else if (iota == "gamma")
            kind = GrassmannInvolution::gamma;
        else
            throw InvalidArgument("grassmann: unknown involution \"" + iota +
                                  "\" (want tau, psi or gamma)");
        std::vector<GroupElement> degrees;
        if (force_trivial) {
            degrees.assign(k, G.identity());
        } else if (!params.degrees.empty()) {
            degrees = params.degrees;
        } else if (k == 2) {
            GroupElement dg = params.g.value_or(G.identity());
            GroupElement dh = params.h.value_or(dg);
            degrees = {dg, dh};
        } else {
            degrees.assign(k, G.identity());
        }
        return grassmann(G, k, degrees, kind);
    }

    // Chains: c3, c3_star, c3g, c3_star_g, ck... (k from digits or --k)
    if (name[0] == 'c' && name.size() > 1 &&
        (std::isdigit(static_cast<unsigned char>(name[1])) || name[1] == 'k')) {
        std::size_t pos = 1;
        int k = 0;
        if (name[1] == 'k') {
            if (!params.k) throw InvalidArgument("chain: --k required for Ck");
            k = *params.k;
            pos = 2;
        } else {
            while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos])))
                k = k * 10 + (name[pos++] - '0');
        }
        std::string suffix = name.substr(pos);
        std::erase(suffix, '_');
        std::erase(suffix, ',');
        bool star = false, graded = false;
        if (suffix.empty()) {
        } else if (suffix == "star" || suffix == "*") {
            star = true;
        } else if (suffix == "g") {
            graded = true;
        } else if (suffix == "starg" || suffix == "*g" || suffix == "gstar" || suffix == "g*") {
            star = graded = true;
        } else {
            throw InvalidArgument("chain: unknown variant suffix \"" + suffix + "\"");
        }
        ChainVariant v = star ? (graded ? ChainVariant::graded_star : ChainVariant::star)
                              : (graded ? ChainVariant::graded : ChainVariant::plain);
        return commutative_chain(G, k, v, graded ? std::optional(required_g(params, "chain"))
                                                 : std::nullopt);
    }

    // Group algebras
    if (name == "fc2_star" || name == "fc2star") return group_algebra(G, GroupAlgebraVariant::fc2_star);
    if (name == "fc2_sharp" || name == "fc2sharp") {
        std::optional<GroupElement> h = params.g;
        if (!h) h = first_element_of_order(G, 2);
        if (!h) throw InvalidArgument("(FC2)#: the group has no element of order 2");
        return group_algebra(G, GroupAlgebraVariant::fc2_sharp, h);
    }
    if (name.rfind("fc", 0) == 0) {
        std::string digits = name.substr(2);
        std::optional<GroupElement> h = params.g;
        if (digits == "p") {
            if (!h) throw InvalidArgument("FC_p: --g required (its order is p)");
        } else {
            int p = 0;
            for (char c : digits) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw InvalidArgument("unknown catalog name \"" + raw + "\"");
                p = p * 10 + (c - '0');
            }
            if (!h) h = first_element_of_order(G, p);
            if (!h || G.element_order(*h) != p)
                throw InvalidArgument("FC" + digits + ": need an element of order " + digits);
        }
        return group_algebra(G, GroupAlgebraVariant::fc_p, h);
    }

    // M with reflection involution
    if (name == "m_rho" || name == "mrho" || name == "m1rho" || name == "mgrho") {
        GroupElement g = params.g.value_or(G.identity());
        if (name == "m1rho") g = G.identity();
        bool graded = !G.is_identity(g);
        return reflection_family(G, 2, ReflectionFamily::m, graded,
                                 graded ? std::optional(g) : std::nullopt);
    }

    // N/U/A families: n3_star, u3_star (aka u3,*), a2_star, n3g, a2g, nk_star ...
    if (name[0] == 'n' || name[0] == 'u' || name[0] == 'a') {
        ReflectionFamily fam = name[0] == 'n'   ? ReflectionFamily::n
                               : name[0] == 'u' ? ReflectionFamily::u
                                                : ReflectionFamily::a;
        std::size_t pos = 1;
        int k = 0;
        bool have_k = false;
        if (pos < name.size() && name[pos] == 'k') {
            if (!params.k) throw InvalidArgument("reflection family: --k required");
            k = *params.k;
            have_k = true;
            ++pos;
        } else {
            while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) {
                k = k * 10 + (name[pos++] - '0');
                have_k = true;
            }
        }
        if (have_k) {
            std::string suffix = name.substr(pos);
            std::erase(suffix, '_');
            std::erase(suffix, ',');
            if (suffix == "star" || suffix == "*")
                return reflection_family(G, k, fam, false);
            if (suffix == "g")
                return reflection_family(G, k, fam, true, required_g(params, "reflection family"));
            throw InvalidArgument("reflection family: unknown suffix \"" + suffix +
                                  "\" (want _star or g)");
        }
    }

    // W family
    if (name.rfind("w", 0) == 0) {
        std::string rest = name.substr(1);
        if (!rest.empty() && (rest[0] == ':' || rest[0] == '_')) rest = rest.substr(1);
        WInvolution nu;
        if (rest == "nu1")
            nu = WInvolution::nu1;
        else if (rest == "nu2")
            nu = WInvolution::nu2;
        else if (rest == "nu3")
            nu = WInvolution::nu3;
        else
            throw InvalidArgument("W: unknown involution \"" + rest + "\" (want nu1, nu2 or nu3)");
        GroupElement g = params.g.value_or(G.identity());
        GroupElement h = params.h.value_or(g);
        return w_algebra(G, g, h, nu);
    }

    throw InvalidArgument("unknown catalog name \"" + raw + "\"");
}

} // namespace

GStarAlgebra build(const std::string& spec, const CatalogParams& params) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == '+') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);

    std::optional<GStarAlgebra> result;
    for (const std::string& part : parts) {
        GStarAlgebra a = build_single(part, params);
        result = result ? direct_sum(*result, a) : std::move(a);
    }
    ValidationReport report = validate(*result);
    if (!report.ok)
        throw ConsistencyError("catalog algebra failed validation:\n" + report.str());
    return *result;
}

std::vector<CatalogEntry> entries() {
    return {
        {"F (aka C, trivial)", "", "one-dimensional unital, trivial grading/involution"},
        {"G2:tau | G2:psi | G2:gamma", "--group, --g, --h", "Grassmann span<1,e1,e2>, deg e1=g, e2=h (h defaults to g)"},
        {"G2tau11 (and :psi/:gamma)", "--group", "same with trivial grading"},
        {"G3:tau", "--group", "Grassmann span<1,e1,e2,e3>, trivial grading"},
        {"Gk:tau|psi|gamma", "--k, --degs", "general Grassmann subalgebra, k >= 2"},
        {"Ck (e.g. C3)", "--k", "commutative chain in UT_k, k >= 2"},
        {"Ck_star", "--k", "chain with the sign involution"},
        {"Ckg (e.g. C3g)", "--k, --g", "chain graded by (1,g,...,g^(k-1)), g != 1"},
        {"Ck_star_g", "--k, --g", "graded chain with the sign involution, g != 1"},
        {"FCp (e.g. FC2, FC3)", "--group, --g", "group algebra of <g>, |g| = p prime (g auto-picked if omitted)"},
        {"FC2_star", "--group", "FC2, trivial grading, sign involution"},
        {"FC2_sharp", "--group, --g", "FC2 graded by <g>, |g| = 2, sign involution"},
        {"M_rho (aka M1rho, Mgrho)", "--group, --g", "4x4 reflection algebra; graded when g != 1"},
        {"Nk_star / Uk_star / Ak_star", "--k", "UT_{2k} reflection families, trivial grading (U3_star aka U3,*)"},
        {"Nkg / Ukg / Akg", "--k, --g", "graded by (1, g x(k-1), 1 x(k-1), g), g != 1; k > 3 unverified"},
        {"W:nu1 | W:nu2 | W:nu3", "--group, --g, --h", "span<1, e12+e34, e13+e24, e14> in UT_4, deg (1,g,h,gh)"},
        {"A+B", "shared flags", "direct sum of catalog entries over the same group"},
    };
}

} // namespace gstar::catalog
