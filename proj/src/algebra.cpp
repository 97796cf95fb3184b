#include "gstar/algebra.hpp"

#include "gstar/errors.hpp"

#include <sstream>

namespace gstar {

GStarAlgebra::GStarAlgebra(std::string name, FiniteAbelianGroup group, int dim)
    : name_(std::move(name)), group_(std::move(group)), dim_(dim) {
    if (dim < 0) throw InvalidArgument("algebra dimension must be >= 0");
    labels_.resize(dim);
    for (int i = 0; i < dim; ++i) labels_[i] = "b" + std::to_string(i);
    grading_.assign(dim, group_.identity());
    involution_ = RationalMatrix::identity(dim);
    products_.assign(static_cast<std::size_t>(dim) * dim, {});
}

void GStarAlgebra::set_degree(int i, GroupElement g) {
    if (!group_.contains(g)) throw InvalidArgument("degree not a canonical group element");
    grading_[i] = std::move(g);
}

void GStarAlgebra::set_involution(RationalMatrix m) {
    if (m.rows() != dim_ || m.cols() != dim_)
        throw InvalidArgument("involution matrix must be dim x dim");
    involution_ = std::move(m);
}

void GStarAlgebra::set_unit(RationalVector u) {
    if (static_cast<int>(u.size()) != dim_) throw InvalidArgument("unit vector length mismatch");
    unit_ = std::move(u);
}

void GStarAlgebra::add_product_term(int i, int j, int k, const Rational& c) {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
        throw InvalidArgument("product index out of range");
    if (is_zero(c)) return;
    auto& terms = products_[static_cast<std::size_t>(i) * dim_ + j];
    for (auto& [idx, coeff] : terms) {
        if (idx == k) {
            coeff += c;
            if (is_zero(coeff)) {
                terms.erase(std::find_if(terms.begin(), terms.end(),
                                         [k](const auto& t) { return t.first == k; }));
            }
            return;
        }
    }
    terms.emplace_back(k, c);
}

RationalVector GStarAlgebra::multiply(const RationalVector& u, const RationalVector& v) const {
    if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
        throw InvalidArgument("multiply: vector length mismatch");
    RationalVector out(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (is_zero(u[i])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (is_zero(v[j])) continue;
            Rational f = u[i] * v[j];
            for (const auto& [k, c] : basis_product(i, j)) out[k] += f * c;
        }
    }
    return out;
}

RationalVector GStarAlgebra::apply_involution(const RationalVector& v) const {
    RationalVector out(dim_);
    for (int j = 0; j < dim_; ++j) {
        if (is_zero(v[j])) continue;
        for (int i = 0; i < dim_; ++i) {
            const Rational& m = involution_.at(i, j);
            if (!is_zero(m)) out[i] += m * v[j];
        }
    }
    return out;
}

RationalVector GStarAlgebra::basis_vector(int i) const {
    RationalVector v(dim_);
    v[i] = 1;
    return v;
}

std::string GStarAlgebra::describe_vector(const RationalVector& v) const {
    std::string out;
    for (int i = 0; i < dim_; ++i) {
        if (is_zero(v[i])) continue;
        if (!out.empty()) out += " + ";
        out += rational_str(v[i]) + "*" + labels_[i];
    }
    return out.empty() ? "0" : out;
}

std::string ValidationReport::str() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) os << v.axiom << ": " << v.witness << "\n";
    return os.str();
}

namespace {

bool vectors_equal(const RationalVector& a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

} // namespace

ValidationReport validate(const GStarAlgebra& a) {
    ValidationReport report;
    auto fail = [&report](std::string axiom, std::string witness) {
        report.ok = false;
        report.violations.push_back({std::move(axiom), std::move(witness)});
    };
    const int d = a.dim();
    const auto& labels = a.basis_labels();

    // grading multiplicativity: A_g A_h <= A_{gh}
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            GroupElement gh = a.group().multiply(a.grading()[i], a.grading()[j]);
            for (const auto& [k, c] : a.basis_product(i, j)) {
                (void)c;
                if (a.grading()[k] != gh)
                    fail("grading", labels[i] + "*" + labels[j] + " has a term of wrong degree " +
                                        a.group().format_element(a.grading()[k]));
            }
        }
    }

    // associativity on all basis triples
    for (int i = 0; i < d; ++i) {
        RationalVector bi = a.basis_vector(i);
        for (int j = 0; j < d; ++j) {
            RationalVector bij = a.multiply(bi, a.basis_vector(j));
            for (int k = 0; k < d; ++k) {
                RationalVector lhs = a.multiply(bij, a.basis_vector(k));
                RationalVector rhs =
                    a.multiply(bi, a.multiply(a.basis_vector(j), a.basis_vector(k)));
                if (!vectors_equal(lhs, rhs))
                    fail("associativity", "(" + labels[i] + "*" + labels[j] + ")*" + labels[k] +
                                              " != " + labels[i] + "*(" + labels[j] + "*" +
                                              labels[k] + ")");
            }
        }
    }

    // involution: squares to the identity
    {
        const RationalMatrix& s = a.involution();
        for (int j = 0; j < d; ++j) {
            RationalVector twice = a.apply_involution(a.apply_involution(a.basis_vector(j)));
            RationalVector ej = a.basis_vector(j);
            if (!vectors_equal(twice, ej)) fail("involution order 2", labels[j] + "** != " + labels[j]);
        }
        // degree preservation: column j supported on the block of deg(b_j)
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i)
                if (!is_zero(s.at(i, j)) && a.grading()[i] != a.grading()[j])
                    fail("involution degree",
                         labels[j] + "* leaves its homogeneous component (hits " + labels[i] + ")");
    }

    // anti-multiplicativity on all basis pairs
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            RationalVector lhs =
                a.apply_involution(a.multiply(a.basis_vector(i), a.basis_vector(j)));
            RationalVector rhs = a.multiply(a.apply_involution(a.basis_vector(j)),
                                            a.apply_involution(a.basis_vector(i)));
            if (!vectors_equal(lhs, rhs))
                fail("involution anti-multiplicative",
                     "(" + labels[i] + "*" + labels[j] + ")* != " + labels[j] + "* " + labels[i] + "*");
        }
    }

    if (a.unit()) {
        const RationalVector& u = *a.unit();
        for (int i = 0; i < d; ++i) {
            RationalVector bi = a.basis_vector(i);
            if (!vectors_equal(a.multiply(u, bi), bi) || !vectors_equal(a.multiply(bi, u), bi))
                fail("unit", "unit does not fix " + labels[i]);
        }
        if (!vectors_equal(a.apply_involution(u), u)) fail("unit", "unit is not symmetric");
        for (int i = 0; i < d; ++i)
            if (!is_zero(u[i]) && !a.group().is_identity(a.grading()[i]))
                fail("unit", "unit has a component of nontrivial degree at " + labels[i]);
    }

    return report;
}

std::vector<RationalVector> component_basis(const GStarAlgebra& a, const GroupElement& g,
                                            int sign) {
    if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
    std::vector<int> block;
    for (int i = 0; i < a.dim(); ++i)
        if (a.grading()[i] == g) block.push_back(i);
    if (block.empty()) return {};

    // Restrict the involution to the block and take the kernel of (S -+ I).
    int m = static_cast<int>(block.size());
    RationalMatrix s(m, m);
    for (int c = 0; c < m; ++c)
        for (int r = 0; r < m; ++r) s.at(r, c) = a.involution().at(block[r], block[c]);
    for (int i = 0; i < m; ++i) s.at(i, i) -= sign;

    std::vector<RationalVector> out;
    for (const RationalVector& k : kernel_basis(s)) {
        RationalVector v(a.dim());
        for (int r = 0; r < m; ++r) v[block[r]] = k[r];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<GroupElement> support(const GStarAlgebra& a) {
    std::vector<GroupElement> out;
    for (const GroupElement& g : a.group().all_elements()) {
        bool hit = false;
        for (int i = 0; i < a.dim() && !hit; ++i)
            if (a.grading()[i] == g) hit = true;
        if (hit) out.push_back(g);
    }
    return out;
}

GStarAlgebra direct_sum(const GStarAlgebra& a, const GStarAlgebra& b) {
    if (!(a.group() == b.group()))
        throw InvalidArgument("direct_sum: summands live over different groups");
    GStarAlgebra s(a.name() + "+" + b.name(), a.group(), a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        s.set_label(i, a.basis_labels()[i] + "'");
        s.set_degree(i, a.grading()[i]);
    }
    for (int i = 0; i < b.dim(); ++i) {
        s.set_label(a.dim() + i, b.basis_labels()[i] + "\"");
        s.set_degree(a.dim() + i, b.grading()[i]);
    }
    RationalMatrix inv(s.dim(), s.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) inv.at(i, j) = a.involution().at(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) inv.at(a.dim() + i, a.dim() + j) = b.involution().at(i, j);
    s.set_involution(std::move(inv));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (const auto& [k, c] : a.basis_product(i, j)) s.add_product_term(i, j, k, c);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            for (const auto& [k, c] : b.basis_product(i, j))
                s.add_product_term(a.dim() + i, a.dim() + j, a.dim() + k, c);
    return s;
}

std::vector<RationalVector> radical(const GStarAlgebra& a) {
    const int d = a.dim();
    if (d == 0) return {};
    // tr(L_{b_k}) for each basis element
    std::vector<Rational> reg_trace(d);
    for (int k = 0; k < d; ++k) {
        Rational t = 0;
        for (int j = 0; j < d; ++j)
            for (const auto& [idx, c] : a.basis_product(k, j))
                if (idx == j) t += c;
        reg_trace[k] = t;
    }
    // Gram matrix of the associative form (x,y) -> tr(L_{xy})
    RationalMatrix gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rational t = 0;
            for (const auto& [k, c] : a.basis_product(i, j)) t += c * reg_trace[k];
            gram.at(i, j) = t;
        }
    return kernel_basis(gram);
}

PeirceDecomposition peirce_decompose(const GStarAlgebra& a, const RationalVector& e,
                                     std::optional<std::vector<RationalVector>> j) {
    RationalVector ee = a.multiply(e, e);
    if (!vectors_equal(ee, e)) throw InvalidArgument("peirce_decompose: e is not idempotent");
    std::vector<RationalVector> jspace = j ? std::move(*j) : radical(a);

    RankTracker jspan(a.dim());
    for (const auto& v : jspace) jspan.add_row(v);
    for (const auto& v : jspace) {
        if (!jspan.in_span(a.multiply(e, v)) || !jspan.in_span(a.multiply(v, e)))
            throw InvalidArgument("peirce_decompose: J is not stable under the idempotent");
    }

    PeirceDecomposition out;
    RankTracker t00(a.dim()), t10(a.dim()), t01(a.dim()), t11(a.dim());
    for (const auto& v : jspace) {
        RationalVector ev = a.multiply(e, v);
        RationalVector ve = a.multiply(v, e);
        RationalVector eve = a.multiply(e, ve);
        RationalVector p11 = eve;
        RationalVector p10(a.dim()), p01(a.dim()), p00(a.dim());
        for (int i = 0; i < a.dim(); ++i) {
            p10[i] = ev[i] - eve[i];
            p01[i] = ve[i] - eve[i];
            p00[i] = v[i] - ev[i] - ve[i] + eve[i];
        }
        if (t11.add_row(p11)) out.j11.push_back(std::move(p11));
        if (t10.add_row(p10)) out.j10.push_back(std::move(p10));
        if (t01.add_row(p01)) out.j01.push_back(std::move(p01));
        if (t00.add_row(p00)) out.j00.push_back(std::move(p00));
    }
    return out;
}

bool in_component(const GStarAlgebra& a, const RationalVector& v, const GroupElement& g,
                  int sign) {
    if (static_cast<int>(v.size()) != a.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        if (!is_zero(v[i]) && a.grading()[i] != g) return false;
    RationalVector sv = a.apply_involution(v);
    for (int i = 0; i < a.dim(); ++i)
        if (sv[i] != sign * v[i]) return false;
    return true;
}

} // namespace gstar
