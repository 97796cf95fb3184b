#include "gstar/freepoly.hpp"

#include "gstar/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace gstar {

GStarPolynomial GStarPolynomial::monomial(Word w, Rational c) {
    GStarPolynomial p;
    p.add_term(w, c);
    return p;
}

void GStarPolynomial::add_term(const Word& w, const Rational& c) {
    if (gstar::is_zero(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (gstar::is_zero(it->second)) terms_.erase(it);
}

GStarPolynomial& GStarPolynomial::operator+=(const GStarPolynomial& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

GStarPolynomial& GStarPolynomial::operator-=(const GStarPolynomial& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

GStarPolynomial GStarPolynomial::operator+(const GStarPolynomial& other) const {
    GStarPolynomial p = *this;
    p += other;
    return p;
}

GStarPolynomial GStarPolynomial::operator-(const GStarPolynomial& other) const {
    GStarPolynomial p = *this;
    p -= other;
    return p;
}

GStarPolynomial GStarPolynomial::operator*(const GStarPolynomial& other) const {
    GStarPolynomial p;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : other.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            p.add_term(w, c1 * c2);
        }
    }
    return p;
}

GStarPolynomial GStarPolynomial::scaled(const Rational& c) const {
    GStarPolynomial p;
    for (const auto& [w, q] : terms_) p.add_term(w, q * c);
    return p;
}

GStarPolynomial GStarPolynomial::star() const {
    GStarPolynomial p;
    for (const auto& [w, c] : terms_) {
        Word rev(w.rbegin(), w.rend());
        int sign = 1;
        for (const GradedVariable& v : w) sign *= v.sign;
        p.add_term(rev, c * sign);
    }
    return p;
}

std::vector<GradedVariable> GStarPolynomial::variables() const {
    std::vector<GradedVariable> vars;
    for (const auto& [w, c] : terms_) {
        (void)c;
        for (const GradedVariable& v : w)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::sort(vars.begin(), vars.end());
    return vars;
}

std::optional<std::map<GradedVariable, int>> GStarPolynomial::multihomogeneous_multiplicities()
    const {
    std::optional<std::map<GradedVariable, int>> result;
    for (const auto& [w, c] : terms_) {
        (void)c;
        std::map<GradedVariable, int> mult;
        for (const GradedVariable& v : w) ++mult[v];
        if (!result)
            result = mult;
        else if (*result != mult)
            return std::nullopt;
    }
    if (!result) result.emplace(); // zero polynomial
    return result;
}

std::string GStarPolynomial::str(const FiniteAbelianGroup& group) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (abs_c != 1) {
            os << rational_str(abs_c);
            need_star = true;
        }
        for (const GradedVariable& v : w) {
            if (need_star) os << " * ";
            os << "x" << v.index << "^" << (v.sign > 0 ? "+" : "-") << "_"
               << group.format_element(v.degree);
            need_star = true;
        }
    }
    return os.str();
}

int MultiDegree::total() const {
    int n = 0;
    for (int c : counts) n += c;
    return n;
}

std::string MultiDegree::str() const {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(counts[i]);
    }
    return out;
}

std::vector<MultiDegree> all_multidegrees(int n, int blocks) {
    std::vector<MultiDegree> out;
    std::vector<int> cur(blocks, 0);
    auto rec = [&](auto&& self, int block, int remaining) -> void {
        if (block == blocks - 1) {
            cur[block] = remaining;
            out.push_back(MultiDegree{cur});
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            cur[block] = c;
            self(self, block + 1, remaining - c);
        }
    };
    if (blocks > 0) rec(rec, 0, n);
    std::sort(out.begin(), out.end(), [](const MultiDegree& a, const MultiDegree& b) {
        // colexicographic: compare from the last block backwards
        for (int i = static_cast<int>(a.counts.size()) - 1; i >= 0; --i)
            if (a.counts[i] != b.counts[i]) return a.counts[i] < b.counts[i];
        return false;
    });
    return out;
}

VariableFrame VariableFrame::build(const FiniteAbelianGroup& group, const MultiDegree& md) {
    if (static_cast<int>(md.counts.size()) != 2 * group.order())
        throw InvalidArgument("multidegree must have 2|G| blocks");
    VariableFrame frame{group, md, {}};
    std::vector<GroupElement> elems = group.all_elements();
    for (std::size_t block = 0; block < md.counts.size(); ++block) {
        int sign = block % 2 == 0 ? 1 : -1;
        const GroupElement& g = elems[block / 2];
        for (int i = 0; i < md.counts[block]; ++i)
            frame.slots.push_back(Slot{static_cast<int>(block), sign, g});
    }
    return frame;
}

GradedVariable VariableFrame::variable(int i) const {
    return GradedVariable{i + 1, slots[i].sign, slots[i].degree};
}

std::vector<Word> multilinear_monomials(const VariableFrame& frame) {
    int n = frame.size();
    std::vector<Word> out;
    if (n == 0) return out;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        Word w;
        w.reserve(n);
        for (int i : perm) w.push_back(frame.variable(i));
        out.push_back(std::move(w));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

RationalVector evaluate(const GStarPolynomial& poly, const GStarAlgebra& a,
                        const std::map<GradedVariable, RationalVector>& assignment) {
    for (const auto& [v, vec] : assignment) {
        if (!in_component(a, vec, v.degree, v.sign))
            throw InvalidArgument("assignment for x" + std::to_string(v.index) +
                                  " lies outside its homogeneous component");
    }
    RationalVector out(a.dim());
    for (const auto& [w, c] : poly.terms()) {
        RationalVector value;
        bool first = true;
        for (const GradedVariable& v : w) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw InvalidArgument("missing assignment for a variable of the polynomial");
            if (first) {
                value = it->second;
                first = false;
            } else {
                value = a.multiply(value, it->second);
            }
        }
        for (int i = 0; i < a.dim(); ++i) out[i] += c * value[i];
    }
    return out;
}

namespace {

// Splits into multihomogeneous components keyed by variable multiplicities.
std::vector<GStarPolynomial> multihomogeneous_components(const GStarPolynomial& poly) {
    std::map<std::map<GradedVariable, int>, GStarPolynomial> comps;
    for (const auto& [w, c] : poly.terms()) {
        std::map<GradedVariable, int> mult;
        for (const GradedVariable& v : w) ++mult[v];
        comps[mult].add_term(w, c);
    }
    std::vector<GStarPolynomial> out;
    for (auto& [mult, p] : comps) {
        (void)mult;
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

GStarPolynomial multilinearize(const GStarPolynomial& poly) {
    auto mults = poly.multihomogeneous_multiplicities();
    if (!mults) throw InvalidArgument("multilinearize: polynomial is not multihomogeneous");

    int max_index = 0;
    for (const auto& [v, m] : *mults) {
        (void)m;
        max_index = std::max(max_index, v.index);
    }
    // Fresh index blocks for variables of multiplicity >= 2, in sorted order.
    std::map<GradedVariable, std::vector<int>> fresh;
    int next = max_index + 1;
    for (const auto& [v, m] : *mults) {
        if (m < 2) continue;
        std::vector<int> ids(m);
        for (int i = 0; i < m; ++i) ids[i] = next++;
        fresh[v] = ids;
    }
    if (fresh.empty()) return poly;

    GStarPolynomial out;
    for (const auto& [w, c] : poly.terms()) {
        // positions of each polarized variable
        std::vector<std::pair<GradedVariable, std::vector<int>>> occ;
        for (const auto& [v, ids] : fresh) {
            std::vector<int> pos;
            for (int p = 0; p < static_cast<int>(w.size()); ++p)
                if (w[p] == v) pos.push_back(p);
            occ.emplace_back(v, pos);
            (void)ids;
        }
        // odometer over permutations of fresh ids per variable
        std::vector<std::vector<int>> perms;
        for (auto& [v, pos] : occ) {
            std::vector<int> ident(pos.size());
            for (std::size_t i = 0; i < pos.size(); ++i) ident[i] = static_cast<int>(i);
            perms.push_back(ident);
        }
        auto emit = [&]() {
            Word nw = w;
            for (std::size_t vi = 0; vi < occ.size(); ++vi) {
                const auto& [v, pos] = occ[vi];
                const auto& ids = fresh[v];
                for (std::size_t k = 0; k < pos.size(); ++k)
                    nw[pos[k]].index = ids[perms[vi][k]];
            }
            out.add_term(nw, c);
        };
        // iterate cartesian product of per-variable permutations
        auto rec = [&](auto&& self, std::size_t vi) -> void {
            if (vi == occ.size()) {
                emit();
                return;
            }
            std::sort(perms[vi].begin(), perms[vi].end());
            do {
                self(self, vi + 1);
            } while (std::next_permutation(perms[vi].begin(), perms[vi].end()));
        };
        rec(rec, 0);
    }
    return out;
}

IdentityCheck check_identity(const GStarPolynomial& poly, const GStarAlgebra& a,
                             int max_degree_check) {
    for (const GStarPolynomial& comp : multihomogeneous_components(poly)) {
        GStarPolynomial lin = multilinearize(comp);
        std::vector<GradedVariable> vars = lin.variables();
        int n = static_cast<int>(vars.size());
        if (n > max_degree_check)
            throw BudgetExceeded("identity check at degree " + std::to_string(n) +
                                 " exceeds the cap of " + std::to_string(max_degree_check));
        std::vector<std::vector<RationalVector>> bases;
        bool dead = false;
        for (const GradedVariable& v : vars) {
            bases.push_back(component_basis(a, v.degree, v.sign));
            if (bases.back().empty()) dead = true;
        }
        if (dead) continue; // every evaluation of this component is zero

        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::map<GradedVariable, RationalVector> assignment;
            for (int i = 0; i < n; ++i) assignment[vars[i]] = bases[i][idx[i]];
            RationalVector value(a.dim());
            for (const auto& [w, c] : lin.terms()) {
                RationalVector prod;
                bool first = true;
                for (const GradedVariable& v : w) {
                    const RationalVector& av = assignment.at(v);
                    if (first) {
                        prod = av;
                        first = false;
                    } else {
                        prod = a.multiply(prod, av);
                    }
                }
                for (int i = 0; i < a.dim(); ++i) value[i] += c * prod[i];
            }
            bool nonzero = false;
            for (const Rational& q : value)
                if (!gstar::is_zero(q)) nonzero = true;
            if (nonzero) {
                std::ostringstream os;
                os << "nonzero evaluation:";
                for (int i = 0; i < n; ++i)
                    os << " x" << vars[i].index << (vars[i].sign > 0 ? "^+" : "^-") << " -> "
                       << a.describe_vector(bases[i][idx[i]]) << ";";
                os << " value = " << a.describe_vector(value);
                return IdentityCheck{false, os.str()};
            }
            int i = n - 1;
            while (i >= 0) {
                if (++idx[i] < bases[i].size()) break;
                idx[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    return IdentityCheck{};
}

bool is_identity(const GStarPolynomial& poly, const GStarAlgebra& a, int max_degree_check) {
    return check_identity(poly, a, max_degree_check).holds;
}

namespace {

struct PreparedGenerator {
    GStarPolynomial multilinear;
    std::vector<GradedVariable> vars; // variables of the multilinear form
};

std::string polynomial_key(const GStarPolynomial& p) {
    // Scalar-normalized canonical serialization for deduplication.
    const Rational& lead = p.terms().begin()->second;
    std::ostringstream os;
    for (const auto& [w, c] : p.terms()) {
        Rational norm = c / lead;
        os << rational_str(norm) << "|";
        for (const GradedVariable& v : w) {
            os << v.index << "," << v.sign << ",";
            for (int e : v.degree) os << e << ".";
            os << ";";
        }
        os << "#";
    }
    return os.str();
}

class ConsequenceEnumerator {
public:
    ConsequenceEnumerator(const std::vector<GStarPolynomial>& generators,
                          const VariableFrame& frame,
                          const std::function<bool(const GStarPolynomial&)>& callback)
        : frame_(frame), callback_(callback) {
        for (const GStarPolynomial& g : generators) {
            if (g.is_zero()) continue;
            GStarPolynomial lin = multilinearize(g);
            PreparedGenerator pg{lin, lin.variables()};
            prepared_.push_back(std::move(pg));
        }
        n_ = frame.size();
        used_.assign(n_, false);
    }

    void run() {
        for (const PreparedGenerator& gen : prepared_) {
            if (stopped_) return;
            gen_ = &gen;
            substitutions_.assign(gen.vars.size(), {});
            assign_variable(0);
        }
    }

private:
    // Choose an ordered sequence of unused frame slots for generator
    // variable j; close it when the degree matches.
    void assign_variable(std::size_t j) {
        if (stopped_) return;
        if (j == gen_->vars.size()) {
            emit_with_borders();
            return;
        }
        seq_.clear();
        extend_sequence(j, frame_.group.identity());
    }

    void extend_sequence(std::size_t j, const GroupElement& degree_so_far) {
        if (stopped_) return;
        for (int s = 0; s < n_; ++s) {
            if (used_[s]) continue;
            used_[s] = true;
            seq_.push_back(s);
            GroupElement deg = frame_.group.multiply(degree_so_far, frame_.slots[s].degree);
            const GradedVariable& target = gen_->vars[j];
            bool degree_ok = deg == target.degree;
            bool sign_ok = seq_.size() > 1 || frame_.slots[s].sign == target.sign;
            if (degree_ok && sign_ok) {
                substitutions_[j] = seq_;
                std::vector<int> saved = seq_;
                assign_variable(j + 1);
                seq_ = saved;
            }
            if (!stopped_) extend_sequence(j, deg);
            seq_.pop_back();
            used_[s] = false;
            if (stopped_) return;
        }
    }

    void emit_with_borders() {
        std::vector<int> rest;
        for (int s = 0; s < n_; ++s)
            if (!used_[s]) rest.push_back(s);
        // u = ordered subset of rest, w = any ordering of the complement
        std::vector<int> u;
        std::vector<bool> in_u(rest.size(), false);
        auto emit_w = [&]() {
            std::vector<int> w;
            for (std::size_t i = 0; i < rest.size(); ++i)
                if (!in_u[i]) w.push_back(rest[i]);
            std::sort(w.begin(), w.end());
            do {
                emit_candidate(u, w);
                if (stopped_) return;
            } while (std::next_permutation(w.begin(), w.end()));
        };
        auto pick_u = [&](auto&& self) -> void {
            if (stopped_) return;
            emit_w();
            if (stopped_) return;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (in_u[i]) continue;
                in_u[i] = true;
                u.push_back(rest[i]);
                self(self);
                u.pop_back();
                in_u[i] = false;
                if (stopped_) return;
            }
        };
        pick_u(pick_u);
    }

    GStarPolynomial substitution_value(std::size_t j) const {
        const std::vector<int>& seq = substitutions_[j];
        Word w;
        for (int s : seq) w.push_back(frame_.variable(s));
        GStarPolynomial mono = GStarPolynomial::monomial(w);
        if (seq.size() == 1) return mono;
        // epsilon-part of the monomial: (m + eps*m^*)/2
        GStarPolynomial part = mono.star().scaled(gen_->vars[j].sign);
        part += mono;
        return part.scaled(Rational(1, 2));
    }

    void emit_candidate(const std::vector<int>& u, const std::vector<int>& w) {
        // substitute into the generator, then border by u and w
        std::vector<GStarPolynomial> values;
        values.reserve(gen_->vars.size());
        for (std::size_t j = 0; j < gen_->vars.size(); ++j) values.push_back(substitution_value(j));

        GStarPolynomial body;
        for (const auto& [word, coeff] : gen_->multilinear.terms()) {
            GStarPolynomial prod = GStarPolynomial::monomial(Word{}, coeff);
            for (const GradedVariable& v : word) {
                std::size_t j = 0;
                while (j < gen_->vars.size() && !(gen_->vars[j] == v)) ++j;
                prod = prod * values[j];
            }
            body += prod;
        }
        if (body.is_zero()) return;

        Word uw, ww;
        for (int s : u) uw.push_back(frame_.variable(s));
        for (int s : w) ww.push_back(frame_.variable(s));
        GStarPolynomial full =
            GStarPolynomial::monomial(uw) * body * GStarPolynomial::monomial(ww);
        if (full.is_zero()) return;
        std::string key = polynomial_key(full);
        if (!seen_.insert(key).second) return;
        if (!callback_(full)) stopped_ = true;
    }

    const VariableFrame& frame_;
    const std::function<bool(const GStarPolynomial&)>& callback_;
    std::vector<PreparedGenerator> prepared_;
    const PreparedGenerator* gen_ = nullptr;
    int n_ = 0;
    std::vector<bool> used_;
    std::vector<int> seq_;
    std::vector<std::vector<int>> substitutions_;
    std::unordered_set<std::string> seen_;
    bool stopped_ = false;
};

} // namespace

void for_each_consequence(const std::vector<GStarPolynomial>& generators,
                          const VariableFrame& frame,
                          const std::function<bool(const GStarPolynomial&)>& callback) {
    ConsequenceEnumerator e(generators, frame, callback);
    e.run();
}

std::vector<GStarPolynomial> consequences_at(const std::vector<GStarPolynomial>& generators,
                                             const VariableFrame& frame) {
    std::vector<GStarPolynomial> out;
    for_each_consequence(generators, frame, [&out](const GStarPolynomial& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, const FiniteAbelianGroup& group,
               const std::map<std::string, GroupElement>& elems)
        : text_(text), group_(group), elems_(elems) {}

    GStarPolynomial parse() {
        GStarPolynomial poly;
        skip_ws();
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        poly += parse_term().scaled(sign);
        skip_ws();
        while (pos_ < text_.size()) {
            char op = peek();
            if (op != '+' && op != '-') throw error("expected '+' or '-'");
            ++pos_;
            GStarPolynomial term = parse_term();
            poly += op == '+' ? term : term.scaled(-1);
            skip_ws();
        }
        return poly;
    }

private:
    ParseError error(const std::string& msg) const {
        return ParseError("polynomial syntax error at position " + std::to_string(pos_) + ": " +
                          msg);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    GStarPolynomial parse_term() {
        skip_ws();
        Rational coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coefficient();
            skip_ws();
            if (peek() != '*') throw error("coefficient must be followed by '*'");
            ++pos_;
        }
        Word word;
        word.push_back(parse_factor());
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            word.push_back(parse_factor());
            skip_ws();
        }
        return GStarPolynomial::monomial(word, coeff);
    }

    Rational parse_coefficient() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
            ++pos_;
        auto q = parse_rational(text_.substr(start, pos_ - start));
        if (!q) throw error("malformed rational coefficient");
        return *q;
    }

    GradedVariable parse_factor() {
        skip_ws();
        if (peek() != 'x') throw error("expected variable 'x'");
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw error("expected variable index");
        int index = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) index = index * 10 + (text_[pos_++] - '0');
        if (index < 1) throw error("variable index must be >= 1");
        if (peek() != '^') throw error("expected '^'");
        ++pos_;
        int sign;
        if (peek() == '+')
            sign = 1;
        else if (peek() == '-')
            sign = -1;
        else
            throw error("expected '+' or '-' after '^'");
        ++pos_;
        if (peek() != '_') throw error("expected '_' before the degree");
        ++pos_;
        GroupElement degree = parse_gelem();
        return GradedVariable{index, sign, degree};
    }

    GroupElement parse_gelem() {
        skip_ws();
        if (peek() == '(') {
            std::size_t end = text_.find(')', pos_);
            if (end == std::string::npos) throw error("unterminated '(' in degree");
            std::string body = text_.substr(pos_, end - pos_ + 1);
            pos_ = end + 1;
            auto e = group_.parse_element(body);
            if (!e) throw error("degree " + body + " is not an element of the group");
            return *e;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '\''))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name.empty()) throw error("expected a degree name or exponent tuple");
        if (name == "1") return group_.identity();
        auto it = elems_.find(name);
        if (it == elems_.end()) throw error("unbound element name \"" + name + "\"");
        return it->second;
    }

    const std::string& text_;
    const FiniteAbelianGroup& group_;
    const std::map<std::string, GroupElement>& elems_;
    std::size_t pos_ = 0;
};

} // namespace

GStarPolynomial parse_polynomial(const std::string& text, const FiniteAbelianGroup& group,
                                 const std::map<std::string, GroupElement>& elems) {
    PolyParser p(text, group, elems);
    return p.parse();
}

std::map<std::string, GroupElement> parse_element_bindings(const std::string& text,
                                                           const FiniteAbelianGroup& group) {
    std::map<std::string, GroupElement> out;
    // bindings "name=(..)" separated by spaces or commas; commas inside
    // parentheses belong to the exponent tuple
    std::vector<std::string> bindings;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == ',' || c == ' ' || c == '\t') && depth == 0) {
            if (!cur.empty()) bindings.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) bindings.push_back(cur);
    for (const std::string& b : bindings) {
        std::size_t eq = b.find('=');
        if (eq == std::string::npos)
            throw ParseError("bad element binding \"" + b + "\" (want name=(..))");
        auto elem = group.parse_element(b.substr(eq + 1));
        if (!elem) throw ParseError("bad element in binding \"" + b + "\"");
        out[b.substr(0, eq)] = *elem;
    }
    return out;
}

GeneratorFile parse_generators(const std::string& text, const FiniteAbelianGroup& group) {
    GeneratorFile file;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);

        if (!header_done && line.rfind("elems", 0) == 0) {
            header_done = true;
            file.elems = parse_element_bindings(line.substr(5), group);
            continue;
        }
        header_done = true;
        file.generators.push_back(parse_polynomial(line, group, file.elems));
    }
    return file;
}

} // namespace gstar
