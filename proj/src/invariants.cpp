#include "gstar/invariants.hpp"

#include "gstar/errors.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace gstar {

namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Lehmer rank of a permutation of 0..n-1 in lexicographic order.
int lehmer_rank(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    long long rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (perm[j] < perm[i]) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return static_cast<int>(rank);
}

std::size_t hash_column(const RationalVector& col) {
    std::size_t seed = col.size();
    for (const Rational& q : col) seed = hash_rational(q, seed);
    return seed;
}

bool all_zero(const RationalVector& v) {
    for (const Rational& q : v)
        if (!is_zero(q)) return false;
    return true;
}

} // namespace

QuotientModel QuotientModel::build(const GStarAlgebra& a, const MultiDegree& md,
                                   const CapPolicy& policy) {
    QuotientModel model;
    model.frame_ = VariableFrame::build(a.group(), md);
    int n = model.frame_.size();
    if (n > policy.degree_cap)
        throw BudgetExceeded("frame " + md.str() + " has degree " + std::to_string(n) +
                             " above the cap " + std::to_string(policy.degree_cap));
    model.nfact_ = static_cast<int>(factorial(n));
    if (n == 0) return model;

    // Component bases per slot; a zero component kills the whole frame.
    std::map<std::pair<GroupElement, int>, std::vector<RationalVector>> cache;
    std::vector<const std::vector<RationalVector>*> bases;
    long long tuples = 1;
    for (const auto& slot : model.frame_.slots) {
        auto key = std::make_pair(slot.degree, slot.sign);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, component_basis(a, slot.degree, slot.sign)).first;
        if (it->second.empty()) return model; // codim 0
        bases.push_back(&it->second);
        tuples *= static_cast<long long>(it->second.size());
        if (tuples > policy.cell_budget) break;
    }
    long long cells = tuples * model.nfact_ * std::max(1, a.dim());
    if (cells > policy.cell_budget)
        throw BudgetExceeded("frame " + md.str() + " needs " + std::to_string(cells) +
                             " evaluation cells, over the budget of " +
                             std::to_string(policy.cell_budget));

    model.perms_.reserve(model.nfact_);
    {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            model.perms_.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    RankTracker tracker(model.nfact_);
    // hash -> indices into stored_cols, exact compare on collision
    std::unordered_map<std::size_t, std::vector<int>> seen;
    std::vector<RationalVector> stored_cols;
    constexpr int kDedupCap = 50000;

    std::vector<std::size_t> tuple_idx(n, 0);
    std::vector<std::pair<int, RationalVector>> leaves;
    std::vector<bool> used(n, false);

    auto dfs = [&](auto&& self, int depth, int counter, const RationalVector& prefix) -> int {
        if (depth == n) {
            leaves.emplace_back(counter, prefix);
            return counter + 1;
        }
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            const RationalVector& vec = (*bases[i])[tuple_idx[i]];
            RationalVector next = depth == 0 ? vec : a.multiply(prefix, vec);
            if (all_zero(next)) {
                counter += static_cast<int>(factorial(n - depth - 1));
                continue;
            }
            used[i] = true;
            counter = self(self, depth + 1, counter, next);
            used[i] = false;
        }
        return counter;
    };

    while (true) {
        leaves.clear();
        dfs(dfs, 0, 0, RationalVector{});
        for (int k = 0; k < a.dim(); ++k) {
            RationalVector col(model.nfact_);
            bool nonzero = false;
            int first_nonzero = -1;
            for (const auto& [pi, vec] : leaves) {
                if (is_zero(vec[k])) continue;
                col[pi] = vec[k];
                if (!nonzero) first_nonzero = pi;
                nonzero = true;
            }
            if (!nonzero) continue;
            if (sgn(col[first_nonzero]) < 0)
                for (Rational& q : col)
                    if (!is_zero(q)) q = -q;

            if (static_cast<int>(stored_cols.size()) < kDedupCap) {
                std::size_t h = hash_column(col);
                auto& bucket = seen[h];
                bool dup = false;
                for (int idx : bucket)
                    if (stored_cols[idx] == col) {
                        dup = true;
                        break;
                    }
                if (dup) continue;
                bucket.push_back(static_cast<int>(stored_cols.size()));
                stored_cols.push_back(col);
            }
            if (tracker.add_row(col)) model.pivot_cols_.push_back(std::move(col));
        }
        // advance the tuple odometer
        int i = n - 1;
        while (i >= 0) {
            if (++tuple_idx[i] < bases[i]->size()) break;
            tuple_idx[i] = 0;
            --i;
        }
        if (i < 0) break;
    }

    model.codim_ = static_cast<int>(model.pivot_cols_.size());
    if (model.codim_ == 0) return model;

    RankTracker monomial_tracker(model.codim_);
    std::vector<RationalVector> pivot_rows;
    for (int pi = 0;
         pi < model.nfact_ && static_cast<int>(model.pivot_monomials_.size()) < model.codim_;
         ++pi) {
        RationalVector r = model.row(pi);
        if (monomial_tracker.add_row(r)) {
            model.pivot_monomials_.push_back(pi);
            pivot_rows.push_back(std::move(r));
        }
    }
    model.pivot_solver_.emplace(pivot_rows);
    return model;
}

RationalVector QuotientModel::row(int perm_index) const {
    RationalVector r(codim_);
    for (int j = 0; j < codim_; ++j) r[j] = pivot_cols_[j][perm_index];
    return r;
}

RationalVector QuotientModel::compress(const std::map<int, Rational>& coeffs) const {
    RationalVector out(codim_);
    for (const auto& [pi, c] : coeffs) {
        if (is_zero(c)) continue;
        for (int j = 0; j < codim_; ++j) {
            const Rational& cell = pivot_cols_[j][pi];
            if (!is_zero(cell)) out[j] += c * cell;
        }
    }
    return out;
}

RationalVector QuotientModel::express_in_pivots(int perm_index) const {
    auto coeff = pivot_solver_->solve(row(perm_index));
    if (!coeff) throw ConsistencyError("monomial not expressible in the pivot basis");
    return *coeff;
}

int QuotientModel::permutation_index(const std::vector<int>& perm) const {
    return lehmer_rank(perm);
}

Rational QuotientModel::action_trace(const std::vector<int>& variable_perm) const {
    Rational trace = 0;
    std::vector<int> composed(frame_.size());
    for (int i = 0; i < codim_; ++i) {
        const std::vector<int>& sigma = perms_[pivot_monomials_[i]];
        for (std::size_t p = 0; p < sigma.size(); ++p) composed[p] = variable_perm[sigma[p]];
        RationalVector coeff = express_in_pivots(lehmer_rank(composed));
        trace += coeff[i];
    }
    return trace;
}

int multidegree_codim(const GStarAlgebra& a, const MultiDegree& md, const CapPolicy& policy) {
    return QuotientModel::build(a, md, policy).codim();
}

namespace {

// Canonical representative of a blockwise conjugacy class: descending cycle
// lengths laid out consecutively inside each block.
std::vector<int> class_representative(const MultiDegree& md, const MultiCycleType& type) {
    int n = md.total();
    std::vector<int> perm(n);
    int offset = 0;
    for (std::size_t b = 0; b < md.counts.size(); ++b) {
        int pos = offset;
        for (int len : type[b]) {
            for (int i = 0; i < len; ++i) perm[pos + i] = pos + (i + 1) % len;
            pos += len;
        }
        offset += md.counts[b];
    }
    return perm;
}

std::vector<Multipartition> multipartitions_of(const MultiDegree& md) {
    std::vector<std::vector<Partition>> per_block;
    for (int c : md.counts) per_block.push_back(partitions(c));
    std::vector<Multipartition> out;
    Multipartition cur(md.counts.size());
    auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == md.counts.size()) {
            out.push_back(cur);
            return;
        }
        for (const Partition& p : per_block[b]) {
            cur[b] = p;
            self(self, b + 1);
        }
    };
    rec(rec, 0);
    return out;
}

template <typename Fn>
void parallel_over(int count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    int width = std::min(jobs, count);
    for (int w = 0; w < width; ++w)
        workers.emplace_back([&fn, w, width, count]() {
            for (int i = w; i < count; i += width) fn(i);
        });
    for (auto& t : workers) t.join();
}

} // namespace

BigInt codim_total(const GStarAlgebra& a, int n, const CapPolicy& policy) {
    if (n > policy.degree_cap)
        throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the degree cap " +
                             std::to_string(policy.degree_cap));
    std::vector<MultiDegree> frames =
        all_multidegrees(n, 2 * static_cast<int>(a.group().order()));
    std::vector<BigInt> parts(frames.size());
    parallel_over(static_cast<int>(frames.size()), policy.jobs, [&](int i) {
        int c = multidegree_codim(a, frames[i], policy);
        if (c) parts[i] = multinomial(n, frames[i].counts) * c;
    });
    BigInt total = 0;
    for (const BigInt& p : parts) total += p;
    return total;
}

std::map<Multipartition, long long> cocharacter(const GStarAlgebra& a, const MultiDegree& md,
                                                const CapPolicy& policy) {
    std::map<Multipartition, long long> out;
    QuotientModel model = QuotientModel::build(a, md, policy);
    if (model.codim() == 0) return out;

    std::vector<MultiClass> classes = multi_classes(md.counts);
    BigInt group_order = 1;
    for (int c : md.counts) group_order *= static_cast<long>(factorial(c));

    std::vector<Rational> traces(classes.size());
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        bool is_identity_class = true;
        for (std::size_t b = 0; b < classes[ci].type.size(); ++b)
            for (int len : classes[ci].type[b])
                if (len != 1) is_identity_class = false;
        traces[ci] = is_identity_class
                         ? Rational(model.codim())
                         : model.action_trace(class_representative(md, classes[ci].type));
    }

    long long dim_check = 0;
    for (const Multipartition& mla : multipartitions_of(md)) {
        Rational sum = 0;
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            long long chi = multi_character(mla, classes[ci].type);
            if (chi == 0) continue;
            sum += Rational(classes[ci].size) * Rational(static_cast<long>(chi)) * traces[ci];
        }
        Rational m = sum / Rational(group_order);
        if (m.get_den() != 1 || m < 0)
            throw ConsistencyError("multiplicity " + rational_str(m) + " at frame " + md.str() +
                                   " is not a non-negative integer");
        long long mult = static_cast<long long>(m.get_num().get_si());
        if (mult > 0) {
            out[mla] = mult;
            dim_check += mult * multi_hook_degree(mla);
        }
    }
    if (dim_check != model.codim())
        throw ConsistencyError("cocharacter dimensions sum to " + std::to_string(dim_check) +
                               " but c_<n> = " + std::to_string(model.codim()) + " at frame " +
                               md.str());
    return out;
}

long long colength(const GStarAlgebra& a, int n, const CapPolicy& policy) {
    return cocharacter_table(a, n, policy).l_n_sharp;
}

CocharacterTable cocharacter_table(const GStarAlgebra& a, int n, const CapPolicy& policy) {
    if (n > policy.degree_cap)
        throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the degree cap " +
                             std::to_string(policy.degree_cap));
    CocharacterTable table;
    table.n = n;
    table.c_n_sharp = 0;
    table.l_n_sharp = 0;
    std::vector<MultiDegree> frames =
        all_multidegrees(n, 2 * static_cast<int>(a.group().order()));
    std::vector<std::map<Multipartition, long long>> results(frames.size());
    parallel_over(static_cast<int>(frames.size()), policy.jobs,
                  [&](int i) { results[i] = cocharacter(a, frames[i], policy); });
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (results[i].empty()) continue;
        long long frame_dim = 0;
        for (const auto& [mla, mult] : results[i]) frame_dim += mult * multi_hook_degree(mla);
        for (const auto& [mla, mult] : results[i]) {
            table.rows.push_back(CocharacterRow{frames[i], mla, mult, multi_hook_degree(mla),
                                                static_cast<int>(frame_dim)});
            table.l_n_sharp += mult;
        }
        table.c_n_sharp += multinomial(n, frames[i].counts) * static_cast<long>(frame_dim);
    }
    return table;
}

long long hwv_multiplicity(const GStarAlgebra& a, const Multipartition& mla,
                           const CapPolicy& policy) {
    const FiniteAbelianGroup& group = a.group();
    if (static_cast<int>(mla.size()) != 2 * group.order())
        throw InvalidArgument("multipartition must have 2|G| blocks");
    MultiDegree md = multidegree_of(group, mla);
    if (md.total() > policy.degree_cap)
        throw BudgetExceeded("multipartition weight exceeds the degree cap");
    if (md.total() == 0) return 0;

    // Alternation over a column taller than the component dimension kills
    // every evaluation.
    std::vector<GroupElement> elems = group.all_elements();
    for (std::size_t b = 0; b < mla.size(); ++b) {
        if (mla[b].empty()) continue;
        int sign = b % 2 == 0 ? 1 : -1;
        std::size_t comp_dim = component_basis(a, elems[b / 2], sign).size();
        if (mla[b].size() > comp_dim) return 0;
    }

    QuotientModel model = QuotientModel::build(a, md, policy);
    if (model.codim() == 0) return 0;

    // Frame slot ranges per (block, row): row j of block b fills the j-th
    // chunk of the block's slots.
    int n = md.total();
    std::vector<std::vector<std::vector<int>>> row_slots(mla.size());
    int offset = 0;
    for (std::size_t b = 0; b < mla.size(); ++b) {
        int pos = offset;
        for (int len : mla[b]) {
            std::vector<int> slots(len);
            for (int i = 0; i < len; ++i) slots[i] = pos + i;
            row_slots[b].push_back(std::move(slots));
            pos += len;
        }
        offset += md.counts[b];
    }

    // Word symbols: (block, row) with multiplicity = row length.
    std::vector<std::pair<int, int>> symbols;
    for (std::size_t b = 0; b < mla.size(); ++b)
        for (std::size_t j = 0; j < mla[b].size(); ++j)
            for (int c = 0; c < mla[b][j]; ++c) symbols.emplace_back(static_cast<int>(b), j);
    std::sort(symbols.begin(), symbols.end());

    RankTracker tracker(model.codim());
    do {
        // tableau positions: pos_list[b][j] = ascending positions of (b,j)
        std::map<std::pair<int, int>, std::vector<int>> pos_list;
        for (int p = 0; p < n; ++p) pos_list[symbols[p]].push_back(p);

        // columns with at least two cells, per block; cells kept ascending so
        // the inversion count below is the true sign of the cell permutation
        std::vector<std::vector<int>> columns;
        for (std::size_t b = 0; b < mla.size(); ++b) {
            if (mla[b].empty()) continue;
            for (int c = 0; c < mla[b][0]; ++c) {
                std::vector<int> cells;
                for (std::size_t j = 0; j < mla[b].size(); ++j)
                    if (mla[b][j] > c) cells.push_back(pos_list[{static_cast<int>(b), static_cast<int>(j)}][c]);
                if (cells.size() > 1) {
                    std::sort(cells.begin(), cells.end());
                    columns.push_back(std::move(cells));
                }
            }
        }

        std::map<int, Rational> coeffs;
        // iterate the column group: per column, all orderings of its cells
        std::vector<std::vector<int>> images;
        for (const auto& cells : columns) images.push_back(cells);
        auto emit_term = [&](int sign) {
            std::vector<int> tau(n);
            for (int p = 0; p < n; ++p) tau[p] = p;
            for (std::size_t ci = 0; ci < columns.size(); ++ci)
                for (std::size_t i = 0; i < columns[ci].size(); ++i)
                    tau[columns[ci][i]] = images[ci][i];
            // permuted word: position tau[p] holds symbol originally at p
            std::vector<std::pair<int, int>> word(n);
            for (int p = 0; p < n; ++p) word[tau[p]] = symbols[p];
            // positions of each (b,j) in the permuted word, ascending
            std::map<std::pair<int, int>, std::vector<int>> occ;
            for (int p = 0; p < n; ++p) occ[word[p]].push_back(p);
            // polarize: all bijections occurrences -> slots, per row
            std::vector<std::pair<std::vector<int>, std::vector<int>>> rows; // (positions, slots)
            for (const auto& [sym, positions] : occ)
                rows.emplace_back(positions, row_slots[sym.first][sym.second]);
            std::vector<std::vector<int>> perm_of_row;
            for (const auto& [positions, slots] : rows) {
                (void)slots;
                std::vector<int> ident(positions.size());
                for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
                perm_of_row.push_back(ident);
            }
            std::vector<int> frame_word(n);
            auto rec = [&](auto&& self, std::size_t ri) -> void {
                if (ri == rows.size()) {
                    coeffs[lehmer_rank(frame_word)] += sign;
                    return;
                }
                const auto& [positions, slots] = rows[ri];
                std::sort(perm_of_row[ri].begin(), perm_of_row[ri].end());
                do {
                    for (std::size_t i = 0; i < positions.size(); ++i)
                        frame_word[positions[i]] = slots[perm_of_row[ri][i]];
                    self(self, ri + 1);
                } while (std::next_permutation(perm_of_row[ri].begin(), perm_of_row[ri].end()));
            };
            rec(rec, 0);
        };
        // odometer over per-column permutations with signs
        auto col_rec = [&](auto&& self, std::size_t ci, int sign) -> void {
            if (ci == columns.size()) {
                emit_term(sign);
                return;
            }
            std::vector<int>& img = images[ci];
            std::sort(img.begin(), img.end());
            do {
                int inversions = 0;
                for (std::size_t i = 0; i < img.size(); ++i)
                    for (std::size_t j = i + 1; j < img.size(); ++j)
                        if (img[i] > img[j]) ++inversions;
                self(self, ci + 1, sign * (inversions % 2 == 0 ? 1 : -1));
            } while (std::next_permutation(img.begin(), img.end()));
        };
        col_rec(col_rec, 0, 1);

        std::map<int, Rational> cleaned;
        for (const auto& [pi, c] : coeffs)
            if (!is_zero(c)) cleaned.emplace(pi, c);
        if (!cleaned.empty()) tracker.add_row(model.compress(cleaned));
    } while (std::next_permutation(symbols.begin(), symbols.end()));

    return tracker.rank();
}

BasisVerification verify_generating_set(const GStarAlgebra& a,
                                        const std::vector<GStarPolynomial>& generators, int n_max,
                                        const CapPolicy& policy) {
    BasisVerification result;
    for (const GStarPolynomial& g : generators) {
        IdentityCheck check = check_identity(g, a, policy.degree_cap);
        if (!check.holds) {
            result.generators_ok = false;
            result.all_complete = false;
            result.rejected_witness =
                "generator " + g.str(a.group()) + " is not an identity: " + check.witness;
            return result;
        }
    }

    for (int n = 1; n <= n_max; ++n) {
        for (const MultiDegree& md :
             all_multidegrees(n, 2 * static_cast<int>(a.group().order()))) {
            QuotientModel model = QuotientModel::build(a, md, policy);
            int target = model.monomial_count() - model.codim();
            FrameVerification fv{md, target, 0, true};
            if (target > 0) {
                RankTracker tracker(model.monomial_count());
                for_each_consequence(
                    generators, model.frame(), [&](const GStarPolynomial& p) {
                        RationalVector coeff(model.monomial_count());
                        std::vector<int> perm(model.frame().size());
                        for (const auto& [word, c] : p.terms()) {
                            for (std::size_t i = 0; i < word.size(); ++i)
                                perm[i] = word[i].index - 1;
                            coeff[lehmer_rank(perm)] += c;
                        }
                        tracker.add_row(std::move(coeff));
                        return tracker.rank() < target;
                    });
                fv.consequence_rank = tracker.rank();
                fv.complete = fv.consequence_rank == target;
            }
            if (!fv.complete) result.all_complete = false;
            result.frames.push_back(std::move(fv));
        }
    }
    return result;
}

ContainmentReport variety_contains_upto(const GStarAlgebra& a, const GStarAlgebra& b, int n_max,
                                        const CapPolicy& policy) {
    if (!(a.group() == b.group()))
        throw InvalidArgument("variety containment needs both algebras over the same group");
    ContainmentReport report;
    for (int n = 1; n <= n_max; ++n) {
        bool ok_n = true;
        for (const MultiDegree& md :
             all_multidegrees(n, 2 * static_cast<int>(a.group().order()))) {
            QuotientModel ma = QuotientModel::build(a, md, policy);
            QuotientModel mb = QuotientModel::build(b, md, policy);
            bool ok;
            if (ma.codim() == 0) {
                ok = mb.codim() == 0;
            } else if (mb.codim() == 0) {
                ok = true;
            } else {
                RankTracker tracker(ma.codim() + mb.codim());
                ok = true;
                for (int pi = 0; pi < ma.monomial_count(); ++pi) {
                    RationalVector ra = ma.row(pi);
                    RationalVector rb = mb.row(pi);
                    ra.insert(ra.end(), rb.begin(), rb.end());
                    tracker.add_row(std::move(ra));
                    if (tracker.rank() > ma.codim()) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) {
                ok_n = false;
                report.contained = false;
                if (!report.witness) report.witness = md;
                break;
            }
        }
        report.per_n.emplace_back(n, ok_n);
    }
    return report;
}

int block_index(const FiniteAbelianGroup& group, const GroupElement& g, int sign) {
    return 2 * group.element_index(g) + (sign < 0 ? 1 : 0);
}

Multipartition make_multipartition(
    const FiniteAbelianGroup& group,
    const std::vector<std::tuple<GroupElement, int, Partition>>& blocks) {
    Multipartition mla(2 * group.order());
    for (const auto& [g, sign, p] : blocks) mla[block_index(group, g, sign)] = p;
    return mla;
}

MultiDegree multidegree_of(const FiniteAbelianGroup& group, const Multipartition& mla) {
    if (static_cast<int>(mla.size()) != 2 * group.order())
        throw InvalidArgument("multipartition must have 2|G| blocks");
    MultiDegree md;
    md.counts.resize(mla.size());
    for (std::size_t b = 0; b < mla.size(); ++b) md.counts[b] = partition_weight(mla[b]);
    return md;
}

std::string multipartition_str(const Multipartition& mla, const FiniteAbelianGroup& group,
                               const std::map<std::string, GroupElement>& names) {
    std::vector<GroupElement> elems = group.all_elements();
    std::string out;
    for (std::size_t b = 0; b < mla.size(); ++b) {
        if (mla[b].empty()) continue;
        if (!out.empty()) out += "|";
        out += "(";
        for (std::size_t i = 0; i < mla[b].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(mla[b][i]);
        }
        out += ")_";
        const GroupElement& g = elems[b / 2];
        if (group.is_identity(g)) {
            out += "1";
        } else {
            std::string named;
            for (const auto& [name, elem] : names)
                if (elem == g) {
                    named = name;
                    break;
                }
            out += named.empty() ? group.format_element(g) : named;
        }
        out += b % 2 == 0 ? "+" : "-";
    }
    return out.empty() ? "()" : out;
}

} // namespace gstar
