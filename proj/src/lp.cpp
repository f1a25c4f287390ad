#include "ktrail/lp.hpp"

#include <algorithm>
#include <sstream>

#include "ktrail/errors.hpp"

namespace ktrail {

void LpProblem::check() const {
    if (objective.size() != num_vars) throw UsageError("objective length differs from variable count");
    if (!var_names.empty() && var_names.size() != num_vars) throw UsageError("one name per variable required");
    for (const LpRow& row : rows) {
        std::vector<bool> seen(num_vars, false);
        for (const auto& [j, a] : row.coef) {
            if (j >= num_vars) throw UsageError("row '" + row.name + "' references an unknown variable");
            if (seen[j]) throw UsageError("row '" + row.name + "' repeats a variable");
            seen[j] = true;
        }
    }
}

const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

std::size_t rational_rank(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& sparse,
                          std::size_t num_cols) {
    std::vector<std::vector<Rational>> m;
    m.reserve(sparse.size());
    for (const auto& row : sparse) {
        std::vector<Rational> dense(num_cols);
        for (const auto& [j, a] : row) dense.at(j) += a;
        m.push_back(std::move(dense));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < num_cols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < num_cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

Rational row_activity(const LpRow& row, const std::vector<Rational>& x) {
    Rational s = 0;
    for (const auto& [j, a] : row.coef) s += a * x[j];
    return s;
}

bool satisfied(const LpRow& row, const Rational& lhs) {
    switch (row.sense) {
        case RowSense::LessEqual: return lhs <= row.rhs;
        case RowSense::Equal: return lhs == row.rhs;
        case RowSense::GreaterEqual: return lhs >= row.rhs;
    }
    return false;
}

// Dense tableau over the normalised system: every row has rhs >= 0, <= rows
// own a slack, >= rows a surplus and an artificial, = rows an artificial.
class Tableau {
public:
    explicit Tableau(const LpProblem& p) : p_(p), m_(p.rows.size()), n_(p.num_vars) {
        flipped_.assign(m_, false);
        sense_.resize(m_);
        slack_col_.assign(m_, npos);
        art_col_.assign(m_, npos);
        std::size_t col = n_;
        for (std::size_t i = 0; i < m_; ++i) {
            RowSense s = p.rows[i].sense;
            if (p.rows[i].rhs < 0) {
                flipped_[i] = true;
                if (s == RowSense::LessEqual) {
                    s = RowSense::GreaterEqual;
                } else if (s == RowSense::GreaterEqual) {
                    s = RowSense::LessEqual;
                }
            }
            sense_[i] = s;
            if (s != RowSense::Equal) slack_col_[i] = col++;
        }
        first_art_ = col;
        for (std::size_t i = 0; i < m_; ++i) {
            if (sense_[i] != RowSense::LessEqual) art_col_[i] = col++;
        }
        cols_ = col;

        t_.assign(m_, std::vector<Rational>(cols_));
        b_.resize(m_);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational sign = flipped_[i] ? -1 : 1;
            for (const auto& [j, a] : p.rows[i].coef) t_[i][j] = sign * a;
            b_[i] = sign * p.rows[i].rhs;
            if (sense_[i] == RowSense::LessEqual) t_[i][slack_col_[i]] = 1;
            if (sense_[i] == RowSense::GreaterEqual) t_[i][slack_col_[i]] = -1;
            if (art_col_[i] != npos) t_[i][art_col_[i]] = 1;
            basis_[i] = art_col_[i] != npos ? art_col_[i] : slack_col_[i];
        }
    }

    bool has_artificials() const { return first_art_ < cols_; }

    void set_costs(const std::vector<Rational>& c) {
        cost_ = c;
        d_ = c;
        obj_ = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& cb = cost_[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) d_[j] -= cb * t_[i][j];
            obj_ += cb * b_[i];
        }
    }

    std::vector<Rational> phase1_costs() const {
        std::vector<Rational> c(cols_);
        for (std::size_t j = first_art_; j < cols_; ++j) c[j] = 1;
        return c;
    }

    std::vector<Rational> phase2_costs() const {
        std::vector<Rational> c(cols_);
        for (std::size_t j = 0; j < n_; ++j) c[j] = p_.objective[j];
        return c;
    }

    // Runs Bland pivots until optimal; returns the unbounded column if any.
    std::optional<std::size_t> optimize(bool allow_artificial_entry) {
        while (true) {
            std::size_t q = npos;
            const std::size_t limit = allow_artificial_entry ? cols_ : first_art_;
            for (std::size_t j = 0; j < limit; ++j) {
                if (d_[j] < 0) {
                    q = j;
                    break;
                }
            }
            if (q == npos) return std::nullopt;
            std::size_t r = npos;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_[i][q] <= 0) continue;
                Rational ratio = b_[i] / t_[i][q];
                if (r == npos || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
                    r = i;
                    best = ratio;
                }
            }
            if (r == npos) return q;
            pivot(r, q);
        }
    }

    void pivot(std::size_t r, std::size_t q) {
        ++pivots_;
        const Rational inv = 1 / t_[r][q];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (t_[r][j] != 0) {
                t_[r][j] *= inv;
                nz.push_back(j);
            }
        }
        b_[r] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || t_[i][q] == 0) continue;
            const Rational f = t_[i][q];
            for (std::size_t j : nz) t_[i][j] -= f * t_[r][j];
            b_[i] -= f * b_[r];
        }
        if (d_[q] != 0) {
            const Rational f = d_[q];
            for (std::size_t j : nz) d_[j] -= f * t_[r][j];
            obj_ += f * b_[r];
        }
        basis_[r] = q;
    }

    // Pivots basic artificials at level zero out of the basis where possible.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < first_art_) continue;
            for (std::size_t j = 0; j < first_art_; ++j) {
                if (t_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    std::vector<Rational> primal(std::size_t upto) const {
        std::vector<Rational> x(upto);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < upto) x[basis_[i]] = b_[i];
        }
        return x;
    }

    // Row multipliers recovered from reduced costs, mapped back to the caller's rows.
    std::vector<Rational> duals() const {
        std::vector<Rational> y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rational pi;
            if (sense_[i] == RowSense::LessEqual) {
                pi = cost_[slack_col_[i]] - d_[slack_col_[i]];
            } else {
                pi = cost_[art_col_[i]] - d_[art_col_[i]];
            }
            y[i] = flipped_[i] ? -pi : pi;
        }
        return y;
    }

    // Direction of the unbounded edge along entering column q.
    std::vector<Rational> ray(std::size_t q) const {
        std::vector<Rational> r(n_);
        if (q < n_) r[q] = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) r[basis_[i]] = -t_[i][q];
        }
        return r;
    }

    const Rational& objective() const { return obj_; }
    std::size_t pivots() const { return pivots_; }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const LpProblem& p_;
    std::size_t m_, n_, cols_ = 0, first_art_ = 0;
    std::vector<bool> flipped_;
    std::vector<RowSense> sense_;
    std::vector<std::size_t> slack_col_, art_col_;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> b_, cost_, d_;
    Rational obj_;
    std::vector<std::size_t> basis_;
    std::size_t pivots_ = 0;
};

void check_farkas(const LpProblem& p, const std::vector<Rational>& y) {
    std::vector<Rational> aty(p.num_vars);
    Rational by = 0;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        const LpRow& row = p.rows[i];
        if (row.sense == RowSense::LessEqual && y[i] > 0) throw InvariantViolation("Farkas sign on <= row");
        if (row.sense == RowSense::GreaterEqual && y[i] < 0) throw InvariantViolation("Farkas sign on >= row");
        for (const auto& [j, a] : row.coef) aty[j] += a * y[i];
        by += row.rhs * y[i];
    }
    for (const Rational& v : aty) {
        if (v > 0) throw InvariantViolation("Farkas certificate has a positive column");
    }
    if (by <= 0) throw InvariantViolation("Farkas certificate does not separate");
}

void check_ray(const LpProblem& p, const std::vector<Rational>& origin, const std::vector<Rational>& r) {
    Rational slope = 0;
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        if (r[j] < 0 || origin[j] < 0) throw InvariantViolation("ray leaves the nonnegative orthant");
        slope += p.objective[j] * r[j];
    }
    if (slope >= 0) throw InvariantViolation("ray does not decrease the objective");
    for (const LpRow& row : p.rows) {
        if (!satisfied(row, row_activity(row, origin))) throw InvariantViolation("ray origin infeasible");
        Rational dir = row_activity(row, r);
        bool ok = row.sense == RowSense::Equal ? dir == 0 : row.sense == RowSense::LessEqual ? dir <= 0 : dir >= 0;
        if (!ok) throw InvariantViolation("ray violates row '" + row.name + "'");
    }
}

void check_optimal(const LpProblem& p, const LpBasicSolution& s, const std::vector<Rational>& y) {
    Rational cx = 0;
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        if (s.x[j] < 0) throw InvariantViolation("negative primal value");
        cx += p.objective[j] * s.x[j];
    }
    if (cx != s.objective) throw InvariantViolation("objective bookkeeping mismatch");
    std::vector<Rational> reduced = p.objective;
    Rational by = 0;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        const LpRow& row = p.rows[i];
        if (!satisfied(row, row_activity(row, s.x))) throw InvariantViolation("row '" + row.name + "' violated");
        if (row.sense == RowSense::LessEqual && y[i] > 0) throw InvariantViolation("dual sign on <= row");
        if (row.sense == RowSense::GreaterEqual && y[i] < 0) throw InvariantViolation("dual sign on >= row");
        for (const auto& [j, a] : row.coef) reduced[j] -= a * y[i];
        by += row.rhs * y[i];
    }
    for (const Rational& r : reduced) {
        if (r < 0) throw InvariantViolation("dual infeasible reduced cost");
    }
    if (by != cx) throw InvariantViolation("primal and dual objectives differ");
}

}  // namespace

LpResult simplex_solve(const LpProblem& p) {
    p.check();
    Tableau tab(p);
    LpResult out;

    if (tab.has_artificials()) {
        tab.set_costs(tab.phase1_costs());
        tab.optimize(true);
        if (tab.objective() > 0) {
            out.status = LpStatus::Infeasible;
            out.farkas = tab.duals();
            check_farkas(p, out.farkas);
            return out;
        }
        tab.expel_artificials();
    }

    tab.set_costs(tab.phase2_costs());
    if (auto q = tab.optimize(false)) {
        out.status = LpStatus::Unbounded;
        out.ray_origin = tab.primal(p.num_vars);
        out.ray = tab.ray(*q);
        check_ray(p, out.ray_origin, out.ray);
        return out;
    }

    LpBasicSolution s;
    s.x = tab.primal(p.num_vars);
    s.objective = tab.objective();
    s.pivots = tab.pivots();
    std::vector<std::vector<std::pair<std::size_t, Rational>>> tight;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        if (row_activity(p.rows[i], s.x) == p.rows[i].rhs) {
            s.tight_rows.push_back(i);
            tight.push_back(p.rows[i].coef);
        }
    }
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        if (s.x[j] == 0) {
            s.zero_vars.push_back(j);
            tight.push_back({{j, Rational(1)}});
        }
    }
    s.tight_rank = rational_rank(tight, p.num_vars);
    if (s.tight_rank != p.num_vars) throw InvariantViolation("basic solution is not a vertex");
    check_optimal(p, s, tab.duals());
    out.status = LpStatus::Optimal;
    out.solution = std::move(s);
    return out;
}

namespace {

std::string var_name(const LpProblem& p, std::size_t j) {
    return p.var_names.empty() ? "x" + std::to_string(j) : p.var_names[j];
}

void write_linear(std::ostringstream& os, const LpProblem& p, const std::vector<std::pair<std::size_t, Rational>>& terms) {
    bool first = true;
    for (const auto& [j, a] : terms) {
        if (a == 0) continue;
        if (a < 0) {
            os << (first ? "-" : " - ");
        } else if (!first) {
            os << " + ";
        }
        Rational mag = abs(a);
        if (mag != 1) os << mag.get_str() << ' ';
        os << var_name(p, j);
        first = false;
    }
    if (first) os << "0 " << (p.num_vars ? var_name(p, 0) : "x0");
}

}  // namespace

std::string render_lp(const LpProblem& p) {
    std::ostringstream os;
    os << "Minimize\n obj: ";
    std::vector<std::pair<std::size_t, Rational>> obj;
    for (std::size_t j = 0; j < p.num_vars; ++j) obj.emplace_back(j, p.objective[j]);
    write_linear(os, p, obj);
    os << "\nSubject To\n";
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        const LpRow& row = p.rows[i];
        os << ' ' << (row.name.empty() ? "r" + std::to_string(i) : row.name) << ": ";
        write_linear(os, p, row.coef);
        os << (row.sense == RowSense::LessEqual ? " <= " : row.sense == RowSense::Equal ? " = " : " >= ");
        os << row.rhs.get_str() << '\n';
    }
    os << "Bounds\n";
    for (std::size_t j = 0; j < p.num_vars; ++j) os << ' ' << var_name(p, j) << " >= 0\n";
    os << "End\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// separation

namespace {

// Edmonds-Karp on a dense capacity matrix; returns the flow value and leaves
// the residual capacities in `cap`.
Rational max_flow(std::vector<std::vector<Rational>>& cap, std::size_t s, std::size_t t) {
    const std::size_t n = cap.size();
    Rational total = 0;
    while (true) {
        std::vector<std::size_t> prev(n, n);
        prev[s] = s;
        std::vector<std::size_t> queue{s};
        for (std::size_t i = 0; i < queue.size() && prev[t] == n; ++i) {
            std::size_t a = queue[i];
            for (std::size_t b = 0; b < n; ++b) {
                if (prev[b] == n && cap[a][b] > 0) {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if (prev[t] == n) return total;
        Rational push = cap[prev[t]][t];
        for (std::size_t b = t; b != s; b = prev[b]) push = std::min(push, cap[prev[b]][b]);
        for (std::size_t b = t; b != s; b = prev[b]) {
            cap[prev[b]][b] -= push;
            cap[b][prev[b]] += push;
        }
        total += push;
    }
}

}  // namespace

Rational induced_value(const std::vector<std::pair<std::size_t, std::size_t>>& edges, const std::vector<Rational>& x,
                       const std::vector<std::size_t>& set) {
    std::size_t top = 0;
    for (std::size_t v : set) top = std::max(top, v + 1);
    for (const auto& [a, b] : edges) top = std::max({top, a + 1, b + 1});
    std::vector<bool> in(top, false);
    for (std::size_t v : set) in[v] = true;
    Rational s = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (in[edges[i].first] && in[edges[i].second]) s += x[i];
    }
    return s;
}

std::vector<SeparationResult> separate_forest_all(std::size_t num_vertices,
                                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                                 const std::vector<Rational>& x) {
    if (edges.size() != x.size()) throw UsageError("one value per edge required");
    const std::size_t n = num_vertices;
    std::vector<Rational> d(n);
    Rational finite = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (x[i] < 0) throw UsageError("separation needs x >= 0");
        const auto [a, b] = edges[i];
        if (a >= n || b >= n) throw UsageError("edge endpoint out of range");
        if (a == b) throw UsageError("separation is defined on loop-free graphs");
        d[a] += x[i];
        d[b] += x[i];
        finite += x[i];
    }
    // minimise F(S) = x(delta(S)) + sum_{v in S} (2 - d_v) over S containing the root;
    // then x(E(S)) - |S| + 1 = 1 - F(S)/2
    Rational negative_sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
        Rational c = 2 - d[v];
        finite += abs(c);
        if (c < 0) negative_sum -= c;
    }
    const Rational infinite = finite + 1;
    const std::size_t s = n, t = n + 1;

    std::vector<SeparationResult> found;
    for (std::size_t root = 0; root < n; ++root) {
        std::vector<std::vector<Rational>> cap(n + 2, std::vector<Rational>(n + 2));
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto [a, b] = edges[i];
            cap[a][b] += x[i];
            cap[b][a] += x[i];
        }
        for (std::size_t v = 0; v < n; ++v) {
            Rational c = 2 - d[v];
            if (c > 0) cap[v][t] += c;
            if (c < 0) cap[s][v] -= c;
        }
        cap[s][root] = infinite;
        Rational cut = max_flow(cap, s, t);
        Rational violation = 1 - (cut - negative_sum) / 2;
        if (violation <= 0) continue;
        // source side of the minimum cut
        std::vector<bool> seen(n + 2, false);
        std::vector<std::size_t> queue{s};
        seen[s] = true;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (std::size_t b = 0; b < n + 2; ++b) {
                if (!seen[b] && cap[queue[i]][b] > 0) {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        SeparationResult r;
        for (std::size_t v = 0; v < n; ++v) {
            if (seen[v]) r.set.push_back(v);
        }
        r.violation = violation;
        Rational check = induced_value(edges, x, r.set) - static_cast<long>(r.set.size()) + 1;
        if (check != r.violation || r.set.size() < 2) {
            throw InvariantViolation("separation cut value disagrees with the returned set");
        }
        bool duplicate = false;
        for (const auto& f : found) duplicate = duplicate || f.set == r.set;
        if (!duplicate) found.push_back(std::move(r));
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const SeparationResult& a, const SeparationResult& b) { return a.violation > b.violation; });
    return found;
}

SeparationResult separate_forest(std::size_t num_vertices,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                 const std::vector<Rational>& x) {
    auto all = separate_forest_all(num_vertices, edges, x);
    if (all.empty()) return SeparationResult{{}, Rational(0)};
    return all.front();
}

}  // namespace ktrail

namespace ktrail {

LpProblem dual_problem(const LpProblem& p) {
    p.check();
    LpProblem d;
    // one dual row per primal variable: sum_i a_ij y_i <= c_j
    std::vector<LpRow> rows(p.num_vars);
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        rows[j].sense = RowSense::LessEqual;
        rows[j].rhs = p.objective[j];
        rows[j].name = "c" + std::to_string(j);
    }
    auto add_var = [&](const LpRow& row, const Rational& sign, const Rational& obj) {
        const std::size_t v = d.num_vars++;
        d.objective.push_back(obj);
        for (const auto& [j, a] : row.coef) rows[j].coef.emplace_back(v, sign * a);
    };
    for (const LpRow& row : p.rows) {
        switch (row.sense) {
            case RowSense::LessEqual: add_var(row, -1, row.rhs); break;      // y = -z, z >= 0
            case RowSense::GreaterEqual: add_var(row, 1, -row.rhs); break;   // y >= 0
            case RowSense::Equal:
                add_var(row, 1, -row.rhs);
                add_var(row, -1, row.rhs);
                break;
        }
    }
    d.rows = std::move(rows);
    return d;
}

}  // namespace ktrail
