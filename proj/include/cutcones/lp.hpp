#ifndef CUTCONES_LP_HPP
#define CUTCONES_LP_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcones/rational.hpp"

namespace cutcones {

enum class VarSign { NonNegative, Free, NonPositive };

/// Exact rational linear program: maximize objective subject to equality
/// rows, >= rows and per-variable sign restrictions.
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<VarSign> signs;
    std::vector<std::vector<Rational>> eq_lhs;
    std::vector<Rational> eq_rhs;
    std::vector<std::vector<Rational>> ge_lhs;
    std::vector<Rational> ge_rhs;

    explicit LinearProgram(std::size_t vars)
        : objective(vars, Rational(0)), signs(vars, VarSign::NonNegative) {}

    std::size_t num_vars() const { return objective.size(); }

    void add_eq(std::vector<Rational> lhs, Rational rhs) {
        check_row(lhs);
        eq_lhs.push_back(std::move(lhs));
        eq_rhs.push_back(std::move(rhs));
    }
    void add_ge(std::vector<Rational> lhs, Rational rhs) {
        check_row(lhs);
        ge_lhs.push_back(std::move(lhs));
        ge_rhs.push_back(std::move(rhs));
    }

private:
    void check_row(const std::vector<Rational>& lhs) const {
        if (lhs.size() != num_vars()) throw std::invalid_argument("lp row has wrong length");
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* status_name(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        default: return "unbounded";
    }
}

/// Exact solver output. `primal` and `objective` are set on Optimal;
/// `ray` on Unbounded is a recession direction with positive objective gain;
/// `farkas` on Infeasible holds multipliers (equality rows first, then >=
/// rows, the latter non-negative) with farkas . rhs > 0 while every feasible
/// point would force farkas . lhs <= 0.
struct LpResult {
    LpStatus status = LpStatus::Optimal;
    Rational objective;
    std::vector<Rational> primal;
    std::vector<Rational> ray;
    std::vector<Rational> farkas;
};

namespace detail {

/// Dense rational simplex tableau. Columns are the standardized variables
/// (sign-expanded originals, then surplus, then phase-1 artificials); basis
/// changes use Bland's smallest-index rule throughout, which cannot cycle.
class SimplexTableau {
public:
    SimplexTableau(const LinearProgram& lp) : lp_(lp) {
        // Sign expansion: NonPositive mirrors, Free splits into a difference.
        for (std::size_t j = 0; j < lp.num_vars(); ++j) {
            switch (lp.signs[j]) {
                case VarSign::NonNegative: cols_.push_back({j, 1}); break;
                case VarSign::NonPositive: cols_.push_back({j, -1}); break;
                case VarSign::Free:
                    cols_.push_back({j, 1});
                    cols_.push_back({j, -1});
                    break;
            }
        }
        num_real_ = cols_.size();
        std::size_t m_eq = lp.eq_lhs.size(), m_ge = lp.ge_lhs.size();
        m_ = m_eq + m_ge;
        std::size_t total = num_real_ + m_ge + m_;  // + surplus + artificials
        a_.assign(m_, std::vector<Rational>(total, Rational(0)));
        b_.assign(m_, Rational(0));
        row_flip_.assign(m_, false);

        for (std::size_t r = 0; r < m_; ++r) {
            const auto& lhs = r < m_eq ? lp.eq_lhs[r] : lp.ge_lhs[r - m_eq];
            const auto& rhs = r < m_eq ? lp.eq_rhs[r] : lp.ge_rhs[r - m_eq];
            for (std::size_t c = 0; c < num_real_; ++c)
                a_[r][c] = lhs[cols_[c].var] * cols_[c].factor;
            if (r >= m_eq) a_[r][num_real_ + (r - m_eq)] = -1;  // surplus
            b_[r] = rhs;
            if (b_[r] < 0) {
                for (auto& v : a_[r]) v = -v;
                b_[r] = -b_[r];
                row_flip_[r] = true;
            }
            a_[r][num_real_ + m_ge + r] = 1;  // artificial
        }
        basis_.resize(m_);
        for (std::size_t r = 0; r < m_; ++r) basis_[r] = num_real_ + m_ge + r;
        first_artificial_ = num_real_ + m_ge;
    }

    LpResult solve() {
        LpResult result;

        // Phase 1: maximize -(sum of artificials).
        std::vector<Rational> cost(a_.empty() ? 0 : a_[0].size(), Rational(0));
        for (std::size_t j = first_artificial_; j < cost.size(); ++j) cost[j] = -1;
        init_reduced_costs(cost, cost.size());
        if (!run(cost.size())) throw std::logic_error("phase 1 unbounded");
        if (z0_ != 0) {
            result.status = LpStatus::Infeasible;
            result.farkas = extract_farkas();
            return result;
        }
        drive_out_artificials();

        // Phase 2 prices only the real and surplus columns.
        std::size_t active = first_artificial_;
        cost.assign(active, Rational(0));
        for (std::size_t c = 0; c < num_real_; ++c)
            cost[c] = lp_.objective[cols_[c].var] * cols_[c].factor;
        init_reduced_costs(cost, active);
        if (!run(active)) {
            result.status = LpStatus::Unbounded;
            result.ray = extract_ray();
            return result;
        }
        result.status = LpStatus::Optimal;
        result.objective = z0_;
        result.primal = extract_primal();
        return result;
    }

private:
    struct Col {
        std::size_t var;
        int factor;
    };

    void init_reduced_costs(const std::vector<Rational>& cost, std::size_t active) {
        cost_ = cost;
        red_.assign(active, Rational(0));
        z0_ = 0;
        for (std::size_t j = 0; j < active; ++j) {
            Rational v = -cost[j];
            for (std::size_t r = 0; r < m_; ++r)
                if (cost[basis_[r]] != 0) v += cost[basis_[r]] * a_[r][j];
            red_[j] = v;
        }
        for (std::size_t r = 0; r < m_; ++r)
            if (cost[basis_[r]] != 0) z0_ += cost[basis_[r]] * b_[r];
    }

    /// Bland pivoting until optimal (true) or unbounded (false).
    bool run(std::size_t active) {
        for (std::size_t iter = 0; iter < kMaxPivots; ++iter) {
            std::size_t enter = active;
            for (std::size_t j = 0; j < active; ++j)
                if (red_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == active) return true;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (a_[r][enter] <= 0) continue;
                Rational ratio = b_[r] / a_[r][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == m_) {
                unbounded_col_ = enter;
                return false;
            }
            pivot(leave, enter);
        }
        throw std::logic_error("simplex pivot limit exceeded");
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational p = a_[r][c];
        for (auto& v : a_[r]) v /= p;
        b_[r] /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || a_[i][c] == 0) continue;
            Rational f = a_[i][c];
            for (std::size_t j = 0; j < a_[i].size(); ++j)
                if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
            b_[i] -= f * b_[r];
        }
        if (red_[c] != 0) {
            Rational f = red_[c];
            for (std::size_t j = 0; j < red_.size(); ++j)
                if (a_[r][j] != 0) red_[j] -= f * a_[r][j];
            z0_ -= f * b_[r];
        }
        basis_[r] = c;
    }

    /// Pivots remaining zero-level artificials out of the basis; rows that
    /// are zero over real columns are redundant and get dropped.
    void drive_out_artificials() {
        for (std::size_t r = 0; r < m_;) {
            if (basis_[r] < first_artificial_) {
                ++r;
                continue;
            }
            std::size_t c = 0;
            while (c < first_artificial_ && a_[r][c] == 0) ++c;
            if (c == first_artificial_) {
                a_.erase(a_.begin() + r);
                b_.erase(b_.begin() + r);
                basis_.erase(basis_.begin() + r);
                --m_;
                continue;
            }
            pivot(r, c);
            ++r;
        }
    }

    std::vector<Rational> extract_primal() const {
        std::vector<Rational> std_vals(first_artificial_, Rational(0));
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < first_artificial_) std_vals[basis_[r]] = b_[r];
        std::vector<Rational> x(lp_.num_vars(), Rational(0));
        for (std::size_t c = 0; c < num_real_; ++c)
            x[cols_[c].var] += std_vals[c] * cols_[c].factor;
        return x;
    }

    std::vector<Rational> extract_ray() const {
        std::vector<Rational> dir(first_artificial_, Rational(0));
        dir[unbounded_col_] = 1;
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < first_artificial_) dir[basis_[r]] = -a_[r][unbounded_col_];
        std::vector<Rational> x(lp_.num_vars(), Rational(0));
        for (std::size_t c = 0; c < num_real_; ++c)
            x[cols_[c].var] += dir[c] * cols_[c].factor;
        return x;
    }

    /// Phase-1 duals, flipped into multipliers u (eq rows) and v >= 0
    /// (>= rows) with u.b_eq + v.b_ge > 0 although u.A_eq + v.A_ge is
    /// <= 0 on non-negative, >= 0 on non-positive and = 0 on free columns.
    std::vector<Rational> extract_farkas() const {
        std::vector<Rational> y(row_flip_.size(), Rational(0));
        for (std::size_t r = 0; r < row_flip_.size(); ++r) {
            // reduced cost of artificial column r is y_r - cost(= -1)
            y[r] = red_[first_artificial_ + r] - 1;
            if (row_flip_[r]) y[r] = -y[r];
            y[r] = -y[r];
        }
        return y;
    }

    static constexpr std::size_t kMaxPivots = 200000;

    const LinearProgram& lp_;
    std::vector<Col> cols_;
    std::size_t num_real_ = 0;
    std::size_t m_ = 0;
    std::size_t first_artificial_ = 0;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::vector<bool> row_flip_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> cost_;
    std::vector<Rational> red_;
    Rational z0_;
    std::size_t unbounded_col_ = 0;
};

} // namespace detail

/// Two-phase primal simplex over exact rationals with Bland's anti-cycling
/// rule. No floating point, no tolerances.
inline LpResult solve_lp(const LinearProgram& lp) {
    if (lp.num_vars() == 0) throw std::invalid_argument("solve_lp: no variables");
    return detail::SimplexTableau(lp).solve();
}

/// Plain-text dump, one constraint per line, rationals as p/q.
inline std::string dump_lp(const LinearProgram& lp) {
    std::ostringstream out;
    auto row = [&](const std::vector<Rational>& r) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) out << " ";
            out << format_rational(r[j]);
        }
    };
    out << "vars " << lp.num_vars() << "\n";
    out << "max ";
    row(lp.objective);
    out << "\n";
    for (std::size_t j = 0; j < lp.num_vars(); ++j) {
        out << "sign " << j << " ";
        switch (lp.signs[j]) {
            case VarSign::NonNegative: out << "nonneg"; break;
            case VarSign::NonPositive: out << "nonpos"; break;
            case VarSign::Free: out << "free"; break;
        }
        out << "\n";
    }
    for (std::size_t r = 0; r < lp.eq_lhs.size(); ++r) {
        out << "eq ";
        row(lp.eq_lhs[r]);
        out << " = " << format_rational(lp.eq_rhs[r]) << "\n";
    }
    for (std::size_t r = 0; r < lp.ge_lhs.size(); ++r) {
        out << "ge ";
        row(lp.ge_lhs[r]);
        out << " >= " << format_rational(lp.ge_rhs[r]) << "\n";
    }
    return out.str();
}

} // namespace cutcones

#endif // CUTCONES_LP_HPP
