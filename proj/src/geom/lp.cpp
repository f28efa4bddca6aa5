#include "ncpoly/geom/lp.hpp"

#include <stdexcept>

namespace ncpoly::geom {
namespace {

// Dense tableau. Column `width` holds the right-hand side; `cost` holds the
// reduced costs with -objective in its last slot.
class Tableau {
 public:
  Tableau(std::vector<RatVec> rows, std::vector<std::size_t> basis, std::size_t width)
      : rows_(std::move(rows)), basis_(std::move(basis)), width_(width) {}

  void set_costs(const RatVec& c) {
    cost_.assign(width_ + 1, Rat(0));
    for (std::size_t j = 0; j < width_; ++j) cost_[j] = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rat& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (sgn(rows_[i][j]) != 0) cost_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Bland's rule; false when unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t j = 0; j < width_; ++j) {
        if (allowed[j] && sgn(cost_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) return true;
      std::size_t leave = rows_.size();
      Rat best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rat ratio = rows_[i][width_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t p, std::size_t e) {
    RatVec& prow = rows_[p];
    const Rat inv = 1 / prow[e];
    for (std::size_t j = 0; j <= width_; ++j) {
      if (sgn(prow[j]) != 0) prow[j] *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (sgn(prow[j]) != 0) nz.push_back(j);
    }
    auto eliminate = [&](RatVec& row) {
      if (sgn(row[e]) == 0) return;
      const Rat f = row[e];
      for (std::size_t j : nz) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != p) eliminate(rows_[i]);
    }
    if (!cost_.empty()) eliminate(cost_);
    basis_[p] = e;
  }

  std::vector<RatVec>& rows() { return rows_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const RatVec& cost() const { return cost_; }
  std::size_t width() const { return width_; }

  RatVec solution(std::size_t n) const {
    RatVec y(n, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n) y[basis_[i]] = rows_[i][width_];
    }
    return y;
  }

 private:
  std::vector<RatVec> rows_;
  std::vector<std::size_t> basis_;
  std::size_t width_;
  RatVec cost_;
};

}  // namespace

LpResult solve_standard_form(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("simplex: rhs length mismatch");
  for (const RatVec& row : a) {
    if (row.size() != n) throw std::invalid_argument("simplex: row length mismatch");
  }

  // Phase 1 with one artificial per row.
  const std::size_t width = n + m;
  std::vector<RatVec> rows(m, RatVec(width + 1, Rat(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = flip ? Rat(-a[i][j]) : a[i][j];
    rows[i][n + i] = 1;
    rows[i][width] = flip ? Rat(-b[i]) : b[i];
    basis[i] = n + i;
  }
  Tableau t(std::move(rows), std::move(basis), width);
  RatVec phase1(width, Rat(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.set_costs(phase1);
  std::vector<bool> allowed(width, true);
  t.optimize(allowed);
  if (sgn(t.cost()[width]) > 0) return {LpStatus::kInfeasible, {}, {}};

  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows().size();) {
    if (t.basis()[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(t.rows()[i][j]) != 0) {
        col = j;
        break;
      }
    }
    if (col == n) {
      t.rows().erase(t.rows().begin() + static_cast<long>(i));
      t.basis().erase(t.basis().begin() + static_cast<long>(i));
      continue;
    }
    t.pivot(i, col);
    ++i;
  }

  RatVec phase2(width, Rat(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  t.set_costs(phase2);
  for (std::size_t j = n; j < width; ++j) allowed[j] = false;
  if (!t.optimize(allowed)) return {LpStatus::kUnbounded, {}, {}};
  return {LpStatus::kOptimal, t.solution(n), Rat(-t.cost()[width])};
}

namespace {

struct StandardForm {
  std::vector<RatVec> a;
  RatVec b;
  std::size_t columns = 0;
  std::size_t slack_begin = 0;
  std::size_t t_column = 0;  // only meaningful with strict constraints
};

StandardForm build(std::span<const Constraint> constraints, std::size_t dim, bool strict_var) {
  std::size_t slacks = 0;
  for (const Constraint& k : constraints) {
    if (k.coeffs.size() != dim) throw std::invalid_argument("constraint dimension mismatch");
    if (k.sense != Sense::kEqual) ++slacks;
  }
  StandardForm sf;
  sf.slack_begin = 2 * dim;
  sf.t_column = 2 * dim + slacks;
  sf.columns = sf.t_column + (strict_var ? 2 : 0);  // t and its upper-bound slack
  std::size_t s = sf.slack_begin;
  for (const Constraint& k : constraints) {
    RatVec row(sf.columns, Rat(0));
    for (std::size_t i = 0; i < dim; ++i) {
      row[2 * i] = k.coeffs[i];
      row[2 * i + 1] = -k.coeffs[i];
    }
    switch (k.sense) {
      case Sense::kLessEqual: row[s++] = 1; break;
      case Sense::kGreaterEqual: row[s++] = -1; break;
      case Sense::kLess:
        row[s++] = 1;
        row[sf.t_column] = 1;
        break;
      case Sense::kGreater:
        row[s++] = -1;
        row[sf.t_column] = -1;
        break;
      case Sense::kEqual: break;
    }
    sf.a.push_back(std::move(row));
    sf.b.push_back(k.rhs);
  }
  if (strict_var) {
    RatVec row(sf.columns, Rat(0));
    row[sf.t_column] = 1;
    row[sf.t_column + 1] = 1;
    sf.a.push_back(std::move(row));
    sf.b.push_back(Rat(1));
  }
  return sf;
}

RatVec recover(const RatVec& y, std::size_t dim) {
  RatVec x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = y[2 * i] - y[2 * i + 1];
  return x;
}

}  // namespace

LpResult lp_maximize(const RatVec& objective, std::span<const Constraint> constraints,
                     std::size_t dim) {
  if (objective.size() != dim) throw std::invalid_argument("objective dimension mismatch");
  for (const Constraint& k : constraints) {
    if (k.sense == Sense::kLess || k.sense == Sense::kGreater) {
      throw std::invalid_argument("lp_maximize: strict constraints are not supported");
    }
  }
  StandardForm sf = build(constraints, dim, false);
  RatVec c(sf.columns, Rat(0));
  for (std::size_t i = 0; i < dim; ++i) {
    c[2 * i] = objective[i];
    c[2 * i + 1] = -objective[i];
  }
  LpResult r = solve_standard_form(sf.a, sf.b, c);
  if (r.status == LpStatus::kOptimal) r.x = recover(r.x, dim);
  return r;
}

std::optional<RatVec> lp_feasible(std::span<const Constraint> constraints, std::size_t dim) {
  bool strict = false;
  for (const Constraint& k : constraints) {
    strict = strict || k.sense == Sense::kLess || k.sense == Sense::kGreater;
  }
  StandardForm sf = build(constraints, dim, strict);
  RatVec c(sf.columns, Rat(0));
  if (strict) c[sf.t_column] = 1;
  LpResult r = solve_standard_form(sf.a, sf.b, c);
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  if (strict && sgn(r.x[sf.t_column]) <= 0) return std::nullopt;
  return recover(r.x, dim);
}

}  // namespace ncpoly::geom
