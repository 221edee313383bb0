#include "qfock/rep.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qfock/errors.hpp"

namespace qfock {

using Cyc = CyclotomicNumber;

const GeneratorAction& ModuleReport::e_div(std::int64_t r) const {
    if (r < 1 || r > max_divided_power) throw std::out_of_range("e^(r) order out of range");
    return e_actions[static_cast<size_t>(r - 1)];
}

const GeneratorAction& ModuleReport::f_div(std::int64_t r) const {
    if (r < 1 || r > max_divided_power) throw std::out_of_range("f^(r) order out of range");
    return f_actions[static_cast<size_t>(r - 1)];
}

std::string ModuleReport::kind_str() const {
    if (kind == Kind::Weyl) return "weyl(m=" + std::to_string(m) + ")";
    return "infinite(s=" + std::to_string(s) + ", window=" + std::to_string(window) + ")";
}

namespace {

std::int64_t leading_index(const std::vector<Cyc>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) return static_cast<std::int64_t>(i);
    }
    return -1;
}

// v -= c * w
void eliminate(std::vector<Cyc>& v, const Cyc& c, const std::vector<Cyc>& w) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (!w[i].is_zero()) v[i] -= c * w[i];
    }
}

} // namespace

bool SubspaceBasis::contains(std::vector<Cyc> v) const {
    for (size_t k = 0; k < rows.size(); ++k) {
        const Cyc c = v[static_cast<size_t>(pivots[k])];
        if (!c.is_zero()) eliminate(v, c, rows[k]);
    }
    return leading_index(v) < 0;
}

bool SubspaceBasis::insert(std::vector<Cyc> v) {
    for (size_t k = 0; k < rows.size(); ++k) {
        const Cyc c = v[static_cast<size_t>(pivots[k])];
        if (!c.is_zero()) eliminate(v, c, rows[k]);
    }
    const std::int64_t piv = leading_index(v);
    if (piv < 0) return false;
    const Cyc inv = v[static_cast<size_t>(piv)].invert();
    for (auto& x : v) x *= inv;
    for (auto& row : rows) {
        const Cyc c = row[static_cast<size_t>(piv)];
        if (!c.is_zero()) eliminate(row, c, v);
    }
    const auto pos = std::upper_bound(pivots.begin(), pivots.end(), piv) - pivots.begin();
    pivots.insert(pivots.begin() + pos, piv);
    rows.insert(rows.begin() + pos, std::move(v));
    return true;
}

namespace {

// Closed-form matrix entry coefficients, memoized through the Pascal-type
// binomial table (the cross-checks below go through the independent
// product-formula route in act()).
struct ActionShape {
    // generic-q coefficient of e^(r): index j -> j - r (valid when j >= r)
    std::function<LaurentPoly(std::int64_t j, std::int64_t r)> e_coeff;
    // generic-q coefficient of f^(r): index j -> j + r
    std::function<LaurentPoly(std::int64_t j, std::int64_t r)> f_coeff;
    // f images beyond the basis exist in the ambient Fock space (infinite
    // kind); for the Weyl module they are genuine zeros.
    bool f_overflow_is_window_exit = false;
};

void build_actions(ModuleReport& rep, const ActionShape& shape) {
    const std::int64_t dim = rep.dim();
    rep.max_divided_power = std::max(rep.p, dim);
    for (std::int64_t r = 1; r <= rep.max_divided_power; ++r) {
        GeneratorAction e{"e^(" + std::to_string(r) + ")", SparseMatrix{dim, {}}, {}};
        GeneratorAction f{"f^(" + std::to_string(r) + ")", SparseMatrix{dim, {}}, {}};
        e.matrix.cols.resize(static_cast<size_t>(dim));
        f.matrix.cols.resize(static_cast<size_t>(dim));
        e.exits_window.assign(static_cast<size_t>(dim), 0);
        f.exits_window.assign(static_cast<size_t>(dim), 0);
        for (std::int64_t j = 0; j < dim; ++j) {
            if (j - r >= 0) {
                Cyc c = specialize(shape.e_coeff(j, r), rep.ctx);
                if (!c.is_zero()) {
                    if (rep.weights[static_cast<size_t>(j - r)].lambda !=
                        rep.weights[static_cast<size_t>(j)].lambda + 2 * r) {
                        throw std::logic_error("action matrix not weight-graded");
                    }
                    e.matrix.cols[static_cast<size_t>(j)].emplace_back(j - r, std::move(c));
                }
            }
            Cyc c = specialize(shape.f_coeff(j, r), rep.ctx);
            if (!c.is_zero()) {
                if (j + r < dim) {
                    f.matrix.cols[static_cast<size_t>(j)].emplace_back(j + r, std::move(c));
                } else if (shape.f_overflow_is_window_exit) {
                    f.exits_window[static_cast<size_t>(j)] = 1;
                }
            }
        }
        rep.e_actions.push_back(std::move(e));
        rep.f_actions.push_back(std::move(f));
    }
    rep.k_diagonal.reserve(static_cast<size_t>(dim));
    rep.kzero_diagonal.reserve(static_cast<size_t>(dim));
    for (std::int64_t j = 0; j < dim; ++j) {
        rep.k_diagonal.push_back(Cyc::root_power(rep.weights[static_cast<size_t>(j)].lambda, rep.ctx));
        rep.kzero_diagonal.push_back(rep.weights[static_cast<size_t>(j)].d.n1);
    }
}

// The named generators {e, f, e^(p), f^(p), K} are checked entry by entry
// against the Fock-space action on the embedded labels, which evaluates its
// binomials through the independent product-formula route.
void cross_check_named(const ModuleReport& rep) {
    const int which = rep.kind == ModuleReport::Kind::Weyl ? 1 : 2;
    std::map<FockLabel, std::int64_t> index_of;
    for (std::int64_t j = 0; j < rep.dim(); ++j) index_of.emplace(rep.basis[static_cast<size_t>(j)], j);

    auto compare = [&](const UGenerator& g, const GeneratorAction& action) {
        for (std::int64_t j = 0; j < rep.dim(); ++j) {
            const RootFockVector image =
                act(g, root_basis(rep.basis[static_cast<size_t>(j)], rep.ctx), which);
            std::map<std::int64_t, Cyc> expected;
            bool overflow = false;
            for (const auto& [label, c] : image.terms) {
                auto it = index_of.find(label);
                if (it == index_of.end()) {
                    overflow = true; // image beyond the window
                    continue;
                }
                expected.emplace(it->second, c);
            }
            const auto& col = action.matrix.cols[static_cast<size_t>(j)];
            if (col.size() != expected.size()) {
                throw std::logic_error("action cross-check failed for " + g.str() + " at " +
                                       rep.basis[static_cast<size_t>(j)].str());
            }
            for (const auto& [i, c] : col) {
                auto it = expected.find(i);
                if (it == expected.end() || !(it->second == c)) {
                    throw std::logic_error("action cross-check failed for " + g.str() + " at " +
                                           rep.basis[static_cast<size_t>(j)].str());
                }
            }
            const bool flagged =
                !action.exits_window.empty() && action.exits_window[static_cast<size_t>(j)] != 0;
            if (overflow != flagged) {
                throw std::logic_error("window-exit flag mismatch for " + g.str() + " at " +
                                       rep.basis[static_cast<size_t>(j)].str());
            }
        }
    };

    compare(UGenerator::e(), rep.e_div(1));
    compare(UGenerator::f(), rep.f_div(1));
    compare(UGenerator::e_divided(rep.p), rep.e_div(rep.p));
    compare(UGenerator::f_divided(rep.p), rep.f_div(rep.p));
    for (std::int64_t j = 0; j < rep.dim(); ++j) {
        const RootFockVector image =
            act(UGenerator::k(), root_basis(rep.basis[static_cast<size_t>(j)], rep.ctx), which);
        if (image.terms.size() != 1 ||
            !(image.terms.begin()->second == rep.k_diagonal[static_cast<size_t>(j)])) {
            throw std::logic_error("K cross-check failed at " +
                                   rep.basis[static_cast<size_t>(j)].str());
        }
        const RootFockVector kz =
            act(UGenerator::kzero(rep.p), root_basis(rep.basis[static_cast<size_t>(j)], rep.ctx),
                which);
        const Cyc expect = Cyc::from_rational(BigRat(rep.kzero_diagonal[static_cast<size_t>(j)]),
                                              rep.ctx);
        const bool zero_expected = expect.is_zero();
        if ((zero_expected && !kz.terms.empty()) ||
            (!zero_expected && (kz.terms.size() != 1 || !(kz.terms.begin()->second == expect)))) {
            throw std::logic_error("[K;0;p] cross-check failed at " +
                                   rep.basis[static_cast<size_t>(j)].str());
        }
    }
}

void validate_submodule_closed(const ModuleReport& rep) {
    std::vector<char> member(static_cast<size_t>(rep.dim()), 0);
    for (std::int64_t j : rep.maximal_submodule) member[static_cast<size_t>(j)] = 1;
    auto check = [&](const GeneratorAction& action) {
        for (std::int64_t j : rep.maximal_submodule) {
            for (const auto& [i, c] : action.matrix.cols[static_cast<size_t>(j)]) {
                if (!member[static_cast<size_t>(i)]) {
                    throw std::logic_error("claimed submodule is not closed: " + action.name +
                                           " maps index " + std::to_string(j) + " to " +
                                           std::to_string(i));
                }
            }
        }
    };
    for (const auto& a : rep.e_actions) check(a);
    for (const auto& a : rep.f_actions) check(a);
}

// Null space of the linear map given by `rows` (each row one constraint over
// ncols unknowns), as a list of kernel basis vectors.
std::vector<std::vector<Cyc>> null_space(std::vector<std::vector<Cyc>> rows, size_t ncols,
                                         const CycloContextPtr& ctx) {
    std::vector<std::int64_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t sel = rows.size();
        for (size_t r = rank; r < rows.size(); ++r) {
            if (!rows[r][col].is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const Cyc inv = rows[rank][col].invert();
        for (auto& x : rows[rank]) x *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const Cyc c = rows[r][col];
            eliminate(rows[r], c, rows[rank]);
        }
        pivot_col.push_back(static_cast<std::int64_t>(col));
        ++rank;
    }
    std::vector<char> is_pivot(ncols, 0);
    for (auto c : pivot_col) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<std::vector<Cyc>> kernel;
    for (size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        // x[free] = 1, x[pivot_col[r]] = -rows[r][free]
        std::vector<Cyc> v(ncols);
        v[free_col] = Cyc::one(ctx);
        for (size_t r = 0; r < rank; ++r) {
            v[static_cast<size_t>(pivot_col[r])] = -rows[r][free_col];
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace

std::vector<HighestWeightVector> find_highest_weight_vectors(const ModuleReport& rep) {
    std::map<std::int64_t, std::vector<std::int64_t>> groups;
    for (std::int64_t j = 0; j < rep.dim(); ++j) {
        groups[rep.weights[static_cast<size_t>(j)].lambda].push_back(j);
    }
    std::vector<HighestWeightVector> out;
    for (const auto& [lambda, members] : groups) {
        std::vector<std::vector<Cyc>> constraints;
        for (const GeneratorAction* action : {&rep.e_div(1), &rep.e_div(rep.p)}) {
            std::map<std::int64_t, std::vector<Cyc>> by_target;
            for (size_t jj = 0; jj < members.size(); ++jj) {
                for (const auto& [i, c] : action->matrix.cols[static_cast<size_t>(members[jj])]) {
                    auto [it, _] = by_target.try_emplace(i, std::vector<Cyc>(members.size()));
                    it->second[jj] += c;
                }
            }
            for (auto& [i, row] : by_target) constraints.push_back(std::move(row));
        }
        for (const auto& kv : null_space(std::move(constraints), members.size(), rep.ctx)) {
            std::int64_t found = -1;
            int support = 0;
            for (size_t jj = 0; jj < members.size(); ++jj) {
                if (!kv[jj].is_zero()) {
                    found = members[jj];
                    ++support;
                }
            }
            if (support != 1) {
                throw std::logic_error("weight spaces here are one-dimensional; kernel vector "
                                       "with support " + std::to_string(support));
            }
            out.push_back({found, rep.weights[static_cast<size_t>(found)]});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.index < b.index; });
    return out;
}

std::vector<std::int64_t> weyl_maximal_submodule(std::int64_t p, std::int64_t m) {
    require_valid_p(p);
    if (m < 0) throw UsageError("Weyl module parameter m must be nonnegative");
    const Digits md = digits(m, p);
    std::vector<std::int64_t> out;
    for (std::int64_t r = 0; r <= m; ++r) {
        const Digits rd = digits(r, p);
        if (md.n0 < rd.n0 && rd.n0 < p && rd.n1 < md.n1) out.push_back(r);
    }
    return out;
}

ModuleReport weyl_module(std::int64_t p, std::int64_t m) {
    require_valid_p(p);
    if (m < 0) throw UsageError("Weyl module parameter m must be nonnegative");
    ModuleReport rep;
    rep.kind = ModuleReport::Kind::Weyl;
    rep.p = p;
    rep.m = m;
    rep.ctx = make_cyclo_context(p);
    for (std::int64_t i = 0; i <= m; ++i) {
        rep.basis.push_back(FockLabel{FockSpace::F1, m - i, i});
        rep.weights.push_back(weight_digits(m - 2 * i, p));
    }

    auto table = std::make_shared<QBinomialTable>();
    ActionShape shape;
    shape.e_coeff = [table, m](std::int64_t j, std::int64_t r) { return table->at(r + m - j, r); };
    shape.f_coeff = [table](std::int64_t j, std::int64_t r) { return table->at(r + j, r); };
    shape.f_overflow_is_window_exit = false; // images past v_m are genuine zeros
    build_actions(rep, shape);
    cross_check_named(rep);

    // The closed action displays on the v_r basis, as an extra dual route:
    // e -> [m-r+1], f -> [r+1], e^(p) -> (m-r)_1 + 1, f^(p) -> r_1 + 1.
    for (std::int64_t j = 0; j <= m; ++j) {
        auto expect_single = [&](const GeneratorAction& a, std::int64_t target, const Cyc& value) {
            const auto& col = a.matrix.cols[static_cast<size_t>(j)];
            const bool absent = target < 0 || target > m || value.is_zero();
            if (absent) {
                if (!col.empty()) throw std::logic_error("Weyl display check: expected zero");
                return;
            }
            if (col.size() != 1 || col[0].first != target || !(col[0].second == value)) {
                throw std::logic_error("Weyl display check failed at v_" + std::to_string(j));
            }
        };
        expect_single(rep.e_div(1), j - 1, specialize(q_int(m - j + 1), rep.ctx));
        expect_single(rep.f_div(1), j + 1, specialize(q_int(j + 1), rep.ctx));
        expect_single(rep.e_div(p), j - p,
                      Cyc::from_rational(BigRat(digits(m - j, p).n1 + 1), rep.ctx));
        expect_single(rep.f_div(p), j + p,
                      Cyc::from_rational(BigRat(digits(j, p).n1 + 1), rep.ctx));
    }

    rep.maximal_submodule = weyl_maximal_submodule(p, m);
    validate_submodule_closed(rep);
    rep.highest_weight_vectors = find_highest_weight_vectors(rep);

    const Digits md = digits(m, p);
    const std::int64_t head_dim = (md.n0 + 1) * (md.n1 + 1);
    if (rep.maximal_submodule.empty()) {
        rep.classifications.push_back({"module", m, 0, m + 1});
    } else {
        rep.classifications.push_back({"quotient by maximal submodule", m, 0, head_dim});
    }
    return rep;
}

ModuleReport infinite_module(std::int64_t p, std::int64_t s, std::int64_t window) {
    require_valid_p(p);
    if (window < 4 * p) {
        throw WindowTooSmallError("window " + std::to_string(window) + " is too small; need >= 4p = " +
                                  std::to_string(4 * p));
    }
    ModuleReport rep;
    rep.kind = ModuleReport::Kind::Infinite;
    rep.p = p;
    rep.s = s;
    rep.window = window;
    rep.ctx = make_cyclo_context(p);
    const std::int64_t abs_s = s < 0 ? -s : s;
    for (std::int64_t i = 0; i <= window; ++i) {
        const FockLabel label = s >= 0 ? FockLabel{FockSpace::F2, i, i + s}
                                       : FockLabel{FockSpace::F2, i + abs_s, i};
        rep.basis.push_back(label);
        rep.weights.push_back(weight_digits(-(2 * i + abs_s + 1), p));
    }

    auto table = std::make_shared<QBinomialTable>();
    ActionShape shape;
    if (s >= 0) {
        shape.e_coeff = [table, s](std::int64_t j, std::int64_t r) {
            return table->at(j + s, j + s - r);
        };
    } else {
        shape.e_coeff = [table](std::int64_t j, std::int64_t r) { return table->at(j, j - r); };
    }
    shape.f_coeff = [table, s, abs_s](std::int64_t j, std::int64_t r) {
        const std::int64_t r1 = s >= 0 ? j : j + abs_s;
        LaurentPoly c = table->at(r + r1, r);
        return r % 2 == 0 ? c : -c;
    };
    shape.f_overflow_is_window_exit = true;
    build_actions(rep, shape);
    cross_check_named(rep);

    for (std::int64_t j = 0; j <= window; ++j) {
        const bool exits = rep.f_div(1).exits_window[static_cast<size_t>(j)] != 0 ||
                           rep.f_div(p).exits_window[static_cast<size_t>(j)] != 0;
        if (exits) rep.boundary_flags.push_back(j);
    }

    const Digits sd = digits(abs_s, p);
    if (sd.n0 != 0) {
        if (s > 0) {
            for (std::int64_t j = 0; j <= window; ++j) {
                if (digits(j, p).n0 >= p - sd.n0) rep.maximal_submodule.push_back(j);
            }
        } else {
            for (std::int64_t j = 0; j <= window; ++j) {
                if (digits(j, p).n0 < p - sd.n0) rep.maximal_submodule.push_back(j);
            }
        }
    }
    validate_submodule_closed(rep);
    rep.highest_weight_vectors = find_highest_weight_vectors(rep);

    if (sd.n0 == 0) {
        rep.classifications.push_back({"module", -(abs_s + 1), 0, std::nullopt});
    } else if (s > 0) {
        rep.classifications.push_back(
            {"maximal submodule", -(p - sd.n0 + (sd.n1 + 1) * p + 1), p - sd.n0, std::nullopt});
        rep.classifications.push_back({"quotient by maximal submodule", -(s + 1), 0, std::nullopt});
    } else {
        rep.classifications.push_back({"maximal submodule", -(abs_s + 1), 0, std::nullopt});
        rep.classifications.push_back({"quotient by maximal submodule",
                                       -(p - sd.n0 + (1 + sd.n1) * p + 1), p - sd.n0,
                                       std::nullopt});
    }
    return rep;
}

SubspaceBasis closure(const std::vector<std::vector<Cyc>>& seeds, const ModuleReport& rep) {
    const auto dim = static_cast<size_t>(rep.dim());
    SubspaceBasis basis;
    std::vector<std::vector<Cyc>> work;
    for (const auto& seed : seeds) {
        if (seed.size() != dim) throw std::invalid_argument("seed dimension mismatch");
        std::vector<Cyc> copy = seed;
        if (basis.insert(std::move(copy))) work.push_back(seed);
    }

    std::vector<const GeneratorAction*> gens;
    for (const auto& a : rep.e_actions) gens.push_back(&a);
    for (const auto& a : rep.f_actions) gens.push_back(&a);

    auto offer = [&](std::vector<Cyc>&& v) {
        std::vector<Cyc> copy = v;
        if (basis.insert(std::move(v))) work.push_back(std::move(copy));
    };

    while (!work.empty() && basis.rank() < rep.dim()) {
        const std::vector<Cyc> v = std::move(work.back());
        work.pop_back();
        for (const auto* ga : gens) {
            if (basis.rank() == rep.dim()) break;
            std::vector<Cyc> img(dim);
            bool any = false;
            for (size_t j = 0; j < dim; ++j) {
                if (v[j].is_zero()) continue;
                if (!ga->exits_window.empty() && ga->exits_window[j]) {
                    basis.window_truncated = true;
                }
                for (const auto& [i, c] : ga->matrix.cols[j]) {
                    img[static_cast<size_t>(i)] += c * v[j];
                    any = true;
                }
            }
            if (any) offer(std::move(img));
        }
        // K and [K;0;p] act diagonally; they separate weight components of
        // mixed seeds, so they belong in the fixed point too.
        if (basis.rank() < rep.dim()) {
            std::vector<Cyc> img(dim);
            std::vector<Cyc> img2(dim);
            for (size_t j = 0; j < dim; ++j) {
                if (v[j].is_zero()) continue;
                img[j] = v[j] * rep.k_diagonal[j];
                img2[j] = v[j] * Cyc::from_rational(BigRat(rep.kzero_diagonal[j]), rep.ctx);
            }
            offer(std::move(img));
            offer(std::move(img2));
        }
    }
    return basis;
}

bool is_irreducible(const ModuleReport& rep) {
    const auto dim = static_cast<size_t>(rep.dim());
    if (rep.kind == ModuleReport::Kind::Weyl) {
        for (size_t j = 0; j < dim; ++j) {
            std::vector<Cyc> seed(dim);
            seed[j] = Cyc::one(rep.ctx);
            if (closure({seed}, rep).rank() != rep.dim()) return false;
        }
        return true;
    }

    if (rep.window < 4 * rep.p) {
        throw WindowTooSmallError("window too small for an irreducibility verdict");
    }
    // Index 0 carries the top weight and is annihilated by e and e^(p).
    // (a) every index climbs to 0 through e^(r) steps; e lowers indices, so
    //     the window cannot leak on the way up.
    std::vector<std::vector<std::int64_t>> up_pred(dim);
    for (const auto& a : rep.e_actions) {
        for (size_t j = 0; j < dim; ++j) {
            for (const auto& [i, c] : a.matrix.cols[j]) {
                up_pred[static_cast<size_t>(i)].push_back(static_cast<std::int64_t>(j));
            }
        }
    }
    std::vector<char> reaches_top(dim, 0);
    std::vector<std::int64_t> stack{0};
    reaches_top[0] = 1;
    while (!stack.empty()) {
        const std::int64_t i = stack.back();
        stack.pop_back();
        for (const std::int64_t j : up_pred[static_cast<size_t>(i)]) {
            if (!reaches_top[static_cast<size_t>(j)]) {
                reaches_top[static_cast<size_t>(j)] = 1;
                stack.push_back(j);
            }
        }
    }
    for (size_t j = 0; j < dim; ++j) {
        if (!reaches_top[j]) return false;
    }
    // (b) 0 reaches every window index through f^(r) steps.
    std::vector<char> reached(dim, 0);
    stack.assign(1, 0);
    reached[0] = 1;
    while (!stack.empty()) {
        const std::int64_t j = stack.back();
        stack.pop_back();
        for (const auto& a : rep.f_actions) {
            for (const auto& [i, c] : a.matrix.cols[static_cast<size_t>(j)]) {
                if (!reached[static_cast<size_t>(i)]) {
                    reached[static_cast<size_t>(i)] = 1;
                    stack.push_back(i);
                }
            }
        }
    }
    for (size_t j = 0; j < dim; ++j) {
        if (!reached[j]) return false;
    }
    return true;
}

ClassifyRecipe classify(std::int64_t p, std::int64_t lambda) {
    require_valid_p(p);
    ClassifyRecipe out;
    out.p = p;
    out.lambda = lambda;
    if (lambda >= 0) {
        const Digits d = digits(lambda, p);
        out.primary = {"weyl-head",
                       "irreducible head (top quotient) of the Weyl module with maximal weight " +
                           std::to_string(lambda),
                       lambda, std::nullopt};
        out.finite_dim = (d.n0 + 1) * (d.n1 + 1);
        return out;
    }
    const std::int64_t k = -lambda - 1;
    const Digits kd = digits(k, p);
    auto whole = [](std::int64_t s) {
        return ClassifyRealization{"infinite-module",
                                   "the whole diagonal module with shift s=" + std::to_string(s),
                                   std::nullopt, s};
    };
    auto quotient = [](std::int64_t s) {
        return ClassifyRealization{"infinite-quotient",
                                   "quotient of the diagonal module with shift s=" +
                                       std::to_string(s) + " by its maximal submodule",
                                   std::nullopt, s};
    };
    auto submodule = [](std::int64_t s) {
        return ClassifyRealization{"infinite-submodule",
                                   "maximal submodule of the diagonal module with shift s=" +
                                       std::to_string(s),
                                   std::nullopt, s};
    };
    if (kd.n0 == 0) {
        out.primary = whole(k);
        if (k > 0) out.alternates.push_back(whole(-k));
    } else {
        out.primary = quotient(k);
        out.alternates.push_back(submodule(-k));
        if (kd.n1 >= 1) {
            const std::int64_t t = (p - kd.n0) + p * (kd.n1 - 1);
            out.alternates.push_back(submodule(t));
            out.alternates.push_back(quotient(-t));
        }
    }
    return out;
}

} // namespace qfock
