#include "mcx/homology.hpp"

#include "mcx/error.hpp"

#include <algorithm>

namespace mcx {

namespace {

std::vector<Integer> to_integers(const std::vector<Rational>& x) {
    std::vector<Integer> out;
    out.reserve(x.size());
    for (const auto& q : x) {
        if (!is_integral(q)) throw DomainError("non-integral coefficient in an integer computation");
        out.push_back(numerator(q));
    }
    return out;
}

std::vector<Rational> to_rationals(const std::vector<Integer>& x) {
    return {x.begin(), x.end()};
}

// Rational generators: kernel vectors of d_n independent modulo im d_{n+1}.
std::vector<std::vector<Rational>> rational_generators(const RationalSolver& dn_solver, const RatMatrix& next) {
    auto kernel = dn_solver.kernel();
    std::vector<std::vector<Rational>> image;
    RationalSolver next_solver(next);
    for (auto c : next_solver.pivot_columns()) image.push_back(next.column(c));
    const std::size_t dim = dn_solver.cols();
    RatMatrix stacked(dim, image.size() + kernel.size());
    for (std::size_t j = 0; j < image.size(); ++j)
        for (std::size_t r = 0; r < dim; ++r) stacked(r, j) = image[j][r];
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (std::size_t r = 0; r < dim; ++r) stacked(r, image.size() + j) = kernel[j][r];
    RationalSolver all(stacked);
    std::vector<std::vector<Rational>> gens;
    for (auto p : all.pivot_columns())
        if (p >= image.size()) gens.push_back(kernel[p - image.size()]);
    return gens;
}

void normalize_sign(std::vector<Integer>& v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        return;
    }
}

}  // namespace

const HomologyDegree& HomologyResult::degree(int n) const {
    if (n < 0 || n > max_degree()) throw DomainError("homology not computed in degree " + std::to_string(n));
    return degrees_[static_cast<std::size_t>(n)];
}

std::vector<std::size_t> HomologyResult::betti() const {
    std::vector<std::size_t> b;
    for (const auto& d : degrees_) b.push_back(d.free_rank);
    return b;
}

bool HomologyResult::is_cycle(const Chain& z) const {
    if (z.degree() == 0) return true;
    auto y = complex_->boundary_matrix(z.degree()).apply(complex_->coordinates(z));
    return std::all_of(y.begin(), y.end(), [](const Rational& q) { return q == 0; });
}

bool HomologyResult::is_boundary(const Chain& z) const {
    if (!is_cycle(z)) return false;
    int n = z.degree();
    if (n < 0 || n > max_degree()) throw DomainError("homology not computed in degree " + std::to_string(n));
    auto x = complex_->coordinates(z);
    if (ring_ == Ring::rationals) return rational_[static_cast<std::size_t>(n)]->in_image(x);
    return integral_[static_cast<std::size_t>(n)]->in_image(to_integers(x));
}

bool HomologyResult::are_homologous(const Chain& a, const Chain& b) const {
    Chain diff = a;
    diff -= b;
    Chain d(a.degree(), a.ring());
    d += diff;
    return is_boundary(d);
}

std::optional<Chain> HomologyResult::bounding_chain(const Chain& z) const {
    if (!is_cycle(z)) return std::nullopt;
    int n = z.degree();
    if (n < 0 || n > max_degree()) throw DomainError("homology not computed in degree " + std::to_string(n));
    auto x = complex_->coordinates(z);
    if (n + 1 > complex_->top_degree()) {
        if (std::all_of(x.begin(), x.end(), [](const Rational& q) { return q == 0; })) return Chain(n + 1, ring_);
        return std::nullopt;
    }
    if (ring_ == Ring::rationals) {
        auto b = rational_[static_cast<std::size_t>(n)]->solve(x);
        if (!b) return std::nullopt;
        return complex_->chain_from(n + 1, *b, Ring::rationals);
    }
    auto b = integral_[static_cast<std::size_t>(n)]->solve(to_integers(x));
    if (!b) return std::nullopt;
    return complex_->chain_from(n + 1, to_rationals(*b), Ring::integers);
}

HomologyResult homology(const ChainComplex& cc, Ring ring, int max_degree) {
    HomologyResult result;
    result.ring_ = ring;
    result.complex_ = std::make_shared<const ChainComplex>(cc);
    int limit = cc.truncated() ? cc.top_degree() - 1 : cc.top_degree();
    if (max_degree >= 0) {
        if (max_degree > limit)
            throw DomainError("complex does not determine homology in degree " + std::to_string(max_degree));
        limit = max_degree;
    }

    auto next_matrix = [&](int n) {
        return n + 1 <= cc.top_degree() ? cc.boundary_matrix(n + 1) : SparseIntMatrix(cc.rank(n), 0);
    };

    if (ring == Ring::rationals) {
        std::shared_ptr<const RationalSolver> dn =
            std::make_shared<const RationalSolver>(cc.boundary_matrix(0).rational());
        for (int n = 0; n <= limit; ++n) {
            RatMatrix next = next_matrix(n).rational();
            auto next_solver = std::make_shared<const RationalSolver>(next);
            HomologyDegree deg;
            deg.degree = n;
            deg.cycles_rank = cc.rank(n) - dn->rank();
            deg.boundaries_rank = next_solver->rank();
            deg.free_rank = deg.cycles_rank - deg.boundaries_rank;
            for (const auto& g : rational_generators(*dn, next))
                deg.generators.push_back({cc.chain_from(n, g, Ring::rationals), Integer(0)});
            result.degrees_.push_back(std::move(deg));
            result.rational_.push_back(next_solver);
            dn = next_solver;
        }
        return result;
    }

    SmithForm dn = smith_normal_form(cc.boundary_matrix(0).integral(), track_right);
    for (int n = 0; n <= limit; ++n) {
        IntMatrix next = next_matrix(n).integral();
        auto next_solver = std::make_shared<const IntegerSolver>(next, true);
        const std::size_t dim = cc.rank(n);
        const std::size_t r = dn.rank();
        // Kernel basis: trailing columns of V_n; image of d_{n+1} in those coordinates.
        const std::size_t k = dim - r;
        IntMatrix kernel(dim, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < dim; ++i) kernel(i, j) = dn.v(i, r + j);
        IntMatrix coords(k, next.cols());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t c = 0; c < next.cols(); ++c) {
                Integer sum = 0;
                for (std::size_t t = 0; t < dim; ++t)
                    if (dn.v_inv(r + i, t) != 0 && next(t, c) != 0) sum += dn.v_inv(r + i, t) * next(t, c);
                coords(i, c) = sum;
            }
        SmithForm m = smith_normal_form(coords, track_left);
        IntMatrix gens = kernel * m.u_inv;

        HomologyDegree deg;
        deg.degree = n;
        deg.cycles_rank = k;
        deg.boundaries_rank = m.rank();
        deg.free_rank = k - m.rank();
        for (std::size_t j = 0; j < k; ++j) {
            Integer order = j < m.rank() ? m.diagonal[j] : Integer(0);
            if (order == 1) continue;
            if (order > 1) deg.torsion.push_back(order);
            auto col = gens.column(j);
            normalize_sign(col);
            deg.generators.push_back({cc.chain_from(n, to_rationals(col), Ring::integers), order});
        }
        result.degrees_.push_back(std::move(deg));
        result.integral_.push_back(next_solver);
        if (n < limit) dn = next_solver->smith();
    }
    return result;
}

FundamentalCycle fundamental_cycle(const Multicomplex& mc, int n) {
    if (n < 0) return {std::nullopt, "degree must be nonnegative"};
    if (mc.dimension() != n) return {std::nullopt, "multicomplex has dimension " + std::to_string(mc.dimension())};
    for (SimplexIndex s = 0; s < mc.size(); ++s) {
        if (mc.simplex(s).dimension() == n) continue;
        bool has_coface = false;
        for (const auto& t : mc.simplices())
            if (std::find(t.facets.begin(), t.facets.end(), s) != t.facets.end()) has_coface = true;
        if (!has_coface) return {std::nullopt, "not pure: '" + mc.id(s) + "' is a maximal simplex of lower dimension"};
    }
    ChainComplex cc = build_reduced_chain_complex(mc, n);
    HomologyResult h = homology(cc, Ring::integers, n);
    const auto& top = h.degree(n);
    if (top.free_rank != 1 || !top.torsion.empty())
        return {std::nullopt, "H_" + std::to_string(n) + " has free rank " + std::to_string(top.free_rank) +
                                  " and " + std::to_string(top.torsion.size()) + " torsion summands"};
    // No (n+1)-chains: the cycle group itself is infinite cyclic; take its primitive generator.
    return {top.generators.front().cycle, ""};
}

}  // namespace mcx
