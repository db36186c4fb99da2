#include "mcx/diffusion.hpp"

#include "mcx/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace mcx {

GroupModel GroupModel::finite(FiniteGroup group) {
    auto problems = group.violations();
    if (!problems.empty()) throw DomainError("group model: " + problems.front());
    GroupModel g;
    g.finite_ = std::move(group);
    return g;
}

GroupModel GroupModel::free_abelian(std::size_t rank) {
    if (rank == 0) throw DomainError("free abelian group model needs rank >= 1");
    GroupModel g;
    g.rank_ = rank;
    return g;
}

const FiniteGroup& GroupModel::finite_group() const {
    if (!finite_) throw DomainError("group model is not finite");
    return *finite_;
}

GroupModel::Element GroupModel::identity() const {
    if (finite_) return {static_cast<std::int64_t>(finite_->identity())};
    return Element(rank_, 0);
}

GroupModel::Element GroupModel::multiply(const Element& a, const Element& b) const {
    if (finite_)
        return {static_cast<std::int64_t>(
            finite_->multiply(static_cast<std::size_t>(a.at(0)), static_cast<std::size_t>(b.at(0))))};
    Element c(rank_);
    for (std::size_t i = 0; i < rank_; ++i) c[i] = a.at(i) + b.at(i);
    return c;
}

GroupModel::Element GroupModel::inverse(const Element& a) const {
    if (finite_) return {static_cast<std::int64_t>(finite_->inverse(static_cast<std::size_t>(a.at(0))))};
    Element c(rank_);
    for (std::size_t i = 0; i < rank_; ++i) c[i] = -a.at(i);
    return c;
}

std::vector<GroupModel::Element> GroupModel::elements() const {
    const FiniteGroup& g = finite_group();
    std::vector<Element> out;
    for (std::size_t i = 0; i < g.order(); ++i) out.push_back({static_cast<std::int64_t>(i)});
    return out;
}

std::vector<GroupModel::Element> GroupModel::generators() const {
    std::vector<Element> out;
    if (finite_) {
        for (auto& e : elements())
            if (e != identity()) out.push_back(e);
        return out;
    }
    for (std::size_t i = 0; i < rank_; ++i) {
        Element e(rank_, 0);
        e[i] = 1;
        out.push_back(e);
    }
    return out;
}

std::string GroupModel::key(const Element& e) const {
    if (finite_) return finite_->name(static_cast<std::size_t>(e.at(0)));
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
    return out;
}

GroupModel::Element GroupModel::parse(const std::string& key) const {
    if (finite_) return {static_cast<std::int64_t>(finite_->find(key))};
    Element e;
    for (const auto& part : split_subset_key(key)) {
        try {
            std::size_t used = 0;
            e.push_back(std::stoll(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw ReferenceError("bad element key '" + key + "' for " + describe());
        }
    }
    if (e.size() != rank_) throw ReferenceError("element '" + key + "' does not have rank " + std::to_string(rank_));
    return e;
}

std::string GroupModel::describe() const {
    if (finite_) return "finite(" + std::to_string(finite_->order()) + ")";
    return "Z^" + std::to_string(rank_);
}

void require_probability(const Measure& mu) {
    Rational sum = 0;
    for (const auto& [g, w] : mu) {
        if (w <= 0) throw DomainError("measure weights must be positive");
        sum += w;
    }
    if (sum != 1) throw DomainError("measure weights sum to " + to_string(sum) + ", not 1");
}

Measure dirac(const GroupModel& g, const GroupModel::Element& e) {
    (void)g;
    return {{e, Rational(1)}};
}

Measure uniform(const std::vector<GroupModel::Element>& support) {
    Measure mu;
    const Rational w = Rational(1) / Rational(static_cast<long>(support.size()));
    for (const auto& e : support) mu[e] = w;
    return mu;
}

Rational l1_norm(const SparseFunction& f) {
    Rational sum = 0;
    for (const auto& [x, v] : f) sum += abs(v);
    return sum;
}

Rational total(const SparseFunction& f) {
    Rational sum = 0;
    for (const auto& [x, v] : f) sum += v;
    return sum;
}

void add_to(SparseFunction& f, const Point& x, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = f.try_emplace(x, value);
    if (inserted) return;
    it->second += value;
    if (it->second == 0) f.erase(it);
}

namespace {

std::string join_coordinates(const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

}  // namespace

ActionOnSet translation_action(std::size_t rank, std::vector<Point> window) {
    ActionOnSet a;
    a.group = GroupModel::free_abelian(rank);
    GroupModel g = a.group;
    a.act = [g](const GroupModel::Element& e, const Point& x) {
        auto p = g.parse(x);
        return join_coordinates(g.multiply(e, p));
    };
    a.transporter = [g](const Point& from, const Point& to) -> std::optional<GroupModel::Element> {
        return g.multiply(g.parse(to), g.inverse(g.parse(from)));
    };
    a.points = std::move(window);
    return a;
}

ActionOnSet table_action(const FiniteGroup& group, const std::vector<Point>& points,
                         const std::vector<std::map<Point, Point>>& images) {
    if (images.size() != group.order()) throw ReferenceError("action table needs one row per group element");
    ActionOnSet a;
    a.group = GroupModel::finite(group);
    a.points = points;
    auto table = std::make_shared<std::vector<std::map<Point, Point>>>(images);
    a.act = [table](const GroupModel::Element& e, const Point& x) {
        const auto& row = (*table)[static_cast<std::size_t>(e.at(0))];
        auto it = row.find(x);
        return it == row.end() ? x : it->second;
    };
    return a;
}

std::vector<std::string> action_violations(const ActionOnSet& a) {
    std::vector<std::string> out;
    const GroupModel& g = a.group;
    std::vector<GroupModel::Element> sample;
    if (g.is_finite()) {
        sample = g.elements();
    } else {
        sample = g.generators();
        for (const auto& e : g.generators()) sample.push_back(g.inverse(e));
    }
    for (const auto& x : a.points) {
        if (a.act(g.identity(), x) != x) out.push_back("identity moves '" + x + "'");
        for (const auto& p : sample)
            for (const auto& q : sample)
                if (a.act(g.multiply(p, q), x) != a.act(p, a.act(q, x)))
                    out.push_back("(" + g.key(p) + ")(" + g.key(q) + ") acts inconsistently on '" + x + "'");
    }
    return out;
}

SparseFunction convolve(const Measure& mu, const SparseFunction& f, const ActionOnSet& a) {
    SparseFunction out;
    for (const auto& [g, w] : mu)
        for (const auto& [x, v] : f) add_to(out, a.act(g, x), w * v);
    return out;
}

Rational measure_derivative(const GroupModel& g, const Measure& mu, const GroupModel::Element& phi) {
    std::map<GroupModel::Element, Rational> d;
    const auto phi_inv = g.inverse(phi);
    for (const auto& [x, w] : mu) {
        d[x] -= w;
        d[g.multiply(x, phi_inv)] += w;  // D_phi mu(x phi^-1) picks up mu(x)
    }
    Rational sum = 0;
    for (const auto& [x, v] : d) sum += abs(v);
    return sum;
}

Rational derivative_norm(const GroupModel& g, const Measure& mu, const std::vector<GroupModel::Element>& phi) {
    Rational best = 0;
    for (const auto& p : phi) best = std::max(best, measure_derivative(g, mu, p));
    return best;
}

Measure box_measure(std::size_t rank, std::int64_t n) {
    if (n < 1) throw DomainError("box size must be positive");
    std::vector<GroupModel::Element> support;
    GroupModel::Element e(rank, 0);
    while (true) {
        support.push_back(e);
        std::size_t i = 0;
        while (i < rank && ++e[i] == n) e[i++] = 0;
        if (i == rank) break;
    }
    return uniform(support);
}

Measure folner_measure(const GroupModel& g, const std::vector<GroupModel::Element>& phi, const Rational& eps) {
    if (eps <= 0) throw DomainError("epsilon must be positive");
    if (g.is_finite()) return uniform(g.elements());
    // ||D_phi mu||_1 <= 2 |phi|_1 / N for the uniform box of side N.
    std::int64_t m = 0;
    for (const auto& p : phi) {
        std::int64_t s = 0;
        for (auto x : p) s += x < 0 ? -x : x;
        m = std::max(m, s);
    }
    Rational q = Rational(2 * m) / eps;
    Integer n = numerator(q) / denominator(q) + 1;
    Measure mu = box_measure(g.rank(), n.convert_to<std::int64_t>());
    if (derivative_norm(g, mu, phi) >= eps) throw InvariantError("Folner box misses the requested bound");
    return mu;
}

std::optional<GroupModel::Element> find_transporter(const ActionOnSet& a, const Point& from, const Point& to,
                                                    std::size_t max_visits) {
    if (a.transporter) {
        auto e = a.transporter(from, to);
        if (e && a.act(*e, from) != to) throw InvariantError("transporter oracle returned a wrong element");
        return e;
    }
    const GroupModel& g = a.group;
    if (g.is_finite()) {
        for (const auto& e : g.elements())
            if (a.act(e, from) == to) return e;
        return std::nullopt;
    }
    std::vector<GroupModel::Element> moves = g.generators();
    for (const auto& e : g.generators()) moves.push_back(g.inverse(e));
    std::map<Point, GroupModel::Element> seen{{from, g.identity()}};
    std::deque<Point> queue{from};
    while (!queue.empty() && seen.size() < max_visits) {
        Point x = queue.front();
        queue.pop_front();
        if (x == to) return seen.at(x);
        for (const auto& m : moves) {
            Point y = a.act(m, x);
            if (seen.count(y)) continue;
            seen.emplace(y, g.multiply(m, seen.at(x)));
            queue.push_back(y);
        }
    }
    if (seen.count(to)) return seen.at(to);
    return std::nullopt;
}

DiffusionResult diffuse_to_epsilon(const ActionOnSet& a, const SparseFunction& f, const Rational& eps) {
    if (eps <= 0) throw DomainError("epsilon must be positive");
    const GroupModel& g = a.group;
    DiffusionResult r;
    SparseFunction clean;
    for (const auto& [x, v] : f) add_to(clean, x, v);
    r.input_norm = l1_norm(clean);
    if (clean.empty()) {
        r.mu = dirac(g, g.identity());
        r.f = clean;
        r.output_norm = 0;
        r.bound = 0;
        r.derivative = 0;
        return r;
    }
    r.base_point = clean.begin()->first;
    std::set<GroupModel::Element> phi;
    for (const auto& [x, v] : clean) {
        auto e = find_transporter(a, r.base_point, x);
        if (!e) throw DomainError("action is not transitive: no element carries '" + r.base_point + "' to '" + x + "'");
        phi.insert(*e);
    }
    if (g.is_finite())
        for (const auto& x : a.points)
            if (!find_transporter(a, r.base_point, x))
                throw DomainError("action is not transitive on the enumerated points: '" + x + "' is unreachable");
    r.phi.assign(phi.begin(), phi.end());
    std::vector<GroupModel::Element> phi_inv;
    for (const auto& p : r.phi) phi_inv.push_back(g.inverse(p));
    r.mu = folner_measure(g, phi_inv, eps / r.input_norm);
    r.derivative = derivative_norm(g, r.mu, phi_inv);
    r.f = convolve(r.mu, clean, a);
    r.output_norm = l1_norm(r.f);
    r.bound = abs(total(clean)) + r.derivative * r.input_norm;
    if (r.output_norm > r.bound) throw InvariantError("diffusion inequality failed");
    if (r.bound > abs(total(clean)) + eps) throw InvariantError("diffusion bound exceeds |sum f| + eps");
    return r;
}

namespace {

std::vector<Point> moved_points(const ActionOnSet& a, const std::vector<Point>& points) {
    std::vector<GroupModel::Element> sample = a.group.is_finite() ? a.group.elements() : a.group.generators();
    std::vector<Point> out;
    for (const auto& x : points)
        for (const auto& e : sample)
            if (a.act(e, x) != x) {
                out.push_back(x);
                break;
            }
    return out;
}

}  // namespace

ValidationReport validate_locally_finite(const LocallyFiniteAction& a) {
    ValidationReport report;
    std::vector<Point> all;
    std::map<Point, std::size_t> owner;
    for (std::size_t s = 0; s < a.orbits.size(); ++s)
        for (const auto& x : a.orbits[s].points) {
            all.push_back(x);
            if (!owner.emplace(x, s).second)
                report.add("orbit-of", {x}, "point '" + x + "' is listed in two orbits");
            auto o = a.orbit_of ? a.orbit_of(x) : std::optional<std::size_t>(s);
            if (!o || *o != s) report.add("orbit-of", {x}, "orbit oracle disagrees for '" + x + "'");
        }
    for (std::size_t s = 0; s < a.orbits.size(); ++s) {
        const auto& orbit = a.orbits[s];
        if (orbit.points.empty()) continue;
        for (const auto& x : orbit.points)
            if (!find_transporter(orbit.subgroup, orbit.points.front(), x, 10000))
                report.add("transitive", {std::to_string(s), x},
                           "Gamma_" + std::to_string(s) + " does not reach '" + x + "'");
        if (orbit.horizon <= s)
            report.add("disjoint", {std::to_string(s)}, "horizon k(s) must exceed s");
    }
    std::vector<std::set<Point>> support(a.orbits.size());
    for (std::size_t s = 0; s < a.orbits.size(); ++s) {
        auto moved = moved_points(a.orbits[s].subgroup, all);
        support[s].insert(moved.begin(), moved.end());
    }
    for (std::size_t s = 0; s < a.orbits.size(); ++s) {
        std::set<Point> guarded = support[s];
        guarded.insert(a.orbits[s].points.begin(), a.orbits[s].points.end());
        for (std::size_t t = a.orbits[s].horizon; t < a.orbits.size(); ++t)
            for (const auto& x : support[t])
                if (guarded.count(x)) {
                    report.add("disjoint", {std::to_string(s), std::to_string(t), x},
                               "Gamma_" + std::to_string(t) + " moves '" + x + "', which orbit " +
                                   std::to_string(s) + " needs untouched");
                    break;
                }
    }
    return report;
}

LocalDiffusionReport local_diffuse(const LocallyFiniteAction& a, const SparseFunction& f,
                                   const std::vector<Rational>& eps, std::size_t s_bar) {
    const std::size_t count = a.orbits.size();
    auto report = validate_locally_finite(a);
    if (!report.ok()) throw DomainError("locally finite action: " + report.violations.front().message);
    std::map<Point, std::size_t> enumerated;
    for (std::size_t s = 0; s < count; ++s)
        for (const auto& x : a.orbits[s].points) enumerated.emplace(x, s);
    auto orbit_of = [&](const Point& x) {
        std::optional<std::size_t> o;
        if (a.orbit_of) {
            o = a.orbit_of(x);
        } else if (auto it = enumerated.find(x); it != enumerated.end()) {
            o = it->second;
        }
        if (!o || *o >= count) throw ReferenceError("point '" + x + "' lies in no known orbit");
        return *o;
    };
    auto restrict = [&](const SparseFunction& g, std::size_t s) {
        SparseFunction out;
        for (const auto& [x, v] : g)
            if (orbit_of(x) == s) out.emplace(x, v);
        return out;
    };

    LocalDiffusionReport out;
    SparseFunction current;
    for (const auto& [x, v] : f) add_to(current, x, v);
    for (std::size_t s = 0; s < count; ++s) {
        auto part = restrict(current, s);
        out.sums_before.push_back(total(part));
        out.norms_before.push_back(l1_norm(part));
        if (s >= s_bar && total(part) != 0)
            throw DomainError("orbit " + std::to_string(s) + " has nonzero sum " + to_string(total(part)));
    }
    if (eps.size() < count) throw DomainError("epsilon schedule is shorter than the number of orbits");

    for (std::size_t s = 0; s < count; ++s) {
        const auto& sub = a.orbits[s].subgroup;
        Measure mu;
        if (s < s_bar) {
            mu = sub.group.is_finite() ? uniform(sub.group.elements()) : dirac(sub.group, sub.group.identity());
        } else {
            mu = diffuse_to_epsilon(sub, restrict(current, s), eps[s]).mu;
        }
        current = convolve(mu, current, sub);
        out.measures.push_back(std::move(mu));
    }
    for (std::size_t s = 0; s < count; ++s) {
        auto part = restrict(current, s);
        out.sums_after.push_back(total(part));
        out.norms_after.push_back(l1_norm(part));
        if (out.sums_after[s] != out.sums_before[s]) throw InvariantError("local diffusion changed an orbit sum");
        if (out.norms_after[s] > out.norms_before[s]) throw InvariantError("local diffusion increased an orbit norm");
        if (s >= s_bar && out.norms_after[s] > eps[s])
            throw InvariantError("orbit " + std::to_string(s) + " exceeds its epsilon");
    }
    out.result = std::move(current);
    return out;
}

}  // namespace mcx
