#pragma once

#include "mcx/group.hpp"
#include "mcx/multicomplex.hpp"
#include "mcx/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mcx {

/// A finite group given by its table, or the free abelian group Z^d.
/// Elements are integer vectors: the element index for finite groups, the
/// coordinates for Z^d.
class GroupModel {
public:
    using Element = std::vector<std::int64_t>;

    static GroupModel finite(FiniteGroup group);
    static GroupModel free_abelian(std::size_t rank);

    bool is_finite() const { return finite_.has_value(); }
    const FiniteGroup& finite_group() const;
    std::size_t rank() const { return rank_; }

    Element identity() const;
    Element multiply(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    /// Finite groups only.
    std::vector<Element> elements() const;
    /// Unit vectors for Z^d; every non-identity element for finite groups.
    std::vector<Element> generators() const;

    /// Element names for finite groups; comma-joined integers for Z^d.
    std::string key(const Element& e) const;
    Element parse(const std::string& key) const;
    /// "Z^d" or "finite(n)".
    std::string describe() const;

private:
    std::optional<FiniteGroup> finite_;
    std::size_t rank_ = 0;
};

using Measure = std::map<GroupModel::Element, Rational>;
using Point = std::string;
using SparseFunction = std::map<Point, Rational>;

/// Throws DomainError unless the weights are positive and sum to one.
void require_probability(const Measure& mu);
Measure dirac(const GroupModel& g, const GroupModel::Element& e);
Measure uniform(const std::vector<GroupModel::Element>& support);

Rational l1_norm(const SparseFunction& f);
Rational total(const SparseFunction& f);
void add_to(SparseFunction& f, const Point& x, const Rational& value);

/// A group model acting on a set of opaque points. `points` enumerates the
/// (possibly truncated) set; `transporter`, when present, returns some element
/// carrying one point to another.
struct ActionOnSet {
    GroupModel group;
    std::function<Point(const GroupModel::Element&, const Point&)> act;
    std::vector<Point> points;
    std::function<std::optional<GroupModel::Element>(const Point&, const Point&)> transporter;
};

/// Z^d acting on itself by translation; points are comma-joined coordinates.
ActionOnSet translation_action(std::size_t rank, std::vector<Point> window = {});
/// A finite group acting through an explicit table: image[g][point].
ActionOnSet table_action(const FiniteGroup& group, const std::vector<Point>& points,
                         const std::vector<std::map<Point, Point>>& images);
/// Checks the action axioms on the enumerated points (identity and
/// compatibility with products). For Z^d only the generators are sampled.
std::vector<std::string> action_violations(const ActionOnSet& a);

/// (mu * f)(x) = sum_g mu(g) f(g^-1 x).
SparseFunction convolve(const Measure& mu, const SparseFunction& f, const ActionOnSet& a);

/// ||D_phi mu||_1 = sum_g |mu(g phi) - mu(g)|.
Rational measure_derivative(const GroupModel& g, const Measure& mu, const GroupModel::Element& phi);
/// Maximum of measure_derivative over Phi.
Rational derivative_norm(const GroupModel& g, const Measure& mu, const std::vector<GroupModel::Element>& phi);

/// Uniform measure on {0..n-1}^d.
Measure box_measure(std::size_t rank, std::int64_t n);

/// A finitely supported probability measure with derivative norm < eps on
/// Phi: the uniform measure for finite groups, a uniform box for Z^d.
Measure folner_measure(const GroupModel& g, const std::vector<GroupModel::Element>& phi, const Rational& eps);

struct DiffusionResult {
    Measure mu;
    SparseFunction f;                   // mu * f
    Point base_point;                   // x0
    std::vector<GroupModel::Element> phi;
    Rational derivative;                // ||D_{Phi^-1} mu||
    Rational bound;                     // |sum f| + derivative * ||f||_1
    Rational input_norm;
    Rational output_norm;
};

/// Diffuses f under a transitive action so that ||mu * f||_1 <= |sum f| + eps.
DiffusionResult diffuse_to_epsilon(const ActionOnSet& a, const SparseFunction& f, const Rational& eps);

/// Some element carrying `from` to `to`: the transporter if given, otherwise
/// breadth-first search over generators and their inverses.
std::optional<GroupModel::Element> find_transporter(const ActionOnSet& a, const Point& from, const Point& to,
                                                    std::size_t max_visits = 100000);

/// Orbit s of a locally finite action: its enumerated points, the subgroup
/// Gamma_s acting on all of Lambda, and the disjointness horizon k(s).
struct LocalOrbit {
    std::vector<Point> points;
    ActionOnSet subgroup;
    std::size_t horizon = 0;
};

struct LocallyFiniteAction {
    std::vector<LocalOrbit> orbits;
    /// Orbit index of any point, including points outside the enumerated range.
    std::function<std::optional<std::size_t>(const Point&)> orbit_of;
};

/// Rules: "transitive", "disjoint", "orbit-of". Checked on the enumerated range.
ValidationReport validate_locally_finite(const LocallyFiniteAction& a);

struct LocalDiffusionReport {
    SparseFunction result;
    std::vector<Measure> measures;
    std::vector<Rational> sums_before, sums_after;
    std::vector<Rational> norms_before, norms_after;
    bool disjointness_checked_on_enumerated_range_only = true;
};

/// Sequential local diffusion: orbit s < s_bar uses a fixed choice (uniform
/// for finite Gamma_s, the Dirac mass at the identity for Z^d); orbit
/// s >= s_bar is diffused to within eps[s].
LocalDiffusionReport local_diffuse(const LocallyFiniteAction& a, const SparseFunction& f,
                                   const std::vector<Rational>& eps, std::size_t s_bar);

}  // namespace mcx
