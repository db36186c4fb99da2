#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mcx {

/// A finite group given by an explicit multiplication table.
///
/// Elements are addressed by their position in `names()`; `multiply(a, b)` is
/// the table entry for the product a*b. Construction only checks that the
/// table is square and in range; `violations()` reports the group axioms that
/// fail, so malformed tables can still be inspected.
class FiniteGroup {
public:
    using Element = std::size_t;

    FiniteGroup() = default;
    FiniteGroup(std::vector<std::string> names, std::vector<std::vector<Element>> table);

    /// Cyclic group Z/n with elements "0", ..., "n-1".
    static FiniteGroup cyclic(std::size_t n);
    /// Symmetric group on `degree` letters; element names are one-line images, e.g. "1,0,2".
    static FiniteGroup symmetric(std::size_t degree);
    static FiniteGroup trivial();
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    std::size_t order() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Element e) const { return names_.at(e); }
    Element find(std::string_view name) const;  // throws ReferenceError
    const std::vector<std::vector<Element>>& table() const { return table_; }

    Element multiply(Element a, Element b) const { return table_[a][b]; }
    /// Requires a valid group.
    Element identity() const;
    Element inverse(Element e) const;

    /// Human-readable descriptions of violated axioms; empty for a group.
    std::vector<std::string> violations() const;
    bool is_group() const { return violations().empty(); }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Element>> table_;
};

}  // namespace mcx
