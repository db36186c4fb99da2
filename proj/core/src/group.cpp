#include "mcx/group.hpp"

#include "mcx/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace mcx {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<Element>> table)
    : names_(std::move(names)), table_(std::move(table)) {
    if (names_.empty()) throw ReferenceError("group has no elements");
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ReferenceError("duplicate group element names");
    if (table_.size() != names_.size())
        throw ReferenceError("multiplication table has wrong number of rows");
    for (const auto& row : table_) {
        if (row.size() != names_.size())
            throw ReferenceError("multiplication table row has wrong length");
        for (Element e : row)
            if (e >= names_.size()) throw ReferenceError("multiplication table entry out of range");
    }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw DomainError("cyclic group of order 0");
    std::vector<std::string> names(n);
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i) {
        names[i] = std::to_string(i);
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::trivial() {
    return cyclic(1);
}

FiniteGroup FiniteGroup::symmetric(std::size_t degree) {
    std::vector<std::size_t> perm(degree);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::map<std::vector<std::size_t>, Element> index;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        index[perms[i]] = i;
        std::string name;
        for (std::size_t k = 0; k < degree; ++k) {
            if (k) name += ',';
            name += std::to_string(perms[i][k]);
        }
        names.push_back(name.empty() ? "id" : name);
    }
    std::vector<std::vector<Element>> table(perms.size(), std::vector<Element>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            // (a*b)(k) = a(b(k)): b acts first.
            std::vector<std::size_t> ab(degree);
            for (std::size_t k = 0; k < degree; ++k) ab[k] = perms[a][perms[b][k]];
            table[a][b] = index.at(ab);
        }
    return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    std::size_t na = a.order(), nb = b.order();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + ";" + b.name(j) + ")");
    std::vector<std::vector<Element>> table(na * nb, std::vector<Element>(na * nb));
    for (std::size_t x = 0; x < na * nb; ++x)
        for (std::size_t y = 0; y < na * nb; ++y)
            table[x][y] = a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
    return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup::Element FiniteGroup::find(std::string_view name) const {
    for (Element e = 0; e < names_.size(); ++e)
        if (names_[e] == name) return e;
    throw ReferenceError("unknown group element '" + std::string(name) + "'");
}

FiniteGroup::Element FiniteGroup::identity() const {
    for (Element e = 0; e < order(); ++e) {
        bool ok = true;
        for (Element x = 0; x < order() && ok; ++x)
            ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) return e;
    }
    throw DomainError("multiplication table has no identity element");
}

FiniteGroup::Element FiniteGroup::inverse(Element e) const {
    Element id = identity();
    for (Element x = 0; x < order(); ++x)
        if (table_[e][x] == id && table_[x][e] == id) return x;
    throw DomainError("element '" + names_.at(e) + "' has no inverse");
}

std::vector<std::string> FiniteGroup::violations() const {
    std::vector<std::string> out;
    const std::size_t n = order();
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                    out.push_back("associativity fails for (" + names_[a] + ", " + names_[b] + ", " +
                                  names_[c] + ")");
                    if (out.size() > 8) return out;
                }
    std::optional<Element> id;
    for (Element e = 0; e < n && !id; ++e) {
        bool ok = true;
        for (Element x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) id = e;
    }
    if (!id) {
        out.push_back("no identity element");
        return out;
    }
    for (Element a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (Element x = 0; x < n && !has_inverse; ++x)
            has_inverse = table_[a][x] == *id && table_[x][a] == *id;
        if (!has_inverse) out.push_back("element '" + names_[a] + "' has no inverse");
    }
    return out;
}

}  // namespace mcx
