#pragma once

#include "mcx/multicomplex.hpp"

#include <set>
#include <string>
#include <vector>

namespace mcx {

/// Same vertices, simplices of dimension <= n.
Multicomplex skeleton(const Multicomplex& mc, int n);

/// True iff every vertex set carries at most one simplex.
bool is_simplicial_complex(const Multicomplex& mc);

/// Alternating count of simplices.
long long euler_characteristic(const Multicomplex& mc);

/// The induced multicomplex on `ids`. With `close`, faces are added first;
/// otherwise a set that is not closed under facets raises DomainError.
Multicomplex submulticomplex(const Multicomplex& mc, const std::set<std::string>& ids, bool close = false);

/// Smallest facet-closed set containing `ids`.
std::set<std::string> facet_closure(const Multicomplex& mc, const std::set<std::string>& ids);

/// Two n-simplices glued along their whole boundary. Proper faces have ids
/// "[a,b,...]" (0-simplices use the label itself); the top simplices are
/// "N[...]" and "S[...]".
Multicomplex special_sphere(int n, const std::vector<std::string>& labels);
Multicomplex special_sphere(int n);  // labels v0, ..., vn

std::string sphere_north_id(const std::vector<std::string>& labels);
std::string sphere_south_id(const std::vector<std::string>& labels);

struct ProductWithInterval {
    Multicomplex product;
    SimplicialMap i0;
    SimplicialMap i1;
};

/// K x I, triangulated inductively: sigma x I is the cone, with apex "c(sigma)",
/// over the triangulated boundary of sigma x I. Vertex v of K gives "v@0" and
/// "v@1"; simplex sigma gives level copies "sigma@0", "sigma@1". A cone simplex
/// over the chain sigma_1 > ... > sigma_k with optional base tau@l has id
/// "c(sigma_1)*...*c(sigma_k)" followed by "*tau@l" when a base is present.
ProductWithInterval product_with_interval(const Multicomplex& mc);

/// pi(sigma): simplices with the same vertex set and the same facets.
std::set<std::string> compatible_simplices(const Multicomplex& mc, const std::string& id);

/// Cone with a new vertex `apex`; the cone over sigma has id apex + "*" + sigma.
Multicomplex cone(const Multicomplex& mc, const std::string& apex);

/// The simplicial complex generated by the given vertex sets; every simplex
/// gets the comma-joined sorted vertex names as id.
Multicomplex simplicial_complex_from_facets(const std::vector<std::vector<std::string>>& facets);

}  // namespace mcx
