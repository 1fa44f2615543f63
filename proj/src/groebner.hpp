#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "term_order.hpp"

namespace growthfn {

/// Callback polled between S-pair reductions; return true to abort the run.
using CancelCheck = std::function<bool()>;

/// Reduced Groebner basis: monic, fully inter-reduced generators sorted
/// ascending by leading monomial. For a fixed ideal and order this list is
/// unique, so equal ideals always render byte-identically.
struct GroebnerBasis {
    std::vector<Polynomial> generators;
    TermOrder order;
};

/// Buchberger's algorithm with the normal pair-selection strategy (smallest
/// leading-monomial lcm first) and the product and chain criteria. Zero input
/// polynomials are ignored; an input with no nonzero polynomial is rejected.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const TermOrder& order,
                         const CancelCheck& cancel = {});

/// Basis elements containing only variables in `keep`, which must be the
/// variable set of a union of trailing blocks of the order's table. By
/// elimination theory the result is a Groebner basis of the elimination ideal.
std::vector<Polynomial> elimination_ideal(const GroebnerBasis& basis,
                                          const std::vector<std::string>& keep);

/// True iff f reduces to zero modulo the basis.
bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace growthfn
