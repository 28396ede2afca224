#pragma once

#include "json.hpp"
#include "natop/complexes.hpp"
#include "natop/interval.hpp"
#include "natop/operad.hpp"
#include "natop/hochschild.hpp"
#include "natop/tree.hpp"

namespace natop {

using json = nlohmann::ordered_json;

json to_json(const Perm& p);
Perm perm_from_json(const json& j);

json to_json(const IntervalMorphism& f);
IntervalMorphism interval_from_json(const json& j);

json to_json(const Tree& t);
Tree tree_from_json(const json& j);

json to_json(const TreeSum& ts);
TreeSum tree_sum_from_json(const json& j);

json to_json(const SpMat& m);
SpMat spmat_from_json(const json& j);

/// {degree: {basis: [...], boundary: {...}}} keyed by degree as a string.
json to_json(const CochainComplex& c);

json to_json(const TruncatedComponent& tc);

json to_json(const Monomial& m);

/// {values, table, target}: the separating cochains of a tree.
json to_json(const SeparatingWitness& w);

}  // namespace natop
