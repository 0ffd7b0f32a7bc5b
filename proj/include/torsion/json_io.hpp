#pragma once

#include <string>

#include <json.hpp>

#include "torsion/chain.hpp"
#include "torsion/slice_space.hpp"
#include "torsion/stability.hpp"
#include "torsion/tors.hpp"

namespace torsion {

using nlohmann::json;

// { "n":2, "classes":[{"id":0,"members":[]}, ...],
//   "hasse":[{"upper":4,"lower":3,"brick":"[2,2]"}, ...] }
json lattice_json(const TorsLattice& l);

std::string lattice_dot(const TorsLattice& l, bool brick_labels);

// { "n":2, "classes":[["[1,1]","[1,2]","[2,2]"],["[2,2]"],[]],
//   "breakpoints":["1/3","2/3"] }
json chain_json(const TorsLattice& l, const Chain& c);

// Throws std::invalid_argument naming the offending field path.
Chain chain_from_json(const TorsLattice& l, const json& j);

// { "kind":"central_charge","theta":[...],"delta":[...] } or
// { "kind":"chain_mho"/"chain_omega", "chain":{...} }
json wsc_json(const TorsLattice& l, const WeakStability& w);
WeakStability wsc_from_json(const TorsLattice& l, const json& j);

// { "f_vector":[...], "facets":[[ids]...] }
json nerve_json(const NerveComplex& nc);

// square CSV of pairwise distances with rational "p/q" entries
std::string distance_matrix_csv(const TorsLattice& l, const std::vector<Chain>& chains);

}  // namespace torsion
