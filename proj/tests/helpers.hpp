#pragma once

#include <string>
#include <vector>

#include "torsion/chain.hpp"

namespace torsion::testing {

// torsion class id from a module string listing its members, "" for {0}
inline int cls(const TorsLattice& l, const std::string& members) {
    if (members.empty()) return l.zero_id;
    int id = l.id_of(summand_mask(l.ctx, parse_module(l.ctx, members)));
    if (id < 0) throw std::invalid_argument("not a torsion class: " + members);
    return id;
}

inline Chain mk_chain(const TorsLattice& l, const std::vector<std::string>& classes,
                      const std::vector<std::string>& breaks) {
    Chain c;
    for (const auto& s : classes) c.classes.push_back(cls(l, s));
    for (const auto& b : breaks) c.breakpoints.push_back(parse_rat(b));
    validate_chain(l, c);
    return c;
}

inline Module mod(const TorsLattice& l, const std::string& s) { return parse_module(l.ctx, s); }

}  // namespace torsion::testing
