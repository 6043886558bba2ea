#pragma once

#include "braidstat/braided.hpp"

namespace braidstat {

// Named objects resolvable from the command line, avoiding JSON boilerplate
// in the common cases.

// joyce | s_wedge | s3_transpositions | s4_transpositions | trivial:N |
// cyclic:N | product:<name>:<name>
Rack builtin_rack(const std::string& name);

// const:1 | const:-1 | const:zeta<d> | const:<integer> | wedge | pm
// (wedge and pm require a rack of the form R x T2, built via product:...:trivial:2)
Cocycle2 builtin_cocycle(const Rack& r, const std::string& spec);

// kappa_zeta:<d> | kappa_wedge | kappa_pm | rackspace:<rack>:<cocycle> |
// rack_wedge:<rack> | rack_pm:<rack>
BraidedSpace builtin_space(const std::string& spec);

FieldPtr field_for_order(long d);  // Q for d <= 2, Q(zeta_d) otherwise

}  // namespace braidstat
