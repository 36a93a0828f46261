#pragma once

#include <string>
#include <string_view>

#include "dsbent/boolfn.hpp"
#include "dsbent/carlet.hpp"
#include "dsbent/charsum.hpp"
#include "dsbent/group.hpp"

namespace dsbent {

/// {"moduli":[n1,...,nt]}
std::string group_to_json(const GroupSpec& spec);
GroupSpec group_from_json(std::string_view text);

/// JSON list of integer lists, e.g. [[1,2],[3]] is X1*X2 + X3.
std::string anf_to_json(const AnfPoly& p);
AnfPoly anf_from_json(std::string_view text);

/// {"m":4,"P":[[3,4]],"L":{"basis":[[0,0,1,0],[0,0,0,1]]}}
std::string carlet_to_json(const CarletSpec& spec);
CarletSpec carlet_from_json(std::string_view text);

/// 2-groups: array of integers; general groups: array of
/// {"point":[e1,...],"coeffs":["p/q",...]} records over the power basis.
std::string spectrum_to_json(const GroupSpec& spec, const SpectrumTable& table);

}  // namespace dsbent
