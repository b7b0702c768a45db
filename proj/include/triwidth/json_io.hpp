#pragma once

#include <complex>
#include <string>

#include <json.hpp>

#include "triwidth/graphs.hpp"
#include "triwidth/hasse.hpp"
#include "triwidth/mso/formula.hpp"
#include "triwidth/mso/solve.hpp"
#include "triwidth/skeleton.hpp"
#include "triwidth/tdecomp.hpp"
#include "triwidth/triangulation.hpp"

namespace triwidth {

using json = nlohmann::json;

json complex_json(const std::complex<double>& c);
json skeleton_json(const Skeleton& sk);
json dual_json(const MultiGraph& g);
json hasse_json(const HasseDiagram& h);
json decomposition_json(const TreeDecomposition& td);
json check_json(const DecompositionCheck& c);
json encoded_json(const EncodedGraph& e);
json assignment_json(const mso::Assignment& a);
json error_json(const std::string& kind, const std::string& message);

// Free-variable declarations as [{"name":..., "sort":...}].
std::vector<mso::VarDecl> decls_from_json(const json& j);
json decls_json(const std::vector<mso::VarDecl>& decls);
// "3", "-1/2", 0.5 or 2 -> exact rational (decimals are read exactly from their text).
mso::Rational rational_from_json(const json& j);
// [re, im] or a plain number.
std::complex<double> complex_from_json(const json& j);

}  // namespace triwidth
