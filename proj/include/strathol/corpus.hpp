#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "strathol/cells.hpp"
#include "strathol/complex.hpp"

namespace strathol {

using CorpusItem = std::variant<StratComplex, DeltaComplex>;

// Built-in examples. Fixed names: pinched_torus, cone_on_circle,
// suspension_circle, suspension_two_points, cylinder. Parameterized:
// stratified_simplex:<labels> and boundary:<labels> with comma-separated
// labels forming a weakly increasing flag (a chain poset is inferred from
// the order of first appearance); "name(args)" is accepted as a synonym.
// Throws UnknownCorpusName.
CorpusItem corpus(const std::string& name);

// Same, with Delta-complex items flattened (one subdivision, then
// to_strat_complex).
StratComplex corpus_flat(const std::string& name);

std::vector<std::string> corpus_names();

DeltaComplex pinched_torus();

// The battery used by the self-consistency checks: stratified simplices
// over the chain 0<1<2 for every flag of length at most 4, their
// boundaries, the cone and suspension examples, and the flattened pinched
// torus.
std::vector<std::pair<std::string, StratComplex>> corpus_battery();

}  // namespace strathol
