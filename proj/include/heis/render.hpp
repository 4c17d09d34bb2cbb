#pragma once

#include <string>

#include <json.hpp>

#include "heis/ideal.hpp"
#include "heis/morphism.hpp"
#include "heis/weyl.hpp"

namespace heis {

/// Grid rendering from the slice factorization: '|' strands, '\' '/'
/// crossings, 'u' cups, 'n' caps, boundary letters on the outer rows.
std::string render_ascii(const BasisDiagram& d);
std::string render_ascii(const Morphism& m);

/// One tikzpicture per diagram; smooth arcs, arrowheads follow orientation.
std::string render_tikz(const BasisDiagram& d);
std::string render_tikz(const Morphism& m);

nlohmann::ordered_json to_json(const BasisDiagram& d);
nlohmann::ordered_json to_json(const Morphism& m);
nlohmann::ordered_json to_json(const WeylElement& e);
nlohmann::ordered_json to_json(const IdealDescriptor& d);
nlohmann::ordered_json to_json(const SplitObject& s);

/// Wraps a payload with the versioned schema header.
nlohmann::ordered_json report(const std::string& kind,
                              nlohmann::ordered_json payload);

/// format is "ascii", "tikz", or "json".
std::string render(const Morphism& m, const std::string& format);

}  // namespace heis
