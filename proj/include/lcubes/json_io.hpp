#pragma once

// JSON encodings. Rationals are strings "num/den" (or "k"); block indices
// and leaf labels are 1-based on the wire and 0-based in memory. Every
// decoder re-validates the invariants of what it builds and throws
// InvalidInput.

#include "json.hpp"

#include "lcubes/factorization.hpp"
#include "lcubes/geometry.hpp"
#include "lcubes/homotopy.hpp"
#include "lcubes/words.hpp"

namespace lcubes::json_io {

using nlohmann::json;

json encode(const Rational& r);
json encode(const Box& b);
json encode(const Configuration& c);
json encode(const AxisBlocks& blocks);
json encode(const TensorWord& w);
json encode(const StripGrouping& g);
json encode(const NotDecomposable& nd, const AxisBlocks& blocks);
json encode(const ContractionReport& r);

Rational decode_rational(const json& j);
Configuration decode_configuration(const json& j);
AxisBlocks decode_blocks(const json& j);
/// Structural decoding only; call validate(w, blocks) for block checks.
TensorWord decode_word(const json& j);

/// Parses text, mapping parse errors to InvalidInput.
json parse(std::string_view text);

}  // namespace lcubes::json_io
