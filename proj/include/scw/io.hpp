#pragma once

#include <string>
#include <string_view>

#include "scw/connection.hpp"

namespace scw {

/// `bundle v1; group <name>;`, the embedded `simplicial-set v1` block, then one
/// `transition <d>.<index>.<face>: <group map>` line per non-identity transition.
std::string serialize_bundle(const Bundle& p);
Bundle parse_bundle(std::string_view text);

/// `connection v1; group <name>;` then `A <d>.<index> e<a> dx<v>: <poly>` for
/// every nonzero component (a and v 1-based). The base comes from the bundle.
std::string serialize_connection(const Connection& a);
Connection parse_connection(std::string_view text, const SetPtr& base);

}  // namespace scw
