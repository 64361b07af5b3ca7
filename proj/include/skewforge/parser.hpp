#pragma once

#include <string_view>

#include "skewforge/skew.hpp"

namespace skewforge {

/// Reads an element of L*M over the setting's variables.
///
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := '-' factor | power
///   power   := primary ('^' ['-'] integer)?
///   primary := integer | variable | '(' expr ')' | '[' expr ']' | automorphism
///   automorphism := 'e' | 'd(' k ',' i ')' | 's(' i ')'
///                 | 'shift(' q, ... ')' | 'aff(' perm ';' scale ';' shift ')'
///
/// '*' is the skew product, '/' multiplies by the inverse of a single term,
/// and '[a * phi]' is make_invariant(a, phi). d(k,i) is the tableau shift
/// delta^{ki} and s(i) the i-th generator of M. Reads format_element output
/// back exactly. SyntaxError carries the byte offset.
SkewElement parse_element(const SettingPtr& setting, std::string_view text);

/// parse_element followed by the invariance check (NotInvariant).
InvariantElement parse_invariant(const SettingPtr& setting, std::string_view text);

/// A bare automorphism in the same syntax.
AffineAut parse_aut(const SettingPtr& setting, std::string_view text);

}  // namespace skewforge
