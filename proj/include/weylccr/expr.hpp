#pragma once

#include <string>

#include "weylccr/weyl.hpp"

namespace weylccr {

/// Parses the element grammar
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*        ('/' only by scalars)
///   factor := number ['i'] | 'i' | 'u(' coords ')' | 'v(' coords ')'
///           | '(' expr ')' | '-' factor
///   coords := rational (',' rational)*          e.g. 1/2, -3, 0
///
/// e.g. "u(1/2)*v(1/3) + 2i*v(1)". With a null frame the identity frame is
/// used, its dimension taken from the first coordinate list (1 if none).
/// Throws ParseError carrying the offending position.
Element parse_element(const std::string& text, FramePtr frame = nullptr);

}  // namespace weylccr
