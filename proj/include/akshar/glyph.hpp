#pragma once

#include "akshar/codetable.hpp"

namespace akshar {

// One glyph placed on a line: drawn at (pen + dx, dy), then the pen moves
// right by advance. Produced by shaping, consumed by render_line.
struct PositionedGlyph {
    CodePoint glyph;
    int dx = 0;
    int dy = 0;
    int advance = 0;

    friend bool operator==(const PositionedGlyph&, const PositionedGlyph&) = default;
};

}  // namespace akshar
