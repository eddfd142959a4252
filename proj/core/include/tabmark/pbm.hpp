#pragma once

#include <iosfwd>
#include <string>

#include "tabmark/codec.hpp"
#include "tabmark/model.hpp"

namespace tabmark {

// Plain PBM (P1): ASCII, '#' comments, pixels are '0'/'1' in any
// whitespace layout. 1 = black = watermark bit 1.
WatermarkBits parse_pbm(std::istream& in);
WatermarkBits read_pbm(const std::string& path);  // IoError on open/parse failure

void render_pbm(std::ostream& out, const WatermarkBits& wm);
void write_pbm(const std::string& path, const WatermarkBits& wm);

}  // namespace tabmark
