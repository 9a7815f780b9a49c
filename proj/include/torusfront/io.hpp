#pragma once

#include "torusfront/front.hpp"

#include <iosfwd>
#include <string>

namespace torusfront {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Front file grammar (version 1):
//   front v1
//   n <integer>
//   holonomy <int> <int>
//   vertex <p/q> <p/q> [cusp]     (one per vertex, order-significant)
// '#' starts a comment; blank lines ignored; UTF-8, LF.
TorusFront parse_front(const std::string& text);
std::string serialize_front(const TorusFront& f, const std::string& name = "");

struct SvgOptions {
    int size_px = 480;
    bool caption = true;
    bool arrows = true;
};

std::string render_svg(const TorusFront& f, const SvgOptions& opt = {});

}  // namespace torusfront
