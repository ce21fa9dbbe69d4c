#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewfree/detect.hpp"

namespace skewfree::io {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A point set together with its ambient, in canonical form: points sorted
// and duplicate-free.
//
// Text format, one point per line after a header:
//   # skewfree v1 ambient=grid n=313
//   0,17
// for grids (decimal x,y), and
//   # skewfree v1 ambient=field q=3 n=4
//   0012|2101
// for vector spaces: both sides as base-q digit strings, most significant
// digit first.  Digit strings limit the format to q <= 10.
struct PointSetFile {
    detect::Ambient ambient = detect::Ambient::grid(1);
    std::vector<detect::Point> points;
};

// Normalizes (sort + dedupe) and validates coordinates against the ambient.
PointSetFile make_point_set(detect::Ambient ambient,
                            std::vector<detect::Point> points);

// Renders the canonical text form (always ends with a newline).
std::string serialize(const PointSetFile& f);

// Formats one point as a body line of the text format.
std::string format_point(const detect::Ambient& ambient, const detect::Point& p);

// Strict parser: bad header, malformed lines, out-of-range coordinates, and
// duplicate lines are all rejected with a line diagnostic.
PointSetFile parse(std::string_view text);

void save(const std::string& path, const PointSetFile& f);
PointSetFile load(const std::string& path);

}  // namespace skewfree::io
