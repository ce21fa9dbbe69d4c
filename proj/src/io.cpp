#include "skewfree/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace skewfree::io {

namespace {

constexpr std::string_view kHeaderPrefix = "# skewfree v1 ambient=";

std::int64_t parse_int(std::string_view s, const std::string& what) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("malformed " + what + ": '" + std::string(s) + "'");
    }
    return v;
}

void require_digit_base(const detect::Ambient& amb) {
    if (!amb.is_grid() && amb.q() > 10) {
        throw ParseError("field point sets use single-character digits; q=" +
                         std::to_string(amb.q()) + " > 10 is not representable");
    }
}

std::string digits_string(const detect::Ambient& amb, std::int64_t v) {
    std::string s;
    for (std::uint32_t d : amb.digits(v)) {
        s.push_back(static_cast<char>('0' + d));
    }
    return s;
}

std::int64_t parse_digits(const detect::Ambient& amb, std::string_view s,
                          std::size_t lineno) {
    if (s.size() != amb.dim()) {
        throw ParseError("line " + std::to_string(lineno) + ": expected " +
                         std::to_string(amb.dim()) + " digits, got " +
                         std::to_string(s.size()));
    }
    std::vector<std::uint32_t> ds(amb.dim());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] >= static_cast<char>('0' + amb.q())) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": digit out of range for base " +
                             std::to_string(amb.q()));
        }
        ds[i] = static_cast<std::uint32_t>(s[i] - '0');
    }
    return amb.from_digits(ds);
}

}  // namespace

PointSetFile make_point_set(detect::Ambient ambient,
                            std::vector<detect::Point> points) {
    for (const auto& p : points) {
        if (!ambient.in_range(p.x) || !ambient.in_range(p.y)) {
            throw std::invalid_argument("point (" + std::to_string(p.x) + ", " +
                                        std::to_string(p.y) +
                                        ") outside the ambient range");
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return {ambient, std::move(points)};
}

std::string format_point(const detect::Ambient& ambient, const detect::Point& p) {
    if (ambient.is_grid()) {
        return std::to_string(p.x) + "," + std::to_string(p.y);
    }
    return digits_string(ambient, p.x) + "|" + digits_string(ambient, p.y);
}

std::string serialize(const PointSetFile& f) {
    require_digit_base(f.ambient);
    std::string out;
    if (f.ambient.is_grid()) {
        out = std::string(kHeaderPrefix) + "grid n=" + std::to_string(f.ambient.extent()) + "\n";
    } else {
        out = std::string(kHeaderPrefix) + "field q=" + std::to_string(f.ambient.q()) +
              " n=" + std::to_string(f.ambient.dim()) + "\n";
    }
    for (const auto& p : f.points) {
        out += format_point(f.ambient, p);
        out += '\n';
    }
    return out;
}

PointSetFile parse(std::string_view text) {
    std::size_t pos = 0;
    std::size_t lineno = 0;
    auto next_line = [&](std::string_view& line) {
        if (pos >= text.size()) return false;
        const std::size_t nl = text.find('\n', pos);
        line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                             : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++lineno;
        return true;
    };

    std::string_view header;
    if (!next_line(header) || !header.starts_with(kHeaderPrefix)) {
        throw ParseError("missing header: expected '" + std::string(kHeaderPrefix) +
                         "...'");
    }
    std::string_view rest = header.substr(kHeaderPrefix.size());

    detect::Ambient ambient = detect::Ambient::grid(1);
    if (rest.starts_with("grid n=")) {
        const std::int64_t n = parse_int(rest.substr(7), "grid bound");
        if (n < 1) throw ParseError("grid bound must be >= 1");
        ambient = detect::Ambient::grid(n);
    } else if (rest.starts_with("field q=")) {
        rest.remove_prefix(8);
        const std::size_t sp = rest.find(" n=");
        if (sp == std::string_view::npos) {
            throw ParseError("malformed field header: missing ' n='");
        }
        const std::int64_t q = parse_int(rest.substr(0, sp), "field order");
        const std::int64_t n = parse_int(rest.substr(sp + 3), "field dimension");
        if (q < 2 || q > 10) {
            throw ParseError("field order must be a prime in [2, 10]");
        }
        if (n < 1 || n > 32) throw ParseError("field dimension must be in [1, 32]");
        try {
            ambient = detect::Ambient::vector_space(static_cast<std::uint32_t>(q),
                                                    static_cast<std::uint32_t>(n));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    } else {
        throw ParseError("malformed header ambient: '" + std::string(rest) + "'");
    }

    std::vector<detect::Point> points;
    std::string_view line;
    while (next_line(line)) {
        if (line.empty()) {
            if (pos >= text.size()) break;  // trailing newline
            throw ParseError("line " + std::to_string(lineno) + ": empty line");
        }
        detect::Point p;
        if (ambient.is_grid()) {
            const std::size_t comma = line.find(',');
            if (comma == std::string_view::npos) {
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected 'x,y'");
            }
            p.x = parse_int(line.substr(0, comma), "x coordinate");
            p.y = parse_int(line.substr(comma + 1), "y coordinate");
        } else {
            const std::size_t bar = line.find('|');
            if (bar == std::string_view::npos) {
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected 'digits|digits'");
            }
            p.x = parse_digits(ambient, line.substr(0, bar), lineno);
            p.y = parse_digits(ambient, line.substr(bar + 1), lineno);
        }
        if (!ambient.in_range(p.x) || !ambient.in_range(p.y)) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": point outside the ambient range");
        }
        points.push_back(p);
    }

    std::vector<detect::Point> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError("duplicate point in file");
    }
    return {ambient, std::move(sorted)};
}

void save(const std::string& path, const PointSetFile& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    const std::string text = serialize(f);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

PointSetFile load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace skewfree::io
