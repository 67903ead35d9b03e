#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hgr/svg.hpp"

using namespace hgr;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RectLayout load(const std::string& name) {
    return parse_layout(slurp(std::string(HGR_DATA_DIR) + "/" + name));
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("svg structure for d1_w") {
    std::string svg = render_svg(load("d1_w.hgr"));
    CHECK(count_of(svg, "<circle") == 2);
    CHECK(count_of(svg, "<polyline") == 2);
    CHECK(count_of(svg, "<rect") == 1);
    CHECK(count_of(svg, "class=\"matching\"") == 2);  // both copies of c
    CHECK(count_of(svg, "<text") > 0);
}

TEST_CASE("genus-0 layout renders the rectangle only") {
    RectLayout empty = parse_layout(
        R"({"genus":0,"rect":{"x_min":0,"y_min":0,"x_max":10,"y_max":10},"alpha":[],"crossings":[],"beta":[]})");
    std::string svg = render_svg(empty);
    CHECK(count_of(svg, "<rect") == 1);
    CHECK(count_of(svg, "<circle") == 0);
    CHECK(count_of(svg, "<polyline") == 0);
}

TEST_CASE("labels off removes text elements") {
    RenderOptions opts;
    opts.labels = false;
    std::string svg = render_svg(load("d2_w.hgr"), opts);
    CHECK(count_of(svg, "<text") == 0);
    CHECK(count_of(svg, "<circle") == 4);
    CHECK(count_of(svg, "<polyline") == 4);
}

TEST_CASE("rendering is byte-deterministic") {
    RectLayout l = load("d3_w.hgr");
    CHECK(render_svg(l) == render_svg(l));
    RenderOptions opts;
    opts.labels = false;
    CHECK(render_svg(l, opts) == render_svg(l, opts));
    CHECK(render_svg(l) != render_svg(l, opts));
}
