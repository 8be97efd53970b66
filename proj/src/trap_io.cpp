#include "trapgraph/trap_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

#include "trapgraph/errors.hpp"

namespace trapgraph {
namespace {

int parse_int(std::string_view& s, const char* what) {
    int value = 0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin)
        throw ParseError(std::string("expected integer for ") + what);
    s.remove_prefix(static_cast<std::size_t>(ptr - begin));
    return value;
}

void expect(std::string_view& s, char c, const char* what) {
    if (s.empty() || s.front() != c)
        throw ParseError(std::string("expected ") + what);
    s.remove_prefix(1);
}

} // namespace

TrapezoidDiagram parse_trap(const std::string& text) {
    std::string_view rest(text);
    const int n = parse_int(rest, "n");
    if (n < 0) throw ParseError("negative n");
    expect(rest, '\n', "newline after n");
    std::vector<Trapezoid> traps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Trapezoid& t = traps[static_cast<std::size_t>(i)];
        t.a = parse_int(rest, "a");
        expect(rest, ' ', "space after a");
        t.b = parse_int(rest, "b");
        expect(rest, ' ', "space after b");
        t.c = parse_int(rest, "c");
        expect(rest, ' ', "space after c");
        t.d = parse_int(rest, "d");
        expect(rest, '\n', "newline after d");
    }
    if (!rest.empty()) throw ParseError("trailing content after last trapezoid");
    return TrapezoidDiagram(std::move(traps));
}

std::string serialize_trap(const TrapezoidDiagram& d) {
    std::ostringstream out;
    out << d.n() << '\n';
    for (int i = 1; i <= d.n(); ++i) {
        const Trapezoid& t = d.trap(i);
        out << t.a << ' ' << t.b << ' ' << t.c << ' ' << t.d << '\n';
    }
    return out.str();
}

TrapezoidDiagram load_trap_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_trap(buf.str());
}

void save_trap_file(const TrapezoidDiagram& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << serialize_trap(d);
    if (!out) throw ParseError("write failed for " + path);
}

} // namespace trapgraph
