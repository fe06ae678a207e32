#include "coinqubit/malevich.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "coinqubit/error.hpp"

namespace coinqubit {
namespace {

constexpr double kMaxSide = 1.7320508075688772;  // sqrt(3)
constexpr double kMargin = 10.0;
constexpr double kLabelBand = 20.0;
constexpr double kEmptySide = 1e-12;

struct Square {
    double side;
    const char* fill;
    const char* name;
};

double side_of(double a, double b) {
    const double radicand = 2.0 + 2.0 * a * a - 4.0 * a - 2.0 * b + 2.0 * b * b + 2.0 * a * b;
    if (radicand < -kMatrixTolerance) {
        throw Error(ErrorCode::out_of_range, "negative Malevich radicand");
    }
    return std::sqrt(std::max(radicand, 0.0));
}

// Fixed three-decimal formatting, independent of the global locale.
std::string fmt(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 3);
    std::string s(buf, end);
    return s == "-0.000" ? "0.000" : s;
}

}  // namespace

MalevichTriada::MalevichTriada(double l1, double l2, double l3) : sides_{l1, l2, l3} {
    for (double s : sides_) {
        if (!std::isfinite(s) || s < 0.0 || s > kMaxSide + kMatrixTolerance) {
            throw Error(ErrorCode::out_of_range, "Malevich side must lie in [0, sqrt(3)]");
        }
    }
}

MalevichTriada triada_sides(const ProbabilityTriple& p) {
    return {side_of(p.p1(), p.p2()), side_of(p.p2(), p.p3()), side_of(p.p3(), p.p1())};
}

std::string render_svg(const MalevichTriada& triada, const SvgOptions& options) {
    if (!(options.scale > 0.0) || !std::isfinite(options.scale)) {
        throw Error(ErrorCode::invalid_argument, "scale must be positive");
    }
    const std::array<Square, 3> squares{{{triada.l1(), "black", "L1"},
                                         {triada.l2(), "red", "L2"},
                                         {triada.l3(), "white", "L3"}}};
    const double largest = std::max({triada.l1(), triada.l2(), triada.l3()}) * options.scale;
    const double gap = 0.25 * largest;

    double content_width = 0.0;
    int drawn = 0;
    for (const Square& sq : squares) {
        if (sq.side > kEmptySide) {
            content_width += sq.side * options.scale;
            ++drawn;
        }
    }
    if (drawn > 1) {
        content_width += gap * (drawn - 1);
    }
    const double width = content_width + 2.0 * kMargin;
    const double baseline = kMargin + largest;
    const double height = baseline + kMargin + (options.labels ? kLabelBand : 0.0);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' '
        << fmt(height) << "\">\n";

    double x = kMargin;
    for (const Square& sq : squares) {
        if (sq.side <= kEmptySide) {
            continue;
        }
        const double size = sq.side * options.scale;
        svg << "  <rect x=\"" << fmt(x) << "\" y=\"" << fmt(baseline - size) << "\" width=\""
            << fmt(size) << "\" height=\"" << fmt(size) << "\" fill=\"" << sq.fill << '"';
        // the white square is outlined
        if (std::string_view(sq.fill) == "white") {
            svg << " stroke=\"black\" stroke-width=\"1\"";
        }
        svg << "/>\n";
        if (options.labels) {
            svg << "  <text x=\"" << fmt(x + size / 2.0) << "\" y=\"" << fmt(baseline + 15.0)
                << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
                << sq.name << '=' << fmt(sq.side) << "</text>\n";
        }
        x += size + gap;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace coinqubit
