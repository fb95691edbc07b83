#include "eval/value.hpp"

#include <cmath>

#include "sexpr/printer.hpp"

namespace recipe::eval {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational normalized_degrees(const Rational& degrees) {
  Rational d = degrees;
  // Reduce into [0, 360).
  BigInt turns = boost::multiprecision::numerator(d) /
                 (boost::multiprecision::denominator(d) * 360);
  d -= Rational(turns * 360);
  if (d < 0) d += 360;
  return d;
}

// Bounding box of a w×h rectangle rotated by `degrees`. Exact for multiples
// of 90; other angles go through double precision and are rounded to 1e-6.
std::pair<Rational, Rational> rotated_box(const Rational& w, const Rational& h,
                                          const Rational& degrees) {
  Rational d = normalized_degrees(degrees);
  if (d == 0 || d == 180) return {w, h};
  if (d == 90 || d == 270) return {h, w};
  double radians = to_double(d) * M_PI / 180.0;
  double c = std::fabs(std::cos(radians));
  double s = std::fabs(std::sin(radians));
  auto round6 = [](double v) {
    return Rational(BigInt(static_cast<long long>(std::llround(v * 1e6))), BigInt(1000000));
  };
  return {round6(to_double(w) * c + to_double(h) * s), round6(to_double(w) * s + to_double(h) * c)};
}

std::pair<Rational, Rational> dims(const ImageExpr& img) {
  return std::visit(
      overloaded{
          [](const EmptyScene& e) { return std::pair{e.width, e.height}; },
          [](const RectImage& r) { return std::pair{r.width, r.height}; },
          [](const CircleImage& c) { return std::pair{Rational(c.radius * 2), Rational(c.radius * 2)}; },
          [](const RotateImage& r) {
            auto [w, h] = dims(*r.image);
            return rotated_box(w, h, r.degrees);
          },
          [](const PlaceImage& p) { return dims(*p.base); },
      },
      img.node);
}

bool within_number(const Rational& a, const Rational& e, const Rational& tol) {
  Rational diff = a - e;
  if (diff < 0) diff = -diff;
  return diff <= tol;
}

bool within_image(const ImageExpr& a, const ImageExpr& e, const Rational& tol);

bool within_image_ptr(const ImagePtr& a, const ImagePtr& e, const Rational& tol) {
  return within_image(*a, *e, tol);
}

bool within_image(const ImageExpr& a, const ImageExpr& e, const Rational& tol) {
  if (a.node.index() != e.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const EmptyScene& x) {
            const auto& y = std::get<EmptyScene>(e.node);
            return within_number(x.width, y.width, tol) && within_number(x.height, y.height, tol);
          },
          [&](const RectImage& x) {
            const auto& y = std::get<RectImage>(e.node);
            return within_number(x.width, y.width, tol) && within_number(x.height, y.height, tol) &&
                   x.mode == y.mode && x.color == y.color;
          },
          [&](const CircleImage& x) {
            const auto& y = std::get<CircleImage>(e.node);
            return within_number(x.radius, y.radius, tol) && x.mode == y.mode && x.color == y.color;
          },
          [&](const RotateImage& x) {
            const auto& y = std::get<RotateImage>(e.node);
            return within_number(x.degrees, y.degrees, tol) && within_image_ptr(x.image, y.image, tol);
          },
          [&](const PlaceImage& x) {
            const auto& y = std::get<PlaceImage>(e.node);
            return within_image_ptr(x.image, y.image, tol) && within_number(x.x, y.x, tol) &&
                   within_number(x.y, y.y, tol) && within_image_ptr(x.base, y.base, tol);
          },
      },
      a.node);
}

}  // namespace

Rational ImageExpr::width() const { return dims(*this).first; }
Rational ImageExpr::height() const { return dims(*this).second; }

ImagePtr make_image(ImageExpr image) { return std::make_shared<const ImageExpr>(std::move(image)); }

bool operator==(const ImageExpr& a, const ImageExpr& b) {
  return within_image(a, b, Rational(0));
}

bool within(const Value& actual, const Value& expected, const Rational& tolerance) {
  if (actual.data.index() != expected.data.index()) return false;
  return std::visit(
      overloaded{
          [&](const Rational& n) { return within_number(n, expected.as_number(), tolerance); },
          [&](const std::string& s) { return s == expected.as_string(); },
          [&](bool b) { return b == expected.as_boolean(); },
          [&](const Posn& p) {
            const Posn& q = expected.as_posn();
            return within_number(p.x, q.x, tolerance) && within_number(p.y, q.y, tolerance);
          },
          [&](const ImagePtr& img) { return within_image(*img, expected.as_image(), tolerance); },
          [&](const World& w) {
            const World& v = expected.as_world();
            return within(*w.rocket, *v.rocket, tolerance) && within(*w.dir, *v.dir, tolerance) &&
                   within(*w.flevel, *v.flevel, tolerance) &&
                   within(*w.gfuel, *v.gfuel, tolerance) && within(*w.bfuel, *v.bfuel, tolerance);
          },
      },
      actual.data);
}

bool operator==(const Value& a, const Value& b) { return within(a, b, Rational(0)); }

std::string render(const ImageExpr& img) {
  return std::visit(
      overloaded{
          [](const EmptyScene& e) {
            return "(empty-scene " + format_number(e.width) + " " + format_number(e.height) + ")";
          },
          [](const RectImage& r) {
            return "(rectangle " + format_number(r.width) + " " + format_number(r.height) + " " +
                   sexpr::quote_string(r.mode) + " " + sexpr::quote_string(r.color) + ")";
          },
          [](const CircleImage& c) {
            return "(circle " + format_number(c.radius) + " " + sexpr::quote_string(c.mode) + " " +
                   sexpr::quote_string(c.color) + ")";
          },
          [](const RotateImage& r) {
            return "(rotate " + format_number(r.degrees) + " " + render(*r.image) + ")";
          },
          [](const PlaceImage& p) {
            return "(place-image " + render(*p.image) + " " + format_number(p.x) + " " +
                   format_number(p.y) + " " + render(*p.base) + ")";
          },
      },
      img.node);
}

std::string render(const Value& v) {
  return std::visit(
      overloaded{
          [](const Rational& n) { return format_number(n); },
          [](const std::string& s) { return sexpr::quote_string(s); },
          [](bool b) { return std::string(b ? "#true" : "#false"); },
          [](const Posn& p) {
            return "(make-posn " + format_number(p.x) + " " + format_number(p.y) + ")";
          },
          [](const ImagePtr& img) { return render(*img); },
          [](const World& w) {
            return "(make-world " + render(*w.rocket) + " " + render(*w.dir) + " " +
                   render(*w.flevel) + " " + render(*w.gfuel) + " " + render(*w.bfuel) + ")";
          },
      },
      v.data);
}

const char* kind_name(const Value& v) {
  switch (v.data.index()) {
    case 0: return "number";
    case 1: return "string";
    case 2: return "boolean";
    case 3: return "posn";
    case 4: return "image";
    case 5: return "world";
  }
  return "value";
}

}  // namespace recipe::eval
