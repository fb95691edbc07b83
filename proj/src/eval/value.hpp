#pragma once

#include <memory>
#include <string>
#include <variant>

#include "util/rational.hpp"

namespace recipe::eval {

struct Value;
struct ImageExpr;
using ImagePtr = std::shared_ptr<const ImageExpr>;

struct Posn {
  Rational x;
  Rational y;

  friend bool operator==(const Posn&, const Posn&) = default;
};

struct EmptyScene {
  Rational width;
  Rational height;
};

struct RectImage {
  Rational width;
  Rational height;
  std::string mode;
  std::string color;
};

struct CircleImage {
  Rational radius;
  std::string mode;
  std::string color;
};

struct RotateImage {
  Rational degrees;
  ImagePtr image;
};

struct PlaceImage {
  ImagePtr image;
  Rational x;
  Rational y;
  ImagePtr base;
};

// Abstract image algebra; no pixels are ever produced.
struct ImageExpr {
  std::variant<EmptyScene, RectImage, CircleImage, RotateImage, PlaceImage> node;

  Rational width() const;
  Rational height() const;
};

ImagePtr make_image(ImageExpr image);

struct World {
  std::shared_ptr<const Value> rocket;
  std::shared_ptr<const Value> dir;
  std::shared_ptr<const Value> flevel;
  std::shared_ptr<const Value> gfuel;
  std::shared_ptr<const Value> bfuel;
};

struct Value {
  std::variant<Rational, std::string, bool, Posn, ImagePtr, World> data;

  static Value number(Rational n) { return Value{std::move(n)}; }
  static Value string(std::string s) { return Value{std::move(s)}; }
  static Value boolean(bool b) { return Value{b}; }
  static Value posn(Rational x, Rational y) { return Value{Posn{std::move(x), std::move(y)}}; }
  static Value image(ImagePtr img) { return Value{std::move(img)}; }

  bool is_number() const { return std::holds_alternative<Rational>(data); }
  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_boolean() const { return std::holds_alternative<bool>(data); }
  bool is_posn() const { return std::holds_alternative<Posn>(data); }
  bool is_image() const { return std::holds_alternative<ImagePtr>(data); }
  bool is_world() const { return std::holds_alternative<World>(data); }

  const Rational& as_number() const { return std::get<Rational>(data); }
  const std::string& as_string() const { return std::get<std::string>(data); }
  bool as_boolean() const { return std::get<bool>(data); }
  const Posn& as_posn() const { return std::get<Posn>(data); }
  const ImageExpr& as_image() const { return *std::get<ImagePtr>(data); }
  const World& as_world() const { return std::get<World>(data); }
};

// Deep structural equality with exact rational comparison.
bool operator==(const Value& a, const Value& b);
bool operator==(const ImageExpr& a, const ImageExpr& b);

// Like ==, except numeric leaves may differ by at most `tolerance`.
bool within(const Value& actual, const Value& expected, const Rational& tolerance);

// Teaching-language notation: 14, "up", #true, (make-posn 5 10), ...
std::string render(const Value& v);
std::string render(const ImageExpr& img);

// Human-readable kind used in type-mismatch messages.
const char* kind_name(const Value& v);

}  // namespace recipe::eval
