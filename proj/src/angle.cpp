#include "normone/angle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace normone {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return parse_decimal(s);
  Rational num = parse_decimal(s.substr(0, slash));
  Rational den = parse_decimal(s.substr(slash + 1));
  if (den == 0) throw ConfigError("zero denominator in " + s);
  return num / den;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Interval Angle::enclosure(mpfr_prec_t prec) const {
  Interval r = Interval::from_rational(a, prec);
  if (b != 0) r = r + Interval::from_rational(b, prec) * Interval::pi(prec);
  return r;
}

double Angle::to_double() const { return a.get_d() + b.get_d() * M_PI; }

std::string Angle::str() const {
  std::string out;
  if (a != 0 || b == 0) out = a.get_str();
  if (b != 0) {
    if (!out.empty() && sgn(b) > 0) out += "+";
    if (b == 1)
      out += "pi";
    else if (b == -1)
      out += "-pi";
    else
      out += b.get_num().get_str() + "pi" + (b.get_den() == 1 ? "" : "/" + b.get_den().get_str());
  }
  return out;
}

int compare_angles(const Angle& x, const Angle& y) {
  if (x.a == y.a) return cmp(x.b, y.b);
  for (mpfr_prec_t prec = 64; prec <= kMaxPrecisionBits; prec *= 2) {
    Interval dx = x.enclosure(prec), dy = y.enclosure(prec);
    if (dx.strictly_below(dy)) return -1;
    if (dy.strictly_below(dx)) return 1;
  }
  throw PrecisionError("could not separate angles " + x.str() + " and " + y.str());
}

Angle parse_angle(const std::string& text) {
  std::string s = strip(text);
  s.erase(std::remove(s.begin(), s.end(), '*'), s.end());
  if (s.empty()) throw ConfigError("empty angle");
  auto pos = s.find("pi");
  if (pos == std::string::npos) return Angle{parse_rational(s), 0};
  std::string coef = s.substr(0, pos);
  std::string rest = s.substr(pos + 2);
  Rational c;
  if (coef.empty() || coef == "+")
    c = 1;
  else if (coef == "-")
    c = -1;
  else
    c = parse_rational(coef);
  if (!rest.empty()) {
    if (rest[0] != '/') throw ConfigError("malformed angle: " + text);
    Rational den = parse_rational(rest.substr(1));
    if (den == 0) throw ConfigError("zero denominator in angle: " + text);
    c /= den;
  }
  return Angle::pi_times(c);
}

Arc make_arc(const Angle& lo, const Angle& hi) {
  if (compare_angles(lo, Angle::zero()) < 0) throw ConfigError("arc endpoint below 0: " + lo.str());
  if (compare_angles(lo, Angle::two_pi()) >= 0) throw ConfigError("arc start not below 2pi: " + lo.str());
  Angle h = hi;
  if (compare_angles(h, Angle::two_pi()) > 0) h = Angle::two_pi();
  if (lo == h || compare_angles(lo, h) >= 0) throw ConfigError("empty arc [" + lo.str() + ", " + hi.str() + ")");
  return Arc{lo, h};
}

ArcProduct ArcProduct::full(int N) {
  ArcProduct p;
  for (int i = 0; i < N; ++i) p.arcs.push_back(Arc{Angle::zero(), Angle::two_pi()});
  return p;
}

double ArcProduct::measure() const {
  double m = 1.0;
  for (const auto& a : arcs) m *= a.length();
  return m;
}

bool ArcProduct::is_full() const {
  for (const auto& a : arcs)
    if (!a.lo.is_zero() || !a.hi.is_two_pi()) return false;
  return true;
}

std::string ArcProduct::str() const {
  std::string out;
  for (size_t i = 0; i < arcs.size(); ++i) out += (i ? " x " : "") + arcs[i].str();
  return out;
}

std::vector<ArcProduct> parse_arc_spec(const std::string& spec, int N) {
  std::string s = strip(spec);
  std::vector<std::vector<Arc>> coords;
  for (const auto& item : split(s, ',')) {
    auto parts = split(item, ':');
    if (parts.size() != 2) throw ConfigError("arc item must be lo:hi, got '" + item + "'");
    Angle lo = parse_angle(parts[0]);
    Angle hi = parse_angle(parts[1]);
    std::vector<Arc> pieces;
    if (!(lo == hi) && compare_angles(lo, hi) > 0 && compare_angles(lo, Angle::two_pi()) < 0) {
      pieces.push_back(make_arc(lo, Angle::two_pi()));
      if (!hi.is_zero()) pieces.push_back(make_arc(Angle::zero(), hi));
    } else {
      pieces.push_back(make_arc(lo, hi));
    }
    coords.push_back(pieces);
  }
  std::vector<ArcProduct> out;
  if (N == 1) {
    std::vector<Arc> all;
    for (auto& c : coords)
      for (auto& a : c) all.push_back(a);
    std::sort(all.begin(), all.end(), [](const Arc& x, const Arc& y) { return compare_angles(x.lo, y.lo) < 0; });
    for (size_t i = 1; i < all.size(); ++i)
      if (compare_angles(all[i].lo, all[i - 1].hi) < 0) throw ConfigError("arcs overlap: " + spec);
    for (auto& a : all) out.push_back(ArcProduct{{a}});
    return out;
  }
  if (static_cast<int>(coords.size()) != N)
    throw ConfigError("arc spec needs exactly " + std::to_string(N) + " comma-separated items for this field");
  std::vector<ArcProduct> acc{ArcProduct{}};
  for (auto& c : coords) {
    std::vector<ArcProduct> next;
    for (auto& partial : acc) {
      for (auto& a : c) {
        ArcProduct p = partial;
        p.arcs.push_back(a);
        next.push_back(p);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

double HeightBound::value() const { return std::sqrt(h2.get_d()); }

Rational HeightBound::pow2N(int N) const {
  Rational r = 1;
  for (int i = 0; i < N; ++i) r *= h2;
  return r;
}

HeightBound parse_height(const std::string& text) {
  std::string s = strip(text);
  HeightBound h;
  h.label = s;
  if (s.rfind("sqrt(", 0) == 0 && !s.empty() && s.back() == ')') {
    h.h2 = parse_rational(s.substr(5, s.size() - 6));
  } else {
    Rational v = parse_rational(s);
    if (sgn(v) <= 0) throw ConfigError("height bound must be positive: " + text);
    h.h2 = v * v;
  }
  if (sgn(h.h2) <= 0) throw ConfigError("height bound must be positive: " + text);
  return h;
}

std::vector<HeightBound> parse_height_list(const std::string& text) {
  std::vector<HeightBound> out;
  for (const auto& item : split(strip(text), ',')) {
    if (item.empty()) continue;
    out.push_back(parse_height(item));
  }
  if (out.empty()) throw ConfigError("empty height list");
  return out;
}

HeightBound height_from_int(long h) {
  HeightBound b;
  b.h2 = Rational(h) * h;
  b.label = std::to_string(h);
  return b;
}

}  // namespace normone
