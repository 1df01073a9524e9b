#include "erdos/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "erdos/errors.hpp"

namespace erdos {

const char* family_name(Family family) {
  switch (family) {
    case Family::Geometric: return "geometric";
    case Family::Power: return "power";
    case Family::Example5: return "example5";
    case Family::Example6: return "example6";
    case Family::Cluster: return "cluster";
    case Family::Integers: return "integers";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family family_from_name(const std::string& name) {
  if (name == "geometric") return Family::Geometric;
  if (name == "power") return Family::Power;
  if (name == "example5") return Family::Example5;
  if (name == "example6") return Family::Example6;
  if (name == "cluster") return Family::Cluster;
  if (name == "integers") return Family::Integers;
  if (name == "custom") return Family::Custom;
  throw Error(ErrorCode::BadParams, "unknown pattern family '" + name + "'");
}

Json GenParams::to_json() const {
  Json j = Json::object();
  if (ratio) j["ratio"] = rat_str(*ratio);
  if (alpha) j["alpha"] = rat_str(*alpha);
  if (alpha) j["denom_bound_log2"] = denom_bound_log2;
  if (lo) j["lo"] = rat_str(*lo);
  if (hi) j["hi"] = rat_str(*hi);
  if (count) j["count"] = *count;
  if (!anchors.empty()) {
    Json arr = Json::array();
    for (const auto& a : anchors) arr.push_back(rat_str(a));
    j["anchors"] = arr;
    j["direction"] = block_up ? "up" : "down";
  }
  if (!block_gaps.empty()) {
    Json arr = Json::array();
    for (const auto& g : block_gaps) arr.push_back(rat_str(g));
    j["block_gaps"] = arr;
  }
  if (!bases.empty()) {
    Json arr = Json::array();
    for (const auto& b : bases) arr.push_back(rat_str(b));
    j["bases"] = arr;
  }
  return j;
}

Rational Pattern::span() const {
  if (points.empty()) return Rational(0);
  return points.front() - points.back();
}

Rational Pattern::max_abs() const {
  Rational best(0);
  for (const auto& y : points) best = rat_max(best, rat_abs(y));
  return best;
}

Rational Pattern::max_gap() const {
  if (points.size() < 2) throw Error(ErrorCode::TooFewPoints, "max_gap needs k >= 2");
  Rational best = points[0] - points[1];
  for (std::size_t i = 1; i + 1 < points.size(); ++i)
    best = rat_max(best, points[i] - points[i + 1]);
  return best;
}

Rational Pattern::min_gap() const {
  if (points.size() < 2) throw Error(ErrorCode::TooFewPoints, "min_gap needs k >= 2");
  Rational best = points[0] - points[1];
  for (std::size_t i = 1; i + 1 < points.size(); ++i)
    best = rat_min(best, points[i] - points[i + 1]);
  return best;
}

void Pattern::validate() const {
  if (points.empty()) throw Error(ErrorCode::EmptyPattern, "pattern has no points");
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i] <= points[i + 1])
      throw Error(ErrorCode::BadParams, "pattern points not strictly decreasing");
}

Pattern Pattern::translated(const Rational& shift) const {
  Pattern out = *this;
  for (auto& y : out.points) y += shift;
  return out;
}

Pattern Pattern::scaled(const Rational& factor) const {
  if (factor == 0) throw Error(ErrorCode::ZeroScale, "pattern scale by 0");
  Pattern out = *this;
  for (auto& y : out.points) y *= factor;
  if (factor < 0) std::reverse(out.points.begin(), out.points.end());
  return out;
}

Pattern Pattern::tail(std::size_t drop) const {
  if (drop >= points.size())
    throw Error(ErrorCode::TooFewPoints, "tail would empty the pattern");
  Pattern out = *this;
  out.points.erase(out.points.begin(), out.points.begin() + static_cast<long>(drop));
  return out;
}

Pattern Pattern::subset(const std::vector<std::size_t>& indices) const {
  Pattern out;
  out.family = family;
  out.params = params;
  out.stage = stage;
  out.points.reserve(indices.size());
  for (std::size_t idx : indices) out.points.push_back(points.at(idx));
  out.validate();
  return out;
}

Json Pattern::to_json() const {
  Json j = Json::object();
  j["schema_version"] = 1;
  j["type"] = "pattern";
  j["family"] = family_name(family);
  j["params"] = params;
  j["stage"] = stage;
  Json pts = Json::array();
  for (const auto& y : points) pts.push_back(rat_str(y));
  j["points"] = pts;
  return j;
}

Pattern Pattern::from_json(const Json& j) {
  Pattern p;
  if (!j.contains("points") || !j["points"].is_array())
    throw Error(ErrorCode::ParseError, "pattern json lacks a points array");
  for (const auto& item : j["points"]) {
    if (!item.is_string()) throw Error(ErrorCode::ParseError, "pattern points must be strings");
    p.points.push_back(parse_rational(item.get<std::string>()));
  }
  std::sort(p.points.begin(), p.points.end(), std::greater<Rational>());
  for (std::size_t i = 0; i + 1 < p.points.size(); ++i)
    if (p.points[i] == p.points[i + 1])
      throw Error(ErrorCode::DuplicatePoint, rat_str(p.points[i]));
  if (j.contains("family")) p.family = family_from_name(j["family"].get<std::string>());
  if (j.contains("params")) p.params = j["params"];
  if (j.contains("stage")) p.stage = j["stage"].get<int>();
  p.validate();
  return p;
}

Pattern make_pattern(std::vector<Rational> points, Family family, Json params, int stage) {
  Pattern p;
  p.points = std::move(points);
  std::sort(p.points.begin(), p.points.end(), std::greater<Rational>());
  p.family = family;
  p.params = std::move(params);
  p.stage = stage;
  p.validate();
  return p;
}

namespace {

// Best continued-fraction convergent of x with denominator <= 2^den_log2.
Rational cf_approx(const Rational& x, long den_log2) {
  BigInt max_den = 1;
  mpz_mul_2exp(max_den.get_mpz_t(), max_den.get_mpz_t(), static_cast<unsigned long>(den_log2));
  BigInt p0(1), q0(0);  // h_{-1}
  BigInt p1, q1(1);     // h_0 = floor(x)
  p1 = rat_floor(x);
  Rational rest = x - Rational(p1);
  while (rest != 0) {
    Rational inv = Rational(1) / rest;
    BigInt a = rat_floor(inv);
    rest = inv - Rational(a);
    BigInt p2 = a * p1 + p0;
    BigInt q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  return make_rational(p1, q1);
}

// k^(pn/pd) for integers k >= 1, 0 < pn/pd < 1, rounded down at scale 2^-64.
Rational rational_power(unsigned long k, const Rational& alpha) {
  unsigned long pn = mpz_get_ui(alpha.get_num().get_mpz_t());
  unsigned long pd = mpz_get_ui(alpha.get_den().get_mpz_t());
  BigInt base(static_cast<long>(k));
  BigInt n;
  mpz_pow_ui(n.get_mpz_t(), base.get_mpz_t(), pn);  // k^pn
  BigInt scale(1);
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 64);
  BigInt scaled;
  BigInt scale_pow;
  mpz_pow_ui(scale_pow.get_mpz_t(), scale.get_mpz_t(), pd);
  scaled = n * scale_pow;
  BigInt root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), pd);  // floor((k^pn)^(1/pd) * 2^64)
  return make_rational(root, scale);
}

void require(bool ok, const std::string& constraint) {
  if (!ok) throw Error(ErrorCode::BadParams, constraint);
}

}  // namespace

Pattern generate(Family family, const GenParams& params, int stage) {
  require(stage >= 1, "stage >= 1");
  std::vector<Rational> pts;
  Json used = params.to_json();

  switch (family) {
    case Family::Geometric: {
      require(params.ratio.has_value(), "geometric needs --ratio");
      const Rational& rho = *params.ratio;
      require(rho > 0 && rho < 1, "geometric ratio in (0,1)");
      Rational v(1);
      for (int i = 0; i < stage; ++i) { pts.push_back(v); v *= rho; }
      break;
    }
    case Family::Power: {
      require(params.alpha.has_value(), "power needs --alpha");
      const Rational& alpha = *params.alpha;
      require(alpha > 0 && alpha < 1, "power exponent in (0,1)");
      require(params.denom_bound_log2 >= 8 && params.denom_bound_log2 <= 62,
              "denom_bound_log2 in [8,62]");
      for (long k = stage; k >= 1; --k) {
        Rational v = rational_power(static_cast<unsigned long>(k), alpha);
        pts.push_back(cf_approx(v, params.denom_bound_log2));
      }
      break;
    }
    case Family::Example5: {
      const auto& anchors = params.anchors;
      require(static_cast<long>(anchors.size()) >= stage + 1,
              "example5 needs at least stage+1 anchors");
      for (std::size_t i = 0; i + 1 < anchors.size(); ++i)
        require(anchors[i] > anchors[i + 1], "example5 anchors strictly decreasing");
      require(anchors.back() > 0, "example5 anchors positive");
      Json gaps_used = Json::array();
      for (int k = 1; k <= stage; ++k) {
        Rational bound = (anchors[k - 1] - anchors[k]) / Rational(4L * k * k);
        Rational gap;
        if (static_cast<int>(params.block_gaps.size()) >= k)
          gap = params.block_gaps[k - 1];
        else
          gap = largest_pow2_below(bound);
        require(gap > 0 && gap < bound,
                "example5 block gap must satisfy 0 < eps_k < (x_k2 - x_(k+1)2)/(4k^2)");
        gaps_used.push_back(rat_str(gap));
        for (int i = 0; i <= 2 * k; ++i) {
          Rational offset = Rational(i) * gap;
          pts.push_back(params.block_up ? anchors[k - 1] + offset : anchors[k - 1] - offset);
        }
      }
      used["gaps_used"] = gaps_used;
      break;
    }
    case Family::Example6: {
      const auto& bases = params.bases;
      require(static_cast<long>(bases.size()) >= stage, "example6 needs at least stage bases");
      require(bases.front() > 0, "example6 bases positive");
      for (std::size_t i = 0; i + 1 < bases.size(); ++i)
        require(bases[i] < bases[i + 1], "example6 bases strictly increasing");
      for (int k = 1; k <= stage; ++k) {
        const Rational& base = bases[k - 1];
        Rational width = k == 1 ? base / 2 : (base - bases[k - 2]) / 2;
        width = rat_min(width, Rational(1));
        long count = static_cast<long>(k) * mpz_get_si(rat_ceil(base).get_mpz_t()) + 1;
        Rational step = width / Rational(count - 1);
        for (long i = 0; i < count; ++i) pts.push_back(base - Rational(i) * step);
      }
      break;
    }
    case Family::Cluster: {
      long n = params.count.value_or(stage);
      require(n >= 1, "cluster count >= 1");
      Rational lo = params.lo.value_or(Rational(0));
      Rational hi = params.hi.value_or(Rational(1));
      require(lo < hi || n == 1, "cluster interval must have lo < hi");
      if (n == 1) {
        pts.push_back(hi);
      } else {
        Rational step = (hi - lo) / Rational(n - 1);
        for (long j = 0; j < n; ++j) pts.push_back(hi - Rational(j) * step);
      }
      break;
    }
    case Family::Integers: {
      BigInt lo = params.lo ? rat_ceil(*params.lo) : BigInt(0);
      BigInt hi = params.hi ? rat_floor(*params.hi) : BigInt(stage - 1);
      require(lo <= hi, "integers range empty");
      for (BigInt v = hi; v >= lo; --v) pts.push_back(Rational(v));
      break;
    }
    case Family::Custom:
      throw Error(ErrorCode::BadParams, "custom patterns are loaded from files, not generated");
  }

  std::sort(pts.begin(), pts.end(), std::greater<Rational>());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    require(pts[i] != pts[i + 1], "generated points collide; adjust parameters");

  Pattern p;
  p.points = std::move(pts);
  p.family = family;
  p.params = std::move(used);
  p.stage = stage;
  p.validate();
  return p;
}

Pattern load_pattern(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();

  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::ParseError, "invalid pattern json in '" + path + "'");
    return Pattern::from_json(j);
  }

  std::vector<Rational> pts;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    pts.push_back(parse_rational(line.substr(b, e - b + 1)));
  }
  if (pts.empty()) throw Error(ErrorCode::EmptyPattern, "no points in '" + path + "'");
  std::sort(pts.begin(), pts.end(), std::greater<Rational>());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i] == pts[i + 1]) throw Error(ErrorCode::DuplicatePoint, rat_str(pts[i]));

  Pattern p;
  p.points = std::move(pts);
  p.family = Family::Custom;
  p.params = Json::object();
  p.stage = static_cast<int>(p.points.size());
  p.validate();
  return p;
}

void save_pattern(const Pattern& pattern, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << pattern.to_json().dump(2) << "\n";
}

}  // namespace erdos
