#include "mmaoi/loss_surface.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mmaoi/errors.hpp"

namespace mmaoi {

namespace {

constexpr std::int64_t kMaxCells = 50'000'000;

std::string trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<std::int64_t> parse_int(const std::string& s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end) return std::nullopt;
  return v;
}

// strtod accepts "nan"/"inf", which lets the caller report NonFiniteError
// rather than a generic parse failure.
std::optional<double> parse_real(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

void check_dims(std::int64_t d1, std::int64_t d2) {
  if (d1 < 1 || d2 < 1) {
    throw BadSpec("surface dimensions must be positive, got " + std::to_string(d1) + "x" +
                  std::to_string(d2));
  }
  if (d1 > kMaxCells / d2) {
    throw BadSpec("surface too large: " + std::to_string(d1) + "x" + std::to_string(d2));
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

LossSurface::LossSurface(int d1_max, int d2_max, std::vector<double> values,
                         BoundaryPolicy policy)
    : d1_max_(d1_max), d2_max_(d2_max), policy_(policy) {
  check_dims(d1_max, d2_max);
  if (values.size() != static_cast<std::size_t>(d1_max) * static_cast<std::size_t>(d2_max)) {
    throw BadSpec("surface value count " + std::to_string(values.size()) +
                  " does not match " + std::to_string(d1_max) + "x" + std::to_string(d2_max));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      const auto d1 = i / static_cast<std::size_t>(d2_max) + 1;
      const auto d2 = i % static_cast<std::size_t>(d2_max) + 1;
      throw NonFiniteError("non-finite loss at (" + std::to_string(d1) + "," +
                           std::to_string(d2) + ")");
    }
    bound_ = std::max(bound_, std::abs(values[i]));
  }
  values_ = std::make_shared<const std::vector<double>>(std::move(values));
}

LossSurface LossSurface::with_policy(BoundaryPolicy policy) const {
  LossSurface copy = *this;
  copy.policy_ = policy;
  return copy;
}

double LossSurface::eval(std::int64_t d1, std::int64_t d2, std::uint64_t* clamp_count) const {
  if (d1 < 1 || d2 < 1) {
    throw OutOfDomain("AoI must be positive, got (" + std::to_string(d1) + "," +
                      std::to_string(d2) + ")");
  }
  if (d1 > d1_max_ || d2 > d2_max_) {
    if (policy_ == BoundaryPolicy::Strict) {
      throw OutOfDomain("query (" + std::to_string(d1) + "," + std::to_string(d2) +
                        ") outside surface grid " + std::to_string(d1_max_) + "x" +
                        std::to_string(d2_max_));
    }
    if (clamp_count != nullptr) ++*clamp_count;
    d1 = std::min<std::int64_t>(d1, d1_max_);
    d2 = std::min<std::int64_t>(d2, d2_max_);
  }
  return (*values_)[static_cast<std::size_t>((d1 - 1) * d2_max_ + (d2 - 1))];
}

std::uint64_t LossSurface::fingerprint() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(d1_max_));
  mix(static_cast<std::uint64_t>(d2_max_));
  for (double v : *values_) mix(std::bit_cast<std::uint64_t>(v));
  return h;
}

bool LossSurface::same_grid(const LossSurface& other) const noexcept {
  if (d1_max_ != other.d1_max_ || d2_max_ != other.d2_max_) return false;
  return std::equal(values_->begin(), values_->end(), other.values_->begin(),
                    [](double a, double b) {
                      return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
                    });
}

// ---------------------------------------------------------------------------
// Generators

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::Constant: return "constant";
    case Generator::AoiSum: return "aoi_sum";
    case Generator::AoiWeighted: return "aoi_weighted";
    case Generator::MonotonePower: return "monotone_power";
    case Generator::NonmonoNonsep: return "nonmono_nonsep";
  }
  return "unknown";
}

namespace {

void validate_spec(SurfaceSpec& spec) {
  check_dims(spec.d1_max, spec.d2_max);
  auto& p = spec.params;
  for (double v : p) {
    if (!std::isfinite(v)) throw BadSpec("generator parameters must be finite");
  }
  const auto name = std::string(generator_name(spec.generator));
  auto expect = [&](std::size_t n) {
    if (p.size() != n) {
      throw BadSpec(name + " takes " + std::to_string(n) + " parameter(s), got " +
                    std::to_string(p.size()));
    }
  };
  switch (spec.generator) {
    case Generator::Constant: expect(1); break;
    case Generator::AoiSum: expect(0); break;
    case Generator::AoiWeighted: expect(2); break;
    case Generator::MonotonePower:
      expect(2);
      if (p[0] <= 0.0 || p[1] <= 0.0) throw BadSpec("monotone_power exponents must be > 0");
      break;
    case Generator::NonmonoNonsep:
      if (p.size() > 7) throw BadSpec("nonmono_nonsep takes at most 7 parameters");
      for (std::size_t i = p.size(); i < 7; ++i) p.push_back(kNonmonoDefaults[i]);
      if (p[2] < 0.0 || p[3] < 0.0) throw BadSpec("nonmono_nonsep rates must be >= 0");
      if (p[6] <= 0.0) throw BadSpec("nonmono_nonsep period must be > 0");
      break;
  }
}

}  // namespace

SurfaceSpec parse_surface_spec(std::string_view text, int d1_max, int d2_max) {
  SurfaceSpec spec;
  spec.d1_max = d1_max;
  spec.d2_max = d2_max;
  const auto colon = text.find(':');
  const std::string name = trim(text.substr(0, colon));
  if (name == "constant") {
    spec.generator = Generator::Constant;
  } else if (name == "aoi_sum") {
    spec.generator = Generator::AoiSum;
  } else if (name == "aoi_weighted") {
    spec.generator = Generator::AoiWeighted;
  } else if (name == "monotone_power") {
    spec.generator = Generator::MonotonePower;
  } else if (name == "nonmono_nonsep") {
    spec.generator = Generator::NonmonoNonsep;
  } else {
    throw BadSpec("unknown generator '" + name + "'");
  }
  if (colon != std::string_view::npos) {
    for (const auto& field : split(text.substr(colon + 1), ',')) {
      const auto v = parse_real(field);
      if (!v) throw BadSpec("bad generator parameter '" + field + "'");
      spec.params.push_back(*v);
    }
  }
  validate_spec(spec);
  return spec;
}

std::string format_surface_spec(const SurfaceSpec& spec) {
  std::string out(generator_name(spec.generator));
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += format_double(spec.params[i]);
  }
  return out;
}

double generator_value(const SurfaceSpec& spec, std::int64_t d1, std::int64_t d2) {
  const auto& p = spec.params;
  const double x1 = static_cast<double>(d1);
  const double x2 = static_cast<double>(d2);
  switch (spec.generator) {
    case Generator::Constant: return p[0];
    case Generator::AoiSum: return x1 + x2;
    case Generator::AoiWeighted: return p[0] * x1 + p[1] * x2;
    case Generator::MonotonePower: return std::pow(x1, p[0]) + std::pow(x2, p[1]);
    case Generator::NonmonoNonsep: {
      const double s1 = 1.0 - std::exp(-p[2] * x1);
      const double s2 = 1.0 - std::exp(-p[3] * x2);
      const double dip = 0.5 * (1.0 + std::cos(2.0 * std::numbers::pi * x2 / p[6]));
      return p[0] * s1 + p[1] * s2 + p[4] * s1 * s2 - p[5] * dip;
    }
  }
  throw BadSpec("unknown generator");
}

LossSurface generate_surface(const SurfaceSpec& spec_in, BoundaryPolicy policy) {
  SurfaceSpec spec = spec_in;
  validate_spec(spec);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(spec.d1_max) * static_cast<std::size_t>(spec.d2_max));
  for (int d1 = 1; d1 <= spec.d1_max; ++d1) {
    for (int d2 = 1; d2 <= spec.d2_max; ++d2) values.push_back(generator_value(spec, d1, d2));
  }
  try {
    return LossSurface(spec.d1_max, spec.d2_max, std::move(values), policy);
  } catch (const NonFiniteError& e) {
    throw BadSpec(std::string("generator produced a non-finite value: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Files

LossSurface parse_surface_csv(std::istream& in, BoundaryPolicy policy) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  struct Cell {
    std::int64_t d1, d2;
    double loss;
    std::size_t line;
  };
  std::vector<Cell> cells;
  std::int64_t d1_max = 0;
  std::int64_t d2_max = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty()) continue;
    if (!have_header) {
      const auto cols = split(t, ',');
      if (cols.size() != 3 || cols[0] != "delta1" || cols[1] != "delta2" || cols[2] != "loss") {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header 'delta1,delta2,loss'");
      }
      have_header = true;
      continue;
    }
    const auto cols = split(t, ',');
    if (cols.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 3 columns");
    }
    const auto d1 = parse_int(cols[0]);
    const auto d2 = parse_int(cols[1]);
    const auto loss = parse_real(cols[2]);
    if (!d1 || !d2 || *d1 < 1 || *d2 < 1) {
      throw ParseError("line " + std::to_string(line_no) + ": coordinates must be positive integers");
    }
    if (!loss) throw ParseError("line " + std::to_string(line_no) + ": bad loss '" + cols[2] + "'");
    if (!std::isfinite(*loss)) {
      throw NonFiniteError("line " + std::to_string(line_no) + ": non-finite loss at (" +
                           cols[0] + "," + cols[1] + ")");
    }
    d1_max = std::max(d1_max, *d1);
    d2_max = std::max(d2_max, *d2);
    cells.push_back({*d1, *d2, *loss, line_no});
  }
  if (!have_header) throw ParseError("empty surface file");
  if (cells.empty()) throw ParseError("surface file has no data rows");
  try {
    check_dims(d1_max, d2_max);
  } catch (const BadSpec& e) {
    throw ParseError(e.what());
  }

  const auto n = static_cast<std::size_t>(d1_max * d2_max);
  std::vector<double> values(n, 0.0);
  std::vector<bool> seen(n, false);
  for (const auto& c : cells) {
    const auto idx = static_cast<std::size_t>((c.d1 - 1) * d2_max + (c.d2 - 1));
    if (seen[idx]) {
      throw ParseError("line " + std::to_string(c.line) + ": duplicate cell (" +
                       std::to_string(c.d1) + "," + std::to_string(c.d2) + ")");
    }
    seen[idx] = true;
    values[idx] = c.loss;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen[i]) {
      throw HoleError("missing cell (" + std::to_string(i / d2_max + 1) + "," +
                      std::to_string(i % d2_max + 1) + ") in " + std::to_string(d1_max) + "x" +
                      std::to_string(d2_max) + " domain");
    }
  }
  return LossSurface(static_cast<int>(d1_max), static_cast<int>(d2_max), std::move(values), policy);
}

LossSurface parse_surface_json(std::istream& in, BoundaryPolicy policy) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid surface JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d1_max") || !doc.contains("d2_max") ||
      !doc.contains("values")) {
    throw ParseError("surface JSON needs d1_max, d2_max and values");
  }
  const auto& jd1 = doc["d1_max"];
  const auto& jd2 = doc["d2_max"];
  if (!jd1.is_number_integer() || !jd2.is_number_integer()) {
    throw ParseError("d1_max and d2_max must be integers");
  }
  const auto d1_max = jd1.get<std::int64_t>();
  const auto d2_max = jd2.get<std::int64_t>();
  try {
    check_dims(d1_max, d2_max);
  } catch (const BadSpec& e) {
    throw ParseError(e.what());
  }
  const auto& rows = doc["values"];
  if (!rows.is_array()) throw ParseError("values must be an array of rows");
  if (rows.size() != static_cast<std::size_t>(d1_max)) {
    throw HoleError("values has " + std::to_string(rows.size()) + " rows, expected " +
                    std::to_string(d1_max));
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(d1_max * d2_max));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (!row.is_array()) throw ParseError("row " + std::to_string(r + 1) + " is not an array");
    if (row.size() != static_cast<std::size_t>(d2_max)) {
      throw HoleError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                      " values, expected " + std::to_string(d2_max));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      // JSON has no NaN/inf literal; nlohmann reads them back as null.
      if (row[c].is_null()) {
        throw NonFiniteError("non-finite loss at (" + std::to_string(r + 1) + "," +
                             std::to_string(c + 1) + ")");
      }
      if (!row[c].is_number()) {
        throw ParseError("non-numeric loss at (" + std::to_string(r + 1) + "," +
                         std::to_string(c + 1) + ")");
      }
      values.push_back(row[c].get<double>());
    }
  }
  return LossSurface(static_cast<int>(d1_max), static_cast<int>(d2_max), std::move(values), policy);
}

LossSurface load_surface(const std::filesystem::path& path, BoundaryPolicy policy) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open surface file '" + path.string() + "'");
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  try {
    return ext == ".json" ? parse_surface_json(in, policy) : parse_surface_csv(in, policy);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_surface_csv(std::ostream& out, const LossSurface& surface) {
  out << "delta1,delta2,loss\n";
  const auto values = surface.values();
  std::size_t i = 0;
  for (int d1 = 1; d1 <= surface.d1_max(); ++d1) {
    for (int d2 = 1; d2 <= surface.d2_max(); ++d2) {
      out << d1 << ',' << d2 << ',' << format_double(values[i++]) << '\n';
    }
  }
}

void write_surface_json(std::ostream& out, const LossSurface& surface) {
  nlohmann::json rows = nlohmann::json::array();
  const auto values = surface.values();
  std::size_t i = 0;
  for (int d1 = 1; d1 <= surface.d1_max(); ++d1) {
    nlohmann::json row = nlohmann::json::array();
    for (int d2 = 1; d2 <= surface.d2_max(); ++d2) row.push_back(values[i++]);
    rows.push_back(std::move(row));
  }
  nlohmann::json doc;
  doc["d1_max"] = surface.d1_max();
  doc["d2_max"] = surface.d2_max();
  doc["values"] = std::move(rows);
  out << doc.dump() << '\n';
}

// ---------------------------------------------------------------------------

Domain required_domain(const SystemConfig& config) {
  const std::int64_t tau = config.tau_max;
  return Domain{2 * config.t1 + (tau + 1) * config.t2 - 1,
                2 * config.t2 + (tau + 1) * config.t1 - 1};
}

bool covers(const LossSurface& surface, const Domain& domain) noexcept {
  return surface.d1_max() >= domain.d1 && surface.d2_max() >= domain.d2;
}

}  // namespace mmaoi
