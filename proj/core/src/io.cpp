#include "besovcap/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace besovcap {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parameter_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parameter_error("cannot write file: " + path);
  out << content;
  if (!out) throw parameter_error("write failed: " + path);
}

std::string grid_function_to_text(const GridFunction& f) {
  std::ostringstream os;
  os << "besovcap-grid 1\n";
  os << "dim " << f.dim() << "\n";
  os << "spacing " << format_double(f.spacing()) << "\n";
  os << "origin";
  for (int a = 0; a < f.dim(); ++a) os << ' ' << format_double(f.origin(a));
  os << "\nextents";
  for (int a = 0; a < f.dim(); ++a) os << ' ' << f.extent(a);
  os << "\n";
  const auto samples = f.samples();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    os << format_double(samples[i]);
    os << (((i + 1) % 8 == 0 || i + 1 == samples.size()) ? '\n' : ' ');
  }
  return os.str();
}

GridFunction grid_function_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  int version = 0;
  if (!(in >> tag >> version) || tag != "besovcap-grid" || version != 1)
    throw parameter_error("grid function: missing 'besovcap-grid 1' header");
  std::string key;
  int dim = 0;
  if (!(in >> key >> dim) || key != "dim") throw parameter_error("grid function: expected 'dim'");
  if (dim < 1 || dim > 3) throw parameter_error("grid function: dim must be 1, 2 or 3");
  double spacing = 0.0;
  if (!(in >> key >> spacing) || key != "spacing" || !(spacing > 0.0))
    throw parameter_error("grid function: expected positive 'spacing'");
  if (!(in >> key) || key != "origin") throw parameter_error("grid function: expected 'origin'");
  std::array<std::int64_t, 3> lo{0, 0, 0};
  for (int a = 0; a < dim; ++a) {
    double origin = 0.0;
    if (!(in >> origin)) throw parameter_error("grid function: bad origin");
    const double cells = origin / spacing;
    lo[a] = static_cast<std::int64_t>(std::llround(cells));
    if (std::fabs(static_cast<double>(lo[a]) * spacing - origin) >
        1e-9 * std::max(spacing, std::fabs(origin)))
      throw parameter_error("grid function: origin is not on the lattice");
  }
  if (!(in >> key) || key != "extents") throw parameter_error("grid function: expected 'extents'");
  std::array<std::int64_t, 3> ext{1, 1, 1};
  for (int a = 0; a < dim; ++a) {
    if (!(in >> ext[a]) || ext[a] < 1) throw parameter_error("grid function: bad extents");
  }
  GridFunction f(dim, lo, ext, spacing);
  for (auto& v : f.samples()) {
    if (!(in >> v)) throw parameter_error("grid function: not enough samples");
  }
  double excess;
  if (in >> excess) throw parameter_error("grid function: trailing samples");
  f.check_finite();
  return f;
}

void write_grid_function(const std::string& path, const GridFunction& f) {
  write_text_file(path, grid_function_to_text(f));
}

GridFunction read_grid_function(const std::string& path) {
  return grid_function_from_text(read_text_file(path));
}

namespace {

std::string hash_comment(std::uint64_t config_hash) {
  return "# config_hash=" + hash_hex(config_hash) + "\n";
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// minimal deterministic JSON emitter (flat structures, %.17g numbers)
class Json {
public:
  Json& begin() { return raw("{"); }
  Json& end() { return raw("}"); }
  Json& key(const std::string& k) {
    sep();
    os_ << '"' << k << "\":";
    fresh_ = true;
    return *this;
  }
  Json& str(const std::string& v) {
    os_ << '"' << json_escape(v) << '"';
    return *this;
  }
  Json& num(double v) {
    os_ << format_double(v);
    return *this;
  }
  Json& integer(std::int64_t v) {
    os_ << v;
    return *this;
  }
  Json& raw(const std::string& s) {
    os_ << s;
    if (s == "{" || s == "[") fresh_ = true;
    return *this;
  }
  Json& next() {
    fresh_ = false;
    return *this;
  }
  std::string take() { return os_.str(); }

private:
  void sep() {
    if (!fresh_) os_ << ',';
    fresh_ = false;
  }
  std::ostringstream os_;
  bool fresh_ = true;
};

void witness_json(Json& j, const FamilyWitness& w) {
  j.raw("{").key("tau").num(w.tau);
  j.key("eps").num(w.eps);
  j.key("gamma").num(w.gamma);
  j.key("extra_index").integer(w.extra_index);
  j.key("iterations").integer(w.iterations);
  j.key("evaluations").integer(w.evaluations);
  j.raw("}");
}

void space_json(Json& j, const CapacitySpace& s) {
  j.raw("{");
  if (s.type == CapacitySpace::Type::sobolev) {
    j.key("type").str("sobolev");
    j.key("p").num(s.p);
  } else {
    j.key("type").str("besov");
    j.key("p").num(s.p);
    j.key("q").num(s.q);
    j.key("alpha").num(s.alpha);
  }
  j.raw("}");
}

} // namespace

std::string curve_to_csv(const ModulusCurve& curve, std::uint64_t config_hash) {
  std::ostringstream os;
  os << hash_comment(config_hash);
  os << "delta,value\n";
  const auto knots = curve.knots();
  const auto values = curve.values();
  for (std::size_t i = 0; i < knots.size(); ++i)
    os << format_double(knots[i]) << ',' << format_double(values[i]) << '\n';
  os << "plateau," << format_double(curve.plateau()) << '\n';
  return os.str();
}

std::string profile_to_csv(const RearrangementProfile& profile, std::uint64_t config_hash) {
  std::ostringstream os;
  os << hash_comment(config_hash);
  os << "t_break,level\n";
  const auto breaks = profile.breakpoints();
  const auto levels = profile.levels();
  for (std::size_t i = 0; i < breaks.size(); ++i)
    os << format_double(breaks[i]) << ',' << format_double(levels[i]) << '\n';
  return os.str();
}

std::string besov_to_json(const std::vector<BesovEvaluation>& per_axis,
                          std::uint64_t config_hash) {
  Json j;
  j.begin();
  j.key("config_hash").str(hash_hex(config_hash));
  double sum = 0.0;
  j.key("axes").raw("[");
  for (std::size_t i = 0; i < per_axis.size(); ++i) {
    const auto& e = per_axis[i];
    if (i) j.raw(",");
    j.raw("{").key("axis").integer(e.axis);
    j.key("n").integer(e.exponents.n);
    j.key("p").num(e.exponents.p);
    j.key("q").num(e.exponents.q);
    j.key("alpha").num(e.exponents.alpha);
    j.key("value").num(e.value);
    j.key("head_part").num(e.head_part);
    j.key("body_part").num(e.body_part);
    j.key("tail_part").num(e.tail_part);
    j.raw("}");
    sum += e.value;
  }
  j.raw("]").next();
  j.key("sum").num(sum);
  j.end();
  return j.take() + "\n";
}

std::string estimates_to_json(const std::vector<CapacityEstimate>& estimates,
                              std::uint64_t config_hash) {
  Json j;
  j.begin();
  j.key("config_hash").str(hash_hex(config_hash));
  j.key("estimates").raw("[");
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const auto& e = estimates[i];
    if (i) j.raw(",");
    j.raw("{").key("value").num(e.value);
    j.key("kind").str(e.kind == EstimateKind::upper   ? "upper"
                      : e.kind == EstimateKind::lower ? "lower"
                                                      : "exact");
    j.key("space");
    space_json(j, e.space);
    j.next().key("witness");
    witness_json(j, e.witness);
    j.next().key("derivation").str(e.derivation);
    j.raw("}");
  }
  j.raw("]").next();
  j.end();
  return j.take() + "\n";
}

std::string sweep_to_csv(const SweepResult& sweep, std::uint64_t config_hash) {
  std::ostringstream os;
  os << hash_comment(config_hash);
  os << "alpha,J\n";
  for (std::size_t i = 0; i < sweep.alphas.size(); ++i)
    os << format_double(sweep.alphas[i]) << ',' << format_double(sweep.J_values[i]) << '\n';
  return os.str();
}

std::string sweep_to_json(const SweepResult& sweep, std::uint64_t config_hash) {
  Json j;
  j.begin();
  j.key("config_hash").str(hash_hex(config_hash));
  j.key("direction").str(sweep.direction == SweepDirection::to_one ? "to_one" : "to_zero");
  j.key("n").integer(sweep.n);
  j.key("p").num(sweep.p);
  j.key("q").num(sweep.q);
  j.key("target").num(sweep.target);
  j.key("extrapolated").num(sweep.extrapolated);
  j.key("relative_error").num(sweep.relative_error);
  j.key("model_residual").num(sweep.model_residual);
  j.key("model").str(sweep.model);
  j.end();
  return j.take() + "\n";
}

} // namespace besovcap
