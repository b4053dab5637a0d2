#include "triality/json_io.hpp"

#include <algorithm>
#include <charconv>

#include "triality/error.hpp"

namespace triality::io {

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& reason) { throw ParseError(ptr, reason); }

const json& field(const json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) fail(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ptr + "/" + key, "missing field");
  return *it;
}

const json* optional_field(const json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

long read_int(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    long v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && end == s.data() + s.size()) return v;
  }
  fail(ptr, "expected an integer");
}

std::string read_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected a string");
  return j.get<std::string>();
}

const json& read_array(const json& j, const std::string& ptr, std::size_t size) {
  if (!j.is_array()) fail(ptr, "expected an array");
  if (size != 0 && j.size() != size) {
    fail(ptr, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
  }
  return j;
}

std::string idx(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

// Runs a domain constructor and reports its failure at ptr.
template <class F>
auto at(const std::string& ptr, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (!e.location().empty()) throw;
    fail(ptr, e.reason());
  } catch (const Error& e) {
    fail(ptr, std::string(error_code_name(e.code())) + ": " + e.what());
  }
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail("", std::string("malformed JSON: ") + e.what());
  }
}

ScalarMode mode_of(const json& j, const std::string& ptr, ScalarMode fallback) {
  if (const json* m = optional_field(j, "mode")) {
    return at(ptr + "/mode", [&] { return parse_mode(read_string(*m, ptr + "/mode")); });
  }
  return fallback;
}

// ---------------------------------------------------------------- scalars

Scalar read_scalar(const json& j, const std::string& ptr, ScalarMode mode) {
  if (j.is_string()) {
    return at(ptr, [&] { return Scalar::parse(j.get<std::string>(), mode); });
  }
  if (j.is_number_integer()) {
    if (mode == ScalarMode::complex) return Scalar(Complex(j.get<double>(), 0.0));
    return at(ptr, [&] { return Scalar::parse(j.dump(), mode); });
  }
  if (j.is_number_float()) {
    if (mode != ScalarMode::complex) fail(ptr, "floating-point value in exact mode; write it as a string");
    return Scalar(Complex(j.get<double>(), 0.0));
  }
  if (j.is_array() && mode == ScalarMode::complex) return Scalar(read_complex(j, ptr));
  fail(ptr, "expected a scalar string");
}

json write_scalar(const Scalar& s) { return s.to_string(); }

std::vector<Scalar> read_scalars(const json& j, const std::string& ptr, ScalarMode mode) {
  read_array(j, ptr, 0);
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_scalar(j[i], idx(ptr, i), mode));
  return out;
}

json write_scalars(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(write_scalar(s));
  return a;
}

EigenMultiset read_multiset(const json& j, const std::string& ptr, ScalarMode mode) {
  return EigenMultiset(read_scalars(j, ptr, mode));
}

json write_multiset(const EigenMultiset& m) { return write_scalars(m.sorted()); }

Complex read_complex(const json& j, const std::string& ptr) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array()) {
    read_array(j, ptr, 2);
    if (!j[0].is_number() || !j[1].is_number()) fail(ptr, "expected [re, im] numbers");
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  if (j.is_string()) {
    const Scalar s = at(ptr, [&] { return Scalar::parse(j.get<std::string>(), ScalarMode::complex); });
    return *s.as_complex();
  }
  fail(ptr, "expected a complex number [re, im]");
}

json write_complex(Complex z) { return json::array({z.real(), z.imag()}); }

// -------------------------------------------------------------- octonions

Octonion read_octonion(const json& j, const std::string& ptr, ScalarMode mode) {
  read_array(j, ptr, 8);
  Octonion::Coords c;
  for (std::size_t i = 0; i < 8; ++i) c[i] = read_scalar(j[i], idx(ptr, i), mode);
  return Octonion(std::move(c));
}

json write_octonion(const Octonion& x) {
  return write_scalars(std::vector<Scalar>(x.coords().begin(), x.coords().end()));
}

Mat8 read_mat8(const json& j, const std::string& ptr, ScalarMode mode) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "I") return Mat8::identity(mode);
    if (s == "-I") return -Mat8::identity(mode);
    fail(ptr, "unknown matrix shorthand '" + s + "'");
  }
  read_array(j, ptr, 8);
  Mat8::Rows rows;
  for (std::size_t r = 0; r < 8; ++r) {
    const std::string rp = idx(ptr, r);
    read_array(j[r], rp, 8);
    for (std::size_t c = 0; c < 8; ++c) rows[r][c] = read_scalar(j[r][c], idx(rp, c), mode);
  }
  return at(ptr, [&] { return Mat8(std::move(rows)); });
}

json write_mat8(const Mat8& m) {
  json rows = json::array();
  for (const auto& row : m.rows()) rows.push_back(write_scalars(std::vector<Scalar>(row.begin(), row.end())));
  return rows;
}

std::array<Mat8, 3> read_triple_matrices(const json& j, const std::string& ptr, ScalarMode mode) {
  return {read_mat8(field(j, ptr, "g1"), ptr + "/g1", mode), read_mat8(field(j, ptr, "g2"), ptr + "/g2", mode),
          read_mat8(field(j, ptr, "g3"), ptr + "/g3", mode)};
}

SpinTriple read_triple(const json& j, const std::string& ptr, ScalarMode mode) {
  if (const json* lift = optional_field(j, "lift")) {
    const std::string lp = ptr + "/lift";
    const Octonion x = read_octonion(field(*lift, lp, "x"), lp + "/x", mode);
    const Octonion y = read_octonion(field(*lift, lp, "y"), lp + "/y", mode);
    // Domain failures of the lift are reported as such, not as parse errors.
    return lift_reflection_pair(x, y);
  }
  auto g = read_triple_matrices(j, ptr, mode);
  if (auto diag = diagnose_spin_triple(g[0], g[1], g[2])) {
    throw Error(ErrorCode::InvalidTriple, ptr + ": not a Spin(8) triple: " + diag->describe());
  }
  return SpinTriple::make(std::move(g[0]), std::move(g[1]), std::move(g[2]));
}

json write_triple(const SpinTriple& s) {
  return json{{"g1", write_mat8(s.g(1))}, {"g2", write_mat8(s.g(2))}, {"g3", write_mat8(s.g(3))}};
}

TriSpinElement read_trispin(const json& j, const std::string& ptr, ScalarMode mode) {
  const json& t = field(j, ptr, "t");
  const std::string tp = ptr + "/t";
  std::array<Scalar, 3> coords;
  for (int k = 1; k <= 3; ++k) {
    const std::string key = std::to_string(k);
    coords[static_cast<std::size_t>(k - 1)] = read_scalar(field(t, tp, key.c_str()), tp + "/" + key, mode);
  }
  SpinTriple s = read_triple(field(j, ptr, "spin"), ptr + "/spin", mode);
  return at(ptr, [&] { return TriSpinElement(coords, s); });
}

json write_trispin(const TriSpinElement& z) {
  return json{{"t", {{"1", write_scalar(z.t(1))}, {"2", write_scalar(z.t(2))}, {"3", write_scalar(z.t(3))}}},
              {"spin", write_triple(z.spin())}};
}

// -------------------------------------------------------------- GSpin params

namespace {

struct RawParam {
  bool odd;
  std::vector<Scalar> chi;
  Scalar mu;
};

RawParam read_raw_param(const json& j, const std::string& ptr, ScalarMode fallback) {
  const ScalarMode mode = mode_of(j, ptr, fallback);
  const std::string group = read_string(field(j, ptr, "group"), ptr + "/group");
  if (group != "GSpinOdd" && group != "GSpinEven") {
    fail(ptr + "/group", "expected \"GSpinOdd\" or \"GSpinEven\", got \"" + group + "\"");
  }
  RawParam r{group == "GSpinOdd", read_scalars(field(j, ptr, "chi"), ptr + "/chi", mode),
             read_scalar(field(j, ptr, "mu"), ptr + "/mu", mode)};
  if (const json* n = optional_field(j, "n")) {
    const long nv = read_int(*n, ptr + "/n");
    if (nv < 0) fail(ptr + "/n", "n must be non-negative");
    if (static_cast<std::size_t>(nv) != r.chi.size()) {
      fail(ptr + "/chi", "chi has " + std::to_string(r.chi.size()) + " entries but n = " + std::to_string(nv));
    }
  }
  if (r.mu.is_zero()) fail(ptr + "/mu", "mu must be nonzero");
  for (std::size_t i = 0; i < r.chi.size(); ++i) {
    if (r.chi[i].is_zero()) fail(idx(ptr + "/chi", i), "chi entries must be nonzero");
  }
  return r;
}

}  // namespace

GSpinParam read_param(const json& j, const std::string& ptr, ScalarMode mode) {
  RawParam r = read_raw_param(j, ptr, mode);
  if (r.odd) return GSpinOddParam::make(std::move(r.chi), std::move(r.mu));
  return GSpinEvenParam::make(std::move(r.chi), std::move(r.mu));
}

GSpinOddParam read_odd_param(const json& j, const std::string& ptr, ScalarMode mode) {
  GSpinParam p = read_param(j, ptr, mode);
  if (auto* o = std::get_if<GSpinOddParam>(&p)) return *o;
  fail(ptr + "/group", "expected a GSpinOdd parameter");
}

GSpinEvenParam read_even_param(const json& j, const std::string& ptr, ScalarMode mode) {
  GSpinParam p = read_param(j, ptr, mode);
  if (auto* e = std::get_if<GSpinEvenParam>(&p)) return *e;
  fail(ptr + "/group", "expected a GSpinEven parameter");
}

json write_param(const GSpinParam& c) {
  return std::visit(
      [](const auto& p) {
        const bool odd = std::is_same_v<std::decay_t<decltype(p)>, GSpinOddParam>;
        return json{{"group", odd ? "GSpinOdd" : "GSpinEven"},
                    {"n", p.rank()},
                    {"chi", write_scalars(p.chi)},
                    {"mu", write_scalar(p.mu)},
                    {"mode", std::string(mode_name(p.mode()))}};
      },
      c);
}

Gl2Param read_gl2(const json& j, const std::string& ptr, ScalarMode mode) {
  read_array(j, ptr, 2);
  return {read_scalar(j[0], idx(ptr, 0), mode), read_scalar(j[1], idx(ptr, 1), mode)};
}

// ---------------------------------------------------------- Arthur params

CuspConstituent read_constituent(const json& j, const std::string& ptr, ScalarMode fallback) {
  const ScalarMode mode = mode_of(j, ptr, fallback);
  CuspConstituent c;
  c.label = read_string(field(j, ptr, "label"), ptr + "/label");
  const long deg = read_int(field(j, ptr, "degree"), ptr + "/degree");
  if (deg < 1) fail(ptr + "/degree", "degree must be positive");
  c.degree = static_cast<int>(deg);
  if (const json* sd = optional_field(j, "selfdual")) {
    c.selfdual = at(ptr + "/selfdual", [&] { return parse_selfdual(read_string(*sd, ptr + "/selfdual")); });
  }
  if (const json* rn = optional_field(j, "root_number")) {
    const long v = read_int(*rn, ptr + "/root_number");
    if (v != 1 && v != -1) fail(ptr + "/root_number", "root number must be +1 or -1");
    c.root_number = static_cast<int>(v);
  }
  if (const json* cc = optional_field(j, "central_character")) {
    c.central_character = read_string(*cc, ptr + "/central_character");
  }
  if (const json* sat = optional_field(j, "satake")) {
    const std::string sp = ptr + "/satake";
    if (!sat->is_object()) fail(sp, "expected an object keyed by prime");
    for (const auto& [key, val] : sat->items()) {
      const std::string kp = sp + "/" + key;
      const long p = read_int(json(key), kp);
      if (p < 2) fail(kp, "prime keys must be at least 2");
      EigenMultiset m = read_multiset(val, kp, mode);
      if (m.size() != static_cast<std::size_t>(c.degree)) {
        fail(kp, "expected " + std::to_string(c.degree) + " Satake entries, got " + std::to_string(m.size()));
      }
      c.satake[static_cast<std::uint64_t>(p)] = std::move(m);
    }
  }
  at(ptr, [&] {
    c.validate();
    return 0;
  });
  return c;
}

json write_constituent(const CuspConstituent& c) {
  json j{{"label", c.label}, {"degree", c.degree}, {"selfdual", std::string(selfdual_name(c.selfdual))}};
  if (c.root_number) j["root_number"] = *c.root_number;
  if (c.central_character) j["central_character"] = *c.central_character;
  json sat = json::object();
  for (const auto& [p, m] : c.satake) sat[std::to_string(p)] = write_multiset(m);
  j["satake"] = sat;
  return j;
}

ArthurParam read_arthur(const json& j, const std::string& ptr, ScalarMode mode) {
  const json* arr = &j;
  std::string ap = ptr;
  if (j.is_object()) {
    mode = mode_of(j, ptr, mode);
    arr = &field(j, ptr, "terms");
    ap = ptr + "/terms";
  }
  read_array(*arr, ap, 0);
  ArthurParam p;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const std::string tp = idx(ap, i);
    ArthurTerm t;
    t.pi = read_constituent((*arr)[i], tp, mode);
    if (const json* d = optional_field((*arr)[i], "d")) {
      const long dv = read_int(*d, tp + "/d");
      if (dv < 1) fail(tp + "/d", "d must be positive");
      t.d = static_cast<int>(dv);
    }
    p.terms.push_back(std::move(t));
  }
  return p;
}

json write_arthur(const ArthurParam& p) {
  json a = json::array();
  for (const auto& t : p.terms) {
    json c = write_constituent(t.pi);
    c["d"] = t.d;
    a.push_back(std::move(c));
  }
  return a;
}

SiegelStdShape read_shape(const json& j, const std::string& ptr, ScalarMode fallback) {
  const ScalarMode mode = mode_of(j, ptr, fallback);
  const std::string type = read_string(field(j, ptr, "type"), ptr + "/type");
  auto con = [&](const char* key) { return read_constituent(field(j, ptr, key), ptr + "/" + key, mode); };
  if (type == "GenericCuspidal") {
    GenericCuspidal g;
    g.std7 = con("std");
    if (const json* f = optional_field(j, "g2")) {
      if (!f->is_boolean()) fail(ptr + "/g2", "expected a boolean");
      g.g2 = f->get<bool>();
    }
    if (const json* s = optional_field(j, "spin")) g.spin8 = read_constituent(*s, ptr + "/spin", mode);
    if (const json* t = optional_field(j, "torus")) {
      const std::string tp = ptr + "/torus";
      if (!t->is_object()) fail(tp, "expected an object keyed by prime");
      for (const auto& [key, val] : t->items()) {
        const long p = read_int(json(key), tp + "/" + key);
        if (p < 2) fail(tp + "/" + key, "prime keys must be at least 2");
        g.torus.emplace(static_cast<std::uint64_t>(p), read_odd_param(val, tp + "/" + key, mode));
      }
    }
    return g;
  }
  if (type == "EndoscopicTempered") return EndoscopicTempered{con("pi1"), con("pi2"), con("pi3")};
  if (type == "NonTempered") return NonTempered{con("pi1"), con("pi3")};
  fail(ptr + "/type", "unknown shape type \"" + type + "\"");
}

json write_shape(const SiegelStdShape& s) {
  if (auto g = std::get_if<GenericCuspidal>(&s)) {
    json j{{"type", "GenericCuspidal"}, {"std", write_constituent(g->std7)}, {"g2", g->g2}};
    if (g->spin8) j["spin"] = write_constituent(*g->spin8);
    if (!g->torus.empty()) {
      json t = json::object();
      for (const auto& [p, c] : g->torus) t[std::to_string(p)] = write_param(c);
      j["torus"] = t;
    }
    return j;
  }
  if (auto e = std::get_if<EndoscopicTempered>(&s)) {
    return json{{"type", "EndoscopicTempered"},
                {"pi1", write_constituent(e->pi1)},
                {"pi2", write_constituent(e->pi2)},
                {"pi3", write_constituent(e->pi3)}};
  }
  const auto& n = std::get<NonTempered>(s);
  return json{{"type", "NonTempered"}, {"pi1", write_constituent(n.pi1)}, {"pi3", write_constituent(n.pi3)}};
}

// ---------------------------------------------------------- L-functions

LocalFactor read_factor(const json& j, const std::string& ptr, ScalarMode fallback) {
  const ScalarMode mode = mode_of(j, ptr, fallback);
  const long p = read_int(field(j, ptr, "p"), ptr + "/p");
  if (p < 2) fail(ptr + "/p", "p must be a prime");
  std::vector<Scalar> c = read_scalars(field(j, ptr, "coeffs"), ptr + "/coeffs", mode);
  if (c.empty() || !c.front().is_one()) fail(ptr + "/coeffs/0", "constant coefficient must be 1");
  return LocalFactor(static_cast<std::uint64_t>(p), std::move(c));
}

json write_factor(const LocalFactor& f) {
  return json{{"p", f.prime()}, {"coeffs", write_scalars(f.coeffs())}, {"mode", std::string(mode_name(f.mode()))}};
}

ArchWeightParam read_weights(const json& j, const std::string& ptr) {
  const json& k = j.is_object() ? field(j, ptr, "k") : j;
  const std::string kp = j.is_object() ? ptr + "/k" : ptr;
  read_array(k, kp, 3);
  const int k1 = static_cast<int>(read_int(k[0], idx(kp, 0)));
  const int k2 = static_cast<int>(read_int(k[1], idx(kp, 1)));
  const int k3 = static_cast<int>(read_int(k[2], idx(kp, 2)));
  return siegel_weights(k1, k2, k3);
}

json write_weights(const ArchWeightParam& wp) {
  return json{{"k", {wp.k1, wp.k2, wp.k3}}, {"a", wp.a}, {"b", wp.b}, {"c", wp.c},
              {"w", {wp.w[0], wp.w[1], wp.w[2], wp.w[3]}}};
}

}  // namespace triality::io
