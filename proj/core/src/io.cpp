#include "serrewt/io.hpp"

#include "serrewt/errors.hpp"
#include "serrewt/numeric.hpp"

namespace serrewt::io {
namespace {

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t idx) { return ptr + "/" + std::to_string(idx); }

std::int64_t read_int(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw ConfigError(ptr, "expected an integer");
  return j.get<std::int64_t>();
}

const json* find(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

void require_object(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw ConfigError(ptr.empty() ? "/" : ptr, "expected an object");
}

const json& require(const json& obj, const std::string& key, const std::string& ptr) {
  const json* v = find(obj, key);
  if (!v) throw ConfigError(child(ptr, key), "required field is missing");
  return *v;
}

Tuple read_tuple(const json& j, const std::string& ptr, int f, std::int64_t lo, std::int64_t hi) {
  if (!j.is_array()) throw ConfigError(ptr, "expected an array");
  if (static_cast<int>(j.size()) != f) throw ConfigError(ptr, "expected " + std::to_string(f) + " entries");
  Tuple t;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::int64_t v = read_int(j[i], child(ptr, i));
    if (v < lo || v > hi)
      throw ConfigError(child(ptr, i), "value " + std::to_string(v) + " is outside [" + std::to_string(lo) + ", " +
                                           std::to_string(hi) + "]");
    t.push_back(v);
  }
  return t;
}

constexpr std::int64_t kAny = std::int64_t{1} << 40;

InertialChar read_inertial(const json& j, const std::string& ptr, const Params& P) {
  require_object(j, ptr);
  const json* s = find(j, "scalar");
  const json* d = find(j, "digits");
  if (s && d) throw ConfigError(ptr, "give either scalar or digits, not both");
  if (s) return InertialChar(P.p, P.f, read_int(*s, child(ptr, "scalar")));
  if (d) return InertialChar::from_digits(P.p, P.f, read_tuple(*d, child(ptr, "digits"), P.f, -kAny, kAny));
  throw ConfigError(child(ptr, "scalar"), "a character needs scalar or digits");
}

GaloisChar read_galois(const json& j, const std::string& ptr, const Params& P) {
  const InertialChar x = read_inertial(j, ptr, P);
  std::int64_t dlog = 0;
  if (const json* u = find(j, "unramified_dlog")) dlog = read_int(*u, child(ptr, "unramified_dlog"));
  return make_galois_char(P, x.scalar(), dlog);
}

}  // namespace

json to_json(const Tuple& t) {
  json a = json::array();
  for (auto x : t) a.push_back(x);
  return a;
}

json to_json(const InertialChar& x) { return json{{"scalar", x.scalar()}, {"digits", to_json(x.digits())}}; }

json to_json(const GaloisChar& x) {
  json j = to_json(x.inertial);
  j["unramified_dlog"] = x.unramified_dlog;
  return j;
}

json to_json(const RankOneBreuil& M) {
  return json{{"r", to_json(M.r())}, {"a_norm_dlog", M.a_norm_dlog()}, {"c", to_json(M.c())}, {"alpha", to_json(M.alpha())}};
}

json to_json(const ExtBasis& B) {
  json slots = json::array();
  for (const auto& s : B.slots) slots.push_back(to_json(s));
  return json{{"slots", slots}, {"delta_slot", B.delta_slot ? json(*B.delta_slot) : json(nullptr)}, {"dim", B.dim()}};
}

json to_json(const SerreWeight& w) {
  const SerreWeight c = w.canonical();
  return json{{"m", to_json(c.m)}, {"n", to_json(c.n)}};
}

json to_json(const WeightParam& x) {
  json J = json::array();
  for (int i : x.J) J.push_back(i);
  return json{{"J", J}, {"d", to_json(x.d)}, {"exceptional", x.exceptional}};
}

json to_json(const PartitionCell& c) {
  json W = json::array(), extra = json::array();
  for (const auto& [prm, w] : c.W) W.push_back(json{{"weight", to_json(w)}, {"param", to_json(prm)}});
  for (const auto& [prm, w] : c.extra) extra.push_back(json{{"weight", to_json(w)}, {"param", to_json(prm)}});
  return json{{"a", to_json(c.a)}, {"delta_a", c.delta_a}, {"W_a", W}, {"Wprime_extra", extra}};
}

json to_json(const LSpace& L) {
  json t = json::array(), deg = json::array();
  for (const auto& x : L.t_values) t.push_back(to_json(x));
  for (const auto& x : L.degrees) deg.push_back(to_json(x));
  return json{{"d_dagger", to_json(L.d_dagger)}, {"t_values", t}, {"degrees", deg}, {"dim", L.dim()}};
}

json to_json(const TypePair& t) { return json{{"lambda", to_json(t.lambda)}, {"lambda_prime", to_json(t.lambda_prime)}}; }

json to_json(const brauer::Multiset& ms) {
  json a = json::array();
  for (const auto& c : ms) {
    json w = to_json(c.weight);
    w["multiplicity"] = c.multiplicity;
    a.push_back(w);
  }
  return a;
}

Scenario parse_scenario(const json& j) {
  require_object(j, "");
  const json& pj = require(j, "params", "");
  require_object(pj, "/params");
  auto small = [&](const char* key, bool required, int dflt) {
    const json* v = find(pj, key);
    if (!v) {
      if (required) throw ConfigError(child("/params", key), "required field is missing");
      return dflt;
    }
    const std::int64_t x = read_int(*v, child("/params", key));
    if (x < 1 || x > 1000) throw ConfigError(child("/params", key), "value out of range");
    return static_cast<int>(x);
  };
  const int p = small("p", true, 0), f = small("f", true, 0), e = small("eprime", true, 0);
  const int s = small("kE_extra_degree", false, 1);
  Scenario sc;
  try {
    sc.params = make_params(p, f, e, s);
  } catch (const Error& err) {
    const char* key = (err.kind() == ErrorKind::NotPrime || err.kind() == ErrorKind::CharacteristicTwo) ? "p" : "";
    throw ConfigError(key[0] ? "/params/p" : "/params", err.what());
  }
  const Params& P = sc.params;
  if (const json* x = find(j, "chi1")) sc.chi1 = read_galois(*x, "/chi1", P);
  if (const json* x = find(j, "chi2")) sc.chi2 = read_galois(*x, "/chi2", P);
  if (const json* x = find(j, "chi")) sc.chi = read_galois(*x, "/chi", P);
  if (const json* x = find(j, "a")) sc.a = read_tuple(*x, "/a", f, 0, e);
  if (const json* x = find(j, "a_max")) sc.a_max = read_tuple(*x, "/a_max", f, 0, e);
  if (const json* x = find(j, "d")) sc.d = read_tuple(*x, "/d", f, 0, e);
  if (const json* x = find(j, "J")) {
    if (!x->is_array()) throw ConfigError("/J", "expected an array");
    std::vector<int> J;
    for (std::size_t i = 0; i < x->size(); ++i) {
      const std::int64_t v = read_int((*x)[i], child("/J", i));
      if (v < 0 || v >= f) throw ConfigError(child("/J", i), "index outside [0, f-1]");
      J.push_back(static_cast<int>(v));
    }
    sc.J = J;
  }
  if (const json* x = find(j, "tau")) {
    require_object(*x, "/tau");
    sc.tau = TypePair{read_inertial(require(*x, "lambda", "/tau"), "/tau/lambda", P),
                      read_inertial(require(*x, "lambda_prime", "/tau"), "/tau/lambda_prime", P)};
  }
  if (const json* x = find(j, "tres_ramifiee")) {
    if (!x->is_boolean()) throw ConfigError("/tres_ramifiee", "expected a boolean");
    sc.tres_ramifiee = x->get<bool>();
  }
  for (const char* key : {"M", "N"}) {
    const json* x = find(j, key);
    if (!x) continue;
    const std::string ptr = std::string("/") + key;
    require_object(*x, ptr);
    ModuleSpec m;
    m.r = read_tuple(require(*x, "r", ptr), child(ptr, "r"), f, 0, P.e());
    m.c = read_tuple(require(*x, "c", ptr), child(ptr, "c"), f, -kAny, kAny);
    if (const json* u = find(*x, "a_norm_dlog")) m.a_norm_dlog = read_int(*u, child(ptr, "a_norm_dlog"));
    (key[0] == 'M' ? sc.M : sc.N) = m;
  }
  return sc;
}

RankOneBreuil build_module(const Params& P, const ModuleSpec& spec, const std::string& pointer) {
  try {
    return RankOneBreuil::make_dlog(P, spec.r, spec.a_norm_dlog, spec.c);
  } catch (const Error& err) {
    const bool about_c = err.kind() == ErrorKind::RecurrenceViolation;
    throw ConfigError(pointer + (about_c ? "/c" : "/r"), err.what());
  }
}

}  // namespace serrewt::io
