#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "serrewt/acceptance.hpp"
#include "serrewt/brauer.hpp"
#include "serrewt/breuil.hpp"
#include "serrewt/errors.hpp"
#include "serrewt/io.hpp"
#include "serrewt/numeric.hpp"
#include "serrewt/oracle.hpp"
#include "serrewt/weights.hpp"

namespace serrewt::cli {
namespace {

using io::json;

// A command's result: JSON is the source, the table is its projection for
// --format table|csv.
struct Report {
  json doc = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  bool verified = true;  // false turns exit 0 into exit 2
};

struct Options {
  std::string config;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = acceptance::Options{}.seed;
  std::optional<std::int64_t> limit;
  int cx_p = 5, cx_b = 2;
  int only = 0;
};

// Provenance tags for rows that reflect a closed-form formula.
constexpr const char* kTagWeights = "weight-congruences";
constexpr const char* kTagPartition = "partition-cardinality 2^(f-delta_a)";
constexpr const char* kTagTypes = "type-reduction-constituents";
constexpr const char* kTagExt = "ext-slot-basis";
constexpr const char* kTagHom = "hom-criterion z=beta-alpha";
constexpr const char* kTagModels = "typed-model-invariants";
constexpr const char* kTagLatticeDim = "lattice-dim sum(e'-a_i)";
constexpr const char* kTagLatticeMeet = "lattice-meet max-law";
constexpr const char* kTagLcris = "lcris-dim sum(e'-d_i)";
constexpr const char* kTagTypeSearch = "brauer-type-search";

std::string str(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string str(const std::vector<int>& J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
  return s + "}";
}

std::string str(const SerreWeight& w) {
  const SerreWeight c = w.canonical();
  return "m=" + str(c.m) + " n=" + str(c.n);
}

std::string str(const WeightParam& x) { return "J=" + str(x.J) + " d=" + str(x.d) + (x.exceptional ? "*" : ""); }

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& fmt, const char* sep = "; ") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + fmt(xs[i]);
  return s;
}

oracle::Limits limits_of(const Options& o, std::int64_t default_q = oracle::Limits{}.max_q) {
  oracle::Limits lim;
  lim.max_q = default_q;
  if (o.limit) lim.max_ep = lim.max_q = *o.limit;
  return lim;
}

json params_json(const Params& P) {
  return json{{"p", P.p}, {"f", P.f}, {"eprime", P.eprime}, {"kE_extra_degree", P.s}};
}

io::Scenario load(const Options& o) {
  if (o.config.empty()) throw io::ConfigError("", "this subcommand needs --config PATH");
  std::ifstream in(o.config);
  if (!in) throw io::ConfigError("", "cannot open config file " + o.config);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw io::ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  return io::parse_scenario(j);
}

template <class T>
const T& need(const std::optional<T>& x, const char* pointer) {
  if (!x) throw io::ConfigError(pointer, "required field is missing");
  return *x;
}

// ---- subcommands --------------------------------------------------------

Report cmd_weights(const Options& o) {
  const io::Scenario sc = load(o);
  const Params& P = sc.params;
  const GaloisChar& chi1 = need(sc.chi1, "/chi1");
  const GaloisChar& chi2 = need(sc.chi2, "/chi2");
  const auto W = enumerate_Wss(chi1.inertial, chi2.inertial, P.eprime);
  Report r;
  r.columns = {"m", "n", "witnesses", "lcris_dim", "provenance"};
  json ws = json::array();
  for (const auto& ww : W) {
    json wit = json::array();
    std::vector<std::int64_t> dims;
    for (const auto& prm : ww.witnesses) {
      json x = io::to_json(prm);
      x["lcris_dim"] = lcris_dim(P.eprime, prm);
      dims.push_back(lcris_dim(P.eprime, prm));
      wit.push_back(x);
    }
    json w = io::to_json(ww.weight);
    w["witnesses"] = wit;
    w["provenance"] = kTagWeights;
    ws.push_back(w);
    const SerreWeight c = ww.weight.canonical();
    r.rows.push_back({str(c.m), str(c.n), join(ww.witnesses, [](const WeightParam& x) { return str(x); }),
                      join(dims, [](std::int64_t d) { return std::to_string(d); }, ","), kTagWeights});
  }
  r.doc = json{{"command", "weights"},      {"params", params_json(P)},
               {"chi1", io::to_json(chi1)}, {"chi2", io::to_json(chi2)},
               {"count", W.size()},         {"weights", ws}};
  return r;
}

Report cmd_partition(const Options& o) {
  const io::Scenario sc = load(o);
  const Params& P = sc.params;
  const GenericityData gen = genericity(need(sc.chi1, "/chi1").inertial, need(sc.chi2, "/chi2").inertial, P.eprime);
  const Partition part = partition(gen);
  Report r;
  r.columns = {"a", "delta_a", "|W_a|", "2^(f-delta_a)", "check", "W_a", "W'_a extra", "provenance"};
  json cells = json::array();
  for (const auto& cell : part.cells) {
    const std::int64_t expect = ipow(2, P.f - cell.delta_a);
    const bool ok = static_cast<std::int64_t>(cell.W.size()) == expect;
    r.verified = r.verified && ok;
    json c = io::to_json(cell);
    c["size"] = cell.W.size();
    c["expected_size"] = expect;
    c["check"] = ok;
    c["provenance"] = kTagPartition;
    cells.push_back(c);
    auto fmt = [](const std::pair<WeightParam, SerreWeight>& x) { return str(x.second) + " [" + str(x.first) + "]"; };
    r.rows.push_back({str(cell.a), std::to_string(cell.delta_a), std::to_string(cell.W.size()),
                      std::to_string(expect), ok ? "ok" : "FAIL", join(cell.W, fmt), join(cell.extra, fmt),
                      kTagPartition});
  }
  r.doc = json{{"command", "partition"}, {"params", params_json(P)}, {"b", io::to_json(gen.b)},
               {"c", io::to_json(gen.c)}, {"cells", cells}};
  return r;
}

Report cmd_types(const Options& o) {
  const io::Scenario sc = load(o);
  const Params& P = sc.params;
  const GenericityData gen = genericity(need(sc.chi1, "/chi1").inertial, need(sc.chi2, "/chi2").inertial, P.eprime);
  Report r;
  r.columns = {"a", "first", "second", "scalar", "constituents", "theta' constituents", "provenance"};
  json types = json::array();
  for (const auto& a : index_set(P.eprime, P.f)) {
    const TypeOfA t = tau_of_a(gen, a);
    const auto jh = jh_constituents(gen, a);
    json cons = json::array(), consp = json::array();
    for (const auto& w : jh) cons.push_back(io::to_json(w));
    std::vector<SerreWeight> jhp;
    if (t.scalar) {
      jhp = jh_constituents_prime(gen, a);
      for (const auto& w : jhp) consp.push_back(io::to_json(w));
    }
    types.push_back(json{{"a", io::to_json(a)},
                         {"first", io::to_json(t.first)},
                         {"second", io::to_json(t.second)},
                         {"scalar", t.scalar},
                         {"constituents", cons},
                         {"constituents_prime", t.scalar ? consp : json(nullptr)},
                         {"provenance", kTagTypes}});
    auto fmt = [](const SerreWeight& w) { return str(w); };
    r.rows.push_back({str(a), str(t.first.digits()), str(t.second.digits()), t.scalar ? "yes" : "no", join(jh, fmt),
                      t.scalar ? join(jhp, fmt) : "-", kTagTypes});
  }
  r.doc = json{{"command", "types"}, {"params", params_json(P)}, {"b", io::to_json(gen.b)},
               {"c", io::to_json(gen.c)}, {"types", types}};
  return r;
}

std::pair<RankOneBreuil, RankOneBreuil> load_pair(const io::Scenario& sc) {
  const RankOneBreuil M = io::build_module(sc.params, need(sc.M, "/M"), "/M");
  const RankOneBreuil N = io::build_module(sc.params, need(sc.N, "/N"), "/N");
  return {M, N};
}

Report cmd_ext(const Options& o) {
  const io::Scenario sc = load(o);
  const auto [M, N] = load_pair(sc);
  const ExtBasis B = ext_basis(M, N);
  const oracle::Limits lim = limits_of(o);
  json oracle_dim = nullptr;
  if (sc.params.ep() <= lim.max_ep) {
    const std::int64_t d = oracle::brute_ext_dim(M, N, lim);
    oracle_dim = d;
    if (d != B.dim()) oracle_dim = json{{"dim", d}, {"mismatch", true}};
  }
  Report r;
  r.verified = !(oracle_dim.is_object());
  r.columns = {"component", "degrees", "delta_slot", "provenance"};
  for (std::size_t i = 0; i < B.slots.size(); ++i)
    r.rows.push_back({std::to_string(i), str(B.slots[i]),
                      i == 0 && B.delta_slot ? std::to_string(*B.delta_slot) : "-", kTagExt});
  r.rows.push_back({"total", std::to_string(B.dim()), "", kTagExt});
  json basis = io::to_json(B);
  basis["provenance"] = kTagExt;
  r.doc = json{{"command", "ext"}, {"params", params_json(sc.params)}, {"M", io::to_json(M)},
               {"N", io::to_json(N)}, {"ext", basis}, {"oracle_dim", oracle_dim}};
  return r;
}

Report cmd_hom(const Options& o) {
  const io::Scenario sc = load(o);
  const auto [M, N] = load_pair(sc);
  const HomResult h = hom_exists(M, N);
  const oracle::Limits lim = limits_of(o);
  json oracle_dim = nullptr;
  Report r;
  if (sc.params.ep() <= lim.max_ep) {
    const auto space = oracle::brute_hom_space(M, N, lim);
    oracle_dim = space.dim;
    r.verified = space.nonzero() == h.exists;
  }
  r.columns = {"exists", "z", "oracle_dim", "provenance"};
  r.rows.push_back({h.exists ? "yes" : "no", h.exists ? str(h.z) : "-",
                    oracle_dim.is_null() ? "-" : std::to_string(oracle_dim.get<int>()), kTagHom});
  r.doc = json{{"command", "hom"},
               {"params", params_json(sc.params)},
               {"M", io::to_json(M)},
               {"N", io::to_json(N)},
               {"exists", h.exists},
               {"z", h.exists ? io::to_json(h.z) : json(nullptr)},
               {"oracle_dim", oracle_dim},
               {"provenance", kTagHom}};
  return r;
}

Report cmd_models(const Options& o) {
  const io::Scenario sc = load(o);
  const Params& P = sc.params;
  const TypePair& tau = need(sc.tau, "/tau");
  const GaloisChar& chi = need(sc.chi, "/chi");
  const auto models = models_of_type(P, tau, chi);
  Report r;
  r.columns = {"role", "J", "x", "r", "a_norm_dlog", "c", "alpha", "provenance"};
  json ms = json::array();
  for (const auto& m : models) {
    json x = io::to_json(m.module);
    json J = json::array();
    for (int i : m.J) J.push_back(i);
    x["J"] = J;
    x["x"] = io::to_json(m.x);
    x["provenance"] = kTagModels;
    ms.push_back(x);
    r.rows.push_back({"model", str(m.J), str(m.x), str(m.module.r()), std::to_string(m.module.a_norm_dlog()),
                      str(m.module.c()), str(m.module.alpha()), kTagModels});
  }
  json extremal = nullptr;
  if (!models.empty()) {
    const ExtremalModels ex = extremal_models(P, tau, chi);
    extremal = json{{"minimal", io::to_json(ex.minimal)}, {"maximal", io::to_json(ex.maximal)}};
    for (const auto& [role, m] : {std::pair{"minimal", &ex.minimal}, std::pair{"maximal", &ex.maximal}})
      r.rows.push_back({role, "-", "-", str(m->r()), std::to_string(m->a_norm_dlog()), str(m->c()), str(m->alpha()),
                        kTagModels});
  }
  r.doc = json{{"command", "models"}, {"params", params_json(P)}, {"tau", io::to_json(tau)},
               {"chi", io::to_json(chi)},  {"count", models.size()}, {"models", ms},
               {"extremal", extremal}};
  return r;
}

Report cmd_lattice(const Options& o) {
  const io::Scenario sc = load(o);
  const Params& P = sc.params;
  const GaloisChar& chi1 = need(sc.chi1, "/chi1");
  const GaloisChar& chi2 = need(sc.chi2, "/chi2");
  const GenericityData gen = genericity(chi1.inertial, chi2.inertial, P.eprime);
  const GaloisChar chi = chi2 / chi1;
  const auto A = index_set(P.eprime, P.f);
  Report r;
  r.columns = {"kind", "a", "a'", "dim", "expected", "holds", "provenance"};
  std::vector<LSpace> L;
  json dims = json::array(), meets = json::array();
  for (const auto& a : A) {
    L.push_back(l_space(P, twisted_type(gen, a), chi));
    std::int64_t expect = 0;
    for (auto x : a) expect += P.eprime - x;
    const bool ok = L.back().dim() == expect;
    r.verified = r.verified && ok;
    json row = json{{"a", io::to_json(a)}, {"dim", L.back().dim()}, {"expected", expect}, {"holds", ok},
                    {"provenance", kTagLatticeDim}};
    row["space"] = io::to_json(L.back());
    dims.push_back(row);
    r.rows.push_back({"dim", str(a), "-", std::to_string(L.back().dim()), std::to_string(expect), ok ? "yes" : "no",
                      kTagLatticeDim});
  }
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      Tuple mx(P.f);
      for (int k = 0; k < P.f; ++k) mx[k] = std::max(A[i][k], A[j][k]);
      const std::size_t m = std::find(A.begin(), A.end(), mx) - A.begin();
      const LSpace meet = intersect(L[i], L[j]);
      const bool ok = meet.degrees == L[m].degrees;
      r.verified = r.verified && ok;
      meets.push_back(json{{"a", io::to_json(A[i])},
                           {"a_prime", io::to_json(A[j])},
                           {"max", io::to_json(mx)},
                           {"dim", meet.dim()},
                           {"expected", L[m].dim()},
                           {"holds", ok},
                           {"provenance", kTagLatticeMeet}});
      r.rows.push_back({"meet", str(A[i]), str(A[j]), std::to_string(meet.dim()), std::to_string(L[m].dim()),
                        ok ? "yes" : "no", kTagLatticeMeet});
    }
  r.doc = json{{"command", "lattice"}, {"params", params_json(P)}, {"b", io::to_json(gen.b)},
               {"dims", dims}, {"intersections", meets}};
  return r;
}

Report cmd_counterexample(const Options& o) {
  const int p = o.cx_p, b = o.cx_b;
  if (!is_prime(p) || p < 5) fail(ErrorKind::PreconditionViolation, "--p must be a prime >= 5");
  if (b < 1 || b > p - 2) fail(ErrorKind::PreconditionViolation, "--b must lie in [1, p-2]");
  const oracle::Limits lim = limits_of(o, 49);
  const InertialChar chi1 = InertialChar::trivial(p, 2);
  const InertialChar chi2 = InertialChar::from_digits(p, 2, {p - 1, b});
  const auto W = enumerate_Wss(chi1, chi2, 1);
  const SerreWeight mu{p, 2, {p - 1, b - 1}, {p - 1, p - b - 1}};
  const SerreWeight mup{p, 2, {0, 0}, {p - 2, b - 1}};
  auto dims_of = [&](const SerreWeight& w) {
    std::vector<std::int64_t> dims;
    for (const auto& ww : W)
      if (ww.weight == w)
        for (const auto& prm : ww.witnesses) dims.push_back(lcris_dim(1, prm));
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    return dims;
  };
  const auto d_mu = dims_of(mu), d_mup = dims_of(mup);
  const auto hits = brauer::types_containing(mu, lim);
  const auto x = InertialChar::from_digits(p, 2, {p - 2, p - 1});
  const auto y = InertialChar::from_digits(p, 2, {p - 1, b - 1});
  const bool match = hits.size() == 1 && ((hits[0].first == x && hits[0].second == y) ||
                                          (hits[0].first == y && hits[0].second == x));
  Report r;
  r.verified = d_mu == std::vector<std::int64_t>{1} && d_mup == std::vector<std::int64_t>{2} && match;
  r.columns = {"item", "value", "provenance"};
  auto dims_str = [](const std::vector<std::int64_t>& d) {
    return join(d, [](std::int64_t v) { return std::to_string(v); }, ",");
  };
  r.rows.push_back({"lcris_dim mu " + str(mu), dims_str(d_mu), kTagLcris});
  r.rows.push_back({"lcris_dim mu' " + str(mup), dims_str(d_mup), kTagLcris});
  json jh = json::array();
  for (const auto& h : hits) {
    jh.push_back(json{{"first", io::to_json(h.first)},
                      {"second", io::to_json(h.second)},
                      {"constituents", io::to_json(h.constituents)}});
    r.rows.push_back({"type containing mu", str(h.first.digits()) + " + " + str(h.second.digits()), kTagTypeSearch});
  }
  r.rows.push_back({"types found", std::to_string(hits.size()), kTagTypeSearch});
  r.doc = json{{"command", "counterexample"},
               {"p", p},
               {"b", b},
               {"chi1", io::to_json(chi1)},
               {"chi2", io::to_json(chi2)},
               {"mu", json{{"weight", io::to_json(mu)}, {"lcris_dims", d_mu}}},
               {"mu_prime", json{{"weight", io::to_json(mup)}, {"lcris_dims", d_mup}}},
               {"types_containing_mu", jh},
               {"expected_type", json{{"first", io::to_json(x)}, {"second", io::to_json(y)}}},
               {"unique_type_matches", match}};
  return r;
}

Report cmd_verify(const Options& o) {
  acceptance::Options opt;
  opt.seed = o.seed;
  std::vector<acceptance::Result> results;
  if (o.only) {
    if (o.only < 1 || o.only > acceptance::kCriteria) fail(ErrorKind::PreconditionViolation, "--only must be 1..8");
    results.push_back(acceptance::run(o.only, opt));
  } else {
    results = acceptance::run_all(opt);
  }
  Report r;
  r.columns = {"criterion", "name", "status", "detail"};
  json rs = json::array();
  for (const auto& x : results) {
    r.verified = r.verified && x.pass;
    rs.push_back(json{{"criterion", x.id}, {"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
    r.rows.push_back({std::to_string(x.id), x.name, x.pass ? "PASS" : "FAIL", x.detail});
  }
  r.doc = json{{"command", "verify"}, {"seed", o.seed}, {"results", rs}, {"all_pass", r.verified}};
  return r;
}

// ---- rendering ----------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render(const Report& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << r.doc.dump(2) << "\n";
  } else if (format == "csv") {
    os << join(r.columns, csv_field, ",") << "\n";
    for (const auto& row : r.rows) os << join(row, csv_field, ",") << "\n";
  } else {
    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t i = 0; i < r.columns.size(); ++i) width[i] = r.columns[i].size();
    for (const auto& row : r.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        s += cells[i];
        if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
      }
      os << s << "\n";
    };
    line(r.columns);
    std::vector<std::string> rule;
    for (auto w : width) rule.push_back(std::string(w, '-'));
    line(rule);
    for (const auto& row : r.rows) line(row);
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Serre weights and rank-one Breuil modules: exact computations with oracle cross-checks", "serrewt"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config, "JSON scenario file");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--out", o.out, "Write output to this file instead of stdout");
  app.add_option("--seed", o.seed, "Seed for randomized suites");
  app.add_option("--limit", o.limit, "Oracle size cap (ring truncation degree and residue field size)")
      ->check(CLI::PositiveNumber);

  std::function<Report(const Options&)> handler;
  auto sub = [&](const char* name, const char* help, Report (*fn)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };
  sub("weights", "Explicit weight set with its (J, d) witnesses", cmd_weights);
  sub("partition", "Partition of the weight set by the types tau_a", cmd_partition);
  sub("types", "Types tau_a and the constituents of their reductions", cmd_types);
  sub("ext", "Ext^1 basis of two rank-one Breuil modules", cmd_ext);
  sub("hom", "Morphisms between two rank-one Breuil modules", cmd_hom);
  sub("models", "Models of a type with given generic fibre", cmd_models);
  sub("lattice", "Dimensions and intersections of the spaces L(chi1, chi2, tau_a)", cmd_lattice);
  CLI::App* cx = sub("counterexample", "Weight in the explicit set but in no predicted type", cmd_counterexample);
  cx->add_option("--p", o.cx_p, "Prime p >= 5");
  cx->add_option("--b", o.cx_b, "Digit b in [1, p-2]");
  CLI::App* ver = sub("verify", "Run the acceptance suites", cmd_verify);
  ver->add_option("--only", o.only, "Run a single criterion 1..8");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  Report report;
  try {
    report = handler(o);
  } catch (const io::ConfigError& e) {
    err << "config error at " << (e.pointer().empty() ? "/" : e.pointer()) << ": "
        << std::string(e.what()).substr(e.pointer().size() + 2) << "\n";
    return kDomainError;
  } catch (const Error& e) {
    err << (e.kind() == ErrorKind::InternalInconsistency ? "verification failure: " : "domain error: ") << e.what()
        << "\n";
    return e.kind() == ErrorKind::InternalInconsistency ? kVerifyFailed : kDomainError;
  }

  const std::string text = render(report, o.format);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kDomainError;
    }
    f << text;
  }
  if (!report.verified) {
    err << "verification failure: a computed check did not hold\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace serrewt::cli
