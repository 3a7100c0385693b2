#include "hardy/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#ifndef HARDY_NA_VERSION
#define HARDY_NA_VERSION "0.0.0"
#endif

namespace hardy {

const char* tool_version() { return HARDY_NA_VERSION; }

json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

cplx cplx_from_json(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

namespace {

json clist(const std::vector<cplx>& v) {
  json a = json::array();
  for (auto c : v) a.push_back(to_json(c));
  return a;
}

std::vector<cplx> clist_from(const json& j) {
  std::vector<cplx> v;
  for (const auto& x : j) v.push_back(cplx_from_json(x));
  return v;
}

template <class T, class F>
json opt(const std::optional<T>& o, F f) {
  return o ? f(*o) : json(nullptr);
}

}  // namespace

json to_json(const BlaschkeProduct& B) {
  json zs = json::array();
  for (const auto& z : B.zeros()) zs.push_back({{"a", to_json(z.a)}, {"multiplicity", z.multiplicity}});
  return {{"constant", to_json(B.constant())}, {"power", B.monomial_power()}, {"zeros", zs}, {"degree", B.degree()}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
  std::vector<BlaschkeZero> zs;
  for (const auto& z : j.at("zeros")) zs.push_back({cplx_from_json(z.at("a")), z.at("multiplicity").get<int>()});
  return BlaschkeProduct(cplx_from_json(j.at("constant")), j.at("power").get<int>(), std::move(zs));
}

json to_json(const RationalFunction& f) {
  return {{"num", clist(f.numerator().coeffs())}, {"den", clist(f.denominator().coeffs())}};
}

RationalFunction rational_from_json(const json& j) {
  return RationalFunction(Polynomial(clist_from(j.at("num"))), Polynomial(clist_from(j.at("den"))));
}

json to_json(const SymbolSpec& s) {
  if (s.is_unimodular_rational()) {
    const auto& r = s.unimodular_data();
    return {{"class", s.class_name()}, {"c", to_json(r.c)}, {"num", to_json(r.num)}, {"den", to_json(r.den)}};
  }
  if (s.is_analytic_rational()) return {{"class", s.class_name()}, {"f", to_json(s.analytic_data().f)}};
  json arcs = json::array();
  for (const auto& [a, b] : s.arc_data().E.arcs()) arcs.push_back({a, b});
  return {{"class", s.class_name()}, {"arcs", arcs}};
}

SymbolSpec symbol_from_json(const json& j) {
  const std::string cls = j.at("class").get<std::string>();
  if (cls == "RationalUnimodular")
    return SymbolSpec::unimodular(cplx_from_json(j.at("c")), blaschke_from_json(j.at("num")),
                                  blaschke_from_json(j.at("den")));
  if (cls == "RationalAnalytic") return SymbolSpec::analytic(rational_from_json(j.at("f")));
  if (cls == "ArcIndicator") {
    std::vector<ArcSet::Arc> arcs;
    for (const auto& a : j.at("arcs")) arcs.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
    return SymbolSpec::arc(ArcSet(std::move(arcs)));
  }
  throw std::invalid_argument("unknown symbol class: " + cls);
}

namespace {

UnimodularityClass unimodularity_from_string(const std::string& s) {
  for (auto c : {UnimodularityClass::UnimodularAE, UnimodularityClass::StrictlyLessAE, UnimodularityClass::Mixed})
    if (s == to_string(c)) return c;
  throw std::invalid_argument("unknown unimodularity class: " + s);
}

}  // namespace

json to_json(const NAReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["symbol_class"] = r.symbol_class;
  j["unimodularity"] = to_string(r.unimodularity);
  j["analytic"] = opt(r.analytic, [](const NAWitnessAnalytic& w) {
    return json{{"psi_plus", to_json(w.psi_plus)}, {"chi_plus", to_json(w.chi_plus)}, {"d", to_json(w.d)},
                {"u1", to_json(w.u1)}, {"extremal_generator", to_json(w.extremal_generator)},
                {"identity_residual", w.identity_residual}};
  });
  j["coanalytic"] = opt(r.coanalytic, [](const NAWitnessCoanalytic& w) {
    return json{{"psi_minus", to_json(w.psi_minus)}, {"chi_minus", to_json(w.chi_minus)}, {"u1", to_json(w.u1)},
                {"extremal_generator_conj", to_json(w.extremal_generator_conj)},
                {"identity_residual", w.identity_residual}};
  });
  j["yoshino"] = opt(r.yoshino, [](const YoshinoPair& y) {
    return json{{"theta1", to_json(y.theta1)}, {"theta2", to_json(y.theta2)}, {"norm", y.norm}};
  });
  j["bridge_generator"] = opt(r.bridge_generator, [](const BlaschkeProduct& b) { return to_json(b); });
  j["not_na"] = opt(r.not_na, [](const NotNAProof& p) {
    return json{{"rule", p.rule}, {"sup_norm", p.sup_norm}, {"min_modulus", p.min_modulus}};
  });
  json ev = json::array();
  for (const auto& e : r.numeric_evidence)
    ev.push_back({{"N", e.N}, {"sigma_max", e.sigma_max}, {"membership_residual", e.membership_residual}});
  j["numeric_evidence"] = ev;
  j["notes"] = r.notes;
  return j;
}

NAReport na_report_from_json(const json& j) {
  NAReport r;
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.symbol_class = j.at("symbol_class").get<std::string>();
  r.unimodularity = unimodularity_from_string(j.at("unimodularity").get<std::string>());
  if (!j.at("analytic").is_null()) {
    const json& w = j["analytic"];
    r.analytic = NAWitnessAnalytic{blaschke_from_json(w.at("psi_plus")), blaschke_from_json(w.at("chi_plus")),
                                   blaschke_from_json(w.at("d")), blaschke_from_json(w.at("u1")),
                                   blaschke_from_json(w.at("extremal_generator")),
                                   w.at("identity_residual").get<double>()};
  }
  if (!j.at("coanalytic").is_null()) {
    const json& w = j["coanalytic"];
    r.coanalytic = NAWitnessCoanalytic{blaschke_from_json(w.at("psi_minus")), blaschke_from_json(w.at("chi_minus")),
                                       blaschke_from_json(w.at("u1")),
                                       blaschke_from_json(w.at("extremal_generator_conj")),
                                       w.at("identity_residual").get<double>()};
  }
  if (!j.at("yoshino").is_null()) {
    const json& y = j["yoshino"];
    r.yoshino = YoshinoPair{blaschke_from_json(y.at("theta1")), blaschke_from_json(y.at("theta2")),
                            y.at("norm").get<double>()};
  }
  if (!j.at("bridge_generator").is_null()) r.bridge_generator = blaschke_from_json(j["bridge_generator"]);
  if (!j.at("not_na").is_null()) {
    const json& p = j["not_na"];
    r.not_na = NotNAProof{p.at("rule").get<std::string>(), p.at("sup_norm").get<double>(),
                          p.at("min_modulus").get<double>()};
  }
  for (const auto& e : j.at("numeric_evidence"))
    r.numeric_evidence.push_back(
        {e.at("N").get<int>(), e.at("sigma_max").get<double>(), e.at("membership_residual").get<double>()});
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

json to_json(const SuiteCase& c) {
  return {{"suite_id", c.suite_id}, {"seed", c.seed},           {"case_index", c.case_index},
          {"params", c.params},     {"residuals", c.residuals}, {"thresholds", c.thresholds},
          {"pass", c.pass}};
}

SuiteCase suite_case_from_json(const json& j) {
  SuiteCase c;
  c.suite_id = j.at("suite_id").get<std::string>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.case_index = j.at("case_index").get<int>();
  c.params = j.at("params");
  c.residuals = j.at("residuals").get<std::map<std::string, double>>();
  c.thresholds = j.at("thresholds").get<std::map<std::string, double>>();
  c.pass = j.at("pass").get<bool>();
  return c;
}

json to_json(const ConvergenceTrace& t) {
  return {{"N_values", t.N_values}, {"sigma_max", t.sigma_max}, {"residual", t.residual}};
}

ConvergenceTrace trace_from_json(const json& j) {
  ConvergenceTrace t;
  t.N_values = j.at("N_values").get<std::vector<int>>();
  t.sigma_max = j.at("sigma_max").get<std::vector<double>>();
  t.residual = j.at("residual").get<std::vector<double>>();
  return t;
}

std::string config_hash(const json& config) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : config.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ReportEnvelope make_envelope(const std::string& command, const json& config, const std::string& payload_kind,
                             json payload) {
  ReportEnvelope e;
  e.tool_version = tool_version();
  e.command = command;
  e.config = config;
  e.config_hash = config_hash(config);
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  e.timestamp = buf;
  e.payload_kind = payload_kind;
  e.payload = std::move(payload);
  return e;
}

json to_json(const ReportEnvelope& e) {
  return {{"tool_version", e.tool_version}, {"command", e.command},
          {"config", e.config},             {"config_hash", e.config_hash},
          {"timestamp", e.timestamp},       {"payload_kind", e.payload_kind},
          {"payload", e.payload}};
}

ReportEnvelope envelope_from_json(const json& j) {
  ReportEnvelope e;
  e.tool_version = j.at("tool_version").get<std::string>();
  e.command = j.at("command").get<std::string>();
  e.config = j.at("config");
  e.config_hash = j.at("config_hash").get<std::string>();
  e.timestamp = j.at("timestamp").get<std::string>();
  e.payload_kind = j.at("payload_kind").get<std::string>();
  e.payload = j.at("payload");
  return e;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hardy
