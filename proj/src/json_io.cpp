#include "b3img/json_io.hpp"

namespace b3img {

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string sign_string(int s) { return s > 0 ? "+1" : "-1"; }

int sign_from_string(const std::string& s) {
  if (s == "+1" || s == "+" || s == "1") return 1;
  if (s == "-1" || s == "-") return -1;
  throw Error(ErrorCode::ParseError, "invalid sign '" + s + "'");
}

}  // namespace

void to_json(Json& j, const RootOfUnity& z) { j = z.to_string(); }
void from_json(const Json& j, RootOfUnity& z) { z = RootOfUnity::parse(j.get<std::string>()); }

Json cyc_number_to_json(const CycNumber& c) {
  Json coords = Json::array();
  for (const auto& q : c.coords()) coords.push_back(rational_to_string(q));
  return Json{{"conductor", c.conductor()}, {"coords", coords}};
}

CycNumber cyc_number_from_json(const Json& j) {
  const auto n = j.at("conductor").get<std::int64_t>();
  std::vector<Rational> coords;
  for (const auto& s : j.at("coords")) coords.push_back(parse_rational(s.get<std::string>()));
  auto field = CyclotomicField::get(n);
  if (static_cast<int>(coords.size()) != field->degree()) {
    throw Error(ErrorCode::ParseError, "coordinate count does not match the field degree");
  }
  return CycNumber(field, std::move(coords));
}

Json matrix_to_json(const CycMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(cyc_number_to_json(m(r, c)).at("coords"));
    rows.push_back(std::move(row));
  }
  return Json{{"conductor", m.conductor()}, {"dim", m.dim()}, {"entries", rows}};
}

CycMatrix matrix_from_json(const Json& j) {
  const auto n = j.at("conductor").get<std::int64_t>();
  const int d = j.at("dim").get<int>();
  const Json& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != d) throw Error(ErrorCode::ParseError, "row count does not match dim");
  std::vector<CycNumber> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d) throw Error(ErrorCode::ParseError, "column count does not match dim");
    for (const auto& coords : row) entries.push_back(cyc_number_from_json(Json{{"conductor", n}, {"coords", coords}}));
  }
  return CycMatrix(d, std::move(entries));
}

void to_json(Json& j, const EigenSpec& spec) {
  j = Json{{"dim", spec.dim}, {"eigenvalues", spec.eigenvalues}};
  j["gamma_squared"] = optional_json(spec.gamma_squared);
  j["gamma"] = optional_json(spec.gamma);
}

void from_json(const Json& j, EigenSpec& spec) {
  spec.dim = j.at("dim").get<int>();
  spec.eigenvalues = j.at("eigenvalues").get<std::vector<RootOfUnity>>();
  spec.gamma_squared = optional_from<RootOfUnity>(j, "gamma_squared");
  spec.gamma = optional_from<RootOfUnity>(j, "gamma");
}

void to_json(Json& j, const Verdict& v) {
  j = Json{{"kind", to_string(v.kind)}, {"rule", v.rule}};
  j["po"] = optional_json(v.po);
  j["pattern"] = optional_json(v.pattern);
  j["o_u"] = optional_json(v.o_u);
  j["D"] = v.d_sign ? Json(sign_string(*v.d_sign)) : Json(nullptr);
  j["parity"] = v.parity ? Json(to_string(*v.parity)) : Json(nullptr);
  Json trace = Json::array();
  for (const auto& step : v.trace) trace.push_back(Json{{"check", step.check}, {"outcome", step.outcome}});
  j["trace"] = std::move(trace);
}

void from_json(const Json& j, Verdict& v) {
  v.kind = verdict_kind_from_string(j.at("kind").get<std::string>());
  v.rule = j.at("rule").get<std::string>();
  v.po = optional_from<std::int64_t>(j, "po");
  v.pattern = optional_from<std::string>(j, "pattern");
  v.o_u = optional_from<std::int64_t>(j, "o_u");
  auto d = optional_from<std::string>(j, "D");
  v.d_sign = d ? std::optional<int>(sign_from_string(*d)) : std::nullopt;
  auto parity = optional_from<std::string>(j, "parity");
  v.parity = parity ? std::optional<Parity>(parity_from_string(*parity)) : std::nullopt;
  v.trace.clear();
  for (const auto& step : j.at("trace")) {
    v.trace.push_back({step.at("check").get<std::string>(), step.at("outcome").get<std::string>()});
  }
}

void to_json(Json& j, const ClosureResult& r) {
  j = Json{{"outcome", to_string(r.outcome)}};
  j["order"] = optional_json(r.order);
  j["bound"] = r.bound;
  j["stats"] = Json{{"products", r.stats.products},
                    {"peak_frontier", r.stats.peak_frontier},
                    {"arithmetic", r.stats.arithmetic}};
}

void from_json(const Json& j, ClosureResult& r) {
  r.outcome = closure_outcome_from_string(j.at("outcome").get<std::string>());
  r.order = optional_from<std::int64_t>(j, "order");
  r.bound = j.at("bound").get<std::int64_t>();
  const Json& s = j.at("stats");
  r.stats.products = s.at("products").get<std::uint64_t>();
  r.stats.peak_frontier = s.at("peak_frontier").get<std::uint64_t>();
  r.stats.arithmetic = s.at("arithmetic").get<std::string>();
}

void to_json(Json& j, const RecordedExpectation& e) {
  j = Json::object();
  j["po"] = optional_json(e.po);
  j["kind"] = e.kind ? Json(to_string(*e.kind)) : Json(nullptr);
  j["rule"] = optional_json(e.rule);
  j["validation"] = e.validation ? Json(to_string(*e.validation)) : Json(nullptr);
  j["closure_outcome"] = e.closure_outcome ? Json(to_string(*e.closure_outcome)) : Json(nullptr);
  j["closure_order"] = optional_json(e.closure_order);
  j["closure_order_divides"] = optional_json(e.closure_order_divides);
  j["note"] = e.note;
}

void to_json(Json& j, const ReproductionReport& r) {
  j = Json{{"family", to_string(r.family)}, {"ell", r.ell}, {"spec", r.spec}};
  j["validation"] = to_string(r.validation);
  j["verdict"] = r.verdict;
  j["closure"] = r.closure ? Json(*r.closure) : Json(nullptr);
  j["expectation"] = r.expectation;
  j["expectation_quote"] = r.expectation.claim;
  j["agreement"] = r.agreement;
  j["mismatches"] = r.mismatches;
}

}  // namespace b3img
