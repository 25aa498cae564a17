#include "divcon/cli/run.hpp"

#include <sstream>

#include "divcon/blowup_geometry.hpp"
#include "divcon/classifier.hpp"
#include "divcon/cli/parse.hpp"
#include "divcon/contraction_atlas.hpp"
#include "divcon/normal_form.hpp"

namespace divcon::cli {

using Json = nlohmann::ordered_json;

namespace {

class Rejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  explicit Context(const Request& r) : request(r) {}

  const Request& request;
  std::vector<std::string> variables;
  bool smooth = false;
  std::optional<Polynomial> polynomial;
  std::optional<WeightVector> weights;
  Json result = Json::object();
  Json witnesses = Json::array();
  std::ostringstream text;
  bool rejected = false;

  bool has(const std::string& flag) const { return request.options.count(flag) != 0; }
  const std::string& option(const std::string& flag) const { return request.options.at(flag); }
};

std::optional<int> int_option(const Context& ctx, const std::string& flag) {
  if (!ctx.has(flag)) return std::nullopt;
  const std::string& v = ctx.option(flag);
  if (v.empty() || v.size() > 6 || v.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::syntax, "--" + flag + " expects a positive integer, got '" + v + "'");
  }
  return std::stoi(v);
}

Germ germ_of(const Context& ctx) {
  if (ctx.smooth) return SmoothAmbient{ctx.variables};
  return *ctx.polynomial;
}

const WeightVector& require_weights(const Context& ctx) {
  if (!ctx.weights) {
    throw Error(ErrorCode::missing_weight, ctx.request.command + " needs --weights");
  }
  return *ctx.weights;
}

Json weights_json(const WeightVector& w) { return w.values(); }

Json substitution_json(const JetSubstitution& s) {
  Json j;
  j["source"] = s.source_variables();
  j["target"] = s.target_variables();
  j["jet_order"] = s.jet_order();
  j["exact"] = s.exact();
  Json comps = Json::object();
  for (std::size_t i = 0; i < s.target_variables().size(); ++i) {
    comps[s.target_variables()[i]] = s.components()[i].to_string();
  }
  j["components"] = comps;
  if (s.has_inverse()) {
    Json inv = Json::object();
    for (std::size_t i = 0; i < s.source_variables().size(); ++i) {
      inv[s.source_variables()[i]] = s.inverse_components()[i].to_string();
    }
    j["inverse"] = inv;
    j["inverse_jet_order"] = s.inverse_jet_order();
  }
  return j;
}

std::string substitution_text(const JetSubstitution& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.target_variables().size(); ++i) {
    if (i) os << ", ";
    os << s.target_variables()[i] << " -> " << s.components()[i].to_string();
  }
  os << "  (mod degree > " << s.jet_order() << ")";
  return os.str();
}

Json class_json(const ContractionClass& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["weights"] = weights_json(c.weights);
  if (c.kind == ContractionKind::smooth) {
    j["a"] = c.a;
    j["b"] = c.b;
  } else {
    if (c.kind == ContractionKind::type1) {
      j["r1"] = c.r1;
      j["r2"] = c.r2;
      j["a"] = c.a;
    }
    j["cA_index"] = c.cA_index;
  }
  j["discrepancy"] = c.discrepancy;
  if (c.representative) j["representative"] = c.representative->to_string();
  return j;
}

std::string class_text(const ContractionClass& c) {
  std::ostringstream os;
  os << to_string(c.kind) << " " << c.weights.to_string() << ", discrepancy " << c.discrepancy;
  if (c.representative) os << ", representative " << c.representative->to_string();
  return os.str();
}

Json marked_json(const MarkedNormalForm& nf) {
  Json j;
  j["polynomial"] = nf.polynomial.to_string();
  j["unit_form"] = nf.unit_form.to_string();
  Json marking = Json::array();
  for (const auto& [m, c] : nf.marking) {
    marking.push_back({{"monomial", Polynomial::monomial(nf.polynomial.variables(), m).to_string()},
                       {"coefficient", to_string(c)}});
  }
  j["marking"] = marking;
  j["weights"] = weights_json(nf.weights);
  j["jet_order"] = nf.jet_order;
  return j;
}

void do_classify(Context& ctx) {
  if (ctx.smooth) {
    ctx.result["type"] = "smooth";
    ctx.text << "smooth point\n";
    return;
  }
  ClassifyOptions opts;
  opts.jet_order = int_option(ctx, "jet-order");
  const SingularityReport r = classify(*ctx.polynomial, opts);
  ctx.result["type"] = r.type.to_string();
  ctx.result["simple"] = r.type.is_ade();
  ctx.result["multiplicity"] = to_string(r.multiplicity);
  ctx.result["quadratic_rank"] = r.quadratic_rank;
  ctx.result["corank"] = r.corank;
  ctx.result["milnor_number"] = r.milnor_number;
  ctx.result["cA_index"] = r.cA_index ? Json(*r.cA_index) : Json(nullptr);
  ctx.result["residual"] = r.residual ? Json(r.residual->to_string()) : Json(nullptr);
  ctx.result["normal_form"] = r.normal_form ? marked_json(*r.normal_form) : Json(nullptr);
  if (r.witness) ctx.witnesses.push_back(substitution_json(*r.witness));
  ctx.text << "type: " << r.type.to_string() << "\n"
           << "multiplicity: " << to_string(r.multiplicity) << "\n"
           << "quadratic rank: " << r.quadratic_rank << " (corank " << r.corank << ")\n";
  if (r.type.type != SingularityType::smooth) ctx.text << "milnor number: " << r.milnor_number << "\n";
  if (r.cA_index) ctx.text << "compound A index: cA" << *r.cA_index << "\n";
  if (r.residual) ctx.text << "residual: " << r.residual->to_string() << "\n";
  if (r.normal_form) {
    ctx.text << "normal form: " << r.normal_form->polynomial.to_string() << "\n"
             << "witness: " << substitution_text(*r.witness) << "\n";
  }
}

Json census_json(const ContractionCensus& c) {
  Json j;
  j["singularity"] = c.singularity.to_string();
  if (c.family) {
    j["family"] = *c.family;
  } else {
    j["cA_index"] = c.cA_index;
    j["a_max"] = c.a_max;
  }
  Json classes = Json::array();
  for (const auto& k : c.classes) classes.push_back(class_json(k));
  j["classes"] = classes;
  j["count_local_analytic"] = c.count_local_analytic.to_string();
  j["count_over_base"] = c.count_over_base.to_string();
  return j;
}

AtlasOptions atlas_options(const Context& ctx) {
  AtlasOptions opts;
  opts.max_a = int_option(ctx, "max-a");
  return opts;
}

void do_enumerate(Context& ctx) {
  const ContractionCensus c = enumerate_contractions(germ_of(ctx), atlas_options(ctx));
  ctx.result = census_json(c);
  ctx.text << "centre: " << c.singularity.to_string();
  if (!c.family) ctx.text << " (cA" << c.cA_index << ")";
  ctx.text << "\n";
  if (c.family) ctx.text << "classes: " << *c.family << "\n";
  for (const auto& k : c.classes) ctx.text << "  " << class_text(k) << "\n";
  ctx.text << "count (local analytic): " << c.count_local_analytic.to_string() << "\n"
           << "count (over the base): " << c.count_over_base.to_string() << "\n";
}

void do_count(Context& ctx) {
  const ContractionCensus c = enumerate_contractions(germ_of(ctx), atlas_options(ctx));
  ctx.result["count_local_analytic"] = c.count_local_analytic.to_string();
  ctx.result["count_over_base"] = c.count_over_base.to_string();
  ctx.text << "count (local analytic): " << c.count_local_analytic.to_string() << "\n"
           << "count (over the base): " << c.count_over_base.to_string() << "\n";
}

Membership membership(Context& ctx) {
  const Membership m = decide_membership(germ_of(ctx), require_weights(ctx));
  ctx.result["member"] = m.member();
  if (m.match) {
    ctx.result["class"] = class_json(*m.match);
  } else {
    ctx.result["reason"] = m.reason;
  }
  Json attempts = Json::array();
  for (const auto& a : m.attempts) {
    attempts.push_back({{"kind", to_string(a.kind)},
                        {"shape_matched", a.shape_matched},
                        {"failure", a.failure}});
  }
  ctx.result["attempts"] = attempts;
  return m;
}

void do_member(Context& ctx) {
  const Membership m = membership(ctx);
  if (m.match) {
    ctx.text << "member: " << class_text(*m.match) << "\n";
  } else {
    ctx.text << "not a member: " << m.reason << "\n";
    ctx.rejected = true;
  }
}

void do_witness(Context& ctx) {
  if (!ctx.has("param")) throw Error(ErrorCode::parameter_constraint, "witness needs --param");
  const std::vector<Rational> params = parse_rationals(ctx.option("param"));
  const Membership m = membership(ctx);
  if (!m.match) {
    ctx.text << "not a member: " << m.reason << "\n";
    ctx.rejected = true;
    return;
  }
  const JetSubstitution sigma = family_witness(*m.match, params);
  Json p = Json::array();
  for (const auto& q : params) p.push_back(to_string(q));
  ctx.result["params"] = p;
  ctx.result["fixes_representative"] = true;
  ctx.witnesses.push_back(substitution_json(sigma));
  ctx.text << "class: " << class_text(*m.match) << "\n"
           << "automorphism: " << substitution_text(sigma) << "\n";
}

void do_normalize(Context& ctx) {
  if (ctx.smooth) throw Error(ErrorCode::precondition_violated, "normalize needs a polynomial");
  ReductionOptions opts;
  opts.jet_order = int_option(ctx, "jet-order");
  const WeightVector& w = require_weights(ctx);
  std::string kind = "simple";
  MarkedNormalForm nf;
  try {
    nf = reduce_to_simple(*ctx.polynomial, w, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_simple_leading_part) throw;
    kind = "weighted";
    nf = weighted_normal_form(*ctx.polynomial, w, opts);
  }
  ctx.result["kind"] = kind;
  const Json marked = marked_json(nf);
  for (const auto& [k, v] : marked.items()) ctx.result[k] = v;
  ctx.witnesses.push_back(substitution_json(nf.witness));
  ctx.text << kind << " normal form: " << nf.polynomial.to_string() << "\n"
           << "unit form: " << nf.unit_form.to_string() << "\n"
           << "witness: " << substitution_text(nf.witness) << "\n";
}

void do_blowup(Context& ctx) {
  const WeightVector& w = require_weights(ctx);
  const Germ germ = germ_of(ctx);
  if (!ctx.smooth) {
    const Valuation d = weight(*ctx.polynomial, w);
    ctx.result["weight"] = to_string(d);
    ctx.text << "weight: " << to_string(d) << "\n";
  }
  try {
    const int discr = discrepancy(w, germ);
    ctx.result["discrepancy"] = discr;
    ctx.text << "discrepancy: " << discr << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::unsupported_shape) throw;
    ctx.result["discrepancy"] = nullptr;
  }
  Json charts_json = Json::array();
  for (const auto& skeleton : charts(w)) {
    const BlowupChart chart = ctx.smooth ? skeleton : strict_transform(*ctx.polynomial, w, skeleton);
    Json c;
    c["chart"] = chart.chart_variable;
    c["parameter"] = chart.parameter;
    c["quotient_order"] = chart.quotient_order;
    Json sub = Json::object();
    for (std::size_t i = 0; i < chart.substitution.size(); ++i) {
      sub[w.names()[i]] = chart.substitution[i].to_string();
    }
    c["substitution"] = sub;
    c["transform"] = chart.transform ? Json(chart.transform->to_string()) : Json(nullptr);
    charts_json.push_back(c);
    ctx.text << "chart " << chart.chart_variable << " (quotient order " << chart.quotient_order
             << ")";
    if (chart.transform) ctx.text << ": " << chart.transform->to_string();
    ctx.text << "\n";
  }
  ctx.result["charts"] = charts_json;
}

Json input_json(const Request& r) {
  Json j;
  j["polynomial"] = r.polynomial_text;
  j["weights"] = r.weights_text ? Json(*r.weights_text) : Json(nullptr);
  Json opts = Json::object();
  for (const auto& [k, v] : r.options) opts[k] = v;
  j["options"] = opts;
  return j;
}

void prepare(Context& ctx) {
  const Request& r = ctx.request;
  ctx.smooth = ctx.has("smooth");
  if (ctx.has("vars")) {
    ctx.variables = parse_names(ctx.option("vars"));
  } else {
    ctx.variables = ctx.smooth ? std::vector<std::string>{"x", "y", "z"} : default_variables();
  }
  if (!ctx.smooth) {
    if (r.polynomial_text.empty()) throw Error(ErrorCode::syntax, "missing polynomial");
    ctx.polynomial = parse_polynomial(r.polynomial_text, ctx.variables);
  } else if (!r.polynomial_text.empty()) {
    throw Error(ErrorCode::precondition_violated, "--smooth takes no polynomial");
  }
  if (r.weights_text) {
    std::vector<int> w = parse_weights(*r.weights_text);
    if (w.size() < ctx.variables.size()) {
      throw Error(ErrorCode::missing_weight, "weight for '" + ctx.variables[w.size()] + "' is missing");
    }
    if (w.size() > ctx.variables.size()) {
      throw Error(ErrorCode::arity_mismatch, "more weights than variables");
    }
    ctx.weights = WeightVector(ctx.variables, w);
  }
}

}  // namespace

Response run(const Request& request) {
  Context ctx(request);
  Response out;
  Json errors = Json::array();
  try {
    prepare(ctx);
    const std::string& c = request.command;
    if (c == "classify") {
      do_classify(ctx);
    } else if (c == "enumerate") {
      do_enumerate(ctx);
    } else if (c == "count") {
      do_count(ctx);
    } else if (c == "member") {
      do_member(ctx);
    } else if (c == "witness") {
      do_witness(ctx);
    } else if (c == "normalize") {
      do_normalize(ctx);
    } else if (c == "blowup") {
      do_blowup(ctx);
    } else {
      throw Error(ErrorCode::syntax, "unknown command '" + c + "'");
    }
    out.exit_code = ctx.rejected ? kRejected : kSuccess;
  } catch (const Error& e) {
    Json err{{"code", error_code_name(e.code())}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      err["line"] = pe->line();
      err["column"] = pe->column();
    }
    errors.push_back(err);
    ctx.result = nullptr;
    ctx.witnesses = Json::array();
    ctx.text.str("");
    ctx.text << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    out.exit_code = kFailure;
  }
  out.document["command"] = request.command;
  out.document["input"] = input_json(request);
  out.document["result"] = ctx.result;
  out.document["witnesses"] = ctx.witnesses;
  out.document["errors"] = errors;
  out.text = ctx.text.str();
  return out;
}

}  // namespace divcon::cli
