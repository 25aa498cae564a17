#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "divcon/blowup_geometry.hpp"
#include "divcon/classifier.hpp"
#include "divcon/contraction_atlas.hpp"
#include "divcon/local_algebra.hpp"
#include "divcon/normal_form.hpp"
#include "divcon/weight_maps.hpp"
#include "oracle_bridge.hpp"
#include "random_germs.hpp"
#include "testing.hpp"

using namespace divcon;
using namespace divcon::testing;

namespace {

class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 8) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  int checks() const { return checks_; }
  int failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string title;
  double seconds;
  std::function<void(Ledger&)> body;
};

std::string str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Polynomial a_n_family(int n) {
  return P("x*y + z^" + std::to_string(n + 1) + " + t^" + std::to_string(n + 1));
}

// Membership and discrepancy on the four canonical rows.
void table2(Ledger& L) {
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 5}}) {
    const WeightVector w(kXYZ, {1, a, b});
    const Membership m = decide_membership(SmoothAmbient{}, w);
    L.expect(m.member() && m.match->kind == ContractionKind::smooth, "smooth " + w.to_string() + " member");
    L.expect(m.member() && m.match->discrepancy == a + b, "smooth " + w.to_string() + " discrepancy");
    L.expect(discrepancy(w, SmoothAmbient{}) == a + b, "smooth discrepancy formula");
  }
  struct Row {
    const char* f;
    std::vector<int> w;
    int a;
  };
  for (const Row& r : {Row{"x*y + z^3 + t^6", {1, 2, 1, 1}, 1}, Row{"x*y + z^3 + t^6", {1, 5, 2, 1}, 2},
                       Row{"x*y + z^4 + t^8", {3, 5, 2, 1}, 2}}) {
    const Polynomial f = P(r.f);
    const Membership m = decide_membership(f, W(r.w));
    const std::string tag = std::string(r.f) + " " + str(r.w);
    L.expect(m.member() && m.match->kind == ContractionKind::type1, tag + " is type1");
    L.expect(m.member() && m.match->discrepancy == r.a, tag + " discrepancy a");
    L.expect(weight(f, W(r.w)) == r.w[0] + r.w[1], tag + " weight r1 + r2");
    L.expect(discrepancy(W(r.w), f) == r.a, tag + " discrepancy formula");
  }
  const Polynomial a2 = P("x*y + z^2 + t^3");
  const Membership m2 = decide_membership(a2, W({1, 5, 3, 2}));
  L.expect(m2.member() && m2.match->kind == ContractionKind::type2 && m2.match->discrepancy == 4,
           "A2 (1,5,3,2) type2 discrepancy 4");
  L.expect(weight(a2, W({1, 5, 3, 2})) == 6, "A2 weight 6");
  L.expect(classify_simple(a2).type == SingularityTag{SingularityType::A, 2}, "A2 type");
  const Polynomial e6 = P("x^2 + y^2 + z^3 + x*t^2");
  const Membership m3 = decide_membership(e6, W({4, 3, 2, 1}));
  L.expect(m3.member() && m3.match->kind == ContractionKind::type3 && m3.match->discrepancy == 3,
           "E6 (4,3,2,1) type3 discrepancy 3");
  L.expect(weight(e6, W({4, 3, 2, 1})) == 6, "E6 weight 6");
  L.expect(classify_simple(e6).type == SingularityTag{SingularityType::E6, 0}, "E6 type");
}

// Contraction counts, local and over the base.
void counting(Ledger& L) {
  for (int n = 1; n <= 6; ++n) {
    const ContractionCensus c = enumerate_contractions(a_n_family(n));
    const std::string tag = "n = " + std::to_string(n);
    L.expect(c.cA_index == n, tag + " cA index");
    L.expect(c.count_over_base == Cardinality{Cardinality::Kind::finite, n}, tag + " over base = n");
    L.expect(c.count_local_analytic == Cardinality{Cardinality::Kind::finite, (n + 1) / 2},
             tag + " local analytic = ceil(n/2), got " + c.count_local_analytic.to_string());
  }
  const ContractionCensus c = enumerate_contractions(P("x*y + z^3 + t^6"));
  std::vector<std::vector<int>> ws;
  for (const auto& k : c.classes) ws.push_back(k.weights.values());
  L.expect(ws == std::vector<std::vector<int>>{{1, 2, 1, 1}, {1, 5, 2, 1}, {3, 3, 2, 1}}, "z^3 + t^6 classes");
  L.expect(c.count_local_analytic == Cardinality{Cardinality::Kind::finite, 3}, "z^3 + t^6 local count 3");
  L.expect(c.count_over_base.to_string() == "uncountable", "z^3 + t^6 uncountable over base");
}

std::vector<Polynomial> yamamoto_inputs() {
  std::vector<Polynomial> out;
  for (const char* c : {"0", "1/2"}) {
    for (const char* p : {"t^2", "t^2 + z*t"}) {
      for (const char* g : {"0", "0*z^3 + t^6"}) {
        // x^2 + y^2 + 2cxy + 2xp + 2c y p_3 + z^3 + g, p_3 the weight-3 part of p.
        const std::string p3 = std::string(p) == "t^2" ? "0" : "z*t";
        out.push_back(P("x^2 + y^2 + 2*" + std::string(c) + "*x*y + 2*x*(" + p + ") + 2*" + c + "*y*(" + p3 +
                        ") + z^3 + " + g));
      }
    }
  }
  return out;
}

// E6 reduction on Yamamoto-form inputs.
void e6_pipeline(Ledger& L) {
  const WeightVector w = W({4, 3, 2, 1});
  const Polynomial e6 = P("x^2 + y^2 + z^3 + x*t^2");
  for (const Polynomial& f : yamamoto_inputs()) {
    const std::string tag = f.to_string();
    const SingularityReport ca = cA_index(f);
    L.expect(ca.cA_index == 2, tag + ": cA2");
    const SingularityReport cs = classify_simple(f);
    L.expect(cs.type == SingularityTag{SingularityType::E6, 0} && cs.milnor_number == 6, tag + ": E6, mu 6");
    const MarkedNormalForm nf = reduce_to_simple(f, w);
    const int N = nf.jet_order;
    L.expect(substitute_jet(f, nf.witness, N) == nf.polynomial.truncated(N), tag + ": witness reproduces");
    L.expect(verify_weight_respecting(nf.witness, w, w).respecting, tag + ": witness weight-respecting");
    L.expect(lift_check(nf.witness, w, f).lifts, tag + ": witness lifts");
    // Marked E6 datum: same support as the representative, all marks nonzero.
    bool support = nf.polynomial.size() == e6.size();
    for (const auto& [m, c] : e6.terms()) support = support && nf.polynomial.coefficient(m) != 0;
    L.expect(support, tag + ": marked E6 support, got " + nf.polynomial.to_string());
    L.expect(nf.unit_form == e6, tag + ": unit form is the representative");
    const SingularityReport out = classify_simple(nf.polynomial);
    L.expect(out.type == SingularityTag{SingularityType::E6, 0} && out.milnor_number == 6,
             tag + ": output E6, mu 6");
  }
}

std::vector<Polynomial> milnor_corpus() {
  std::vector<Polynomial> out;
  for (int k = 1; k <= 6; ++k) out.push_back(P("x^" + std::to_string(k + 1) + " + y^2 + z^2 + t^2"));
  for (int k = 4; k <= 6; ++k) out.push_back(P("x^2*y + y^" + std::to_string(k - 1) + " + z^2 + t^2"));
  out.push_back(P("x^3 + y^4 + z^2 + t^2"));
  out.push_back(P("x^3 + x*y^3 + z^2 + t^2"));
  out.push_back(P("x^3 + y^5 + z^2 + t^2"));
  out.push_back(P("x*y + z^3 + t^6"));
  out.push_back(P("x*y + z^4 + t^8"));
  return out;
}

void milnor_oracle(Ledger& L) {
  const std::vector<int> expected{1, 2, 3, 4, 5, 6, 4, 5, 6, 6, 7, 8, 10, 21};
  const auto corpus = milnor_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const int oracle = oracle_mu(corpus[i]);
    const int mu = milnor_data(corpus[i]).milnor_number;
    L.expect(oracle == expected[i], corpus[i].to_string() + ": oracle " + std::to_string(oracle));
    L.expect(mu == oracle, corpus[i].to_string() + ": milnor_data " + std::to_string(mu));
  }
}

void determinacy(Ledger& L) {
  GermSource src(2024);
  ClassifyOptions fast;
  fast.with_witness = false;
  for (const Polynomial& f : milnor_corpus()) {
    const int mu = milnor_data(f).milnor_number;
    if (mu > 10) continue;
    for (int i = 0; i < 100; ++i) {
      const Polynomial g = f + src.polynomial(kXYZT, src.uniform(1, 3), mu + 2, mu + 6);
      const SingularityTag full = classify_simple(g, fast).type;
      const SingularityTag cut = classify_simple(determinacy_truncate(g, mu + 1), fast).type;
      L.expect(full == cut, g.to_string() + ": " + full.to_string() + " vs " + cut.to_string());
      L.expect(full == classify_simple(f, fast).type, g.to_string() + ": type changed");
    }
  }
}

void witness_soundness(Ledger& L) {
  GermSource src(7);
  int done = 0;
  while (done < 1000) {
    const int p = src.uniform(2, 4);
    const int q = src.uniform(p, 5);
    const int d = std::lcm(p, q);
    const int r1 = src.uniform(1, d - 1);
    const WeightVector w = W({r1, d - r1, d / p, d / q});
    const Polynomial f0 = P("x*y") + src.coefficient() * P("z^" + std::to_string(p)) +
                          src.coefficient() * P("t^" + std::to_string(q));
    const Polynomial f = f0 + src.above_weight(w, d, src.uniform(1, 4), 4);
    const std::string tag = f.to_string() + " " + w.to_string();
    const int mu = milnor_data(f).milnor_number;

    const MarkedNormalForm s = split_quadratic(f, w, {"x", "y"});
    int N = s.jet_order;
    L.expect(substitute_jet(f, s.witness, N) == s.polynomial.truncated(N), tag + ": split witness");
    L.expect(verify_weight_respecting(s.witness, w, w).respecting, tag + ": split weight-respecting");
    L.expect(milnor_data(s.polynomial).milnor_number == mu, tag + ": split mu");
    bool clean = true;
    for (const auto& [m, c] : s.polynomial.terms()) {
      if ((m[0] || m[1]) && !(m.degree() == 2 && m[0] == 1 && m[1] == 1)) clean = false;
    }
    L.expect(clean, tag + ": split support " + s.polynomial.to_string());

    const MarkedNormalForm n = weighted_normal_form(f, w);
    N = n.jet_order;
    L.expect(substitute_jet(f, n.witness, N) == n.polynomial.truncated(N), tag + ": normal form witness");
    L.expect(verify_weight_respecting(n.witness, w, w).respecting, tag + ": normal form weight-respecting");
    L.expect(milnor_data(n.polynomial).milnor_number == mu, tag + ": normal form mu");
    ++done;
  }
}

void lift_dichotomy(Ledger& L) {
  const Polynomial f = P("x*y + z^3 + t^6");
  const WeightVector w = W({1, 5, 2, 1});
  const Membership m = decide_membership(f, w);
  L.expect(m.member(), "(1,5,2,1) member");
  if (!m.member()) return;
  const std::vector<Rational> cs{0, 1, -2, Rational(1, 3)};
  for (const Rational& c : cs) {
    for (const Rational& c2 : cs) {
      const JetSubstitution phi = family_witness(*m.match, {c});
      const JetSubstitution phi2_inv = family_witness(*m.match, {c2}).inverse();
      const bool lifts = lift_check(compose(phi2_inv, phi), w, f).lifts;
      L.expect(lifts == (c == c2), "Phi_" + to_string(c) + " o Phi_" + to_string(c2) + "^-1");
    }
  }

  const Polynomial e6 = P("x^2 + y^2 + z^3 + x*t^2");
  const WeightVector we = W({4, 3, 2, 1});
  const Membership me = decide_membership(e6, we);
  L.expect(me.member(), "(4,3,2,1) member");
  if (!me.member()) return;
  std::vector<std::array<Rational, 3>> points;
  for (int u : {1, -1}) {
    for (int s : {1, -1}) {
      points.push_back({u, Rational(3, 5), Rational(4 * s, 5)});
      points.push_back({u, 0, s});
    }
  }
  for (const auto& [u, v, ww] : points) {
    for (const auto& [u2, v2, w2] : points) {
      const JetSubstitution psi_inv = family_witness(*me.match, {u, v, ww}).inverse();
      const JetSubstitution psi2 = family_witness(*me.match, {u2, v2, w2});
      const bool lifts = lift_check(compose(psi_inv, psi2), we, e6).lifts;
      const bool expected = v2 == v && w2 == u * u2 * ww;
      L.expect(lifts == expected, "Psi(" + to_string(u2) + "," + to_string(v2) + "," + to_string(w2) +
                                      ") o Psi(" + to_string(u) + "," + to_string(v) + "," +
                                      to_string(ww) + ")^-1");
    }
  }

  const JetSubstitution shear = map_of({{"z", "z + x"}}, 4, kXYZ);
  L.expect(!lift_check(shear, WeightVector(kXYZ, {1, 1, 2}), SmoothAmbient{}).lifts, "smooth shear fails");
}

void discrepancy_consistency(Ledger& L) {
  std::vector<Polynomial> corpus;
  for (int n = 1; n <= 6; ++n) corpus.push_back(a_n_family(n));
  for (const char* s : {"x*y + z^3 + t^6", "x*y + z^4 + t^8", "x*y + z^2 + t^3", "x*y + z^3 + t^3",
                        "x^2 + y^2 + z^3 + x*t^2", "x*y + z^2 + t^5", "x*y + z^5 + t^10"}) {
    corpus.push_back(P(s));
  }
  for (const Polynomial& f : yamamoto_inputs()) corpus.push_back(f);
  for (const Polynomial& f : corpus) {
    const ContractionCensus census = enumerate_contractions(f);
    for (const auto& k : census.classes) {
      const int formula = k.weights.sum() - *weight(*k.representative, k.weights) - 1;
      int tabulated = 0;
      switch (k.kind) {
        case ContractionKind::type1: tabulated = k.a; break;
        case ContractionKind::type2: tabulated = 4; break;
        case ContractionKind::type3: tabulated = 3; break;
        case ContractionKind::smooth: tabulated = k.a + k.b; break;
      }
      const std::string tag = f.to_string() + " " + k.weights.to_string();
      L.expect(formula == tabulated, tag + ": formula " + std::to_string(formula));
      L.expect(k.discrepancy == tabulated, tag + ": reported " + std::to_string(k.discrepancy));
    }
  }
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 4}, {2, 3}, {3, 5}, {4, 7}}) {
    const Membership m = decide_membership(SmoothAmbient{}, WeightVector(kXYZ, {1, a, b}));
    L.expect(m.member() && m.match->discrepancy == a + b, "smooth (1," + std::to_string(a) + "," +
                                                              std::to_string(b) + ")");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "membership and discrepancy on the canonical rows", 1, table2},
      {2, "contraction counts", 5, counting},
      {3, "E6 pipeline on Yamamoto-form inputs", 5, e6_pipeline},
      {4, "Milnor numbers agree with the oracle", 30, milnor_oracle},
      {5, "finite determinacy under perturbation", 60, determinacy},
      {6, "witness soundness on 1000 random germs", 120, witness_soundness},
      {7, "lift dichotomy", 10, lift_dichotomy},
      {8, "discrepancy formula consistency", 5, discrepancy_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Ledger L;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(L);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.seconds;
    const bool pass = L.ok() && error.empty() && in_time;
    failed += pass ? 0 : 1;
    std::printf("criterion %d: %s  %s  (%d checks, %.2f s of %.0f s)\n", c.id, pass ? "PASS" : "FAIL",
                c.title.c_str(), L.checks(), secs, c.seconds);
    for (const auto& f : L.failures()) std::printf("    failed: %s\n", f.c_str());
    if (L.failed() > static_cast<int>(L.failures().size())) {
      std::printf("    ... %d failures in total\n", L.failed());
    }
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    if (!in_time) std::printf("    over the time budget\n");
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
