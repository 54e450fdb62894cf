// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "hopfkit/cli.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/serialization.hpp"
#include "oracle.hpp"

using namespace hopfkit;
using namespace fixtures;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool run_criterion(int number, const std::string& title, double limit_ms, const std::function<void(Verdict&)>& body) {
  Verdict v;
  auto start = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.ok = false;
    v.detail = std::string("unexpected exception: ") + e.what();
  }
  auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (limit_ms > 0) v.require(ms < limit_ms, "runtime " + std::to_string(ms) + " ms over limit");
  std::cout << "criterion " << number << ": " << (v.ok ? "PASS" : "FAIL") << " - " << title << " (" << static_cast<long>(ms)
            << " ms)";
  if (!v.ok) std::cout << " -- " << v.detail;
  std::cout << std::endl;
  return v.ok;
}

std::string describe(const CheckReport& r) {
  for (const auto& l : r.laws())
    if (l.outcome == Outcome::failed) return l.law + (l.witness ? " " + l.witness->to_string() : "");
  return "ok";
}

std::vector<HopfTrussData> idempotent_suite() {
  std::vector<HopfTrussData> out;
  for (const auto& name : catalog_names()) {
    auto g = catalog_group(name);
    auto h = group_algebra(g, Q);
    for (const auto& e : idempotent_endos(g)) out.push_back(truss_from_idempotent(h, linearize(g, e, Q)));
  }
  return out;
}

/// S3 inversion matrix from an independent permutation model.
LinMap s3_inversion_oracle() {
  std::array<std::array<int, 3>, 6> perms{};
  std::array<int, 3> p{0, 1, 2};
  for (std::size_t k = 0; k < 6; ++k) {
    perms[k] = p;
    std::next_permutation(p.begin(), p.end());
  }
  std::vector<std::vector<std::int64_t>> rows(6, std::vector<std::int64_t>(6, 0));
  for (std::size_t k = 0; k < 6; ++k) {
    std::array<int, 3> inv{};
    for (int i = 0; i < 3; ++i) inv[perms[k][i]] = i;
    auto j = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), inv) - perms.begin());
    rows[j][k] = 1;
  }
  return LinMap::from_ints(Q, {6}, {6}, rows);
}

LinMap bump(const LinMap& f, std::size_t row, std::size_t col) {
  auto dense = f.to_dense();
  dense[row][col] = dense[row][col] + Scalar(f.field(), 1);
  return LinMap::from_rows(f.field(), f.dom(), f.cod(), dense);
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "hopfkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main() {
  bool all = true;

  all &= run_criterion(1, "Hopf verification of group algebras over Q and GF(5) and of H4", 5000, [](Verdict& v) {
    std::vector<std::string> names{"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "S3", "D4", "Q8"};
    for (const auto& field : {Q, FieldSpec::prime(5)}) {
      for (const auto& name : names) {
        auto r = full_hopf_suite(group_algebra(catalog_group(name), field));
        v.require(r.passed(), name + " over " + field.to_string() + ": " + describe(r));
      }
    }
    auto r = full_hopf_suite(h4());
    v.require(r.passed(), "H4: " + describe(r));
  });

  all &= run_criterion(2, "antipode synthesis (S3 inversion, H4 lambda, monoid has none)", 0, [](Verdict& v) {
    auto s = s3();
    v.require(equal(solve_antipode(s.bialgebra()), s3_inversion_oracle()).equal, "S3 antipode differs from inversion");
    auto h = h4();
    v.require(equal(solve_antipode(h.bialgebra()), h.lambda).equal, "H4 antipode differs from constructed lambda");
    bool refused = false;
    try {
      solve_antipode(two_element_monoid_bialgebra(Q));
    } catch (const Error& e) {
      refused = e.kind() == ErrorKind::no_antipode;
    }
    v.require(refused, "monoid bialgebra did not raise NoAntipode");
  });

  all &= run_criterion(3, "truss suite over all idempotents of groups of order <= 8, plus mutations", 0, [](Verdict& v) {
    auto suite = idempotent_suite();
    for (const auto& t : suite) {
      auto r = check_truss(t);
      v.require(r.passed(), "check_truss on dim " + std::to_string(t.obj.dim()) + ": " + describe(r));
      auto d = check_truss_derived(t);
      v.require(d.passed(), "check_truss_derived on dim " + std::to_string(t.obj.dim()) + ": " + describe(d));
    }
    v.require(suite.size() >= 40, "suite unexpectedly small: " + std::to_string(suite.size()));
    std::size_t mutations = 0;
    for (const auto& t : {d_q(), truss_from_idempotent(s3(), other_retraction()), identity_truss(c2())}) {
      auto check_mutant = [&](const HopfTrussData& m, const std::string& what) {
        ++mutations;
        auto r = check_truss(m);
        bool witnessed = false;
        for (const auto& l : r.laws()) witnessed |= l.outcome == Outcome::failed && l.witness.has_value();
        v.require(!r.passed() && witnessed, what + " mutation went undetected");
      };
      for (std::size_t i = 0; i < t.sigma.rows(); ++i)
        for (std::size_t j = 0; j < t.sigma.cols(); ++j) {
          auto m = t;
          m.sigma = bump(t.sigma, i, j);
          check_mutant(m, "sigma(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      for (std::size_t i = 0; i < t.mu2.rows(); ++i)
        for (std::size_t j = 0; j < t.mu2.cols(); ++j) {
          auto m = t;
          m.mu2 = bump(t.mu2, i, j);
          check_mutant(m, "mu2(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    v.require(mutations > 500, "too few mutations");
  });

  all &= run_criterion(4, "G∘F = id and F∘G = id on the structure suite", 5000, [](Verdict& v) {
    std::vector<std::pair<std::string, WTPHData>> wtphs{{"trivial C2", trivial_wtph(c2())},
                                                        {"trivial S3", trivial_wtph(s3())},
                                                        {"trivial H4", trivial_wtph(h4())},
                                                        {"conjugation S3", conjugation_wtph(s3())},
                                                        {"collapsed S3", collapsed_wtph(s3())}};
    for (const auto& [name, w] : wtphs) {
      v.require(check_wtph(w).passed(), name + " is not a WTPH");
      auto r = compare_wtph(functor_G(functor_F(w)), w);
      v.require(r.passed(), "G∘F on " + name + ": " + describe(r));
    }
    std::vector<std::pair<std::string, HopfTrussData>> trusses{
        {"D_q sign-retraction", d_q()},
        {"D_q other retraction", truss_from_idempotent(s3(), other_retraction())},
        {"identity truss S3", identity_truss(s3())}};
    for (const auto& [name, t] : trusses) {
      auto r = compare_trusses(functor_F(functor_G(t)), t);
      v.require(r.passed(), "F∘G on " + name + ": " + describe(r));
    }
  });

  all &= run_criterion(5, "Ω/Λ equivalence and Σ/Θ adjunction", 0, [](Verdict& v) {
    auto suite = idempotent_suite();
    suite.push_back(identity_truss(h4()));
    suite.push_back(trivial_truss(h4()));
    suite.push_back(functor_F(conjugation_wtph(s3())));
    for (const auto& t : suite) {
      auto r = compare_trusses(functor_Omega(functor_Lambda(t)), t);
      v.require(r.passed(), "Ω∘Λ: " + describe(r));
    }
    auto a = s3_conjugation();
    std::vector<WTRBData> ws{functor_Lambda(d_q()), functor_Lambda(identity_truss(s3())),
                             transport(functor_Lambda(d_q()), a, a),
                             transport(functor_Lambda(truss_from_idempotent(s3(), other_retraction())), a, a)};
    for (const auto& w : ws) {
      v.require(check_wtrb(w).passed(), "suite WTRB invalid");
      auto r = equivalence_check(w);
      v.require(r.passed(), "Λ∘Ω ≅ id via (id,T): " + describe(r));
      v.require(r.holds("(id,T)/rb-morphism:T") && r.holds("(id,T)/rb-morphism:Psi") && r.holds("(id,T)/rb-morphism:phi"),
                "RBMorphism equations not all reported");
    }
    auto w = functor_Lambda(d_q());
    auto q = sign_retraction();
    std::size_t instances = 0;
    auto adj = [&](const HopfTrussData& t, const WTRBData& target, const LinMap& f, std::optional<RBMorphism> xy,
                   const std::string& name) {
      auto r = adjunction_check(t, target, f, xy);
      v.require(r.passed(), "adjunction " + name + ": " + describe(r));
      ++instances;
    };
    adj(d_q(), w, s3().obj.id(), RBMorphism{s3().obj.id(), s3().obj.id()}, "identity");
    adj(trivial_truss(c2()), w, compose(s3().eta, c2().eps), std::nullopt, "C2 unit map");
    adj(d_q(), w, q, RBMorphism{q, q}, "q");
    auto aqa = compose(a, q, a);
    adj(d_q(), functor_Lambda(truss_from_idempotent(s3(), aqa)), a, RBMorphism{a, a}, "conjugation");
    v.require(instances >= 3, "fewer than three adjunction instances");
  });

  all &= run_criterion(6, "lemma regressions (Φ idempotent, m = m∘(Φ⊗id), unit laws of 𝔪 and T)", 0, [](Verdict& v) {
    std::vector<WTPHData> wtphs{trivial_wtph(c2()), trivial_wtph(s3()), trivial_wtph(h4()), conjugation_wtph(s3()),
                                collapsed_wtph(c2()), collapsed_wtph(s3()), collapsed_wtph(h4())};
    for (const auto& t : idempotent_suite()) wtphs.push_back(functor_G(t));
    std::size_t twisted = 0;
    for (const auto& w : wtphs) {
      if (!equal(compose(w.Phi, w.H.eta), w.H.eta).equal) continue;
      auto r = lemma_suite(w);
      v.require(r.holds("lemma:phi-idempotent"), "Φ∘Φ ≠ Φ: " + describe(r));
      if (check_twisted(w).passed()) {
        ++twisted;
        v.require(r.holds("lemma:m-phi"), "m ≠ m∘(Φ⊗id): " + describe(r));
      }
    }
    v.require(twisted >= 10, "too few twisted instances: " + std::to_string(twisted));
    auto a = s3_conjugation();
    std::vector<WTRBData> unital{functor_Lambda(identity_truss(s3())), functor_Lambda(identity_truss(h4())),
                                 functor_Lambda(identity_truss(c2())),
                                 transport(functor_Lambda(identity_truss(s3())), a, a)};
    for (const auto& w : unital) {
      v.require(w.B.eta.has_value(), "expected a unital B");
      auto r = check_trb(w);
      v.require(r.holds("trb:m-left-unit"), "𝔪∘(η⊗id) ≠ id: " + describe(r));
      v.require(r.holds("trb:T-unit"), "T∘η ≠ η_B: " + describe(r));
    }
  });

  all &= run_criterion(7, "S_H calculus", 0, [](Verdict& v) {
    for (const auto& h : {c2(), s3()})
      v.require(equal(s_map(trivial_wtph(h)), h.lambda).equal, "s_map ≠ λ on trivial structure");
    std::vector<WTPHData> suite{trivial_wtph(c2()), trivial_wtph(s3()), conjugation_wtph(s3()), collapsed_wtph(c2()),
                                collapsed_wtph(s3()), functor_G(d_q()),
                                functor_G(truss_from_idempotent(s3(), other_retraction()))};
    std::size_t square_checked = 0;
    for (const auto& w : suite) {
      v.require(check_cocommutative(w.H.coalgebra()) && check_twisted(w).passed(), "suite member not cocommutative twisted");
      auto r = s_property_suite(w);
      v.require(r.holds("s:bar-convolution"), "id ∗̄ S ≠ ε⊗η: " + describe(r));
      if (beta_tilde_is_coalgebra_morphism(w)) {
        ++square_checked;
        v.require(r.holds("s:square-phi"), "S∘S ≠ Φ: " + describe(r));
        auto iff = phi_id_equivalence(w);
        v.require(iff.phi_is_id == iff.s_bar_id_is_unit, "Φ = id biconditional disagrees");
      }
    }
    v.require(square_checked >= 3, "β̃ coalgebra-morphism branch exercised too rarely");
  });

  all &= run_criterion(8, "idempotent splitting of the sign-retraction and induced Hopf algebra", 0, [](Verdict& v) {
    auto w = functor_G(d_q());
    auto q = sign_retraction();
    v.require(equal(w.Phi, q).equal, "G(D_q) cocycle is not q");
    auto s = split_idempotent(q);
    v.require(s.r == 2, "rank " + std::to_string(s.r));
    v.require(equal(compose(s.i, s.p), q).equal, "i∘p ≠ Φ");
    v.require(equal(compose(s.p, s.i), identity(Q, {2})).equal, "p∘i ≠ id₂");
    auto ind = induced_hopf(w, s);
    auto r = full_hopf_suite(ind);
    v.require(r.passed(), "induced Hopf algebra: " + describe(r));
    auto expected = compose(s.p, s_map(w), s.i);
    v.require(equal(solve_antipode(ind.bialgebra()), expected).equal, "solved antipode ≠ p∘S∘i");
    v.require(equal(ind.lambda, expected).equal, "constructed antipode ≠ p∘S∘i");
  });

  all &= run_criterion(9, "class-condition discrimination", 0, [](Verdict& v) {
    std::mt19937 rng(20261015);
    auto gf5 = FieldSpec::prime(5);
    std::vector<HopfAlgebraData> carriers{group_algebra(symmetric_group3(), gf5), group_algebra(cyclic_group(4), gf5),
                                          group_algebra(dihedral_group4(), gf5),
                                          function_algebra(cyclic_group(4), gf5)};
    std::size_t trials = 0;
    for (const auto& h : carriers) {
      v.require(check_cocommutative(h.coalgebra()), "carrier not cocommutative");
      for (int k = 0; k < 30; ++k, ++trials) {
        auto f = oracle::random_map(rng, gf5, {h.dim(), h.dim()}, {h.dim()}, 0.3);
        v.require(cocommutativity_class_check(f, h.coalgebra()), "class condition failed on a cocommutative carrier");
      }
    }
    v.require(trials >= 100, "fewer than 100 trials");
    auto h = h4();
    v.require(!cocommutativity_class_check(h.mu, h.coalgebra()), "μ over H4 satisfies the class condition");
  });

  all &= run_criterion(10, "CLI contract: gen → check → construct G → construct F round trip, exit codes", 10000,
                       [](Verdict& v) {
    auto dir = std::filesystem::temp_directory_path() / "hopfkit-acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto p = [&](const char* name) { return (dir / name).string(); };
    v.require(cli({"gen", "truss-q", "--group", "S3", "--endo", "sign-retraction", "--field", "Q", "-o", p("dq.json")}) == 0,
              "gen failed");
    v.require(cli({"check", p("dq.json")}) == 0, "check on D_q did not exit 0");
    v.require(cli({"construct", p("dq.json"), "--functor", "G", "-o", p("g.json")}) == 0, "construct G failed");
    v.require(cli({"construct", p("g.json"), "--functor", "F", "-o", p("f.json")}) == 0, "construct F failed");
    v.require(slurp(p("f.json")) == slurp(p("dq.json")), "F∘G output not byte-identical");
    v.require(cli({"construct", p("f.json"), "--functor", "G", "-o", p("g2.json")}) == 0, "second construct G failed");
    v.require(slurp(p("g2.json")) == slurp(p("g.json")), "G∘F output not byte-identical");
    v.require(cli({"check", p("g.json"), "--kind", "wtph"}) == 0, "check on G(D_q) did not exit 0");

    auto text = slurp(p("dq.json"));
    auto pos = text.find("\"sigma\"");
    pos = text.find("\"1 0 0 1 1 0\"", pos);
    v.require(pos != std::string::npos, "could not locate σ row");
    if (pos != std::string::npos) {
      text.replace(pos, 13, "\"1 0 0 1 0 1\"");
      std::ofstream(p("broken.json")) << text;
      v.require(cli({"check", p("broken.json")}) == 1, "law failure did not exit 1");
    }
    std::ofstream(p("corrupt.json")) << "{\"format-version\": 1, \"kind\": ";
    v.require(cli({"check", p("corrupt.json")}) == 2, "corrupted file did not exit 2");
    v.require(cli({"construct", p("dq.json"), "--functor", "F", "-o", p("x.json")}) == 2, "domain mismatch did not exit 2");
    std::filesystem::remove_all(dir);
  });

  return all ? 0 : 1;
}
