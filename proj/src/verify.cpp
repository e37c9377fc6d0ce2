#include "awez/verify.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <functional>
#include <random>
#include <sstream>

#include "awez/element_io.hpp"

namespace awez {

namespace {

Scalar sign_of(Field f, int exponent) { return exponent % 2 == 0 ? Scalar::one(f) : -Scalar::one(f); }

// Tensor product of elements, one per slot, as words.
Tensor expand(Field f, const std::vector<Element>& slots) {
  Tensor out(f, Word{});
  for (const Element& e : slots) {
    Tensor next(f);
    for (const auto& [w, c] : out)
      for (const auto& [x, cx] : e) {
        Word nw = w;
        nw.push_back(x);
        next.add(nw, c * cx);
      }
    out = std::move(next);
  }
  return out;
}

bool inner_units(const Word& w, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin + 1; i + 1 < end; ++i)
    if (w[i] == Algebra::unit()) return true;
  return false;
}

}  // namespace

CheckReport check_bimodule_map_sampled(const ChainMap& f, int n_max, int d_max, int a_max, std::uint64_t seed,
                                       int samples) {
  const Complex& p = f.source();
  const Complex& q = f.target();
  const Algebra& a = p.algebra();
  CheckReport rep;
  rep.name = "bimodule map " + f.name() + " (sampled)";
  rep.instance = p.name() + " -> " + q.name();
  rep.hdeg = n_max;
  rep.gdeg = d_max;
  rep.seed = seed;
  std::vector<int> coeffs = a.basis_up_to(a_max);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, coeffs.size() - 1);
  long checked = 0;
  for (int n = 0; n <= n_max && rep.pass; ++n) {
    std::vector<Word> words = p.basis_up_to(n, d_max);
    if (words.size() > kMaxSampledWords) {
      std::shuffle(words.begin(), words.end(), rng);
      words.resize(kMaxSampledWords);
    }
    for (const Word& w : words) {
      Tensor fw = f.apply(n, w);
      for (int k = 0; k < samples; ++k) {
        int x = coeffs[pick(rng)], y = coeffs[pick(rng)];
        ++checked;
        Tensor lhs = f.apply(n, p.act(x, w, y, n));
        Tensor rhs = q.act(a.basis_element(x), fw, a.basis_element(y), n);
        if (lhs != rhs) {
          rep.fail(a.format(x) + " · (" + p.format(n, w) + ") · " + a.format(y), "f(a w b) = " + q.format(n, lhs),
                   "a f(w) b = " + q.format(n, rhs));
          break;
        }
      }
      if (!rep.pass) break;
    }
  }
  rep.detail = std::to_string(checked) + " sampled products checked";
  return rep;
}

CheckReport check_group_closed_forms(const AwEz& maps, const GroupHopfAlgebra& hopf, const HopfAction& action,
                                     int n_max, int d_max) {
  const TwistedProductAlgebra& A = maps.algebra();
  const FiniteGroup& G = hopf.group();
  Field f = A.field();
  CheckReport rep;
  rep.name = "group closed forms";
  rep.instance = A.name();
  rep.hdeg = n_max;
  rep.gdeg = d_max;
  long checked = 0;

  // f_1 g_1 (x) ... -> f_1 (x) ^{g_1} f_2 (x) ^{g_1 g_2} f_3 ... (x) g_1 (x) g_2 ...
  auto unshuffle = [&](const Word& w) {
    std::vector<Element> slots;
    Word gs;
    int prefix = Algebra::unit();
    for (int letter : w) {
      auto [r, g] = A.pair(letter);
      slots.push_back(action.act(prefix, r));
      gs.push_back(g);
      prefix = G.multiply(prefix, g);
    }
    Tensor out(f);
    for (const auto& [u, c] : expand(f, slots)) {
      Word y = u;
      y.insert(y.end(), gs.begin(), gs.end());
      out.add(y, c);
    }
    return out;
  };
  // f_1 .. f_k g_1 .. g_k -> f_1 g_1 (x) ^{g_1^-1} f_2 g_2 (x) ^{(g_1 g_2)^-1} f_3 g_3 ...
  auto shuffle = [&](const Word& y) {
    std::size_t len = y.size() / 2;
    std::vector<Element> slots;
    int prefix = Algebra::unit();
    for (std::size_t i = 0; i < len; ++i) {
      int g = y[len + i];
      Element twisted = action.act(G.inverse(prefix), y[i]);
      Element letter(f);
      for (const auto& [r, c] : twisted) letter.add(A.id(r, g), c);
      slots.push_back(letter);
      prefix = G.multiply(prefix, g);
    }
    return expand(f, slots);
  };
  // On 1 (x) f_1 g_1 (x) ... (x) f_n g_n (x) 1.
  auto aw = [&](int n, const Word& w) {
    std::vector<Element> tw;
    std::vector<int> gs;
    int prefix = Algebra::unit();
    for (int i = 1; i <= n; ++i) {
      auto [r, g] = A.pair(w[i]);
      tw.push_back(action.act(prefix, r));
      gs.push_back(g);
      prefix = G.multiply(prefix, g);
    }
    Tensor out(f);
    for (int l = 0; l <= n; ++l) {
      Element front(f, Algebra::unit());
      for (int i = 0; i < l; ++i) front = A.R().multiply(front, tw[i]);
      std::vector<Element> cs{front};
      for (int i = l; i < n; ++i) cs.push_back(tw[i]);
      cs.push_back(Element(f, Algebra::unit()));
      int tail = Algebra::unit();
      for (int i = l; i < n; ++i) tail = G.multiply(tail, gs[i]);
      Word d{Algebra::unit()};
      for (int i = 0; i < l; ++i) d.push_back(gs[i]);
      d.push_back(tail);
      for (const auto& [c, cc] : expand(f, cs)) out.add(maps.product_word(n - l, c, d), sign_of(f, l * (n - l)) * cc);
    }
    return out;
  };
  // On (1 f_1 .. f_i 1) (x) (1 g_1 .. g_j 1): a sum over (i, j)-shuffles placing
  // f's and g's, each f twisted by the inverse of the g's to its left.
  auto ez = [&](int n, const Word& x) {
    const TwistedProductComplex& X = maps.product(false);
    int i;
    Word c, d;
    X.split(n, x, i, c, d);
    int j = n - i;
    Scalar pre = maps.theta_sign() == ThetaSign::Literal ? sign_of(f, i * j) : Scalar::one(f);
    Tensor out(f);
    for (const Shuffle& sigma : enumerate_shuffles(i, j)) {
      std::vector<int> from_r(static_cast<std::size_t>(n + 1), 0), slot(static_cast<std::size_t>(n + 1), 0);
      for (int k = 1; k <= i; ++k) from_r[sigma.image[k - 1]] = 1, slot[sigma.image[k - 1]] = c[k];
      for (int k = 1; k <= j; ++k) slot[sigma.image[i + k - 1]] = d[k];
      std::vector<Element> letters{Element(f, Algebra::unit())};
      int prefix = Algebra::unit();
      for (int p = 1; p <= n; ++p) {
        Element letter(f);
        if (from_r[p]) {
          for (const auto& [r, cr] : action.act(G.inverse(prefix), slot[p])) letter.add(A.id(r, Algebra::unit()), cr);
        } else {
          letter.add(A.id(Algebra::unit(), slot[p]), Scalar::one(f));
          prefix = G.multiply(prefix, slot[p]);
        }
        letters.push_back(letter);
      }
      letters.push_back(Element(f, Algebra::unit()));
      out.add(expand(f, letters), sigma.sign > 0 ? pre : -pre);
    }
    return out;
  };
  auto reduce_product = [&](int n, const Tensor& t) {
    const TwistedProductComplex& X = maps.product(false);
    Tensor out(f);
    for (const auto& [w, cw] : t) {
      int i;
      Word c, d;
      X.split(n, w, i, c, d);
      if (!inner_units(c, 0, c.size()) && !inner_units(d, 0, d.size())) out.add(w, cw);
    }
    return out;
  };
  auto reduce_bar = [&](const Tensor& t) {
    Tensor out(f);
    for (const auto& [w, cw] : t)
      if (!inner_units(w, 0, w.size())) out.add(w, cw);
    return out;
  };
  auto compare = [&](const std::string& what, const std::string& word, const Tensor& generic, const Tensor& closed,
                     const Complex& target, int n) {
    ++checked;
    if (generic == closed) return true;
    rep.fail(what + " on " + word, "generic = " + target.format(n, generic), "closed = " + target.format(n, closed));
    return false;
  };

  const BarComplex& bA = maps.bar_A(false);
  const IntermediateComplex& Y = maps.intermediate();
  for (int n = 0; n <= n_max && rep.pass; ++n)
    for (int d = 0; d <= d_max && rep.pass; ++d) {
      for (const Word& w : bA.basis(n, d))
        if (!compare("ϱ", bA.format(n, w), maps.unshuffle(n, w), unshuffle(w), Y, n)) break;
      if (!rep.pass) break;
      for (const Word& y : Y.basis(n, d))
        if (!compare("ϱ⁻¹", Y.format(n, y), maps.shuffle(n, y), shuffle(y), bA, n)) break;
      if (!rep.pass) break;
      for (const Word& w : bA.generators(n, d)) {
        Tensor closed = aw(n, w);
        if (!compare("AW_B", bA.format(n, w), maps.aw_unreduced(n, w), closed, maps.product(false), n)) break;
        if (!inner_units(w, 0, w.size()) &&
            !compare("AW", bA.format(n, w), maps.aw(n, w), reduce_product(n, closed), maps.product(true), n))
          break;
      }
      if (!rep.pass) break;
      for (const Word& x : maps.product(false).generators(n, d)) {
        Tensor closed = ez(n, x);
        if (!compare("EZ_B", maps.product(false).format(n, x), maps.ez_unreduced(n, x), closed, bA, n)) break;
        if (reduce_product(n, Tensor(f, x)).is_zero()) continue;
        if (!compare("EZ", maps.product(false).format(n, x), maps.ez(n, x), reduce_bar(closed), maps.bar_A(true), n))
          break;
      }
    }
  rep.detail = std::to_string(checked) + " words compared";
  return rep;
}

std::vector<std::pair<std::string, std::function<CheckReport()>>> pipeline_checks(const SmashKoszulPipeline& p,
                                                                               int n_max, int d_max) {
  const int Hx = std::min(n_max, 2), Gx = std::min(d_max, 3), Ga = std::min(d_max, 2);
  const SmashKoszulPipeline* q = &p;
  return {
      {"compatible ι_R, 1", [=] { return check_compatible(q->compatibility(), n_max, d_max, 1); }},
      {"d² = 0: K ⊗τ B̄_H", [=] { return check_d_squared(q->product(), n_max, d_max); }},
      {"exactness: K ⊗τ B̄_H", [=] { return check_truncated_exactness(q->product(), Hx, Gx); }},
      {"chain map ι", [=] { return check_chain_map(q->iota(), n_max, d_max); }},
      {"chain map π", [=] { return check_chain_map(q->pi(), n_max, Ga); }},
      {"π ∘ ι = 1", [=] { return check_identity_composition(q->pi(), q->iota(), n_max, d_max); }},
      {"π_{R,H} (ι_R ⊗ 1) = 1", [=] {
         ChainMap iota_tensor = tensor_chain_maps(q->iota_R(), q->iota_H(), q->product(), q->maps().product(true));
         return check_identity_composition(q->pi_RH(), iota_tensor, n_max, d_max);
       }}};
}

std::vector<CheckReport> run_suite(const Instance& inst, const SuiteOptions& opt) {
  std::vector<CheckReport> out;
  const int H = opt.hdeg, G = opt.gdeg;
  const int Hx = std::min(H, 2), Gx = std::min(G, 3), Ga = std::min(G, 2);
  std::string label = inst.name() + " over " + inst.field().name();
  auto run = [&](const std::string& name, const std::function<CheckReport()>& check) {
    auto start = std::chrono::steady_clock::now();
    CheckReport rep;
    try {
      rep = check();
    } catch (const std::exception& e) {
      rep = CheckReport{};
      rep.fail("exception", e.what(), "");
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rep.name = name;
    rep.instance = label;
    rep.seed = opt.seed;
    out.push_back(rep);
    return rep.pass;
  };
  // The report passes exactly when the wrapped check fails.
  auto negative = [&](const std::string& name, const std::function<CheckReport()>& check) {
    run("negative control: " + name, [&] {
      CheckReport inner = check();
      CheckReport rep;
      rep.hdeg = inner.hdeg;
      rep.gdeg = inner.gdeg;
      if (inner.pass)
        rep.fail("(none)", "the check passed", "a failure was expected");
      else
        rep.detail = "flagged at " + inner.witness;
      return rep;
    });
  };

  const TwistingMap& tau = inst.twist();
  bool twist_ok = run("twist axiom (hexagon)", [&] { return check_twist_axiom(tau, G); });
  twist_ok = run("twist inverse", [&] { return check_twist_inverse(tau, G); }) && twist_ok;
  if (inst.action()) {
    run("Hopf axioms", [&] { return check_hopf_axioms(*inst.group_hopf()); });
    run("action axioms", [&] { return check_action_axioms(*inst.action(), G); });
  }
  if (!twist_ok) return out;

  AwEz maps(inst.algebra(), H + 1);
  const std::vector<std::pair<std::string, const Complex*>> complexes{
      {"bar B_A", &maps.bar_A(false)},          {"reduced bar B̄_A", &maps.bar_A(true)},
      {"Y", &maps.intermediate()},              {"B_R ⊗τ B_S", &maps.product(false)},
      {"B̄_R ⊗τ B̄_S", &maps.product(true)}};
  for (const auto& [name, c] : complexes) run("d² = 0: " + name, [&] { return check_d_squared(*c, H, G); });
  for (const auto& [name, c] : complexes)
    run("exactness: " + name, [&] { return check_truncated_exactness(*c, Hx, Gx); });

  const std::vector<const ChainMap*> all{&maps.rho(),   &maps.rho_inverse(), &maps.aw_bar(),
                                         &maps.ez_bar(), &maps.aw_map(),      &maps.ez_map()};
  for (const ChainMap* f : all) run("chain map " + f->name(), [&] { return check_chain_map(*f, H, G); });
  for (const ChainMap* f : all)
    run("bimodule map " + f->name(), [&] {
      return opt.exhaustive ? check_bimodule_map(*f, H, Ga, 2)
                            : check_bimodule_map_sampled(*f, H, Ga, 2, opt.seed, opt.samples);
    });
  run("AW ∘ EZ = 1", [&] { return check_identity_composition(maps.aw_map(), maps.ez_map(), H, G); });
  if (inst.action())
    run("group closed forms", [&] { return check_group_closed_forms(maps, *inst.group_hopf(), *inst.action(), H, G); });

  if (inst.koszul_ready()) {
    KoszulComplex k(inst.R(), H + 1);
    run("d² = 0: Koszul K_R", [&] { return check_d_squared(k, H, G); });
    run("exactness: Koszul K_R", [&] { return check_truncated_exactness(k, Hx, Gx); });
  }
  if (inst.action() && inst.koszul_ready()) {
    std::unique_ptr<SmashKoszulPipeline> p;
    if (run("smash-Koszul pipeline construction", [&] {
          p = std::make_unique<SmashKoszulPipeline>(inst.algebra(), *inst.action(), H + 1);
          return CheckReport{};
        }))
      for (const auto& [name, check] : pipeline_checks(*p, H, G))
        run(name, check);
  }

  // Expectations written into the instance file.
  const Json& doc = inst.description().doc;
  if (doc.contains("expect")) {
    std::map<std::string, WordCodec> codecs{
        {"bar", WordCodec::bar("bar", maps.bar_A(false))},
        {"reduced-bar", WordCodec::bar("reduced-bar", maps.bar_A(true))},
        {"product", WordCodec::product("product", maps.product(false))},
        {"reduced-product", WordCodec::product("reduced-product", maps.product(true))}};
    auto load = [&](const std::string& name, int& n, std::string& complex) {
      const Json& e = doc["elements"][name];
      complex = e.value("complex", "");
      auto it = codecs.find(complex);
      if (it == codecs.end())
        throw InstanceError(inst.description().source + "#/elements/" + name, "unsupported complex '" + complex + "'");
      return element_from_json(it->second, e, n, inst.description().source + "#/elements/" + name);
    };
    for (const auto& ex : doc["expect"]) {
      std::string name = ex["name"].get<std::string>();
      run(name, [&] {
        CheckReport rep;
        int n = 0, m = 0;
        std::string cin, cout;
        Tensor input = load(ex["input"].get<std::string>(), n, cin);
        Tensor expected = load(ex["output"].get<std::string>(), m, cout);
        bool reduced = cin.rfind("reduced", 0) == 0;
        auto aw = [&](const Tensor& t) { return reduced ? maps.aw_map().apply(n, t) : maps.aw_bar().apply(n, t); };
        auto ez = [&](const Tensor& t) { return reduced ? maps.ez_map().apply(n, t) : maps.ez_bar().apply(n, t); };
        std::string map = ex["map"].get<std::string>();
        Tensor got = map == "aw" ? aw(input) : map == "ez" ? ez(input) : map == "aw-ez" ? aw(ez(input)) : ez(aw(input));
        bool target_bar = map == "ez" || map == "ez-aw";
        const Complex& target = target_bar ? static_cast<const Complex&>(maps.bar_A(reduced))
                                           : static_cast<const Complex&>(maps.product(reduced));
        bool want_equal = ex.value("equal", true);
        if ((got == expected) != want_equal)
          rep.fail(ex["input"].get<std::string>(), "computed " + target.format(n, got),
                   (want_equal ? "expected " : "expected anything but ") + target.format(m, expected));
        else
          rep.detail = target.format(n, got);
        return rep;
      });
    }
  }

  negative("sign-corrupted d_2 of B̄_A", [&] {
    CorruptedDifferential bad(maps.bar_A(true), 2);
    return check_d_squared(bad, 2, Ga);
  });
  negative("sign-corrupted d_2 of B̄_R ⊗τ B̄_S", [&] {
    CorruptedDifferential bad(maps.product(true), 2);
    return check_d_squared(bad, 2, Ga);
  });
  // in_2 commutes with the actions whenever tau keeps S-bar (x) R-bar inside
  // R-bar (x) S-bar (group actions do); it can only fail when tau produces a
  // unit letter there.
  bool leaves_reduced = false;
  for (int s : inst.S().basis_up_to(G))
    for (int r : inst.R().basis_up_to(G)) {
      if (s == Algebra::unit() || r == Algebra::unit()) continue;
      for (const auto& [w, c] : tau.apply(s, r))
        if (w[0] == Algebra::unit() || w[1] == Algebra::unit()) leaves_reduced = true;
    }
  if (leaves_reduced) negative("in₂ is not a bimodule map", [&] { return check_bimodule_map(maps.in2(), 1, Ga, 1); });
  return out;
}

std::string format_report(const CheckReport& r, bool with_time) {
  std::ostringstream os;
  os << r.name << ": " << (r.pass ? "PASS" : "FAIL");
  if (r.pass && !r.detail.empty()) os << "  (" << r.detail << ")";
  if (with_time) os << "  [" << r.seconds << " s]";
  if (!r.pass) {
    os << "\n  witness: " << r.witness;
    if (!r.lhs.empty()) os << "\n  " << r.lhs;
    if (!r.rhs.empty()) os << "\n  " << r.rhs;
  }
  return os.str();
}

Json report_to_json(const CheckReport& r) {
  Json j{{"check", r.name}, {"instance", r.instance}, {"hdeg", r.hdeg}, {"gdeg", r.gdeg},
         {"verdict", r.pass ? "PASS" : "FAIL"}, {"seed", r.seed}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.pass) {
    j["witness"] = r.witness;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  return j;
}

}  // namespace awez
