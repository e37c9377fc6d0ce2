// Command-line front end: builds resolutions, evaluates AW and EZ on
// serialized elements, runs conversions and the verification suite.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "awez/element_io.hpp"
#include "awez/verify.hpp"

#ifndef AWEZ_INSTANCE_DIR
#define AWEZ_INSTANCE_DIR "instances"
#endif

namespace {

using namespace awez;

struct Globals {
  std::string field;
  int hdeg = -1;
  int gdeg = -1;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool exhaustive = false;
  std::string instance_dir;
};

// Exit codes.
constexpr int kPass = 0, kFail = 1, kUsage = 2;

std::string instance_dir(const Globals& g) {
  if (!g.instance_dir.empty()) return g.instance_dir;
  if (const char* env = std::getenv("AWEZ_INSTANCE_DIR")) return env;
  return AWEZ_INSTANCE_DIR;
}

std::unique_ptr<Instance> load(const Globals& g, const std::string& name) {
  InstanceDescription d = parse_instance(resolve_instance(name, instance_dir(g)));
  if (!g.field.empty()) d.field = Field::parse(g.field);
  if (g.hdeg >= 0) d.hdeg = g.hdeg;
  if (g.gdeg >= 0) d.gdeg = g.gdeg;
  return std::make_unique<Instance>(std::move(d));
}

std::string signature(const std::string& id) {
  if (id == "bar") return "A ⊗ A^{⊗n} ⊗ A";
  if (id == "reduced-bar") return "A ⊗ Ā^{⊗n} ⊗ A";
  if (id == "product") return "⊕_{i+j=n} (R ⊗ R^{⊗i} ⊗ R) ⊗ (S ⊗ S^{⊗j} ⊗ S)";
  if (id == "reduced-product") return "⊕_{i+j=n} (R ⊗ R̄^{⊗i} ⊗ R) ⊗ (S ⊗ S̄^{⊗j} ⊗ S)";
  if (id == "intermediate") return "R^{⊗n+2} ⊗ S^{⊗n+2}";
  if (id == "koszul") return "R ⊗ K̃_n ⊗ R";
  return "⊕_{i+j=n} (R ⊗ K̃_i ⊗ R) ⊗ (H ⊗ H̄^{⊗j} ⊗ H)";
}

int cmd_build(const Globals& g, const std::string& name, std::vector<std::string> wanted) {
  auto inst = load(g, name);
  if (wanted.empty()) wanted = inst->resolutions();
  AwEz maps(inst->algebra(), inst->hdeg() + 1);
  std::unique_ptr<KoszulComplex> k;
  std::unique_ptr<SmashKoszulPipeline> pipeline;
  Json out = Json::array();
  for (const std::string& id : wanted) {
    const Complex* c = nullptr;
    if (id == "bar") c = &maps.bar_A(false);
    else if (id == "reduced-bar") c = &maps.bar_A(true);
    else if (id == "product") c = &maps.product(false);
    else if (id == "reduced-product") c = &maps.product(true);
    else if (id == "intermediate") c = &maps.intermediate();
    else if (id == "koszul") {
      if (!k) k = std::make_unique<KoszulComplex>(inst->R(), inst->hdeg());
      c = k.get();
    } else if (id == "koszul-product") {
      if (!inst->action()) throw std::invalid_argument("koszul-product needs a group-action instance");
      if (!pipeline) pipeline = std::make_unique<SmashKoszulPipeline>(inst->algebra(), *inst->action(), inst->hdeg());
      c = &pipeline->product();
    } else {
      throw std::invalid_argument("unknown resolution '" + id + "'");
    }
    for (int n = 0; n <= inst->hdeg(); ++n) {
      std::vector<std::size_t> counts;
      for (int d = 0; d <= inst->gdeg(); ++d) counts.push_back(c->generators(n, d).size());
      if (g.json) {
        out.push_back(Json{{"resolution", id}, {"complex", c->name()}, {"n", n}, {"signature", signature(id)},
                           {"generators", counts}});
      } else {
        std::cout << id << " n=" << n << "  " << signature(id) << "  generators by degree:";
        for (std::size_t x : counts) std::cout << ' ' << x;
        std::cout << '\n';
      }
    }
  }
  if (g.json) std::cout << out.dump(2) << '\n';
  return kPass;
}

// An element is a file, or the name of an element stored in the instance.
Json read_element(const Instance& inst, const std::string& spec, std::string& where) {
  const Json& doc = inst.description().doc;
  if (doc.contains("elements") && doc["elements"].contains(spec)) {
    where = inst.description().source + "#/elements/" + spec;
    return doc["elements"][spec];
  }
  std::ifstream in(spec);
  if (!in) throw InstanceError(spec, "cannot open element file");
  std::stringstream ss;
  ss << in.rdbuf();
  where = spec;
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    throw InstanceError(spec + ":byte " + std::to_string(e.byte), "malformed JSON");
  }
}

int cmd_map(const Globals& g, bool aw, const std::string& name, const std::string& element) {
  auto inst = load(g, name);
  std::string where;
  Json e = read_element(*inst, element, where);
  std::string complex = e.is_object() ? e.value("complex", "") : "";
  bool reduced = complex.rfind("reduced-", 0) == 0;
  std::string kind = reduced ? complex.substr(8) : complex;
  std::string source_kind = aw ? "bar" : "product";
  if (kind != source_kind)
    throw InstanceError(where + "#/complex", std::string(aw ? "AW" : "EZ") + " takes an element of '" + source_kind +
                                                 "' or 'reduced-" + source_kind + "'");
  AwEz maps(inst->algebra(), std::max(inst->hdeg(), e.value("degree", 0)) + 1);
  WordCodec bar = WordCodec::bar(reduced ? "reduced-bar" : "bar", maps.bar_A(reduced));
  WordCodec prod = WordCodec::product(reduced ? "reduced-product" : "product", maps.product(reduced));
  int n = 0;
  Tensor x = element_from_json(aw ? bar : prod, e, n, where);
  const ChainMap& f = aw ? (reduced ? maps.aw_map() : maps.aw_bar()) : (reduced ? maps.ez_map() : maps.ez_bar());
  Tensor y = f.apply(n, x);
  if (g.json)
    std::cout << element_to_json(aw ? prod : bar, n, y).dump(2) << '\n';
  else
    std::cout << f.target().format(n, y) << '\n';
  return kPass;
}

void emit(const Globals& g, const std::string& instance, const std::vector<CheckReport>& reports, Json& all) {
  if (g.json) {
    Json rs = Json::array();
    bool pass = true;
    for (const CheckReport& r : reports) {
      rs.push_back(report_to_json(r));
      pass = pass && r.pass;
    }
    all.push_back(Json{{"instance", instance}, {"pass", pass}, {"reports", std::move(rs)}});
    return;
  }
  std::size_t failed = 0;
  for (const CheckReport& r : reports) {
    std::cout << format_report(r, true) << '\n';
    failed += r.pass ? 0 : 1;
  }
  std::cout << instance << ": " << reports.size() << " checks, " << failed << " failed\n";
}

int cmd_verify(const Globals& g, const std::vector<std::string>& names, int samples) {
  Json all = Json::array();
  bool pass = true;
  for (const std::string& name : names) {
    auto inst = load(g, name);
    SuiteOptions opt{inst->hdeg(), inst->gdeg(), g.seed, g.exhaustive, samples};
    std::vector<CheckReport> reports = run_suite(*inst, opt);
    for (const CheckReport& r : reports) pass = pass && r.pass;
    emit(g, inst->name(), reports, all);
  }
  if (g.json) std::cout << all.dump(2) << '\n';
  return pass ? kPass : kFail;
}

int cmd_convert(const Globals& g, const std::string& name) {
  auto inst = load(g, name);
  if (!inst->action()) throw std::invalid_argument("convert needs a group-action instance");
  SmashKoszulPipeline p(inst->algebra(), *inst->action(), inst->hdeg() + 1);
  std::vector<CheckReport> reports;
  for (const auto& [check, fn] : pipeline_checks(p, inst->hdeg(), inst->gdeg())) {
    CheckReport r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.fail("exception", e.what(), "");
    }
    r.name = check;
    r.instance = inst->name() + " over " + inst->field().name();
    reports.push_back(r);
  }
  bool pass = true;
  for (const CheckReport& r : reports) pass = pass && r.pass;
  // The lifted blocks of π, (n, degree) -> rank of the image of P and the
  // number of complement generators lifted by solving.
  if (g.json) {
    Json blocks = Json::array();
    for (const auto& [key, info] : p.lift().blocks())
      blocks.push_back(Json{{"n", key.first}, {"degree", key.second}, {"image_rank", info.image_rank},
                            {"complement", info.complement}});
    Json rs = Json::array();
    for (const CheckReport& r : reports) rs.push_back(report_to_json(r));
    Json cert{{"instance", inst->name()}, {"field", inst->field().name()}, {"hdeg", inst->hdeg()},
              {"gdeg", inst->gdeg()}, {"pass", pass}, {"lifted_blocks", std::move(blocks)},
              {"checks", std::move(rs)}};
    std::cout << cert.dump(2) << '\n';
  } else {
    std::cout << "certificate for " << inst->name() << " over " << inst->field().name() << ": " << p.iota().name()
              << ": " << p.iota().source().name() << " -> " << p.iota().target().name() << ", "
              << p.pi().name() << " by bootstrap lifting\n";
    for (const auto& [key, info] : p.lift().blocks())
      std::cout << "  block n=" << key.first << " degree=" << key.second << ": image rank " << info.image_rank
                << ", lifted " << info.complement << '\n';
    for (const CheckReport& r : reports) std::cout << format_report(r, false) << '\n';
  }
  return pass ? kPass : kFail;
}

int cmd_shuffle(const Globals& g, int l, int m) {
  std::vector<Shuffle> all = enumerate_shuffles(l, m);
  if (g.json) {
    Json out = Json::array();
    for (const Shuffle& s : all) out.push_back(Json{{"image", s.image}, {"cycles", s.cycles()}, {"sign", s.sign}});
    std::cout << out.dump(2) << '\n';
  } else {
    for (const Shuffle& s : all) std::cout << s.cycles() << '\t' << (s.sign > 0 ? "+1" : "-1") << '\n';
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander-Whitney and Eilenberg-Zilber maps for twisted tensor products"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "Override the scalar field (Q or F<p>, p odd)");
  app.add_option("--hdeg", g.hdeg, "Homological degree budget")->check(CLI::NonNegativeNumber);
  app.add_option("--gdeg", g.gdeg, "Internal degree budget")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Seed for sampled bimodule coefficients");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--exhaustive", g.exhaustive, "Check all bimodule coefficient pairs instead of a sample");
  app.add_option("--instance-dir", g.instance_dir, "Directory of bundled instances");

  std::string instance;
  std::vector<std::string> instances;
  std::vector<std::string> resolutions;
  std::string element;
  int samples = 8;
  int l = 0, m = 0;

  auto* build = app.add_subcommand("build", "Construct resolutions and count free generators");
  build->add_option("--instance", instance, "Instance name or path")->required();
  build->add_option("--resolution", resolutions, "Resolutions to build (default: those the instance lists)");
  auto* aw = app.add_subcommand("aw", "Evaluate AW on an element of the (reduced) bar resolution");
  auto* ez = app.add_subcommand("ez", "Evaluate EZ on an element of the (reduced) twisted product");
  for (auto* sub : {aw, ez}) {
    sub->add_option("--instance", instance, "Instance name or path")->required();
    sub->add_option("--element", element, "Element file, or an element named in the instance")->required();
  }
  auto* convert = app.add_subcommand("convert", "Run the smash-Koszul conversion and print its certificate");
  convert->add_option("--instance", instance, "Group-action instance name or path")->required();
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--instance", instances, "Instance names or paths")->required();
  verify->add_option("--samples", samples, "Sampled coefficient pairs per word")->check(CLI::PositiveNumber);
  auto* shuffle = app.add_subcommand("shuffle", "List the (l, m)-shuffles with signs");
  shuffle->add_option("l", l)->required()->check(CLI::NonNegativeNumber);
  shuffle->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
  for (auto* sub : {build, aw, ez, convert, verify, shuffle}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    if (*build) return cmd_build(g, instance, resolutions);
    if (*aw) return cmd_map(g, true, instance, element);
    if (*ez) return cmd_map(g, false, instance, element);
    if (*convert) return cmd_convert(g, instance);
    if (*verify) return cmd_verify(g, instances, samples);
    return cmd_shuffle(g, l, m);
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
