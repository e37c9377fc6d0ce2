#include "awez/instance.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace awez {

namespace {

const std::set<std::string> kResolutions{"bar",         "reduced-bar",   "product", "reduced-product",
                                         "intermediate", "koszul",       "koszul-product"};

struct Validator {
  const std::string& source;

  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    throw InstanceError(source + "#" + pointer, what);
  }
  const Json& member(const Json& obj, const std::string& pointer, const std::string& key) const {
    if (!obj.is_object()) fail(pointer, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(pointer, "missing field '" + key + "'");
    return *it;
  }
  std::string string_at(const Json& v, const std::string& pointer) const {
    if (!v.is_string()) fail(pointer, "expected a string");
    return v.get<std::string>();
  }
  int int_at(const Json& v, const std::string& pointer, int lo) const {
    if (!v.is_number_integer()) fail(pointer, "expected an integer");
    long long x = v.get<long long>();
    if (x < lo || x > 64) fail(pointer, "out of range");
    return static_cast<int>(x);
  }
  void identifier(const std::string& name, const std::string& pointer) const {
    bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]));
    for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) fail(pointer, "'" + name + "' is not a generator name");
  }
  std::vector<std::string> names(const Json& v, const std::string& pointer) const {
    if (!v.is_array() || v.empty()) fail(pointer, "expected a nonempty list of generator names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::string p = pointer + "/" + std::to_string(i);
      std::string n = string_at(v[i], p);
      identifier(n, p);
      for (const auto& m : out)
        if (m == n) fail(p, "generator '" + n + "' declared twice");
      out.push_back(n);
    }
    return out;
  }
  // Generator names of a factor; group generators are object keys.
  std::vector<std::string> factor(const Json& doc, const std::string& key, bool allow_group) const {
    std::string p = "/" + key;
    const Json& f = member(doc, "", key);
    std::string family = string_at(member(f, p, "family"), p + "/family");
    const Json& gens = member(f, p, "generators");
    if (family == "polynomial") return names(gens, p + "/generators");
    if (family == "group" && allow_group) {
      if (!gens.is_object() || gens.empty()) fail(p + "/generators", "expected an object of permutations");
      std::vector<std::string> out;
      for (const auto& [name, perm] : gens.items()) {
        std::string q = p + "/generators/" + name;
        identifier(name, q);
        if (!perm.is_array() || perm.empty()) fail(q, "expected a permutation as an image list");
        for (std::size_t i = 0; i < perm.size(); ++i) int_at(perm[i], q + "/" + std::to_string(i), 0);
        out.push_back(name);
      }
      return out;
    }
    fail(p + "/family", "unknown family '" + family + "'");
  }
  void rules(const Json& v, const std::string& pointer, const std::vector<std::string>& r,
             const std::vector<std::string>& s) const {
    if (!v.is_array()) fail(pointer, "expected a list of rules");
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::string p = pointer + "/" + std::to_string(i);
      if (!v[i].is_array() || v[i].size() != 3) fail(p, "a rule is [S generator, R generator, value]");
      std::string sg = string_at(v[i][0], p + "/0"), rg = string_at(v[i][1], p + "/1");
      string_at(v[i][2], p + "/2");
      if (std::find(s.begin(), s.end(), sg) == s.end()) fail(p + "/0", "undeclared generator '" + sg + "'");
      if (std::find(r.begin(), r.end(), rg) == r.end()) fail(p + "/1", "undeclared generator '" + rg + "'");
    }
  }
};

}  // namespace

InstanceDescription parse_instance_text(const std::string& text, const std::string& source) {
  InstanceDescription d;
  d.source = source;
  try {
    d.doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    auto colon = what.find("]: ");
    throw InstanceError(source + ":byte " + std::to_string(e.byte), colon == std::string::npos ? what : what.substr(colon + 3));
  }
  Validator v{source};
  const Json& doc = d.doc;
  if (!doc.is_object()) v.fail("", "expected an object");
  d.name = v.string_at(v.member(doc, "", "name"), "/name");
  try {
    d.field = Field::parse(v.string_at(v.member(doc, "", "field"), "/field"));
  } catch (const std::invalid_argument& e) {
    v.fail("/field", e.what());
  }
  std::vector<std::string> r = v.factor(doc, "R", false);
  std::vector<std::string> s = v.factor(doc, "S", true);
  bool group = doc["S"]["family"] == "group";
  const Json& budget = v.member(doc, "", "budget");
  d.hdeg = v.int_at(v.member(budget, "/budget", "hdeg"), "/budget/hdeg", 0);
  d.gdeg = v.int_at(v.member(budget, "/budget", "gdeg"), "/budget/gdeg", 0);

  const Json& twist = v.member(doc, "", "twist");
  std::string kind = v.string_at(v.member(twist, "/twist", "kind"), "/twist/kind");
  if (kind == "generator-rules") {
    if (group) v.fail("/twist/kind", "generator rules need a polynomial S");
    v.rules(v.member(twist, "/twist", "rules"), "/twist/rules", r, s);
    if (twist.contains("override")) v.rules(twist["override"], "/twist/override", r, s);
  } else if (kind == "group-action") {
    if (!group) v.fail("/twist/kind", "a group action needs S of family group");
    const Json& images = v.member(twist, "/twist", "images");
    if (!images.is_object()) v.fail("/twist/images", "expected an object");
    for (const auto& [g, list] : images.items()) {
      std::string p = "/twist/images/" + g;
      if (std::find(s.begin(), s.end(), g) == s.end()) v.fail(p, "undeclared generator '" + g + "'");
      if (!list.is_array() || list.size() != r.size())
        v.fail(p, "expected one image per generator of R (" + std::to_string(r.size()) + ")");
      for (std::size_t i = 0; i < list.size(); ++i) v.string_at(list[i], p + "/" + std::to_string(i));
    }
    for (const auto& g : s)
      if (!images.contains(g)) v.fail("/twist/images", "no images for generator '" + g + "'");
  } else {
    v.fail("/twist/kind", "unknown twist kind '" + kind + "'");
  }

  if (doc.contains("resolutions")) {
    const Json& res = doc["resolutions"];
    if (!res.is_array()) v.fail("/resolutions", "expected a list");
    for (std::size_t i = 0; i < res.size(); ++i) {
      std::string name = v.string_at(res[i], "/resolutions/" + std::to_string(i));
      if (!kResolutions.count(name)) v.fail("/resolutions/" + std::to_string(i), "unknown resolution '" + name + "'");
      if (name == "koszul-product" && !group)
        v.fail("/resolutions/" + std::to_string(i), "koszul-product needs a group action");
    }
  }
  if (doc.contains("elements") && !doc["elements"].is_object()) v.fail("/elements", "expected an object");
  if (doc.contains("expect")) {
    const Json& ex = doc["expect"];
    if (!ex.is_array()) v.fail("/expect", "expected a list");
    for (std::size_t i = 0; i < ex.size(); ++i) {
      std::string p = "/expect/" + std::to_string(i);
      v.string_at(v.member(ex[i], p, "name"), p + "/name");
      std::string map = v.string_at(v.member(ex[i], p, "map"), p + "/map");
      if (map != "aw" && map != "ez" && map != "aw-ez" && map != "ez-aw") v.fail(p + "/map", "unknown map '" + map + "'");
      for (const char* key : {"input", "output"}) {
        std::string e = v.string_at(v.member(ex[i], p, key), p + "/" + key);
        if (!doc.contains("elements") || !doc["elements"].contains(e))
          v.fail(p + "/" + key, "undeclared element '" + e + "'");
      }
    }
  }
  return d;
}

InstanceDescription parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path);
}

std::string resolve_instance(const std::string& name_or_path, const std::string& dir) {
  if (std::filesystem::is_regular_file(name_or_path)) return name_or_path;
  std::filesystem::path p = std::filesystem::path(dir) / (name_or_path + ".json");
  if (std::filesystem::is_regular_file(p)) return p.string();
  throw InstanceError(name_or_path, "no such instance file or bundled instance");
}

Instance::Instance(InstanceDescription d) : desc_(std::move(d)), field_(desc_.field) {
  const Json& doc = desc_.doc;
  const std::string& src = desc_.source;
  int budget = desc_.gdeg + 4;
  auto gens = [](const Json& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get<std::string>());
    return out;
  };
  auto ring_name = [](const std::vector<std::string>& vars) {
    std::string n = "k[";
    for (std::size_t i = 0; i < vars.size(); ++i) n += (i ? "," : "") + vars[i];
    return n + "]";
  };
  std::vector<std::string> rv = gens(doc["R"]["generators"]);
  r_ = std::make_unique<PolynomialAlgebra>(field_, rv, budget, ring_name(rv));
  koszul_ready_ = true;

  const Json& twist = doc["twist"];
  if (doc["S"]["family"] == "group") {
    std::vector<std::pair<std::string, std::vector<int>>> perms;
    for (const auto& [name, perm] : doc["S"]["generators"].items()) perms.emplace_back(name, perm.get<std::vector<int>>());
    try {
      group_ = std::make_unique<FiniteGroup>(perms);
    } catch (const std::invalid_argument& e) {
      throw InstanceError(src + "#/S/generators", e.what());
    }
    kg_ = group_->algebra(field_, "kG");
    hopf_ = std::make_unique<GroupHopfAlgebra>(*group_, *kg_);
    s_ = kg_.get();
    // Images are listed per group generator; the algebra keeps distinct
    // non-identity generators only.
    std::vector<std::vector<Element>> images;
    for (int t : kg_->generators()) {
      int i = 0;
      while (group_->generator(i) != t) ++i;
      const std::string& name = group_->generator_name(i);
      std::vector<Element> im;
      const Json& list = twist["images"][name];
      for (std::size_t j = 0; j < list.size(); ++j) {
        try {
          im.push_back(r_->parse(list[j].get<std::string>()));
        } catch (const std::exception& e) {
          throw InstanceError(src + "#/twist/images/" + name + "/" + std::to_string(j), e.what());
        }
      }
      images.push_back(std::move(im));
    }
    action_ = std::make_unique<GroupAction>(*hopf_, *r_, std::move(images));
    tau_ = std::make_unique<HopfSmashTwist>(*action_);
  } else {
    std::vector<std::string> sv = gens(doc["S"]["generators"]);
    s_poly_ = std::make_unique<PolynomialAlgebra>(field_, sv, budget, ring_name(sv));
    s_ = s_poly_.get();
    auto read_rules = [&](const Json& list, const std::string& pointer) {
      std::map<std::pair<int, int>, Tensor> out;
      for (std::size_t i = 0; i < list.size(); ++i) {
        std::array<std::string, 3> rule{list[i][0].get<std::string>(), list[i][1].get<std::string>(),
                                        list[i][2].get<std::string>()};
        try {
          for (auto& [k, val] : parse_generator_rules(*r_, *s_, {rule})) out[k] = val;
        } catch (const std::exception& e) {
          throw InstanceError(src + "#" + pointer + "/" + std::to_string(i) + "/2", e.what());
        }
      }
      return out;
    };
    auto base = std::make_unique<GeneratorTwist>(*r_, *s_, read_rules(twist["rules"], "/twist/rules"));
    if (twist.contains("override")) {
      base_ = std::move(base);
      tau_ = std::make_unique<OverrideTwist>(*base_, read_rules(twist["override"], "/twist/override"));
    } else {
      tau_ = std::move(base);
    }
  }
  a_ = std::make_unique<TwistedProductAlgebra>(*tau_, desc_.name);
}

std::vector<std::string> Instance::resolutions() const {
  std::vector<std::string> out;
  if (desc_.doc.contains("resolutions"))
    for (const auto& r : desc_.doc["resolutions"]) out.push_back(r.get<std::string>());
  else
    out = {"bar", "reduced-bar", "product", "reduced-product", "intermediate"};
  return out;
}

}  // namespace awez
