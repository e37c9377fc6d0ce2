#include "awez/element_io.hpp"

namespace awez {

namespace {

Json slot(const std::string& algebra, const std::string& word, const std::string& coeff) {
  return Json{{"algebra", algebra}, {"word", word}, {"coeff", coeff}};
}

}  // namespace

WordCodec WordCodec::bar(std::string id, const BarComplex& b) {
  return WordCodec{std::move(id), Layout::Bar, &b, &b.algebra(), nullptr, nullptr};
}

WordCodec WordCodec::product(std::string id, const TwistedProductComplex& x) {
  return WordCodec{std::move(id), Layout::Product, &x, &x.left().algebra(), &x.right().algebra(), nullptr};
}

WordCodec WordCodec::intermediate(std::string id, const IntermediateComplex& y, const TwistedProductAlgebra& a) {
  return WordCodec{std::move(id), Layout::Intermediate, &y, &a.R(), &a.S(), nullptr};
}

WordCodec WordCodec::koszul_product(std::string id, const TwistedProductComplex& x, const KoszulComplex& k) {
  return WordCodec{std::move(id), Layout::KoszulProduct, &x, &k.algebra(), &x.right().algebra(), &k};
}

Json element_to_json(const WordCodec& codec, int n, const Tensor& t) {
  Json terms = Json::array();
  for (const auto& [w, c] : t) {
    Json slots = Json::array();
    // Slots as (algebra tag, rendered word).
    std::vector<std::pair<std::string, std::string>> parts;
    switch (codec.layout) {
      case WordCodec::Layout::Bar:
        for (int a : w) parts.emplace_back("A", codec.r->format(a));
        break;
      case WordCodec::Layout::Intermediate: {
        std::size_t len = static_cast<std::size_t>(n + 2);
        for (std::size_t i = 0; i < len; ++i) parts.emplace_back("R", codec.r->format(w[i]));
        for (std::size_t i = len; i < 2 * len; ++i) parts.emplace_back("S", codec.s->format(w[i]));
        break;
      }
      case WordCodec::Layout::Product:
      case WordCodec::Layout::KoszulProduct: {
        const auto& x = static_cast<const TwistedProductComplex&>(*codec.complex);
        int i;
        Word cw, dw;
        x.split(n, w, i, cw, dw);
        if (codec.layout == WordCodec::Layout::Product) {
          for (int r : cw) parts.emplace_back("R", codec.r->format(r));
        } else {
          parts.emplace_back("R", codec.r->format(cw[0]));
          parts.emplace_back("K~", std::to_string(cw[1]));
          parts.emplace_back("R", codec.r->format(cw[2]));
        }
        for (int s : dw) parts.emplace_back("S", codec.s->format(s));
        break;
      }
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
      slots.push_back(slot(parts[i].first, parts[i].second, i == 0 ? c.str() : "1"));
    terms.push_back(std::move(slots));
  }
  return Json{{"complex", codec.id}, {"degree", n}, {"terms", std::move(terms)}};
}

Tensor element_from_json(const WordCodec& codec, const Json& j, int& n, const std::string& where) {
  auto fail = [&](const std::string& pointer, const std::string& what) -> void {
    throw InstanceError(where + "#" + pointer, what);
  };
  if (!j.is_object()) fail("", "expected an element object");
  if (!j.contains("complex") || !j["complex"].is_string()) fail("/complex", "missing complex name");
  if (j["complex"] != codec.id)
    fail("/complex", "expected an element of '" + codec.id + "', got '" + j["complex"].get<std::string>() + "'");
  if (!j.contains("degree") || !j["degree"].is_number_integer() || j["degree"].get<int>() < 0)
    fail("/degree", "missing homological degree");
  n = j["degree"].get<int>();
  if (!j.contains("terms") || !j["terms"].is_array()) fail("/terms", "expected a list of terms");
  Field f = codec.complex->field();
  Tensor out(f);
  const Json& terms = j["terms"];
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::string tp = "/terms/" + std::to_string(t);
    const Json& slots = terms[t];
    if (!slots.is_array()) fail(tp, "a term is a list of slots");
    Scalar coeff = Scalar::one(f);
    std::vector<std::pair<std::string, std::string>> parts;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      std::string sp = tp + "/" + std::to_string(k);
      const Json& s = slots[k];
      if (!s.is_object() || !s.contains("algebra") || !s.contains("word") || !s["algebra"].is_string() ||
          !s["word"].is_string())
        fail(sp, "a slot is {\"algebra\", \"word\", \"coeff\"}");
      if (s.contains("coeff")) {
        if (!s["coeff"].is_string()) fail(sp + "/coeff", "coefficients are strings such as \"-3/2\"");
        try {
          coeff = coeff * Scalar::parse(f, s["coeff"].get<std::string>());
        } catch (const std::exception& e) {
          fail(sp + "/coeff", e.what());
        }
      }
      parts.emplace_back(s["algebra"].get<std::string>(), s["word"].get<std::string>());
    }
    auto letter = [&](std::size_t k, const std::string& tag, const Algebra& a) {
      std::string sp = tp + "/" + std::to_string(k);
      if (parts[k].first != tag) fail(sp + "/algebra", "expected a slot of " + tag + ", got " + parts[k].first);
      try {
        return a.parse_basis(parts[k].second);
      } catch (const std::exception& e) {
        fail(sp + "/word", e.what());
      }
      return 0;
    };
    Word w;
    std::size_t count = parts.size();
    switch (codec.layout) {
      case WordCodec::Layout::Bar:
        if (count != static_cast<std::size_t>(n + 2)) fail(tp, "a degree-n bar word has n + 2 slots");
        for (std::size_t k = 0; k < count; ++k) w.push_back(letter(k, "A", *codec.r));
        break;
      case WordCodec::Layout::Intermediate:
        if (count != static_cast<std::size_t>(2 * n + 4)) fail(tp, "a degree-n Y word has 2n + 4 slots");
        for (std::size_t k = 0; k < count; ++k)
          w.push_back(k < count / 2 ? letter(k, "R", *codec.r) : letter(k, "S", *codec.s));
        break;
      case WordCodec::Layout::Product:
      case WordCodec::Layout::KoszulProduct: {
        const auto& x = static_cast<const TwistedProductComplex&>(*codec.complex);
        std::size_t left = 0;
        while (left < count && parts[left].first != "S") ++left;
        Word cw, dw;
        int i;
        if (codec.layout == WordCodec::Layout::Product) {
          if (left < 2) fail(tp, "expected at least two R slots");
          i = static_cast<int>(left) - 2;
          for (std::size_t k = 0; k < left; ++k) cw.push_back(letter(k, "R", *codec.r));
        } else {
          if (left != 3) fail(tp, "a Koszul factor is R, K~, R");
          i = n - (static_cast<int>(count - left) - 2);
          if (i < 0 || i > codec.k->max_degree()) fail(tp, "slot count does not match the degree");
          int idx = -1;
          try {
            idx = std::stoi(parts[1].second);
          } catch (const std::exception&) {
          }
          if (parts[1].first != "K~" || idx < 0 || idx >= codec.k->ktilde_dim(i))
            fail(tp + "/1", "expected a K~ index below " + std::to_string(codec.k->ktilde_dim(i)));
          cw = {letter(0, "R", *codec.r), idx, letter(2, "R", *codec.r)};
        }
        if (count - left < 2) fail(tp, "expected at least two S slots");
        for (std::size_t k = left; k < count; ++k) dw.push_back(letter(k, "S", *codec.s));
        if (i + static_cast<int>(dw.size()) - 2 != n) fail(tp, "slot count does not match the degree");
        w = x.join(i, cw, dw);
        break;
      }
    }
    // Reduced bar words with a unit inner letter are zero and are refused.
    if (codec.layout == WordCodec::Layout::Bar && static_cast<const BarComplex&>(*codec.complex).reduced())
      for (std::size_t k = 1; k + 1 < w.size(); ++k)
        if (w[k] == Algebra::unit()) fail(tp + "/" + std::to_string(k), "inner letters of a reduced bar word are not 1");
    out.add(w, coeff);
  }
  return out;
}

}  // namespace awez
