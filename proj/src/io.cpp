#include "hamrecon/io.hpp"

#include <fstream>
#include <set>

namespace hamrecon::io {
namespace {

Json value_entry(const Word& w, Complex v) { return Json{{"w", w.to_string()}, {"re", v.real()}, {"im", v.imag()}}; }

template <typename Keep>
Json values_json(const SchemeParams& params, std::span<const Complex> values, Keep keep) {
  Json list = Json::array();
  for (std::uint64_t r = 0; r < values.size(); ++r) {
    const Word w = Word::unrank(r, params);
    if (keep(w)) list.push_back(value_entry(w, values[r]));
  }
  return list;
}

Json header(const SchemeParams& params, std::optional<int> eigenindex) {
  Json doc;
  doc["q"] = params.q;
  doc["n"] = params.n;
  doc["eigenindex"] = eigenindex ? Json(*eigenindex) : Json(nullptr);
  return doc;
}

SchemeParams params_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("q") || !doc.contains("n")) {
    throw ParameterError("function JSON needs integer fields \"q\" and \"n\"");
  }
  SchemeParams params{doc.at("q").get<int>(), doc.at("n").get<int>()};
  params.validate();
  return params;
}

struct Entry {
  Word word;
  Complex value;
};

std::vector<Entry> entries_from_json(const Json& doc, const SchemeParams& params) {
  std::vector<Entry> out;
  if (!doc.contains("values")) return out;
  if (!doc.at("values").is_array()) throw ParameterError("\"values\" must be an array");
  std::set<std::uint64_t> seen;
  for (const Json& item : doc.at("values")) {
    const Word w = Word::parse(item.at("w").get<std::string>(), params);
    if (!seen.insert(w.rank(params.q)).second) throw ParameterError("word " + w.to_string() + " listed twice");
    const double re = item.value("re", 0.0);
    const double im = item.value("im", 0.0);
    out.push_back({w, {re, im}});
  }
  return out;
}

}  // namespace

Json to_json(const VertexFunction& f) {
  Json doc = header(f.params(), f.eigenindex());
  doc["values"] = values_json(f.params(), f.values(), [](const Word&) { return true; });
  return doc;
}

Json to_json(const SphereData& sphere, std::optional<int> eigenindex) {
  Json doc = header(sphere.params(), eigenindex);
  doc["d"] = sphere.radius();
  doc["values"] = values_json(sphere.params(), sphere.values(), [&](const Word& w) { return sphere.contains(w); });
  return doc;
}

Json to_json(const BallData& ball, std::optional<int> eigenindex) {
  Json doc = header(ball.params(), eigenindex);
  doc["d"] = ball.radius();
  doc["values"] = values_json(ball.params(), ball.values(), [&](const Word& w) { return ball.contains(w); });
  return doc;
}

Json to_json(const ConditionReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(Json{{"k", f.k}, {"l", f.l}, {"sum", to_string(f.sum)}});
  return Json{{"q", report.q},
              {"n", report.n},
              {"h", report.h},
              {"d", report.d},
              {"pass", report.pass()},
              {"origin_value", to_string(report.origin_value)},
              {"failures", failures}};
}

Json to_json(const LocalDistribution& dist) {
  Json components = Json::array();
  for (const Complex& v : dist.components) components.push_back(Json{{"re", v.real()}, {"im", v.imag()}});
  return Json{{"face", dist.face.positions()}, {"anchor", dist.anchor.to_string()}, {"components", components}};
}

std::optional<int> eigenindex_from_json(const Json& doc) {
  if (!doc.contains("eigenindex") || doc.at("eigenindex").is_null()) return std::nullopt;
  return doc.at("eigenindex").get<int>();
}

VertexFunction function_from_json(const Json& doc) {
  const SchemeParams params = params_from_json(doc);
  VertexFunction f(params, eigenindex_from_json(doc));
  for (const Entry& e : entries_from_json(doc, params)) f.set(e.word, e.value);
  return f;
}

SphereData sphere_from_json(const Json& doc, std::optional<int> radius) {
  const SchemeParams params = params_from_json(doc);
  const auto entries = entries_from_json(doc, params);
  if (!radius && doc.contains("d") && !doc.at("d").is_null()) radius = doc.at("d").get<int>();
  if (!radius) {
    std::set<int> weights;
    for (const Entry& e : entries) weights.insert(weight(e.word));
    if (weights.size() != 1) throw ParameterError("cannot infer the sphere radius; give \"d\" or --d");
    radius = *weights.begin();
  }
  SphereData sphere(params, *radius);
  for (const Entry& e : entries) sphere.set(e.word, e.value);
  return sphere;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParameterError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(1) << '\n';
}

}  // namespace hamrecon::io
