#include "parsfm/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace parsfm {
namespace {

using nlohmann::json;

std::vector<Edge> edges_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) {
      throw std::invalid_argument("edge entries must be [u, v, w] triples");
    }
    edges.push_back(Edge{e[0].get<int>(), e[1].get<int>(), e[2].get<std::int64_t>()});
  }
  return edges;
}

json edges_to_json(const std::vector<Edge>& edges) {
  json j = json::array();
  for (const Edge& e : edges) j.push_back({e.u, e.v, e.weight});
  return j;
}

}  // namespace

SubmodularInstance instance_from_json(const std::string& text) {
  json j = json::parse(text);
  const InstanceKind kind = kind_from_name(j.at("kind").get<std::string>());
  const int n = j.at("n").get<int>();
  const std::int64_t m = j.value("M", std::int64_t{0});
  const json& p = j.at("payload");

  InstancePayload payload;
  switch (kind) {
    case InstanceKind::kGraphCut:
      payload = GraphCutPayload{edges_from_json(p.at("edges"))};
      break;
    case InstanceKind::kCutMinusModular:
      payload = CutMinusModularPayload{
          edges_from_json(p.at("edges")),
          p.at("modular").get<std::vector<std::int64_t>>()};
      break;
    case InstanceKind::kConcaveOfCardinality:
      payload = ConcaveOfCardinalityPayload{p.at("g").get<std::vector<std::int64_t>>()};
      break;
    case InstanceKind::kCoverage:
      payload = CoveragePayload{p.at("sets").get<std::vector<std::vector<int>>>(),
                                p.at("cost").get<std::int64_t>()};
      break;
    case InstanceKind::kExplicitTable:
      payload = ExplicitTablePayload{p.at("table").get<std::vector<std::int64_t>>()};
      break;
  }
  return make_instance(kind, n, std::move(payload), m);
}

SubmodularInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(buffer.str());
}

std::string instance_to_json(const SubmodularInstance& instance) {
  json payload;
  struct Visitor {
    json& out;
    void operator()(const GraphCutPayload& p) const { out["edges"] = edges_to_json(p.edges); }
    void operator()(const CutMinusModularPayload& p) const {
      out["edges"] = edges_to_json(p.edges);
      out["modular"] = p.modular;
    }
    void operator()(const ConcaveOfCardinalityPayload& p) const { out["g"] = p.g; }
    void operator()(const CoveragePayload& p) const {
      out["sets"] = p.sets;
      out["cost"] = p.cost;
    }
    void operator()(const ExplicitTablePayload& p) const { out["table"] = p.table; }
  };
  std::visit(Visitor{payload}, instance.payload());

  json j;
  j["kind"] = kind_name(instance.kind());
  j["n"] = instance.n();
  j["M"] = instance.range_bound();
  j["payload"] = payload;
  return j.dump(2);
}

void save_instance(const SubmodularInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file: " + path);
  out << instance_to_json(instance) << "\n";
}

}  // namespace parsfm
