#include "lexit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "lexit/error.hpp"

namespace lexit {

namespace {

Json vertex_to_json(const Vertex& v) { return Json(v.coords()); }

Vertex vertex_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) raise(Errc::bad_config, "vertex must be a nonempty array");
  return Vertex(j.get<std::vector<Coord>>());
}

}  // namespace

std::string ot_key(const Tuple& t) {
  std::string s;
  for (int v : t) s += std::to_string(v);
  return s;
}

Json graph_to_json(const LatticeDigraph& G) {
  Json j;
  j["k"] = G.k();
  Json verts = Json::array();
  for (const Vertex& v : G.vertices()) verts.push_back(vertex_to_json(v));
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (const Edge& e : G.edges())
    edges.push_back(Json::array({vertex_to_json(e.first), vertex_to_json(e.second)}));
  j["edges"] = std::move(edges);
  return j;
}

LatticeDigraph graph_from_json(const Json& j) {
  if (!j.contains("k") || !j.contains("vertices") || !j.contains("edges"))
    raise(Errc::bad_config, "graph JSON needs k, vertices, edges");
  int k = j.at("k").get<int>();
  std::vector<Vertex> verts;
  for (const Json& v : j.at("vertices")) verts.push_back(vertex_from_json(v));
  std::vector<Edge> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) raise(Errc::bad_config, "edge must be a pair");
    edges.emplace_back(vertex_from_json(e[0]), vertex_from_json(e[1]));
  }
  return make_graph(k, std::move(verts), std::move(edges));
}

Json labels_to_json(const LabelMap& f) {
  Json j;
  Json arr = Json::array();
  for (const auto& [v, e] : f) {
    Json entry;
    entry["v"] = vertex_to_json(v);
    entry["value"] = e.value;
    entry["terminal"] = e.terminal;
    if (f.has_phi_flags()) entry["phi_empty"] = e.phi_empty;
    arr.push_back(std::move(entry));
  }
  j["labels"] = std::move(arr);
  return j;
}

LabelMap labels_from_json(const Json& j) {
  if (!j.contains("labels")) raise(Errc::bad_config, "label JSON needs labels");
  LabelMap f;
  bool any_phi = false;
  for (const Json& e : j.at("labels")) {
    LabelEntry le;
    le.value = e.at("value").get<Value>();
    le.terminal = e.value("terminal", false);
    if (e.contains("phi_empty")) {
      any_phi = true;
      le.phi_empty = e.at("phi_empty").get<bool>();
    }
    f.set(vertex_from_json(e.at("v")), le);
  }
  f.set_has_phi_flags(any_phi);
  return f;
}

Json biarray_to_json(const CappedBiArray& B) {
  Json j;
  j["k"] = B.X.k;
  j["p"] = B.X.p;
  j["E"] = B.E;
  Json X = Json::array();
  for (const auto& row : B.X.rows) {
    Json r = Json::array();
    for (const Vertex& v : row) r.push_back(vertex_to_json(v));
    X.push_back(std::move(r));
  }
  j["X"] = std::move(X);
  j["Y"] = B.Y.rows;
  return j;
}

CappedBiArray biarray_from_json(const Json& j) {
  std::vector<Value> E = j.at("E").get<std::vector<Value>>();
  int k = j.at("k").get<int>();
  LabelMap labels;
  const Json& X = j.at("X");
  const Json& Y = j.at("Y");
  if (X.size() != Y.size()) raise(Errc::bad_config, "X and Y must have the same shape");
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (X[i].size() != Y[i].size()) raise(Errc::bad_config, "X and Y must have the same shape");
    for (std::size_t c = 0; c < X[i].size(); ++c)
      labels.set(vertex_from_json(X[i][c]), {Y[i][c].get<Value>(), false, false});
  }
  return biarray_from_labels(labels, std::move(E), k);
}

Json report_to_json(const RegularityReport& r) {
  Json j;
  j["k"] = r.k;
  j["E"] = r.E;
  j["regular"] = r.regular;
  Json classes = Json::object();
  for (const ClassVerdict& cv : r.classes) {
    Json c;
    c["kind"] = class_kind_name(cv.kind);
    c["size"] = cv.size;
    if (cv.value) c["value"] = *cv.value;
    if (cv.witness)
      c["witness"] = Json::array(
          {vertex_to_json(cv.witness->first), vertex_to_json(cv.witness->second)});
    classes[ot_key(cv.ot)] = std::move(c);
  }
  j["classes"] = std::move(classes);
  j["regressive_values"] = r.regressive_values;
  Json lower = Json::array();
  for (const Vertex& v : r.lower) lower.push_back(vertex_to_json(v));
  j["E_L"] = std::move(lower);
  Json upper = Json::array();
  for (const Vertex& v : r.upper) upper.push_back(vertex_to_json(v));
  j["E_U"] = std::move(upper);
  if (r.has_phi) {
    Json pn = Json::array();
    for (const Vertex& v : r.phi_nonempty) pn.push_back(vertex_to_json(v));
    j["E_phi_nonempty"] = std::move(pn);
    Json pe = Json::array();
    for (const Vertex& v : r.phi_empty) pe.push_back(vertex_to_json(v));
    j["E_phi_empty"] = std::move(pe);
  }
  return j;
}

Json instance_to_json(const SubsetSumInstance& inst) {
  // items are emitted sorted; source_index maps each emitted position back to
  // the construction order so designated witnesses survive the sort
  std::vector<std::size_t> order(inst.items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.items[a] < inst.items[b];
  });
  std::vector<std::size_t> pos_of(inst.items.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos_of[order[i]] = i;

  Json j;
  std::vector<Value> items;
  items.reserve(inst.items.size());
  for (std::size_t i : order) items.push_back(inst.items[i]);
  j["items"] = std::move(items);
  j["source_index"] = order;
  j["target"] = inst.target;
  if (inst.designated) {
    std::vector<std::size_t> d;
    d.reserve(inst.designated->size());
    for (std::size_t i : *inst.designated) d.push_back(pos_of[i]);
    std::sort(d.begin(), d.end());
    j["designated"] = std::move(d);
  }
  Json meta;
  meta["k"] = inst.meta.k;
  meta["p"] = inst.meta.p;
  meta["E"] = inst.meta.E;
  meta["EL_size"] = inst.meta.EL_size;
  meta["S"] = inst.meta.S;
  j["meta"] = std::move(meta);
  return j;
}

SubsetSumInstance instance_from_json(const Json& j) {
  SubsetSumInstance inst;
  std::vector<Value> items = j.at("items").get<std::vector<Value>>();
  std::vector<std::size_t> source =
      j.value("source_index", std::vector<std::size_t>{});
  if (source.empty()) {
    source.resize(items.size());
    std::iota(source.begin(), source.end(), std::size_t{0});
  }
  if (source.size() != items.size()) raise(Errc::bad_config, "source_index shape mismatch");
  inst.items.resize(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) inst.items[source[i]] = items[i];
  inst.target = j.at("target").get<Value>();
  if (j.contains("designated")) {
    std::vector<std::size_t> d;
    for (std::size_t pos : j.at("designated").get<std::vector<std::size_t>>()) {
      if (pos >= source.size()) raise(Errc::bad_config, "designated index out of range");
      d.push_back(source[pos]);
    }
    std::sort(d.begin(), d.end());
    inst.designated = std::move(d);
  }
  if (j.contains("meta")) {
    const Json& m = j.at("meta");
    inst.meta.k = m.value("k", 0);
    inst.meta.p = m.value("p", 0);
    inst.meta.E = m.value("E", std::vector<Value>{});
    inst.meta.EL_size = m.value("EL_size", std::size_t{0});
    inst.meta.S = m.value("S", Value{0});
  }
  return inst;
}

SelectionFunction selection_from_json(const Json& j) {
  std::string kind = j.value("kind", "total-min");
  bool diag = j.value("diagonal_restricted", false);
  if (kind == "total-min") {
    SelectionFunction f = total_min_selection();
    return diag ? f.restricted_to_offdiagonal() : f;
  }
  if (kind == "seeded") {
    int r = j.value("r", 1);
    double q = j.value("q", 0.5);
    std::uint64_t seed = j.value("seed", std::uint64_t{0});
    return seeded_selection(r, q, seed, diag);
  }
  raise(Errc::bad_config, "unknown selection kind '" + kind + "'");
}

std::string dumps(const Json& j) { return j.dump() + "\n"; }

void dump_file(const Json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::io_error, "cannot open " + path + " for writing");
  out << dumps(j);
  if (!out) raise(Errc::io_error, "write failed for " + path);
}

Json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_error, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    raise(Errc::io_error, "parse error in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace lexit
