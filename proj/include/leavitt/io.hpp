// JSON documents: graph files, homomorphism descriptors, and reports.

#ifndef LEAVITT_IO_HPP_
#define LEAVITT_IO_HPP_

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "graph.hpp"
#include "morphisms.hpp"
#include "pullback.hpp"
#include "text.hpp"

namespace leavitt {

  using json = nlohmann::ordered_json;

  class MalformedInput : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  ////////////////////////////////////////////////////////////////////////
  // Graphs
  ////////////////////////////////////////////////////////////////////////

  inline Graph graph_from_json(json const& j) {
    try {
      if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw MalformedInput("graph document needs \"vertices\" and \"edges\"");
      }
      std::vector<std::string> vertices;
      for (auto const& v : j.at("vertices")) {
        vertices.push_back(v.get<std::string>());
      }
      std::vector<EdgeRecord> edges;
      for (auto const& e : j.at("edges")) {
        edges.push_back({e.at("id").get<std::string>(),
                         e.at("src").get<std::string>(),
                         e.at("tgt").get<std::string>()});
      }
      return Graph(std::move(vertices), std::move(edges));
    } catch (json::exception const& e) {
      throw MalformedInput(std::string("malformed graph document: ") + e.what());
    } catch (GraphError const& e) {
      throw MalformedInput(std::string("invalid graph: ") + e.what());
    }
  }

  inline json to_json(Graph const& g) {
    json j;
    j["vertices"] = g.vertices();
    j["edges"]    = json::array();
    for (auto const& e : g.edge_records()) {
      j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}});
    }
    return j;
  }

  inline json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw MalformedInput("cannot read " + path.string());
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw MalformedInput(path.string() + ": " + e.what());
    }
  }

  inline Graph load_graph(std::filesystem::path const& path) {
    return graph_from_json(read_json_file(path));
  }

  inline json to_json(TrimmabilityReport const& r) {
    json j;
    j["v0"]      = r.v0;
    j["verdict"] = r.verdict;
    if (r.verdict) {
      j["loop"]           = r.loop;
      j["q_prime"]        = to_json(*r.q_prime);
      j["q_double_prime"] = to_json(*r.q_double_prime);
    } else {
      j["failure"] = to_string(r.failure);
      j["witness"] = r.witness;
      j["message"] = r.message;
    }
    return j;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism descriptors
  ////////////////////////////////////////////////////////////////////////

  // {"kind": "pi1" | "pi2" | "f" | "delta" | "custom",
  //  "graph": <graph document or path>, "v0": id,
  //  "base": "pi1" | "pi2" | "f" | "delta"      (custom only),
  //  "images": {generator: element text, ...}   (custom only)}
  //
  // "graph" is always the trimmable graph Q; pi2 and delta are built on the
  // subgraphs derived from it.
  struct HomDescriptor {
    std::string name;  // file stem or "descriptor"
    std::string kind;
    Graph       graph;
    std::string v0;
    MapOverride override;  // empty images unless kind == "custom"

    std::string base() const {
      return kind == "custom" ? override.target : kind;
    }
  };

  inline HomDescriptor
  descriptor_from_json(json const&                  j,
                       std::filesystem::path const& relative_to = {}) {
    try {
      HomDescriptor d;
      d.kind = j.at("kind").get<std::string>();
      if (d.kind != "pi1" && d.kind != "pi2" && d.kind != "f"
          && d.kind != "delta" && d.kind != "custom") {
        throw MalformedInput("unknown descriptor kind \"" + d.kind + "\"");
      }
      json const& g = j.at("graph");
      d.graph       = g.is_string()
                          ? load_graph(relative_to / g.get<std::string>())
                          : graph_from_json(g);
      d.v0 = j.at("v0").get<std::string>();
      if (d.kind == "custom") {
        d.override.target = j.at("base").get<std::string>();
        for (auto const& [k, v] : j.at("images").items()) {
          d.override.images.emplace(k, v.get<std::string>());
        }
      } else {
        d.override.target = d.kind;
      }
      return d;
    } catch (json::exception const& e) {
      throw MalformedInput(std::string("malformed descriptor: ") + e.what());
    }
  }

  inline HomDescriptor load_descriptor(std::filesystem::path const& path) {
    auto d = descriptor_from_json(read_json_file(path), path.parent_path());
    d.name = path.stem().string();
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(HomReport const& r) {
    json j;
    json rel = json::object();
    for (auto k : all_relations) {
      auto const& c = r.at(k);
      json        e{{"ok", c.ok}};
      if (!c.ok) {
        e["instance"] = c.instance;
        e["witness"]  = c.witness;
      }
      rel[label(k)] = e;
    }
    j["relations"] = rel;
    j["graded"]    = r.graded;
    if (!r.graded) {
      j["ungraded_generator"] = r.ungraded_generator;
    }
    j["vertex_images_nonzero"] = r.vertex_images_nonzero;
    if (!r.vertex_images_nonzero) {
      j["zero_vertex"] = r.zero_vertex;
    }
    return j;
  }

  inline json to_json(std::optional<Witness> const& w) {
    if (!w) {
      return nullptr;
    }
    return json{{"element", w->text}, {"length", w->length}, {"degree", w->degree}};
  }

  inline json to_json(CheckResult const& c) {
    json j{{"ok", c.ok}};
    if (!c.ok) {
      j["witness"] = to_json(c.witness);
      j["kind"]    = to_string(c.kind);
    }
    if (!c.degrees.empty()) {
      j["degrees"] = json::array();
      for (auto const& d : c.degrees) {
        json e{{"degree", d.degree}, {"ok", d.ok}};
        if (!d.ok) {
          e["witness"] = to_json(d.witness);
          e["kind"]    = to_string(d.kind);
        }
        j["degrees"].push_back(e);
      }
    }
    return j;
  }

  inline json to_json(MapProperty const& p) {
    json j{{"ok", p.ok}};
    if (!p.ok) {
      j["witness"] = to_json(p.witness);
    }
    return j;
  }

  inline json to_json(PullbackReport const& r, bool with_timings = true) {
    json j;
    j["v0"]     = r.v0;
    j["window"] = {{"length", r.window.length},
                   {"slack", r.window.slack},
                   {"degree", r.window.degree}};
    j["special_edges"] = to_string(r.policy);
    j["trimmability"]  = to_json(r.trimmability);
    if (r.trimmable()) {
      json maps = json::object();
      for (auto const& m : r.maps) {
        maps[m.name] = to_json(m.report);
      }
      j["maps"]     = maps;
      j["commutes"] = to_json(r.commutes);
      j["con1"]     = to_json(r.con1);
      j["con2"]     = to_json(r.con2);
      j["con3"]     = to_json(r.con3);
      j["lemma_maps"] = {{"pi1_surjective", to_json(r.lemma.pi1_surjective)},
                         {"pi2_surjective", to_json(r.lemma.pi2_surjective)},
                         {"f_injective", to_json(r.lemma.f_injective)},
                         {"delta_injective", to_json(r.lemma.delta_injective)},
                         {"pi1_kernel_nonzero", r.lemma.pi1_kernel_nonzero},
                         {"pi2_kernel_nonzero", r.lemma.pi2_kernel_nonzero},
                         {"graded_uniqueness", r.lemma.graded_uniqueness}};
      if (r.rotated_consistent) {
        j["rotated_consistent"] = *r.rotated_consistent;
      }
    }
    if (with_timings) {
      json t = json::object();
      for (auto const& [name, ms] : r.timings_ms) {
        t[name] = ms;
      }
      j["timings_ms"] = t;
    }
    j["ok"]        = r.ok();
    j["exit_code"] = exit_code(r);
    return j;
  }

}  // namespace leavitt

#endif  // LEAVITT_IO_HPP_
