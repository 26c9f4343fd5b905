#pragma once

// Command dispatch behind the sigcirc binary.  Kept header-side so the
// test suite can drive subcommands through streams without spawning
// processes.  Output comes in two deterministic flavors: human-readable
// text (default) and a machine format selected with --format json.
//
// Exit codes: 0 success/pass, 1 property failure or infeasible cover,
// 2 input error, 3 resource limit.

#include <fstream>
#include <iostream>

#include <json.hpp>

#include "sigcirc/cover.hpp"
#include "sigcirc/euler.hpp"
#include "sigcirc/io.hpp"
#include "sigcirc/survey.hpp"

namespace sigcirc {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

struct CommandRequest {
  std::string subcommand;
  std::string input_path;    // path or "-" for standard input
  std::string inline_graph;  // used instead of input_path when non-empty
  std::map<std::string, std::string> options;
};

namespace cli_detail {

using Json = nlohmann::ordered_json;

struct OptionSpec {
  std::set<std::string> allowed;
  bool needs_graph = false;
};

inline const std::map<std::string, OptionSpec>& command_schema() {
  static const std::map<std::string, OptionSpec> schema = {
      {"analyze", {{"format"}, true}},
      {"circuits", {{"format"}, true}},
      {"signed-circuits", {{"format"}, true}},
      {"cover", {{"format", "k", "budget"}, true}},
      {"min-cover", {{"format", "max", "budget"}, true}},
      {"decompose", {{"format", "optimal", "all"}, true}},
      {"necklace", {{"format", "detect", "build", "k", "lengths", "neg-bead"}, false}},
      {"sweep", {{"format", "property", "max-v", "max-e", "jobs", "budget"}, false}},
      {"lemma", {{"format", "name", "max-v", "max-e", "jobs", "budget"}, false}},
  };
  return schema;
}

inline int to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    int out = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return out;
  } catch (const std::exception&) {
    throw std::invalid_argument("option --" + key + " expects an integer, got '" + value + "'");
  }
}

inline std::uint64_t to_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    std::uint64_t out = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("");
    return out;
  } catch (const std::exception&) {
    throw std::invalid_argument("option --" + key + " expects an integer, got '" + value + "'");
  }
}

inline std::string edge_list_line(const SignedGraph& g, const EdgeSet& ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(ids[i]);
  }
  return out + "]";
}

inline Json certificate_json(const SignedGraph& g, const CoverCertificate& cert) {
  Json members = Json::array();
  for (const CoverMember& m : cert.members) {
    members.push_back({{"kind", m.circuit.is_barbell() ? "barbell" : "circuit"},
                       {"edges", m.circuit.edge_set()},
                       {"multiplicity", m.multiplicity}});
  }
  return Json{{"k", cert.k}, {"members", members}};
}

inline void certificate_text(std::ostream& out, const SignedGraph& g, const CoverCertificate& cert) {
  out << "k: " << cert.k << "\n";
  out << "members: " << cert.members.size() << "\n";
  for (const CoverMember& m : cert.members) {
    out << "  " << (m.circuit.is_barbell() ? "barbell" : "circuit") << " "
        << edge_list_line(g, m.circuit.edge_set()) << " x" << m.multiplicity << "\n";
  }
}

inline Json decomposition_json(const SignedGraph& g, const CircuitDecomposition& d) {
  Json circuits = Json::array();
  for (const Circuit& c : d.circuits)
    circuits.push_back({{"edges", c.edge_set()},
                        {"balanced", is_balanced(g, c)}});
  return circuits;
}

inline void intersection_text(std::ostream& out, const SignedGraph& g,
                              const CircuitDecomposition& d, const IntersectionGraph& h) {
  out << "intersection graph:\n";
  for (int i = 0; i < h.order(); ++i)
    out << "  vertex " << i << ": " << (h.balanced[i] ? "balanced" : "unbalanced") << " "
        << edge_list_line(g, d.circuits[i].edge_set()) << "\n";
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j)
      if (h.adjacent(i, j))
        out << "  edge " << i << "-" << j << " shared-vertices " << h.shared[i][j] << "\n";
}

inline Json intersection_json(const IntersectionGraph& h) {
  Json labels = Json::array();
  for (int i = 0; i < h.order(); ++i) labels.push_back(h.balanced[i] ? "balanced" : "unbalanced");
  Json edges = Json::array();
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j)
      if (h.adjacent(i, j)) edges.push_back({{"a", i}, {"b", j}, {"shared", h.shared[i][j]}});
  return Json{{"labels", labels}, {"edges", edges}};
}

inline std::string graph_block(const SignedGraph& g, const std::string& indent) {
  std::string text = write_graph(g), out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    out += indent + text.substr(start, end - start) + "\n";
    start = end + 1;
  }
  return out;
}

inline void sweep_text(std::ostream& out, const SweepReport& r) {
  out << "property: " << r.property << "\n";
  out << "description: " << r.description << "\n";
  out << "max-v: " << r.bounds.max_v << "\n";
  out << "max-e: " << r.bounds.max_e << "\n";
  out << "instances: " << r.instances << "\n";
  out << "applicable: " << r.applicable << "\n";
  out << "passed: " << r.passed << "\n";
  out << "failed: " << r.counterexamples.size() << "\n";
  out << "inconclusive: " << r.inconclusive.size() << "\n";
  if (!r.min_cover_histogram.empty()) {
    out << "min-cover histogram:";
    for (const auto& [k, count] : r.min_cover_histogram) out << " " << k << ":" << count;
    out << "\n";
  }
  int index = 0;
  for (const SweepFinding& f : r.counterexamples) {
    out << "counterexample " << ++index << ": " << f.detail << "\n";
    out << graph_block(f.graph, "  ");
  }
  index = 0;
  for (const SweepFinding& f : r.inconclusive) {
    out << "inconclusive " << ++index << ": " << f.detail << "\n";
    out << graph_block(f.graph, "  ");
  }
  out << "result: " << (r.passed_overall() ? "PASS" : "FAIL") << "\n";
}

inline Json sweep_json(const SweepReport& r) {
  Json counterexamples = Json::array(), inconclusive = Json::array();
  for (const SweepFinding& f : r.counterexamples)
    counterexamples.push_back({{"detail", f.detail}, {"graph", write_graph(f.graph)}});
  for (const SweepFinding& f : r.inconclusive)
    inconclusive.push_back({{"detail", f.detail}, {"graph", write_graph(f.graph)}});
  Json histogram = Json::object();
  for (const auto& [k, count] : r.min_cover_histogram) histogram[std::to_string(k)] = count;
  return Json{{"property", r.property},
              {"description", r.description},
              {"bounds", {{"max_v", r.bounds.max_v}, {"max_e", r.bounds.max_e}}},
              {"instances", r.instances},
              {"applicable", r.applicable},
              {"passed", r.passed},
              {"counterexamples", counterexamples},
              {"inconclusive", inconclusive},
              {"min_cover_histogram", histogram},
              {"result", r.passed_overall() ? "pass" : "fail"}};
}

}  // namespace cli_detail

inline int run_command(const CommandRequest& req, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  using cli_detail::Json;
  try {
    auto schema_it = cli_detail::command_schema().find(req.subcommand);
    if (schema_it == cli_detail::command_schema().end()) {
      err << "error: unknown subcommand '" << req.subcommand << "'\n";
      return kExitInput;
    }
    for (const auto& [key, value] : req.options) {
      if (!schema_it->second.allowed.count(key)) {
        err << "error: subcommand '" << req.subcommand << "' does not take option --" << key << "\n";
        return kExitInput;
      }
    }
    std::string format = req.options.count("format") ? req.options.at("format") : "text";
    if (format == "json-like") format = "json";
    if (format != "text" && format != "json") {
      err << "error: --format must be 'text' or 'json'\n";
      return kExitInput;
    }
    const bool json = format == "json";

    auto load_graph = [&]() -> SignedGraph {
      if (!req.inline_graph.empty()) return read_graph(req.inline_graph);
      if (req.input_path.empty())
        throw std::invalid_argument("subcommand '" + req.subcommand + "' needs an input graph");
      if (req.input_path == "-") return read_graph(in);
      std::ifstream file(req.input_path);
      if (!file) throw std::invalid_argument("cannot open input file '" + req.input_path + "'");
      return read_graph(file);
    };
    auto emit = [&](const Json& j) { out << j.dump(2) << "\n"; };

    if (req.subcommand == "analyze") {
      SignedGraph g = load_graph();
      EdgeSet cl = coloops(g);
      bool balanced = is_balanced(g);
      bool eulerian = is_eulerian(g);
      bool admissible = cl.empty();
      if (json) {
        emit(Json{{"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"negative_edges", g.negative_count()},
                  {"loops", loops(g).size()},
                  {"balanced", balanced},
                  {"eulerian", eulerian},
                  {"flow_admissible", admissible},
                  {"coloops", cl},
                  {"bridges", bridges(g)}});
      } else {
        out << "vertices: " << g.vertex_count() << "\n";
        out << "edges: " << g.edge_count() << " (" << g.negative_count() << " negative, "
            << loops(g).size() << " loops)\n";
        out << "balanced: " << (balanced ? "yes" : "no") << "\n";
        out << "eulerian: " << (eulerian ? "yes" : "no") << "\n";
        out << "flow-admissible: " << (admissible ? "yes" : "no") << "\n";
        out << "coloops: " << cli_detail::edge_list_line(g, cl) << "\n";
      }
      return kExitOk;
    }

    if (req.subcommand == "circuits") {
      SignedGraph g = load_graph();
      auto circuits = enumerate_circuits(g);
      if (json) {
        Json list = Json::array();
        for (const Circuit& c : circuits)
          list.push_back({{"edges", c.edge_set()}, {"balanced", is_balanced(g, c)}});
        emit(Json{{"count", circuits.size()}, {"circuits", list}});
      } else {
        out << "circuits: " << circuits.size() << "\n";
        for (const Circuit& c : circuits)
          out << "  " << cli_detail::edge_list_line(g, c.edge_set()) << " "
              << (is_balanced(g, c) ? "balanced" : "unbalanced") << "\n";
      }
      return kExitOk;
    }

    if (req.subcommand == "signed-circuits") {
      SignedGraph g = load_graph();
      auto scs = enumerate_signed_circuits(g);
      if (json) {
        Json list = Json::array();
        for (const SignedCircuit& sc : scs)
          list.push_back({{"kind", sc.is_barbell() ? "barbell" : "circuit"},
                          {"edges", sc.edge_set()}});
        emit(Json{{"count", scs.size()}, {"signed_circuits", list}});
      } else {
        out << "signed circuits: " << scs.size() << "\n";
        for (const SignedCircuit& sc : scs)
          out << "  " << (sc.is_barbell() ? "barbell" : "circuit") << " "
              << cli_detail::edge_list_line(g, sc.edge_set()) << "\n";
      }
      return kExitOk;
    }

    if (req.subcommand == "cover") {
      SignedGraph g = load_graph();
      if (!req.options.count("k")) throw std::invalid_argument("cover requires --k");
      int k = cli_detail::to_int("k", req.options.at("k"));
      std::uint64_t budget = req.options.count("budget")
                                 ? cli_detail::to_u64("budget", req.options.at("budget"))
                                 : 50'000'000;
      CoverResult r = find_k_cover(g, k, budget);
      if (r.status == SolveStatus::Found) {
        CoverCheck check = verify_cover(g, *r.certificate);
        if (!check.ok) throw std::logic_error("solver produced an invalid certificate: " + check.reason);
        if (json) {
          Json j = cli_detail::certificate_json(g, *r.certificate);
          j["status"] = "found";
          emit(j);
        } else {
          out << "cover: found\n";
          cli_detail::certificate_text(out, g, *r.certificate);
        }
        return kExitOk;
      }
      if (r.status == SolveStatus::Limit) {
        if (json)
          emit(Json{{"status", "resource-limit"}, {"k", k}});
        else
          out << "cover: resource limit reached (inconclusive)\n";
        return kExitLimit;
      }
      if (json)
        emit(Json{{"status", "infeasible"}, {"k", k}});
      else
        out << "cover: none exists for k=" << k << "\n";
      return kExitFail;
    }

    if (req.subcommand == "min-cover") {
      SignedGraph g = load_graph();
      int k_max = req.options.count("max") ? cli_detail::to_int("max", req.options.at("max")) : 6;
      std::uint64_t budget = req.options.count("budget")
                                 ? cli_detail::to_u64("budget", req.options.at("budget"))
                                 : 50'000'000;
      MinCoverResult r = min_uniform_cover(g, k_max, budget);
      if (r.status == SolveStatus::Found) {
        CoverCheck check = verify_cover(g, *r.certificate);
        if (!check.ok) throw std::logic_error("solver produced an invalid certificate: " + check.reason);
        if (json) {
          Json j = cli_detail::certificate_json(g, *r.certificate);
          j["status"] = "found";
          j["min_k"] = *r.k;
          emit(j);
        } else {
          out << "min-cover: " << *r.k << "\n";
          cli_detail::certificate_text(out, g, *r.certificate);
        }
        return kExitOk;
      }
      if (r.status == SolveStatus::Limit) {
        if (json)
          emit(Json{{"status", "resource-limit"}});
        else
          out << "min-cover: resource limit reached (inconclusive)\n";
        return kExitLimit;
      }
      if (json)
        emit(Json{{"status", "infeasible"}, {"k_max", k_max}});
      else
        out << "min-cover: none exists up to k=" << k_max << "\n";
      return kExitFail;
    }

    if (req.subcommand == "decompose") {
      SignedGraph g = load_graph();
      bool want_optimal = req.options.count("optimal");
      bool want_all = req.options.count("all");
      if (want_optimal && want_all)
        throw std::invalid_argument("--optimal and --all are mutually exclusive");
      if (want_all) {
        auto all = all_decompositions(g);
        if (json) {
          Json list = Json::array();
          for (const auto& d : all) list.push_back(cli_detail::decomposition_json(g, d));
          emit(Json{{"count", all.size()}, {"decompositions", list}});
        } else {
          out << "decompositions: " << all.size() << "\n";
          for (std::size_t i = 0; i < all.size(); ++i) {
            out << "decomposition " << i << " (" << all[i].unbalanced_count(g) << " unbalanced, "
                << all[i].size() << " circuits)\n";
            for (const Circuit& c : all[i].circuits)
              out << "  " << cli_detail::edge_list_line(g, c.edge_set()) << "\n";
          }
        }
        return kExitOk;
      }
      CircuitDecomposition d;
      bool certified = true;
      if (want_optimal) {
        auto opt = optimal_decomposition(g);
        d = std::move(opt.decomposition);
        certified = opt.certified;
      } else {
        d = one_decomposition(g);
      }
      IntersectionGraph h = intersection_graph(g, d);
      if (json) {
        Json j{{"circuits", cli_detail::decomposition_json(g, d)},
               {"unbalanced", d.unbalanced_count(g)},
               {"size", d.size()},
               {"intersection_graph", cli_detail::intersection_json(h)}};
        if (want_optimal) j["certified_optimal"] = certified;
        emit(j);
      } else {
        out << "decomposition: " << d.size() << " circuits, " << d.unbalanced_count(g)
            << " unbalanced";
        if (want_optimal) out << (certified ? " (certified optimal)" : " (greedy, not certified)");
        out << "\n";
        for (const Circuit& c : d.circuits)
          out << "  " << cli_detail::edge_list_line(g, c.edge_set()) << " "
              << (is_balanced(g, c) ? "balanced" : "unbalanced") << "\n";
        cli_detail::intersection_text(out, g, d, h);
      }
      return kExitOk;
    }

    if (req.subcommand == "necklace") {
      bool detect = req.options.count("detect"), build = req.options.count("build");
      if (detect == build)
        throw std::invalid_argument("necklace requires exactly one of --detect or --build");
      if (build) {
        if (!req.options.count("k")) throw std::invalid_argument("necklace --build requires --k");
        int k = cli_detail::to_int("k", req.options.at("k"));
        std::vector<int> lengths(static_cast<std::size_t>(std::max(0, 2 * k)), 1);
        if (req.options.count("lengths")) {
          lengths.clear();
          std::istringstream ls(req.options.at("lengths"));
          std::string item;
          while (std::getline(ls, item, ','))
            lengths.push_back(cli_detail::to_int("lengths", item));
        }
        int neg_bead = req.options.count("neg-bead")
                           ? cli_detail::to_int("neg-bead", req.options.at("neg-bead"))
                           : 0;
        SignedGraph g = build_necklace(k, lengths, neg_bead);
        write_graph(out, g);
        return kExitOk;
      }
      SignedGraph g = load_graph();
      auto ns = detect_necklace(g);
      if (!ns) {
        if (json)
          emit(Json{{"necklace", false}});
        else
          out << "necklace: no\n";
        return kExitFail;
      }
      if (json) {
        Json beads = Json::array();
        for (int i = 0; i < ns->length; ++i)
          beads.push_back({{"ends", {ns->ends[i].first, ns->ends[i].second}},
                           {"paths", {ns->bead_paths[i][0], ns->bead_paths[i][1]}}});
        emit(Json{{"necklace", true},
                  {"length", ns->length},
                  {"hubs", ns->hubs},
                  {"path_lengths", ns->path_lengths},
                  {"negative_pair", {ns->negative_pair.first, ns->negative_pair.second}},
                  {"beads", beads}});
      } else {
        out << "necklace: yes\n";
        out << "length: " << ns->length << "\n";
        out << "hubs:";
        for (VertexId h : ns->hubs) out << " " << h;
        out << "\n";
        out << "path-lengths:";
        for (int len : ns->path_lengths) out << " " << len;
        out << "\n";
        out << "negative-pair: " << ns->negative_pair.first << " " << ns->negative_pair.second
            << "\n";
        for (int i = 0; i < ns->length; ++i)
          out << "small circuit " << i << ": "
              << cli_detail::edge_list_line(g, ns->small_circuits[i].edge_set()) << " ends "
              << ns->ends[i].first << "," << ns->ends[i].second << "\n";
      }
      return kExitOk;
    }

    if (req.subcommand == "sweep" || req.subcommand == "lemma") {
      std::string prop_key = req.subcommand == "sweep" ? "property" : "name";
      if (!req.options.count(prop_key))
        throw std::invalid_argument(req.subcommand + " requires --" + prop_key);
      std::string name = req.options.at(prop_key);
      const PropertyDef* prop = find_property(name);
      if (!prop) throw std::invalid_argument("unknown property '" + name + "'");
      SweepBounds bounds;
      if (prop->source == PropertyDef::Source::Shapes) {
        bounds.max_v = 6;  // default universe for unsigned-shape properties
        bounds.max_e = 8;
      }
      if (req.options.count("max-v")) bounds.max_v = cli_detail::to_int("max-v", req.options.at("max-v"));
      if (req.options.count("max-e")) bounds.max_e = cli_detail::to_int("max-e", req.options.at("max-e"));
      if (req.options.count("jobs")) bounds.jobs = cli_detail::to_int("jobs", req.options.at("jobs"));
      if (req.options.count("budget"))
        bounds.node_budget = cli_detail::to_u64("budget", req.options.at("budget"));
      SweepReport report = run_sweep(name, bounds);
      if (json)
        emit(cli_detail::sweep_json(report));
      else
        cli_detail::sweep_text(out, report);
      if (!report.counterexamples.empty()) return kExitFail;
      if (!report.inconclusive.empty()) return kExitLimit;
      return kExitOk;
    }

    err << "error: unhandled subcommand '" << req.subcommand << "'\n";
    return kExitInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceLimitError& e) {
    err << "error: resource limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace sigcirc
