#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hgc/enumerate.hpp"
#include "hgc/errors.hpp"
#include "hgc/io.hpp"
#include "hgc/structure.hpp"
#include "hgc/theorems.hpp"

namespace hgc::cli {

namespace {

Json read_json(std::istream& in, const std::string& origin) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(origin + ": malformed JSON: " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError(path + ": cannot open");
  return read_json(f, path);
}

// Worker pool over indices; results land in their own slot so the merged
// report is independent of scheduling.
template <class R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(count);
  const std::size_t workers = std::min(thread_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

struct SweepPart {
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::map<std::string, std::size_t> skip_reasons;
  std::vector<Json> violations;

  void skip(const std::string& why) {
    ++skipped;
    ++skip_reasons[why];
  }
};

Json merge(const std::string& verifier, const Json& bounds, const std::vector<SweepPart>& parts) {
  SweepPart total;
  for (const SweepPart& p : parts) {
    total.instances += p.instances;
    total.skipped += p.skipped;
    for (const auto& [why, n] : p.skip_reasons) total.skip_reasons[why] += n;
    total.violations.insert(total.violations.end(), p.violations.begin(), p.violations.end());
  }
  Json j;
  j["verifier"] = verifier;
  j["mode"] = "sweep";
  j["bounds"] = bounds;
  j["instances"] = total.instances;
  j["skipped"] = total.skipped;
  j["skip_reasons"] = total.skip_reasons;
  j["violations"] = total.violations;
  j["pass"] = total.violations.empty();
  return j;
}

struct Options {
  std::string input;
  std::string property;
  std::string lists_path;
  std::string f_path;
  std::string out_path;
  std::string bounds_spec;
  std::vector<std::size_t> k;
  std::size_t p = 2;
  std::size_t delta = 4;
  unsigned max_entry = 3;
  std::optional<std::size_t> max_order, max_edges, max_edge_size, max_mult, max_blocks;
  bool sweep = false;
  bool connected = false;
  bool simple = false;
};

bool sweep_requested(const Options& o) {
  return o.sweep || !o.bounds_spec.empty() || o.max_order || o.max_edges || o.max_edge_size || o.max_mult;
}

EnumerationBounds bounds_from(const Options& o, EnumerationBounds b) {
  std::stringstream spec(o.bounds_spec);
  for (std::string item; std::getline(spec, item, ',');) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--bounds: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      value = std::stoul(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("--bounds: bad value in '" + item + "'");
    }
    if (key == "order") {
      b.max_order = value;
    } else if (key == "edges") {
      b.max_edges = value;
    } else if (key == "size" || key == "edge-size") {
      b.max_edge_size = value;
    } else if (key == "mult") {
      b.max_multiplicity = value;
    } else if (key == "mindeg") {
      b.min_degree = value;
    } else {
      throw InputError("--bounds: unknown key '" + key + "'");
    }
  }
  if (o.max_order) b.max_order = *o.max_order;
  if (o.max_edges) b.max_edges = *o.max_edges;
  if (o.max_edge_size) b.max_edge_size = *o.max_edge_size;
  if (o.max_mult) b.max_multiplicity = *o.max_mult;
  if (o.connected) b.connected_only = true;
  if (o.simple) b.simple_only = true;
  return b;
}

Json to_json(const EnumerationBounds& b) {
  return {{"max_order", b.max_order},           {"max_edges", b.max_edges},
          {"max_edge_size", b.max_edge_size},   {"max_multiplicity", b.max_multiplicity},
          {"min_degree", b.min_degree},
          {"connected_only", b.connected_only}, {"simple_only", b.simple_only}};
}

EnumerationBounds graph_bounds() {
  EnumerationBounds b;
  b.max_order = 5;
  b.max_edges = 10;
  b.max_edge_size = 2;
  b.max_multiplicity = 1;
  b.connected_only = true;
  return b;
}

EnumerationBounds hypergraph_bounds() {
  EnumerationBounds b;
  b.max_order = 5;
  b.max_edges = 6;
  b.max_edge_size = 3;
  b.max_multiplicity = 2;
  b.connected_only = true;
  return b;
}

std::vector<Property> properties_from(const Options& o) {
  if (!o.property.empty()) return {builtin(o.property)};
  return {builtin("O"), builtin("D:1")};
}

Property property_from(const Options& o) { return builtin(o.property.empty() ? "O" : o.property); }

Json instance_json(const Hypergraph& h) { return to_json(h); }

Json instance_json(const Hypergraph& h, const Property& p, const ListAssignment& l) {
  return {{"hypergraph", to_json(h)}, {"property", p.name()}, {"lists", to_json(h, l)}};
}

std::vector<std::size_t> positive_sizes(const Hypergraph& h, unsigned r) {
  std::vector<std::size_t> sizes(h.order());
  for (VertexIndex v = 0; v < h.order(); ++v) sizes[v] = std::max<std::size_t>(1, (h.degree(v) + r - 1) / r);
  return sizes;
}

Json sweep_theorem3(const Options& o) {
  const EnumerationBounds b = bounds_from(o, graph_bounds());
  const std::vector<std::size_t> ks = o.k.empty() ? std::vector<std::size_t>{1, 2} : o.k;
  std::vector<SweepPart> parts;
  for (const Property& p : properties_from(o)) {
    for (std::size_t k : ks) {
      const std::vector<CriticalInstance> found = search_critical(p, k, b);
      auto chunk = parallel_map<SweepPart>(found.size(), [&](std::size_t i) {
        SweepPart part;
        const auto& [h, l] = found[i];
        ++part.instances;
        const CriticalityReport c = is_PL_critical(h, p, l);
        if (!c.degree_bound_holds) {
          part.violations.push_back({{"instance", instance_json(h, p, l)}, {"failed", "degree-bound"}});
        }
        if (c.low_vertices == 0) {
          part.skip("no low vertices");
          return part;
        }
        Theorem3Report r = verify_theorem3(h, p, l);
        if (!r.pass) part.violations.push_back({{"instance", instance_json(h, p, l)}, {"report", to_json(h, r)}});
        return part;
      });
      parts.insert(parts.end(), chunk.begin(), chunk.end());
    }
  }
  return merge("theorem3", to_json(b), parts);
}

Json sweep_theorem4(const Options& o) {
  const EnumerationBounds b = bounds_from(o, hypergraph_bounds());
  const std::vector<Hypergraph> hs = enum_hypergraphs(b);
  auto parts = parallel_map<SweepPart>(hs.size(), [&](std::size_t i) {
    SweepPart part;
    const Hypergraph& h = hs[i];
    if (h.empty()) return part;
    const FPartitionSolver solver(h);
    const HardPairRecognizer recognizer(h);
    for_each_vector_function(h, o.p, o.max_entry, true, [&](const VectorFunction& f) {
      ++part.instances;
      const bool partitionable = solver.solve(f).has_value();
      const auto cert = recognizer.recognize(f);
      const bool valid = cert && validate_certificate(h, f, *cert);
      if (partitionable == valid || (cert && !valid)) {
        part.violations.push_back({{"hypergraph", to_json(h)},
                                   {"f", to_json(h, f)},
                                   {"partitionable", partitionable},
                                   {"certificate", cert ? to_json(h, *cert) : Json(nullptr)},
                                   {"certificate_valid", valid}});
      }
    });
    return part;
  });
  Json j = merge("theorem4", to_json(b), parts);
  j["p"] = o.p;
  j["max_entry"] = o.max_entry;
  return j;
}

Json sweep_brooks(const Options& o) {
  const EnumerationBounds b = bounds_from(o, graph_bounds());
  const std::vector<Hypergraph> hs = enum_hypergraphs(b);
  std::vector<SweepPart> parts;
  for (const Property& p : properties_from(o)) {
    auto chunk = parallel_map<SweepPart>(hs.size(), [&](std::size_t i) {
      SweepPart part;
      const Hypergraph& h = hs[i];
      if (h.empty()) return part;
      ++part.instances;
      const BrooksReport r = verify_brooks(h, p, {.max_order = b.max_order, .max_k = b.max_order});
      if (!r.pass) {
        part.violations.push_back({{"hypergraph", instance_json(h)}, {"property", p.name()}, {"report", to_json(r)}});
      }
      return part;
    });
    parts.insert(parts.end(), chunk.begin(), chunk.end());
  }
  return merge("brooks", to_json(b), parts);
}

Json sweep_theorem6(const Options& o) {
  const EnumerationBounds b = bounds_from(o, graph_bounds());
  const std::vector<Hypergraph> hs = enum_hypergraphs(b);
  std::vector<SweepPart> parts;
  for (const Property& p : properties_from(o)) {
    auto chunk = parallel_map<SweepPart>(hs.size(), [&](std::size_t i) {
      SweepPart part;
      const Hypergraph& h = hs[i];
      if (h.empty()) return part;
      for_each_list_support(h.order(), h.all(), positive_sizes(h, p.r()), [&](const std::vector<VertexMask>& s) {
        const ListAssignment l = ListAssignment::from_supports(h.order(), s);
        ++part.instances;
        const Theorem6Report r = verify_theorem6(h, p, l);
        if (!r.pass) part.violations.push_back({{"instance", instance_json(h, p, l)}, {"report", to_json(h, r)}});
        return true;
      });
      return part;
    });
    parts.insert(parts.end(), chunk.begin(), chunk.end());
  }
  return merge("theorem6", to_json(b), parts);
}

Json sweep_gallai_bound(const Options& o) {
  const EnumerationBounds b = bounds_from(o, graph_bounds());
  const std::vector<std::size_t> ks = o.k.empty() ? std::vector<std::size_t>{2, 3} : o.k;
  std::vector<SweepPart> parts;
  for (const Property& p : properties_from(o)) {
    for (std::size_t k : ks) {
      const std::vector<CriticalInstance> found = search_critical(p, k, b);
      auto chunk = parallel_map<SweepPart>(found.size(), [&](std::size_t i) {
        SweepPart part;
        const auto& [h, l] = found[i];
        try {
          const GallaiBoundReport r = verify_gallai_bound(h, p, l);
          ++part.instances;
          if (!r.pass) part.violations.push_back({{"instance", instance_json(h, p, l)}, {"report", to_json(h, r)}});
        } catch (const PreconditionError& e) {
          part.skip(e.clause());
        }
        return part;
      });
      parts.insert(parts.end(), chunk.begin(), chunk.end());
    }
  }
  return merge("gallai-bound", to_json(b), parts);
}

std::vector<Hypergraph> gallai_menu(std::size_t delta, std::size_t max_order) {
  std::vector<Hypergraph> menu;
  for (std::size_t b = 2; b <= delta; ++b) menu.push_back(families::complete(b));
  for (std::size_t n = 5; n <= max_order; n += 2) menu.push_back(families::cycle(n));
  return menu;
}

Json sweep_sigma_lemmas(const Options& o) {
  const std::size_t max_order = o.max_order.value_or(9);
  const std::size_t max_blocks = o.max_blocks.value_or(max_order);
  const Property p = property_from(o);
  const std::vector<Hypergraph> trees = enum_block_trees(gallai_menu(o.delta, max_order), max_order, max_blocks, o.delta);
  auto parts = parallel_map<SweepPart>(trees.size(), [&](std::size_t i) {
    SweepPart part;
    const Hypergraph& t = trees[i];
    if (!in_gallai_family(t, p, o.delta)) {
      part.skip("outside family");
      return part;
    }
    ++part.instances;
    const SigmaLemmaReport r = verify_sigma_lemmas(t, p, o.delta);
    if (!r.pass) part.violations.push_back({{"hypergraph", to_json(t)}, {"report", to_json(t, r)}});
    return part;
  });
  Json bounds = {{"max_order", max_order}, {"max_blocks", max_blocks}, {"delta", o.delta}};
  return merge("sigma-lemmas", bounds, parts);
}

struct Context {
  Options o;
  std::istream& in;

  Input input() const {
    Input parsed = o.input.empty() || o.input == "-" ? parse_input(in, "<stdin>") : parse_input_path(o.input);
    try {
      if (!o.lists_path.empty()) {
        parsed.lists = list_assignment_from_json(parsed.hypergraph, read_json_file(o.lists_path));
      }
      if (!o.f_path.empty()) parsed.f = vector_function_from_json(parsed.hypergraph, read_json_file(o.f_path));
    } catch (const ConstructionError& e) {
      throw InputError(e.what());
    }
    return parsed;
  }

  const ListAssignment& lists(const Input& i) const {
    if (!i.lists) throw InputError("a list assignment is required (--lists or \"lists\" in the input)");
    if (i.lists->order() != i.hypergraph.order()) throw InputError("list assignment does not match the hypergraph");
    return *i.lists;
  }

  const VectorFunction& f(const Input& i) const {
    if (!i.f) throw InputError("a vector function is required (--f or \"f\" in the input)");
    return *i.f;
  }
};

Json names_of(const Hypergraph& h, VertexMask m) { return h.names(m); }

Json cmd_blocks(const Context& c) {
  const Hypergraph h = c.input().hypergraph;
  const BlockDecomposition d = blocks(h);
  Json list = Json::array();
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    Json edges = Json::array();
    for (EdgeIndex e : d.blocks[i].edges) edges.push_back(h.names(h.edge(e)));
    list.push_back({{"vertices", names_of(h, d.blocks[i].vertices)},
                    {"edges", edges},
                    {"end_block", d.is_end_block(i)}});
  }
  return {{"blocks", list}, {"separating", names_of(h, d.separating)}, {"connected", is_connected(h)}};
}

Json brick_json(const BrickClassification& b) {
  if (b.kind == BrickKind::NotBrick) return nullptr;
  return {{"type", b.kind == BrickKind::CompleteMultiple ? "K" : "C"}, {"t", b.t}, {"n", b.n}};
}

Json cmd_bricks(const Context& c) {
  const Hypergraph h = c.input().hypergraph;
  Json list = Json::array();
  for (const Block& b : blocks(h).blocks) {
    list.push_back({{"vertices", names_of(h, b.vertices)}, {"brick", brick_json(classify_brick(block_hypergraph(h, b)))}});
  }
  Json j = {{"blocks", list}};
  j["brick"] = !h.empty() && is_connected(h) ? brick_json(classify_brick(h)) : Json(nullptr);
  return j;
}

Json cmd_degeneracy(const Context& c) {
  const Input i = c.input();
  const Hypergraph& h = i.hypergraph;
  unsigned k = 0;
  while (!is_strictly_k_degenerate(h, k)) ++k;
  Json degrees = Json::object();
  for (VertexIndex v = 0; v < h.order(); ++v) degrees[h.vertex(v)] = h.degree(v);
  Json j = {{"degrees", degrees},
            {"min_degree", min_degree(h)},
            {"max_degree", max_degree(h)},
            {"degree_sum", degree_sum(h)},
            {"degeneracy", k}};
  for (std::size_t q : c.o.k) j["strictly_degenerate"][std::to_string(q)] = is_strictly_k_degenerate(h, q);
  if (i.f) {
    const auto part = find_f_partition(h, *i.f);
    j["f_partition"] = {{"degree_feasible", degree_feasible(h, *i.f)},
                        {"partitionable", part.has_value()},
                        {"partition", part ? to_json(h, *part) : Json(nullptr)}};
  }
  return j;
}

Json cmd_color(const Context& c) {
  const Input i = c.input();
  const Hypergraph& h = i.hypergraph;
  const Property p = property_from(c.o);
  Json j = {{"property", p.name()}};
  if (i.lists) {
    const auto phi = find_PL_coloring(h, p, c.lists(i));
    j["colorable"] = phi.has_value();
    j["coloring"] = phi ? to_json(h, *phi) : Json(nullptr);
  } else {
    j["chi"] = chi_P(h, p);
    j["chi_list"] = chi_list_P(h, p, {.max_order = h.order(), .max_k = h.order()});
  }
  return j;
}

Json cmd_critical(const Context& c) {
  const Input i = c.input();
  const Property p = property_from(c.o);
  return to_json(i.hypergraph, p, is_PL_critical(i.hypergraph, p, c.lists(i)));
}

Json cmd_hardpair(const Context& c) {
  const Input i = c.input();
  const Hypergraph& h = i.hypergraph;
  const VectorFunction& f = c.f(i);
  if (f.order() != h.order()) throw InputError("vector function does not match the hypergraph");
  const auto cert = classify_hard_pair(h, f);
  return {{"degree_feasible", degree_feasible(h, f)},
          {"hard_pair", cert.has_value()},
          {"certificate", cert ? to_json(h, *cert) : Json(nullptr)},
          {"certificate_valid", cert && validate_certificate(h, f, *cert)}};
}

Json single(const std::string& verifier, Json report) {
  const bool pass = report.value("pass", false);
  return {{"verifier", verifier}, {"mode", "instance"}, {"instances", 1}, {"report", std::move(report)}, {"pass", pass}};
}

Json cmd_verify(const Context& c, const std::string& which) {
  const Options& o = c.o;
  if (sweep_requested(o)) {
    if (which == "theorem3") return sweep_theorem3(o);
    if (which == "theorem4") return sweep_theorem4(o);
    if (which == "brooks") return sweep_brooks(o);
    if (which == "theorem6") return sweep_theorem6(o);
    if (which == "gallai-bound") return sweep_gallai_bound(o);
    return sweep_sigma_lemmas(o);
  }
  const Input i = c.input();
  const Hypergraph& h = i.hypergraph;
  const Property p = property_from(o);
  if (which == "theorem3") return single(which, to_json(h, verify_theorem3(h, p, c.lists(i))));
  if (which == "theorem4") return single(which, to_json(h, verify_theorem4(h, c.f(i))));
  if (which == "brooks") {
    return single(which, to_json(verify_brooks(h, p, {.max_order = h.order(), .max_k = h.order()})));
  }
  if (which == "theorem6") return single(which, to_json(h, verify_theorem6(h, p, c.lists(i))));
  if (which == "gallai-bound") return single(which, to_json(h, verify_gallai_bound(h, p, c.lists(i))));
  return single(which, to_json(h, verify_sigma_lemmas(h, p, o.delta)));
}

void write_report(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw InputError(o.out_path + ": cannot write");
  f << text;
}

}  // namespace

std::size_t thread_count() {
  const char* env = std::getenv("HGC_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long n = std::strtoul(env, &end, 10);
  return *end == '\0' && n > 0 ? n : 1;
}

Input parse_input(std::istream& in, const std::string& origin) {
  const Json j = read_json(in, origin);
  if (!j.is_object()) throw InputError(origin + ": expected a JSON object");
  try {
    Input input{hypergraph_from_json(j), std::nullopt, std::nullopt};
    if (j.contains("lists")) input.lists = list_assignment_from_json(input.hypergraph, j.at("lists"));
    if (j.contains("f")) input.f = vector_function_from_json(input.hypergraph, j.at("f"));
    return input;
  } catch (const ConstructionError& e) {
    throw InputError(origin + ": " + e.what());
  } catch (const Json::exception& e) {
    throw InputError(origin + ": " + e.what());
  }
}

Input parse_input_path(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError(path + ": cannot open");
  return parse_input(f, path);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks coloring and degeneracy statements on small hypergraphs", "hgc"};
  app.require_subcommand(1);
  Options o;
  std::string verifier;

  auto input_opts = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "hypergraph JSON file, '-' for stdin");
    sub->add_option("--property", o.property, "O, S:k or D:k");
    sub->add_option("--lists", o.lists_path, "list assignment JSON");
    sub->add_option("--f", o.f_path, "vector function JSON");
    sub->add_option("--out", o.out_path, "write the report here");
  };
  auto bound_opts = [&](CLI::App* sub) {
    sub->add_option("--bounds", o.bounds_spec, "order=N,edges=N,size=N,mult=N,mindeg=N");
    sub->add_option("--max-order", o.max_order);
    sub->add_option("--max-edges", o.max_edges);
    sub->add_option("--max-edge-size", o.max_edge_size);
    sub->add_option("--max-mult", o.max_mult);
  };

  CLI::App* blocks_cmd = app.add_subcommand("blocks", "block decomposition");
  CLI::App* bricks_cmd = app.add_subcommand("bricks", "brick classification per block");
  CLI::App* degeneracy_cmd = app.add_subcommand("degeneracy", "degrees, degeneracy and f-partitions");
  CLI::App* color_cmd = app.add_subcommand("color", "(P,L)-coloring or chromatic numbers");
  CLI::App* critical_cmd = app.add_subcommand("critical", "(P,L)-criticality report");
  CLI::App* hardpair_cmd = app.add_subcommand("hardpair", "hard pair certificate");
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verifier on one instance or a sweep");
  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "hypergraphs up to isomorphism as NDJSON");

  verify_cmd->add_option("verifier", verifier)
      ->required()
      ->check(CLI::IsMember({"theorem3", "theorem4", "brooks", "theorem6", "gallai-bound", "sigma-lemmas"}));
  for (CLI::App* sub : {blocks_cmd, bricks_cmd, degeneracy_cmd, color_cmd, critical_cmd, hardpair_cmd, verify_cmd}) {
    input_opts(sub);
  }
  degeneracy_cmd->add_option("--k", o.k, "also test strict k-degeneracy");

  verify_cmd->add_flag("--sweep", o.sweep, "enumerate instances instead of reading one");
  bound_opts(verify_cmd);
  verify_cmd->add_option("--k", o.k, "list sizes for critical searches");
  verify_cmd->add_option("--p", o.p, "vector function dimension")->check(CLI::Range(1, 4));
  verify_cmd->add_option("--max-entry", o.max_entry, "vector function entries");
  verify_cmd->add_option("--delta", o.delta, "delta for sigma-lemmas")->check(CLI::Range(3, 12));
  verify_cmd->add_option("--max-blocks", o.max_blocks);

  bound_opts(enumerate_cmd);
  enumerate_cmd->add_flag("--connected", o.connected);
  enumerate_cmd->add_flag("--simple", o.simple);
  enumerate_cmd->add_option("--out", o.out_path);

  // CLI11 wants the arguments reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "hgc: " << e.what() << "\n";
    return kInputError;
  }
  Context ctx{o, in};

  try {
    if (*enumerate_cmd) {
      std::ostringstream lines;
      for_each_hypergraph(bounds_from(o, EnumerationBounds{}),
                          [&](const Hypergraph& h) { lines << to_canonical_string(h) << "\n"; });
      write_report(o, lines.str(), out);
      return kPass;
    }
    Json report;
    if (*blocks_cmd) report = cmd_blocks(ctx);
    if (*bricks_cmd) report = cmd_bricks(ctx);
    if (*degeneracy_cmd) report = cmd_degeneracy(ctx);
    if (*color_cmd) report = cmd_color(ctx);
    if (*critical_cmd) report = cmd_critical(ctx);
    if (*hardpair_cmd) report = cmd_hardpair(ctx);
    if (*verify_cmd) report = cmd_verify(ctx, verifier);
    write_report(o, report.dump(2) + "\n", out);
    if (*verify_cmd) return report.at("pass").get<bool>() ? kPass : kViolation;
    return kPass;
  } catch (const InputError& e) {
    err << "hgc: " << e.what() << "\n";
  } catch (const ConstructionError& e) {
    err << "hgc: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "hgc: precondition '" << e.clause() << "' does not hold: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "hgc: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "hgc: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace hgc::cli
