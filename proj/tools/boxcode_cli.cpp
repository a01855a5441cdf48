// boxcode: construct, verify, bound and search box codes from the command line.
//
// Exit status: 0 on success, 2 on bad arguments or unreadable input, 3 when a
// verification finds a counterexample.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boxcode/bounds.hpp"
#include "boxcode/box_code.hpp"
#include "boxcode/classic_codes.hpp"
#include "boxcode/constructions.hpp"
#include "boxcode/covering.hpp"
#include "boxcode/graph.hpp"
#include "boxcode/io.hpp"
#include "boxcode/search.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace boxcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitCounterexample = 3;

struct Output {
  bool json = false;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

BoxCode load_code(const std::string& path, bool allow_repeats) {
  auto in = open_input(path);
  try {
    return read_boxcode(in, allow_repeats);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_edge_list(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Covering load_covering(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_covering(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

json rational_fields(const Rational& r) {
  return {{"n_num", r.numerator()}, {"n_den", r.denominator()}, {"n", to_double(r)}};
}

json params_json(const Parameters& p) {
  json j = rational_fields(p.n);
  j["M"] = p.M;
  j["d"] = p.d ? json(*p.d) : json(nullptr);
  j["q"] = p.q;
  j["eta"] = p.eta;
  return j;
}

std::string params_text(const Parameters& p) {
  std::ostringstream s;
  s << "n=" << to_string(p.n) << " M=" << p.M << " d=" << (p.d ? std::to_string(*p.d) : "-") << " q=" << p.q
    << " eta=" << p.eta;
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path.string() + "'");
  out << text;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string out_dir = ".";
  unsigned m = 4;
  std::uint32_t q = 5;
  std::size_t k = 2;
  std::size_t d = 3;
  std::size_t n = 8;
  std::string input;
  bool builtin8 = false;
};

std::vector<std::string> read_binary_words(const std::string& path) {
  auto in = open_input(path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    words.push_back(line.substr(first, line.find_last_not_of(" \t\r") - first + 1));
  }
  return words;
}

int emit_construction(const Constructed& built, const std::string& stem, const ConstructArgs& args, const Output& out) {
  const fs::path dir(args.out_dir);
  const fs::path code_path = dir / (stem + ".boxcode");
  const fs::path prov_path = dir / (stem + ".provenance.json");
  write_file(code_path, to_boxcode_text(built.code));

  const Provenance& p = built.provenance;
  json prov;
  prov["schema"] = "boxcode.provenance/1";
  prov["construction"] = p.construction;
  prov["parameters"] = json::object();
  for (const auto& [k, v] : p.parameters) prov["parameters"][k] = v;
  prov["choices"] = p.choices;
  prov["trusted_components"] = p.trusted_components;
  prov["notes"] = p.notes;
  prov["code_file"] = code_path.filename().string();
  prov["code"] = params_json(built.code.parameters());
  write_file(prov_path, prov.dump(2) + "\n");

  if (out.json) {
    json j;
    j["schema"] = "boxcode.construct/1";
    j["construction"] = p.construction;
    j["code_file"] = code_path.string();
    j["provenance_file"] = prov_path.string();
    j["code"] = params_json(built.code.parameters());
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << p.construction << ": " << params_text(built.code.parameters()) << '\n'
              << "wrote " << code_path.string() << '\n'
              << "wrote " << prov_path.string() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string code;
  std::optional<std::size_t> perfect;
  std::string graph;
  std::optional<std::size_t> d;
};

int run_verify(const VerifyArgs& a, const Output& out) {
  if (!a.graph.empty() && !a.d) throw std::invalid_argument("--graph needs --d");
  const BoxCode code = load_code(a.code, !a.graph.empty());
  const Parameters p = code.parameters();
  bool failed = false;

  json j;
  j["schema"] = "boxcode.verify/1";
  j["file"] = a.code;
  j["params"] = params_json(p);
  j["degenerate"] = code.is_degenerate();
  j["perfect"] = nullptr;
  j["witness"] = nullptr;

  std::ostringstream text;
  text << a.code << ": " << params_text(p) << '\n' << "degenerate: " << (code.is_degenerate() ? "yes" : "no") << '\n';

  if (a.perfect) {
    const PerfectnessReport rep = is_perfect(code, *a.perfect);
    j["perfect"] = rep.perfect;
    j["radius"] = rep.radius;
    j["volume_sum"] = rep.volume_sum;
    j["space_size"] = rep.space_size;
    if (rep.witness) {
      j["witness"] = rep.witness->to_string();
      j["defect"] = rep.defect == TilingDefect::uncovered ? "uncovered" : "overlap";
    }
    text << "perfect (r=" << rep.radius << "): " << (rep.perfect ? "yes" : "no") << " (volumes " << rep.volume_sum
         << " of " << rep.space_size << ")\n";
    if (rep.witness)
      text << "witness: " << rep.witness->to_string() << ' '
           << (rep.defect == TilingDefect::uncovered ? "uncovered" : "covered twice") << '\n';
    failed = failed || !rep.perfect;
  }

  if (!a.graph.empty()) {
    const Graph g = load_graph(a.graph);
    if (g.size() != code.size())
      throw std::invalid_argument("graph has " + std::to_string(g.size()) + " vertices, code has " +
                                  std::to_string(code.size()) + " codewords");
    json violations = json::array();
    for (const auto& [u, v] : g.edges()) {
      const std::size_t dist = box_distance(code[u], code[v]);
      if (dist < *a.d) violations.push_back({{"u", u + 1}, {"v", v + 1}, {"distance", dist}});
    }
    j["graph"] = {{"file", a.graph}, {"d", *a.d}, {"ok", violations.empty()}, {"violations", violations}};
    text << "graph code (d=" << *a.d << "): " << (violations.empty() ? "yes" : "no") << '\n';
    for (const auto& v : violations)
      text << "  edge " << v["u"] << "-" << v["v"] << " has distance " << v["distance"] << '\n';
    failed = failed || !violations.empty();
  }

  std::cout << (out.json ? j.dump(2) + "\n" : text.str());
  return failed ? kExitCounterexample : kExitOk;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsArgs {
  std::optional<std::uint64_t> m;
  std::size_t d = 1;
  unsigned q = 2;
  std::string graph;
};

int run_bounds(const BoundsArgs& a, const Output& out) {
  std::vector<BoundRow> rows;
  std::uint64_t m = 0;
  if (!a.graph.empty()) {
    if (a.q != 2) throw std::invalid_argument("graph bounds are binary only");
    const Graph g = load_graph(a.graph);
    m = g.size();
    if (a.m && *a.m != m) throw std::invalid_argument("--M differs from the graph's vertex count");
    rows = graph_bound_table(g, a.d);
  } else {
    if (!a.m) throw std::invalid_argument("bounds needs --M or --graph");
    m = *a.m;
    rows = bound_table(m, a.d, a.q);
  }

  if (out.json) {
    json j;
    j["schema"] = "boxcode.bounds/1";
    j["M"] = m;
    j["d"] = a.d;
    j["q"] = a.q;
    j["graph"] = a.graph.empty() ? json(nullptr) : json(a.graph);
    j["rows"] = json::array();
    for (const auto& r : rows)
      j["rows"].push_back({{"name", r.name},
                           {"value", r.value ? json(*r.value) : json(nullptr)},
                           {"applicable", r.value.has_value()},
                           {"scope", r.scope},
                           {"citation", r.citation},
                           {"note", r.note}});
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "M=" << m << " d=" << a.d << " q=" << a.q << '\n';
  std::cout << std::left << std::setw(18) << "bound" << std::setw(12) << "value" << std::setw(11) << "scope"
            << "citation\n";
  for (const auto& r : rows) {
    std::ostringstream v;
    if (r.value)
      v << std::fixed << std::setprecision(4) << *r.value;
    else
      v << "n/a";
    std::cout << std::setw(18) << r.name << std::setw(12) << v.str() << std::setw(11) << r.scope << r.citation;
    if (!r.note.empty()) std::cout << " [" << r.note << "]";
    std::cout << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::size_t m = 2;
  std::size_t d = 1;
  unsigned q = 2;
  std::size_t eta_max = 2;
  std::string graph;
  std::string witness_out;
};

int run_search(const SearchArgs& a, const Output& out) {
  SearchResult res;
  if (!a.graph.empty()) {
    const Graph g = load_graph(a.graph);
    res = exact_min_length_graph(g, a.d, a.q, a.eta_max);
  } else {
    res = exact_min_length(a.m, a.d, a.q, a.eta_max);
  }
  if (res.witness && !a.witness_out.empty()) write_file(a.witness_out, to_boxcode_text(*res.witness));

  if (out.json) {
    json j;
    j["schema"] = "boxcode.search/1";
    j["M"] = res.M;
    j["d"] = res.d;
    j["q"] = res.q;
    j["eta_max"] = res.eta_max;
    j["graph"] = a.graph.empty() ? json(nullptr) : json(a.graph);
    j["feasible"] = res.feasible;
    j["n_num"] = res.feasible ? json(res.n.numerator()) : json(nullptr);
    j["n_den"] = res.feasible ? json(res.n.denominator()) : json(nullptr);
    j["eta_limited"] = res.eta_limited;
    j["nodes_explored"] = res.nodes_explored;
    j["witness"] = res.witness ? json(res.witness->to_strings()) : json(nullptr);
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "M=" << res.M << " d=" << res.d << " q=" << res.q << " eta_max=" << res.eta_max << '\n';
  if (!res.feasible) {
    std::cout << "infeasible within eta_max (" << res.nodes_explored << " nodes)\n";
    return kExitOk;
  }
  std::cout << "n=" << to_string(res.n) << (res.eta_limited ? " (eta_max-limited)" : "") << " nodes="
            << res.nodes_explored << '\n'
            << to_boxcode_text(*res.witness);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// covering

int run_covering_export(const std::string& code_path, const std::string& out_path) {
  const Covering h = from_box_code(load_code(code_path, true));
  std::ostringstream s;
  write_covering(s, h);
  if (out_path.empty())
    std::cout << s.str();
  else
    write_file(out_path, s.str());
  return kExitOk;
}

int run_covering_import(const std::string& cov_path, const std::string& out_path) {
  const BoxCode code = to_box_code(load_covering(cov_path));
  if (out_path.empty())
    std::cout << to_boxcode_text(code);
  else
    write_file(out_path, to_boxcode_text(code));
  return kExitOk;
}

int run_covering_verify(const std::string& cov_path, const std::string& graph_path, std::size_t d,
                        const Output& out) {
  const Covering h = load_covering(cov_path);
  const Graph g = graph_path.empty() ? complete_graph(h.vertices()) : load_graph(graph_path);
  const CoveringReport rep = verify_covering(g, h, d);
  if (out.json) {
    json j;
    j["schema"] = "boxcode.covering-verify/1";
    j["M"] = h.vertices();
    j["d"] = d;
    j["graph"] = graph_path.empty() ? json("complete") : json(graph_path);
    j["capacity"] = h.capacity();
    j["covered"] = rep.covered;
    j["deficits"] = json::array();
    for (const auto& e : rep.deficits)
      j["deficits"].push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"multiplicity", e.multiplicity}, {"deficit", e.deficit}});
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "M=" << h.vertices() << " capacity=" << h.capacity() << " d=" << d << ": "
              << (rep.covered ? "covered" : "not covered") << '\n';
    for (const auto& e : rep.deficits)
      std::cout << "  edge " << e.u + 1 << "-" << e.v + 1 << " covered " << e.multiplicity << " times, short by "
                << e.deficit << '\n';
  }
  return rep.covered ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Box codes: constructions, verification, bounds and exact search"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  bool text_flag = false;
  auto* json_opt = app.add_flag("--json", out.json, "JSON output");
  app.add_flag("--text", text_flag, "plain text output (default)")->excludes(json_opt);

  int status = kExitOk;

  // construct
  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a code and write <stem>.boxcode and <stem>.provenance.json");
  construct->require_subcommand(1);
  construct->add_option("-o,--out-dir", ca.out_dir, "output directory")->capture_default_str();
  auto* c_ham = construct->add_subcommand("hamming", "shortened-support code from the binary Hamming code");
  c_ham->add_option("--m", ca.m, "Hamming parameter, n = 2^m - 1")->required();
  auto* c_rs = construct->add_subcommand("rs", "two-level code from nested Reed-Solomon codes");
  c_rs->add_option("--q", ca.q, "field order")->required();
  c_rs->add_option("--k", ca.k, "dimension")->required();
  c_rs->add_option("--d", ca.d, "minimum distance")->required();
  auto* c_chain = construct->add_subcommand("chain", "perfect d=1 chain code");
  c_chain->add_option("--n", ca.n, "number of levels")->required();
  auto* c_np1 = construct->add_subcommand("np1cc", "perfect d=3 code from a type-A nearly perfect covering code");
  auto* np_in = c_np1->add_option("--input", ca.input, "file with one binary codeword per line");
  auto* np_b8 = c_np1->add_flag("--builtin8", ca.builtin8, "use the built-in length-8 covering code");
  np_in->excludes(np_b8);
  c_np1->require_option(1);
  auto* c_gap = construct->add_subcommand("d1gap", "d=1 code beating the classical length");
  c_gap->add_option("--n", ca.n, "classical length")->required();

  c_ham->callback([&] {
    status = emit_construction(construction_hamming(ca.m), "hamming-m" + std::to_string(ca.m), ca, out);
  });
  c_rs->callback([&] {
    status = emit_construction(construction_rs(ca.q, ca.k, ca.d),
                               "rs-q" + std::to_string(ca.q) + "-k" + std::to_string(ca.k) + "-d" + std::to_string(ca.d),
                               ca, out);
  });
  c_chain->callback([&] { status = emit_construction(chain_code(ca.n), "chain-n" + std::to_string(ca.n), ca, out); });
  c_np1->callback([&] {
    if (ca.builtin8) {
      status = emit_construction(construction_np1cc_builtin8(), "np1cc-builtin8", ca, out);
    } else {
      const auto cc = CoveringCode::from_strings(read_binary_words(ca.input));
      status = emit_construction(construction_np1cc(cc), "np1cc-" + fs::path(ca.input).stem().string(), ca, out);
    }
  });
  c_gap->callback([&] { status = emit_construction(construction_d1_gap(ca.n), "d1gap-n" + std::to_string(ca.n), ca, out); });

  // verify
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "report parameters, perfectness and graph constraints of a code");
  verify->add_option("--code", va.code, ".boxcode file")->required();
  verify->add_option("--perfect", va.perfect, "check that radius-r protected balls tile the space");
  verify->add_option("--graph", va.graph, "edge list; codewords are its vertices in order");
  verify->add_option("--d", va.d, "required distance on graph edges");
  verify->callback([&] { status = run_verify(va, out); });

  // bounds
  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "lower bounds on the length of box codes");
  bounds->add_option("--M", ba.m, "number of codewords");
  bounds->add_option("--d", ba.d, "minimum distance")->required();
  bounds->add_option("--q", ba.q, "alphabet size")->capture_default_str();
  bounds->add_option("--graph", ba.graph, "edge list; bounds for codes constrained only on its edges");
  bounds->callback([&] { status = run_bounds(ba, out); });

  // search
  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exact minimum length for tiny instances");
  search->add_option("--M", sa.m, "number of codewords");
  search->add_option("--d", sa.d, "minimum distance")->required();
  search->add_option("--q", sa.q, "alphabet size")->capture_default_str();
  search->add_option("--eta-max", sa.eta_max, "coordinates available for protected entries")->required();
  search->add_option("--graph", sa.graph, "edge list; only its edges need distance d");
  search->add_option("--witness-out", sa.witness_out, "write the optimal code here");
  search->callback([&] { status = run_search(sa, out); });

  // covering
  auto* covering = app.add_subcommand("covering", "bipartite coverings of graphs and their box codes");
  covering->require_subcommand(1);
  std::string cov_code, cov_file, cov_graph, cov_out;
  std::size_t cov_d = 1;
  auto* cov_export = covering->add_subcommand("export", "binary box code to covering");
  cov_export->add_option("--code", cov_code, ".boxcode file")->required();
  cov_export->add_option("--out", cov_out, "output file (default stdout)");
  cov_export->callback([&] { status = run_covering_export(cov_code, cov_out); });
  auto* cov_import = covering->add_subcommand("import", "covering to binary box code");
  cov_import->add_option("--covering", cov_file, "covering file")->required();
  cov_import->add_option("--out", cov_out, "output file (default stdout)");
  cov_import->callback([&] { status = run_covering_import(cov_file, cov_out); });
  auto* cov_verify = covering->add_subcommand("verify", "check that every edge is covered d times");
  cov_verify->add_option("--covering", cov_file, "covering file")->required();
  cov_verify->add_option("--graph", cov_graph, "edge list (default: complete graph)");
  cov_verify->add_option("--d", cov_d, "required multiplicity")->capture_default_str();
  cov_verify->callback([&] { status = run_covering_verify(cov_file, cov_graph, cov_d, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::logic_error& e) {  // length_error, domain_error, out_of_range
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::runtime_error& e) {  // overflow_error, filesystem errors
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return status;
}
