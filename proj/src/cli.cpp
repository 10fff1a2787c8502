#include "morse/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "morse/canonical.hpp"
#include "morse/classify.hpp"
#include "morse/error.hpp"
#include "morse/height_mesh.hpp"
#include "morse/mcg_action.hpp"
#include "morse/symplectic.hpp"

namespace morse {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  return out;
}

Vec parse_vec(const std::string& text) {
  Vec v;
  for (const auto& item : split_commas(text)) v.push_back(parse_integer(item));
  return v;
}

std::vector<std::int64_t> parse_small_vec(const std::string& text) {
  std::vector<std::int64_t> v;
  for (const auto& x : parse_vec(text)) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
      fail(Errc::Format, "entry out of range");
    }
    v.push_back(static_cast<std::int64_t>(x));
  }
  return v;
}

std::string category(Errc code) {
  switch (code) {
    case Errc::Format: return "format";
    case Errc::Io: return "io";
    default: return "domain";
  }
}

void print_graph(std::ostream& out, const KRGraph& g, const CriticalType& k) {
  out << to_dot(g) << "#KTYPE " << to_json(k) << "\n";
}

std::string matrix_json(const SpMatrix& m) {
  std::string s = "[";
  for (int r = 0; r < m.size(); ++r) {
    s += r ? ",[" : "[";
    for (int c = 0; c < m.size(); ++c) s += (c ? "," : "") + m(r, c).str();
    s += "]";
  }
  return s + "]";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morse mappings on surfaces: critical types, KR-graphs, symplectic words", "morse-topo"};
  app.require_subcommand(1);

  std::string mesh_path;
  auto* reeb = app.add_subcommand("reeb", "KR-graph and critical type of a height mesh");
  reeb->add_option("mesh", mesh_path, "HMESH file")->required();

  std::string ktype_a, ktype_b;
  bool up_to_flip = false;
  auto* classify = app.add_subcommand("classify", "compare two critical types");
  classify->add_option("a", ktype_a, "critical type JSON file")->required();
  classify->add_option("b", ktype_b, "critical type JSON file")->required();
  classify->add_flag("--up-to-flip", up_to_flip, "also accept the reversed target orientation");

  std::string surface_desc, target_name = "Line", q_text;
  std::int64_t c0 = -1, c2 = -1;
  auto* canonical = app.add_subcommand("canonical", "canonical KR-graph of a critical type");
  canonical->add_option("--surface", surface_desc, "orientable|nonorientable:<g>[:<label><+|->,...]")->required();
  canonical->add_option("--target", target_name, "Line or Circle");
  canonical->add_option("--c0", c0, "number of minima")->required();
  canonical->add_option("--c2", c2, "number of maxima")->required();
  canonical->add_option("--q", q_text, "comma separated homotopy vector");

  int sp_genus = 0;
  std::string matrix_path;
  auto* sp = app.add_subcommand("sp-decompose", "word for a symplectic matrix fixing alpha_1");
  sp->add_option("--g", sp_genus, "genus")->required();
  sp->add_option("matrix", matrix_path, "SP matrix file")->required();

  std::string gamma_text;
  auto* admissible = app.add_subcommand("admissible", "homological admissibility of a Dehn twist");
  admissible->add_option("--q", q_text, "comma separated homotopy vector")->required();
  admissible->add_option("--gamma", gamma_text, "comma separated curve class")->required();

  auto* factor = app.add_subcommand("factor", "factor a matrix fixing the level-set class");
  factor->add_option("--q", q_text, "comma separated homotopy vector")->required();
  factor->add_option("--matrix", matrix_path, "SP matrix file")->required();

  auto* generators = app.add_subcommand("generators", "canonical mapping class group generators");
  generators->add_option("--surface", surface_desc, "surface descriptor")->required();
  generators->add_option("--target", target_name, "Line or Circle");
  generators->add_option("--c0", c0, "number of minima");
  generators->add_option("--c2", c2, "number of maxima");

  std::vector<std::string> argv_store{"morse-topo"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream result;
  try {
    if (*reeb) {
      const auto r = extract_kr_graph(parse_hmesh(read_file(mesh_path)));
      print_graph(result, r.graph, r.type);
    } else if (*classify) {
      const auto a = critical_type_from_json(read_file(ktype_a));
      const auto b = critical_type_from_json(read_file(ktype_b));
      Verdict v = compare_types(a, b);
      if (!v.equivalent && up_to_flip && sigma_homotopy_equivalent(a, flip_target_orientation(b))) v = {true, "flip"};
      nlohmann::ordered_json j;
      j["equivalent"] = v.equivalent;
      j["reason"] = v.reason;
      result << j.dump() << "\n";
    } else if (*canonical) {
      const auto [surface, eps] = parse_surface_descriptor(surface_desc);
      const Target target = parse_target(target_name);
      auto q = parse_small_vec(q_text);
      if (q_text.empty()) q.assign(homology_rank(surface), 0);
      const KRGraph g = canonical_kr_graph(surface, eps, c0, c2, target, q);
      print_graph(result, g, critical_type_of(g, surface, q));
    } else if (*sp) {
      const SpMatrix h = parse_sp_matrix(read_file(matrix_path));
      if (h.genus() != sp_genus) fail(Errc::Format, "matrix genus differs from --g");
      result << format_word(stabilizer_decompose(h)) << "\n";
    } else if (*admissible) {
      const Vec q = parse_vec(q_text), gamma = parse_vec(gamma_text);
      if (q.size() != gamma.size()) fail(Errc::InvalidArgument, "q and gamma differ in length");
      result << "{\"admissible\":" << (twist_admissible(q, gamma) ? "true" : "false")
             << ",\"degree\":" << degree_along(q, gamma).str() << "}\n";
    } else if (*factor) {
      const SpMatrix h = parse_sp_matrix(read_file(matrix_path));
      const auto f = factor_stabilizer(h, parse_vec(q_text));
      nlohmann::ordered_json word = format_word(f.word);
      nlohmann::ordered_json residual = f.residual;
      result << "{\"word\":" << word.dump() << ",\"basis_change\":" << matrix_json(f.basis_change)
             << ",\"residual\":" << residual.dump() << "}\n";
    } else if (*generators) {
      const auto [surface, eps] = parse_surface_descriptor(surface_desc);
      CriticalType k;
      k.target = parse_target(target_name);
      k.eps = eps;
      k.q.assign(homology_rank(surface), 0);
      // the projection to beta_1, fibered by alpha_1
      if (k.target == Target::Circle && !k.q.empty()) k.q[k.q.size() / 2] = 1;
      const bool circle = k.target == Target::Circle;
      k.c0 = c0 >= 0 ? c0 : (circle || negative_count(eps) > 0 ? 0 : 1);
      k.c2 = c2 >= 0 ? c2 : (circle || positive_count(eps) > 0 ? 0 : 1);
      k.c1 = k.c0 + k.c2 - euler_characteristic(surface);
      result << generators_json(canonical_generator_set(surface, k)) << "\n";
    }
  } catch (const Error& e) {
    nlohmann::ordered_json j;
    j["error"] = category(e.code());
    j["code"] = std::string(errc_name(e.code()));
    j["message"] = e.what();
    err << j.dump() << "\n";
    return 1;
  }
  out << result.str();
  return 0;
}

}  // namespace morse
