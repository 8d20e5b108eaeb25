#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polydeza/analysis.hpp"
#include "polydeza/canonical.hpp"
#include "polydeza/classify.hpp"
#include "polydeza/codecs.hpp"
#include "polydeza/embed.hpp"
#include "polydeza/errors.hpp"
#include "polydeza/fixtures.hpp"
#include "polydeza/generate.hpp"
#include "polydeza/suites.hpp"
#include "polydeza/transforms.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polydeza;

/* Exit codes: 0 success/pass, 1 violations found, 2 usage error, 3 I/O. */
constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int exit_for(const Error& e) {
  return e.kind() == ErrorKind::IoError ? kExitIo : kExitUsage;
}

/* Optional file redirection around the standard streams; "-" or an empty
 * path selects stdin/stdout. */
class Input {
public:
  std::istream& open(const std::string& path) {
    if (path.empty() || path == "-") return std::cin;
    file_.open(path, std::ios::binary);
    if (!file_) fail(ErrorKind::IoError, "cannot open " + path + " for reading");
    return file_;
  }

private:
  std::ifstream file_;
};

class Output {
public:
  std::ostream& open(const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file_.open(path, std::ios::binary);
    if (!file_) fail(ErrorKind::IoError, "cannot open " + path + " for writing");
    return file_;
  }

private:
  std::ofstream file_;
};

std::string family_name(DezaFamily f) {
  switch (f) {
    case DezaFamily::NotDeza: return "not Deza";
    case DezaFamily::Tetrahedron: return "tetrahedron";
    case DezaFamily::CubicNoQuadFace: return "cubic, no quadrangular faces";
    case DezaFamily::QuarticNoFourCycle: return "quartic, no 4-cycles";
    case DezaFamily::Exceptional: return "exceptional";
    case DezaFamily::UnionK1: return "union of K1";
    case DezaFamily::UnionK2: return "union of K2";
    case DezaFamily::TriangleK3: return "triangle";
    case DezaFamily::UnionCyclesNoC4: return "union of cycles, none of length 4";
    case DezaFamily::UnionC4: return "union of 4-cycles";
    case DezaFamily::UnionTetraCube: return "union of tetrahedra and cubes";
    case DezaFamily::UnionIcosahedra: return "union of icosahedra";
    case DezaFamily::CubicNoFourCycleLowConn:
      return "cubic, no 4-cycles, connectivity <= 2";
    case DezaFamily::QuarticNoFourCycleLowConn:
      return "quartic, no 4-cycles, connectivity <= 2";
  }
  return "?";
}

struct GenConfig {
  std::string klass;
  int max_n = 0;
  int threads = 0;
  bool deterministic = false;
  bool no_subclass_b = false;
  std::string format = "planar_code";
  std::string output;
  std::string summary_path;
};

int cmd_gen(const GenConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  GenOptions opt;
  opt.max_n = cfg.max_n;
  opt.threads = cfg.deterministic ? 1 : cfg.threads;
  opt.use_ring_insert = !cfg.no_subclass_b;
  if (cfg.no_subclass_b && cfg.klass != "quad")
    fail(ErrorKind::BadConfig, "--no-b only applies to --class quad");

  Output out_holder;
  std::ostream& out = out_holder.open(cfg.output);
  bool planar = cfg.format == "planar_code";
  if (planar) write_planar_code_header(out);
  auto sink = [&](const PlaneGraph& g) {
    if (planar)
      write_planar_code(out, g);
    else
      out << to_graph6(g.abstract()) << "\n";
  };

  std::map<int, long> counts;
  if (cfg.klass == "quartic") counts = gen_quartic_polyhedra(opt, sink);
  else if (cfg.klass == "cubic") counts = gen_cubic_polyhedra(opt, sink);
  else if (cfg.klass == "quad") counts = gen_quadrangulations(opt, sink);
  else if (cfg.klass == "tri") counts = gen_triangulations(opt, sink);
  else fail(ErrorKind::BadConfig, "unknown class '" + cfg.klass + "'");
  out.flush();
  if (!out) fail(ErrorKind::IoError, "write failed");

  long total = 0;
  ordered_json per_order = ordered_json::object();
  for (const auto& [n, c] : counts) {
    per_order[std::to_string(n)] = c;
    total += c;
  }
  auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  ordered_json summary{{"schema_version", 1}, {"command", "gen"},
                       {"class", cfg.klass},  {"max_n", cfg.max_n},
                       {"format", cfg.format}, {"deterministic", cfg.deterministic},
                       {"counts", per_order}, {"total", total},
                       {"wall_ms", wall}};
  if (cfg.summary_path.empty()) {
    std::cerr << summary.dump(2) << "\n";
  } else {
    std::ofstream s(cfg.summary_path);
    if (!s) fail(ErrorKind::IoError, "cannot open " + cfg.summary_path + " for writing");
    s << summary.dump(2) << "\n";
  }
  return kExitPass;
}

struct ClassifyConfig {
  std::string input;
  std::string output;
  std::string format = "planar_code";
  bool csv = false;
};

int cmd_classify(const ClassifyConfig& cfg) {
  Input in_holder;
  Output out_holder;
  std::istream& in = in_holder.open(cfg.input);
  std::ostream& out = out_holder.open(cfg.output);
  if (cfg.csv) out << "id,n,q,family,detail,lambda,mu,profile\n";

  std::map<std::string, long> tally;
  auto record = [&](const std::string& id, const AbstractGraph& g) {
    DezaClass c = classify(g);
    tally[family_name(c.family)]++;
    std::vector<int> profile;
    if (g.n() >= 2)
      for (int v : type_profile(g).values) profile.push_back(v);
    if (cfg.csv) {
      std::string detail = c.detail;
      for (char& ch : detail)
        if (ch == ',') ch = ';';
      std::string prof;
      for (size_t i = 0; i < profile.size(); ++i)
        prof += (i ? "|" : "") + std::to_string(profile[i]);
      out << id << "," << g.n() << "," << g.q() << "," << family_name(c.family)
          << "," << detail << ","
          << (c.lambda_mu ? std::to_string(c.lambda_mu->first) : "") << ","
          << (c.lambda_mu ? std::to_string(c.lambda_mu->second) : "") << ","
          << prof << "\n";
    } else {
      ordered_json j{{"id", id}, {"n", g.n()}, {"q", g.q()},
                     {"family", family_name(c.family)}, {"detail", c.detail}};
      if (c.lambda_mu)
        j["lambda_mu"] = {c.lambda_mu->first, c.lambda_mu->second};
      else
        j["lambda_mu"] = nullptr;
      j["profile"] = profile;
      out << j.dump() << "\n";
    }
  };

  long seen = 0;
  if (cfg.format == "planar_code") {
    read_planar_code(in, [&](PlaneGraph&& g) {
      ++seen;
      record(code_hex(canonical_code(g)), g.abstract());
    });
  } else {
    read_graph6(in, [&](AbstractGraph&& g) {
      ++seen;
      record(to_graph6(g), g);
    });
  }
  out.flush();
  if (!out) fail(ErrorKind::IoError, "write failed");

  ordered_json families = ordered_json::object();
  for (const auto& [name, count] : tally) families[name] = count;
  ordered_json summary{{"schema_version", 1}, {"command", "classify"},
                       {"graphs", seen},      {"families", families}};
  std::cerr << summary.dump(2) << "\n";
  return kExitPass;
}

struct TransformConfig {
  std::string op;
  std::string input;
  std::string output;
  std::string site1, site2;
};

TSite parse_site(const std::string& text) {
  TSite s;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> s.v >> c1 >> s.u >> c2 >> s.w) || c1 != ',' || c2 != ',' ||
      (in >> std::ws, !in.eof()))
    fail(ErrorKind::BadConfig, "site '" + text + "' is not of the form v,u,w");
  return s;
}

int cmd_transform(const TransformConfig& cfg) {
  Input in_holder;
  Output out_holder;
  std::istream& in = in_holder.open(cfg.input);
  std::ostream& out = out_holder.open(cfg.output);

  if (cfg.op == "t-construct") {
    if (cfg.site1.empty() || cfg.site2.empty())
      fail(ErrorKind::BadConfig, "t-construct needs --site1 and --site2");
    std::vector<PlaneGraph> hosts = read_planar_code_all(in);
    if (hosts.size() != 2)
      fail(ErrorKind::BadConfig, "t-construct wants exactly two input graphs, got " +
                                     std::to_string(hosts.size()));
    PlaneGraph g =
        t_construct(hosts[0], parse_site(cfg.site1), hosts[1], parse_site(cfg.site2));
    write_planar_code_header(out);
    write_planar_code(out, g);
    out.flush();
    if (!out) fail(ErrorKind::IoError, "write failed");
    return kExitPass;
  }

  bool header_written = false;
  auto emit = [&](const PlaneGraph& g) {
    if (!header_written) {
      write_planar_code_header(out);
      header_written = true;
    }
    write_planar_code(out, g);
  };

  long index = 0;
  read_planar_code(in, [&](PlaneGraph&& g) {
    std::string id = code_hex(canonical_code(g));
    if (cfg.op == "dual") {
      emit(dual(g));
    } else if (cfg.op == "medial") {
      emit(medial(g));
    } else if (cfg.op == "radial") {
      emit(radial(g));
    } else if (cfg.op == "line") {
      out << to_graph6(line_graph(g.abstract())) << "\n";
    } else if (cfg.op == "medial-preimage") {
      auto pm = medial_preimage(g);
      ordered_json j{{"index", index}, {"id", id}, {"medial_preimage", pm.has_value()}};
      if (pm) {
        emit(pm->first);
        emit(pm->second);
        j["hosts"] = {code_hex(canonical_code(pm->first)),
                      code_hex(canonical_code(pm->second))};
      }
      std::cerr << j.dump() << "\n";
    } else if (cfg.op == "t-decompose") {
      TDecomposition d = t_decompose(g);
      ordered_json j{{"index", index}, {"id", id},
                     {"pair", {d.pair.first, d.pair.second}}};
      if (d.pyramid) {
        j["branch"] = "pyramid";
        j["apex"] = d.pyramid->apex;
        j["base"] = d.pyramid->base;
      } else {
        j["branch"] = "splice";
        j["site1"] = {d.s1.v, d.s1.u, d.s1.w};
        j["site2"] = {d.s2.v, d.s2.u, d.s2.w};
        if (!d.g1 || !d.g2) fail(ErrorKind::Internal, "splice branch without hosts");
        emit(*d.g1);
        emit(*d.g2);
      }
      std::cerr << j.dump() << "\n";
    } else {
      fail(ErrorKind::BadConfig, "unknown op '" + cfg.op + "'");
    }
    ++index;
  });
  out.flush();
  if (!out) fail(ErrorKind::IoError, "write failed");
  return kExitPass;
}

struct ConvertConfig {
  std::string from = "planar_code";
  std::string to = "graph6";
  std::string input;
  std::string output;
  bool allow_loss = false;
};

int cmd_convert(const ConvertConfig& cfg) {
  Input in_holder;
  Output out_holder;
  std::istream& in = in_holder.open(cfg.input);
  std::ostream& out = out_holder.open(cfg.output);

  if (cfg.from == cfg.to) {
    /* Re-encode, which also validates the stream. */
    if (cfg.from == "planar_code") {
      write_planar_code_header(out);
      read_planar_code(in, [&](PlaneGraph&& g) { write_planar_code(out, g); });
    } else {
      read_graph6(in, [&](AbstractGraph&& g) { out << to_graph6(g) << "\n"; });
    }
  } else if (cfg.from == "planar_code") {
    if (!cfg.allow_loss)
      fail(ErrorKind::FormatLoss,
           "graph6 drops the embedding; pass --allow-loss to convert anyway");
    read_planar_code(in, [&](PlaneGraph&& g) { out << to_graph6(g.abstract()) << "\n"; });
  } else {
    write_planar_code_header(out);
    read_graph6(in, [&](AbstractGraph&& g) {
      auto emb = embed(g, g.n());
      if (!emb)
        fail(ErrorKind::NotPlanar, "graph6 input " + to_graph6(g) + " is not planar");
      write_planar_code(out, *emb);
    });
  }
  out.flush();
  if (!out) fail(ErrorKind::IoError, "write failed");
  return kExitPass;
}

struct VerifyConfig {
  std::string suite;
  std::string population;
  int threads = 0;
  bool deterministic = false;
  std::string report_path;
  bool list = false;
};

int cmd_verify(const VerifyConfig& cfg) {
  if (cfg.list) {
    for (const auto& name : suite_names()) std::cout << name << "\n";
    return kExitPass;
  }
  if (cfg.suite.empty() || cfg.population.empty())
    fail(ErrorKind::BadConfig, "verify needs --suite and --population");
  SuiteReport rep =
      run_suite(cfg.suite, cfg.population, cfg.deterministic ? 1 : cfg.threads);
  std::string json = rep.to_json();
  std::cout << json << "\n";
  if (!cfg.report_path.empty()) {
    std::ofstream f(cfg.report_path);
    if (!f) fail(ErrorKind::IoError, "cannot open " + cfg.report_path + " for writing");
    f << json << "\n";
  }
  return rep.pass() ? kExitPass : kExitViolations;
}

int cmd_fixtures(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorKind::IoError, "cannot create " + dir + ": " + ec.message());

  ordered_json manifest{{"schema_version", 1}, {"fixtures", ordered_json::array()}};
  for (const auto& f : fixture_corpus()) {
    std::string file = f.name + ".plc";
    std::ofstream out(std::filesystem::path(dir) / file, std::ios::binary);
    if (!out) fail(ErrorKind::IoError, "cannot write " + file);
    write_planar_code_header(out);
    write_planar_code(out, f.graph);
    out.flush();
    if (!out) fail(ErrorKind::IoError, "write failed for " + file);
    const PlaneGraph& g = f.graph;
    manifest["fixtures"].push_back({{"name", f.name},
                                    {"file", file},
                                    {"n", g.n()},
                                    {"q", g.q()},
                                    {"f", g.f()},
                                    {"regularity", g.abstract().regularity()},
                                    {"canonical_code", code_hex(canonical_code(g))}});
  }
  std::ofstream m(std::filesystem::path(dir) / "manifest.json");
  if (!m) fail(ErrorKind::IoError, "cannot write manifest.json");
  m << manifest.dump(2) << "\n";
  m.flush();
  if (!m) fail(ErrorKind::IoError, "write failed for manifest.json");
  std::cerr << "wrote " << manifest["fixtures"].size() << " fixtures to " << dir << "\n";
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyhedral graphs: generation, transforms, Deza classification, "
               "verification suites"};
  app.require_subcommand(1);

  GenConfig gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph class up to an order bound");
  gen_cmd->add_option("--class", gen.klass, "quartic | cubic | quad | tri")->required();
  gen_cmd->add_option("--max-n", gen.max_n, "largest order to emit")
      ->required()
      ->check(CLI::Range(1, 255));
  gen_cmd->add_option("--threads", gen.threads, "worker threads (0 = automatic)");
  gen_cmd->add_flag("--deterministic", gen.deterministic, "single thread, stable bytes");
  gen_cmd->add_flag("--no-b,--no-ring", gen.no_subclass_b,
              "quad only: skip ring insertion (no separating 4-cycles)");
  gen_cmd->add_option("--format", gen.format, "planar_code | graph6")
      ->check(CLI::IsMember({"planar_code", "graph6"}));
  gen_cmd->add_option("--output,-o", gen.output, "output path (default stdout)");
  gen_cmd->add_option("--summary", gen.summary_path, "summary JSON path (default stderr)");

  ClassifyConfig cls;
  auto* cls_cmd = app.add_subcommand("classify", "classify a graph stream into Deza families");
  cls_cmd->add_option("--input,-i", cls.input, "input path (default stdin)");
  cls_cmd->add_option("--output,-o", cls.output, "output path (default stdout)");
  cls_cmd->add_option("--format", cls.format, "planar_code | graph6")
      ->check(CLI::IsMember({"planar_code", "graph6"}));
  cls_cmd->add_flag("--csv", cls.csv, "CSV table instead of JSON lines");

  TransformConfig tr;
  auto* tr_cmd = app.add_subcommand("transform", "apply a graph transform to a stream");
  tr_cmd->add_option("--op", tr.op,
                "dual | medial | radial | line | medial-preimage | t-construct | "
                "t-decompose")
      ->required()
      ->check(CLI::IsMember({"dual", "medial", "radial", "line", "medial-preimage",
                             "t-construct", "t-decompose"}));
  tr_cmd->add_option("--input,-i", tr.input, "input path (default stdin)");
  tr_cmd->add_option("--output,-o", tr.output, "output path (default stdout)");
  tr_cmd->add_option("--site1", tr.site1, "t-construct site v,u,w in the first host");
  tr_cmd->add_option("--site2", tr.site2, "t-construct site v,u,w in the second host");

  ConvertConfig cv;
  auto* cv_cmd = app.add_subcommand("convert", "re-encode a stream between formats");
  cv_cmd->add_option("--from", cv.from, "planar_code | graph6")
      ->check(CLI::IsMember({"planar_code", "graph6"}));
  cv_cmd->add_option("--to", cv.to, "planar_code | graph6")
      ->check(CLI::IsMember({"planar_code", "graph6"}));
  cv_cmd->add_option("--input,-i", cv.input, "input path (default stdin)");
  cv_cmd->add_option("--output,-o", cv.output, "output path (default stdout)");
  cv_cmd->add_flag("--allow-loss", cv.allow_loss, "permit dropping the embedding");

  VerifyConfig vf;
  auto* vf_cmd = app.add_subcommand("verify", "run a verification suite over a population");
  vf_cmd->add_option("--suite", vf.suite, "suite name (see --list)");
  vf_cmd->add_option("--population", vf.population,
                "quartic:N | cubic:N | tri:N | quad:N | n:N | fixtures[:TAG] | "
                "table2 | file:PATH");
  vf_cmd->add_option("--threads", vf.threads, "worker threads (0 = automatic)");
  vf_cmd->add_flag("--deterministic", vf.deterministic, "single thread");
  vf_cmd->add_option("--report", vf.report_path, "also write the report JSON here");
  vf_cmd->add_flag("--list", vf.list, "print the suite names and exit");

  std::string fixtures_dir = "fixtures";
  auto* fx_cmd = app.add_subcommand("fixtures", "write the fixture corpus and manifest");
  fx_cmd->add_option("--dir", fixtures_dir, "target directory (default ./fixtures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (cls_cmd->parsed()) return cmd_classify(cls);
    if (tr_cmd->parsed()) return cmd_transform(tr);
    if (cv_cmd->parsed()) return cmd_convert(cv);
    if (vf_cmd->parsed()) return cmd_verify(vf);
    if (fx_cmd->parsed()) return cmd_fixtures(fixtures_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
