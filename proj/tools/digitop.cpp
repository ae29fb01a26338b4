// digitop: exact verification of digital images, product adjacency
// structures, digital continuity and digital-topological groups.
//
// Exit codes: 0 = property holds / all checks pass, 2 = property refuted
// (a witness is reported), 1 = usage or input error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "digitop/corpus.hpp"
#include "digitop/curves.hpp"
#include "digitop/group.hpp"
#include "digitop/json_io.hpp"

namespace {

using namespace digitop;

constexpr int kExitHolds = 0;
constexpr int kExitError = 1;
constexpr int kExitRefuted = 2;

#ifndef DIGITOP_DATA_DIR
#define DIGITOP_DATA_DIR "data"
#endif

int run_adjacency_table(int n, bool as_json) {
  if (n < 1 || n > 12) {
    std::cerr << "adjacency-table: n must be in [1,12]\n";
    return kExitError;
  }
  if (as_json) {
    json rows = json::array();
    for (int t = 1; t <= n; ++t) rows.push_back(json{{"t", t}, {"k", k_value(t, n)}});
    std::cout << json{{"n", n}, {"rows", rows}}.dump(2) << "\n";
  } else {
    std::cout << "k(t," << n << ") for t in [1," << n << "]:\n";
    for (int t = 1; t <= n; ++t) std::cout << "  t=" << t << "  k=" << k_value(t, n) << "\n";
  }
  return kExitHolds;
}

int run_validate_curve(const std::string& path, bool as_json) {
  json j = load_json_file(path);
  const int t = j.at("t").get<int>();
  std::vector<Point> seq;
  for (const auto& pj : j.at("points")) seq.push_back(point_from_json(pj));
  CurveValidation v = validate_curve(seq, t);
  if (as_json) {
    json out{{"valid", v.ok}};
    if (!v.ok) {
      out["reason"] = v.reason;
      if (v.bad_i >= 0) out["violating_indices"] = json::array({v.bad_i, v.bad_j});
    } else {
      out["l"] = v.curve->length();
      out["k"] = v.curve->adj.k;
    }
    std::cout << out.dump(2) << "\n";
  } else if (v.ok) {
    std::cout << "valid simple closed " << v.curve->adj.k << "-curve with " << v.curve->length()
              << " points\n";
  } else {
    std::cout << "not a simple closed curve: " << v.reason << "\n";
  }
  return v.ok ? kExitHolds : kExitRefuted;
}

int run_check_product(const std::vector<std::string>& files, const std::string& kind_str, int u,
                      bool star, bool as_json) {
  std::vector<DigitalImage> factors;
  for (const std::string& f : files) factors.push_back(load_image_file(f).image);
  ProductKind kind = corpus_detail::parse_kind(kind_str);
  ProductSpace prod = make_product(std::move(factors));
  ExistenceReport rep = adjacency_existence(prod, kind, u);
  if (as_json) {
    std::cout << existence_report_to_json(rep).dump(2) << "\n";
  } else {
    std::cout << kind_name(kind);
    if (kind == ProductKind::ap) std::cout << " (u=" << u << ")";
    std::cout << " adjacency on a " << prod.points.size() << "-point product in Z^" << prod.total_dim()
              << ": ";
    if (!rep.exists()) {
      std::cout << "none\n";
      IffWitness w = rep.witnesses.begin()->second;
      std::cout << "  e.g. t=" << rep.witnesses.begin()->first << " fails at " << to_string(w.p) << ", "
                << to_string(w.q) << " (" << witness_direction(w) << ")\n";
    } else if (star) {
      std::cout << "star k = " << *rep.star_k << "\n";
    } else {
      std::cout << "k in {";
      for (std::size_t i = 0; i < rep.admissible_k.size(); ++i) std::cout << (i ? "," : "") << rep.admissible_k[i];
      std::cout << "}, star k = " << *rep.star_k << "\n";
    }
  }
  return rep.exists() ? kExitHolds : kExitRefuted;
}

int run_check_continuity(const std::string& path, bool as_json) {
  MapFile f = parse_map_json(load_json_file(path));
  ContinuityReport rep = is_continuous_lattice(f.map, f.domain_image.adj);
  if (as_json) {
    std::cout << continuity_report_to_json(rep).dump(2) << "\n";
  } else if (rep.continuous) {
    std::cout << "(" << f.domain_image.adj.k << "," << f.codomain_image.adj.k << ")-continuous\n";
  } else {
    std::cout << "not continuous: " << to_string(rep.witness->p) << "," << to_string(rep.witness->q)
              << " map to " << to_string(rep.witness->fp) << "," << to_string(rep.witness->fq) << "\n";
  }
  return rep.continuous ? kExitHolds : kExitRefuted;
}

int run_check_group(const std::string& image_path, const std::string& group_arg,
                    const std::string& structure, bool as_json) {
  ImageFile img = load_image_file(image_path);
  GroupTable g = (group_arg == "cyclic") ? parse_group_json(json{{"cyclic", true}}, img)
                                         : parse_group_json(load_json_file(group_arg), img);
  GroupCheckResult axioms = verify_group(g);
  if (!axioms.valid) {
    std::cerr << "check-group: supplied table is not a group: " << axioms.detail << "\n";
    return kExitError;
  }
  GroupVerdict v;
  if (structure == "dt") v = check_dt_group(img.image, g);
  else if (structure == "ap1") v = check_ap1_group(img.image, g, false);
  else if (structure == "ap1-star") v = check_ap1_group(img.image, g, true);
  else if (structure == "ap2-probe") v = ap2_probe(img.image, g);
  else {
    std::cerr << "check-group: unknown structure " << structure << "\n";
    return kExitError;
  }
  if (as_json) {
    std::cout << group_verdict_to_json(v).dump(2) << "\n";
  } else {
    std::cout << structure_name(v.structure) << " on " << img.image.size() << "-point image ("
              << v.adjacency_used << "): " << (v.holds ? "holds" : "refuted") << "\n";
    auto print_witness = [](const char* label, const ContinuityReport& r) {
      if (!r.continuous && r.witness) {
        std::cout << "  " << label << " witness: " << to_string(r.witness->p) << "," << to_string(r.witness->q)
                  << " -> " << to_string(r.witness->fp) << "," << to_string(r.witness->fq) << "\n";
      }
    };
    print_witness("multiplication", v.multiplication);
    print_witness("inverse", v.inverse);
  }
  return v.holds ? kExitHolds : kExitRefuted;
}

int run_verify_corpus(const std::string& root, const std::string& filter, int threads, bool as_json) {
  CorpusSummary summary = run_corpus(root, filter, threads);
  if (as_json) {
    std::cout << summary.to_json().dump(2) << "\n";
  } else {
    std::cout << summary.text();
  }
  return summary.failed == 0 ? kExitHolds : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digitop: exact checks for digital images, product adjacencies and DT-groups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  int table_n = 0;
  auto* tbl = app.add_subcommand("adjacency-table", "print k(t,n) for all t in [1,n]");
  tbl->add_option("n", table_n, "ambient dimension")->required();

  std::string curve_file;
  auto* vc = app.add_subcommand("validate-curve", "check that a point sequence is a simple closed curve");
  vc->add_option("file", curve_file, "image file (points in circular order)")->required();

  std::vector<std::string> product_files;
  std::string kind = "ap";
  int u = 1;
  bool star = false;
  auto* cp = app.add_subcommand("check-product", "decide existence of a product adjacency structure");
  cp->add_option("files", product_files, "factor image files")->required()->expected(2, -1);
  cp->add_option("--kind", kind, "normal | c-compatible | ap")->required();
  cp->add_option("--u", u, "move budget for --kind ap (default 1)");
  cp->add_flag("--star", star, "report only the minimal admissible adjacency");

  std::string map_file;
  auto* cc = app.add_subcommand("check-continuity", "check digital continuity of an explicit map");
  cc->add_option("file", map_file, "map file")->required();

  std::string group_image, group_arg, structure;
  auto* cg = app.add_subcommand("check-group", "certify a group structure on a digital image");
  cg->add_option("image", group_image, "image file")->required();
  cg->add_option("group", group_arg, "group file, or the word 'cyclic'")->required();
  cg->add_option("--structure", structure, "dt | ap1 | ap1-star | ap2-probe")->required();

  std::string corpus_root = std::string(DIGITOP_DATA_DIR) + "/corpus";
  std::string filter;
  int threads = 1;
  auto* vk = app.add_subcommand("verify-corpus", "replay every corpus fact and report mismatches");
  vk->add_option("root", corpus_root, "corpus directory (default: bundled corpus)");
  vk->add_option("--filter", filter, "run only facts whose id contains this substring");
  vk->add_option("--threads", threads, "worker threads (output is identical for any count)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (tbl->parsed()) return run_adjacency_table(table_n, as_json);
    if (vc->parsed()) return run_validate_curve(curve_file, as_json);
    if (cp->parsed()) return run_check_product(product_files, kind, u, star, as_json);
    if (cc->parsed()) return run_check_continuity(map_file, as_json);
    if (cg->parsed()) return run_check_group(group_image, group_arg, structure, as_json);
    if (vk->parsed()) return run_verify_corpus(corpus_root, filter, threads, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
