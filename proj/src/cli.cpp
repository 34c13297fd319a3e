#include "chaincodes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chaincodes/construct.hpp"
#include "chaincodes/error.hpp"
#include "chaincodes/io.hpp"
#include "chaincodes/report.hpp"

namespace chaincodes {

namespace {

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "bad list entry '" + item + "' in '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::parse_error, "empty list");
  return out;
}

// Dotted key paths, one per line; leaf arrays stay compact JSON.
void emit_table(std::ostream& out, const Json& j, const std::string& prefix) {
  const bool nested_array =
      j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_object(); });
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) emit_table(out, value, prefix.empty() ? key : prefix + "." + key);
  } else if (nested_array) {
    for (std::size_t i = 0; i < j.size(); ++i) emit_table(out, j[i], prefix + "." + std::to_string(i));
  } else {
    out << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

bool g_table = false;

void emit_json(std::ostream& out, const Json& j) {
  if (g_table) {
    emit_table(out, j, "");
  } else {
    out << j.dump() << '\n';
  }
}

// Writes to `path` or, when empty, to `fallback`.
template <typename Writer>
void write_to(const std::string& path, std::ostream& fallback, Writer&& writer) {
  if (path.empty()) {
    writer(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::io_error, "cannot write '" + path + "'");
  writer(f);
  if (!f) throw Error(ErrorKind::io_error, "write to '" + path + "' failed");
}

Json ring_info_json(const Ring& ring) {
  Json out;
  out["descriptor"] = ring.descriptor();
  out["header"] = ring.header();
  out["p"] = ring.p();
  out["e"] = ring.e();
  out["q"] = ring.q();
  out["m"] = ring.m();
  out["size"] = ring.size();
  out["units"] = ring.unit_count();
  out["gamma"] = ring.gamma();
  Json elems = Json::array();
  for (Elem a : ring.elements()) {
    elems.push_back({{"token", ring.token(a)},
                     {"pretty", ring.pretty(a)},
                     {"hom_weight", ring.hom_weight(a)},
                     {"valuation", ring.valuation(a)}});
  }
  out["elements"] = elems;
  return out;
}

Json construct_summary(const CodeMatrix& g, const std::string& kind) {
  Json out;
  out["construction"] = kind;
  out["ring"] = g.ring().descriptor();
  out["rows"] = g.rows();
  out["cols"] = g.cols();
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear codes over finite chain rings"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "table"}));

  std::string ring_desc;
  std::uint32_t k = 0;
  std::uint32_t t = 0;
  std::uint32_t m0 = 0;
  std::string profile;
  std::string gen_path;
  std::string pcheck_path;
  std::string output;
  std::string matrix_path;
  std::string adjacency_path;
  std::uint64_t weight = 0;
  bool want_gray = false;
  bool want_minimal = false;
  bool want_swrg = false;
  bool from_pcheck = false;
  std::optional<std::uint32_t> extend_j;

  auto* ring_info = app.add_subcommand("ring-info", "Describe a ring");
  ring_info->add_option("--ring", ring_desc, "Ring descriptor")->required();

  auto* construct = app.add_subcommand("construct", "Build a generator matrix");
  construct->require_subcommand(1);
  auto* c_yk = construct->add_subcommand("yk", "Inductive two-weight matrix Y_k");
  c_yk->add_option("--ring", ring_desc)->required();
  c_yk->add_option("--k", k)->required();
  auto* c_one = construct->add_subcommand("oneweight", "One-weight generator from a block profile");
  c_one->add_option("--ring", ring_desc)->required();
  c_one->add_option("--profile", profile, "b_0,...,b_{m-1}")->required();
  auto* c_ext = construct->add_subcommand("extend", "Replicate a generator and append a constant row");
  c_ext->add_option("--gen", gen_path)->required();
  c_ext->add_option("--m0", m0)->required();
  auto* c_opt = construct->add_subcommand("optimal2w", "Plotkin-optimal two-weight code of a given type");
  c_opt->add_option("--ring", ring_desc)->required();
  c_opt->add_option("--profile", profile, "k_0,...,k_{m-1}")->required();
  c_opt->add_option("--t", t)->required();
  for (auto* sub : {c_yk, c_one, c_ext, c_opt}) sub->add_option("-o,--output", output, "Matrix file to write");

  auto* analyze = app.add_subcommand("analyze", "Analyze the code spanned by a generator matrix");
  analyze->add_option("matrix", matrix_path)->required();
  analyze->add_flag("--gray", want_gray, "Include the Gray image section");
  analyze->add_flag("--minimal", want_minimal, "Include minimal codeword analysis of the Gray image");

  auto* gray = app.add_subcommand("gray", "Export the Gray image of a code");
  gray->add_option("matrix", matrix_path)->required();
  gray->add_option("-o,--output", output, "Image file to write");

  auto* graph = app.add_subcommand("graph", "Coset and syndrome graphs");
  graph->require_subcommand(1);
  auto* g_coset = graph->add_subcommand("coset", "Coset graph at one weight");
  g_coset->add_option("--gen", gen_path)->required();
  g_coset->add_option("--weight", weight)->required();
  auto* g_syn = graph->add_subcommand("syndrome", "Syndrome Cayley graph of a parity-check matrix");
  g_syn->add_option("--pcheck", pcheck_path)->required();
  for (auto* sub : {g_coset, g_syn}) {
    sub->add_flag("--swrg", want_swrg, "Check walk regularity at length 3");
    sub->add_option("--adjacency", adjacency_path, "Write the adjacency list to this file");
  }

  auto* tss = app.add_subcommand("tss", "Triple sum set check");
  tss->add_option("matrix", matrix_path, "Matrix whose columns are the Omega vectors")->required();
  tss->add_flag("--from-pcheck", from_pcheck, "Expand the unit orbits of the columns");
  tss->add_option("--extend", extend_j, "Also check the extension by <theta^j>");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  g_table = format == "table";
  try {
    if (*ring_info) {
      emit_json(out, ring_info_json(parse_ring_descriptor(ring_desc)));
    } else if (*construct) {
      std::optional<CodeMatrix> g;
      std::string kind;
      Json predicted;
      if (*c_yk) {
        const Ring ring = parse_ring_descriptor(ring_desc);
        g = y_matrix(ring, k);
        kind = "yk";
        predicted["qdim"] = ring.m() * k;
        predicted["weight_distribution"] = distribution_json(two_weight_table(ring, ring.m() * k, k));
      } else if (*c_one) {
        const Ring ring = parse_ring_descriptor(ring_desc);
        const IdealBlockProfile blocks{parse_list(profile)};
        g = one_weight_generator(ring, blocks);
        kind = "oneweight";
        predicted["qdim"] = blocks.qdim(ring);
      } else if (*c_ext) {
        const CodeMatrix base = read_matrix_file(gen_path);
        g = extend_generator(base, m0);
        kind = "extend";
        const auto base_dist = hom_weight_distribution(LinearCode::span(base));
        predicted["weight_distribution"] =
            distribution_json(predict_extension_distribution(base.ring(), base_dist, base.cols(), m0));
      } else {
        const Ring ring = parse_ring_descriptor(ring_desc);
        const CodeTypeProfile type{parse_list(profile)};
        g = optimal_two_weight_code(ring, type, t);
        kind = "optimal2w";
        predicted["qdim"] = type.qdim();
        predicted["weight_distribution"] = distribution_json(two_weight_table(ring, type.qdim(), t));
      }
      Json summary = construct_summary(*g, kind);
      summary["predicted"] = predicted;
      if (output.empty()) {
        write_matrix(out, *g);
        emit_json(err, summary);
      } else {
        write_matrix_file(output, *g);
        emit_json(out, summary);
      }
    } else if (*analyze) {
      const LinearCode code = LinearCode::span(read_matrix_file(matrix_path));
      Json report = analysis_json(code);
      if (want_gray || want_minimal) {
        const GrayImage image = gray_image(code);
        if (want_gray) report["gray"] = gray_json(code, image);
        if (want_minimal) report["minimal"] = minimality_json(analyze_minimality(code.ring().residue_field(), image));
      }
      emit_json(out, report);
    } else if (*gray) {
      const LinearCode code = LinearCode::span(read_matrix_file(matrix_path));
      const GrayImage image = gray_image(code);
      if (output.empty()) {
        write_fq_vectors(out, image.vectors);
      } else {
        write_to(output, out, [&](std::ostream& o) { write_fq_vectors(o, image.vectors); });
        emit_json(out, gray_json(code, image));
      }
    } else if (*graph) {
      const Graph g = *g_coset ? coset_graph(LinearCode::span(read_matrix_file(gen_path)), weight)
                               : syndrome_graph(read_matrix_file(pcheck_path));
      if (!adjacency_path.empty()) write_to(adjacency_path, out, [&](std::ostream& o) { write_adjacency(o, g); });
      emit_json(out, graph_json(g, want_swrg));
    } else if (*tss) {
      const CodeMatrix m = read_matrix_file(matrix_path);
      std::optional<OmegaSet> omega;
      if (from_pcheck) {
        omega = OmegaSet::from_columns(m);
      } else {
        std::vector<Word> vectors;
        for (std::size_t c = 0; c < m.cols(); ++c) vectors.push_back(m.column(c));
        omega.emplace(m.ring(), m.rows(), std::move(vectors));
      }
      Json report = tss_json(*omega);
      if (extend_j) {
        report["extended"] = tss_json(extend_omega(*omega, *extend_j));
        report["extended"]["j"] = *extend_j;
      }
      emit_json(out, report);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::parse_error || e.kind() == ErrorKind::io_error ? kExitParse : kExitValidation;
  }
  return kExitOk;
}

}  // namespace chaincodes
