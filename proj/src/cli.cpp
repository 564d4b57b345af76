#include "ckdist/cli.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "ckdist/json_io.hpp"

namespace ckdist::cli {

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return nlohmann::json::parse(in);
}

std::string interval_label(const CompactInterval& k) {
  return "[0," + format_ordinal(k.endpoint) + "]";
}

int run_cb(const std::string& compact_text,
           const std::optional<std::string>& derive, std::ostream& out) {
  CompactInterval k{parse_ordinal(compact_text)};
  out << "K = " << interval_label(k) << "\n";
  if (k.endpoint.is_top()) {
    out << "chain: [0,w^w] -> [0,w^w] -> ... (every finite stage) -> "
        << "[0,0] (stage w) -> {}\n";
  } else {
    out << "chain: " << interval_label(k);
    auto cur = derivative(k);
    while (cur) {
      out << " -> " << interval_label(*cur);
      cur = derivative(*cur);
    }
    out << " -> {}\n";
  }
  out << "sigma = " << format_sigma(sigma(k)) << "\n";
  out << "i_CB = " << format_ordinal(cb_index(k)) << "\n";
  if (derive) {
    DeriveOrder order = (*derive == "omega" || *derive == "w")
                            ? DeriveOrder::omega()
                            : DeriveOrder::finite(std::stoull(*derive));
    auto d = iterated_derivative(k, order);
    out << "K^(" << (order.is_omega ? "w" : std::to_string(order.n))
        << ") = " << (d ? interval_label(*d) : "{}") << "\n";
  }
  return 0;
}

std::string pair_label(const std::pair<DeltaPoint, DeltaPoint>& p) {
  return "(" + format_delta_point(p.first) + ", " +
         format_delta_point(p.second) + ")";
}

int run_dist(const std::string& map_path, const std::string& points_path,
             const std::string& format, std::ostream& out) {
  CandidateMap map = candidate_map_from_json(load_json(map_path));
  std::vector<DeltaPoint> points;
  for (const auto& p : load_json(points_path))
    points.push_back(delta_point_from_json(p));
  DistortionReport rep = distortion_of_sample(points, map);
  if (format == "json") {
    nlohmann::json j = {
        {"expansion", format_rational(rep.expansion)},
        {"expansion_pair",
         {delta_point_to_json(rep.expansion_pair.first),
          delta_point_to_json(rep.expansion_pair.second)}},
        {"contraction", rep.contraction
                            ? nlohmann::json(format_rational(*rep.contraction))
                            : nlohmann::json()},
        {"contraction_pair",
         {delta_point_to_json(rep.contraction_pair.first),
          delta_point_to_json(rep.contraction_pair.second)}},
        {"distortion", rep.distortion
                           ? nlohmann::json(format_rational(*rep.distortion))
                           : nlohmann::json()}};
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "points = " << points.size() << "\n";
  out << "expansion = " << format_rational(rep.expansion) << " at "
      << pair_label(rep.expansion_pair) << "\n";
  if (rep.contraction)
    out << "contraction = " << format_rational(*rep.contraction) << " at "
        << pair_label(rep.contraction_pair) << "\n";
  else
    out << "contraction = infinite at " << pair_label(rep.contraction_pair)
        << "\n";
  out << "distortion = "
      << (rep.distortion ? format_rational(*rep.distortion) : "infinite")
      << "\n";
  return 0;
}

int report_outcome(const EngineOutcome& outcome, const CandidateMap& map,
                   const std::optional<std::string>& out_path,
                   std::ostream& out) {
  for (const auto& line : outcome.trace) out << line << "\n";
  if (outcome.kind == EngineOutcome::Kind::witness) {
    const auto& w = *outcome.witness;
    out << "witness: " << pair_label({w.a, w.b}) << " violates the "
        << (w.violated == RefutationWitness::Bound::lower ? "lower" : "upper")
        << " bound, ||f(a)-f(b)|| = " << format_rational(w.measured) << "\n";
    out << "verified = " << (verify_witness(map, w) ? "yes" : "NO") << "\n";
    if (out_path) {
      std::ofstream file(*out_path);
      if (!file) throw std::runtime_error("cannot write " + *out_path);
      file << witness_to_json(w).dump(2) << "\n";
    } else {
      out << witness_to_json(w).dump(2) << "\n";
    }
    return 0;
  }
  out << "inconclusive: "
      << (outcome.reason == EngineOutcome::Reason::derived_set_infinite
              ? "K^(k-1) is infinite; the obstruction does not apply"
              : "index window exhausted")
      << "\n";
  return 2;
}

int run_refute(const std::string& map_path,
               const std::optional<std::string>& out_path, std::ostream& out) {
  CandidateMap map = candidate_map_from_json(load_json(map_path));
  return report_outcome(refute(map), map, out_path, out);
}

int run_demo(std::uint64_t n, const std::string& claimed_d,
             const std::optional<std::string>& map_path, std::ostream& out) {
  Rat d = parse_rational(claimed_d);
  std::optional<CandidateMap> map;
  if (map_path) map = candidate_map_from_json(load_json(*map_path));
  EngineOutcome outcome = demo_aharoni(n, d, map ? &*map : nullptr);
  CandidateMap used =
      map ? *map
          : basis_indicator_map(2, CompactInterval{Ordinal::omega()}, d);
  return report_outcome(outcome, used, std::nullopt, out);
}

int run_table(std::uint64_t max_sigma, std::ostream& out) {
  struct Row {
    std::string k, sigma, bound, verdict;
  };
  std::vector<Row> rows;
  auto verdict = [](bool possible) {
    return possible ? std::string("possible") : std::string("no");
  };
  for (std::uint64_t m = 1; m <= max_sigma; ++m) {
    CompactInterval k{m == 1 ? Ordinal::omega() : Ordinal::single(m, 1)};
    UniversalityReport rep = universality_obstruction(k);
    rows.push_back({interval_label(k), format_sigma(rep.sigma),
                    format_rational(rep.bound),
                    verdict(rep.ai_universal_possible)});
  }
  UniversalityReport top = universality_obstruction(CompactInterval{Ordinal::top()});
  rows.push_back({"[0,w^w]", format_sigma(top.sigma),
                  format_rational(top.bound),
                  verdict(top.ai_universal_possible)});
  rows.push_back({"[0,1]", format_sigma(SigmaValue::infinite()),
                  format_rational(lower_bound_for_sigma(SigmaValue::infinite())),
                  verdict(true)});
  rows.push_back({"betaN", format_sigma(SigmaValue::infinite()),
                  format_rational(lower_bound_for_sigma(SigmaValue::infinite())),
                  verdict(true)});
  out << std::left << std::setw(10) << "K" << std::setw(7) << "sigma"
      << std::setw(13) << "lower_bound" << "ai_universal" << "\n";
  for (const auto& r : rows)
    out << std::left << std::setw(10) << r.k << std::setw(7) << r.sigma
        << std::setw(13) << r.bound << r.verdict << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cantor-Bendixson structure and distortion bounds for C(K)"};
  app.require_subcommand(1);

  std::string compact_text;
  std::optional<std::string> derive;
  auto* cb = app.add_subcommand("cb", "Cantor-Bendixson queries");
  cb->add_option("--compact", compact_text, "interval endpoint (ordinal)")
      ->required();
  cb->add_option("--derive", derive, "derivation count (natural or omega)");

  std::string map_path, points_path, format = "text";
  auto* dist = app.add_subcommand("dist", "distortion of a candidate map");
  dist->add_option("--map", map_path, "candidate map JSON")->required();
  dist->add_option("--points", points_path, "JSON array of Delta points")
      ->required();
  dist->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string refute_map;
  std::optional<std::string> witness_out;
  auto* refute_cmd = app.add_subcommand("refute", "run the refutation engine");
  refute_cmd->add_option("--map", refute_map, "candidate map JSON")->required();
  refute_cmd->add_option("--out", witness_out, "witness JSON output path");

  std::uint64_t demo_n = 8;
  std::string demo_d = "19/10";
  std::optional<std::string> demo_map;
  auto* demo = app.add_subcommand("demo-aharoni",
                                  "k = 2, K = [0,w] walkthrough");
  demo->add_option("--n", demo_n, "t122 label bound (>= 3)");
  demo->add_option("--claimed-d", demo_d, "claimed distortion (rational)");
  demo->add_option("--map", demo_map, "candidate map JSON");

  std::uint64_t max_sigma = 6;
  auto* table = app.add_subcommand("table", "the lower-bound table");
  table->add_option("--max-sigma", max_sigma, "largest finite sigma row");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 64;
  }

  try {
    if (cb->parsed()) return run_cb(compact_text, derive, out);
    if (dist->parsed()) return run_dist(map_path, points_path, format, out);
    if (refute_cmd->parsed()) return run_refute(refute_map, witness_out, out);
    if (demo->parsed()) return run_demo(demo_n, demo_d, demo_map, out);
    if (table->parsed()) return run_table(max_sigma, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;  // unreachable with require_subcommand
}

}  // namespace ckdist::cli
