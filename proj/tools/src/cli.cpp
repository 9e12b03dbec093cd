#include "fakequad_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "fakequad_cli/report.hpp"

namespace fakequad::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PairDescriptor load_pair(const std::string& path, std::string& text) {
  text = read_file(path);
  return parse_pair_descriptor(text);
}

void emit(std::ostream& out, bool json, const Json& doc, const std::string& text) {
  if (json)
    out << doc.dump(2) << "\n";
  else
    out << text;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification engine for odd fake Q-homology quadrics", "fakequad"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  bool seedless = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--seedless", seedless, "Deterministic output (always on; accepted for compatibility)");

  auto* verify = app.add_subcommand("verify-main", "Run the end-to-end pipeline for the main A5 family");

  auto* table = app.add_subcommand("table", "Reproduce rows of the classification table");
  int row = 0;
  bool allow_skip = false;
  bool emit_witnesses = false;
  std::string witness_file;
  table->add_option("--row", row, "Row to reproduce (default: all)")->check(CLI::Range(1, 12));
  table->add_flag("--allow-skip", allow_skip, "Do not fail on skipped rows");
  table->add_flag("--emit-witnesses", emit_witnesses, "Print the witness cache for the reproduced rows");
  table->add_option("--witnesses", witness_file, "Witness cache to try before searching");

  auto* chartab = app.add_subcommand("chartab", "Print the character table of a group");
  std::string chartab_group;
  chartab->add_option("GROUP", chartab_group, "Group label, e.g. A5 or SL(2,5)")->required();

  auto* h1 = app.add_subcommand("h1", "First homology of the surface of a pair");
  std::string h1_pair;
  h1->add_option("--pair", h1_pair, "Pair descriptor file")->required();

  auto* parity = app.add_subcommand("parity", "Parity verdict for a pair");
  std::string parity_pair;
  parity->add_option("--pair", parity_pair, "Pair descriptor file")->required();

  auto* genvec = app.add_subcommand("genvec", "Search generating vectors");
  std::string genvec_group, genvec_sig;
  std::size_t limit = 10;
  genvec->add_option("GROUP", genvec_group, "Group label")->required();
  genvec->add_option("SIGNATURE", genvec_sig, "Signature, e.g. [2,5,5]")->required();
  genvec->add_option("--limit", limit, "Maximum number of vectors")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const bool json = format == "json";
  static_cast<void>(seedless);

  std::string pair_text;
  try {
    if (verify->parsed()) {
      const MainTheoremReport rep = verify_main_theorem();
      Json doc{{"command", "verify-main"}};
      doc.update(to_json(rep));
      emit(out, json, doc, to_text(rep));
      return rep.passed ? 0 : 1;
    }

    if (table->parsed()) {
      RowOptions options;
      WitnessCache cache;
      if (!witness_file.empty()) {
        const std::string text = read_file(witness_file);
        try {
          cache = parse_witness_cache(text);
        } catch (const ParseError& e) {
          err << witness_file << ":" << e.line() << ":" << e.column() << ": " << e.message() << "\n";
          return 2;
        }
        options.witnesses = &cache;
      }
      std::vector<RowReport> reports;
      for (int k = 1; k <= static_cast<int>(load_table().size()); ++k)
        if (row == 0 || row == k) reports.push_back(reproduce_row(k, options));
      bool ok = true;
      for (const auto& r : reports) ok = ok && (r.passed() || (allow_skip && r.skipped));
      if (emit_witnesses) {
        out << format_witness_cache(reports);
        return ok ? 0 : 1;
      }
      Json rows = Json::array();
      std::string text;
      for (const auto& r : reports) {
        rows.push_back(to_json(r));
        text += to_text(r);
      }
      std::size_t passed = 0, skipped = 0;
      for (const auto& r : reports) {
        passed += r.passed() ? 1 : 0;
        skipped += r.skipped ? 1 : 0;
      }
      text += "summary: " + std::to_string(passed) + "/" + std::to_string(reports.size()) + " rows passed, " +
              std::to_string(skipped) + " skipped\n";
      Json doc{{"command", "table"}, {"rows", rows}, {"passed", ok}};
      if (reports.size() == 1) doc = Json{{"command", "table"}, {"row", rows.front()}, {"passed", ok}};
      emit(out, json, doc, text);
      return ok ? 0 : 1;
    }

    if (chartab->parsed()) {
      std::shared_ptr<const Group> g;
      try {
        g = std::make_shared<const Group>(construct_group(chartab_group));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const CharTable ct = character_table(g);
      Json doc{{"command", "chartab"}};
      doc.update(to_json(ct));
      emit(out, json, doc, to_text(ct));
      return check_orthogonality(ct).ok() ? 0 : 1;
    }

    if (h1->parsed() || parity->parsed()) {
      const std::string& path = h1->parsed() ? h1_pair : parity_pair;
      UnmixedPair pair = [&] {
        try {
          return build_pair(load_pair(path, pair_text));
        } catch (const ParseError& e) {
          throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
        }
      }();
      const auto freeness = is_free_unmixed(pair);
      if (!freeness.free) {
        err << "not a valid unmixed family: the diagonal action is not free (" << freeness.intersection.size()
            << " common stabilizer elements)\n";
        return 1;
      }
      const AbelianInvariants h = fiber_product_homology(pair);
      if (h1->parsed()) {
        Json doc{{"command", "h1"}, {"group", pair.group().label()}};
        doc["sig1"] = pair.gv1.orders();
        doc["sig2"] = pair.gv2.orders();
        doc.update(to_json(h));
        std::string text = "H1 = " + h.to_string() + "\ninvariant factors: " + h.torsion_string() +
                           "\nfree rank: " + std::to_string(h.free_rank) + "\norder: " + h.torsion_order().str() + "\n";
        if (h.free_rank != 0) text += "free rank is nonzero: the family is not a Q-homology quadric\n";
        emit(out, json, doc, text);
        return h.free_rank == 0 ? 0 : 1;
      }
      if (h.free_rank != 0) {
        err << "H1 has free rank " << h.free_rank << ": the family is not a Q-homology quadric\n";
        return 1;
      }
      if (surface_invariants(pair).chi != 1) {
        err << "chi != 1: the canonical class decomposition needs a Q-homology quadric\n";
        return 1;
      }
      const ParityVerdict v = parity_verdict(pair, h);
      Json doc{{"command", "parity"}, {"group", pair.group().label()}};
      doc.update(to_json(v));
      emit(out, json, doc, to_text(v));
      return 0;
    }

    if (genvec->parsed()) {
      std::shared_ptr<const Group> g;
      std::optional<Signature> sig;
      try {
        g = std::make_shared<const Group>(construct_group(genvec_group));
        sig.emplace(parse_multiplicities(genvec_sig));
      } catch (const ParseError& e) {
        throw UsageError("signature: " + std::string(e.what()));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto vectors = enumerate_generating_vectors(g, *sig, limit);
      Json list = Json::array();
      std::string text;
      for (std::size_t i = 0; i < vectors.size(); ++i) {
        std::vector<std::string> cyc;
        for (Elem e : vectors[i].elements()) cyc.push_back(format_cycles(g->element(e)));
        list.push_back(cyc);
        text += std::to_string(i + 1) + ":";
        for (const auto& c : cyc) text += " " + c;
        text += "\n";
      }
      text += "count: " + std::to_string(vectors.size()) + "\n";
      Json doc{{"command", "genvec"}, {"group", g->label()}, {"signature", sig->multiplicities()},
               {"limit", limit}, {"count", vectors.size()}, {"vectors", list}};
      emit(out, json, doc, text);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace fakequad::cli
